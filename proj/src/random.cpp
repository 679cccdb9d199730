#include "qsphere/random.hpp"

namespace qsphere {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Scalar Rng::scalar() {
  Scalar r;
  while (r.is_zero()) {
    const int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      int c = uniform(-3, 3);
      if (c == 0) c = 1;
      r += Scalar(c) * Scalar::s_power(2 * uniform(-3, 3));
    }
  }
  return r;
}

Scalar Rng::rational_scalar() {
  Scalar r = scalar();
  if (uniform(0, 2) == 0) r /= Scalar(1) + Scalar::s_power(2 * uniform(1, 3));
  return r;
}

std::vector<Gen> Rng::word(int max_length) {
  std::vector<Gen> w(static_cast<std::size_t>(uniform(0, max_length)));
  for (auto& g : w) g = static_cast<Gen>(uniform(0, 3));
  return w;
}

Monomial Rng::monomial(int max_length) {
  Monomial m;
  const int len = uniform(0, max_length);
  for (int n = 0; n < len; ++n) {
    switch (uniform(0, 3)) {
      case 0: m.l == 0 ? ++m.i : ++m.l; break;
      case 1: ++m.j; break;
      case 2: ++m.k; break;
      default: m.i == 0 ? ++m.l : ++m.i; break;
    }
  }
  return m;
}

AlgebraElement<Scalar> Rng::element(int terms, int max_length) {
  AlgebraElement<Scalar> r;
  const int n = uniform(1, terms);
  for (int t = 0; t < n; ++t) r += normalize_word(word(max_length), scalar());
  return r;
}

AlgebraElement<Scalar> Rng::homogeneous(int degree, int terms, int max_length) {
  AlgebraElement<Scalar> r;
  const int n = uniform(1, terms);
  for (int t = 0; t < n; ++t) {
    std::vector<Gen> w = word(max_length);
    int deg = 0;
    for (Gen g : w) deg += (g == Gen::A || g == Gen::C) ? 1 : -1;
    while (deg != degree) {
      const auto pos = static_cast<std::ptrdiff_t>(uniform(0, static_cast<int>(w.size())));
      if (deg < degree) {
        w.insert(w.begin() + pos, coin() ? Gen::A : Gen::C);
        ++deg;
      } else {
        w.insert(w.begin() + pos, coin() ? Gen::B : Gen::D);
        --deg;
      }
    }
    r += normalize_word(w, scalar());
  }
  return r;
}

}  // namespace qsphere
