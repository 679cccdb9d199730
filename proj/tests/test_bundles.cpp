#include "doctest.h"
#include "qsphere/bundles.hpp"
#include "support.hpp"

using namespace qsphere;
using namespace qtest;

namespace {

using E = AlgebraElement<Scalar>;
using Fm = Form<Scalar>;
const E a = gen<Scalar>(Gen::A);
const E b = gen<Scalar>(Gen::B);
const E c = gen<Scalar>(Gen::C);
const E d_ = gen<Scalar>(Gen::D);
const Fm ep = Fm::basis(kPlus);
const Fm em = Fm::basis(kMinus);
const Fm e0 = Fm::basis(kZero);

E Q(int k) { return E(qn(k)); }

}  // namespace

TEST_CASE("covariant derivative of the generators") {
  CHECK(covariant_D(a) == Q(1) * b * ep);
  CHECK(covariant_D(c) == Q(1) * d_ * ep);
  CHECK(covariant_D(b) == a * em);
  CHECK(covariant_D(d_) == c * em);
  CHECK(covariant_D(b0<Scalar>()) == d(b0<Scalar>()));
  CHECK_THROWS_AS(covariant_D(a + b), std::invalid_argument);
  CHECK_THROWS_AS(covariant_D(a, 2), std::invalid_argument);
}

TEST_CASE("sections are horizontal") {
  Rng rng(5);
  for (int n = 0; n < 60; ++n) {
    const int deg = rng.uniform(-4, 4);
    const E f = rng.homogeneous(deg, 3, 5);
    CHECK(is_horizontal(f));
  }
}

TEST_CASE("covariant derivative is a connection") {
  Rng rng(11);
  for (int n = 0; n < 40; ++n) {
    const int deg = rng.uniform(-3, 3);
    const E m = rng.sphere_element(2, 4);
    const E f = rng.homogeneous(deg, 2, 4);
    CHECK(covariant_D(m * f, deg) == d(m) * f + m * covariant_D(f, deg));
  }
}

TEST_CASE("partitions of unity") {
  for (int n = -2; n <= 2; ++n) {
    const auto p = partition_of_unity<Scalar>(n);
    CHECK(p.sum() == E(1));
    for (const auto& [x, y] : p.pairs) {
      CHECK(y.is_homogeneous_of(n));
      CHECK(x.is_homogeneous_of(-n));
    }
  }
  CHECK_THROWS_AS(partition_of_unity<Scalar>(3), std::invalid_argument);
}

TEST_CASE("basic forms in terms of the sphere differentials") {
  const auto db = d_sphere_generators<Scalar>();
  const std::array<Fm, 3> del{db[0].restricted({kPlus}), db[1].restricted({kPlus}), db[2].restricted({kPlus})};
  const std::array<Fm, 3> delbar{db[0].restricted({kMinus}), db[1].restricted({kMinus}),
                                 db[2].restricted({kMinus})};
  Rng rng(29);
  for (int n = 0; n < 30; ++n) {
    const E u = rng.homogeneous(-2, 2, 4);
    const E w = rng.homogeneous(2, 2, 4);
    const auto fu = extract_coeffs(u * ep);
    const auto fw = extract_coeffs(w * em);
    for (const auto& f : fu) CHECK(f.is_homogeneous_of(0));
    for (const auto& f : fw) CHECK(f.is_homogeneous_of(0));
    CHECK(recombine(fu, del) == u * ep);
    CHECK(recombine(fu, delbar).is_zero());
    CHECK(recombine(fw, delbar) == w * em);
    CHECK(recombine(fw, del).is_zero());
    CHECK(recombine(extract_coeffs(u * ep + w * em), db) == u * ep + w * em);
  }
  CHECK_THROWS_AS(extract_coeffs(a * ep), std::invalid_argument);
  CHECK_THROWS_AS(extract_coeffs(Fm(E(1)) + e0), std::invalid_argument);
}

TEST_CASE("exterior derivative through the fixed coefficients") {
  const auto db = d_sphere_generators<Scalar>();
  const auto r = kernel_row<Scalar>();
  CHECK(recombine(r, db).is_zero());
  Rng rng(31);
  for (int n = 0; n < 30; ++n) {
    const E f = rng.sphere_element(3, 4);
    const auto coeffs = coefficients(f);
    CHECK(recombine(coeffs, db) == d(f));
  }
  const auto gens = sphere_generators<Scalar>();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto coeffs = coefficients(gens[i]);
    CHECK(recombine(coeffs, db) == db[i]);
  }
}

TEST_CASE("holomorphic sections") {
  for (int n = 0; n <= 6; ++n) {
    for (int s = 0; s <= n; ++s) {
      const int t = n - s;
      const E f = pow(c, s) * pow(a, t);
      CHECK(d(f) == holomorphic_derivative<Scalar>(s, t));
      const Fm df = covariant_D(f, n);
      CHECK(df.component(kMinus).is_zero());
      CHECK(df.component(kZero).is_zero());
    }
  }
  CHECK(d(c * a) == (E(1) + Q(2)) * c * a * e0 + Q(2) * (E(1) + E(two_q()) * b * c) * ep);
}

TEST_CASE("antiholomorphic sections are not holomorphic") {
  CHECK(!covariant_D(b).component(kMinus).is_zero());
  CHECK(!covariant_D(b0<Scalar>()).component(kMinus).is_zero());
}
