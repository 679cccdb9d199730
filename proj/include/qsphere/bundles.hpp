#pragma once

#include "qsphere/calculus.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsphere {

/// Degree of a nonzero homogeneous element; throws otherwise.
template <CoefficientField F>
int require_degree(const AlgebraElement<F>& f) {
  const auto deg = f.degree();
  if (!deg) throw std::invalid_argument("element is not homogeneous");
  return *deg;
}

/// Covariant derivative on sections of degree n: Df = df - [n;q^2] f e0.
template <CoefficientField F>
Form<F> covariant_D(const AlgebraElement<F>& f, int n) {
  if (f.is_zero()) return {};
  if (!f.is_homogeneous_of(n)) throw std::invalid_argument("section has the wrong degree");
  return d(f) - f * monopole_omega<F>(n);
}

template <CoefficientField F>
Form<F> covariant_D(const AlgebraElement<F>& f) {
  if (f.is_zero()) return {};
  return covariant_D(f, require_degree(f));
}

/// True when the e0 part of df is [n;q^2] f e0, i.e. Df has no e0 component.
template <CoefficientField F>
bool is_horizontal(const AlgebraElement<F>& f) {
  return covariant_D(f).component(kZero).is_zero();
}

/// Pairs (x_r, y_r) with deg y_r = n and sum x_r y_r = 1.
template <CoefficientField F>
struct Partition {
  int degree = 0;
  std::vector<std::pair<AlgebraElement<F>, AlgebraElement<F>>> pairs;

  AlgebraElement<F> sum() const {
    AlgebraElement<F> r;
    for (const auto& [x, y] : pairs) r += x * y;
    return r;
  }
};

/// Partition of unity for n in {0, +-1, +-2}.
template <CoefficientField F>
Partition<F> partition_of_unity(int n) {
  using E = AlgebraElement<F>;
  const E a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  const E q(q_power<F>(1));
  const E qm(q_power<F>(-1));
  const E two(q2<F>());
  Partition<F> p;
  p.degree = n;
  switch (n) {
    case 0:
      p.pairs = {{E(1), E(1)}};
      break;
    case 1:
      p.pairs = {{dd, a}, {-q * b, c}};
      break;
    case -1:
      p.pairs = {{a, dd}, {-qm * c, b}};
      break;
    case 2:
      p.pairs = {{dd * dd, a * a}, {-q * two * dd * b, a * c}, {E(q_power<F>(2)) * b * b, c * c}};
      break;
    case -2:
      p.pairs = {{a * a, dd * dd}, {-qm * two * a * c, dd * b}, {E(q_power<F>(-2)) * c * c, b * b}};
      break;
    default:
      throw std::invalid_argument("partition of unity only for |n| <= 2");
  }
  return p;
}

/// Coefficients (f-, f0, f+) with f_i the coefficient of db_i, ordered as b-, b0, b+.
template <CoefficientField F>
using Coefficients = std::array<AlgebraElement<F>, 3>;

/// The sphere generators b-, b0, b+ in coefficient order.
template <CoefficientField F>
std::array<AlgebraElement<F>, 3> sphere_generators() {
  return {bm<F>(), b0<F>(), bp<F>()};
}

/// Writes a basic 1-form u e+ + w e- as sum f_i db_i with fixed degree-zero coefficients.
template <CoefficientField F>
Coefficients<F> extract_coeffs(const Form<F>& h) {
  using E = AlgebraElement<F>;
  for (const auto& [w, f] : h.terms())
    if (w != kPlus && w != kMinus) throw std::invalid_argument("expected a combination of e+ and e-");
  const E u = h.component(kPlus);
  const E w = h.component(kMinus);
  if (!u.is_homogeneous_of(-2) || !w.is_homogeneous_of(2))
    throw std::invalid_argument("1-form is not basic");
  const E a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  const F two = q2<F>();
  Coefficients<F> r;
  r[0] = u * E(q_power<F>(-2)) * c * c + w * dd * dd;
  r[1] = u * E(-q_power<F>(-1) * two) * a * c - w * E(two) * dd * b;
  r[2] = u * a * a + w * E(q_power<F>(2)) * b * b;
  return r;
}

/// Coefficients with df = sum f_i db_i for a function f on the sphere.
template <CoefficientField F>
Coefficients<F> coefficients(const AlgebraElement<F>& f) {
  if (!f.is_homogeneous_of(0)) throw std::invalid_argument("not a function on the sphere");
  return extract_coeffs(d(f));
}

/// Row r with sum r_i db_i = 0, used to produce a different coefficient choice.
template <CoefficientField F>
Coefficients<F> kernel_row() {
  return {-bp<F>(), AlgebraElement<F>(F(1)) + AlgebraElement<F>(q2<F>()) * b0<F>(),
          AlgebraElement<F>(-q_power<F>(2)) * bm<F>()};
}

/// sum f_i X_i for forms X_i.
template <CoefficientField F>
Form<F> recombine(const Coefficients<F>& f, const std::array<Form<F>, 3>& x) {
  Form<F> r;
  for (std::size_t i = 0; i < 3; ++i) r += f[i] * x[i];
  return r;
}

/// The basic forms db-, db0, db+.
template <CoefficientField F>
std::array<Form<F>, 3> d_sphere_generators() {
  const auto g = sphere_generators<F>();
  return {d(g[0]), d(g[1]), d(g[2])};
}

/// Expected d(c^s a^t) for the holomorphic section c^s a^t of degree s + t.
template <CoefficientField F>
Form<F> holomorphic_derivative(int s, int t) {
  using E = AlgebraElement<F>;
  const E a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  const int n = s + t;
  const F qq = q_power<F>(2);
  const E f = pow(c, s) * pow(a, t);
  Form<F> r = Form<F>::basis(kZero, E(qint(n, qq)) * f);
  if (s == 0 && t == 0) return {};
  if (s == 0) {
    r.add(kPlus, E(qint(t, qq) * q_power<F>(1)) * pow(a, t - 1) * b);
  } else if (t == 0) {
    r.add(kPlus, E(qint(s, qq) * q_power<F>(1)) * pow(c, s - 1) * dd);
  } else {
    const E inner = E(q_power<F>(1) * qint(s, qq)) + E(qint(n, qq)) * b * c;
    r.add(kPlus, E(q_power<F>(t)) * pow(c, s - 1) * pow(a, t - 1) * inner);
  }
  return r;
}

}  // namespace qsphere
