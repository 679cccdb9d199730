#pragma once

#include "qsphere/riemann.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qsphere {

/// Section of S- (+) S+: minus of degree 1, plus of degree -1.
template <CoefficientField F>
struct Spinor {
  AlgebraElement<F> minus;
  AlgebraElement<F> plus;

  bool operator==(const Spinor&) const = default;
  bool is_zero() const { return minus.is_zero() && plus.is_zero(); }
  bool is_valid() const { return minus.is_homogeneous_of(1) && plus.is_homogeneous_of(-1); }

  Spinor& operator+=(const Spinor& o) {
    minus += o.minus;
    plus += o.plus;
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    minus -= o.minus;
    plus -= o.plus;
    return *this;
  }
  friend Spinor operator+(Spinor x, const Spinor& y) { return x += y; }
  friend Spinor operator-(Spinor x, const Spinor& y) { return x -= y; }
  friend Spinor operator*(const AlgebraElement<F>& f, const Spinor& x) { return {f * x.minus, f * x.plus}; }
  friend Spinor operator*(const Spinor& x, const F& k) { return {x.minus * k, x.plus * k}; }

  std::string to_string() const { return "(" + minus.to_string() + ", " + plus.to_string() + ")"; }
};

template <CoefficientField F>
void require_spinor(const Spinor<F>& x) {
  if (!x.is_valid()) throw std::invalid_argument("spinor parts have the wrong degrees");
}

/// Clifford action: the e+ coefficient maps S- to S+, the e- coefficient maps S+ to S-.
template <CoefficientField F>
Spinor<F> gamma(const Form<F>& omega, const Spinor<F>& x) {
  require_sphere_one_form(omega);
  require_spinor(x);
  return {omega.component(kMinus) * x.plus, omega.component(kPlus) * x.minus};
}

/// Composite gamma(omega (x) gamma(tau (x) x)) summed over a rank-two tensor given as pairs.
template <CoefficientField F>
Spinor<F> gamma_gamma(const FormPairs<F>& pairs, const Spinor<F>& x) {
  Spinor<F> r;
  for (const auto& [omega, tau] : pairs) r += gamma(omega, gamma(tau, x));
  return r;
}

/// Dirac operator gamma o D with the monopole connection of charge -+1 on S-+.
template <CoefficientField F>
Spinor<F> dirac(const Spinor<F>& x) {
  require_spinor(x);
  const Form<F> dm = covariant_D(x.minus, 1);
  const Form<F> dp = covariant_D(x.plus, -1);
  return {dp.component(kMinus) * q_power<F>(1), dm.component(kPlus) * q_power<F>(-1)};
}

template <CoefficientField F>
Spinor<F> minus_spinor(const AlgebraElement<F>& m) {
  return {m, {}};
}

template <CoefficientField F>
Spinor<F> plus_spinor(const AlgebraElement<F>& p) {
  return {{}, p};
}

/// The spinors a, b, c, d placed by degree.
template <CoefficientField F>
std::array<Spinor<F>, 4> generator_spinors() {
  return {minus_spinor(gen<F>(Gen::A)), plus_spinor(gen<F>(Gen::B)), minus_spinor(gen<F>(Gen::C)),
          plus_spinor(gen<F>(Gen::D))};
}

/// Eigen-spinors (sign s^(1/2) x, y) for (x, y) = (a, b) or (c, d), with eigenvalue sign q^(1/2).
template <CoefficientField F>
Spinor<F> eigen_spinor(int sign, bool second) {
  const F root = F::s_power(1) * F(sign);
  const AlgebraElement<F> x = gen<F>(second ? Gen::C : Gen::A);
  const AlgebraElement<F> y = gen<F>(second ? Gen::D : Gen::B);
  return {x * root, y};
}

/// The functions f = b-, 1 + [2] b0, b+ used for the square of the Dirac operator.
template <CoefficientField F>
std::array<AlgebraElement<F>, 3> square_test_functions() {
  return {bm<F>(), AlgebraElement<F>(F(1)) + AlgebraElement<F>(q2<F>()) * b0<F>(), bp<F>()};
}

/// Expected dirac^2(f x) = q^-1 [2] (box f) x + correction for f in square_test_functions, x in a, b, c, d.
template <CoefficientField F>
Spinor<F> dirac_square_expected(std::size_t i, std::size_t k) {
  using E = AlgebraElement<F>;
  const E a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  const E f = square_test_functions<F>()[i];
  const auto q = [](int n) { return E(q_power<F>(n)); };
  const E lap = E(q_power<F>(-1) * q2<F>()) * laplacian(f);
  const std::array<std::array<E, 3>, 4> correction{{
      {E(), -q(-1) * a, -q(-1) * c},
      {E(), q(1) * b, q(1) * dd},
      {a, q(1) * c, E()},
      {-q(2) * b, -q(3) * dd, E()},
  }};
  const E x = generator_spinors<F>()[k].minus.is_zero() ? generator_spinors<F>()[k].plus
                                                        : generator_spinors<F>()[k].minus;
  const E r = lap * x + correction[k][i];
  return k % 2 == 0 ? minus_spinor(r) : plus_spinor(r);
}

template <CoefficientField F>
using Matrix2 = std::array<std::array<AlgebraElement<F>, 2>, 2>;

template <CoefficientField F>
using FormMatrix2 = std::array<std::array<Form<F>, 2>, 2>;

/// Projector with S+ = C_q[S^2]^2 e and S- = C_q[S^2]^2 (1 - e).
template <CoefficientField F>
Matrix2<F> spinor_projector() {
  using E = AlgebraElement<F>;
  return {{{E(-q_power<F>(-1)) * b0<F>(), E(q_power<F>(1)) * bm<F>()},
           {-bp<F>(), E(F(1)) + E(q_power<F>(1)) * b0<F>()}}};
}

template <CoefficientField F>
Matrix2<F> multiply(const Matrix2<F>& x, const Matrix2<F>& y) {
  Matrix2<F> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <CoefficientField F>
FormMatrix2<F> multiply(const Matrix2<F>& x, const FormMatrix2<F>& y) {
  FormMatrix2<F> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <CoefficientField F>
FormMatrix2<F> multiply(const FormMatrix2<F>& x, const Matrix2<F>& y) {
  FormMatrix2<F> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <CoefficientField F>
Matrix2<F> identity2() {
  using E = AlgebraElement<F>;
  return {{{E(F(1)), E()}, {E(), E(F(1))}}};
}

template <CoefficientField F>
Matrix2<F> complement(const Matrix2<F>& e) {
  Matrix2<F> r = identity2<F>();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[i][j] -= e[i][j];
  return r;
}

/// Entrywise application of a differential.
template <CoefficientField F, class Diff>
FormMatrix2<F> differentiate(const Matrix2<F>& e, Diff diff) {
  FormMatrix2<F> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[i][j] = diff(e[i][j]);
  return r;
}

/// Matrix times a column of elements.
template <CoefficientField F>
std::array<AlgebraElement<F>, 2> apply_column(const Matrix2<F>& m, const std::array<AlgebraElement<F>, 2>& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

/// Matrix of 1-forms times a column of elements.
template <CoefficientField F>
std::array<Form<F>, 2> apply_column(const FormMatrix2<F>& m, const std::array<AlgebraElement<F>, 2>& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

/// Row vector (f, g) of functions on the sphere.
template <CoefficientField F>
using SpinorRow = std::array<AlgebraElement<F>, 2>;

/// The transport parameter q^(-1/2).
template <CoefficientField F>
F transport_lambda() {
  return F::s_power(-1);
}

/// (f, g) -> f (a + lambda b) + g (c + lambda d).
template <CoefficientField F>
Spinor<F> transport(const SpinorRow<F>& row) {
  const AlgebraElement<F> a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  for (const auto& f : row) require_sphere_function(f);
  const F l = transport_lambda<F>();
  return {row[0] * a + row[1] * c, (row[0] * b + row[1] * dd) * l};
}

/// Inverse of transport, using the antipode as right inverse of ((a, b), (c, d)).
template <CoefficientField F>
SpinorRow<F> untransport(const Spinor<F>& x) {
  require_spinor(x);
  using E = AlgebraElement<F>;
  const E a = gen<F>(Gen::A), b = gen<F>(Gen::B), c = gen<F>(Gen::C), dd = gen<F>(Gen::D);
  const E p = x.plus * (F(1) / transport_lambda<F>());
  return {x.minus * antipode(a) + p * antipode(c), x.minus * antipode(b) + p * antipode(dd)};
}

/// Row times a matrix.
template <CoefficientField F>
SpinorRow<F> apply_row(const SpinorRow<F>& row, const Matrix2<F>& m) {
  return {row[0] * m[0][0] + row[1] * m[1][0], row[0] * m[0][1] + row[1] * m[1][1]};
}

/// Dirac operator in the trivialisation, built from chosen coefficients df = f_i db_i and dg = g_i db_i.
template <CoefficientField F>
SpinorRow<F> transported_dirac(const SpinorRow<F>& row, const Coefficients<F>& fc, const Coefficients<F>& gc) {
  using E = AlgebraElement<F>;
  const F l = transport_lambda<F>();
  const auto gens = sphere_generators<F>();
  const Matrix2<F> e = spinor_projector<F>();
  const Matrix2<F> one_minus_e = complement(e);
  const auto qe = [](int n) { return E(q_power<F>(n)); };
  const E fb = fc[0] * gens[0] + fc[1] * gens[1] + fc[2] * gens[2];
  const E gb = gc[0] * gens[0] + gc[1] * gens[1] + gc[2] * gens[2];
  Matrix2<F> shift = identity2<F>();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) shift[i][j] += qe(4) * e[i][j] - e[i][j];
  const SpinorRow<F> curvature = apply_row(SpinorRow<F>{fb, gb}, shift);
  const SpinorRow<F> upper = apply_row(SpinorRow<F>{fc[1] - gc[0], qe(-1) * fc[2]}, e);
  const SpinorRow<F> lower = apply_row(SpinorRow<F>{-gc[0], qe(-1) * fc[2] - gc[1]}, one_minus_e);
  SpinorRow<F> r;
  for (std::size_t i = 0; i < 2; ++i) {
    r[i] = row[i] * (l * q_power<F>(1)) + curvature[i] * (l * q_power<F>(-1)) + upper[i] * (l * q_power<F>(2)) -
           lower[i] * l;
  }
  return r;
}

/// Dirac operator in the trivialisation with the canonical coefficients.
template <CoefficientField F>
SpinorRow<F> transported_dirac(const SpinorRow<F>& row) {
  return transported_dirac(row, coefficients(row[0]), coefficients(row[1]));
}

}  // namespace qsphere
