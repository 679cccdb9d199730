#pragma once

#include "qsphere/sphere.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsphere {

/// Levi-Civita connection: nabla(u e+ + w e-) = Du (x) e+ + Dw (x) e-.
template <CoefficientField F>
TensorForm<F> nabla(const Form<F>& tau) {
  require_sphere_one_form(tau);
  const Form<F> ep = Form<F>::basis(kPlus);
  const Form<F> em = Form<F>::basis(kMinus);
  return tensor(covariant_D(tau.component(kPlus), -2), ep) + tensor(covariant_D(tau.component(kMinus), 2), em);
}

/// Closed form of nabla on db-, db0, db+: ([2] b-, 1 + [2] b0, [2] b+) g.
template <CoefficientField F>
std::array<AlgebraElement<F>, 3> nabla_column() {
  using E = AlgebraElement<F>;
  const E two(q2<F>());
  return {two * bm<F>(), E(F(1)) + two * b0<F>(), two * bp<F>()};
}

/// Torsion wedge(nabla tau) - d tau.
template <CoefficientField F>
Form<F> torsion(const Form<F>& tau) {
  return as_form(wedge_first(nabla(tau))) - d(tau);
}

/// A basic 1-form tensor split into pairs of basic 1-forms.
template <CoefficientField F>
using FormPairs = std::vector<std::pair<Form<F>, Form<F>>>;

/// Writes f e^a (x) e^b as sum (f e^a x_r) (x) (y_r e^b) with a partition of unity.
template <CoefficientField F>
FormPairs<F> split_basic(const TensorForm<F>& t) {
  FormPairs<F> out;
  for (const auto& [k, f] : t.terms()) {
    if (k.labels.size() != 1 || word_degree(k.word) != 1) throw std::invalid_argument("expected a rank-two tensor");
    const int n = -labels_charge(k.labels);
    for (const auto& [x, y] : partition_of_unity<F>(n).pairs) {
      out.emplace_back(Form<F>::basis(k.word, f * push_left(k.word, x)),
                       Form<F>::basis(label_word(k.labels[0]), y));
    }
  }
  return out;
}

/// The metric as pairs of exact differentials.
template <CoefficientField F>
FormPairs<F> metric_pairs() {
  const auto db = d_sphere_generators<F>();
  return {{db[0] * q_power<F>(2), db[2]}, {db[2], db[0]}, {db[1] * (-q2<F>()), db[1]}};
}

/// (nabla ^ id) on a sum of pairs.
template <CoefficientField F>
TensorForm<F> nabla_wedge_id(const FormPairs<F>& pairs) {
  TensorForm<F> r;
  for (const auto& [omega, tau] : pairs) r += tensor(as_form(wedge_first(nabla(omega))), tau);
  return r;
}

/// (id ^ nabla) on a sum of pairs.
template <CoefficientField F>
TensorForm<F> id_wedge_nabla(const FormPairs<F>& pairs) {
  TensorForm<F> r;
  for (const auto& [omega, tau] : pairs) r += wedge_left(omega, nabla(tau));
  return r;
}

/// (d (x) id) on a sum of pairs.
template <CoefficientField F>
TensorForm<F> d_id(const FormPairs<F>& pairs) {
  TensorForm<F> r;
  for (const auto& [omega, tau] : pairs) r += tensor(d(omega), tau);
  return r;
}

/// Cotorsion (nabla ^ id - id ^ nabla) g.
template <CoefficientField F>
TensorForm<F> cotorsion() {
  const auto pairs = metric_pairs<F>();
  return nabla_wedge_id(pairs) - id_wedge_nabla(pairs);
}

/// Riemann curvature (id ^ nabla - d (x) id) nabla tau.
template <CoefficientField F>
TensorForm<F> riemann_tensor(const Form<F>& tau) {
  const auto pairs = split_basic(nabla(tau));
  return id_wedge_nabla(pairs) - d_id(pairs);
}

/// Curvature scalars on the e+ and e- parts.
template <CoefficientField F>
std::pair<F, F> riemann_scalars() {
  return {-q_power<F>(4) * q2<F>(), q2<F>()};
}

/// The expected curvature vol (x) rho(tau).
template <CoefficientField F>
TensorForm<F> riemann_expected(const Form<F>& tau) {
  const auto [plus, minus] = riemann_scalars<F>();
  return tensor(volume<F>(), tau.restricted({kPlus}) * plus + tau.restricted({kMinus}) * minus);
}

/// Ricci by feeding the right factor of a lift into the curvature scalars.
template <CoefficientField F>
TensorForm<F> ricci(const TensorForm<F>& lift) {
  if (!lift.is_basic()) throw std::invalid_argument("lift is not basic");
  const auto [plus, minus] = riemann_scalars<F>();
  return scale_last_label(lift, plus, minus);
}

/// Column and row of the projector E = column * row.
template <CoefficientField F>
std::array<AlgebraElement<F>, 3> projector_column() {
  return nabla_column<F>();
}

template <CoefficientField F>
std::array<AlgebraElement<F>, 3> projector_row() {
  return kernel_row<F>();
}

template <CoefficientField F>
using Matrix3 = std::array<std::array<AlgebraElement<F>, 3>, 3>;

template <CoefficientField F>
Matrix3<F> projector() {
  const auto col = projector_column<F>();
  const auto row = projector_row<F>();
  Matrix3<F> e;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) e[i][j] = col[i] * row[j];
  return e;
}

template <CoefficientField F>
Matrix3<F> multiply(const Matrix3<F>& x, const Matrix3<F>& y) {
  Matrix3<F> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

/// Row i of M acting on a column of 1-forms as sum_k M_ik (x) X_k, with M a matrix of 1-forms.
template <CoefficientField F>
TensorForm<F> act_on_column(const std::array<Form<F>, 3>& row, const std::array<Form<F>, 3>& column) {
  TensorForm<F> r;
  for (std::size_t k = 0; k < 3; ++k) r += tensor(row[k], column[k]);
  return r;
}

/// Entrywise derivative of E through a chosen differential.
template <CoefficientField F, class Diff>
std::array<std::array<Form<F>, 3>, 3> differentiate(const Matrix3<F>& e, Diff diff) {
  std::array<std::array<Form<F>, 3>, 3> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = diff(e[i][j]);
  return r;
}

/// E times a matrix of 1-forms.
template <CoefficientField F>
std::array<std::array<Form<F>, 3>, 3> multiply(const Matrix3<F>& e, const std::array<std::array<Form<F>, 3>, 3>& x) {
  std::array<std::array<Form<F>, 3>, 3> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += e[i][k] * x[k][j];
  return r;
}

/// Componentwise nabla g with the first output leg moved to the far left; only meaningful where the
/// coefficients commute, i.e. at q = 1.
template <CoefficientField F>
TensorForm<F> metric_derivative() {
  TensorForm<F> r;
  for (const auto& [omega, tau] : metric_pairs<F>()) {
    r += tensor(nabla(omega), tau);
    const TensorForm<F> inner = nabla(tau);
    for (const auto& [wo, fo] : omega.terms()) {
      for (const auto& [k, h] : inner.terms()) {
        r.add(TensorKey{k.word, std::string(1, word_label(wo)) + k.labels}, fo * h);
      }
    }
  }
  return r;
}

}  // namespace qsphere
