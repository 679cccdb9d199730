#pragma once

#include "qsphere/bundles.hpp"
#include "qsphere/tensor_form.hpp"

#include <stdexcept>
#include <vector>

namespace qsphere {

template <CoefficientField F>
void require_sphere_function(const AlgebraElement<F>& f) {
  if (!f.is_homogeneous_of(0)) throw std::invalid_argument("not a function on the sphere");
}

/// Holomorphic part of df, a multiple of e+.
template <CoefficientField F>
Form<F> del(const AlgebraElement<F>& f) {
  require_sphere_function(f);
  return d(f).restricted({kPlus});
}

/// Antiholomorphic part of df, a multiple of e-.
template <CoefficientField F>
Form<F> delbar(const AlgebraElement<F>& f) {
  require_sphere_function(f);
  return d(f).restricted({kMinus});
}

/// True for u e+ + w e- with deg u = -2 and deg w = 2.
template <CoefficientField F>
bool is_sphere_one_form(const Form<F>& h) {
  for (const auto& [w, f] : h.terms())
    if (w != kPlus && w != kMinus) return false;
  return h.has_charge(0);
}

template <CoefficientField F>
void require_sphere_one_form(const Form<F>& h) {
  if (!is_sphere_one_form(h)) throw std::invalid_argument("not a 1-form on the sphere");
}

/// d restricted to the (0,1) part; the (1,0) part is sent to zero.
template <CoefficientField F>
Form<F> del(const Form<F>& h) {
  require_sphere_one_form(h);
  return d(h.restricted({kMinus}));
}

/// d restricted to the (1,0) part; the (0,1) part is sent to zero.
template <CoefficientField F>
Form<F> delbar(const Form<F>& h) {
  require_sphere_one_form(h);
  return d(h.restricted({kPlus}));
}

/// The invariant volume form e+ ^ e-.
template <CoefficientField F>
Form<F> volume() {
  return Form<F>::basis(kVolume);
}

/// Hodge star: *1 = vol, *vol = 1, *e+ = e+, *e- = -e-.
template <CoefficientField F>
Form<F> hodge_star(const Form<F>& x) {
  Form<F> r;
  for (const auto& [w, f] : x.terms()) {
    switch (w) {
      case kEmpty:
        r.add(kVolume, f);
        break;
      case kVolume:
        r.add(kEmpty, f);
        break;
      case kPlus:
        r.add(kPlus, f);
        break;
      case kMinus:
        r.add(kMinus, -f);
        break;
      default:
        throw std::invalid_argument("Hodge star needs a form on the sphere");
    }
  }
  return r;
}

/// The coefficient h in hodge form h vol; throws if x has other components.
template <CoefficientField F>
AlgebraElement<F> volume_coefficient(const Form<F>& x) {
  for (const auto& [w, f] : x.terms())
    if (w != kVolume) throw std::invalid_argument("2-form is not a multiple of the volume form");
  return x.component(kVolume);
}

/// Laplacian through (box f) vol = del delbar f.
template <CoefficientField F>
AlgebraElement<F> laplacian(const AlgebraElement<F>& f) {
  return volume_coefficient(d(delbar(f)));
}

/// Laplacian as -1/2 * d * d f.
template <CoefficientField F>
AlgebraElement<F> laplacian_by_star(const AlgebraElement<F>& f) {
  const Form<F> r = hodge_star(d(hodge_star(d(f))));
  return r.component(kEmpty) * (F(-1) / F(2));
}

/// Maxwell operator -1/4 * d * d on 1-forms.
template <CoefficientField F>
Form<F> maxwell_operator(const Form<F>& a) {
  require_sphere_one_form(a);
  return hodge_star(d(hodge_star(d(a)))) * (F(-1) / F(4));
}

/// The massive mode q^2/(2[2]) (delbar f - del f).
template <CoefficientField F>
Form<F> maxwell_mode(const AlgebraElement<F>& f) {
  return (delbar(f) - del(f)) * (q_power<F>(2) / (F(2) * q2<F>()));
}

/// Invariant metric q^2 db- (x) db+ + db+ (x) db- - [2] db0 (x) db0.
template <CoefficientField F>
TensorForm<F> metric() {
  const auto db = d_sphere_generators<F>();
  return tensor(db[0], db[2]) * q_power<F>(2) + tensor(db[2], db[0]) - tensor(db[1], db[1]) * q2<F>();
}

/// Component of a rank-two tensor with first factor of type x and second of type y.
template <CoefficientField F>
TensorForm<F> tensor_part(const TensorForm<F>& t, char x, char y) {
  return t.with_word(label_word(x)).with_labels(std::string(1, y));
}

/// The lift alpha g+- + beta g-+ with alpha - beta = 2q^-1/[2].
template <CoefficientField F>
TensorForm<F> volume_lift(const F& alpha) {
  const TensorForm<F> g = metric<F>();
  const F beta = alpha - F(2) * q_power<F>(-1) / q2<F>();
  return tensor_part(g, '+', '-') * alpha + tensor_part(g, '-', '+') * beta;
}

/// The lift alpha g+- + (alpha - q^-2) g-+, whose wedge is exactly the volume form.
template <CoefficientField F>
TensorForm<F> normalized_lift(const F& alpha) {
  const TensorForm<F> g = metric<F>();
  return tensor_part(g, '+', '-') * alpha + tensor_part(g, '-', '+') * (alpha - q_power<F>(-2));
}

/// The lift -q^-1/[2] (id (x) *) g.
template <CoefficientField F>
TensorForm<F> geometric_lift() {
  return volume_lift<F>(q_power<F>(-1) / q2<F>());
}

/// The lift whose Ricci tensor is proportional to the metric.
template <CoefficientField F>
TensorForm<F> einstein_lift() {
  return volume_lift<F>(F(2) * q_power<F>(-1) / (q2<F>() * (F(1) + q_power<F>(-4))));
}

/// Degree-zero matrix entries of the spin-l corepresentation spanned by c^s a^t, s + t = 2l.
template <CoefficientField F>
std::vector<AlgebraElement<F>> spin_eigenspace(int l) {
  const AlgebraElement<F> a = gen<F>(Gen::A), c = gen<F>(Gen::C);
  const Monomial middle{l, 0, l, 0};
  std::vector<AlgebraElement<F>> out;
  for (int s = 0; s <= 2 * l; ++s) {
    const TensorSquare<F> t = coproduct(pow(c, s) * pow(a, 2 * l - s));
    AlgebraElement<F> entry;
    for (const auto& [key, coef] : t.terms())
      if (key[1] == middle) entry.add_term(key[0], coef);
    out.push_back(entry);
  }
  return out;
}

/// Eigenvalue of the Laplacian on a spin-l eigenspace; throws if the span is not an eigenspace.
template <CoefficientField F>
F spin_eigenvalue(int l) {
  const auto space = spin_eigenspace<F>(l);
  std::optional<F> lambda;
  for (const auto& f : space) {
    const AlgebraElement<F> lf = laplacian(f);
    const auto& [m, c] = *f.terms().begin();
    const F ratio = lf.coefficient(m) / c;
    if (lambda && !(*lambda == ratio)) throw std::runtime_error("entries have different eigenvalues");
    if (!(lf == f * ratio)) throw std::runtime_error("entry is not an eigenfunction");
    lambda = ratio;
  }
  return *lambda;
}

}  // namespace qsphere
