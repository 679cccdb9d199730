#pragma once

#include "qsphere/hopf.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsphere {

/// Basis word of the exterior algebra as a set of letters, always read in the
/// order e+, e-, e0.
using Word = std::uint8_t;
inline constexpr Word kEmpty = 0;
inline constexpr Word kPlus = 1;
inline constexpr Word kMinus = 2;
inline constexpr Word kZero = 4;
inline constexpr Word kVolume = kPlus | kMinus;
inline constexpr Word kTop = kPlus | kMinus | kZero;

inline int word_degree(Word w) { return std::popcount(static_cast<unsigned>(w)); }

/// Charge: e+ carries +2, e- carries -2, e0 carries 0.
inline int word_charge(Word w) { return ((w & kPlus) ? 2 : 0) - ((w & kMinus) ? 2 : 0); }

/// Exponent m with w x = q^(m deg x) x w for homogeneous x.
inline int word_weight(Word w) { return ((w & kPlus) ? 1 : 0) + ((w & kMinus) ? 1 : 0) + ((w & kZero) ? 2 : 0); }

std::string word_string(Word w);

/// x ^ y of two basis words: sign * s^s_exp * w, or zero.
struct WordProduct {
  bool zero = true;
  int sign = 1;
  int s_exp = 0;
  Word w = kEmpty;
};

WordProduct wedge_words(Word x, Word y);

/// Moves a function from the right of w to the left: w x = push_left(w, x) w.
template <CoefficientField F>
AlgebraElement<F> push_left(Word w, const AlgebraElement<F>& x) {
  const int m = word_weight(w);
  if (m == 0) return x;
  AlgebraElement<F> r;
  for (const auto& [mono, c] : x.terms()) {
    const int e = 2 * m * mono.degree();
    r.add_term(mono, e == 0 ? c : c * F::s_power(e));
  }
  return r;
}

/// Element of the exterior algebra with coefficients on the left of basis words.
template <CoefficientField F>
class Form {
 public:
  using Element = AlgebraElement<F>;
  using Terms = std::map<Word, Element>;

  Form() = default;
  Form(const Element& f) { add(kEmpty, f); }  // NOLINT(google-explicit-constructor)

  static Form basis(Word w, const Element& coef = Element(1)) {
    Form r;
    r.add(w, coef);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, const Element& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element component(Word w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Element() : it->second;
  }

  /// Keeps only the given basis words.
  Form restricted(std::initializer_list<Word> words) const {
    Form r;
    for (Word w : words) r.add(w, component(w));
    return r;
  }

  std::optional<int> degree() const {
    if (terms_.empty()) return 0;
    const int deg = word_degree(terms_.begin()->first);
    for (const auto& [w, f] : terms_)
      if (word_degree(w) != deg) return std::nullopt;
    return deg;
  }

  /// True when every coefficient f on word w has deg f + charge(w) = n.
  bool has_charge(int n) const {
    for (const auto& [w, f] : terms_)
      if (!f.is_homogeneous_of(n - word_charge(w))) return false;
    return true;
  }

  Form& operator+=(const Form& y) {
    for (const auto& [w, f] : y.terms_) add(w, f);
    return *this;
  }
  Form& operator-=(const Form& y) {
    for (const auto& [w, f] : y.terms_) add(w, -f);
    return *this;
  }
  Form& operator*=(const F& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [w, f] : terms_) f *= c;
    return *this;
  }
  Form operator-() const {
    Form r = *this;
    for (auto& [w, f] : r.terms_) f = -f;
    return r;
  }
  friend Form operator+(Form x, const Form& y) { return x += y; }
  friend Form operator-(Form x, const Form& y) { return x -= y; }
  friend Form operator*(Form x, const F& c) { return x *= c; }
  friend Form operator*(const F& c, Form x) { return x *= c; }

  friend Form operator*(const Element& x, const Form& y) {
    Form r;
    for (const auto& [w, f] : y.terms_) r.add(w, x * f);
    return r;
  }

  friend Form operator*(const Form& y, const Element& x) {
    Form r;
    for (const auto& [w, f] : y.terms_) r.add(w, f * push_left(w, x));
    return r;
  }

  bool operator==(const Form& other) const { return terms_ == other.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const std::string word = word_string(it->first);
      for (auto t = it->second.terms().rbegin(); t != it->second.terms().rend(); ++t) {
        std::string basis = t->first.is_one() ? std::string() : t->first.to_string();
        if (!word.empty()) basis = basis.empty() ? word : basis + "*" + word;
        detail::append_term(out, t->second.to_string(), t->second.is_single_term(), basis);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

template <CoefficientField F>
Form<F> wedge(const Form<F>& x, const Form<F>& y) {
  Form<F> r;
  for (const auto& [wx, fx] : x.terms()) {
    for (const auto& [wy, fy] : y.terms()) {
      const WordProduct p = wedge_words(wx, wy);
      if (p.zero) continue;
      AlgebraElement<F> coef = fx * push_left(wx, fy);
      F scale = F::s_power(p.s_exp);
      if (p.sign < 0) scale = -scale;
      coef *= scale;
      r.add(p.w, coef);
    }
  }
  return r;
}

/// Exterior derivative of the basis 1-forms.
template <CoefficientField F>
Form<F> d_basis(Word letter) {
  using E = AlgebraElement<F>;
  switch (letter) {
    case kZero:
      return Form<F>::basis(kVolume, E(q_power<F>(3)));
    case kPlus:
      return Form<F>::basis(kPlus | kZero, E(-(q_power<F>(2) + F(1))));
    default:
      return Form<F>::basis(kMinus | kZero, E(q_power<F>(-2) + q_power<F>(-4)));
  }
}

/// d on a basis word through the graded Leibniz rule.
template <CoefficientField F>
Form<F> d_word(Word w) {
  if (w == kEmpty) return {};
  const Word first = static_cast<Word>(w & -w);
  const Word rest = static_cast<Word>(w & ~first);
  if (rest == kEmpty) return d_basis<F>(first);
  return wedge(d_basis<F>(first), Form<F>::basis(rest)) - wedge(Form<F>::basis(first), d_word<F>(rest));
}

/// d of a generator as a 1-form.
template <CoefficientField F>
Form<F> d_generator(Gen g) {
  using E = AlgebraElement<F>;
  const F q = q_power<F>(1);
  const F qm2 = q_power<F>(-2);
  Form<F> r;
  switch (g) {
    case Gen::A:
      r.add(kZero, gen<F>(Gen::A));
      r.add(kPlus, E(q) * gen<F>(Gen::B));
      break;
    case Gen::B:
      r.add(kMinus, gen<F>(Gen::A));
      r.add(kZero, E(-qm2) * gen<F>(Gen::B));
      break;
    case Gen::C:
      r.add(kZero, gen<F>(Gen::C));
      r.add(kPlus, E(q) * gen<F>(Gen::D));
      break;
    case Gen::D:
      r.add(kMinus, gen<F>(Gen::C));
      r.add(kZero, E(-qm2) * gen<F>(Gen::D));
      break;
  }
  return r;
}

template <CoefficientField F>
Form<F> d_monomial(const Monomial& m) {
  AlgebraElement<F> x(F(1));
  Form<F> dx;
  for (Gen g : m.word()) {
    dx = dx * gen<F>(g) + x * d_generator<F>(g);
    x = x.times(g);
  }
  return dx;
}

template <CoefficientField F>
Form<F> d(const AlgebraElement<F>& x) {
  Form<F> r;
  for (const auto& [m, c] : x.terms()) r += d_monomial<F>(m) * c;
  return r;
}

template <CoefficientField F>
Form<F> d(const Form<F>& x) {
  Form<F> r;
  for (const auto& [w, f] : x.terms()) {
    r += wedge(d(f), Form<F>::basis(w));
    if (w != kEmpty) r += f * d_word<F>(w);
  }
  return r;
}

/// The q-monopole connection form on t^n.
template <CoefficientField F>
Form<F> monopole_omega(int n) {
  return Form<F>::basis(kZero, AlgebraElement<F>(qint(n, q_power<F>(2))));
}

/// sum S(x1) d(x2) over the coproduct of x.
template <CoefficientField F>
Form<F> sweedler_connection(const AlgebraElement<F>& x) {
  return contract(coproduct(x), [](const Monomial& m) { return antipode<F>(m); },
                  [](const Monomial& m) { return d_monomial<F>(m); });
}

/// Curvature d(omega) + omega ^ omega of the connection form on t^n.
template <CoefficientField F>
Form<F> monopole_curvature(int n) {
  const Form<F> omega = monopole_omega<F>(n);
  return d(omega) + wedge(omega, omega);
}

}  // namespace qsphere
