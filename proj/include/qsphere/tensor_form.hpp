#pragma once

#include "qsphere/calculus.hpp"

#include <stdexcept>
#include <string>

namespace qsphere {

/// Basis element w (x) e^l1 (x) ... (x) e^lk, labels drawn from '+' and '-'.
struct TensorKey {
  Word word = kEmpty;
  std::string labels;
  auto operator<=>(const TensorKey&) const = default;
};

inline Word label_word(char label) { return label == '+' ? kPlus : kMinus; }

inline char word_label(Word w) {
  if (w == kPlus) return '+';
  if (w == kMinus) return '-';
  throw std::invalid_argument("tensor factors must be e+ or e-");
}

inline int labels_weight(const std::string& labels) { return static_cast<int>(labels.size()); }

inline int labels_charge(const std::string& labels) {
  int c = 0;
  for (char l : labels) c += l == '+' ? 2 : -2;
  return c;
}

/// Element of Omega^p (x) (Omega^1)^(x)k over the quantum group with every
/// coefficient collected at the far left.
template <CoefficientField F>
class TensorForm {
 public:
  using Element = AlgebraElement<F>;
  using Terms = std::map<TensorKey, Element>;

  TensorForm() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorKey& key, const Element& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element component(Word w, const std::string& labels) const {
    auto it = terms_.find(TensorKey{w, labels});
    return it == terms_.end() ? Element() : it->second;
  }

  /// Keeps the terms whose label string matches.
  TensorForm with_labels(const std::string& labels) const {
    TensorForm r;
    for (const auto& [k, f] : terms_)
      if (k.labels == labels) r.add(k, f);
    return r;
  }

  /// Keeps the terms whose form word matches.
  TensorForm with_word(Word w) const {
    TensorForm r;
    for (const auto& [k, f] : terms_)
      if (k.word == w) r.add(k, f);
    return r;
  }

  /// Basic means every coefficient has the degree that makes the total charge zero.
  bool is_basic() const {
    for (const auto& [k, f] : terms_)
      if (!f.is_homogeneous_of(-word_charge(k.word) - labels_charge(k.labels))) return false;
    return true;
  }

  TensorForm& operator+=(const TensorForm& y) {
    for (const auto& [k, f] : y.terms_) add(k, f);
    return *this;
  }
  TensorForm& operator-=(const TensorForm& y) {
    for (const auto& [k, f] : y.terms_) add(k, -f);
    return *this;
  }
  TensorForm& operator*=(const F& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, f] : terms_) f *= c;
    return *this;
  }
  TensorForm operator-() const {
    TensorForm r = *this;
    for (auto& [k, f] : r.terms_) f = -f;
    return r;
  }
  friend TensorForm operator+(TensorForm x, const TensorForm& y) { return x += y; }
  friend TensorForm operator-(TensorForm x, const TensorForm& y) { return x -= y; }
  friend TensorForm operator*(TensorForm x, const F& c) { return x *= c; }
  friend TensorForm operator*(const F& c, TensorForm x) { return x *= c; }
  friend TensorForm operator*(const Element& x, const TensorForm& y) {
    TensorForm r;
    for (const auto& [k, f] : y.terms_) r.add(k, x * f);
    return r;
  }
  bool operator==(const TensorForm& other) const { return terms_ == other.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, f] : terms_) {
      std::string basis = "[" + word_string(k.word);
      for (char l : k.labels) basis += std::string("|") + (l == '+' ? "ep" : "em");
      basis += "]";
      const std::string coef = f.to_string();
      if (!out.empty()) out += " + ";
      out += (f.size() == 1 ? coef : "(" + coef + ")") + "*" + basis;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Multiplies each monomial of x by q^(m deg).
template <CoefficientField F>
AlgebraElement<F> push_weight(int m, const AlgebraElement<F>& x) {
  if (m == 0) return x;
  AlgebraElement<F> r;
  for (const auto& [mono, c] : x.terms()) {
    const int e = 2 * m * mono.degree();
    r.add_term(mono, e == 0 ? c : c * F::s_power(e));
  }
  return r;
}

/// A (x) B for a form A and a 1-form B built from e+ and e-.
template <CoefficientField F>
TensorForm<F> tensor(const Form<F>& a, const Form<F>& b) {
  TensorForm<F> r;
  for (const auto& [wa, fa] : a.terms()) {
    for (const auto& [wb, fb] : b.terms()) {
      const char label = word_label(wb);
      r.add(TensorKey{wa, std::string(1, label)}, fa * push_left(wa, fb));
    }
  }
  return r;
}

/// T (x) B, appending the 1-form B as a new last factor.
template <CoefficientField F>
TensorForm<F> tensor(const TensorForm<F>& t, const Form<F>& b) {
  TensorForm<F> r;
  for (const auto& [k, f] : t.terms()) {
    const int weight = word_weight(k.word) + labels_weight(k.labels);
    for (const auto& [wb, fb] : b.terms()) {
      r.add(TensorKey{k.word, k.labels + word_label(wb)}, f * push_weight(weight, fb));
    }
  }
  return r;
}

/// Wedges the first tensor factor into the form part.
template <CoefficientField F>
TensorForm<F> wedge_first(const TensorForm<F>& t) {
  TensorForm<F> r;
  for (const auto& [k, f] : t.terms()) {
    if (k.labels.empty()) throw std::invalid_argument("no tensor factor to wedge");
    const WordProduct p = wedge_words(k.word, label_word(k.labels[0]));
    if (p.zero) continue;
    F scale = F::s_power(p.s_exp);
    if (p.sign < 0) scale = -scale;
    r.add(TensorKey{p.w, k.labels.substr(1)}, f * scale);
  }
  return r;
}

/// Reads a tensor without factors as a form.
template <CoefficientField F>
Form<F> as_form(const TensorForm<F>& t) {
  Form<F> r;
  for (const auto& [k, f] : t.terms()) {
    if (!k.labels.empty()) throw std::invalid_argument("tensor still has factors");
    r.add(k.word, f);
  }
  return r;
}

/// omega ^ T acting on the form part.
template <CoefficientField F>
TensorForm<F> wedge_left(const Form<F>& omega, const TensorForm<F>& t) {
  TensorForm<F> r;
  for (const auto& [w, fw] : omega.terms()) {
    for (const auto& [k, f] : t.terms()) {
      const WordProduct p = wedge_words(w, k.word);
      if (p.zero) continue;
      F scale = F::s_power(p.s_exp);
      if (p.sign < 0) scale = -scale;
      r.add(TensorKey{p.w, k.labels}, fw * push_left(w, f) * scale);
    }
  }
  return r;
}

/// Multiplies the term with last label l by lambda(l).
template <CoefficientField F>
TensorForm<F> scale_last_label(const TensorForm<F>& t, const F& plus, const F& minus) {
  TensorForm<F> r;
  for (const auto& [k, f] : t.terms()) {
    if (k.labels.empty()) throw std::invalid_argument("no tensor factor");
    r.add(k, f * (k.labels.back() == '+' ? plus : minus));
  }
  return r;
}

}  // namespace qsphere
