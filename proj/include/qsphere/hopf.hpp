#pragma once

#include "qsphere/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsphere {

enum class Gen : std::uint8_t { A, B, C, D };

char gen_letter(Gen g);

/// PBW monomial a^i b^j c^k d^l with i*l = 0.
struct Monomial {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  int degree() const { return i - j + k - l; }
  /// Grading by rows (a, b against c, d); the antipode turns degree into minus this.
  int left_degree() const { return i + j - k - l; }
  bool is_one() const { return i == 0 && j == 0 && k == 0 && l == 0; }
  bool is_normal() const { return i >= 0 && j >= 0 && k >= 0 && l >= 0 && (i == 0 || l == 0); }
  int length() const { return i + j + k + l; }
  std::vector<Gen> word() const;
  std::string to_string() const;
  auto operator<=>(const Monomial&) const = default;
};

/// One term m * s^s_exp of a product of normal monomials.
struct MonomialTerm {
  Monomial m;
  int s_exp = 0;
};

/// m * g rewritten in normal form; one or two terms, each a pure power of s.
struct GeneratorProduct {
  std::array<MonomialTerm, 2> terms;
  int count = 0;
};

GeneratorProduct right_multiply(const Monomial& m, Gen g);

namespace detail {

/// Appends "coef*basis" to a sum, folding the sign of single-term coefficients
/// into the joining operator and parenthesizing compound ones.
void append_term(std::string& out, std::string coef, bool single_term, const std::string& basis);

}  // namespace detail

/// Finite sum of PBW monomials with coefficients in F.
template <CoefficientField F>
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, F>;

  AlgebraElement() = default;
  AlgebraElement(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  AlgebraElement(long c) : AlgebraElement(F(c)) {}  // NOLINT(google-explicit-constructor)

  static AlgebraElement generator(Gen g) {
    Monomial m;
    switch (g) {
      case Gen::A: m.i = 1; break;
      case Gen::B: m.j = 1; break;
      case Gen::C: m.k = 1; break;
      case Gen::D: m.l = 1; break;
    }
    return monomial(m);
  }

  static AlgebraElement monomial(const Monomial& m, const F& c = F(1)) {
    AlgebraElement r;
    r.add_term(m, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  F coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Degree when homogeneous (zero counts as homogeneous of any degree, reported as 0).
  std::optional<int> degree() const {
    if (terms_.empty()) return 0;
    int deg = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != deg) return std::nullopt;
    return deg;
  }

  bool is_homogeneous_of(int n) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != n) return false;
    return true;
  }

  std::map<int, AlgebraElement> degree_split() const {
    std::map<int, AlgebraElement> parts;
    for (const auto& [m, c] : terms_) parts[m.degree()].terms_.emplace(m, c);
    return parts;
  }

  AlgebraElement times(Gen g) const {
    AlgebraElement r;
    for (const auto& [m, c] : terms_) {
      GeneratorProduct p = right_multiply(m, g);
      for (int t = 0; t < p.count; ++t) {
        const auto& term = p.terms[static_cast<std::size_t>(t)];
        r.add_term(term.m, term.s_exp == 0 ? c : c * F::s_power(term.s_exp));
      }
    }
    return r;
  }

  AlgebraElement times(const Monomial& m) const {
    AlgebraElement r = *this;
    for (Gen g : m.word()) r = r.times(g);
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& y) {
    for (const auto& [m, c] : y.terms_) add_term(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& y) {
    for (const auto& [m, c] : y.terms_) add_term(m, -c);
    return *this;
  }
  AlgebraElement& operator*=(const F& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
  }

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(AlgebraElement x, const F& c) { return x *= c; }
  friend AlgebraElement operator*(const F& c, AlgebraElement x) { return x *= c; }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    AlgebraElement r;
    for (const auto& [m, c] : y.terms_) {
      AlgebraElement t = x.times(m);
      t *= c;
      r += t;
    }
    return r;
  }

  bool operator==(const AlgebraElement& other) const { return terms_ == other.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      detail::append_term(out, it->second.to_string(), it->second.is_single_term(),
                          it->first.is_one() ? std::string() : it->first.to_string());
    return out;
  }

 private:
  Terms terms_;
};

template <CoefficientField F>
AlgebraElement<F> gen(Gen g) {
  return AlgebraElement<F>::generator(g);
}

template <CoefficientField F>
AlgebraElement<F> normalize_word(const std::vector<Gen>& word, const F& prefactor = F(1)) {
  AlgebraElement<F> r(prefactor);
  for (Gen g : word) r = r.times(g);
  return r;
}

template <CoefficientField F>
AlgebraElement<F> pow(const AlgebraElement<F>& x, int n) {
  AlgebraElement<F> r(F(1));
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

/// Sphere generators b0 = bc, b+ = cd, b- = ab.
template <CoefficientField F>
AlgebraElement<F> b0() {
  return AlgebraElement<F>::monomial(Monomial{0, 1, 1, 0});
}
template <CoefficientField F>
AlgebraElement<F> bp() {
  return AlgebraElement<F>::monomial(Monomial{0, 0, 1, 1});
}
template <CoefficientField F>
AlgebraElement<F> bm() {
  return AlgebraElement<F>::monomial(Monomial{1, 1, 0, 0});
}

// ---------------------------------------------------------------------------
// Tensor powers

template <CoefficientField F, std::size_t N>
class Tensor {
 public:
  using Key = std::array<Monomial, N>;
  using Terms = std::map<Key, F>;

  Tensor() = default;
  static Tensor unit() {
    Tensor t;
    t.add_term(Key{}, F(1));
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Right multiplication of leg n by g on every term.
  Tensor times_leg(std::size_t leg, Gen g) const {
    Tensor r;
    for (const auto& [key, c] : terms_) {
      GeneratorProduct p = right_multiply(key[leg], g);
      for (int t = 0; t < p.count; ++t) {
        Key k2 = key;
        k2[leg] = p.terms[static_cast<std::size_t>(t)].m;
        const int e = p.terms[static_cast<std::size_t>(t)].s_exp;
        r.add_term(k2, e == 0 ? c : c * F::s_power(e));
      }
    }
    return r;
  }

  Tensor& operator+=(const Tensor& y) {
    for (const auto& [k, c] : y.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& y) {
    for (const auto& [k, c] : y.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(const F& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  bool operator==(const Tensor& other) const { return terms_ == other.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      std::string basis;
      for (std::size_t n = 0; n < N; ++n) {
        if (n) basis += "(x)";
        basis += key[n].is_one() ? "1" : key[n].to_string();
      }
      detail::append_term(out, c.to_string(), c.is_single_term(), basis);
    }
    return out;
  }

 private:
  Terms terms_;
};

template <CoefficientField F>
using TensorSquare = Tensor<F, 2>;
template <CoefficientField F>
using TensorCube = Tensor<F, 3>;

template <CoefficientField F>
TensorSquare<F> tensor(const AlgebraElement<F>& x, const AlgebraElement<F>& y) {
  TensorSquare<F> t;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add_term({mx, my}, cx * cy);
  return t;
}

/// The matrix coproduct on a generator as a list of leg pairs.
std::array<std::array<Gen, 2>, 2> coproduct_of(Gen g);

/// Delta of a monomial embedded into legs (first, first+1) of an N-fold tensor
/// whose other legs are fixed by `rest`.
template <CoefficientField F, std::size_t N>
Tensor<F, N> coproduct_into(const Monomial& m, const F& c, std::size_t first,
                            const std::array<Monomial, N>& rest) {
  Tensor<F, N> t;
  t.add_term(rest, c);
  for (Gen g : m.word()) {
    Tensor<F, N> next;
    for (const auto& pair : coproduct_of(g))
      next += t.times_leg(first, pair[0]).times_leg(first + 1, pair[1]);
    t = std::move(next);
  }
  return t;
}

template <CoefficientField F>
TensorSquare<F> coproduct(const AlgebraElement<F>& x) {
  TensorSquare<F> r;
  for (const auto& [m, c] : x.terms()) r += coproduct_into<F, 2>(m, c, 0, {});
  return r;
}

/// (Delta (x) id) applied to a tensor square.
template <CoefficientField F>
TensorCube<F> coproduct_left(const TensorSquare<F>& t) {
  TensorCube<F> r;
  for (const auto& [key, c] : t.terms()) r += coproduct_into<F, 3>(key[0], c, 0, {Monomial{}, Monomial{}, key[1]});
  return r;
}

/// (id (x) Delta) applied to a tensor square.
template <CoefficientField F>
TensorCube<F> coproduct_right(const TensorSquare<F>& t) {
  TensorCube<F> r;
  for (const auto& [key, c] : t.terms()) r += coproduct_into<F, 3>(key[1], c, 1, {key[0], Monomial{}, Monomial{}});
  return r;
}

template <CoefficientField F>
F counit(const AlgebraElement<F>& x) {
  F r(0);
  for (const auto& [m, c] : x.terms())
    if (m.j == 0 && m.k == 0) r += c;
  return r;
}

template <CoefficientField F>
AlgebraElement<F> antipode(const Monomial& m) {
  F coef = F::s_power(2 * (m.j - m.k));
  if ((m.j + m.k) % 2) coef = -coef;
  AlgebraElement<F> r = AlgebraElement<F>::monomial(Monomial{m.l, m.j, m.k, 0}, coef);
  for (int n = 0; n < m.i; ++n) r = r.times(Gen::D);
  return r;
}

template <CoefficientField F>
AlgebraElement<F> antipode(const AlgebraElement<F>& x) {
  AlgebraElement<F> r;
  for (const auto& [m, c] : x.terms()) r += antipode<F>(m) * c;
  return r;
}

/// sum c * f(x1) * g(x2) over the terms of a tensor square.
template <CoefficientField F, class Left, class Right>
auto contract(const TensorSquare<F>& t, Left f, Right g) {
  using R = decltype(f(Monomial{}) * g(Monomial{}));
  R r;
  for (const auto& [key, c] : t.terms()) {
    R term = f(key[0]) * g(key[1]);
    term *= c;
    r += term;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Independent rewriting oracle

enum class Strategy { Leftmost, Rightmost };

/// Reduces a word to normal form by pairwise straightening rules only,
/// choosing the leftmost or rightmost reducible pair at each step.
AlgebraElement<Scalar> reduce_word(const std::vector<Gen>& word, Strategy strategy);

}  // namespace qsphere
