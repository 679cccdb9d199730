#include "qsphere/hopf.hpp"

#include <algorithm>

namespace qsphere {

char gen_letter(Gen g) { return "abcd"[static_cast<int>(g)]; }

std::vector<Gen> Monomial::word() const {
  std::vector<Gen> w;
  w.reserve(static_cast<std::size_t>(length()));
  w.insert(w.end(), static_cast<std::size_t>(i), Gen::A);
  w.insert(w.end(), static_cast<std::size_t>(j), Gen::B);
  w.insert(w.end(), static_cast<std::size_t>(k), Gen::C);
  w.insert(w.end(), static_cast<std::size_t>(l), Gen::D);
  return w;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  auto put = [&](char letter, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += letter;
    if (e != 1) out += "^" + std::to_string(e);
  };
  put('a', i);
  put('b', j);
  put('c', k);
  put('d', l);
  return out;
}

GeneratorProduct right_multiply(const Monomial& m, Gen g) {
  GeneratorProduct p;
  auto push = [&](Monomial r, int e) { p.terms[static_cast<std::size_t>(p.count++)] = {r, e}; };
  switch (g) {
    case Gen::A:
      if (m.l == 0) {
        push({m.i + 1, m.j, m.k, 0}, 2 * (m.j + m.k));
      } else {
        push({0, m.j, m.k, m.l - 1}, 0);
        push({0, m.j + 1, m.k + 1, m.l - 1}, 2 * (2 * m.l - 1));
      }
      break;
    case Gen::B:
      push({m.i, m.j + 1, m.k, m.l}, 2 * m.l);
      break;
    case Gen::C:
      push({m.i, m.j, m.k + 1, m.l}, 2 * m.l);
      break;
    case Gen::D:
      if (m.i == 0) {
        push({0, m.j, m.k, m.l + 1}, 0);
      } else {
        push({m.i - 1, m.j, m.k, 0}, -2 * (m.j + m.k));
        push({m.i - 1, m.j + 1, m.k + 1, 0}, -2 * (m.j + m.k) - 2);
      }
      break;
  }
  return p;
}

std::array<std::array<Gen, 2>, 2> coproduct_of(Gen g) {
  switch (g) {
    case Gen::A: return {{{Gen::A, Gen::A}, {Gen::B, Gen::C}}};
    case Gen::B: return {{{Gen::A, Gen::B}, {Gen::B, Gen::D}}};
    case Gen::C: return {{{Gen::C, Gen::A}, {Gen::D, Gen::C}}};
    case Gen::D: break;
  }
  return {{{Gen::C, Gen::B}, {Gen::D, Gen::D}}};
}

namespace detail {

void append_term(std::string& out, std::string coef, bool single_term, const std::string& basis) {
  bool negative = false;
  if (single_term && !coef.empty() && coef[0] == '-') {
    negative = true;
    coef.erase(0, 1);
  }
  std::string body;
  if (basis.empty()) {
    body = single_term ? coef : "(" + coef + ")";
  } else if (coef == "1") {
    body = basis;
  } else {
    body = (single_term ? coef : "(" + coef + ")") + "*" + basis;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rewriting oracle

namespace {

using Word = std::vector<Gen>;

// Straightening rule for an adjacent out-of-order pair (x, y) with x > y:
// x y -> sum of (coefficient, replacement) pieces.
struct PairRule {
  Scalar first_coef;
  Word first;
  Scalar second_coef;
  Word second;
  bool has_second = false;
};

PairRule pair_rule(Gen x, Gen y) {
  const Scalar q = Scalar::s_power(2);
  if (x == Gen::D && y == Gen::A)
    return {Scalar(1), {Gen::A, Gen::D}, q - q.inverse(), {Gen::B, Gen::C}, true};
  if (x == Gen::C && y == Gen::B) return {Scalar(1), {Gen::B, Gen::C}, Scalar(0), {}, false};
  return {q, {y, x}, Scalar(0), {}, false};
}

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

Monomial count_letters(const Word& w) {
  Monomial m;
  for (Gen g : w) {
    switch (g) {
      case Gen::A: ++m.i; break;
      case Gen::B: ++m.j; break;
      case Gen::C: ++m.k; break;
      case Gen::D: ++m.l; break;
    }
  }
  return m;
}

}  // namespace

AlgebraElement<Scalar> reduce_word(const std::vector<Gen>& word, Strategy strategy) {
  std::map<Word, Scalar> pending;
  pending.emplace(word, Scalar(1));
  AlgebraElement<Scalar> result;
  auto add = [&](Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    Scalar c = std::move(node.mapped());
    if (!is_sorted_word(w)) {
      std::size_t pos = 0;
      if (strategy == Strategy::Leftmost) {
        for (pos = 0; pos + 1 < w.size(); ++pos)
          if (w[pos] > w[pos + 1]) break;
      } else {
        for (pos = w.size() - 1; pos-- > 0;)
          if (w[pos] > w[pos + 1]) break;
      }
      PairRule rule = pair_rule(w[pos], w[pos + 1]);
      auto splice = [&](const Word& piece) {
        Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), piece.begin(), piece.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
        return out;
      };
      add(splice(rule.first), c * rule.first_coef);
      if (rule.has_second) add(splice(rule.second), c * rule.second_coef);
      continue;
    }
    Monomial m = count_letters(w);
    if (m.i == 0 || m.l == 0) {
      result.add_term(m, c);
      continue;
    }
    // a^i b^j c^k d^l = q^-(j+k) a^(i-1) (1 + q^-1 bc) b^j c^k d^(l-1)
    const Scalar f = Scalar::s_power(-2 * (m.j + m.k));
    add(Monomial{m.i - 1, m.j, m.k, m.l - 1}.word(), c * f);
    add(Monomial{m.i - 1, m.j + 1, m.k + 1, m.l - 1}.word(), c * f * Scalar::s_power(-2));
  }
  return result;
}

}  // namespace qsphere
