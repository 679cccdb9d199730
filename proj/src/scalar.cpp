#include "qsphere/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qsphere {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const mpq_class& c) {
  mpq_class r(c);
  r.canonicalize();
  return Polynomial(std::vector<mpq_class>{r});
}

Polynomial Polynomial::monomial(const mpq_class& c, int exponent) {
  std::vector<mpq_class> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  v.back().canonicalize();
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

Polynomial Polynomial::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  Polynomial r;
  r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return r;
}

Polynomial Polynomial::shifted_up(int k) const {
  if (k == 0 || is_zero()) return *this;
  Polynomial r;
  r.coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  mpq_class inv = 1 / leading();
  return scaled(inv);
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  const auto& big = x.coeffs_.size() >= y.coeffs_.size() ? x : y;
  const auto& small = x.coeffs_.size() >= y.coeffs_.size() ? y : x;
  Polynomial r = big;
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
  r.trim();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x + (-y); }

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  Polynomial r;
  r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, mpq_class(0));
  mpq_class t;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      t = x.coeffs_[i] * y.coeffs_[j];
      r.coeffs_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& x, const Polynomial& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (x.degree() < y.degree()) return {Polynomial{}, x};
  std::vector<mpq_class> rem = x.coeffs_;
  std::vector<mpq_class> quo(static_cast<std::size_t>(x.degree() - y.degree() + 1));
  const mpq_class inv_lead = 1 / y.leading();
  for (int k = x.degree() - y.degree(); k >= 0; --k) {
    mpq_class c = rem[static_cast<std::size_t>(k + y.degree())] * inv_lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= y.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * y.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial x, Polynomial y) {
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(long value)
    : num_(value == 0 ? Polynomial{} : Polynomial::constant(value)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const mpq_class& value)
    : num_(value == 0 ? Polynomial{} : Polynomial::constant(value)), den_(Polynomial::constant(1)) {}

RationalFunction RationalFunction::s_power(int k) {
  RationalFunction r(1);
  r.shift_ = k;
  return r;
}

RationalFunction RationalFunction::from_parts(Polynomial num, Polynomial den, int shift) {
  if (den.is_zero()) throw DivisionByZero();
  RationalFunction r;
  if (num.is_zero()) return r;
  int lo = num.low_order();
  num = num.shifted_down(lo);
  shift += lo;
  lo = den.low_order();
  den = den.shifted_down(lo);
  shift -= lo;
  if (den.degree() > 0) {
    Polynomial g = Polynomial::gcd(num, den);
    if (g.degree() > 0) {
      num = Polynomial::divmod(num, g).first;
      den = Polynomial::divmod(den, g).first;
    }
  }
  if (den.leading() != 1) {
    mpq_class inv = 1 / den.leading();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::times_s_power(int k) const {
  RationalFunction r = *this;
  if (!r.is_zero()) r.shift_ += k;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_parts(den_, num_, -shift_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  const int lo = std::min(shift_, y.shift_);
  if (den_.is_one() && y.den_.is_one()) {
    Polynomial sum = num_.shifted_up(shift_ - lo) + y.num_.shifted_up(y.shift_ - lo);
    if (sum.is_zero()) return *this = RationalFunction();
    int low = sum.low_order();
    num_ = sum.shifted_down(low);
    shift_ = lo + low;
    return *this;
  }
  if (den_ == y.den_) {
    Polynomial sum = num_.shifted_up(shift_ - lo) + y.num_.shifted_up(y.shift_ - lo);
    return *this = from_parts(std::move(sum), den_, lo);
  }
  Polynomial sum = (num_ * y.den_).shifted_up(shift_ - lo) + (y.num_ * den_).shifted_up(y.shift_ - lo);
  return *this = from_parts(std::move(sum), den_ * y.den_, lo);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& y) { return *this += -y; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& y) {
  if (is_zero()) return *this;
  if (y.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && y.den_.is_one()) {
    num_ = num_ * y.num_;
    shift_ += y.shift_;
    return *this;
  }
  return *this = from_parts(num_ * y.num_, den_ * y.den_, shift_ + y.shift_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& y) { return *this *= y.inverse(); }

mpq_class RationalFunction::specialize(const mpq_class& s0) const {
  if (is_zero()) return 0;
  mpq_class d = den_.evaluate(s0);
  if (d == 0) throw PoleError("denominator vanishes at s = " + s0.get_str());
  if (s0 == 0 && shift_ < 0) throw PoleError("negative power of s at s = 0");
  mpq_class p = 1;
  mpq_class base = shift_ >= 0 ? s0 : mpq_class(1 / s0);
  for (int i = 0; i < std::abs(shift_); ++i) p *= base;
  return p * num_.evaluate(s0) / d;
}

namespace {

// Renders sum_i c_i var^(e_i / divisor) with descending exponents.
std::string render_laurent(const Polynomial& p, int shift, const char* var, int divisor) {
  std::ostringstream out;
  bool first = true;
  const auto& cs = p.coefficients();
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
    const mpq_class& c = cs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int e = (i + shift) / divisor;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? "-" : "+");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (e != 1) out << '^' << e;
  }
  return first ? "0" : out.str();
}

bool all_even(const Polynomial& p, int shift) {
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0 && ((static_cast<int>(i) + shift) % 2) != 0) return false;
  return true;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  const bool in_q = all_even(num_, shift_) && all_even(den_, 0);
  const char* var = in_q ? "q" : "s";
  const int div = in_q ? 2 : 1;
  if (den_.is_one()) return render_laurent(num_, shift_, var, div);
  return "(" + render_laurent(num_, shift_, var, div) + ")/(" + render_laurent(den_, 0, var, div) + ")";
}

// ---------------------------------------------------------------------------
// Specialized

namespace {
thread_local const mpq_class* active_s0 = nullptr;
}

SpecializationScope::SpecializationScope(const mpq_class& s0) : s0_(s0), previous_(active_s0) {
  if (s0 == 0) throw std::invalid_argument("specialization point s0 must be nonzero");
  active_s0 = &s0_;
}

SpecializationScope::~SpecializationScope() { active_s0 = previous_; }

const mpq_class& SpecializationScope::current() {
  if (active_s0 == nullptr) throw std::logic_error("no active SpecializationScope on this thread");
  return *active_s0;
}

Specialized Specialized::s_power(int k) {
  const mpq_class& s0 = SpecializationScope::current();
  mpq_class base = k >= 0 ? s0 : mpq_class(1 / s0);
  mpq_class p = 1;
  for (int i = 0; i < std::abs(k); ++i) p *= base;
  return Specialized(std::move(p));
}

Specialized& Specialized::operator/=(const Specialized& y) {
  if (y.is_zero()) throw DivisionByZero();
  value_ /= y.value_;
  return *this;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace qsphere
