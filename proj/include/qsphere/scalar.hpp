#pragma once

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsphere {

/// Raised when dividing by an exactly-zero coefficient.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

/// Raised when specializing a rational function at one of its poles.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; there are never trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial constant(const mpq_class& c);
  static Polynomial monomial(const mpq_class& c, int exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const mpq_class& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  int low_order() const;
  /// Divides by s^k; requires the k lowest coefficients to vanish.
  Polynomial shifted_down(int k) const;
  Polynomial shifted_up(int k) const;
  Polynomial monic() const;
  Polynomial scaled(const mpq_class& c) const;
  mpq_class evaluate(const mpq_class& x) const;

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const = default;

  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& x, const Polynomial& y);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial x, Polynomial y);

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Exact element of Q(s), where s is the square root of the deformation
/// parameter q. Canonical form s^shift * num / den with num(0) != 0,
/// den(0) != 0, den monic and gcd(num, den) = 1. Zero is num = 0, shift = 0.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(long value);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const mpq_class& value);

  static RationalFunction s_power(int k);
  static RationalFunction from_parts(Polynomial num, Polynomial den, int shift = 0);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// True when the value is c * s^k for a rational c.
  bool is_single_term() const { return den_.is_one() && num_.degree() == 0; }

  int shift() const { return shift_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  RationalFunction inverse() const;
  RationalFunction times_s_power(int k) const;

  RationalFunction& operator+=(const RationalFunction& y);
  RationalFunction& operator-=(const RationalFunction& y);
  RationalFunction& operator*=(const RationalFunction& y);
  RationalFunction& operator/=(const RationalFunction& y);
  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& other) const = default;

  /// Exact value at s = s0. Throws PoleError when the denominator vanishes.
  mpq_class specialize(const mpq_class& s0) const;

  /// Renders in q when every exponent of s is even, otherwise in s.
  std::string to_string() const;

 private:
  int shift_ = 0;
  Polynomial num_;
  Polynomial den_;
};

using Scalar = RationalFunction;

/// Rational number standing in for a scalar with s fixed to a rational s0.
/// s0 comes from the innermost active SpecializationScope on this thread.
class Specialized {
 public:
  Specialized() = default;
  Specialized(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Specialized(mpq_class value) : value_(std::move(value)) {}

  static Specialized s_power(int k);

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_single_term() const { return true; }
  const mpq_class& value() const { return value_; }

  Specialized& operator+=(const Specialized& y) { value_ += y.value_; return *this; }
  Specialized& operator-=(const Specialized& y) { value_ -= y.value_; return *this; }
  Specialized& operator*=(const Specialized& y) { value_ *= y.value_; return *this; }
  Specialized& operator/=(const Specialized& y);
  friend Specialized operator+(Specialized x, const Specialized& y) { return x += y; }
  friend Specialized operator-(Specialized x, const Specialized& y) { return x -= y; }
  friend Specialized operator*(Specialized x, const Specialized& y) { return x *= y; }
  friend Specialized operator/(Specialized x, const Specialized& y) { return x /= y; }
  Specialized operator-() const { return Specialized(mpq_class(-value_)); }
  bool operator==(const Specialized& other) const { return value_ == other.value_; }

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

/// RAII guard fixing s = s0 for Specialized arithmetic on the current thread.
class SpecializationScope {
 public:
  explicit SpecializationScope(const mpq_class& s0);
  ~SpecializationScope();
  SpecializationScope(const SpecializationScope&) = delete;
  SpecializationScope& operator=(const SpecializationScope&) = delete;

  static const mpq_class& current();

 private:
  mpq_class s0_;
  const mpq_class* previous_;
};

template <class F>
concept CoefficientField = std::regular<F> && requires(const F& x, const F& y, int k) {
  { F::s_power(k) } -> std::same_as<F>;
  { x + y } -> std::same_as<F>;
  { x - y } -> std::same_as<F>;
  { x * y } -> std::same_as<F>;
  { x / y } -> std::same_as<F>;
  { -x } -> std::same_as<F>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.is_one() } -> std::convertible_to<bool>;
  { x.to_string() } -> std::convertible_to<std::string>;
};

template <CoefficientField F>
F q_power(int k) {
  return F::s_power(2 * k);
}

template <CoefficientField F>
F power(const F& base, int n) {
  if (n < 0) return F(1) / power(base, -n);
  F result(1);
  F b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

/// [n; base] = 1 + base + ... + base^(n-1) for n >= 0, and -base^n [-n; base] otherwise.
template <CoefficientField F>
F qint(int n, const F& base) {
  if (n >= 0) {
    F sum(0);
    F term(1);
    for (int i = 0; i < n; ++i) {
      sum = sum + term;
      term = term * base;
    }
    return sum;
  }
  return -(power(base, n) * qint(-n, base));
}

/// Symmetric q-integer [n]_q = (q^n - q^-n) / (q - q^-1).
template <CoefficientField F>
F qint_sym(int n) {
  if (n < 0) return -qint_sym<F>(-n);
  F sum(0);
  for (int i = 0; i < n; ++i) sum = sum + q_power<F>(n - 1 - 2 * i);
  return sum;
}

/// [2]_q, the most frequent constant in the geometry.
template <CoefficientField F>
F q2() {
  return qint_sym<F>(2);
}

inline mpq_class specialize(const Scalar& x, const mpq_class& s0) { return x.specialize(s0); }

/// Parses "p/q" or "p" into a rational; throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

}  // namespace qsphere
