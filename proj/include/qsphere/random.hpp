#pragma once

#include "qsphere/hopf.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qsphere {

/// Seeded generator for test inputs. Draws are reduced from raw 64-bit
/// output by plain modulo so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Small nonzero Laurent polynomial in s with even exponents (a polynomial in q, q^-1).
  Scalar scalar();
  /// Small nonzero rational function in q, occasionally with a nontrivial denominator.
  Scalar rational_scalar();

  std::vector<Gen> word(int max_length);
  Monomial monomial(int max_length);
  /// Sum of up to `terms` random normalized words.
  AlgebraElement<Scalar> element(int terms, int max_length);
  /// Homogeneous element of the given degree.
  AlgebraElement<Scalar> homogeneous(int degree, int terms, int max_length);
  /// Random degree-zero element, i.e. a function on the sphere.
  AlgebraElement<Scalar> sphere_element(int terms, int max_length) { return homogeneous(0, terms, max_length); }

 private:
  std::mt19937_64 engine_;
};

/// Converts exact coefficients into the target field.
template <CoefficientField F>
F from_scalar(const Scalar& x);

template <>
inline Scalar from_scalar<Scalar>(const Scalar& x) {
  return x;
}

template <>
inline Specialized from_scalar<Specialized>(const Scalar& x) {
  return Specialized(x.specialize(SpecializationScope::current()));
}

template <CoefficientField F>
AlgebraElement<F> convert(const AlgebraElement<Scalar>& x) {
  AlgebraElement<F> r;
  for (const auto& [m, c] : x.terms()) r.add_term(m, from_scalar<F>(c));
  return r;
}

}  // namespace qsphere
