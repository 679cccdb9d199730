#pragma once

#include "qsphere/random.hpp"
#include "qsphere/scalar.hpp"

#include <gmpxx.h>

namespace qtest {

using qsphere::Scalar;

inline Scalar q() { return Scalar::s_power(2); }
inline Scalar qinv() { return Scalar::s_power(-2); }
inline Scalar qn(int k) { return Scalar::s_power(2 * k); }
inline Scalar two_q() { return qn(1) + qn(-1); }

/// Evaluation points for the specialization oracle.
inline const mpq_class kPoints[] = {mpq_class(3, 2), mpq_class(-5, 7), mpq_class(2), mpq_class(7, 3)};

}  // namespace qtest
