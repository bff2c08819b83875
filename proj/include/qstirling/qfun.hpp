/// \file qfun.hpp
/// \brief q-combinatorial primitives over the Scalar ring: q-integers in an
///        arbitrary integer power base, Gaussian binomials, step-falling
///        factorials and their factorials.

#pragma once

#include "qstirling/scalar.hpp"

namespace qstirling {

/// [x]_{q^e} as a Laurent polynomial. For x >= 0 this is
/// 1 + q^e + ... + q^{e(x-1)}; for x < 0 it is -(q^{-e} + ... + q^{ex}).
/// Base exponent e = 0 uses the limit convention [x]_{q^0} = x.
Scalar q_int_pow(long x, int base_exp);

/// [x]_q, or [x]_{1/q} when inverse_base is set.
inline Scalar q_int(long x, bool inverse_base = false) {
    return q_int_pow(x, inverse_base ? -1 : 1);
}

/// Gaussian binomial in base q^{base_exp}, via the q-Pascal recurrence.
/// Returns zero when k < 0 or k > n; base_exp = 0 degenerates to the
/// ordinary binomial coefficient.
Scalar q_binomial(int n, int k, int base_exp = 1);

/// prod_{i=0}^{j-1} [base_times - i*step]_q. This is the q-falling factorial
/// [r]^{(j)}_{q,step} with base_times = r*step so that all q-exponents stay
/// integral. step must be nonzero when j > 0.
Scalar q_falling(long base_times, int j, int step);

/// [k]_{q,step}! = prod_{i=1}^{k} [i*step]_q.
Scalar q_step_factorial(int k, int step);

/// Ordinary binomial coefficient as an exact rational (0 outside 0<=k<=n).
Rational binomial(long n, long k);

/// Real-valued q-integer (q0^x - 1)/(q0 - 1), with the limit [x]_1 = x.
/// q0 must be positive so that q0^x is defined for real x.
double q_int_real(double x, double q0);

}  // namespace qstirling
