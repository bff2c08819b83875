#include "qstirling/qfun.hpp"

#include <cmath>
#include <vector>

namespace qstirling {

Scalar q_int_pow(long x, int base_exp) {
    if (base_exp == 0) return Scalar(x);
    Scalar out;
    if (x >= 0) {
        for (long i = 0; i < x; ++i) out += Scalar::q_power(base_exp * static_cast<int>(i));
    } else {
        for (long i = 1; i <= -x; ++i) out -= Scalar::q_power(-base_exp * static_cast<int>(i));
    }
    return out;
}

Scalar q_binomial(int n, int k, int base_exp) {
    if (k < 0 || k > n) return Scalar();
    // [i,j] = [i-1,j-1] + q^{e*j} [i-1,j]; row i needs only columns <= min(i,k).
    std::vector<Scalar> row(static_cast<size_t>(k) + 1);
    row[0] = Scalar::one();
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            Scalar upper = row[static_cast<size_t>(j)] * Scalar::q_power(base_exp * j);
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j) - 1] + upper;
        }
    }
    return row[static_cast<size_t>(k)];
}

Scalar q_falling(long base_times, int j, int step) {
    if (j > 0 && step == 0) throw std::invalid_argument("q_falling: zero step");
    Scalar out = Scalar::one();
    for (int i = 0; i < j; ++i) out *= q_int_pow(base_times - static_cast<long>(i) * step, 1);
    return out;
}

Scalar q_step_factorial(int k, int step) {
    if (k > 0 && step == 0) throw std::invalid_argument("q_step_factorial: zero step");
    Scalar out = Scalar::one();
    for (int i = 1; i <= k; ++i) out *= q_int_pow(static_cast<long>(i) * step, 1);
    return out;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long i = 0; i < k; ++i) {
        out *= Rational(n - i);
        out /= Rational(i + 1);
    }
    return out;
}

double q_int_real(double x, double q0) {
    if (q0 <= 0) throw std::invalid_argument("q_int_real: q0 must be positive");
    if (q0 == 1.0) return x;
    return (std::pow(q0, x) - 1.0) / (q0 - 1.0);
}

}  // namespace qstirling
