/// \file scalar.hpp
/// \brief Exact coefficient ring: Laurent polynomials in q whose coefficients
///        are polynomials in h over the rationals.
///
/// A Scalar is a finite sum of terms c * h^a * q^b with c a GMP rational,
/// a >= 0 and b any integer. Terms are kept in canonical form: no zero
/// coefficients, rationals fully reduced, map ordered by (h_exp, q_exp)
/// ascending. All operations are pure; Scalars are safe to share across
/// threads once constructed.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qstirling {

using Rational = mpq_class;

/// Exact exponentiation of a rational. Negative exponents require base != 0.
Rational rational_pow(const Rational& base, long e);

/// Parse "n" or "n/d" into a canonical rational.
Rational parse_rational(const std::string& text);

/// Evaluation point for numeric verification. q0 must be nonzero; s_real is
/// only consulted by the real-s rook enumeration.
struct RationalPoint {
    Rational q0 = 1;
    Rational h0 = 1;
    std::optional<double> s_real;
};

class Scalar {
public:
    struct Key {
        int h = 0;
        int q = 0;
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, Rational>;

    Scalar() = default;
    explicit Scalar(long value);
    explicit Scalar(const Rational& value);

    static Scalar one() { return Scalar(1); }
    static Scalar monomial(const Rational& c, int h_exp, int q_exp);
    static Scalar q_power(int e) { return monomial(1, 0, e); }
    static Scalar h_power(int e) { return monomial(1, e, 0); }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Scalar&) const = default;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    Scalar& operator*=(const Rational& c);
    friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }

    /// x^e for e >= 0, with x^0 = 1 for every x (including zero).
    Scalar pow(int e) const;

    /// Substitute q -> q0, h -> h0. Throws std::invalid_argument if q0 = 0
    /// (negative q-exponents would be undefined).
    Rational eval(const RationalPoint& p) const;

    /// Partial evaluation keeping the other variable symbolic.
    Scalar substitute_q(const Rational& q0) const;
    Scalar substitute_h(const Rational& h0) const;

    /// Exact division by a divisor that involves q only (h-degree zero).
    /// Returns nullopt when the division leaves a remainder.
    std::optional<Scalar> divide_exact_qpoly(const Scalar& divisor) const;

    int min_h_degree() const;
    int max_h_degree() const;

    /// Human-readable form, terms ordered by descending (h_exp, q_exp):
    /// "h + q", "2*q^2 - q^-1", "0".
    std::string str() const;
    /// Inverse of str(); accepts optional whitespace.
    static Scalar parse(const std::string& text);

    const TermMap& terms() const { return terms_; }

private:
    void add_term(int h_exp, int q_exp, const Rational& c);
    TermMap terms_;
};

}  // namespace qstirling
