/// \file word.hpp
/// \brief Words over the alphabet {U, V} and their normally ordered form.

#pragma once

#include "qstirling/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qstirling {

/// A word in the operators U, V, stored most-significant (leftmost) first.
struct Word {
    std::string letters;  // characters 'U' and 'V' only

    /// Parse caret syntax such as "V^2U^3V^3U^2" or plain "UVVU".
    static Word parse(const std::string& text);

    /// H_{r,s} = V^{r_n} U^{s_n} ... V^{r_1} U^{s_1}. Index 0 of each vector
    /// is the rightmost block (r_1, s_1).
    static Word from_shape(const std::vector<int>& r_vec, const std::vector<int>& s_vec);

    /// (VU)^n.
    static Word staircase(int n);

    size_t size() const { return letters.size(); }
    int count(char letter) const;

    /// Caret form with maximal runs collapsed, e.g. "V^2U^3V^3U^2".
    std::string str() const;
};

/// Exponent shape (r_1..r_n, s_1..s_n) of a word H_{r,s}; index 0 holds the
/// rightmost block.
struct WordShape {
    std::vector<int> r;
    std::vector<int> s;

    int blocks() const { return static_cast<int>(r.size()); }
    long r_total() const;
    long s_total() const;
    Word word() const { return Word::from_shape(r, s); }
    static WordShape staircase(int n);
};

/// Normally ordered form: a finite Scalar-weighted sum of V^v U^u monomials.
struct NormalForm {
    int s_param = 0;
    std::map<std::pair<int, int>, Scalar> coeffs;  // (v_exp, u_exp) -> coefficient

    void add(int v_exp, int u_exp, const Scalar& c);
    const Scalar& at(int v_exp, int u_exp) const;  // zero when absent

    /// Coefficient map k -> S^{r,s}[k] read off the u-exponents.
    std::map<int, Scalar> by_u_exponent() const;

    bool operator==(const NormalForm&) const = default;

    /// Terms ordered by descending v-exponent: "h*V^2 + q*V*U".
    std::string str() const;
};

}  // namespace qstirling
