#include "qstirling/scalar.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qstirling {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::invalid_argument("rational_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational b = base;
    long n = e;
    if (n < 0) {
        b = Rational(1) / b;
        n = -n;
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    r.canonicalize();
    return r;
}

Scalar::Scalar(long value) {
    if (value != 0) terms_[{0, 0}] = Rational(value);
}

Scalar::Scalar(const Rational& value) {
    if (value != 0) terms_[{0, 0}] = value;
}

Scalar Scalar::monomial(const Rational& c, int h_exp, int q_exp) {
    if (h_exp < 0) throw std::invalid_argument("Scalar: negative h exponent");
    Scalar s;
    if (c != 0) s.terms_[{h_exp, q_exp}] = c;
    return s;
}

void Scalar::add_term(int h_exp, int q_exp, const Rational& c) {
    if (h_exp < 0) throw std::invalid_argument("Scalar: negative h exponent");
    if (c == 0) return;
    Key k{h_exp, q_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.h, k.q, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.h, k.q, Rational(-c));
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.h + kb.h, ka.q + kb.q, Rational(ca * cb));
    return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    *this = *this * rhs;
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

Scalar& Scalar::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Scalar Scalar::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
    Scalar acc = Scalar::one();
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

Rational Scalar::eval(const RationalPoint& p) const {
    if (p.q0 == 0) throw std::invalid_argument("Scalar::eval: q0 must be nonzero");
    Rational out(0);
    for (const auto& [k, c] : terms_)
        out += c * rational_pow(p.h0, k.h) * rational_pow(p.q0, k.q);
    return out;
}

Scalar Scalar::substitute_q(const Rational& q0) const {
    if (q0 == 0) throw std::invalid_argument("Scalar::substitute_q: q0 must be nonzero");
    Scalar out;
    for (const auto& [k, c] : terms_) out.add_term(k.h, 0, Rational(c * rational_pow(q0, k.q)));
    return out;
}

Scalar Scalar::substitute_h(const Rational& h0) const {
    Scalar out;
    for (const auto& [k, c] : terms_) out.add_term(0, k.q, Rational(c * rational_pow(h0, k.h)));
    return out;
}

std::optional<Scalar> Scalar::divide_exact_qpoly(const Scalar& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (divisor.max_h_degree() != 0) return std::nullopt;
    if (is_zero()) return Scalar();

    // Divisor as a dense Laurent polynomial in q.
    int dlo = divisor.terms_.begin()->first.q;
    int dhi = divisor.terms_.rbegin()->first.q;
    std::vector<Rational> d(static_cast<size_t>(dhi - dlo + 1), Rational(0));
    for (const auto& [k, c] : divisor.terms_) d[static_cast<size_t>(k.q - dlo)] = c;

    // Divide each h-slice independently.
    std::map<int, std::map<int, Rational>> slices;
    for (const auto& [k, c] : terms_) slices[k.h][k.q] = c;

    Scalar out;
    for (const auto& [h_exp, slice] : slices) {
        int nlo = slice.begin()->first;
        int nhi = slice.rbegin()->first;
        std::vector<Rational> num(static_cast<size_t>(nhi - nlo + 1), Rational(0));
        for (const auto& [qe, c] : slice) num[static_cast<size_t>(qe - nlo)] = c;

        int qhi = nhi - dhi;  // top quotient exponent
        int qlo = nlo - dlo;
        if (qhi < qlo) return std::nullopt;
        std::vector<Rational> quot(static_cast<size_t>(qhi - qlo + 1), Rational(0));
        const Rational& lead = d.back();
        for (int e = qhi; e >= qlo; --e) {
            size_t top = static_cast<size_t>(e + dhi - nlo);
            Rational coef = num[top] / lead;
            quot[static_cast<size_t>(e - qlo)] = coef;
            if (coef == 0) continue;
            for (int i = dlo; i <= dhi; ++i)
                num[static_cast<size_t>(e + i - nlo)] -= coef * d[static_cast<size_t>(i - dlo)];
        }
        for (const Rational& rem : num)
            if (rem != 0) return std::nullopt;
        for (int e = qlo; e <= qhi; ++e) {
            const Rational& c = quot[static_cast<size_t>(e - qlo)];
            if (c != 0) out.add_term(h_exp, e, c);
        }
    }
    return out;
}

int Scalar::min_h_degree() const {
    if (is_zero()) return 0;
    return terms_.begin()->first.h;
}

int Scalar::max_h_degree() const {
    if (is_zero()) return 0;
    return terms_.rbegin()->first.h;
}

namespace {

void append_factor(std::ostream& os, bool& need_star, char var, int e) {
    if (e == 0) return;
    if (need_star) os << '*';
    os << var;
    if (e != 1) os << '^' << e;
    need_star = true;
}

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    // Display order: descending (h_exp, q_exp).
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Key& k = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        bool need_star = false;
        if (a != 1 || (k.h == 0 && k.q == 0)) {
            os << a.get_str();
            need_star = true;
        }
        append_factor(os, need_star, 'h', k.h);
        append_factor(os, need_star, 'q', k.q);
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

long parse_int(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("Scalar::parse: expected integer");
    return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    Scalar out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = p == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw std::invalid_argument("Scalar::parse: expected '+' or '-'");
        }
        first = false;
        c.skip_ws();
        Rational coef(1);
        bool saw_coef = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            long n = parse_int(c);
            coef = Rational(n);
            if (c.peek() == '/') {
                ++c.i;
                coef /= Rational(parse_int(c));
            }
            saw_coef = true;
        }
        int h_exp = 0, q_exp = 0;
        bool saw_var = false;
        while (true) {
            if (saw_coef || saw_var) {
                if (c.peek() != '*') break;
                ++c.i;
            }
            char v = c.peek();
            if (v != 'h' && v != 'q') {
                if (saw_coef || saw_var)
                    throw std::invalid_argument("Scalar::parse: expected variable after '*'");
                break;
            }
            ++c.i;
            int e = 1;
            if (c.peek() == '^') {
                ++c.i;
                e = static_cast<int>(parse_int(c));
            }
            if (v == 'h')
                h_exp += e;
            else
                q_exp += e;
            saw_var = true;
        }
        if (!saw_coef && !saw_var) throw std::invalid_argument("Scalar::parse: empty term");
        coef.canonicalize();
        out.add_term(h_exp, q_exp, Rational(sign * coef));
    }
    return out;
}

}  // namespace qstirling
