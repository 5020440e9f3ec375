#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

/// Laurent polynomial in one character variable mu, with exact rational
/// coefficients and finite support.  Zero coefficients are never stored.
///
/// Convention used throughout the library: the weight-m character t^m of a
/// circle representation is the monomial mu^{2m} (i.e. lambda = mu^2), so
/// lambda-integral objects have even support while half-integral ones
/// (A-hat localization factors) may use odd powers of mu.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Rational& c) {
        if (!c.is_zero()) c_[0] = c;
    }

    /// c * mu^exp
    static LaurentPoly term(const Rational& c, int exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[exp] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    /// Smallest exponent with a nonzero coefficient; zero polynomial has none.
    int valuation() const {
        if (is_zero()) throw std::logic_error("LaurentPoly: valuation of zero");
        return c_.begin()->first;
    }
    int degree() const {
        if (is_zero()) throw std::logic_error("LaurentPoly: degree of zero");
        return c_.rbegin()->first;
    }

    Rational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& terms() const { return c_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& [e, c] : c_) c *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiplies by mu^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    /// mu -> mu^-1
    LaurentPoly inverted_variable() const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /// mu -> mu^k (k != 0)
    LaurentPoly substituted_power(int k) const {
        if (k == 0) throw std::invalid_argument("LaurentPoly: mu -> mu^0 substitution");
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e * k] = c;
        return r;
    }

    bool is_symmetric() const { return *this == inverted_variable(); }

    bool has_even_support() const {
        for (auto& [e, c] : c_)
            if (e % 2 != 0) return false;
        return true;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("LaurentPoly: negative power");
        LaurentPoly r(1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    Rational evaluate(const Rational& mu) const {
        if (mu.is_zero() && !is_zero() && valuation() < 0)
            throw std::domain_error("LaurentPoly: evaluation at mu = 0 with negative powers");
        Rational acc(0);
        for (auto& [e, c] : c_) acc += c * mu.pow(e);
        return acc;
    }

    /// Evaluates at a value of lambda = mu^2; requires even support.
    Rational evaluate_lambda(const Rational& lambda) const {
        Rational acc(0);
        for (auto& [e, c] : c_) {
            if (e % 2 != 0)
                throw std::domain_error("LaurentPoly: odd power of mu is not lambda-integral");
            acc += c * lambda.pow(e / 2);
        }
        return acc;
    }

    /// Rendered with descending exponents, e.g. "2*mu^2 - 2 + mu^-4".
    /// `exponent_divisor` rescales printed exponents (2 prints in t or lambda).
    std::string to_string(const std::string& var = "mu", int exponent_divisor = 1) const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (e % exponent_divisor != 0)
                throw std::logic_error("LaurentPoly: exponent not divisible for printing");
            const int de = e / exponent_divisor;
            const Rational a = c.abs();
            if (out.empty())
                out += c.is_negative() ? "-" : "";
            else
                out += c.is_negative() ? " - " : " + ";
            const bool unit_coeff = (a == Rational(1));
            if (de == 0) {
                out += a.to_string();
            } else {
                if (!unit_coeff) { out += a.to_string(); out += '*'; }
                out += var;
                if (de != 1) { out += '^'; out += std::to_string(de); }
            }
        }
        return out;
    }

private:
    void add_term(int e, const Rational& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!c.is_zero()) c_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::map<int, Rational> c_;
};

namespace detail {

/// Dense ordinary polynomial over Q, used for the Euclidean algorithm behind
/// RationalFunc canonicalization and exact division.  Invariant: no trailing
/// zero coefficients; the zero polynomial is the empty vector.
struct DensePoly {
    std::vector<Rational> c;  // c[i] is the coefficient of mu^i

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    static DensePoly from_laurent(const LaurentPoly& p) {
        DensePoly d;
        if (p.is_zero()) return d;
        if (p.valuation() < 0)
            throw std::logic_error("DensePoly: negative exponent");
        d.c.assign(static_cast<size_t>(p.degree()) + 1, Rational(0));
        for (auto& [e, coeff] : p.terms()) d.c[static_cast<size_t>(e)] = coeff;
        return d;
    }

    LaurentPoly to_laurent() const {
        LaurentPoly p;
        for (size_t i = 0; i < c.size(); ++i)
            p += LaurentPoly::term(c[i], static_cast<int>(i));
        return p;
    }
};

inline DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

inline DensePoly operator-(DensePoly a, const DensePoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Rational(0));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.trim();
    return a;
}

/// Division with remainder in Q[mu].
inline void divmod(const DensePoly& a, const DensePoly& b, DensePoly& q, DensePoly& r) {
    if (b.is_zero()) throw std::domain_error("DensePoly: division by zero polynomial");
    q = DensePoly{};
    r = a;
    if (r.is_zero() || r.degree() < b.degree()) return;
    q.c.assign(static_cast<size_t>(r.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.c.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const Rational f = r.c.back() / lead;
        q.c[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[static_cast<size_t>(shift) + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

inline DensePoly exact_div(const DensePoly& a, const DensePoly& b) {
    DensePoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("DensePoly: division was not exact");
    return q;
}

inline DensePoly monic(DensePoly p) {
    if (p.is_zero()) return p;
    const Rational lead = p.c.back();
    for (auto& x : p.c) x /= lead;
    return p;
}

/// Monic gcd in Q[mu] via the Euclidean algorithm.
inline DensePoly gcd_monic(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        DensePoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

}  // namespace detail

}  // namespace genera
