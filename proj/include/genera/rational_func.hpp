#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "genera/laurent.hpp"

namespace genera {

/// Rational function in mu, held in canonical form:
///   - numerator and denominator are ordinary polynomials (no negative
///     exponents; any shared power of mu is cancelled),
///   - they are coprime in Q[mu],
///   - the denominator is monic,
///   - zero is 0/1.
/// Canonical form makes equality and the constancy test purely syntactic,
/// with no numerical sampling involved.  Canonicalization happens in the
/// constructor, so every reachable value is canonical and re-canonicalizing
/// is the identity.
class RationalFunc {
public:
    RationalFunc() : num_(0), den_(1) {}
    RationalFunc(int c) : num_(c), den_(1) {}
    RationalFunc(const Rational& c) : num_(c), den_(1) {}
    RationalFunc(const LaurentPoly& numerator) : num_(numerator), den_(1) { canonicalize(); }
    RationalFunc(LaurentPoly numerator, LaurentPoly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        canonicalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Returns the value when the function is a constant, i.e. the canonical
    /// form is c/1.  A nonempty result is exact; an empty one means the
    /// canonical form itself is the non-constancy witness.
    std::optional<Rational> as_constant() const {
        if (num_.is_zero()) return Rational(0);
        if (den_ == LaurentPoly(1) && num_.degree() == 0 && num_.valuation() == 0)
            return num_.coeff(0);
        return std::nullopt;
    }

    RationalFunc operator-() const { return RationalFunc(from_canonical{}, -num_, den_); }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunc: division by zero");
        return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

    Rational evaluate(const Rational& mu) const {
        const Rational d = den_.evaluate(mu);
        if (d.is_zero())
            throw std::domain_error("RationalFunc: evaluation at a pole");
        return num_.evaluate(mu) / d;
    }

    /// Evaluates at lambda = mu^2; both halves must be lambda-integral.
    Rational evaluate_lambda(const Rational& lambda) const {
        const Rational d = den_.evaluate_lambda(lambda);
        if (d.is_zero())
            throw std::domain_error("RationalFunc: evaluation at a pole");
        return num_.evaluate_lambda(lambda) / d;
    }

    bool is_lambda_pole(const Rational& lambda) const {
        return den_.evaluate_lambda(lambda).is_zero();
    }

    /// True when the function tends to 0 as mu -> infinity, i.e.
    /// deg(num) < deg(den) in canonical form.
    bool vanishes_at_infinity() const {
        if (num_.is_zero()) return true;
        return num_.degree() < den_.degree();
    }

    bool is_lambda_integral() const {
        return num_.has_even_support() && den_.has_even_support();
    }

    /// "num/den"; printed in lambda when both halves are lambda-integral,
    /// in mu otherwise.  A denominator of 1 is suppressed.
    std::string to_string() const {
        const bool in_lambda = is_lambda_integral();
        const std::string var = in_lambda ? "lambda" : "mu";
        const int div = in_lambda ? 2 : 1;
        if (den_ == LaurentPoly(1)) return num_.to_string(var, div);
        return "(" + num_.to_string(var, div) + ")/(" + den_.to_string(var, div) + ")";
    }

private:
    struct from_canonical {};
    RationalFunc(from_canonical, LaurentPoly n, LaurentPoly d)
        : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (den_.is_zero())
            throw std::domain_error("RationalFunc: zero denominator");
        if (num_.is_zero()) {
            num_ = LaurentPoly(0);
            den_ = LaurentPoly(1);
            return;
        }
        // Clear negative exponents by the shared shift, then cancel the
        // polynomial gcd (which also removes any remaining common mu power).
        const int shift = std::min(num_.valuation(), den_.valuation());
        detail::DensePoly n = detail::DensePoly::from_laurent(num_.shifted(-shift));
        detail::DensePoly d = detail::DensePoly::from_laurent(den_.shifted(-shift));
        detail::DensePoly g = detail::gcd_monic(n, d);
        if (g.degree() > 0) {
            n = detail::exact_div(n, g);
            d = detail::exact_div(d, g);
        }
        const Rational lead = d.c.back();
        for (auto& x : n.c) x /= lead;
        for (auto& x : d.c) x /= lead;
        num_ = n.to_laurent();
        den_ = d.to_laurent();
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace genera
