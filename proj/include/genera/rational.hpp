#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genera {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.  Every operation in this library is exact; there
/// is no floating point anywhere.
///
/// Serialized form is the decimal string "a/b", with "/b" omitted for
/// integers ("3", "-1/8").
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        BigInt n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        BigInt g = boost::multiprecision::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        v_ = Q(n, d);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    bool is_negative() const { return v_ < 0; }

    Rational operator-() const { return Rational(Q(-v_)); }

    Rational& operator+=(const Rational& r) { v_ += r.v_; return *this; }
    Rational& operator-=(const Rational& r) { v_ -= r.v_; return *this; }
    Rational& operator*=(const Rational& r) { v_ *= r.v_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= r.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// x^e for any integer e; e < 0 inverts (error on zero base).
    Rational pow(int e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero())
                throw std::domain_error("Rational: negative power of zero");
            return Rational(1) / pow(-e);
        }
        const unsigned u = static_cast<unsigned>(e);
        return Rational(boost::multiprecision::pow(num(), u),
                        boost::multiprecision::pow(den(), u));
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    std::string to_string() const {
        std::string s = num().str();
        if (!is_integer()) {
            s += '/';
            s += den().str();
        }
        return s;
    }

    /// Parses "a" or "a/b" (b a positive integer). Throws std::invalid_argument
    /// on anything else; never accepts floating-point notation.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text), BigInt(1));
        BigInt n = parse_int(text.substr(0, slash));
        std::string_view d = text.substr(slash + 1);
        if (d.empty() || d[0] == '-')
            throw std::invalid_argument("malformed rational: \"" + std::string(text) + '"');
        return Rational(n, parse_int(d));
    }

private:
    using Q = boost::multiprecision::cpp_rational;

    explicit Rational(Q v) : v_(std::move(v)) {}

    static BigInt parse_int(std::string_view s) {
        bool neg = !s.empty() && s[0] == '-';
        std::string_view digits = neg ? s.substr(1) : s;
        if (digits.empty())
            throw std::invalid_argument("malformed rational: \"" + std::string(s) + '"');
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed rational: \"" + std::string(s) + '"');
        BigInt v{std::string(digits)};
        return neg ? BigInt(-v) : v;
    }

    Q v_;
};

}  // namespace genera
