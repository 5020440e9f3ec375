#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "genera/laurent.hpp"

namespace genera {

/// Power series in q truncated at a fixed order N, with coefficients in any
/// exact coefficient ring C (Rational, LaurentPoly, RationalFunc, ...).
/// C must default-construct to zero, construct from int, and support
/// +, -, * and ==.  Arithmetic between series of different orders truncates
/// to the smaller order.
template <typename C>
class QSeries {
public:
    explicit QSeries(int order) : c_(static_cast<size_t>(check_order(order)) + 1) {}

    QSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
    }

    static QSeries constant(const C& value, int order) {
        QSeries s(order);
        s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const C& coeff(int i) const {
        check_index(i);
        return c_[static_cast<size_t>(i)];
    }
    void set_coeff(int i, C value) {
        check_index(i);
        c_[static_cast<size_t>(i)] = std::move(value);
    }

    QSeries truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::invalid_argument("QSeries: bad truncation order");
        QSeries s(new_order);
        for (int i = 0; i <= new_order; ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return s;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            r.c_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j)
                r.c_[static_cast<size_t>(i + j)] = r.c_[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend QSeries operator*(const QSeries& a, const C& s) {
        QSeries r = a;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    /// Multiplicative inverse, valid over any coefficient ring when the
    /// constant term is 1.
    QSeries reciprocal() const {
        if (!(c_[0] == C(1)))
            throw std::domain_error("QSeries: reciprocal needs constant term 1");
        QSeries r(order());
        r.c_[0] = C(1);
        for (int k = 1; k <= order(); ++k) {
            C acc{};
            for (int j = 1; j <= k; ++j)
                acc = acc + coeff(j) * r.c_[static_cast<size_t>(k - j)];
            r.c_[static_cast<size_t>(k)] = C{} - acc;
        }
        return r;
    }

    template <typename Fmt>
    std::string to_string(Fmt&& coeff_to_string) const {
        std::string out;
        for (int i = 0; i <= order(); ++i) {
            if (i > 0) out += " + ";
            out += coeff_to_string(c_[static_cast<size_t>(i)]);
            if (i == 1) out += "*q";
            if (i > 1) { out += "*q^"; out += std::to_string(i); }
        }
        return out;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
        return order;
    }
    void check_index(int i) const {
        if (i < 0 || i > order()) throw std::out_of_range("QSeries: coefficient index");
    }

    std::vector<C> c_;
};

/// One factor (1 + sign * q^q_power * mu^mu_power)^(+-1) of a character-level
/// generating function.
struct GeometricFactor {
    int sign = 1;       // +1 or -1
    int q_power = 0;    // exponent of q, >= 1 when inverted
    int mu_power = 0;   // exponent of mu, any integer
    bool inverted = false;
};

/// Truncated expansion of a GeometricFactor.  Inverted factors expand by the
/// geometric series, which exists as a q-series only for q_power >= 1.
inline QSeries<LaurentPoly> expand_geometric(const GeometricFactor& f, int order) {
    if (f.sign != 1 && f.sign != -1)
        throw std::invalid_argument("expand_geometric: sign must be +1 or -1");
    if (f.q_power < 0)
        throw std::invalid_argument("expand_geometric: negative q power");
    QSeries<LaurentPoly> s(order);
    s.set_coeff(0, LaurentPoly(1));
    if (!f.inverted) {
        const LaurentPoly t = LaurentPoly::term(Rational(f.sign), f.mu_power);
        if (f.q_power == 0)
            s.set_coeff(0, LaurentPoly(1) + t);
        else if (f.q_power <= order)
            s.set_coeff(f.q_power, t);
        return s;
    }
    if (f.q_power == 0)
        throw std::domain_error("expand_geometric: (1 +- mu^b)^-1 is not a q-series");
    // (1 + s*q^a*mu^b)^-1 = sum_k (-s)^k q^{ka} mu^{kb}
    for (int k = 1; k * f.q_power <= order; ++k) {
        const Rational c = (f.sign == 1 && k % 2 == 1) ? Rational(-1) : Rational(1);
        s.set_coeff(k * f.q_power, LaurentPoly::term(c, k * f.mu_power));
    }
    return s;
}

}  // namespace genera
