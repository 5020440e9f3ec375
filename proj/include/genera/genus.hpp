#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "genera/bundle.hpp"
#include "genera/multipoly.hpp"
#include "genera/pontryagin.hpp"
#include "genera/qseries.hpp"

namespace genera {

/// Homogeneous weight-n polynomial in the abstract Pontryagin classes
/// p_1..p_n (weight p_i = i), stored as partition -> coefficient.
struct GenusPolynomial {
    int degree = 0;
    std::map<Partition, Rational> coeffs;

    GenusPolynomial() { coeffs.emplace(Partition{}, Rational(1)); }  // K_0 = 1
    GenusPolynomial(int degree_, std::map<Partition, Rational> coeffs_)
        : degree(degree_), coeffs(std::move(coeffs_)) {
        for (auto& [I, c] : coeffs)
            if (I.weight() != degree)
                throw std::invalid_argument("GenusPolynomial: non-homogeneous term " + I.to_string());
    }

    Rational coeff(const Partition& I) const {
        auto it = coeffs.find(I);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (auto& [I, c] : coeffs) {
            if (out.empty())
                out += c.is_negative() ? "-" : "";
            else
                out += c.is_negative() ? " - " : " + ";
            const Rational a = c.abs();
            std::string mono;
            const auto& parts = I.parts();
            for (size_t i = 0; i < parts.size();) {
                size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                if (!mono.empty()) mono += '*';
                mono += "p" + std::to_string(parts[i]);
                if (j - i > 1) mono += "^" + std::to_string(j - i);
                i = j;
            }
            if (mono.empty()) {
                out += a.to_string();
            } else {
                if (a != Rational(1)) { out += a.to_string(); out += '*'; }
                out += mono;
            }
        }
        return out;
    }
};

/// Hirzebruch's multiplicative-sequence construction: given an even
/// characteristic power series Q(x) with Q(0) = 1 (coefficients indexed by
/// powers of x, to order at least 2n), returns the weight-n polynomial K_n
/// with prod_j Q(x_j) = sum_n K_n(e_1..e_n) in the elementary symmetric
/// polynomials of the squared formal roots.  Uses exactly n formal roots.
inline GenusPolynomial multiplicative_sequence(const QSeries<Rational>& Q, int n) {
    if (n < 0) throw std::invalid_argument("multiplicative_sequence: negative weight");
    if (Q.order() < 2 * n)
        throw std::invalid_argument("multiplicative_sequence: insufficient series order");
    if (Q.coeff(0) != Rational(1))
        throw std::invalid_argument("multiplicative_sequence: Q(0) must be 1");
    for (int i = 1; i <= 2 * n; i += 2)
        if (!Q.coeff(i).is_zero())
            throw std::invalid_argument("multiplicative_sequence: Q must be even to order 2n");
    if (n == 0) return GenusPolynomial{};

    MultiPoly acc = MultiPoly::constant(n, Rational(1));
    for (int j = 0; j < n; ++j) {
        MultiPoly factor = MultiPoly::constant(n, Rational(1));
        MultiPoly y = MultiPoly::variable(n, j);
        MultiPoly ypow = y;
        for (int k = 1; k <= n; ++k) {
            factor += ypow * Q.coeff(2 * k);
            if (k < n) ypow = ypow.mul(y, n);
        }
        acc = acc.mul(factor, n);
    }
    return GenusPolynomial{n, acc.component(n).symmetric_reduce()};
}

/// Substitutes the manifold's Pontryagin numbers monomial by monomial.
/// Weight/dimension mismatch pairs to zero for degree reasons.
inline Rational evaluate_genus(const PontryaginData& M, const GenusPolynomial& g) {
    if (4 * g.degree != M.dim) return Rational(0);
    Rational acc(0);
    for (auto& [I, c] : g.coeffs) acc += c * M.number(I);
    return acc;
}

namespace detail {

inline Rational factorial(int k) {
    Rational r(1);
    for (int i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

}  // namespace detail

/// (x/2)/sinh(x/2) as an x-power series: the A-hat characteristic series.
inline QSeries<Rational> ahat_characteristic_series(int order) {
    QSeries<Rational> s(order);  // sinh(x/2)/(x/2)
    for (int k = 0; 2 * k <= order; ++k)
        s.set_coeff(2 * k, Rational(1) / (Rational(4).pow(k) * detail::factorial(2 * k + 1)));
    return s.reciprocal();
}

/// x/tanh(x) as an x-power series: the L (signature) characteristic series.
inline QSeries<Rational> l_characteristic_series(int order) {
    QSeries<Rational> cosh_series(order), sinh_over_x(order);
    for (int k = 0; 2 * k <= order; ++k) {
        cosh_series.set_coeff(2 * k, Rational(1) / detail::factorial(2 * k));
        sinh_over_x.set_coeff(2 * k, Rational(1) / detail::factorial(2 * k + 1));
    }
    return cosh_series * sinh_over_x.reciprocal();
}

inline GenusPolynomial ahat_genus(int n) {
    return multiplicative_sequence(ahat_characteristic_series(2 * n), n);
}
inline GenusPolynomial l_genus(int n) {
    return multiplicative_sequence(l_characteristic_series(2 * n), n);
}

namespace detail {

/// Expansion context for characteristic classes of a 2n-manifold over n
/// formal roots, truncated at total weight dim/4 in the squared roots.
struct CharContext {
    int n;
    int wcap;
    std::vector<MultiPoly> two_cosh;  // 2cosh(x_j) = sum_k 2 y_j^k/(2k)!
    std::map<std::pair<int, int>, MultiPoly> atom_cache;

    CharContext(int n_, int wcap_) : n(n_), wcap(wcap_) {
        two_cosh.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            MultiPoly c = MultiPoly::constant(n, Rational(2));
            MultiPoly y = MultiPoly::variable(n, j);
            MultiPoly ypow = y;
            for (int k = 1; k <= wcap; ++k) {
                c += ypow * (Rational(2) / factorial(2 * k));
                if (k < wcap) ypow = ypow.mul(y, wcap);
            }
            two_cosh.push_back(std::move(c));
        }
    }

    /// Chern character of Sym^k(T) or L^k(T), where T has Chern roots
    /// {+-x_j}: conjugate root pairs enter the generating functions as
    /// (1 +- t e^{x_j})(1 +- t e^{-x_j}) = 1 +- 2cosh(x_j) t + t^2.
    const MultiPoly& atom_ch(const BundleAtom& a) {
        const auto key = std::make_pair(a.kind == BundleAtom::Kind::Sym ? 0 : 1, a.power);
        auto it = atom_cache.find(key);
        if (it != atom_cache.end()) return it->second;

        const int p = a.power;
        std::vector<MultiPoly> t_coeffs(static_cast<size_t>(p) + 1, MultiPoly(n));
        t_coeffs[0] = MultiPoly::constant(n, Rational(1));
        if (a.kind == BundleAtom::Kind::Ext) {
            for (int j = 0; j < n; ++j) {
                std::vector<MultiPoly> next(t_coeffs.size(), MultiPoly(n));
                for (int d = 0; d <= p; ++d) {
                    next[static_cast<size_t>(d)] += t_coeffs[static_cast<size_t>(d)];
                    if (d + 1 <= p)
                        next[static_cast<size_t>(d + 1)] +=
                            t_coeffs[static_cast<size_t>(d)].mul(two_cosh[static_cast<size_t>(j)], wcap);
                    if (d + 2 <= p) next[static_cast<size_t>(d + 2)] += t_coeffs[static_cast<size_t>(d)];
                }
                t_coeffs = std::move(next);
            }
        } else {
            // prod_j (1 - 2cosh(x_j) t + t^2), then invert the t-series.
            std::vector<MultiPoly> prod(t_coeffs);
            for (int j = 0; j < n; ++j) {
                std::vector<MultiPoly> next(prod.size(), MultiPoly(n));
                for (int d = 0; d <= p; ++d) {
                    next[static_cast<size_t>(d)] += prod[static_cast<size_t>(d)];
                    if (d + 1 <= p)
                        next[static_cast<size_t>(d + 1)] -=
                            prod[static_cast<size_t>(d)].mul(two_cosh[static_cast<size_t>(j)], wcap);
                    if (d + 2 <= p) next[static_cast<size_t>(d + 2)] += prod[static_cast<size_t>(d)];
                }
                prod = std::move(next);
            }
            for (int k = 1; k <= p; ++k) {
                MultiPoly acc(n);
                for (int j = 1; j <= k; ++j)
                    acc += prod[static_cast<size_t>(j)].mul(t_coeffs[static_cast<size_t>(k - j)], wcap);
                t_coeffs[static_cast<size_t>(k)] = MultiPoly(n) - acc;
            }
        }
        return atom_cache.emplace(key, std::move(t_coeffs[static_cast<size_t>(p)])).first->second;
    }

    MultiPoly expr_ch(const BundleExpr& W) {
        MultiPoly acc(n);
        for (auto& [mono, c] : W.terms()) {
            MultiPoly t = MultiPoly::constant(n, Rational(1));
            for (const BundleAtom& a : mono) t = t.mul(atom_ch(a), wcap);
            acc += t * Rational(c);
        }
        return acc;
    }

    /// prod_j x_j coth(x_j/2): the index density of the signature operator,
    /// normalized so the trivial twist reproduces the L-genus.
    MultiPoly signature_density() const {
        // x coth(x/2) = sum_k 2 l_k x^{2k} / 4^k with x/tanh(x) = sum l_k x^{2k}
        const QSeries<Rational> l = l_characteristic_series(2 * wcap);
        MultiPoly acc = MultiPoly::constant(n, Rational(1));
        for (int j = 0; j < n; ++j) {
            MultiPoly factor = MultiPoly::constant(n, Rational(2));
            MultiPoly y = MultiPoly::variable(n, j);
            MultiPoly ypow = y;
            for (int k = 1; k <= wcap; ++k) {
                factor += ypow * (Rational(2) * l.coeff(2 * k) / Rational(4).pow(k));
                if (k < wcap) ypow = ypow.mul(y, wcap);
            }
            acc = acc.mul(factor, wcap);
        }
        return acc;
    }
};

}  // namespace detail

/// Index of the signature operator twisted by W, evaluated against the
/// manifold's Pontryagin numbers: the degree-dim component of
/// ch(W) * prod_j x_j coth(x_j/2) reduced to Pontryagin monomials.
/// Dimensions not divisible by 4 have no matching monomials and give 0.
inline Rational twisted_signature(const PontryaginData& M, const BundleExpr& W) {
    if (M.dim < 0 || M.dim % 2 != 0)
        throw std::invalid_argument("twisted_signature: dimension must be even");
    if (M.dim % 4 != 0) return Rational(0);
    const int n = M.dim / 2;
    const int wcap = M.dim / 4;
    detail::CharContext ctx(n, wcap);
    const MultiPoly integrand = ctx.expr_ch(W).mul(ctx.signature_density(), wcap).component(wcap);
    Rational acc(0);
    for (auto& [I, c] : integrand.symmetric_reduce()) acc += c * M.number(I);
    return acc;
}

/// Elliptic genus Phi(M) = sum_i sign(M, R_i) q^i as an exact q-series.
/// The constant term is the signature.
inline QSeries<Rational> elliptic_genus(const PontryaginData& M, int order) {
    const std::vector<BundleExpr> r = expand_r_series(order);
    QSeries<Rational> out(order);
    for (int i = 0; i <= order; ++i)
        out.set_coeff(i, twisted_signature(M, r[static_cast<size_t>(i)]));
    return out;
}

}  // namespace genera
