#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "genera/qseries.hpp"

namespace genera {

/// One bundle construction applied to the complexified tangent symbol T:
/// Sym^k(T) or the exterior power L^k(T).  Power 1 of either kind is T
/// itself and is stored canonically as {Sym, 1}.
struct BundleAtom {
    enum class Kind { Sym, Ext };

    Kind kind = Kind::Sym;
    int power = 1;

    BundleAtom() = default;
    BundleAtom(Kind k, int p) : kind(p == 1 ? Kind::Sym : k), power(p) {
        if (p < 1) throw std::invalid_argument("BundleAtom: power must be >= 1");
    }

    bool is_tangent() const { return power == 1; }

    // Sort key: Sym powers, then exterior powers, then bare T; higher powers first.
    friend bool operator<(const BundleAtom& a, const BundleAtom& b) {
        auto rank = [](const BundleAtom& x) { return x.is_tangent() ? 2 : (x.kind == Kind::Sym ? 0 : 1); };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        return a.power > b.power;
    }
    friend bool operator==(const BundleAtom& a, const BundleAtom& b) {
        return a.kind == b.kind && a.power == b.power;
    }

    std::string to_string() const {
        if (is_tangent()) return "T";
        return (kind == Kind::Sym ? "Sym" : "L") + std::to_string(power) + "(T)";
    }
};

/// Product of atoms, kept sorted; the empty product is the unit bundle.
using BundleMonomial = std::vector<BundleAtom>;

/// Integer-linear combination of bundle monomials in normal form: atoms
/// sorted, no zero coefficients, and no monomial containing T twice --
/// T (x) T is rewritten as Sym2(T) + L2(T) at multiplication time, which is
/// what keeps the normal form finite and canonical.
class BundleExpr {
public:
    BundleExpr() = default;
    BundleExpr(int c) {
        if (c != 0) terms_[BundleMonomial{}] = c;
    }

    static BundleExpr unit() { return BundleExpr(1); }
    static BundleExpr tangent() { return atom(BundleAtom(BundleAtom::Kind::Sym, 1)); }
    static BundleExpr sym_power(int k) { return atom(BundleAtom(BundleAtom::Kind::Sym, k)); }
    static BundleExpr ext_power(int k) { return atom(BundleAtom(BundleAtom::Kind::Ext, k)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BundleMonomial, std::int64_t>& terms() const { return terms_; }

    BundleExpr& operator+=(const BundleExpr& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BundleExpr& operator-=(const BundleExpr& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }
    friend BundleExpr operator-(BundleExpr a, const BundleExpr& b) { return a -= b; }

    friend BundleExpr operator*(const BundleExpr& a, std::int64_t s) {
        BundleExpr r;
        if (s == 0) return r;
        for (auto& [m, c] : a.terms_) r.terms_[m] = c * s;
        return r;
    }
    friend BundleExpr operator*(std::int64_t s, const BundleExpr& a) { return a * s; }

    friend BundleExpr operator*(const BundleExpr& a, const BundleExpr& b) {
        BundleExpr r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_monomial_product(ma, mb, ca * cb);
        return r;
    }
    BundleExpr& operator*=(const BundleExpr& o) { return *this = *this * o; }

    friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BundleExpr& a, const BundleExpr& b) { return !(a == b); }

    /// Virtual rank once T has complex rank `dim` (a 2n-manifold's
    /// complexified tangent bundle has rank 2n).
    std::int64_t rank(int dim) const {
        std::int64_t acc = 0;
        for (auto& [m, c] : terms_) {
            std::int64_t r = 1;
            for (const BundleAtom& a : m) r *= atom_rank(a, dim);
            acc += c * r;
        }
        return acc;
    }

    /// "2*Sym2(T) + 2*L2(T) + 2*T"; the unit monomial prints as "1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            const std::int64_t a = c < 0 ? -c : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            std::string mono;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) mono += '*';
                mono += m[i].to_string();
            }
            if (mono.empty()) {
                out += std::to_string(a);
            } else {
                if (a != 1) { out += std::to_string(a); out += '*'; }
                out += mono;
            }
        }
        return out;
    }

private:
    static BundleExpr atom(BundleAtom a) {
        BundleExpr e;
        e.terms_[BundleMonomial{a}] = 1;
        return e;
    }

    static std::int64_t atom_rank(const BundleAtom& a, int dim) {
        // binomial ranks of Sym^k / L^k of a rank-`dim` bundle
        auto binom = [](std::int64_t n, std::int64_t k) {
            if (k < 0 || k > n) return static_cast<std::int64_t>(0);
            std::int64_t r = 1;
            for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        if (a.kind == BundleAtom::Kind::Sym) return binom(dim + a.power - 1, a.power);
        return binom(dim, a.power);
    }

    void add_term(const BundleMonomial& m, std::int64_t c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_[m] = c;
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Appends ma*mb, rewriting every T (x) T pair via Sym2 + L2 so no
    /// monomial keeps more than one bare T.
    void add_monomial_product(const BundleMonomial& ma, const BundleMonomial& mb,
                              std::int64_t c) {
        BundleMonomial merged;
        merged.reserve(ma.size() + mb.size());
        merged.insert(merged.end(), ma.begin(), ma.end());
        merged.insert(merged.end(), mb.begin(), mb.end());
        std::sort(merged.begin(), merged.end());
        fold_tangent_squares(std::move(merged), c);
    }

    void fold_tangent_squares(BundleMonomial m, std::int64_t c) {
        int tangents = 0;
        for (const BundleAtom& a : m) tangents += a.is_tangent() ? 1 : 0;
        if (tangents < 2) {
            add_term(m, c);
            return;
        }
        BundleMonomial rest;
        int removed = 0;
        for (const BundleAtom& a : m) {
            if (a.is_tangent() && removed < 2) { ++removed; continue; }
            rest.push_back(a);
        }
        for (BundleAtom::Kind k : {BundleAtom::Kind::Sym, BundleAtom::Kind::Ext}) {
            BundleMonomial next = rest;
            next.push_back(BundleAtom(k, 2));
            std::sort(next.begin(), next.end());
            fold_tangent_squares(std::move(next), c);
        }
    }

    std::map<BundleMonomial, std::int64_t> terms_;
};

/// Coefficients R_0..R_N of R(q,T) = (x)_i L_{q^i}(T) (x) (x)_j Sym_{q^j}(T),
/// in normal form.  The first three are 1, 2T, and 2(Sym2(T) + L2(T) + T).
inline std::vector<BundleExpr> expand_r_series(int order) {
    if (order < 0) throw std::invalid_argument("expand_r_series: negative order");
    std::vector<BundleExpr> acc(static_cast<size_t>(order) + 1);
    acc[0] = BundleExpr::unit();

    auto multiply_factor = [&](bool exterior, int i) {
        std::vector<BundleExpr> next(acc.size());
        for (int d = 0; d <= order; ++d) {
            if (acc[static_cast<size_t>(d)].is_zero()) continue;
            for (int k = 0; d + k * i <= order; ++k) {
                BundleExpr f = k == 0 ? BundleExpr::unit()
                               : exterior ? BundleExpr::ext_power(k)
                                          : BundleExpr::sym_power(k);
                next[static_cast<size_t>(d + k * i)] += acc[static_cast<size_t>(d)] * f;
            }
        }
        acc = std::move(next);
    };

    for (int i = 1; i <= order; ++i) multiply_factor(true, i);
    for (int j = 1; j <= order; ++j) multiply_factor(false, j);
    return acc;
}

namespace detail {

inline std::vector<int> character_exponents(std::span<const int> weights) {
    std::vector<int> exps;
    exps.reserve(2 * weights.size());
    for (int m : weights) {
        if (m == 0)
            throw std::invalid_argument("zero weight: fixed point would not be isolated");
        exps.push_back(2 * m);   // t^m  = mu^{2m}
        exps.push_back(-2 * m);  // t^-m = mu^{-2m}
    }
    return exps;
}

/// Character of Sym^k / L^k of the representation with the given character
/// monomials, via the generating functions prod (1 - s mu^e)^-1 / prod (1 + s mu^e).
inline LaurentPoly construction_character(BundleAtom::Kind kind, int power,
                                          const std::vector<int>& exps) {
    std::vector<LaurentPoly> s_coeffs(static_cast<size_t>(power) + 1);
    s_coeffs[0] = LaurentPoly(1);
    for (int e : exps) {
        std::vector<LaurentPoly> next(s_coeffs.size());
        for (int d = 0; d <= power; ++d) {
            if (s_coeffs[static_cast<size_t>(d)].is_zero()) continue;
            if (kind == BundleAtom::Kind::Ext) {
                next[static_cast<size_t>(d)] += s_coeffs[static_cast<size_t>(d)];
                if (d + 1 <= power)
                    next[static_cast<size_t>(d + 1)] +=
                        s_coeffs[static_cast<size_t>(d)] * LaurentPoly::term(Rational(1), e);
            } else {
                for (int k = 0; d + k <= power; ++k)
                    next[static_cast<size_t>(d + k)] +=
                        s_coeffs[static_cast<size_t>(d)] * LaurentPoly::term(Rational(1), k * e);
            }
        }
        s_coeffs = std::move(next);
    }
    return s_coeffs[static_cast<size_t>(power)];
}

}  // namespace detail

/// Character trace of a bundle expression at an isolated fixed point with
/// the given tangent weights: T restricts to sum_j (mu^{2m_j} + mu^{-2m_j})
/// and Sym/L apply on characters through their generating functions.
inline LaurentPoly restrict_character(const BundleExpr& expr, std::span<const int> weights) {
    const std::vector<int> exps = detail::character_exponents(weights);
    std::map<std::pair<int, int>, LaurentPoly> cache;
    auto atom_char = [&](const BundleAtom& a) -> const LaurentPoly& {
        const auto key = std::make_pair(a.kind == BundleAtom::Kind::Sym ? 0 : 1, a.power);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, detail::construction_character(a.kind, a.power, exps)).first;
        return it->second;
    };

    LaurentPoly acc;
    for (auto& [mono, c] : expr.terms()) {
        LaurentPoly t(1);
        for (const BundleAtom& a : mono) t *= atom_char(a);
        acc += t * Rational(c);
    }
    return acc;
}

/// The q-series of restricted R-characters [restrict_character(R_i, weights)]_i,
/// computed directly as a product of geometric factors over the character
/// monomials, without building the symbolic R_i.  Must agree with the
/// symbolic route coefficient by coefficient.
inline QSeries<LaurentPoly> r_character_series(std::span<const int> weights, int order) {
    const std::vector<int> exps = detail::character_exponents(weights);
    QSeries<LaurentPoly> acc = QSeries<LaurentPoly>::constant(LaurentPoly(1), order);
    for (int i = 1; i <= order; ++i)
        for (int e : exps)
            acc *= expand_geometric({.sign = 1, .q_power = i, .mu_power = e, .inverted = false},
                                    order);
    for (int j = 1; j <= order; ++j)
        for (int e : exps)
            acc *= expand_geometric({.sign = -1, .q_power = j, .mu_power = e, .inverted = true},
                                    order);
    return acc;
}

}  // namespace genera
