#pragma once

#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "genera/partition.hpp"
#include "genera/rational.hpp"

namespace genera {

/// Polynomial in formal root variables y_1..y_m over Q, keyed by exponent
/// vectors.  This is the workhorse behind characteristic-class expansions:
/// genus series are expanded over formal roots here and then reduced to
/// Pontryagin monomials with symmetric_reduce().
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.c_[std::vector<int>(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }

    /// y_j (0-based index)
    static MultiPoly variable(int nvars, int j) {
        MultiPoly p(nvars);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e.at(static_cast<size_t>(j)) = 1;
        p.c_[std::move(e)] = Rational(1);
        return p;
    }

    /// Elementary symmetric polynomial e_k(y_1..y_m); e_0 = 1, e_k = 0 for k > m.
    static MultiPoly elementary_symmetric(int nvars, int k) {
        MultiPoly p(nvars);
        if (k < 0 || k > nvars) return p;
        std::vector<int> picks;
        build_subsets(p, picks, 0, k);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return c_; }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly r = a;
        if (s.is_zero()) { r.c_.clear(); return r; }
        for (auto& [e, c] : r.c_) c *= s;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.c_ == b.c_;
    }

    /// Product truncated at total degree `max_degree` (-1 keeps everything).
    MultiPoly mul(const MultiPoly& o, int max_degree = -1) const {
        check_vars(o);
        MultiPoly r(nvars_);
        for (auto& [ea, ca] : c_) {
            const int da = std::accumulate(ea.begin(), ea.end(), 0);
            for (auto& [eb, cb] : o.c_) {
                if (max_degree >= 0) {
                    const int db = std::accumulate(eb.begin(), eb.end(), 0);
                    if (da + db > max_degree) continue;
                }
                std::vector<int> e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    /// Terms of total degree exactly w.
    MultiPoly component(int w) const {
        MultiPoly r(nvars_);
        for (auto& [e, c] : c_)
            if (std::accumulate(e.begin(), e.end(), 0) == w) r.c_[e] = c;
        return r;
    }

    Rational evaluate(std::span<const Rational> values) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
        Rational acc(0);
        for (auto& [e, c] : c_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i) t *= values[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    /// Writes a symmetric polynomial as a polynomial in the elementary
    /// symmetric polynomials e_1..e_m, returned as Pontryagin-monomial
    /// coefficients (partition I stands for prod_i e_i).  Standard greedy
    /// elimination on the lexicographically leading term; throws if the
    /// input is not symmetric.
    std::map<Partition, Rational> symmetric_reduce() const {
        std::vector<MultiPoly> elem;
        elem.reserve(static_cast<size_t>(nvars_) + 1);
        for (int k = 0; k <= nvars_; ++k) elem.push_back(elementary_symmetric(nvars_, k));

        std::map<Partition, Rational> out;
        MultiPoly rest = *this;
        while (!rest.is_zero()) {
            // copies: the subtraction below erases this term from the map
            const std::vector<int> lead = rest.c_.rbegin()->first;
            const Rational c = rest.c_.rbegin()->second;
            std::vector<int> parts;
            for (int k = 0; k < nvars_; ++k) {
                const int mult = lead[static_cast<size_t>(k)] -
                                 (k + 1 < nvars_ ? lead[static_cast<size_t>(k) + 1] : 0);
                if (mult < 0)
                    throw std::logic_error("MultiPoly: symmetric_reduce on a non-symmetric input");
                for (int r = 0; r < mult; ++r) parts.push_back(k + 1);
            }
            MultiPoly reducer = constant(nvars_, Rational(1));
            for (int p : parts) reducer = reducer.mul(elem[static_cast<size_t>(p)]);
            rest -= reducer * c;
            // Re-check: subtraction must have killed the leading term.
            if (!rest.is_zero() && rest.c_.rbegin()->first >= lead)
                throw std::logic_error("MultiPoly: symmetric_reduce failed to make progress");
            Partition key{std::vector<int>(parts)};
            auto it = out.find(key);
            if (it == out.end()) out.emplace(std::move(key), c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

private:
    static void build_subsets(MultiPoly& p, std::vector<int>& picks, int start, int remaining) {
        if (remaining == 0) {
            std::vector<int> e(static_cast<size_t>(p.nvars_), 0);
            for (int j : picks) e[static_cast<size_t>(j)] = 1;
            p.c_[std::move(e)] = Rational(1);
            return;
        }
        for (int j = start; j <= p.nvars_ - remaining; ++j) {
            picks.push_back(j);
            build_subsets(p, picks, j + 1, remaining - 1);
            picks.pop_back();
        }
    }

    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    void add_term(std::vector<int> e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = c_.find(e);
        if (it == c_.end()) c_.emplace(std::move(e), c);
        else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    int nvars_;
    std::map<std::vector<int>, Rational> c_;
};

}  // namespace genera
