#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "genera/partition.hpp"
#include "genera/rational.hpp"

namespace genera {

/// A manifold as seen by characteristic-number theory: its dimension and the
/// Pontryagin numbers <p_I, [M]>, indexed by partitions I of dim/4.  Missing
/// keys are zero; a dimension not divisible by 4 carries no numbers at all.
struct PontryaginData {
    int dim = 0;
    std::map<Partition, Rational> numbers;
    std::string name;

    PontryaginData() = default;
    PontryaginData(int dim_, std::map<Partition, Rational> numbers_, std::string name_ = "")
        : dim(dim_), numbers(std::move(numbers_)), name(std::move(name_)) {
        validate();
    }

    Rational number(const Partition& I) const {
        auto it = numbers.find(I);
        return it == numbers.end() ? Rational(0) : it->second;
    }

    void validate() const {
        if (dim < 0 || dim % 2 != 0)
            throw std::invalid_argument("PontryaginData: dimension must be even and non-negative");
        if (dim % 4 != 0 && !numbers.empty())
            throw std::invalid_argument(
                "PontryaginData: dimension not divisible by 4 admits no Pontryagin numbers");
        for (auto& [I, v] : numbers)
            if (4 * I.weight() != dim)
                throw std::invalid_argument("PontryaginData: partition " + I.to_string() +
                                            " has weight incompatible with dimension");
    }

    /// Drops explicitly stored zeros (missing keys already mean zero).
    void prune() {
        for (auto it = numbers.begin(); it != numbers.end();)
            it = it->second.is_zero() ? numbers.erase(it) : std::next(it);
    }
};

namespace detail {

inline void product_splits(const std::vector<int>& parts, size_t k, std::vector<int>& a,
                           std::vector<int>& b, int wa, int wb, const PontryaginData& m1,
                           const PontryaginData& m2, const Rational& c,
                           Rational& acc) {
    if (k == parts.size()) {
        if (4 * wa != m1.dim || 4 * wb != m2.dim) return;
        const Rational v1 = m1.number(Partition(std::vector<int>(a)));
        if (v1.is_zero()) return;
        const Rational v2 = m2.number(Partition(std::vector<int>(b)));
        if (v2.is_zero()) return;
        acc += c * v1 * v2;
        return;
    }
    const int p = parts[k];
    for (int x = 0; x <= p; ++x) {
        if (x > 0) a.push_back(x);
        if (p - x > 0) b.push_back(p - x);
        product_splits(parts, k + 1, a, b, wa + x, wb + (p - x), m1, m2, c, acc);
        if (x > 0) a.pop_back();
        if (p - x > 0) b.pop_back();
    }
}

}  // namespace detail

/// Pontryagin numbers of a product manifold, from the Whitney sum formula
/// p(M1 x M2) = p(M1) x p(M2) (rationally).  Each part i of a partition of
/// (dim1+dim2)/4 splits as p_i -> sum_{a+b=i} p_a x p_b; only splits whose
/// halves pair with the factors' fundamental classes contribute.
inline PontryaginData pontryagin_product(const PontryaginData& m1, const PontryaginData& m2,
                                         const std::string& name = "") {
    PontryaginData out;
    out.dim = m1.dim + m2.dim;
    out.name = name.empty() ? m1.name + "x" + m2.name : name;
    if (out.dim % 4 != 0) return out;
    for (const Partition& I : Partition::all_of_weight(out.dim / 4)) {
        Rational acc(0);
        std::vector<int> a, b;
        detail::product_splits(I.parts(), 0, a, b, 0, 0, m1, m2, Rational(1), acc);
        if (!acc.is_zero()) out.numbers.emplace(I, acc);
    }
    return out;
}

}  // namespace genera
