#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genera/localization.hpp"

namespace genera {

/// Linear circle action on CP^n with pairwise distinct integer parameters
/// a_0..a_n: fixed point P_i carries the weights {a_j - a_i : j != i}.
/// Classical Pontryagin numbers are attached for n <= 3 (for n = 1 and
/// n = 3 the dimension is not divisible by 4 and the data is empty).
inline S1ManifoldData catalog_cpn(const std::vector<int>& a, std::string name = "") {
    if (a.empty()) throw std::invalid_argument("catalog_cpn: empty parameter list");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j])
                throw std::invalid_argument(
                    "catalog_cpn: repeated entries, fixed points would not be isolated");
    const int n = static_cast<int>(a.size()) - 1;

    S1ManifoldData m;
    m.dim = 2 * n;
    if (name.empty()) {
        name = "CP" + std::to_string(n) + "(";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) name += ',';
            name += std::to_string(a[i]);
        }
        name += ')';
    }
    m.name = name;
    for (size_t i = 0; i < a.size(); ++i) {
        FixedPoint p;
        for (size_t j = 0; j < a.size(); ++j)
            if (j != i) p.weights.push_back(a[j] - a[i]);
        m.fixed_points.push_back(std::move(p));
    }
    if (n <= 3) {
        std::map<Partition, Rational> numbers;
        if (n == 2) numbers.emplace(Partition({1}), Rational(3));  // <p1, [CP^2]> = 3
        m.pontryagin = PontryaginData(2 * n, std::move(numbers), m.name);
    }
    m.validate();
    return m;
}

struct CatalogEntry {
    std::string key;
    S1ManifoldData manifold;
};

/// Built-in example manifolds.  Every entry validates and, where both data
/// halves exist, satisfies the localization / characteristic-number
/// cross-checks exercised by the test suite.
inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;

    S1ManifoldData s2 = catalog_cpn({0, 1}, "S2");
    out.push_back({"s2", s2});

    out.push_back({"cp2_12", catalog_cpn({0, 1, 2})});
    out.push_back({"cp2_24", catalog_cpn({0, 2, 4})});
    out.push_back({"cp3_0123", catalog_cpn({0, 1, 2, 3})});

    S1ManifoldData s2xs2 = product_manifold(s2, s2);
    out.push_back({"s2xs2", std::move(s2xs2)});
    return out;
}

inline std::optional<S1ManifoldData> find_catalog(const std::string& key) {
    for (CatalogEntry& e : catalog())
        if (e.key == key) return std::move(e.manifold);
    return std::nullopt;
}

}  // namespace genera
