// Acceptance suite: runs the library's end-to-end checks and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genera/catalog.hpp"
#include "genera/cli.hpp"
#include "genera/genus.hpp"
#include "genera/localization.hpp"
#include "genera/manifold_io.hpp"

using namespace genera;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::string description;
    std::vector<std::string> problems;

    Criterion(int id_, std::string d) : id(id_), description(std::move(d)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    ~Criterion() {
        if (problems.empty()) {
            std::cout << "PASS  criterion " << id << ": " << description << "\n";
        } else {
            ++g_failures;
            std::cout << "FAIL  criterion " << id << ": " << description << "\n";
            for (const std::string& p : problems) std::cout << "      - " << p << "\n";
        }
    }
};

LaurentPoly t_term(int c, int e) { return LaurentPoly::term(Rational(c), 2 * e); }

// --- independent genus oracle (n+1 formal roots, own arithmetic) ----------

using Mono = std::vector<int>;
using Poly = std::map<Mono, Rational>;

int mono_total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

Poly poly_mul(const Poly& a, const Poly& b, int cap) {
    Poly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            Mono e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (mono_total(e) > cap) continue;
            auto& slot = r[e];
            slot += ca * cb;
            if (slot.is_zero()) r.erase(e);
        }
    return r;
}

Poly poly_elementary(int m, int k) {
    Poly r;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            Mono e(static_cast<size_t>(m), 0);
            for (int j : idx) e[static_cast<size_t>(j)] = 1;
            r[e] = Rational(1);
            return;
        }
        for (int j = start; j <= m - need; ++j) {
            idx[static_cast<size_t>(k - need)] = j;
            rec(j + 1, need - 1);
        }
    };
    if (k == 0) r[Mono(static_cast<size_t>(m), 0)] = Rational(1);
    else rec(0, k);
    return r;
}

std::vector<Rational> oracle_series(bool ahat, int order) {
    auto fact = [](int k) {
        Rational r(1);
        for (int i = 2; i <= k; ++i) r *= Rational(i);
        return r;
    };
    std::vector<Rational> numer(static_cast<size_t>(order) + 1, Rational(0));
    std::vector<Rational> denom(static_cast<size_t>(order) + 1, Rational(0));
    for (int k = 0; 2 * k <= order; ++k) {
        denom[static_cast<size_t>(2 * k)] =
            ahat ? Rational(1) / (Rational(4).pow(k) * fact(2 * k + 1))
                 : Rational(1) / fact(2 * k + 1);
        numer[static_cast<size_t>(2 * k)] =
            ahat ? Rational(k == 0 ? 1 : 0) : Rational(1) / fact(2 * k);
    }
    std::vector<Rational> q(static_cast<size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        Rational acc = numer[static_cast<size_t>(i)];
        for (int j = 1; j <= i; ++j)
            acc -= denom[static_cast<size_t>(j)] * q[static_cast<size_t>(i - j)];
        q[static_cast<size_t>(i)] = acc / denom[0];
    }
    return q;
}

/// K_n from n+1 formal roots with an exact linear solve onto the e-basis.
/// Returns false (via ok) on any inconsistency.
bool oracle_genus(bool ahat, int n, std::map<Partition, Rational>& out) {
    const int m = n + 1;
    const std::vector<Rational> series = oracle_series(ahat, 2 * n);
    Poly acc{{Mono(static_cast<size_t>(m), 0), Rational(1)}};
    for (int j = 0; j < m; ++j) {
        Poly f;
        for (int k = 0; k <= n; ++k) {
            const Rational c = series[static_cast<size_t>(2 * k)];
            if (c.is_zero()) continue;
            Mono e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(j)] = k;
            f[e] = c;
        }
        acc = poly_mul(acc, f, n);
    }
    Poly target;
    for (auto& [e, c] : acc)
        if (mono_total(e) == n) target[e] = c;

    const std::vector<Partition> partitions = Partition::all_of_weight(n);
    std::vector<Poly> basis;
    for (const Partition& I : partitions) {
        Poly b{{Mono(static_cast<size_t>(m), 0), Rational(1)}};
        for (int p : I.parts()) b = poly_mul(b, poly_elementary(m, p), n);
        basis.push_back(std::move(b));
    }
    std::set<Mono> monos;
    for (auto& [e, c] : target) monos.insert(e);
    for (const Poly& b : basis)
        for (auto& [e, c] : b)
            if (mono_total(e) == n) monos.insert(e);

    const size_t cols = basis.size();
    std::vector<std::vector<Rational>> rows;
    for (const Mono& e : monos) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (size_t i = 0; i < cols; ++i) {
            auto it = basis[i].find(e);
            if (it != basis[i].end()) row[i] = it->second;
        }
        auto it = target.find(e);
        if (it != target.end()) row[cols] = it->second;
        rows.push_back(std::move(row));
    }
    std::vector<Rational> solution(cols, Rational(0));
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) return false;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = Rational(1) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Rational f = rows[r][col];
            for (size_t k = 0; k <= cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    if (rank != cols) return false;
    for (size_t r = rank; r < rows.size(); ++r)
        for (size_t k = 0; k <= cols; ++k)
            if (!rows[r][k].is_zero()) return false;
    for (size_t i = 0; i < rank; ++i) {
        size_t lead = 0;
        while (lead < cols && rows[i][lead].is_zero()) ++lead;
        if (lead < cols) solution[lead] = rows[i][cols];
    }
    out.clear();
    for (size_t i = 0; i < cols; ++i)
        if (!solution[i].is_zero()) out.emplace(partitions[i], solution[i]);
    return true;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

int main() {
    {
        Criterion c(1, "R-series ground truth R_0..R_2");
        const auto r = expand_r_series(2);
        c.require(r[0] == BundleExpr::unit(), "R0 != 1");
        c.require(r[1] == BundleExpr::tangent() * 2, "R1 != 2T");
        c.require(r[2] == (BundleExpr::sym_power(2) + BundleExpr::ext_power(2) +
                           BundleExpr::tangent()) * 2,
                  "R2 != 2(Sym2 T + L2 T + T)");
        c.require(r[2].to_string() == "2*Sym2(T) + 2*L2(T) + 2*T", "R2 normal form string");
    }

    {
        Criterion c(2, "dual-pipeline equivalence on 50+ random weight vectors, i <= 3");
        std::mt19937 rng(20250811);
        std::uniform_int_distribution<int> len(1, 3), mag(1, 4), coin(0, 1);
        const auto r = expand_r_series(3);
        int agreed = 0;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<int> w(static_cast<size_t>(len(rng)));
            for (int& m : w) m = (coin(rng) ? 1 : -1) * mag(rng);
            const auto direct = r_character_series(w, 3);
            bool ok = true;
            for (int i = 0; i <= 3; ++i)
                ok = ok && direct.coeff(i) == restrict_character(r[static_cast<size_t>(i)], w);
            if (ok) ++agreed;
            else c.require(false, "mismatch at trial " + std::to_string(trial));
        }
        c.require(agreed == 60, "agreed on " + std::to_string(agreed) + "/60 weight vectors");
    }

    {
        Criterion c(3, "multiplicative sequences vs independent n+1 root oracle");
        c.require(ahat_genus(1).coeff(Partition({1})) == Rational(-1, 24), "A1 != -p1/24");
        c.require(ahat_genus(2).coeff(Partition({1, 1})) == Rational(7, 5760) &&
                      ahat_genus(2).coeff(Partition({2})) == Rational(-4, 5760),
                  "A2 != (7 p1^2 - 4 p2)/5760");
        c.require(l_genus(1).coeff(Partition({1})) == Rational(1, 3), "L1 != p1/3");
        c.require(l_genus(2).coeff(Partition({2})) == Rational(7, 45) &&
                      l_genus(2).coeff(Partition({1, 1})) == Rational(-1, 45),
                  "L2 != (7 p2 - p1^2)/45");
        for (int n = 1; n <= 2; ++n) {
            std::map<Partition, Rational> expect;
            c.require(oracle_genus(true, n, expect) && ahat_genus(n).coeffs == expect,
                      "A-hat weight " + std::to_string(n) + " disagrees with oracle");
            c.require(oracle_genus(false, n, expect) && l_genus(n).coeffs == expect,
                      "L weight " + std::to_string(n) + " disagrees with oracle");
        }
    }

    {
        Criterion c(4, "signature calibration: trivial twist = L-genus, constant term = sign");
        for (const CatalogEntry& e : catalog()) {
            if (!e.manifold.pontryagin) continue;
            const PontryaginData& pd = *e.manifold.pontryagin;
            const Rational l =
                pd.dim % 4 == 0 ? evaluate_genus(pd, l_genus(pd.dim / 4)) : Rational(0);
            c.require(twisted_signature(pd, BundleExpr::unit()) == l,
                      e.key + ": twisted_signature(trivial) != L-genus");
            c.require(elliptic_genus(pd, 1).coeff(0) == l,
                      e.key + ": constant term of Phi != signature");
        }
        const auto cp2 = catalog_cpn({0, 1, 2});
        c.require(twisted_signature(*cp2.pontryagin, BundleExpr::unit()) == Rational(1),
                  "sign(CP2) != 1");
    }

    {
        Criterion c(5, "rigid example: S2 rotation");
        const auto s2 = catalog_cpn({0, 1}, "S2");
        const auto genus = equivariant_elliptic_genus(s2, 4);
        for (int i = 0; i <= 4; ++i)
            c.require(genus.coeff(i).is_zero(),
                      "q^" + std::to_string(i) + " coefficient not identically 0");
        c.require(equivariant_a_hat(s2).is_zero(), "equivariant A-hat != 0");
        c.require(is_two_balanced(s2).balanced, "S2 not reported balanced");
    }

    {
        Criterion c(6, "negative control: CP2 with weights (1,2)");
        const auto cp2 = catalog_cpn({0, 1, 2});
        const BalanceReport b = is_two_balanced(cp2);
        c.require(!b.balanced, "reported balanced");
        c.require(b.parities == std::vector<int>{1, 0, 1}, "parities != (1,0,1)");
        const auto v = check_rigidity(cp2, 1);
        c.require(v.degrees[0].constant && *v.degrees[0].constant == Rational(1),
                  "q^0 coefficient != constant 1");
        c.require(v.degrees[1].witness.has_value(), "q^1 coefficient reported constant");
        if (v.degrees[1].witness) {
            const auto& w = *v.degrees[1].witness;
            c.require(w.lambda_a == Rational(2) && w.value_a == Rational(45),
                      "q^1 value at lambda=2 != 45");
            c.require(w.lambda_b == Rational(3) && w.value_b == Rational(640, 9),
                      "q^1 value at lambda=3 != 640/9");
        }
        c.require(equivariant_a_hat(cp2).evaluate(Rational(2)) == Rational(-4, 45),
                  "equivariant A-hat at mu=2 != -4/45");
    }

    {
        Criterion c(7, "rigid-with-cancellation example: CP3(0,1,2,3)");
        const auto cp3 = catalog_cpn({0, 1, 2, 3});
        c.require(is_two_balanced(cp3).balanced, "not reported balanced");
        const auto v = check_rigidity(cp3, 2);
        c.require(v.rigid_through == 2, "not rigid through q^2");
        for (const RigidityDegree& d : v.degrees) {
            c.require(d.constant && d.constant->is_zero(),
                      "q^" + std::to_string(d.q_degree) + " constant != 0");
            c.require(d.expected_signature && d.expected_signature->is_zero() &&
                          d.cross_check_ok && *d.cross_check_ok,
                      "q^" + std::to_string(d.q_degree) +
                          " disagrees with the Pontryagin pairing");
        }
    }

    {
        Criterion c(8, "character-difference factorization checker");
        const LaurentPoly a = LaurentPoly(2) + t_term(3, 2) + t_term(3, -2);
        const LaurentPoly b = t_term(3, 1) + t_term(3, -1) + t_term(1, 3) + t_term(1, -3);
        const FactorizationReport ok = verify_difference_factorization(a, b);
        c.require(ok.divisible && ok.symmetric && ok.parity_difference == 0,
                  "accepting case rejected");
        c.require(ok.quotient == t_term(1, 0) - t_term(1, -3), "quotient != 1 - t^-3");

        const FactorizationReport no = verify_difference_factorization(
            t_term(1, 1) + t_term(1, -1), t_term(1, 3) + t_term(1, -3));
        c.require(!no.divisible, "rejecting case accepted");

        std::mt19937 rng(112233);
        std::uniform_int_distribution<int> npairs(1, 3), expo(-5, 5), coeff(1, 4), coin(0, 1);
        const LaurentPoly cube = (t_term(1, 0) - t_term(1, 1)).pow(3);
        int failures = 0;
        for (int trial = 0; trial < 100; ++trial) {
            LaurentPoly p;
            const int k = npairs(rng);
            for (int i = 0; i < k; ++i) {
                const int e = expo(rng);
                const int bb = (coin(rng) ? 1 : -1) * coeff(rng);
                p += t_term(bb, e) - t_term(bb, -3 - e);
            }
            const LaurentPoly f = cube * p;
            LaurentPoly charA = t_term(1, 5) + t_term(1, -5) + LaurentPoly(4);
            LaurentPoly charB = charA;
            for (auto& [e, cc] : f.terms()) {
                if (cc.is_negative()) charB += LaurentPoly::term(-cc, e);
                else charA += LaurentPoly::term(cc, e);
            }
            const FactorizationReport rep = verify_difference_factorization(charA, charB);
            if (!(rep.divisible && rep.symmetric && rep.parity_difference == 0)) ++failures;
        }
        c.require(failures == 0,
                  std::to_string(failures) + "/100 randomized divisible inputs failed");
    }

    {
        Criterion c(9, "A-hat vanishing spot checks and mu -> infinity limits");
        const auto s2 = catalog_cpn({0, 1}, "S2");
        const auto s2xs2 = product_manifold(s2, s2);
        c.require(evaluate_genus(*s2xs2.pontryagin, ahat_genus(1)) == Rational(0),
                  "A-hat(S2xS2) != 0");
        const auto cp2 = catalog_cpn({0, 1, 2});
        c.require(evaluate_genus(*cp2.pontryagin, ahat_genus(1)) == Rational(-1, 8),
                  "A-hat(CP2) != -1/8");
        for (const CatalogEntry& e : catalog())
            c.require(equivariant_a_hat(e.manifold).vanishes_at_infinity(),
                      e.key + ": equivariant A-hat does not vanish at infinity");
    }

    {
        Criterion c(10, "CLI contract and catalog file round-trip");
        const std::string dir = GENERA_DATA_DIR;

        const CliResult rigidity =
            cli({"rigidity", "--manifold", dir + "/cp2_12.json", "--q-order", "1"});
        c.require(rigidity.code == 1, "rigidity exit code != 1");
        c.require(rigidity.out ==
                      "rigid_through 0; witness q^1: value 45 at lambda=2, 640/9 at lambda=3\n",
                  "rigidity report differs");

        const CliResult rseries = cli({"r-series", "--order", "2"});
        c.require(rseries.code == 0, "r-series exit code != 0");
        c.require(rseries.out == "R0 = 1; R1 = 2*T; R2 = 2*Sym2(T) + 2*L2(T) + 2*T\n",
                  "r-series report differs");

        const CliResult balanced = cli({"balanced", "--manifold", dir + "/s2.json"});
        c.require(balanced.code == 0, "balanced exit code != 0");
        c.require(balanced.out == "balanced: true, parities [1,1], primitive: true\n",
                  "balanced report differs");

        // byte stability: a second run reproduces each report exactly
        c.require(cli({"rigidity", "--manifold", dir + "/cp2_12.json", "--q-order", "1"}).out ==
                      rigidity.out,
                  "rigidity output not byte-stable");
        c.require(cli({"r-series", "--order", "2"}).out == rseries.out,
                  "r-series output not byte-stable");
        c.require(cli({"balanced", "--manifold", dir + "/s2.json"}).out == balanced.out,
                  "balanced output not byte-stable");

        for (const CatalogEntry& e : catalog()) {
            const std::string text = serialize_manifold(e.manifold);
            const S1ManifoldData parsed = parse_manifold_file(text);
            c.require(serialize_manifold(parsed) == text,
                      e.key + ": serialize . parse not the identity on canonical text");
        }
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
    return 1;
}
