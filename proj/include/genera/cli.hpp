#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genera/catalog.hpp"
#include "genera/character_expr.hpp"
#include "genera/genus.hpp"
#include "genera/localization.hpp"
#include "genera/manifold_io.hpp"

namespace genera {

namespace detail {

inline S1ManifoldData resolve_manifold(const std::string& ref) {
    std::error_code ec;
    if (std::filesystem::exists(ref, ec)) {
        std::ifstream in(ref, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open manifold file \"" + ref + '"');
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_manifold_file(buf.str());
    }
    if (auto m = find_catalog(ref)) return std::move(*m);
    throw std::invalid_argument("manifold \"" + ref +
                                "\" is neither a readable file nor a catalog entry");
}

inline BundleExpr resolve_bundle(const std::string& name) {
    if (name == "trivial") return BundleExpr::unit();
    if (name == "R1") return expand_r_series(1)[1];
    if (name == "R2") return expand_r_series(2)[2];
    throw std::invalid_argument("unknown bundle \"" + name + "\" (expected trivial, R1 or R2)");
}

inline std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ']';
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Command-line entry point, callable in-process for tests.  `args` excludes
/// the program name.  Exit codes: 0 success, 1 computed-property failure
/// (not rigid / not balanced / factorization fails), 2 input or usage error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"Exact elliptic-genus, multiplicative-genus and S1-localization toolkit"};
    app.require_subcommand(1);

    std::string manifold_ref, genus_name, bundle_name, char_a, char_b, at_lambda;
    int q_order = 3;
    int r_order = 3;
    bool as_json = false;

    auto* compute = app.add_subcommand("compute",
                                       "Evaluate a genus (a-hat, l or elliptic) from Pontryagin numbers");
    compute->add_option("--manifold", manifold_ref, "Manifold file or catalog name")->required();
    compute->add_option("--genus", genus_name, "One of: a-hat, l, elliptic")->required();
    compute->add_option("--q-order", q_order, "Truncation order of the q-series");
    compute->add_flag("--json", as_json, "Machine-readable output");

    auto* rigidity = app.add_subcommand("rigidity",
                                        "Check lambda-constancy of the equivariant elliptic genus");
    rigidity->add_option("--manifold", manifold_ref, "Manifold file or catalog name")->required();
    rigidity->add_option("--q-order", q_order, "Truncation order of the q-series");
    rigidity->add_flag("--json", as_json, "Machine-readable output");

    auto* balanced = app.add_subcommand("balanced", "Check the 2-balanced parity condition");
    balanced->add_option("--manifold", manifold_ref, "Manifold file or catalog name")->required();
    balanced->add_flag("--json", as_json, "Machine-readable output");

    auto* lemma2 = app.add_subcommand("lemma2",
                                      "Check the (1-t)^3 factorization of a character difference");
    lemma2->add_option("--char-a", char_a, "First character, e.g. \"2 + 3*t^2 + 3*t^-2\"")->required();
    lemma2->add_option("--char-b", char_b, "Second character")->required();
    lemma2->add_flag("--json", as_json, "Machine-readable output");

    auto* rseries = app.add_subcommand("r-series", "Print the bundles R_0..R_N in normal form");
    rseries->add_option("--order", r_order, "Highest q-power to expand");
    rseries->add_flag("--json", as_json, "Machine-readable output");

    auto* equivariant = app.add_subcommand("equivariant",
                                           "Equivariant twisted signature by fixed-point localization");
    equivariant->add_option("--manifold", manifold_ref, "Manifold file or catalog name")->required();
    equivariant->add_option("--bundle", bundle_name, "One of: trivial, R1, R2")->required();
    equivariant->add_option("--at", at_lambda, "Evaluate at this rational lambda");
    equivariant->add_flag("--json", as_json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (compute->parsed()) {
            const S1ManifoldData m = detail::resolve_manifold(manifold_ref);
            const PontryaginData pd =
                m.pontryagin ? *m.pontryagin : PontryaginData(m.dim, {}, m.name);
            if (q_order < 0) throw std::invalid_argument("--q-order must be non-negative");
            if (genus_name == "a-hat" || genus_name == "l") {
                Rational value(0);
                if (m.dim % 4 == 0) {
                    const GenusPolynomial g =
                        genus_name == "a-hat" ? ahat_genus(m.dim / 4) : l_genus(m.dim / 4);
                    value = evaluate_genus(pd, g);
                }
                if (as_json) {
                    nlohmann::ordered_json j;
                    j["command"] = "compute";
                    j["manifold"] = m.name;
                    j["genus"] = genus_name;
                    j["value"] = value.to_string();
                    out << j.dump() << "\n";
                } else {
                    out << (genus_name == "a-hat" ? "A-hat(" : "L(") << m.name
                        << ") = " << value.to_string() << "\n";
                }
            } else if (genus_name == "elliptic") {
                const QSeries<Rational> phi = elliptic_genus(pd, q_order);
                if (as_json) {
                    nlohmann::ordered_json j;
                    j["command"] = "compute";
                    j["manifold"] = m.name;
                    j["genus"] = "elliptic";
                    j["q_order"] = q_order;
                    auto coeffs = nlohmann::ordered_json::array();
                    for (int i = 0; i <= q_order; ++i) coeffs.push_back(phi.coeff(i).to_string());
                    j["coefficients"] = std::move(coeffs);
                    out << j.dump() << "\n";
                } else {
                    out << "Phi(" << m.name << ") = "
                        << phi.to_string([](const Rational& c) { return c.to_string(); }) << "\n";
                }
            } else {
                throw std::invalid_argument("unknown genus \"" + genus_name +
                                            "\" (expected a-hat, l or elliptic)");
            }
            return 0;
        }

        if (rigidity->parsed()) {
            const S1ManifoldData m = detail::resolve_manifold(manifold_ref);
            if (q_order < 0) throw std::invalid_argument("--q-order must be non-negative");
            const RigidityVerdict v = check_rigidity(m, q_order);
            bool cross_ok = true;
            for (const RigidityDegree& d : v.degrees)
                if (d.cross_check_ok && !*d.cross_check_ok) cross_ok = false;
            if (as_json) {
                nlohmann::ordered_json j;
                j["command"] = "rigidity";
                j["manifold"] = m.name;
                j["q_order"] = q_order;
                j["rigid_through"] = v.rigid_through;
                j["rigid"] = v.rigid_to_order();
                auto degrees = nlohmann::ordered_json::array();
                for (const RigidityDegree& d : v.degrees) {
                    nlohmann::ordered_json jd;
                    jd["q"] = d.q_degree;
                    if (d.constant) jd["constant"] = d.constant->to_string();
                    if (d.expected_signature) {
                        jd["twisted_signature"] = d.expected_signature->to_string();
                        jd["cross_check_ok"] = *d.cross_check_ok;
                    }
                    if (d.witness) {
                        nlohmann::ordered_json jw;
                        jw["canonical"] = d.witness->canonical.to_string();
                        jw["lambda_a"] = d.witness->lambda_a.to_string();
                        jw["value_a"] = d.witness->value_a.to_string();
                        jw["lambda_b"] = d.witness->lambda_b.to_string();
                        jw["value_b"] = d.witness->value_b.to_string();
                        jd["witness"] = std::move(jw);
                    }
                    degrees.push_back(std::move(jd));
                }
                j["degrees"] = std::move(degrees);
                out << j.dump() << "\n";
            } else {
                out << "rigid_through " << v.rigid_through;
                if (v.rigid_to_order()) {
                    out << "; constants [";
                    for (int i = 0; i <= q_order; ++i) {
                        if (i) out << ",";
                        out << v.degrees[static_cast<size_t>(i)].constant->to_string();
                    }
                    out << "]\n";
                } else {
                    const RigidityDegree& d = v.degrees[static_cast<size_t>(v.rigid_through + 1)];
                    out << "; witness q^" << d.q_degree << ": value "
                        << d.witness->value_a.to_string() << " at lambda="
                        << d.witness->lambda_a.to_string() << ", "
                        << d.witness->value_b.to_string() << " at lambda="
                        << d.witness->lambda_b.to_string() << "\n";
                }
                if (!cross_ok)
                    out << "warning: a constant coefficient disagrees with the twisted signature\n";
            }
            return v.rigid_to_order() && cross_ok ? 0 : 1;
        }

        if (balanced->parsed()) {
            const S1ManifoldData m = detail::resolve_manifold(manifold_ref);
            const BalanceReport r = is_two_balanced(m);
            if (as_json) {
                nlohmann::ordered_json j;
                j["command"] = "balanced";
                j["manifold"] = m.name;
                j["balanced"] = r.balanced;
                j["parities"] = r.parities;
                j["weight_gcd"] = r.weight_gcd;
                j["primitive"] = r.primitive;
                out << j.dump() << "\n";
            } else {
                out << "balanced: " << detail::bool_str(r.balanced) << ", parities "
                    << detail::int_list(r.parities) << ", primitive: "
                    << detail::bool_str(r.primitive) << "\n";
                if (!r.primitive)
                    out << "warning: weights share the common factor " << r.weight_gcd
                        << "; the action is not primitive\n";
            }
            return r.balanced ? 0 : 1;
        }

        if (lemma2->parsed()) {
            const LaurentPoly a = parse_character_expression(char_a);
            const LaurentPoly b = parse_character_expression(char_b);
            const FactorizationReport rep = verify_difference_factorization(a, b);
            const bool ok = rep.symmetric && rep.divisible && rep.parity_difference == 0;
            if (as_json) {
                nlohmann::ordered_json j;
                j["command"] = "lemma2";
                j["symmetric"] = rep.symmetric;
                j["divisible"] = rep.divisible;
                if (rep.divisible) j["quotient"] = rep.quotient.to_string("t", 2);
                j["parity_difference"] = rep.parity_difference;
                out << j.dump() << "\n";
            } else {
                out << "symmetric: " << detail::bool_str(rep.symmetric)
                    << ", divisible: " << detail::bool_str(rep.divisible);
                if (rep.divisible) out << ", quotient: " << rep.quotient.to_string("t", 2);
                out << ", parity_difference: " << rep.parity_difference << "\n";
            }
            return ok ? 0 : 1;
        }

        if (rseries->parsed()) {
            if (r_order < 0) throw std::invalid_argument("--order must be non-negative");
            const std::vector<BundleExpr> r = expand_r_series(r_order);
            if (as_json) {
                nlohmann::ordered_json j;
                j["command"] = "r-series";
                j["order"] = r_order;
                auto bundles = nlohmann::ordered_json::array();
                for (const BundleExpr& e : r) bundles.push_back(e.to_string());
                j["bundles"] = std::move(bundles);
                out << j.dump() << "\n";
            } else {
                for (size_t i = 0; i < r.size(); ++i) {
                    if (i) out << "; ";
                    out << "R" << i << " = " << r[i].to_string();
                }
                out << "\n";
            }
            return 0;
        }

        if (equivariant->parsed()) {
            const S1ManifoldData m = detail::resolve_manifold(manifold_ref);
            const BundleExpr w = detail::resolve_bundle(bundle_name);
            const RationalFunc f = equivariant_twisted_signature(m, w);
            std::optional<Rational> at_value;
            if (!at_lambda.empty())
                at_value = f.evaluate_lambda(Rational::parse(at_lambda));
            if (as_json) {
                nlohmann::ordered_json j;
                j["command"] = "equivariant";
                j["manifold"] = m.name;
                j["bundle"] = bundle_name;
                j["value"] = f.to_string();
                if (auto c = f.as_constant()) j["constant"] = c->to_string();
                if (at_value) {
                    j["lambda"] = at_lambda;
                    j["value_at_lambda"] = at_value->to_string();
                }
                out << j.dump() << "\n";
            } else {
                out << "sign_S1(" << m.name << ", " << bundle_name << ") = " << f.to_string()
                    << "\n";
                if (at_value)
                    out << "at lambda=" << at_lambda << ": " << at_value->to_string() << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n" << app.help();
    return 2;
}

}  // namespace genera
