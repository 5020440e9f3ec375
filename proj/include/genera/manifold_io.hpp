#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "genera/localization.hpp"

namespace genera {

/// Parses the JSON manifold file format:
///
///   {
///     "name": "CP2(0,1,2)",
///     "dimension": 4,
///     "fixed_points": [ { "weights": [1, 2], "sign": 1 }, ... ],
///     "pontryagin_numbers": { "[1]": "3" }
///   }
///
/// `sign` defaults to +1; `pontryagin_numbers` is optional.  Rationals are
/// strings "a/b" (never floating point), partition keys are sorted
/// non-increasing, and every schema violation names the offending field.
inline S1ManifoldData parse_manifold_file(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("manifold file: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("manifold file: top level must be an object");
    for (auto& [key, value] : j.items())
        if (key != "name" && key != "dimension" && key != "fixed_points" &&
            key != "pontryagin_numbers")
            throw std::invalid_argument("manifold file: unknown field \"" + key + '"');

    S1ManifoldData m;
    if (!j.contains("name") || !j["name"].is_string())
        throw std::invalid_argument("manifold file: \"name\" must be a string");
    m.name = j["name"].get<std::string>();

    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw std::invalid_argument("manifold file: \"dimension\" must be an integer");
    m.dim = j["dimension"].get<int>();

    if (!j.contains("fixed_points") || !j["fixed_points"].is_array() || j["fixed_points"].empty())
        throw std::invalid_argument("manifold file: \"fixed_points\" must be a nonempty array");
    size_t idx = 0;
    for (const auto& jp : j["fixed_points"]) {
        const std::string where = "fixed_points[" + std::to_string(idx) + "]";
        if (!jp.is_object())
            throw std::invalid_argument("manifold file: " + where + " must be an object");
        for (auto& [key, value] : jp.items())
            if (key != "weights" && key != "sign")
                throw std::invalid_argument("manifold file: " + where + ": unknown field \"" +
                                            key + '"');
        if (!jp.contains("weights") || !jp["weights"].is_array())
            throw std::invalid_argument("manifold file: " + where + ".weights must be an array");
        FixedPoint p;
        for (const auto& jw : jp["weights"]) {
            if (!jw.is_number_integer())
                throw std::invalid_argument("manifold file: " + where +
                                            ".weights entries must be integers");
            p.weights.push_back(jw.get<int>());
        }
        if (jp.contains("sign")) {
            if (!jp["sign"].is_number_integer())
                throw std::invalid_argument("manifold file: " + where + ".sign must be +1 or -1");
            p.sign = jp["sign"].get<int>();
        }
        m.fixed_points.push_back(std::move(p));
        ++idx;
    }

    if (j.contains("pontryagin_numbers")) {
        if (!j["pontryagin_numbers"].is_object())
            throw std::invalid_argument(
                "manifold file: \"pontryagin_numbers\" must be an object");
        PontryaginData pd;
        pd.dim = m.dim;
        pd.name = m.name;
        for (auto& [key, value] : j["pontryagin_numbers"].items()) {
            Partition I;
            try {
                I = Partition::parse(key);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("manifold file: pontryagin_numbers: " +
                                            std::string(e.what()));
            }
            if (!value.is_string())
                throw std::invalid_argument("manifold file: pontryagin_numbers[\"" + key +
                                            "\"] must be a rational string \"a/b\"");
            Rational v;
            try {
                v = Rational::parse(value.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("manifold file: pontryagin_numbers[\"" + key +
                                            "\"]: malformed rational \"" +
                                            value.get<std::string>() + '"');
            }
            if (4 * I.weight() != m.dim)
                throw std::invalid_argument("manifold file: pontryagin_numbers[\"" + key +
                                            "\"]: partition weight incompatible with dimension");
            if (!v.is_zero()) pd.numbers.emplace(std::move(I), std::move(v));
        }
        m.pontryagin = std::move(pd);
    }

    m.validate();
    return m;
}

/// Canonical serialization: fixed key order, explicit signs, rationals as
/// strings, two-space indentation, trailing newline.  parse . serialize is
/// the identity on parsed data, and serialize . parse is the identity on
/// canonical files.
inline std::string serialize_manifold(const S1ManifoldData& m) {
    m.validate();
    nlohmann::ordered_json j;
    j["name"] = m.name;
    j["dimension"] = m.dim;
    j["fixed_points"] = nlohmann::ordered_json::array();
    for (const FixedPoint& p : m.fixed_points) {
        nlohmann::ordered_json jp;
        jp["weights"] = p.weights;
        jp["sign"] = p.sign;
        j["fixed_points"].push_back(std::move(jp));
    }
    if (m.pontryagin) {
        nlohmann::ordered_json jn = nlohmann::ordered_json::object();
        for (auto& [I, v] : m.pontryagin->numbers)
            if (!v.is_zero()) jn[I.to_string()] = v.to_string();
        j["pontryagin_numbers"] = std::move(jn);
    }
    return j.dump(2) + "\n";
}

}  // namespace genera
