#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "genera/catalog.hpp"
#include "genera/genus.hpp"
#include "genera/manifold_io.hpp"

using namespace genera;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kCp2 = R"json({
  "name": "CP2(0,1,2)",
  "dimension": 4,
  "fixed_points": [
    { "weights": [1, 2] },
    { "weights": [-1, 1] },
    { "weights": [-2, -1] }
  ],
  "pontryagin_numbers": { "[1]": "3" }
})json";

}  // namespace

TEST_CASE("parsing a CP2 file") {
    const S1ManifoldData m = parse_manifold_file(kCp2);
    CHECK(m.name == "CP2(0,1,2)");
    CHECK(m.dim == 4);
    REQUIRE(m.fixed_points.size() == 3);
    CHECK(m.fixed_points[0].weights == std::vector<int>{1, 2});
    CHECK(m.fixed_points[0].sign == 1);  // defaulted
    REQUIRE(m.pontryagin);
    CHECK(evaluate_genus(*m.pontryagin, ahat_genus(1)) == Rational(-1, 8));
}

TEST_CASE("distinct errors name the offending field") {
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[0,1]}]})"),
                      Catch::Matchers::ContainsSubstring("zero weight"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[1]}]})"),
                      Catch::Matchers::ContainsSubstring("weight-list length"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[1,2]}],"pontryagin_numbers":{"[1]":"3.5"}})"),
                      Catch::Matchers::ContainsSubstring("malformed rational"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[1,2]}],"pontryagin_numbers":{"[1,2]":"3"}})"),
                      Catch::Matchers::ContainsSubstring("partition"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[1,2]}],"pontryagin_numbers":{"[1":"3"}})"),
                      Catch::Matchers::ContainsSubstring("malformed partition"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[{"weights":[1,2],"sign":2}]})"),
                      Catch::Matchers::ContainsSubstring("sign"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":4,
        "fixed_points":[],"extra":1})"),
                      Catch::Matchers::ContainsSubstring("unknown field"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"dimension":4,"fixed_points":[]})"),
                      Catch::Matchers::ContainsSubstring("name"));
    CHECK_THROWS_WITH(parse_manifold_file("not json"),
                      Catch::Matchers::ContainsSubstring("invalid JSON"));
    CHECK_THROWS_WITH(parse_manifold_file(R"({"name":"x","dimension":5,
        "fixed_points":[{"weights":[1,2]}]})"),
                      Catch::Matchers::ContainsSubstring("dimension"));
}

TEST_CASE("round-trip: parse then serialize is canonical and stable") {
    for (const CatalogEntry& e : catalog()) {
        const std::string text = serialize_manifold(e.manifold);
        const S1ManifoldData parsed = parse_manifold_file(text);
        CHECK(serialize_manifold(parsed) == text);  // parse . serialize fixed point
        CHECK(parsed.name == e.manifold.name);
        CHECK(parsed.dim == e.manifold.dim);
        REQUIRE(parsed.fixed_points.size() == e.manifold.fixed_points.size());
        for (size_t i = 0; i < parsed.fixed_points.size(); ++i) {
            CHECK(parsed.fixed_points[i].weights == e.manifold.fixed_points[i].weights);
            CHECK(parsed.fixed_points[i].sign == e.manifold.fixed_points[i].sign);
        }
        CHECK(parsed.pontryagin.has_value() == e.manifold.pontryagin.has_value());
        if (parsed.pontryagin)
            CHECK(parsed.pontryagin->numbers == e.manifold.pontryagin->numbers);
    }
}

TEST_CASE("non-canonical spellings normalize on the first parse") {
    // omitted sign and an explicit zero number both disappear
    const S1ManifoldData m = parse_manifold_file(R"({
        "name": "x", "dimension": 4,
        "fixed_points": [ { "weights": [2, 1] } ],
        "pontryagin_numbers": { "[1]": "0" }
    })");
    REQUIRE(m.pontryagin);
    CHECK(m.pontryagin->numbers.empty());
    const std::string canonical = serialize_manifold(m);
    CHECK(serialize_manifold(parse_manifold_file(canonical)) == canonical);
}

TEST_CASE("shipped data files are canonical") {
    const std::filesystem::path dir = GENERA_DATA_DIR;
    for (const CatalogEntry& e : catalog()) {
        const std::filesystem::path file = dir / (e.key + ".json");
        INFO(file.string());
        REQUIRE(std::filesystem::exists(file));
        const std::string text = slurp(file);
        CHECK(text == serialize_manifold(e.manifold));
        CHECK(serialize_manifold(parse_manifold_file(text)) == text);
    }
}
