#include <doctest.h>

#include "fhdet/config_io.hpp"
#include "fhdet/errors.hpp"

using namespace fhdet;

TEST_CASE("symbol problem parsing") {
  const auto p = parse_problem(R"({"kind": "symbol", "name": "x",
    "V": [{"k": 1, "value": 0.3}, {"k": -1, "value": [0.1, -0.2]}],
    "singularities": [{"theta": 1.0, "alpha": 0.5, "beta": [0.1, -0.2]},
                      {"theta_over_pi": 1.5, "beta": -0.5}]})");
  CHECK(p.kind == Problem::Kind::symbol);
  CHECK(p.name == "x");
  CHECK(p.symbol.v()[-1] == Complex(0.1, -0.2));
  REQUIRE(p.symbol.size() == 3);
  CHECK(p.symbol[1].beta == Complex(0.1, -0.2));
  CHECK(p.symbol[2].theta == doctest::Approx(1.5 * M_PI));
  CHECK(p.symbol[2].alpha == Complex{});
}

TEST_CASE("weight problem parsing") {
  const auto p = parse_problem(R"({"kind": "weight", "V": [{"k": 0, "value": 0.1}, {"k": 2, "value": 0.2}],
    "alpha_plus": 0.25, "interior": [{"lambda": 0.3, "beta": 0.3}]})");
  CHECK(p.kind == Problem::Kind::weight);
  CHECK(p.weight.v()[-2] == Complex(0.2));
  CHECK(p.weight.alpha_plus() == Complex(0.25));
  CHECK(p.weight.alpha_minus() == Complex{});
  CHECK(p.weight.interior().size() == 1);
}

TEST_CASE("dump and parse round trip") {
  for (const char* text : {
           R"({"kind": "symbol", "V": [{"k": 2, "value": [0.125, 0.1]}],
               "singularities": [{"theta": 0.0, "alpha": 0.3, "beta": 0.1}, {"theta": 2.718281828459045, "beta": -0.45}]})",
           R"({"kind": "weight", "name": "w", "V": [{"k": 1, "value": 0.2}],
               "alpha_plus": [0.1, 0.05], "alpha_minus": -0.2,
               "interior": [{"lambda": -0.3, "alpha": 0.2, "beta": 0.1}, {"lambda": 0.6, "beta": -0.2}]})",
           R"({"kind": "symbol"})"}) {
    const auto p = parse_problem(text);
    const auto q = parse_problem(dump_problem(p));
    CHECK(p == q);
    CHECK(dump_problem(q) == dump_problem(p));
  }
}

TEST_CASE("malformed problems are configuration errors") {
  CHECK_THROWS_AS(parse_problem("{"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "matrix"})"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "symbol", "colour": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "symbol", "singularities": [{"theta": 1, "theta_over_pi": 0.3}]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "symbol", "singularities": [{"alpha": 0.3}]})"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "symbol", "singularities": [{"theta": 9, "alpha": 0.3}]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "symbol", "V": [{"k": 1, "value": [1, 2, 3]}]})"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "weight", "V": [{"k": -1, "value": 0.1}]})"), ConfigError);
  CHECK_THROWS_AS(parse_problem(R"({"kind": "weight", "interior": [{"lambda": 1.5}]})"), ConfigError);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), ConfigError);
}

TEST_CASE("bundled configuration files load") {
  const auto p = load_problem(FHDET_CONFIG_DIR "/basor_tracy.json");
  CHECK(p.symbol.singular_indices().size() == 2);
}
