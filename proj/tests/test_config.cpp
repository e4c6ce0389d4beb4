#include <cmath>

#include "doctest.h"
#include "ford/config.hpp"

using namespace ford;

TEST_CASE("defaults and validation") {
  ScenarioConfig cfg;
  cfg.family = FamilySpec{0.01, std::nullopt, 0.5};
  CHECK_NOTHROW(validate_config(cfg));

  SUBCASE("needs exactly one generator source") {
    ScenarioConfig none;
    CHECK_THROWS_AS(validate_config(none), MalformedInput);
    ScenarioConfig both = cfg;
    both.matrix = {complexd(2.5, 0.0), complexd(-1.0, 0.0), complexd(1.0, 0.0),
                   complexd(0.0, 0.0)};
    CHECK_THROWS_AS(validate_config(both), MalformedInput);
  }
  SUBCASE("family needs eps xor target_R") {
    ScenarioConfig c = cfg;
    c.family = FamilySpec{std::nullopt, std::nullopt, 0.5};
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
    c.family = FamilySpec{0.01, 10.0, 0.5};
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
  }
  SUBCASE("safety strictly inside (0,1)") {
    ScenarioConfig c = cfg;
    c.family = FamilySpec{std::nullopt, 10.0, 1.0};
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
  }
  SUBCASE("degenerate lattice") {
    ScenarioConfig c = cfg;
    c.t_beta = complexd(40.0, 0.0);
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
  }
  SUBCASE("sweep sanity") {
    ScenarioConfig c = cfg;
    c.sweep = SweepSpec{"t_gamma", {}, 20.0, 0.5, 10, true};
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
    c.sweep = SweepSpec{"t_alpha", {}, std::nullopt, 0.5, 10, true};
    CHECK_THROWS_AS(validate_config(c), MalformedInput);
  }
}

TEST_CASE("parse and serialize round-trip") {
  const std::string text = R"({
    "family": {"eps": 0.01, "safety": 0.5},
    "lattice": {"t_alpha": [20, 0], "t_beta": [0, 20]},
    "max_word_len": 5,
    "oracle_grid": 64,
    "tol": 1e-9,
    "sweep": {"parameter": "t_alpha", "from": 20.0, "to": 0.5,
              "steps": 40, "log": true}
  })";
  const ScenarioConfig cfg = parse_config(text);
  REQUIRE(cfg.family.has_value());
  CHECK(*cfg.family->eps == doctest::Approx(0.01));
  CHECK(cfg.max_word_len == 5);
  CHECK(cfg.oracle_grid == 64);
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->log);

  const ScenarioConfig again = parse_config(serialize_config(cfg));
  CHECK(again == cfg);
}

TEST_CASE("matrix config accepts scalars and [re, im] pairs") {
  const ScenarioConfig cfg = parse_config(
      R"({"matrix": [2.5, -1, [1, 0], 0], "lattice": {"t_alpha": [0.9, 0]}})");
  REQUIRE(cfg.matrix.has_value());
  CHECK((*cfg.matrix)[0] == complexd(2.5, 0.0));
  CHECK((*cfg.matrix)[2] == complexd(1.0, 0.0));
  CHECK(cfg.t_alpha == complexd(0.9, 0.0));
  CHECK(cfg.t_beta == complexd(0.0, 20.0));  // untouched default
}

TEST_CASE("malformed json raises MalformedInput") {
  CHECK_THROWS_AS(parse_config("{"), MalformedInput);
  CHECK_THROWS_AS(parse_config(R"({"matrix": [1, 2, 3]})"), MalformedInput);
}

TEST_CASE("family helpers") {
  CHECK(family_eps(FamilySpec{0.25, std::nullopt, 0.5}) == 0.25);
  CHECK(family_eps(FamilySpec{std::nullopt, 10.0, 0.5}) ==
        doctest::Approx(0.5 * std::exp(-10.0)));
  CHECK_THROWS_AS(family_generator(0.0), MalformedInput);
  CHECK_THROWS_AS(family_generator(-1.0), MalformedInput);

  ScenarioConfig cfg;
  cfg.family = FamilySpec{0.04, std::nullopt, 0.5};
  const auto tr = config_trace(cfg);
  REQUIRE(tr.has_value());
  CHECK(std::abs(*tr - complexd(0.0, 0.2)) < 1e-15);

  ScenarioConfig m;
  m.matrix = {complexd(2.5, 0.0), complexd(-1.0, 0.0), complexd(1.0, 0.0),
              complexd(0.0, 0.0)};
  CHECK(!config_trace(m).has_value());
}

TEST_CASE("sweep value generation") {
  SweepSpec explicit_vals;
  explicit_vals.values = {3.0, 2.0, 1.0};
  CHECK(sweep_values(explicit_vals) == std::vector<double>{3.0, 2.0, 1.0});

  SweepSpec ramp{"t_alpha", {}, 1.0, 16.0, 5, false};
  const auto lin = sweep_values(ramp);
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == doctest::Approx(1.0));
  CHECK(lin.back() == doctest::Approx(16.0));
  CHECK(lin[2] == doctest::Approx(8.5));

  SweepSpec lramp{"t_alpha", {}, 1.0, 16.0, 5, true};
  const auto lg = sweep_values(lramp);
  CHECK(lg[2] == doctest::Approx(4.0));  // geometric midpoint

  SweepSpec missing{"t_alpha", {}, 1.0, std::nullopt, 5, false};
  CHECK_THROWS_AS(sweep_values(missing), MalformedInput);
}
