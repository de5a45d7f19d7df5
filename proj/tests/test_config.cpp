#include <doctest.h>

#include "plepair/config.hpp"
#include "plepair/errors.hpp"
#include "plepair/io.hpp"

using namespace plepair;

namespace {

const char* kMinimal = R"({
  "xi": 1.5707963267948966,
  "theta": 1.5707963267948966,
  "phi": 1.5707963267948966,
  "r12_lambda": 0.08,
  "rabi1": 2.0
})";

}  // namespace

TEST_CASE("minimal config parses with defaults") {
  const SimConfig cfg = parse_config(kMinimal);
  CHECK(cfg.params.gamma1 == 1.0);
  CHECK(cfg.params.mu == 1.0);
  CHECK(cfg.params.rabi1 == 2.0);
  CHECK(cfg.params.rabi2() == 2.0);
  CHECK(cfg.geometry.psi == doctest::Approx(pi / 2));
  CHECK(cfg.t_max == 200.0);
  CHECK(cfg.dt == 1e-3);
}

TEST_CASE("missing required keys are named") {
  try {
    parse_config(R"({"xi": 1.0, "theta": 1.5707963267948966, "phi": 0.0})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("r12_lambda") != std::string::npos);
  }
}

TEST_CASE("unknown keys are a hard error") {
  try {
    parse_config(R"({
      "xi": 1.5707963267948966, "theta": 1.5707963267948966,
      "phi": 0.0, "r12_lambda": 0.08, "rabbi1": 2.0
    })");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("rabbi1") != std::string::npos);
  }
}

TEST_CASE("grid keys are demanded by the accessors") {
  const SimConfig cfg = parse_config(kMinimal);
  CHECK_THROWS_AS(cfg.detuning_grid(), ConfigError);
  CHECK_THROWS_AS(cfg.theta_grid(), ConfigError);

  const SimConfig with_grid = parse_config(R"({
    "xi": 1.5707963267948966, "theta": 1.5707963267948966,
    "phi": 0.0, "r12_lambda": 0.08, "rabi1": 2.0,
    "detuning_min": -2.0, "detuning_max": 2.0, "detuning_steps": 5
  })");
  const auto grid = with_grid.detuning_grid();
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == -2.0);
  CHECK(grid.back() == 2.0);
  CHECK(grid[2] == doctest::Approx(0.0));
}

TEST_CASE("type and range violations are rejected") {
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1,2]"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "xi": "sideways", "theta": 1.5707963267948966,
    "phi": 0.0, "r12_lambda": 0.08
  })"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "xi": 1.5707963267948966, "theta": 1.5707963267948966,
    "phi": 0.0, "r12_lambda": 0.08, "detuning_steps": 2.5
  })"),
                  ConfigError);
  // geometry invariant violations surface at parse time
  CHECK_THROWS_AS(parse_config(R"({
    "xi": 3.141592653589793, "theta": 1.0,
    "phi": 0.0, "r12_lambda": 0.08
  })"),
                  GeometryError);
  // detector phase needs the frequency scale
  CHECK_THROWS_AS(parse_config(R"({
    "xi": 1.5707963267948966, "theta": 1.5707963267948966,
    "phi": 0.0, "r12_lambda": 0.08, "r_detector_lambda": 100.0
  })"),
                  ConfigError);
}

TEST_CASE("twelve significant digit formatting") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-10.5949739595) == "-10.5949739595");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(2e-7) == "2e-07");
}
