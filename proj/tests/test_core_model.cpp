#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "vtype/core_model.hpp"

using namespace vtype;

namespace {

SystemParams rates(double g21, double g31, double r1, double r2) {
  SystemParams p;
  p.gamma21 = g21;
  p.gamma31 = g31;
  p.r1 = r1;
  p.r2 = r2;
  return p;
}

}  // namespace

TEST_CASE("coherence rates from decay and pump rates") {
  auto c = coherence_rates(rates(1, 1, 0, 0));
  CHECK(c.Gamma21 == 0.5);
  CHECK(c.Gamma31 == 0.5);
  CHECK(c.Gamma32 == 1.0);

  c = coherence_rates(rates(1, 1, 1.5, 0));
  CHECK(c.Gamma21 == 1.25);
  CHECK(c.Gamma31 == 1.25);
  CHECK(c.Gamma32 == 1.0);

  c = coherence_rates(rates(1, 1, 1.5, 2.43));
  CHECK(c.Gamma21 == doctest::Approx(2.465).epsilon(1e-15));
  CHECK(c.Gamma31 == doctest::Approx(2.465).epsilon(1e-15));
  CHECK(c.Gamma32 == 1.0);
}

TEST_CASE("coherence rates: linear in the pumps, symmetric in the decays") {
  testing::Gen gen(11);
  for (int k = 0; k < 1000; ++k) {
    const auto p = rates(gen.uniform(0.1, 5), gen.uniform(0.1, 5), gen.uniform(0, 5), gen.uniform(0, 5));
    const double d1 = gen.uniform(0, 2);
    const double d2 = gen.uniform(0, 2);
    const auto base = coherence_rates(p);
    const auto bumped = coherence_rates(rates(p.gamma21, p.gamma31, p.r1 + d1, p.r2 + d2));
    CHECK(bumped.Gamma21 - base.Gamma21 == doctest::Approx(0.5 * (d1 + d2)).epsilon(1e-12));
    CHECK(bumped.Gamma31 - base.Gamma31 == doctest::Approx(0.5 * (d1 + d2)).epsilon(1e-12));
    CHECK(bumped.Gamma32 == base.Gamma32);

    const auto swapped = coherence_rates(rates(p.gamma31, p.gamma21, p.r1, p.r2));
    CHECK(swapped.Gamma21 == base.Gamma31);
    CHECK(swapped.Gamma31 == base.Gamma21);
    CHECK(swapped.Gamma32 == base.Gamma32);

    CHECK(base.Gamma21 > 0);
    CHECK(base.Gamma31 > 0);
    CHECK(base.Gamma32 > 0);
  }
}

TEST_CASE("validate_params") {
  SUBCASE("defaults are valid") {
    SystemParams p;
    CHECK(check_params(p).empty());
    CHECK(&validate_params(p) == &p);
  }
  SUBCASE("negative pump") {
    SystemParams p;
    p.r1 = -0.1;
    const auto v = check_params(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Errc::NegativeRate);
    CHECK(v[0].field == "r1");
    CHECK_THROWS_AS(validate_params(p), InvalidParams);
  }
  SUBCASE("zero decay") {
    SystemParams p;
    p.gamma31 = 0.0;
    const auto v = check_params(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Errc::NonPositiveDecay);
    CHECK(v[0].field == "gamma31");
  }
  SUBCASE("non-finite and scale violations are all reported") {
    SystemParams p;
    p.omega_c = std::numeric_limits<double>::quiet_NaN();
    p.delta_p = std::numeric_limits<double>::infinity();
    p.chi_prefactor = 0.0;
    p.r2 = -1.0;
    const auto v = check_params(p);
    REQUIRE(v.size() == 4);
    CHECK(v[0].field == "r2");
    CHECK(v[1].kind == Errc::NonFinite);
    CHECK(v[1].field == "omega_c");
    CHECK(v[2].field == "delta_p");
    CHECK(v[3].kind == Errc::NonPositiveScale);
    CHECK(v[3].field == "chi_prefactor");
    try {
      validate_params(p);
      FAIL("expected InvalidParams");
    } catch (const InvalidParams& e) {
      CHECK(e.violations().size() == 4);
      CHECK(std::string(e.what()).find("NegativeRate(r2") != std::string::npos);
    }
  }
}
