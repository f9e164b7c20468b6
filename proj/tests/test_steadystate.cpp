#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "vtype/dynamics.hpp"
#include "vtype/steadystate.hpp"
#include "vtype/validation.hpp"

using namespace vtype;

namespace {

SystemParams at(double omega_c, double r1, double r2, double delta_p = 0.0) {
  SystemParams p;
  p.omega_c = omega_c;
  p.r1 = r1;
  p.r2 = r2;
  p.delta_p = delta_p;
  return p;
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ConfigSyntax;
}

// Independent transcription of the line-centre formulas.
double eq6(double w, double r1, double r2) {
  const double w2 = w * w;
  const double A = 2 * w2 + r2 + r1 + 1;
  const double B = (r2 + r1 + 1) * (r2 + r1 + 1) + 4 * (r1 + 2) * w2;
  return 100.0 / (A * A * B) *
         (4 * (r1 - 1) * (r2 + r1 + 1) - 4 * (r1 * (r1 - 5) + r2 + 2 * r1 * r2 + r2 * r2) * w2 -
          16 * (r1 - 1) * w2 * w2);
}

double eq7(double w, double r1, double r2) {
  const double w2 = w * w;
  const double A = 2 * w2 + r2 + r1 + 1;
  const double B = (r2 + r1 + 1) * (r2 + r1 + 1) + 4 * (r1 + 2) * w2;
  return (4 * (r2 - 2 * r1 + 1) * w2 - 2 * (r1 - 1) * (r2 + r1 + 1)) / (A * B);
}

}  // namespace

TEST_CASE("analytic steady state: examples") {
  SUBCASE("no drives") {
    const auto s = analytic_steady_state(at(0, 0, 0));
    CHECK(s.rho11 == 1.0);
    CHECK(s.rho22 == 0.0);
    CHECK(s.rho33 == 0.0);
    CHECK(s.rho21 == cdouble{0.0});
  }
  SUBCASE("pump inverts the probe transition") {
    const auto s = analytic_steady_state(at(0, 1.5, 0));
    CHECK(s.rho11 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(s.rho33 == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(s.rho33 > s.rho11);
  }
  SUBCASE("zero-gain point") {
    CHECK(std::abs(susceptibility(at(1.69, 1.5, 2.43)).chi_imag) <= 1e-2);
  }
}

TEST_CASE("analytic steady state: errors") {
  SystemParams p;
  p.delta_c = 0.5;
  CHECK(code_of([&] { analytic_steady_state(p); }) == Errc::CouplingDetuned);
  p = SystemParams{};
  p.omega_p = 0.2;
  CHECK(code_of([&] { analytic_steady_state(p); }) == Errc::ProbeTooStrong);
  p.omega_p = 0.1;
  CHECK_NOTHROW(analytic_steady_state(p));
  p = SystemParams{};
  p.r2 = -1.0;
  CHECK(code_of([&] { analytic_steady_state(p); }) == Errc::NegativeRate);
}

TEST_CASE("susceptibility: bare transition") {
  const auto c = susceptibility(at(0, 0, 0));
  CHECK(c.chi_real == 0.0);
  CHECK(c.chi_imag == doctest::Approx(2.0).epsilon(1e-15));
  for (double dp : {-7.0, -1.0, -0.25, 0.1, 0.5, 3.0}) {
    const auto s = susceptibility(at(0, 0, 0, dp));
    CHECK(s.chi_real == doctest::Approx(-dp / (0.25 + dp * dp)).epsilon(1e-14));
    CHECK(s.chi_real == doctest::Approx(testing::bare_lorentzian(dp).real()).epsilon(1e-14));
    CHECK(s.chi_imag == doctest::Approx(testing::bare_lorentzian(dp).imag()).epsilon(1e-14));
  }
}

TEST_CASE("susceptibility: line-centre absorption without pumps") {
  for (double w : {0.0, 0.5, 0.7, 1.7, 4.0, 6.0}) {
    CHECK(susceptibility(at(w, 0, 0)).chi_imag == doctest::Approx(2.0 / (8 * w * w + 1)).epsilon(1e-13));
  }
  CHECK(susceptibility(at(0.5, 0, 0)).chi_imag == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("susceptibility scales with the prefactor and ignores the probe amplitude") {
  auto p = at(1.7, 1.5, 0.3, 0.4);
  const auto base = susceptibility(p);
  p.chi_prefactor = 2.5;
  CHECK(susceptibility(p).chi_imag == doctest::Approx(2.5 * base.chi_imag).epsilon(1e-14));
  p.chi_prefactor = 1.0;
  for (double op : {1e-6, 1e-4, 0.05, -0.03}) {
    p.omega_p = op;
    const auto c = susceptibility(p);
    CHECK(std::memcmp(&c.chi_real, &base.chi_real, sizeof(double)) == 0);
    CHECK(std::memcmp(&c.chi_imag, &base.chi_imag, sizeof(double)) == 0);
  }
}

TEST_CASE("group index: examples") {
  const auto bare = group_index(at(0, 0, 0));
  CHECK(bare.n_g_minus_1 == doctest::Approx(-400.0).epsilon(1e-14));
  CHECK(bare.classification == Propagation::Negative);
  CHECK(bare.v_g_over_c == doctest::Approx(1.0 / -399.0));

  CHECK(group_index(at(10.0, 0, 0)).n_g_minus_1 > 0);
  CHECK(group_index(at(10.0, 0, 0)).classification == Propagation::Subluminal);
  CHECK(std::abs(group_index(at(std::sqrt(0.5), 0, 0)).n_g_minus_1) <= 1e-12);
}

TEST_CASE("group index classification") {
  CHECK(classify_group_index(2.0).classification == Propagation::Subluminal);
  CHECK(classify_group_index(-0.5).classification == Propagation::Superluminal);
  CHECK(classify_group_index(-1.5).classification == Propagation::Negative);
  const auto tie = classify_group_index(1e-13);
  CHECK(tie.on_boundary);
  CHECK(tie.classification == Propagation::Subluminal);
  const auto pole = classify_group_index(-1.0 + 1e-13);
  CHECK(pole.on_boundary);
  CHECK(pole.classification == Propagation::Negative);
  CHECK(std::string(to_string(Propagation::Superluminal)) == "superluminal");
}

TEST_CASE("group index honours omega_scale") {
  auto p = at(1.7, 1.5, 0.0);
  p.omega_scale = 50.0;
  const double chi = susceptibility(p).chi_real;
  const double slope = dispersion_slope(p);
  CHECK(group_index(p).n_g_minus_1 == doctest::Approx(2 * std::numbers::pi * chi + 50.0 * slope));
}

TEST_CASE("closed forms: examples") {
  CHECK(group_index_closed_form(0, 0, 0) == doctest::Approx(-400.0).epsilon(1e-15));
  CHECK(std::abs(group_index_closed_form(std::sqrt(0.5), 0, 0)) <= 1e-12);
  CHECK(absorption_closed_form(0.5, 0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(absorption_closed_form(1.69, 1.5, 2.43)) <= 1e-2);
  CHECK(absorption_closed_form(1.0, 1.0, 0.0) == doctest::Approx(-1.0 / 16.0).epsilon(1e-15));
  for (double w : {0.3, 1.0, 2.5}) {
    const double A = 2 * w * w + 2;
    const double B = 4 + 12 * w * w;
    CHECK(absorption_closed_form(w, 1.0, 0.0) == doctest::Approx(-4 * w * w / (A * B)).epsilon(1e-14));
  }
  CHECK(group_index_closed_form(1.7, 1.5, 0.0, 50.0) ==
        doctest::Approx(0.5 * group_index_closed_form(1.7, 1.5, 0.0)).epsilon(1e-15));
}

TEST_CASE("closed forms agree with the independent transcription") {
  for (const auto& p : random_parameter_grid(kDefaultValidationSeed, 200)) {
    CHECK(group_index_closed_form(p.omega_c, p.r1, p.r2) ==
          doctest::Approx(eq6(p.omega_c, p.r1, p.r2)).epsilon(1e-12));
    CHECK(absorption_closed_form(p.omega_c, p.r1, p.r2) ==
          doctest::Approx(eq7(p.omega_c, p.r1, p.r2)).epsilon(1e-12).scale(1e-12));
  }
}

TEST_CASE("closed forms agree with the general pipeline") {
  for (const auto& p : random_parameter_grid(kDefaultValidationSeed, 200)) {
    const double ng = group_index(p).n_g_minus_1;
    const double chi = susceptibility(p).chi_imag;
    CHECK(std::abs(group_index_closed_form(p.omega_c, p.r1, p.r2) - ng) <= 1e-10 * std::max(1.0, std::abs(ng)));
    CHECK(std::abs(absorption_closed_form(p.omega_c, p.r1, p.r2) - chi) <= 1e-10 * std::max(1.0, std::abs(chi)));
  }
}

TEST_CASE("dispersion slope agrees with a finite-difference oracle") {
  for (auto p : figure_parameter_sets()) {
    for (double dp : {-6.0, -1.3, -0.2, 0.0, 0.45, 2.2}) {
      p.delta_p = dp;
      const double fd = testing::richardson_derivative(
          [&](double x) {
            auto q = p;
            q.delta_p = x;
            return susceptibility(q).chi_real;
          },
          dp);
      const double exact = dispersion_slope(p);
      if (std::abs(exact) > 1e-8) CHECK(std::abs(exact - fd) / std::abs(exact) <= 1e-6);
    }
  }
}

TEST_CASE("analytic state matches the exact steady state for a weak probe") {
  for (auto p : figure_parameter_sets()) {
    for (double dp : {-2.0, 0.0, 0.8}) {
      p.delta_p = dp;
      p.omega_p = 1e-4;
      const auto a = analytic_steady_state(p);
      const auto e = steady_state_linear(p);
      CHECK(std::abs(a.rho11 - e.population(1)) <= 1e-6);
      CHECK(std::abs(a.rho22 - e.population(2)) <= 1e-6);
      CHECK(std::abs(a.rho33 - e.population(3)) <= 1e-6);
      CHECK(std::abs(a.rho21 - e.rho(2, 1)) <= 1e-6);
    }
  }
}

TEST_CASE("population inversion on the probe transition iff r1 > gamma31") {
  testing::Gen gen(5);
  for (int k = 0; k < 500; ++k) {
    auto p = at(gen.uniform(0, 6), gen.uniform(0, 5), gen.uniform(0, 5));
    p.gamma31 = gen.uniform(0.5, 2);
    if (std::abs(p.r1 - p.gamma31) < 1e-9) continue;
    const auto s = analytic_steady_state(p);
    CHECK((s.rho33 > s.rho11) == (p.r1 > p.gamma31));
  }
}

TEST_CASE("zero-gain pump") {
  CHECK(zero_gain_r2(1.5, 1.69) == doctest::Approx(2.431679521123518).epsilon(1e-14));
  CHECK(std::abs(zero_gain_r2(1.5, 1.69) - 2.43) <= 0.005);
  CHECK(zero_gain_r2(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

  const auto singular = solve_zero_gain_r2(2 * 1.3 * 1.3 + 1, 1.3);
  CHECK(singular.singular);
  CHECK_FALSE(singular.physical());
  CHECK(code_of([] { zero_gain_r2(3.0, 1.0); }) == Errc::SingularDenominator);

  try {
    zero_gain_r2(0.5, 0.5);
    FAIL("expected UnphysicalPump");
  } catch (const UnphysicalPump& e) {
    CHECK(e.code() == Errc::UnphysicalPump);
    CHECK(e.value() == doctest::Approx(-0.75).epsilon(1e-15));
  }
  CHECK(solve_zero_gain_r2(0.2, 0.5).r2 == doctest::Approx(-0.9692307692307692).epsilon(1e-12));
}

TEST_CASE("zero-gain pump cancels line-centre absorption") {
  testing::Gen gen(11);
  int used = 0;
  for (int k = 0; k < 500; ++k) {
    const double w = gen.uniform(0, 6);
    const double r1 = gen.uniform(0, 5);
    const auto z = solve_zero_gain_r2(r1, w);
    if (!z.physical()) continue;
    ++used;
    CHECK(std::abs(absorption_closed_form(w, r1, z.r2)) <= 1e-12);
  }
  CHECK(used > 50);
  CHECK(std::abs(absorption_closed_form(1.69, 1.5, zero_gain_r2(1.5, 1.69))) <= 1e-12);
}

TEST_CASE("threshold in r1 approaches one for a strong coupling field") {
  const auto oracle = [](double w) {
    return testing::bisect([w](double r1) { return eq6(w, r1, 0.0); }, 1.0, 3.0);
  };
  for (double w : {1.7, 4.0, 6.0, 10.0, 50.0}) {
    const double root = find_r1_threshold(w, 0.0, 1.0, 3.0);
    CHECK(root == doctest::Approx(oracle(w)).epsilon(1e-12));
    CHECK(root > 1.0);
  }
  CHECK(find_r1_threshold(10.0, 0.0, 1.0, 3.0) == doctest::Approx(1.0100758211825513).epsilon(1e-12));
  CHECK(find_r1_threshold(50.0, 0.0, 1.0, 3.0) == doctest::Approx(1.000400120052022).epsilon(1e-12));
  CHECK(find_r1_threshold(6.0, 0.0, 1.0, 3.0) == doctest::Approx(1.0283744227876629).epsilon(1e-12));
  CHECK(find_r1_threshold(4.0, 0.0, 1.0, 3.0) == doctest::Approx(1.0656420603682333).epsilon(1e-12));
  CHECK(find_r1_threshold(1.7, 0.0, 1.0, 3.0) == doctest::Approx(1.4885519278437488).epsilon(1e-12));
}

TEST_CASE("threshold in the coupling field without pumps") {
  CHECK(std::abs(find_omega_c_threshold(0.0, 0.0, 0.1, 3.0) - std::sqrt(0.5)) <= 1e-12);
  CHECK(code_of([] { find_omega_c_threshold(0.0, 0.0, 1.0, 3.0); }) == Errc::InvalidRange);
  CHECK(code_of([] { find_r1_threshold(10.0, 0.0, 2.0, 1.0); }) == Errc::InvalidRange);
}
