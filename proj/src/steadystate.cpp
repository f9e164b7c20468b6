#include "vtype/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "vtype/csv.hpp"

namespace vtype {

using cdouble = std::complex<double>;

namespace {

void require_analytic_domain(const SystemParams& p) {
  validate_params(p);
  if (p.delta_c != 0.0) {
    throw Error(Errc::CouplingDetuned, "the analytic solution needs delta_c = 0, got " +
                                           format_number(p.delta_c) +
                                           "; use the exact backend for a detuned coupling field");
  }
  const double limit = kWeakProbeRatio * std::min(p.gamma21, p.gamma31);
  if (std::abs(p.omega_p) > limit) {
    throw Error(Errc::ProbeTooStrong, "|omega_p| = " + format_number(std::abs(p.omega_p)) +
                                          " exceeds the weak-probe limit " + format_number(limit));
  }
}

// chi / prefactor = i [a (G32 - i D) - c] / [(G31 - i D)(G32 - i D) + |Oc|^2]
// with a = rho11 - rho33 and c = |Oc|^2 (rho11 - rho22) / G21; the same
// rational function as the weak-probe rho31 after clearing the inner fraction.
struct ProbeResponse {
  cdouble numerator;
  cdouble denominator;
  cdouble d_numerator;
  cdouble d_denominator;
};

ProbeResponse probe_response(const SystemParams& p, const AnalyticState& s) {
  const auto rates = coherence_rates(p);
  const cdouble i{0.0, 1.0};
  const double oc2 = std::norm(cdouble{p.omega_c});
  const double a = s.rho11 - s.rho33;
  const double c = oc2 * (s.rho11 - s.rho22) / rates.Gamma21;
  const cdouble d31 = rates.Gamma31 - i * p.delta_p;
  const cdouble d32 = rates.Gamma32 - i * p.delta_p;
  return {i * (a * d32 - c), d31 * d32 + oc2, i * (-i * a), -i * d32 - i * d31};
}

}  // namespace

AnalyticState analytic_steady_state(const SystemParams& p) {
  require_analytic_domain(p);
  const auto rates = coherence_rates(p);
  const cdouble i{0.0, 1.0};
  const cdouble oc = p.omega_c;
  const double oc2 = std::norm(oc);

  const double upper_ratio = (2.0 * oc2 + rates.Gamma21 * p.r2) / (rates.Gamma21 * p.gamma21 + 2.0 * oc2);
  AnalyticState s{};
  s.rho11 = 1.0 / (1.0 + p.r1 / p.gamma31 + upper_ratio);
  s.rho22 = upper_ratio * s.rho11;
  s.rho33 = p.r1 / p.gamma31 * s.rho11;
  s.rho21 = i * std::conj(oc) / rates.Gamma21 * (s.rho11 - s.rho22);

  const cdouble d31 = rates.Gamma31 - i * p.delta_p;
  const cdouble d32 = rates.Gamma32 - i * p.delta_p;
  // rho31 / conj(Omega_p)
  s.rho31_over_probe =
      i / (d31 + oc2 / d32) * ((s.rho11 - s.rho33) - oc2 / (rates.Gamma21 * d32) * (s.rho11 - s.rho22));
  return s;
}

Susceptibility susceptibility(const SystemParams& p) {
  const auto s = analytic_steady_state(p);
  const cdouble chi = p.chi_prefactor * s.rho31_over_probe;
  return {chi.real(), chi.imag()};
}

double dispersion_slope(const SystemParams& p) {
  const auto s = analytic_steady_state(p);
  const auto r = probe_response(p, s);
  const cdouble dchi =
      (r.d_numerator * r.denominator - r.numerator * r.d_denominator) / (r.denominator * r.denominator);
  return p.chi_prefactor * dchi.real();
}

const char* to_string(Propagation p) noexcept {
  switch (p) {
    case Propagation::Subluminal: return "subluminal";
    case Propagation::Superluminal: return "superluminal";
    case Propagation::Negative: return "negative";
  }
  return "unknown";
}

GroupIndexResult classify_group_index(double n_g_minus_1) {
  constexpr double tie = 1e-12;
  const double n_g = 1.0 + n_g_minus_1;
  GroupIndexResult out{n_g_minus_1, 1.0 / n_g, Propagation::Subluminal, false};
  if (std::abs(n_g_minus_1) <= tie) {
    out.on_boundary = true;
  } else if (std::abs(n_g) <= tie) {
    out.classification = Propagation::Negative;
    out.on_boundary = true;
  } else if (n_g_minus_1 > 0.0) {
    out.classification = Propagation::Subluminal;
  } else if (n_g > 0.0) {
    out.classification = Propagation::Superluminal;
  } else {
    out.classification = Propagation::Negative;
  }
  return out;
}

double group_index_minus_one(double chi_real, double chi_slope, double omega_scale) {
  return 2.0 * std::numbers::pi * chi_real + omega_scale * chi_slope;
}

GroupIndexResult group_index(const SystemParams& p) {
  const auto chi = susceptibility(p);
  return classify_group_index(group_index_minus_one(chi.chi_real, dispersion_slope(p), p.omega_scale));
}

namespace {

struct LineCentreTerms {
  double a;
  double b;
};

LineCentreTerms line_centre_terms(double omega_c, double r1, double r2) {
  const double oc2 = omega_c * omega_c;
  const double s = r2 + r1 + 1.0;
  return {2.0 * oc2 + s, s * s + 4.0 * (r1 + 2.0) * oc2};
}

}  // namespace

double group_index_closed_form(double omega_c, double r1, double r2, double omega_scale) {
  const auto [a, b] = line_centre_terms(omega_c, r1, r2);
  const double oc2 = omega_c * omega_c;
  const double braces = 4.0 * (r1 - 1.0) * (r2 + r1 + 1.0) -
                        4.0 * (r1 * (r1 - 5.0) + r2 + 2.0 * r1 * r2 + r2 * r2) * oc2 -
                        16.0 * (r1 - 1.0) * oc2 * oc2;
  return omega_scale / (a * a * b) * braces;
}

double absorption_closed_form(double omega_c, double r1, double r2) {
  const auto [a, b] = line_centre_terms(omega_c, r1, r2);
  const double oc2 = omega_c * omega_c;
  return 4.0 * (r2 - 2.0 * r1 + 1.0) * oc2 / (a * b) - 2.0 * (r1 - 1.0) * (r2 + r1 + 1.0) / (a * b);
}

ZeroGainPump solve_zero_gain_r2(double r1, double omega_c) noexcept {
  const double oc2 = omega_c * omega_c;
  const double denominator = -r1 + 2.0 * oc2 + 1.0;
  const double scale = std::max({std::abs(r1), 2.0 * oc2, 1.0});
  if (std::abs(denominator) <= 1e-12 * scale) return {0.0, true};
  return {(r1 * r1 + 4.0 * r1 * oc2 - 2.0 * oc2 - 1.0) / denominator, false};
}

UnphysicalPump::UnphysicalPump(double r2)
    : Error(Errc::UnphysicalPump, "zero-gain pump rate r2 = " + format_number(r2) + " is negative"),
      r2_(r2) {}

double zero_gain_r2(double r1, double omega_c) {
  const auto z = solve_zero_gain_r2(r1, omega_c);
  if (z.singular) {
    throw Error(Errc::SingularDenominator, "r1 = 2 omega_c^2 + 1 (r1 = " + format_number(r1) +
                                               ", omega_c = " + format_number(omega_c) + ")");
  }
  if (z.r2 < 0.0) throw UnphysicalPump(z.r2);
  return z.r2;
}

namespace {

template <typename F>
double bracketed_root(F f, double lo, double hi, const char* what) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(lo < hi) || std::signbit(flo) == std::signbit(fhi)) {
    throw Error(Errc::InvalidRange, std::string("no sign change of n_g - 1 in ") + what + " bracket [" +
                                        format_number(lo) + ", " + format_number(hi) + "]");
  }
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iterations);
  return 0.5 * (a + b);
}

}  // namespace

double find_r1_threshold(double omega_c, double r2, double lo, double hi) {
  return bracketed_root([=](double r1) { return group_index_closed_form(omega_c, r1, r2); }, lo, hi,
                        "r1");
}

double find_omega_c_threshold(double r1, double r2, double lo, double hi) {
  return bracketed_root([=](double oc) { return group_index_closed_form(oc, r1, r2); }, lo, hi,
                        "omega_c");
}

}  // namespace vtype
