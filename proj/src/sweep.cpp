#include "vtype/sweep.hpp"

#include <cmath>

#include "vtype/csv.hpp"
#include "vtype/dynamics.hpp"
#include "vtype/steadystate.hpp"

namespace vtype {

std::vector<double> linspace(double min, double max, std::size_t n) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max) || n < 2) {
    throw Error(Errc::InvalidRange, "need finite min < max and at least 2 points, got [" +
                                        format_number(min) + ", " + format_number(max) + "] with " +
                                        std::to_string(n) + " points");
  }
  std::vector<double> out(n);
  const double span = max - min;
  const double last = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = min + span * (static_cast<double>(k) / last);
  out.back() = max;
  return out;
}

SpectrumSeries spectrum_sweep(const SystemParams& params, double delta_p_min, double delta_p_max,
                              std::size_t n_points, Backend backend) {
  SpectrumSeries s;
  s.delta_p = linspace(delta_p_min, delta_p_max, n_points);
  s.params_used = params;
  if (backend == Backend::Exact) {
    validate_params(params);
    if (params.omega_p == 0.0) {
      throw Error(Errc::InvalidRange, "the exact backend needs a non-zero omega_p to form rho31/omega_p");
    }
  }
  s.chi_real.reserve(n_points);
  s.chi_imag.reserve(n_points);
  s.ng_minus_1.reserve(n_points);

  SystemParams p = params;
  for (double dp : s.delta_p) {
    p.delta_p = dp;
    if (backend == Backend::Analytic) {
      const auto chi = susceptibility(p);
      s.chi_real.push_back(chi.chi_real);
      s.chi_imag.push_back(chi.chi_imag);
      s.ng_minus_1.push_back(group_index(p).n_g_minus_1);
    } else {
      const auto r = steady_state_response(p);
      const double scale = p.chi_prefactor / p.omega_p;
      const std::complex<double> chi = scale * r.state.rho(3, 1);
      s.chi_real.push_back(chi.real());
      s.chi_imag.push_back(chi.imag());
      s.ng_minus_1.push_back(
          group_index_minus_one(chi.real(), scale * r.drho31_ddelta_p.real(), p.omega_scale));
    }
  }
  return s;
}

const char* to_string(ContourQuantity q) noexcept {
  return q == ContourQuantity::GroupIndexMinusOne ? "group_index_minus_1" : "chi_imag";
}

std::vector<double> contour_levels(ContourQuantity q) {
  if (q == ContourQuantity::GroupIndexMinusOne) return {0.0, -3.0, -10.0, -20.0, -30.0};
  return {0.0, -0.005, -0.012, -0.03, -0.07, -0.11, -0.15};
}

ContourGrid contour_grid(ContourQuantity quantity, AxisRange omega_c, AxisRange r1, std::size_t nx,
                         std::size_t ny, double r2, double omega_scale) {
  ContourGrid g{linspace(omega_c.min, omega_c.max, nx), linspace(r1.min, r1.max, ny), {}, quantity, r2};
  if (r1.min < 0.0 || r2 < 0.0) throw Error(Errc::NegativeRate, "pump rates must be non-negative");
  g.values.reserve(nx * ny);
  for (double r : g.y_axis) {
    for (double oc : g.x_axis) {
      g.values.push_back(quantity == ContourQuantity::GroupIndexMinusOne
                             ? group_index_closed_form(oc, r, r2, omega_scale)
                             : absorption_closed_form(oc, r, r2));
    }
  }
  return g;
}

std::vector<Polyline> contour_isolines(const ContourGrid& grid) {
  std::vector<Polyline> out;
  for (double level : contour_levels(grid.quantity)) {
    auto lines = extract_isolines(grid.view(), level);
    out.insert(out.end(), std::make_move_iterator(lines.begin()), std::make_move_iterator(lines.end()));
  }
  return out;
}

const char* to_string(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::R1Sweep: return "r1_sweep";
    case CurveKind::OmegaCSweep: return "omega_c_sweep";
    case CurveKind::R1SweepZeroGainR2: return "r1_sweep_with_eq8_r2";
  }
  return "unknown";
}

std::vector<CurveSeries> group_index_curves(CurveKind kind, const SystemParams& fixed,
                                            double axis_min, double axis_max, std::size_t n_points,
                                            std::span<const double> family) {
  const auto axis = linspace(axis_min, axis_max, n_points);
  std::vector<CurveSeries> out;
  out.reserve(family.size());
  for (double member : family) {
    CurveSeries c{kind, member, {}, axis, {}, {}};
    c.label = (kind == CurveKind::OmegaCSweep ? "r1=" : "omega_c=") + format_number(member);
    c.ng_minus_1.reserve(n_points);
    c.r2_used.reserve(n_points);
    for (double x : axis) {
      const double omega_c = kind == CurveKind::OmegaCSweep ? x : member;
      const double r1 = kind == CurveKind::OmegaCSweep ? member : x;
      double r2 = fixed.r2;
      if (kind == CurveKind::R1SweepZeroGainR2) {
        const auto z = solve_zero_gain_r2(r1, omega_c);
        if (!z.physical()) {
          c.ng_minus_1.emplace_back();
          c.r2_used.emplace_back();
          continue;
        }
        r2 = z.r2;
      }
      if (r1 < 0.0 || r2 < 0.0) {
        throw Error(Errc::NegativeRate, "pump rates must be non-negative on the swept axis");
      }
      c.ng_minus_1.emplace_back(group_index_closed_form(omega_c, r1, r2, fixed.omega_scale));
      c.r2_used.emplace_back(r2);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vtype
