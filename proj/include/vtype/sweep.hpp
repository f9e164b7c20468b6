#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtype/contour.hpp"
#include "vtype/core_model.hpp"

namespace vtype {

/// Uniform grid including both endpoints; the last point is exactly `max`.
/// Throws InvalidRange unless min < max (both finite) and n >= 2.
std::vector<double> linspace(double min, double max, std::size_t n);

enum class Backend { Analytic, Exact };

struct SpectrumSeries {
  std::vector<double> delta_p;
  std::vector<double> chi_real;
  std::vector<double> chi_imag;
  std::vector<double> ng_minus_1;
  SystemParams params_used;
};

/// chi over a probe-detuning sweep. The analytic backend uses the weak-probe
/// susceptibility; the exact backend solves the full steady state at every
/// point and divides rho31 by conj(Omega_p).
SpectrumSeries spectrum_sweep(const SystemParams& params, double delta_p_min, double delta_p_max,
                              std::size_t n_points, Backend backend = Backend::Analytic);

enum class ContourQuantity { GroupIndexMinusOne, ChiImag };

const char* to_string(ContourQuantity q) noexcept;

/// Levels drawn for each quantity: zero first, then the labelled contours.
std::vector<double> contour_levels(ContourQuantity q);

struct ContourGrid {
  std::vector<double> x_axis;  // Omega_c
  std::vector<double> y_axis;  // r1
  std::vector<double> values;  // row-major, values[iy * nx + ix]
  ContourQuantity quantity;
  double r2;

  double at(std::size_t ix, std::size_t iy) const { return values[iy * x_axis.size() + ix]; }
  ScalarGrid view() const { return {x_axis, y_axis, values}; }
};

struct AxisRange {
  double min;
  double max;
};

/// Line-centre closed form of the quantity over (Omega_c, r1) at fixed r2.
ContourGrid contour_grid(ContourQuantity quantity, AxisRange omega_c, AxisRange r1, std::size_t nx,
                         std::size_t ny, double r2 = 0.0, double omega_scale = 100.0);

/// Isolines of the grid at every level of contour_levels(quantity).
std::vector<Polyline> contour_isolines(const ContourGrid& grid);

enum class CurveKind { R1Sweep, OmegaCSweep, R1SweepZeroGainR2 };

const char* to_string(CurveKind k) noexcept;

struct CurveSeries {
  CurveKind kind;
  double family_value;  // Omega_c for r1 sweeps, r1 for the Omega_c sweep
  std::string label;
  std::vector<double> axis;
  std::vector<std::optional<double>> ng_minus_1;  // nullopt marks a gap
  std::vector<std::optional<double>> r2_used;
};

/// One n_g - 1 curve per family value, from the line-centre closed form.
/// `fixed` supplies r2 (ignored for the zero-gain variant) and omega_scale.
/// Zero-gain points whose r2 is singular or negative become gaps.
std::vector<CurveSeries> group_index_curves(CurveKind kind, const SystemParams& fixed,
                                            double axis_min, double axis_max, std::size_t n_points,
                                            std::span<const double> family);

}  // namespace vtype
