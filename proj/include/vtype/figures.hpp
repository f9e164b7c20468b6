#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vtype/core_model.hpp"
#include "vtype/sweep.hpp"

namespace vtype {

enum class FigureKind { Spectrum, Contour, GroupIndex };

/// Parameter sets behind the --figure presets. For spectra the family
/// varies one config key; for group-index curves the family is the curve
/// parameter (Omega_c, or r1 for the Omega_c sweep).
struct FigurePreset {
  std::string id;
  FigureKind kind;
  SystemParams base;
  std::string family_key;
  std::vector<double> family;
  AxisRange axis;      // Delta_p, Omega_c, or the swept variable
  std::size_t points;  // along axis
  AxisRange y_axis;    // contour only: r1
  std::size_t y_points;
  CurveKind curve_kind;
  std::string note;  // free-form remark copied into the manifest
};

inline constexpr std::array<std::string_view, 8> kFigureIds = {"2", "3", "4", "5", "6", "7a", "7b", "7c"};

/// Throws InvalidRange for an unknown id.
FigurePreset figure_preset(std::string_view id);

}  // namespace vtype
