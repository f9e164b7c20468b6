#include "vtype/figures.hpp"

namespace vtype {

namespace {

constexpr AxisRange kDetuning{-10.0, 10.0};
constexpr std::size_t kSpectrumPoints = 2001;
constexpr AxisRange kPlane{0.0, 8.0};
constexpr std::size_t kContourPoints = 401;
constexpr std::size_t kCurvePoints = 1601;

SystemParams preset_params(double omega_c, double r1, double r2) {
  SystemParams p;
  p.omega_c = omega_c;
  p.r1 = r1;
  p.r2 = r2;
  return p;
}

FigurePreset spectrum(std::string id, SystemParams base, std::string key, std::vector<double> family) {
  return {std::move(id), FigureKind::Spectrum, base, std::move(key), std::move(family),
          kDetuning,     kSpectrumPoints,      {},   0,              CurveKind::R1Sweep,
          "detuning range [-10, 10] covers both absorption lines of every series"};
}

FigurePreset curves(std::string id, CurveKind kind, std::vector<double> family, std::string note) {
  return {std::move(id), FigureKind::GroupIndex, preset_params(0.0, 0.0, 0.0),
          kind == CurveKind::OmegaCSweep ? "r1" : "omega_c",
          std::move(family), kPlane, kCurvePoints, {}, 0, kind, std::move(note)};
}

}  // namespace

FigurePreset figure_preset(std::string_view id) {
  if (id == "2") return spectrum("2", preset_params(0.0, 0.0, 0.0), "omega_c", {0.5, 0.7, 1.7, 4.0});
  if (id == "3") {
    return {"3", FigureKind::Contour, preset_params(0.0, 0.0, 0.0), "", {}, kPlane, kContourPoints,
            kPlane, kContourPoints, CurveKind::R1Sweep,
            "grid over omega_c in [0, 8] and r1 in [0, 8]"};
  }
  if (id == "4") return spectrum("4", preset_params(0.0, 1.5, 0.0), "omega_c", {0.7, 1.7, 4.0, 6.0});
  if (id == "5") return spectrum("5", preset_params(1.69, 0.0, 0.0), "r1", {1.2, 1.5, 3.0});
  if (id == "6") return spectrum("6", preset_params(1.69, 1.5, 0.0), "r2", {0.0, 1.0, 2.43});
  if (id == "7a") {
    return curves("7a", CurveKind::R1Sweep, {1.0, 1.7, 4.0, 6.0}, "r1 swept over [0, 8] at r2 = 0");
  }
  if (id == "7b") {
    return curves("7b", CurveKind::OmegaCSweep, {1.5, 2.0, 3.0, 5.0},
                  "omega_c swept over [0, 8] at r2 = 0");
  }
  if (id == "7c") {
    return curves("7c", CurveKind::R1SweepZeroGainR2, {0.5, 0.75, 1.0, 1.7},
                  "r2 from the zero-gain condition at every point; singular or negative r2 left as gaps");
  }
  throw Error(Errc::InvalidRange, "unknown figure '" + std::string(id) +
                                      "' (expected 2, 3, 4, 5, 6, 7a, 7b or 7c)");
}

}  // namespace vtype
