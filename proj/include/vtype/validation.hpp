#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vtype/core_model.hpp"

namespace vtype {

/// Platform-independent uniform doubles from a 64-bit Mersenne Twister. The
/// standard distributions are implementation defined, so they are not used.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultValidationSeed = 42;

/// n points with Omega_c in [0, 6], r1 in [0, 5], r2 in [0, 5]; every other
/// field at its default (unit decay rates, resonant fields).
std::vector<SystemParams> random_parameter_grid(std::uint64_t seed, std::size_t n = 200);

/// Every series of the spectrum figures (2, 4, 5, 6), at Delta_p = 0.
std::vector<SystemParams> figure_parameter_sets();

/// |a - b| / max(|a|, |b|); zero when both vanish.
double relative_error(double a, double b);

struct ValidationRow {
  std::string name;
  double max_error;
  double tolerance;
  std::size_t samples;
  bool passed() const { return max_error <= tolerance; }
};

struct ValidationOptions {
  std::uint64_t seed = kDefaultValidationSeed;
  std::optional<double> tolerance_override;
};

struct ValidationReport {
  std::uint64_t seed;
  std::vector<ValidationRow> rows;
  bool all_passed() const;
};

/// Cross-checks the analytic formulas against the exact dynamics and each
/// other: conservation laws of the equations of motion, linear solve against
/// time integration, weak-probe solution against the exact steady state,
/// line-centre closed forms against the general solution, the zero-gain pump
/// identity and the analytic dispersion slope against finite differences.
ValidationReport run_validation(const ValidationOptions& options = {});

void print_report(std::ostream& out, const ValidationReport& report);

}  // namespace vtype
