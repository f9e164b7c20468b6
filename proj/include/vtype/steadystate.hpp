#pragma once

#include <complex>

#include "vtype/core_model.hpp"

namespace vtype {

/// Weak-probe steady state for a resonant coupling field. rho31 is reported
/// divided by conj(Omega_p), which is what the susceptibility needs.
struct AnalyticState {
  double rho11;
  double rho22;
  double rho33;
  std::complex<double> rho21;
  std::complex<double> rho31_over_probe;
};

/// Weak-probe guard: |Omega_p| <= kWeakProbeRatio * min(gamma21, gamma31).
inline constexpr double kWeakProbeRatio = 0.1;

/// Throws InvalidParams, CouplingDetuned (delta_c != 0) or ProbeTooStrong.
AnalyticState analytic_steady_state(const SystemParams& params);

/// chi' is dispersion, chi'' absorption (positive attenuates, negative amplifies).
struct Susceptibility {
  double chi_real;
  double chi_imag;
};

Susceptibility susceptibility(const SystemParams& params);

/// d chi' / d Delta_p, differentiated analytically. Only the two Delta_p
/// dependent denominators contribute; populations do not depend on Delta_p.
double dispersion_slope(const SystemParams& params);

enum class Propagation { Subluminal, Superluminal, Negative };

const char* to_string(Propagation p) noexcept;

struct GroupIndexResult {
  double n_g_minus_1;
  double v_g_over_c;  // 1 / n_g
  Propagation classification;
  bool on_boundary;  // n_g - 1 or n_g within 1e-12 of zero
};

/// n_g - 1 = 2 pi chi' + omega_scale * d chi'/d Delta_p.
GroupIndexResult group_index(const SystemParams& params);

/// Builds the result (v_g/c and the label) from n_g - 1 alone. Ties within
/// 1e-12 of n_g = 1 count as subluminal, within 1e-12 of n_g = 0 as negative.
GroupIndexResult classify_group_index(double n_g_minus_1);

/// Group index at line centre from chi' and its slope; shared by both backends.
double group_index_minus_one(double chi_real, double chi_slope, double omega_scale);

// Line-centre closed forms. They assume gamma21 = gamma31 = 1, Delta_c =
// Delta_p = 0 and a unit chi prefactor; the signatures cannot express anything
// else.

/// n_g - 1 at Delta_p = 0.
double group_index_closed_form(double omega_c, double r1, double r2, double omega_scale = 100.0);

/// chi'' at Delta_p = 0.
double absorption_closed_form(double omega_c, double r1, double r2);

/// r2 that makes chi''(0) vanish for the given r1 and Omega_c, without checks.
struct ZeroGainPump {
  double r2;
  bool singular;  // r1 == 2 Omega_c^2 + 1 within 1e-12 relative
  bool physical() const noexcept { return !singular && r2 >= 0.0; }
};

ZeroGainPump solve_zero_gain_r2(double r1, double omega_c) noexcept;

/// Thrown when the zero-gain pump would be negative; carries the value.
class UnphysicalPump : public Error {
 public:
  explicit UnphysicalPump(double r2);
  double value() const noexcept { return r2_; }

 private:
  double r2_;
};

/// Checked form: throws SingularDenominator or UnphysicalPump.
double zero_gain_r2(double r1, double omega_c);

/// Root of group_index_closed_form in r1 inside [lo, hi] at fixed Omega_c and
/// r2. Throws InvalidRange when the bracket holds no sign change.
double find_r1_threshold(double omega_c, double r2, double lo, double hi);

/// Root of group_index_closed_form in Omega_c inside [lo, hi].
double find_omega_c_threshold(double r1, double r2, double lo, double hi);

}  // namespace vtype
