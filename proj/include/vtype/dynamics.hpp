#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "vtype/core_model.hpp"

namespace vtype {

using cdouble = std::complex<double>;

/// 3x3 complex matrix indexed with the atomic level labels 1..3.
class Matrix3c {
 public:
  cdouble& operator()(int i, int j) { return e_[index(i, j)]; }
  const cdouble& operator()(int i, int j) const { return e_[index(i, j)]; }

  cdouble trace() const { return (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3); }
  /// max |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  /// max |m_ij|
  double max_norm() const;

  bool operator==(const Matrix3c&) const = default;

 private:
  static constexpr std::size_t index(int i, int j) {
    return static_cast<std::size_t>(3 * (i - 1) + (j - 1));
  }
  std::array<cdouble, 9> e_{};
};

/// Atomic state. Hermitian with unit trace when produced by this module.
struct DensityMatrix {
  Matrix3c rho;

  static DensityMatrix diagonal(double p1, double p2, double p3);
  static DensityMatrix ground_state() { return diagonal(1.0, 0.0, 0.0); }

  double population(int level) const { return rho(level, level).real(); }
  cdouble coherence(int i, int j) const { return rho(i, j); }
};

/// The nine real degrees of freedom of a Hermitian 3x3 matrix:
/// (rho11, rho22, rho33, Re rho21, Im rho21, Re rho31, Im rho31, Re rho32, Im rho32).
using RealCoordinates = std::array<double, 9>;

RealCoordinates to_real_coordinates(const Matrix3c& m);
/// Builds the Hermitian matrix with the given lower triangle and diagonal.
Matrix3c from_real_coordinates(const RealCoordinates& x);

/// Time derivative of rho under the rotating-wave equations of motion. Only
/// the diagonal and the lower triangle are evaluated; the upper triangle is
/// the conjugate, so the result is Hermitian whenever rho is.
Matrix3c liouvillian_rhs(const DensityMatrix& state, const SystemParams& params);

struct IntegrationReport {
  DensityMatrix final_state;
  std::size_t steps_taken = 0;
  double time = 0.0;
  double residual = 0.0;  // max-norm of d rho/dt at exit
  bool converged = false;
};

struct IntegrationOptions {
  double tolerance = 1e-10;
  double max_time = 1000.0;
  std::size_t check_interval = 100;
};

/// Fixed RK4 step used for these params:
/// min(0.01, 0.1 / max(Gamma21, Gamma31, |Omega_c|, |Delta_p|, |Delta_c|, 1)).
double rk4_step_size(const SystemParams& params);

/// Integrates forward until the residual drops below the tolerance (checked
/// at t = 0 and every check_interval steps) or max_time is reached. Does not
/// throw on non-convergence; inspect `converged`.
IntegrationReport integrate_to_steady_state(const DensityMatrix& rho0, const SystemParams& params,
                                            const IntegrationOptions& options = {});

/// Plain propagation for a fixed duration with the same stepper.
DensityMatrix propagate(const DensityMatrix& rho0, const SystemParams& params, double duration);

/// Exact steady state from the linear system rhs(rho) = 0, tr(rho) = 1, solved
/// by Gaussian elimination with partial pivoting on the real coordinates.
/// Throws SingularSystem when a pivot falls below 1e-13 of the largest entry.
/// Does not validate params.
DensityMatrix steady_state_linear(const SystemParams& params);

struct ExactResponse {
  DensityMatrix state;
  cdouble drho31_ddelta_p;  // d rho31 / d Delta_p of the exact steady state
};

/// steady_state_linear plus the derivative of the steady state with respect to
/// the probe detuning, from differentiating the linear system.
ExactResponse steady_state_response(const SystemParams& params);

}  // namespace vtype
