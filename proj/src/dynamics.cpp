#include "vtype/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace vtype {

double Matrix3c::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double Matrix3c::max_norm() const {
  double worst = 0.0;
  for (const auto& v : e_) worst = std::max(worst, std::abs(v));
  return worst;
}

DensityMatrix DensityMatrix::diagonal(double p1, double p2, double p3) {
  DensityMatrix s;
  s.rho(1, 1) = p1;
  s.rho(2, 2) = p2;
  s.rho(3, 3) = p3;
  return s;
}

RealCoordinates to_real_coordinates(const Matrix3c& m) {
  return {m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(2, 1).real(), m(2, 1).imag(),
          m(3, 1).real(), m(3, 1).imag(), m(3, 2).real(), m(3, 2).imag()};
}

Matrix3c from_real_coordinates(const RealCoordinates& x) {
  Matrix3c m;
  m(1, 1) = x[0];
  m(2, 2) = x[1];
  m(3, 3) = x[2];
  m(2, 1) = {x[3], x[4]};
  m(3, 1) = {x[5], x[6]};
  m(3, 2) = {x[7], x[8]};
  m(1, 2) = std::conj(m(2, 1));
  m(1, 3) = std::conj(m(3, 1));
  m(2, 3) = std::conj(m(3, 2));
  return m;
}

Matrix3c liouvillian_rhs(const DensityMatrix& state, const SystemParams& p) {
  const Matrix3c& r = state.rho;
  const auto rates = coherence_rates(p);
  const cdouble i{0.0, 1.0};
  // Rabi frequencies are carried as complex numbers with explicit conjugates.
  const cdouble oc = p.omega_c;
  const cdouble op = p.omega_p;
  const cdouble oc_c = std::conj(oc);
  const cdouble op_c = std::conj(op);

  Matrix3c d;
  d(1, 1) = i * op * r(3, 1) + i * oc * r(2, 1) - i * op_c * r(1, 3) - i * oc_c * r(1, 2) +
            p.gamma31 * r(3, 3) + p.gamma21 * r(2, 2) - (p.r1 + p.r2) * r(1, 1);
  d(2, 2) = i * oc_c * r(1, 2) - i * oc * r(2, 1) - p.gamma21 * r(2, 2) + p.r2 * r(1, 1);
  d(3, 3) = i * op_c * r(1, 3) - i * op * r(3, 1) - p.gamma31 * r(3, 3) + p.r1 * r(1, 1);
  d(2, 1) = (i * p.delta_c - rates.Gamma21) * r(2, 1) + i * oc_c * r(1, 1) - i * oc_c * r(2, 2) -
            i * op_c * r(2, 3);
  d(3, 1) = (i * p.delta_p - rates.Gamma31) * r(3, 1) + i * op_c * r(1, 1) - i * op_c * r(3, 3) -
            i * oc_c * r(3, 2);
  d(3, 2) = (i * (p.delta_p - p.delta_c) - rates.Gamma32) * r(3, 2) + i * op_c * r(1, 2) -
            i * oc * r(3, 1);
  d(1, 2) = std::conj(d(2, 1));
  d(1, 3) = std::conj(d(3, 1));
  d(2, 3) = std::conj(d(3, 2));
  return d;
}

double rk4_step_size(const SystemParams& p) {
  const auto rates = coherence_rates(p);
  const double fastest = std::max({rates.Gamma21, rates.Gamma31, std::abs(p.omega_c),
                                   std::abs(p.delta_p), std::abs(p.delta_c), 1.0});
  return std::min(0.01, 0.1 / fastest);
}

namespace {

namespace odeint = boost::numeric::odeint;
using Stepper = odeint::runge_kutta4<RealCoordinates>;

struct RealSystem {
  const SystemParams& params;
  void operator()(const RealCoordinates& x, RealCoordinates& dxdt, double /*t*/) const {
    dxdt = to_real_coordinates(liouvillian_rhs({from_real_coordinates(x)}, params));
  }
};

double residual_of(const RealCoordinates& x, const SystemParams& params) {
  return liouvillian_rhs({from_real_coordinates(x)}, params).max_norm();
}

}  // namespace

IntegrationReport integrate_to_steady_state(const DensityMatrix& rho0, const SystemParams& params,
                                            const IntegrationOptions& options) {
  const double h = rk4_step_size(params);
  const std::size_t interval = std::max<std::size_t>(options.check_interval, 1);
  const RealSystem system{params};
  Stepper stepper;

  RealCoordinates x = to_real_coordinates(rho0.rho);
  IntegrationReport report;
  report.residual = residual_of(x, params);
  while (report.residual > options.tolerance && report.time < options.max_time) {
    for (std::size_t k = 0; k < interval && report.time < options.max_time; ++k) {
      stepper.do_step(system, x, report.time, h);
      ++report.steps_taken;
      report.time = static_cast<double>(report.steps_taken) * h;
    }
    report.residual = residual_of(x, params);
  }
  report.converged = report.residual <= options.tolerance;
  report.final_state.rho = from_real_coordinates(x);
  return report;
}

DensityMatrix propagate(const DensityMatrix& rho0, const SystemParams& params, double duration) {
  if (!(duration > 0.0)) return rho0;
  const auto n = static_cast<std::size_t>(std::ceil(duration / rk4_step_size(params)));
  const double h = duration / static_cast<double>(n);
  const RealSystem system{params};
  Stepper stepper;
  RealCoordinates x = to_real_coordinates(rho0.rho);
  for (std::size_t k = 0; k < n; ++k) stepper.do_step(system, x, static_cast<double>(k) * h, h);
  return {from_real_coordinates(x)};
}

namespace {

constexpr std::size_t kDim = 9;
using RealMatrix = std::array<std::array<double, kDim>, kDim>;

// LU factorization with partial pivoting. One factorization serves the state
// and its detuning derivative.
class PivotedLu {
 public:
  explicit PivotedLu(RealMatrix a) : lu_(a) {
    double largest = 0.0;
    for (const auto& row : lu_)
      for (double v : row) largest = std::max(largest, std::abs(v));
    const double threshold = 1e-13 * largest;

    for (std::size_t k = 0; k < kDim; ++k) perm_[k] = k;
    for (std::size_t col = 0; col < kDim; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < kDim; ++r)
        if (std::abs(lu_[r][col]) > std::abs(lu_[pivot][col])) pivot = r;
      if (!(std::abs(lu_[pivot][col]) > threshold)) {
        throw Error(Errc::SingularSystem,
                    "steady-state system is rank deficient (pivot " + std::to_string(col) +
                        "); the steady state is not unique at this parameter point");
      }
      std::swap(lu_[pivot], lu_[col]);
      std::swap(perm_[pivot], perm_[col]);
      for (std::size_t r = col + 1; r < kDim; ++r) {
        const double f = lu_[r][col] / lu_[col][col];
        lu_[r][col] = f;
        for (std::size_t c = col + 1; c < kDim; ++c) lu_[r][c] -= f * lu_[col][c];
      }
    }
  }

  RealCoordinates solve(const RealCoordinates& b) const {
    RealCoordinates y{};
    for (std::size_t r = 0; r < kDim; ++r) {
      double s = b[perm_[r]];
      for (std::size_t c = 0; c < r; ++c) s -= lu_[r][c] * y[c];
      y[r] = s;
    }
    RealCoordinates x{};
    for (std::size_t r = kDim; r-- > 0;) {
      double s = y[r];
      for (std::size_t c = r + 1; c < kDim; ++c) s -= lu_[r][c] * x[c];
      x[r] = s / lu_[r][r];
    }
    return x;
  }

 private:
  RealMatrix lu_;
  std::array<std::size_t, kDim> perm_{};
};

// Columns are the images of the real basis vectors; the rhs is linear in rho.
// Row 0 (the rho11 equation) is replaced by the trace condition.
RealMatrix steady_state_matrix(const SystemParams& params) {
  RealMatrix m{};
  for (std::size_t k = 0; k < kDim; ++k) {
    RealCoordinates e{};
    e[k] = 1.0;
    const auto column = to_real_coordinates(liouvillian_rhs({from_real_coordinates(e)}, params));
    for (std::size_t r = 0; r < kDim; ++r) m[r][k] = column[r];
  }
  m[0] = {1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  return m;
}

constexpr RealCoordinates kTraceRhs = {1.0, 0, 0, 0, 0, 0, 0, 0, 0};

}  // namespace

DensityMatrix steady_state_linear(const SystemParams& params) {
  const PivotedLu lu(steady_state_matrix(params));
  return {from_real_coordinates(lu.solve(kTraceRhs))};
}

ExactResponse steady_state_response(const SystemParams& params) {
  const PivotedLu lu(steady_state_matrix(params));
  const RealCoordinates x = lu.solve(kTraceRhs);

  // Delta_p enters only as i*Delta_p on rho31 and rho32, so the derivative of
  // the matrix is a rotation generator on those two coherences.
  RealCoordinates dm_x{};
  dm_x[5] = -x[6];
  dm_x[6] = x[5];
  dm_x[7] = -x[8];
  dm_x[8] = x[7];
  RealCoordinates dx = lu.solve(dm_x);
  for (double& v : dx) v = -v;

  return {{from_real_coordinates(x)}, cdouble{dx[5], dx[6]}};
}

}  // namespace vtype
