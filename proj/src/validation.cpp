#include "vtype/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <ostream>

#include "vtype/dynamics.hpp"
#include "vtype/figures.hpp"
#include "vtype/steadystate.hpp"
#include "vtype/sweep.hpp"

namespace vtype {

std::vector<SystemParams> random_parameter_grid(std::uint64_t seed, std::size_t n) {
  SeededUniform u(seed);
  std::vector<SystemParams> out(n);
  for (auto& p : out) {
    p.omega_c = u(0.0, 6.0);
    p.r1 = u(0.0, 5.0);
    p.r2 = u(0.0, 5.0);
  }
  return out;
}

std::vector<SystemParams> figure_parameter_sets() {
  std::vector<SystemParams> out;
  for (auto id : {"2", "4", "5", "6"}) {
    const auto fig = figure_preset(id);
    for (double v : fig.family) {
      SystemParams p = fig.base;
      if (fig.family_key == "omega_c") p.omega_c = v;
      if (fig.family_key == "r1") p.r1 = v;
      if (fig.family_key == "r2") p.r2 = v;
      out.push_back(p);
    }
  }
  return out;
}

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

bool ValidationReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
}

namespace {

DensityMatrix random_state(SeededUniform& u) {
  // A A^dagger / tr is Hermitian, positive and unit trace.
  std::complex<double> a[3][3];
  for (auto& row : a)
    for (auto& v : row) v = {u(-1.0, 1.0), u(-1.0, 1.0)};
  DensityMatrix s;
  double trace = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::complex<double> sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += a[i][k] * std::conj(a[j][k]);
      s.rho(i + 1, j + 1) = sum;
      if (i == j) trace += sum.real();
    }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) s.rho(i, j) /= trace;
  for (int i = 1; i <= 3; ++i) s.rho(i, i) = s.rho(i, i).real();
  return s;
}

double richardson_slope(SystemParams p, double h) {
  const double x = p.delta_p;
  auto f = [&](double dp) {
    p.delta_p = dp;
    return susceptibility(p).chi_real;
  };
  const double coarse = (f(x + h) - f(x - h)) / (2.0 * h);
  const double fine = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4.0 * fine - coarse) / 3.0;
}

struct RowBuilder {
  std::vector<ValidationRow>& rows;
  const std::optional<double>& override_tol;
  void add(std::string name, double err, double tol, std::size_t n) {
    rows.push_back({std::move(name), err, override_tol.value_or(tol), n});
  }
};

}  // namespace

ValidationReport run_validation(const ValidationOptions& options) {
  ValidationReport report{options.seed, {}};
  RowBuilder rows{report.rows, options.tolerance_override};
  const auto grid = random_parameter_grid(options.seed, 200);
  const auto figures = figure_parameter_sets();

  {
    SeededUniform u(options.seed ^ 0x5bd1e995ULL);
    double trace = 0.0;
    double herm = 0.0;
    for (std::size_t k = 0; k < 1000; ++k) {
      SystemParams p = grid[k % grid.size()];
      p.omega_p = u(0.0, 0.5);
      p.delta_p = u(-5.0, 5.0);
      p.delta_c = u(-5.0, 5.0);
      const auto d = liouvillian_rhs(random_state(u), p);
      trace = std::max(trace, std::abs(d.trace()));
      herm = std::max(herm, d.hermiticity_defect());
    }
    rows.add("rhs trace conservation", trace, 1e-14, 1000);
    rows.add("rhs hermiticity", herm, 1e-14, 1000);
  }

  {
    SeededUniform u(options.seed ^ 0x9e3779b97f4a7c15ULL);
    double worst = 0.0;
    for (SystemParams p : grid) {
      p.omega_p = u(0.0, 0.01);
      p.delta_p = u(-3.0, 3.0);
      p.delta_c = u(-2.0, 2.0);
      const auto exact = steady_state_linear(p);
      const auto ode = integrate_to_steady_state(DensityMatrix::ground_state(), p);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          worst = std::max(worst, std::abs(exact.rho(i, j) - ode.final_state.rho(i, j)));
      if (!ode.converged) worst = std::max(worst, ode.residual);
    }
    rows.add("linear solve vs RK4 steady state", worst, 1e-8, grid.size());
  }

  {
    double worst = 0.0;
    for (SystemParams p : figures) {
      double peak = 0.0;
      double diff = 0.0;
      for (double dp : {-4.0, -1.0, 0.0, 0.5, 2.0}) {
        p.delta_p = dp;
        p.omega_p = 1e-3;
        const auto a = steady_state_linear(p).rho(3, 1) / p.omega_p;
        p.omega_p = 1e-4;
        const auto b = steady_state_linear(p).rho(3, 1) / p.omega_p;
        diff = std::max(diff, std::abs(a - b));
        peak = std::max(peak, std::abs(b));
      }
      worst = std::max(worst, diff / peak);
    }
    rows.add("weak-probe linearity, omega_p 1e-3 vs 1e-4 (series scale)", worst, 1e-5, figures.size() * 5);
  }

  {
    double pop = 0.0;
    double coh = 0.0;
    std::size_t n = 0;
    const auto detunings = linspace(-10.0, 10.0, 41);
    for (SystemParams p : figures) {
      p.omega_p = 1e-3;
      double peak = 0.0;
      double diff = 0.0;
      for (double dp : detunings) {
        p.delta_p = dp;
        const auto a = analytic_steady_state(p);
        const auto e = steady_state_linear(p);
        pop = std::max({pop, std::abs(a.rho11 - e.population(1)), std::abs(a.rho22 - e.population(2)),
                        std::abs(a.rho33 - e.population(3))});
        diff = std::max(diff, std::abs(a.rho31_over_probe - e.rho(3, 1) / p.omega_p));
        peak = std::max(peak, std::abs(a.rho31_over_probe));
        ++n;
      }
      coh = std::max(coh, diff / peak);
    }
    rows.add("weak-probe populations vs exact", pop, 1e-5, n);
    rows.add("weak-probe rho31/omega_p vs exact (series scale)", coh, 1e-5, n);
  }

  {
    double ng = 0.0;
    double chi = 0.0;
    for (const auto& p : grid) {
      ng = std::max(ng, relative_error(group_index(p).n_g_minus_1,
                                       group_index_closed_form(p.omega_c, p.r1, p.r2, p.omega_scale)));
      chi = std::max(chi, relative_error(susceptibility(p).chi_imag,
                                         absorption_closed_form(p.omega_c, p.r1, p.r2)));
    }
    rows.add("line-centre n_g - 1 closed form vs pipeline", ng, 1e-10, grid.size());
    rows.add("line-centre chi'' closed form vs pipeline", chi, 1e-10, grid.size());
  }

  {
    double worst = 0.0;
    std::size_t n = 0;
    for (const auto& p : grid) {
      const auto z = solve_zero_gain_r2(p.r1, p.omega_c);
      if (!z.physical()) continue;
      worst = std::max(worst, std::abs(absorption_closed_form(p.omega_c, p.r1, z.r2)));
      ++n;
    }
    rows.add("zero-gain pump gives chi''(0) = 0", worst, 1e-12, n);
  }

  {
    double worst = 0.0;
    std::size_t n = 0;
    const auto detunings = linspace(-10.0, 10.0, 2001);
    for (SystemParams p : figures) {
      for (double dp : detunings) {
        p.delta_p = dp;
        const double analytic = dispersion_slope(p);
        if (std::abs(analytic) <= 1e-8) continue;
        worst = std::max(worst, relative_error(analytic, richardson_slope(p, 1e-4)));
        ++n;
      }
    }
    rows.add("dispersion slope vs Richardson differences", worst, 1e-6, n);
  }

  return report;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  out << "seed " << report.seed << '\n';
  out << std::left << std::setw(60) << "check" << std::setw(14) << "max error" << std::setw(12)
      << "tolerance" << std::setw(9) << "samples" << "result\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(60) << row.name << std::setw(14) << std::setprecision(3)
        << std::scientific << row.max_error << std::setw(12) << row.tolerance << std::setw(9)
        << std::defaultfloat << row.samples << (row.passed() ? "PASS" : "FAIL") << '\n';
  }
  out << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace vtype
