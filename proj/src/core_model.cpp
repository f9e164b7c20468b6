#include "vtype/core_model.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace vtype {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeRate: return "NegativeRate";
    case Errc::NonPositiveDecay: return "NonPositiveDecay";
    case Errc::NonPositiveScale: return "NonPositiveScale";
    case Errc::NonFinite: return "NonFinite";
    case Errc::CouplingDetuned: return "CouplingDetuned";
    case Errc::ProbeTooStrong: return "ProbeTooStrong";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::UnphysicalPump: return "UnphysicalPump";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::ConfigSyntax: return "ConfigSyntax";
  }
  return "Unknown";
}

CoherenceRates coherence_rates(const SystemParams& p) noexcept {
  const double pump = p.r1 + p.r2;
  return {0.5 * (p.gamma21 + pump), 0.5 * (p.gamma31 + pump), 0.5 * (p.gamma21 + p.gamma31)};
}

std::vector<ParamViolation> check_params(const SystemParams& p) {
  std::vector<ParamViolation> out;
  auto check = [&out](const char* name, double v, Errc sign_rule) {
    if (!std::isfinite(v)) {
      out.push_back({Errc::NonFinite, name, v});
      return;
    }
    const bool bad = sign_rule == Errc::NegativeRate ? v < 0.0 : v <= 0.0;
    if (bad) out.push_back({sign_rule, name, v});
  };
  auto finite = [&out](const char* name, double v) {
    if (!std::isfinite(v)) out.push_back({Errc::NonFinite, name, v});
  };

  check("gamma21", p.gamma21, Errc::NonPositiveDecay);
  check("gamma31", p.gamma31, Errc::NonPositiveDecay);
  check("r1", p.r1, Errc::NegativeRate);
  check("r2", p.r2, Errc::NegativeRate);
  finite("omega_c", p.omega_c);
  finite("omega_p", p.omega_p);
  finite("delta_c", p.delta_c);
  finite("delta_p", p.delta_p);
  check("chi_prefactor", p.chi_prefactor, Errc::NonPositiveScale);
  check("omega_scale", p.omega_scale, Errc::NonPositiveScale);
  return out;
}

namespace {

std::string describe(const std::vector<ParamViolation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << '(' << violations[i].field << '=' << violations[i].value
       << ')';
  }
  return os.str();
}

}  // namespace

InvalidParams::InvalidParams(std::vector<ParamViolation> violations)
    : Error(violations.empty() ? Errc::NonFinite : violations.front().kind, describe(violations)),
      violations_(std::move(violations)) {}

const SystemParams& validate_params(const SystemParams& params) {
  auto violations = check_params(params);
  if (!violations.empty()) throw InvalidParams(std::move(violations));
  return params;
}

}  // namespace vtype
