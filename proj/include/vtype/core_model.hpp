#pragma once

#include <string>
#include <vector>

#include "vtype/error.hpp"

namespace vtype {

/// Parameters of the incoherently pumped V-type atom. Every rate, Rabi
/// frequency and detuning is expressed in units of the spontaneous decay rate.
/// Rabi frequencies are real; formulas still keep the conjugation positions so
/// a complex extension only changes the field types.
struct SystemParams {
  double gamma21 = 1.0;        // decay |2> -> |1>
  double gamma31 = 1.0;        // decay |3> -> |1>
  double r1 = 0.0;             // incoherent pump |1> -> |3>
  double r2 = 0.0;             // incoherent pump |1> -> |2>
  double omega_c = 0.0;        // coupling Rabi frequency on |1> <-> |2>
  double omega_p = 1e-3;       // probe Rabi frequency on |1> <-> |3>
  double delta_c = 0.0;        // coupling detuning
  double delta_p = 0.0;        // probe detuning
  double chi_prefactor = 1.0;  // N p13^2 / (eps0 hbar)
  double omega_scale = 100.0;  // 2 pi omega_p

  bool operator==(const SystemParams&) const = default;
};

/// Damping rates of the three coherences.
struct CoherenceRates {
  double Gamma21;
  double Gamma31;
  double Gamma32;
};

CoherenceRates coherence_rates(const SystemParams& params) noexcept;

struct ParamViolation {
  Errc kind;  // NegativeRate, NonPositiveDecay, NonPositiveScale or NonFinite
  std::string field;
  double value;
};

/// All invariant violations, in field declaration order. Empty means valid.
std::vector<ParamViolation> check_params(const SystemParams& params);

/// Thrown by validate_params; what() lists every violation.
class InvalidParams : public Error {
 public:
  explicit InvalidParams(std::vector<ParamViolation> violations);
  const std::vector<ParamViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<ParamViolation> violations_;
};

/// Returns params unchanged when valid, otherwise throws InvalidParams.
const SystemParams& validate_params(const SystemParams& params);

}  // namespace vtype
