#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vtype {

enum class Errc {
  NegativeRate,
  NonPositiveDecay,
  NonPositiveScale,
  NonFinite,
  CouplingDetuned,
  ProbeTooStrong,
  SingularSystem,
  SingularDenominator,
  UnphysicalPump,
  InvalidRange,
  ConfigSyntax,
};

std::string_view to_string(Errc code) noexcept;

// Every library failure carries a machine-readable code; the message always
// starts with the code name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vtype
