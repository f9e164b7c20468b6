#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "vtype/core_model.hpp"

namespace vtype {

// Config keys, in the order they are echoed back.
inline constexpr std::array<std::string_view, 10> kParamKeys = {
    "gamma21", "gamma31", "r1",      "r2",           "omega_c",
    "omega_p", "delta_c", "delta_p", "chi_prefactor", "omega_scale"};

/// Mutable access to a parameter by config key. Throws ConfigSyntax on an
/// unknown key.
double& param_field(SystemParams& params, std::string_view key);
double param_field(const SystemParams& params, std::string_view key);

using ParamAssignments = std::map<std::string, double, std::less<>>;

/// Parses `key = value` lines. `#` starts a comment anywhere on a line; blank
/// lines are skipped. Unknown keys, repeated keys and unparsable numbers are
/// ConfigSyntax errors naming the line.
ParamAssignments parse_config(std::istream& in);
ParamAssignments load_config(const std::filesystem::path& path);

void apply_assignments(SystemParams& params, const ParamAssignments& assignments);

/// Inverse of parse_config for a full parameter set.
std::string format_config(const SystemParams& params);

}  // namespace vtype
