#include "vtype/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "vtype/csv.hpp"

namespace vtype {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Params>
auto& field_ref(Params& p, std::string_view key) {
  if (key == "gamma21") return p.gamma21;
  if (key == "gamma31") return p.gamma31;
  if (key == "r1") return p.r1;
  if (key == "r2") return p.r2;
  if (key == "omega_c") return p.omega_c;
  if (key == "omega_p") return p.omega_p;
  if (key == "delta_c") return p.delta_c;
  if (key == "delta_p") return p.delta_p;
  if (key == "chi_prefactor") return p.chi_prefactor;
  if (key == "omega_scale") return p.omega_scale;
  throw Error(Errc::ConfigSyntax, "unknown parameter key '" + std::string(key) + "'");
}

}  // namespace

double& param_field(SystemParams& params, std::string_view key) { return field_ref(params, key); }

double param_field(const SystemParams& params, std::string_view key) {
  return field_ref(params, key);
}

ParamAssignments parse_config(std::istream& in) {
  ParamAssignments out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto where = "line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::ConfigSyntax, where + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto text = trim(line.substr(eq + 1));

    SystemParams probe;
    try {
      (void)param_field(probe, key);
    } catch (const Error&) {
      throw Error(Errc::ConfigSyntax, where + ": unknown key '" + std::string(key) + "'");
    }
    const auto value = parse_number(text);
    if (!value) {
      throw Error(Errc::ConfigSyntax,
                  where + ": '" + std::string(text) + "' is not a number for " + std::string(key));
    }
    if (!out.emplace(std::string(key), *value).second) {
      throw Error(Errc::ConfigSyntax, where + ": duplicate key '" + std::string(key) + "'");
    }
  }
  return out;
}

ParamAssignments load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigSyntax, "cannot open config file " + path.string());
  return parse_config(in);
}

void apply_assignments(SystemParams& params, const ParamAssignments& assignments) {
  for (const auto& [key, value] : assignments) param_field(params, key) = value;
}

std::string format_config(const SystemParams& params) {
  std::ostringstream os;
  for (auto key : kParamKeys) os << key << " = " << format_number(param_field(params, key)) << '\n';
  return os.str();
}

}  // namespace vtype
