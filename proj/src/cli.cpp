#include "vtype/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "vtype/config.hpp"
#include "vtype/csv.hpp"
#include "vtype/dynamics.hpp"
#include "vtype/figures.hpp"
#include "vtype/steadystate.hpp"
#include "vtype/svg.hpp"
#include "vtype/sweep.hpp"
#include "vtype/validation.hpp"

namespace vtype::cli {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string config;
  std::string out;
  bool svg = false;
  std::string backend = "analytic";
  std::string figure;
  std::array<std::optional<double>, kParamKeys.size()> overrides;
};

struct SpectrumOptions {
  std::optional<double> min, max;
  std::optional<std::size_t> points;
};

struct ContourOptions {
  std::string quantity = "ng";
  std::optional<double> omega_c_min, omega_c_max, r1_min, r1_max;
  std::optional<std::size_t> nx, ny;
};

struct CurveOptions {
  std::string kind = "r1";
  std::optional<double> min, max;
  std::optional<std::size_t> points;
  std::vector<double> family;
};

struct ValidateOptions {
  std::uint64_t seed = kDefaultValidationSeed;
  std::optional<double> tol;
};

void add_common(CLI::App& sub, CommonOptions& o) {
  sub.add_option("--config", o.config, "key=value parameter file");
  sub.add_option("--out", o.out, "primary output CSV path");
  sub.add_flag("--svg", o.svg, "also write an SVG rendering next to the CSV");
  sub.add_option("--backend", o.backend, "analytic (weak probe) or exact (full steady state)")
      ->check(CLI::IsMember({"analytic", "exact"}));
  sub.add_option("--figure", o.figure, "load a figure preset: 2 3 4 5 6 7a 7b 7c");
  for (std::size_t k = 0; k < kParamKeys.size(); ++k) {
    std::string flag(kParamKeys[k]);
    std::replace(flag.begin(), flag.end(), '_', '-');
    sub.add_option("--" + flag, o.overrides[k], "override " + std::string(kParamKeys[k]));
  }
}

std::optional<FigurePreset> load_figure(const CommonOptions& o, FigureKind expected, const char* command) {
  if (o.figure.empty()) return std::nullopt;
  auto preset = figure_preset(o.figure);
  if (preset.kind != expected) {
    throw Error(Errc::InvalidRange, "figure " + o.figure + " is not produced by the '" + command + "' command");
  }
  return preset;
}

// default < figure preset < config file < flags
SystemParams resolve_params(const CommonOptions& o, const std::optional<FigurePreset>& figure) {
  SystemParams p = figure ? figure->base : SystemParams{};
  if (!o.config.empty()) apply_assignments(p, load_config(o.config));
  for (std::size_t k = 0; k < kParamKeys.size(); ++k)
    if (o.overrides[k]) param_field(p, kParamKeys[k]) = *o.overrides[k];
  return p;
}

Backend parse_backend(const std::string& name) {
  return name == "exact" ? Backend::Exact : Backend::Analytic;
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error(Errc::InvalidRange, "cannot write " + path.string());
}

fs::path sibling(const fs::path& primary, const std::string& suffix, const std::string& ext) {
  return primary.parent_path() / (primary.stem().string() + suffix + ext);
}

struct Manifest {
  std::string command;
  std::string figure;
  SystemParams params;
  std::vector<std::string> outputs;
  std::string notes;
};

void write_manifest(const fs::path& primary, Manifest m) {
  const auto path = sibling(primary, ".manifest", ".json");
  nlohmann::ordered_json j;
  j["command"] = m.command;
  if (!m.figure.empty()) j["figure"] = m.figure;
  auto& params = j["resolved_params"];
  for (auto key : kParamKeys) params[std::string(key)] = param_field(m.params, key);
  m.outputs.push_back(path.string());
  j["output_paths"] = m.outputs;
  j["tool_version"] = kToolVersion;
  j["timestamp"] = timestamp();
  if (!m.notes.empty()) j["notes"] = m.notes;
  write_text(path, j.dump(2) + "\n");
}

fs::path primary_path(const CommonOptions& o, const char* command) {
  if (!o.out.empty()) return o.out;
  return o.figure.empty() ? fs::path(std::string(command) + ".csv") : fs::path("fig" + o.figure + ".csv");
}

// --- steady -------------------------------------------------------------

int cmd_steady(const CommonOptions& o, std::ostream& out) {
  if (!o.figure.empty()) throw Error(Errc::InvalidRange, "'steady' has no figure presets");
  const SystemParams p = resolve_params(o, std::nullopt);
  std::vector<CsvCell> row;
  if (parse_backend(o.backend) == Backend::Analytic) {
    const auto s = analytic_steady_state(p);
    const auto chi = susceptibility(p);
    row = {p.delta_p, s.rho11, s.rho22, s.rho33, s.rho21.real(), s.rho21.imag(),
           s.rho31_over_probe.real(), s.rho31_over_probe.imag(), chi.chi_real, chi.chi_imag,
           group_index(p).n_g_minus_1};
  } else {
    validate_params(p);
    if (p.omega_p == 0.0) throw Error(Errc::InvalidRange, "the exact backend needs a non-zero omega_p");
    const auto r = steady_state_response(p);
    const auto ratio = r.state.rho(3, 1) / std::conj(cdouble{p.omega_p});
    const auto chi = p.chi_prefactor * ratio;
    const double slope = p.chi_prefactor * (r.drho31_ddelta_p / std::conj(cdouble{p.omega_p})).real();
    row = {p.delta_p, r.state.population(1), r.state.population(2), r.state.population(3),
           r.state.rho(2, 1).real(), r.state.rho(2, 1).imag(), ratio.real(), ratio.imag(),
           chi.real(), chi.imag(), group_index_minus_one(chi.real(), slope, p.omega_scale)};
  }
  const CsvTable table{{"delta_p", "rho11", "rho22", "rho33", "re_rho21", "im_rho21",
                        "re_rho31_over_omega_p", "im_rho31_over_omega_p", "chi_real", "chi_imag",
                        "ng_minus_1"},
                       {row}};
  if (o.out.empty()) {
    write_csv(out, table);
  } else {
    write_text(o.out, to_csv_string(table));
    write_manifest(o.out, {"steady", "", p, {o.out}, ""});
  }
  return kOk;
}

// --- spectrum -----------------------------------------------------------

std::vector<Point2> points_of(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<Point2> pts(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) pts[i] = {x[i], y[i]};
  return pts;
}

int cmd_spectrum(const CommonOptions& o, const SpectrumOptions& s) {
  const auto figure = load_figure(o, FigureKind::Spectrum, "spectrum");
  const SystemParams base = resolve_params(o, figure);
  const double lo = s.min.value_or(figure ? figure->axis.min : -10.0);
  const double hi = s.max.value_or(figure ? figure->axis.max : 10.0);
  const std::size_t n = s.points.value_or(figure ? figure->points : 2001);
  const Backend backend = parse_backend(o.backend);

  std::vector<std::pair<std::string, SpectrumSeries>> series;
  if (figure) {
    for (double v : figure->family) {
      SystemParams p = base;
      param_field(p, figure->family_key) = v;
      series.emplace_back(figure->family_key + "=" + format_number(v), spectrum_sweep(p, lo, hi, n, backend));
    }
  } else {
    series.emplace_back("", spectrum_sweep(base, lo, hi, n, backend));
  }

  const fs::path primary = primary_path(o, "spectrum");
  std::vector<std::string> outputs;
  for (const auto& [label, ser] : series) {
    fs::path path = primary;
    if (series.size() > 1) {
      std::string suffix = "_" + label;
      std::replace(suffix.begin(), suffix.end(), '=', '_');
      path = sibling(primary, suffix, ".csv");
    }
    CsvTable t{{"delta_p", "chi_real", "chi_imag"}, {}};
    t.rows.reserve(ser.delta_p.size());
    for (std::size_t i = 0; i < ser.delta_p.size(); ++i)
      t.rows.push_back({ser.delta_p[i], ser.chi_real[i], ser.chi_imag[i]});
    write_text(path, to_csv_string(t));
    outputs.push_back(path.string());
  }

  if (o.svg) {
    std::array<svg::Panel, 2> panels{
        svg::Panel{"chi' (dispersion)" + (figure ? ", figure " + figure->id : std::string()), "probe detuning", {}},
        svg::Panel{"chi'' (absorption)", "probe detuning", {}}};
    for (const auto& [label, ser] : series) {
      panels[0].lines.push_back({label, {points_of(ser.delta_p, ser.chi_real)}, series.size() == 1});
      panels[1].lines.push_back({label, {points_of(ser.delta_p, ser.chi_imag)}, series.size() == 1});
    }
    const auto path = sibling(primary, "", ".svg");
    write_text(path, svg::render(panels));
    outputs.push_back(path.string());
  }
  write_manifest(primary, {"spectrum", o.figure, base, outputs, figure ? figure->note : ""});
  return kOk;
}

// --- contour ------------------------------------------------------------

int cmd_contour(const CommonOptions& o, const ContourOptions& c) {
  const auto figure = load_figure(o, FigureKind::Contour, "contour");
  if (parse_backend(o.backend) == Backend::Exact) {
    throw Error(Errc::InvalidRange, "contour grids use the line-centre closed forms; no exact backend");
  }
  const SystemParams p = resolve_params(o, figure);
  validate_params(p);
  ContourQuantity q;
  if (c.quantity == "ng") {
    q = ContourQuantity::GroupIndexMinusOne;
  } else if (c.quantity == "chi" || c.quantity == "chi_imag") {
    q = ContourQuantity::ChiImag;
  } else {
    throw Error(Errc::InvalidRange, "unknown quantity '" + c.quantity + "' (expected ng or chi)");
  }
  const AxisRange x{c.omega_c_min.value_or(figure ? figure->axis.min : 0.0),
                    c.omega_c_max.value_or(figure ? figure->axis.max : 8.0)};
  const AxisRange y{c.r1_min.value_or(figure ? figure->y_axis.min : 0.0),
                    c.r1_max.value_or(figure ? figure->y_axis.max : 8.0)};
  const auto grid = contour_grid(q, x, y, c.nx.value_or(figure ? figure->points : 401),
                                 c.ny.value_or(figure ? figure->y_points : 401), p.r2, p.omega_scale);
  const auto lines = contour_isolines(grid);

  const fs::path primary = primary_path(o, "contour");
  CsvTable values{{"omega_c", "r1", "value"}, {}};
  values.rows.reserve(grid.values.size());
  for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy)
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix)
      values.rows.push_back({grid.x_axis[ix], grid.y_axis[iy], grid.at(ix, iy)});
  write_text(primary, to_csv_string(values));

  CsvTable levels{{"level", "segment_id", "omega_c", "r1"}, {}};
  for (std::size_t id = 0; id < lines.size(); ++id)
    for (const auto& pt : lines[id].points)
      levels.rows.push_back({lines[id].level, static_cast<double>(id), pt.x, pt.y});
  const auto levels_path = sibling(primary, "_levels", ".csv");
  write_text(levels_path, to_csv_string(levels));

  std::vector<std::string> outputs{primary.string(), levels_path.string()};
  if (o.svg) {
    svg::Panel panel{std::string(to_string(q)) + " contours over (omega_c, r1), r2 = " + format_number(p.r2),
                     "omega_c", {}};
    for (double level : contour_levels(q)) {
      svg::Line line{"level " + format_number(level), {}, level == 0.0};
      for (const auto& l : lines)
        if (l.level == level) line.runs.push_back(l.points);
      panel.lines.push_back(std::move(line));
    }
    // frame the whole grid even where no contour passes
    panel.lines.push_back({"", {{{x.min, y.min}}, {{x.max, y.max}}}, false});
    const auto path = sibling(primary, "", ".svg");
    write_text(path, svg::render(std::span(&panel, 1)));
    outputs.push_back(path.string());
  }
  write_manifest(primary, {"contour", o.figure, p, outputs, figure ? figure->note : ""});
  return kOk;
}

// --- groupindex ---------------------------------------------------------

int cmd_groupindex(const CommonOptions& o, const CurveOptions& c) {
  const auto figure = load_figure(o, FigureKind::GroupIndex, "groupindex");
  if (parse_backend(o.backend) == Backend::Exact) {
    throw Error(Errc::InvalidRange, "group-index curves use the line-centre closed form; no exact backend");
  }
  const SystemParams p = resolve_params(o, figure);
  validate_params(p);

  CurveKind kind;
  if (figure) {
    kind = figure->curve_kind;
  } else if (c.kind == "r1") {
    kind = CurveKind::R1Sweep;
  } else if (c.kind == "omega-c") {
    kind = CurveKind::OmegaCSweep;
  } else if (c.kind == "r1-zero-gain") {
    kind = CurveKind::R1SweepZeroGainR2;
  } else {
    throw Error(Errc::InvalidRange, "unknown curve kind '" + c.kind + "' (expected r1, omega-c or r1-zero-gain)");
  }
  std::vector<double> family = c.family;
  if (family.empty()) {
    family = figure ? figure->family
                    : std::vector<double>{kind == CurveKind::OmegaCSweep ? p.r1 : p.omega_c};
  }
  const auto curves = group_index_curves(kind, p, c.min.value_or(figure ? figure->axis.min : 0.0),
                                         c.max.value_or(figure ? figure->axis.max : 8.0),
                                         c.points.value_or(figure ? figure->points : 1601), family);

  const fs::path primary = primary_path(o, "groupindex");
  CsvTable t{{"axis_value", "series_label", "ng_minus_1", "r2_used"}, {}};
  for (const auto& curve : curves)
    for (std::size_t i = 0; i < curve.axis.size(); ++i)
      t.rows.push_back({curve.axis[i], curve.label, cell(curve.ng_minus_1[i]), cell(curve.r2_used[i])});
  write_text(primary, to_csv_string(t));

  std::vector<std::string> outputs{primary.string()};
  if (o.svg) {
    svg::Panel panel{"n_g - 1, " + std::string(to_string(kind)),
                     kind == CurveKind::OmegaCSweep ? "omega_c" : "r1", {}};
    for (const auto& curve : curves) {
      svg::Line line{curve.label, {{}}, false};
      for (std::size_t i = 0; i < curve.axis.size(); ++i) {
        if (curve.ng_minus_1[i]) {
          line.runs.back().push_back({curve.axis[i], *curve.ng_minus_1[i]});
        } else if (!line.runs.back().empty()) {
          line.runs.emplace_back();
        }
      }
      panel.lines.push_back(std::move(line));
    }
    const auto path = sibling(primary, "", ".svg");
    write_text(path, svg::render(std::span(&panel, 1)));
    outputs.push_back(path.string());
  }
  write_manifest(primary, {"groupindex", o.figure, p, outputs, figure ? figure->note : ""});
  return kOk;
}

int cmd_validate(const ValidateOptions& v, std::ostream& out) {
  const auto report = run_validation({v.seed, v.tol});
  print_report(out, report);
  return report.all_passed() ? kOk : kValidationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probe dispersion and absorption of an incoherently pumped V-type atom", "vtype"};
  app.require_subcommand(1);

  CommonOptions common;
  SpectrumOptions spec;
  ContourOptions cont;
  CurveOptions curve;
  ValidateOptions val;

  auto* steady = app.add_subcommand("steady", "one steady-state point: populations, coherences, chi, n_g - 1");
  add_common(*steady, common);

  auto* spectrum = app.add_subcommand("spectrum", "susceptibility versus probe detuning");
  add_common(*spectrum, common);
  spectrum->add_option("--dp-min", spec.min, "lowest probe detuning");
  spectrum->add_option("--dp-max", spec.max, "highest probe detuning");
  spectrum->add_option("--points", spec.points, "samples including both ends");

  auto* contour = app.add_subcommand("contour", "line-centre n_g - 1 or chi'' over (omega_c, r1)");
  add_common(*contour, common);
  contour->add_option("--quantity", cont.quantity, "ng or chi");
  contour->add_option("--omega-c-min", cont.omega_c_min);
  contour->add_option("--omega-c-max", cont.omega_c_max);
  contour->add_option("--r1-min", cont.r1_min);
  contour->add_option("--r1-max", cont.r1_max);
  contour->add_option("--nx", cont.nx, "omega_c samples");
  contour->add_option("--ny", cont.ny, "r1 samples");

  auto* groupindex = app.add_subcommand("groupindex", "line-centre n_g - 1 curves");
  add_common(*groupindex, common);
  groupindex->add_option("--kind", curve.kind, "r1, omega-c or r1-zero-gain");
  groupindex->add_option("--axis-min", curve.min);
  groupindex->add_option("--axis-max", curve.max);
  groupindex->add_option("--points", curve.points);
  groupindex->add_option("--family", curve.family, "curve parameter values (omega_c, or r1 for --kind omega-c)");

  auto* validate = app.add_subcommand("validate", "run the cross-backend oracle suite");
  validate->add_option("--seed", val.seed, "seed of the randomized parameter grid");
  validate->add_option("--tol", val.tol, "replace every tolerance with this value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (steady->parsed()) return cmd_steady(common, out);
    if (spectrum->parsed()) return cmd_spectrum(common, spec);
    if (contour->parsed()) return cmd_contour(common, cont);
    if (groupindex->parsed()) return cmd_groupindex(common, curve);
    if (validate->parsed()) return cmd_validate(val, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace vtype::cli
