#include "commands.hpp"

#include "kato/cube.hpp"
#include "kato/hk_audit.hpp"
#include "kato/kato_inversion.hpp"
#include "kato/local_scaling.hpp"
#include "kato/report_io.hpp"
#include "kato/spec_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kato::cli {
namespace {

using nlohmann::json;

// Command-wide settings; defaults equal the library defaults.
struct Settings {
  std::string output;
  std::optional<double> tol;
  int lebedev_order = RadialDerivativeOptions{}.lebedev_order;
  int seeds = TopologyOptions{}.seeds_per_axis;
  int json_indent = 2;
  bool snap = false;
  bool dump_tolerances = false;
  // lst
  double r_min = ScalingGrid{}.r_min;
  double r_max = ScalingGrid{}.r_max;
  int points = ScalingGrid{}.points;
  std::string table;
  // grid-export
  std::vector<double> origin = {0.0, 0.0, 0.0};
  std::vector<double> axes = {0.2, 0.0, 0.0, 0.0, 0.2, 0.0, 0.0, 0.0, 0.2};
  std::vector<int> counts = {41, 41, 41};
};

constexpr double kDefaultInvertTol = 1e-8;
constexpr double kDefaultVerifyTol = 1e-3;
constexpr double kDefaultAuditTol = 1e-10;
constexpr double kDefaultLstTol = 1e-10;

struct Failure {
  int code;
  std::string message;
};

double primary_tol(const std::string& command, const Settings& s) {
  if (s.tol) return *s.tol;
  if (command == "verify-cusp") return kDefaultVerifyTol;
  if (command == "audit") return kDefaultAuditTol;
  if (command == "lst") return kDefaultLstTol;
  return kDefaultInvertTol;
}

InversionOptions inversion_options(const std::string& command, const Settings& s) {
  InversionOptions opt;
  opt.topology.seeds_per_axis = s.seeds;
  opt.topology.radial.lebedev_order = s.lebedev_order;
  if (command == "invert") opt.topology.radial.tolerance = primary_tol(command, s);
  opt.snap_charges = s.snap;
  return opt;
}

json tolerance_set(const std::string& command, const Settings& s) {
  const auto inv = inversion_options(command, s);
  const auto& topo = inv.topology;
  const RadialQuadratureOptions quad;
  const IncompatibilityOptions incompat;
  return {{"tol", primary_tol(command, s)},
          {"radial_derivative",
           {{"initial_radius", topo.radial.initial_radius},
            {"shrink_factor", topo.radial.shrink_factor},
            {"max_levels", topo.radial.max_levels},
            {"tolerance", topo.radial.tolerance},
            {"lebedev_order", topo.radial.lebedev_order}}},
          {"topology",
           {{"seeds_per_axis", topo.seeds_per_axis},
            {"cusp_threshold", topo.cusp_threshold},
            {"newton_exclusion_radius", topo.newton_exclusion_radius},
            {"eigenvalue_relative_tol", topo.eigenvalue_relative_tol},
            {"dedup_radius", topo.dedup_radius},
            {"gradient_relative_tol", topo.gradient_relative_tol},
            {"ascent_step_tol", topo.ascent_step_tol}}},
          {"inversion", {{"snap_charges", inv.snap_charges}, {"match_gate", inv.match_gate}}},
          {"incompatibility",
           {{"position_tol", incompat.position_tol},
            {"charge_tol", incompat.charge_tol},
            {"probe_lebedev_order", incompat.probe_lebedev_order}}},
          {"quadrature",
           {{"laguerre_nodes", quad.laguerre_nodes},
            {"legendre_nodes", quad.legendre_nodes},
            {"convergence_tol", quad.convergence_tol}}},
          {"scaling_grid", {{"r_min", s.r_min}, {"r_max", s.r_max}, {"points", s.points}}}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInputError, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedSpec {
  std::string path;
  std::string hash;
  DensitySpec spec;
};

LoadedSpec load(const std::string& path) {
  const auto text = read_file(path);
  try {
    return {path, fnv1a_hex(text), parse_density_spec_text(text)};
  } catch (const SpecError& e) {
    throw Failure{kInputError, path + ": " + e.what()};
  }
}

json header(const std::string& command, const Settings& s, const std::vector<LoadedSpec>& inputs) {
  json in = json::array();
  for (const auto& i : inputs) in.push_back({{"path", i.path}, {"fnv1a64", i.hash}});
  return {{"tool", "kato"},
          {"version", KATO_VERSION},
          {"command", command},
          {"inputs", in},
          {"tolerances", tolerance_set(command, s)}};
}

void emit(const json& report, const Settings& s, std::ostream& out) {
  const auto text = report.dump(s.json_indent) + "\n";
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.output, std::ios::binary);
  if (!f || !(f << text)) throw Failure{kInputError, "cannot write '" + s.output + "'"};
}

SearchBox box_for(const DensityModel& a, const DensityModel* b = nullptr) {
  auto box = SearchBox::around(a);
  if (b != nullptr) {
    const auto other = SearchBox::around(*b);
    box.lower = box.lower.cwiseMin(other.lower);
    box.upper = box.upper.cwiseMax(other.upper);
  }
  return box;
}

int cmd_invert(const Settings& s, const std::string& input, std::ostream& out) {
  const auto spec = load(input);
  auto report = header("invert", s, {spec});
  int code = kOk;
  try {
    const auto rec = reconstruct_potential(spec.spec.model, box_for(spec.spec.model),
                                           inversion_options("invert", s));
    report["status"] = "ok";
    report["result"] = to_json(rec);
  } catch (const NoCuspsFound& e) {
    json smooth = json::array();
    for (const auto& cp : e.smooth_points()) smooth.push_back(to_json(cp));
    report["status"] = "no_cusps_found";
    report["message"] = e.what();
    report["smooth_points"] = smooth;
    code = kNoCusps;
  } catch (const EmptyResult& e) {
    report["status"] = "no_cusps_found";
    report["message"] = e.what();
    report["smooth_points"] = json::array();
    code = kNoCusps;
  }
  emit(report, s, out);
  return code;
}

int cmd_verify(const Settings& s, const std::string& input, std::ostream& out) {
  const auto spec = load(input);
  const auto& model = spec.spec.model;
  if (!model.frame() || model.frame()->empty()) {
    throw Failure{kInputError, input + ": frame: verify-cusp needs a declared frame"};
  }
  RadialDerivativeOptions radial;
  radial.lebedev_order = s.lebedev_order;
  const auto v = verify_cusp_conditions(model, *model.frame(), primary_tol("verify-cusp", s), radial);
  auto report = header("verify-cusp", s, {spec});
  report["status"] = v.all_passed() ? "ok" : "cusp_conditions_violated";
  report["result"] = to_json(v);
  emit(report, s, out);
  return v.all_passed() ? kOk : kNoCusps;
}

OneElectronSystem system_from(const LoadedSpec& spec) {
  const auto& model = spec.spec.model;
  if (!model.frame()) throw Failure{kInputError, spec.path + ": frame: audit needs a declared frame"};
  const auto& frame = *model.frame();
  const auto scope = [&](const std::string& why) {
    return Failure{kScope, spec.path + ": audit supports single-center one-electron systems only (" +
                               why + ")"};
  };
  if (frame.size() != 1) throw scope("frame has " + std::to_string(frame.size()) + " centers");
  if (model.electron_count() != 1) throw scope("electron_count is not 1");
  if (model.terms().size() != 1) throw scope("density must be a single term");
  const auto& term = model.terms().front();
  if (term.primitive.power != 0) throw scope("density term must have power 0");
  const auto kind = term.primitive.kind == PrimitiveKind::SlaterS ? RadialOrbital::Kind::Slater
                                                                  : RadialOrbital::Kind::Gaussian;
  // psi = sqrt(rho): exp(-2 zeta r) -> exp(-zeta r), exp(-a r^2) -> exp(-a r^2 / 2)
  const double exponent = kind == RadialOrbital::Kind::Slater ? term.primitive.exponent
                                                               : 0.5 * term.primitive.exponent;
  return {CoulombPotential(frame, spec.spec.potential_offset),
          RadialOrbital(kind, exponent, term.center)};
}

int cmd_audit(const Settings& s, const std::string& a, const std::string& b, std::ostream& out) {
  const auto spec1 = load(a);
  const auto spec2 = load(b);
  const auto sys1 = system_from(spec1);
  const auto sys2 = system_from(spec2);
  const auto result = audit_pair(sys1, sys2, primary_tol("audit", s));
  auto report = header("audit", s, {spec1, spec2});
  report["status"] = "ok";
  report["result"] = to_json(result);
  emit(report, s, out);
  return kOk;
}

RadialDensity radial_from(const LoadedSpec& spec) {
  if (!spec.spec.model.is_concentric()) {
    throw Failure{kScope, spec.path + ": lst needs a single-center spherical density"};
  }
  return RadialDensity::from_model(spec.spec.model);
}

int cmd_lst(const Settings& s, const std::string& a, const std::string& b, std::ostream& out) {
  const auto source = load(a);
  const auto target = load(b);
  const auto rs = radial_from(source);
  const auto rt = radial_from(target);
  LocalScalingMap map = [&] {
    try {
      return solve_scaling_map(rs, rt, ScalingGrid{s.r_min, s.r_max, s.points});
    } catch (const MassMismatch& e) {
      throw Failure{kMassMismatch, e.what()};
    } catch (const NonMonotoneCumulative& e) {
      throw Failure{kInputError, e.what()};
    }
  }();
  auto report = header("lst", s, {source, target});
  report["result"] = to_json(map);
  double max_q = 0.0;
  for (double q : map.q_residuals) max_q = std::max(max_q, q);
  report["status"] = max_q <= primary_tol("lst", s) ? "ok" : "q_residual_above_tol";
  if (!s.table.empty()) {
    std::ofstream f(s.table);
    if (!f) throw Failure{kInputError, "cannot write '" + s.table + "'"};
    f << "# r f(r) df/dr q_residual\n" << std::setprecision(17);
    for (std::size_t i = 0; i < map.radii.size(); ++i) {
      f << map.radii[i] << ' ' << map.values[i] << ' ' << map.derivatives[i] << ' '
        << map.q_residuals[i] << '\n';
    }
  }
  emit(report, s, out);
  return kOk;
}

int cmd_grid(const Settings& s, const std::string& input, std::ostream& out) {
  const auto spec = load(input);
  if (s.output.empty()) throw Failure{kInputError, "grid-export needs --output"};
  std::array<int, 3> counts{};
  std::array<Vec3, 3> steps;
  for (int a = 0; a < 3; ++a) {
    counts[a] = s.counts[a];
    if (counts[a] < 2) throw Failure{kInputError, "counts: every axis needs at least 2 points"};
    steps[a] = Vec3(s.axes[3 * a], s.axes[3 * a + 1], s.axes[3 * a + 2]);
  }
  const auto grid = sample_density(spec.spec.model, Vec3(s.origin[0], s.origin[1], s.origin[2]),
                                   steps, counts);
  std::ofstream f(s.output, std::ios::binary);
  if (!f) throw Failure{kInputError, "cannot write '" + s.output + "'"};
  write_cube(f, grid);
  if (!f) throw Failure{kInputError, "cannot write '" + s.output + "'"};
  out << "wrote " << grid.values.size() << " values to " << s.output << "\n";
  return kOk;
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--output", s.output, "Write the report to PATH instead of stdout");
  cmd->add_option("--tol", s.tol, "Primary tolerance of the command");
  cmd->add_option("--lebedev-order", s.lebedev_order, "Lebedev rule for spherical averages");
  cmd->add_option("--seeds", s.seeds, "Seeds per axis of the critical-point search");
  cmd->add_option("--json-indent", s.json_indent, "JSON indentation (-1 for compact)");
  cmd->add_flag("--tolerances", s.dump_tolerances, "Print the tolerance set and exit");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kato-cusp density inversion, Hohenberg-Kohn audit and local-scaling maps", "kato"};
  app.require_subcommand(1);
  Settings s;
  std::string input;
  std::string input2;

  auto* invert = app.add_subcommand("invert", "Reconstruct the Coulombic potential from a density");
  invert->add_option("input", input, "Density spec (JSON)")->required();
  invert->add_flag("--snap", s.snap, "Round estimated charges to integers");
  add_common(invert, s);

  auto* verify = app.add_subcommand("verify-cusp", "Check the cusp condition at the declared frame");
  verify->add_option("input", input, "Density spec with a frame")->required();
  add_common(verify, s);

  auto* audit = app.add_subcommand("audit", "Variational audit of two one-electron systems");
  audit->add_option("spec1", input, "First system")->required();
  audit->add_option("spec2", input2, "Second system")->required();
  add_common(audit, s);

  auto* lst = app.add_subcommand("lst", "Solve the radial local-scaling map source -> target");
  lst->add_option("source", input, "Source density")->required();
  lst->add_option("target", input2, "Target density")->required();
  lst->add_option("--r-min", s.r_min, "Smallest grid radius (bohr)");
  lst->add_option("--r-max", s.r_max, "Largest grid radius (bohr)");
  lst->add_option("--points", s.points, "Number of log-spaced radii");
  lst->add_option("--table", s.table, "Also write a whitespace table to PATH");
  add_common(lst, s);

  auto* grid = app.add_subcommand("grid-export", "Sample the density into a Gaussian cube file");
  grid->add_option("input", input, "Density spec")->required();
  grid->add_option("--origin", s.origin, "Grid origin x y z (bohr)")->expected(3);
  grid->add_option("--axes", s.axes, "Three step vectors, 9 numbers (bohr)")->expected(9);
  grid->add_option("--counts", s.counts, "Points per axis, 3 integers")->expected(3);
  add_common(grid, s);

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  // --tolerances must work without positional arguments.
  const bool wants_tolerances =
      std::find(args.begin(), args.end(), "--tolerances") != args.end();
  if (wants_tolerances) {
    for (auto* sub : {invert, verify, audit, lst, grid}) {
      for (auto* opt : sub->get_options()) {
        if (opt->get_positional()) opt->required(false);
      }
    }
  }

  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    if (s.dump_tolerances) {
      out << tolerance_set(command, s).dump(s.json_indent) << "\n";
      return kOk;
    }
    if (command == "invert") return cmd_invert(s, input, out);
    if (command == "verify-cusp") return cmd_verify(s, input, out);
    if (command == "audit") return cmd_audit(s, input, input2, out);
    if (command == "lst") return cmd_lst(s, input, input2, out);
    return cmd_grid(s, input, out);
  } catch (const Failure& f) {
    err << "kato " << command << ": " << f.message << "\n";
    return f.code;
  } catch (const UnsupportedOrder& e) {
    err << "kato " << command << ": --lebedev-order: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "kato " << command << ": " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace kato::cli
