#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "trotterlat/bounds.hpp"
#include "trotterlat/serialize.hpp"
#include "trotterlat/spectra.hpp"
#include "trotterlat/verification.hpp"

#ifndef TROTTERLAT_DATA_DIR
#define TROTTERLAT_DATA_DIR "data"
#endif

namespace {

using namespace trotterlat;

struct CommonOpts {
  std::string model = "hubbard";
  int n_x = 4;
  int n_y = 1;
  int dimension = 0;  // 0 = infer from n_y
  std::string boundary = "open";
  double t = 1.0;
  double u = 0.0;
  double j = 0.0;
  bool j_derived = false;
  double tau = 1.0;
  double epsilon = 1.0;
  std::string format = "csv";
  std::string output;
};

void add_lattice_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--nx", opts.n_x, "sites per row (spinful)")->check(CLI::PositiveNumber);
  cmd->add_option("--ny", opts.n_y, "rows")->check(CLI::PositiveNumber);
  cmd->add_option("--dim", opts.dimension, "lattice dimension (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--boundary", opts.boundary, "boundary condition")
      ->check(CLI::IsMember({"open", "periodic"}));
}

void add_model_flag(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--model", opts.model, "lattice model")
      ->check(CLI::IsMember({"hubbard", "tj"}))
      ->required();
}

void add_param_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--t", opts.t, "hopping energy");
  cmd->add_option("--u", opts.u, "on-site interaction energy (Hubbard)");
  auto* j = cmd->add_option("--j", opts.j, "exchange energy (t-J)");
  auto* derived = cmd->add_flag("--j-derived", opts.j_derived,
                                "derive the exchange energy as 4 t^2 / U");
  j->excludes(derived);
}

Model parse_model(const CommonOpts& opts) {
  return opts.model == "hubbard" ? Model::hubbard : Model::tj;
}

LatticeSpec parse_lattice(const CommonOpts& opts) {
  int dim = opts.dimension != 0 ? opts.dimension : (opts.n_y > 1 ? 2 : 1);
  LatticeSpec lattice{opts.n_x, opts.n_y, dim,
                      opts.boundary == "open" ? Boundary::open : Boundary::periodic};
  lattice.validate();
  return lattice;
}

ModelParams parse_params(const CommonOpts& opts) {
  ModelParams params{opts.t, opts.u, opts.j, opts.j_derived};
  if (opts.j_derived) params = ModelParams::derived_j(opts.t, opts.u);
  params.validate();
  return params;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

int cmd_decompose(const CommonOpts& opts) {
  const LatticeSpec lattice = parse_lattice(opts);
  const auto groups = build_model(parse_model(opts), lattice);
  const JWOrdering ordering = lattice.ordering();
  if (opts.format == "json")
    write_output(opts.output, decomposition_to_json(groups, ordering).dump(2) + "\n");
  else
    write_output(opts.output, decomposition_to_csv(groups, ordering));
  return 0;
}

int cmd_bound(const CommonOpts& opts, const std::string& method) {
  const Model model = parse_model(opts);
  const LatticeSpec lattice = parse_lattice(opts);
  const ModelParams params = parse_params(opts);
  const SimParams sim{opts.tau, opts.epsilon};
  sim.validate();

  auto evaluate = [&](BoundMethod m) -> BoundResult {
    switch (m) {
      case BoundMethod::brute: return bound_brute_lattice(model, lattice, params, sim);
      case BoundMethod::expanded:
        return bound_expanded(compute_atable(model, lattice), lattice, params, sim);
      case BoundMethod::nearest:
        return bound_nearest(compute_atable(model, lattice), lattice, params, sim);
      case BoundMethod::closed: return bound_closed(model, lattice, params, sim);
      case BoundMethod::one_norm: return bound_one_norm(model, lattice, params, sim);
    }
    throw std::logic_error("unknown method");
  };

  if (method != "all") {
    BoundMethod m = method == "brute"      ? BoundMethod::brute
                    : method == "expanded" ? BoundMethod::expanded
                    : method == "nearest"  ? BoundMethod::nearest
                    : method == "closed"   ? BoundMethod::closed
                                           : BoundMethod::one_norm;
    write_output(opts.output, bound_to_json_string(evaluate(m)));
    return 0;
  }

  Json all = Json::array();
  const BoundResult brute = evaluate(BoundMethod::brute);
  const BoundResult expanded = evaluate(BoundMethod::expanded);
  const BoundResult nearest = evaluate(BoundMethod::nearest);
  const BoundResult closed = evaluate(BoundMethod::closed);
  for (const BoundResult* r : {&brute, &expanded, &nearest, &closed})
    all.push_back(bound_to_json(*r));
  if (lattice.dimension == 2) all.push_back(bound_to_json(evaluate(BoundMethod::one_norm)));
  write_output(opts.output, all.dump(2) + "\n");
  const bool agree = brute.polynomial == expanded.polynomial &&
                     expanded.polynomial == nearest.polynomial &&
                     nearest.polynomial == closed.polynomial;
  if (!agree) {
    std::cerr << "cross-method disagreement: brute " << brute.polynomial.str()
              << " vs closed " << closed.polynomial.str() << "\n";
    return 1;
  }
  return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& vary, double from, double to,
              int points, bool log_grid, double fixed_ratio, const std::string& curves,
              const std::string& method) {
  const Model model = parse_model(opts);
  const LatticeSpec lattice = parse_lattice(opts);
  if (points < 2) throw CLI::ValidationError("--points", "need at least 2 grid points");

  SweepSpec spec;
  spec.base = ModelParams{opts.t, opts.u, opts.j, false};
  spec.j_derived = opts.j_derived;
  if (fixed_ratio > 0) spec.fixed_u_over_t = fixed_ratio;
  spec.method = method == "brute"      ? BoundMethod::brute
                : method == "expanded" ? BoundMethod::expanded
                : method == "nearest"  ? BoundMethod::nearest
                : method == "one_norm" ? BoundMethod::one_norm
                                       : BoundMethod::closed;
  spec.vary = vary == "t"   ? SweepParameter::t
              : vary == "u" ? SweepParameter::u
              : vary == "j" ? SweepParameter::j
              : vary == "n" ? SweepParameter::n
                            : SweepParameter::u_over_t;
  for (int k = 0; k < points; ++k) {
    const double f = static_cast<double>(k) / (points - 1);
    spec.grid.push_back(log_grid ? from * std::pow(to / from, f) : from + f * (to - from));
  }

  std::vector<std::string> names;
  std::vector<std::vector<SweepPoint>> results;
  for (std::istringstream list(curves); !list.eof();) {
    std::string curve;
    if (!std::getline(list, curve, ',')) break;
    LatticeSpec shape = lattice;
    if (curve == "2d-obc") shape.boundary = Boundary::open;
    else if (curve == "2d-pbc") shape.boundary = Boundary::periodic;
    else if (curve == "1d-obc") shape = {lattice.n_sites(), 1, 1, Boundary::open};
    else if (curve == "1d-pbc") shape = {lattice.n_sites(), 1, 1, Boundary::periodic};
    else if (curve == "default") shape = lattice;
    else throw CLI::ValidationError("--curves", "unknown curve: " + curve);
    names.push_back(curve);
    results.push_back(sweep(model, shape, spec));
  }
  write_output(opts.output, sweep_to_csv(vary, names, results));
  return 0;
}

int cmd_spectrum(const CommonOpts& opts, int particles, bool allow_double_occ) {
  const Model model = parse_model(opts);
  const LatticeSpec lattice = parse_lattice(opts);
  const ModelParams params = parse_params(opts);
  const auto groups = build_model(model, lattice);
  const DenseOperator dense = to_dense(groups, params, lattice.n_qubits());
  std::optional<int> sector;
  if (particles >= 0) sector = particles;
  const bool exclude_double = model == Model::tj && !allow_double_occ;
  const auto levels =
      eigenvalues(dense, SectorFilter::for_lattice(lattice, sector, exclude_double));
  write_output(opts.output, spectrum_to_csv(levels));
  return 0;
}

int cmd_verify(bool quick, const std::string& data_dir) {
  VerifyOptions options;
  options.quick = quick;
  options.data_dir = data_dir;
  const auto results = run_verification(options);
  std::cout << format_check_lines(results) << "\n" << format_criterion_summary(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-Wigner lattice models and first-order Trotter step bounds"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* decompose = app.add_subcommand(
      "decompose", "emit the per-site Pauli decomposition of a model Hamiltonian");
  add_model_flag(decompose, opts);
  add_lattice_flags(decompose, opts);
  decompose->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  decompose->add_option("--output,-o", opts.output, "output path (default stdout)");

  std::string method = "closed";
  auto* bound = app.add_subcommand("bound", "compute a Trotter step-count bound");
  add_model_flag(bound, opts);
  add_lattice_flags(bound, opts);
  add_param_flags(bound, opts);
  bound->add_option("--tau", opts.tau, "evolution time");
  bound->add_option("--epsilon", opts.epsilon, "allowed Trotter error")
      ->check(CLI::PositiveNumber);
  bound->add_option("--method", method, "bound route")
      ->check(CLI::IsMember({"brute", "expanded", "nearest", "closed", "one_norm", "all"}));
  bound->add_option("--output,-o", opts.output, "output path (default stdout)");

  std::string vary = "t", curves = "default", sweep_method = "closed";
  double from = 0.1, to = 1.0, fixed_ratio = 0.0;
  int points = 10;
  bool log_grid = false;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "tabulate a bound against one swept parameter");
  add_model_flag(sweep_cmd, opts);
  add_lattice_flags(sweep_cmd, opts);
  add_param_flags(sweep_cmd, opts);
  sweep_cmd->add_option("--vary", vary, "swept parameter")
      ->check(CLI::IsMember({"t", "u", "j", "n", "u_over_t"}))
      ->required();
  sweep_cmd->add_option("--from", from, "grid start")->required();
  sweep_cmd->add_option("--to", to, "grid end")->required();
  sweep_cmd->add_option("--points", points, "grid size");
  sweep_cmd->add_flag("--log", log_grid, "logarithmic grid");
  sweep_cmd->add_option("--fix-u-over-t", fixed_ratio,
                        "tie t = U / ratio while sweeping U");
  sweep_cmd->add_option("--curves", curves,
                        "comma list of default,2d-obc,2d-pbc,1d-obc,1d-pbc");
  sweep_cmd->add_option("--method", sweep_method, "bound route")
      ->check(CLI::IsMember({"brute", "expanded", "nearest", "closed", "one_norm"}));
  sweep_cmd->add_option("--output,-o", opts.output, "output path (default stdout)");

  int particles = -1;
  bool allow_double_occ = false;
  auto* spectrum = app.add_subcommand(
      "spectrum", "exact eigenvalues of a model Hamiltonian, optionally per sector");
  add_model_flag(spectrum, opts);
  add_lattice_flags(spectrum, opts);
  add_param_flags(spectrum, opts);
  spectrum->add_option("--particles", particles, "restrict to a particle-number sector");
  spectrum->add_flag("--include-double-occupancy", allow_double_occ,
                     "keep doubly occupied basis states for the t-J model");
  spectrum->add_option("--output,-o", opts.output, "output path (default stdout)");

  bool quick = false;
  std::string data_dir = TROTTERLAT_DATA_DIR;
  auto* verify = app.add_subcommand("verify", "run the full reproduction suite");
  verify->add_flag("--quick", quick, "skip the spectrum checks");
  verify->add_option("--data-dir", data_dir, "directory holding the table fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(opts);
    if (bound->parsed()) return cmd_bound(opts, method);
    if (sweep_cmd->parsed())
      return cmd_sweep(opts, vary, from, to, points, log_grid, fixed_ratio, curves,
                       sweep_method);
    if (spectrum->parsed()) return cmd_spectrum(opts, particles, allow_double_occ);
    if (verify->parsed()) return cmd_verify(quick, data_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
