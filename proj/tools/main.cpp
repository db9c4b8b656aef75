// isoshift - isometric translation operators on graphs, in discrete time,
// and in the joint time-vertex domain.
//
// Exit codes: 0 success, 1 check failure, 2 usage or validation error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isoshift/discrete_time.hpp"
#include "isoshift/graph.hpp"
#include "isoshift/io.hpp"
#include "isoshift/joint.hpp"
#include "isoshift/random.hpp"
#include "isoshift/schrodinger.hpp"
#include "isoshift/spectral.hpp"
#include "isoshift/translation.hpp"

using namespace isoshift;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// ----------------------------------------------------------------------------
// Variant / basis resolution shared by op, evolve and check
// ----------------------------------------------------------------------------

struct VariantFlags {
  std::string variant = "laplacian-sqrt";
  std::string basis;  // empty = default for the variant
  double rho = std::numeric_limits<double>::quiet_NaN();
  std::string phi_file;
  std::string freq_file;
  std::string ordering = "auto";
};

void add_variant_flags(CLI::App* cmd, VariantFlags& vf, bool required = true) {
  auto* opt = cmd->add_option("--variant", vf.variant,
                              "frequency variant: laplacian-sqrt|girault|gavili-e|"
                              "gavili-phi|custom");
  if (required) opt->required();
  cmd->add_option("--basis", vf.basis,
                  "basis override: laplacian|adjacency|dft "
                  "(default depends on the variant)");
  cmd->add_option("--rho", vf.rho, "girault eigenvalue bound (default: lambda_max)");
  cmd->add_option("--phi-file", vf.phi_file,
                  "gavili-phi phases, one per line (default: (2l+1)*pi/N)");
  cmd->add_option("--freq-file", vf.freq_file, "custom frequencies, one per line");
  cmd->add_option("--ordering", vf.ordering,
                  "gavili-e ordering: auto|natural|descending");
}

RealVector read_column(const std::string& path) {
  const RealMatrix m = read_csv_file(path);
  if (m.cols() != 1) throw std::runtime_error(path + ": expected a single column");
  return m.col(0);
}

RealVector default_phases(int n) {
  RealVector phi(n);
  for (int k = 0; k < n; ++k) phi[k] = (2.0 * k + 1.0) * kPi / n;
  return phi;
}

struct ResolvedSpec {
  SpectralBasis basis;
  FrequencySpec freq;
};

ResolvedSpec resolve_spec(const Graph& g, const VariantFlags& vf) {
  const bool gavili = vf.variant == "gavili-e" || vf.variant == "gavili-phi";
  std::string basis_name = vf.basis;
  if (basis_name.empty()) basis_name = gavili ? "adjacency" : "laplacian";

  SpectralBasis basis;
  if (basis_name == "laplacian")
    basis = eig_sym(laplacian(g), BasisSource::Laplacian);
  else if (basis_name == "adjacency")
    basis = eig_sym(g.weights(), BasisSource::Adjacency);
  else if (basis_name == "dft")
    basis = dft_basis(g.size());
  else
    throw std::runtime_error("unknown basis \"" + basis_name + "\"");

  if (gavili && basis.source == BasisSource::Adjacency &&
      min_eigen_gap(basis.lambda) < 1e-8) {
    std::cerr << "warning: adjacency eigenvalue gap below 1e-8; the Gavili "
                 "operator depends on the eigensolver's basis choice inside "
                 "degenerate eigenspaces\n";
  }

  ResolvedSpec out;
  if (vf.variant == "laplacian-sqrt") {
    out.freq = laplacian_sqrt_frequencies(basis);
  } else if (vf.variant == "girault") {
    out.freq = girault_frequencies(basis, std::isnan(vf.rho)
                                              ? std::nullopt
                                              : std::optional<double>(vf.rho));
  } else if (vf.variant == "gavili-e") {
    GaviliOrdering ordering = GaviliOrdering::Auto;
    if (vf.ordering == "natural")
      ordering = GaviliOrdering::Natural;
    else if (vf.ordering == "descending")
      ordering = GaviliOrdering::DescendingEigenvalue;
    else if (vf.ordering != "auto")
      throw std::runtime_error("unknown ordering \"" + vf.ordering + "\"");
    out.freq = gavili_uniform_frequencies(basis, ordering);
  } else if (vf.variant == "gavili-phi") {
    const RealVector phi =
        vf.phi_file.empty() ? default_phases(basis.n) : read_column(vf.phi_file);
    out.freq = gavili_phase_frequencies(basis, phi);
  } else if (vf.variant == "custom") {
    if (vf.freq_file.empty())
      throw std::runtime_error("--variant custom requires --freq-file");
    out.freq = custom_frequencies(basis, read_column(vf.freq_file));
  } else {
    throw std::runtime_error("unknown variant \"" + vf.variant + "\"");
  }
  out.basis = std::move(basis);
  return out;
}

json spec_meta(const ResolvedSpec& spec, double kappa) {
  json meta{{"form", "gto"},
            {"variant", to_string(spec.freq.variant)},
            {"basis", to_string(spec.basis.source)},
            {"kappa", kappa}};
  if (spec.freq.variant == FrequencyVariant::GiraultReduced) meta["rho"] = spec.freq.rho;
  if (spec.freq.variant == FrequencyVariant::GaviliPhases) {
    json phi = json::array();
    for (Eigen::Index k = 0; k < spec.freq.phases.size(); ++k)
      phi.push_back(spec.freq.phases[k]);
    meta["phi"] = std::move(phi);
  }
  return meta;
}

// ----------------------------------------------------------------------------
// Signals
// ----------------------------------------------------------------------------

ComplexVector signal_as_vector(const ComplexMatrix& s, Eigen::Index expected) {
  if (s.cols() == 1 && s.rows() == expected) return s.col(0);
  if (s.rows() * s.cols() == expected) return s.reshaped();  // vec by columns
  throw std::runtime_error("signal has " + std::to_string(s.rows()) + "x" +
                           std::to_string(s.cols()) +
                           " entries but the operator dimension is " +
                           std::to_string(expected));
}

// ----------------------------------------------------------------------------
// Check harness: one line per assertion, exit 1 on any failure
// ----------------------------------------------------------------------------

class CheckRun {
 public:
  explicit CheckRun(std::string name) : name_(std::move(name)) {}

  void assert_le(const std::string& what, double residual, double tol) {
    const bool ok = residual <= tol;
    pass_ = pass_ && ok;
    std::cout << "[check " << name_ << "] " << what << " residual=" << residual
              << " tol=" << tol << (ok ? " PASS" : " FAIL") << "\n";
  }

  void report(const std::string& what, double value) {
    std::cout << "[check " << name_ << "] " << what << " = " << value << "\n";
  }

  int finish() const {
    std::cout << "[check " << name_ << "] overall " << (pass_ ? "PASS" : "FAIL")
              << "\n";
    return pass_ ? 0 : 1;
  }

 private:
  std::string name_;
  bool pass_ = true;
};

struct NamedSpec {
  std::string name;
  ResolvedSpec spec;
};

std::vector<NamedSpec> all_variant_specs(const Graph& g) {
  std::vector<NamedSpec> out;
  for (const char* name : {"laplacian-sqrt", "girault", "gavili-e", "gavili-phi"}) {
    VariantFlags vf;
    vf.variant = name;
    out.push_back({name, resolve_spec(g, vf)});
  }
  return out;
}

int check_unitarity(const Graph& g) {
  CheckRun run("unitarity");
  for (const auto& [name, spec] : all_variant_specs(g))
    for (double kappa : {0.5, 1.0, 2.7})
      run.assert_le("variant=" + name + " kappa=" + std::to_string(kappa),
                    unitarity_defect(gto(spec.basis, spec.freq, kappa).t), 1e-10);
  return run.finish();
}

int check_group(const Graph& g) {
  CheckRun run("group");
  const double k1 = 0.7, k2 = 1.9;
  for (const auto& [name, spec] : all_variant_specs(g)) {
    const ComplexMatrix a = gto(spec.basis, spec.freq, k1).t;
    const ComplexMatrix b = gto(spec.basis, spec.freq, k2).t;
    const ComplexMatrix sum = gto(spec.basis, spec.freq, k1 + k2).t;
    run.assert_le("variant=" + name + " composition",
                  max_abs_diff(ComplexMatrix(a * b), sum), 1e-9);
    run.assert_le("variant=" + name + " commutation",
                  max_abs_diff(ComplexMatrix(a * b), ComplexMatrix(b * a)), 1e-9);
  }
  return run.finish();
}

int check_spectrum_invariance(const Graph& g, std::uint64_t seed) {
  CheckRun run("spectrum-invariance");
  const ComplexVector x = random_complex_vector(g.size(), seed);
  for (const auto& [name, spec] : all_variant_specs(g)) {
    const TranslationOperator op = gto(spec.basis, spec.freq, 2.7);
    const RealVector before = power_spectrum(x, spec.basis);
    const RealVector after = power_spectrum(translate(op, x), spec.basis);
    run.assert_le("variant=" + name, (before - after).cwiseAbs().maxCoeff(), 1e-10);
  }
  return run.finish();
}

int check_theorem1(const Graph& g, int m, std::uint64_t seed) {
  CheckRun run("theorem1");
  const SpectralBasis bg = eig_sym(laplacian(g), BasisSource::Laplacian);
  const SpectralBasis bd = dft_basis(m);
  const FrequencySpec fg = laplacian_sqrt_frequencies(bg);
  const ComplexMatrix psi_j = joint_fourier_matrix(bg, bd);
  const TimeVertexSignal x = random_complex_matrix(g.size(), m, seed);

  for (auto [kappa, upsilon] :
       {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{3.0, 0.0}}) {
    const std::string tag =
        "kappa=" + std::to_string(kappa) + " upsilon=" + std::to_string(upsilon);
    const TranslationOperator tg = gto(bg, fg, kappa);
    const JointOperator kron_form = jto_kronecker(tg, m, upsilon);
    const JointOperator spec_form = jto_spectral(bg, bd, fg, kappa, upsilon);
    run.assert_le(tag + " kronecker-vs-spectral",
                  max_abs_diff(kron_form.t, spec_form.t), 1e-9);
    run.assert_le(tag + " unitarity(kronecker)", unitarity_defect(kron_form.t), 1e-10);
    run.assert_le(tag + " unitarity(spectral)", unitarity_defect(spec_form.t), 1e-10);

    ComplexMatrix d = psi_j.adjoint() * kron_form.t * psi_j;
    d.diagonal().setZero();
    run.assert_le(tag + " convolutivity", max_abs(d), 1e-10);

    const RealMatrix before = jft(x, bg, bd).cwiseAbs2();
    const RealMatrix after = jft(translate_joint(tg, upsilon, x), bg, bd).cwiseAbs2();
    run.assert_le(tag + " power-spectrum", max_abs(RealMatrix(before - after)), 1e-10);
  }
  return run.finish();
}

int check_transition(const Graph& g, std::uint64_t seed) {
  CheckRun run("transition");
  const SpectralBasis b = eig_sym(laplacian(g), BasisSource::Laplacian);
  const FrequencySpec f = laplacian_sqrt_frequencies(b);
  const Hamiltonian h = hamiltonian(b, f);

  for (double t : {1.0, 2.0, 5.0})
    run.assert_le("integer-t gto equivalence t=" + std::to_string(int(t)),
                  max_abs_diff(transition_spectral(h, t, 1.0), gto(b, f, t).t), 1e-10);

  for (double tol : {1e-8, 1e-12})
    run.assert_le("series agreement tol=" + format_double(tol),
                  max_abs_diff(transition_series(h, 1.0, 1.0, tol),
                               transition_spectral(h, 1.0)),
                  10.0 * tol);

  const ComplexVector u0 = random_complex_vector(g.size(), seed);
  for (double t : {0.3, 1.0, 7.5})
    run.assert_le("norm conservation t=" + format_double(t),
                  std::abs(evolve(u0, h, t).norm() - u0.norm()), 1e-10);
  return run.finish();
}

std::vector<std::pair<double, double>> parse_grid(const std::string& grid) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(grid);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("bad --grid entry \"" + item + "\" (want kappa,upsilon)");
    out.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
  }
  if (out.empty()) throw std::runtime_error("--grid is empty");
  return out;
}

int check_jwss(const Graph& g, const std::string& signals_dir, const std::string& grid,
               double tol, const VariantFlags& vf) {
  CheckRun run("jwss");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(signals_dir))
    if (entry.path().extension() == ".csv") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<TimeVertexSignal> signals;
  for (const auto& f : files) signals.push_back(read_signal(f.string()));
  if (signals.empty()) throw std::runtime_error("no .csv signals in " + signals_dir);

  const ResolvedSpec spec = resolve_spec(g, vf);
  auto builder = [&spec](double kappa) { return gto(spec.basis, spec.freq, kappa); };
  const JwssReport report = jwss_check(signals, parse_grid(grid), builder, tol);
  run.report("samples", report.sample_count);
  for (const auto& r : report.shifts) {
    const std::string tag =
        "kappa=" + format_double(r.kappa) + " upsilon=" + format_double(r.upsilon);
    run.assert_le(tag + " mean deviation", r.mean_dev, tol);
    run.assert_le(tag + " second-moment deviation", r.moment_dev, tol);
  }
  return run.finish();
}

// ----------------------------------------------------------------------------
// Top-level command implementations
// ----------------------------------------------------------------------------

int cmd_graph_gen(const std::string& kind, GraphParams params, const std::string& out) {
  GraphKind k;
  if (kind == "cycle")
    k = GraphKind::Cycle;
  else if (kind == "path")
    k = GraphKind::Path;
  else if (kind == "complete")
    k = GraphKind::Complete;
  else if (kind == "grid")
    k = GraphKind::Grid;
  else if (kind == "erdos-renyi")
    k = GraphKind::ErdosRenyi;
  else
    throw std::runtime_error("unknown graph kind \"" + kind + "\"");
  save_edges_file(generate(k, params), out);
  return 0;
}

int cmd_evolve(const Graph& g, const VariantFlags& vf, double t, double alpha, int steps,
               const std::string& signal_path, const std::string& out) {
  if (steps < 1) throw std::runtime_error("--steps must be at least 1");
  const ResolvedSpec spec = resolve_spec(g, vf);
  const Hamiltonian h = hamiltonian(spec.basis, spec.freq);
  const ComplexVector u0 = signal_as_vector(read_signal(signal_path), g.size());

  // One row per snapshot: t_j, Re(u), Im(u). A zero horizon is a single row.
  const int snapshots = t == 0.0 ? 0 : steps;
  RealMatrix traj(snapshots + 1, 1 + 2 * g.size());
  for (int j = 0; j <= snapshots; ++j) {
    const double tj = snapshots == 0 ? 0.0 : t * j / snapshots;
    const ComplexVector u = evolve(u0, h, tj, alpha);
    traj(j, 0) = tj;
    for (int i = 0; i < g.size(); ++i) {
      traj(j, 1 + i) = u[i].real();
      traj(j, 1 + g.size() + i) = u[i].imag();
    }
  }
  write_csv_file(out, traj);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"isometric translation operators on graphs, in discrete time, and in "
               "the joint time-vertex domain"};
  app.require_subcommand(1);

  // --- graph ---------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "generate and export graphs");
  graph_cmd->require_subcommand(1);
  auto* gen = graph_cmd->add_subcommand("gen", "generate a graph as an edge list");
  std::string gen_kind, gen_out;
  GraphParams gen_params;
  gen->add_option("--kind", gen_kind, "cycle|path|complete|grid|erdos-renyi")->required();
  gen->add_option("--n", gen_params.n, "vertex count (grid: rows)")->required();
  gen->add_option("--m", gen_params.m, "grid columns (default: n)");
  gen->add_option("--p", gen_params.p, "erdos-renyi edge probability");
  auto* seed_opt = gen->add_option("--seed", gen_params.seed, "erdos-renyi seed");
  gen->add_option("-o,--out", gen_out, "output edge-list path")->required();

  // --- op --------------------------------------------------------------------
  auto* op_cmd = app.add_subcommand("op", "build translation operators as JSON");
  op_cmd->require_subcommand(1);

  struct OpArgs {
    std::string graph, out;
    VariantFlags vf;
    double kappa = 0.0, upsilon = 0.0;
    int time = 0;
    int ikappa = 0, iupsilon = 0;
  } op_args;

  auto* op_gto = op_cmd->add_subcommand("gto", "graph translation operator");
  op_gto->add_option("--graph", op_args.graph)->required();
  add_variant_flags(op_gto, op_args.vf);
  op_gto->add_option("--kappa", op_args.kappa, "translation value")->required();
  op_gto->add_option("-o,--out", op_args.out)->required();

  auto* op_dt = op_cmd->add_subcommand("dt", "discrete-time translation operator");
  op_dt->add_option("--time", op_args.time, "number of time samples M")->required();
  op_dt->add_option("--upsilon", op_args.upsilon, "translation value")->required();
  op_dt->add_option("-o,--out", op_args.out)->required();

  auto* op_jto = op_cmd->add_subcommand("jto", "joint translation, Kronecker form");
  op_jto->add_option("--graph", op_args.graph)->required();
  op_jto->add_option("--time", op_args.time, "time length M")->required();
  add_variant_flags(op_jto, op_args.vf);
  op_jto->add_option("--kappa", op_args.kappa)->required();
  op_jto->add_option("--upsilon", op_args.upsilon)->required();
  op_jto->add_option("-o,--out", op_args.out)->required();

  auto* op_jto_sp = op_cmd->add_subcommand("jto-spectral", "joint translation, spectral form");
  op_jto_sp->add_option("--graph", op_args.graph)->required();
  op_jto_sp->add_option("--time", op_args.time)->required();
  add_variant_flags(op_jto_sp, op_args.vf);
  op_jto_sp->add_option("--kappa", op_args.kappa)->required();
  op_jto_sp->add_option("--upsilon", op_args.upsilon)->required();
  op_jto_sp->add_option("-o,--out", op_args.out)->required();

  auto* op_seg = op_cmd->add_subcommand("segarra", "Kronecker-sum joint shift W_D (+) W_G");
  op_seg->add_option("--graph", op_args.graph)->required();
  op_seg->add_option("--time", op_args.time)->required();
  op_seg->add_option("-o,--out", op_args.out)->required();

  auto* op_segb = op_cmd->add_subcommand("segarra-biv", "bivariate Segarra reformulation");
  op_segb->add_option("--graph", op_args.graph)->required();
  op_segb->add_option("--time", op_args.time)->required();
  op_segb->add_option("--kappa", op_args.ikappa, "nonnegative integer power")->required();
  op_segb->add_option("--upsilon", op_args.iupsilon, "nonnegative integer power")->required();
  op_segb->add_option("-o,--out", op_args.out)->required();

  // --- apply / spectrum / evolve ---------------------------------------------
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator JSON to a signal");
  std::string apply_op, apply_signal, apply_out;
  apply_cmd->add_option("--op", apply_op)->required();
  apply_cmd->add_option("--signal", apply_signal, "signal .csv or .json")->required();
  apply_cmd->add_option("-o,--out", apply_out)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "power spectrum on the Laplacian basis");
  std::string sp_graph, sp_signal, sp_out;
  spectrum_cmd->add_option("--graph", sp_graph)->required();
  spectrum_cmd->add_option("--signal", sp_signal)->required();
  spectrum_cmd->add_option("-o,--out", sp_out)->required();

  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Schrodinger evolution; rows are t, Re(u), Im(u) per snapshot");
  std::string ev_graph, ev_signal, ev_out;
  VariantFlags ev_vf;
  double ev_t = 0.0, ev_alpha = 1.0;
  int ev_steps = 1;
  evolve_cmd->add_option("--graph", ev_graph)->required();
  add_variant_flags(evolve_cmd, ev_vf, /*required=*/false);
  evolve_cmd->add_option("--t", ev_t, "evolution horizon")->required();
  evolve_cmd->add_option("--alpha", ev_alpha, "scale constant (default 1)");
  evolve_cmd->add_option("--steps", ev_steps, "snapshot count k; rows at t*j/k");
  evolve_cmd->add_option("--signal", ev_signal)->required();
  evolve_cmd->add_option("-o,--out", ev_out)->required();

  // --- check -------------------------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "run property suites; exit 1 on FAIL");
  check_cmd->require_subcommand(1);
  std::string ck_graph, ck_signals_dir, ck_grid = "1,1";
  std::uint64_t ck_seed = 1;
  double ck_tol = 1e-9;
  int ck_time = 3;
  VariantFlags ck_vf;

  auto add_graph_opt = [&ck_graph](CLI::App* c) {
    c->add_option("--graph", ck_graph)->required();
  };
  auto* ck_unitarity = check_cmd->add_subcommand("unitarity", "T*T == I for all variants");
  add_graph_opt(ck_unitarity);
  auto* ck_group = check_cmd->add_subcommand("group", "composition and commutation");
  add_graph_opt(ck_group);
  auto* ck_psd = check_cmd->add_subcommand("spectrum-invariance",
                                           "power spectrum invariance under translation");
  add_graph_opt(ck_psd);
  ck_psd->add_option("--seed", ck_seed);
  auto* ck_thm = check_cmd->add_subcommand("theorem1", "jto kronecker vs spectral forms");
  add_graph_opt(ck_thm);
  ck_thm->add_option("--time", ck_time, "time length M (default 3)");
  ck_thm->add_option("--seed", ck_seed);
  auto* ck_tr = check_cmd->add_subcommand("transition", "Schrodinger evolution identities");
  add_graph_opt(ck_tr);
  ck_tr->add_option("--seed", ck_seed);
  auto* ck_jwss = check_cmd->add_subcommand("jwss", "sample-moment stationarity diagnostic");
  add_graph_opt(ck_jwss);
  ck_jwss->add_option("--signals-dir", ck_signals_dir, "directory of N x M csv signals")
      ->required();
  ck_jwss->add_option("--grid", ck_grid, "shifts \"k1,u1;k2,u2;...\" (default 1,1)");
  ck_jwss->add_option("--tol", ck_tol, "deviation tolerance (default 1e-9)");
  ck_jwss->add_option("--variant", ck_vf.variant, "frequency variant (default laplacian-sqrt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? 0 : 2;
  }

  // --- dispatch ---------------------------------------------------------------
  if (gen->parsed()) {
    gen_params.has_seed = seed_opt->count() > 0;
    return cmd_graph_gen(gen_kind, gen_params, gen_out);
  }

  if (op_dt->parsed()) {
    write_matrix_json(op_args.out, dt_translation(op_args.time, op_args.upsilon),
                      json{{"form", "dt"}, {"upsilon", op_args.upsilon},
                           {"time", op_args.time}});
    return 0;
  }

  if (op_gto->parsed()) {
    const Graph g = load_edges_file(op_args.graph);
    const ResolvedSpec spec = resolve_spec(g, op_args.vf);
    const TranslationOperator op = gto(spec.basis, spec.freq, op_args.kappa);
    write_matrix_json(op_args.out, op.t, spec_meta(spec, op_args.kappa));
    return 0;
  }

  if (op_jto->parsed() || op_jto_sp->parsed()) {
    const Graph g = load_edges_file(op_args.graph);
    const ResolvedSpec spec = resolve_spec(g, op_args.vf);
    JointOperator op;
    if (op_jto->parsed()) {
      op = jto_kronecker(gto(spec.basis, spec.freq, op_args.kappa), op_args.time,
                         op_args.upsilon);
    } else {
      op = jto_spectral(spec.basis, dft_basis(op_args.time), spec.freq, op_args.kappa,
                        op_args.upsilon);
    }
    json meta = spec_meta(spec, op_args.kappa);
    meta["form"] = op_jto->parsed() ? "jto-kronecker" : "jto-spectral";
    meta["upsilon"] = op_args.upsilon;
    meta["time"] = op_args.time;
    write_matrix_json(op_args.out, op.t, meta);
    return 0;
  }

  if (op_seg->parsed()) {
    const Graph g = load_edges_file(op_args.graph);
    const JointOperator op =
        segarra_shift(g.weights(), make_cycle(op_args.time).weights());
    write_matrix_json(op_args.out, op.t,
                      json{{"form", "segarra"}, {"time", op_args.time}});
    return 0;
  }

  if (op_segb->parsed()) {
    const Graph g = load_edges_file(op_args.graph);
    const SpectralBasis bg = eig_sym(g.weights(), BasisSource::Adjacency);
    const SpectralBasis bd =
        eig_sym(make_cycle(op_args.time).weights(), BasisSource::Adjacency);
    const JointOperator op = segarra_bivariate(bg, bd, op_args.ikappa, op_args.iupsilon);
    write_matrix_json(op_args.out, op.t,
                      json{{"form", "segarra_bivariate"},
                           {"kappa", op_args.ikappa},
                           {"upsilon", op_args.iupsilon},
                           {"time", op_args.time}});
    return 0;
  }

  if (apply_cmd->parsed()) {
    const ComplexMatrix op = read_matrix_json(apply_op);
    if (op.rows() != op.cols()) throw std::runtime_error("operator JSON is not square");
    const ComplexVector x = signal_as_vector(read_signal(apply_signal), op.rows());
    write_matrix_json(apply_out, op * x, json{{"form", "signal"}});
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    const Graph g = load_edges_file(sp_graph);
    const SpectralBasis b = eig_sym(laplacian(g), BasisSource::Laplacian);
    const ComplexVector x = signal_as_vector(read_signal(sp_signal), g.size());
    write_csv_file(sp_out, power_spectrum(x, b));
    return 0;
  }

  if (evolve_cmd->parsed())
    return cmd_evolve(load_edges_file(ev_graph), ev_vf, ev_t, ev_alpha, ev_steps,
                      ev_signal, ev_out);

  const Graph g = load_edges_file(ck_graph);
  if (ck_unitarity->parsed()) return check_unitarity(g);
  if (ck_group->parsed()) return check_group(g);
  if (ck_psd->parsed()) return check_spectrum_invariance(g, ck_seed);
  if (ck_thm->parsed()) return check_theorem1(g, ck_time, ck_seed);
  if (ck_tr->parsed()) return check_transition(g, ck_seed);
  if (ck_jwss->parsed()) return check_jwss(g, ck_signals_dir, ck_grid, ck_tol, ck_vf);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
