#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gksl/catalog.hpp"
#include "gksl/dynamics.hpp"
#include "gksl/fd_decomposition.hpp"
#include "gksl/io.hpp"
#include "gksl/random.hpp"
#include "gksl/symmetry.hpp"

namespace gksl::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

// Exit-code carrying failure used internally to unwind a subcommand.
struct Exit {
  int code;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io::ParseError("", 0, "cannot read '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
}

struct LoadedSpec {
  std::string text;
  LindbladSpec spec;
};

LoadedSpec load_spec(const std::string& path, std::istream& in) {
  LoadedSpec s;
  s.text = read_input(path, in);
  s.spec = io::parse_spec(s.text);
  return s;
}

io::Report base_report(const std::string& command, const LoadedSpec& s) {
  io::Report r;
  r.command = command;
  r.input_hash = io::input_hash(s.text);
  r.n = s.spec.n;
  r.channels = s.spec.channels();
  r.hbar = s.spec.hbar;
  return r;
}

std::vector<double> parse_times(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double t = 0.0;
    try {
      t = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw CLI::ValidationError("--times", "'" + item + "' is not a number");
    }
    out.push_back(t);
  }
  if (out.empty()) throw CLI::ValidationError("--times", "expected at least one time");
  return out;
}

// ------------------------------------------------------------------ commands

int cmd_decompose(const std::string& path, const std::string& out_path, bool traceless, std::istream& in,
                  std::ostream& out) {
  const LoadedSpec s = load_spec(path, in);
  DecomposeOptions opts;
  opts.traceless_h_prime = traceless;
  const SuNBasis basis = SuNBasis::build(s.spec.n);
  const FdDecomposition fd = decompose(s.spec, basis, opts);
  const ClassificationReport cls = classify(fd.blocks, basis);

  io::Report r = base_report("decompose", s);
  r.tolerances = {{"reconstruction", opts.reconstruction_tol},
                  {"cross_check", kCrossCheckTol},
                  {"psd_slack", cls.positivity.tolerance},
                  {"classification", cls.tolerance}};
  r.decomposition = io::DecompositionSection{fd.blocks, fd.h_c, fd.h_prime, fd.reconstruction_residual};
  r.classification = cls;
  emit(io::serialize_report(r), out_path, out);
  return kOk;
}

int cmd_classify(const std::string& path, const std::string& out_path, std::istream& in, std::ostream& out) {
  const LoadedSpec s = load_spec(path, in);
  const SuNBasis basis = SuNBasis::build(s.spec.n);
  const GammaBlocks blocks = gamma_blocks(coefficient_matrix(s.spec, basis), s.spec.hbar);
  const ClassificationReport cls = classify(blocks, basis);
  io::Report r = base_report("classify", s);
  r.tolerances = {{"psd_slack", cls.positivity.tolerance}, {"classification", cls.tolerance}};
  r.classification = cls;
  emit(io::serialize_report(r), out_path, out);
  return kOk;
}

int cmd_audit(const std::string& path, int trials, std::uint64_t seed, const AuditTolerances& tol,
              const std::string& out_path, std::istream& in, std::ostream& out, std::ostream& err) {
  const LoadedSpec s = load_spec(path, in);
  const SuNBasis basis = SuNBasis::build(s.spec.n);
  err << "audit-symmetry: seed = " << seed << ", trials = " << trials << "\n";

  io::AuditSummary sum;
  sum.trials = trials;
  sum.seed = seed;
  sum.tol = tol;
  const std::vector<std::string> names = {"DD",   "CC",       "H_prime_aligned", "LU_prime",   "L1",
                                          "L2",   "L3_prime", "L_total",         "L_direct",   "dD00",
                                          "dD",   "dC",       "dTrH_prime"};
  std::vector<double> worst(names.size(), 0.0);
  for (int i = 0; i < trials; ++i) {
    Rng rng = split_stream(seed, static_cast<std::uint64_t>(i));
    const SymmetryTransform t = random_transform(s.spec.channels(), rng);
    const AuditReport a = audit(s.spec, t, basis, tol);
    const double values[] = {a.d_block, a.c_block,   a.h_prime,     a.lu_prime,       a.l1,
                             a.l2,      a.l3p,       a.total,       a.direct,         a.d00_shift,
                             a.d_vec_shift, a.c_vec_shift, a.h_prime_trace_shift};
    for (std::size_t k = 0; k < names.size(); ++k) worst[k] = std::max(worst[k], values[k]);
    sum.worst_invariant_ratio = std::max(sum.worst_invariant_ratio, a.worst_invariant_ratio());
    sum.worst_shift_ratio = std::max(sum.worst_shift_ratio, a.worst_shift_ratio());
    if (a.pass) ++sum.passed;
  }
  for (std::size_t k = 0; k < names.size(); ++k) sum.worst_residuals.emplace_back(names[k], worst[k]);

  std::ostringstream table;
  table << "quantity            worst residual\n";
  table << std::scientific << std::setprecision(3);
  for (const auto& [name, value] : sum.worst_residuals) table << std::left << std::setw(20) << name << value << "\n";
  table << "worst invariant ratio " << sum.worst_invariant_ratio << " (tol " << tol.invariant << " x scale)\n";
  table << "worst shift ratio     " << sum.worst_shift_ratio << " (tol " << tol.shift << " x scale)\n";
  table << (sum.pass() ? "PASS" : "FAIL") << " " << sum.passed << "/" << sum.trials << " trials\n";
  out << table.str();

  if (!out_path.empty()) {
    io::Report r = base_report("audit-symmetry", s);
    r.tolerances = {{"invariant", tol.invariant}, {"shift", tol.shift}};
    r.audit = sum;
    emit(io::serialize_report(r), out_path, out);
  }
  return sum.pass() ? kOk : kInvariantFailure;
}

int cmd_evolve(const std::string& path, const std::string& rho_path, const std::string& times_arg,
               const std::string& out_path, std::istream& in, std::ostream& out) {
  const std::vector<double> times = parse_times(times_arg);
  const LoadedSpec s = load_spec(path, in);
  const DensityMatrix rho0 = io::parse_state(read_input(rho_path, in));
  if (rho0.dim() != s.spec.n) throw io::ParseError("rho", 0, "state dimension does not match N");
  const std::vector<DensityMatrix> states = trajectory(liouvillian_direct(s.spec), rho0, times);

  io::Report r = base_report("evolve", s);
  r.tolerances = {{"state_hermiticity", 1e-12}, {"state_trace", 1e-12}, {"state_min_eigenvalue", -1e-10}};
  std::vector<io::TrajectoryRecord> records;
  for (std::size_t i = 0; i < states.size(); ++i) {
    records.push_back({times[i], states[i].matrix(), physicality_report(states[i])});
  }
  r.trajectory = std::move(records);
  emit(io::serialize_report(r), out_path, out);
  return kOk;
}

int cmd_catalog(const std::string& name, const std::map<std::string, double>& params, const std::string& out_path,
                std::ostream& out) {
  const auto names = catalog::entry_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string known;
    for (const auto& n : names) known += " " + n;
    throw CLI::ValidationError("catalog", "unknown entry '" + name + "'; known:" + known);
  }
  const LindbladSpec spec = catalog::entry(name, params);
  std::map<std::string, std::string> meta{{"catalog", name}};
  for (const auto& [key, value] : params) {
    std::ostringstream v;
    v << std::setprecision(17) << value;
    meta[key] = v.str();
  }
  emit(io::serialize_spec(spec, meta), out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fluctuation-dissipation analysis of Lindblad generators", "gksl"};
  app.require_subcommand(1);

  std::string spec_path, out_path, rho_path, times, name;
  bool traceless = false;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  AuditTolerances tol;
  int basis_n = 0;
  double gamma = 1.0, nth = 0.0, omega0 = 1.0, lamb_plus = 0.0, lamb_minus = 0.0, hbar = 1.0;

  auto* decompose_cmd = app.add_subcommand("decompose", "Full fluctuation-dissipation decomposition report");
  decompose_cmd->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  decompose_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  decompose_cmd->add_flag("--traceless-hprime", traceless, "Remove the trace part of H'");

  auto* audit_cmd = app.add_subcommand("audit-symmetry", "Randomized audit of the invariance of the FD structure");
  audit_cmd->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  audit_cmd->add_option("--trials", trials, "Number of random transforms")->check(CLI::NonNegativeNumber);
  auto* seed_opt = audit_cmd->add_option("--seed", seed, "RNG seed (default: $GKSL_SEED, else 1)");
  audit_cmd->add_option("--tol", tol.invariant, "Relative tolerance for invariant residuals")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--shift-tol", tol.shift, "Relative tolerance for predicted shifts")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--out", out_path, "Also write a JSON report here");

  auto* classify_cmd = app.add_subcommand("classify", "QMS, unitality and type classification");
  classify_cmd->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  classify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* evolve_cmd = app.add_subcommand("evolve", "Propagate a state and report physicality diagnostics");
  evolve_cmd->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  evolve_cmd->add_option("--rho0", rho_path, "Initial state file")->required();
  evolve_cmd->add_option("--times", times, "Comma-separated ascending times")->required();
  evolve_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a spec file for a named example");
  catalog_cmd->add_option("name", name, "Entry name")->required();
  std::map<std::string, CLI::Option*> param_opts;
  param_opts["gamma"] = catalog_cmd->add_option("--gamma", gamma, "Rate gamma");
  param_opts["nth"] = catalog_cmd->add_option("--nth", nth, "Thermal occupation");
  param_opts["omega0"] = catalog_cmd->add_option("--omega0", omega0, "Qubit splitting (qubit-secular)");
  param_opts["lamb-plus"] = catalog_cmd->add_option("--lamb-plus", lamb_plus, "Lamb coefficient at +omega0");
  param_opts["lamb-minus"] = catalog_cmd->add_option("--lamb-minus", lamb_minus, "Lamb coefficient at -omega0");
  param_opts["hbar"] = catalog_cmd->add_option("--hbar", hbar, "hbar")->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--out", out_path, "Write the spec here instead of stdout");

  auto* basis_cmd = app.add_subcommand("dump-basis", "Print the su(N) basis and structure constants");
  basis_cmd->add_option("--n", basis_n, "Hilbert-space dimension N >= 2")->required();
  basis_cmd->add_option("--out", out_path, "Write here instead of stdout");

  try {
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(spec_path, out_path, traceless, in, out);
    if (classify_cmd->parsed()) return cmd_classify(spec_path, out_path, in, out);
    if (audit_cmd->parsed()) {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("GKSL_SEED"); env != nullptr && *env != '\0') {
          try {
            seed = std::stoull(env);
          } catch (const std::exception&) {
            err << "gksl: GKSL_SEED='" << env << "' is not an unsigned integer\n";
            return kUsage;
          }
        }
      }
      return cmd_audit(spec_path, trials, seed, tol, out_path, in, out, err);
    }
    if (evolve_cmd->parsed()) return cmd_evolve(spec_path, rho_path, times, out_path, in, out);
    if (catalog_cmd->parsed()) {
      std::map<std::string, double> params;
      const std::map<std::string, double*> values{{"gamma", &gamma},         {"nth", &nth},
                                                 {"omega0", &omega0},       {"lamb-plus", &lamb_plus},
                                                 {"lamb-minus", &lamb_minus}, {"hbar", &hbar}};
      for (const auto& [key, opt] : param_opts)
        if (opt->count() > 0) params[key] = *values.at(key);
      return cmd_catalog(name, params, out_path, out);
    }
    if (basis_cmd->parsed()) {
      emit(io::serialize_basis(SuNBasis::build(basis_n)), out_path, out);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "gksl: " << e.what() << "\n";
    return kUsage;
  } catch (const io::ParseError& e) {
    err << "gksl: parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const InternalConsistencyError& e) {
    err << "gksl: numerical invariant failure: " << e.what() << " (residual " << e.residual() << ")\n";
    return kInvariantFailure;
  } catch (const InvalidDimension& e) {
    err << "gksl: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "gksl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "gksl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gksl::cli
