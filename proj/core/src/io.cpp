#include "gksl/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace gksl::io {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- writing

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json complex_json(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(number(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_vector_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

json list_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

bool scalar(const json& j) { return j.is_primitive(); }

// A row of numbers, or a row of [re, im] pairs, stays on one line.
bool inline_row(const json& j) {
  if (!j.is_array()) return false;
  const bool all_scalar = std::all_of(j.begin(), j.end(), scalar);
  const bool all_pairs = std::all_of(j.begin(), j.end(), [](const json& e) {
    return e.is_array() && e.size() == 2 && scalar(e[0]) && scalar(e[1]);
  });
  return all_scalar || all_pairs;
}

void write(std::string& out, const json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(key).dump() + ": ";
      write(out, value, depth + 1);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !inline_row(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ",\n";
      out += pad;
      write(out, j[i], depth + 1);
    }
    out += "\n" + close + "]";
  } else {
    out += j.dump(-1, ' ', false);
  }
}

std::string dump(const json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

// ---------------------------------------------------------------- reading

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path, 0, what); }

int line_of(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const int line = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("", line, "malformed JSON at line " + std::to_string(line) + ": " + e.what());
  } catch (const json::out_of_range& e) {
    // Numeric overflow; the message quotes the offending literal.
    const std::string msg = e.what();
    const auto open = msg.find('\'');
    const auto close = open == std::string::npos ? open : msg.find('\'', open + 1);
    int line = 0;
    if (close != std::string::npos) {
      const auto at = text.find(msg.substr(open + 1, close - open - 1));
      if (at != std::string_view::npos) line = line_of(text, at);
    }
    throw ParseError("", line, "number out of range at line " + std::to_string(line) + ": " + msg);
  }
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string join(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

double real_from(const json& j, const std::string& path) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int int_from(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool bool_from(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Complex complex_from(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected a complex number [re, im]");
  return {real_from(j[0], join(path, std::size_t{0})), real_from(j[1], join(path, std::size_t{1}))};
}

template <class Fill>
void walk_rows(const json& j, const std::string& path, Eigen::Index& rows, Eigen::Index& cols, Fill fill) {
  if (!j.is_array()) fail(path, "expected a row-major nested array");
  rows = static_cast<Eigen::Index>(j.size());
  cols = -1;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = join(path, r);
    if (!j[r].is_array()) fail(rp, "expected a row array");
    if (cols < 0) cols = static_cast<Eigen::Index>(j[r].size());
    if (static_cast<Eigen::Index>(j[r].size()) != cols) fail(rp, "ragged matrix row");
  }
  if (cols < 0) cols = 0;
  fill(rows, cols);
}

Matrix matrix_from(const json& j, const std::string& path) {
  Eigen::Index rows = 0, cols = 0;
  Matrix m;
  walk_rows(j, path, rows, cols, [&](Eigen::Index r, Eigen::Index c) { m.resize(r, c); });
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from(j[r][c], join(join(path, static_cast<std::size_t>(r)), static_cast<std::size_t>(c)));
  return m;
}

RealMatrix real_matrix_from(const json& j, const std::string& path) {
  Eigen::Index rows = 0, cols = 0;
  RealMatrix m;
  walk_rows(j, path, rows, cols, [&](Eigen::Index r, Eigen::Index c) { m.resize(r, c); });
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = real_from(j[r][c], join(join(path, static_cast<std::size_t>(r)), static_cast<std::size_t>(c)));
  return m;
}

std::vector<double> list_from(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real_from(j[i], join(path, i)));
  return out;
}

RealVector real_vector_from(const json& j, const std::string& path) {
  const std::vector<double> v = list_from(j, path);
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void require_finite(const Matrix& m, const std::string& path) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
        fail(join(join(path, static_cast<std::size_t>(r)), static_cast<std::size_t>(c)), "non-finite entry");
      }
}

// ---------------------------------------------------------------- report parts

json positivity_json(const PositivityReport& p) {
  json j;
  j["gamma_eigenvalues"] = list_json(p.gamma_eigenvalues);
  j["dc_eigenvalues"] = list_json(p.dc_eigenvalues);
  j["min_gamma_eigenvalue"] = number(p.min_gamma_eigenvalue);
  j["min_dc_eigenvalue"] = number(p.min_dc_eigenvalue);
  j["tolerance"] = number(p.tolerance);
  j["diffusion_norm"] = number(p.diffusion_norm);
  j["dissipation_norm"] = number(p.dissipation_norm);
  j["gamma_psd"] = p.gamma_psd;
  j["dc_psd"] = p.dc_psd;
  j["diffusion_implication"] = p.diffusion_implication;
  j["realizable"] = p.realizable;
  j["verdict"] = p.verdict;
  return j;
}

PositivityReport positivity_from(const json& j, const std::string& path) {
  PositivityReport p;
  p.gamma_eigenvalues = list_from(member(j, "gamma_eigenvalues", path), join(path, "gamma_eigenvalues"));
  p.dc_eigenvalues = list_from(member(j, "dc_eigenvalues", path), join(path, "dc_eigenvalues"));
  p.min_gamma_eigenvalue = real_from(member(j, "min_gamma_eigenvalue", path), join(path, "min_gamma_eigenvalue"));
  p.min_dc_eigenvalue = real_from(member(j, "min_dc_eigenvalue", path), join(path, "min_dc_eigenvalue"));
  p.tolerance = real_from(member(j, "tolerance", path), join(path, "tolerance"));
  p.diffusion_norm = real_from(member(j, "diffusion_norm", path), join(path, "diffusion_norm"));
  p.dissipation_norm = real_from(member(j, "dissipation_norm", path), join(path, "dissipation_norm"));
  p.gamma_psd = bool_from(member(j, "gamma_psd", path), join(path, "gamma_psd"));
  p.dc_psd = bool_from(member(j, "dc_psd", path), join(path, "dc_psd"));
  p.diffusion_implication = bool_from(member(j, "diffusion_implication", path), join(path, "diffusion_implication"));
  p.realizable = bool_from(member(j, "realizable", path), join(path, "realizable"));
  p.verdict = string_from(member(j, "verdict", path), join(path, "verdict"));
  return p;
}

json classification_json(const ClassificationReport& c) {
  json j;
  j["type"] = c.type;
  j["tolerance"] = number(c.tolerance);
  j["unital"] = c.unital;
  j["unitality_residual"] = number(c.unitality_residual);
  j["l2_zero"] = c.l2_zero;
  j["dissipation_traces"] = real_vector_json(c.dissipation_traces);
  j["max_dissipation_trace"] = number(c.max_dissipation_trace);
  j["diffusion_norm"] = number(c.diffusion_norm);
  j["dissipation_norm"] = number(c.dissipation_norm);
  j["dissipation_zero"] = c.dissipation_zero;
  j["trivial"] = c.trivial;
  j["positivity"] = positivity_json(c.positivity);
  return j;
}

ClassificationReport classification_from(const json& j, const std::string& path) {
  ClassificationReport c;
  c.type = string_from(member(j, "type", path), join(path, "type"));
  c.tolerance = real_from(member(j, "tolerance", path), join(path, "tolerance"));
  c.unital = bool_from(member(j, "unital", path), join(path, "unital"));
  c.unitality_residual = real_from(member(j, "unitality_residual", path), join(path, "unitality_residual"));
  c.l2_zero = bool_from(member(j, "l2_zero", path), join(path, "l2_zero"));
  c.dissipation_traces = real_vector_from(member(j, "dissipation_traces", path), join(path, "dissipation_traces"));
  c.max_dissipation_trace = real_from(member(j, "max_dissipation_trace", path), join(path, "max_dissipation_trace"));
  c.diffusion_norm = real_from(member(j, "diffusion_norm", path), join(path, "diffusion_norm"));
  c.dissipation_norm = real_from(member(j, "dissipation_norm", path), join(path, "dissipation_norm"));
  c.dissipation_zero = bool_from(member(j, "dissipation_zero", path), join(path, "dissipation_zero"));
  c.trivial = bool_from(member(j, "trivial", path), join(path, "trivial"));
  c.positivity = positivity_from(member(j, "positivity", path), join(path, "positivity"));
  return c;
}

json decomposition_json(const DecompositionSection& d) {
  json j;
  j["Gamma"] = matrix_json(d.blocks.gamma);
  j["D00"] = number(d.blocks.d00);
  j["D"] = real_vector_json(d.blocks.d_vec);
  j["C"] = real_vector_json(d.blocks.c_vec);
  j["DD"] = real_matrix_json(d.blocks.d_block);
  j["CC"] = real_matrix_json(d.blocks.c_block);
  j["H_C"] = matrix_json(d.h_c);
  j["H_prime"] = matrix_json(d.h_prime);
  j["reconstruction_residual"] = number(d.reconstruction_residual);
  return j;
}

DecompositionSection decomposition_from(const json& j, const std::string& path, double hbar) {
  DecompositionSection d;
  d.blocks.hbar = hbar;
  d.blocks.gamma = matrix_from(member(j, "Gamma", path), join(path, "Gamma"));
  d.blocks.d00 = real_from(member(j, "D00", path), join(path, "D00"));
  d.blocks.d_vec = real_vector_from(member(j, "D", path), join(path, "D"));
  d.blocks.c_vec = real_vector_from(member(j, "C", path), join(path, "C"));
  d.blocks.d_block = real_matrix_from(member(j, "DD", path), join(path, "DD"));
  d.blocks.c_block = real_matrix_from(member(j, "CC", path), join(path, "CC"));
  d.h_c = matrix_from(member(j, "H_C", path), join(path, "H_C"));
  d.h_prime = matrix_from(member(j, "H_prime", path), join(path, "H_prime"));
  d.reconstruction_residual = real_from(member(j, "reconstruction_residual", path), join(path, "reconstruction_residual"));
  return d;
}

json audit_json(const AuditSummary& a) {
  json j;
  j["pass"] = a.pass();
  j["trials"] = a.trials;
  j["passed"] = a.passed;
  j["seed"] = a.seed;
  j["tol_invariant"] = number(a.tol.invariant);
  j["tol_shift"] = number(a.tol.shift);
  j["worst_invariant_ratio"] = number(a.worst_invariant_ratio);
  j["worst_shift_ratio"] = number(a.worst_shift_ratio);
  json worst = json::object();
  for (const auto& [name, value] : a.worst_residuals) worst[name] = number(value);
  j["worst_residuals"] = std::move(worst);
  return j;
}

AuditSummary audit_from(const json& j, const std::string& path) {
  AuditSummary a;
  a.trials = int_from(member(j, "trials", path), join(path, "trials"));
  a.passed = int_from(member(j, "passed", path), join(path, "passed"));
  const json& seed = member(j, "seed", path);
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    fail(join(path, "seed"), "expected a nonnegative integer");
  }
  a.seed = seed.get<std::uint64_t>();
  a.tol.invariant = real_from(member(j, "tol_invariant", path), join(path, "tol_invariant"));
  a.tol.shift = real_from(member(j, "tol_shift", path), join(path, "tol_shift"));
  a.worst_invariant_ratio = real_from(member(j, "worst_invariant_ratio", path), join(path, "worst_invariant_ratio"));
  a.worst_shift_ratio = real_from(member(j, "worst_shift_ratio", path), join(path, "worst_shift_ratio"));
  const json& worst = member(j, "worst_residuals", path);
  if (!worst.is_object()) fail(join(path, "worst_residuals"), "expected an object");
  for (const auto& [name, value] : worst.items()) {
    a.worst_residuals.emplace_back(name, real_from(value, join(join(path, "worst_residuals"), name)));
  }
  return a;
}

json trajectory_json(const std::vector<TrajectoryRecord>& records) {
  json out = json::array();
  for (const TrajectoryRecord& r : records) {
    json j;
    j["t"] = number(r.t);
    j["rho"] = matrix_json(r.rho);
    j["trace_deviation"] = number(r.physicality.trace_deviation);
    j["hermiticity_residual"] = number(r.physicality.hermiticity_residual);
    j["min_eigenvalue"] = number(r.physicality.min_eigenvalue);
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<TrajectoryRecord> trajectory_from(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of records");
  std::vector<TrajectoryRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = join(path, i);
    TrajectoryRecord r;
    r.t = real_from(member(j[i], "t", p), join(p, "t"));
    r.rho = matrix_from(member(j[i], "rho", p), join(p, "rho"));
    r.physicality.trace_deviation = real_from(member(j[i], "trace_deviation", p), join(p, "trace_deviation"));
    r.physicality.hermiticity_residual =
        real_from(member(j[i], "hermiticity_residual", p), join(p, "hermiticity_residual"));
    r.physicality.min_eigenvalue = real_from(member(j[i], "min_eigenvalue", p), join(p, "min_eigenvalue"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string field, int line, const std::string& what)
    : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)), line_(line) {}

SpecFile parse_spec_file(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail("", "spec file must be a JSON object");

  if (const auto it = j.find("version"); it != j.end()) {
    if (string_from(*it, "version") != kFormatVersion) fail("version", "unsupported format version");
  }
  SpecFile out;
  LindbladSpec& s = out.spec;
  s.n = int_from(member(j, "N", ""), "N");
  if (const auto it = j.find("hbar"); it != j.end()) s.hbar = real_from(*it, "hbar");
  s.hamiltonian = matrix_from(member(j, "H", ""), "H");
  require_finite(s.hamiltonian, "H");

  const json& l = member(j, "L", "");
  if (!l.is_array()) fail("L", "expected a list of matrices");
  for (std::size_t k = 0; k < l.size(); ++k) {
    const std::string p = join("L", k);
    s.jumps.push_back(matrix_from(l[k], p));
    require_finite(s.jumps.back(), p);
  }

  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("metadata", "expected a string map");
    for (const auto& [key, value] : it->items()) out.metadata[key] = string_from(value, join("metadata", key));
  }

  try {
    out.spec = validated(std::move(out.spec));
  } catch (const InvalidSpec& e) {
    throw ParseError(e.field(), 0, e.what());
  } catch (const Error& e) {
    throw ParseError("", 0, e.what());
  }
  return out;
}

std::string serialize_spec(const LindbladSpec& spec, const std::map<std::string, std::string>& metadata) {
  json j;
  j["version"] = kFormatVersion;
  j["N"] = spec.n;
  j["hbar"] = number(spec.hbar);
  j["H"] = matrix_json(spec.hamiltonian);
  json l = json::array();
  for (const Matrix& m : spec.jumps) l.push_back(matrix_json(m));
  j["L"] = std::move(l);
  json meta = json::object();
  for (const auto& [key, value] : metadata) meta[key] = value;
  j["metadata"] = std::move(meta);
  return dump(j);
}

DensityMatrix parse_state(std::string_view text) {
  const json j = parse_json(text);
  Matrix rho = matrix_from(member(j, "rho", ""), "rho");
  require_finite(rho, "rho");
  try {
    return DensityMatrix::checked(std::move(rho));
  } catch (const Error& e) {
    throw ParseError("rho", 0, e.what());
  }
}

std::string serialize_state(const Matrix& rho) {
  json j;
  j["rho"] = matrix_json(rho);
  return dump(j);
}

std::string input_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_report(const Report& r) {
  json j;
  j["format"] = "gksl-report";
  j["version"] = kFormatVersion;
  j["command"] = r.command;
  j["input_hash"] = r.input_hash;
  j["N"] = r.n;
  j["K"] = r.channels;
  j["hbar"] = number(r.hbar);
  json tol = json::object();
  for (const auto& [name, value] : r.tolerances) tol[name] = number(value);
  j["tolerances"] = std::move(tol);
  if (r.decomposition) j["decomposition"] = decomposition_json(*r.decomposition);
  if (r.classification) j["classification"] = classification_json(*r.classification);
  if (r.audit) j["audit"] = audit_json(*r.audit);
  if (r.trajectory) j["trajectory"] = trajectory_json(*r.trajectory);
  return dump(j);
}

Report parse_report(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || j.value("format", "") != "gksl-report") fail("format", "not a gksl report");
  Report r;
  r.command = string_from(member(j, "command", ""), "command");
  r.input_hash = string_from(member(j, "input_hash", ""), "input_hash");
  r.n = int_from(member(j, "N", ""), "N");
  r.channels = int_from(member(j, "K", ""), "K");
  r.hbar = real_from(member(j, "hbar", ""), "hbar");
  const json& tol = member(j, "tolerances", "");
  if (!tol.is_object()) fail("tolerances", "expected an object");
  for (const auto& [name, value] : tol.items()) r.tolerances.emplace_back(name, real_from(value, join("tolerances", name)));
  if (const auto it = j.find("decomposition"); it != j.end()) r.decomposition = decomposition_from(*it, "decomposition", r.hbar);
  if (const auto it = j.find("classification"); it != j.end()) r.classification = classification_from(*it, "classification");
  if (const auto it = j.find("audit"); it != j.end()) r.audit = audit_from(*it, "audit");
  if (const auto it = j.find("trajectory"); it != j.end()) r.trajectory = trajectory_from(*it, "trajectory");
  return r;
}

std::string serialize_basis(const SuNBasis& basis) {
  json j;
  j["N"] = basis.dim();
  j["size"] = basis.size();
  j["T0"] = matrix_json(basis.t0());
  json gens = json::array();
  for (const Matrix& t : basis.generators()) gens.push_back(matrix_json(t));
  j["T"] = std::move(gens);
  auto entries = [](const Tensor3& t) {
    json out = json::array();
    for (const Tensor3::Entry& e : t.nonzeros()) out.push_back(json::array({e.i + 1, e.j + 1, e.l + 1, e.value}));
    return out;
  };
  j["f"] = entries(basis.f());
  j["d"] = entries(basis.d());
  return dump(j);
}

}  // namespace gksl::io
