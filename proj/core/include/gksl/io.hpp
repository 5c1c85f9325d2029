#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gksl/dynamics.hpp"
#include "gksl/errors.hpp"
#include "gksl/fd_decomposition.hpp"
#include "gksl/generator.hpp"
#include "gksl/sun_basis.hpp"
#include "gksl/symmetry.hpp"

namespace gksl::io {

inline constexpr const char* kFormatVersion = "1";

// Raised for malformed or invalid input files. `field()` is a JSON path such
// as "L[1][0][2]"; `line()` is 1-based and 0 when the error is not tied to a
// source position (semantic errors after a successful JSON parse).
class ParseError : public Error {
 public:
  ParseError(std::string field, int line, const std::string& what);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

// Spec files:
//   {"version": "1", "N": 2, "hbar": 1.0,
//    "H": [[[re, im], ...], ...],          row-major
//    "L": [ matrix, ... ],
//    "metadata": {"key": "value", ...}}
// "version", "hbar" and "metadata" are optional. A bare number is accepted
// wherever a complex entry is expected.
struct SpecFile {
  LindbladSpec spec;
  std::map<std::string, std::string> metadata;
};

SpecFile parse_spec_file(std::string_view text);
inline LindbladSpec parse_spec(std::string_view text) { return parse_spec_file(text).spec; }

// Canonical form: fixed key order, two-space indent, trailing newline.
std::string serialize_spec(const LindbladSpec& spec, const std::map<std::string, std::string>& metadata = {});
inline std::string serialize_spec(const SpecFile& f) { return serialize_spec(f.spec, f.metadata); }

// State files: {"rho": matrix}. Validated as a density matrix.
DensityMatrix parse_state(std::string_view text);
std::string serialize_state(const Matrix& rho);

// 64-bit FNV-1a of the raw bytes, as "fnv1a64:<16 hex digits>".
std::string input_hash(std::string_view text);

struct DecompositionSection {
  GammaBlocks blocks;
  Matrix h_c;
  Matrix h_prime;
  double reconstruction_residual = 0.0;
};

struct AuditSummary {
  int trials = 0;
  std::uint64_t seed = 0;
  AuditTolerances tol;
  int passed = 0;
  double worst_invariant_ratio = 0.0;
  double worst_shift_ratio = 0.0;
  // Largest absolute residual over all trials for each audited quantity,
  // in a fixed order.
  std::vector<std::pair<std::string, double>> worst_residuals;

  bool pass() const noexcept { return passed == trials; }
};

struct TrajectoryRecord {
  double t = 0.0;
  Matrix rho;
  Physicality physicality;
};

struct Report {
  std::string command;
  std::string input_hash;
  int n = 0;
  int channels = 0;
  double hbar = 1.0;
  std::vector<std::pair<std::string, double>> tolerances;
  std::optional<DecompositionSection> decomposition;
  std::optional<ClassificationReport> classification;
  std::optional<AuditSummary> audit;
  std::optional<std::vector<TrajectoryRecord>> trajectory;
};

std::string serialize_report(const Report& report);
Report parse_report(std::string_view text);

// Basis matrices plus the nonzero structure constants as [i, j, l, value]
// with 1-based indices.
std::string serialize_basis(const SuNBasis& basis);

}  // namespace gksl::io
