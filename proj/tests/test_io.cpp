#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gksl/catalog.hpp"
#include "gksl/io.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace gksl;
using gksl::testing::max_abs;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> fixture_specs() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(GKSL_FIXTURE_DIR) / "specs"))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Independent canonical form: defaults filled in, every entry as [re, im].
json normalize(const json& raw) {
  auto entry = [](const json& e) { return e.is_number() ? json::array({e.get<double>(), 0.0}) : e; };
  auto matrix = [&](const json& m) {
    json out = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& e : row) r.push_back(entry(e));
      out.push_back(r);
    }
    return out;
  };
  json out;
  out["version"] = "1";
  out["N"] = raw.at("N");
  out["hbar"] = raw.contains("hbar") ? raw["hbar"].get<double>() : 1.0;
  out["H"] = matrix(raw.at("H"));
  out["L"] = json::array();
  for (const auto& l : raw.at("L")) out["L"].push_back(matrix(l));
  out["metadata"] = raw.contains("metadata") ? raw["metadata"] : json::object();
  return out;
}

template <class F>
io::ParseError catch_parse(F&& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return io::ParseError("", 0, "");
}

}  // namespace

TEST_CASE("fixture corpus round-trips through the canonical form") {
  const auto files = fixture_specs();
  REQUIRE(files.size() == 20);
  for (const auto& p : files) {
    CAPTURE(p.filename().string());
    const std::string text = slurp(p);
    const io::SpecFile f = io::parse_spec_file(text);
    const std::string canon = io::serialize_spec(f);
    CHECK(json::parse(canon) == normalize(json::parse(text)));
    CHECK(io::serialize_spec(io::parse_spec_file(canon)) == canon);
    CHECK(canon.back() == '\n');

    std::vector<std::string> keys;
    const ordered_json ordered = ordered_json::parse(canon);
    for (const auto& [k, v] : ordered.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"version", "N", "hbar", "H", "L", "metadata"});
  }
}

TEST_CASE("catalog specs serialize with full precision") {
  const LindbladSpec s = catalog::qubit_thermal(0.3, 1.0 / 3.0, 0.7 * catalog::sigma3(), 1.0 / 7.0);
  const LindbladSpec back = io::parse_spec(io::serialize_spec(s));
  CHECK(back.hbar == s.hbar);
  CHECK(max_abs(back.hamiltonian - s.hamiltonian) == 0.0);
  for (int k = 0; k < s.channels(); ++k) CHECK(max_abs(back.jumps[k] - s.jumps[k]) == 0.0);
}

TEST_CASE("minimal spec") {
  const LindbladSpec s = io::parse_spec(R"({"N": 2, "H": [[1, 0], [0, -1]], "L": [[[0, 1], [0, 0]]]})");
  CHECK(s.n == 2);
  CHECK(s.channels() == 1);
  CHECK(s.hbar == 1.0);
  CHECK(s.jumps[0](0, 1) == Complex(1.0));
}

TEST_CASE("semantic errors name the field") {
  auto field_of = [](const std::string& text) {
    return catch_parse([&] { io::parse_spec(text); }).field();
  };
  CHECK(field_of(R"({"N": 2, "H": [[1, 0.001], [0, -1]], "L": []})") == "H");
  CHECK(field_of(R"({"H": [[1, 0], [0, -1]], "L": []})") == "N");
  CHECK(field_of(R"({"N": 2, "L": []})") == "H");
  CHECK(field_of(R"({"N": 2, "H": [[1, 0], [0, -1]]})") == "L");
  CHECK(field_of(R"({"version": "7", "N": 2, "H": [[1, 0], [0, -1]], "L": []})") == "version");
  CHECK(field_of(R"({"N": 2, "H": [[1, 0], [0]], "L": []})") == "H[1]");
  CHECK(field_of(R"({"N": 2, "H": [[1, 0], [0, -1]], "L": [[[0, 1], [0, 0]], [[1]]]})") == "L[1]");
  CHECK(field_of(R"({"N": 2, "H": [[1, 0], [0, -1]], "L": [[[0, [1, 2, 3]], [0, 0]]]})") == "L[0][0][1]");
  CHECK(field_of(R"({"N": 2, "hbar": -1, "H": [[1, 0], [0, -1]], "L": []})") == "hbar");
  CHECK(field_of(R"({"N": 3, "H": [[1, 0], [0, -1]], "L": []})") == "H");
  CHECK(field_of(R"({"N": 2, "H": [[1, 0], [0, -1]], "L": [], "metadata": {"a": 1}})") == "metadata.a");
  CHECK(catch_parse([] { io::parse_spec("[1, 2]"); }).line() == 0);
}

TEST_CASE("syntax errors carry a line number") {
  const io::ParseError e = catch_parse([] { io::parse_spec("{\n  \"N\": 2,\n  \"H\": [[1, 0],\n         [0, -1]]\n  ,,\n}"); });
  CHECK(e.line() == 5);
  CHECK(catch_parse([] { io::parse_spec(""); }).line() >= 1);
  CHECK(catch_parse([] { io::parse_spec("{\"N\": 2"); }).line() == 1);
  CHECK(catch_parse([] { io::parse_spec("{\"N\": 2,\n \"H\": [[1e999, 0], [0, -1]], \"L\": []}"); }).line() == 2);
}

TEST_CASE("state files") {
  const DensityMatrix rho = io::parse_state(R"({"rho": [[0.5, [0.5, 0]], [[0.5, 0], 0.5]]})");
  CHECK(max_abs(rho.matrix() - Matrix::Constant(2, 2, 0.5)) == 0.0);
  CHECK(catch_parse([] { io::parse_state(R"({"rho": [[1, 0], [0, 1]]})"); }).field() == "rho");
  CHECK(catch_parse([] { io::parse_state(R"({"sigma": [[1]]})"); }).field() == "rho");
  const Matrix m = catalog::sigma_plus() + catalog::sigma_minus();
  CHECK(io::serialize_state(io::parse_state(io::serialize_state(rho.matrix())).matrix()) ==
        io::serialize_state(rho.matrix()));
  (void)m;
}

TEST_CASE("input hash") {
  // FNV-1a test vectors.
  CHECK(io::input_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(io::input_hash("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(io::input_hash("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("reports round-trip byte for byte") {
  const LindbladSpec s = catalog::qubit_thermal(0.8, 0.25, 0.3 * catalog::sigma3());
  const SuNBasis b = SuNBasis::build(2);
  const FdDecomposition fd = decompose(s, b);

  io::Report r;
  r.command = "decompose";
  r.input_hash = io::input_hash("x");
  r.n = 2;
  r.channels = s.channels();
  r.hbar = s.hbar;
  r.tolerances = {{"reconstruction", kReconstructionTol}, {"cross_check", kCrossCheckTol}};
  r.decomposition = io::DecompositionSection{fd.blocks, fd.h_c, fd.h_prime, fd.reconstruction_residual};
  r.classification = classify(fd.blocks, b);

  io::AuditSummary a;
  a.trials = 3;
  a.seed = 18446744073709551615ull;
  a.passed = 3;
  a.worst_invariant_ratio = 1.25e-4;
  a.worst_shift_ratio = 0.0;
  a.worst_residuals = {{"DD", 1e-16}, {"CC", 0.0}};
  r.audit = a;

  std::vector<io::TrajectoryRecord> traj;
  const Superoperator m = liouvillian_direct(s);
  const DensityMatrix rho0 = DensityMatrix::checked(Matrix::Constant(2, 2, 0.5));
  for (double t : {0.0, 0.5}) {
    const DensityMatrix rho = propagate(m, rho0, t);
    traj.push_back({t, rho.matrix(), physicality_report(rho)});
  }
  r.trajectory = traj;

  const std::string text = io::serialize_report(r);
  const io::Report back = io::parse_report(text);
  CHECK(io::serialize_report(back) == text);
  REQUIRE(back.decomposition);
  CHECK(max_abs(back.decomposition->blocks.d_block - fd.blocks.d_block) == 0.0);
  CHECK(max_abs(back.decomposition->h_prime - fd.h_prime) == 0.0);
  REQUIRE(back.classification);
  CHECK(back.classification->type == r.classification->type);
  REQUIRE(back.audit);
  CHECK(back.audit->seed == a.seed);
  CHECK(back.audit->pass());
  REQUIRE(back.trajectory);
  CHECK(back.trajectory->size() == 2);

  const json j = json::parse(text);
  CHECK(j["format"] == "gksl-report");
  CHECK(j["decomposition"]["DD"].size() == 3);

  CHECK_THROWS_AS(io::parse_report(R"({"format": "other"})"), io::ParseError);
}

TEST_CASE("basis dump lists 1-based nonzero structure constants") {
  const json j = json::parse(io::serialize_basis(SuNBasis::build(3)));
  CHECK(j["N"] == 3);
  CHECK(j["T"].size() == 8);
  CHECK(j["f"].size() == 54);
  bool found = false;
  for (const auto& e : j["f"])
    if (e[0] == 1 && e[1] == 4 && e[2] == 7) found = std::abs(e[3].get<double>() - 1.0) <= 1e-14;
  CHECK(found);
  for (const auto& e : j["d"])
    for (int i = 0; i < 3; ++i) CHECK((e[i].get<int>() >= 1 && e[i].get<int>() <= 8));
}
