#include "commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "rsconcat/bounds.hpp"
#include "rsconcat/code_file.hpp"
#include "rsconcat/distance.hpp"

namespace rsconcat::cli {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j.dump(2);
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (passed() ? "verify: pass" : "verify: FAIL") << '\n';
  return os.str();
}

namespace {

bool rows_independent(const BinaryMatrix& m) { return row_reduce(m).rank == m.size(); }

std::string pairs_detail(const DualityReport& d) {
  std::ostringstream os;
  os << d.products_checked << " products";
  if (!d.non_orthogonal.empty()) {
    os << "; nonzero at (S row, N row)";
    for (auto [i, j] : d.non_orthogonal) os << " (" << i << "," << j << ")";
  }
  return os.str();
}

}  // namespace

VerifyReport verify_code(const StabilizerCodeL& code) {
  VerifyReport rep;
  const auto& p = code.params;
  const auto expect = CodeParameters::of(p.m, p.K);
  const bool header_ok = p.N == expect.N && p.n == expect.n && p.k == expect.k && p.K >= 0 &&
                         p.K <= p.N / 2;
  rep.checks.push_back({"parameters", header_ok,
                        "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "]] N=" +
                            std::to_string(p.N) + " K=" + std::to_string(p.K)});

  const auto rank_s = code.s_matrix.size();
  const auto rank_n = code.n_matrix.size();
  rep.checks.push_back({"rank_S",
                        rows_independent(code.s_matrix) && static_cast<int>(rank_s) == expect.rank_s(),
                        std::to_string(rank_s) + " rows, expected " + std::to_string(expect.rank_s())});
  rep.checks.push_back({"rank_N",
                        rows_independent(code.n_matrix) && static_cast<int>(rank_n) == expect.rank_n(),
                        std::to_string(rank_n) + " rows, expected " + std::to_string(expect.rank_n())});
  rep.checks.push_back({"logical_count",
                        static_cast<long>(rank_n) - static_cast<long>(rank_s) == 2L * p.k,
                        "rank_N - rank_S = " + std::to_string(static_cast<long>(rank_n) - static_cast<long>(rank_s)) +
                            ", 2k = " + std::to_string(2 * p.k)});

  const auto duality = verify_lemma2(code);
  rep.checks.push_back({"orthogonality", duality.all_orthogonal, pairs_detail(duality)});
  rep.checks.push_back({"complementary_dimensions", duality.dims_complementary,
                        std::to_string(duality.rank_s) + " + " + std::to_string(duality.rank_n) +
                            " vs 2n = " + std::to_string(2 * code.s_matrix.n)});
  {
    std::string detail;
    for (auto i : duality.not_contained) detail += (detail.empty() ? "S rows outside N_L:" : "") + (" " + std::to_string(i));
    rep.checks.push_back({"containment", duality.contained, detail});
  }

  const Expander ex(code.field, code.basis);
  const int input_bits = 6 * ex.m() + 2;
  if (input_bits <= 20) {
    int bad = -1;
    for (int i = 0; i < ex.blocks() && bad < 0; ++i)
      if (!ex.check_block_injectivity(i)) bad = i;
    const bool ok = bad < 0;
    rep.checks.push_back({"block_injectivity", ok,
                          ok ? std::to_string(ex.blocks()) + " blocks x 2^" + std::to_string(input_bits) + " inputs"
                             : "collision in block " + std::to_string(bad)});
  } else {
    rep.checks.push_back({"block_injectivity", true, "skipped: 2^" + std::to_string(input_bits) + " inputs per block over budget"});
  }

  if (header_ok) {
    const auto fresh = build_code(code.field, code.basis, p.K);
    bool same = fresh.s_matrix.rows == code.s_matrix.rows && fresh.n_matrix.rows == code.n_matrix.rows &&
                fresh.s_matrix.n == code.s_matrix.n;
    rep.checks.push_back({"matches_construction", same,
                          same ? "rows equal the reduced generators of L_{N,K}" : "stored rows differ from a fresh construction"});
  } else {
    rep.checks.push_back({"matches_construction", false, "skipped: inconsistent header"});
  }
  return rep;
}

std::string to_pauli(const SymplecticVector& row) {
  static constexpr char kSymbol[] = {'I', 'X', 'Z', 'Y'};
  std::string s(row.qubits(), 'I');
  for (std::size_t p = 0; p < row.qubits(); ++p) s[p] = kSymbol[(row.u(p) ? 1 : 0) | (row.v(p) ? 2 : 0)];
  return s;
}

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StabilizerCodeL load_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return load_code(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": parse error at " + e.what());
  }
}

int cmd_construct(int m, int K, const std::string& path, std::ostream& out, std::ostream& err) {
  StabilizerCodeL code = [&] {
    try {
      return build_code(m, K);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (!code.warning.empty()) err << "warning: " << code.warning << '\n';
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  store_code(os, code);
  os.flush();
  if (!os) throw IoError("write failed for " + path);
  out << "[[" << code.params.n << "," << code.params.k << "]] " << code.s_matrix.size() << ' '
      << code.n_matrix.size() << '\n';
  return kPass;
}

int cmd_verify(const std::string& path, bool json, std::ostream& out) {
  const auto code = load_path(path);
  const auto rep = verify_code(code);
  out << (json ? rep.to_json() + "\n" : rep.to_text());
  return rep.passed() ? kPass : kFail;
}

void print_counting(const CountingReport& c, std::ostream& out) {
  out << "claims examined=" << c.examined << " nonzero_blocks_min=" << c.min_nonzero_blocks << ">="
      << c.required_blocks << (c.blocks_hold() ? " ok" : " VIOLATED")
      << " distinct_tuples_min=" << c.min_distinct_tuples << ">=" << c.required_distinct
      << (c.distinct_hold() ? " ok" : " VIOLATED") << " multiplicity_max=" << c.max_multiplicity
      << "<=" << c.multiplicity_bound << (c.multiplicity_holds() ? " ok" : " VIOLATED")
      << " pooled_multiplicity_max=" << c.pooled_max_multiplicity << '\n';
}

int cmd_distance(const std::string& path, const std::string& method, std::uint64_t trials,
                 std::uint64_t seed, int parts, bool claims, std::ostream& out) {
  const auto code = load_path(path);
  const bool exact = method == "exact";
  DistanceReport rep;
  try {
    rep = exact ? exact_distance(code, parts) : sampled_distance_upper(code, trials, seed);
  } catch (const BudgetExceeded& e) {
    throw UsageError(std::string(e.what()) + " (try --method sample)");
  }
  out << rep.to_line() << '\n';
  if (claims) {
    print_counting(exact ? verify_counting_claims(code, CountingMode::exhaustive, 0, 0, parts)
                         : verify_counting_claims(code, CountingMode::sampled, trials, seed),
                   out);
  }
  return kPass;
}

int cmd_bounds(const std::string& curve_name, const std::vector<int>& ms, const std::vector<int>& ts,
               double lo, double hi, int steps, std::ostream& out, std::ostream& err) {
  const auto name = parse_curve_name(curve_name);
  if (!name) throw UsageError("unknown curve '" + curve_name + "'");
  const auto pname = curve_parameter(*name);
  std::vector<int> params = pname == "m" ? ms : pname == "t" ? ts : std::vector<int>{0};
  if (params.empty()) throw UsageError("curve " + curve_name + " needs --" + std::string(pname));
  if (steps < 1) throw UsageError("--steps must be >= 1");
  const auto grid = linear_grid(lo, hi, steps);
  std::vector<BoundCurve> curves;
  for (int p : params) {
    try {
      curves.push_back(delta_curve(*name, p, grid));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  write_csv_header(out);
  for (const auto& c : curves) {
    write_csv_rows(out, c);
    for (const auto& note : c.notes) err << "note: " << note << '\n';
  }
  return kPass;
}

int cmd_export(const std::string& path, const std::string& rows, std::ostream& out) {
  const auto code = load_path(path);
  if (rows == "all" || rows == "stabilizer")
    for (const auto& r : code.s_matrix.rows) out << to_pauli(r) << '\n';
  if (rows == "all" || rows == "normalizer")
    for (const auto& r : code.n_matrix.rows) out << to_pauli(r) << '\n';
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concatenated quantum Reed-Solomon stabilizer codes L_{N,K}"};
  app.require_subcommand(1);

  int m = 1, K = 0;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build L_{N,K} and write a code file");
  construct->add_option("--m", m, "half the extension degree; N = 2^{2m} - 1")->required();
  construct->add_option("--K", K, "RS dimension, 0 <= K <= floor(N/2)")->required();
  construct->add_option("--out", out_path, "output code file")->required();

  std::string path;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "check duality, ranks, injectivity and provenance");
  verify->add_option("path", path, "code file")->required();
  verify->add_flag("--json", json, "machine-readable report");

  std::string method = "exact";
  std::uint64_t trials = 100000, seed = 0;
  int parts = 1;
  bool claims = false;
  auto* distance = app.add_subcommand("distance", "minimum distance, exact or sampled upper bound");
  distance->add_option("path", path, "code file")->required();
  distance->add_option("--method", method, "exact | sample")->check(CLI::IsMember({"exact", "sample"}));
  distance->add_option("--trials", trials, "samples in sample mode")->check(CLI::PositiveNumber);
  distance->add_option("--seed", seed, "sampler seed");
  distance->add_option("--parts", parts, "exact-search partitions (threads)")->check(CLI::Range(1, 1024));
  distance->add_flag("--claims", claims, "also check the block counting claims");

  std::string curve;
  std::vector<int> ms, ts;
  double r_min = 0.0, r_max = 0.5;
  int steps = 11;
  auto* bounds = app.add_subcommand("bounds", "rate/relative-distance curves as CSV");
  bounds->add_option("--curve", curve, "ours | ours_finite_m | ashikhmin | chen | matsumoto | baseline_rs")->required();
  bounds->add_option("--m", ms, "m values (comma separated)")->delimiter(',');
  bounds->add_option("--t", ts, "t values for chen (comma separated)")->delimiter(',');
  bounds->add_option("--R-min", r_min, "grid start");
  bounds->add_option("--R-max", r_max, "grid end");
  bounds->add_option("--steps", steps, "grid points, endpoints included");

  std::string format = "pauli", rows = "all";
  auto* exporter = app.add_subcommand("export", "print generators as Pauli strings");
  exporter->add_option("path", path, "code file")->required();
  exporter->add_option("--format", format, "output format")->check(CLI::IsMember({"pauli"}));
  exporter->add_option("--rows", rows, "all | stabilizer | normalizer")
      ->check(CLI::IsMember({"all", "stabilizer", "normalizer"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(m, K, out_path, out, err);
    if (*verify) return cmd_verify(path, json, out);
    if (*distance) return cmd_distance(path, method, trials, seed, parts, claims, out);
    if (*bounds) return cmd_bounds(curve, ms, ts, r_min, r_max, steps, out, err);
    if (*exporter) return cmd_export(path, rows, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace rsconcat::cli
