#include "anscombe/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "anscombe/bounds.hpp"
#include "anscombe/constructions.hpp"
#include "anscombe/error.hpp"
#include "anscombe/lp.hpp"
#include "anscombe/matrix_io.hpp"
#include "anscombe/oracle.hpp"
#include "anscombe/verify.hpp"

namespace anscombe {

namespace {

std::string decimal(const Rational& q) { return significant_figures(q, 4); }

std::string with_decimal(const Rational& q) { return exact_string(q) + " (" + decimal(q) + ")"; }

// Accepts "a/b", an integer, or a plain decimal such as 0.001.
Rational parse_rational(const std::string& text) {
  Rational q;
  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) {
    if (q.set_str(text, 10) != 0) throw ParameterError("not a rational number: '" + text + "'");
  } else {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt num;
    if (digits.empty() || num.set_str(digits, 10) != 0) throw ParameterError("not a decimal number: '" + text + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(text.size() - dot - 1));
    q = Rational(num, den);
  }
  q.canonicalize();
  return q;
}

// Whitespace-aligned or comma-separated table, rows kept in insertion order.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool csv) const {
    if (csv) {
      print_csv_row(out, header_);
      for (const auto& row : rows_) print_csv_row(out, row);
      return;
    }
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out << "  ";
        if (i + 1 == row.size()) {
          out << row[i];
        } else {
          out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
        }
      }
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
  }

 private:
  static void print_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << row[i];
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

SolveOptions solve_options(bool use_float, unsigned threads) {
  SolveOptions options;
  options.arithmetic = use_float ? Arithmetic::kFloat : Arithmetic::kExact;
  options.threads = threads;
  return options;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  std::string metric = "both";
  int max_t = kOracleDefaultCap;
  unsigned threads = 0;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_t > kOracleHardCap) {
    throw ParameterError("--max-t cannot exceed " + std::to_string(kOracleHardCap));
  }
  const VoterMatrix v = read_matrix_file(args.path);
  const int t = v.topics();
  if (t > kOracleDefaultCap && t <= args.max_t) {
    err << "warning: enumerating 2^" << t << " proposals may take a long time\n";
  }
  OracleOptions options;
  options.max_topics = args.max_t;
  options.threads = args.threads;

  const auto canon = canonicalize(v);
  const auto tally = column_tally(v);

  out << "voters: " << v.total_weight() << '\n';
  out << "topics: " << t << '\n';
  out << "rows: " << v.rows().size() << '\n';
  out << "column_yes:";
  for (auto y : tally.yes_weight) out << ' ' << y;
  out << '\n';
  out << "flipped_columns:";
  if (canon.flip_mask == 0) out << " none";
  for (int i = 0; i < t; ++i) {
    if ((canon.flip_mask >> i) & 1U) out << ' ' << i + 1;
  }
  out << '\n';
  out << "m_V: " << with_decimal(column_tally(canon.matrix).average_majority()) << '\n';

  // Witnesses are reported in the frame of the input file.
  if (args.metric == "md" || args.metric == "both") {
    const OracleResult md = max_majority_decisions(canon.matrix, options);
    out << "md_V: " << md.best.yes_count() << '\n';
    out << "md_witness: " << md.best.flipped(canon.flip_mask).to_string() << '\n';
  }
  if (args.metric == "matches" || args.metric == "both") {
    const OracleResult best = best_representation(canon.matrix, options);
    out << "R_V: " << with_decimal(best.absolute) << '\n';
    out << "r_V: " << with_decimal(*best.relative) << '\n';
    out << "r_witness: " << best.best.flipped(canon.flip_mask).to_string() << '\n';
    out << "r_witness_support: " << exact_string(best.supporter_weight) << '\n';
  }
  return kExitOk;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int t = 0;
  long l = 0;
  long k = -1;
  long M = -1;
  int w = 0;
  long n = 0;
  std::string epsilon = "0";
  std::string out_path;
};

void require(bool given, const char* flag, const std::string& kind) {
  if (!given) throw ParameterError("construct " + kind + " requires " + flag);
}

int cmd_construct(const ConstructArgs& a, const CLI::App& sub, std::ostream& out) {
  auto given = [&sub](const char* flag) { return sub.count(flag) > 0; };
  std::string text;
  if (a.kind == "lemma1") {
    require(given("--t"), "--t", a.kind);
    text = format_matrix(lemma1_matrix(a.t));
  } else if (a.kind == "theorem2") {
    require(given("--l"), "--l", a.kind);
    text = format_matrix(theorem2_matrix(a.l));
  } else if (a.kind == "theorem3") {
    require(given("--t") && given("--k") && given("--M"), "--t, --k and --M", a.kind);
    text = format_matrix(theorem3_matrix(a.t, a.k, a.M));
  } else if (a.kind == "lemma7") {
    require(given("--t") && given("--w") && given("--n"), "--t, --w and --n", a.kind);
    text = format_matrix(lemma7_matrix(a.t, a.w, a.n));
  } else {
    require(given("--t") && given("--w"), "--t and --w", a.kind);
    if (a.t > 20) throw ResourceLimit("construct vlp writes up to 2^t rows; t <= 20 required");
    const Rational epsilon = parse_rational(a.epsilon);
    const LpSolution lp = solve_ma(a.t, a.w);
    const TypeProfile profile = mix_with_empty_voters(lp.type_profile(), epsilon);
    const ScaledMatrix scaled = to_integer_weights(vlp_matrix(profile));
    text = format_matrix(scaled.matrix,
                         {"l-voter profile from the ma LP, t = " + std::to_string(a.t) + ", w = " + std::to_string(a.w),
                          "ma = " + exact_string(lp.ma) + ", epsilon = " + exact_string(epsilon),
                          "weights are the fractional weights times scale " + scaled.scale.get_str()});
  }

  if (a.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot write " + a.out_path);
  file << text;
  return kExitOk;
}

// --- ma ---------------------------------------------------------------------

struct MaArgs {
  int t = 0;
  int w = 0;
  bool sweep = false;
  bool use_float = false;
  bool csv = false;
  unsigned threads = 0;
};

std::vector<std::string> ma_row(int t, int w, const Rational& ma, bool exact) {
  std::vector<std::string> row{std::to_string(w), exact ? exact_string(ma) : "", decimal(ma),
                               decimal(ma_linear_lower(t, w))};
  if (t >= 3) {
    const Figure2Point p = figure2_point(t, w, ma);
    row.push_back(decimal(p.x));
    row.push_back(decimal(p.y));
  } else {
    row.insert(row.end(), {"", ""});
  }
  return row;
}

int cmd_ma(const MaArgs& a, std::ostream& out) {
  const SolveOptions options = solve_options(a.use_float, a.threads);
  Table table({"w", "ma_exact", "ma_decimal", "lemma7_bound", "figure2_x", "figure2_y"});
  if (a.sweep) {
    const MaTable ma = ma_table(a.t, options);
    for (int w = ma.first_w; w <= a.t; ++w) table.add(ma_row(a.t, w, ma.ma(w), ma.exact));
  } else {
    const LpSolution s = solve_ma(a.t, a.w, options);
    table.add(ma_row(a.t, a.w, s.ma, s.exact));
  }
  table.print(out, a.csv);
  return kExitOk;
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
  int t = 0;
  std::string range;
  bool use_float = false;
  bool csv = false;
  unsigned threads = 0;
};

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParameterError("bad --t-range '" + text + "', expected A..B");
    return v;
  };
  if (sep == std::string::npos) throw ParameterError("bad --t-range '" + text + "', expected A..B");
  const std::string_view view(text);
  const int lo = number(view.substr(0, sep));
  const int hi = number(view.substr(sep + 2));
  if (lo < 1 || hi < lo) throw ParameterError("--t-range needs 1 <= A <= B");
  return {lo, hi};
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const auto [lo, hi] = a.range.empty() ? std::pair{a.t, a.t} : parse_range(a.range);
  if (lo < 1) throw ParameterError("--t must be at least 1");
  const SolveOptions options = solve_options(a.use_float, a.threads);
  std::vector<std::string> header{"t", "lower", "upper", "analytic_upper", "upper_w"};
  if (!a.use_float) header.insert(header.end(), {"lower_exact", "upper_exact"});
  Table table(std::move(header));
  for (int t = lo; t <= hi; ++t) {
    const RtBounds b = rt_bounds(t, options);
    std::vector<std::string> row{std::to_string(t), decimal(b.lower), decimal(b.upper),
                                 t >= 3 ? significant_figures(b.analytic_upper, 4) : "",
                                 b.upper_w > 0 ? std::to_string(b.upper_w) : ""};
    if (!a.use_float) row.insert(row.end(), {exact_string(b.lower), exact_string(b.upper)});
    table.add(std::move(row));
  }
  table.print(out, a.csv);
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t samples = VerifyOptions{}.samples;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const VerifyOptions options{a.seed, a.samples};
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(a.suite);
  }
  bool all_passed = true;
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, options);
    out << name << ": " << r.checks - r.failures << "/" << r.checks << " passed" << (r.passed() ? "" : " FAIL") << '\n';
    if (r.counterexample) {
      std::istringstream lines(*r.counterexample);
      std::string line;
      // First line describes the failure; the rest is a matrix file.
      if (std::getline(lines, line)) out << "# " << line << '\n';
      while (std::getline(lines, line)) out << line << '\n';
    }
    all_passed = all_passed && r.passed();
  }
  return all_passed ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority-supported proposals and their representativeness", "anscombe"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Report md_V, R_V and r_V of a matrix file");
  analyze->add_option("file", analyze_args.path, "Matrix file")->required();
  analyze->add_option("--metric", analyze_args.metric, "md, matches or both")
      ->check(CLI::IsMember({"md", "matches", "both"}))
      ->capture_default_str();
  analyze->add_option("--max-t", analyze_args.max_t, "Largest topic count to enumerate")->capture_default_str();
  analyze->add_option("--threads", analyze_args.threads, "Worker threads, 0 = all cores");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Write a worst-case matrix in matrix file format");
  construct->add_option("kind", construct_args.kind, "lemma1, theorem2, theorem3, lemma7 or vlp")
      ->required()
      ->check(CLI::IsMember({"lemma1", "theorem2", "theorem3", "lemma7", "vlp"}));
  construct->add_option("--t", construct_args.t, "Topics");
  construct->add_option("--l", construct_args.l, "Block size (theorem2)");
  construct->add_option("--k", construct_args.k, "All-Y weight (theorem3)");
  construct->add_option("--M", construct_args.M, "Ys per column (theorem3)");
  construct->add_option("--w", construct_args.w, "Majority decisions bound (lemma7, vlp)");
  construct->add_option("--n", construct_args.n, "Voters (lemma7)");
  construct->add_option("--epsilon", construct_args.epsilon, "Mass moved to 0-voters (vlp), e.g. 1/1000")
      ->capture_default_str();
  construct->add_option("--out", construct_args.out_path, "Output file instead of stdout");

  MaArgs ma_args;
  auto* ma = app.add_subcommand("ma", "Solve the LP for ma_t(w)");
  ma->add_option("--t", ma_args.t, "Topics")->required();
  auto* ma_w = ma->add_option("--w", ma_args.w, "Single w");
  auto* ma_sweep = ma->add_flag("--sweep", ma_args.sweep, "All w from ceil((t+1)/2) to t");
  ma_w->excludes(ma_sweep);
  auto* ma_exact = ma->add_flag("--exact", "Exact rational arithmetic (default)");
  ma->add_flag("--float", ma_args.use_float, "Double-precision simplex")->excludes(ma_exact);
  ma->add_flag("--csv", ma_args.csv, "Comma-separated output");
  ma->add_option("--threads", ma_args.threads, "Worker threads, 0 = all cores");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on r_t");
  auto* bounds_t = bounds->add_option("--t", bounds_args.t, "Topics");
  bounds->add_option("--t-range", bounds_args.range, "Inclusive range A..B")->excludes(bounds_t);
  auto* bounds_exact = bounds->add_flag("--exact", "Exact rational arithmetic (default)");
  bounds->add_flag("--float", bounds_args.use_float, "Double-precision simplex")->excludes(bounds_exact);
  bounds->add_flag("--csv", bounds_args.csv, "Comma-separated output");
  bounds->add_option("--threads", bounds_args.threads, "Worker threads, 0 = all cores");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run seeded property suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", verify_args.suite, "Suite name or all")
      ->check(CLI::IsMember(suite_choices))
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "RNG seed")->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Random matrices per property")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameterError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out, err);
    if (*construct) return cmd_construct(construct_args, *construct, out);
    if (*ma) {
      if (!ma_args.sweep && ma->count("--w") == 0) throw ParameterError("ma needs --w or --sweep");
      return cmd_ma(ma_args, out);
    }
    if (*bounds) {
      if (bounds->count("--t") == 0 && bounds_args.range.empty()) throw ParameterError("bounds needs --t or --t-range");
      return cmd_bounds(bounds_args, out);
    }
    return cmd_verify(verify_args, out);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Error& e) {
    // ParameterError, ResourceLimit and solver failures.
    err << "error: " << e.what() << '\n';
    return kExitParameterError;
  }
}

}  // namespace anscombe
