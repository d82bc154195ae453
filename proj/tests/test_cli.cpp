#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "anscombe/cli.hpp"
#include "anscombe/matrix_io.hpp"
#include "anscombe/verify.hpp"

namespace anscombe {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "anscombe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ANSCOMBE_TEST_DATA) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("anscombe_cli_" + name);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, AnalyzeNineVoters) {
  const Invocation r = run({"analyze", data("nine_voters.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("voters: 9\n"), std::string::npos);
  EXPECT_NE(r.out.find("m_V: 13/21 (0.6190)\n"), std::string::npos);
  EXPECT_NE(r.out.find("md_V: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("r_V: 37/39 (0.9487)\n"), std::string::npos);
  EXPECT_NE(r.out.find("flipped_columns: none\n"), std::string::npos);
}

TEST(Cli, AnalyzeSingleVoter) {
  const Invocation r = run({"analyze", data("single_voter.txt"), "--metric", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("md_V: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("r_V: 1/1 (1.000)\n"), std::string::npos);
  EXPECT_NE(r.out.find("flipped_columns: 1 3 4\n"), std::string::npos);
  // Witnesses are given in the file's own frame.
  EXPECT_NE(r.out.find("md_witness: NYNNY\n"), std::string::npos);
}

TEST(Cli, AnalyzeMetricSelection) {
  const Invocation md = run({"analyze", data("nine_voters.txt"), "--metric", "md"});
  EXPECT_EQ(md.code, 0);
  EXPECT_EQ(md.out.find("r_V"), std::string::npos);
  const Invocation matches = run({"analyze", data("nine_voters.txt"), "--metric", "matches"});
  EXPECT_EQ(matches.out.find("md_V"), std::string::npos);
  EXPECT_NE(matches.out.find("r_V"), std::string::npos);
}

TEST(Cli, AnalyzeErrors) {
  const Invocation ragged = run({"analyze", data("ragged.txt")});
  EXPECT_EQ(ragged.code, kExitParseError);
  EXPECT_NE(ragged.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"analyze", data("missing.txt")}).code, kExitParseError);
  EXPECT_EQ(run({"analyze", data("nine_voters.txt"), "--max-t", "31"}).code, kExitParameterError);
  EXPECT_EQ(run({"analyze", data("nine_voters.txt"), "--max-t", "6"}).code, kExitParameterError);
  EXPECT_EQ(run({"analyze", data("nine_voters.txt"), "--metric", "other"}).code, kExitParameterError);
}

TEST(Cli, ConstructKnownMatrices) {
  const Invocation lemma1 = run({"construct", "lemma1", "--t", "3"});
  EXPECT_EQ(lemma1.code, 0);
  EXPECT_EQ(lemma1.out, "YNN\nNYN\nNNY\n2x YYY\n");
  const Invocation theorem3 = run({"construct", "theorem3", "--t", "5", "--k", "4", "--M", "6"});
  EXPECT_EQ(theorem3.out, "YNYNN\nYNNYN\nNYNYN\nNYNNY\nNNYNY\n4x YYYYY\n");
  const Invocation theorem2 = run({"construct", "theorem2", "--l", "2"});
  EXPECT_EQ(theorem2.out, "2x YNN\n2x NYN\n2x NNY\n5x YYY\n");
  const Invocation lemma7 = run({"construct", "lemma7", "--t", "5", "--w", "4", "--n", "5"});
  EXPECT_EQ(lemma7.out, "3x YNNNN\n2x YYYYY\n");
}

TEST(Cli, ConstructVlpRoundTrip) {
  const auto path = temp_file("vlp.txt");
  const Invocation r = run({"construct", "vlp", "--t", "5", "--w", "4", "--epsilon", "0.001", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("# ", 0), 0u);
  const Invocation analyzed = run({"analyze", path.string(), "--metric", "md"});
  ASSERT_EQ(analyzed.code, 0) << analyzed.err;
  // No supported proposal reaches w = 4.
  EXPECT_NE(analyzed.out.find("md_V: 3\n"), std::string::npos) << analyzed.out;
  std::filesystem::remove(path);
}

TEST(Cli, ConstructThenAnalyze) {
  const auto path = temp_file("theorem2.txt");
  ASSERT_EQ(run({"construct", "theorem2", "--l", "3", "--out", path.string()}).code, 0);
  const Invocation r = run({"analyze", path.string()});
  EXPECT_NE(r.out.find("r_V: 28/33 "), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, ConstructErrors) {
  EXPECT_EQ(run({"construct", "lemma1"}).code, kExitParameterError);
  EXPECT_EQ(run({"construct", "theorem3", "--t", "5", "--k", "4", "--M", "3"}).code, kExitParameterError);
  EXPECT_EQ(run({"construct", "square"}).code, kExitParameterError);
  EXPECT_EQ(run({"construct", "vlp", "--t", "21", "--w", "15"}).code, kExitParameterError);
  EXPECT_EQ(run({"construct", "vlp", "--t", "5", "--w", "4", "--epsilon", "abc"}).code, kExitParameterError);
}

TEST(Cli, MaSweep) {
  const Invocation r = run({"ma", "--t", "9", "--sweep", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], "w,ma_exact,ma_decimal,lemma7_bound,figure2_x,figure2_y");
  EXPECT_EQ(rows[5], "9,13/18,0.7222,0.7222,1.000,1.000");
}

TEST(Cli, MaSingle) {
  const Invocation r = run({"ma", "--t", "3", "--w", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2/3"), std::string::npos);
  const Invocation f = run({"ma", "--t", "3", "--w", "3", "--float", "--csv"});
  // Float ma is not exactly 2/3, so only the leading columns are pinned.
  EXPECT_EQ(lines(f.out).at(1).rfind("3,,0.6666,0.6666,1.000,", 0), 0u) << f.out;
}

TEST(Cli, MaCurveShape) {
  const Invocation r = run({"ma", "--t", "49", "--sweep", "--csv"});
  ASSERT_EQ(r.code, 0);
  bool above = false;
  const auto rows = lines(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].rfind(',');
    const auto prev = rows[i].rfind(',', comma - 1);
    const double x = std::stod(rows[i].substr(prev + 1, comma - prev - 1));
    const double y = std::stod(rows[i].substr(comma + 1));
    above = above || y > x;
  }
  EXPECT_TRUE(above);
}

TEST(Cli, MaErrors) {
  EXPECT_EQ(run({"ma", "--t", "201", "--w", "150"}).code, kExitParameterError);
  EXPECT_EQ(run({"ma", "--t", "9"}).code, kExitParameterError);
  EXPECT_EQ(run({"ma", "--t", "9", "--w", "3"}).code, kExitParameterError);
  EXPECT_EQ(run({"ma", "--t", "9", "--w", "6", "--sweep"}).code, kExitParameterError);
  EXPECT_EQ(run({"ma", "--t", "9", "--sweep", "--exact", "--float"}).code, kExitParameterError);
}

TEST(Cli, BoundsTable) {
  const Invocation r = run({"bounds", "--t", "9", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "t,lower,upper,analytic_upper,upper_w,lower_exact,upper_exact\n9,0.6363,0.8787,0.9193,7,7/11,29/33\n");
  const Invocation small = run({"bounds", "--t", "2", "--csv"});
  EXPECT_EQ(lines(small.out).at(1), "2,1.000,1.000,,,1/1,1/1");
}

TEST(Cli, BoundsRange) {
  const Invocation r = run({"bounds", "--t-range", "4..50", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 48u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string t, lower, upper;
    std::getline(in, t, ',');
    std::getline(in, lower, ',');
    std::getline(in, upper, ',');
    EXPECT_LE(std::stod(lower), std::stod(upper)) << rows[i];
  }
  EXPECT_EQ(run({"bounds", "--t-range", "9..4"}).code, kExitParameterError);
  EXPECT_EQ(run({"bounds", "--t-range", "abc"}).code, kExitParameterError);
  EXPECT_EQ(run({"bounds"}).code, kExitParameterError);
}

TEST(Cli, Deterministic) {
  const Invocation a = run({"bounds", "--t-range", "3..20", "--csv", "--threads", "1"});
  const Invocation b = run({"bounds", "--t-range", "3..20", "--csv", "--threads", "3"});
  EXPECT_EQ(a.out, b.out);
  const Invocation c = run({"verify", "--suite", "r3", "--seed", "9", "--samples", "300"});
  const Invocation d = run({"verify", "--suite", "r3", "--seed", "9", "--samples", "300"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Verify) {
  const Invocation identity = run({"verify", "--suite", "identity"});
  EXPECT_EQ(identity.code, 0);
  EXPECT_NE(identity.out.find("identity: "), std::string::npos);
  const Invocation r3 = run({"verify", "--suite", "r3", "--seed", "42", "--samples", "1000"});
  EXPECT_EQ(r3.code, 0);
  const Invocation all = run({"verify", "--samples", "100"});
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_EQ(lines(all.out).size(), suite_names().size());
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, kExitParameterError);
}

TEST(Cli, HelpAndUsage) {
  const Invocation help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("analyze"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitParameterError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParameterError);
}

}  // namespace
}  // namespace anscombe
