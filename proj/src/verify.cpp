#include "anscombe/verify.hpp"

#include <functional>
#include <random>

#include "anscombe/combinatorics.hpp"
#include "anscombe/constructions.hpp"
#include "anscombe/error.hpp"
#include "anscombe/matrix_io.hpp"
#include "anscombe/oracle.hpp"
#include "anscombe/sampling.hpp"

namespace anscombe {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.checks;
    if (ok) return;
    ++report_.failures;
    if (!report_.counterexample) report_.counterexample = describe();
  }

  void check_matrix(bool ok, const VoterMatrix& v, const std::string& what) {
    check(ok, [&] { return what + "\n" + format_matrix(v); });
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  SuiteReport report_;
};

// Seeds each suite from the user seed and the suite name so suites can be
// run alone or together with identical draws.
std::mt19937_64 suite_rng(const VerifyOptions& options, std::string_view name) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string_view>{}(name))};
  return std::mt19937_64(seq);
}

SuiteReport suite_skl(const VerifyOptions&) {
  Recorder rec("skl");
  for (int t = 1; t <= 12; ++t) {
    for (int k = first_majority_k(t); k <= t; ++k) {
      for (int l = 0; l <= t; ++l) {
        const BigInt formula = s_kl(t, k, l);
        const BigInt counted = s_kl_oracle(t, k, l);
        rec.check(formula == counted, [&] {
          return "s_kl(" + std::to_string(t) + "," + std::to_string(k) + "," + std::to_string(l) +
                 ") = " + formula.get_str() + " but enumeration gives " + counted.get_str();
        });
      }
    }
  }
  // Any l-voter, not just Y^l N^(t-l), supports the same number of k-proposals.
  for (int t = 1; t <= 8; ++t) {
    for (int k = 0; k <= t; ++k) {
      for (Mask m = 0; m < (Mask{1} << t); ++m) {
        const OpinionVector voter(t, m);
        const BigInt a = s_kl_oracle(k, voter);
        const BigInt b = s_kl_oracle(t, k, voter.yes_count());
        rec.check(a == b, [&] {
          return "voter " + voter.to_string() + " supports " + a.get_str() + " " + std::to_string(k) +
                 "-proposals, canonical l-voter supports " + b.get_str();
        });
      }
    }
  }
  return rec.finish();
}

SuiteReport suite_identity(const VerifyOptions&) {
  Recorder rec("identity");
  for (int t = 1; t <= 30; t += 2) {
    for (int l = 0; l <= t; ++l) {
      const BigInt lhs = c_l(t, l);
      const BigInt rhs = c_l_closed_form(t, l);
      rec.check(lhs == rhs, [&] {
        return "t=" + std::to_string(t) + " l=" + std::to_string(l) + ": sum " + lhs.get_str() +
               " != " + rhs.get_str();
      });
    }
  }
  return rec.finish();
}

SuiteReport suite_mdtight(const VerifyOptions& options) {
  Recorder rec("mdtight");
  for (int t = 1; t <= 12; ++t) {
    const VoterMatrix v = lemma1_matrix(t);
    rec.check_matrix(md_of(v) == first_majority_k(t), v, "lemma1 matrix misses md = ceil((t+1)/2)");
  }
  auto rng = suite_rng(options, "mdtight");
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {1, 10, 9, 4});
    rec.check_matrix(md_of(v) >= first_majority_k(v.topics()), v, "md_V below ceil((t+1)/2)");
  }
  return rec.finish();
}

SuiteReport suite_r3(const VerifyOptions& options) {
  Recorder rec("r3");
  const Rational five_sixths = make_rational(5, 6);
  for (long l = 1; l <= 50; ++l) {
    const VoterMatrix v = theorem2_matrix(l);
    const Rational r = *best_representation(v).relative;
    rec.check_matrix(r == make_rational(10 * l - 2, 12 * l - 3), v, "theorem2 matrix r_V mismatch");
    rec.check_matrix(r > five_sixths, v, "theorem2 matrix r_V not above 5/6");
  }
  auto rng = suite_rng(options, "r3");
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {3, 3, 12, 6});
    rec.check_matrix(*best_representation(v).relative >= five_sixths, v, "3-topic matrix with r_V < 5/6");
  }
  return rec.finish();
}

SuiteReport suite_rule34(const VerifyOptions& options) {
  Recorder rec("rule34");
  auto rng = suite_rng(options, "rule34");
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {1, 12, 9, 4});
    rec.check_matrix(rule_of_three_fourths_check(v), v, "m_V >= 3/4 but all-Y lacks majority support");
  }
  return rec.finish();
}

SuiteReport suite_pairs(const VerifyOptions& options) {
  Recorder rec("pairs");
  auto rng = suite_rng(options, "pairs");
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {1, 10, 9, 4});
    bool ok = true;
    for (Mask m = 0; m < (Mask{1} << v.topics()) && ok; ++m) {
      const Proposal p(v.topics(), m);
      ok = supporter_weight(v, p) + supporter_weight(v, p.opposite()) >= v.total_weight();
    }
    rec.check_matrix(ok, v, "a proposal and its opposite together lack the full weight");
  }
  return rec.finish();
}

SuiteReport suite_floor(const VerifyOptions& options) {
  Recorder rec("floor");
  auto rng = suite_rng(options, "floor");
  const Rational third = make_rational(1, 3);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {1, 12, 9, 4});
    const OracleResult best = best_representation(v);
    rec.check_matrix(*best.relative >= third, v, "r_V < 1/3");
    rec.check_matrix(best.absolute >= make_rational(1, 4), v, "supported proposal with R < 1/4");
    if (v.topics() >= 2) {
      const Rational lemma5 = make_rational(2, 3) - make_rational(4, 3 * v.topics());
      rec.check_matrix(*best.relative >= lemma5, v, "r_V < 2/3 - 4/(3t)");
    }
  }
  return rec.finish();
}

SuiteReport suite_half(const VerifyOptions& options) {
  Recorder rec("half");
  auto rng = suite_rng(options, "half");
  for (std::size_t i = 0; i < options.samples; ++i) {
    const VoterMatrix v = random_canonical_matrix(rng, {1, 16, 9, 4});
    const Proposal p = half_proposal(v);
    const Rational bound = make_rational(1, 2) - make_rational(1, v.topics());
    rec.check_matrix(has_majority_support(v, p) && absolute_representativeness(v, p) >= bound, v,
                     "half proposal " + p.to_string() + " unsupported or below 1/2 - 1/t");
  }
  return rec.finish();
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"skl", suite_skl},       {"identity", suite_identity}, {"mdtight", suite_mdtight},
      {"r3", suite_r3},         {"rule34", suite_rule34},     {"pairs", suite_pairs},
      {"floor", suite_floor},   {"half", suite_half},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(options);
  }
  throw ParameterError("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace anscombe
