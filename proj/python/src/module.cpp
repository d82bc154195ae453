#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anscombe/bounds.hpp"
#include "anscombe/combinatorics.hpp"
#include "anscombe/constructions.hpp"
#include "anscombe/error.hpp"
#include "anscombe/lp.hpp"
#include "anscombe/matrix_io.hpp"
#include "anscombe/oracle.hpp"
#include "anscombe/verify.hpp"

namespace py = pybind11;
using namespace anscombe;

namespace {

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_int(q.get_num()), to_int(q.get_den()));
}

Rational from_python(const py::handle& obj) {
  const auto text = py::str(py::module_::import("fractions").attr("Fraction")(obj)).cast<std::string>();
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

py::list fractions(std::span<const Rational> values) {
  py::list out;
  for (const auto& q : values) out.append(to_fraction(q));
  return out;
}

VoterMatrix from_rows(int topics, const std::vector<std::pair<std::string, std::uint64_t>>& rows) {
  std::vector<VoterRow> out;
  for (const auto& [text, weight] : rows) out.push_back({OpinionVector::parse(text), weight});
  return {topics, std::move(out)};
}

std::vector<std::pair<std::string, std::uint64_t>> rows_of(const VoterMatrix& v) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& row : v.rows()) out.emplace_back(row.opinions.to_string(), row.weight);
  return out;
}

SolveOptions solve_options(bool exact, unsigned threads) {
  SolveOptions options;
  options.arithmetic = exact ? Arithmetic::kExact : Arithmetic::kFloat;
  options.threads = threads;
  return options;
}

py::dict lp_dict(const LpSolution& s) {
  py::dict d;
  d["t"] = s.topics;
  d["w"] = s.min_yes;
  d["ma"] = to_fraction(s.ma);
  d["profile"] = fractions(s.profile);
  d["active"] = s.active;
  d["exact"] = s.exact;
  d["residual"] = s.residual;
  d["pivots"] = s.pivots;
  return d;
}

// Witnesses are reported in the frame of the given matrix.
py::dict analyze(const VoterMatrix& v, const std::string& metric, int max_t, unsigned threads) {
  if (metric != "md" && metric != "matches" && metric != "both") {
    throw ParameterError("metric must be md, matches or both");
  }
  OracleOptions options;
  options.max_topics = max_t;
  options.threads = threads;
  const auto canon = canonicalize(v);
  py::dict d;
  std::vector<int> flipped;
  for (int i = 0; i < v.topics(); ++i) {
    if ((canon.flip_mask >> i) & 1U) flipped.push_back(i);
  }
  d["flipped_columns"] = flipped;
  d["m"] = to_fraction(column_tally(canon.matrix).average_majority());
  if (metric != "matches") {
    const OracleResult md = max_majority_decisions(canon.matrix, options);
    d["md"] = md.best.yes_count();
    d["md_witness"] = md.best.flipped(canon.flip_mask).to_string();
  }
  if (metric != "md") {
    const OracleResult best = best_representation(canon.matrix, options);
    d["R"] = to_fraction(best.absolute);
    d["r"] = to_fraction(*best.relative);
    d["r_witness"] = best.best.flipped(canon.flip_mask).to_string();
    d["r_witness_support"] = to_fraction(best.supporter_weight);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_anscombe, m) {
  m.doc() = "Majority-supported proposals, the ma LP and bounds on r_t";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<MalformedInput>(m, "MalformedInput", error.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());

  py::class_<VoterMatrix>(m, "Matrix")
      .def(py::init(&from_rows), py::arg("topics"), py::arg("rows"),
           "Rows are (opinions, weight) pairs such as (\"YNY\", 2).")
      .def_static("parse", &parse_matrix, py::arg("text"))
      .def_static("read", &read_matrix_file, py::arg("path"))
      .def_property_readonly("topics", &VoterMatrix::topics)
      .def_property_readonly("voters", [](const VoterMatrix& v) { return v.total_weight(); })
      .def_property_readonly("rows", &rows_of)
      .def("canonical", [](const VoterMatrix& v) { return canonicalize(v).matrix; })
      .def("is_canonical", [](const VoterMatrix& v) { return is_canonical(v); })
      .def("supporters", [](const VoterMatrix& v, const std::string& p) {
        return supporter_weight(v, OpinionVector::parse(p));
      }, py::arg("proposal"))
      .def("has_majority_support", [](const VoterMatrix& v, const std::string& p) {
        return has_majority_support(v, OpinionVector::parse(p));
      }, py::arg("proposal"))
      .def("__eq__", [](const VoterMatrix& a, const VoterMatrix& b) { return a.merged() == b.merged(); })
      .def("__str__", [](const VoterMatrix& v) { return format_matrix(v); })
      .def("__repr__", [](const VoterMatrix& v) {
        return "<Matrix t=" + std::to_string(v.topics()) + " n=" + std::to_string(v.total_weight()) + ">";
      });

  m.def("supports", [](const std::string& voter, const std::string& p) {
    return supports(OpinionVector::parse(voter), OpinionVector::parse(p));
  }, py::arg("voter"), py::arg("proposal"));

  m.def("analyze", &analyze, py::arg("matrix"), py::arg("metric") = "both", py::arg("max_t") = kOracleDefaultCap,
        py::arg("threads") = 0U);

  m.def("s_kl", [](int t, int k, int l) { return to_int(s_kl(t, k, l)); }, py::arg("t"), py::arg("k"), py::arg("l"));
  m.def("c_l", [](int t, int l) { return to_int(c_l(t, l)); }, py::arg("t"), py::arg("l"));

  m.def("solve_ma", [](int t, int w, bool exact, unsigned threads) {
    return lp_dict(solve_ma(t, w, solve_options(exact, threads)));
  }, py::arg("t"), py::arg("w"), py::arg("exact") = true, py::arg("threads") = 0U);
  m.def("ma_table", [](int t, bool exact, unsigned threads) {
    const MaTable table = ma_table(t, solve_options(exact, threads));
    py::dict d;
    for (int w = table.first_w; w <= t; ++w) d[py::int_(w)] = to_fraction(table.ma(w));
    return d;
  }, py::arg("t"), py::arg("exact") = true, py::arg("threads") = 0U);
  m.def("rt_bounds", [](int t, bool exact, unsigned threads) {
    const RtBounds b = rt_bounds(t, solve_options(exact, threads));
    py::dict d;
    d["t"] = t;
    d["lower"] = to_fraction(b.lower);
    d["upper"] = to_fraction(b.upper);
    d["upper_w"] = b.upper_w;
    d["analytic_upper"] = t >= 3 ? py::object(py::float_(b.analytic_upper)) : py::object(py::none());
    return d;
  }, py::arg("t"), py::arg("exact") = true, py::arg("threads") = 0U);
  m.def("significant_figures", [](const py::handle& q, int digits) {
    return significant_figures(from_python(q), digits);
  }, py::arg("value"), py::arg("digits") = 4);

  m.def("lemma1_matrix", &lemma1_matrix, py::arg("t"));
  m.def("theorem2_matrix", &theorem2_matrix, py::arg("l"));
  m.def("theorem3_matrix", &theorem3_matrix, py::arg("t"), py::arg("k"), py::arg("M"));
  m.def("lemma7_matrix", &lemma7_matrix, py::arg("t"), py::arg("w"), py::arg("n"));
  m.def("vlp_matrix", [](int t, int w, const py::handle& epsilon) {
    const TypeProfile profile = mix_with_empty_voters(solve_ma(t, w).type_profile(), from_python(epsilon));
    const ScaledMatrix scaled = to_integer_weights(vlp_matrix(profile));
    return std::make_pair(scaled.matrix, to_int(scaled.scale));
  }, py::arg("t"), py::arg("w"), py::arg("epsilon") = 0,
     "Integer-weight matrix for the LP optimum mixed toward 0-voters, and the weight scale.");

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::uint64_t seed, std::size_t samples) {
    const SuiteReport r = run_suite(name, {seed, samples});
    py::dict d;
    d["name"] = r.name;
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["counterexample"] = r.counterexample ? py::object(py::str(*r.counterexample)) : py::object(py::none());
    return d;
  }, py::arg("name"), py::arg("seed") = VerifyOptions{}.seed, py::arg("samples") = VerifyOptions{}.samples);
}
