// Python bindings. Graphs and quantum graphs cross the boundary as JSON
// strings (the same format the CLI reads and writes); counts are exact Python
// ints and rationals are fractions.Fraction.
#include "homcfi/cfi.hpp"
#include "homcfi/counting.hpp"
#include "homcfi/expansion.hpp"
#include "homcfi/filters.hpp"
#include "homcfi/json_io.hpp"
#include "homcfi/quantum.hpp"
#include "homcfi/reduction.hpp"
#include "homcfi/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace homcfi;

namespace {

py::object py_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object py_fraction(const Rational& value) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rational_to_string(value));
}

ColoredGraph graph_arg(const std::string& json) { return graph_from_json(json); }

py::dict report_dict(const ReductionReport& report) {
    py::dict d;
    d["result"] = py_fraction(report.result);
    d["normalization"] = py_fraction(report.normalization);
    d["oracle_calls"] = report.oracle_calls;
    d["normalization_calls"] = report.normalization_calls;
    d["max_call_size"] = report.max_call_size;
    return d;
}

MotifOracle oracle_arg(const std::string& kind, const std::string& pattern_json) {
    ColoredGraph pattern = strip_colors(graph_arg(pattern_json));
    if (kind == "hom") return make_oracle(OracleKind::Hom, pattern);
    if (kind == "sub") return make_expansion_oracle(OracleKind::Sub, pattern);
    if (kind == "ind") return make_expansion_oracle(OracleKind::Ind, pattern);
    throw py::value_error("oracle kind must be hom, sub or ind");
}

}  // namespace

PYBIND11_MODULE(_homcfi, m) {
    m.doc() = "exact colored-graph homomorphism algebra, CFI filters and the "
              "motif-oracle reduction";

    py::register_exception<PromiseViolation>(m, "PromiseViolation");

    m.def("hom", [](const std::string& h, const std::string& g) {
        return py_int(hom_count(graph_arg(h), graph_arg(g)));
    }, py::arg("pattern"), py::arg("host"), "color-preserving homomorphism count");
    m.def("sub", [](const std::string& h, const std::string& g) {
        return py_int(sub_count(graph_arg(h), graph_arg(g)));
    }, py::arg("pattern"), py::arg("host"), "subgraph-copy count");
    m.def("ind", [](const std::string& h, const std::string& g) {
        return py_int(ind_count(graph_arg(h), graph_arg(g)));
    }, py::arg("pattern"), py::arg("host"), "induced-subgraph count");

    m.def("tensor", [](const std::string& a, const std::string& b) {
        return graph_to_json(tensor(graph_arg(a), graph_arg(b)));
    }, py::arg("a"), py::arg("b"), "color-respecting tensor product, as graph JSON");

    m.def("to_dot", [](const std::string& g, const std::string& name) {
        return graph_to_dot(graph_arg(g), name);
    }, py::arg("graph"), py::arg("name") = "G", "Graphviz DOT rendering");

    m.def("expand_sub", [](const std::string& h, int cap) {
        return quantum_to_json(sub_hom_expansion(graph_arg(h), cap).q);
    }, py::arg("pattern"), py::arg("cap") = kQuotientVertexCap,
       "hom-expansion of the subgraph count, as quantum JSON");
    m.def("expand_ind", [](const std::string& h, int cap) {
        return quantum_to_json(ind_hom_expansion(graph_arg(h), cap).q);
    }, py::arg("pattern"), py::arg("cap") = kIndVertexCap,
       "hom-expansion of the induced count, as quantum JSON");

    m.def("hom_quantum", [](const std::string& h, const std::string& q) {
        return py_fraction(hom_quantum(graph_arg(h), quantum_from_json(q)));
    }, py::arg("pattern"), py::arg("quantum"),
       "hom of a graph into a quantum graph (linear in the constituents)");
    m.def("evaluate", [](const std::string& q, const std::string& g) {
        auto quantum = quantum_from_json(q);
        auto host = graph_arg(g);
        Rational total = 0;
        for (std::size_t i = 0; i < quantum.size(); ++i) {
            total += quantum.coefficients[i] * Rational(hom_count(quantum.constituents[i], host));
        }
        return py_fraction(total);
    }, py::arg("quantum"), py::arg("host"),
       "hom of a quantum graph into a host, termwise");

    m.def("cfi_build", [](const std::string& base, const std::vector<Edge>& charged) {
        auto s = ColorfulGraph(graph_arg(base));
        auto charge = charged.empty() ? ChargeFunction::zero(s)
                                      : ChargeFunction::indicator(s, charged);
        return graph_to_json(cfi_csp(s, charge).realized);
    }, py::arg("base"), py::arg("charged_edges") = std::vector<Edge>{},
       "realized CFI graph of a charge, as graph JSON");
    m.def("cfi_filter", [](const std::string& base) {
        return quantum_to_json(cfi_filter(ColorfulGraph(graph_arg(base))));
    }, py::arg("base"), "the two-constituent surjectivity filter X(S)");

    m.def("cardinality_filter", [](const std::vector<std::vector<int>>& parts,
                                   const std::vector<int>& targets, int bound) {
        return quantum_to_json(cardinality_filter(ColorCoarsening{parts, targets}, bound));
    }, py::arg("parts"), py::arg("targets"), py::arg("bound"),
       "interpolation filter for per-part vertex counts");
    m.def("ie_filter", [](const std::string& base, int edge_cap) {
        return quantum_to_json(
            inclusion_exclusion_filter(ColorfulGraph(graph_arg(base)), edge_cap));
    }, py::arg("base"), py::arg("edge_cap") = kIeEdgeCap, "inclusion-exclusion filter");

    m.def("reduce", [](const std::string& s_json, const std::string& t_json,
                       const std::string& which, const std::string& oracle_kind,
                       const std::string& oracle_pattern, const std::string& host,
                       const std::string& filter, int bound) {
        auto s = ColorfulGraph(graph_arg(s_json));
        auto t = t_json.empty() ? s : ColorfulGraph(graph_arg(t_json));
        auto p = oracle_arg(oracle_kind, oracle_pattern);
        ReductionCase rc = which == "a" ? ReductionCase::A
                           : which == "b" ? ReductionCase::B
                                          : ReductionCase::C;
        FilterKind fk = filter == "ie" ? FilterKind::InclusionExclusion : FilterKind::Cfi;
        int sb = bound > 0 ? bound : std::max(p.support_bound(), t.n());
        return report_dict(reduce_hom(s, t, sb, p, rc, graph_arg(host), fk));
    }, py::arg("s"), py::arg("t") = std::string(), py::arg("case") = "a",
       py::arg("oracle_kind") = "hom", py::arg("oracle_pattern") = std::string(),
       py::arg("host") = std::string(), py::arg("filter") = "cfi", py::arg("bound") = -1,
       "recover hom(S,G) from a motif-parameter oracle");

    m.def("minor_lift", [](const std::string& a, const std::string& b,
                           const std::vector<std::vector<int>>& branch_sets,
                           const std::string& host) {
        return graph_to_json(minor_lift(ColorfulGraph(graph_arg(a)),
                                        ColorfulGraph(graph_arg(b)), branch_sets,
                                        graph_arg(host)));
    }, py::arg("a"), py::arg("b"), py::arg("branch_sets"), py::arg("host"),
       "host lifting along a minor model, as graph JSON");

    m.def("verify", [](const std::string& suite, std::uint64_t seed, int corpus_random,
                       int instances) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.corpus_random = corpus_random;
        opts.reduction_instances = instances;
        auto report = verify_suite(suite, opts);
        py::list checks;
        for (const auto& c : report.checks) {
            py::dict d;
            d["suite"] = c.suite;
            d["name"] = c.name;
            d["passed"] = c.passed;
            d["instances"] = c.instances;
            d["failures"] = c.failures;
            d["seconds"] = c.seconds;
            d["counterexample"] = c.detail;
            checks.append(d);
        }
        py::dict out;
        out["passed"] = report.all_passed();
        out["checks"] = checks;
        return out;
    }, py::arg("suite") = "all", py::arg("seed") = 0, py::arg("corpus_random") = 10,
       py::arg("instances") = 5, "run a verification suite at configurable sizes");
}
