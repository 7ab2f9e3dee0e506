#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/grammar.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/report.hpp"

namespace py = pybind11;
using namespace ringlab;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<SpecPtr> parse_all(const std::vector<std::string>& texts) {
    std::vector<SpecPtr> out;
    for (const auto& t : texts) out.push_back(parse_spec(t));
    return out;
}

RingContext context(const std::string& text) {
    return RingContext(build(parse_spec(text), BuildOptions::from_environment()));
}

py::object wncl(const std::string& text, Index index, bool alternate) {
    const auto ctx = context(text);
    const auto& r = ctx.ring();
    const Element a = r.element(index);
    const auto w = alternate ? wncl_witness_alt(ctx, a) : wncl_witness(ctx, a);
    if (!w) return py::none();
    py::dict d;
    d["e"] = w->e.index;
    d["q"] = w->q.index;
    d["x"] = w->x.index;
    d["form"] = alternate ? "alternate" : "primal";
    return d;
}

std::vector<CheckId> check_ids(const std::vector<std::string>& names) {
    if (names.empty()) return {std::begin(all_checks), std::end(all_checks)};
    std::vector<CheckId> ids;
    for (const auto& n : names) {
        const auto id = parse_check_id(n);
        if (!id) throw py::value_error("unknown check id: " + n);
        ids.push_back(*id);
    }
    return ids;
}

std::vector<PropositionCheck> run(const std::vector<std::string>& names, const std::vector<std::string>& corpus) {
    const Corpus c(corpus.empty() ? default_corpus() : parse_all(corpus));
    std::vector<PropositionCheck> out;
    for (auto id : check_ids(names)) out.push_back(run_check(id, c));
    return out;
}

}  // namespace

PYBIND11_MODULE(ringlab, m) {
    m.doc() = "Finite ring classification and witness search";

    // Later registrations are tried first, so the base class goes first.
    py::register_exception<RingError>(m, "RingError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

    m.def("parse", [](const std::string& text) { return to_string(*parse_spec(text)); },
          "Canonical form of a ring spec", py::arg("spec"));
    m.def("order", [](const std::string& text) { return context(text).ring().order(); }, py::arg("spec"));
    m.def("classify",
          [](const std::string& text) { return to_python(to_json(classify(context(text)))); },
          "Classification report as a dict", py::arg("spec"));
    m.def("wncl_witness", [](const std::string& s, Index i) { return wncl(s, i, false); },
          "Lexicographically first primal witness, or None", py::arg("spec"), py::arg("index"));
    m.def("wncl_witness_alt", [](const std::string& s, Index i) { return wncl(s, i, true); },
          "Lexicographically first alternate witness, or None", py::arg("spec"), py::arg("index"));
    m.def("default_corpus", [] {
        std::vector<std::string> out;
        for (const auto& s : default_corpus()) out.push_back(to_string(*s));
        return out;
    });
    m.def(
        "verify",
        [](const std::vector<std::string>& props, const std::vector<std::string>& corpus) {
            py::list out;
            for (const auto& c : run(props, corpus)) {
                py::dict d;
                d["id"] = to_string(c.id);
                d["verdict"] = to_string(c.verdict);
                d["summary"] = c.summary;
                d["counterexample"] = c.counterexample ? py::object(py::str(c.counterexample->render())) : py::none();
                d["details"] = c.details;
                out.append(d);
            }
            return out;
        },
        "Run checks; empty lists mean all checks and the default corpus", py::arg("props") = std::vector<std::string>{},
        py::arg("corpus") = std::vector<std::string>{});
    m.def(
        "ledger",
        [](const std::vector<std::string>& props, const std::vector<std::string>& corpus) {
            return render_ledger(run(props, corpus));
        },
        py::arg("props") = std::vector<std::string>{}, py::arg("corpus") = std::vector<std::string>{});
    m.def(
        "census",
        [](const std::vector<std::string>& specs, bool csv) -> py::object {
            const auto reports = census(specs.empty() ? default_corpus() : parse_all(specs));
            if (csv) return py::str(render_csv(reports));
            py::list out;
            for (const auto& r : reports) out.append(to_python(to_json(r)));
            return out;
        },
        py::arg("specs") = std::vector<std::string>{}, py::arg("csv") = false);
}
