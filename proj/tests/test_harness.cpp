#include <doctest.h>

#include <sstream>

#include "ringlab/grammar.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

std::vector<SpecPtr> specs(std::initializer_list<const char*> names) {
    std::vector<SpecPtr> out;
    for (auto n : names) out.push_back(parse_spec(n));
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("check ids round-trip") {
    for (auto id : all_checks) CHECK(parse_check_id(to_string(id)) == id);
    CHECK_FALSE(parse_check_id("P_NOPE"));
    CHECK(is_experiment(CheckId::Q_SYMMETRY));
    CHECK(is_experiment(CheckId::Q_CORNER));
    CHECK_FALSE(is_experiment(CheckId::P_RADIKAL));
}

TEST_CASE("small corpus checks pass") {
    auto r = run_check(CheckId::P_RADIKAL, specs({"Z4", "Z6", "T2(Z2)", "M2(Z2)"}));
    CHECK(r.verdict == Verdict::Pass);
    CHECK_FALSE(r.counterexample);
    CHECK(r.summary.find("4 rings") != std::string::npos);

    r = run_check(CheckId::P_UNQ1, specs({"Z4", "M2(Z2)"}));
    CHECK(r.verdict == Verdict::Pass);

    r = run_check(CheckId::L_MOCNA, specs({"Z6", "T2(Z2)", "Z2xZ2"}));
    CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("non-unital rings are skipped with a reason") {
    const auto r = run_check(CheckId::P_OSNOVE, specs({"Z4", "Ideal(Z4,{2})"}));
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.summary.find("1 rings") != std::string::npos);
    bool mentioned = false;
    for (const auto& d : r.details)
        if (d.find("skipped") != std::string::npos && d.find("Ideal(Z4,{2})") != std::string::npos) mentioned = true;
    CHECK(mentioned);
}

TEST_CASE("build failures fail a check with a replayable counterexample") {
    BuildOptions options;
    options.max_order = 16;
    const Corpus corpus(specs({"Z2", "M2(Z4)"}), options);
    REQUIRE(corpus.entries().size() == 2);
    CHECK(corpus.entries()[0].ctx);
    CHECK_FALSE(corpus.entries()[1].ctx);
    REQUIRE(corpus.entries()[1].error);
    const auto r = run_check(CheckId::P_PRVA, corpus);
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->spec == "M2(Z4)");
    CHECK(r.counterexample->render().find("replay: spec=\"M2(Z4)\"") == 0);

    const auto reports = census(specs({"Z2", "M2(Z4)"}), options);
    REQUIRE(reports.size() == 2);
    CHECK_FALSE(reports[0].error);
    CHECK(reports[1].error);
    CHECK(csv_row(reports[1]).find("error: ") != std::string::npos);
    const auto j = to_json(reports[1]);
    CHECK(j.contains("error"));
    CHECK_FALSE(j.contains("properties"));
}

TEST_CASE("experiments never fail") {
    for (auto id : {CheckId::Q_SYMMETRY, CheckId::Q_CORNER}) {
        const auto r = run_check(id, specs({"Z2", "T2(Z2)", "Ideal(Z4,{2})"}));
        CHECK(r.verdict == Verdict::Experiment);
        CHECK_FALSE(r.counterexample);
    }
}

TEST_CASE("census values") {
    auto r = census(specs({"Z2"}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].get(Property::NilClean) == Tri::True);
    CHECK(r[0].get(Property::WeaklyNilClean) == Tri::True);

    r = census(specs({"Z3"}));
    CHECK(r[0].get(Property::NilClean) == Tri::False);
    CHECK(r[0].get(Property::WeaklyNilClean) == Tri::True);
    CHECK(r[0].get(Property::StronglyRegular) == Tri::True);

    r = census(specs({"M2(Z2)"}));
    CHECK(r[0].order == 16);
    CHECK(r[0].idempotents == 8);
    CHECK(r[0].nilpotents == 4);
    CHECK(r[0].units == 6u);
    CHECK(r[0].radical == 1u);
    CHECK(r[0].get(Property::Abelian) == Tri::False);

    r = census(specs({"M2(Z3)"}));
    CHECK(r[0].order == 81);

    r = census(specs({"Ideal(Z4,{2})"}));
    CHECK_FALSE(r[0].unital);
    CHECK_FALSE(r[0].units);
    CHECK(r[0].get(Property::Clean) == Tri::NotApplicable);
}

TEST_CASE("default corpus census renders") {
    const auto corpus = default_corpus();
    CHECK(corpus.size() == 17);
    const auto reports = census(corpus);
    const auto csv = lines(render_csv(reports));
    REQUIRE(csv.size() == 18);
    CHECK(csv[0] == csv_header);
    bool quoted = false;
    for (const auto& l : csv)
        if (l.rfind("\"Ideal(Z4,{2})\",", 0) == 0) quoted = true;
    CHECK(quoted);
    CHECK(lines(render_table(reports)).size() == 18);

    const auto j = to_json(reports[0]);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"spec", "order", "properties", "counts", "bounded_index", "timings"});
    CHECK(j["timings"].empty());
    for (auto p : all_properties) CHECK(j["properties"].contains(property_key(p)));
    for (auto k : {"id", "nil", "unit", "center", "radical"}) CHECK(j["counts"].contains(k));
    const auto ideal = to_json(reports.back());
    CHECK(ideal["counts"]["unit"].is_null());
    CHECK(ideal["properties"]["clean"].is_null());
}

TEST_CASE("ledger is deterministic") {
    const auto corpus = specs({"Z4", "Z6", "T2(Z2)", "Triv(Z2)"});
    auto run = [&] {
        std::vector<PropositionCheck> checks;
        const Corpus c(corpus);
        for (auto id : all_checks) checks.push_back(run_check(id, c));
        return render_ledger(checks);
    };
    const auto a = run();
    CHECK(a == run());
    CHECK(lines(a).size() >= std::size(all_checks));
    for (auto id : all_checks) CHECK(a.find(to_string(id)) != std::string::npos);
}
