#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/grammar.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/legend.hpp"
#include "ringlab/report.hpp"

namespace {

using namespace ringlab;

enum Exit { ok = 0, absent = 1, usage = 2, cap = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void print_legend(const RingSpec& spec, const BuildOptions& options) {
    const auto labels = element_legend(spec, options);
    std::cout << "elements:\n";
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << fmt::format("  {}: {}\n", i, labels[i]);
}

std::vector<SpecPtr> read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError(fmt::format("cannot read {}", path));
    std::vector<SpecPtr> out;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_spec(line));
        } catch (const ParseError& e) {
            throw UsageError(fmt::format("{}:{}: {}", path, number, e.what()));
        }
    }
    return out;
}

template <class W>
int emit(const FiniteRing& ring, Element a, const std::optional<W>& w, const std::string& head) {
    if (!w) {
        std::cout << "none\n";
        return absent;
    }
    if (!check(ring, a, *w)) throw RingError("internal error: witness failed to re-validate");
    std::cout << head << "\n" << trace(ring, a, *w);
    return ok;
}

int cmd_witness(const std::string& text, std::int64_t index, const std::string& property, bool show) {
    const auto spec = parse_spec(text);
    const auto options = BuildOptions::from_environment();
    const RingContext ctx(build(*spec, options));
    const auto& ring = ctx.ring();
    if (index < 0 || std::uint64_t(index) >= ring.order())
        throw UsageError(fmt::format("element {} out of range for {} (order {})", index, ring.spec(), ring.order()));
    if (show) print_legend(*spec, options);
    const Element a{Index(index)};
    std::cout << fmt::format("spec: {}\nelement: {}\nproperty: {}\n", ring.spec(), index, property);
    if (property == "wnc" || property == "wnc-alt") {
        const auto w = property == "wnc" ? wncl_witness(ctx, a) : wncl_witness_alt(ctx, a);
        return emit(ring, a, w, w ? fmt::format("e={} q={} x={}", w->e.index, w->q.index, w->x.index) : "");
    }
    if (property == "clean" || property == "nilclean") {
        const auto w = property == "clean" ? clean_witness(ctx, a) : nil_clean_witness(ctx, a);
        const char* second = property == "clean" ? "u" : "q";
        return emit(ring, a, w, w ? fmt::format("e={} {}={}", w->e.index, second, w->second.index) : "");
    }
    if (property == "exchange") {
        const auto w = exchange_witness(ctx, a);
        return emit(ring, a, w, w ? fmt::format("e={} r={} s={}", w->e.index, w->r.index, w->s.index) : "");
    }
    if (property == "pireg") {
        const auto w = pi_regular_witness(ctx, a);
        return emit(ring, a, w, w ? fmt::format("n={} r={}", w->n, w->r.index) : "");
    }
    if (property == "spireg") {
        const auto w = strong_pi_witness(ctx, a);
        return emit(ring, a, w,
                    w ? fmt::format("n={} r={} e={} v={}", w->n, w->r.index, w->e.index, w->corner_inverse.index)
                      : "");
    }
    const auto w = strongly_regular_witness(ctx, a);
    return emit(ring, a, w, w ? fmt::format("r={}", w->r.index) : "");
}

int cmd_classify(const std::string& text, bool json, bool timings, bool show) {
    const auto spec = parse_spec(text);
    const auto options = BuildOptions::from_environment();
    const RingContext ctx(build(*spec, options));
    if (show) print_legend(*spec, options);
    const auto report = classify(ctx);
    if (json)
        std::cout << to_json(report, timings).dump(2) << "\n";
    else
        std::cout << render_text(report, timings);
    return ok;
}

int cmd_verify(const std::string& props, const std::string& corpus_arg) {
    std::vector<CheckId> ids;
    if (props == "all") {
        ids.assign(std::begin(all_checks), std::end(all_checks));
    } else {
        std::stringstream ss(props);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto id = parse_check_id(item);
            if (!id) throw UsageError(fmt::format("unknown check '{}'", item));
            ids.push_back(*id);
        }
    }
    const auto specs = corpus_arg == "default" ? default_corpus() : read_spec_file(corpus_arg);
    const Corpus corpus(specs);
    std::vector<PropositionCheck> results;
    for (auto id : ids) {
        results.push_back(run_check(id, corpus));
        std::cout << render_ledger({results.back()}) << std::flush;
    }
    std::size_t failed = 0, experiments = 0;
    for (const auto& r : results) {
        failed += r.verdict == Verdict::Fail;
        experiments += r.verdict == Verdict::Experiment;
    }
    std::cout << fmt::format("summary: {} checks, {} failed, {} experiments\n", results.size(), failed, experiments);
    return failed ? absent : ok;
}

int cmd_census(const std::string& specs_file, bool csv) {
    const auto specs = specs_file.empty() ? default_corpus() : read_spec_file(specs_file);
    const auto reports = census(specs);
    std::cout << (csv ? render_csv(reports) : render_table(reports));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite ring laboratory: classify rings, print witnesses, verify the proposition suite."};
    app.require_subcommand(1);

    std::string spec_text, property, props = "all", corpus_arg = "default", specs_file;
    std::int64_t index = 0;
    bool json = false, timings = false, show = false, csv = false;

    auto* classify_cmd = app.add_subcommand("classify", "Decide every ring-level property of SPEC");
    classify_cmd->add_option("spec", spec_text, "Ring spec, e.g. \"M2(Z2)\"")->required();
    classify_cmd->add_flag("--json", json, "Emit JSON");
    classify_cmd->add_flag("--timings", timings, "Include per-decider wall time");
    classify_cmd->add_flag("--show-elements", show, "Print the element legend first");

    auto* witness_cmd = app.add_subcommand("witness", "Print a certificate for one element");
    witness_cmd->add_option("spec", spec_text, "Ring spec")->required();
    witness_cmd->add_option("index", index, "Element index")->required();
    witness_cmd->add_option("property", property, "Property")
        ->required()
        ->check(CLI::IsMember({"wnc", "wnc-alt", "clean", "nilclean", "exchange", "pireg", "spireg", "sreg"}));
    witness_cmd->add_flag("--show-elements", show, "Print the element legend first");

    auto* verify_cmd = app.add_subcommand("verify", "Run proposition checks over a corpus");
    verify_cmd->add_option("--props", props, "Comma-separated check ids, or all");
    verify_cmd->add_option("--corpus", corpus_arg, "default, or a file with one spec per line");

    auto* census_cmd = app.add_subcommand("census", "Classify every ring of a spec list");
    census_cmd->add_option("--specs", specs_file, "File with one spec per line (default corpus if omitted)");
    census_cmd->add_flag("--csv", csv, "Emit CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*classify_cmd) return cmd_classify(spec_text, json, timings, show);
        if (*witness_cmd) return cmd_witness(spec_text, index, property, show);
        if (*verify_cmd) return cmd_verify(props, corpus_arg);
        if (*census_cmd) return cmd_census(specs_file, csv);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return cap;
    } catch (const NonUnitalError& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const RingError& e) {
        std::cerr << e.what() << "\n";
        return absent;
    }
    return usage;
}
