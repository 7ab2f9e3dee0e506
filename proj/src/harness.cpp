#include "ringlab/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ringlab/constructive.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/grammar.hpp"

namespace ringlab {

namespace {

constexpr std::pair<CheckId, const char*> check_names[] = {
    {CheckId::P_OSNOVE, "P_OSNOVE"},     {CheckId::P_PRVA, "P_PRVA"},
    {CheckId::P_NILIDEAL, "P_NILIDEAL"}, {CheckId::P_RADIKAL, "P_RADIKAL"},
    {CheckId::L_MOCNA, "L_MOCNA"},       {CheckId::P_PIREG, "P_PIREG"},
    {CheckId::P_ABEL, "P_ABEL"},         {CheckId::P_BOUNDED, "P_BOUNDED"},
    {CheckId::C_PI, "C_PI"},             {CheckId::P_KOTI, "P_KOTI"},
    {CheckId::P_CENTER, "P_CENTER"},     {CheckId::P_UNQ1, "P_UNQ1"},
    {CheckId::P_UNQ2, "P_UNQ2"},         {CheckId::Q_SYMMETRY, "Q_SYMMETRY"},
    {CheckId::Q_CORNER, "Q_CORNER"},     {CheckId::P_EXPIREG, "P_EXPIREG"},
};

}  // namespace

const char* to_string(CheckId id) {
    for (const auto& [key, name] : check_names)
        if (key == id) return name;
    return "?";
}

std::optional<CheckId> parse_check_id(std::string_view text) {
    for (const auto& [key, name] : check_names)
        if (text == name) return key;
    return std::nullopt;
}

bool is_experiment(CheckId id) { return id == CheckId::Q_SYMMETRY || id == CheckId::Q_CORNER; }

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Experiment: return "experiment";
    }
    return "?";
}

std::string Counterexample::render() const {
    return fmt::format("replay: spec=\"{}\" elements=[{}]: {}", spec, fmt::join(elements, ","), note);
}

Corpus::Corpus(const std::vector<SpecPtr>& specs, const BuildOptions& options) : options_(options) {
    for (const auto& s : specs) {
        CorpusEntry entry{s, to_string(*s), nullptr, std::nullopt};
        try {
            entry.ctx = std::make_shared<const RingContext>(build(*s, options));
        } catch (const RingError& e) {
            entry.error = e.what();
        }
        entries_.push_back(std::move(entry));
    }
}

std::vector<SpecPtr> default_corpus() {
    static const char* const names[] = {
        "Z2",      "Z3",      "Z4",          "Z6",          "Z8",     "Z12",
        "Z2xZ2",   "Z2xZ4",   "Triv(Z2)",    "Z2[x]/(x^2)", "Z4[x]/(x^2)",
        "T2(Z2)",  "T2(Z4)",  "M2(Z2)",      "M2(Z3)",      "M2(Z4)", "Ideal(Z4,{2})",
    };
    std::vector<SpecPtr> out;
    for (const char* n : names) out.push_back(parse_spec(n));
    return out;
}

namespace {

using Note = std::optional<std::string>;

struct Run {
    PropositionCheck& out;
    std::size_t rings = 0;
    std::size_t elements = 0;
    std::map<std::string, std::vector<std::string>> skipped;  // reason -> rings
    std::vector<std::string> skip_order;

    bool failed() const { return out.counterexample.has_value(); }

    void fail(const CorpusEntry& entry, std::vector<Index> els, std::string note) {
        if (!out.counterexample) out.counterexample = Counterexample{entry.name, std::move(els), std::move(note)};
    }

    void skip(const CorpusEntry& entry, const std::string& reason) {
        if (!skipped.count(reason)) skip_order.push_back(reason);
        skipped[reason].push_back(entry.name);
    }

    void detail(std::string line) { out.details.push_back(std::move(line)); }
};

// Runs fn, turning a returned note or a thrown RingError into a failure.
template <class Fn>
bool guarded(Run& run, const CorpusEntry& entry, std::vector<Index> els, Fn fn) {
    try {
        if (Note note = fn()) {
            run.fail(entry, std::move(els), *note);
            return false;
        }
        return true;
    } catch (const RingError& e) {
        run.fail(entry, std::move(els), e.what());
        return false;
    }
}

template <class Pred>
std::optional<Element> first_without(const FiniteRing& ring, Pred pred) {
    for (Index i = 0; i < ring.order(); ++i)
        if (!pred(Element{i})) return Element{i};
    return std::nullopt;
}

std::optional<Element> wncl_failure(const RingContext& ctx) {
    return first_without(ctx.ring(), [&](Element a) { return find_wncl(ctx, a).has_value(); });
}
std::optional<Element> pireg_failure(const RingContext& ctx) {
    return first_without(ctx.ring(), [&](Element a) { return find_pi_regular(ctx, a).has_value(); });
}
std::optional<Element> spireg_failure(const RingContext& ctx) {
    return first_without(ctx.ring(), [&](Element a) { return find_strong_pi(ctx, a).has_value(); });
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::vector<Index> indices(std::initializer_list<Element> els) {
    std::vector<Index> out;
    for (auto e : els) out.push_back(e.index);
    return out;
}

// Strictly upper triangular matrices, the module part of a trivial extension,
// the ideal generated by X in a truncated polynomial ring, and J(R) otherwise.
std::optional<std::pair<Ideal, std::string>> canonical_nil_ideal(const CorpusEntry& entry, const BuildOptions& options) {
    const auto& ring = entry.ctx->ring();
    auto filter = [&](auto keep) {
        std::vector<Element> members;
        for (Index i = 0; i < ring.order(); ++i)
            if (keep(Element{i})) members.push_back(Element{i});
        return Ideal::from_members(ring, std::move(members));
    };
    const auto& node = entry.spec->node;
    if (const auto* t = std::get_if<spec_node::Triangular>(&node)) {
        const FiniteRing base = build(*t->base, options);
        return std::pair{filter([&](Element x) {
                             const auto m = layout::triangular_entries(base, t->k, x);
                             for (std::uint32_t i = 0; i < t->k; ++i)
                                 if (m[std::size_t(i) * t->k + i] != base.zero()) return false;
                             return true;
                         }),
                         std::string("strictly upper triangular")};
    }
    if (const auto* t = std::get_if<spec_node::TrivialExt>(&node)) {
        const FiniteRing base = build(*t->base, options);
        return std::pair{filter([&](Element x) { return layout::trivial_ext_parts(base, x).first == base.zero(); }),
                         std::string("module part")};
    }
    if (const auto* p = std::get_if<spec_node::PolyMod>(&node)) {
        const FiniteRing base = build(*p->base, options);
        std::vector<Element> coeffs(p->n, base.zero());
        if (p->n > 1) coeffs[1] = base.one();
        const Element x = layout::poly_element(base, p->n, coeffs);
        return std::pair{ideal_generated(ring, std::span<const Element>(&x, 1)), std::string("(x)")};
    }
    if (ring.unital()) return std::pair{entry.ctx->radical(), std::string("J(R)")};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Individual checks. Each handles one corpus ring.

void check_osnove(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    std::size_t wncl = 0, exchange = 0;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            if (!find_wncl(ctx, a)) return std::nullopt;
            ++wncl;
            const auto w = find_exchange(ctx, a);
            if (!w || !check(ring, a, *w)) return "weakly nil clean element without exchange witness";
            ++exchange;
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: {} weakly nil clean, {} exchange", en.name, wncl, exchange));
}

void check_prva(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    std::size_t both = 0;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            const auto primal = wncl_witness(ctx, a);
            const auto alt = wncl_witness_alt(ctx, a);
            if (primal && !check(ring, a, *primal)) return "primal witness does not validate";
            if (alt && !check(ring, a, *alt)) return "alternate witness does not validate";
            if (primal.has_value() != alt.has_value())
                return fmt::format("primal {} but alternate {}", primal ? "present" : "absent",
                                   alt ? "present" : "absent");
            if (primal) ++both;
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: {}/{} elements with both forms", en.name, both, ring.order()));
}

void check_nilideal(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    std::optional<std::pair<Ideal, std::string>> chosen;
    if (!guarded(run, en, {}, [&]() -> Note {
            chosen = canonical_nil_ideal(en, options);
            if (!chosen) return "no nil ideal chosen";
            if (!is_nil_ideal(ring, chosen->first)) return fmt::format("{} is not nil", chosen->second);
            return std::nullopt;
        }))
        return;
    const Ideal& ideal = chosen->first;
    const QuotientRing top = construct::quotient(ring, ideal, options);
    const RingContext top_ctx(top.ring);

    // R weakly nil clean iff R/I is, both decided independently.
    const auto r_fail = wncl_failure(ctx);
    const auto q_fail = wncl_failure(top_ctx);
    if (r_fail.has_value() != q_fail.has_value())
        return run.fail(en, r_fail ? indices({*r_fail}) : std::vector<Index>{},
                        fmt::format("R weakly nil clean = {} but R/I = {}", yes_no(!r_fail), yes_no(!q_fail)));

    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            const auto qw = wncl_witness(top_ctx, top.project(a));
            if (!qw) return std::nullopt;
            const auto lifted = lift_wncl_witness(ring, ideal, top, a, *qw);
            if (!check(ring, a, lifted)) return "lifted witness does not validate";
            return std::nullopt;
        });
        if (!ok) return;
    }

    std::size_t lifts = 0, identical = 0;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element x{i};
        if (!ideal.contains(ring.sub(ring.mul(x, x), x))) continue;
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            const auto by_iteration = lift_idempotent_by_iteration(ring, ideal, x);
            const auto by_scan = lift_idempotent_by_scan(ring, ideal, x);
            if (!by_scan) return "no idempotent congruent to x";
            if (by_iteration) {
                if (!ideal.contains(ring.sub(*by_iteration, *by_scan)))
                    return fmt::format("iteration gives {}, scan gives {}", by_iteration->index, by_scan->index);
                if (*by_iteration == *by_scan) ++identical;
            }
            const Element e = lift_idempotent(ring, ideal, x);
            if (!ring.is_idempotent(e) || !ideal.contains(ring.sub(e, x))) return "lift is not an idempotent lift";
            ++lifts;
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: I = {} (|I| = {}), R and R/I weakly nil clean = {}, {} idempotent lifts ({} identical)",
                           en.name, chosen->second, ideal.size(), yes_no(!r_fail), lifts, identical));
}

void check_radikal(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    guarded(run, en, {}, [&]() -> Note {
        const Ideal& j = ctx.radical();
        if (!is_nil_ideal(ring, j)) {
            for (auto x : j.members)
                if (!ring.is_nilpotent(x)) {
                    run.fail(en, {x.index}, "element of J(R) is not nilpotent");
                    return std::nullopt;
                }
        }
        const QuotientRing top = construct::quotient(ring, j, options);
        const RingContext top_ctx(top.ring);
        if (auto bad = wncl_failure(top_ctx)) {
            run.fail(en, {top.representative(*bad).index}, "coset is not weakly nil clean in R/J(R)");
            return std::nullopt;
        }
        const auto& jj = top_ctx.radical();
        if (jj.size() != 1) return fmt::format("J(R/J(R)) has {} elements", jj.size());
        run.elements += ring.order();
        std::vector<Index> members;
        for (auto x : j.members) members.push_back(x.index);
        run.detail(fmt::format("{}: J = {{{}}}, R/J order {}", en.name, fmt::join(members, ","), top.ring.order()));
        return std::nullopt;
    });
}

void check_mocna(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    if (ring.order() > 64) return run.skip(en, "order above 64");
    std::map<Index, std::pair<SubRing, std::shared_ptr<RingContext>>> corners;
    std::size_t pairs = 0;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        std::vector<Index> first(ring.order(), ~Index{0});
        for (Index s = ring.order(); s-- > 0;) first[ring.mul(Element{s}, a).index] = s;
        for (auto e : ctx.idempotents()) {
            if (first[e.index] == ~Index{0}) continue;
            const Element s{first[e.index]};
            const bool ok = guarded(run, en, indices({a, e}), [&]() -> Note {
                const Element f = ring.complement(e);
                auto it = corners.find(f.index);
                if (it == corners.end()) {
                    SubRing c = construct::corner(ring, f, options);
                    auto c_ctx = std::make_shared<RingContext>(c.ring);
                    it = corners.emplace(f.index, std::pair{std::move(c), std::move(c_ctx)}).first;
                }
                const auto& [corner, corner_ctx] = it->second;
                const Element faf = ring.mul(f, a, f);
                const auto cw = wncl_witness(*corner_ctx, corner.from_parent(faf));
                if (!cw) return "faf is not weakly nil clean in fRf";
                const WnclWitness lifted{corner.to_parent(cw->e), corner.to_parent(cw->q),
                                         corner.to_parent(cw->x), WitnessForm::Primal};
                const auto w = wncl_from_corner(ring, a, e, s, lifted);
                if (!check(ring, a, w)) return "composed witness does not validate";
                ++pairs;
                return std::nullopt;
            });
            if (!ok) return;
        }
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: {} (a, e) pairs, {} corners", en.name, pairs, corners.size()));
}

void check_pireg(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    std::size_t constructed = 0;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            const auto pw = pi_regular_witness(ctx, a);
            if (!pw) return std::nullopt;
            const auto searched = wncl_witness(ctx, a);
            if (!searched || !check(ring, a, *searched)) return "pi-regular element without primal witness";
            if (ring.unital()) {
                const auto built = wncl_from_pi_regular(ring, a, *pw);
                if (!check(ring, a, built)) return "constructed witness does not validate";
                ++constructed;
            }
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(ring.unital() ? fmt::format("{}: {} constructed witnesses", en.name, constructed)
                             : fmt::format("{}: searched witnesses only (no identity)", en.name));
}

void check_abel(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    if (!ctx.abelian()) return run.skip(en, "not abelian");
    const auto w = wncl_failure(ctx);
    const auto s = spireg_failure(ctx);
    if (w.has_value() != s.has_value())
        return run.fail(en, indices({w ? *w : *s}),
                        fmt::format("weakly nil clean = {} but strongly pi-regular = {}", yes_no(!w), yes_no(!s)));
    run.elements += ring.order();
    run.detail(fmt::format("{}: weakly nil clean = strongly pi-regular = {}", en.name, yes_no(!w)));
}

void check_bounded(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    std::uint32_t index = 1;
    for (auto x : ctx.nilpotents().members) index = std::max(index, ctx.nilpotents().index_of(x));
    const auto w = wncl_failure(ctx);
    const auto s = spireg_failure(ctx);
    if (!w && s)
        return run.fail(en, {s->index}, "weakly nil clean ring of bounded index is not strongly pi-regular");
    run.elements += ring.order();
    run.detail(fmt::format("{}: bounded index {}, strongly pi-regular = {}", en.name, index, yes_no(!s)));
}

void check_cpi(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    if (ring.order() > 16) return run.skip(en, "order above 16");
    guarded(run, en, {}, [&]() -> Note {
        const RingContext m(construct::matrix_ring(ring, 2, options));
        const bool v[6] = {!wncl_failure(ctx),  !pireg_failure(ctx),  !spireg_failure(ctx),
                           !wncl_failure(m),    !pireg_failure(m),    !spireg_failure(m)};
        const auto line = fmt::format("R: wncl={} pireg={} spireg={}; M2(R): wncl={} pireg={} spireg={}",
                                      yes_no(v[0]), yes_no(v[1]), yes_no(v[2]), yes_no(v[3]), yes_no(v[4]),
                                      yes_no(v[5]));
        if (std::any_of(v, v + 6, [&](bool b) { return b != v[0]; })) return "verdicts disagree: " + line;
        run.elements += ring.order() + m.ring().order();
        run.detail(fmt::format("{}: {}", en.name, line));
        return std::nullopt;
    });
}

void check_koti(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    if (!ctx.abelian()) return run.skip(en, "not abelian");
    if (ring.order() > 8) return run.skip(en, "order above 8");
    const FiniteRing matrix = construct::matrix_ring(ring, 2, options);
    const RingContext m_ctx(matrix);
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        const bool ok = guarded(run, en, {i}, [&]() -> Note {
            const Element diag = layout::matrix_element(ring, 2, std::vector<Element>{a, ring.zero(), ring.zero(), ring.zero()});
            const auto primal = find_wncl(m_ctx, matrix.neg(diag));
            if (!primal) return "diag(-a, 0) has no witness in M2(R)";
            const auto alt = alt_from_primal(matrix, diag, *primal);
            const auto out = extract_from_matrix(ctx, 2, a, matrix, alt);
            if (!check(ring, a, out)) return "extracted witness does not validate";
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: {} extracted witnesses", en.name, ring.order()));
}

void check_center(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    const SubRing z = center_ring(ctx);
    for (auto a : ctx.center()) {
        const bool ok = guarded(run, en, {a.index}, [&]() -> Note {
            const auto w = wncl_witness(ctx, a);
            if (!w) return "central element without witness in R";
            const auto cw = center_witness(ctx, z, a, *w);
            if (!check(z.ring, cw.element, cw.witness)) return "center witness does not validate";
            for (Index r = 0; r < ring.order(); ++r)
                if (ring.mul(cw.idempotent, Element{r}) != ring.mul(Element{r}, cw.idempotent))
                    return fmt::format("extracted idempotent {} is not central", cw.idempotent.index);
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ctx.center().size();
    run.detail(fmt::format("{}: {} central elements", en.name, ctx.center().size()));
}

void check_unq1(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    const auto bad = first_without(ring, [&](Element a) { return unique_idempotent_wncl(ctx, a, 2).distinct == 1; });
    const bool unique = !bad;
    const bool abelian = ctx.abelian();
    if (unique != abelian)
        return run.fail(en, bad ? indices({*bad}) : std::vector<Index>{},
                        fmt::format("unique idempotent = {} but abelian = {}", yes_no(unique), yes_no(abelian)));
    run.elements += ring.order();
    run.detail(fmt::format("{}: unique idempotent = abelian = {}", en.name, yes_no(unique)));
}

void check_unq2(Run& run, const CorpusEntry& en) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    const auto bad = first_without(ring, [&](Element a) { return unique_nilpotent_wncl(ctx, a, 2).distinct == 1; });
    const auto not_sreg =
        first_without(ring, [&](Element a) { return strongly_regular_witness(ctx, a).has_value(); });
    const bool unique = !bad, sreg = !not_sreg;
    run.detail(fmt::format("{:<14} uniq_q={:<5} sreg={:<5} {}", en.name, yes_no(unique), yes_no(sreg),
                           unique == sreg ? "agree" : "DISAGREE"));
    if (unique != sreg)
        return run.fail(en, bad ? indices({*bad}) : indices({*not_sreg}),
                        fmt::format("unique nilpotent = {} but strongly regular = {}", yes_no(unique), yes_no(sreg)));
    run.elements += ring.order();
}

// Experiments ---------------------------------------------------------------

struct Tally {
    std::size_t agree = 0;
    std::size_t total = 0;
};

std::string percent(const Tally& t) {
    return t.total == 0 ? "n/a" : fmt::format("{:.1f}%", 100.0 * double(t.agree) / double(t.total));
}

void check_symmetry(Run& run, const CorpusEntry& en, const BuildOptions& options, Tally& overall) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    guarded(run, en, {}, [&]() -> Note {
        const RingContext op(construct::opposite(ring, options));
        Tally wncl, dischinger;
        for (Index i = 0; i < ring.order(); ++i) {
            const Element a{i};
            ++wncl.total;
            if (find_wncl(ctx, a).has_value() == find_wncl(op, a).has_value()) ++wncl.agree;
            if (!ring.unital()) continue;
            ++dischinger.total;
            if (find_strong_pi(ctx, a).has_value() == left_strong_pi_witness(ctx, a).has_value()) ++dischinger.agree;
        }
        overall.agree += wncl.agree;
        overall.total += wncl.total;
        run.elements += ring.order();
        run.detail(fmt::format("{}: R vs Op(R) weakly nil clean {}/{} ({}), a^n in a^(n+1)R vs Ra^(n+1) {}/{}",
                               en.name, wncl.agree, wncl.total, percent(wncl), dischinger.agree, dischinger.total));
        return std::nullopt;
    });
}

void check_corner(Run& run, const CorpusEntry& en, const BuildOptions& options, Tally& corners, Tally& pairs) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    guarded(run, en, {}, [&]() -> Note {
        const bool ring_wncl = !wncl_failure(ctx);
        std::map<Index, bool> corner_wncl;
        for (auto e : ctx.idempotents()) {
            const SubRing c = construct::corner(ring, e, options);
            const RingContext c_ctx(c.ring);
            corner_wncl[e.index] = !wncl_failure(c_ctx);
        }
        Tally mine, both;
        for (auto e : ctx.idempotents()) {
            ++mine.total;
            // Corners of a weakly nil clean ring.
            if (!ring_wncl || corner_wncl[e.index]) ++mine.agree;
            // Both complementary corners weakly nil clean, then R is.
            if (corner_wncl[e.index] && corner_wncl[ring.complement(e).index]) {
                ++both.total;
                if (ring_wncl) ++both.agree;
            }
        }
        corners.agree += mine.agree;
        corners.total += mine.total;
        pairs.agree += both.agree;
        pairs.total += both.total;
        run.elements += ring.order();
        run.detail(fmt::format("{}: corners weakly nil clean {}/{}, complementary pairs giving R {}/{}", en.name,
                               mine.agree, mine.total, both.agree, both.total));
        return std::nullopt;
    });
}

void check_expireg(Run& run, const CorpusEntry& en, const BuildOptions& options) {
    const auto& ctx = *en.ctx;
    const auto& ring = ctx.ring();
    if (!ring.unital()) return run.skip(en, "no identity");
    if (ring.order() > 64) return run.skip(en, "order above 64");
    const bool ring_wncl = !wncl_failure(ctx);
    std::set<std::vector<Element>> seen;
    std::size_t ideals = 0, premise = 0;
    for (Index g = 0; g < ring.order(); ++g) {
        const Element gen{g};
        const bool ok = guarded(run, en, {g}, [&]() -> Note {
            const Ideal ideal = ideal_generated(ring, std::span<const Element>(&gen, 1));
            if (!seen.insert(ideal.members.members()).second) return std::nullopt;
            ++ideals;
            const SubRing as_ring = construct::ideal_ring(ring, {gen}, options);
            const RingContext i_ctx(as_ring.ring);
            const QuotientRing top = construct::quotient(ring, ideal, options);
            const RingContext q_ctx(top.ring);
            if (pireg_failure(i_ctx) || pireg_failure(q_ctx)) return std::nullopt;
            ++premise;
            if (!ring_wncl) return "I and R/I pi-regular but R is not weakly nil clean";
            return std::nullopt;
        });
        if (!ok) return;
    }
    run.elements += ring.order();
    run.detail(fmt::format("{}: {} principal ideals, {} with I and R/I pi-regular", en.name, ideals, premise));
}

}  // namespace

PropositionCheck run_check(CheckId id, const Corpus& corpus) {
    PropositionCheck out;
    out.id = id;
    Run run{out, 0, 0, {}, {}};
    const auto& options = corpus.options();
    Tally tally_a, tally_b;

    for (const auto& en : corpus.entries()) {
        out.corpus.push_back(en.name);
        if (!en.ctx) {
            run.fail(en, {}, "build failed: " + en.error.value_or("unknown error"));
            run.detail(fmt::format("{}: build failed: {}", en.name, en.error.value_or("unknown error")));
            continue;
        }
        ++run.rings;
        switch (id) {
        case CheckId::P_OSNOVE: check_osnove(run, en); break;
        case CheckId::P_PRVA: check_prva(run, en); break;
        case CheckId::P_NILIDEAL: check_nilideal(run, en, options); break;
        case CheckId::P_RADIKAL: check_radikal(run, en, options); break;
        case CheckId::L_MOCNA: check_mocna(run, en, options); break;
        case CheckId::P_PIREG: check_pireg(run, en); break;
        case CheckId::P_ABEL: check_abel(run, en); break;
        case CheckId::P_BOUNDED: check_bounded(run, en); break;
        case CheckId::C_PI: check_cpi(run, en, options); break;
        case CheckId::P_KOTI: check_koti(run, en, options); break;
        case CheckId::P_CENTER: check_center(run, en); break;
        case CheckId::P_UNQ1: check_unq1(run, en); break;
        case CheckId::P_UNQ2: check_unq2(run, en); break;
        case CheckId::Q_SYMMETRY: check_symmetry(run, en, options, tally_a); break;
        case CheckId::Q_CORNER: check_corner(run, en, options, tally_a, tally_b); break;
        case CheckId::P_EXPIREG: check_expireg(run, en, options); break;
        }
    }

    for (const auto& reason : run.skip_order)
        run.detail(fmt::format("skipped ({}): {}", reason, fmt::join(run.skipped[reason], ", ")));

    if (is_experiment(id)) {
        // Experiments report; an internal error is still surfaced as a detail.
        if (out.counterexample) {
            run.detail("error: " + out.counterexample->render());
            out.counterexample.reset();
        }
        out.verdict = Verdict::Experiment;
        out.summary = id == CheckId::Q_SYMMETRY
                          ? fmt::format("elementwise agreement {}/{} ({})", tally_a.agree, tally_a.total, percent(tally_a))
                          : fmt::format("corners {}/{} ({}), complementary pairs {}/{} ({})", tally_a.agree,
                                        tally_a.total, percent(tally_a), tally_b.agree, tally_b.total,
                                        percent(tally_b));
    } else {
        out.verdict = out.counterexample ? Verdict::Fail : Verdict::Pass;
        std::size_t skipped = 0;
        for (const auto& [reason, names] : run.skipped) skipped += names.size();
        out.summary = fmt::format("{} rings, {} elements", run.rings - skipped, run.elements);
    }
    return out;
}

std::vector<ClassificationReport> census(const std::vector<SpecPtr>& specs, const BuildOptions& options) {
    std::vector<ClassificationReport> out;
    for (const auto& s : specs) {
        try {
            const RingContext ctx(build(*s, options));
            out.push_back(classify(ctx));
        } catch (const RingError& e) {
            ClassificationReport r;
            r.spec = to_string(*s);
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string render_ledger(const std::vector<PropositionCheck>& checks) {
    std::string out;
    for (const auto& c : checks) {
        out += fmt::format("{:<11} {:<10} {}\n", to_string(c.id), to_string(c.verdict), c.summary);
        if (c.counterexample) out += fmt::format("    counterexample {}\n", c.counterexample->render());
        for (const auto& d : c.details) out += fmt::format("    {}\n", d);
    }
    return out;
}

}  // namespace ringlab
