#pragma once

// Executable checks over a corpus of rings, and the census of classification
// reports. Every check is deterministic for a given corpus; failures carry the
// ring spec and element indices needed to replay them.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/spec.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

enum class CheckId {
    P_OSNOVE,
    P_PRVA,
    P_NILIDEAL,
    P_RADIKAL,
    L_MOCNA,
    P_PIREG,
    P_ABEL,
    P_BOUNDED,
    C_PI,
    P_KOTI,
    P_CENTER,
    P_UNQ1,
    P_UNQ2,
    Q_SYMMETRY,
    Q_CORNER,
    P_EXPIREG,
};

inline constexpr CheckId all_checks[] = {
    CheckId::P_OSNOVE, CheckId::P_PRVA,    CheckId::P_NILIDEAL, CheckId::P_RADIKAL,
    CheckId::L_MOCNA,  CheckId::P_PIREG,   CheckId::P_ABEL,     CheckId::P_BOUNDED,
    CheckId::C_PI,     CheckId::P_KOTI,    CheckId::P_CENTER,   CheckId::P_UNQ1,
    CheckId::P_UNQ2,   CheckId::Q_SYMMETRY, CheckId::Q_CORNER,  CheckId::P_EXPIREG,
};

const char* to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view text);
/// Experiments report statistics and never fail.
bool is_experiment(CheckId id);

/// Ring spec plus element indices; `note` says what went wrong.
struct Counterexample {
    std::string spec;
    std::vector<Index> elements;
    std::string note;

    std::string render() const;
};

enum class Verdict { Pass, Fail, Experiment };
const char* to_string(Verdict v);

struct PropositionCheck {
    CheckId id;
    std::vector<std::string> corpus;
    Verdict verdict = Verdict::Pass;
    std::optional<Counterexample> counterexample;
    /// One-line summary, e.g. "16 rings, 1234 elements".
    std::string summary;
    /// Per-ring lines (statistics, tables, skipped rings), in corpus order.
    std::vector<std::string> details;
};

/// A built corpus member, or the reason it could not be built.
struct CorpusEntry {
    SpecPtr spec;
    std::string name;
    std::shared_ptr<const RingContext> ctx;  // null when the build failed
    std::optional<std::string> error;
};

class Corpus {
public:
    explicit Corpus(const std::vector<SpecPtr>& specs, const BuildOptions& options = BuildOptions::from_environment());
    const std::vector<CorpusEntry>& entries() const { return entries_; }
    const BuildOptions& options() const { return options_; }

private:
    std::vector<CorpusEntry> entries_;
    BuildOptions options_;
};

std::vector<SpecPtr> default_corpus();

PropositionCheck run_check(CheckId id, const Corpus& corpus);
inline PropositionCheck run_check(CheckId id, const std::vector<SpecPtr>& specs) {
    return run_check(id, Corpus(specs));
}

/// One report per spec in input order; build failures set `error`.
std::vector<ClassificationReport> census(const std::vector<SpecPtr>& specs,
                                         const BuildOptions& options = BuildOptions::from_environment());

/// The ledger text: one verdict line per check followed by its details.
std::string render_ledger(const std::vector<PropositionCheck>& checks);

}  // namespace ringlab
