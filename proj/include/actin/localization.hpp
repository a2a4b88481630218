#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "actin/engine.hpp"
#include "actin/rule.hpp"

namespace actin {

enum class LocalizationKind { Extinct, StillLife, Oscillator, Glider, Expanding, Unresolved };

inline constexpr std::size_t kLocalizationKinds = 6;

std::string to_string(LocalizationKind kind);

struct LocalizationClass {
    LocalizationKind kind = LocalizationKind::Unresolved;
    int period = 0;         // minimal period, 0 when not periodic
    long displacement = 0;  // cells moved per period, positive to the right

    /// Cells per step; 0 for stationary or aperiodic classes.
    double speed() const noexcept { return period > 0 ? static_cast<double>(displacement) / period : 0.0; }

    friend bool operator==(const LocalizationClass&, const LocalizationClass&) = default;
};

struct LocalizationReport {
    LocalizationClass cls;
    std::size_t support_a = 0;  // at the final row
    std::size_t support_b = 0;
    bool entrained = false;     // both chains active at the final row
    std::size_t components = 0; // separate localizations at the final row
};

/// Excited region of one row, as an arc over the union of both chains.
struct Localization {
    std::size_t start = 0;
    std::size_t width = 0;
};

/// Splits a configuration into localizations separated by at least `gap` empty columns.
///
/// Pieces are listed along the smallest arc holding every excited column, which
/// begins just after the longest run of empty columns.
std::vector<Localization> localizations(const FilamentState& state, std::size_t gap);

/// Width of the smallest circular arc holding every excited cell of one chain.
std::size_t support_width(const FilamentState& state, Chain chain);

struct ClassifyOptions {
    std::size_t rows = 400;        // T
    std::size_t n = 0;             // 0: 4*T
    std::size_t transient = 0;     // 0: T/2
    std::size_t max_period = 60;
    std::size_t checkpoints = 10;
    double expand_fraction = 0.25;   // monotone growth past this fraction of n is Expanding
    double min_growth_rate = 0.1;    // strict growth at every checkpoint, at least this many cells/step
    std::size_t component_gap = 8;   // empty columns that separate two localizations

    std::size_t lattice() const noexcept { return n ? n : 4 * rows; }
    std::size_t transient_steps() const noexcept { return transient ? transient : rows / 2; }
};

/// Runs the rule from `ic` and classifies the dynamics after the transient.
///
/// Periodic means: for some p <= max_period and shift d, every row in
/// [transient, transient + max_period] equals row t + p shifted back by d.
/// The smallest such p is reported; d = 0 gives StillLife (p = 1) or
/// Oscillator, d != 0 a Glider.
///
/// Failing that, the rows are split into localizations separated by at least
/// component_gap empty columns. If their number is constant and each one recurs
/// with a common p and its own shift, the run is a Glider when any of them
/// moves (displacement of the fastest), else StillLife or Oscillator.
/// Aperiodic runs whose support grows at every checkpoint (or monotonically
/// beyond expand_fraction * n) are Expanding.
LocalizationReport classify(const Rule& rule, const MemoryModel& model, const InitialCondition& ic,
                            const ClassifyOptions& options = {});
LocalizationReport classify(const Rule& rule, const MemoryModel& model, FilamentState initial,
                            const ClassifyOptions& options = {});

/// Classifies an already computed run; options.n is ignored.
LocalizationReport classify_patterns(const PatternPair& patterns, const ClassifyOptions& options = {});

/// (ahistoric verdict, memory verdict) from the same seed and lattice.
std::pair<LocalizationReport, LocalizationReport> transformation_pair(const Rule& rule, const InitialCondition& ic,
                                                                      const MemoryModel& model,
                                                                      const ClassifyOptions& options = {});

/// Every nonzero configuration of a 5-column window over both chains (1023 seeds).
std::vector<ExplicitSeed> five_cell_seeds();

using TransitionMatrix = std::array<std::array<std::uint64_t, kLocalizationKinds>, kLocalizationKinds>;

inline std::uint64_t transitions(const TransitionMatrix& m, LocalizationKind from, LocalizationKind to) {
    return m[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

struct TaxonomyCase {
    Rule rule;
    ExplicitSeed seed;
    LocalizationReport ahistoric;
    LocalizationReport memory;
};

struct TaxonomyResult {
    TransitionMatrix matrix{};
    std::vector<TaxonomyCase> cases;  // rule-major, then seed order
};

TaxonomyResult taxonomy_sweep(const std::vector<Rule>& rules, const std::vector<ExplicitSeed>& seeds,
                              const MemoryModel& model, const ClassifyOptions& options = {}, unsigned jobs = 0);

/// CSV header shared by classify and taxonomy output.
void write_classification_header(std::ostream& out);
void write_classification_row(std::ostream& out, const Rule& rule, const MemoryModel& model,
                              const InitialCondition& ic, const LocalizationReport& report);
void write_transition_matrix(std::ostream& out, const TransitionMatrix& matrix);

}  // namespace actin
