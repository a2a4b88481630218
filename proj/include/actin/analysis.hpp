#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "actin/engine.hpp"
#include "actin/rule.hpp"

namespace actin {

inline constexpr std::size_t kBlockKinds = 512;

/// Occurrences of every 3x3 block of a space-time pattern.
///
/// Block keys are the nine cells read row by row, top-left cell in bit 8.
struct BlockCensus {
    std::array<std::uint64_t, kBlockKinds> counts{};
    std::uint64_t total = 0;

    std::size_t kinds() const noexcept;

    /// Builds a census from explicit (key, count) pairs.
    static BlockCensus from_counts(std::span<const std::pair<std::uint16_t, std::uint64_t>> entries);
};

/// Which pattern of a run feeds the census.
enum class CensusSource { ChainA, ChainB, Stacked };

CensusSource parse_census_source(const std::string& text);

/// All overlapping 3x3 windows: periodic in space, not in time, so total = (T-2)*n.
BlockCensus block_census(const SpaceTimePattern& pattern);
BlockCensus block_census(const PatternPair& patterns, CensusSource source);

/// Shannon entropy of the block distribution, in nats.
double shannon_entropy(const BlockCensus& census);
/// Simpson diversity 1 - sum p^2 of the block distribution.
double simpson_diversity(const BlockCensus& census);

// Damage spreading -----------------------------------------------------------

struct DamageReport {
    std::vector<std::size_t> hamming_per_step;     // differing cells over both chains
    std::vector<std::size_t> cone_width_per_step;  // minimal circular arc of differing columns
    std::size_t max_cone_width = 0;
    std::size_t final_hamming = 0;
    PatternPair base;
    PatternPair perturbed;
};

/// Compares the run from RandomHalf(rng_seed) with the same run whose chain-A
/// cell n/2 is flipped. With `flip` false both runs start identical.
DamageReport damage_experiment(const Rule& rule, const MemoryModel& model, std::size_t n, std::size_t rows,
                               std::uint64_t rng_seed, bool flip = true);

/// Per-step damage statistics of two already computed runs.
DamageReport compare_runs(PatternPair base, PatternPair perturbed);

void write_damage_csv(std::ostream& out, const DamageReport& report);

// Rule-space sweep ------------------------------------------------------------

struct SweepRow {
    Rule rule;
    double entropy = 0.0;
    double diversity = 0.0;
};

struct SweepOptions {
    std::size_t n = 300;
    std::size_t rows = 1000;
    std::uint64_t rng_seed = 0;
    CensusSource census = CensusSource::ChainA;
    unsigned jobs = 0;  // 0: hardware concurrency
};

/// One random run per rule (RandomHalf(rng_seed XOR rule index)) and its H, D.
SweepRow sweep_rule(const Rule& rule, const MemoryModel& model, const SweepOptions& options);

/// Rows in enumeration order regardless of `jobs`.
std::vector<SweepRow> sweep(const MemoryModel& model, const SweepOptions& options,
                            const std::vector<Rule>& rules = enumerate_rules());

void write_sweep_csv(std::ostream& out, const MemoryModel& model, const std::vector<SweepRow>& rows);

// Excitability -------------------------------------------------------------------

/// Fraction of rules in a set whose resting (p_rest) or excited (p_excited)
/// cell becomes or stays excited with k excited neighbours.
struct ExcitabilityProfile {
    std::array<double, 5> p_rest{};
    std::array<double, 5> p_excited{};
};

ExcitabilityProfile excitability_profile(std::span<const Rule> rules);

}  // namespace actin
