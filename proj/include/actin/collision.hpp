#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "actin/engine.hpp"
#include "actin/localization.hpp"
#include "actin/rule.hpp"

namespace actin {

/// Places two seeds with their left edges `distance` columns apart, the pair
/// centred on a lattice of n cells.
FilamentState place_pair(std::size_t n, const ExplicitSeed& left, const ExplicitSeed& right, std::size_t distance);

struct CollisionOptions {
    std::size_t steps = 400;  // rows recorded, including t = 0
    std::size_t n = 0;        // 0: 4 * steps
    std::size_t part_gap = 2; // empty columns that separate the initial parts

    std::size_t lattice() const noexcept { return n ? n : 4 * steps; }
};

/// One localization of the initial state, run on its own.
struct CollisionPart {
    Localization initial;
    long drift = 0;  // centre displacement of the lone run up to the interaction (or the last row)
    std::size_t final_activity = 0;
};

struct CollisionReport {
    std::vector<std::size_t> activity;    // excited cells per row, both chains
    std::vector<std::size_t> components;  // localizations per row, separated by part_gap
    std::vector<CollisionPart> parts;
    /// First row where the joint run differs from the union of the parts run alone.
    std::optional<std::size_t> interaction_time;
    std::optional<std::size_t> extinction_time;
    /// The facing edges of some neighbouring pair of lone parts came at least
    /// two columns closer before the interaction. One column of edge jitter is
    /// common in stationary transients and does not count.
    bool approaching = false;
    /// Classification of the joint run over all recorded rows.
    LocalizationReport outcome;
    PatternPair patterns;
};

/// Runs `initial` and each of its parts separately, then compares the runs.
///
/// Edges are measured in unwrapped columns, so the lattice should be wide
/// enough that nothing wraps around within the run.
CollisionReport collide(const Rule& rule, const MemoryModel& model, const FilamentState& initial,
                        const CollisionOptions& options = {});

}  // namespace actin
