#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "actin/rule.hpp"

namespace actin {

enum class Chain { A, B };

/// Two periodic binary chains of equal length n >= 3.
///
/// Chain A is the filament's first strand; chain B is the complementary strand
/// whose cell i sits between A[i] and A[i+1].
struct FilamentState {
    std::vector<std::uint8_t> a;
    std::vector<std::uint8_t> b;

    FilamentState() = default;
    explicit FilamentState(std::size_t n) : a(n, 0), b(n, 0) {}
    FilamentState(std::vector<std::uint8_t> chain_a, std::vector<std::uint8_t> chain_b);

    std::size_t size() const noexcept { return a.size(); }
    std::vector<std::uint8_t>& chain(Chain c) noexcept { return c == Chain::A ? a : b; }
    const std::vector<std::uint8_t>& chain(Chain c) const noexcept { return c == Chain::A ? a : b; }

    bool empty_activity() const noexcept;
    std::size_t active_cells() const noexcept;

    /// Throws InputError unless both chains have equal length >= 3 and hold only 0/1.
    void validate() const;

    friend bool operator==(const FilamentState&, const FilamentState&) = default;
};

// Memory models --------------------------------------------------------------

struct Ahistoric {
    friend bool operator==(Ahistoric, Ahistoric) = default;
};
/// Mode of the whole history.
struct MajorityUnlimited {
    friend bool operator==(MajorityUnlimited, MajorityUnlimited) = default;
};
/// Mode of the last `tau` states.
struct MajorityTau {
    int tau = 3;
    friend bool operator==(MajorityTau, MajorityTau) = default;
};
/// Geometrically discounted mean with memory factor `alpha`.
struct Alpha {
    double alpha = 0.9;
    friend bool operator==(Alpha, Alpha) = default;
};

using MemoryModel = std::variant<Ahistoric, MajorityUnlimited, MajorityTau, Alpha>;

/// Parses "ahistoric", "majority", "tau:K" or "alpha:X".
MemoryModel parse_memory_model(const std::string& text);
/// Inverse of parse_memory_model.
std::string format_memory_model(const MemoryModel& model);
/// CSV columns `memory` and `param`, e.g. {"tau","3"} or {"ahistoric",""}.
std::pair<std::string, std::string> memory_columns(const MemoryModel& model);
void validate(const MemoryModel& model);

/// Tolerance for the 2*omega == Omega branch of the alpha trait.
inline constexpr double kTraitEpsilon = 1e-9;

/// Per-cell memory of past raw states for one run.
///
/// Cells whose whole history is zero carry all-zero accumulators, so a
/// simulation may skip cells that have never been excited without changing
/// their memory.
class MemoryState {
public:
    MemoryState(MemoryModel model, const FilamentState& initial);

    const MemoryModel& model() const noexcept { return model_; }
    std::size_t size() const noexcept { return n_; }
    /// Number of recorded time steps (>= 1).
    std::size_t steps() const noexcept { return steps_; }
    const FilamentState& current() const noexcept { return raw_; }

    /// Appends a new configuration to every cell's history.
    void update(const FilamentState& next);

    /// Trait (memory-summarised) state of one cell.
    std::uint8_t trait(Chain chain, std::size_t i) const noexcept;
    FilamentState traits() const;

    // Accumulators, exposed for inspection.
    double omega(Chain chain, std::size_t i) const;
    double normalizer() const noexcept { return normalizer_; }
    std::size_t ones(Chain chain, std::size_t i) const;
    std::size_t zeros(Chain chain, std::size_t i) const;
    /// MajorityTau window of one cell, oldest first.
    std::vector<std::uint8_t> window(Chain chain, std::size_t i) const;

private:
    friend class Simulator;

    std::size_t slot(Chain chain, std::size_t i) const noexcept {
        return (chain == Chain::A ? 0 : n_) + i;
    }
    void record_cell(Chain chain, std::size_t i, std::uint8_t value);
    void advance_clock() noexcept;

    MemoryModel model_;
    std::size_t n_ = 0;
    std::size_t steps_ = 0;
    FilamentState raw_;
    int kind_ = 0;  // index of model_'s alternative
    int tau_ = 0;
    double alpha_ = 0.0;
    double normalizer_ = 0.0;                // Omega(T), shared by every cell
    std::size_t head_ = 0;                   // ring position of the next MajorityTau write
    std::vector<std::uint32_t> ones_;        // MajorityUnlimited
    std::vector<std::uint8_t> ring_;         // MajorityTau, tau entries per cell
    std::vector<double> omega_;              // Alpha
};

/// One synchronous update of both chains driven by trait states.
///
/// Chain A cell i sums A[i-1], A[i+1], B[i], B[i-1]; chain B cell i sums
/// B[i-1], B[i+1], A[i], A[i+1]. The cell's own trait picks phi (0) or psi (1).
/// With `traits == state` this is the memoryless update.
FilamentState step(const FilamentState& state, const FilamentState& traits, const Rule& rule);

// Initial conditions -----------------------------------------------------------

/// Every cell of both chains is Bernoulli(1/2), drawn from mt19937_64(rng_seed).
struct RandomHalf {
    std::uint64_t rng_seed = 0;
};
struct SingleSite {
    Chain chain = Chain::A;
    std::size_t position = 0;
};
/// Two equal-length strings centred at floor((n - len)/2).
struct ExplicitSeed {
    std::string seed_a;
    std::string seed_b;
};

using InitialCondition = std::variant<RandomHalf, SingleSite, ExplicitSeed>;

FilamentState init_state(std::size_t n, const InitialCondition& ic);

// Space-time patterns ------------------------------------------------------------

/// T x n binary matrix of one chain; row t is the configuration after t steps.
class SpaceTimePattern {
public:
    SpaceTimePattern() = default;
    SpaceTimePattern(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}
    SpaceTimePattern(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t operator()(std::size_t t, std::size_t i) const noexcept { return cells_[t * cols_ + i]; }
    std::uint8_t& operator()(std::size_t t, std::size_t i) noexcept { return cells_[t * cols_ + i]; }

    std::span<const std::uint8_t> row(std::size_t t) const noexcept {
        return {cells_.data() + t * cols_, cols_};
    }
    std::span<std::uint8_t> row(std::size_t t) noexcept { return {cells_.data() + t * cols_, cols_}; }
    const std::vector<std::uint8_t>& data() const noexcept { return cells_; }

    void append_row(std::span<const std::uint8_t> values);

    friend bool operator==(const SpaceTimePattern&, const SpaceTimePattern&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

struct PatternPair {
    SpaceTimePattern a;
    SpaceTimePattern b;

    const SpaceTimePattern& chain(Chain c) const noexcept { return c == Chain::A ? a : b; }
    friend bool operator==(const PatternPair&, const PatternPair&) = default;
};

// Simulation -----------------------------------------------------------------------

/// Steps a filament forward, keeping its memory.
///
/// For quiescent rules the update is restricted to the window of cells that
/// have ever been excited plus a one-cell margin; cells outside it provably
/// stay at zero. The window widens to the whole ring once it no longer fits.
class Simulator {
public:
    Simulator(const Rule& rule, MemoryModel model, FilamentState initial, bool windowed = true);

    const FilamentState& state() const noexcept { return mem_.current(); }
    const MemoryState& memory() const noexcept { return mem_; }
    const Rule& rule() const noexcept { return rule_; }
    /// Steps taken so far.
    std::size_t time() const noexcept { return mem_.steps() - 1; }
    bool windowed() const noexcept { return windowed_; }

    /// Unwrapped bounds [lo, hi] such that every cell outside is zero (hi < lo when
    /// nothing was ever excited); nullopt once the whole ring is updated.
    std::optional<std::pair<long, long>> active_window() const noexcept;

    void advance();

private:
    void update_range(long lo, long hi);
    std::size_t wrap(long i) const noexcept;

    Rule rule_;
    MemoryState mem_;
    FilamentState next_;
    std::vector<std::uint8_t> trait_a_;
    std::vector<std::uint8_t> trait_b_;
    bool windowed_ = false;
    bool any_active_ = false;
    long lo_ = 0;  // unwrapped bounds of cells ever excited
    long hi_ = -1;
};

/// Runs T-1 steps from `initial`, recording T rows per chain.
PatternPair run(const Rule& rule, const MemoryModel& model, FilamentState initial, std::size_t rows);
PatternPair run(const Rule& rule, const MemoryModel& model, const InitialCondition& ic, std::size_t n,
                std::size_t rows);

}  // namespace actin
