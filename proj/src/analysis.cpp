#include "actin/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "actin/errors.hpp"
#include "actin/parallel.hpp"
#include "actin/ring.hpp"

namespace actin {

std::size_t BlockCensus::kinds() const noexcept {
    std::size_t k = 0;
    for (auto c : counts) k += c != 0;
    return k;
}

BlockCensus BlockCensus::from_counts(std::span<const std::pair<std::uint16_t, std::uint64_t>> entries) {
    BlockCensus census;
    for (const auto& [key, count] : entries) {
        if (key >= kBlockKinds) throw InputError("block key outside [0,511]");
        census.counts[key] += count;
        census.total += count;
    }
    return census;
}

CensusSource parse_census_source(const std::string& text) {
    if (text == "a") return CensusSource::ChainA;
    if (text == "b") return CensusSource::ChainB;
    if (text == "stacked") return CensusSource::Stacked;
    throw InputError("census source must be a, b or stacked");
}

BlockCensus block_census(const SpaceTimePattern& pattern) {
    const std::size_t rows = pattern.rows();
    const std::size_t n = pattern.cols();
    if (rows < 3) throw InputError("block census needs at least 3 rows");
    if (n == 0) throw InputError("block census needs a non-empty row");
    BlockCensus census;
    for (std::size_t t = 0; t + 2 < rows; ++t) {
        const auto r0 = pattern.row(t);
        const auto r1 = pattern.row(t + 1);
        const auto r2 = pattern.row(t + 2);
        auto column = [&](std::size_t i) { return (r0[i] << 2) | (r1[i] << 1) | r2[i]; };
        // Key layout: row-major, so the three columns interleave. Build from column triples.
        auto key_of = [&](unsigned left, unsigned mid, unsigned right) {
            unsigned key = 0;
            for (int r = 2; r >= 0; --r) {
                key = (key << 3) | (((left >> r) & 1) << 2) | (((mid >> r) & 1) << 1) | ((right >> r) & 1);
            }
            return key;
        };
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t l = (i + n - 1) % n;
            const std::size_t r = (i + 1) % n;
            ++census.counts[key_of(column(l), column(i), column(r))];
        }
    }
    census.total = (rows - 2) * n;
    return census;
}

BlockCensus block_census(const PatternPair& patterns, CensusSource source) {
    switch (source) {
        case CensusSource::ChainA:
            return block_census(patterns.a);
        case CensusSource::ChainB:
            return block_census(patterns.b);
        case CensusSource::Stacked: {
            if (patterns.a.cols() != patterns.b.cols()) throw InputError("chain patterns differ in width");
            std::vector<std::uint8_t> cells(patterns.a.data());
            cells.insert(cells.end(), patterns.b.data().begin(), patterns.b.data().end());
            return block_census(
                SpaceTimePattern(patterns.a.rows() + patterns.b.rows(), patterns.a.cols(), std::move(cells)));
        }
    }
    throw InputError("unknown census source");
}

double shannon_entropy(const BlockCensus& census) {
    if (census.total == 0) throw InputError("entropy of an empty census");
    const double eta = static_cast<double>(census.total);
    double h = 0.0;
    for (auto c : census.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / eta;
        h -= p * std::log(p);
    }
    return h;
}

double simpson_diversity(const BlockCensus& census) {
    if (census.total == 0) throw InputError("diversity of an empty census");
    const double eta = static_cast<double>(census.total);
    double s = 0.0;
    for (auto c : census.counts) {
        const double p = static_cast<double>(c) / eta;
        s += p * p;
    }
    return 1.0 - s;
}

// Damage ---------------------------------------------------------------------------

DamageReport compare_runs(PatternPair base, PatternPair perturbed) {
    if (base.a.rows() != perturbed.a.rows() || base.a.cols() != perturbed.a.cols() ||
        base.b.rows() != perturbed.b.rows() || base.b.cols() != perturbed.b.cols() ||
        base.a.rows() != base.b.rows()) {
        throw InputError("compared runs differ in dimensions");
    }
    DamageReport report;
    const std::size_t rows = base.a.rows();
    const std::size_t n = base.a.cols();
    std::vector<std::uint8_t> column(n);
    for (std::size_t t = 0; t < rows; ++t) {
        std::size_t hamming = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t da = base.a(t, i) ^ perturbed.a(t, i);
            const std::uint8_t db = base.b(t, i) ^ perturbed.b(t, i);
            hamming += da + db;
            column[i] = da | db;
        }
        const std::size_t width = minimal_arc(column).width;
        report.hamming_per_step.push_back(hamming);
        report.cone_width_per_step.push_back(width);
        report.max_cone_width = std::max(report.max_cone_width, width);
    }
    report.final_hamming = report.hamming_per_step.empty() ? 0 : report.hamming_per_step.back();
    report.base = std::move(base);
    report.perturbed = std::move(perturbed);
    return report;
}

DamageReport damage_experiment(const Rule& rule, const MemoryModel& model, std::size_t n, std::size_t rows,
                               std::uint64_t rng_seed, bool flip) {
    if (n < 3) throw InputError("lattice size must be at least 3");
    if (rows < 1) throw InputError("a run needs at least one row");
    FilamentState initial = init_state(n, RandomHalf{rng_seed});
    FilamentState flipped = initial;
    if (flip) flipped.a[n / 2] ^= 1;
    return compare_runs(run(rule, model, std::move(initial), rows), run(rule, model, std::move(flipped), rows));
}

void write_damage_csv(std::ostream& out, const DamageReport& report) {
    out << "t,hamming,cone_width\n";
    for (std::size_t t = 0; t < report.hamming_per_step.size(); ++t) {
        out << t << ',' << report.hamming_per_step[t] << ',' << report.cone_width_per_step[t] << '\n';
    }
}

// Sweep ------------------------------------------------------------------------------

SweepRow sweep_rule(const Rule& rule, const MemoryModel& model, const SweepOptions& options) {
    const std::uint64_t seed = options.rng_seed ^ static_cast<std::uint64_t>(rule.index());
    const PatternPair patterns = run(rule, model, RandomHalf{seed}, options.n, options.rows);
    const BlockCensus census = block_census(patterns, options.census);
    return {rule, shannon_entropy(census), simpson_diversity(census)};
}

std::vector<SweepRow> sweep(const MemoryModel& model, const SweepOptions& options, const std::vector<Rule>& rules) {
    validate(model);
    if (options.rows < 3) throw InputError("sweep needs at least 3 rows per run");
    std::vector<SweepRow> out(rules.size());
    parallel_for(rules.size(), options.jobs, [&](std::size_t k) { out[k] = sweep_rule(rules[k], model, options); });
    return out;
}

void write_sweep_csv(std::ostream& out, const MemoryModel& model, const std::vector<SweepRow>& rows) {
    const auto [memory, param] = memory_columns(model);
    out << "phi,psi,memory,param,H,D\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& row : rows) {
        out << row.rule.phi.decimal() << ',' << row.rule.psi.decimal() << ',' << memory << ',' << param << ','
            << row.entropy << ',' << row.diversity << '\n';
    }
    out.unsetf(std::ios_base::floatfield);
}

// Excitability ----------------------------------------------------------------------------

ExcitabilityProfile excitability_profile(std::span<const Rule> rules) {
    if (rules.empty()) throw InputError("excitability profile of an empty rule set");
    ExcitabilityProfile profile;
    for (const auto& rule : rules) {
        for (int k = 0; k < 5; ++k) {
            profile.p_rest[k] += rule.phi(k);
            profile.p_excited[k] += rule.psi(k);
        }
    }
    const double count = static_cast<double>(rules.size());
    for (int k = 0; k < 5; ++k) {
        profile.p_rest[k] /= count;
        profile.p_excited[k] /= count;
    }
    return profile;
}

}  // namespace actin
