#include "actin/collision.hpp"

#include <algorithm>

#include "actin/errors.hpp"

namespace actin {

namespace {

constexpr long kApproachColumns = 2;

/// First and last excited column of a row over both chains, or nullopt.
std::optional<std::pair<long, long>> edges(const FilamentState& s) {
    std::optional<std::pair<long, long>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s.a[i] | s.b[i])) continue;
        const long x = static_cast<long>(i);
        if (!out) out = std::pair{x, x};
        out->second = x;
    }
    return out;
}

FilamentState isolate(const FilamentState& s, const Localization& part) {
    FilamentState out(s.size());
    for (std::size_t k = 0; k < part.width; ++k) {
        const std::size_t i = (part.start + k) % s.size();
        out.a[i] = s.a[i];
        out.b[i] = s.b[i];
    }
    return out;
}

}  // namespace

FilamentState place_pair(std::size_t n, const ExplicitSeed& left, const ExplicitSeed& right, std::size_t distance) {
    for (const ExplicitSeed* s : {&left, &right}) {
        if (s->seed_a.empty() || s->seed_a.size() != s->seed_b.size()) {
            throw InputError("seed chains must be non-empty and of equal length");
        }
    }
    if (distance < left.seed_a.size()) throw InputError("seeds overlap at this distance");
    const std::size_t span = distance + right.seed_a.size();
    if (span > n) throw InputError("seed pair does not fit on the lattice");
    FilamentState out(n);
    const std::size_t x = (n - span) / 2;
    auto put = [&](const ExplicitSeed& s, std::size_t at) {
        for (std::size_t k = 0; k < s.seed_a.size(); ++k) {
            for (auto [text, chain] : {std::pair{&s.seed_a, &out.a}, std::pair{&s.seed_b, &out.b}}) {
                const char c = (*text)[k];
                if (c != '0' && c != '1') throw InputError("seed characters must be 0 or 1");
                (*chain)[at + k] = static_cast<std::uint8_t>(c - '0');
            }
        }
    };
    put(left, x);
    put(right, x + distance);
    return out;
}

CollisionReport collide(const Rule& rule, const MemoryModel& model, const FilamentState& initial,
                        const CollisionOptions& options) {
    initial.validate();
    if (options.steps < 2) throw InputError("collision needs at least two rows");
    if (options.part_gap == 0) throw InputError("part gap must be positive");
    const std::size_t n = initial.size();

    CollisionReport report;
    std::vector<Localization> parts = localizations(initial, options.part_gap);
    std::sort(parts.begin(), parts.end(), [](const Localization& x, const Localization& y) { return x.start < y.start; });

    Simulator joint(rule, model, initial);
    std::vector<Simulator> alone;
    alone.reserve(parts.size());
    for (const Localization& p : parts) alone.emplace_back(rule, model, isolate(initial, p));

    // Edge history of each lone part, one entry per row.
    std::vector<std::vector<std::optional<std::pair<long, long>>>> part_edges(parts.size());

    report.patterns.a = SpaceTimePattern(0, n);
    report.patterns.b = SpaceTimePattern(0, n);
    FilamentState superposed(n);
    for (std::size_t t = 0; t < options.steps; ++t) {
        if (t > 0) {
            joint.advance();
            for (Simulator& s : alone) s.advance();
        }
        const FilamentState& s = joint.state();
        report.patterns.a.append_row(s.a);
        report.patterns.b.append_row(s.b);
        report.activity.push_back(s.active_cells());
        report.components.push_back(s.empty_activity() ? 0 : localizations(s, options.part_gap).size());
        if (!report.extinction_time && s.empty_activity()) report.extinction_time = t;

        std::fill(superposed.a.begin(), superposed.a.end(), 0);
        std::fill(superposed.b.begin(), superposed.b.end(), 0);
        bool overlap = false;
        for (std::size_t k = 0; k < alone.size(); ++k) {
            const FilamentState& p = alone[k].state();
            for (std::size_t i = 0; i < n; ++i) {
                overlap |= (superposed.a[i] & p.a[i]) | (superposed.b[i] & p.b[i]);
                superposed.a[i] |= p.a[i];
                superposed.b[i] |= p.b[i];
            }
            part_edges[k].push_back(edges(p));
        }
        if (!report.interaction_time && (overlap || superposed != s)) report.interaction_time = t;
    }

    // Motion of the lone parts is judged on the rows before they meet.
    const std::size_t horizon = report.interaction_time ? *report.interaction_time : options.steps;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        CollisionPart part;
        part.initial = parts[k];
        part.final_activity = alone[k].state().active_cells();
        const auto& e = part_edges[k];
        std::size_t last = 0;
        for (std::size_t t = 0; t < horizon; ++t)
            if (e[t]) last = t;
        if (e[0] && e[last]) part.drift = (e[last]->first + e[last]->second - e[0]->first - e[0]->second) / 2;
        report.parts.push_back(part);
    }
    for (std::size_t k = 0; k + 1 < parts.size() && !report.approaching; ++k) {
        const auto& left = part_edges[k];
        const auto& right = part_edges[k + 1];
        if (!left[0] || !right[0]) continue;
        const long initial_gap = right[0]->first - left[0]->second;
        for (std::size_t t = 1; t < horizon && !report.approaching; ++t) {
            if (left[t] && right[t] && initial_gap - (right[t]->first - left[t]->second) >= kApproachColumns) {
                report.approaching = true;
            }
        }
    }

    ClassifyOptions co;
    co.rows = options.steps;
    co.max_period = std::min<std::size_t>(co.max_period, (options.steps - co.transient_steps() - 1) / 2);
    if (co.max_period > 0) report.outcome = classify_patterns(report.patterns, co);
    return report;
}

}  // namespace actin
