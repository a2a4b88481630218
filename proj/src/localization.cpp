#include "actin/localization.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "actin/errors.hpp"
#include "actin/parallel.hpp"
#include "actin/ring.hpp"

namespace actin {

namespace {

/// One row reduced to its occupied arc: the union of both chains' excited
/// columns, and both chains' cells over that arc (chain A then chain B).
struct RowShape {
    std::size_t start = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> content;
};

RowShape shape_from_arc(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, Arc arc) {
    const std::size_t n = a.size();
    RowShape shape{arc.start, arc.width, {}};
    shape.content.resize(2 * arc.width);
    for (std::size_t k = 0; k < arc.width; ++k) {
        const std::size_t i = (arc.start + k) % n;
        shape.content[k] = a[i];
        shape.content[arc.width + k] = b[i];
    }
    return shape;
}

RowShape shape_of(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    std::vector<std::uint8_t> either(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) either[i] = a[i] | b[i];
    return shape_from_arc(a, b, minimal_arc(either));
}

/// Like shape_of, but only scans the simulator's live window when it is
/// narrower than half the ring (then the complement is the largest gap).
RowShape shape_of(const Simulator& sim) {
    const FilamentState& s = sim.state();
    const std::size_t n = s.size();
    const auto window = sim.active_window();
    if (!window || static_cast<std::size_t>(window->second - window->first + 1) * 2 >= n) {
        return shape_of(s.a, s.b);
    }
    const long m = static_cast<long>(n);
    auto wrap = [m](long i) { return static_cast<std::size_t>(((i % m) + m) % m); };
    long first = 0;
    long last = -1;
    for (long i = window->first; i <= window->second; ++i) {
        const std::size_t w = wrap(i);
        if (s.a[w] | s.b[w]) {
            if (last < first) first = i;
            last = i;
        }
    }
    if (last < first) return {};
    return shape_from_arc(s.a, s.b, Arc{wrap(first), static_cast<std::size_t>(last - first + 1)});
}

struct Piece {
    std::size_t offset = 0;  // from the row's arc start
    std::size_t width = 0;
};

/// Localizations of a row shape, split at runs of at least `gap` empty columns.
std::vector<Piece> pieces_of(const RowShape& row, std::size_t gap) {
    std::vector<Piece> out;
    std::size_t k = 0;
    while (k < row.width) {
        const std::size_t begin = k;
        std::size_t last = k;
        std::size_t zeros = 0;
        for (; k < row.width; ++k) {
            if (row.content[k] | row.content[row.width + k]) {
                last = k;
                zeros = 0;
            } else if (++zeros >= gap) {
                break;
            }
        }
        out.push_back({begin, last - begin + 1});
        while (k < row.width && !(row.content[k] | row.content[row.width + k])) ++k;
    }
    return out;
}

bool same_piece(const RowShape& x, const Piece& px, const RowShape& y, const Piece& py) {
    if (px.width != py.width) return false;
    for (std::size_t k = 0; k < px.width; ++k) {
        if (x.content[px.offset + k] != y.content[py.offset + k]) return false;
        if (x.content[x.width + px.offset + k] != y.content[y.width + py.offset + k]) return false;
    }
    return true;
}

struct Trajectory {
    std::size_t n = 0;
    std::size_t rows = 0;
    bool extinct = false;
    std::vector<RowShape> shapes;  // rows [transient, rows)
    std::size_t support_a = 0;
    std::size_t support_b = 0;
    std::size_t components = 0;
};

void check_options(const ClassifyOptions& o) {
    if (o.rows == 0 || o.max_period == 0) throw InputError("classification needs rows and a period bound");
    if (o.rows <= o.transient_steps() + 2 * o.max_period) {
        throw InputError("classification needs rows > transient + 2 * max_period");
    }
    if (o.checkpoints < 2) throw InputError("expansion screen needs at least two checkpoints");
}

LocalizationClass classify_trajectory(const Trajectory& tr, const ClassifyOptions& o) {
    if (tr.extinct) return {LocalizationKind::Extinct, 0, 0};
    const std::size_t pmax = o.max_period;
    const auto& rows = tr.shapes;  // index 0 is the first post-transient row

    for (std::size_t p = 1; p <= pmax; ++p) {
        const long d0 = centred_shift(static_cast<long>(rows[p].start) - static_cast<long>(rows[0].start), tr.n);
        bool ok = true;
        for (std::size_t t = 0; t <= pmax && ok; ++t) {
            const RowShape& x = rows[t];
            const RowShape& y = rows[t + p];
            ok = x.width == y.width && x.content == y.content &&
                 centred_shift(static_cast<long>(y.start) - static_cast<long>(x.start), tr.n) == d0;
        }
        if (!ok) continue;
        if (d0 != 0) return {LocalizationKind::Glider, static_cast<int>(p), d0};
        if (p == 1) return {LocalizationKind::StillLife, 1, 0};
        return {LocalizationKind::Oscillator, static_cast<int>(p), 0};
    }

    // Several localizations, each recurring with its own shift.
    std::vector<std::vector<Piece>> pieces;
    pieces.reserve(2 * pmax + 1);
    for (std::size_t t = 0; t <= 2 * pmax; ++t) pieces.push_back(pieces_of(rows[t], o.component_gap));
    const std::size_t count = pieces[0].size();
    const bool stable_count = count > 1 && std::all_of(pieces.begin(), pieces.end(),
                                                       [&](const auto& v) { return v.size() == count; });
    for (std::size_t p = 1; stable_count && p <= pmax; ++p) {
        std::vector<long> shifts(count);
        auto shift_of = [&](std::size_t t, std::size_t k) {
            const long x = static_cast<long>(rows[t].start + pieces[t][k].offset);
            const long y = static_cast<long>(rows[t + p].start + pieces[t + p][k].offset);
            return centred_shift(y - x, tr.n);
        };
        for (std::size_t k = 0; k < count; ++k) shifts[k] = shift_of(0, k);
        bool ok = true;
        for (std::size_t t = 0; t <= pmax && ok; ++t) {
            for (std::size_t k = 0; k < count && ok; ++k) {
                ok = same_piece(rows[t], pieces[t][k], rows[t + p], pieces[t + p][k]) && shift_of(t, k) == shifts[k];
            }
        }
        if (!ok) continue;
        long fastest = 0;
        for (long d : shifts)
            if (std::abs(d) > std::abs(fastest)) fastest = d;
        if (fastest != 0) return {LocalizationKind::Glider, static_cast<int>(p), fastest};
        if (p == 1) return {LocalizationKind::StillLife, 1, 0};
        return {LocalizationKind::Oscillator, static_cast<int>(p), 0};
    }

    // Linear-growth screen over evenly spaced checkpoints of the post-transient rows.
    const std::size_t span = rows.size() - 1;
    std::vector<std::size_t> widths;
    for (std::size_t k = 0; k < o.checkpoints; ++k) widths.push_back(rows[k * span / (o.checkpoints - 1)].width);
    const bool monotone = std::is_sorted(widths.begin(), widths.end());
    const bool strictly = std::adjacent_find(widths.begin(), widths.end(), std::greater_equal<>()) == widths.end();
    const double growth = static_cast<double>(widths.back()) - static_cast<double>(widths.front());
    const bool steady = strictly && growth >= o.min_growth_rate * static_cast<double>(span);
    const bool wide = monotone && growth > 0 && static_cast<double>(widths.back()) > o.expand_fraction * static_cast<double>(tr.n);
    if (steady || wide) return {LocalizationKind::Expanding, 0, 0};
    return {LocalizationKind::Unresolved, 0, 0};
}

LocalizationReport make_report(const Trajectory& tr, const ClassifyOptions& o) {
    LocalizationReport report;
    report.cls = classify_trajectory(tr, o);
    report.support_a = tr.support_a;
    report.support_b = tr.support_b;
    report.entrained = tr.support_a > 0 && tr.support_b > 0;
    report.components = tr.components;
    return report;
}

}  // namespace

std::string to_string(LocalizationKind kind) {
    switch (kind) {
        case LocalizationKind::Extinct:
            return "extinct";
        case LocalizationKind::StillLife:
            return "still_life";
        case LocalizationKind::Oscillator:
            return "oscillator";
        case LocalizationKind::Glider:
            return "glider";
        case LocalizationKind::Expanding:
            return "expanding";
        case LocalizationKind::Unresolved:
            return "unresolved";
    }
    return "unresolved";
}

std::size_t support_width(const FilamentState& state, Chain chain) { return minimal_arc(state.chain(chain)).width; }

std::vector<Localization> localizations(const FilamentState& state, std::size_t gap) {
    if (gap == 0) throw InputError("localization gap must be positive");
    const RowShape row = shape_of(state.a, state.b);
    std::vector<Localization> out;
    for (const Piece& p : pieces_of(row, gap)) out.push_back({(row.start + p.offset) % state.size(), p.width});
    return out;
}

LocalizationReport classify(const Rule& rule, const MemoryModel& model, FilamentState initial,
                            const ClassifyOptions& options) {
    check_options(options);
    Simulator sim(rule, model, std::move(initial));
    Trajectory tr;
    tr.n = sim.state().size();
    tr.rows = options.rows;
    const std::size_t transient = options.transient_steps();
    tr.shapes.reserve(options.rows - transient);
    for (std::size_t t = 0; t < options.rows; ++t) {
        if (t > 0) sim.advance();
        RowShape shape = shape_of(sim);
        if (shape.width == 0) {
            tr.extinct = true;
            break;
        }
        if (t >= transient) tr.shapes.push_back(std::move(shape));
    }
    tr.support_a = support_width(sim.state(), Chain::A);
    tr.support_b = support_width(sim.state(), Chain::B);
    tr.components = localizations(sim.state(), options.component_gap).size();
    return make_report(tr, options);
}

LocalizationReport classify(const Rule& rule, const MemoryModel& model, const InitialCondition& ic,
                            const ClassifyOptions& options) {
    return classify(rule, model, init_state(options.lattice(), ic), options);
}

LocalizationReport classify_patterns(const PatternPair& patterns, const ClassifyOptions& options) {
    if (patterns.a.rows() != patterns.b.rows() || patterns.a.cols() != patterns.b.cols()) {
        throw InputError("chain patterns differ in dimensions");
    }
    ClassifyOptions o = options;
    o.rows = patterns.a.rows();
    o.n = patterns.a.cols();
    check_options(o);
    Trajectory tr;
    tr.n = o.n;
    tr.rows = o.rows;
    const std::size_t transient = o.transient_steps();
    for (std::size_t t = 0; t < o.rows; ++t) {
        RowShape shape = shape_of(patterns.a.row(t), patterns.b.row(t));
        if (shape.width == 0) {
            tr.extinct = true;
            break;
        }
        if (t >= transient) tr.shapes.push_back(std::move(shape));
    }
    tr.support_a = minimal_arc(patterns.a.row(o.rows - 1)).width;
    tr.support_b = minimal_arc(patterns.b.row(o.rows - 1)).width;
    tr.components = pieces_of(shape_of(patterns.a.row(o.rows - 1), patterns.b.row(o.rows - 1)), o.component_gap).size();
    return make_report(tr, o);
}

std::pair<LocalizationReport, LocalizationReport> transformation_pair(const Rule& rule, const InitialCondition& ic,
                                                                      const MemoryModel& model,
                                                                      const ClassifyOptions& options) {
    const FilamentState initial = init_state(options.lattice(), ic);
    return {classify(rule, Ahistoric{}, initial, options), classify(rule, model, initial, options)};
}

std::vector<ExplicitSeed> five_cell_seeds() {
    std::vector<ExplicitSeed> seeds;
    seeds.reserve(1023);
    for (unsigned v = 1; v < 1024; ++v) {
        ExplicitSeed s{std::string(5, '0'), std::string(5, '0')};
        for (int k = 0; k < 5; ++k) {
            s.seed_a[k] = static_cast<char>('0' + ((v >> (9 - k)) & 1));
            s.seed_b[k] = static_cast<char>('0' + ((v >> (4 - k)) & 1));
        }
        seeds.push_back(std::move(s));
    }
    return seeds;
}

TaxonomyResult taxonomy_sweep(const std::vector<Rule>& rules, const std::vector<ExplicitSeed>& seeds,
                              const MemoryModel& model, const ClassifyOptions& options, unsigned jobs) {
    validate(model);
    check_options(options);
    TaxonomyResult result;
    result.cases.resize(rules.size() * seeds.size());
    parallel_for(result.cases.size(), jobs, [&](std::size_t k) {
        const Rule& rule = rules[k / seeds.size()];
        const ExplicitSeed& seed = seeds[k % seeds.size()];
        auto [ahistoric, memory] = transformation_pair(rule, seed, model, options);
        result.cases[k] = TaxonomyCase{rule, seed, ahistoric, memory};
    });
    for (const auto& c : result.cases) {
        ++result.matrix[static_cast<std::size_t>(c.ahistoric.cls.kind)][static_cast<std::size_t>(c.memory.cls.kind)];
    }
    return result;
}

// CSV -------------------------------------------------------------------------------

namespace {

std::pair<std::string, std::string> seed_columns(const InitialCondition& ic) {
    if (const auto* e = std::get_if<ExplicitSeed>(&ic)) return {e->seed_a, e->seed_b};
    if (const auto* s = std::get_if<SingleSite>(&ic)) {
        return {"site:" + std::string(s->chain == Chain::A ? "a" : "b") + ":" + std::to_string(s->position), ""};
    }
    return {"random:" + std::to_string(std::get<RandomHalf>(ic).rng_seed), ""};
}

}  // namespace

void write_classification_header(std::ostream& out) {
    out << "phi,psi,memory,param,seed_a,seed_b,class,period,displacement,support_a,support_b,entrained\n";
}

void write_classification_row(std::ostream& out, const Rule& rule, const MemoryModel& model,
                              const InitialCondition& ic, const LocalizationReport& report) {
    const auto [memory, param] = memory_columns(model);
    const auto [seed_a, seed_b] = seed_columns(ic);
    out << rule.phi.decimal() << ',' << rule.psi.decimal() << ',' << memory << ',' << param << ',' << seed_a << ','
        << seed_b << ',' << to_string(report.cls.kind) << ',' << report.cls.period << ','
        << report.cls.displacement << ',' << report.support_a << ',' << report.support_b << ','
        << (report.entrained ? 1 : 0) << '\n';
}

void write_transition_matrix(std::ostream& out, const TransitionMatrix& matrix) {
    out << "from\\to";
    for (std::size_t j = 0; j < kLocalizationKinds; ++j) out << ',' << to_string(static_cast<LocalizationKind>(j));
    out << '\n';
    for (std::size_t i = 0; i < kLocalizationKinds; ++i) {
        out << to_string(static_cast<LocalizationKind>(i));
        for (std::size_t j = 0; j < kLocalizationKinds; ++j) out << ',' << matrix[i][j];
        out << '\n';
    }
}

}  // namespace actin
