#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>
#include <string>

#include "actin/analysis.hpp"
#include "actin/collision.hpp"
#include "actin/engine.hpp"
#include "actin/errors.hpp"
#include "actin/localization.hpp"
#include "actin/render.hpp"
#include "actin/rule.hpp"
#include "actin/seed_io.hpp"

namespace py = pybind11;
using namespace actin;

namespace {

py::array_t<std::uint8_t> to_array(const SpaceTimePattern& p) {
    py::array_t<std::uint8_t> out({p.rows(), p.cols()});
    if (!p.data().empty()) std::memcpy(out.mutable_data(), p.data().data(), p.data().size());
    return out;
}

SpaceTimePattern from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw InputError("pattern must be a 2-D array");
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<std::uint8_t> cells(arr.data(), arr.data() + rows * cols);
    for (auto v : cells)
        if (v > 1) throw InputError("pattern cells must be 0 or 1");
    return SpaceTimePattern(rows, cols, std::move(cells));
}

py::dict report_dict(const LocalizationReport& r) {
    py::dict d;
    d["class"] = to_string(r.cls.kind);
    d["period"] = r.cls.period;
    d["displacement"] = r.cls.displacement;
    d["support_a"] = r.support_a;
    d["support_b"] = r.support_b;
    d["entrained"] = r.entrained;
    d["components"] = r.components;
    return d;
}

FilamentState initial_state(std::size_t n, const std::optional<std::string>& seed,
                            const std::optional<std::uint64_t>& rng_seed) {
    if (seed.has_value() == rng_seed.has_value()) throw InputError("give exactly one of seed or rng_seed");
    if (seed) return init_state(n, parse_seed(*seed));
    return init_state(n, RandomHalf{*rng_seed});
}

CensusSource census_source(const std::string& text) { return parse_census_source(text); }

}  // namespace

PYBIND11_MODULE(_actin, m) {
    m.doc() = "Coupled two-chain cellular automata with cell-state memory";

    py::class_<Rule>(m, "Rule")
        .def(py::init(&rule_from_decimal), py::arg("phi"), py::arg("psi"))
        .def_static("parse", &parse_rule, py::arg("text"))
        .def_property_readonly("phi", [](const Rule& r) { return r.phi.decimal(); })
        .def_property_readonly("psi", [](const Rule& r) { return r.psi.decimal(); })
        .def_property_readonly("index", &Rule::index)
        .def_property_readonly("quiescent", &Rule::quiescent)
        .def("apply", [](const Rule& r, int self, int sum) {
            if (self < 0 || self > 1 || sum < 0 || sum > 4) throw InputError("state must be 0/1 and sum in 0..4");
            return r.apply(static_cast<std::uint8_t>(self), sum);
        }, py::arg("state"), py::arg("neighbour_sum"))
        .def("__eq__", [](const Rule& a, const Rule& b) { return a == b; })
        .def("__hash__", &Rule::index)
        .def("__repr__", &Rule::name);

    m.def("enumerate_rules", &enumerate_rules);
    m.def("rule_set", &named_rule_set, py::arg("name"),
          "Named rule set: 'travelling', 'stationary' or 'localization'.");

    m.def("normalize_memory", [](const std::string& text) { return format_memory_model(parse_memory_model(text)); },
          py::arg("memory"), "Canonical spelling of a memory model ('ahistoric', 'majority', 'tau:K', 'alpha:X').");

    m.def("parse_seed", [](const std::string& text) {
        const ExplicitSeed s = parse_seed(text);
        return py::make_tuple(s.seed_a, s.seed_b);
    }, py::arg("text"));

    m.def("initial_state", [](std::size_t n, const std::optional<std::string>& seed,
                              const std::optional<std::uint64_t>& rng_seed) {
        const FilamentState s = initial_state(n, seed, rng_seed);
        return py::make_tuple(py::array_t<std::uint8_t>(s.a.size(), s.a.data()),
                              py::array_t<std::uint8_t>(s.b.size(), s.b.data()));
    }, py::arg("n"), py::kw_only(), py::arg("seed") = py::none(), py::arg("rng_seed") = py::none());

    m.def("run", [](const Rule& rule, const std::string& memory, std::size_t n, std::size_t steps,
                    const std::optional<std::string>& seed, const std::optional<std::uint64_t>& rng_seed) {
        const MemoryModel model = parse_memory_model(memory);
        FilamentState s = initial_state(n, seed, rng_seed);
        PatternPair p;
        {
            py::gil_scoped_release release;
            p = run(rule, model, std::move(s), steps);
        }
        return py::make_tuple(to_array(p.a), to_array(p.b));
    }, py::arg("rule"), py::arg("memory") = "ahistoric", py::arg("n") = 300, py::arg("steps") = 1000, py::kw_only(),
       py::arg("seed") = py::none(), py::arg("rng_seed") = py::none(),
       "Runs steps-1 updates and returns (a, b) uint8 arrays of shape (steps, n).");

    m.def("block_census", [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& pattern) {
        const BlockCensus c = block_census(from_array(pattern));
        return py::array_t<std::uint64_t>(c.counts.size(), c.counts.data());
    }, py::arg("pattern"), "Counts of the 512 3x3 blocks; the top-left cell is bit 8 of the key.");

    m.def("entropy", [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& pattern) {
        const BlockCensus c = block_census(from_array(pattern));
        return py::make_tuple(shannon_entropy(c), simpson_diversity(c));
    }, py::arg("pattern"), "(H in nats, Simpson diversity) of the 3x3 block distribution.");

    m.def("damage", [](const Rule& rule, const std::string& memory, std::size_t n, std::size_t steps,
                       std::uint64_t rng_seed) {
        const MemoryModel model = parse_memory_model(memory);
        DamageReport r;
        {
            py::gil_scoped_release release;
            r = damage_experiment(rule, model, n, steps, rng_seed);
        }
        py::dict d;
        d["hamming"] = r.hamming_per_step;
        d["cone_width"] = r.cone_width_per_step;
        d["max_cone_width"] = r.max_cone_width;
        d["final_hamming"] = r.final_hamming;
        return d;
    }, py::arg("rule"), py::arg("memory") = "ahistoric", py::arg("n") = 300, py::arg("steps") = 150, py::kw_only(),
       py::arg("rng_seed"));

    m.def("sweep", [](const std::string& memory, std::uint64_t rng_seed, std::size_t n, std::size_t steps,
                      const std::string& census, unsigned jobs, const std::optional<std::vector<Rule>>& rules) {
        const MemoryModel model = parse_memory_model(memory);
        SweepOptions o;
        o.n = n;
        o.rows = steps;
        o.rng_seed = rng_seed;
        o.census = census_source(census);
        o.jobs = jobs;
        std::vector<SweepRow> rows;
        {
            py::gil_scoped_release release;
            rows = rules ? sweep(model, o, *rules) : sweep(model, o);
        }
        py::list out;
        for (const SweepRow& r : rows) out.append(py::make_tuple(r.rule, r.entropy, r.diversity));
        return out;
    }, py::arg("memory") = "ahistoric", py::kw_only(), py::arg("rng_seed"), py::arg("n") = 300,
       py::arg("steps") = 1000, py::arg("census") = "a", py::arg("jobs") = 0, py::arg("rules") = py::none(),
       "List of (rule, H, D), one random run per rule.");

    m.def("classify", [](const Rule& rule, const std::string& memory, const std::string& seed, std::size_t steps,
                         std::size_t max_period) {
        ClassifyOptions o;
        o.rows = steps;
        o.max_period = max_period;
        const MemoryModel model = parse_memory_model(memory);
        const ExplicitSeed s = parse_seed(seed);
        LocalizationReport r;
        {
            py::gil_scoped_release release;
            r = classify(rule, model, s, o);
        }
        return report_dict(r);
    }, py::arg("rule"), py::arg("memory"), py::arg("seed"), py::arg("steps") = 400, py::arg("max_period") = 60);

    m.def("taxonomy", [](const std::string& memory, const std::optional<std::vector<Rule>>& rules, unsigned jobs) {
        const MemoryModel model = parse_memory_model(memory);
        TaxonomyResult res;
        {
            py::gil_scoped_release release;
            res = taxonomy_sweep(rules ? *rules : localization_rules(), five_cell_seeds(), model, {}, jobs);
        }
        py::dict matrix;
        for (std::size_t i = 0; i < kLocalizationKinds; ++i)
            for (std::size_t j = 0; j < kLocalizationKinds; ++j)
                if (res.matrix[i][j])
                    matrix[py::make_tuple(to_string(static_cast<LocalizationKind>(i)),
                                          to_string(static_cast<LocalizationKind>(j)))] = res.matrix[i][j];
        return matrix;
    }, py::arg("memory") = "tau:3", py::kw_only(), py::arg("rules") = py::none(), py::arg("jobs") = 0,
       "Nonzero transition counts {(ahistoric class, memory class): count} over all five-column seeds.");

    m.def("excitability", [](const std::vector<Rule>& rules) {
        const ExcitabilityProfile p = excitability_profile(rules);
        return py::make_tuple(p.p_rest, p.p_excited);
    }, py::arg("rules"), "(p_rest, p_excited) for k = 0..4 excited neighbours.");

    m.def("collide", [](const Rule& rule, const std::string& memory, const std::string& left,
                        const std::optional<std::string>& right, std::optional<std::size_t> distance,
                        std::size_t steps, std::size_t n) {
        CollisionOptions o;
        o.steps = steps;
        o.n = n;
        const MemoryModel model = parse_memory_model(memory);
        FilamentState initial;
        if (distance) {
            const ExplicitSeed l = parse_seed(left);
            initial = place_pair(o.lattice(), l, right ? parse_seed(*right) : l, *distance);
        } else {
            if (right) throw InputError("a right seed needs a distance");
            initial = init_state(o.lattice(), parse_seed(left));
        }
        CollisionReport r;
        {
            py::gil_scoped_release release;
            r = collide(rule, model, initial, o);
        }
        py::dict d;
        d["activity"] = r.activity;
        d["parts"] = r.parts.size();
        d["interaction_time"] = r.interaction_time;
        d["extinction_time"] = r.extinction_time;
        d["approaching"] = r.approaching;
        d["outcome"] = report_dict(r.outcome);
        return d;
    }, py::arg("rule"), py::arg("memory"), py::arg("seed"), py::arg("right_seed") = py::none(),
       py::arg("distance") = py::none(), py::arg("steps") = 400, py::arg("n") = 0);

    m.def("render", [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a,
                       const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& b, bool stacked) {
        PatternPair p{from_array(a), from_array(b)};
        RenderSpec spec;
        spec.layout = stacked ? Layout::StackedBoth : Layout::ChainAOnly;
        const std::vector<std::uint8_t> bytes = render_spacetime(p, spec);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }, py::arg("a"), py::arg("b"), py::arg("stacked") = false, "Binary P6 image of a run.");
}
