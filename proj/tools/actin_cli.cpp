#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "actin/analysis.hpp"
#include "actin/collision.hpp"
#include "actin/engine.hpp"
#include "actin/errors.hpp"
#include "actin/localization.hpp"
#include "actin/render.hpp"
#include "actin/rule.hpp"
#include "actin/seed_io.hpp"

namespace {

using namespace actin;

struct Flags {
    std::optional<int> phi;
    std::optional<int> psi;
    std::string memory = "ahistoric";
    std::optional<std::size_t> n;
    std::optional<std::size_t> steps;
    std::optional<std::uint64_t> rng_seed;
    std::optional<std::string> seed;
    std::optional<std::string> out;
    std::string census = "a";
    unsigned jobs = 0;
    std::optional<std::size_t> distance;
    std::optional<std::string> rules;
    std::optional<std::string> rule_set;
    std::optional<std::string> image;
    std::string layout = "a";
    std::optional<std::string> right_seed;
    std::optional<std::string> cases;
    bool pair = false;
    std::optional<std::size_t> max_period;
};

void add_rule(CLI::App* cmd, Flags& f) {
    cmd->add_option("--phi", f.phi, "Subrule for resting cells, 0..31")->check(CLI::Range(0, 31));
    cmd->add_option("--psi", f.psi, "Subrule for excited cells, 0..31")->check(CLI::Range(0, 31));
}

void add_memory(CLI::App* cmd, Flags& f, const std::string& fallback) {
    f.memory = fallback;
    cmd->add_option("--memory", f.memory, "ahistoric | majority | tau:K | alpha:X")->capture_default_str();
}

void add_rule_list(CLI::App* cmd, Flags& f) {
    cmd->add_option("--rules", f.rules, "Rule list such as \"R(7,4);R(5,6)\"");
    cmd->add_option("--rule-set", f.rule_set, "travelling | stationary | localization");
}

void add_image(CLI::App* cmd, Flags& f) {
    cmd->add_option("--image", f.image, "Write the space-time diagram as a P6 pixmap");
    cmd->add_option("--layout", f.layout, "Image layout: a (chain a only) or stacked")
        ->check(CLI::IsMember({"a", "stacked"}))
        ->capture_default_str();
}

Rule single_rule(const Flags& f) {
    if (!f.phi || !f.psi) throw InputError("--phi and --psi are required");
    return Rule::from_decimal(*f.phi, *f.psi);
}

std::vector<Rule> rule_selection(const Flags& f, std::vector<Rule> fallback) {
    const int given = (f.rules ? 1 : 0) + (f.rule_set ? 1 : 0) + ((f.phi || f.psi) ? 1 : 0);
    if (given > 1) throw InputError("choose one of --rules, --rule-set or --phi/--psi");
    if (f.rules) return parse_rule_list(*f.rules);
    if (f.rule_set) return named_rule_set(*f.rule_set);
    if (f.phi || f.psi) return {single_rule(f)};
    return fallback;
}

std::uint64_t require_rng_seed(const Flags& f) {
    if (!f.rng_seed) throw InputError("this command is randomized; pass --rng-seed");
    return *f.rng_seed;
}

void write_to(const std::optional<std::string>& path, const std::function<void(std::ostream&)>& emit) {
    if (!path || *path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + *path + "' for writing");
    emit(file);
    if (!file) throw InputError("failed writing '" + *path + "'");
}

void write_image(const std::string& path, const PatternPair& patterns, const Flags& f,
                 std::optional<PatternPair> overlay = std::nullopt) {
    RenderSpec spec;
    spec.layout = f.layout == "stacked" ? Layout::StackedBoth : Layout::ChainAOnly;
    spec.damage_overlay = std::move(overlay);
    const std::vector<std::uint8_t> bytes = render_spacetime(patterns, spec);
    write_to(path, [&](std::ostream& out) { out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size()); });
}

int cmd_run(const Flags& f) {
    const Rule rule = single_rule(f);
    const MemoryModel model = parse_memory_model(f.memory);
    const std::size_t n = f.n.value_or(300);
    const std::size_t steps = f.steps.value_or(1000);
    if (f.seed && f.rng_seed) throw InputError("pass either --seed or --rng-seed, not both");
    InitialCondition ic;
    if (f.seed) {
        ic = parse_seed(*f.seed);
    } else {
        ic = RandomHalf{require_rng_seed(f)};
    }
    const PatternPair patterns = run(rule, model, ic, n, steps);
    if (f.out) write_image(*f.out, patterns, f);
    const auto [mem, param] = memory_columns(model);
    std::cout << "phi,psi,memory,param,n,steps,H,D,final_activity\n";
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) active += patterns.a(steps - 1, i) + patterns.b(steps - 1, i);
    std::cout << rule.phi.decimal() << ',' << rule.psi.decimal() << ',' << mem << ',' << param << ',' << n << ','
              << steps << std::fixed << std::setprecision(6);
    if (steps >= 3) {
        const BlockCensus census = block_census(patterns, parse_census_source(f.census));
        std::cout << ',' << shannon_entropy(census) << ',' << simpson_diversity(census);
    } else {
        std::cout << ",,";
    }
    std::cout << ',' << active << '\n';
    return 0;
}

int cmd_sweep(const Flags& f) {
    const MemoryModel model = parse_memory_model(f.memory);
    SweepOptions opts;
    opts.n = f.n.value_or(opts.n);
    opts.rows = f.steps.value_or(opts.rows);
    opts.rng_seed = require_rng_seed(f);
    opts.census = parse_census_source(f.census);
    opts.jobs = f.jobs;
    const std::vector<SweepRow> rows = sweep(model, opts, rule_selection(f, enumerate_rules()));
    write_to(f.out, [&](std::ostream& out) { write_sweep_csv(out, model, rows); });
    return 0;
}

int cmd_damage(const Flags& f) {
    const Rule rule = single_rule(f);
    const MemoryModel model = parse_memory_model(f.memory);
    const DamageReport report =
        damage_experiment(rule, model, f.n.value_or(300), f.steps.value_or(150), require_rng_seed(f));
    write_to(f.out, [&](std::ostream& out) { write_damage_csv(out, report); });
    if (f.image) write_image(*f.image, report.base, f, report.perturbed);
    std::cerr << "max_cone_width=" << report.max_cone_width << " final_hamming=" << report.final_hamming << '\n';
    return 0;
}

ClassifyOptions classify_options(const Flags& f) {
    ClassifyOptions opts;
    opts.rows = f.steps.value_or(opts.rows);
    opts.n = f.n.value_or(0);
    opts.max_period = f.max_period.value_or(opts.max_period);
    return opts;
}

int cmd_classify(const Flags& f) {
    const Rule rule = single_rule(f);
    const MemoryModel model = parse_memory_model(f.memory);
    if (!f.seed) throw InputError("--seed is required");
    const InitialCondition ic = parse_seed(*f.seed);
    const ClassifyOptions opts = classify_options(f);
    write_to(f.out, [&](std::ostream& out) {
        write_classification_header(out);
        if (f.pair) write_classification_row(out, rule, Ahistoric{}, ic, classify(rule, Ahistoric{}, ic, opts));
        write_classification_row(out, rule, model, ic, classify(rule, model, ic, opts));
    });
    return 0;
}

int cmd_taxonomy(const Flags& f) {
    const MemoryModel model = parse_memory_model(f.memory);
    const std::vector<Rule> rules = rule_selection(f, localization_rules());
    const TaxonomyResult result = taxonomy_sweep(rules, five_cell_seeds(), model, classify_options(f), f.jobs);
    write_to(f.out, [&](std::ostream& out) { write_transition_matrix(out, result.matrix); });
    if (f.cases) {
        write_to(f.cases, [&](std::ostream& out) {
            write_classification_header(out);
            for (const TaxonomyCase& c : result.cases) {
                write_classification_row(out, c.rule, Ahistoric{}, c.seed, c.ahistoric);
                write_classification_row(out, c.rule, model, c.seed, c.memory);
            }
        });
    }
    return 0;
}

int cmd_profile(const Flags& f) {
    std::vector<std::pair<std::string, std::vector<Rule>>> sets;
    if (f.rules || f.rule_set || f.phi || f.psi) {
        sets.emplace_back(f.rule_set.value_or("custom"), rule_selection(f, {}));
    } else {
        sets.emplace_back("travelling", travelling_rules());
        sets.emplace_back("stationary", stationary_rules());
    }
    write_to(f.out, [&](std::ostream& out) {
        out << "set,state,k0,k1,k2,k3,k4\n" << std::fixed << std::setprecision(6);
        for (const auto& [name, rules] : sets) {
            const ExcitabilityProfile p = excitability_profile(rules);
            out << name << ",rest";
            for (double v : p.p_rest) out << ',' << v;
            out << '\n' << name << ",excited";
            for (double v : p.p_excited) out << ',' << v;
            out << '\n';
        }
    });
    return 0;
}

int cmd_collide(const Flags& f) {
    const Rule rule = single_rule(f);
    const MemoryModel model = parse_memory_model(f.memory);
    CollisionOptions opts;
    opts.steps = f.steps.value_or(opts.steps);
    opts.n = f.n.value_or(0);
    const ExplicitSeed left = f.seed ? parse_seed(*f.seed) : ExplicitSeed{"1", "0"};
    FilamentState initial;
    if (f.distance) {
        const ExplicitSeed right = f.right_seed ? parse_seed(*f.right_seed) : left;
        initial = place_pair(opts.lattice(), left, right, *f.distance);
    } else {
        if (!f.seed) throw InputError("pass --distance, or a --seed holding both localizations");
        if (f.right_seed) throw InputError("--right-seed needs --distance");
        initial = init_state(opts.lattice(), left);
    }
    const CollisionReport report = collide(rule, model, initial, opts);
    write_to(f.out, [&](std::ostream& out) {
        out << "t,activity,components\n";
        for (std::size_t t = 0; t < report.activity.size(); ++t) {
            out << t << ',' << report.activity[t] << ',' << report.components[t] << '\n';
        }
    });
    if (f.image) write_image(*f.image, report.patterns, f);
    auto show = [](const std::optional<std::size_t>& t) { return t ? std::to_string(*t) : std::string("none"); };
    std::cerr << "parts=" << report.parts.size() << " approaching=" << (report.approaching ? "yes" : "no")
              << " interaction=" << show(report.interaction_time) << " extinction=" << show(report.extinction_time)
              << " outcome=" << to_string(report.outcome.cls.kind) << " period=" << report.outcome.cls.period
              << " displacement=" << report.outcome.cls.displacement << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-chain actin automata with memory"};
    app.require_subcommand(1);
    Flags f;
    std::function<int(const Flags&)> action;

    auto sub = [&](const char* name, const char* help, int (*fn)(const Flags&)) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->callback([&action, fn] { action = fn; });
        cmd->add_option("--n", f.n, "Cells per chain");
        cmd->add_option("--steps", f.steps, "Rows recorded, including the initial one");
        cmd->add_option("--out", f.out, "Output path ('-' for stdout)");
        return cmd;
    };

    CLI::App* run_cmd = sub("run", "Simulate one rule and report block entropy and diversity", cmd_run);
    add_rule(run_cmd, f);
    add_memory(run_cmd, f, "ahistoric");
    run_cmd->add_option("--rng-seed", f.rng_seed, "Seed for a random half-density start");
    run_cmd->add_option("--seed", f.seed, "Explicit seed \"[a,b]\" instead of a random start");
    run_cmd->add_option("--census", f.census, "Census source: a, b or stacked")->capture_default_str();
    run_cmd->add_option("--layout", f.layout, "Image layout for --out: a or stacked")
        ->check(CLI::IsMember({"a", "stacked"}));

    CLI::App* sweep_cmd = sub("sweep", "Entropy and diversity of every rule (or a subset)", cmd_sweep);
    add_rule(sweep_cmd, f);
    add_rule_list(sweep_cmd, f);
    add_memory(sweep_cmd, f, "ahistoric");
    sweep_cmd->add_option("--rng-seed", f.rng_seed, "Base seed; each rule uses seed XOR rule index");
    sweep_cmd->add_option("--census", f.census, "Census source: a, b or stacked")->capture_default_str();
    sweep_cmd->add_option("--jobs", f.jobs, "Worker threads (0: all cores)");

    CLI::App* damage_cmd = sub("damage", "Spread of a single flipped cell", cmd_damage);
    add_rule(damage_cmd, f);
    add_memory(damage_cmd, f, "ahistoric");
    damage_cmd->add_option("--rng-seed", f.rng_seed, "Seed for the random start");
    add_image(damage_cmd, f);

    CLI::App* classify_cmd = sub("classify", "Classify the localization grown from a seed", cmd_classify);
    add_rule(classify_cmd, f);
    add_memory(classify_cmd, f, "ahistoric");
    classify_cmd->add_option("--seed", f.seed, "Explicit seed \"[a,b]\"");
    classify_cmd->add_option("--max-period", f.max_period, "Longest period searched (default 60)");
    classify_cmd->add_flag("--pair", f.pair, "Also classify the memoryless run");

    CLI::App* taxonomy_cmd = sub("taxonomy", "Transition matrix over all five-column seeds", cmd_taxonomy);
    add_rule(taxonomy_cmd, f);
    add_rule_list(taxonomy_cmd, f);
    add_memory(taxonomy_cmd, f, "tau:3");
    taxonomy_cmd->add_option("--max-period", f.max_period, "Longest period searched (default 60)");
    taxonomy_cmd->add_option("--jobs", f.jobs, "Worker threads (0: all cores)");
    taxonomy_cmd->add_option("--cases", f.cases, "Also write every classification to this CSV");

    CLI::App* profile_cmd = sub("profile", "Excitation probabilities by number of excited neighbours", cmd_profile);
    add_rule(profile_cmd, f);
    add_rule_list(profile_cmd, f);

    CLI::App* collide_cmd = sub("collide", "Run two localizations into each other", cmd_collide);
    add_rule(collide_cmd, f);
    add_memory(collide_cmd, f, "ahistoric");
    collide_cmd->add_option("--seed", f.seed, "Left seed, or the whole configuration without --distance");
    collide_cmd->add_option("--right-seed", f.right_seed, "Right seed (default: same as the left)");
    collide_cmd->add_option("--distance", f.distance, "Columns between the left edges of the two seeds");
    add_image(collide_cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action(f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
}
