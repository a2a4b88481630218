#include <doctest.h>

#include <algorithm>
#include <random>

#include "actin/analysis.hpp"
#include "actin/engine.hpp"
#include "oracles.hpp"

using namespace actin;

namespace {

FilamentState random_state(std::size_t n, std::mt19937& gen) {
    const oracle::Cells c = oracle::random_cells(n, gen);
    return FilamentState(c.a, c.b);
}

Rule random_rule(std::mt19937& gen) {
    std::uniform_int_distribution<int> dec(0, 31);
    const int phi = dec(gen);
    return rule_from_decimal(phi, dec(gen));
}

FilamentState rotate(const FilamentState& s, std::size_t k) {
    FilamentState out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.a[(i + k) % s.size()] = s.a[i];
        out.b[(i + k) % s.size()] = s.b[i];
    }
    return out;
}

}  // namespace

TEST_CASE("weak memories reduce to the memoryless dynamics") {
    std::mt19937 gen(71);
    for (int trial = 0; trial < 50; ++trial) {
        const Rule rule = random_rule(gen);
        const FilamentState s = random_state(64, gen);
        const PatternPair plain = run(rule, Ahistoric{}, s, 80);
        CHECK(run(rule, Alpha{0.5}, s, 80) == plain);
        CHECK(run(rule, Alpha{0.3}, s, 80) == plain);
        CHECK(run(rule, MajorityTau{2}, s, 80) == plain);
        CHECK(run(rule, MajorityTau{1}, s, 80) == plain);
    }
}

TEST_CASE("parity evolves linearly over GF(2)") {
    std::mt19937 gen(73);
    const Rule parity = rule_from_decimal(10, 10);
    for (int trial = 0; trial < 20; ++trial) {
        const FilamentState x = random_state(50, gen);
        const FilamentState y = random_state(50, gen);
        FilamentState z(50);
        for (std::size_t i = 0; i < 50; ++i) {
            z.a[i] = x.a[i] ^ y.a[i];
            z.b[i] = x.b[i] ^ y.b[i];
        }
        const PatternPair px = run(parity, Ahistoric{}, x, 60);
        const PatternPair py = run(parity, Ahistoric{}, y, 60);
        const PatternPair pz = run(parity, Ahistoric{}, z, 60);
        bool linear = true;
        for (std::size_t k = 0; k < pz.a.data().size(); ++k) {
            linear &= pz.a.data()[k] == (px.a.data()[k] ^ py.a.data()[k]);
            linear &= pz.b.data()[k] == (px.b.data()[k] ^ py.b.data()[k]);
        }
        CHECK(linear);
    }
}

TEST_CASE("shifting the start shifts every row") {
    std::mt19937 gen(79);
    const std::vector<MemoryModel> models{Ahistoric{}, MajorityUnlimited{}, MajorityTau{3}, Alpha{0.8}};
    for (int trial = 0; trial < 24; ++trial) {
        const Rule rule = random_rule(gen);
        const MemoryModel& model = models[static_cast<std::size_t>(trial) % models.size()];
        const FilamentState s = random_state(37, gen);
        const std::size_t k = 1 + static_cast<std::size_t>(trial) % 36;
        const PatternPair p = run(rule, model, s, 40);
        const PatternPair q = run(rule, model, rotate(s, k), 40);
        bool shifted = true;
        for (std::size_t t = 0; t < 40; ++t)
            for (std::size_t i = 0; i < 37; ++i) {
                shifted &= q.a(t, (i + k) % 37) == p.a(t, i);
                shifted &= q.b(t, (i + k) % 37) == p.b(t, i);
            }
        CHECK(shifted);
    }
}

TEST_CASE("quiescent rules keep the empty lattice empty under every memory") {
    for (const Rule& r : enumerate_rules()) {
        if (!r.quiescent()) continue;
        for (const MemoryModel& m : {MemoryModel{MajorityUnlimited{}}, MemoryModel{MajorityTau{3}}, MemoryModel{Alpha{0.9}}}) {
            const PatternPair p = run(r, m, FilamentState(8), 4);
            CHECK(std::none_of(p.a.data().begin(), p.a.data().end(), [](auto v) { return v != 0; }));
        }
    }
}

TEST_CASE("entropy and diversity ignore a cyclic shift of the pattern") {
    std::mt19937 gen(83);
    for (int trial = 0; trial < 10; ++trial) {
        const Rule rule = random_rule(gen);
        const FilamentState s = random_state(45, gen);
        const PatternPair p = run(rule, MajorityTau{3}, s, 30);
        const PatternPair q = run(rule, MajorityTau{3}, rotate(s, 7 + static_cast<std::size_t>(trial)), 30);
        const BlockCensus cp = block_census(p.a);
        const BlockCensus cq = block_census(q.a);
        CHECK(cp.counts == cq.counts);
        CHECK(shannon_entropy(cp) == shannon_entropy(cq));
        CHECK(simpson_diversity(cp) == simpson_diversity(cq));
    }
}

TEST_CASE("damage statistics stay within their bounds") {
    std::mt19937 gen(89);
    for (int trial = 0; trial < 10; ++trial) {
        const Rule rule = random_rule(gen);
        const DamageReport r = damage_experiment(rule, MajorityTau{3}, 40, 30, static_cast<std::uint64_t>(trial));
        CHECK(r.hamming_per_step[0] == 1);
        for (std::size_t t = 0; t < 30; ++t) {
            CHECK(r.hamming_per_step[t] <= 80);
            CHECK(r.cone_width_per_step[t] <= 40);
            CHECK((r.cone_width_per_step[t] == 0) == (r.hamming_per_step[t] == 0));
        }
    }
}
