#include <doctest.h>

#include <random>

#include "actin/engine.hpp"
#include "actin/errors.hpp"
#include "actin/rule.hpp"
#include "oracles.hpp"

using namespace actin;

namespace {

std::string text(const std::vector<std::uint8_t>& v) {
    std::string s;
    for (auto c : v) s += static_cast<char>('0' + c);
    return s;
}

/// Memory of a 3-cell filament whose chain-A cell 0 saw `history` (oldest first).
MemoryState memory_with(const MemoryModel& model, const std::vector<std::uint8_t>& history) {
    auto state = [](std::uint8_t v) {
        FilamentState s(3);
        s.a[0] = v;
        return s;
    };
    MemoryState m(model, state(history.front()));
    for (std::size_t k = 1; k < history.size(); ++k) m.update(state(history[k]));
    return m;
}

FilamentState from(const oracle::Cells& c) { return FilamentState(c.a, c.b); }

std::vector<MemoryModel> all_models() {
    return {Ahistoric{}, MajorityUnlimited{}, MajorityTau{1}, MajorityTau{2}, MajorityTau{3}, MajorityTau{4},
            MajorityTau{7}, Alpha{0.3}, Alpha{0.51}, Alpha{0.75}, Alpha{0.9}, Alpha{1.0}};
}

}  // namespace

TEST_CASE("init_state examples") {
    const FilamentState s = init_state(9, SingleSite{Chain::A, 4});
    CHECK(text(s.a) == "000010000");
    CHECK(text(s.b) == "000000000");

    const FilamentState f = init_state(26, ExplicitSeed{"00110000000000000000000110", "01100000000000000000001100"});
    CHECK(text(f.a) == "00110000000000000000000110");
    CHECK(text(f.b) == "01100000000000000000001100");

    const FilamentState c = init_state(9, ExplicitSeed{"11", "01"});
    CHECK(text(c.a) == "000110000");
    CHECK(text(c.b) == "000010000");

    CHECK(init_state(300, RandomHalf{17}) == init_state(300, RandomHalf{17}));
    CHECK(init_state(300, RandomHalf{17}) != init_state(300, RandomHalf{18}));
    const FilamentState r = init_state(4000, RandomHalf{5});
    CHECK(r.active_cells() > 3800);
    CHECK(r.active_cells() < 4200);
}

TEST_CASE("init_state rejects bad input") {
    CHECK_THROWS_AS(init_state(2, RandomHalf{1}), InputError);
    CHECK_THROWS_AS(init_state(3, ExplicitSeed{"1111", "0000"}), InputError);
    CHECK_THROWS_AS(init_state(9, ExplicitSeed{"11", "0"}), InputError);
    CHECK_THROWS_AS(init_state(9, SingleSite{Chain::B, 9}), InputError);
    CHECK_THROWS_AS(FilamentState({1, 0, 1}, {1, 0}), InputError);
    CHECK_THROWS_AS(FilamentState({1, 0, 2}, {1, 0, 0}), InputError);
}

TEST_CASE("one parity step from a single excited cell") {
    const FilamentState s = init_state(9, SingleSite{Chain::A, 4});
    const FilamentState next = step(s, s, rule_from_decimal(10, 10));
    CHECK(text(next.a) == "000101000");
    CHECK(text(next.b) == "000110000");
}

TEST_CASE("quiescent and saturating rules") {
    const FilamentState zero(12);
    for (const Rule& r : enumerate_rules()) {
        if (r.quiescent()) CHECK(step(zero, zero, r) == zero);
    }
    std::mt19937 gen(3);
    const FilamentState s = from(oracle::random_cells(12, gen));
    const FilamentState ones(std::vector<std::uint8_t>(12, 1), std::vector<std::uint8_t>(12, 1));
    CHECK(step(s, s, rule_from_decimal(31, 31)) == ones);
    CHECK_THROWS_AS(step(s, FilamentState(11), rule_from_decimal(31, 31)), InputError);
}

TEST_CASE("step matches the neighbourhood definition for random rules and traits") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> dec(0, 31);
    for (int trial = 0; trial < 200; ++trial) {
        const int phi = dec(gen), psi = dec(gen);
        const oracle::Cells state = oracle::random_cells(10, gen);
        const oracle::Cells traits = oracle::random_cells(10, gen);
        const oracle::Cells expect = oracle::step(traits, phi, psi);
        CHECK(step(from(state), from(traits), rule_from_decimal(phi, psi)) == from(expect));
    }
}

TEST_CASE("alpha memory examples") {
    const MemoryState m = memory_with(Alpha{0.9}, {1, 0, 0});
    CHECK(m.omega(Chain::A, 0) == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(m.normalizer() == doctest::Approx(2.71).epsilon(1e-12));
    CHECK(m.trait(Chain::A, 0) == 0);

    const MemoryState full = memory_with(Alpha{1.0}, {1, 0});
    CHECK(full.omega(Chain::A, 0) == 1.0);
    CHECK(full.normalizer() == 2.0);
    CHECK(full.trait(Chain::A, 0) == 0);
    CHECK(memory_with(Alpha{1.0}, {0, 1}).trait(Chain::A, 0) == 1);
}

TEST_CASE("majority memory examples") {
    const MemoryState u = memory_with(MajorityUnlimited{}, {1, 0});
    CHECK(u.ones(Chain::A, 0) == 1);
    CHECK(u.zeros(Chain::A, 0) == 1);
    CHECK(u.trait(Chain::A, 0) == 0);

    const MemoryState w = memory_with(MajorityTau{3}, {0, 1, 1, 0});
    CHECK(w.window(Chain::A, 0) == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(w.trait(Chain::A, 0) == 1);
    CHECK(memory_with(MajorityTau{3}, {0, 1, 1}).trait(Chain::A, 0) == 1);
    CHECK(memory_with(MajorityTau{3}, {1}).window(Chain::A, 0) == std::vector<std::uint8_t>{1});
    CHECK(memory_with(MajorityTau{4}, {1, 1, 0, 0}).trait(Chain::A, 0) == 0);
    CHECK(memory_with(MajorityTau{4}, {0, 0, 1, 1}).trait(Chain::A, 0) == 1);
}

TEST_CASE("accessors reject the wrong memory model") {
    const MemoryState a = memory_with(Ahistoric{}, {1});
    CHECK_THROWS_AS(a.omega(Chain::A, 0), InputError);
    CHECK_THROWS_AS(a.ones(Chain::A, 0), InputError);
    CHECK_THROWS_AS(a.window(Chain::A, 0), InputError);
    CHECK_THROWS_AS(MemoryState(MajorityTau{0}, FilamentState(3)), InputError);
    CHECK_THROWS_AS(MemoryState(Alpha{1.5}, FilamentState(3)), InputError);
}

TEST_CASE("incremental charge equals the direct discounted sum") {
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> len(1, 30);
    std::bernoulli_distribution bit(0.5);
    for (double alpha : {0.51, 0.6, 0.9, 1.0}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint8_t> h(static_cast<std::size_t>(len(gen)));
            for (auto& v : h) v = bit(gen);
            const MemoryState m = memory_with(Alpha{alpha}, h);
            CHECK(std::abs(m.omega(Chain::A, 0) - oracle::discounted(h, alpha)) <= 1e-12);
            CHECK(std::abs(m.normalizer() - oracle::normalizer(h.size(), alpha)) <= 1e-12);
            CHECK(m.trait(Chain::A, 0) == oracle::trait(Alpha{alpha}, h));
        }
    }
}

TEST_CASE("majority traits equal a recount of the whole history") {
    std::mt19937 gen(29);
    std::uniform_int_distribution<int> len(1, 25);
    std::bernoulli_distribution bit(0.5);
    for (const MemoryModel& model : {MemoryModel{MajorityUnlimited{}}, MemoryModel{MajorityTau{1}},
                                     MemoryModel{MajorityTau{2}}, MemoryModel{MajorityTau{3}},
                                     MemoryModel{MajorityTau{4}}, MemoryModel{MajorityTau{6}}}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint8_t> h(static_cast<std::size_t>(len(gen)));
            for (auto& v : h) v = bit(gen);
            CHECK(memory_with(model, h).trait(Chain::A, 0) == oracle::trait(model, h));
        }
    }
}

TEST_CASE("memory model text round trip") {
    for (const MemoryModel& m : all_models()) CHECK(parse_memory_model(format_memory_model(m)) == m);
    CHECK(parse_memory_model("none") == MemoryModel{Ahistoric{}});
    CHECK(parse_memory_model("full") == MemoryModel{MajorityUnlimited{}});
    CHECK(memory_columns(MajorityTau{3}) == std::pair<std::string, std::string>{"tau", "3"});
    CHECK(memory_columns(Alpha{0.9}) == std::pair<std::string, std::string>{"alpha", "0.9"});
    for (const char* bad : {"tau", "tau:", "tau:x", "tau:0", "alpha:", "alpha:1.2", "alpha:0.5x", "fading"}) {
        CHECK_THROWS_AS(parse_memory_model(bad), InputError);
    }
}

TEST_CASE("runs match the history-keeping reference for every memory model") {
    std::mt19937 gen(31);
    std::uniform_int_distribution<int> dec(0, 31);
    for (const MemoryModel& model : all_models()) {
        for (int trial = 0; trial < 8; ++trial) {
            const int phi = dec(gen), psi = dec(gen);
            const oracle::Cells init = oracle::random_cells(11, gen);
            const auto expect = oracle::run(phi, psi, model, init, 25);
            const PatternPair got = run(rule_from_decimal(phi, psi), model, from(init), 25);
            for (std::size_t t = 0; t < 25; ++t) {
                const auto ra = got.a.row(t);
                const auto rb = got.b.row(t);
                CHECK(std::vector<std::uint8_t>(ra.begin(), ra.end()) == expect[t].a);
                CHECK(std::vector<std::uint8_t>(rb.begin(), rb.end()) == expect[t].b);
            }
        }
    }
}

TEST_CASE("row zero is the initial state and rows count includes it") {
    const FilamentState s = init_state(20, RandomHalf{2});
    const PatternPair p = run(rule_from_decimal(14, 9), Ahistoric{}, s, 7);
    CHECK(p.a.rows() == 7);
    CHECK(p.a.cols() == 20);
    const auto r0 = p.a.row(0);
    CHECK(std::vector<std::uint8_t>(r0.begin(), r0.end()) == s.a);
    CHECK_THROWS_AS(run(rule_from_decimal(14, 9), Ahistoric{}, s, 0), InputError);
}

TEST_CASE("windowed simulation matches full-ring simulation") {
    std::mt19937 gen(37);
    std::uniform_int_distribution<int> dec(0, 31);
    std::uniform_int_distribution<int> pos(0, 39);
    int checked = 0;
    while (checked < 120) {
        const Rule rule = rule_from_decimal(dec(gen), dec(gen));
        if (!rule.quiescent()) continue;
        const MemoryModel model = all_models()[static_cast<std::size_t>(checked) % all_models().size()];
        FilamentState s(40);
        // A small seed, sometimes straddling the wrap point.
        const int at = checked % 3 == 0 ? 38 : pos(gen);
        for (int k = 0; k < 4; ++k) {
            s.a[static_cast<std::size_t>((at + k) % 40)] = static_cast<std::uint8_t>(gen() & 1);
            s.b[static_cast<std::size_t>((at + k) % 40)] = static_cast<std::uint8_t>(gen() & 1);
        }
        Simulator fast(rule, model, s, true);
        Simulator slow(rule, model, s, false);
        CHECK_FALSE(slow.windowed());
        for (int t = 0; t < 60; ++t) {
            fast.advance();
            slow.advance();
            REQUIRE(fast.state() == slow.state());
        }
        ++checked;
    }
}

TEST_CASE("an all-zero start stays empty inside the windowed simulator") {
    Simulator sim(rule_from_decimal(6, 20), MajorityTau{3}, FilamentState(30));
    for (int t = 0; t < 5; ++t) sim.advance();
    CHECK(sim.state().empty_activity());
    CHECK(sim.time() == 5);
    REQUIRE(sim.active_window());
    CHECK(sim.active_window()->second < sim.active_window()->first);
}
