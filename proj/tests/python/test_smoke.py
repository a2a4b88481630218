import math

import numpy as np
import pytest

import actin_automata as aa


def reference_step(a, b, phi, psi):
    """Memoryless update written with numpy rolls."""
    ua = np.roll(a, 1) + np.roll(a, -1) + b + np.roll(b, 1)
    ub = np.roll(b, 1) + np.roll(b, -1) + a + np.roll(a, -1)
    table = lambda dec, k: (dec >> (4 - k)) & 1
    na = np.where(a == 1, table(psi, ua), table(phi, ua))
    nb = np.where(b == 1, table(psi, ub), table(phi, ub))
    return na.astype(np.uint8), nb.astype(np.uint8)


def test_rule_basics():
    r = aa.Rule(10, 10)
    assert repr(r) == "R(10,10)"
    assert (r.phi, r.psi, r.index) == (10, 10, 330)
    assert aa.Rule.parse("R(7,4)") == aa.Rule(7, 4)
    assert len(aa.enumerate_rules()) == 1024
    assert [x.apply(0, 2) for x in aa.rule_set("travelling")] == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        aa.Rule(32, 0)


def test_ahistoric_run_matches_numpy_reference():
    rule = aa.Rule(14, 9)
    a, b = aa.run(rule, "ahistoric", 64, 30, rng_seed=5)
    assert a.shape == (30, 64) and a.dtype == np.uint8
    a0, b0 = aa.initial_state(64, rng_seed=5)
    assert np.array_equal(a[0], a0) and np.array_equal(b[0], b0)
    for t in range(29):
        na, nb = reference_step(a[t], b[t], rule.phi, rule.psi)
        assert np.array_equal(a[t + 1], na)
        assert np.array_equal(b[t + 1], nb)


def test_memory_reductions_are_ahistoric():
    rule = aa.Rule(6, 20)
    base = aa.run(rule, "ahistoric", 50, 60, rng_seed=9)
    for memory in ("alpha:0.5", "tau:2"):
        other = aa.run(rule, memory, 50, 60, rng_seed=9)
        assert np.array_equal(base[0], other[0]) and np.array_equal(base[1], other[1])


def test_random_pattern_entropy_near_ceiling():
    gen = np.random.default_rng(3)
    h, d = aa.entropy(gen.integers(0, 2, size=(1000, 300), dtype=np.uint8))
    assert abs(h - math.log(512)) < 0.02
    assert abs(d - (1 - 1 / 512)) < 0.002


def test_block_census_total():
    pattern = np.zeros((5, 7), dtype=np.uint8)
    pattern[2, 3] = 1
    counts = aa.block_census(pattern)
    assert counts.sum() == 3 * 7
    assert counts[0] == 21 - 9


def test_classify_and_collide():
    glider = aa.classify(aa.Rule(7, 4), "ahistoric", "[001,111]")
    assert glider["class"] == "glider" and glider["displacement"] != 0
    assert aa.classify(aa.Rule(6, 16), "tau:3", "[00001,10101]")["class"] == "still_life"
    report = aa.collide(aa.Rule(14, 24), "alpha:0.55", "[1,0]", distance=51, steps=301, n=1200)
    assert report["parts"] == 2
    assert report["interaction_time"] is not None and report["approaching"]


def test_damage_and_sweep():
    d = aa.damage(aa.Rule(14, 9), "alpha:0.9", rng_seed=1)
    assert len(d["hamming"]) == 150 and d["hamming"][0] == 1
    rules = [aa.Rule(10, 10), aa.Rule(0, 0)]
    one = aa.sweep("ahistoric", rng_seed=4, n=60, steps=80, rules=rules, jobs=1)
    two = aa.sweep("ahistoric", rng_seed=4, n=60, steps=80, rules=rules, jobs=2)
    assert one == two and [r for r, _, _ in one] == rules


def test_render_header_and_errors():
    a, b = aa.run(aa.Rule(10, 10), "ahistoric", 20, 10, seed="[1,0]")
    image = aa.render(a, b, stacked=True)
    assert image.startswith(b"P6\n20 21\n255\n")
    with pytest.raises(ValueError):
        aa.run(aa.Rule(10, 10), "tau:0", rng_seed=1)
    with pytest.raises(ValueError):
        aa.run(aa.Rule(10, 10), "ahistoric")
    with pytest.raises(ValueError):
        aa.parse_seed("[10,1]")
