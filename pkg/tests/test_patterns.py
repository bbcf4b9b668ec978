from fractions import Fraction

import pytest

from truncdom import (
    BroadcastSet,
    InjectivityError,
    PeriodicPattern,
    Vertex,
    ball,
    build_grid,
    catalog,
    catalog_pattern,
    density,
    density_search,
    pattern_from_json,
    reception_map,
    torus_gamma,
    verify_infinite,
)
from truncdom.intlattice import PeriodLattice
from truncdom.patterns import injectivity_violation


CATALOG_DENSITIES = {
    (2, 1): Fraction(1, 4),
    (2, 2): Fraction(1, 2),
    (3, 1): Fraction(1, 8),
    (3, 2): Fraction(1, 6),
    (3, 3): Fraction(1, 4),
    (4, 1): Fraction(1, 12),
}


def test_catalog_entries_and_densities():
    entries = catalog()
    assert [key for key, _ in entries] == list(CATALOG_DENSITIES)
    for key, pattern in entries:
        assert density(pattern) == CATALOG_DENSITIES[key]
        assert pattern.t == key[0]


def test_catalog_patterns_all_verify():
    for (t, r), pattern in catalog():
        check = verify_infinite(pattern, r)
        assert check.valid, (t, r)
        assert check.min_reception >= r


def test_strength2_r2_pattern_receptions():
    check = verify_infinite(catalog_pattern(2, 2), 2)
    towers = catalog_pattern(2, 2).tower_classes()
    outside = [got for u, got in check.class_receptions if u not in towers]
    assert outside == [3, 3, 3, 3]
    assert check.max_nonbroadcaster_reception == 3
    # the towers themselves hear nothing but their own signal
    inside = [got for u, got in check.class_receptions if u in towers]
    assert inside == [2, 2, 2, 2]


def test_all_tops_strength3_receptions():
    # side vertices hear three tops (2+1+1), the square bottom only two
    # (2+1): the maximum excess is 4 but not every class reaches it
    check = verify_infinite(catalog_pattern(3, 3), 3)
    towers = catalog_pattern(3, 3).tower_classes()
    outside = sorted(got for u, got in check.class_receptions if u not in towers)
    assert outside == [3, 4, 4]
    assert check.max_nonbroadcaster_reception == 4
    assert check.min_reception == 3


def test_removing_any_tower_class_breaks_every_catalog_pattern():
    for (t, r), pattern in catalog():
        for drop in range(len(pattern.reps)):
            reps = tuple(v for i, v in enumerate(pattern.reps) if i != drop)
            smaller = PeriodicPattern(pattern.basis, reps, pattern.t)
            assert not verify_infinite(smaller, r).valid, (t, r, drop)


def test_deleting_the_spread_tower_from_the_distance3_pattern():
    pattern = catalog_pattern(3, 1)
    kept = PeriodicPattern(pattern.basis, (Vertex(2, 0, 0),), 3)
    check = verify_infinite(kept, 1)
    assert not check.valid
    assert check.deficient  # whole residue rows go silent


def test_pattern_validation():
    with pytest.raises(ValueError):
        PeriodicPattern(((1, 0), (2, 0)), (Vertex(0, 0, 0),), 2)  # singular
    with pytest.raises(ValueError):
        # (0,(1,1)) and (0,(0,0)) name the same class mod the diagonal lattice
        PeriodicPattern(((1, 1), (0, 2)), (Vertex(0, 0, 0), Vertex(0, 1, 1)), 2)
    with pytest.raises(ValueError):
        PeriodicPattern(((1, 0), (0, 1)), (Vertex(4, 0, 0),), 2)
    with pytest.raises(ValueError):
        verify_infinite(catalog_pattern(3, 1), 4)  # r > t


def test_density_of_empty_pattern():
    empty = PeriodicPattern(((1, 0), (0, 1)), (), 2)
    assert density(empty) == 0
    assert not verify_infinite(empty, 1).valid


def test_pattern_json_round_trip():
    for _, pattern in catalog():
        assert pattern_from_json(pattern.to_json()) == pattern
    with pytest.raises(ValueError):
        pattern_from_json({"t": 2, "basis": [[1, 0]], "reps": []})


def test_patterns_cover_grid_interiors():
    # cross-module check: restrict each pattern to a window and make sure
    # no vertex whose whole ball lies inside the window is deficient
    for (t, r), pattern in catalog():
        lat = pattern.lattice()
        towers = pattern.tower_classes()
        g = build_grid(6, 6)
        chosen = frozenset(
            g.index_of[v]
            for v in g.coords
            if Vertex(v.a, *lat.reduce(v.x, v.y)) in towers
        )
        values = reception_map(g, BroadcastSet(chosen, t))
        for i, v in enumerate(g.coords):
            if all(w in g.index_of for w in ball(v, t)):
                assert values[i] >= r, (t, r, v)


def test_verifier_matches_window_reception_on_random_patterns():
    # exact agreement between the two reception code paths (infinite BFS
    # with class reduction vs finite-graph accumulation), including on
    # invalid patterns
    import random

    from truncdom.intlattice import hnf_lattices

    rng = random.Random(4242)
    lattices = list(hnf_lattices(5))
    g = build_grid(7, 7)
    for _ in range(25):
        lat = lattices[rng.randrange(len(lattices))]
        t = rng.randrange(2, 5)
        r = rng.randrange(1, t + 1)
        classes = [Vertex(a, x, y) for x, y in lat.squares() for a in range(4)]
        reps = tuple(rng.sample(classes, rng.randrange(1, max(2, len(classes) // 2))))
        p = PeriodicPattern(lat.basis(), reps, t)
        by_class = dict(verify_infinite(p, r).class_receptions)
        towers_cls = p.tower_classes()
        towers = frozenset(
            g.index_of[v]
            for v in g.coords
            if Vertex(v.a, *lat.reduce(v.x, v.y)) in towers_cls
        )
        values = reception_map(g, BroadcastSet(towers, t))
        for i, v in enumerate(g.coords):
            if all(w in g.index_of for w in ball(v, t)):
                assert values[i] == by_class[Vertex(v.a, *lat.reduce(v.x, v.y))]


def test_injectivity_condition():
    assert injectivity_violation(PeriodLattice.from_basis((1, 1), (0, 4)), 3) is None
    hit = injectivity_violation(PeriodLattice.from_basis((1, 0), (0, 1)), 3)
    assert hit is not None
    vector, displacement = hit
    assert displacement == 3  # one square over costs three steps
    # strength 2 only needs displacement 2, which any lattice clears
    assert injectivity_violation(PeriodLattice.from_basis((1, 0), (0, 1)), 2) is None


def test_torus_gamma_examples():
    count, pattern = torus_gamma(((1, 1), (0, 4)), 3, 1)
    assert count == 2
    assert density(pattern) == Fraction(1, 8)
    assert verify_infinite(pattern, 1).valid

    with pytest.raises(InjectivityError) as info:
        torus_gamma(((1, 0), (0, 1)), 3, 1)
    assert info.value.displacement == 3

    count, pattern = torus_gamma(((1, 3), (0, 6)), 4, 1)
    assert count <= 2
    assert verify_infinite(pattern, 1).valid

    count, pattern = torus_gamma(((1, 0), (0, 1)), 2, 1)
    assert count == 1  # the 4-vertex quotient collapses to K4
    assert verify_infinite(pattern, 1).valid


def test_density_search_small():
    out = density_search(3, 3, 1)
    assert out.complete
    assert out.density == Fraction(1, 4)  # the all-tops pattern, at index 1
    assert len(out.pattern.reps) == 1

    out = density_search(3, 1, 4)
    assert out.complete
    assert out.density == Fraction(1, 8)
    assert verify_infinite(out.pattern, 1).valid


def test_density_search_budget_flag():
    out = density_search(3, 2, 6, time_limit=1e-6)
    assert not out.complete
    if out.pattern is not None:
        assert verify_infinite(out.pattern, 2).valid


def test_density_search_threads_match_serial():
    serial = density_search(3, 1, 4)
    threaded = density_search(3, 1, 4, threads=2)
    assert threaded.density == serial.density
    assert threaded.complete
