"""Exact H-free search, extraction routines, and the probabilistic bound."""

import math
import random
from itertools import combinations

import pytest

from hfree.constructions import build_fdk, build_level_intersecting, build_sunflower
from hfree.core import Family, hypergraphs_isomorphic, is_pattern_copy, is_sunflower
from hfree.errors import (
    BudgetExceeded,
    NotUniform,
    SunflowerPattern,
    UnsupportedDimension,
)
from hfree.geometry import build_plane, dual_family
from hfree.oracle import (
    ConflictHypergraph,
    bvector_pattern,
    conflict_hypergraph,
    ex_exact,
    hfree_extract,
    homogeneous_extract,
    isomorphism_pattern,
    max_independent_spencer,
    sunflower_extract,
    sunflower_pattern,
)

TRIANGLE = Family([[0, 1], [1, 2], [0, 2]])


def brute_ex(m, conflicts):
    """Largest conflict-free index set, lexicographically least witness."""
    conf = [frozenset(c) for c in conflicts]
    for size in range(m, -1, -1):
        for sub in combinations(range(m), size):
            chosen = set(sub)
            if not any(c <= chosen for c in conf):
                return size, sub
    raise AssertionError("unreachable: the empty set is conflict-free")


def random_family(rng, m, size, pool):
    if math.comb(pool, size) < m:
        raise ValueError(f"pool of {pool} cannot supply {m} distinct edges")
    edges = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(pool), size))))
    return Family(edges)


# ----------------------------------------------------------------- patterns


def test_bvector_pattern_levels():
    p = bvector_pattern((5, 3, 1))
    assert p.k == 3
    assert p.levels == (5, 3, 1)
    assert p.matcher([[0, 1], [1, 2], [0, 2]]) is False


def test_sunflower_pattern_matsend():
    p = sunflower_pattern(3)
    assert p.k == 3
    assert p.levels is None
    assert p.matcher([[0, 1, 2], [0, 3, 4], [0, 5, 6]])


def test_isomorphism_pattern_matches_relabels():
    p = isomorphism_pattern(TRIANGLE)
    assert p.k == 3
    assert p.matcher([[5, 9], [2, 9], [2, 5]])
    assert not p.matcher([[0, 1], [1, 2], [2, 3]])


# ------------------------------------------------------- conflict hypergraph


def test_conflict_hypergraph_fast_path_equals_matcher_path():
    fam = dual_family(build_plane(3))
    fast = conflict_hypergraph(fam, bvector_pattern((5, 3, 1)))
    slow = [
        sub
        for sub in combinations(range(fam.m), 3)
        if is_pattern_copy([fam.edges[i] for i in sub], (5, 3, 1))
    ]
    assert list(fast.conflicts) == slow
    assert fast.n == fam.m and fast.k == 3


def test_conflict_hypergraph_budget():
    fam = Family([[i, 50 + i] for i in range(40)])
    with pytest.raises(BudgetExceeded):
        conflict_hypergraph(fam, bvector_pattern((1,) * 8))


def test_conflict_hypergraph_on_random_family():
    rng = random.Random(2)
    fam = random_family(rng, 9, 3, 12)
    got = conflict_hypergraph(fam, bvector_pattern((1, 1, 1)))
    expect = [
        sub
        for sub in combinations(range(9), 3)
        if is_pattern_copy([fam.edges[i] for i in sub], (1, 1, 1))
    ]
    assert list(got.conflicts) == expect


# -------------------------------------------------------------------- ex


def test_ex_exact_dual_plane():
    fam = dual_family(build_plane(3))
    res = ex_exact(fam, bvector_pattern((5, 3, 1)))
    assert res.value == 2
    assert res.witness == (0, 1)
    assert res.subfamily == Family([fam.edges[0], fam.edges[1]])


def test_ex_exact_explored_is_deterministic():
    fam = dual_family(build_plane(3))
    p = bvector_pattern((5, 3, 1))
    a = ex_exact(fam, p)
    b = ex_exact(fam, p)
    assert a.explored == b.explored > 0


def test_ex_exact_sunflower_family():
    fam = build_sunflower(6, 3, 1)
    res = ex_exact(fam, sunflower_pattern(3))
    assert res.value == 2


def test_ex_exact_against_brute_force():
    rng = random.Random(5)
    for trial in range(25):
        fam = random_family(rng, rng.randint(4, 8), 3, 10)
        b = (rng.randint(0, 2), rng.randint(0, 1), rng.randint(0, 1))
        if sum(b) == 0:
            b = (1, 0, 1)
        pattern = bvector_pattern(b)
        ch = conflict_hypergraph(fam, pattern)
        want_value, want_witness = brute_ex(fam.m, ch.conflicts)
        res = ex_exact(fam, pattern)
        assert res.value == want_value, (trial, b)
        assert res.witness == want_witness, (trial, b)


# ------------------------------------------------------- sunflower extract


def test_sunflower_extract_identity_on_sunflower():
    fam = build_sunflower(5, 4, 2)
    assert sunflower_extract(fam, 4) == fam


def test_sunflower_extract_needs_uniform():
    with pytest.raises(NotUniform):
        sunflower_extract(Family([[0, 1], [2, 3, 4]]), 2)


def test_sunflower_extract_guarantee():
    # Families above the r!(p-1)^r threshold must yield p petals.
    rng = random.Random(11)
    for r in (2, 3):
        for trial in range(20):
            m = rng.randint(3, 40)
            pool = 2 * r
            while math.comb(pool, r) < m + 5:
                pool += 1
            fam = random_family(rng, m, r, rng.randint(pool, pool + 2 * r))
            out = sunflower_extract(fam, r)
            assert is_sunflower(out.edges)
            petals = 1
            while m > math.factorial(r) * petals ** r:
                petals += 1
            assert out.m >= petals, (r, m, fam.edges)


# ----------------------------------------------------------- hfree extract


def test_hfree_extract_rejects_sunflower_patterns():
    with pytest.raises(SunflowerPattern):
        hfree_extract(build_sunflower(6, 3, 1), [build_sunflower(3, 2, 0)])


def test_hfree_extract_nonuniform_pattern_drops_one_size():
    pattern = Family([[0, 1], [2, 3, 4]])
    edges = [[2 * i, 2 * i + 1] for i in range(6)]
    edges += [[20 + 3 * i, 21 + 3 * i, 22 + 3 * i] for i in range(4)]
    fam = Family(edges)
    out, cert = hfree_extract(fam, [pattern])
    assert cert.result is True
    assert cert.claim == "pattern_free_extraction"
    assert out.m == 6
    assert {len(e) for e in out.edges} == {2}


def test_hfree_extract_uniform_nonsunflower_pattern():
    rng = random.Random(23)
    fam = random_family(rng, 30, 2, 14)
    out, cert = hfree_extract(fam, [TRIANGLE])
    assert cert.result is True
    assert out.m >= 1
    for sub in combinations(range(out.m), 3):
        assert not hypergraphs_isomorphic(
            [out.edges[i] for i in sub], TRIANGLE.edges
        )


def test_hfree_extract_certificate_parameters():
    rng = random.Random(3)
    fam = random_family(rng, 12, 3, 9)
    pattern = Family([[0, 1, 2], [0, 1, 3], [0, 4, 5]])
    out, cert = hfree_extract(fam, [pattern])
    assert cert.result is True
    assert cert.parameters["m"] == 12
    assert cert.parameters["size"] == out.m
    assert 0 < cert.parameters["exponent"] <= 1
    assert cert.parameters["constant"] > 0


# ------------------------------------------------------ homogeneous extract


def intersecting(e, f):
    return bool(set(e) & set(f))


def test_homogeneous_pairs_guarantee_and_homogeneity():
    rng = random.Random(7)
    for trial in range(10):
        m = rng.choice([16, 33, 64, 100])
        fam = random_family(rng, m, 2, rng.randint(15, 30))
        out, verdict = homogeneous_extract(fam, 2, intersecting)
        assert out.m >= math.floor(0.5 * math.log2(m))
        for e, f in combinations(out.edges, 2):
            assert intersecting(e, f) is verdict


def test_homogeneous_pairs_on_all_disjoint():
    fam = build_sunflower(16, 2, 0)
    out, verdict = homogeneous_extract(fam, 2, intersecting)
    assert verdict is False
    assert out.m >= 2


def test_homogeneous_triples():
    def no_common_vertex(e, f, g):
        return not (set(e) & set(f) & set(g))

    rng = random.Random(13)
    for trial in range(8):
        fam = random_family(rng, 40, 3, 10)
        out, verdict = homogeneous_extract(fam, 3, no_common_vertex)
        assert out.m >= 2
        for e, f, g in combinations(out.edges, 3):
            assert no_common_vertex(e, f, g) is verdict


def test_homogeneous_rejects_other_dimensions():
    fam = build_sunflower(4, 2, 0)
    with pytest.raises(UnsupportedDimension):
        homogeneous_extract(fam, 4, lambda *es: True)


# ------------------------------------------------------------ spencer bound


def test_spencer_bound_formula():
    conflicts = tuple(combinations(range(6), 3))
    graph = ConflictHypergraph(6, 3, conflicts)
    value, bound = max_independent_spencer(graph)
    assert value == 2
    k, n, e = 3, 6, len(conflicts)
    assert bound == pytest.approx((k - 1) / k * (n ** k / (k * e)) ** (1 / (k - 1)))
    assert value >= bound


def test_spencer_no_conflicts():
    graph = ConflictHypergraph(5, 3, ())
    assert max_independent_spencer(graph) == (5, 0.0)


def test_spencer_budget():
    graph = ConflictHypergraph(65, 3, ((0, 1, 2),))
    with pytest.raises(BudgetExceeded):
        max_independent_spencer(graph)
