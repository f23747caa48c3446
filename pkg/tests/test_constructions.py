"""Builders for sunflowers, the multiplicity construction, and level families."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfree.constructions import (
    build_fdk,
    build_level_intersecting,
    build_sunflower,
    merge_families,
    pad_family,
    take_subfamily,
    verify_uniform_pattern,
)
from hfree.core import Family, a_from_b, b_from_a, eip_extract, is_sunflower
from hfree.errors import (
    DuplicateEdge,
    InvalidCore,
    SizeMismatch,
    TooFewEdges,
)
from hfree.linalg import a_from_d

# The 4-edge, d = (1,2,3) construction in canonical labels, transcribed by
# hand from its defining cell layout: one private vertex per edge, two
# vertices per edge pair, three core vertices.
FDK_4_123 = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (1, 2, 7, 8, 9, 10, 11, 12, 13, 14),
    (3, 4, 7, 8, 9, 11, 12, 15, 16, 17),
    (5, 6, 7, 8, 9, 13, 14, 16, 17, 18),
)


# ---------------------------------------------------------------- sunflower


def test_sunflower_disjoint_petals():
    f = build_sunflower(3, 2, 0)
    assert f.edges == ((0, 1), (2, 3), (4, 5))


def test_sunflower_with_core():
    f = build_sunflower(5, 3, 1)
    assert f.m == 5
    assert all(len(e) == 3 for e in f.edges)
    assert is_sunflower(f.edges)
    assert eip_extract(f.edges) == (2, 0, 0, 0, 1)


def test_sunflower_argument_errors():
    with pytest.raises(TooFewEdges):
        build_sunflower(0, 3, 1)
    with pytest.raises(InvalidCore):
        build_sunflower(3, 2, 3)
    with pytest.raises(InvalidCore):
        build_sunflower(3, 2, -1)
    # core == r leaves no private vertices, so the edges coincide
    with pytest.raises(DuplicateEdge):
        build_sunflower(2, 2, 2)


@settings(max_examples=60)
@given(st.integers(1, 8), st.integers(1, 6), st.data())
def test_sunflower_profile(m, r, data):
    core = data.draw(st.integers(0, r - 1))
    f = build_sunflower(m, r, core)
    assert is_sunflower(f.edges)
    assert f.num_vertices == core + m * (r - core)


# --------------------------------------------------- multiplicity families


def test_fdk_reproduces_listing():
    assert build_fdk(4, (1, 2, 3)).edges == FDK_4_123


def test_fdk_profile_matches_multiplicities():
    f = build_fdk(4, (1, 2, 3))
    for triple in combinations(range(4), 3):
        assert eip_extract([f.edges[i] for i in triple]) == (3, 2, 3)


def test_fdk_edge_sizes():
    # Every edge has a_1 vertices.
    for m, d in [(5, (1, 0, 2)), (6, (0, 1, 0)), (7, (2, 1, 1, 1))]:
        f = build_fdk(m, d)
        a1 = a_from_d(d, m)[0]
        assert all(len(e) == a1 for e in f.edges)


def test_fdk_argument_errors():
    with pytest.raises(TooFewEdges):
        build_fdk(2, (1, 1, 1))
    with pytest.raises(ValueError):
        build_fdk(5, (1, -1, 0))
    with pytest.raises(ValueError):
        build_fdk(5, ())
    # all-zero multiplicities collapse every edge to the empty set
    with pytest.raises(DuplicateEdge):
        build_fdk(5, (0, 0, 0))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_fdk_every_ksubset_realizes_b(data):
    k = data.draw(st.integers(3, 4))
    m = data.draw(st.integers(k, 7))
    d = data.draw(
        st.lists(st.integers(0, 2), min_size=k, max_size=k).filter(
            lambda v: sum(v[:-1]) > 0
        )
    )
    f = build_fdk(m, d)
    b = b_from_a(a_from_d(d, m))
    cert = verify_uniform_pattern(f, b)
    assert cert.result is True


# --------------------------------------------------------- level families


def test_level_intersecting_wise_intersections():
    # l-wise intersections are nonempty exactly up to the level cap.
    for m in range(1, 8):
        for level in range(1, m + 1):
            f = build_level_intersecting(m, level)
            assert f.m == m
            for l in range(1, m + 1):
                nonempty = [
                    set.intersection(*(set(f.edges[i]) for i in sub))
                    for sub in combinations(range(m), l)
                ]
                if l <= level:
                    assert all(nonempty)
                else:
                    assert not any(nonempty)


def test_level_intersecting_rejects_bad_level():
    with pytest.raises(ValueError):
        build_level_intersecting(4, 0)
    with pytest.raises(ValueError):
        build_level_intersecting(4, 5)


# ------------------------------------------------------------ family tools


def test_pad_family_grows_private_cells():
    base = build_sunflower(3, 3, 1)
    padded = pad_family(base, 2)
    assert padded.m == base.m
    assert eip_extract(padded.edges) == (4, 0, 1)
    with pytest.raises(ValueError):
        pad_family(base, -1)


def test_merge_families_disjoint_union_per_edge():
    f = build_sunflower(3, 2, 0)
    g = build_sunflower(3, 2, 1)
    merged = merge_families(f, g)
    assert merged.m == 3
    assert all(len(e) == 4 for e in merged.edges)
    with pytest.raises(SizeMismatch):
        merge_families(f, build_sunflower(4, 2, 0))


def test_take_subfamily():
    f = build_fdk(5, (1, 1, 1))
    sub = take_subfamily(f, 3)
    assert sub.m == 3
    assert eip_extract(sub.edges) == eip_extract(f.edges[:3])
    assert take_subfamily(f, 0).m == 0
    with pytest.raises(TooFewEdges):
        take_subfamily(f, 6)


def test_take_subfamily_keeps_uniform_pattern():
    f = build_fdk(6, (0, 1, 0))
    sub = take_subfamily(f, 4)
    assert verify_uniform_pattern(sub, (3, 1, 0)).result


# ------------------------------------------------------- pattern verifier


def test_verify_uniform_pattern_true_case():
    cert = verify_uniform_pattern(build_fdk(6, (0, 1, 0)), (3, 1, 0))
    assert cert.result is True
    assert cert.claim == "uniform_pattern"
    assert tuple(cert.parameters["b"]) == (3, 1, 0)
    assert cert.witness is None


def test_verify_uniform_pattern_false_reports_first_failure():
    base = build_fdk(5, (1, 1, 1))
    # Swap one edge for a disjoint one; subsets through it now disagree.
    edges = list(base.edges)
    n = base.num_vertices
    edges[-1] = range(n, n + len(edges[-1]))
    broken = Family(edges)
    cert = verify_uniform_pattern(broken, (1, 1, 1))
    assert cert.result is False
    indices = tuple(cert.witness["indices"])
    assert indices == min(
        sub
        for sub in combinations(range(5), 3)
        if eip_extract([broken.edges[i] for i in sub]) != (1, 1, 1)
    )


def test_verify_uniform_pattern_needs_enough_edges():
    with pytest.raises(TooFewEdges):
        verify_uniform_pattern(build_sunflower(2, 2, 0), (1, 1, 1))
