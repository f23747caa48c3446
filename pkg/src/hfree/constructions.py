"""Builders for the extremal families and the uniform-pattern verifier.

All builders return canonical Family objects; degenerate parameter choices
that would collapse two edges into one surface as DuplicateEdge from the
Family constructor rather than silently deduplicating.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from . import kernels
from .certify import Certificate
from .core import Family, a_from_b, eip_extract
from .errors import BudgetExceeded, InvalidCore, SizeMismatch, TooFewEdges

ENUMERATION_BUDGET = 10**7


def build_sunflower(m: int, r: int, core: int) -> Family:
    """m edges of size r sharing a fixed core of `core` vertices, with the
    petals pairwise disjoint. core == r collapses to one repeated edge and
    is rejected for m >= 2."""
    if m < 1:
        raise TooFewEdges(f"need m >= 1, got {m}")
    if not 0 <= core <= r:
        raise InvalidCore(f"core must lie in 0..{r}, got {core}")
    shared = tuple(range(core))
    edges = []
    nxt = core
    for _ in range(m):
        edges.append(shared + tuple(range(nxt, nxt + r - core)))
        nxt += r - core
    return Family(edges)


def build_fdk(m: int, d: Sequence[int]) -> Family:
    """The m-edge family with cell multiplicities d = (d_1, .., d_k).

    For each l < k and each l-subset S of the edge indices, d_l dedicated
    vertices lie in exactly the edges of S; d_k vertices lie in all m
    edges. Every k-subset of the result realizes the same b-vector, the
    image of d under the multiplicity-to-cell chain.

    Vertices are numbered level by level, subsets in lexicographic order,
    multiplicity index last, which reproduces a fixed listing edge for
    edge.
    """
    d = tuple(int(v) for v in d)
    k = len(d)
    if k < 1:
        raise ValueError("d must be nonempty")
    if any(v < 0 for v in d):
        raise ValueError(f"multiplicities must be >= 0, got {d}")
    if m < k:
        raise TooFewEdges(f"need m >= k = {k}, got {m}")
    members: list[list[int]] = [[] for _ in range(m)]
    nxt = 0
    for level in range(1, k):
        for subset in combinations(range(m), level):
            for _ in range(d[level - 1]):
                for i in subset:
                    members[i].append(nxt)
                nxt += 1
    for _ in range(d[k - 1]):
        for i in range(m):
            members[i].append(nxt)
        nxt += 1
    return Family(members)


def build_level_intersecting(m: int, level: int) -> Family:
    """Edges F_i = all level-subsets of [m] containing i, over the
    C(m, level) subset-vertices. Every j-wise intersection has size
    C(m - j, level - j), so all small subfamilies are even."""
    if not 1 <= level <= m:
        raise ValueError(f"need 1 <= level <= m, got level={level}, m={m}")
    index = {s: i for i, s in enumerate(combinations(range(m), level))}
    edges = [
        [index[s] for s in index if i in s]
        for i in range(m)
    ]
    if level == m and m > 1:
        # Degenerate corner: the lone level-m subset is every edge, so the
        # edges coincide as sets. A private tag per edge keeps them
        # distinct without touching any intersection at levels >= 2.
        for i, e in enumerate(edges):
            e.append(1 + i)
    return Family(edges)


def pad_family(f: Family, extra: int) -> Family:
    """Add `extra` fresh single-edge vertices to every edge, raising the
    first cell count by extra and leaving deeper cells unchanged."""
    if extra < 0:
        raise ValueError(f"extra must be >= 0, got {extra}")
    nxt = f.num_vertices
    edges = []
    for e in f.edges:
        edges.append(e + tuple(range(nxt, nxt + extra)))
        nxt += extra
    return Family(edges)


def merge_families(f: Family, g: Family) -> Family:
    """Disjoint-union edges positionally: edge i of the result is edge i of
    f together with edge i of g on shifted vertex labels. Cell counts of
    equal-size subfamilies add."""
    if f.m != g.m:
        raise SizeMismatch(f"edge counts differ: {f.m} != {g.m}")
    shift = f.num_vertices
    edges = [
        fe + tuple(v + shift for v in ge) for fe, ge in zip(f.edges, g.edges)
    ]
    return Family(edges)


def take_subfamily(f: Family, m2: int) -> Family:
    """First m2 edges in canonical order."""
    if not 0 <= m2 <= f.m:
        raise TooFewEdges(f"cannot take {m2} edges from {f.m}")
    return Family(f.edges[:m2])


def verify_uniform_pattern(f: Family, b: Sequence[int], threads: int | None = None) -> Certificate:
    """Certify that every k-subset of f realizes exactly the cell counts b.

    Equivalent to checking, for every level l <= k, that every l-wise
    intersection has size a_l with a = a_from_b(b); the scan kernels do
    that with shared-prefix pruning. A false certificate carries the
    lexicographically first failing k-subset and its measured profile.
    """
    b = tuple(int(v) for v in b)
    k = len(b)
    if f.m < k:
        raise TooFewEdges(f"family has {f.m} edges, pattern needs {k}")
    if comb(f.m, k) > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"C({f.m},{k}) k-subsets exceed the {ENUMERATION_BUDGET} budget"
        )
    targets = a_from_b(b)
    bad = kernels.verify_level_targets(f.edges, f.num_vertices, k, targets, threads)
    params = {"b": list(b), "m": f.m, "subsets": comb(f.m, k)}
    if bad is None:
        return Certificate(claim="uniform_pattern", parameters=params, result=True)
    found = eip_extract([f.edges[i] for i in bad])
    witness = {
        "indices": list(bad),
        "found": list(found) if isinstance(found, tuple) else found,
    }
    return Certificate(
        claim="uniform_pattern", parameters=params, result=False, witness=witness
    )
