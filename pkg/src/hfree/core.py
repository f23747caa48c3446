"""Hypergraph families, Venn-cell profiles, and equal-intersection analysis.

A family is a finite sequence of distinct edges (finite sets of vertex
ids). Families are kept canonical: members sorted within each edge, edges
sorted lexicographically, vertices relabeled 0..n-1 in order of first
appearance. Canonical form makes serialization, subfamily selection and
witness indices deterministic.

Vocabulary used throughout the toolkit, for k edges A_1..A_k:

* Venn cell of a nonempty S within [k]: the vertices lying in exactly the
  edges indexed by S.
* b-vector (cell counts): b_l = common size of every level-l cell.
* a-vector (intersection sizes): a_l = common size of every l-wise
  intersection.

A k-edge hypergraph where all level-l intersections have one size per
level is said to have the equal intersection property; its b-vector and
a-vector determine each other by inclusion-exclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, DuplicateEdge, NegativeCell, UnsupportedArity

Edge = tuple[int, ...]

MAX_ARITY = 16


def normalize_edge(members: Iterable[int]) -> Edge:
    """Sorted duplicate-free tuple of non-negative vertex ids."""
    e = tuple(sorted({int(v) for v in members}))
    if e and e[0] < 0:
        raise ValueError(f"negative vertex id {e[0]}")
    return e


def _canon_pass(edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
    order = sorted(edges)
    relabel: dict[int, int] = {}
    for e in order:
        for v in e:
            if v not in relabel:
                relabel[v] = len(relabel)
    return tuple(tuple(sorted(relabel[v] for v in e)) for e in order)


def _canonicalize(edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
    # Relabeling can disturb lexicographic edge order, so iterate to a
    # fixpoint; a cycle (never observed) resolves to its least state,
    # which this function then maps to itself.
    seen = {edges}
    cur = edges
    while True:
        nxt = _canon_pass(cur)
        if nxt == cur:
            return cur
        if nxt in seen:
            cycle = [nxt]
            x = _canon_pass(nxt)
            while x != nxt:
                cycle.append(x)
                x = _canon_pass(x)
            return min(cycle)
        seen.add(nxt)
        cur = nxt


class Family:
    """Immutable hypergraph family in canonical form."""

    __slots__ = ("_edges", "_n")

    def __init__(self, edges: Iterable[Iterable[int]]):
        raw = tuple(normalize_edge(e) for e in edges)
        if len(set(raw)) != len(raw):
            raise DuplicateEdge("family contains duplicate edges")
        self._edges = _canonicalize(raw)
        self._n = 1 + max((e[-1] for e in self._edges if e), default=-1)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def num_vertices(self) -> int:
        return self._n

    def bitsets(self) -> list[int]:
        bits = []
        for e in self._edges:
            b = 0
            for v in e:
                b |= 1 << v
            bits.append(b)
        return bits

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Family) and self._edges == other._edges

    def __hash__(self) -> int:
        return hash(self._edges)

    def __repr__(self) -> str:
        return f"Family(m={self.m}, n={self._n})"


def _validated(edges: Sequence[Iterable[int]]) -> list[Edge]:
    eds = [normalize_edge(e) for e in edges]
    if not 1 <= len(eds) <= MAX_ARITY:
        raise UnsupportedArity(f"need 1..{MAX_ARITY} edges, got {len(eds)}")
    if len(set(eds)) != len(eds):
        raise DuplicateEdge("edges must be pairwise distinct")
    return eds


def _bitsets(eds: Sequence[Edge]) -> list[int]:
    out = []
    for e in eds:
        b = 0
        for v in e:
            b |= 1 << v
        out.append(b)
    return out


def intersection_sizes(edges: Sequence[Iterable[int]]) -> list[int]:
    """sizes[mask] = size of the intersection of the edges in mask (mask > 0)."""
    eds = _validated(edges)
    k = len(eds)
    bits = _bitsets(eds)
    sizes = [0] * (1 << k)
    table = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        rest = mask ^ low
        inter = bits[low.bit_length() - 1]
        if rest:
            inter &= table[rest]
        table[mask] = inter
        sizes[mask] = inter.bit_count()
    return sizes


@dataclass(frozen=True)
class VennProfile:
    """Cell counts of k edges: cells maps each nonempty index subset S
    (0-based, sorted tuple) to the number of vertices in exactly the
    edges of S."""

    k: int
    cells: dict[tuple[int, ...], int]

    def cell(self, subset: Iterable[int]) -> int:
        return self.cells[tuple(sorted(subset))]

    def level_counts(self, level: int) -> list[int]:
        return [c for s, c in sorted(self.cells.items()) if len(s) == level]


def venn_profile(edges: Sequence[Iterable[int]]) -> VennProfile:
    """Full Venn-cell profile of up to 16 distinct edges."""
    eds = _validated(edges)
    k = len(eds)
    where: dict[int, int] = {}
    for i, e in enumerate(eds):
        for v in e:
            where[v] = where.get(v, 0) | (1 << i)
    cells = {
        tuple(s): 0 for l in range(1, k + 1) for s in combinations(range(k), l)
    }
    for mask in where.values():
        key = tuple(i for i in range(k) if mask >> i & 1)
        cells[key] += 1
    return VennProfile(k, cells)


@dataclass(frozen=True)
class EipViolation:
    """Two same-level intersections with different sizes (0-based edge
    positions; left is the lexicographically first subset of the level)."""

    level: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_size: int
    right_size: int


def eip_extract(edges: Sequence[Iterable[int]]):
    """b-vector of the edges, or the first violation of level-constancy.

    Scans levels 1..k; at the first level whose intersection sizes are not
    all equal, reports the lexicographically first pair of subsets that
    disagree. Otherwise returns the b-vector (a tuple of length k).
    """
    eds = _validated(edges)
    k = len(eds)
    sizes = intersection_sizes(eds)
    avec = []
    for level in range(1, k + 1):
        subs = list(combinations(range(k), level))
        ref = subs[0]
        ref_size = sizes[_mask_of(ref)]
        for s in subs[1:]:
            got = sizes[_mask_of(s)]
            if got != ref_size:
                return EipViolation(level, ref, s, ref_size, got)
        avec.append(ref_size)
    return b_from_a(tuple(avec))


def _mask_of(subset: tuple[int, ...]) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def a_from_b(b: Sequence[int]) -> tuple[int, ...]:
    """Intersection sizes from cell counts: a_i = sum_j C(k-i, j-i) b_j."""
    b = _int_vector(b)
    k = len(b)
    return tuple(
        sum(comb(k - i, j - i) * b[j - 1] for j in range(i, k + 1))
        for i in range(1, k + 1)
    )


def b_from_a(a: Sequence[int]) -> tuple[int, ...]:
    """Cell counts from intersection sizes by inclusion-exclusion:
    b_i = sum_j (-1)^(j-i) C(k-i, j-i) a_j. Raises NegativeCell when the
    sizes are not realizable by any k edges."""
    a = _int_vector(a)
    k = len(a)
    out = []
    for i in range(1, k + 1):
        v = sum((-1) ** (j - i) * comb(k - i, j - i) * a[j - 1] for j in range(i, k + 1))
        if v < 0:
            raise NegativeCell(f"cell count b_{i} = {v} is negative")
        out.append(v)
    return tuple(out)


def _int_vector(v: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(x) for x in v)
    if not out:
        raise ValueError("empty vector")
    return out


@dataclass(frozen=True)
class Even:
    """Every same-level family of intersections is empty or nonempty as one."""


@dataclass(frozen=True)
class Uneven:
    """Witness: at `level`, the edges in `nonempty` intersect while the
    edges in `empty` do not (0-based edge positions)."""

    level: int
    nonempty: tuple[int, ...]
    empty: tuple[int, ...]


EvennessVerdict = Even | Uneven


def evenness_classify(edges: Sequence[Iterable[int]]) -> EvennessVerdict:
    """Evenness of a k-edge hypergraph.

    Even means: for every level l, the l-wise intersections are all empty
    or all nonempty. The returned Uneven witness carries the smallest
    offending level and the lexicographically first nonempty/empty pair.
    """
    eds = _validated(edges)
    k = len(eds)
    sizes = intersection_sizes(eds)
    for level in range(1, k + 1):
        first_nonempty = None
        first_empty = None
        for s in combinations(range(k), level):
            if sizes[_mask_of(s)] > 0:
                if first_nonempty is None:
                    first_nonempty = s
            elif first_empty is None:
                first_empty = s
            if first_nonempty is not None and first_empty is not None:
                return Uneven(level, first_nonempty, first_empty)
    return Even()


def is_pattern_copy(edges: Sequence[Iterable[int]], b: Sequence[int]) -> bool:
    """True iff the k edges realize exactly the cell counts b.

    Equivalent to eip_extract(edges) == b: with a = a_from_b(b), the edges
    match iff every l-wise intersection has size a_l for every level l.
    """
    eds = _validated(edges)
    b = _int_vector(b)
    if len(eds) != len(b):
        raise ArityMismatch(f"{len(eds)} edges against a length-{len(b)} b-vector")
    targets = a_from_b(b)
    sizes = intersection_sizes(eds)
    for mask in range(1, 1 << len(eds)):
        if sizes[mask] != targets[mask.bit_count() - 1]:
            return False
    return True


def is_sunflower(edges: Sequence[Iterable[int]]) -> bool:
    """True iff every pairwise intersection equals the common core (as sets).

    Families of at most one edge are sunflowers trivially; so is any pair.
    """
    eds = [normalize_edge(e) for e in edges]
    if len(set(eds)) != len(eds):
        raise DuplicateEdge("edges must be pairwise distinct")
    if len(eds) <= 2:
        return True
    bits = _bitsets(eds)
    core = bits[0]
    for b in bits[1:]:
        core &= b
    for x, y in combinations(bits, 2):
        if x & y != core:
            return False
    return True


def hypergraphs_isomorphic(
    edges_a: Sequence[Iterable[int]], edges_b: Sequence[Iterable[int]]
) -> bool:
    """Edge-labeled-up-to-permutation isomorphism of two k-edge hypergraphs.

    A vertex is determined by the set of edges containing it, so two
    hypergraphs are isomorphic iff their Venn-cell functions agree under
    some permutation of edge positions.
    """
    ea = _validated(edges_a)
    eb = _validated(edges_b)
    if len(ea) != len(eb):
        return False
    k = len(ea)
    ca = venn_profile(ea).cells
    cb = venn_profile(eb).cells
    if sorted(len(e) for e in ea) != sorted(len(e) for e in eb):
        return False
    for perm in permutations(range(k)):
        if all(
            cb[tuple(sorted(perm[i] for i in s))] == c for s, c in ca.items()
        ):
            return True
    return False
