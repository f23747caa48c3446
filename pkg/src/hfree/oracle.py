"""Exact extremal search over small families.

The central reduction: fix a forbidden pattern on k edges and record
every k-subset of the family that realizes it as a conflict. The largest
pattern-free subfamily is then a maximum independent set in the conflict
hypergraph, which an exact branch-and-bound solver finds together with
the lexicographically least optimal witness. Extraction routines
complement the solver with constructive guarantees: sunflowers from
uniform families, pattern avoidance by size splitting, and homogeneous
subfamilies under a pair or triple predicate.

Everything here is exhaustive and deterministic. Enumeration is capped
by ENUMERATION_BUDGET on the number of k-subsets and the independent-set
solver refuses conflict graphs on more than MAX_SOLVE_VERTICES family
edges; both raise BudgetExceeded rather than degrade to a heuristic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Callable, Sequence

from . import kernels
from .certify import Certificate
from .constructions import ENUMERATION_BUDGET
from .core import (
    Edge,
    Family,
    a_from_b,
    hypergraphs_isomorphic,
    is_pattern_copy,
    is_sunflower,
)
from .errors import (
    BudgetExceeded,
    NotUniform,
    SunflowerPattern,
    UnsupportedDimension,
)

MAX_SOLVE_VERTICES = 64


@dataclass(frozen=True)
class Pattern:
    """A forbidden configuration on k edges, recognized by ``matcher``.

    ``levels`` holds the cell-count vector when the pattern is an exact
    intersection profile; the scanner then runs the subset-intersection
    kernel instead of calling the matcher on every k-subset.
    """

    k: int
    name: str
    matcher: Callable[[tuple[Edge, ...]], bool]
    levels: tuple[int, ...] | None = None


def bvector_pattern(b: Sequence[int]) -> Pattern:
    """Pattern matching exact copies of the profile with cell counts b."""
    levels = tuple(int(x) for x in b)
    return Pattern(
        k=len(levels),
        name=f"cells{levels}",
        matcher=lambda edges: is_pattern_copy(edges, levels),
        levels=levels,
    )


def sunflower_pattern(q: int) -> Pattern:
    """Pattern matching every q-edge sunflower, whatever its core."""
    if q < 1:
        raise ValueError(f"need at least one petal, got {q}")
    return Pattern(k=q, name=f"sunflower{q}", matcher=is_sunflower)


def isomorphism_pattern(target: Family, name: str | None = None) -> Pattern:
    """Pattern matching copies of a concrete family up to relabeling."""
    goal = target.edges
    return Pattern(
        k=target.m,
        name=name or f"iso{target.m}",
        matcher=lambda edges: hypergraphs_isomorphic(edges, goal),
    )


@dataclass(frozen=True)
class ConflictHypergraph:
    """Vertices 0..n-1 index the edges of some family; each conflict is a
    sorted k-tuple of vertices realizing the forbidden pattern."""

    n: int
    k: int
    conflicts: tuple[tuple[int, ...], ...]


def conflict_hypergraph(
    family: Family, pattern: Pattern, threads: int | None = None
) -> ConflictHypergraph:
    """Enumerate all pattern copies among k-subsets of the family."""
    m = family.m
    if comb(m, pattern.k) > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"{comb(m, pattern.k)} subsets exceed the "
            f"{ENUMERATION_BUDGET} enumeration budget"
        )
    if pattern.levels is not None:
        hits = kernels.enumerate_level_matches(
            family.edges,
            family.num_vertices,
            pattern.k,
            a_from_b(pattern.levels),
            threads=threads,
        )
        conflicts = tuple(tuple(h) for h in hits)
    else:
        edges = family.edges
        conflicts = tuple(
            combo
            for combo in combinations(range(m), pattern.k)
            if pattern.matcher(tuple(edges[i] for i in combo))
        )
    return ConflictHypergraph(n=m, k=pattern.k, conflicts=conflicts)


@dataclass(frozen=True)
class OracleResult:
    """Exact extremal value with the least witness realizing it.

    value     largest pattern-free subfamily size
    witness   its edge indices, lexicographically least among optima
    subfamily the witness edges as a family
    explored  branch-and-bound nodes visited, for reproducibility checks
    """

    value: int
    witness: tuple[int, ...]
    subfamily: Family
    explored: int


def ex_exact(
    family: Family, pattern: Pattern, threads: int | None = None
) -> OracleResult:
    """Largest pattern-free subfamily, by exact branch and bound.

    The witness is re-verified against the pattern matcher edge by edge,
    independently of the kernel that produced the conflict list.
    """
    graph = conflict_hypergraph(family, pattern, threads=threads)
    if graph.n > MAX_SOLVE_VERTICES:
        raise BudgetExceeded(
            f"{graph.n} vertices exceed the solver cap of {MAX_SOLVE_VERTICES}"
        )
    value, witness, explored = kernels.solve_max_independent(
        graph.n, graph.k, graph.conflicts
    )
    edges = family.edges
    for combo in combinations(witness, pattern.k):
        if pattern.matcher(tuple(edges[i] for i in combo)):
            raise AssertionError(
                f"solver witness contains a {pattern.name} copy at {combo}"
            )
    return OracleResult(
        value=value,
        witness=tuple(witness),
        subfamily=Family(edges[i] for i in witness),
        explored=explored,
    )


def _sunflower(edges: list[Edge], r: int) -> list[Edge]:
    # Greedy disjoint collection versus the lifted extraction from the
    # most popular vertex's link; the larger wins, ties to the former.
    if not edges:
        return []
    used: set[int] = set()
    disjoint = []
    for e in edges:
        if used.isdisjoint(e):
            disjoint.append(e)
            used.update(e)
    if r == 1:
        return disjoint
    counts = Counter(v for e in edges for v in e)
    pivot = min(counts, key=lambda v: (-counts[v], v))
    link = [tuple(x for x in e if x != pivot) for e in edges if pivot in e]
    lifted = [tuple(sorted((*e, pivot))) for e in _sunflower(link, r - 1)]
    return disjoint if len(disjoint) >= len(lifted) else lifted


def sunflower_extract(family: Family, r: int) -> Family:
    """Large sunflower inside an r-uniform family.

    Guarantee: if the family has more than r! * (a-1)**r edges, the
    extracted sunflower has at least a petals. Applied to a family that
    already is a sunflower it returns every edge.
    """
    if r < 1:
        raise ValueError(f"petal size must be positive, got {r}")
    for e in family.edges:
        if len(e) != r:
            raise NotUniform(f"edge {e} has size {len(e)}, expected {r}")
    return Family(_sunflower(list(family.edges), r))


def hfree_extract(
    family: Family, patterns: Sequence[Family]
) -> tuple[Family, Certificate]:
    """Subfamily avoiding every pattern, with a certified size guarantee.

    Patterns are concrete families, forbidden up to relabeling. A
    non-uniform pattern needs edges of two different sizes, so dropping
    all family edges of one of its two smallest sizes kills every copy;
    the larger remnant is kept. A uniform pattern of edge size r is
    avoided either by dropping all size-r edges (when at most half) or by
    extracting a sunflower from them, since no subfamily of a sunflower
    is isomorphic to a non-sunflower. Uniform patterns that are
    themselves sunflowers are rejected: large uniform families always
    contain them.

    The certificate records the achieved size and the constant realized
    against the m**(1/prod r_i) guarantee, with the product over the
    uniform patterns' edge sizes. The result is re-verified by a direct
    isomorphism scan before return.
    """
    uniform: list[tuple[Family, int]] = []
    mixed: list[tuple[Family, int, int]] = []
    for p in patterns:
        sizes = sorted({len(e) for e in p.edges})
        if len(sizes) == 1:
            if is_sunflower(p.edges):
                raise SunflowerPattern(
                    f"a uniform {p.m}-edge sunflower cannot be avoided at scale"
                )
            uniform.append((p, sizes[0]))
        else:
            mixed.append((p, sizes[0], sizes[1]))

    kept = list(family.edges)
    for _, small, large in mixed:
        without_small = [e for e in kept if len(e) != small]
        without_large = [e for e in kept if len(e) != large]
        kept = max(without_small, without_large, key=len)
    for _, r in uniform:
        sized = [e for e in kept if len(e) == r]
        if not sized:
            continue
        rest = [e for e in kept if len(e) != r]
        kept = rest if 2 * len(rest) >= len(kept) else _sunflower(sized, r)

    witness = None
    for pi, p in enumerate(patterns):
        if witness:
            break
        for combo in combinations(range(len(kept)), p.m):
            if hypergraphs_isomorphic([kept[i] for i in combo], p.edges):
                witness = {"pattern": pi, "positions": list(combo)}
                break
    exponent = 1.0 / prod(r for _, r in uniform) if uniform else 1.0
    constant = len(kept) / (max(family.m, 1) ** exponent)
    cert = Certificate(
        claim="pattern_free_extraction",
        parameters={
            "m": family.m,
            "patterns": [
                {"edges": p.m, "sizes": sorted({len(e) for e in p.edges})}
                for p in patterns
            ],
            "size": len(kept),
            "exponent": exponent,
            "constant": constant,
        },
        result=witness is None,
        witness=witness,
    )
    return Family(kept), cert


def _pivot_chain(items, pred2):
    # Each pivot keeps its majority side (ties to the true side) as the
    # surviving pool; a final pivot with nothing left stays uncolored.
    chain: list[tuple[int, bool | None]] = []
    pool = list(items)
    while pool:
        pivot, rest = pool[0], pool[1:]
        if not rest:
            chain.append((pivot, None))
            break
        yes = [x for x in rest if pred2(pivot, x)]
        no = [x for x in rest if not pred2(pivot, x)]
        if len(yes) >= len(no):
            chain.append((pivot, True))
            pool = yes
        else:
            chain.append((pivot, False))
            pool = no
    return chain


def _homogeneous_pairs(items, pred2):
    chain = _pivot_chain(items, pred2)
    trues = [p for p, c in chain if c is True]
    falses = [p for p, c in chain if c is False]
    tail = [p for p, c in chain if c is None]
    color = len(trues) >= len(falses)
    return (trues if color else falses) + tail, color


def _homogeneous_triples(items, pred3):
    # Chain construction: each new pivot refines the candidate pool once
    # per earlier pivot, fixing the pair's color to the majority verdict
    # over surviving candidates. Any triple inside the chain then takes
    # the color of its first two elements, so a pair-homogeneous subchain
    # is triple-homogeneous.
    chain: list[int] = []
    colors: dict[tuple[int, int], bool] = {}
    pool = list(items)
    while pool:
        pivot, pool = pool[0], pool[1:]
        for q in chain:
            yes = [x for x in pool if pred3(q, pivot, x)]
            no = [x for x in pool if not pred3(q, pivot, x)]
            if len(yes) >= len(no):
                colors[(q, pivot)] = True
                pool = yes
            else:
                colors[(q, pivot)] = False
                pool = no
        chain.append(pivot)
    return _homogeneous_pairs(chain, lambda a, b: colors[(a, b)])


def homogeneous_extract(family: Family, ell: int, predicate) -> tuple[Family, bool]:
    """Subfamily on which an ell-wise edge predicate is constant.

    ``predicate`` receives ell edges (as sorted vertex tuples) and must
    be symmetric. Returns the subfamily and the constant verdict. For
    pairs the subfamily has at least floor(log2(m) / 2) edges; triples go
    through a chain construction with a weaker but still unbounded
    guarantee.
    """
    edges = family.edges
    if ell == 2:
        chosen, color = _homogeneous_pairs(
            range(family.m), lambda i, j: bool(predicate(edges[i], edges[j]))
        )
    elif ell == 3:
        chosen, color = _homogeneous_triples(
            range(family.m),
            lambda i, j, l: bool(predicate(edges[i], edges[j], edges[l])),
        )
    else:
        raise UnsupportedDimension(
            f"only pair and triple predicates are supported, got {ell}"
        )
    return Family(edges[i] for i in chosen), color


def max_independent_spencer(graph: ConflictHypergraph) -> tuple[int, float]:
    """Exact independence number beside its first-moment lower bound.

    The bound is ((k-1)/k) * (n**k / (k * |conflicts|)) ** (1/(k-1)),
    or 0.0 when there are no conflicts at all (then the value is n). It
    is a valid lower bound on the independence number whenever the
    average degree is at least one, i.e. |conflicts| >= n/k; below that
    density the formula can exceed n and is reported as-is.
    """
    if graph.n > MAX_SOLVE_VERTICES:
        raise BudgetExceeded(
            f"{graph.n} vertices exceed the solver cap of {MAX_SOLVE_VERTICES}"
        )
    value, _, _ = kernels.solve_max_independent(graph.n, graph.k, graph.conflicts)
    e = len(graph.conflicts)
    if e == 0:
        return value, 0.0
    k = graph.k
    if k < 2:
        raise ValueError("the first-moment bound needs conflicts on >= 2 edges")
    bound = ((k - 1) / k) * (graph.n**k / (k * e)) ** (1.0 / (k - 1))
    return value, bound
