"""Backend parity: the compiled scan/solve must be byte-identical to pure Python."""

import random
from itertools import combinations

import pytest

from hfree.core import a_from_b, intersection_sizes
from hfree.kernels import (
    MATCHES,
    VERIFY,
    enumerate_level_matches,
    purepy,
    solve_max_independent,
    verify_level_targets,
)

fast = pytest.importorskip("hfree.kernels._fast")


def random_edges(rng, m, n, max_size=5):
    edges = set()
    while len(edges) < m:
        size = rng.randint(2, max_size)
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return sorted(edges)


def brute_scan(edges, k, targets):
    """(lex-first violating k-subset or None, all conforming k-subsets)."""
    violations = []
    matches = []
    for sub in combinations(range(len(edges)), k):
        sizes = intersection_sizes([edges[i] for i in sub])
        ok = all(
            sizes[mask] == targets[mask.bit_count() - 1]
            for mask in range(1, 1 << k)
        )
        (matches if ok else violations).append(sub)
    return (violations[0] if violations else None), matches


def brute_mis(n, conflicts):
    conf = [frozenset(c) for c in conflicts]
    for size in range(n, -1, -1):
        for sub in combinations(range(n), size):
            s = set(sub)
            if not any(c <= s for c in conf):
                return size, sub
    raise AssertionError("empty set always independent")


def scan_raw(impl, edges, n, k, targets, mode):
    handle = impl.prepare(edges, n)
    top = len(edges) if mode == VERIFY else len(edges) - k + 1
    return impl.scan(handle, len(edges), n, k, tuple(targets), mode, 0, max(top, 0))


# ------------------------------------------------------------------- scans


def test_purepy_scan_matches_brute_force():
    rng = random.Random(41)
    for trial in range(30):
        m, n, k = rng.randint(4, 9), rng.randint(6, 14), rng.randint(2, 4)
        edges = random_edges(rng, m, n)
        b = [rng.randint(0, 3) for _ in range(k)]
        targets = a_from_b(b)
        want_viol, want_match = brute_scan(edges, k, targets)
        assert scan_raw(purepy, edges, n, k, targets, VERIFY) == want_viol
        assert scan_raw(purepy, edges, n, k, targets, MATCHES) == want_match


def test_compiled_scan_equals_purepy():
    rng = random.Random(42)
    for trial in range(40):
        m, n, k = rng.randint(4, 10), rng.randint(6, 40), rng.randint(2, 5)
        edges = random_edges(rng, m, n)
        b = [rng.randint(0, 3) for _ in range(k)]
        targets = a_from_b(b)
        for mode in (VERIFY, MATCHES):
            assert scan_raw(fast, edges, n, k, targets, mode) == scan_raw(
                purepy, edges, n, k, targets, mode
            )


def test_compiled_scan_wide_words():
    # vertices beyond one 64-bit word exercise the multi-word bitsets
    rng = random.Random(43)
    edges = random_edges(rng, 8, 200, max_size=9)
    targets = a_from_b((2, 1, 0))
    for mode in (VERIFY, MATCHES):
        assert scan_raw(fast, edges, 200, 3, targets, mode) == scan_raw(
            purepy, edges, 200, 3, targets, mode
        )


def test_scan_rejects_oversized_arity():
    with pytest.raises(ValueError):
        scan_raw(fast, [[0], [1]], 2, 13, (0,) * 13, VERIFY)


def test_public_scan_falls_back_above_compiled_arity():
    edges = [[i] for i in range(13)]
    targets = a_from_b((1,) + (0,) * 12)
    assert verify_level_targets(edges, 13, 13, targets) is None
    assert enumerate_level_matches(edges, 13, 13, targets) == [tuple(range(13))]


def test_threaded_scan_is_deterministic():
    rng = random.Random(44)
    edges = random_edges(rng, 12, 16)
    targets = a_from_b((1, 1, 0))
    for t in (1, 3, 7):
        assert verify_level_targets(edges, 16, 3, targets, threads=t) == \
            verify_level_targets(edges, 16, 3, targets, threads=1)
        assert enumerate_level_matches(edges, 16, 3, targets, threads=t) == \
            enumerate_level_matches(edges, 16, 3, targets, threads=1)


# --------------------------------------------------------------------- MIS


def test_purepy_mis_matches_brute_force():
    rng = random.Random(45)
    for trial in range(30):
        n = rng.randint(3, 10)
        k = rng.choice([2, 3])
        pool = list(combinations(range(n), k))
        conflicts = tuple(sorted(rng.sample(pool, min(len(pool), rng.randint(1, 12)))))
        value, witness, explored = purepy.mis_solve(n, k, conflicts)
        want_value, want_witness = brute_mis(n, conflicts)
        assert value == want_value
        assert witness == want_witness
        assert explored > 0


def test_compiled_mis_equals_purepy_including_explored():
    rng = random.Random(46)
    for trial in range(40):
        n = rng.randint(3, 14)
        k = rng.choice([2, 3, 4])
        pool = list(combinations(range(n), k))
        sample = rng.sample(pool, min(len(pool), rng.randint(0, 20)))
        conflicts = tuple(sorted(sample))
        assert fast.mis_solve(n, k, conflicts) == purepy.mis_solve(n, k, conflicts)


def test_mis_no_conflicts():
    assert solve_max_independent(5, 3, ()) == (5, (0, 1, 2, 3, 4), 0)


def test_compiled_mis_rejects_bad_vertex():
    with pytest.raises(IndexError):
        fast.mis_solve(3, 2, ((0, 5),))
