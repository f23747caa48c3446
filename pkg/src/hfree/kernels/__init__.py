"""Kernel dispatch: compiled backend when available, pure Python otherwise.

Both backends expose the same two primitives with identical outputs:

* scan: depth-first sweep over k-subsets of a family checking every
  contained subset's intersection size against a target vector. Verify
  mode reports the lexicographically first failing k-subset, match mode
  lists all conforming k-subsets.
* mis_solve: exact maximum independent set of a conflict hypergraph with
  a deterministic lexicographically-least witness.

HFREE_KERNEL=py|c forces a backend (default: compiled if importable).
HFREE_THREADS caps worker threads for the scans; the default of 1 keeps
runs sequential. Scan results are merged over fixed index ranges, so
every thread count produces the identical answer.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import purepy

VERIFY = purepy.VERIFY
MATCHES = purepy.MATCHES

_forced = os.environ.get("HFREE_KERNEL")
if _forced == "py":
    _impl = purepy
    BACKEND = "py"
elif _forced == "c":
    from . import _fast as _impl

    BACKEND = "c"
elif _forced is None:
    try:
        from . import _fast as _impl

        BACKEND = "c"
    except ImportError:
        _impl = purepy
        BACKEND = "py"
else:
    raise RuntimeError(f"HFREE_KERNEL must be 'py' or 'c', got {_forced!r}")

# the compiled scan sizes its intersection table as 2^k words
_C_MAX_SCAN_ARITY = 12


def thread_count(threads: int | None = None) -> int:
    if threads is None:
        try:
            threads = int(os.environ.get("HFREE_THREADS", "1"))
        except ValueError:
            threads = 1
    return max(1, min(64, threads))


def _chunks(hi: int, t: int) -> list[tuple[int, int]]:
    if hi <= 0:
        return []
    t = min(t, hi)
    step, extra = divmod(hi, t)
    ranges = []
    a = 0
    for i in range(t):
        b = a + step + (1 if i < extra else 0)
        ranges.append((a, b))
        a = b
    return ranges


def _scan_all(edges, n, k, targets, mode, threads):
    impl = _impl
    if impl is not purepy and k > _C_MAX_SCAN_ARITY:
        impl = purepy
    m = len(edges)
    handle = impl.prepare(edges, n)
    targets = tuple(targets)
    top = m if mode == VERIFY else m - k + 1
    ranges = _chunks(top, thread_count(threads))
    if not ranges:
        return None if mode == VERIFY else []
    if len(ranges) == 1:
        parts = [impl.scan(handle, m, n, k, targets, mode, 0, top)]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            futures = [
                pool.submit(impl.scan, handle, m, n, k, targets, mode, a, b)
                for a, b in ranges
            ]
            parts = [f.result() for f in futures]
    if mode == VERIFY:
        found = [p for p in parts if p is not None]
        return min(found) if found else None
    merged: list[tuple[int, ...]] = []
    for p in parts:
        merged.extend(p)
    return merged


def verify_level_targets(
    edges: Sequence[Sequence[int]],
    n: int,
    k: int,
    targets: Sequence[int],
    threads: int | None = None,
):
    """Lexicographically first k-subset of `edges` violating the targets.

    targets[l-1] is the required intersection size of every l of the k
    edges. Returns None when the whole family conforms.
    """
    return _scan_all(edges, n, k, targets, VERIFY, threads)


def enumerate_level_matches(
    edges: Sequence[Sequence[int]],
    n: int,
    k: int,
    targets: Sequence[int],
    threads: int | None = None,
) -> list[tuple[int, ...]]:
    """All k-subsets whose every subset meets the targets, in lex order."""
    return _scan_all(edges, n, k, targets, MATCHES, threads)


def solve_max_independent(n: int, k: int, conflicts: Sequence[tuple[int, ...]]):
    """(alpha, lexicographically least witness, explored node count)."""
    return _impl.mis_solve(n, k, tuple(conflicts))
