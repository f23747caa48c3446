"""Exact integer binomials, transform matrices, and the d/a/b calculus.

Everything here is arbitrary-precision integer arithmetic; no floats.

Three integer vectors describe a k-edge equal-intersection hypergraph
inside an m-edge family:

* b: per-level Venn cell counts,
* a: per-level intersection sizes,
* d: per-level cell multiplicities of the realizing construction
  (d_l vertices per l-subset of the m edge indices, d_k core vertices).

The maps between them are upper-triangular integer matrices; their
product collapsing to the identity is what `bdw_identity_check` verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .certify import Certificate

Matrix = tuple[tuple[int, ...], ...]


def binom_ext(x: int, y: int) -> int:
    """Binomial coefficient extended to negative upper argument.

    C(x, y) = 0 for y < 0; for x < 0 the reflection
    C(x, y) = (-1)^y C(-x + y - 1, y) keeps Pascal's rule valid on all of
    Z x Z.
    """
    if y < 0:
        return 0
    if x >= 0:
        return comb(x, y) if y <= x else 0
    return (-1) ** y * comb(-x + y - 1, y)


def vdm_identity_check(x: int, y: int, z: int) -> Certificate:
    """Alternating Vandermonde convolution collapse.

    For x >= 0 and y >= z >= 0:
        sum_t (-1)^t C(x, t) C(y - t, z - t)  ==  (-1)^z C(x - y + z - 1, z).
    """
    if x < 0 or z < 0 or y < z:
        raise ValueError("need x >= 0 and y >= z >= 0")
    lhs = sum((-1) ** t * binom_ext(x, t) * binom_ext(y - t, z - t) for t in range(z + 1))
    rhs = (-1) ** z * binom_ext(x - y + z - 1, z)
    ok = lhs == rhs
    return Certificate(
        claim="vdm_identity",
        parameters={"x": x, "y": y, "z": z},
        result=ok,
        witness=None if ok else {"lhs": lhs, "rhs": rhs},
    )


def _matrix(k: int, entry) -> Matrix:
    return tuple(
        tuple(entry(i, j) for j in range(1, k + 1)) for i in range(1, k + 1)
    )


def matmul(p: Matrix, q: Matrix) -> Matrix:
    n = len(p)
    return tuple(
        tuple(sum(p[i][t] * q[t][j] for t in range(n)) for j in range(n))
        for i in range(n)
    )


def identity_matrix(k: int) -> Matrix:
    return _matrix(k, lambda i, j: 1 if i == j else 0)


@dataclass(frozen=True)
class MatrixSuite:
    """The transform matrices for arity k inside an m-edge family.

    binom_block[i][j]       = C(m - i, j - i)                 (size k-1)
    signed_block[i][j]      = (-1)^(j-i) C(k - i, j - i)      (size k)
    alt_block[i][j]         = (-1)^(j-i) C(m - k + j - i - 1, j - i)
                                                              (size k-1)
    inter_from_mult: binom_block bordered with a last all-ones column,
    maps d to a. mult_from_cell: alt_block bordered with a trailing 1,
    maps b to d. signed_block maps a to b.
    """

    k: int
    m: int
    binom_block: Matrix
    signed_block: Matrix
    alt_block: Matrix
    inter_from_mult: Matrix
    mult_from_cell: Matrix


def build_matrix_suite(k: int, m: int) -> MatrixSuite:
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if m < k:
        raise ValueError(f"need m >= k, got m={m}, k={k}")
    binom_block = _matrix(k - 1, lambda i, j: binom_ext(m - i, j - i))
    signed_block = _matrix(
        k, lambda i, j: (-1) ** (j - i) * binom_ext(k - i, j - i)
    )
    alt_block = _matrix(
        k - 1, lambda i, j: (-1) ** (j - i) * binom_ext(m - k + j - i - 1, j - i)
    )

    def bordered(block: Matrix, last_col: int) -> Matrix:
        rows = [row + (last_col,) for row in block]
        rows.append((0,) * (k - 1) + (1,))
        return tuple(rows)

    return MatrixSuite(
        k=k,
        m=m,
        binom_block=binom_block,
        signed_block=signed_block,
        alt_block=alt_block,
        inter_from_mult=bordered(binom_block, 1),
        mult_from_cell=bordered(alt_block, 0),
    )


def bdw_identity_check(k: int, m: int) -> Certificate:
    """Exact check that the a->b, d->a and b->d maps compose to identity."""
    suite = build_matrix_suite(k, m)
    prod = matmul(matmul(suite.signed_block, suite.inter_from_mult), suite.mult_from_cell)
    ident = identity_matrix(k)
    ok = prod == ident
    witness = None
    if not ok:
        for i in range(k):
            for j in range(k):
                if prod[i][j] != ident[i][j]:
                    witness = {"i": i + 1, "j": j + 1, "value": prod[i][j]}
                    break
            if witness:
                break
    return Certificate(
        claim="bdw_identity",
        parameters={"k": k, "m": m},
        result=ok,
        witness=witness,
    )


def d_from_b(b: Sequence[int], m: int) -> tuple[int, ...]:
    """Cell multiplicities realizing b at m edges; entries may be negative.

    d_i = sum_{j=i}^{k-1} (-1)^(j-i) C(m - k + j - i - 1, j - i) b_j for
    i < k, and d_k = b_k. The vector is feasible (a realizing construction
    exists, forcing the extremal value k-1) iff every entry is >= 0.
    """
    b = tuple(int(v) for v in b)
    k = len(b)
    if m < k:
        raise ValueError(f"need m >= k, got m={m}, k={k}")
    out = []
    for i in range(1, k):
        out.append(
            sum(
                (-1) ** (j - i) * binom_ext(m - k + j - i - 1, j - i) * b[j - 1]
                for j in range(i, k)
            )
        )
    out.append(b[k - 1])
    return tuple(out)


def is_feasible(d: Sequence[int]) -> bool:
    return all(v >= 0 for v in d)


def a_from_d(d: Sequence[int], m: int) -> tuple[int, ...]:
    """Intersection sizes of the construction with multiplicities d:
    a_i = d_i + sum_{j=i+1}^{k-1} C(m - i, j - i) d_j + d_k (a_k = d_k)."""
    d = tuple(int(v) for v in d)
    k = len(d)
    if m < k:
        raise ValueError(f"need m >= k, got m={m}, k={k}")
    out = []
    for i in range(1, k + 1):
        if i == k:
            out.append(d[k - 1])
        else:
            out.append(
                sum(binom_ext(m - i, j - i) * d[j - 1] for j in range(i, k)) + d[k - 1]
            )
    return tuple(out)
