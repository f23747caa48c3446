"""Inversive planes of odd prime order and their dual families.

The plane of order q lives on the projective line over the quadratic
extension of F_q: q^2 finite points plus one at infinity. Its circles are
the images of the base-line block F_q + {infinity} under all fractional
linear maps; the orbit is closed out by breadth-first search over three
generators (translation, primitive scaling, inversion), which generate
the full group. Incidence invariants are verified at runtime rather than
assumed: exactly q(q^2+1) circles, every pair of points on q+1 of them,
every triple on exactly one.

Field elements of the extension are coefficient pairs (c0, c1) meaning
c0 + c1*t, reduced by the lexicographically smallest irreducible monic
t^2 + b*t + c over F_q. Points are indexed 0..q^2-1 in coefficient order
with infinity last.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb

from .certify import Certificate
from .core import Family
from .errors import DuplicatePoint, InvalidOrder

MAX_ORDER = 13


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, int(q**0.5) + 1):
        if q % p == 0:
            return False
    return True


def smallest_irreducible(q: int) -> tuple[int, int]:
    """(b, c) of the lex-least monic irreducible t^2 + b t + c over F_q."""
    squares = {(x * x) % q for x in range(q)}
    for b in range(q):
        for c in range(q):
            disc = (b * b - 4 * c) % q
            if disc not in squares:
                return b, c
    raise InvalidOrder(f"no irreducible quadratic over F_{q}")


class QuadField:
    """Arithmetic in the degree-2 extension of F_q, elements as pairs."""

    def __init__(self, q: int):
        if not _is_prime(q):
            raise InvalidOrder(f"{q} is not prime")
        self.q = q
        self.modulus = smallest_irreducible(q)
        self.zero = (0, 0)
        self.one = (1, 0)

    def elements(self):
        q = self.q
        return [(c0, c1) for c0 in range(q) for c1 in range(q)]

    def add(self, x, y):
        q = self.q
        return ((x[0] + y[0]) % q, (x[1] + y[1]) % q)

    def neg(self, x):
        q = self.q
        return ((-x[0]) % q, (-x[1]) % q)

    def mul(self, x, y):
        # (x0 + x1 t)(y0 + y1 t) with t^2 = -c - b t
        q = self.q
        b, c = self.modulus
        hi = x[1] * y[1]
        lo = x[0] * y[0]
        mid = x[0] * y[1] + x[1] * y[0]
        return ((lo - hi * c) % q, (mid - hi * b) % q)

    def inv(self, x):
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero")
        # norm trick: x * conj(x) lies in the base field
        b, _ = self.modulus
        conj = ((x[0] - b * x[1]) % self.q, (-x[1]) % self.q)
        norm = self.mul(x, conj)
        assert norm[1] == 0
        inv_norm = pow(norm[0], self.q - 2, self.q)
        return self.mul(conj, (inv_norm, 0))

    def primitive_element(self):
        """Lex-least generator of the multiplicative group."""
        target = self.q * self.q - 1
        for x in self.elements():
            if x == self.zero:
                continue
            y = x
            order = 1
            while y != self.one:
                y = self.mul(y, x)
                order += 1
            if order == target:
                return x
        raise InvalidOrder("no primitive element found")


@dataclass(frozen=True)
class InversivePlane:
    """q^2 + 1 points (index q^2 is the point at infinity) and the circle
    orbit, each circle a sorted tuple of q + 1 point indices."""

    q: int
    num_points: int
    circles: tuple[tuple[int, ...], ...]

    def point_labels(self) -> list:
        field = QuadField(self.q)
        return [list(x) for x in field.elements()] + ["inf"]


def build_plane(q: int) -> InversivePlane:
    """Inversive plane of odd prime order q <= 13.

    Runtime-verifies the orbit size q(q^2 + 1); verify_3design gives the
    full incidence certificate.
    """
    if not _is_prime(q) or q % 2 == 0:
        raise InvalidOrder(f"order must be an odd prime, got {q}")
    if q > MAX_ORDER:
        raise InvalidOrder(f"order capped at {MAX_ORDER}, got {q}")
    field = QuadField(q)
    elems = field.elements()
    index = {x: i for i, x in enumerate(elems)}
    inf = q * q
    npoints = q * q + 1

    lam = field.primitive_element()

    def perm_of(matrix):
        # point map for x -> (a x + c)/(b x + d) on homogeneous pairs
        a, b, c, d = matrix
        out = [0] * npoints
        for x, i in index.items():
            num = field.add(field.mul(a, x), c)
            den = field.add(field.mul(b, x), d)
            if den == field.zero:
                out[i] = inf
            else:
                out[i] = index[field.mul(num, field.inv(den))]
        # infinity is (1 : 0): image (a : b)
        if b == field.zero:
            out[inf] = inf
        else:
            out[inf] = index[field.mul(a, field.inv(b))]
        return out

    generators = [
        perm_of((field.one, field.zero, field.one, field.one)),  # x + 1
        perm_of((lam, field.zero, field.zero, field.one)),       # lam * x
        perm_of((field.zero, field.one, field.one, field.zero)), # 1 / x
    ]

    base = frozenset(index[(x, 0)] for x in range(q)) | {inf}
    seen = {base}
    queue = [base]
    while queue:
        circle = queue.pop()
        for g in generators:
            image = frozenset(g[p] for p in circle)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    circles = tuple(sorted(tuple(sorted(c)) for c in seen))
    expected = q * (q * q + 1)
    if len(circles) != expected:
        raise InvalidOrder(
            f"orbit produced {len(circles)} circles, expected {expected}"
        )
    return InversivePlane(q=q, num_points=npoints, circles=circles)


def delete_circle(plane: InversivePlane, position: int) -> InversivePlane:
    """Plane with one circle removed; useful for negative design tests."""
    circles = plane.circles[:position] + plane.circles[position + 1 :]
    return replace(plane, circles=circles)


def verify_3design(plane: InversivePlane) -> Certificate:
    """Exhaustively certify that every point triple lies on exactly one
    circle. A false certificate carries the lexicographically first bad
    triple and its count."""
    n = plane.num_points
    counts: dict[tuple[int, int, int], int] = {}
    for circle in plane.circles:
        for triple in combinations(circle, 3):
            counts[triple] = counts.get(triple, 0) + 1
    witness = None
    for triple in combinations(range(n), 3):
        c = counts.get(triple, 0)
        if c != 1:
            witness = {"triple": list(triple), "count": c}
            break
    params = {
        "q": plane.q,
        "points": n,
        "circles": len(plane.circles),
        "triples": comb(n, 3),
    }
    return Certificate(
        claim="steiner_3design",
        parameters=params,
        result=witness is None,
        witness=witness,
    )


def incidence_counts(plane: InversivePlane, points: tuple[int, ...]) -> int:
    """Number of circles through 1, 2, or 3 given distinct points."""
    pts = tuple(points)
    if not 1 <= len(pts) <= 3:
        raise ValueError(f"need 1..3 points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise DuplicatePoint(f"points must be distinct, got {pts}")
    if any(not 0 <= p < plane.num_points for p in pts):
        raise ValueError(f"point index out of range in {pts}")
    need = set(pts)
    return sum(1 for c in plane.circles if need.issubset(c))


def dual_family(plane: InversivePlane) -> Family:
    """One edge per point, consisting of the circles through that point.

    The result has q^2 + 1 edges of size q^2 + q over the q(q^2 + 1)
    circle-vertices; every three edges meet pairwise in q + 1 circles and
    altogether in one, realizing the cell counts
    (q^2 - q - 1, q, 1).
    """
    incident: list[list[int]] = [[] for _ in range(plane.num_points)]
    for ci, circle in enumerate(plane.circles):
        for p in circle:
            incident[p].append(ci)
    return Family(incident)
