"""Closed-form bounds on extremal values and the (b1, b2) region map.

For a cell-count profile b over k edges, the driving quantity is

    alpha(b, m) = min over 1 <= i <= k-2 of b_i / (m * b_{i+1}),

kept as an exact rational. The bound formulas themselves mix exact parts
with real k-th roots; roots are evaluated in double precision and every
comparison against a threshold uses TOL. A formula that does not apply
(hypotheses unmet, zero denominator) is reported as None, never as a
best-effort number.

Region classification fixes k = 3 and the last cell count at 1, then
walks three finite-m rules in priority order. Each fired rule is backed
by an exact construction or evaluation at that very m; asymptotic
phrasing never leaks into a label. The advisory thm72 flag (named after
its CSV column) records whether the necessary inequality for extremal
value 2 fails; it never changes a label because at desk scale it fails
on points where the value is provably 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .core import _int_vector
from .errors import BudgetExceeded, UndefinedAlpha
from .linalg import d_from_b, is_feasible

GRID_BUDGET = 10**5
TOL = 1e-9

BOUNDED_F_EQ_KMINUS1 = "BOUNDED_F_EQ_KMINUS1"
F_EQ_2_INVERSIVE = "F_EQ_2_INVERSIVE"
UNBOUNDED_LOWER = "UNBOUNDED_LOWER"
UNKNOWN = "UNKNOWN"


def alpha_of(b: Sequence[int], m: int) -> Fraction:
    """min of b_i / (m * b_{i+1}) over 1 <= i <= k-2, exact."""
    vec = _int_vector(b)
    k = len(vec)
    if k < 3:
        raise ValueError(f"need at least 3 levels, got {k}")
    if m < 1:
        raise ValueError(f"need a positive edge count, got {m}")
    terms = []
    for i in range(k - 2):
        if vec[i + 1] == 0:
            raise UndefinedAlpha(f"level {i + 2} count is zero")
        terms.append(Fraction(vec[i], m * vec[i + 1]))
    return min(terms)


@dataclass(frozen=True)
class BoundsReport:
    """Every applicable bound for one (b, m); None marks an inapplicable
    formula, not a failed evaluation.

    alpha, upper24   exact rationals
    lower24          (1 / (2(alpha + 1/m) C(b_{k-1}+b_k, b_k)))^(1/k)
    lower25          the two-case m-power bound (k = 3 versus k >= 4)
    lower_bk0        b_k = 0 only: max_i (m b_{i+1} / 2(b_i+b_{i+1}))^(1/k)
    lower_bk0_k3     k = 3, b_3 = 0, m >= 4: sqrt(m b_2 / 2(b_1+2b_2))
    f2_necessary     k = 3 only: the advisory inequality for value 2
    """

    alpha: Fraction | None
    upper24: Fraction | None
    lower24: float | None
    lower25: float | None
    lower_bk0: float | None
    lower_bk0_k3: float | None
    f2_necessary: bool | None


def necessary_f2_check(b: Sequence[int], m: int) -> bool:
    """Exact test of b1*b3 + b1*b2/m + b2*b3/m >= b2**2 (k = 3 only).

    Advisory: the inequality is asymptotic in m and fails at small m on
    profiles whose extremal value is exactly 2.
    """
    vec = _int_vector(b)
    if len(vec) != 3:
        raise ValueError(f"defined for 3 levels, got {len(vec)}")
    if m < 1:
        raise ValueError(f"need a positive edge count, got {m}")
    b1, b2, b3 = vec
    lhs = Fraction(b1 * b3) + Fraction(b1 * b2, m) + Fraction(b2 * b3, m)
    return lhs >= b2 * b2


def bounds_eval(b: Sequence[int], m: int) -> BoundsReport:
    """Evaluate every bound whose hypotheses hold at this exact (b, m)."""
    vec = _int_vector(b)
    k = len(vec)
    if k < 3:
        raise ValueError(f"need at least 3 levels, got {k}")
    if m < 1:
        raise ValueError(f"need a positive edge count, got {m}")

    try:
        alpha = alpha_of(vec, m)
    except UndefinedAlpha:
        alpha = None

    upper24 = None
    lower24 = None
    if m >= 6 and alpha is not None and all(x > 0 for x in vec[: k - 1]):
        upper24 = Fraction(k * (k - 1)) / alpha + (k - 1)
        denom = 2.0 * float(alpha + Fraction(1, m)) * comb(vec[-2] + vec[-1], vec[-1])
        lower24 = (1.0 / denom) ** (1.0 / k)

    lower25 = None
    if m >= 6 and vec[-2] > 0:
        if k >= 4:
            root = vec[-2] / (4.0 * (vec[-3] + 2 * vec[-2]))
            lower25 = m ** (1.0 / (k * (vec[-1] + 1))) * root ** (1.0 / k)
        else:
            e = vec[2] + 2
            root = vec[1] / (4.0 * (vec[0] + 2 * vec[1]))
            lower25 = m ** (1.0 / e) * root ** ((vec[2] + 1) / e)

    lower_bk0 = None
    if m >= 6 and vec[-1] == 0:
        terms = [
            (m * vec[i + 1] / (2.0 * (vec[i] + vec[i + 1]))) ** (1.0 / k)
            for i in range(k - 2)
            if vec[i] + vec[i + 1] > 0
        ]
        if terms:
            lower_bk0 = max(terms)

    lower_bk0_k3 = None
    if k == 3 and m >= 4 and vec[2] == 0 and vec[1] > 0:
        lower_bk0_k3 = (m * vec[1] / (2.0 * (vec[0] + 2 * vec[1]))) ** 0.5

    f2 = necessary_f2_check(vec, m) if k == 3 else None
    return BoundsReport(
        alpha=alpha,
        upper24=upper24,
        lower24=lower24,
        lower25=lower25,
        lower_bk0=lower_bk0,
        lower_bk0_k3=lower_bk0_k3,
        f2_necessary=f2,
    )


@dataclass(frozen=True)
class RegionVerdict:
    """Region label for one (b1, b2) cell at fixed b3 = 1, plus the
    advisory thm72 flag: True when the necessary inequality for extremal
    value 2 fails at this m. The flag never influences the label."""

    label: str
    thm72_violated: bool


def classify_region(b1: int, b2: int, m: int) -> RegionVerdict:
    """Label the profile (b1, b2, 1) at a concrete m.

    Priority order, first hit wins:
      1. the multiplicity vector of (b1, b2, 1) is feasible at m, so the
         explicit construction pins the extremal value at k-1;
      2. b1 >= b2**2 - b2 - 1 and m <= b2**2 + 1, the exact range that
         the padded and truncated dual-plane construction covers, value 2;
      3. an applicable lower bound evaluates above 2, so the value along
         this ray is unbounded;
      4. UNKNOWN.
    """
    if m < 6:
        raise ValueError(f"region rules assume m >= 6, got {m}")
    profile = (int(b1), int(b2), 1)
    violated = not necessary_f2_check(profile, m)
    if is_feasible(d_from_b(profile, m)):
        return RegionVerdict(BOUNDED_F_EQ_KMINUS1, violated)
    if profile[0] >= profile[1] ** 2 - profile[1] - 1 and m <= profile[1] ** 2 + 1:
        return RegionVerdict(F_EQ_2_INVERSIVE, violated)
    report = bounds_eval(profile, m)
    for low in (report.lower24, report.lower25):
        if low is not None and low > 2.0 + TOL:
            return RegionVerdict(UNBOUNDED_LOWER, violated)
    return RegionVerdict(UNKNOWN, violated)


@dataclass(frozen=True)
class RegionRow:
    b1: int
    b2: int
    label: str
    thm72_violated: bool
    report: BoundsReport


def log_spaced(lo: int, hi: int, step: float) -> tuple[int, ...]:
    """Integer grid coordinates lo, ..., up to hi, multiplying by step
    but always advancing by at least 1."""
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range {lo}:{hi}")
    if step <= 1.0:
        raise ValueError(f"log step must exceed 1, got {step}")
    vals = []
    v = lo
    while v <= hi:
        vals.append(v)
        v = max(v + 1, int(v * step))
    return tuple(vals)


def region_grid(
    m: int,
    b1_range: tuple[int, int],
    b2_range: tuple[int, int],
    log_step: float = 1.25,
) -> list[RegionRow]:
    """Classify every cell of a log-spaced (b1, b2) grid at fixed m."""
    xs = log_spaced(b1_range[0], b1_range[1], log_step)
    ys = log_spaced(b2_range[0], b2_range[1], log_step)
    if len(xs) * len(ys) > GRID_BUDGET:
        raise BudgetExceeded(
            f"{len(xs) * len(ys)} cells exceed the {GRID_BUDGET} grid budget"
        )
    rows = []
    for b1 in xs:
        for b2 in ys:
            verdict = classify_region(b1, b2, m)
            rows.append(
                RegionRow(
                    b1=b1,
                    b2=b2,
                    label=verdict.label,
                    thm72_violated=verdict.thm72_violated,
                    report=bounds_eval((b1, b2, 1), m),
                )
            )
    rows.sort(key=lambda r: (r.b1, r.b2))
    return rows


def _csv_real(x: float | None) -> str:
    return "" if x is None else format(x, ".12g")


def format_region_csv(rows: Sequence[RegionRow]) -> str:
    """CSV with header b1,b2,label,alpha,upper24,lower24,lower25,thm72.

    Rationals are printed exactly, reals to 12 significant digits, and
    inapplicable bounds as empty cells.
    """
    out = ["b1,b2,label,alpha,upper24,lower24,lower25,thm72"]
    for r in rows:
        rep = r.report
        out.append(
            ",".join(
                (
                    str(r.b1),
                    str(r.b2),
                    r.label,
                    "" if rep.alpha is None else str(rep.alpha),
                    "" if rep.upper24 is None else str(rep.upper24),
                    _csv_real(rep.lower24),
                    _csv_real(rep.lower25),
                    "true" if r.thm72_violated else "false",
                )
            )
        )
    return "\n".join(out) + "\n"
