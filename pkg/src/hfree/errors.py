"""Exception types shared across the toolkit."""


class HFreeError(Exception):
    """Base class for every toolkit-specific error."""


class DuplicateEdge(HFreeError):
    """Two edges of a family coincide as sets."""


class UnsupportedArity(HFreeError):
    """Edge count outside the supported 1..16 window for cell analysis."""


class ArityMismatch(HFreeError):
    """Number of edges does not match the length of the target vector."""


class NegativeCell(HFreeError):
    """A cell-count vector came out negative, so no realizing family exists."""


class InvalidCore(HFreeError):
    """Sunflower core size outside 0..r."""


class TooFewEdges(HFreeError):
    """Family too small for the requested operation."""


class SizeMismatch(HFreeError):
    """Positional merge requires families with equal edge counts."""


class InvalidOrder(HFreeError):
    """Inversive-plane order must be an odd prime at most 13."""


class DuplicatePoint(HFreeError):
    """Incidence query points must be pairwise distinct."""


class BudgetExceeded(HFreeError):
    """Enumeration would exceed the configured work budget."""


class NotUniform(HFreeError):
    """Operation requires all edges to share one size."""


class SunflowerPattern(HFreeError):
    """Equal-size sunflowers admit no pattern-free extraction guarantee."""


class UnsupportedDimension(HFreeError):
    """Homogeneous extraction is implemented for subset sizes 2 and 3."""


class UndefinedAlpha(HFreeError):
    """The balance ratio has a zero denominator for this cell vector."""


class ParseError(HFreeError):
    """Malformed input file."""
