"""Exception hierarchy.

Everything raised deliberately by the package derives from
:class:`AugDesignError`. Input problems are also ``ValueError`` so plain
``except ValueError`` keeps working for callers that do not care about
the detail.
"""


class AugDesignError(Exception):
    """Base class for package errors."""


class InvalidDesign(AugDesignError, ValueError):
    """Malformed input: dimensions, labels or structure."""


class BadDimensions(InvalidDesign):
    def __init__(self, v, k, reason=""):
        self.v, self.k = v, k
        msg = f"bad dimensions v={v}, k={k}"
        super().__init__(f"{msg}: {reason}" if reason else msg)


class RowNotPermutation(InvalidDesign):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is not a permutation of 1..v")


class DuplicateInColumn(InvalidDesign):
    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} contains a repeated treatment")


class BadBlock(InvalidDesign):
    """Initial block with duplicates, wrong size or out-of-range labels."""


class AlreadyFilled(InvalidDesign):
    """fill_entries called on a design without the expected blanks."""


class MismatchedPair(InvalidDesign):
    """An augmented design that was not built from the given contraction."""


class NotSymmetric(InvalidDesign):
    """Matrix handed to the eigen-solver is not symmetric."""


class InvalidParams(InvalidDesign):
    """Scalar parameters outside their admissible range."""


class NonPositiveValue(InvalidDesign):
    """A value that must be strictly positive was not."""


class Disconnected(AugDesignError):
    """The design's information matrix has more than one zero eigenvalue."""

    def __init__(self, n_zero, msg=None):
        self.n_zero = n_zero
        super().__init__(msg or f"disconnected design ({n_zero} zero eigenvalues)")


class NoConnectedDesign(Disconnected):
    pass


class TargetUnreached(AugDesignError):
    """Search finished below ``target_e``; the result is attached."""

    def __init__(self, result, target):
        self.result = result
        self.target = target
        super().__init__(
            f"target E={target:.6f} not reached (best {result.report.e:.6f})"
        )
