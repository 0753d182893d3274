"""Exception types shared across the package."""


class UnknownLabel(KeyError):
    """A label is not among the simple labels of the ring."""


class NonConvergent(RuntimeError):
    """Power iteration failed to converge within the step budget."""


class NotASubcategory(ValueError):
    """A label set is not closed under fusion and duals."""


class DegenerateEigenproblem(RuntimeError):
    """Eigenvalue clusters could not be separated after the retry budget."""


class NotSlightlyDegenerate(ValueError):
    """An operation requires slightly degenerate input."""


class CrossCheckMismatch(RuntimeError):
    """Two independent computations of the same invariant disagree."""


class GroupsTooLarge(ValueError):
    """A brute-force group search exceeds the size cap."""


class UnknownCatalogKey(KeyError):
    """No catalog entry under this key."""
