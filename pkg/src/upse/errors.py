"""Exception types shared across the toolkit."""


class UpseError(Exception):
    """Base class for all toolkit-specific errors."""


class NotGeneral(UpseError):
    """A point set violates general position (collinear triple or repeated y)."""


class NotConvex(UpseError):
    """A point set is not in convex position."""


class DuplicateY(UpseError):
    """Two points share a y-coordinate where distinct heights are required."""


class NotATree(UpseError):
    """The underlying undirected graph is not a tree."""


class NotACaterpillar(UpseError):
    """Stripping the degree-one vertices does not leave a path."""


class NotOneSided(UpseError):
    """The point set is not one-sided convex."""


class SizeMismatch(UpseError):
    """Graph and point set sizes are incompatible with the operation."""


class BadShape(UpseError):
    """The path's section profile violates the algorithm's preconditions."""


class NotMonotoneBackbone(UpseError):
    """The caterpillar backbone is not a single monotone section."""


class TooFewPoints(UpseError):
    """The point set is smaller than the guaranteed-embedding bound."""


class InvalidInstance(UpseError):
    """Malformed 3-Partition input."""


class InvalidPartition(UpseError):
    """A claimed triple partition does not fit the instance."""


class ConstructionFailed(UpseError):
    """The instance generator could not satisfy its own certificate."""
