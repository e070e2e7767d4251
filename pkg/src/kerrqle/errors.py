"""Exception hierarchy for domain violations."""


class DomainError(ValueError):
    """Input lies outside the region where a quantity is defined."""


class HorizonError(DomainError):
    """Evaluation requested on or inside the outer horizon."""


class AxisError(DomainError):
    """Evaluation requested on the symmetry axis where the formula degenerates."""


class NotEmbeddableError(DomainError):
    """The constant-radius surface has no isometric embedding in Euclidean space."""


class InadmissibleGaugeError(DomainError):
    """Gauge functions make the deformed surface metric degenerate."""

    def __init__(self, message, theta=None):
        super().__init__(message)
        self.theta = theta
