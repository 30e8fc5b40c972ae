"""Exception types shared across the geometry kernel."""


class GeometryError(ValueError):
    """Base class for every error raised by this package."""


class DegenerateInput(GeometryError):
    """Inputs coincide or collapse below the resolution tolerance."""


class DomainError(GeometryError):
    """A point lies outside the domain an operation requires."""


class EmptyBoundary(GeometryError):
    """A boundary sampler yielded too few points to take a supremum."""


class NegativeDiscriminant(GeometryError):
    """A closed-form bound is numerically inapplicable for this input."""


class ConvergenceError(GeometryError):
    """Adaptive quadrature hit its subdivision cap before reaching tolerance."""
