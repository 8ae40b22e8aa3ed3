"""Exception types raised across the package."""


class GCSError(Exception):
    """Base class for errors raised by gcs_overlap."""


class DomainError(GCSError, ValueError):
    """A coherent-state label lies outside the convergence domain of its series."""


class NonConvergence(GCSError, RuntimeError):
    """The overlap series did not reach the requested tolerance within max_terms."""


class ProjectiveInfinity(GCSError, ValueError):
    """The requested point has no finite image in the projective tau chart."""


class TailMassError(GCSError, RuntimeError):
    """A truncated matrix representation cannot hold the displaced state.

    Raise the truncation, or shrink the displacement.
    """

    def __init__(self, message, tail_mass=None):
        super().__init__(message)
        self.tail_mass = tail_mass
