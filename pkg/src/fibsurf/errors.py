"""Error hierarchy shared by every module.

Each error carries a stable machine-readable ``code`` (used by the CLI's JSON
error output) equal to the class name.  All domain errors derive from
:class:`DomainError`, so callers can catch one type.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- exact linear algebra / alternating forms ------------------------------

class NotAlternating(DomainError):
    """Gram matrix is not antisymmetric with zero diagonal."""


class OddDimension(DomainError):
    """Alternating-form operation requires an even-dimensional matrix."""


class Degenerate(DomainError):
    """Alternating form has determinant zero."""


class NotCoprincipal(DomainError):
    """Polarization type has more than one divisor exceeding 1."""


class DimensionMismatch(DomainError):
    """Matrix/vector dimensions are inconsistent with the operation."""


class NotSymplectic(DomainError):
    """Matrix does not preserve the standard symplectic form."""


# --- congruence subgroups / modular curves ---------------------------------

class LevelTooSmall(DomainError):
    """Level d below the smallest value the formula is stated for."""


class NonIntegralResult(DomainError):
    """A quantity that must be an exact integer failed to be one."""


class InvalidCuspSet(DomainError):
    """Irregular-cusp set is not a subset of {0, 1, inf} of size 1 or 3."""


class UnsupportedCusp(DomainError):
    """Only the cusp at infinity is supported."""


# --- adapted bases ----------------------------------------------------------

class InvariantViolation(DomainError):
    """An input invariant of the adapted-basis problem fails; the message
    names the check that failed."""


class QuotientNotBicyclic(DomainError):
    """U/(U_A + U_E) is not isomorphic to (Z/d)^2."""


class NotUnimodular(DomainError):
    """Change-of-basis matrix must have determinant 1."""


# --- period family ----------------------------------------------------------

class InvalidPeriodData(DomainError):
    """(Z, z) is not a valid point of the product of half-spaces."""


class RiemannRelationViolation(DomainError):
    """Period matrix failed symmetry or positivity beyond tolerance."""


class NotInGammaD(DomainError):
    """2x2 matrix is not congruent to the identity mod d (or not in SL2)."""


class UnsupportedCombination(DomainError):
    """No monodromy matrix is defined for this (genus, degree, case)."""


# --- surface invariants -----------------------------------------------------

class IdentityViolation(DomainError):
    """Internal consistency identity between invariants failed."""


class InfeasibleCover(DomainError):
    """No cover with the requested degree/genus data can exist."""


class DegenerateSlope(DomainError):
    """Slope equation is degenerate (chi equals (b-1)(g-1))."""


class UnsupportedGenus(DomainError):
    """Fibre genus outside {2, 3}."""


class InvalidOrder(DomainError):
    """Ramification order must be a positive integer."""


class InvalidArgument(DomainError):
    """Argument outside the stated precondition of an operation."""


# --- CLI --------------------------------------------------------------------

class UsageError(DomainError):
    """Command line was syntactically valid but semantically unusable."""
