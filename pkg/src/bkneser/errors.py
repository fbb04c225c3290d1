"""Exception hierarchy shared by all bkneser modules.

Two families matter to callers:

* ``DomainError`` and its subclasses signal bad input (wrong cardinality,
  out-of-range rank, invalid connection set, ...).  The CLI maps these to
  exit code 2.
* ``VerificationError`` and its subclasses signal that a checked claim
  failed (a count mismatch, a broken isomorphism, a structure assertion).
  The CLI maps these to exit code 1.
"""


class BKneserError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BKneserError):
    """Input violates a documented precondition."""


class NullGraphError(DomainError):
    """H(2k, k) requested without explicitly allowing the edgeless case."""


class CardinalityError(DomainError):
    """A subset has the wrong number of elements for the requested operation."""


class RankError(DomainError):
    """A subset rank is outside [0, C(n, k))."""


class DisconnectedError(DomainError):
    """The operation requires a connected graph."""


class AdjacencyError(DomainError):
    """Local vertex connectivity was requested across an edge."""


class ConnectionSetError(DomainError):
    """A Cayley connection set contains the identity or is not inverse-closed."""


class SizeLimitError(DomainError):
    """The graph exceeds the configured size limit of the search engine."""


class OrderCapExceeded(BKneserError):
    """Group closure grew past the configured order cap."""


class NeedEnumerationError(BKneserError):
    """The operation needs a fully enumerated group, but only generators are known."""


class VerificationError(BKneserError):
    """A verified claim did not hold."""


class FamilyInvariantError(VerificationError):
    """A count/degree/bipartition/connectivity invariant of H(n, k) failed."""


class StructureError(VerificationError):
    """A group-structure assertion (direct product step, hierarchy) failed."""


class IsomorphismError(VerificationError):
    """A constructed bijection failed its edge-preservation check."""
