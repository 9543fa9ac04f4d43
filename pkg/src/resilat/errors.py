"""Exception hierarchy.

Every validation failure carries a ``witness``: the least offending tuple of
element names (in element-index order) or a short description of where the
check broke.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for every domain error raised by this package."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# core lattice
class CycleError(AlgebraError):
    pass


class NotALattice(AlgebraError):
    pass


class NoBounds(AlgebraError):
    pass


class NotInvolutive(AlgebraError):
    pass


class NotAntitone(AlgebraError):
    pass


# residuation
class UnitFails(AlgebraError):
    pass


class AdjointnessFails(AlgebraError):
    pass


class NotResiduated(AlgebraError):
    pass


class TheoremViolation(AlgebraError):
    pass


# sections
class NotIntoSection(AlgebraError):
    pass


class NotExtensive(AlgebraError):
    pass


class UnitImageFails(AlgebraError):
    pass


class IdentityFails(AlgebraError):
    def __init__(self, name: str, witness=None, message: str | None = None):
        super().__init__(message or f"identity {name} fails at {witness}", witness)
        self.name = name


class PreconditionFails(AlgebraError):
    pass


class NotSectionallyPseudocomplemented(AlgebraError):
    pass


# logics
class NotDistributive(AlgebraError):
    pass


class NormalityFails(AlgebraError):
    pass


class MissingRelativePseudocomplement(AlgebraError):
    pass


class NelsonIdentityFails(AlgebraError):
    pass


class ConstructionInvalid(AlgebraError):
    pass


class NotOrthocomplemented(AlgebraError):
    pass


class OrthomodularFails(AlgebraError):
    pass


# basic algebras
class AxiomFails(AlgebraError):
    def __init__(self, axiom: str, witness=None, message: str | None = None):
        super().__init__(message or f"axiom {axiom} fails at {witness}", witness)
        self.axiom = axiom


class InternalInconsistency(AlgebraError):
    pass


class NotLukasiewiczType(AlgebraError):
    pass


class NotReconstructible(AlgebraError):
    pass


class InvalidSize(AlgebraError):
    pass


# enumeration
class SizeCapExceeded(AlgebraError):
    pass


# file format / cli
class ParseError(AlgebraError):
    pass


class UnknownKind(AlgebraError):
    pass


class UnreachableTarget(AlgebraError):
    pass
