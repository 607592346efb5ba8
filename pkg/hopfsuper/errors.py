"""Exception hierarchy for hopfsuper."""

from typing import Optional, Sequence, Tuple


class HopfSuperError(Exception):
    """Base class for every error raised by hopfsuper."""


class CyclotomicDivisionError(HopfSuperError, ZeroDivisionError):
    """Division by zero in a cyclotomic field."""


class ScalarParseError(HopfSuperError, ValueError):
    """A scalar string does not follow the ``a0 + a1*z + ... @N`` format."""


class StructureError(HopfSuperError):
    """Structure-constant data are malformed (shape, index range or parity homogeneity)."""


class SchemaError(StructureError):
    """A serialized document violates the JSON schema.

    Attributes:
        pointer: JSON pointer of the offending value
    """

    def __init__(self, message: str, pointer: str = "") -> None:
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class PresentationError(HopfSuperError):
    """Rewriting rules of a presentation are not confluent.

    Attributes:
        overlap: basis labels of the triple whose two bracketings disagree
    """

    def __init__(self, message: str, overlap: Optional[Tuple[str, str, str]] = None) -> None:
        self.overlap = overlap
        if overlap is not None:
            message = f"{message} (overlap {' * '.join(overlap)})"
        super().__init__(message)


class DatumError(HopfSuperError):
    """A datum (Γ, D) violates the conditions required for 𝒜(Γ, D)."""

    def __init__(self, violations: Sequence[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class CertificateError(HopfSuperError):
    """Character count disagrees with the commutative semisimple quotient dimension."""


class RouteDisagreementError(HopfSuperError):
    """The generic and presentation super-datum tests gave different answers."""


class NotSuperDatumError(HopfSuperError):
    """Coinvariant construction failed, so the datum is not a super-datum."""


class MorphismError(HopfSuperError):
    """A map that must be a Hopf (super)algebra isomorphism failed verification."""


class UnknownNameError(HopfSuperError, KeyError):
    """Unknown catalog name, basis label, generator or selector."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
