"""Exception hierarchy shared by the library and the CLI.

Every error knows how to render itself as a JSON-ready dict; the CLI maps
:class:`UsageError`/:class:`ParseError` to exit code 2 and every other
:class:`HcfamError` to exit code 1.
"""

from __future__ import annotations

from typing import Any


class HcfamError(Exception):
    """Base class for domain errors."""

    def to_json(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self)}


class DivisionByZero(HcfamError, ZeroDivisionError):
    pass


class ValidationError(HcfamError):
    """A family table violates one of the pair axioms.

    ``axiom`` is one of ``structure``, ``antisymmetry``, ``weight-additivity``,
    ``h-compatibility`` or ``jacobi``; ``triple`` holds the witnessing basis
    indices.
    """

    def __init__(self, axiom: str, triple: tuple[int, ...] | None, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.triple = triple

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"error": "ValidationError", "axiom": self.axiom}
        if self.triple is not None:
            out["triple"] = list(self.triple)
        out["message"] = str(self)
        return out


class FamilyMismatch(HcfamError):
    pass


class BaseMismatch(HcfamError):
    pass


class PuncturedAtZero(HcfamError):
    pass


class NotExtension(HcfamError):
    """Classification failed; ``reason`` names the obstruction."""

    def __init__(self, reason: str, message: str, **detail: Any):
        super().__init__(message)
        self.reason = reason
        self.detail = detail

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"error": self.reason, "kind": "NotExtension"}
        out.update(self.detail)
        out["message"] = str(self)
        return out


class NotCanonical(HcfamError):
    pass


class NoWitness(HcfamError):
    pass


class InvalidMorphism(HcfamError):
    pass


class ChainMismatch(HcfamError):
    pass


class NegativeExponent(HcfamError):
    pass


class DegreeBoundTooSmall(HcfamError):
    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound

    def to_json(self) -> dict[str, Any]:
        return {"error": "DegreeBoundTooSmall", "bound": self.bound, "message": str(self)}


class ParseError(HcfamError):
    """Malformed text or JSON input (CLI exit code 2)."""


class UsageError(HcfamError):
    """Bad command-line usage (CLI exit code 2)."""
