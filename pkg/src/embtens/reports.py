"""Uniform pass/fail reports produced by all checkers.

Axiom checkers stop at the first failing basis tuple (scanned in
lexicographic order, so the witness is reproducible); residual-style
checkers such as the embedding-tensor check record every nonzero
residual.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import scalar_to_json


@dataclass(frozen=True)
class Failure:
    """One violated law, with the basis tuple where it failed."""

    law: str
    where: tuple[int, ...]
    residual: tuple[Fraction, ...] | None = None

    def to_json(self) -> dict:
        data: dict = {"law": self.law, "where": list(self.where)}
        if self.residual is not None:
            data["residual"] = [scalar_to_json(x) for x in self.residual]
        return data


@dataclass(frozen=True)
class CheckReport:
    check: str
    ok: bool
    failures: tuple[Failure, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def witness(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
            "notes": list(self.notes),
        }


def passing(check: str, notes: tuple[str, ...] = ()) -> CheckReport:
    return CheckReport(check=check, ok=True, notes=notes)


def failing(check: str, failures: list[Failure], notes: tuple[str, ...] = ()) -> CheckReport:
    return CheckReport(check=check, ok=False, failures=tuple(failures), notes=notes)
