"""Verdict records produced by the theorem checkers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Optional


class Status(str, enum.Enum):
    IMPLICATION_HOLDS = "ImplicationHolds"
    VACUOUS = "VacuouslyTrue"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    EQUIVALENCE_HOLDS = "EquivalenceHolds"
    EQUIVALENCE_FAILS = "EquivalenceFails"


@dataclass(frozen=True)
class Check:
    """A named truth value. ``holds is None`` means the statement could not
    be evaluated (e.g. it mentions an inverse that does not exist); that
    counts as not satisfied."""

    name: str
    holds: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.holds is True

    def to_json_obj(self) -> dict:
        return {"name": self.name, "holds": self.holds}


@dataclass(frozen=True)
class Equivalence:
    name: str
    left: Optional[bool]
    right: Optional[bool]

    @property
    def holds(self) -> bool:
        return bool(self.left) == bool(self.right)

    def to_json_obj(self) -> dict:
        return {"name": self.name, "left": self.left, "right": self.right, "holds": self.holds}


@dataclass(frozen=True)
class LawVerdict:
    law: str
    inputs: tuple
    hypotheses: tuple
    conclusion: Optional[bool]
    status: Status
    rows: tuple = ()
    equivalences: tuple = ()
    mask: frozenset = frozenset()
    notes: tuple = ()
    counterexamples: tuple = field(default=(), compare=False)

    @property
    def is_equivalence(self) -> bool:
        return bool(self.equivalences)

    @property
    def nonvacuous(self) -> bool:
        return all(h.ok for h in self.hypotheses if h.name not in self.mask)

    def hypothesis(self, name: str) -> Check:
        return next(h for h in self.hypotheses if h.name == name)

    def masked(self, mask) -> "LawVerdict":
        """Same verdict with the named hypotheses ignored when deciding the
        status (hypothesis-necessity analysis)."""
        mask = frozenset(mask)
        unknown = mask - {h.name for h in self.hypotheses}
        if unknown:
            raise KeyError(f"unknown hypotheses for {self.law}: {sorted(unknown)}")
        v = replace(self, mask=mask)
        return replace(v, status=_status(v))

    def to_json_obj(self) -> dict:
        out = {
            "law": self.law,
            "inputs": [e.flat() for e in self.inputs],
            "hypotheses": [h.to_json_obj() for h in self.hypotheses],
            "conclusion": self.conclusion,
            "rows": [r.to_json_obj() for r in self.rows],
            "status": self.status.value,
        }
        if self.equivalences:
            out["equivalences"] = [e.to_json_obj() for e in self.equivalences]
        if self.mask:
            out["mask"] = sorted(self.mask)
        if self.notes:
            out["notes"] = list(self.notes)
        if self.counterexamples:
            out["counterexamples"] = [list(c) for c in self.counterexamples]
        return out


def _status(v: LawVerdict) -> Status:
    if not v.nonvacuous:
        return Status.VACUOUS
    if v.equivalences:
        if all(e.holds for e in v.equivalences):
            return Status.EQUIVALENCE_HOLDS
        return Status.EQUIVALENCE_FAILS
    if v.conclusion:
        return Status.IMPLICATION_HOLDS
    return Status.COUNTEREXAMPLE


def implication(law, inputs, hypotheses, rows, notes=(), counterexamples=()) -> LawVerdict:
    """Verdict of "all hypotheses => every row". The conclusion is the
    conjunction of the rows."""
    rows = tuple(rows)
    conclusion = all(r.ok for r in rows)
    v = LawVerdict(law, tuple(inputs), tuple(hypotheses), conclusion, Status.VACUOUS,
                   rows, (), frozenset(), tuple(notes), tuple(counterexamples))
    return replace(v, status=_status(v))


def equivalence(law, inputs, preconditions, equivalences, rows=(), notes=()) -> LawVerdict:
    """Verdict of one or more biconditionals, evaluated when every
    precondition holds."""
    equivalences = tuple(equivalences)
    v = LawVerdict(law, tuple(inputs), tuple(preconditions),
                   all(e.holds for e in equivalences), Status.VACUOUS,
                   tuple(rows), equivalences, frozenset(), tuple(notes))
    return replace(v, status=_status(v))
