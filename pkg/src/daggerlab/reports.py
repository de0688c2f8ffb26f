"""Structured pass/fail records emitted by verifiers and campaigns."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .matcat import Morphism

PASS = "pass"
FAIL = "fail"
INFEASIBLE = "infeasible"


@dataclass
class Report:
    """Outcome of one axiom or lemma check.

    `witness` carries a counterexample (on failure) or the constructed
    certificate morphism (on structural infeasibility arguments).
    """

    axiom: str
    field: str
    status: str
    residual: float = 0.0
    witness: Optional[Morphism] = None
    details: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        data = {
            "axiom": self.axiom,
            "field": self.field,
            "status": self.status,
            "residual": float(self.residual),
            "witness": self.witness.to_json() if self.witness is not None else None,
        }
        if self.details:
            data["details"] = self.details
        return data
