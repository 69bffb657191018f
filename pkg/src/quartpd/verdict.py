"""Classification results shared by the analytic and numeric checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence


class Kind(Enum):
    POSITIVE_DEFINITE = "positive-definite"
    PSD_NOT_PD = "positive-semidefinite-not-definite"
    POSITIVE_SEMIDEFINITE = "positive-semidefinite"  # strictness unknown
    INDEFINITE = "indefinite"
    UNDETERMINED = "undetermined"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """A classification together with the rule that produced it.

    ``witness`` is a vector certifying the verdict: a point with strictly
    negative form value for INDEFINITE, or a nonzero root of the form for
    the boundary PSD kinds.  ``margin`` is only set on numeric verdicts.
    """

    kind: Kind
    rule: str
    witness: Optional[tuple] = None
    margin: Optional[float] = None
    positivity_witness: Optional[tuple] = None

    @property
    def is_pd(self) -> bool:
        return self.kind is Kind.POSITIVE_DEFINITE

    @property
    def is_psd(self) -> bool:
        return self.kind in (
            Kind.POSITIVE_DEFINITE,
            Kind.PSD_NOT_PD,
            Kind.POSITIVE_SEMIDEFINITE,
        )

    def to_dict(self) -> dict:
        return {
            "kind": str(self.kind),
            "rule": self.rule,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "margin": self.margin,
            "positivity_witness": (
                [float(w) for w in self.positivity_witness]
                if self.positivity_witness
                else None
            ),
        }


class PatternMismatchError(ValueError):
    """Input does not satisfy the hypothesis pattern of an analytic rule."""


def as_fraction(value) -> Fraction:
    """Exact conversion of ints, Fractions and decimal/rational strings.

    Decimal strings are expanded in base 10 ("-1.2" -> -6/5); binary floats
    are rejected so no rounding artifact can enter the exact path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact scalar expected, got {type(value).__name__}: {value!r}")


def as_fraction_vector(xs: Sequence) -> tuple:
    return tuple(as_fraction(x) for x in xs)
