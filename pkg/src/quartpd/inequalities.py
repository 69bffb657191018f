"""Verification harness for a catalog of ternary quartic inequalities.

Each catalog entry is the polynomial

    P(x) = (x1+x2+x3)^4 - 8*(x1^3*x2 + x1*x3^3 + x2^3*x3)
           - x1*x2*x3*(w1*x1 + w2*x2 + w3*x3)

with rational weights.  Uniform weight c means w1 = w2 = w3 = c.  The
"exchanged" variant swaps each cubic monomial with its mirror
(x1^3*x2 <-> x1*x2^3 and so on) simultaneously.

Entries are verified, not proven: the numeric oracle supplies sphere-
minimum evidence, while every named boundary or counterexample point is
certified in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cyclic import RelaxedCyclicTernary, embed
from .oracle import OracleConfig, sphere_minimize, zero_set_probe
from .tensor import SymmetricTensor4
from .verdict import as_fraction, as_fraction_vector


@dataclass(frozen=True)
class WeightedInequality:
    label: str
    weights: Tuple[Fraction, Fraction, Fraction]
    strict: bool
    exchanged: bool = False
    expected_fail: bool = False
    fail_point: Optional[Tuple[Fraction, Fraction, Fraction]] = None
    equality_line: Optional[Tuple[int, int, int]] = None  # known equality direction

    @classmethod
    def uniform(cls, c, strict: bool, label: Optional[str] = None, **kw):
        c = as_fraction(c)
        return cls(label or f"{c}u", (c, c, c), strict, **kw)

    @classmethod
    def triple(cls, w1, w2, w3, strict: bool = True, **kw):
        w = tuple(as_fraction(v) for v in (w1, w2, w3))
        label = "-".join(str(v) for v in w)
        return cls(label, w, strict, **kw)  # type: ignore[arg-type]

    def value(self, x: Sequence) -> Fraction:
        """Exact P(x) for rational x."""
        x1, x2, x3 = as_fraction_vector(x)
        w1, w2, w3 = self.weights
        cubics = (
            x1 * x2**3 + x1**3 * x3 + x2 * x3**3
            if self.exchanged
            else x1**3 * x2 + x1 * x3**3 + x2**3 * x3
        )
        return (
            (x1 + x2 + x3) ** 4
            - 8 * cubics
            - x1 * x2 * x3 * (w1 * x1 + w2 * x2 + w3 * x3)
        )

    def to_tensor(self) -> SymmetricTensor4:
        """Exact symmetrization of P into an order-4 tensor.

        (x1+x2+x3)^4 is the all-ones tensor; each -8 cubic monomial puts
        -8/4 = -2 on its slot; the weight term puts -w_i/12 on its
        x1*x2*x3-type slot.
        """
        w1, w2, w3 = self.weights
        b, c = (1, -1) if self.exchanged else (-1, 1)
        return embed(
            RelaxedCyclicTernary(
                a=Fraction(1),
                b=Fraction(b),
                c=Fraction(c),
                d=Fraction(1),
                e123=1 - w1 / 12,
                e223=1 - w2 / 12,
                e233=1 - w3 / 12,
            )
        )


@dataclass(frozen=True)
class InequalityReport:
    label: str
    sphere_min: float
    min_point: Tuple[float, ...]
    equality_points: List[Tuple[float, ...]]
    holds: bool
    expected_fail: bool
    as_expected: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "sphere_min": self.sphere_min,
            "min_point": list(self.min_point),
            "equality_points": [list(p) for p in self.equality_points],
            "holds": self.holds,
            "expected_fail": self.expected_fail,
            "as_expected": self.as_expected,
        }


_FAIL_POINT_A = (Fraction(-6, 5), Fraction(5), Fraction(1))  # (-1.2, 5, 1)
_FAIL_POINT_B = (Fraction(-47, 5), Fraction(-2), Fraction(23, 10))  # (-9.4, -2, 2.3)


def builtin_catalog() -> List[WeightedInequality]:
    cat: List[WeightedInequality] = [
        WeightedInequality.uniform(19, strict=False, equality_line=(1, 1, 1)),
        WeightedInequality.uniform(14, strict=True),
        WeightedInequality.uniform(15, strict=True),
        WeightedInequality.uniform(16, strict=True),
        WeightedInequality.uniform(17, strict=True),
        WeightedInequality.uniform(18, strict=True),
        WeightedInequality.uniform(Fraction(41, 3), strict=True),
        WeightedInequality.triple(19, 17, 15),
        WeightedInequality.triple(19, 16, 15),
        WeightedInequality.triple(15, 14, 14),
        WeightedInequality.triple(15, 16, 14),
        WeightedInequality.triple(17, 15, 18),
        WeightedInequality.triple(Fraction(46, 3), 14, 14),
    ]
    for w1 in (19, 18, 17, 16):
        cat.append(
            WeightedInequality.triple(
                w1, 14, 14, expected_fail=True, fail_point=_FAIL_POINT_A
            )
        )
    cat.append(
        WeightedInequality.triple(
            Fraction(41, 3), 15, 15, expected_fail=True, fail_point=_FAIL_POINT_B
        )
    )
    return cat


def exact_spot_check(ineq: WeightedInequality, x: Sequence) -> Fraction:
    """Exact value of P(x); guards every float conclusion about a named point."""
    return ineq.value(x)


def verify(ineq: WeightedInequality, cfg: OracleConfig = OracleConfig()) -> InequalityReport:
    T = ineq.to_tensor()
    res = sphere_minimize(T, cfg)
    equality_points = (
        zero_set_probe(T, cfg) if abs(res.min_value) <= cfg.classify_margin else []
    )
    if ineq.strict:
        holds = res.min_value > cfg.classify_margin
    else:
        holds = res.min_value >= -cfg.classify_margin
    if ineq.expected_fail and ineq.fail_point is not None:
        # the float verdict must be backed by the exact counterexample
        holds = holds and not exact_spot_check(ineq, ineq.fail_point) < 0
    as_expected = holds != ineq.expected_fail
    return InequalityReport(
        label=ineq.label,
        sphere_min=res.min_value,
        min_point=res.minimizer,
        equality_points=equality_points,
        holds=holds,
        expected_fail=ineq.expected_fail,
        as_expected=as_expected,
    )
