"""Classifiers for 4th-order 3-dimensional cyclic symmetric tensors.

The cyclic family has five orbit parameters (a, b, c, d, e):

    a = t1111 = t2222 = t3333
    b = t1112 = t2223 = t1333
    c = t1113 = t1222 = t2333
    d = t1122 = t1133 = t2233
    e = t1123 = t1223 = t1233

For the normalized family (a = 1, |b| = |c| = 1) a decision ladder covers
the analytically settled cases: the -7/12 boundary, the PD interval
(-7/12, -5/36] lifted to d >= 1, and the necessity bound below -7/12.
Everything outside the settled cases defers to the numeric oracle.

A relaxed variant allows the three e-slots to differ; it is PD whenever
all three lie in (-7/12, -5/18] or all three lie in [-5/18, -1/6].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .tensor import SymmetricTensor4
from .verdict import Kind, PatternMismatchError, Verdict, as_fraction

_LO = Fraction(-7, 12)
_PD_HI = Fraction(-5, 36)
_PD_HI_CORE = Fraction(-1, 6)
_SPLIT = Fraction(-5, 18)
_SPLIT_CORE = Fraction(-1, 4)


@dataclass(frozen=True)
class CyclicTernary:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    @classmethod
    def of(cls, a, b, c, d, e) -> "CyclicTernary":
        return cls(*(as_fraction(v) for v in (a, b, c, d, e)))

    def relaxed(self) -> "RelaxedCyclicTernary":
        return RelaxedCyclicTernary(self.a, self.b, self.c, self.d, self.e, self.e, self.e)


@dataclass(frozen=True)
class RelaxedCyclicTernary:
    """Cyclic pattern except that the three x1*x2*x3-type slots may differ:
    e123 = t1123, e223 = t1223, e233 = t1233."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e123: Fraction
    e223: Fraction
    e233: Fraction

    @classmethod
    def of(cls, a, b, c, d, e123, e223, e233) -> "RelaxedCyclicTernary":
        return cls(*(as_fraction(v) for v in (a, b, c, d, e123, e223, e233)))


@dataclass(frozen=True)
class FamilyVerdict:
    verdict: Verdict
    rule: str
    witness: Optional[Tuple[Fraction, ...]] = None


def embed(ct: Union[CyclicTernary, RelaxedCyclicTernary]) -> SymmetricTensor4:
    """Populate all 15 canonical entries of the n=3 tensor."""
    if isinstance(ct, CyclicTernary):
        ct = ct.relaxed()
    return SymmetricTensor4(
        3,
        {
            (1, 1, 1, 1): ct.a,
            (2, 2, 2, 2): ct.a,
            (3, 3, 3, 3): ct.a,
            (1, 1, 1, 2): ct.b,
            (2, 2, 2, 3): ct.b,
            (1, 3, 3, 3): ct.b,
            (1, 1, 1, 3): ct.c,
            (1, 2, 2, 2): ct.c,
            (2, 3, 3, 3): ct.c,
            (1, 1, 2, 2): ct.d,
            (1, 1, 3, 3): ct.d,
            (2, 2, 3, 3): ct.d,
            (1, 1, 2, 3): ct.e123,
            (1, 2, 2, 3): ct.e223,
            (1, 2, 3, 3): ct.e233,
        },
    )


def _require_normalized(ct: CyclicTernary) -> None:
    if not (ct.a == 1 and abs(ct.b) == 1 and abs(ct.c) == 1):
        raise PatternMismatchError(
            "cyclic classifier needs a = 1 and |b| = |c| = 1; "
            "rescale by 1/a or use the numeric oracle"
        )


def necessity_bound_check(ct: CyclicTernary) -> bool:
    """Necessary condition for semidefiniteness on the sign-alternating
    boundary pattern (a = d = 1, b*c = -1): the triple-product coefficient
    must satisfy e >= -7/12.  Returns False when the tensor cannot be PSD.
    """
    _require_normalized(ct)
    if not (ct.d == 1 and ct.b * ct.c == -1):
        raise PatternMismatchError(
            "necessity bound needs d = 1 and b*c = -1; use the numeric oracle"
        )
    return ct.e >= _LO


def classify_cyclic(ct: CyclicTernary) -> FamilyVerdict:
    _require_normalized(ct)
    b, c, d, e = ct.b, ct.c, ct.d, ct.e

    if b * c == 1 and d == 1 and e == _LO:
        w = (1, 1, -5) if b == 1 else (1, 1, 1)
        w = tuple(Fraction(v) for v in w)
        return FamilyVerdict(
            Verdict(Kind.INDEFINITE, "boundary-matched-signs", witness=w),
            "boundary-matched-signs",
            witness=w,
        )
    if b * c == -1 and d == 1 and e == _LO:
        w = (Fraction(1), Fraction(1), Fraction(1))  # direction of the form's zero
        return FamilyVerdict(
            Verdict(Kind.PSD_NOT_PD, "boundary-alternating-signs", witness=w),
            "boundary-alternating-signs",
            witness=w,
        )
    if b * c == -1 and d >= 1 and _LO < e <= _PD_HI:
        if d > 1:
            rule = "pd-interval-lifted-offdiag"
        elif e <= _PD_HI_CORE:
            rule = "pd-interval"
        else:
            rule = "pd-interval-extended"
        return FamilyVerdict(Verdict(Kind.POSITIVE_DEFINITE, rule), rule)
    if b * c == -1 and d >= 1 and e == _LO:
        # d > 1 here; d = 1 was caught by the boundary rung above
        rule = "psd-closed-interval"
        return FamilyVerdict(Verdict(Kind.POSITIVE_SEMIDEFINITE, rule), rule)
    if e < _LO and d == 1 and b * c == -1:
        w = (Fraction(1), Fraction(1), Fraction(1))
        return FamilyVerdict(
            Verdict(Kind.INDEFINITE, "necessity-bound", witness=w),
            "necessity-bound",
            witness=w,
        )
    rule = "outside-settled-family"
    return FamilyVerdict(Verdict(Kind.UNDETERMINED, rule), rule)


def classify_relaxed(rt: RelaxedCyclicTernary) -> FamilyVerdict:
    if not (
        rt.a == 1
        and rt.d == 1
        and abs(rt.b) == 1
        and abs(rt.c) == 1
        and rt.b * rt.c == -1
    ):
        raise PatternMismatchError(
            "relaxed classifier needs a = d = 1, |b| = |c| = 1 and b*c = -1"
        )
    es = (rt.e123, rt.e223, rt.e233)
    # The PD region is a union of all-three-in-one-band conditions.  The
    # widened split point -5/18 strictly enlarges the upper band; its lower
    # band is contained in the original (-7/12, -1/4], so only three rules
    # can fire.  The union interval (-7/12, -1/6] is NOT valid: mixing
    # bands admits counterexamples.
    if all(_LO < e <= _SPLIT_CORE for e in es):
        rule = "pd-lower-band"
    elif all(_SPLIT_CORE <= e <= _PD_HI_CORE for e in es):
        rule = "pd-upper-band"
    elif all(_SPLIT <= e <= _PD_HI_CORE for e in es):
        rule = "pd-upper-band-widened"
    else:
        rule = "outside-bands"
        return FamilyVerdict(Verdict(Kind.UNDETERMINED, rule), rule)
    return FamilyVerdict(Verdict(Kind.POSITIVE_DEFINITE, rule), rule)
