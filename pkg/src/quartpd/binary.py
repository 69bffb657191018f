"""Exact PD/PSD decision for binary quartic forms.

The form is  a0*x1^4 + 4*a1*x1^3*x2 + 6*a2*x1^2*x2^2 + 4*a3*x1*x2^3 + a4*x2^4
with (a0,..,a4) = (t1111, t1112, t1122, t1222, t2222).  The criterion is a
case split on the sign of eta^3 - 27*chi^2 together with radical bounds;
every radical comparison is rewritten as an exact rational predicate in
Q[sqrt(a0*a4)], so all branch decisions are exact.

The radical criterion assumes strictly positive diagonal entries; zero or
negative diagonals are decided directly from the residual form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .quadext import QuadExt
from .verdict import Kind, PatternMismatchError, Verdict, as_fraction


@dataclass(frozen=True)
class BinaryQuartic:
    a0: Fraction
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    @classmethod
    def of(cls, a0, a1, a2, a3, a4) -> "BinaryQuartic":
        return cls(*(as_fraction(v) for v in (a0, a1, a2, a3, a4)))

    def value(self, x) -> Fraction:
        x1, x2 = (as_fraction(v) for v in x)
        return (
            self.a0 * x1**4
            + 4 * self.a1 * x1**3 * x2
            + 6 * self.a2 * x1**2 * x2**2
            + 4 * self.a3 * x1 * x2**3
            + self.a4 * x2**4
        )

    def swapped(self) -> "BinaryQuartic":
        """Exchange the roles of x1 and x2."""
        return BinaryQuartic(self.a4, self.a3, self.a2, self.a1, self.a0)

    def scaled(self, c) -> "BinaryQuartic":
        c = as_fraction(c)
        return BinaryQuartic(*(c * a for a in self))

    def __iter__(self):
        return iter((self.a0, self.a1, self.a2, self.a3, self.a4))

    def to_tensor(self):
        from .tensor import SymmetricTensor4

        return SymmetricTensor4(
            2,
            {
                (1, 1, 1, 1): self.a0,
                (1, 1, 1, 2): self.a1,
                (1, 1, 2, 2): self.a2,
                (1, 2, 2, 2): self.a3,
                (2, 2, 2, 2): self.a4,
            },
        )


@dataclass(frozen=True)
class DiscriminantParts:
    eta: Fraction
    chi: Fraction
    delta_sign: int  # sign of eta^3 - 27*chi^2


def discriminant_parts(q: BinaryQuartic) -> DiscriminantParts:
    a0, a1, a2, a3, a4 = q
    eta = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2
    chi = a0 * a2 * a4 + 2 * a1 * a2 * a3 - a2**3 - a0 * a3 * a3 - a1 * a1 * a4
    d = eta**3 - 27 * chi * chi
    return DiscriminantParts(eta, chi, (d > 0) - (d < 0))


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


# -- the radical criterion (positive diagonals only) ---------------------


def _difference_bound(q: BinaryQuartic, s: Fraction) -> bool:
    """|a1*sqrt(a4) - a3*sqrt(a0)| <= sqrt(6*a0*a2*a4 + 2*sqrt(s^3))."""
    a0, a1, a2, a3, a4 = q
    lhs_sq = QuadExt(a1 * a1 * a4 + a3 * a3 * a0, -2 * a1 * a3, s)
    radicand = QuadExt(6 * a0 * a2 * a4, 2 * s, s)
    if radicand.sign() < 0:
        return False
    return (radicand - lhs_sq).sign() >= 0


def _sum_bound(q: BinaryQuartic, s: Fraction) -> bool:
    """|a1*sqrt(a4) + a3*sqrt(a0)| <= sqrt(6*a0*a2*a4 - 2*sqrt(s^3))."""
    a0, a1, a2, a3, a4 = q
    lhs_sq = QuadExt(a1 * a1 * a4 + a3 * a3 * a0, 2 * a1 * a3, s)
    radicand = QuadExt(6 * a0 * a2 * a4, -2 * s, s)
    if radicand.sign() < 0:
        return False
    return (radicand - lhs_sq).sign() >= 0


def _case_i(q: BinaryQuartic, s: Fraction, strict_lower: bool) -> bool:
    """-sqrt(s) (<|<=) 3*a2 <= 3*sqrt(s)."""
    lower = QuadExt(3 * q.a2, 1, s).sign()
    upper = QuadExt(q.a2, -1, s).sign()
    return (lower > 0 if strict_lower else lower >= 0) and upper <= 0


def _case_ii(q: BinaryQuartic, s: Fraction) -> bool:
    """a2 > sqrt(s) together with the sum-radical bound."""
    return QuadExt(q.a2, -1, s).sign() > 0 and _sum_bound(q, s)


def _pd_rule(q: BinaryQuartic, parts: DiscriminantParts, s: Fraction) -> Optional[str]:
    a0, a1, a2, a3, a4 = q
    if parts.delta_sign == 0:
        # boundary branch: double root of the resolvent, still definite
        slope_match = _sign(a1) == _sign(a3) and a1 * a1 * a4 == a3 * a3 * a0
        middle = QuadExt(3 * a0 * a2 - 2 * a1 * a1, -a0, s).sign() == 0
        strict_top = QuadExt(a2, -1, s).sign() < 0
        if slope_match and middle and strict_top:
            return "boundary-discriminant"
        return None
    if parts.delta_sign < 0:
        return None
    if not _difference_bound(q, s):
        return None
    if _case_i(q, s, strict_lower=True):
        return "positive-discriminant(i)"
    if _case_ii(q, s):
        return "positive-discriminant(ii)"
    return None


def _psd_rule(q: BinaryQuartic, parts: DiscriminantParts, s: Fraction) -> Optional[str]:
    if parts.delta_sign < 0:
        return None
    if not _difference_bound(q, s):
        return None
    if _case_i(q, s, strict_lower=False):
        return "nonnegative-discriminant(i)"
    if _case_ii(q, s):
        return "nonnegative-discriminant(ii)"
    return None


# -- degenerate diagonals ------------------------------------------------


@dataclass(frozen=True)
class PrefilterResult:
    passed: bool
    reason: Optional[str] = None
    residual: Optional[Verdict] = None


def _quadratic_psd(A: Fraction, B: Fraction, C: Fraction) -> bool:
    """A*u^2 + B*u + C >= 0 for all real u."""
    if A > 0:
        return B * B <= 4 * A * C
    return A == 0 and B == 0 and C >= 0


def _grow(predicate) -> Fraction:
    """First value t = +-2^k (k = 0..64) satisfying the predicate."""
    for k in range(65):
        for t in (Fraction(2) ** k, -(Fraction(2) ** k)):
            if predicate(t):
                return t
    raise ArithmeticError("witness search exhausted")  # pragma: no cover


def _shrink(predicate) -> Fraction:
    """First value t = +-2^-k (k = 0..64) satisfying the predicate."""
    for k in range(65):
        for t in (Fraction(1, 2**k), -Fraction(1, 2**k)):
            if predicate(t):
                return t
    raise ArithmeticError("witness search exhausted")  # pragma: no cover


def _classify_zero_a0(q: BinaryQuartic) -> Verdict:
    """a0 = 0, a4 >= 0: the form is x2^2 * (6*a2*x1^2 + 4*a3*x1*x2 + a4*x2^2)
    once the necessary condition a1 = 0 holds."""
    a0, a1, a2, a3, a4 = q
    rule = "zero-diagonal"
    if a1 != 0:
        # dominant odd term: x = (t, 1) with |t| large and sign against a1
        t = _grow(lambda t: q.value((t, 1)) < 0)
        return Verdict(Kind.INDEFINITE, rule, witness=(t, Fraction(1)))
    if _quadratic_psd(6 * a2, 4 * a3, a4):
        return Verdict(Kind.PSD_NOT_PD, rule, witness=(Fraction(1), Fraction(0)))
    # residual quadratic takes a negative value somewhere
    if a2 > 0:
        w = (-a3 / (3 * a2), Fraction(1))
    elif a2 < 0:
        w = (Fraction(1), _shrink(lambda t: q.value((1, t)) < 0 and t != 0))
    else:  # a2 == 0, a3 != 0 or a4 < 0
        w = (_grow(lambda t: q.value((t, 1)) < 0), Fraction(1))
    assert q.value(w) < 0
    return Verdict(Kind.INDEFINITE, rule, witness=w)


def prefilter_zero_diagonal(q: BinaryQuartic) -> PrefilterResult:
    """Necessary conditions when a diagonal entry is nonpositive, plus the
    direct verdict for the residual form when they pass."""
    a0, a1, a2, a3, a4 = q
    if a0 < 0:
        return PrefilterResult(False, "t1111 < 0")
    if a4 < 0:
        return PrefilterResult(False, "t2222 < 0")
    if a0 == 0 and a1 != 0:
        return PrefilterResult(False, "t1111 = 0 but t1112 != 0")
    if a4 == 0 and a3 != 0:
        return PrefilterResult(False, "t2222 = 0 but t1222 != 0")
    if (a0 == 0 or a4 == 0) and a2 < 0:
        return PrefilterResult(False, "zero diagonal with t1122 < 0")
    if a0 == 0:
        return PrefilterResult(True, residual=_classify_zero_a0(q))
    if a4 == 0:
        v = _classify_zero_a0(q.swapped())
        w = tuple(reversed(v.witness)) if v.witness else None
        return PrefilterResult(True, residual=Verdict(v.kind, v.rule, witness=w))
    return PrefilterResult(True)


# -- witness search for the nondegenerate indefinite case ----------------


def _negative_witness(q: BinaryQuartic) -> Optional[Tuple[Fraction, Fraction]]:
    best_t, best_v = None, Fraction(0)
    for num in range(-64, 65):
        for den in (1, 3, 8):
            t = Fraction(num, den)
            v = q.value((t, 1))
            if v < best_v:
                best_t, best_v = t, v
    if best_t is None:
        # golden-section refinement around the float minimum of q(t, 1)
        f = lambda t: float(q.value((Fraction(t).limit_denominator(10**12), 1)))
        import math

        grid = [i / 64 for i in range(-64 * 8, 64 * 8 + 1)]
        t0 = min(grid, key=f)
        a, b = t0 - 0.2, t0 + 0.2
        inv = (math.sqrt(5) - 1) / 2
        for _ in range(80):
            c, d = b - inv * (b - a), a + inv * (b - a)
            if f(c) < f(d):
                b = d
            else:
                a = c
        for den in (10**3, 10**6, 10**9, 10**12):
            t = Fraction((a + b) / 2).limit_denominator(den)
            if q.value((t, 1)) < 0:
                return (t, Fraction(1))
        return None
    return (best_t, Fraction(1))


# -- public entry points -------------------------------------------------


def classify(q: BinaryQuartic) -> Verdict:
    a0, a1, a2, a3, a4 = q
    if a0 < 0:
        return Verdict(Kind.INDEFINITE, "negative-diagonal", witness=(Fraction(1), Fraction(0)))
    if a4 < 0:
        return Verdict(Kind.INDEFINITE, "negative-diagonal", witness=(Fraction(0), Fraction(1)))
    if a0 == 0 or a4 == 0:
        pre = prefilter_zero_diagonal(q)
        if not pre.passed:
            if "t1112" in pre.reason:
                w = (_grow(lambda t: q.value((t, 1)) < 0), Fraction(1))
            elif "t1222" in pre.reason:
                w = (Fraction(1), _grow(lambda t: q.value((1, t)) < 0))
            else:
                w = (_grow(lambda t: q.value((t, 1)) < 0), Fraction(1))
            return Verdict(Kind.INDEFINITE, "zero-diagonal", witness=w)
        return pre.residual
    parts = discriminant_parts(q)
    s = a0 * a4
    rule = _pd_rule(q, parts, s)
    if rule is not None:
        return Verdict(Kind.POSITIVE_DEFINITE, rule)
    rule = _psd_rule(q, parts, s)
    if rule is not None:
        return Verdict(Kind.PSD_NOT_PD, rule)
    return Verdict(Kind.INDEFINITE, "criterion-failed", witness=_negative_witness(q))


def is_positive_definite(q: BinaryQuartic) -> Verdict:
    return classify(q)


def is_positive_semidefinite(q: BinaryQuartic) -> Verdict:
    return classify(q)


def check_normalized_pm1(q: BinaryQuartic) -> Verdict:
    """Fast path for unit diagonals: a0 = a4 = 1, |a1| <= 1, |a3| <= 1 and
    either a2 = 1 or all entries of modulus 1.

    With a2 = 1 the criterion collapses to comparing 27*(a3-a1)^4 against
    64*(1-a1*a3)^3; with a2 = -1 the form is never PSD.
    """
    a0, a1, a2, a3, a4 = q
    pm1_case = abs(a1) == 1 and abs(a3) == 1 and abs(a2) == 1
    if not (a0 == 1 and a4 == 1 and abs(a1) <= 1 and abs(a3) <= 1):
        raise PatternMismatchError("fast path needs unit diagonals and |a1|,|a3| <= 1")
    if a2 != 1 and not pm1_case:
        raise PatternMismatchError("fast path needs a2 = 1 or all entries of modulus 1")
    if a2 == -1:
        return Verdict(Kind.INDEFINITE, "fast-path", witness=_negative_witness(q))
    lhs = 27 * (a3 - a1) ** 4
    rhs = 64 * (1 - a1 * a3) ** 3
    if lhs < rhs:
        return Verdict(Kind.POSITIVE_DEFINITE, "fast-path")
    if lhs == rhs:
        return Verdict(Kind.PSD_NOT_PD, "fast-path")
    return Verdict(Kind.INDEFINITE, "fast-path", witness=_negative_witness(q))
