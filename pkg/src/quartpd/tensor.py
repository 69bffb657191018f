"""Order-4 symmetric tensors in compressed canonical storage.

A symmetric tensor is stored as a map from the sorted (1-based) index
4-tuple to an exact rational entry.  Every full-index operation weights a
canonical slot by its multinomial multiplicity: 1, 4, 6, 12 or 24
depending on the repetition pattern of the indices.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .verdict import as_fraction

Index4 = Tuple[int, int, int, int]

_FOUR_FACTORIAL = 24


def canonical_index(idx: Sequence[int]) -> Index4:
    if len(idx) != 4:
        raise ValueError(f"order-4 index expected, got {idx!r}")
    return tuple(sorted(idx))  # type: ignore[return-value]


def multiplicity(idx: Sequence[int]) -> int:
    """Number of distinct permutations of the index tuple."""
    counts = {}
    for i in idx:
        counts[i] = counts.get(i, 0) + 1
    denom = 1
    for c in counts.values():
        denom *= math.factorial(c)
    return _FOUR_FACTORIAL // denom


def canonical_indices(dim: int) -> Iterable[Index4]:
    return itertools.combinations_with_replacement(range(1, dim + 1), 4)


class SymmetricTensor4:
    """Immutable order-4 symmetric tensor of dimension ``dim``.

    Missing canonical slots read as zero; lookups with indices in any
    order resolve to the canonical slot.
    """

    __slots__ = ("dim", "_entries")

    def __init__(self, dim: int, entries: Mapping[Sequence[int], object]):
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        canon: Dict[Index4, Fraction] = {}
        for idx, val in entries.items():
            cidx = canonical_index(idx)
            if any(i < 1 or i > dim for i in cidx):
                raise ValueError(f"index {idx!r} out of range for dim {dim}")
            v = as_fraction(val)
            if v != 0:
                canon[cidx] = v
        self.dim = dim
        self._entries = canon

    def __getitem__(self, idx: Sequence[int]) -> Fraction:
        return self._entries.get(canonical_index(idx), Fraction(0))

    def entries(self) -> Dict[Index4, Fraction]:
        return dict(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricTensor4):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.dim, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SymmetricTensor4(dim={self.dim}, nnz={len(self._entries)})"

    # -- algebra ---------------------------------------------------------

    def _check_vector(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise ValueError(f"vector length {len(x)} != tensor dim {self.dim}")
        return tuple(x)

    def evaluate_form(self, x: Sequence) -> Fraction:
        """Tx^4 = sum over all n^4 tuples of t_ijkl x_i x_j x_k x_l."""
        x = self._check_vector(x)
        total = 0
        for idx, t in self._entries.items():
            prod = t * multiplicity(idx)
            for i in idx:
                prod = prod * x[i - 1]
            total += prod
        return total

    def evaluate_gradient(self, x: Sequence) -> tuple:
        """Tx^3: component k is the sum of t_{k i j l} x_i x_j x_l."""
        x = self._check_vector(x)
        grad = []
        for k in range(1, self.dim + 1):
            acc = 0
            for rest in itertools.product(range(1, self.dim + 1), repeat=3):
                t = self[(k, *rest)]
                if t:
                    p = t
                    for i in rest:
                        p = p * x[i - 1]
                    acc += p
            grad.append(acc)
        return tuple(grad)

    def evaluate_mixed(self, x: Sequence, k: int, y: Sequence) -> Fraction:
        """Tx^k y^(4-k): k slots hold x, the remaining 4-k hold y."""
        if not 0 <= k <= 4:
            raise ValueError(f"slot count k must be in 0..4, got {k}")
        x = self._check_vector(x)
        y = self._check_vector(y)
        total = 0
        for idx in itertools.product(range(1, self.dim + 1), repeat=4):
            t = self[idx]
            if t:
                p = t
                for pos, i in enumerate(idx):
                    p = p * (x[i - 1] if pos < k else y[i - 1])
                total += p
        return total

    def inner_product(self, other: "SymmetricTensor4") -> Fraction:
        """Full n^4 sum of entrywise products."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        keys = set(self._entries) & set(other._entries)
        return sum(
            (self._entries[k] * other._entries[k] * multiplicity(k) for k in keys),
            Fraction(0),
        )

    def frobenius_norm_squared(self) -> Fraction:
        return self.inner_product(self)

    def frobenius_norm(self) -> float:
        return math.sqrt(self.frobenius_norm_squared())

    def scale(self, c) -> "SymmetricTensor4":
        c = as_fraction(c)
        return SymmetricTensor4(
            self.dim, {idx: c * v for idx, v in self._entries.items()}
        )

    def dense(self):
        """Dense float array (0-indexed) for the numeric oracle."""
        import numpy as np

        n = self.dim
        out = np.zeros((n, n, n, n))
        for idx, v in self._entries.items():
            fv = float(v)
            for perm in set(itertools.permutations(idx)):
                out[tuple(i - 1 for i in perm)] = fv
        return out


def diag_ones(dim: int) -> SymmetricTensor4:
    """t_iiii = 1, everything else zero: the sum-of-fourth-powers form."""
    return SymmetricTensor4(dim, {(i, i, i, i): 1 for i in range(1, dim + 1)})


def rank_one(x: Sequence) -> SymmetricTensor4:
    """x^(x)4, the 4-fold outer product of x with itself."""
    xs = tuple(as_fraction(v) for v in x)
    n = len(xs)
    entries = {}
    for idx in canonical_indices(n):
        entries[idx] = xs[idx[0] - 1] * xs[idx[1] - 1] * xs[idx[2] - 1] * xs[idx[3] - 1]
    return SymmetricTensor4(n, entries)


def symmetrize(raw: Mapping[Sequence[int], object], dim: int):
    """Average a full (possibly asymmetric) entry table over permutations.

    Returns ``(tensor, diagnostic)`` where the diagnostic is the largest
    deviation of any raw entry from its canonical average.
    """
    groups: Dict[Index4, list] = {}
    for idx, val in raw.items():
        if len(idx) != 4:
            raise ValueError(f"order-4 index expected, got {idx!r}")
        groups.setdefault(canonical_index(idx), []).append(as_fraction(val))
    entries = {}
    diagnostic = Fraction(0)
    for cidx, vals in groups.items():
        m = multiplicity(cidx)
        # unspecified permutations of a partially supplied orbit read as zero
        avg = sum(vals, Fraction(0)) / m
        entries[cidx] = avg
        worst = max(abs(v - avg) for v in vals)
        if len(vals) < m:
            worst = max(worst, abs(avg))
        diagnostic = max(diagnostic, worst)
    return SymmetricTensor4(dim, entries), diagnostic
