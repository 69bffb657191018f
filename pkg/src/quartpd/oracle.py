"""Floating-point certification by minimizing Tx^4 over the unit sphere.

Candidates come from a deterministic low-discrepancy grid (uniform angles
on the circle for n=2, a spherical Fibonacci lattice for n=3) with seeded
jitter.  The best candidates are polished by projected gradient descent
with backtracking, the gradient step having its radial component removed
and the iterate renormalized each step.

A strictly positive sphere minimum certifies positive definiteness; a
strictly negative value refutes semidefiniteness; values inside the
classification margin are reported as boundary and left to the exact
analytic modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .tensor import SymmetricTensor4
from .verdict import Kind, Verdict

_GOLDEN = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class OracleConfig:
    grid_points: Optional[int] = None  # defaults: 4096 (n=2), 20000 (n=3)
    refine_max_iters: int = 500
    grad_tol: float = 1e-10
    classify_margin: float = 1e-8
    seed: int = 0
    refine_top_k: int = 50

    def __post_init__(self):
        if self.grid_points is not None and self.grid_points <= 0:
            raise ValueError("grid_points must be positive")
        if self.refine_max_iters <= 0 or self.grad_tol <= 0:
            raise ValueError("refinement parameters must be positive")
        if not 0 < self.classify_margin < 1:
            raise ValueError("classify_margin must lie in (0, 1)")

    def effective_grid(self, dim: int) -> int:
        if self.grid_points is not None:
            return self.grid_points
        return 4096 if dim == 2 else 20000


@dataclass(frozen=True)
class OracleResult:
    min_value: float
    minimizer: Tuple[float, ...]  # unit norm, first nonzero coordinate positive
    classification: str  # "pd" | "indefinite" | "boundary"
    iterations_used: int


def _canonical_sign(x: np.ndarray) -> np.ndarray:
    for v in x:
        if abs(v) > 1e-12:
            return x if v > 0 else -x
    return x


def _grid(dim: int, n_points: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if dim == 2:
        theta = np.linspace(0.0, 2 * math.pi, n_points, endpoint=False)
        theta = theta + rng.uniform(-0.5, 0.5, n_points) * (2 * math.pi / n_points)
        return np.stack([np.cos(theta), np.sin(theta)], axis=1)
    if dim == 3:
        i = np.arange(n_points)
        z = 1.0 - 2.0 * (i + 0.5) / n_points
        phi = 2 * math.pi * i / _GOLDEN
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        pts = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
        pts = pts + rng.normal(0.0, 0.2 / math.sqrt(n_points), pts.shape)
        return pts / np.linalg.norm(pts, axis=1, keepdims=True)
    raise ValueError(f"oracle supports dim 2 or 3, got {dim}")


def _forms_and_cubics(Td: np.ndarray, X: np.ndarray):
    """Values Tx^4 and vectors Tx^3 for a batch of points (rows of X)."""
    A = np.einsum("ijkl,pl->pijk", Td, X)
    B = np.einsum("pijk,pk->pij", A, X)
    C = np.einsum("pij,pj->pi", B, X)  # rows are Tx^3
    vals = np.einsum("pi,pi->p", C, X)
    return vals, C


def _refine_batch(Td: np.ndarray, X0: np.ndarray, cfg: OracleConfig):
    """Projected gradient with per-candidate backtracking on the sphere.

    Returns refined points, values and the iteration count of the longest
    running candidate.
    """
    X = X0 / np.linalg.norm(X0, axis=1, keepdims=True)
    vals, cub = _forms_and_cubics(Td, X)
    alpha = np.full(len(X), 0.1)
    active = np.ones(len(X), dtype=bool)
    iters = 0
    for it in range(cfg.refine_max_iters):
        grad = 4.0 * cub
        gt = grad - (np.einsum("pi,pi->p", grad, X))[:, None] * X
        gnorm2 = np.einsum("pi,pi->p", gt, gt)
        active = active & (np.sqrt(gnorm2) > cfg.grad_tol)
        if not active.any():
            break
        iters = it + 1
        moved = np.zeros(len(X), dtype=bool)
        for _ in range(40):
            idx = active & ~moved
            if not idx.any():
                break
            trial = X[idx] - alpha[idx, None] * gt[idx]
            trial = trial / np.linalg.norm(trial, axis=1, keepdims=True)
            tvals, tcub = _forms_and_cubics(Td, trial)
            ok = tvals < vals[idx] - 1e-4 * alpha[idx] * gnorm2[idx]
            sel = np.flatnonzero(idx)
            good = sel[ok]
            X[good] = trial[ok]
            vals[good] = tvals[ok]
            cub[good] = tcub[ok]
            moved[good] = True
            alpha[good] = np.minimum(alpha[good] * 2.0, 1.0)
            bad = sel[~ok]
            alpha[bad] *= 0.5
            stuck = bad[alpha[bad] < 1e-18]
            active[stuck] = False
            moved[stuck] = True
    return X, vals, iters


def sphere_minimize(T: SymmetricTensor4, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    if T.dim not in (2, 3):
        raise ValueError(f"oracle supports dim 2 or 3, got {T.dim}")
    Td = T.dense()
    X = _grid(T.dim, cfg.effective_grid(T.dim), cfg.seed)
    vals, _ = _forms_and_cubics(Td, X)
    k = min(cfg.refine_top_k, len(X))
    order = np.argsort(vals, kind="stable")[:k]
    refined, rvals, iters = _refine_batch(Td, X[order], cfg)
    best = int(np.lexsort((*(refined.T[::-1]), rvals))[0])
    min_value = float(rvals[best])
    minimizer = _canonical_sign(refined[best] / np.linalg.norm(refined[best]))
    if min_value > cfg.classify_margin:
        classification = "pd"
    elif min_value < -cfg.classify_margin:
        classification = "indefinite"
    else:
        classification = "boundary"
    return OracleResult(min_value, tuple(float(v) for v in minimizer), classification, iters)


def _exact_negative(T: SymmetricTensor4, point) -> Optional[tuple]:
    """Rational rounding of a float witness, verified in exact arithmetic."""
    for den in (10**3, 10**6):
        w = tuple(Fraction(float(v)).limit_denominator(den) for v in point)
        if any(w) and T.evaluate_form(w) < 0:
            return w
    return None


def classify_numeric(T: SymmetricTensor4, cfg: OracleConfig = OracleConfig()) -> Verdict:
    """Margin-guarded classification from the sphere minimum.

    Indefinite witnesses are re-verified in exact rational arithmetic; if
    the exact check fails the verdict degrades to boundary.  A positivity
    witness (some direction with a clearly positive value) is recorded for
    non-indefinite outcomes when one exists.
    """
    res = sphere_minimize(T, cfg)
    pos = _positivity_witness(T, cfg)
    if res.classification == "pd":
        return Verdict(
            Kind.POSITIVE_DEFINITE,
            "oracle-sphere-minimum",
            margin=res.min_value,
            positivity_witness=pos,
        )
    if res.classification == "indefinite":
        w = _exact_negative(T, res.minimizer)
        if w is not None:
            return Verdict(
                Kind.INDEFINITE,
                "oracle-sphere-minimum",
                witness=w,
                margin=res.min_value,
                positivity_witness=pos,
            )
    return Verdict(
        Kind.UNDETERMINED, "oracle-boundary", margin=res.min_value, positivity_witness=pos
    )


def _positivity_witness(T: SymmetricTensor4, cfg: OracleConfig) -> Optional[tuple]:
    """Some grid direction with a clearly positive form value, if any."""
    Td = T.dense()
    X = _grid(T.dim, min(cfg.effective_grid(T.dim), 512), cfg.seed)
    vals, _ = _forms_and_cubics(Td, X)
    i = int(np.argmax(vals))
    if vals[i] > cfg.classify_margin:
        return tuple(float(v) for v in _canonical_sign(X[i]))
    return None


def zero_set_probe(
    T: SymmetricTensor4, cfg: OracleConfig = OracleConfig(), cluster_tol: float = 1e-4
) -> List[Tuple[float, ...]]:
    """Refined sphere points where |Tx^4| falls inside the margin.

    Points are clustered with the given tolerance; one representative per
    cluster is returned, sorted lexicographically.  Antipodal zeros appear
    as separate clusters (the form is even, so they come in pairs).
    """
    if T.dim not in (2, 3):
        raise ValueError(f"oracle supports dim 2 or 3, got {T.dim}")
    Td = T.dense()
    X = _grid(T.dim, cfg.effective_grid(T.dim), cfg.seed)
    vals, _ = _forms_and_cubics(Td, X)
    k = min(max(cfg.refine_top_k, 200), len(X))
    order = np.argsort(np.abs(vals), kind="stable")[:k]
    refined, rvals, _ = _refine_batch(Td, X[order], cfg)
    zeros = refined[np.abs(rvals) <= cfg.classify_margin]
    reps: List[np.ndarray] = []
    for z in zeros:
        z = z / np.linalg.norm(z)
        if not any(np.linalg.norm(z - r) <= cluster_tol for r in reps):
            reps.append(z)
    reps.sort(key=lambda r: tuple(r))
    return [tuple(float(v) for v in r) for r in reps]
