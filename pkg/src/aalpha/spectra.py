"""A_alpha matrices, a cyclic Jacobi eigensolver, and spectral identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from aalpha.graph import Graph

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 30
# Matrices rotated together; larger stacks fall out of cache and run slower.
JACOBI_CHUNK = 1024
SIMPLEX_TOL = 1e-9


class ConvergenceError(RuntimeError):
    """The Jacobi iteration did not reach its threshold within the sweep cap."""


@dataclass(frozen=True)
class AlphaMatrix:
    alpha: float
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Spectrum:
    alpha: float
    eigenvalues: np.ndarray  # non-increasing
    residual: float
    eigenvectors: np.ndarray | None = None  # column k belongs to eigenvalues[k]

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def smallest(self) -> float:
        return float(self.eigenvalues[-1])


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def build_a_alpha(g: Graph, alpha: float) -> AlphaMatrix:
    """``alpha * D + (1 - alpha) * A``."""
    alpha = check_alpha(alpha)
    a = g.adjacency_matrix() * (1.0 - alpha)
    a[np.diag_indices(g.n)] = alpha * np.asarray(g.degrees, dtype=float)
    return AlphaMatrix(alpha, a)


def _off_norm(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    off = a * (1.0 - np.eye(n))
    return np.sqrt((off * off).sum(axis=(1, 2)))


def jacobi_eigh(
    mats: np.ndarray,
    vectors: bool = False,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray | None, np.ndarray]:
    """Cyclic-by-row Jacobi on a stack of symmetric matrices of shape ``(B, n, n)``.

    Every matrix receives the same (p, q) rotation schedule with its own
    angle, so the batch vectorises; sweeps stop once each matrix has
    off-diagonal Frobenius norm <= ``tol * ||M||_F``.

    Returns ``(eigenvalues, eigenvectors, residuals)`` with eigenvalues sorted
    non-increasing per matrix and eigenvector columns matching them.
    """
    a = np.array(mats, dtype=float, copy=True)
    if a.ndim == 2:
        a = a[None]
    if a.shape[0] > JACOBI_CHUNK:
        parts = [
            jacobi_eigh(a[i : i + JACOBI_CHUNK], vectors, tol, max_sweeps)
            for i in range(0, a.shape[0], JACOBI_CHUNK)
        ]
        w = np.concatenate([p[0] for p in parts])
        v = np.concatenate([p[1] for p in parts]) if vectors else None
        return w, v, np.concatenate([p[2] for p in parts])
    n = a.shape[1]
    v = np.broadcast_to(np.eye(n), a.shape).copy() if vectors else None
    limit = tol * np.sqrt((a * a).sum(axis=(1, 2)))

    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if np.all(off <= limit):
            break
        if sweep == max_sweeps:
            worst = int(np.argmax(off - limit))
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off[worst]:.3e} > {limit[worst]:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                nz = apq != 0.0
                if not nz.any():
                    continue
                safe = np.where(nz, apq, 1.0)
                with np.errstate(over="ignore"):
                    tau = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
                    t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
                t = np.where(nz, t, 0.0)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                cc, ss = c[:, None], s[:, None]

                colp = a[:, :, p].copy()
                colq = a[:, :, q]
                a[:, :, p] = cc * colp - ss * colq
                a[:, :, q] = ss * colp + cc * colq
                rowp = a[:, p, :].copy()
                rowq = a[:, q, :]
                a[:, p, :] = cc * rowp - ss * rowq
                a[:, q, :] = ss * rowp + cc * rowq
                a[:, p, q] = 0.0
                a[:, q, p] = 0.0

                if v is not None:
                    vp = v[:, :, p].copy()
                    vq = v[:, :, q]
                    v[:, :, p] = cc * vp - ss * vq
                    v[:, :, q] = ss * vp + cc * vq

    residual = _off_norm(a)
    w = np.diagonal(a, axis1=1, axis2=2).copy()
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if v is not None:
        v = np.take_along_axis(v, order[:, None, :], axis=2)
        idx = np.argmax(np.abs(v), axis=1)  # first largest-magnitude entry per column
        signs = np.sign(np.take_along_axis(v, idx[:, None, :], axis=1))
        v = v * np.where(signs == 0, 1.0, signs)
    return w, v, residual


def sym_eigenvalues(m: AlphaMatrix, vectors: bool = False) -> Spectrum:
    w, v, res = jacobi_eigh(m.entries, vectors=vectors)
    return Spectrum(m.alpha, w[0], float(res[0]), None if v is None else v[0])


def spectrum(g: Graph, alpha: float, vectors: bool = False) -> Spectrum:
    return sym_eigenvalues(build_a_alpha(g, alpha), vectors=vectors)


def batch_spectra(
    graphs: Sequence[Graph], alphas: Sequence[float]
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and Jacobi residuals for every (graph, alpha) pair.

    Graphs must share one order. Eigenvalues have shape
    ``(len(graphs), len(alphas), n)`` with rows non-increasing; residuals
    have shape ``(len(graphs), len(alphas))``.
    """
    if not graphs:
        return np.zeros((0, len(alphas), 0)), np.zeros((0, len(alphas)))
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("batch_spectra needs graphs of a single order")
    alphas = [check_alpha(a) for a in alphas]
    adj = np.stack([g.adjacency_matrix() for g in graphs])
    deg = adj.sum(axis=2)
    al = np.asarray(alphas)[None, :, None, None]
    mats = (1.0 - al) * adj[:, None]
    diag = np.arange(n)
    mats[:, :, diag, diag] = np.asarray(alphas)[None, :, None] * deg[:, None, :]
    w, _, res = jacobi_eigh(mats.reshape(-1, n, n))
    return w.reshape(len(graphs), len(alphas), n), res.reshape(len(graphs), len(alphas))


def rayleigh_quotient(m: AlphaMatrix, x) -> float:
    x = np.asarray(x, dtype=float)
    xx = float(x @ x)
    if xx == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector is undefined")
    return float(x @ m.entries @ x) / xx


def check_trace_identities(g: Graph, s: Spectrum) -> tuple[float, float]:
    """Residuals of ``sum(l) = 2m*alpha`` and ``sum(l^2) = alpha^2 Z1 + (1-alpha)^2 2m``."""
    a, m = s.alpha, g.m
    z1 = sum(d * d for d in g.degrees)
    lam = s.eigenvalues
    r1 = abs(float(lam.sum()) - 2 * m * a)
    r2 = abs(float((lam * lam).sum()) - (a * a * z1 + (1 - a) ** 2 * 2 * m))
    return r1, r2


def regular_shift_check(g: Graph, alpha: float) -> float:
    """Max over k of ``|l_k(A_alpha) - alpha r - (1 - alpha) l_k(A)|`` for an r-regular graph."""
    degs = set(g.degrees)
    if len(degs) != 1:
        raise ValueError("regular_shift_check needs a regular graph")
    r = degs.pop()
    lam_alpha = spectrum(g, alpha).eigenvalues
    lam_adj = spectrum(g, 0.0).eigenvalues
    return float(np.max(np.abs(lam_alpha - alpha * r - (1 - alpha) * lam_adj)))


@dataclass(frozen=True)
class QuotientResult:
    partition: tuple[tuple[int, ...], ...]
    equitable: bool
    quotient: np.ndarray
    quotient_eigenvalues: np.ndarray  # non-increasing


def _validate_partition(n: int, blocks) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    seen: list[int] = [v for b in blocks for v in b]
    if any(not b for b in blocks):
        raise ValueError("partition blocks must be non-empty")
    if sorted(seen) != list(range(n)):
        raise ValueError("partition blocks must be disjoint and cover every vertex")
    return blocks


def is_equitable(g: Graph, blocks) -> bool:
    """Every vertex of block i has the same number of neighbours in block j, for all i, j."""
    blocks = _validate_partition(g.n, blocks)
    where = {v: k for k, b in enumerate(blocks) for v in b}
    for b in blocks:
        counts = None
        for v in b:
            c = [0] * len(blocks)
            for u in g.adjacency[v]:
                c[where[u]] += 1
            if counts is None:
                counts = c
            elif c != counts:
                return False
    return True


def quotient_matrix(g: Graph, alpha: float, blocks) -> QuotientResult:
    """Quotient of A_alpha by a vertex partition, with its eigenvalues.

    ``q_ij`` is the (average) row sum of block (i, j). Eigenvalues come from the
    Jacobi solver applied to the symmetric similar matrix
    ``S^(1/2) N S^(-1/2)``, ``S`` holding the block sizes.
    """
    blocks = _validate_partition(g.n, blocks)
    mat = build_a_alpha(g, alpha).entries
    k = len(blocks)
    sizes = np.array([len(b) for b in blocks], dtype=float)
    totals = np.empty((k, k))
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            totals[i, j] = mat[np.ix_(bi, bj)].sum()
    quotient = totals / sizes[:, None]
    sym = totals / np.sqrt(np.outer(sizes, sizes))
    w, _, _ = jacobi_eigh(sym)
    return QuotientResult(blocks, is_equitable(g, blocks), quotient, w[0])


def simplex_quadratic_form(g: Graph, x) -> float:
    """``x^T A x`` for the adjacency matrix; the Motzkin-Straus objective on the simplex."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"expected a vector of length {g.n}, got shape {x.shape}")
    if np.any(x < -SIMPLEX_TOL) or abs(float(x.sum()) - 1.0) > SIMPLEX_TOL:
        raise ValueError("x must lie on the standard simplex (x >= 0, sum x = 1)")
    return float(2.0 * sum(x[i] * x[j] for i, j in g.edges()))


def clique_witness(g: Graph, clique: Sequence[int]) -> np.ndarray:
    """Uniform weights on ``clique``; attains ``1 - 1/|clique|`` in the Motzkin-Straus form."""
    x = np.zeros(g.n)
    x[list(clique)] = 1.0 / len(clique)
    return x
