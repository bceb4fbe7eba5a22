"""Adjacency spectrum of X_N from characters, plus a Jacobi eigensolver oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley import FullereneGraph
from .lattice import Character, Lattice, turns_to_unit

CLOSED_FORM = "closed_form"
ORACLE = "oracle"

ORACLE_MAX_SIZE = 4000
JACOBI_MAX_SWEEPS = 50
JACOBI_REL_TOL = 1e-12

# (r1, r2) mod 1 at which chi(v1), chi(v2), chi(v1 + v2) are the three cube roots of unity
_ZERO_CHARACTERS = {
    (Fraction(1, 3), Fraction(2, 3)),
    (Fraction(2, 3), Fraction(1, 3)),
}


def f(theta1, theta2):
    """``|e^{i t1} + e^{i t2} + e^{i (t1 + t2)}|^2``; accepts scalars or arrays.

    Equal to ``3 + 2 cos t1 + 2 cos t2 + 2 cos t1 cos t2 + 2 sin t1 sin t2``.
    """
    z = np.exp(1j * np.asarray(theta1, dtype=float))
    w = np.exp(1j * np.asarray(theta2, dtype=float))
    return np.abs(z + w + z * w) ** 2


def g(theta):
    """``f(theta, theta/2 + pi) = 3 + 2 cos(theta) - 4 cos(theta/2)`` on [-pi, pi].

    Evaluated as ``(2 cos(theta/2) - 1)^2``, the same polynomial in
    ``cos(theta/2)`` without the cancellation near the zero at 2 pi / 3.
    """
    theta = np.asarray(theta, dtype=float)
    if np.any(np.abs(theta) > math.pi):
        raise ValueError("g is defined on [-pi, pi]; reduce the argument first")
    return (2.0 * np.cos(theta / 2.0) - 1.0) ** 2


def sqrt_g(theta) -> float:
    """``sqrt(g(theta))`` without squaring and re-rooting."""
    theta = np.asarray(theta, dtype=float)
    if np.any(np.abs(theta) > math.pi):
        raise ValueError("g is defined on [-pi, pi]; reduce the argument first")
    return np.abs(2.0 * np.cos(theta / 2.0) - 1.0)


def character_modulus(chi: Character) -> float:
    """``|chi(v1) + chi(v2) + chi(v1) chi(v2)| = sqrt(f(theta1, theta2))``.

    The modulus of the complex sum is taken directly so that the value near a
    zero of f is accurate to rounding, not to its square root.
    """
    if (chi.r1, chi.r2) in _ZERO_CHARACTERS:
        return 0.0
    z = turns_to_unit(chi.r1)
    w = turns_to_unit(chi.r2)
    return abs(z + w + turns_to_unit(chi.r1 + chi.r2))


@dataclass
class SpectrumReport:
    eigenvalues: np.ndarray  # sorted descending
    source: str
    gap: float
    index: int

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "index": self.index,
            "gap": self.gap,
            "eigenvalues": [float(x) for x in self.eigenvalues],
        }


def gap_from_sorted_spectrum(eigs) -> float:
    """``lambda_(M/2) - lambda_(M/2+1)`` counting from the largest (1-based)."""
    eigs = list(eigs)
    M = len(eigs)
    if M == 0 or M % 2:
        raise ValueError(f"spectrum length must be even and positive, got {M}")
    return float(eigs[M // 2 - 1] - eigs[M // 2])


def closed_form_moduli(N: Lattice) -> list[float]:
    return [character_modulus(chi) for chi in N.characters]


def closed_form_spectrum(N: Lattice) -> SpectrumReport:
    moduli = closed_form_moduli(N)
    values = np.array(moduli + [-m for m in moduli])
    values = np.sort(values)[::-1]
    return SpectrumReport(values, CLOSED_FORM, gap_from_sorted_spectrum(values), N.index)


def minimizing_characters(N: Lattice) -> list[Character]:
    """Characters attaining the smallest modulus.

    Exact zeros are recognised from the rational angles, so ties at zero are
    never decided by rounding.
    """
    chars = N.characters
    exact = [chi for chi in chars if (chi.r1, chi.r2) in _ZERO_CHARACTERS]
    if exact:
        return exact
    moduli = [character_modulus(chi) for chi in chars]
    m = min(moduli)
    return [chi for chi, v in zip(chars, moduli) if v <= m + 1e-14]


def homo_lumo_gap(N: Lattice) -> float:
    return 2.0 * min(closed_form_moduli(N))


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings for a cyclic sweep: m - 1 rounds of m/2 disjoint pairs."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps = np.array(players[: m // 2])
        qs = np.array(players[m // 2 :][::-1])
        rounds.append((np.minimum(ps, qs), np.maximum(ps, qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(
    A, rel_tol: float = JACOBI_REL_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once, in round-robin order, so
    the rotations of one round act on disjoint index pairs and are applied
    together. Returns the eigenvalues in descending order.
    """
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    n = A.shape[0]
    if n > ORACLE_MAX_SIZE:
        raise ValueError(f"matrix size {n} exceeds oracle cap {ORACLE_MAX_SIZE}")
    if n == 0:
        return np.zeros(0)
    padded = n % 2 == 1
    if padded:
        # decoupled zero row: never rotated, dropped afterwards
        A = np.pad(A, ((0, 1), (0, 1)))
    m = A.shape[0]
    norm = np.linalg.norm(A)
    threshold = rel_tol * norm
    rounds = _round_robin(m)

    def off_norm(A):
        off = A.copy()
        np.fill_diagonal(off, 0.0)
        return np.linalg.norm(off)

    for _ in range(max_sweeps):
        if off_norm(A) < threshold or norm == 0:
            break
        for P, Q in rounds:
            apq = A[P, Q]
            active = apq != 0.0
            if not np.any(active):
                continue
            P, Q, apq = P[active], Q[active], apq[active]
            theta = (A[Q, Q] - A[P, P]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            safe = np.where(big, 1.0, theta)
            t = np.sign(safe) / (np.abs(safe) + np.sqrt(safe * safe + 1.0))
            t[theta == 0.0] = 1.0
            t[big] = 0.5 / theta[big]
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rows_p, rows_q = A[P, :].copy(), A[Q, :].copy()
            A[P, :] = c[:, None] * rows_p - s[:, None] * rows_q
            A[Q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            cols_p, cols_q = A[:, P].copy(), A[:, Q].copy()
            A[:, P] = c[None, :] * cols_p - s[None, :] * cols_q
            A[:, Q] = s[None, :] * cols_p + c[None, :] * cols_q
            A[P, Q] = 0.0
            A[Q, P] = 0.0
    else:
        if off_norm(A) >= threshold:
            raise RuntimeError(f"Jacobi did not converge in {max_sweeps} sweeps")
    eigs = np.diag(A)[:n] if padded else np.diag(A)
    return np.sort(eigs)[::-1]


def oracle_spectrum(graph: FullereneGraph) -> SpectrumReport:
    eigs = jacobi_eigenvalues(graph.adjacency)
    return SpectrumReport(eigs, ORACLE, gap_from_sorted_spectrum(eigs), graph.n)


def prop_f_lower_bound_check(theta_samples, x_samples, tol: float = 1e-12) -> bool:
    """Check ``f(theta, x) >= g(theta)`` on the grid, with equality at
    ``x = theta/2 + pi``."""
    theta = np.asarray(theta_samples, dtype=float)
    x = np.asarray(x_samples, dtype=float)
    gt = g(theta)
    grid = f(theta[:, None], x[None, :])
    lower_ok = bool(np.all(grid >= gt[:, None] - tol))
    equality_ok = bool(np.all(np.abs(f(theta, theta / 2 + math.pi) - gt) <= tol))
    return lower_ok and equality_ok
