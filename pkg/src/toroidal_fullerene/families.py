"""The X_{p,q} family: lattices spanned by (p, 0) and (-q, 2q)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import spectra
from .lattice import Lattice, pq_lattice

DISAGREEMENT_TOL = 1e-12


def asymptote(p: int) -> float:
    """Leading-order gap ``2 pi / (sqrt(3) p)``."""
    return 2 * math.pi / (math.sqrt(3) * p)


def _check_pq(p: int, q: int) -> None:
    if p <= 0 or q <= 0:
        raise ValueError(f"p and q must be positive, got p={p}, q={q}")


def _reduce_angle(theta: float) -> float:
    # arguments are 2 pi u / p with u <= ceil(p/3), so one shift suffices
    if theta > math.pi:
        theta -= 2 * math.pi
    return theta


def gap_pq(p: int, q: int = 1) -> float:
    """HOMO-LUMO gap of X_{p,q} from the two candidate characters.

    The minimum of ``2 sqrt(g(2 pi u / p))`` sits at ``u = floor(p/3)`` or
    ``ceil(p/3)``. When 3 divides p the character ``u = p/3`` is an exact zero
    of f and 0.0 is returned. The value does not depend on ``q``.
    """
    _check_pq(p, q)
    if p % 3 == 0:
        return 0.0
    candidates = (p // 3, -(-p // 3))
    return 2.0 * min(
        float(spectra.sqrt_g(_reduce_angle(2 * math.pi * u / p))) for u in candidates
    )


def asymptotic_deviation(p: int) -> float:
    """``p^2 |gap - 2 pi / (sqrt(3) p)|``, the witness for the O(p^-2) term."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    if p % 3 == 0:
        raise ValueError(f"p={p} is divisible by 3; the gap is zero there")
    return p * p * abs(gap_pq(p, 1) - asymptote(p))


@dataclass
class FamilyPoint:
    p: int
    q: int
    lattice: Lattice
    gap: float
    character_gap: float
    asymptote: float
    deviation: float
    three_divides_p: bool

    @property
    def vertices(self) -> int:
        return 2 * self.lattice.index

    @property
    def disagreement(self) -> float:
        return abs(self.gap - self.character_gap)

    @property
    def flagged(self) -> bool:
        return self.disagreement > DISAGREEMENT_TOL

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "vertices": self.vertices,
            "gap": self.gap,
            "character_gap": self.character_gap,
            "asymptote": self.asymptote,
            "deviation": self.deviation,
            "three_divides_p": self.three_divides_p,
            "flagged": self.flagged,
        }


def family_point(p: int, q: int) -> FamilyPoint:
    _check_pq(p, q)
    N = pq_lattice(p, q)
    gap = gap_pq(p, q)
    asym = asymptote(p)
    return FamilyPoint(
        p=p,
        q=q,
        lattice=N,
        gap=gap,
        character_gap=spectra.homo_lumo_gap(N),
        asymptote=asym,
        deviation=abs(gap - asym),
        three_divides_p=p % 3 == 0,
    )


def scan(p_max: int, q_list) -> list[FamilyPoint]:
    """One row per ``(p, q)`` with ``p <= p_max``, ordered by p then by q_list."""
    if p_max < 1:
        raise ValueError(f"p_max must be at least 1, got {p_max}")
    return [family_point(p, q) for p in range(1, p_max + 1) for q in q_list]


CSV_FIELDS = ("p", "q", "vertices", "gap", "asymptote", "deviation")


def scan_csv_rows(points: list[FamilyPoint]) -> list[list[str]]:
    rows = [list(CSV_FIELDS)]
    for pt in points:
        rows.append(
            [
                str(pt.p),
                str(pt.q),
                str(pt.vertices),
                f"{pt.gap:.6f}",
                f"{pt.asymptote:.6f}",
                f"{pt.deviation:.6f}",
            ]
        )
    return rows
