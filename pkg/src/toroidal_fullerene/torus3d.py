"""Planar and 3D coordinates for X_{p,q}, with XYZ and OBJ writers.

Lengths are in bond units: the hexagonal basis is fixed at ``e1 = (1, 0)``,
``e2 = (-1/2, sqrt(3)/2)``, so every bond of the flat tiling has length 1.
A vertex ``(t, +-)`` sits at ``t +- e0`` in the tiling, ``e0 = e1 + e2``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import families
from .affine import E0, V1, V2
from .cayley import (
    FullereneGraph,
    GENERATOR_TRANSLATIONS,
    build_graph,
    enumerate_faces,
    simple_by_algebra,
)
from .lattice import pq_lattice

SQRT3 = math.sqrt(3.0)
E_TO_CART = np.array([[1.0, -0.5], [0.0, SQRT3 / 2.0]])  # columns e1, e2
DEFAULT_BOND_SCALE = 1.42  # graphene C-C distance in angstrom


class EmbeddingError(ValueError):
    pass


def v_to_e(t) -> np.ndarray:
    """Translation ``x v1 + y v2`` in e-coordinates."""
    x, y = t
    return np.array([x * V1[0] + y * V2[0], x * V1[1] + y * V2[1]], dtype=float)


def e_to_cartesian(u) -> np.ndarray:
    return E_TO_CART @ np.asarray(u, dtype=float)


def vertex_position(t, spin: int) -> np.ndarray:
    """Cartesian position of the vertex ``(t, spin)``, i.e. its image of e0."""
    return e_to_cartesian(v_to_e(t) + spin * np.array(E0, dtype=float))


@dataclass
class PlanarLayout:
    p: int
    q: int
    graph: FullereneGraph
    positions: np.ndarray  # (V, 2) Cartesian
    P: np.ndarray
    Q: np.ndarray
    frame: np.ndarray  # (V, 2) normalized coordinates in [0, 1)^2
    edge_vectors: np.ndarray  # (E, 2) unwrapped planar edge displacements

    def to_frame(self, xy) -> np.ndarray:
        """Coordinates of a Cartesian point in the ``{P, Q}`` frame (not wrapped)."""
        B = np.column_stack([self.P, self.Q])
        return np.linalg.solve(B, np.asarray(xy, dtype=float).T).T


def planar_layout(p: int, q: int) -> PlanarLayout:
    N = pq_lattice(p, q)
    if not simple_by_algebra(N):
        raise EmbeddingError(f"X_{{{p},{q}}} has multiple edges; no planar layout")
    graph = build_graph(N)
    enumerate_faces(graph)
    positions = np.array([vertex_position(g.t, g.spin) for g in graph.vertices])
    P = e_to_cartesian(v_to_e((p, 0)))
    Q = e_to_cartesian(v_to_e((-q, 2 * q)))
    B = np.column_stack([P, Q])
    frame = np.linalg.solve(B, positions.T).T % 1.0
    # edges leave from plus vertices: (t, +) -> (t + s, -) before reduction
    edge_vectors = []
    for edge in graph.edges:
        g = graph.vertices[edge.u]
        s = GENERATOR_TRANSLATIONS[edge.label]
        end = vertex_position((g.t[0] + s[0], g.t[1] + s[1]), -1)
        edge_vectors.append(end - positions[edge.u])
    return PlanarLayout(p, q, graph, positions, P, Q, frame, np.array(edge_vectors))


def torus_radii(p: int, q: int) -> tuple[float, float]:
    """Tube radius r and ring radius R, with ``2 pi r = |P|`` and ``2 pi R = |Q|``."""
    return SQRT3 * p / (2 * math.pi), 3.0 * q / (2 * math.pi)


def torus_point(alpha, beta, r: float, R: float) -> np.ndarray:
    phi = 2 * np.pi * np.asarray(alpha, dtype=float)
    psi = 2 * np.pi * np.asarray(beta, dtype=float)
    rho = R + r * np.cos(phi)
    return np.stack([rho * np.cos(psi), rho * np.sin(psi), r * np.sin(phi)], axis=-1)


@dataclass
class Embedding3D:
    p: int
    q: int
    coords: np.ndarray  # (V, 3)
    edges: list[tuple[int, int]]
    edge_lengths: np.ndarray
    faces: list[tuple[int, ...]]
    r: float
    R: float
    stats: dict = field(default_factory=dict)

    @property
    def num_vertices(self) -> int:
        return len(self.coords)


def edge_stats(lengths: np.ndarray) -> dict:
    lo, hi = float(lengths.min()), float(lengths.max())
    return {
        "min": lo,
        "max": hi,
        "mean": float(lengths.mean()),
        "ratio": hi / lo,
    }


def torus_map(layout: PlanarLayout) -> Embedding3D:
    r, R = torus_radii(layout.p, layout.q)
    if r >= R:
        raise EmbeddingError(
            f"tube radius {r:.6f} >= ring radius {R:.6f}: the torus self-intersects"
        )
    coords = torus_point(layout.frame[:, 0], layout.frame[:, 1], r, R)
    edges = [(e.u, e.v) for e in layout.graph.edges]
    idx = np.array(edges)
    lengths = np.linalg.norm(coords[idx[:, 0]] - coords[idx[:, 1]], axis=1)
    return Embedding3D(
        p=layout.p,
        q=layout.q,
        coords=coords,
        edges=edges,
        edge_lengths=lengths,
        faces=list(layout.graph.faces or []),
        r=r,
        R=R,
        stats=edge_stats(lengths),
    )


def embed_pq(p: int, q: int) -> Embedding3D:
    return torus_map(planar_layout(p, q))


def _check_path(path) -> str:
    if path is None or str(path) == "":
        raise ValueError("an output path is required")
    return os.fspath(path)


def export_xyz(emb: Embedding3D, path, bond_scale: float = DEFAULT_BOND_SCALE) -> None:
    path = _check_path(path)
    gap = families.gap_pq(emb.p, emb.q)
    lines = [str(emb.num_vertices), f"{emb.p} {emb.q} {gap:.6f}"]
    for x, y, z in emb.coords * bond_scale:
        lines.append(f"C {x:.6f} {y:.6f} {z:.6f}")
    try:
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"could not write XYZ file {path!r}: {exc}") from exc


def export_obj(emb: Embedding3D, path) -> None:
    path = _check_path(path)
    lines = [f"# toroidal fullerene X_{{{emb.p},{emb.q}}}"]
    for x, y, z in emb.coords:
        lines.append(f"v {x:.6f} {y:.6f} {z:.6f}")
    for u, v in emb.edges:
        lines.append(f"l {u + 1} {v + 1}")
    for face in emb.faces:
        lines.append("f " + " ".join(str(i + 1) for i in face))
    try:
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"could not write OBJ file {path!r}: {exc}") from exc


def read_obj_counts(path) -> dict[str, int]:
    counts = {"v": 0, "l": 0, "f": 0}
    with open(path) as fh:
        for line in fh:
            key = line.split(maxsplit=1)[0] if line.strip() else ""
            if key in counts:
                counts[key] += 1
    return counts
