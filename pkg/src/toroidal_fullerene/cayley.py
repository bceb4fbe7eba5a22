"""The toroidal fullerene X_N as a Cayley graph of ``Z^2/N x| Z/2``.

Group elements are pairs ``(t, spin)`` with ``t`` a canonical coset vector in
``{v1, v2}`` coordinates and ``spin`` = +1 or -1; the flip acts on ``t`` by
negation. The generators are ``a = (v1, -)``, ``b = (v1 + v2, -)`` and
``c = (v2, -)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .lattice import Lattice, Vec

PLUS = 1
MINUS = -1

GENERATOR_TRANSLATIONS: dict[str, Vec] = {"a": (1, 0), "b": (1, 1), "c": (0, 1)}
FACE_WORDS = ("abcabc", "bcabca", "cabcab")


@dataclass(frozen=True, order=True)
class GroupElement:
    t: Vec
    spin: int = PLUS

    def __post_init__(self):
        if self.spin not in (PLUS, MINUS):
            raise ValueError(f"spin must be +1 or -1, got {self.spin!r}")


def identity() -> GroupElement:
    return GroupElement((0, 0), PLUS)


def generator(name: str, N: Lattice | None = None) -> GroupElement:
    t = GENERATOR_TRANSLATIONS[name]
    if N is not None:
        t = N.reduce(t)
    return GroupElement(t, MINUS)


def multiply(g: GroupElement, h: GroupElement, N: Lattice) -> GroupElement:
    """``(t_g, e_g)(t_h, e_h) = (t_g + e_g t_h, e_g e_h)`` reduced mod N."""
    e = g.spin
    t = (g.t[0] + e * h.t[0], g.t[1] + e * h.t[1])
    return GroupElement(N.reduce(t), g.spin * h.spin)


def walk(g: GroupElement, word: str, N: Lattice) -> list[GroupElement]:
    """Vertices visited from ``g`` along ``word``, including ``g`` and the endpoint."""
    out = [g]
    for letter in word:
        g = multiply(g, generator(letter), N)
        out.append(g)
    return out


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: str


@dataclass
class FullereneGraph:
    lattice: Lattice
    vertices: list[GroupElement]
    adjacency: np.ndarray
    edges: list[Edge]
    index_of: dict[GroupElement, int] = field(repr=False)
    faces: list[tuple[int, ...]] | None = None
    degenerate_faces: list[tuple[int, ...]] | None = None

    @property
    def n(self) -> int:
        return self.lattice.index

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def build_graph(N: Lattice) -> FullereneGraph:
    """Build X_N. Plus-spin vertices come first, each block in coset order.

    Every edge has exactly one plus-spin endpoint, so edges are generated
    from the plus block only and each appears once.
    """
    reps = N.coset_reps
    vertices = [GroupElement(t, PLUS) for t in reps] + [
        GroupElement(t, MINUS) for t in reps
    ]
    index_of = {g: i for i, g in enumerate(vertices)}
    M = len(vertices)
    adjacency = np.zeros((M, M), dtype=np.int64)
    edges = []
    for i, g in enumerate(vertices[: len(reps)]):
        for name in "abc":
            j = index_of[multiply(g, generator(name), N)]
            adjacency[i, j] += 1
            adjacency[j, i] += 1
            edges.append(Edge(i, j, name))
    return FullereneGraph(N, vertices, adjacency, edges, index_of)


def is_connected(graph: FullereneGraph) -> bool:
    A = graph.adjacency
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in np.flatnonzero(A[i]):
            j = int(j)
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == graph.num_vertices


def bipartition(graph: FullereneGraph) -> tuple[list[int], list[int]]:
    plus = [i for i, g in enumerate(graph.vertices) if g.spin == PLUS]
    minus = [i for i, g in enumerate(graph.vertices) if g.spin == MINUS]
    return plus, minus


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = len(cycle)
    candidates = []
    for seq in (cycle, tuple(reversed(cycle))):
        for s in range(k):
            candidates.append(seq[s:] + seq[:s])
    return min(candidates)


def enumerate_faces(graph: FullereneGraph) -> list[tuple[int, ...]]:
    """Hexagonal faces traced by the three rotations of ``(abc)^2``.

    Each face is stored in walk order starting from the vertex that first
    produced it. Walks that revisit a vertex before closing are kept in
    ``graph.degenerate_faces`` and left out of the returned list.
    """
    N = graph.lattice
    seen: set[tuple[int, ...]] = set()
    faces: list[tuple[int, ...]] = []
    degenerate: list[tuple[int, ...]] = []
    seen_degenerate: set[tuple[int, ...]] = set()
    for g in graph.vertices:
        for word in FACE_WORDS:
            path = walk(g, word, N)
            if path[-1] != g:
                raise AssertionError(f"face word {word} does not close at {g}")
            cycle = tuple(graph.index_of[h] for h in path[:-1])
            key = _canonical_cycle(cycle)
            if len(set(cycle)) < len(cycle):
                if key not in seen_degenerate:
                    seen_degenerate.add(key)
                    degenerate.append(cycle)
                continue
            if key not in seen:
                seen.add(key)
                faces.append(cycle)
    graph.faces = faces
    graph.degenerate_faces = degenerate
    return faces


def simple_by_algebra(N: Lattice) -> bool:
    """No multi-edges iff none of v1, v2, v1 - v2 lies in N."""
    return not any(N.contains(w) for w in ((1, 0), (0, 1), (1, -1)))


@dataclass
class ValidityReport:
    simple: bool
    simple_by_adjacency: bool
    faces_ok: bool
    euler_ok: bool
    V: int
    E: int
    F: int
    degenerate_faces: int
    connected: bool

    @property
    def valid(self) -> bool:
        return self.simple and self.faces_ok and self.euler_ok

    def as_dict(self) -> dict:
        return {
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "simple": self.simple,
            "faces_ok": self.faces_ok,
            "euler_ok": self.euler_ok,
            "connected": self.connected,
            "degenerate_faces": self.degenerate_faces,
            "valid": self.valid,
        }


def is_simple_fullerene(graph: FullereneGraph) -> ValidityReport:
    simple = simple_by_algebra(graph.lattice)
    simple_adj = int(graph.adjacency.max()) <= 1
    if simple != simple_adj:
        raise AssertionError(
            f"simplicity mismatch for {graph.lattice.hnf}: "
            f"algebraic={simple}, adjacency={simple_adj}"
        )
    faces = graph.faces if graph.faces is not None else enumerate_faces(graph)
    degenerate = graph.degenerate_faces or []
    counts = np.zeros(graph.num_vertices, dtype=int)
    for face in faces:
        for i in face:
            counts[i] += 1
    faces_ok = (
        not degenerate
        and all(len(set(face)) == 6 for face in faces)
        and bool(np.all(counts == 3))
    )
    V, E = graph.num_vertices, graph.num_edges
    F = len(faces) + len(degenerate)
    return ValidityReport(
        simple=simple,
        simple_by_adjacency=simple_adj,
        faces_ok=faces_ok,
        euler_ok=V - E + F == 0,
        V=V,
        E=E,
        F=F,
        degenerate_faces=len(degenerate),
        connected=is_connected(graph),
    )
