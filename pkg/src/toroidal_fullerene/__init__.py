"""Toroidal fullerene Cayley graphs X_N = Cay(Z^2/N x| Z/2, {a, b, c})."""
from .cayley import build_graph, enumerate_faces, is_simple_fullerene
from .families import gap_pq, scan
from .lattice import Character, Lattice, pq_lattice
from .spectra import closed_form_spectrum, homo_lumo_gap, oracle_spectrum

__version__ = "0.1.0"

__all__ = [
    "Character",
    "Lattice",
    "build_graph",
    "closed_form_spectrum",
    "enumerate_faces",
    "gap_pq",
    "homo_lumo_gap",
    "is_simple_fullerene",
    "oracle_spectrum",
    "pq_lattice",
    "scan",
]
