"""Command-line interface.

Exit codes: 0 success, 1 embedding verification failed, 2 bad arguments,
3 graph/embedding validity failure, 4 oracle mismatch beyond ``--tol``.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import affine, families, spectra, torus3d
from .cayley import build_graph, enumerate_faces, is_simple_fullerene
from .lattice import Lattice, columns, pq_lattice

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_ORACLE_MISMATCH = 4


class UsageError(Exception):
    pass


def _int_list(text: str, count: int | None, flag: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}")
    if count is not None and len(values) != count:
        raise UsageError(f"{flag} expects {count} integers, got {text!r}")
    return values


def parse_lattice(args) -> tuple[Lattice, tuple[int, int] | None]:
    """Resolve ``--basis a,b,c,d`` (columns (a,b), (c,d)) or ``--pq P,Q``."""
    basis = getattr(args, "basis", None)
    pq = getattr(args, "pq", None)
    if (basis is None) == (pq is None):
        raise UsageError("give exactly one of --basis a,b,c,d or --pq P,Q")
    if pq is not None:
        p, q = _int_list(pq, 2, "--pq")
        if p <= 0 or q <= 0:
            raise UsageError("--pq needs positive integers")
        return pq_lattice(p, q), (p, q)
    a, b, c, d = _int_list(basis, 4, "--basis")
    try:
        return Lattice.from_columns((a, b), (c, d)), None
    except ValueError as exc:
        raise UsageError(str(exc))


def lattice_json(N: Lattice | None, pq=None):
    if N is None:
        return None
    out = {
        "basis": [list(col) for col in columns(N.basis)],
        "hnf": [list(col) for col in columns(N.hnf)],
        "index": N.index,
    }
    if pq is not None:
        out["p"], out["q"] = pq
    return out


def _emit_json(command: str, N, pq, result, out) -> None:
    doc = {"command": command, "lattice": lattice_json(N, pq), "result": result}
    out.write(json.dumps(doc, indent=2) + "\n")


def cmd_verify_embeddings(args, out) -> int:
    reports = [affine.verify_embedding(spec) for spec in affine.EMBEDDINGS]
    if args.json:
        result = []
        for rep in reports:
            result.append(
                {
                    "name": rep.name,
                    "passed": rep.passed,
                    "relations": {r.word: r.holds for r in rep.relations},
                    "witnesses": {
                        w.word: {
                            "translation": list(w.vector) if w.vector is not None else None,
                            "expected": list(w.expected) if w.expected is not None else None,
                            "matches": w.matches,
                        }
                        for w in rep.witnesses
                    },
                    "claimed_subgroup_matches": rep.claimed_subgroup_matches,
                }
            )
        _emit_json("verify-embeddings", None, None, result, out)
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            rels = " ".join(f"{r.word}={'id' if r.holds else 'X'}" for r in rep.relations)
            wits = " ".join(
                f"{w.word}->T{w.vector if w.vector is not None else '?'}" for w in rep.witnesses
            )
            out.write(f"{rep.name:<7} {status}  {rels}  {wits}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def cmd_graph(args, out) -> int:
    N, pq = parse_lattice(args)
    graph = build_graph(N)
    enumerate_faces(graph)
    report = is_simple_fullerene(graph)
    if args.json:
        _emit_json("graph", N, pq, report.as_dict(), out)
    else:
        for key, value in report.as_dict().items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    N, pq = parse_lattice(args)
    closed = spectra.closed_form_spectrum(N)
    result = closed.as_dict()
    status = EXIT_OK
    deviation = None
    if args.oracle:
        oracle = spectra.oracle_spectrum(build_graph(N))
        deviation = float(np.max(np.abs(closed.eigenvalues - oracle.eigenvalues)))
        result["oracle_max_deviation"] = deviation
        result["tol"] = args.tol
        if deviation > args.tol:
            status = EXIT_ORACLE_MISMATCH
    if args.json:
        _emit_json("spectrum", N, pq, result, out)
    else:
        for lam in closed.eigenvalues:
            out.write(f"{lam:.6f}\n")
        out.write(f"gap: {closed.gap:.6f}\n")
        if deviation is not None:
            out.write(f"oracle max deviation: {deviation:.3e}\n")
    return status


def cmd_gap(args, out) -> int:
    N, pq = parse_lattice(args)
    gap = spectra.homo_lumo_gap(N)
    result = {"gap": gap}
    if pq is not None:
        p, q = pq
        asym = families.asymptote(p)
        result.update(
            {"closed_form_gap": families.gap_pq(p, q), "asymptote": asym,
             "deviation": abs(gap - asym)}
        )
    if args.json:
        _emit_json("gap", N, pq, result, out)
    else:
        for key in ("gap", "asymptote", "deviation"):
            if key in result:
                out.write(f"{key}: {result[key]:.6f}\n")
    return EXIT_OK


def cmd_scan(args, out) -> int:
    q_list = []
    for chunk in args.q or ["1"]:
        q_list.extend(_int_list(chunk, None, "--q"))
    if any(q <= 0 for q in q_list):
        raise UsageError("--q values must be positive")
    if args.p_max < 1:
        raise UsageError("--p-max must be at least 1")
    points = families.scan(args.p_max, q_list)
    if args.json:
        _emit_json("scan", None, None, [pt.as_dict() for pt in points], out)
    elif args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(families.scan_csv_rows(points))
    else:
        out.write(f"{'p':>4} {'q':>4} {'V':>7} {'gap':>10} {'asymptote':>10} {'deviation':>10}\n")
        for pt in points:
            flag = "  MISMATCH" if pt.flagged else ""
            out.write(
                f"{pt.p:>4} {pt.q:>4} {pt.vertices:>7} {pt.gap:>10.6f} "
                f"{pt.asymptote:>10.6f} {pt.deviation:>10.6f}{flag}\n"
            )
    return EXIT_OK if not any(pt.flagged for pt in points) else EXIT_INVALID


def cmd_embed(args, out) -> int:
    if args.basis is not None:
        raise UsageError("embed works on the X_{p,q} family; use --pq P,Q")
    N, pq = parse_lattice(args)
    if not args.out:
        raise UsageError("embed needs --out PATH")
    p, q = pq
    try:
        emb = torus3d.embed_pq(p, q)
    except torus3d.EmbeddingError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    if args.format == "xyz":
        torus3d.export_xyz(emb, args.out, bond_scale=args.bond_scale)
    else:
        torus3d.export_obj(emb, args.out)
    result = {
        "path": args.out,
        "format": args.format,
        "r": emb.r,
        "R": emb.R,
        "edge_lengths": emb.stats,
    }
    if args.json:
        _emit_json("embed", N, pq, result, out)
    else:
        out.write(f"wrote {args.out} ({args.format}, {emb.num_vertices} vertices)\n")
        out.write(f"r: {emb.r:.6f}\nR: {emb.R:.6f}\n")
        for key, value in emb.stats.items():
            out.write(f"edge {key}: {value:.6f}\n")
    return EXIT_OK


COMMANDS = {
    "verify-embeddings": cmd_verify_embeddings,
    "graph": cmd_graph,
    "spectrum": cmd_spectrum,
    "gap": cmd_gap,
    "scan": cmd_scan,
    "embed": cmd_embed,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toroidal-fullerene",
        description="Toroidal fullerene Cayley graphs: spectra, gaps and torus embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, lattice=True):
        sp = sub.add_parser(name, help=help)
        if lattice:
            sp.add_argument("--basis", help="lattice columns (a,b),(c,d) as a,b,c,d")
            sp.add_argument("--pq", help="the family lattice N_{p,q} as P,Q")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    add("verify-embeddings", "check the four affine embeddings", lattice=False)
    add("graph", "vertex/edge/face counts and validity")
    sp = add("spectrum", "closed-form adjacency spectrum")
    sp.add_argument("--oracle", action="store_true", help="cross-check with Jacobi")
    sp.add_argument("--tol", type=float, default=1e-8)
    add("gap", "HOMO-LUMO gap")
    sp = add("scan", "gap table for the X_{p,q} family", lattice=False)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--q", action="append", help="q values, comma-separated or repeated")
    sp.add_argument("--csv", action="store_true")
    sp = add("embed", "write torus coordinates for X_{p,q}")
    sp.add_argument("--format", choices=("xyz", "obj"), default="xyz")
    sp.add_argument("--out")
    sp.add_argument("--bond-scale", type=float, default=torus3d.DEFAULT_BOND_SCALE)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
