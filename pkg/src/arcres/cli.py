"""Command-line entry point: ``python -m arcres <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import formats
from .design import (
    DesignError,
    ResolutionError,
    block_graph,
    compatible_family_from_arc,
    make_resolution,
    parameter_table,
    validate_steiner,
)
from .geometry import ArcError, denniston_arc, exterior_lines, make_arc, plane_for, plane_from_lines, regular_hyperoval
from .gf import FieldError
from .rank import RankReport, conjecture_check, incidence_matrix, p_rank
from .reconstruct import PlaneAxiomError, ReconstructionError, reconstruct_plane, verify_projective_plane
from .search import BoundViolation, SearchBudget, enumerate_parallel_classes, enumerate_resolutions, max_compatible_set

log = logging.getLogger("arcres")

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, report: dict, human: str | None = None, force_json: bool = False) -> None:
    if args.json or force_json or human is None:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **report}, indent=2))
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")


def _write_or_print(path: str | None, text: str) -> None:
    if path:
        formats.write_text(path, text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.max_solutions, args.max_nodes)


def _load_design(path: str, strict: bool = True):
    v, blocks = formats.parse_blocks(formats.read_text(path))
    return validate_steiner(v, blocks, strict=strict)


def _load_plane(path: str):
    v, lines = formats.parse_blocks(formats.read_text(path))
    verify_projective_plane(v, lines)
    return plane_from_lines(v, lines)


def _load_arc(plane, path: str):
    pts = formats.parse_indices(formats.read_text(path))
    mask = sum(1 << p for p in pts)
    k = next(((lm & mask).bit_count() for lm in plane.line_masks if lm & mask), 0)
    return make_arc(plane, pts, k)


def _build_arc(q: int, k: int, kind: str):
    P = plane_for(q)
    if kind == "hyperoval":
        if k != 2:
            raise UsageError("a hyperoval has k = 2")
        return P, regular_hyperoval(P)
    if k < 2 or k & (k - 1):
        raise UsageError(f"k={k} must be a power of two")
    return P, denniston_arc(P, k.bit_length() - 1)


def _load_family(D, paths):
    return [make_resolution(D, formats.parse_resolution(formats.read_text(p))) for p in paths]


def cmd_plane(args):
    P = plane_for(args.q)
    _write_or_print(args.output, formats.format_blocks(P.npoints, P.lines))
    return EXIT_OK


def cmd_arc(args):
    _, A = _build_arc(args.q, args.k, args.kind)
    _write_or_print(args.output, formats.format_indices(A.points))
    return EXIT_OK


def cmd_restrict(args):
    P = _load_plane(args.plane)
    A = _load_arc(P, args.arc)
    _write_or_print(args.output, formats.format_design(A.embedding.design))
    return EXIT_OK


def cmd_exterior(args):
    P = _load_plane(args.plane)
    A = _load_arc(P, args.arc)
    ext = exterior_lines(P, A)
    _emit(args, {"exterior_lines": ext, "count": len(ext)}, formats.format_indices(ext))
    return EXIT_OK


def cmd_resolutions(args):
    P = _load_plane(args.plane)
    A = _load_arc(P, args.arc)
    family = compatible_family_from_arc(P, A)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    width = len(str(len(family) - 1))
    names = []
    for i, R in enumerate(family):
        name = out / f"res_{i:0{width}d}.txt"
        formats.write_text(name, formats.format_resolution(R))
        names.append(str(name))
    if args.design_out:
        formats.write_text(args.design_out, formats.format_design(A.embedding.design))
    _emit(args, {"m": len(family), "files": names}, "\n".join(names))
    return EXIT_OK


def cmd_search_classes(args):
    D = _load_design(args.design, strict=False)
    res = enumerate_parallel_classes(D, _budget(args), args.branching)
    human = "\n".join(" ".join(map(str, c)) for c in res.items)
    human += f"\n# classes={len(res.items)} exhaustive={res.exhaustive} nodes={res.nodes}"
    _emit(args, {"classes": [list(c) for c in res.items], "count": len(res.items),
                 "exhaustive": res.exhaustive, "nodes": res.nodes}, human)
    return EXIT_OK


def cmd_search_resolutions(args):
    D = _load_design(args.design, strict=False)
    res = enumerate_resolutions(D, _budget(args), args.branching)
    files = []
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(max(len(res.items) - 1, 0)))
        for i, R in enumerate(res.items):
            name = out / f"res_{i:0{width}d}.txt"
            formats.write_text(name, formats.format_resolution(R))
            files.append(str(name))
    human = f"resolutions={len(res.items)} exhaustive={res.exhaustive} nodes={res.nodes}"
    _emit(args, {"count": len(res.items), "exhaustive": res.exhaustive,
                 "nodes": res.nodes, "files": files}, human)
    return EXIT_OK


def cmd_max_compatible(args):
    D = _load_design(args.design)
    pool = _load_family(D, args.resolutions)
    best = max_compatible_set(D, pool, _budget(args))
    chosen = [args.resolutions[i] for i in best.indices]
    human = "\n".join(chosen) + f"\n# size={best.size} bound={best.bound} optimal={best.optimal}"
    _emit(args, {"family": best.indices, "files": chosen, "size": best.size,
                 "bound": best.bound, "optimal": best.optimal, "nodes": best.nodes}, human)
    return EXIT_OK


def cmd_reconstruct(args):
    D = _load_design(args.design)
    family = _load_family(D, args.resolutions)
    rec = reconstruct_plane(D, family)
    _write_or_print(args.output, formats.format_blocks(rec.plane.npoints, rec.plane.lines))
    log.info("reconstructed plane of order %d with %d points", rec.plane.order, rec.plane.npoints)
    return EXIT_OK


def cmd_verify_plane(args):
    v, lines = formats.parse_blocks(formats.read_text(args.file))
    order = verify_projective_plane(v, lines)
    _emit(args, {"valid": True, "order": order, "points": v, "lines": len(lines)},
          f"projective plane of order {order}")
    return EXIT_OK


def cmd_verify_design(args):
    D = _load_design(args.file, strict=False)
    rep = {"valid": True, "v": D.v, "k": D.k, "b": D.b,
           "params": D.params.as_dict() if D.params else None}
    human = f"2-({D.v},{D.k},1) design with {D.b} blocks"
    if D.params:
        human += f"; s={D.params.s}, r={D.params.r}, m_max={D.params.m_max}"
        if D.params.boundary:
            human += " (s=1: affine plane boundary case)"
    _emit(args, rep, human)
    return EXIT_OK


def cmd_rank(args):
    D = _load_design(args.design, strict=False)
    if args.p == 2:
        report = conjecture_check(D, cross_check=args.cross_check, budget=_budget(args))
    else:
        r = p_rank(incidence_matrix(D), args.p)
        report = RankReport(D.v, D.b, args.p, r, None, "not-applicable")
    _emit(args, report.to_dict(), force_json=True)
    return EXIT_FAIL if report.verdict == "below-bound" else EXIT_OK


def cmd_params(args):
    p = parameter_table(args.s, args.k)
    d = p.as_dict()
    human = "\n".join(f"{key:20s} {val}" for key, val in d.items() if key != "srg")
    b, a, lam, mu = p.srg
    human += f"\n{'srg':20s} ({b}, {a}, {lam}, {mu})"
    _emit(args, d, human)
    return EXIT_OK


def run_pipeline(t: int, k: int | None = None, kind: str = "denniston") -> dict:
    """plane -> arc -> design -> family -> reconstruction -> 2-rank, as one summary."""
    q = 1 << t
    k = k if k is not None else q // 2
    P, A = _build_arc(q, k, kind)
    emb = A.embedding
    D = emb.design
    p = D.params
    family = compatible_family_from_arc(P, A)
    rec = reconstruct_plane(D, family)
    graph = block_graph(D)
    rank = conjecture_check(D, family=family)
    out = {
        "t": t, "q": q, "k": A.k, "s": A.s, "arc": kind,
        "plane_points": P.npoints, "arc_size": len(A.points),
        "v": D.v, "b": D.b, "r": p.r, "n": p.n,
        "exterior_lines": len(exterior_lines(P, A)),
        "m": len(family), "m_max": p.m_max,
        "b_I": rec.structure.b_I, "r_i": sorted(set(rec.structure.degrees)),
        "dual_design": None if rec.dual.design is None else
        {"v": rec.dual.design.v, "k": rec.dual.design.k, "b": rec.dual.design.b},
        "plane_order": rec.plane.order, "reconstructed_points": rec.plane.npoints,
        "reconstructed_lines": rec.plane.nlines,
        "block_graph_srg": list(graph.observed) if graph.observed else None,
        "srg_verified": graph.is_srg,
        "rank2": rank.rank, "bound": rank.conjecture_bound, "verdict": rank.verdict,
    }
    return out


def cmd_pipeline(args):
    _emit(args, run_pipeline(args.t, args.k, args.kind), force_json=True)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--threads", type=int, default=1, help="worker count (results do not depend on it)")
    common.add_argument("-v", "--verbose", action="store_true")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-solutions", type=int)
    budget.add_argument("--max-nodes", type=int)

    branching = argparse.ArgumentParser(add_help=False)
    branching.add_argument("--branching", choices=["lowest", "fewest"], default="lowest")

    parser = argparse.ArgumentParser(prog="arcres", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, parents=(), **kw):
        sp = sub.add_parser(name, parents=[common, *parents], **kw)
        sp.set_defaults(func=func)
        return sp

    sp = add("plane", cmd_plane, help="emit PG(2,q) as a design file")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = add("arc", cmd_arc, help="emit a maximal arc as a point index list")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kind", choices=["denniston", "hyperoval"], default="denniston")
    sp.add_argument("-o", "--output")

    for name, func, help_ in [
        ("restrict", cmd_restrict, "design cut out of a plane by an arc"),
        ("exterior", cmd_exterior, "lines of the plane missing the arc"),
        ("resolutions", cmd_resolutions, "one resolution file per exterior line"),
    ]:
        sp = add(name, func, help=help_)
        sp.add_argument("--plane", required=True)
        sp.add_argument("--arc", required=True)
        if name == "resolutions":
            sp.add_argument("--out-dir", required=True)
            sp.add_argument("--design-out")
        elif name == "restrict":
            sp.add_argument("-o", "--output")

    sp = add("search-classes", cmd_search_classes, (budget, branching), help="enumerate parallel classes")
    sp.add_argument("--design", required=True)

    sp = add("search-resolutions", cmd_search_resolutions, (budget, branching), help="enumerate resolutions")
    sp.add_argument("--design", required=True)
    sp.add_argument("--out-dir")

    sp = add("max-compatible", cmd_max_compatible, (budget,), help="largest compatible family")
    sp.add_argument("--design", required=True)
    sp.add_argument("resolutions", nargs="+")

    sp = add("reconstruct", cmd_reconstruct, help="rebuild the plane from a full compatible family")
    sp.add_argument("--design", required=True)
    sp.add_argument("resolutions", nargs="+")
    sp.add_argument("-o", "--output")

    sp = add("verify-plane", cmd_verify_plane, help="check the projective plane axioms")
    sp.add_argument("file")

    sp = add("verify-design", cmd_verify_design, help="validate a Steiner 2-design")
    sp.add_argument("file")

    sp = add("rank", cmd_rank, (budget,), help="p-rank report (JSON)")
    sp.add_argument("--design", required=True)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--no-cross-check", dest="cross_check", action="store_false")

    sp = add("params", cmd_params, help="parameter table for (s, k)")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("pipeline", cmd_pipeline, help="plane -> arc -> design -> family -> plane -> rank")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--kind", choices=["denniston", "hyperoval"], default="denniston")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, FieldError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PlaneAxiomError as exc:
        print(f"invalid: {exc.axiom}: {exc} (witness {exc.witness})", file=sys.stderr)
        return EXIT_FAIL
    except (formats.FormatError, DesignError, ResolutionError, ArcError,
            ReconstructionError, BoundViolation) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
