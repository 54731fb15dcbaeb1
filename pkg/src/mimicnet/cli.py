"""Command line entry point.

Exit status is 0 on success, 1 when a verification or validation fails,
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import io
from .cuts import min_cut
from .exceptions import MimicError
from .io import format_fraction, parse_weight
from .profile import cut_profile, hagerup_compress, validate_mimicking
from .rank import ROW_MODES, build_incidence_matrix, exact_rank, gf2_rank, verify_identity_submatrix
from .validation import check_side, check_terminal_graph

VERIFY_CHOICES = (
    "structure",
    "claim-paths",
    "unique-cycles",
    "identity-submatrix",
    "side-assignment",
    "incompressibility",
)


class UsageError(Exception):
    pass


def _side_text(g, side) -> str:
    terms = [g.labels[t] for t in g.terminals if t in side]
    rest = [g.labels[t] for t in g.terminals if t not in side]
    return "{" + ",".join(terms) + "}|{" + ",".join(rest) + "}"


def cmd_gen(args, out):
    if args.family == "planar":
        from .planar import generate_planar_dual

        inst = generate_planar_dual(args.k, max_k=args.max_k)
        d = io.write_bundle(inst, args.out)
        plane = inst.dual
        out.write(
            f"planar instance k={inst.k}: dual V={len(plane.points)} E={len(plane.edges)} "
            f"F={len(plane.faces)}; primal {inst.primal.n} vertices, {len(inst.primal.edges)} edges\n"
        )
        out.write("weights: C=" + str(inst.C) + ", " + ", ".join(f"c_{i}={v}" for i, v in sorted(inst.c.items())) + "\n")
    else:
        from .dblexp import generate_dblexp

        alpha = parse_weight(args.alpha) if args.alpha is not None else None
        inst = generate_dblexp(args.r, alpha=alpha, max_outer=args.max_outer)
        d = io.write_bundle(inst, args.out)
        out.write(
            f"dblexp instance r={inst.r} k={inst.k}: {inst.graph.n} vertices, "
            f"{len(inst.graph.edges)} edges, ell={inst.ell}, alpha={format_fraction(inst.alpha)}\n"
        )
    out.write(f"written to {d}\n")
    return 0


def cmd_mincut(args, out):
    g = check_terminal_graph(args.graph, require_connected=True)
    b = check_side(g, args.side)
    cut = min_cut(g, b)
    out.write(f"bipartition {_side_text(g, b.source)}\n")
    out.write(f"value {format_fraction(cut.value)}\n")
    out.write("source side " + " ".join(g.labels[x] for x in sorted(cut.source_min_side)) + "\n")
    out.write("cut edges " + " ".join(str(i) for i in sorted(cut.crossing_edges)) + "\n")
    out.write(f"unique {'yes' if cut.unique else 'no'}\n")
    return 0


def cmd_profile(args, out):
    g = check_terminal_graph(args.graph, require_connected=True)
    prof = cut_profile(g, jobs=args.jobs)
    for cut in prof.cuts:
        line = f"{_side_text(g, cut.bipartition.source)} {format_fraction(cut.value)}"
        if args.uniqueness:
            line += " unique" if cut.unique else " non-unique"
        out.write(line + "\n")
    if args.uniqueness:
        out.write(f"unique minimum cuts: {sum(prof.unique)}/{len(prof)}\n")
    return 0


def cmd_compress(args, out):
    g = check_terminal_graph(args.graph, require_connected=True)
    prof = cut_profile(g, jobs=args.jobs)
    small, report = hagerup_compress(g, prof)
    io.write_graph(small, args.out)
    out.write(report.render())
    return 0


def cmd_validate(args, out):
    g = check_terminal_graph(args.original, require_connected=True)
    g2 = check_terminal_graph(args.compressed, require_connected=True)
    rep = validate_mimicking(g, g2)
    out.write(rep.render())
    return 0 if rep.passed else 1


def cmd_rank(args, out):
    g = check_terminal_graph(args.graph, require_connected=True)
    prof = cut_profile(g, jobs=args.jobs)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        m = build_incidence_matrix(g, prof, args.rows, strict=args.strict)
    for w in caught:
        sys.stderr.write(f"warning: {w.message}\n")
    rows, cols = m.shape
    out.write(f"incidence matrix {rows}x{cols} (rows: {args.rows})\n")
    out.write(f"rank {exact_rank(m)}\n")
    out.write(f"rank mod 2 {gf2_rank(m)}\n")
    if args.dump:
        Path(args.dump).write_text(m.dumps())
    return 0


def cmd_verify(args, out):
    inst, meta = io.load_bundle(args.instance)
    kind = meta["kind"]
    planar_checks = {"structure", "claim-paths", "unique-cycles", "identity-submatrix"}
    if (args.check in planar_checks) != (kind == "planar"):
        raise UsageError(f"check {args.check!r} does not apply to a {kind} instance")
    if args.check == "structure":
        from .planar import verify_crossings, verify_structure, verify_weight_hierarchy

        reports = [verify_structure(inst), verify_weight_hierarchy(inst), verify_crossings(inst)]
    elif args.check == "claim-paths":
        from .planar import verify_claim_paths

        reports = [verify_claim_paths(inst)]
    elif args.check == "unique-cycles":
        from .planar import verify_unique_cut_cycles

        reports = [verify_unique_cut_cycles(inst)]
    elif args.check == "identity-submatrix":
        prof = cut_profile(inst.primal, jobs=args.jobs)
        m = build_incidence_matrix(inst.primal, prof, "important-only")
        rep = verify_identity_submatrix(inst, m)
        rep.note(f"rank of important rows: {exact_rank(m)}")
        reports = [rep]
    elif args.check == "side-assignment":
        from .dblexp import verify_side_assignment

        reports = [verify_side_assignment(inst)]
    else:
        from .dblexp import stderr_progress, verify_incompressibility

        mode = "full" if args.full else "sampled"
        reports = [
            verify_incompressibility(
                inst, mode=mode, seed=args.seed, progress=stderr_progress if args.full else None
            )
        ]
    for rep in reports:
        out.write(rep.render())
    return 0 if all(r.passed for r in reports) else 1


def cmd_export(args, out):
    if args.instance is not None:
        inst, _ = io.load_bundle(args.instance)
        data = io.export_instance_dot(inst, which=args.which)
    elif args.graph is not None:
        data = io.export_dot(check_terminal_graph(args.graph))
    else:
        raise UsageError("export dot needs --graph or --instance")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        out.write(data.decode())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mimicnet", description="Exact terminal-cut mimicking network toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a hard instance bundle")
    gsub = gen.add_subparsers(dest="family", required=True)
    gp = gsub.add_parser("planar", help="planar instance with 2^(k-2) important cuts")
    gp.add_argument("--k", type=int, required=True)
    gp.add_argument("--max-k", type=int, default=10)
    gp.add_argument("--out", required=True, help="bundle directory")
    gd = gsub.add_parser("dblexp", help="instance that merging cannot compress")
    gd.add_argument("--r", type=int, required=True)
    gd.add_argument("--alpha", help="exact weight P/Q")
    gd.add_argument("--max-outer", type=int, default=10**4)
    gd.add_argument("--out", required=True, help="bundle directory")

    mc = sub.add_parser("mincut", help="canonical minimum cut for one bipartition")
    mc.add_argument("--graph", required=True)
    mc.add_argument("--side", required=True, help='comma-separated terminal labels, e.g. "t1,t2"')

    pr = sub.add_parser("profile", help="minimum cut values for every bipartition")
    pr.add_argument("--graph", required=True)
    pr.add_argument("--uniqueness", action="store_true")

    co = sub.add_parser("compress", help="merge vertices with equal side vectors")
    co.add_argument("--graph", required=True)
    co.add_argument("--out", required=True)

    va = sub.add_parser("validate", help="check that two graphs have equal terminal cuts")
    va.add_argument("--original", required=True)
    va.add_argument("--compressed", required=True)

    ra = sub.add_parser("rank", help="exact rank of the cutset-edge incidence matrix")
    ra.add_argument("--graph", required=True)
    ra.add_argument("--rows", choices=ROW_MODES, default="unique-only")
    ra.add_argument("--strict", action="store_true")
    ra.add_argument("--dump", help="write the matrix as text")

    ve = sub.add_parser("verify", help="verify a property of a generated instance")
    ve.add_argument("check", choices=VERIFY_CHOICES)
    ve.add_argument("--instance", required=True, help="bundle directory")
    ve.add_argument("--full", action="store_true", help="test every vertex pair (long run)")

    ex = sub.add_parser("export", help="export to another format")
    ex.add_argument("format", choices=["dot"])
    ex.add_argument("--graph")
    ex.add_argument("--instance")
    ex.add_argument("--which", choices=["primal", "dual"], default="primal")
    ex.add_argument("--out")

    for sp in (gp, gd, mc, pr, co, va, ra, ve, ex):
        sp.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


COMMANDS = {
    "gen": cmd_gen,
    "mincut": cmd_mincut,
    "profile": cmd_profile,
    "compress": cmd_compress,
    "validate": cmd_validate,
    "rank": cmd_rank,
    "verify": cmd_verify,
    "export": cmd_export,
}


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, MimicError, OSError) as exc:
        sys.stderr.write(f"mimicnet {args.command}: {exc}\n")
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
