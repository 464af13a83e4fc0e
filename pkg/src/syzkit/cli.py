"""Command-line interface: ``syzkit <command> ...``.

Exit codes: 0 success, 1 usage error, 2 file or parse error,
3 computation too large, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ComputationTooLarge, InvariantViolation, SyzkitError
from .gifile import GiFileError, format_gi, load_family, load_ideal
from .koszul import betti_table, np_check
from .multipoly import parse_poly
from .scalars import parse_field
from .syzygy import family_rank_scan, involvement_witness, phi_image, syz2_verdict, \
    syzygies_contained_in
from .varieties import generate, parse_catalog_name

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FILE = 2
EXIT_TOO_LARGE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_gen(args, out):
    spec = parse_catalog_name(args.catalog, seed=args.seed)
    field = parse_field(args.field)
    variety = generate(spec, field)
    comments = [f"catalog {spec.name}", f"seed {args.seed}"]
    text = format_gi(variety.ideal, comments)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise GiFileError(f"cannot write file: {exc.strerror}", None, args.output) from None
    out.write(f"wrote {args.output}: {spec.name} (seed {args.seed}), "
              f"{len(variety.ideal.generators)} generators in {variety.ideal.num_vars} "
              f"variables over {field}\n")


def cmd_hilbert(args, out):
    ideal = load_ideal(args.input)
    values = [(t, ideal.hilbert_quotient(t)) for t in range(args.tmax + 1)]
    if args.json:
        _dump({"hilbert": [{"t": t, "h": h} for t, h in values]}, out)
        return
    for t, h in values:
        out.write(f"h({t}) = {h}\n")


def cmd_betti(args, out):
    ideal = load_ideal(args.input)
    table = betti_table(ideal, args.pmax, args.qmax)
    if args.json:
        _dump(table.to_json(), out)
    else:
        out.write(table.format() + "\n")


def cmd_np(args, out):
    ideal = load_ideal(args.input)
    result = np_check(ideal, args.p, args.qmax)
    if args.json:
        _dump({
            "p": result.p,
            "qmax": result.qmax,
            "holds": result.holds,
            "quadratic_generation": result.quadratic_generation,
            "fails_at": list(result.fails_at) if result.fails_at else None,
            "checked": [{"i": i, "q": q, "dim": d} for (i, q), d in sorted(result.checked.items())],
        }, out)
    else:
        out.write(result.describe() + "\n")


def cmd_phi(args, out):
    ideal = load_ideal(args.input)
    report = phi_image(ideal)
    if args.json:
        _dump(report.to_json(), out)
        return
    state = "surjective" if report.surjective else "not surjective"
    out.write(f"dim Im(phi)={report.dim_image}, dim I_2={report.dim_I2}: {state}\n")
    for q in report.complement_basis:
        out.write(f"  outside Im(phi): {q}\n")


def cmd_verdict(args, out):
    ideal = load_ideal(args.input)
    contexts = [load_ideal(path) for path in args.context or []]
    verdict = syz2_verdict(ideal, contexts)
    if args.json:
        _dump(verdict.to_json(), out)
        return
    out.write(verdict.describe() + "\n")
    out.write("degree-2 syzygy ideal:\n")
    for q in verdict.syzygy_ideal_deg2:
        out.write(f"  {q}\n")
    for h in verdict.assumed_hypotheses:
        out.write(f"assumed: {h}\n")


def cmd_involved(args, out):
    ideal = load_ideal(args.input)
    try:
        q = parse_poly(args.quadric, ideal.context)
    except SyzkitError as exc:
        raise UsageError(f"--quadric: {exc}") from None
    result = involvement_witness(ideal, q, args.trials, args.seed)
    if args.json:
        _dump(result.to_json(), out)
        return
    out.write(f"{result.status} (trials used {result.trials}, seed {args.seed})\n")
    if result.witness is not None:
        out.write("witness gamma: " + " + ".join(
            f"x{j} (x) ({text})" for j, text in result.witness.to_pairs()) + "\n")
        out.write("functional: [" + ", ".join(str(c) for c in result.functional) + "]\n")
        out.write(f"verified: {result.verify(q)}\n")
    elif result.status == "NotInPhiImage":
        out.write("the quadric lies outside Im(phi): it is involved in no linear syzygy\n")
    else:
        out.write("no witness found; this does not prove the quadric is uninvolved\n")


def cmd_contain(args, out):
    y = load_ideal(args.input)
    z = load_ideal(args.z)
    result = syzygies_contained_in(y, z)
    if args.json:
        _dump({"contained": result}, out)
    else:
        out.write(f"syzygies of Y contained in V (x) I_(Z,2): {str(result).lower()}\n")


def _parse_samples(text, field):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            try:
                out.append(field.parse(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"--samples: {exc}") from None
    return out


def cmd_family(args, out):
    family = load_family(args.input)
    samples = _parse_samples(args.samples, family.context.field)
    scan = family_rank_scan(family, samples, args.random, args.seed)
    f = family.context.field
    if args.json:
        _dump({
            "seed": args.seed,
            "rows": [r.to_json(f) for r in scan.rows],
            "hilbert_constant": scan.hilbert_constant,
            "k21_constant": scan.k21_constant,
            "drops": [f.format(t) for t in scan.drops],
        }, out)
        return
    out.write(f"seed {args.seed}\n")
    out.write(f"{'t':>10} {'kind':>7} {'h2':>4} {'h3':>4} {'k21':>4} {'dim_phi':>8}\n")
    for r in scan.rows:
        kind = "sample" if r.special else "random"
        out.write(f"{f.format(r.t):>10} {kind:>7} {r.h2:>4} {r.h3:>4} {r.k21:>4} "
                  f"{r.dim_phi:>8}\n")
    out.write(f"hilbert values constant: {scan.hilbert_constant}\n")
    out.write(f"dim K_(2,1) constant: {scan.k21_constant}\n")
    drops = ", ".join(f.format(t) for t in scan.drops) or "none"
    out.write(f"dim Im(phi) below maximum {scan.max_dim_phi} at: {drops}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syzkit", description="Koszul cohomology and second syzygy schemes")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("gen", help="write a catalog variety to a .gi file")
    p.add_argument("catalog")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="Q")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hilbert", help="Hilbert function of the quotient")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("betti", help="table of dim K_(p,q)")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("np", help="check property (N_p) up to qmax")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_np)

    p = sub.add_parser("phi", help="image of phi inside I_2")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verdict", help="decide Syz_2 on degree-2 spans")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--context", action="append")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("involved", help="search a syzygy involving a quadric")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--quadric", required=True)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_involved)

    p = sub.add_parser("contain", help="are all syzygies of Y built from quadrics of Z")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-z", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_contain)

    p = sub.add_parser("family", help="rank scan along a one-parameter family")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--samples", required=True)
    p.add_argument("--random", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except GiFileError as exc:
        err.write(f"file error: {exc}\n")
        return EXIT_FILE
    except ComputationTooLarge as exc:
        err.write(f"too large: {exc}\n")
        return EXIT_TOO_LARGE
    except InvariantViolation as exc:
        err.write(f"internal error (bug): {exc}\n")
        return EXIT_INTERNAL
    except (SyzkitError, ValueError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())


def main_entry():
    sys.exit(main())
