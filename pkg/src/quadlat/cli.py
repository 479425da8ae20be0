"""Command-line surface: inspect sequences, build polynomials, evaluate
terms over representations, and run the verification suites."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .endo import EndoSpec, cube, gamma
from .poly import (
    cumulative_e,
    cumulative_f0,
    e_alpha,
    f_alpha0,
    gp_e,
    gp_f,
    inv_cumulative_e,
    inv_cumulative_f0,
    unified_e,
    unified_f,
)
from .reps import eval_term, rep_from_json
from .seqs import (
    CanonForm,
    canon_from_key,
    canonicalize,
    class_closure,
    representative,
    seq_from_string,
    seq_to_string,
    slice_enumerate,
)
from .suites import SuiteConfig, run_suite, suite_names
from .terms import format_term, parse_term


def _read_term(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return parse_term(text)


def _canon_line(c: CanonForm) -> str:
    return f"{c} (class size {c.class_size})"


def _cmd_normalize(args) -> int:
    c = canonicalize(seq_from_string(args.seq))
    print(_canon_line(c))
    return 0


def _cmd_closure(args) -> int:
    cls = class_closure(seq_from_string(args.seq))
    for s in sorted(cls):
        print(seq_to_string(s))
    return 0


def _cmd_slice(args) -> int:
    classes = sorted(slice_enumerate(args.n), key=lambda c: representative(c))
    for c in classes:
        print(f"{seq_to_string(representative(c))}  {_canon_line(c)}")
    print(f"{len(classes)} classes")
    return 0


_TAGS = ("F21", "F31", "F41", "G11", "G21", "G31", "G41", "H11")


def _class_from_args(args) -> CanonForm:
    if args.seq:
        return canonicalize(seq_from_string(args.seq))
    if not args.type:
        raise SystemExit("build: need either --seq or --type with exponents")
    if args.type not in _TAGS:
        raise SystemExit(f"build: unknown type {args.type!r}; one of {', '.join(_TAGS)}")
    # reconstruct the class key from the canonical table exponents
    tag, r, s, t = args.type, args.r, args.s, args.t
    counts = {
        "F21": (2 * t - 1, 2 * s, 2 * r),
        "F31": (2 * t, 2 * s - 1, 2 * r),
        "F41": (2 * t, 2 * s, 2 * r - 1),
        "G11": (2 * t, 2 * s, 2 * r),
        "G21": (2 * t, 2 * s + 1, 2 * r - 1),
        "G31": (2 * t + 1, 2 * s, 2 * r - 1),
        "G41": (2 * t - 1, 2 * s + 1, 2 * r),
        "H11": (2 * t + 1, 2 * s - 1, 2 * r - 1) if s else (2 * t - 1, 1, 2 * r - 1),
    }[tag]
    end = int(tag[1]) if tag[0] != "H" else 1
    if min(counts) < 0:
        raise SystemExit(f"build: exponents r={r} s={s} t={t} are out of range for {tag}")
    c = canon_from_key(end, counts)
    if c.tag != tag:
        raise SystemExit(f"build: exponents r={r} s={s} t={t} are out of range for {tag}")
    return c


def _cmd_build(args) -> int:
    kind = args.kind
    if kind == "e":
        term = e_alpha(_class_from_args(args))
    elif kind == "f":
        term = f_alpha0(_class_from_args(args))
    elif kind == "gp-e":
        term = gp_e(seq_from_string(args.seq))
    elif kind == "gp-f":
        term = gp_f(seq_from_string(args.seq))
    elif kind == "cumulative":
        term = cumulative_f0(args.n) if args.z == "f0" else cumulative_e(args.start, args.n)
    elif kind == "inv-cumulative":
        term = (
            inv_cumulative_f0(args.n)
            if args.z == "f0"
            else inv_cumulative_e(args.end, args.n)
        )
    elif kind == "unified":
        fn = unified_f if args.z == "f" else unified_e
        term = fn(args.end, args.r, args.s, args.t)
    else:  # pragma: no cover
        raise SystemExit(f"build: unknown kind {kind!r}")
    print(format_term(term))
    return 0


def _cmd_gamma(args) -> int:
    if len(args.spec) != 2 or any(ch not in "1234" for ch in args.spec):
        raise SystemExit(f"gamma: spec must be two indices like 12, got {args.spec!r}")
    spec = EndoSpec(int(args.spec[0]), int(args.spec[1]))
    term = _read_term(args.termfile)
    print(format_term(gamma(spec, term)))
    return 0


def _cmd_cube(args) -> int:
    rows = cube(args.n)
    if args.format == "json":
        payload = {
            "schema": "1",
            "n": args.n,
            "rows": [
                {
                    "row": r.row,
                    "label": r.label,
                    "gp": format_term(r.gp),
                    "herrmann": format_term(r.herrmann),
                    "cumulative": format_term(r.cumulative),
                }
                for r in rows
            ],
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in rows:
            print(f"{r.row:2d}  {r.label}")
    return 0


def _cmd_eval(args) -> int:
    term = _read_term(args.termfile)
    with open(args.repfile, "r", encoding="utf-8") as fh:
        rep = rep_from_json(json.load(fh))
    v = eval_term(term, rep)
    print(f"dim {v.dim} of {rep.dim0} over GF({rep.p})")
    for row in v.basis.tolist():
        print(" ".join(str(x) for x in row))
    return 0


def _default_primes() -> tuple[int, ...]:
    env = os.environ.get("QUADLAT_PRIMES")
    if not env:
        return (2, 3, 5)
    return tuple(int(tok) for tok in env.replace(",", " ").split())


def _cmd_verify(args) -> int:
    names = suite_names() if args.suite == "all" else [args.suite]
    for name in names:
        if name not in suite_names():
            raise SystemExit(
                f"verify: unknown suite {name!r}; known: {', '.join(suite_names())}"
            )
    primes = (
        tuple(int(tok) for tok in args.primes.replace(",", " ").split())
        if args.primes
        else _default_primes()
    )
    cfg = SuiteConfig.make(primes=primes, seed=args.seed)
    reports = []
    failed = False
    for name in names:
        rep = run_suite(name, cfg)
        reports.append(rep)
        print(rep.summary_line())
        if not rep.ok:
            failed = True
            for check in rep.checks:
                if check.verdict == "fail":
                    print(f"    FAIL {check.id} {json.dumps(check.params, sort_keys=True)}")
                    if check.witness:
                        print(f"         witness: {json.dumps(check.witness, sort_keys=True)[:400]}")
    if args.json:
        payload = {"schema": "1", "suites": [r.to_json() for r in reports]}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {args.json}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadlat",
        description="Free modular lattice on four generators: sequence classes, "
        "admissible polynomials, exact verification over GF(p) subspace quadruples.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="canonical class of a digit sequence")
    p.add_argument("seq")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("closure", help="all members of the rewrite class")
    p.add_argument("seq")
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser("slice", help="classes of a given length starting at 1")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_slice)

    p = sub.add_parser("build", help="print a polynomial as an S-expression")
    p.add_argument(
        "kind",
        choices=["e", "f", "gp-e", "gp-f", "cumulative", "inv-cumulative", "unified"],
    )
    p.add_argument("--seq", help="digit sequence selecting the class")
    p.add_argument("--type", help="table row tag such as F21 (with --r/--s/--t)")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--n", type=int, default=1, help="length parameter for cumulative kinds")
    p.add_argument("--start", type=int, default=1, help="start index for cumulative e")
    p.add_argument("--end", type=int, default=1, help="end index for inverse/unified kinds")
    p.add_argument("--z", choices=["e", "f", "f0"], default="e",
                   help="which family for cumulative/unified kinds")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("gamma", help="apply a substitution endomorphism to a term file")
    p.add_argument("spec", help="two indices naming the pair split, e.g. 12")
    p.add_argument("termfile", help="path to an S-expression file, or - for stdin")
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("cube", help="the sixteen-row perfect-element table at level n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["json", "labels"], default="json")
    p.set_defaults(fn=_cmd_cube)

    p = sub.add_parser("eval", help="evaluate a term file over a representation file")
    p.add_argument("termfile")
    p.add_argument("repfile")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite (or all)")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--primes", help="comma-separated primes, default 2,3,5 "
                   "(or QUADLAT_PRIMES)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="write the JSON report to this path")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
