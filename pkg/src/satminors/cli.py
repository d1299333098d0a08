"""Command-line interface: verify, compute, explain.

Exit codes: 0 every check passed, 1 any failure or error, 2 bad usage or
input, 3 only-inconclusive deviations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import SUITES, run_suites
from .family import CyclicFamily, CyclicSpec
from .field import QQ, field_from_name
from .poly import order_from_name
from .report import report_json, report_text, write_report
from .strand import StrandComplex

EXPLANATIONS = {
    "family.entry-factorization":
        "Every matrix entry splits as the minimal variable power for its "
        "variable times a cofactor: x_{ij} = x_k^{beta_k} * x'_{ik}.",
    "family.A-pairs-to-zero":
        "The cofactor matrix A annihilates the column of minimal variable "
        "powers: A . (x_k^{beta_k}) = 0, row by row.",
    "family.cross-identities":
        "The signed maximal minors b_k of A satisfy the cross relations "
        "(sum y) * b_k = y_k * (sum b) with y_k = x_k^{beta_k}, which is "
        "what makes the quotient delta well defined.",
    "family.variable-power-times-delta":
        "delta is the exact quotient (sum b_k)/(sum x_k^{beta_k}) and "
        "multiplies back: x_k^{beta_k} * delta = b_k for every k.",
    "family.delta-multiples-in-power":
        "Each x_k^{beta_k} * delta lies in the m-th power of the minors "
        "ideal while delta itself does not, so delta witnesses a nontrivial "
        "socle element of the quotient by the power.",
    "delta.congruence-mod-truncated-sequence":
        "Modulo Q' = (x_1^{beta_1}, ..., x_m^{beta_m}), delta reduces to a "
        "single signed pure power of the last variable whose exponent is "
        "the anti-diagonal exponent sum times m minus beta_{m+1}.",
    "saturation.colon-fixed-below-m":
        "For n < m the colon of the n-th power by the maximal ideal changes "
        "nothing: the maximal ideal is not yet associated.",
    "saturation.saturation-equals-colon-by-Q":
        "The saturation of the m-th power at the maximal ideal equals the "
        "single colon by Q = (x_1^{beta_1}, ..., x_{m+1}^{beta_{m+1}}).",
    "saturation.colon-by-Q-is-saturated":
        "The colon by Q is already saturated: a further colon by the "
        "maximal ideal is the identity.",
    "saturation.colon-by-delta-recovers-Q":
        "Coloning the m-th power by delta recovers exactly Q, pinning the "
        "annihilator of delta in the quotient.",
    "saturation.delta-generates-quotient":
        "Adding the single element delta to the m-th power yields its full "
        "saturation.",
    "saturation.length-certificate":
        "The length of the saturation quotient equals the product of the "
        "beta_k, certified by counting standard monomials of Q and of the "
        "colon by delta.",
    "heights.prefix-plus-minors-zero-dimensional":
        "Adding the first k-1 variables to the ideal of k x k minors cuts "
        "the ring down to dimension zero, for every k up to m.",
    "heights.minors-height-lower-bound":
        "The ideal of k x k minors has height at least m - k + 2, the "
        "generic bound for this shape.",
    "heights.two-minors-height-equals-m":
        "For the all-ones exponent family the 2 x 2 minors have height "
        "exactly m.",
    "heights.two-minors-in-difference-prime":
        "The 2 x 2 minors lie in the prime of consecutive variable "
        "differences, which has height m and certifies the height bound "
        "is attained.",
    "heights.three-minors-via-parity-primes":
        "For odd m the 3 x 3 minors lie in each of the two parity primes "
        "of height m - 1, certifying their height m - 1 exactly.",
    "embedded.max-ideal-associated-iff-n-ge-m":
        "The maximal ideal is associated to the n-th power exactly when "
        "n >= m: the colon by the maximal ideal moves the ideal iff n >= m.",
    "embedded.difference-prime-not-associated":
        "On the ideal itself (n = 1) the difference prime is too tall to "
        "be associated; the colon by it is the identity.",
    "embedded.difference-prime-witness":
        "A witness element w with (power : w) equal to the difference "
        "prime certifies that prime as embedded associated to the power; "
        "witnesses are re-verified before being reported.",
    "embedded.symbolic-power-strictly-larger":
        "The symbolic power (saturation at the submaximal minors) strictly "
        "contains the saturation at the maximal ideal, exhibiting embedded "
        "components away from the origin.",
    "resolution.strand":
        "The degree-n strand of the Koszul complex on the rows is a "
        "minimal exact complex of free modules with the predicted ranks, "
        "Euler characteristic one, and projective dimension min(n, m) + 1 "
        "(depth via the Auslander-Buchsbaum formula).",
    "resolution.augmentation":
        "Every relation among the degree-n products of the maximal minors "
        "is in the image of the first strand boundary, so the strand "
        "resolves the power itself.",
    "resolution.top-boundary-decomposition":
        "The single top boundary column decomposes as sum_k x_k^{beta_k} "
        "v_k with unit coefficients at the selector positions, the "
        "basis-exchange argument behind the saturation theorem.",
    "runner.deadline":
        "The wall-clock budget ran out; skipped checks are reported "
        "inconclusive, never as passes.",
}


def _strip_suffix(check_id: str) -> str:
    parts = check_id.split(".")
    last = parts[-1]
    if last and (last[0] in "nm") and any(ch.isdigit() for ch in last):
        parts = parts[:-1]
    return ".".join(parts)


class _UsageError(Exception):
    pass


def _load_spec(args) -> CyclicSpec:
    if args.m is None:
        raise _UsageError("--m is required")
    if args.m < 1:
        raise _UsageError("--m must be >= 1")
    if args.alpha == "ones":
        return CyclicSpec.ones(args.m)
    if args.alpha.startswith("@"):
        path = args.alpha[1:]
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise _UsageError(f"cannot read alpha file: {exc}")
        except json.JSONDecodeError as exc:
            raise _UsageError(f"alpha file is not valid JSON: {exc}")
        try:
            return CyclicSpec(args.m, tuple(tuple(int(x) for x in row)
                                            for row in data))
        except (TypeError, ValueError) as exc:
            raise _UsageError(f"bad alpha array: {exc}")
    raise _UsageError("--alpha must be 'ones' or '@file.json'")


def _resolve_field(args, m: int):
    if args.field:
        try:
            return field_from_name(args.field)
        except ValueError as exc:
            raise _UsageError(str(exc))
    # default: exact rationals for the small family, a prime field once
    # the Groebner work gets heavy
    return QQ if m <= 2 else field_from_name("fp:32003")


def _resolve_order(args):
    if not args.order:
        return None
    try:
        return order_from_name(args.order)
    except ValueError as exc:
        raise _UsageError(str(exc))


def cmd_verify(args) -> int:
    spec = _load_spec(args)
    fld = _resolve_field(args, spec.m)
    order = _resolve_order(args)
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    if not suites:
        raise _UsageError("--suites must name at least one suite")
    n_values = [args.n] if args.n else None
    report = run_suites(spec, suites=suites, fld=fld, order=order,
                        seed=args.seed, n_values=n_values,
                        pair_budget=args.budget_pairs,
                        timeout_secs=args.timeout_secs)
    if args.out:
        paths = write_report(report, args.out)
        print("wrote " + ", ".join(str(p) for p in paths))
    if args.format == "json":
        print(report_json(report))
    else:
        print(report_text(report))
    return report.exit_code()


def cmd_compute(args) -> int:
    spec = _load_spec(args)
    fld = _resolve_field(args, spec.m)
    fam = CyclicFamily(spec, fld=fld, order=_resolve_order(args))
    out = {
        "m": spec.m,
        "alpha": [list(r) for r in spec.alpha],
        "field": fld.name,
        "matrix": fam.M.to_strings(),
        "signed_minors": [str(a) for a in fam.a],
        "beta": list(fam.beta),
        "selector": list(fam.selector),
        "A": fam.A.to_strings(),
        "delta": str(fam.delta),
    }
    if args.n:
        strand = StrandComplex(fam, args.n)
        out["strand"] = {
            "n": args.n,
            "ranks": strand.ranks,
            "labels": [[str(l) for l in labs] for labs in strand.labels],
            "boundaries": [b.to_strings() for b in strand.boundaries],
        }
        if args.dump_boundaries:
            import csv as _csv
            from pathlib import Path
            base = Path(args.dump_boundaries)
            base.mkdir(parents=True, exist_ok=True)
            for r, b in enumerate(strand.boundaries, start=1):
                with open(base / f"boundary_{r}.csv", "w", newline="") as fh:
                    _csv.writer(fh).writerows(b.to_strings())
    text = json.dumps(out, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def cmd_explain(args) -> int:
    key = _strip_suffix(args.check_id)
    if key in EXPLANATIONS:
        print(f"{args.check_id}:")
        print("  " + EXPLANATIONS[key])
        return 0
    matches = sorted(k for k in EXPLANATIONS
                     if k.startswith(key) or key.startswith(k))
    if matches:
        for k in matches:
            print(f"{k}:")
            print("  " + EXPLANATIONS[k])
        return 0
    raise _UsageError(f"unknown check id {args.check_id!r}; known families: "
                      + ", ".join(sorted(EXPLANATIONS)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="satminors",
        description="Exact verification of saturation, resolution, height, "
                    "and associated-prime claims for the cyclic "
                    "determinantal family.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--m", type=int, help="number of matrix rows")
        sp.add_argument("--alpha", default="ones",
                        help="'ones' or '@file.json' with an m x (m+1) "
                             "array of positive exponents")
        sp.add_argument("--n", type=int, default=None,
                        help="power / strand degree to focus on")
        sp.add_argument("--field", default=None,
                        help="qq or fp:PRIME (default: qq for m<=2, "
                             "fp:32003 above)")
        sp.add_argument("--order", default=None,
                        help="monomial order: grevlex (default) or lex")
        sp.add_argument("--out", default=None, help="output file path")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for randomized searches")
        sp.add_argument("--budget-pairs", type=int, default=None,
                        help="cap on Groebner S-pairs per basis computation")
        sp.add_argument("--timeout-secs", type=float, default=None,
                        help="soft wall-clock budget for the whole run")

    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument("--suites", default="all",
                   help="comma-separated subset of: " + ", ".join(SUITES)
                        + ", or 'all'")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("compute",
                       help="dump the matrix, minors, A, delta, strands")
    common(c)
    c.add_argument("--dump-boundaries", default=None, metavar="DIR",
                   help="also write strand boundary matrices as CSV files")
    c.set_defaults(fn=cmd_compute)

    e = sub.add_parser("explain", help="describe what a check id certifies")
    e.add_argument("check_id")
    e.set_defaults(fn=cmd_explain)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
