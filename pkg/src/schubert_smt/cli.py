"""Command-line front end: straightening, basis enumeration, span probes,
and the bundled verification suite.

JSON is the single wire format; coefficients travel as decimal strings
so fixtures stay unambiguous across languages.  Exit codes: 0 success
or all checks passed, 1 verification failure, 2 usage or input error,
3 internal error.
"""

import argparse
import json
import sys

from .invariant_ring import (
    generation_degree_probe,
    invariant_basis,
    normality_probe,
)
from .lattice import IndexTuple
from .plucker import PluckerPolynomial, RankDeficientError, straighten
from .tableaux import enumerate_standard
from .verifier import CASE_NAMES, run_cases

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class DocumentError(ValueError):
    pass


def load_polynomial_document(doc: dict) -> PluckerPolynomial:
    """Parse {"r", "n", "terms": [{"coeff", "monomial"}]}; rows may arrive
    unsorted and are sign-normalised on load."""
    try:
        r = int(doc["r"])
        n = int(doc["n"])
        terms = doc["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed polynomial document: {exc}") from exc
    if not isinstance(terms, list):
        raise DocumentError("'terms' must be a list")
    poly = PluckerPolynomial.zero(r, n)
    for term in terms:
        try:
            coeff = int(str(term["coeff"]))
            rows = term["monomial"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"malformed term {term!r}: {exc}") from exc
        if coeff == 0:
            raise DocumentError("zero coefficients are not allowed in documents")
        if any(len(row) != r for row in rows):
            raise DocumentError(f"monomial rows must have length {r}")
        try:
            addend = PluckerPolynomial.from_raw_rows(rows, n, coeff)
            if not addend.is_zero() and poly.degree not in (None, addend.degree):
                raise DocumentError("document is not degree-homogeneous")
            poly = poly + addend
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    return poly


def save_polynomial_document(poly: PluckerPolynomial) -> dict:
    return {
        "r": poly.r,
        "n": poly.n,
        "terms": [
            {
                "coeff": str(poly.terms[rows]),
                "monomial": [list(row) for row in rows],
            }
            for rows in sorted(poly.terms)
        ],
    }


def _parse_w(text: str, n2n: int | None) -> IndexTuple:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise DocumentError(f"cannot parse index tuple {text!r}") from exc
    n = n2n if n2n is not None else 2 * len(values)
    try:
        return IndexTuple(values, n)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def _emit(payload: dict, text_lines: list[str], args) -> None:
    out = json.dumps(payload, indent=2) if args.json else "\n".join(text_lines)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _cmd_straighten(args) -> int:
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        poly = load_polynomial_document(doc)
        bound = _parse_w(args.bound, args.n2n) if args.bound else None
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = straighten(poly, bound, seed=args.seed)
    except RankDeficientError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = save_polynomial_document(result)
    payload["seed"] = args.seed
    _emit(payload, [str(result)], args)
    return EXIT_OK


def _cmd_basis(args) -> int:
    try:
        w = _parse_w(args.w, args.n2n)
        if args.invariant:
            tableaux = list(invariant_basis(w, args.k))
        else:
            tableaux = enumerate_standard(2 * args.k, w.r, w.n, bound=w)
    except (DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "w": list(w.values),
        "n": w.n,
        "k": args.k,
        "invariant_only": bool(args.invariant),
        "count": len(tableaux),
        "tableaux": [[list(row) for row in t.row_values()] for t in tableaux],
    }
    lines = [f"count: {len(tableaux)}"] + [str(t) for t in tableaux]
    _emit(payload, lines, args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.n >= 5 and not args.gate_n5:
        print("error: the n>=5 suite is heavier; pass --gate-n5 to enable it", file=sys.stderr)
        return EXIT_USAGE
    try:
        reports = run_cases(args.case, args.n, seed=args.seed, k_max=args.k_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    all_pass = all(r.passed for r in reports)
    payload = {
        "n": args.n,
        "seed": args.seed,
        "all_pass": all_pass,
        "cases": [r.to_dict() for r in reports],
    }
    lines = [
        f"{r.name} (n={r.n if r.n is not None else '-'}): {r.status}" for r in reports
    ]
    lines.append("all cases passed" if all_pass else "FAILURES present")
    _emit(payload, lines, args)
    return EXIT_OK if all_pass else EXIT_VERIFICATION_FAILED


def _cmd_probe(args) -> int:
    try:
        w = _parse_w(args.w, args.n2n)
        if args.mode == "normality":
            report = normality_probe(w, args.degree, seed=args.seed)
            payload = report.to_dict()
            lines = [
                f"w={w} degree={args.degree}: "
                f"spanned={report.spanned} rank={report.dim_lower_products} "
                f"dim={report.dim_graded_piece} witnesses={len(report.cokernel_witnesses)}"
            ]
        else:
            reports = generation_degree_probe(w, args.k_max, seed=args.seed)
            payload = {"w": list(w.values), "degrees": [r.to_dict() for r in reports]}
            lines = [
                f"degree {r.degree}: spanned={r.spanned} "
                f"({r.dim_generated}/{r.dim_graded_piece})"
                for r in reports
            ]
    except (DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload["seed"] = args.seed
    _emit(payload, lines, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-smt",
        description="Exact standard-monomial computations on Grassmannian "
        "Schubert varieties and their torus quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("straighten", help="expand a polynomial document in the standard basis")
    p.add_argument("--input", default="-", help="JSON document path, or - for stdin")
    p.add_argument("--bound", help="Schubert representative, comma separated")
    p.add_argument("--n2n", type=int, help="ambient rank (default: 2*len for --bound)")
    common(p)

    p = sub.add_parser("basis", help="enumerate a graded-piece basis")
    p.add_argument("--w", required=True, help="Schubert representative, comma separated")
    p.add_argument("--n2n", type=int, help="ambient rank (default: 2*len(w))")
    p.add_argument("--k", type=int, default=1, help="degree of the graded piece")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--invariant", action="store_true", default=True)
    group.add_argument("--all", dest="invariant", action="store_false",
                       help="all standard tableaux of the shape, not only invariants")
    common(p)

    p = sub.add_parser("verify", help="run the bundled verification suite")
    p.add_argument("--case", default="all", choices=CASE_NAMES + ("all",))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k-max", type=int, default=3, dest="k_max")
    p.add_argument("--gate-n5", action="store_true", dest="gate_n5",
                   help="enable the heavier n>=5 suite")
    common(p)

    p = sub.add_parser("probe", help="span probes on a Schubert quotient")
    p.add_argument("--w", required=True)
    p.add_argument("--n2n", type=int)
    p.add_argument("--mode", choices=("normality", "generation"), default="normality")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--k-max", type=int, default=3, dest="k_max")
    common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "straighten": _cmd_straighten,
        "basis": _cmd_basis,
        "verify": _cmd_verify,
        "probe": _cmd_probe,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # keep the exit-code contract for unexpected failures
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
