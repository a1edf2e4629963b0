"""Command-line surface: verification suites, fusion/monodromy tables,
diagram rendering, and machine-readable JSON reports.

Exit codes: 0 every check passed, 1 at least one mathematical check
failed, 2 usage error.  Reports are always written, even on failure, and
are byte-stable for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .braid import verify_braid_suite
from .dilute import verify_dilute_braiding
from .fusion import (
    AmbiguousEigenvalue,
    EigenvalueMismatch,
    FusedModule,
    expected_summands,
    fusion_decomposition_generic,
    generic_rational_spec,
    jordan_type,
    monodromy_eigenvalue,
    verify_fusion_suite,
)
from .integrable import verify_integrable_suite
from .morphism import domain_for
from .render import parse_renderable, render_ascii, render_svg
from .report import SCHEMA_VERSION, VerificationReport
from .scalar import Scalar, Specialization
from .standard import StandardModule, standard_dimension, verify_rigidity
from .twist import verify_twist_suite

SUITES = ("braid", "twist", "repr", "fusion", "integrable", "dilute", "all")


def _repr_suite(max_n: int, spec: Specialization) -> VerificationReport:
    rep = VerificationReport("repr")
    dom = domain_for(spec) if spec.kind != "generic" else None
    for m in range(1, min(max_n, 5) + 1):
        rep.extend(verify_rigidity(m) if dom is None else verify_rigidity(m, dom))
    return rep


def _dilute_suite(max_n: int, seed: int) -> VerificationReport:
    rep = VerificationReport("dilute")
    rep.extend(verify_dilute_braiding(min(max_n, 4), seed=seed))
    rep.extend(verify_integrable_suite("dilute-braid", max_n))
    rep.extend(verify_integrable_suite("dilute-IK", max_n))
    return rep


def _run_suite(name: str, max_n: int, spec_text: str, seed: int) -> dict:
    """Run one named suite; module-level so worker processes can call it."""
    spec = Specialization.parse(spec_text)
    if name == "braid":
        rep = verify_braid_suite(max_total=min(max_n, 6), seed=seed)
    elif name == "twist":
        rep = verify_twist_suite(max_n=min(max_n, 6))
    elif name == "repr":
        rep = _repr_suite(max_n, spec)
    elif name == "fusion":
        rep = verify_fusion_suite(max_total=min(max_n + 2, 6), spec=spec,
                                  seed=seed)
    elif name == "integrable":
        rep = verify_integrable_suite("ordinary", max_n)
    elif name == "dilute":
        rep = _dilute_suite(max_n, seed)
    else:
        raise ValueError(f"unknown suite {name!r}")
    return rep.to_json()


def _default_out(filename: str) -> str:
    root = os.environ.get("TLCAT_REPORT_DIR", "reports")
    return os.path.join(root, filename)


def _write_json(path: str, payload: dict):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, indent=2, sort_keys=True, default=str))
        fh.write("\n")


def _cmd_verify(args) -> int:
    try:
        spec = Specialization.parse(args.spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    names = [s for s in SUITES[:-1]] if args.suite == "all" else [args.suite]
    work = [(name, args.max_n, args.spec, args.seed) for name in names]
    if args.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_suite_star, work))
    else:
        results = [_run_suite(*w) for w in work]
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "suite": args.suite,
        "spec": spec.describe(),
        "max_n": args.max_n,
        "seed": args.seed,
        "suites": results,
        "summary": {
            "total": sum(r["summary"]["total"] for r in results),
            "pass": sum(r["summary"]["pass"] for r in results),
            "fail": sum(r["summary"]["fail"] for r in results),
        },
    }
    payload["summary"]["ok"] = payload["summary"]["fail"] == 0
    out = args.out or _default_out(f"verify-{args.suite}.json")
    _write_json(out, payload)
    for r in results:
        mark = "PASS" if r["summary"]["fail"] == 0 else "FAIL"
        print(f"[{mark}] {r['suite']}: {r['summary']['pass']}/"
              f"{r['summary']['total']} checks passed")
    print(f"report written to {out}")
    return 0 if payload["summary"]["ok"] else 1


def _run_suite_star(w):
    return _run_suite(*w)


def _fusion_table(n1: int, k1: int, n2: int, k2: int,
                  spec: Specialization) -> dict:
    N = n1 + n2
    table = {
        "schema": SCHEMA_VERSION,
        "command": "fusion-table",
        "modules": {"n1": n1, "k1": k1, "n2": n2, "k2": k2},
        "spec": spec.describe(),
    }
    if spec.kind in ("generic", "rational"):
        work = generic_rational_spec() if spec.kind == "generic" else spec
        fused, found = fusion_decomposition_generic(n1, k1, n2, k2, work)
        dom = fused.dom
        table["dim"] = fused.dim
        table["summands"] = [
            {"k": k, "multiplicity": m,
             "dim": standard_dimension(N, k),
             "monodromy_eigenvalue":
                 str(Scalar.s_power(2 * k * (k + 2) - 2 * k1 * (k1 + 2)
                                    - 2 * k2 * (k2 + 2)))}
            for k, m in sorted(found.items())
        ]
        mono = fused.monodromy_matrix("braiding")
        table["routes_agree"] = mono == fused.monodromy_matrix("twist")
        table["jordan"] = [
            {"eigenvalue": str(Scalar.s_power(
                2 * k * (k + 2) - 2 * k1 * (k1 + 2) - 2 * k2 * (k2 + 2))),
             "k": k, "blocks": list(jordan_type(mono, monodromy_eigenvalue(
                 k1, k2, k, dom)))}
            for k in sorted(found)
        ]
        return table
    dom = domain_for(spec)
    fused = FusedModule(StandardModule(n1, k1, dom), StandardModule(n2, k2, dom))
    table["dim"] = fused.dim
    try:
        _, found = fusion_decomposition_generic(n1, k1, n2, k2, spec)
        table["summands"] = [
            {"k": k, "multiplicity": m, "dim": standard_dimension(N, k)}
            for k, m in sorted(found.items())
        ]
    except AmbiguousEigenvalue as exc:
        table["summands"] = None
        table["note"] = f"not semisimple at this specialization: {exc}"
    mono = fused.monodromy_matrix("braiding")
    table["routes_agree"] = mono == fused.monodromy_matrix("twist")
    jordan = []
    accounted = 0
    candidates = {monodromy_eigenvalue(k1, k2, k, dom): k
                  for k in expected_summands(k1, k2) if k <= N}
    for lam, k in candidates.items():
        try:
            blocks = jordan_type(mono, lam)
        except EigenvalueMismatch:
            continue
        jordan.append({"eigenvalue": str(lam), "k": k,
                       "blocks": list(blocks)})
        accounted += sum(blocks)
    table["jordan"] = jordan
    table["unaccounted_dimension"] = fused.dim - accounted
    return table


def _cmd_fusion_table(args) -> int:
    try:
        spec = Specialization.parse(args.spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if (args.n1 - args.k1) % 2 or (args.n2 - args.k2) % 2 \
            or not 0 <= args.k1 <= args.n1 or not 0 <= args.k2 <= args.n2:
        print("error: each k must satisfy 0 <= k <= n with n - k even",
              file=sys.stderr)
        return 2
    try:
        table = _fusion_table(args.n1, args.k1, args.n2, args.k2, spec)
    except AmbiguousEigenvalue as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(table, indent=2, sort_keys=True, default=str)
    if args.out:
        _write_json(args.out, table)
        print(f"table written to {args.out}")
    else:
        print(text)
    return 0


def _cmd_eigen(args) -> int:
    n, k = args.module
    if not 0 <= k <= n or (n - k) % 2:
        print("error: need 0 <= k <= n with n - k even", file=sys.stderr)
        return 2
    dim = standard_dimension(n, k)
    dim_lower = standard_dimension(n - 2, k) if n - 2 >= k else 0
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "eigen",
        "module": {"n": n, "k": k, "dim": dim},
        "central_eigenvalue": {
            "s_exponent": 2 * k * (k + 2),
            "q_exponent": f"{k * (k + 2)}/2",
            "value": str(Scalar.s_power(2 * k * (k + 2))),
        },
        "det_t1": {
            "value": str(Scalar.s_power(2 * dim)
                         * (-Scalar.s_power(-8)) ** dim_lower),
            "form": "q^(dim/2) * (-q^-2)^(dim of the (n-2,k) module)",
        },
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_render(args) -> int:
    try:
        obj = parse_renderable(args.object)
    except (ValueError, IndexError) as exc:
        print(f"error: cannot parse {args.object!r}: {exc}", file=sys.stderr)
        return 2
    text = render_svg(obj) if args.format == "svg" else render_ascii(obj) + "\n"
    if args.out:
        directory = os.path.dirname(args.out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"rendered to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlcat",
        description="Exact verification tools for diagram algebras: "
                    "braiding, twists, fusion, and integrability.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=4,
                   help="size bound for exhaustive checks (default 4)")
    p.add_argument("--spec", default="generic",
                   help="'generic', 'root:L', or 'rational:s0'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="report path (default "
                   "$TLCAT_REPORT_DIR/verify-<suite>.json)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fusion-table",
                       help="decompose a fusion product of standard modules")
    p.add_argument("n1", type=int)
    p.add_argument("k1", type=int)
    p.add_argument("n2", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--spec", default="generic")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_fusion_table)

    p = sub.add_parser("eigen",
                       help="central-element eigenvalue on a standard module")
    p.add_argument("--module", type=int, nargs=2, metavar=("N", "K"),
                   required=True)
    p.set_defaults(func=_cmd_eigen)

    p = sub.add_parser("render", help="draw a diagram or linear combination")
    p.add_argument("object", help="text form, e.g. '2x2:[(1,4),(2,3)]'")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code or 0
        return 0 if code == 0 else 2
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
