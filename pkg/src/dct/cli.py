"""``dct``: batch computations on differential cochains with JSON reports.

Exit codes: 0 success, 1 mathematical obstruction (or a failed suite),
2 input or usage error.  Reports go to stdout (or ``--out``) as sorted,
indented JSON, so identical arguments give identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import circle, corpus
from .diffcochain import (
    DiffCochain,
    automorphism_group,
    characteristic_class,
    characteristic_group,
    de_rham_class,
    differential,
    holonomy_table,
    is_cocycle,
)
from .exactalg import AbelianGroupPresentation
from .hodge import decompose, hodge_right_inverse, is_harmonic_trivialization
from .io import (
    SchemaError,
    cochain_from_json,
    cochain_to_json,
    complex_to_json,
    diffcochain_from_json,
    diffcochain_to_json,
    dumps,
    load_complex,
    load_json,
    trivialization_from_json,
    trivialization_to_json,
)
from .products import ProductComplex, diff_product, fiber_integrate, leibniz_residual
from .simplicial import (
    DivisibleCohomology,
    Lattice,
    SimplicialComplex,
    cohomology,
    format_rational,
    homology,
)
from .suites import SUITES, run_suite
from .trivialization import (
    Obstruction,
    Trivialization,
    project,
    torsor_act,
    transport,
    trivialize,
)

OK, OBSTRUCTION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# JSON helpers


def _enc(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_enc(a) for a in v]
    if isinstance(v, dict):
        return {str(k): _enc(a) for k, a in v.items()}
    return v


def _group(G) -> dict:
    if isinstance(G, AbelianGroupPresentation):
        return {"group": str(G), **G.invariants()}
    return {"group": f"V^{G.free_rank}" if G.coefficients == "V" else _divisible_name(G), **G.invariants()}


def _divisible_name(G: DivisibleCohomology) -> str:
    parts = [f"(1/{d})Z/Z" for d in G.torsion] + ["V/L"] * G.free_rank
    return " + ".join(parts) or "0"


def _digest(paths: Sequence[str]) -> str:
    h = hashlib.sha256()
    for p in paths:
        h.update(p.encode())
        if p and Path(p).is_file():
            h.update(Path(p).read_bytes())
    return h.hexdigest()[:16]


# ---------------------------------------------------------------------------
# Loading


def _complex(args) -> SimplicialComplex:
    if not args.complex:
        raise UsageError("--complex is required (a bundled name or a JSON file)")
    return load_complex(args.complex)


def _cocycle(args, K: SimplicialComplex, path: str | None = None, what: str = "--cocycle") -> DiffCochain:
    path = path or args.cocycle
    if not path:
        raise UsageError(f"{what} is required")
    x = diffcochain_from_json(load_json(path), K)
    return x


def _require_cocycle(x: DiffCochain):
    if not is_cocycle(x):
        raise SchemaError("input is not a differential cocycle")


def _trivialization(args, x: DiffCochain) -> Trivialization | Obstruction:
    if getattr(args, "trivialization", None):
        s = trivialization_from_json(load_json(args.trivialization), x.complex)
        if s.x != x:
            raise SchemaError("trivialization does not trivialize the given cocycle")
        return s
    return trivialize(x)


def _invariants(x: DiffCochain) -> dict:
    K = x.complex
    out = {
        "characteristic_class": {"coordinates": list(characteristic_class(x)),
                                 **_group(characteristic_group(x))},
        "curvature": cochain_to_json(x.form()),
        "de_rham_class": _enc(de_rham_class(x)),
    }
    if 0 <= x.k - 1 <= K.dim:
        hb = K.homology_basis(x.k - 1)
        out["holonomy"] = [{"cycle": {"[" + ",".join(map(str, s)) + "]": n
                                      for s, n in zip(K.simplices(x.k - 1), z) if n},
                            "value": format_rational(v)}
                           for z, v in zip(hb.generators, holonomy_table(x))]
    else:
        out["holonomy"] = []
    if x.n == x.k:
        out["automorphisms"] = _group(automorphism_group(x))
    return out


def _projections(s: Trivialization) -> dict:
    top, curv, lift = project(s)
    return {"top": cochain_to_json(top.b), "curv": cochain_to_json(curv.eta),
            "lift_periods": _enc(lift.values())}


# ---------------------------------------------------------------------------
# Commands


def cmd_homology(args) -> tuple[int, dict]:
    K = _complex(args)
    lat = Lattice.parse(args.lattice)
    degrees = [args.degree] if args.degree is not None else list(range(K.dim + 1))
    rows = []
    for k in degrees:
        rows.append({
            "degree": k,
            "homology": _group(homology(K, k)),
            "cohomology_L": _group(cohomology(K, k, "L", lat)),
            "cohomology_V": _group(cohomology(K, k, "V", lat)),
            "cohomology_V/L": _group(cohomology(K, k, "V/L", lat)),
        })
    return OK, {"complex": complex_to_json(K), "lattice": str(lat), "groups": rows}


def cmd_check(args) -> tuple[int, dict]:
    K = _complex(args)
    x = _cocycle(args, K)
    ok = is_cocycle(x)
    out: dict = {"grade": {"n": x.n, "k": x.k}, "lattice": str(x.lattice), "is_cocycle": ok}
    if ok:
        out["invariants"] = _invariants(x)
    else:
        out["differential"] = diffcochain_to_json(differential(x))
    return (OK if ok else OBSTRUCTION), out


def cmd_invariants(args) -> tuple[int, dict]:
    K = _complex(args)
    x = _cocycle(args, K)
    _require_cocycle(x)
    return OK, {"grade": {"n": x.n, "k": x.k}, "invariants": _invariants(x)}


def cmd_trivialize(args) -> tuple[int, dict]:
    K = _complex(args)
    x = _cocycle(args, K)
    _require_cocycle(x)
    s = trivialize(x)
    if isinstance(s, Obstruction):
        return _obstructed(s)
    return OK, {"trivializable": True, "trivialization": trivialization_to_json(s),
                "projections": _projections(s)}


def _obstructed(s) -> tuple[int, dict]:
    return OBSTRUCTION, {"trivializable": False,
                         "obstruction": {"coordinates": list(s.coordinates), **_group(s.group)}}


def cmd_act(args) -> tuple[int, dict]:
    K = _complex(args)
    x = _cocycle(args, K)
    _require_cocycle(x)
    y = _cocycle(args, K, args.by, "--by")
    s = _trivialization(args, x)
    if isinstance(s, Obstruction):
        return _obstructed(s)
    s2 = torsor_act(s, y)
    return OK, {"before": trivialization_to_json(s), "after": trivialization_to_json(s2),
                "projections_before": _projections(s), "projections_after": _projections(s2)}


def cmd_transport(args) -> tuple[int, dict]:
    K = _complex(args)
    x = _cocycle(args, K)
    _require_cocycle(x)
    y = _cocycle(args, K, args.morphism, "--morphism")
    s = _trivialization(args, x)
    if isinstance(s, Obstruction):
        return _obstructed(s)
    s2 = transport(s, y)
    return OK, {"target": diffcochain_to_json(s2.x), "trivialization": trivialization_to_json(s2)}


def cmd_hodge(args) -> tuple[int, dict]:
    K = _complex(args)
    if args.cochain:
        c = cochain_from_json(load_json(args.cochain), K)
        d = decompose(c)
        return OK, {"harmonic": cochain_to_json(d.harmonic), "exact": cochain_to_json(d.exact),
                    "coexact": cochain_to_json(d.coexact)}
    x = _cocycle(args, K)
    _require_cocycle(x)
    s = _trivialization(args, x)
    if isinstance(s, Obstruction):
        return _obstructed(s)
    lift = project(s)[2]
    curv = hodge_right_inverse(lift)
    return OK, {"lift_periods": _enc(lift.values()), "harmonic_eta": cochain_to_json(curv.eta),
                "input_is_harmonic": is_harmonic_trivialization(s)}


def cmd_product(args) -> tuple[int, dict]:
    K = _complex(args)
    x1 = _cocycle(args, K)
    x2 = _cocycle(args, K, args.with_, "--with")
    p = diff_product(x1, x2)
    return OK, {"product": diffcochain_to_json(p), "is_cocycle": is_cocycle(p),
                "leibniz_residual_zero": leibniz_residual(x1, x2).is_zero()}


def cmd_integrate(args) -> tuple[int, dict]:
    if not (args.base and args.fiber):
        raise UsageError("--base and --fiber are required")
    P = ProductComplex(load_complex(args.base), load_complex(args.fiber))
    src = {"product": P.complex, "base": P.base, "fiber": P.fiber}[args.source]
    x = _cocycle(args, src)
    if args.source != "product":
        x = P.pullback(x, args.source)
    ix = fiber_integrate(P, x)
    return OK, {"product_complex": complex_to_json(P.complex), "fundamental_cycle": list(P.fundamental_cycle.coefficients),
                "integrand": diffcochain_to_json(x), "integral": diffcochain_to_json(ix),
                "stokes": differential(ix) == fiber_integrate(P, differential(x))}


def cmd_verify(args) -> tuple[int, dict]:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    complexes = [args.complex] if args.complex else None
    if args.complex and args.complex not in corpus.COMPLEXES:
        raise UsageError("verify --complex takes a bundled complex name")
    r = run_suite(args.suite, args.trials, args.seed, complexes)
    return (OK if r.passed else OBSTRUCTION), r.to_json()


def cmd_demo(args) -> tuple[int, dict]:
    x = circle.example(args.example)
    K = x.complex
    view = circle.interpret(x)
    out: dict = {
        "example": args.example,
        "complex": complex_to_json(K),
        "cocycle": diffcochain_to_json(x),
        "bundle": {"holonomy": _enc(view.holonomy), "class": list(view.class_coordinates),
                   "curvature": cochain_to_json(view.curvature), "trivializable": view.trivializable},
        "invariants": _invariants(x),
        "torsion_free_check": circle.torsion_free_check(K),
    }
    s = trivialize(x)
    if isinstance(s, Obstruction):
        out["section"] = None
        out["obstruction"] = {"coordinates": list(s.coordinates), **_group(s.group)}
    else:
        rep = circle.section_report(s)
        out["section"] = {"trivialization": trivialization_to_json(s),
                          "section_class": list(rep.section_class),
                          "connection": cochain_to_json(rep.connection), "lift": _enc(rep.lift)}
    return OK, out


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--complex", help="bundled complex name or complex JSON file")
    common.add_argument("--cocycle", help="differential cochain JSON file")
    common.add_argument("--lattice", default="1", help="lattice generator α as p/q (default 1)")
    common.add_argument("--degree", type=int, help="restrict to one degree")
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the report here instead of stdout")

    p = _Parser(prog="dct", description="Exact computations with differential cocycles on simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("homology", parents=[common], help="homology and cohomology groups")
    sub.add_parser("check", parents=[common], help="cocycle validity and invariants")
    sub.add_parser("invariants", parents=[common], help="class, curvature and holonomy")
    sub.add_parser("trivialize", parents=[common], help="solve ds = x or report the obstruction")
    a = sub.add_parser("act", parents=[common], help="act on a trivialization by a degree-(k-1) cocycle")
    a.add_argument("--by", required=True, help="cocycle in Ž(k-1)^(k-1)")
    a.add_argument("--trivialization", help="trivialization JSON (default: the solver's)")
    tr = sub.add_parser("transport", parents=[common], help="transport a trivialization along a morphism")
    tr.add_argument("--morphism", required=True, help="element of Č(k)^(k-1)")
    tr.add_argument("--trivialization")
    h = sub.add_parser("hodge", parents=[common], help="Hodge decomposition or harmonic trivialization")
    h.add_argument("--cochain", help="cochain JSON file to decompose")
    h.add_argument("--trivialization")
    pr = sub.add_parser("product", parents=[common], help="product of differential cochains")
    pr.add_argument("--with", dest="with_", required=True, help="second factor")
    i = sub.add_parser("integrate", parents=[common], help="fibre integration over base × fibre")
    i.add_argument("--base", help="base complex")
    i.add_argument("--fiber", help="fibre complex (closed, oriented)")
    i.add_argument("--from", dest="source", choices=("product", "base", "fiber"), default="product",
                   help="complex the cocycle lives on; base/fibre cocycles are pulled back first")
    v = sub.add_parser("verify", parents=[common], help="run a randomized verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    d = sub.add_parser("demo", parents=[common], help="worked examples")
    d.add_argument("topic", choices=("circle",))
    d.add_argument("--example", default="flat-third", choices=sorted(circle.EXAMPLES))
    return p


COMMANDS = {
    "homology": cmd_homology, "check": cmd_check, "invariants": cmd_invariants,
    "trivialize": cmd_trivialize, "act": cmd_act, "transport": cmd_transport, "hodge": cmd_hodge,
    "product": cmd_product, "integrate": cmd_integrate, "verify": cmd_verify, "demo": cmd_demo,
}


def _emit(report: dict, out: str | None):
    text = dumps(report)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = args.out
        code, body = COMMANDS[args.command](args)
        paths = [getattr(args, n, None) or "" for n in ("complex", "cocycle", "by", "morphism",
                                                         "trivialization", "cochain", "with_", "base", "fiber")]
        report = {"command": argv, "inputs_digest": _digest(paths), "exit_code": code, "result": body}
        if args.command == "verify":
            report["seed"] = args.seed
    except (UsageError, SchemaError, ValueError, KeyError) as e:
        kind = "usage" if isinstance(e, UsageError) else "input"
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        code, report = USAGE, {"command": argv, "exit_code": USAGE,
                               "error": {"kind": kind, "type": type(e).__name__, "message": str(msg)}}
    _emit(report, out)
    if os.environ.get("DCT_COLOR") == "1":
        colour = {OK: "32", OBSTRUCTION: "33", USAGE: "31"}[code]
        sys.stderr.write(f"\x1b[{colour}m{['ok', 'obstruction', 'error'][code]}\x1b[0m\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
