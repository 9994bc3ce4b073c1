"""Command-line front end: ``gentle-derived SUBCOMMAND ...``.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.  Data goes to
stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import dsl
from .arquiver import ar_window, summary_gamma, summary_gamma_prime, summary_lambda
from .covering import (
    CoveringQuiver,
    enumerate_window,
    ext1_dim,
    hom_dim,
    parse_interval,
    window_oracle_ext,
    window_oracle_hom,
)
from .errors import GentleError, UnsupportedShape
from .gentle import check_gentle, clock_invariants, has_finite_global_dimension, signed_cycle_degree
from .normal_form import conjecture_check, derived_equivalent, normal_form, parse_normal_form
from .orbit import (
    OrbitObject,
    derived_component,
    derived_families,
    orbit_hom_dim,
    orbit_hom_dim_summation,
    verify_suspension,
    verify_tau_sigma,
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- rendering


def flatten(data, prefix: str = "") -> List[str]:
    """``key.path: value`` lines carrying exactly the data of the JSON form."""
    if isinstance(data, dict):
        out = []
        for k, v in data.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return out or [f"{prefix}: {{}}"]
    if isinstance(data, list):
        out = []
        for i, v in enumerate(data):
            out += flatten(v, f"{prefix}[{i}]")
        return out or [f"{prefix}: []"]
    return [f"{prefix}: {json.dumps(data)}"]


def emit(data: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write("\n".join(flatten(data)) + "\n")


# ---------------------------------------------------------------- inputs


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help=".gq file ('-' for stdin)")
    p.add_argument("--gamma", nargs=3, type=int, metavar=("P", "Q", "R"))
    p.add_argument("--gamma-prime", nargs=2, type=int, metavar=("Q", "R"))
    p.add_argument("--lambda", dest="lam", nargs=4, type=int, metavar=("R", "N", "M", "D"))
    p.add_argument("--builtin", metavar="SPEC", help="e.g. 'Lambda(1,2,0,1)'")


def _load(args):
    given = [x for x in (args.file, args.gamma, args.gamma_prime, args.lam, args.builtin) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one input: FILE, --gamma, --gamma-prime, --lambda or --builtin")
    if args.file is not None:
        text = sys.stdin.read() if args.file == "-" else _read(args.file)
        return dsl.parse(text)
    if args.gamma:
        return dsl.gamma(*args.gamma)
    if args.gamma_prime:
        return dsl.gamma_prime(*args.gamma_prime)
    if args.lam:
        return dsl.lambda_family(*args.lam)
    return dsl.builtin(args.builtin)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _quiver(args) -> CoveringQuiver:
    return CoveringQuiver(*args.gamma)


# ---------------------------------------------------------------- subcommands


def cmd_analyze(args, out) -> int:
    P = _load(args)
    gr = check_gentle(P)
    data = {"gentle": gr.as_dict(), "clock": None, "signed_cycle_degree": None, "finite_global_dimension": None}
    if gr.is_gentle:
        data["finite_global_dimension"] = has_finite_global_dimension(P)
        if gr.cycle_count == 1 and gr.connected:
            data["clock"] = clock_invariants(P).as_dict()
            data["signed_cycle_degree"] = signed_cycle_degree(P)
    emit(data, args.json, out)
    return 0


def cmd_normal_form(args, out) -> int:
    P = _load(args)
    try:
        nf = normal_form(P)
    except UnsupportedShape as e:
        data = {"normal_form": None, "supported": False, "report": e.report}
        emit(data, args.json, out)
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.json:
        emit({"normal_form": str(nf), "supported": True, "report": None}, True, out)
    else:
        out.write(f"{nf}\n")
    return 0


def cmd_equiv(args, out) -> int:
    try:
        a, b = parse_normal_form(args.nf1), parse_normal_form(args.nf2)
    except GentleError as e:
        raise UsageError(str(e)) from None
    verdict = derived_equivalent(a, b)
    if args.json:
        emit({"left": str(a), "right": str(b), "derived_equivalent": verdict}, True, out)
    else:
        out.write(f"derived-equivalent: {str(verdict).lower()}\n")
    return 0


def cmd_summary(args, out) -> int:
    given = [x for x in (args.gamma, args.gamma_prime, args.lam) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --gamma, --gamma-prime, --lambda")
    if args.gamma:
        s = summary_gamma(*args.gamma, samples=args.samples, seed=args.seed)
    elif args.gamma_prime:
        s = summary_gamma_prime(*args.gamma_prime, samples=args.samples, seed=args.seed)
    else:
        s = summary_lambda(*args.lam, samples=args.samples, seed=args.seed)
    emit(s.as_dict(), args.json, out)
    return 0


def _parse_shifts(text: str):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(text), int(text)
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--shifts expects LO..HI, got {text!r}") from None


def _interval_arg(text: str, Q: CoveringQuiver):
    try:
        return parse_interval(text, Q)
    except GentleError as e:
        raise UsageError(str(e)) from None


def cmd_hom(args, out) -> int:
    Q = _quiver(args)
    X = OrbitObject(_interval_arg(args.x, Q))
    Y = OrbitObject(_interval_arg(args.y, Q))
    lo, hi = _parse_shifts(args.shifts)
    rows = [{"n": n, "dim": orbit_hom_dim(X, Y, n)} for n in range(lo, hi + 1)]
    data = {"params": {"p": Q.p, "q": Q.q, "r": Q.r}, "x": str(X), "y": str(Y), "rows": rows}
    if args.json:
        emit(data, True, out)
    else:
        out.write(f"Hom({X}, Sigma^n {Y}) over {Q}\n")
        out.write("n\tdim\n")
        for row in rows:
            out.write(f"{row['n']}\t{row['dim']}\n")
    return 0


def _write(path: str, text: str, out):
    if path == "-":
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


def cmd_ar_window(args, out) -> int:
    Q = _quiver(args)
    C = OrbitObject(_interval_arg(args.center, Q))
    family = args.family or derived_component(C).family
    W = ar_window(Q, family, C, args.radius)
    if args.dot:
        _write(args.dot, W.to_dot(), out)
    else:
        _write(args.json, W.to_json() + "\n", out)
    if (args.dot or args.json) != "-":
        out.write(f"family {family}: {len(W.nodes)} nodes, {len(W.edges)} edges, {len(W.meshes)} meshes\n")
    return 0


def verify_report(Q: CoveringQuiver, samples: int, seed: int) -> dict:
    """tau-Sigma relations, suspension action and oracle agreement, all from one seed."""
    rng = random.Random(seed)
    fams = derived_families(Q)
    tau = [verify_tau_sigma(Q, f, samples, seed).as_dict() for f in fams]
    sus = [verify_suspension(Q, f, samples, seed).as_dict() for f in fams]
    span = 2 * Q.n + 2
    pool = [M for j in range(Q.copies) for M in enumerate_window(Q, -span, span, j)]
    finite = [M for M in pool if M.finite]
    pairs = max(samples, 1) * 10
    hom_ok = ext_ok = orb_ok = 0
    for _ in range(pairs):
        M, N = rng.choice(finite), rng.choice(pool)
        hom_ok += hom_dim(M, N) == window_oracle_hom(M, N)
        ext_ok += ext1_dim(M, N) == window_oracle_ext(M, N)
        X, Y = OrbitObject(M), OrbitObject(rng.choice(finite))
        n = rng.randint(-2, 2)
        orb_ok += orbit_hom_dim(X, Y, n) == orbit_hom_dim_summation(X, Y, n)
    regular = [t for t in tau if t["family"] != "P"]
    ok = (
        hom_ok == ext_ok == orb_ok == pairs
        and all(s["order"] == Q.copies and s["shifts_copy_down"] for s in sus)
        and all(t["relation"] is not None for t in regular)
    )
    return {
        "params": {"p": Q.p, "q": Q.q, "r": Q.r},
        "samples": samples,
        "seed": seed,
        "tau_sigma": tau,
        "suspension": sus,
        "oracle": {"pairs": pairs, "hom_agree": hom_ok, "ext_agree": ext_ok, "orbit_agree": orb_ok},
        "ok": ok,
    }


def cmd_verify(args, out) -> int:
    data = verify_report(_quiver(args), args.samples, args.seed)
    emit(data, args.json, out)
    return 0 if data["ok"] else 1


def cmd_check_conjecture(args, out) -> int:
    rep = conjecture_check(_load(args))
    emit(rep.as_dict(), args.json, out)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gentle-derived", description="Derived-equivalence toolkit for graded gentle one-cycle algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="gentleness, clock invariants, global-dimension finiteness")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("normal-form", help="Gamma(p,q,r) / GammaPrime(q,r) normal form")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("equiv", help="decide derived equivalence of two normal forms")
    p.add_argument("nf1")
    p.add_argument("nf2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("summary", help="AR quiver component inventory")
    p.add_argument("--gamma", nargs=3, type=int, metavar=("P", "Q", "R"))
    p.add_argument("--gamma-prime", nargs=2, type=int, metavar=("Q", "R"))
    p.add_argument("--lambda", dest="lam", nargs=4, type=int, metavar=("R", "N", "M", "D"))
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_summary)

    p = sub.add_parser("hom", help="orbit-category Hom dimensions over a range of shifts")
    p.add_argument("--gamma", nargs=3, type=int, metavar=("P", "Q", "R"), required=True)
    p.add_argument("--x", required=True, help='e.g. "M(0;1,0)"')
    p.add_argument("--y", required=True)
    p.add_argument("--shifts", default="0..0", help="LO..HI")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("ar-window", help="mesh window around an object, as DOT or JSON")
    p.add_argument("--gamma", nargs=3, type=int, metavar=("P", "Q", "R"), required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--family", help="defaults to the component of the center")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dot", metavar="PATH")
    g.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_ar_window)

    p = sub.add_parser("verify", help="tau-Sigma relations, suspension action, oracle agreement")
    p.add_argument("--gamma", nargs=3, type=int, metavar=("P", "Q", "R"), required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-conjecture", help="graded clock condition vs normal form with r = 0")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_conjecture)
    return ap


def _glue_negative_values(argv: List[str]) -> List[str]:
    """Let ``--shifts -2..2`` through: argparse would read ``-2..2`` as an option."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--shifts" and i + 1 < len(argv):
            out.append(f"--shifts={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except dsl.ParseError as e:
        print(f"parse error:\n{e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except GentleError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
