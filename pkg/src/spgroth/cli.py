"""Command-line surface: compute / expand / verify / sweep.

Output is canonical and byte-identical across runs.  Exit codes: 0 success,
2 parse error, 3 precondition violation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coxeter as cx
from . import stable as st
from .grothendieck import (
    ExpansionDegreeError,
    beta_rescale_check,
    expand_in_grothendieck_basis,
    grothendieck,
    schubert,
    sp_grothendieck,
    sp_transition_recurrence,
    verify_lenart_transition,
    verify_sp_transition,
)
from .polyring import MultiPoly

SCHEMA_VERSION = 1

VERIFY_NAMES = ("lenart-transition", "sp-transition", "sp-recurrence", "f-grass",
                "stable-sp-transition", "beta-rescale")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_error(msg: str) -> CliError:
    return CliError(msg, 2)


def _precondition_error(msg: str) -> CliError:
    return CliError(msg, 3)


def _window(args) -> st.Window:
    return st.Window(args.nvars, args.maxdeg)


def _parse(kind: str, text: str):
    try:
        if kind == "perm":
            return cx.parse_permutation(text)
        if kind == "fpf":
            return cx.parse_fpf(text)
        if kind == "partition":
            return cx.parse_partition(text)
        if kind == "strict":
            return cx.as_strict_partition(cx.parse_partition(text))
    except ValueError as exc:
        raise _parse_error(f"cannot parse {kind} element {text!r}: {exc}") from exc
    raise AssertionError(kind)


def _emit_poly(f: MultiPoly, args, meta: dict) -> None:
    if args.format == "json":
        obj = {"schema_version": SCHEMA_VERSION, **meta,
               "nvars": f.nvars, "terms": f.to_json_obj()}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(f.canonical_text())


def _expansion_rows(terms, fmt_element) -> list[dict]:
    return [{"element": fmt_element(el), "coef": list(c.coeffs)} for el, c in terms]


def _emit_expansion(rows: list[dict], args, meta: dict) -> None:
    if args.format == "json":
        obj = {"schema_version": SCHEMA_VERSION, **meta, "terms": rows}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for row in rows:
            coef = "[" + ",".join(str(c) for c in (row["coef"] or [0])) + "]"
            print(f"{row['element']}: {coef}")


def cmd_compute(args) -> int:
    win = _window(args)
    obj = args.object
    if obj == "groth":
        f = grothendieck(_parse("perm", args.element))
    elif obj == "schubert":
        f = schubert(_parse("perm", args.element))
    elif obj == "sp-groth":
        f = sp_grothendieck(_parse("fpf", args.element))
    elif obj == "G":
        f = st.stable_groth_partition(_parse("partition", args.element), win)
    elif obj == "GP":
        f = st.gp_partition(_parse("strict", args.element), win)
    elif obj == "GP-sp":
        f = st.gp_sp(_parse("fpf", args.element), win)
    else:
        raise AssertionError(obj)
    _emit_poly(f, args, {"command": "compute", "object": obj, "element": args.element})
    return 0


def cmd_expand(args) -> int:
    win = _window(args)
    obj = args.object
    basis = args.basis or {"groth": "groth", "schubert": "groth", "sp-groth": "groth",
                           "G": "G", "GP": "GP", "GP-sp": "GP"}[obj]
    if obj == "groth":
        f = grothendieck(_parse("perm", args.element))
    elif obj == "schubert":
        f = schubert(_parse("perm", args.element))
    elif obj == "sp-groth":
        f = sp_grothendieck(_parse("fpf", args.element))
    elif obj == "G":
        f = st.stable_groth_partition(_parse("partition", args.element), win)
    elif obj == "GP":
        f = st.gp_partition(_parse("strict", args.element), win)
    elif obj == "GP-sp":
        f = st.gp_sp(_parse("fpf", args.element), win)
    else:
        raise AssertionError(obj)

    meta = {"command": "expand", "object": obj, "element": args.element, "basis": basis,
            "window": {"nvars": win.nvars, "maxdeg": win.maxdeg}}
    try:
        if basis == "groth":
            exp = expand_in_grothendieck_basis(f, args.max_expansion_degree)
            rows = _expansion_rows(exp.terms, lambda w: cx.format_word(w.oneline))
        elif basis == "G":
            exp = st.expand_in_G_basis(f, win)
            rows = _expansion_rows(exp.terms, cx.format_partition)
            meta["censored_beyond"] = {"size": win.maxdeg, "rows": win.nvars}
        else:
            exp = st.expand_in_GP_basis(f, win)
            rows = _expansion_rows(exp.terms, cx.format_partition)
            meta["censored_beyond"] = {"size": win.maxdeg, "parts": win.nvars}
    except (ExpansionDegreeError, ValueError) as exc:
        raise _precondition_error(str(exc)) from exc
    _emit_expansion(rows, args, meta)
    return 0


def _run_verify(name: str, args) -> tuple[bool, str]:
    win = _window(args)
    if name == "lenart-transition":
        if args.k is None:
            raise _precondition_error("lenart-transition needs --k")
        chk = verify_lenart_transition(_parse("perm", args.element), args.k)
        detail = (f"lhs = {chk.lhs.canonical_text()}\nrhs = {chk.rhs.canonical_text()}")
        return chk.equal and bool(chk.signed_equal), detail
    if name == "sp-transition":
        if args.j is None or args.k is None:
            raise _precondition_error("sp-transition needs --j and --k")
        v = _parse("fpf", args.element)
        try:
            chk = verify_sp_transition(v, args.j, args.k)
        except ValueError as exc:
            raise _precondition_error(str(exc)) from exc
        return chk.equal, f"lhs = {chk.lhs.canonical_text()}\nrhs = {chk.rhs.canonical_text()}"
    if name == "sp-recurrence":
        z = _parse("fpf", args.element)
        try:
            chk = sp_transition_recurrence(z)
        except ValueError as exc:
            raise _precondition_error(str(exc)) from exc
        return chk.certified, f"lhs = {chk.lhs.canonical_text()}\nrhs = {chk.rhs.canonical_text()}"
    if name == "f-grass":
        z = _parse("fpf", args.element)
        try:
            if cx.is_fpf_grassmannian(z) is None:
                raise ValueError(f"{z!r} is not FPF-Grassmannian")
            lhs = st.gp_sp(z, win)
            rhs = st.gp_partition(cx.sp_shape(z), win)
        except ValueError as exc:
            raise _precondition_error(str(exc)) from exc
        return lhs == rhs, f"lhs = {lhs.canonical_text()}\nrhs = {rhs.canonical_text()}"
    if name == "stable-sp-transition":
        if args.j is None or args.k is None:
            raise _precondition_error("stable-sp-transition needs --j and --k")
        try:
            z = cx.ShiftedFpfInvolution(_parse("fpf", args.element), args.offset)
            ok = st.verify_stable_sp_transition(z, args.j, args.k, win)
        except ValueError as exc:
            raise _precondition_error(str(exc)) from exc
        return ok, f"window nvars={win.nvars} maxdeg={win.maxdeg}"
    if name == "beta-rescale":
        return beta_rescale_check(_parse("perm", args.element)), ""
    raise _parse_error(f"unknown identity {name!r}")


def cmd_verify(args) -> int:
    ok, detail = _run_verify(args.identity, args)
    if args.format == "json":
        obj = {"schema_version": SCHEMA_VERSION, "command": "verify",
               "identity": args.identity, "element": args.element,
               "result": "PASS" if ok else "FAIL"}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print("PASS" if ok else "FAIL")
        if not ok and detail:
            print(detail)
    return 0 if ok else 4


def _sweep_cases(identity: str, rank: int, win: st.Window):
    """Yield (label, bool) per identity instance at the given rank."""
    if identity == "lenart-transition":
        for v in cx.all_permutations(rank):
            for k in range(1, rank + 2):
                chk = verify_lenart_transition(v, k)
                yield (f"{cx.format_word(v.oneline)} k={k}",
                       chk.equal and bool(chk.signed_equal))
    elif identity == "sp-transition":
        for v in cx.all_fpf_involutions(rank):
            for a, b in v.cycles_in_rank(rank):
                yield (f"{cx.format_word(v.oneline)} (j,k)=({a},{b})",
                       verify_sp_transition(v, a, b).equal)
    elif identity == "sp-recurrence":
        for z in cx.all_fpf_involutions(rank):
            if z == cx.FpfInvolution.theta_involution():
                continue
            yield (cx.format_word(z.oneline), sp_transition_recurrence(z).certified)
    elif identity == "f-grass":
        for z in cx.all_fpf_involutions(rank):
            if cx.is_fpf_grassmannian(z) is not None:
                yield (cx.format_word(z.oneline), st.verify_f_grass(z, win))
    elif identity == "stable-sp-transition":
        for z in cx.all_fpf_involutions(rank):
            for a, b in z.cycles_in_rank(rank):
                for half_offset in (0, 1):
                    v = cx.ShiftedFpfInvolution(cx.shift_fpf(half_offset, z), 2 * half_offset)
                    yield (f"{cx.format_word(z.oneline)} (j,k)=({a},{b}) off={2 * half_offset}",
                           st.verify_stable_sp_transition(v, a, b, win))
    elif identity == "beta-rescale":
        for w in cx.all_permutations(rank):
            yield (cx.format_word(w.oneline), beta_rescale_check(w))
    else:
        raise _parse_error(f"unknown identity {identity!r}")


def cmd_sweep(args) -> int:
    if args.identity in ("sp-transition", "sp-recurrence", "f-grass",
                         "stable-sp-transition") and args.rank % 2:
        raise _precondition_error("this identity sweeps involutions: --rank must be even")
    win = _window(args)
    failures = []
    total = 0
    for label, ok in _sweep_cases(args.identity, args.rank, win):
        total += 1
        if not ok:
            failures.append(label)
    if args.format == "json":
        obj = {"schema_version": SCHEMA_VERSION, "command": "sweep",
               "identity": args.identity, "rank": args.rank, "total": total,
               "failures": failures}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    elif failures:
        print(f"{len(failures)}/{total} identities FAIL")
        for label in failures:
            print(f"FAIL: {label}")
    else:
        print(f"all {total} identities PASS")
    return 0 if not failures else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spgroth",
        description="Exact computations with (symplectic) Grothendieck polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--nvars", type=int, default=4)
        p.add_argument("--maxdeg", type=int, default=6)
        p.add_argument("--format", choices=("text", "json"), default="text")

    objects = ("groth", "schubert", "sp-groth", "G", "GP", "GP-sp")

    p = sub.add_parser("compute", help="print a polynomial in canonical form")
    p.add_argument("object", choices=objects)
    p.add_argument("element")
    add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("expand", help="print a basis expansion")
    p.add_argument("object", choices=objects)
    p.add_argument("element")
    p.add_argument("--basis", choices=("groth", "G", "GP"))
    p.add_argument("--max-expansion-degree", type=int, default=16)
    add_common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check a named identity on one element")
    p.add_argument("identity", choices=VERIFY_NAMES)
    p.add_argument("element")
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--offset", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check a named identity exhaustively at a rank")
    p.add_argument("identity", choices=VERIFY_NAMES)
    p.add_argument("--rank", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
