"""Command-line front end.

Exit codes: 0 success (or "conjugate"), 1 not conjugate / invalid context,
2 error.  ``--json`` wraps every result in a stable schema with the keys
``result``, ``certificate`` and ``diagnostics``.  The default context file
can be supplied through the environment variable FREECONJ_CTX.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import backend
from .automorphisms import (
    ContextError,
    VIContext,
    inner_context,
    load_context,
    verify_vi,
)
from .delta import delta_reduce, delta_scan
from .extension import format_element, parse_element, verify_certificate
from .normal_form import are_conjugate, normal_form_details
from .oracle import brute_force_conjugacy
from .presets import artin
from .shift import (
    format_shift_element,
    parse_shift_element,
    shift_are_conjugate,
    shift_normal_form,
)
from .words import ParseError, cyclically_reduce, format_word, parse_word

SHIFT_GROUP = "shift"


class CliError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--group",
        help="'artin:<m>' for the two-generator Artin presets, or 'shift' "
        "for the countably generated shift extension",
    )
    p.add_argument("--ctx", help="path to a JSON context file")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _resolve_group(args) -> VIContext | str | None:
    if args.group and args.ctx:
        raise CliError("--group and --ctx are mutually exclusive")
    if args.group:
        if args.group == SHIFT_GROUP:
            return SHIFT_GROUP
        if args.group.startswith("artin:"):
            try:
                return artin(int(args.group.split(":", 1)[1]))
            except ValueError as e:
                raise CliError(str(e))
        raise CliError(f"unknown group {args.group!r}")
    path = args.ctx or os.environ.get("FREECONJ_CTX")
    if path:
        try:
            return load_context(path)
        except (OSError, ContextError, KeyError, ValueError) as e:
            raise CliError(f"cannot load context {path}: {e}")
    return None


def _require_vi(args) -> VIContext:
    ctx = _resolve_group(args)
    if ctx is None:
        raise CliError("this command needs --group artin:<m> or --ctx FILE")
    if ctx == SHIFT_GROUP:
        raise CliError("this command needs a finite-rank context, not --group shift")
    return ctx


def _emit(args, result, certificate=None, diagnostics=None, text=None):
    if args.json:
        payload = {
            "result": result,
            "certificate": certificate,
            "diagnostics": diagnostics or {},
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text if text is not None else result)


# -- subcommands -------------------------------------------------------------


def _cmd_reduce(args) -> int:
    ctx = _resolve_group(args)
    rank = ctx.rank if isinstance(ctx, VIContext) else None
    w = parse_word(args.word, rank=rank)
    _emit(args, {"word": format_word(w), "length": len(w)}, text=format_word(w))
    return 0


def _cmd_cyclic_reduce(args) -> int:
    ctx = _resolve_group(args)
    rank = ctx.rank if isinstance(ctx, VIContext) else None
    w = parse_word(args.word, rank=rank)
    core, s = cyclically_reduce(w)
    _emit(
        args,
        {"core": format_word(core), "conjugator": format_word(s)},
        text=f"{format_word(core)}  (conjugator {format_word(s)})",
    )
    return 0


def _cmd_delta_reduce(args) -> int:
    if args.delta is not None:
        if args.group or args.ctx:
            raise CliError("--delta replaces --group/--ctx for this command")
        d = parse_word(args.delta, rank=args.rank)
        ctx = inner_context(d, rank=args.rank)
    else:
        ctx = _require_vi(args)
    w = parse_word(args.word, rank=ctx.rank)
    reduced, k = delta_reduce(ctx, w)
    scan = delta_scan(ctx, w)
    profile = {str(j): scan.profile[j] for j in sorted(scan.profile)}
    _emit(
        args,
        {"word": format_word(reduced), "exponent": k},
        diagnostics={"profile": profile},
        text=f"{format_word(reduced)}  (exponent {k})\n"
        + "profile: "
        + " ".join(f"{j}:{scan.profile[j]}" for j in sorted(scan.profile)),
    )
    return 0


def _cmd_nf(args) -> int:
    ctx = _resolve_group(args)
    if ctx == SHIFT_GROUP:
        return _cmd_shift_nf(args)
    if ctx is None:
        raise CliError("nf needs --group or --ctx")
    v = parse_element(args.element, rank=ctx.rank)
    res = normal_form_details(ctx, v)
    diag = {"dbar_size": res.dbar_size, "iterations": res.iterations}
    if not ctx.minimality_verified:
        diag["warning"] = "non-minimal m not ruled out for this context"
    _emit(
        args,
        {"normal_form": format_element(res.normal_form)},
        certificate=format_element(res.certificate.conjugator),
        diagnostics=diag,
        text=f"{format_element(res.normal_form)}\n"
        f"certificate: {format_element(res.certificate.conjugator)}\n"
        f"dbar size: {res.dbar_size}",
    )
    return 0


def _cmd_conj(args) -> int:
    ctx = _resolve_group(args)
    if ctx == SHIFT_GROUP:
        return _cmd_shift_conj(args)
    if ctx is None:
        raise CliError("conj needs --group or --ctx")
    u = parse_element(args.element1, rank=ctx.rank)
    v = parse_element(args.element2, rank=ctx.rank)
    ok, cert = are_conjugate(ctx, u, v)
    if ok and not verify_certificate(ctx, u, v, cert):
        raise CliError("internal error: certificate failed to replay")
    _emit(
        args,
        {"conjugate": ok},
        certificate=format_element(cert.conjugator) if ok else None,
        text=(
            f"conjugate  (certificate {format_element(cert.conjugator)})"
            if ok
            else "not conjugate"
        ),
    )
    return 0 if ok else 1


def _cmd_shift_nf(args) -> int:
    v = parse_shift_element(getattr(args, "element"))
    nf, cert = shift_normal_form(v)
    _emit(
        args,
        {"normal_form": format_shift_element(nf)},
        certificate=format_shift_element(cert.conjugator),
        text=format_shift_element(nf),
    )
    return 0


def _cmd_shift_conj(args) -> int:
    u = parse_shift_element(args.element1)
    v = parse_shift_element(args.element2)
    ok = shift_are_conjugate(u, v)
    _emit(args, {"conjugate": ok}, text="conjugate" if ok else "not conjugate")
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    ctx = _require_vi(args)
    u = parse_element(args.element1, rank=ctx.rank)
    v = parse_element(args.element2, rank=ctx.rank)
    cert = brute_force_conjugacy(ctx, u, v, args.len, args.toff)
    if cert is None:
        _emit(args, {"witness": None}, text="no witness within bounds")
        return 1
    _emit(
        args,
        {"witness": format_element(cert.conjugator)},
        certificate=format_element(cert.conjugator),
        text=f"witness: {format_element(cert.conjugator)}",
    )
    return 0


def _cmd_verify_ctx(args) -> int:
    ctx = _resolve_group(args)
    if ctx is None or ctx == SHIFT_GROUP:
        raise CliError("verify-ctx needs --ctx FILE or --group artin:<m>")
    rep = verify_vi(ctx, check_minimality=not args.no_minimality)
    _emit(
        args,
        {"valid": rep.ok, "failures": rep.failures, "warnings": rep.warnings},
        text="valid"
        if rep.ok
        else "invalid:\n" + "\n".join(f"  - {f}" for f in rep.failures),
    )
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="freeconj",
        description="conjugacy normal forms in split extensions of free groups",
    )
    parser.add_argument(
        "--backend",
        choices=("auto", "numba", "numpy"),
        help="kernel backend override (default: FREECONJ_BACKEND or auto)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("reduce", help="freely reduce a word")
    _add_common(sp)
    sp.add_argument("word")
    sp.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("cyclic-reduce", help="cyclically reduce a word")
    _add_common(sp)
    sp.add_argument("word")
    sp.set_defaults(fn=_cmd_cyclic_reduce)

    sp = sub.add_parser(
        "delta-reduce", help="minimize a word over witness-power conjugation"
    )
    _add_common(sp)
    sp.add_argument("--delta", help="witness word (standalone mode, with --rank)")
    sp.add_argument("--rank", type=int, help="rank for --delta mode")
    sp.add_argument("word")
    sp.set_defaults(fn=_cmd_delta_reduce)

    sp = sub.add_parser("nf", help="conjugacy normal form of an element")
    _add_common(sp)
    sp.add_argument("element")
    sp.set_defaults(fn=_cmd_nf)

    sp = sub.add_parser("conj", help="decide conjugacy of two elements")
    _add_common(sp)
    sp.add_argument("element1")
    sp.add_argument("element2")
    sp.set_defaults(fn=_cmd_conj)

    sp = sub.add_parser("shift-nf", help="normal form in the shift extension")
    _add_common(sp)
    sp.add_argument("element")
    sp.set_defaults(fn=_cmd_shift_nf)

    sp = sub.add_parser("shift-conj", help="conjugacy in the shift extension")
    _add_common(sp)
    sp.add_argument("element1")
    sp.add_argument("element2")
    sp.set_defaults(fn=_cmd_shift_conj)

    sp = sub.add_parser("oracle", help="bounded brute-force conjugacy search")
    _add_common(sp)
    sp.add_argument("--len", type=int, required=True, help="max conjugator word length")
    sp.add_argument("--toff", type=int, required=True, help="max |t offset|")
    sp.add_argument("element1")
    sp.add_argument("element2")
    sp.set_defaults(fn=_cmd_oracle)

    sp = sub.add_parser("verify-ctx", help="validate a context")
    _add_common(sp)
    sp.add_argument(
        "--no-minimality", action="store_true", help="skip the minimality search"
    )
    sp.set_defaults(fn=_cmd_verify_ctx)

    args = parser.parse_args(argv)
    if args.backend:
        backend.use_backend(args.backend)
    try:
        return args.fn(args)
    except (CliError, ParseError, ContextError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
