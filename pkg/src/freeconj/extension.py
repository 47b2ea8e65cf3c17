"""Elements t^l * V of a split extension and their group arithmetic.

Multiplication twists the left x-part by the right t-power:
(t^a U)(t^b W) = t^(a+b) phi^b(U) W.  Conjugacy certificates are plain
elements; replaying one is a single exact computation, so every claim the
library makes can be checked without trusting the search that produced it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .automorphisms import VIContext, power_apply
from .words import EMPTY, ParseError, Word, format_word, parse_word


@dataclass(frozen=True)
class ExtElement:
    t_exp: int
    x_part: Word

    def __str__(self) -> str:
        return format_element(self)


IDENTITY = ExtElement(0, EMPTY)


def element(ctx: VIContext, t_exp: int, x_part: Word) -> ExtElement:
    """Canonical form: t exponent reduced into [0, order) when t is finite."""
    return ExtElement(ctx.canonical_t(t_exp), x_part)


def ext_mul(ctx: VIContext, a: ExtElement, b: ExtElement) -> ExtElement:
    return element(
        ctx, a.t_exp + b.t_exp, power_apply(ctx, b.t_exp, a.x_part) * b.x_part
    )


def ext_inv(ctx: VIContext, a: ExtElement) -> ExtElement:
    return element(ctx, -a.t_exp, power_apply(ctx, -a.t_exp, a.x_part.inverse()))


def ext_conjugate(ctx: VIContext, v: ExtElement, u: ExtElement) -> ExtElement:
    """Reduction of u^-1 v u."""
    return ext_mul(ctx, ext_mul(ctx, ext_inv(ctx, u), v), u)


@dataclass(frozen=True)
class ConjugacyCertificate:
    """A conjugator u witnessing w = u^-1 v u; machine-checkable."""

    conjugator: object

    def __str__(self) -> str:
        return str(self.conjugator)


def verify_certificate(
    ctx: VIContext, v: ExtElement, w: ExtElement, cert: ConjugacyCertificate
) -> bool:
    return ext_conjugate(ctx, v, cert.conjugator) == w


# -- element text syntax -----------------------------------------------------

_TPOW = re.compile(r"^t\^(-?\d+)$")


def parse_element(text: str, rank: int | None = None) -> ExtElement:
    """Grammar: ["t^" integer] word-tokens.  A missing t-power means t^0;
    ``1`` is the empty word.  Round-trips through ``format_element``.
    """
    toks = text.split()
    t_exp = 0
    offset = 0
    if toks:
        m = _TPOW.match(toks[0])
        if m is not None:
            t_exp = int(m.group(1))
            toks = toks[1:]
            offset = 1
    if not toks:
        if offset == 0:
            raise ParseError("empty element text (use '1' for the identity)")
        return ExtElement(t_exp, EMPTY)
    return ExtElement(t_exp, parse_word(" ".join(toks), rank=rank, _pos_offset=offset))


def format_element(e: ExtElement) -> str:
    if e.t_exp == 0:
        return format_word(e.x_part)
    if not len(e.x_part):
        return f"t^{e.t_exp}"
    return f"t^{e.t_exp} {format_word(e.x_part)}"
