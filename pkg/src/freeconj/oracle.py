"""Bounded brute-force conjugacy search.

Independent of the normal-form machinery: candidates t^a u are enumerated in
a fixed order (t-offset ascending by absolute value, then shortlex words) and
tested by exact reduction, so any witness it returns replays, and on
instances where the bound is known sufficient it validates the fast path.
"""

from __future__ import annotations

from typing import Iterator

from .automorphisms import VIContext
from .extension import ConjugacyCertificate, ExtElement, element, ext_conjugate
from .finite_action import FiniteActionContext, FMElement, fm_conjugate
from .words import EMPTY, Word, letter_key


def reduced_words(rank: int, max_len: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_len in shortlex order."""
    yield EMPTY
    alphabet = [letter_key(i, s) for i in range(1, rank + 1) for s in (1, -1)]
    alphabet.sort()
    level = [[k] for k in alphabet]
    for length in range(1, max_len + 1):
        nxt = []
        for prefix in level:
            yield Word.from_keys(prefix, reduced=True)
            if length < max_len:
                last = prefix[-1]
                nxt.extend(prefix + [k] for k in alphabet if k != last ^ 1)
        level = nxt


def _t_offsets(ctx: VIContext, t_bound: int) -> list[int]:
    if ctx.t_order is not None:
        return list(range(min(t_bound, ctx.t_order - 1) + 1))
    out = [0]
    for a in range(1, t_bound + 1):
        out.extend((a, -a))
    return out


def brute_force_conjugacy(
    ctx: VIContext,
    v: ExtElement,
    w: ExtElement,
    len_bound: int,
    t_bound: int,
) -> ConjugacyCertificate | None:
    """First conjugator u = t^a U with |U| <= len_bound and |a| <= t_bound
    (a taken mod the t order when finite) satisfying u^-1 v u = w.

    Enumeration order is fixed, t-offset ascending by absolute value and then
    shortlex on the word, so the reported witness is reproducible."""
    words = list(reduced_words(ctx.rank, len_bound))
    for a in _t_offsets(ctx, t_bound):
        for u_word in words:
            u = element(ctx, a, u_word)
            if ext_conjugate(ctx, v, u) == w:
                return ConjugacyCertificate(u)
    return None


def brute_force_conjugacy_finite(
    mctx: FiniteActionContext,
    v: FMElement,
    w: FMElement,
    len_bound: int,
) -> FMElement | None:
    """Finite-action analogue: search (j, U) with |U| <= len_bound."""
    v, w = FMElement(*v), FMElement(*w)
    words = list(reduced_words(mctx.rank, len_bound))
    for j in range(len(mctx.elements)):
        for u_word in words:
            u = FMElement(j, u_word)
            if fm_conjugate(mctx, v, u) == w:
                return u
    return None
