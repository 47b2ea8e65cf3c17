"""Conjugacy for semidirect products of a free group with a finite group of
automorphisms.

Elements are pairs (i, V): the i-th automorphism in the table times a word.
The product convention matches the extension case, (a, V)(b, W) =
(a*b, b(V) W), where a*b acts by "a then b".  There is no witness word here,
so the minimal closure only uses twisted cyclic shifts; the class invariant
is the least table index in the automorphism's conjugacy class together with
the least word over the closures of all M-conjugates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .automorphisms import Automorphism
from .normal_form import EngineScan, _min_closure
from .words import EMPTY, Word, letter_key


class FMElement(NamedTuple):
    aut: int
    x_part: Word


@dataclass(frozen=True)
class FiniteActionContext:
    """A finite automorphism group given by an explicit element list.

    The identity must come first; the list must be closed under composition
    and inverses, which is verified at construction.  Element order is list
    position.
    """

    rank: int
    elements: tuple[Automorphism, ...]
    table: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    inverse: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        if not self.elements:
            raise ValueError("element list is empty")
        if any(a.rank != self.rank for a in self.elements):
            raise ValueError("all automorphisms must share the context rank")
        if not self.elements[0].is_identity():
            raise ValueError("the first element must be the identity")
        index = {a: i for i, a in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate automorphisms in the element list")
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                prod = a.then(b)
                if prod not in index:
                    raise ValueError("element list is not closed under composition")
                row.append(index[prod])
            table.append(tuple(row))
        object.__setattr__(self, "table", tuple(table))
        inv = []
        for i in range(len(self.elements)):
            js = [j for j in range(len(self.elements)) if table[i][j] == 0]
            if not js or table[js[0]][i] != 0:
                raise ValueError(f"element {i} has no inverse in the list")
            inv.append(js[0])
        object.__setattr__(self, "inverse", tuple(inv))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj_index(self, i: int, j: int) -> int:
        """Index of the j-conjugate of element i."""
        return self.mul(self.mul(self.inverse[j], i), j)

    def conjugacy_class(self, i: int) -> tuple[int, ...]:
        return tuple(sorted({self.conj_index(i, j) for j in range(len(self.elements))}))


def fm_mul(mctx: FiniteActionContext, a: FMElement, b: FMElement) -> FMElement:
    return FMElement(
        mctx.mul(a.aut, b.aut), mctx.elements[b.aut].apply(a.x_part) * b.x_part
    )


def fm_inv(mctx: FiniteActionContext, a: FMElement) -> FMElement:
    j = mctx.inverse[a.aut]
    return FMElement(j, mctx.elements[j].apply(a.x_part.inverse()))


def fm_conjugate(mctx: FiniteActionContext, v: FMElement, u: FMElement) -> FMElement:
    return fm_mul(mctx, fm_mul(mctx, fm_inv(mctx, u), v), u)


def _fm_engine(mctx: FiniteActionContext, aut_idx: int):
    """Shift and (trivial) scan callables for the twist by one element."""
    alpha = mctx.elements[aut_idx]
    alpha_inv = mctx.elements[mctx.inverse[aut_idx]]
    tab = {}
    tab_inv = {}
    for i in range(1, mctx.rank + 1):
        for sign in (1, -1):
            k = letter_key(i, sign)
            g = Word.from_keys([k], reduced=True)
            tab[k] = alpha.apply(g)
            tab_inv[k] = alpha_inv.apply(g)

    conj_moves = tuple(
        (tab[k].inverse(), Word.from_keys([k], reduced=True)) for k in sorted(tab)
    )

    def shifts_fn(x: Word):
        n = len(x)
        if n == 0:
            return []
        keys = x.keys
        if n == 1:
            k = int(keys[0])
            back = tab_inv[k]
            out = [(tab[k], x.inverse()), (back, back)]
        else:
            out = []
            acc = EMPTY
            for pos in range(n - 1, 0, -1):
                acc = tab[int(keys[pos])] * acc
                out.append((acc * x[:pos], x[pos:].inverse()))
            acc = EMPTY
            for pos in range(1, n):
                acc = acc * tab_inv[int(keys[pos - 1])]
                out.append((x[pos:] * acc, acc))
        # single-letter conjugations catch length-preserving moves whose
        # twisted letter image cancels only partially into the word
        out.extend(((a_inv * x) * a_word, a_word) for a_inv, a_word in conj_moves)
        return out

    def scan_fn(x: Word):
        return EngineScan(len(x), x, EMPTY, ((x, EMPTY),))

    return shifts_fn, scan_fn


def _fm_conjugate_set(mctx: FiniteActionContext, v: FMElement) -> dict[Word, int]:
    """Minimal words over the closures of every M-conjugate of v, mapped to
    the twisting index they were found under."""
    out: dict[Word, int] = {}
    for j in range(len(mctx.elements)):
        beta = mctx.conj_index(v.aut, j)
        seed = mctx.elements[j].apply(v.x_part)
        shifts_fn, scan_fn = _fm_engine(mctx, beta)
        for w in _min_closure(seed, EMPTY, shifts_fn, scan_fn):
            out.setdefault(w, beta)
    return out


def normal_form_finite_M(mctx: FiniteActionContext, v: FMElement) -> FMElement:
    """Class representative: least index in the automorphism's conjugacy
    class, with the shortlex-least word over the conjugate-set union,
    iterated to a fixed point.  Two elements are conjugate exactly when
    their representatives coincide."""
    v = FMElement(*v)
    least_aut = mctx.conjugacy_class(v.aut)[0]
    cur = v
    while True:
        mapping = _fm_conjugate_set(mctx, cur)
        best = min(mapping.keys())
        if best == cur.x_part:
            return FMElement(least_aut, best)
        cur = FMElement(mapping[best], best)


def fm_are_conjugate(mctx: FiniteActionContext, u: FMElement, v: FMElement) -> bool:
    u, v = FMElement(*u), FMElement(*v)
    if mctx.conjugacy_class(u.aut) != mctx.conjugacy_class(v.aut):
        return False
    return normal_form_finite_M(mctx, u) == normal_form_finite_M(mctx, v)
