"""Automorphisms of a finite-rank free group given by generator images,
and contexts for split extensions where some power of the automorphism is
conjugation by a witness word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import backend as _K
from .words import EMPTY, INT, Word, cyclically_reduce, format_word, letter_key, parse_word


class ContextError(ValueError):
    pass


@dataclass(frozen=True)
class Automorphism:
    """Endomorphism of the rank-n free group, x_i -> images[i-1].

    When ``inverse_images`` is present, both compositions are checked to be
    the identity on the generators, which certifies that the map is an
    automorphism.  Without it the map is used as given.
    """

    rank: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...] | None = field(default=None, compare=False)
    _flat: np.ndarray = field(init=False, repr=False, compare=False)
    _off: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        for i, img in enumerate(self.images):
            lo, hi = img.index_range()
            if len(img) and not (1 <= lo and hi <= self.rank):
                raise ValueError(f"image of x{i + 1} leaves the rank-{self.rank} alphabet")
        flat = np.concatenate([img.keys for img in self.images] or [np.empty(0, INT)])
        off = np.zeros(self.rank + 1, dtype=INT)
        np.cumsum([len(img) for img in self.images], out=off[1:])
        object.__setattr__(self, "_flat", flat)
        object.__setattr__(self, "_off", off)
        if self.inverse_images is not None:
            inv = Automorphism(self.rank, tuple(self.inverse_images))
            for i in range(self.rank):
                g = generator(i + 1)
                if self.apply(inv.images[i]) != g or inv.apply(self.images[i]) != g:
                    raise ValueError(
                        f"inverse_images do not invert the map on x{i + 1}"
                    )

    def apply(self, v: Word) -> Word:
        """Homomorphic substitution, freely reduced."""
        if len(v):
            lo, hi = v.index_range()
            if lo < 1 or hi > self.rank:
                raise ValueError("word index out of range for this automorphism")
        return Word.from_keys(_K.substitute(v.keys, self._flat, self._off), reduced=True)

    def then(self, other: "Automorphism") -> "Automorphism":
        """Composite mapping x -> other(self(x))."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return Automorphism(self.rank, tuple(other.apply(img) for img in self.images))

    def is_identity(self) -> bool:
        return all(
            img == generator(i + 1) for i, img in enumerate(self.images)
        )

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        return cls(rank, tuple(generator(i + 1) for i in range(rank)))

    @classmethod
    def inner(cls, rank: int, w: Word) -> "Automorphism":
        """Conjugation x -> w^-1 x w."""
        return cls(
            rank,
            tuple(generator(i + 1).conjugated_by(w) for i in range(rank)),
            inverse_images=tuple(
                generator(i + 1).conjugated_by(w.inverse()) for i in range(rank)
            ),
        )


def generator(index: int, sign: int = 1) -> Word:
    return Word.from_keys([letter_key(index, sign)], reduced=True)


def find_inner_witness(alpha: Automorphism) -> Word | None:
    """The word w with alpha(x) = w^-1 x w for every generator, if it exists.

    The image of x1 must be conjugate to x1, which pins w down to x1^a * w1
    for a single particular solution w1; the second generator bounds |a|, and
    the finitely many candidates are checked against all generators.  For
    rank >= 2 the witness is unique, so the result is deterministic.
    """
    if alpha.rank == 1:
        return EMPTY if alpha.is_identity() else None
    x1 = generator(1)
    core, s = cyclically_reduce(alpha.images[0])
    if core != x1:
        return None
    w1 = s.inverse()
    r = w1 * alpha.images[1] * w1.inverse()
    bound = len(r) // 2
    gens = [generator(i + 1) for i in range(alpha.rank)]
    for a in range(-bound, bound + 1):
        w = (x1 ** a) * w1
        if all(alpha.images[i] == gens[i].conjugated_by(w) for i in range(alpha.rank)):
            return w
    return None


@dataclass(frozen=True)
class VIContext:
    """A split extension F_n(t): rank, order of t, the twisting automorphism
    phi, the smallest power m with phi^m inner, and the witness word delta
    satisfying phi^m(f) = delta^-1 f delta and phi(delta) = delta.

    ``t_order`` is None for infinite order.  Immutable after construction;
    the caches only memoize derived data.
    """

    rank: int
    t_order: int | None
    phi: Automorphism
    m: int
    delta: Word
    minimality_verified: bool = True
    names: tuple[str, ...] = ()
    _powers: dict = field(default_factory=dict, repr=False, compare=False)
    _delta_powers: dict = field(default_factory=dict, repr=False, compare=False)
    _letter_twists: dict = field(default_factory=dict, repr=False, compare=False)
    _scan_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _derived: dict = field(default_factory=dict, repr=False, compare=False)

    # -- memoized building blocks ---------------------------------------

    def phi_power(self, r: int) -> Automorphism:
        """phi composed r times, 0 <= r < m (memoized)."""
        if r == 0:
            return Automorphism.identity(self.rank)
        a = self._powers.get(r)
        if a is None:
            a = self.phi_power(r - 1).then(self.phi)
            self._powers[r] = a
        return a

    def delta_power(self, k: int) -> Word:
        w = self._delta_powers.get(k)
        if w is None:
            w = self.delta ** k
            self._delta_powers[k] = w
        return w

    def canonical_t(self, k: int) -> int:
        return k if self.t_order is None else k % self.t_order

    def letter_images(self, ell: int):
        """Per-letter images under phi^ell, keyed by letter key (memoized)."""
        tab = self._letter_twists.get(ell)
        if tab is None:
            tab = {}
            for i in range(1, self.rank + 1):
                for sign in (1, -1):
                    k = letter_key(i, sign)
                    tab[k] = power_apply(self, ell, generator(i, sign))
            self._letter_twists[ell] = tab
        return tab

    def letter_conjugators(self, ell: int):
        """Pairs (phi^ell(c)^-1, c) for the extra conjugation moves
        x -> phi^ell(c)^-1 x c of the minimal closure (memoized).

        The conjugators c are all single letters plus every nonempty prefix
        of the witness word and of its inverse, together with the inverses of
        those prefixes.  Letters catch twisted images that cancel only
        partially into the word; the witness prefixes (the collar of a
        non-cyclically-reduced witness among them) catch reductions that any
        shorter move could only reach through longer intermediate words.
        """
        key = ("conj", ell)
        pairs = self._letter_twists.get(key)
        if pairs is None:
            seen = {(k,) for k in self.letter_images(ell)}
            for base in (self.delta, self.delta.inverse()):
                for n in range(1, len(base) + 1):
                    pref = base.keys[:n]
                    seen.add(tuple(int(k) for k in pref))
                    seen.add(tuple(int(k) for k in pref[::-1] ^ 1))
            pairs = []
            for c in sorted(seen):
                word = Word.from_keys(c, reduced=True)
                pairs.append((power_apply(self, ell, word).inverse(), word))
            self._letter_twists[key] = tuple(pairs)
        return self._letter_twists[key]


def power_apply(ctx: VIContext, k: int, v: Word) -> Word:
    """The reduction of phi^k(v) for any integer k.

    Uses k = m*q + r with 0 <= r < m, so that phi^k(v) is phi^r applied to
    delta^-q * v * delta^q; phi itself is applied at most m-1 times and
    negative k needs no inverse of phi.
    """
    if ctx.t_order is not None:
        k %= ctx.t_order
    q, r = divmod(k, ctx.m)
    if q:
        v = v.conjugated_by(ctx.delta_power(q))
    if r:
        v = ctx.phi_power(r).apply(v)
    return v


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_vi(ctx: VIContext, check_minimality: bool = True) -> ValidationReport:
    """Check every context invariant on the generators; collect failures
    rather than raising, so callers can print diagnostics.
    """
    rep = ValidationReport()
    if ctx.rank < 2:
        rep.failures.append(f"rank must be >= 2, got {ctx.rank}")
        return rep
    if ctx.m < 1:
        rep.failures.append(f"inner power m must be positive, got {ctx.m}")
        return rep
    if ctx.t_order is not None and ctx.t_order < 1:
        rep.failures.append(f"t order must be positive, got {ctx.t_order}")
        return rep
    phi_m = Automorphism.identity(ctx.rank)
    for _ in range(ctx.m):
        phi_m = phi_m.then(ctx.phi)
    for i in range(ctx.rank):
        g = generator(i + 1)
        if phi_m.apply(g) != g.conjugated_by(ctx.delta):
            rep.failures.append(
                f"phi^{ctx.m} is not conjugation by the witness on x{i + 1}"
            )
    if ctx.phi.apply(ctx.delta) != ctx.delta:
        rep.failures.append("phi does not fix the witness word")
    if ctx.t_order is not None:
        phi_w = Automorphism.identity(ctx.rank)
        for _ in range(ctx.t_order):
            phi_w = phi_w.then(ctx.phi)
        if not phi_w.is_identity():
            rep.failures.append(
                f"finite t order {ctx.t_order} but phi^{ctx.t_order} is not the identity"
            )
    if check_minimality:
        a = Automorphism.identity(ctx.rank)
        for j in range(1, ctx.m):
            a = a.then(ctx.phi)
            if find_inner_witness(a) is not None:
                rep.failures.append(f"phi^{j} is already inner, so m={ctx.m} is not minimal")
                break
    else:
        rep.warnings.append("minimality of m not verified")
    return rep


def make_context(
    rank: int,
    t_order: int | None,
    phi: Automorphism,
    m: int,
    delta: Word,
    *,
    check_minimality: bool = True,
    names: tuple[str, ...] = (),
) -> VIContext:
    """Validated VIContext constructor; raises ContextError on any failure."""
    ctx = VIContext(
        rank=rank,
        t_order=t_order,
        phi=phi,
        m=m,
        delta=delta,
        minimality_verified=check_minimality,
        names=names,
    )
    rep = verify_vi(ctx, check_minimality=check_minimality)
    if not rep.ok:
        raise ContextError("; ".join(rep.failures))
    return ctx


def inner_context(delta: Word, rank: int | None = None) -> VIContext:
    """Context whose twist is conjugation by ``delta`` itself (m = 1)."""
    if rank is None:
        rank = max(2, delta.index_range()[1])
    return make_context(
        rank=rank,
        t_order=None,
        phi=Automorphism.inner(rank, delta),
        m=1,
        delta=delta,
    )


def identity_context(rank: int, t_order: int | None = None) -> VIContext:
    """Trivial twist: phi = id, m = 1, empty witness."""
    return make_context(
        rank=rank,
        t_order=t_order,
        phi=Automorphism.identity(rank),
        m=1,
        delta=EMPTY,
    )


# -- JSON context files ------------------------------------------------------


def context_from_dict(
    data: dict, *, search_bound: int = 12, check_minimality: bool = True
) -> VIContext:
    """Build a context from the JSON schema.

    Fields: ``rank``, ``t_order`` ("inf" or an integer), ``images`` (word
    strings), optional ``m`` and ``delta``.  When m/delta are missing, powers
    phi^j for j = 1..search_bound are searched for an inner witness.
    """
    rank = int(data["rank"])
    t_order_raw = data.get("t_order", "inf")
    t_order = None if t_order_raw in ("inf", None) else int(t_order_raw)
    images = tuple(parse_word(s, rank=rank) for s in data["images"])
    phi = Automorphism(rank, images)
    names = tuple(data.get("names", ()))
    if "m" in data:
        m = int(data["m"])
        if "delta" in data:
            delta = parse_word(data["delta"], rank=rank)
        else:
            a = Automorphism.identity(rank)
            for _ in range(m):
                a = a.then(phi)
            delta = find_inner_witness(a)
            if delta is None:
                raise ContextError(f"phi^{m} is not inner; no witness exists")
    else:
        m = delta = None
        a = Automorphism.identity(rank)
        for j in range(1, search_bound + 1):
            a = a.then(phi)
            w = find_inner_witness(a)
            if w is not None:
                m, delta = j, w
                break
        if m is None:
            raise ContextError(
                f"no inner power of phi found with exponent <= {search_bound}"
            )
        # minimal by search order; skip the redundant minimality re-check
        ctx = VIContext(rank, t_order, phi, m, delta, True, names)
        rep = verify_vi(ctx, check_minimality=False)
        if not rep.ok:
            raise ContextError("; ".join(rep.failures))
        return ctx
    return make_context(
        rank, t_order, phi, m, delta, check_minimality=check_minimality, names=names
    )


def load_context(path, **kwargs) -> VIContext:
    with open(Path(path)) as f:
        return context_from_dict(json.load(f), **kwargs)


def context_to_dict(ctx: VIContext) -> dict:
    return {
        "rank": ctx.rank,
        "t_order": "inf" if ctx.t_order is None else ctx.t_order,
        "images": [format_word(img) for img in ctx.phi.images],
        "m": ctx.m,
        "delta": format_word(ctx.delta),
        **({"names": list(ctx.names)} if ctx.names else {}),
    }
