"""Two-generator Artin groups as split-extension contexts.

The group on x, y with relation w_m(x, y) = w_m(y, x) rewrites, after a
change of generators, as a free group of finite rank extended by an
automorphism whose m-th (even case) or 2m-th-ish (odd case) power is inner.
These contexts double as verified fixtures: every defining identity is
checked exactly at construction time, including minimality of the inner
power, and construction fails loudly if any of them breaks.
"""

from __future__ import annotations

from .automorphisms import Automorphism, VIContext, generator, make_context
from .words import Word


def artin_even(n: int) -> VIContext:
    """The index-2n Artin group (the (2n,2) torus link group) as a rank-n
    extension.  Generators y_0..y_(n-1) map to the internal x_1..x_n.

    The twist sends y_0 to y_0 y_1 ... y_(n-2) y_(n-1) y_(n-2)^-1 ... y_0^-1
    and shifts every other generator down; its n-th power is conjugation by
    the inverse of y_0 y_1 ... y_(n-1).
    """
    if n < 2:
        raise ValueError("even Artin preset needs n >= 2")
    head = [(i, 1) for i in range(1, n)]  # y_0 .. y_(n-2)
    img0 = Word(head + [(n, 1)] + [(i, -1) for i in reversed(range(1, n))])
    images = [img0] + [generator(i) for i in range(1, n)]
    phi = Automorphism(n, tuple(images))
    fixed_product = Word([(i, 1) for i in range(1, n + 1)])  # y_0 ... y_(n-1)
    return make_context(
        rank=n,
        t_order=None,
        phi=phi,
        m=n,
        delta=fixed_product.inverse(),
        names=tuple(f"y{i}" for i in range(n)),
    )


def artin_odd(n: int) -> VIContext:
    """The index-(2n+1) Artin group (the (2n+1,2) torus knot group) as a
    rank-2n extension.  Generators z_0..z_(2n-1) map to x_1..x_2n.

    The twist sends z_0 to z_0 z_2 ... z_(2n-2) z_(2n-1)^-1 ... z_3^-1 z_1^-1
    and shifts the rest down; its 2(2n+1)-th power is conjugation by the
    inverse of  z_0 z_2 ... z_(2n-2) (z_0 z_1 ... z_(2n-1))^-1 z_1 z_3 ... z_(2n-1).
    """
    if n < 1:
        raise ValueError("odd Artin preset needs n >= 1")
    rank = 2 * n
    evens = [(i + 1, 1) for i in range(0, rank, 2)]  # z_0 z_2 ...
    odds_desc = [(i + 1, -1) for i in range(rank - 1, 0, -2)]  # z_(2n-1)^-1 ...
    img0 = Word(evens + odds_desc)
    images = [img0] + [generator(i) for i in range(1, rank)]
    psi = Automorphism(rank, tuple(images))
    all_up = Word([(i, 1) for i in range(1, rank + 1)])  # z_0 z_1 ... z_(2n-1)
    odds_up = Word([(i + 1, 1) for i in range(1, rank, 2)])  # z_1 z_3 ...
    sigma = Word(evens) * all_up.inverse() * odds_up
    return make_context(
        rank=rank,
        t_order=None,
        phi=psi,
        m=2 * (2 * n + 1),
        delta=sigma.inverse(),
        names=tuple(f"z{i}" for i in range(rank)),
    )


def artin(m: int) -> VIContext:
    """Dispatch on the Artin index m >= 3 (CLI spelling ``artin:<m>``)."""
    if m < 3:
        raise ValueError("Artin index must be >= 3")
    if m % 2 == 0:
        return artin_even(m // 2)
    return artin_odd((m - 1) // 2)
