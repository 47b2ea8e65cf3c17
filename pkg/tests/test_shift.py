import pytest
from hypothesis import given
from hypothesis import strategies as st

import freeconj as fc
from conftest import random_zword, seeded

w = fc.parse_word
ps = fc.parse_shift_element


words_z = st.lists(
    st.tuples(st.integers(-5, 5), st.sampled_from((1, -1))), max_size=8
).map(fc.Word)


# -- index shift ----------------------------------------------------------------

def test_shift_examples():
    assert fc.shift(1, w("x2 x5")) == w("x1 x4")
    v = w("x3 x-1^-1")
    assert fc.shift(0, v) == v
    assert fc.shift(-2, w("x0^-1")) == w("x2^-1")


def test_shift_preserves_length_and_composes():
    rng = seeded(21)
    for _ in range(40):
        v = random_zword(rng, 5, 8)
        m, n = rng.randint(-4, 4), rng.randint(-4, 4)
        assert len(fc.shift(m, v)) == len(v)
        assert fc.shift(n, fc.shift(m, v)) == fc.shift(m + n, v)


@given(words_z, words_z, st.integers(-5, 5))
def test_shift_equivariant_for_order(u, v, m):
    if u < v:
        assert fc.shift(m, u) < fc.shift(m, v)


# -- rotation -------------------------------------------------------------------

def test_tau_examples():
    assert fc.tau(1, w("x2 x5")) == w("x4 x2")
    assert fc.tau(0, w("x1 x2")) == w("x2 x1")
    assert fc.tau(1, w("x2 x5^-1")) == w("x4^-1 x2")


def test_tau_rejects_empty():
    with pytest.raises(ValueError):
        fc.tau(1, fc.EMPTY)


def test_tau_is_conjugation_by_final_letter():
    rng = seeded(22)
    for _ in range(60):
        v = random_zword(rng, 5, 7)
        if not len(v):
            continue
        m = rng.randint(-3, 3)
        elem = fc.ShiftElement(m, v)
        u = fc.ShiftElement(0, v[-1:].inverse())
        assert fc.shift_conjugate(elem, u) == fc.ShiftElement(m, fc.tau(m, v))


# -- twisted cyclic reduction ------------------------------------------------------

def test_cyclically_shift_reduce_examples():
    assert fc.cyclically_shift_reduce(1, w("x0 x5 x1^-1")) == (w("x5"), w("x1"))
    assert fc.cyclically_shift_reduce(1, w("x5")) == (w("x5"), fc.EMPTY)
    assert fc.cyclically_shift_reduce(0, w("x1 x2 x1^-1")) == (w("x2"), w("x1"))


def test_cyclically_shift_reduce_roundtrip():
    rng = seeded(23)
    for _ in range(80):
        v = random_zword(rng, 5, 8)
        m = rng.randint(-3, 3)
        core, u = fc.cyclically_shift_reduce(m, v)
        assert fc.shift(m, u) * core * u.inverse() == v
        # core admits no further peel
        if len(core) >= 2:
            assert fc.cyclically_shift_reduce(m, core) == (core, fc.EMPTY)


# -- normal form -------------------------------------------------------------------

def test_shift_normal_form_examples():
    nf, _ = fc.shift_normal_form(ps("t^1 x3 x1"))
    assert nf == ps("t^1 x0 x3")
    nf, _ = fc.shift_normal_form(ps("x2 x1"))
    assert nf == ps("x0 x1")
    nf, _ = fc.shift_normal_form(ps("t^3"))
    assert nf == fc.ShiftElement(3, fc.EMPTY)


def test_shift_normal_form_starts_at_index_zero():
    rng = seeded(24)
    for _ in range(60):
        v = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 5, 6))
        nf, cert = fc.shift_normal_form(v)
        assert fc.verify_shift_certificate(v, nf, cert)
        if len(nf.x_part):
            assert nf.x_part.letters[0].index == 0


def test_shift_normal_form_idempotent():
    rng = seeded(25)
    for _ in range(40):
        v = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 5, 6))
        nf, _ = fc.shift_normal_form(v)
        assert fc.shift_normal_form(nf)[0] == nf


def test_shift_normal_form_invariance():
    rng = seeded(26)
    for _ in range(60):
        v = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 5, 6))
        c = fc.ShiftElement(rng.randint(-4, 4), random_zword(rng, 5, 5))
        assert fc.shift_normal_form(fc.shift_conjugate(v, c))[0] == fc.shift_normal_form(v)[0]


# -- the decision --------------------------------------------------------------------

def test_shift_are_conjugate_examples():
    assert fc.shift_are_conjugate(ps("t^1 x3 x1"), ps("t^1 x5 x3"))
    assert not fc.shift_are_conjugate(ps("t^1 x0"), ps("t^1 x0^-1"))
    v = ps("t^2 x1 x4^-1")
    assert fc.shift_are_conjugate(v, v)


def test_exponent_separations():
    assert not fc.shift_are_conjugate(ps("t^1 x0"), ps("t^2 x0"))
    # total sign sum is a conjugacy invariant
    assert not fc.shift_are_conjugate(ps("t^1 x0 x1"), ps("t^1 x0 x1^-1"))


def _least_rotation_of_cyclic_reduction(v):
    core, _ = fc.cyclically_reduce(v)
    if not len(core):
        return core
    rots = [
        fc.Word.from_keys(
            list(core.keys[i:]) + list(core.keys[:i]), reduced=True
        )
        for i in range(len(core))
    ]
    return min(rots)


def test_zero_twist_matches_classical_least_rotation():
    rng = seeded(27)
    for _ in range(60):
        v = random_zword(rng, 4, 7)
        nf, _ = fc.shift_normal_form(fc.ShiftElement(0, v))
        classical = _least_rotation_of_cyclic_reduction(v)
        if len(classical):
            expect = fc.shift(classical.letters[0].index, classical)
        else:
            expect = classical
        assert nf.x_part == expect


# -- group arithmetic -----------------------------------------------------------------

def test_shift_element_group_laws():
    rng = seeded(28)
    for _ in range(40):
        a = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 4, 5))
        b = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 4, 5))
        c = fc.ShiftElement(rng.randint(-3, 3), random_zword(rng, 4, 5))
        assert fc.shift_mul(fc.shift_mul(a, b), c) == fc.shift_mul(a, fc.shift_mul(b, c))
        ident = fc.ShiftElement(0, fc.EMPTY)
        assert fc.shift_mul(a, fc.shift_inv(a)) == ident
        assert fc.shift_mul(fc.shift_inv(a), a) == ident


def test_shift_element_text_roundtrip():
    for text in ("1", "t^2", "t^-1 x0 x3^-1", "x-2 x5"):
        assert fc.format_shift_element(ps(text)) == text
