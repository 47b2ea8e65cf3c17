import pytest

import freeconj as fc
from conftest import random_word, seeded

w = fc.parse_word


def test_table_and_inverses(swap_mctx):
    assert swap_mctx.table == ((0, 1), (1, 0))
    assert swap_mctx.inverse == (0, 1)
    assert swap_mctx.conjugacy_class(1) == (1,)


def test_identity_must_come_first():
    swap = fc.Automorphism(2, (fc.generator(2), fc.generator(1)))
    with pytest.raises(ValueError):
        fc.FiniteActionContext(2, (swap, fc.Automorphism.identity(2)))


def test_closure_is_checked():
    third = fc.Automorphism(3, (fc.generator(2), fc.generator(3), fc.generator(1)))
    with pytest.raises(ValueError):
        fc.FiniteActionContext(3, (fc.Automorphism.identity(3), third))


def test_three_cycle_context():
    third = fc.Automorphism(3, (fc.generator(2), fc.generator(3), fc.generator(1)))
    mctx = fc.FiniteActionContext(
        3, (fc.Automorphism.identity(3), third, third.then(third))
    )
    assert mctx.inverse == (0, 2, 1)
    assert mctx.conjugacy_class(1) == (1,)


def test_group_laws(swap_mctx):
    rng = seeded(31)
    ident = fc.FMElement(0, fc.EMPTY)
    for _ in range(40):
        a = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 5))
        b = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 5))
        c = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 5))
        m = swap_mctx
        assert fc.fm_mul(m, fc.fm_mul(m, a, b), c) == fc.fm_mul(m, a, fc.fm_mul(m, b, c))
        assert fc.fm_mul(m, a, fc.fm_inv(m, a)) == ident


def test_conjugation_roundtrip(swap_mctx):
    rng = seeded(32)
    for _ in range(40):
        v = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 5))
        u = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 4))
        back = fc.fm_conjugate(swap_mctx, fc.fm_conjugate(swap_mctx, v, u), fc.fm_inv(swap_mctx, u))
        assert back == v


def test_swapped_generators_are_conjugate(swap_mctx):
    out1 = fc.normal_form_finite_M(swap_mctx, fc.FMElement(1, w("x1")))
    out2 = fc.normal_form_finite_M(swap_mctx, fc.FMElement(1, w("x2")))
    assert out1 == out2
    assert out1.aut == 1


def test_identity_component_uses_all_twists(swap_mctx):
    out = fc.normal_form_finite_M(swap_mctx, fc.FMElement(0, w("x1 x2 x1^-1")))
    assert out == fc.FMElement(0, w("x1"))


def test_pure_automorphism_part(swap_mctx):
    out = fc.normal_form_finite_M(swap_mctx, fc.FMElement(1, fc.EMPTY))
    assert out == fc.FMElement(1, fc.EMPTY)


def test_normal_form_idempotent(swap_mctx):
    rng = seeded(34)
    for _ in range(30):
        v = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 6))
        nf = fc.normal_form_finite_M(swap_mctx, v)
        assert fc.normal_form_finite_M(swap_mctx, nf) == nf


def test_invariance_under_conjugation(swap_mctx):
    rng = seeded(35)
    for _ in range(50):
        v = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 6))
        u = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 4))
        assert fc.normal_form_finite_M(
            swap_mctx, fc.fm_conjugate(swap_mctx, v, u)
        ) == fc.normal_form_finite_M(swap_mctx, v)


def test_agreement_with_bounded_oracle(swap_mctx):
    rng = seeded(36)
    for _ in range(15):
        v = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 4))
        u = fc.FMElement(rng.randint(0, 1), random_word(rng, 2, 2))
        vc = fc.fm_conjugate(swap_mctx, v, u)
        witness = fc.brute_force_conjugacy_finite(swap_mctx, v, vc, 3)
        assert witness is not None
        assert fc.fm_conjugate(swap_mctx, v, witness) == vc
        assert fc.fm_are_conjugate(swap_mctx, v, vc)


def test_exponent_sum_separates(swap_mctx):
    # the total letter-sign sum is invariant: x1 and x1^-1 sit in distinct classes
    v = fc.FMElement(1, w("x1"))
    u = fc.FMElement(1, w("x1^-1"))
    assert not fc.fm_are_conjugate(swap_mctx, v, u)
    assert fc.brute_force_conjugacy_finite(swap_mctx, v, u, 3) is None
