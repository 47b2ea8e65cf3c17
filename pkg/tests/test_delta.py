import pytest

import freeconj as fc
from conftest import random_word, random_reduced_word, seeded

w = fc.parse_word


@pytest.fixture(scope="module")
def x2ctx():
    return fc.inner_context(w("x2"), rank=2)


@pytest.fixture(scope="module")
def example_ctx():
    # witness x1^-1 x2^-1 x3 x2 x1 is reduced but not cyclically reduced
    return fc.inner_context(w("x1^-1 x2^-1 x3 x2 x1"))


EXAMPLE_V = "x1^-1 x2^-1 x3 x3 x3 x2 x1 x1"


# -- the reduced predicate ----------------------------------------------------

def test_cyclically_reduced_words_are_reduced(x2ctx):
    assert fc.is_delta_reduced(x2ctx, w("x1"))


def test_conjugated_generator_is_not_reduced(x2ctx):
    assert not fc.is_delta_reduced(x2ctx, w("x2^-1 x1 x2"))
    assert not fc.is_delta_reduced(x2ctx, w("x2^-1 x1 x2"), window=1)


def test_plateau_word_is_not_reduced(example_ctx):
    assert not fc.is_delta_reduced(example_ctx, w(EXAMPLE_V))
    # the drop only appears at exponent 3, past the plateau
    assert fc.is_delta_reduced(example_ctx, w(EXAMPLE_V), window=2)
    assert not fc.is_delta_reduced(example_ctx, w(EXAMPLE_V), window=3)


# -- reduction ----------------------------------------------------------------

def test_delta_reduce_single_step(x2ctx):
    assert fc.delta_reduce(x2ctx, w("x2^-1 x1 x2")) == (w("x1"), -1)


def test_delta_reduce_plateau_example(example_ctx):
    reduced, k = fc.delta_reduce(example_ctx, w(EXAMPLE_V))
    assert reduced == w("x2^-1 x3 x3 x3 x2 x1")
    assert k == 3


def test_delta_reduce_trivial_witness():
    ctx = fc.identity_context(2)
    v = w("x2^-1 x1 x2")
    assert fc.delta_reduce(ctx, v) == (v, 0)


def test_plateau_length_profile(example_ctx):
    prof = fc.delta_length_profile(example_ctx, w(EXAMPLE_V), 3)
    assert [prof[j] for j in range(4)] == [8, 10, 10, 6]


def test_greedy_descent_stalls_on_plateau(example_ctx):
    word, k = fc.greedy_delta_reduce(example_ctx, w(EXAMPLE_V))
    assert k == 0 and len(word) == 8
    # while the full scan finds the shorter conjugate
    assert len(fc.delta_reduce(example_ctx, w(EXAMPLE_V))[0]) == 6


# -- properties ----------------------------------------------------------------

def _contexts():
    rng = seeded(33)
    out = []
    for _ in range(12):
        d = random_word(rng, 3, 5)
        if len(d):
            out.append(fc.inner_context(d, rank=3))
    return out


def test_conjugacy_soundness():
    rng = seeded(44)
    for ctx in _contexts():
        for _ in range(10):
            v = random_word(rng, 3, 8)
            reduced, k = fc.delta_reduce(ctx, v)
            assert v.conjugated_by(ctx.delta ** k) == reduced


def test_scan_minimum_matches_brute_force_window():
    rng = seeded(55)
    for ctx in _contexts():
        for _ in range(10):
            v = random_word(rng, 3, 8)
            best_len = len(fc.delta_reduce(ctx, v)[0])
            prof = fc.delta_length_profile(ctx, v, len(v) + 2)
            assert best_len == min(prof.values())


def test_greedy_agrees_when_witness_cyclically_reduced():
    rng = seeded(66)
    found = 0
    while found < 12:
        d = random_reduced_word(rng, 3, rng.randint(1, 4))
        if not d.is_cyclically_reduced():
            continue
        found += 1
        ctx = fc.inner_context(d, rank=3)
        for _ in range(8):
            v = random_word(rng, 3, 8)
            greedy_len = len(fc.greedy_delta_reduce(ctx, v)[0])
            assert greedy_len == len(fc.delta_reduce(ctx, v)[0])


def test_profile_tail_stays_above_minimum():
    # beyond both ends of the scanned window the conjugate lengths remain
    # strictly above the reported minimum: nothing was missed
    rng = seeded(77)
    for ctx in _contexts()[:6]:
        for _ in range(6):
            v = random_word(rng, 3, 6)
            scan = fc.delta_scan(ctx, v)
            ks = sorted(scan.profile)
            if len(ks) < 3:
                continue  # commuting short-circuit
            reach = max(ks[-1], -ks[0]) + 3
            far = fc.delta_length_profile(ctx, v, reach)
            for k, length in far.items():
                if k > ks[-1] or k < ks[0]:
                    assert length > scan.min_len
            assert scan.profile[ks[-1]] > scan.min_len
            assert scan.profile[ks[0]] > scan.min_len


def test_orbit_members_share_minimal_length(x2ctx):
    orbit = fc.delta_orbit(x2ctx, w("x1 x2"))
    assert {word for word, _ in orbit} == {w("x1 x2"), w("x2 x1")}
    assert all(len(word) == 2 for word, _ in orbit)


def test_scan_commuting_short_circuit(x2ctx):
    # powers of the witness commute with it: orbit is a single word
    scan = fc.delta_scan(x2ctx, w("x2 x2"))
    assert scan.mins == [(w("x2 x2"), 0)]
