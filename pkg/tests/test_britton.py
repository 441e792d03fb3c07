import random

import pytest

from baumslag.britton import (
    BsParams,
    BsWord,
    britton_reduce,
    commutator_word,
    equal,
    eval_metabelian,
    find_pinch,
    is_trivial,
    parse_bs_params,
    z2_witness,
)
from baumslag.errors import DomainError
from baumslag.metabelian import MetabelianElement, MetabelianParams

BS23 = BsParams(2, 3)


def W(text):
    return BsWord.from_text(text)


def random_bs_word(rng, max_len=20):
    lead = 0
    tail = []
    for _ in range(rng.randint(0, max_len)):
        c = rng.randrange(4)
        if c < 2:
            exp = 1 if c == 0 else -1
            if tail:
                tail[-1][1] += exp
            else:
                lead += exp
        else:
            tail.append([1 if c == 2 else -1, 0])
    return BsWord(lead, tuple((s, e) for s, e in tail))


def test_params_validation():
    with pytest.raises(DomainError):
        BsParams(0, 3)
    assert str(BsParams(2, -3)) == "BS(2,-3)"
    assert parse_bs_params("BS(2, -3)") == BsParams(2, -3)
    with pytest.raises(ValueError):
        parse_bs_params("BS(2)")


def test_word_round_trip():
    w = W("t^-1 a^2 t a^-3")
    assert w.lead == 0
    assert w.tail == ((-1, 2), (1, -3))
    assert w.format() == "t^-1 a^2 t a^-3"
    assert BsWord.from_text(w.format()) == w


def test_concat_invert_pow():
    u, v = W("a t"), W("t^-1 a^2")
    # Concatenation keeps raw syllables; only britton_reduce removes pinches.
    assert u * v == BsWord(1, ((1, 0), (-1, 2)))
    assert ~W("a t a^3") == W("a^-3 t^-1 a^-1")
    assert W("a t") ** 2 == W("a t a t")
    assert W("a t") ** -1 == W("t^-1 a^-1")
    assert (W("a t") * ~W("a t")).tail == ((1, 0), (-1, -1))  # raw, not yet reduced


def test_britton_reduce_examples():
    assert britton_reduce(W("t^-1 a^2 t"), BS23) == BsWord(3)
    assert britton_reduce(BsWord(), BS23) == BsWord()
    comm = commutator_word(W("t^-1 a t a"), W("a^3"))
    assert is_trivial(comm, BS23)


def test_britton_reduce_output_is_pinch_free():
    rng = random.Random(424242)
    for params in (BS23, BsParams(3, 5), BsParams(-2, 3), BsParams(2, -2)):
        for _ in range(400):
            w = britton_reduce(random_bs_word(rng), params)
            assert w.reduced
            assert find_pinch(w, params) is None


def test_is_trivial_examples():
    assert is_trivial(W("a t t^-1 a^-1"), BS23)
    assert is_trivial(W("t^-1 a^2 t a^-3"), BS23)
    assert not is_trivial(W("t^-1 a t"), BS23)


def test_equal_examples():
    w = W("t a^2 t^-1 a")
    assert equal(w, w, BS23)
    assert equal(W("t^-1 a^2 t"), W("a^3"), BS23)
    assert not equal(W("a"), W("t"), BS23)


def test_negative_parameters():
    # t^-1 a^2 t = a^-3 in BS(2,-3).
    params = BsParams(2, -3)
    assert equal(W("t^-1 a^2 t"), W("a^-3"), params)
    params = BsParams(-2, 3)
    assert equal(W("t^-1 a^-2 t"), W("a^3"), params)


def test_eval_metabelian_examples():
    assert eval_metabelian(W("a"), 2) == MetabelianElement(MetabelianParams(1, 2), 1, 0)
    assert eval_metabelian(W("t^-1 a t a^-2"), 2).is_identity
    assert eval_metabelian(W("a t"), 2) == MetabelianElement(MetabelianParams(1, 2), 1, 1)
    with pytest.raises(DomainError):
        eval_metabelian(W("a"), 0)


def test_eval_metabelian_is_homomorphism():
    rng = random.Random(134217)
    for _ in range(500):
        u, v = random_bs_word(rng), random_bs_word(rng)
        k = rng.choice([1, 2, 3, 5])
        assert eval_metabelian(u * v, k) == eval_metabelian(u, k) * eval_metabelian(v, k)


def test_oracle_equivalence_on_soluble_groups():
    rng = random.Random(271)
    for k in (2, 3, 5):
        params = BsParams(1, k)
        for _ in range(800):
            w = random_bs_word(rng, max_len=25)
            assert is_trivial(w, params) == eval_metabelian(w, k).is_identity


def test_reduction_preserves_group_element():
    rng = random.Random(828)
    for params in (BS23, BsParams(3, 5), BsParams(-2, 5)):
        for _ in range(300):
            w = random_bs_word(rng)
            assert equal(w, britton_reduce(w, params), params)


def test_inserting_pinch_preserves_equality_class():
    # Splicing t^-1 a^(c*m) t in place of a^(c*n) (or vice versa) at a
    # random seam never changes the represented element.
    rng = random.Random(96823)
    for params in (BS23, BsParams(3, 4)):
        for _ in range(300):
            w = random_bs_word(rng, max_len=12)
            c = rng.randint(-3, 3)
            left = BsWord(0, tuple(w.tail[: rng.randint(0, len(w.tail))]))
            right = BsWord(0, w.tail[len(left.tail):])
            prefix = BsWord(w.lead) * left
            pinch = BsWord(0, ((-1, c * params.m), (1, 0)))
            flat = BsWord(c * params.n)
            assert equal(prefix * pinch * right, prefix * flat * right, params)


def test_z2_witness_examples():
    report = z2_witness(BS23, 4)
    assert report.commutator_is_trivial
    assert report.pairs_checked == 80
    assert report.collapsed_pairs == ()
    assert report.verified

    report = z2_witness(BsParams(3, 5), 3)
    assert report.verified
    assert report.pairs_checked == 48


def test_z2_witness_guards():
    with pytest.raises(DomainError):
        z2_witness(BsParams(1, 2), 4)
    with pytest.raises(DomainError):
        z2_witness(BS23, 0)


def test_z2_witness_negative_params():
    assert z2_witness(BsParams(-2, 3), 2).verified
    assert z2_witness(BsParams(2, -3), 2).verified
