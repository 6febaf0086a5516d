import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fractalseq import (EMPTY_INTERVAL, SegmentKind, Surd, ThetaInterval,
                        annotate_ranks, first_divergence, generate_signature,
                        seed_interval, theta_interval_from_prefix)

from conftest import make_theta_sample
from fixtures import DIVERGENCE_7_2_VS_SQRT13, RAMP4_INTERVAL, RAMP4_TERMS

SQRT13 = Surd.sqrt(13)


def closed(lo, hi):
    return ThetaInterval(Fraction(lo), True, Fraction(hi), True)


# --- interval recovery -------------------------------------------------------

def test_ramp_seed_prefix_interval():
    assert theta_interval_from_prefix([1, 2, 3, 4, 1, 5]) == closed(3, 4)


def test_ones_seed_prefix_interval():
    # Exhaustively cross-checked: the signature of any theta in
    # [1/5, 1/4) opens with five ones, not four, so the consistent set
    # for (1,1,1,1,2) is [1/4, 1/3] (the right endpoint up to ties).
    assert theta_interval_from_prefix([1, 1, 1, 1, 2]) == closed(Fraction(1, 4), Fraction(1, 3))


def test_gap_means_empty():
    assert theta_interval_from_prefix([1, 3]) is EMPTY_INTERVAL


def test_adjacency_alone_is_not_enough():
    # (1, 2) forces 1 + 2*theta >= 2 + theta, a frontier constraint.
    assert theta_interval_from_prefix([1, 2]) == ThetaInterval(
        Fraction(1), True, None, False)


def test_single_term_interval_is_unbounded():
    iv = theta_interval_from_prefix([1])
    assert iv.hi is None and iv.lo == 0 and not iv.lo_closed


def test_impossible_repeat_is_empty():
    assert theta_interval_from_prefix([1, 2, 2]).is_empty


def test_out_of_order_rank_is_empty():
    assert theta_interval_from_prefix([1, 3, 1]).is_empty


def test_golden_run_interval():
    iv = theta_interval_from_prefix(RAMP4_TERMS)
    assert (iv.lo, iv.hi) == RAMP4_INTERVAL
    assert iv.lo_closed and iv.hi_closed


def test_interval_rejects_bad_input():
    with pytest.raises(ValueError):
        theta_interval_from_prefix([])
    with pytest.raises(ValueError):
        theta_interval_from_prefix([1, 0, 2])


# --- membership ---------------------------------------------------------------

def test_contains_surd_by_exact_squaring():
    assert closed(3, 4).contains(SQRT13)
    assert not closed(1, 3).contains(SQRT13)


def test_contains_respects_flags():
    iv = ThetaInterval(Fraction(1, 5), True, Fraction(1, 4), True)
    assert not iv.contains(Fraction(1, 7))
    assert iv.contains(Fraction(1, 5))
    open_iv = ThetaInterval(Fraction(1, 5), False, Fraction(1, 4), False)
    assert not open_iv.contains(Fraction(1, 5))
    assert open_iv.contains(Fraction(9, 40))


def test_empty_contains_nothing():
    assert not EMPTY_INTERVAL.contains(Fraction(1))
    assert not EMPTY_INTERVAL.contains(SQRT13)


def test_witness():
    assert closed(3, 4).witness() == Fraction(7, 2)
    assert ThetaInterval(Fraction(2), True, None, False).witness() == 3
    assert EMPTY_INTERVAL.witness() is None
    assert closed(5, 5).witness() == 5


def test_subset_relation():
    assert closed(2, 3).is_subset_of(closed(1, 4))
    assert closed(2, 3).is_subset_of(closed(2, 3))
    assert not closed(1, 4).is_subset_of(closed(2, 3))
    assert EMPTY_INTERVAL.is_subset_of(closed(1, 2))
    assert not closed(1, 2).is_subset_of(EMPTY_INTERVAL)
    assert closed(1, 2).is_subset_of(ThetaInterval(Fraction(1), True, None, False))


def test_interval_str():
    assert str(closed(3, 4)) == "[3, 4]"
    assert str(EMPTY_INTERVAL) == "EMPTY"
    assert str(ThetaInterval(Fraction(0), False, Fraction(1, 2), True)) == "(0, 1/2]"
    assert str(ThetaInterval(Fraction(1), True, None, False)) == "[1, oo)"


# --- seed intervals --------------------------------------------------------------

def test_seed_interval_ramp():
    assert seed_interval(4, SegmentKind.RAMP) == closed(3, 4)
    assert seed_interval(2, SegmentKind.RAMP) == closed(1, 2)


def test_seed_interval_ones():
    assert seed_interval(4, SegmentKind.ONES) == closed(Fraction(1, 4), Fraction(1, 3))
    assert seed_interval(2, SegmentKind.ONES) == closed(Fraction(1, 2), Fraction(1))


def test_seed_interval_rejects_small_n():
    with pytest.raises(ValueError):
        seed_interval(1, SegmentKind.RAMP)


def test_seed_interval_matches_prefix_recovery():
    # The n+2 term opening of each seed recovers exactly the seed interval.
    for n in range(2, 8):
        ramp = list(range(1, n + 1)) + [1, n + 1]
        assert theta_interval_from_prefix(ramp) == seed_interval(n, SegmentKind.RAMP)
        ones = [1] * n + [2, 1]
        assert theta_interval_from_prefix(ones) == seed_interval(n, SegmentKind.ONES)


# --- soundness and refinement ------------------------------------------------------

def test_recovered_interval_contains_its_parameter():
    for theta in make_theta_sample(8, 8, seed=5):
        values = [t.value for t in generate_signature(theta, 200)]
        iv = theta_interval_from_prefix(values)
        assert not iv.is_empty
        assert iv.contains(theta), theta


def test_intervals_nest_as_prefixes_grow():
    for theta in make_theta_sample(5, 5, seed=6):
        values = [t.value for t in generate_signature(theta, 400)]
        ivs = [theta_interval_from_prefix(values[:n]) for n in (50, 100, 400)]
        assert ivs[2].is_subset_of(ivs[1])
        assert ivs[1].is_subset_of(ivs[0])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=12))
@settings(max_examples=60, deadline=None)
def test_interior_witness_regenerates(prefix):
    iv = theta_interval_from_prefix(prefix)
    if iv.is_empty or iv.is_point:
        return
    witness = iv.witness()
    regen = [t.value for t in generate_signature(witness, len(prefix))]
    assert regen == prefix


# --- Stern-Brocot cross-check -------------------------------------------------------

def stern_brocot_witness(prefix, max_denominator=1000):
    """Directed mediant descent toward a rational whose signature opens
    with `prefix`; independent of the interval arithmetic."""
    want = annotate_ranks(prefix)
    lo, hi = (0, 1), (1, 0)
    while True:
        p, q = lo[0] + hi[0], lo[1] + hi[1]
        if q > max_denominator:
            return None
        mid = Fraction(p, q)
        got = generate_signature(mid, len(prefix))
        values = [t.value for t in got]
        if values == list(prefix):
            return mid
        h = next(k for k, (a, b) in enumerate(zip(values, prefix)) if a != b)
        s, a = want[h]
        sp, ap = got[h]
        if ap > a:
            lo = (p, q)       # the wanted pair needs a larger theta
        elif ap < a:
            hi = (p, q)
        else:
            return None       # same rank, smaller value: impossible anywhere


def random_prefixes(count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        if rng.random() < 0.5:
            theta = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            values = [t.value for t in generate_signature(theta, rng.randint(1, 12))]
            if rng.random() < 0.5 and len(values) > 2:
                values[rng.randrange(len(values))] = rng.randint(1, 6)
            out.append(values)
        else:
            out.append([rng.randint(1, 5) for _ in range(rng.randint(1, 10))])
    return out


def test_interval_agrees_with_stern_brocot_scan():
    for prefix in random_prefixes(120, seed=31):
        if any(v < 1 for v in prefix):
            continue
        iv = theta_interval_from_prefix(prefix)
        found = stern_brocot_witness(prefix)
        if found is not None:
            assert not iv.is_empty
            assert iv.contains(found), (prefix, found)
        if iv.is_empty:
            assert found is None, (prefix, found)
        elif not iv.is_point:
            witness = iv.witness()
            regen = [t.value for t in generate_signature(witness, len(prefix))]
            assert regen == prefix, (prefix, witness)


# --- divergence -----------------------------------------------------------------------

def test_divergence_below_and_above_one():
    assert first_divergence(Fraction(1, 7), Fraction(13, 2), 10) == 2


def test_divergence_inside_shared_seed_window():
    assert first_divergence(Fraction(7, 2), SQRT13, 100) == DIVERGENCE_7_2_VS_SQRT13


def test_divergence_matches_generated_prefixes():
    a, b = Fraction(7, 2), SQRT13
    va = [t.value for t in generate_signature(a, 100)]
    vb = [t.value for t in generate_signature(b, 100)]
    expected = next(k + 1 for k in range(100) if va[k] != vb[k])
    assert first_divergence(a, b, 100) == expected
    assert va[:expected - 1] == vb[:expected - 1]


def test_divergence_not_found_within_horizon():
    assert first_divergence(Fraction(7, 2), SQRT13, 10) is None


def test_divergence_rejects_equal_parameters():
    with pytest.raises(ValueError):
        first_divergence(Fraction(3, 2), Fraction(3, 2), 100)
    with pytest.raises(ValueError):
        first_divergence(SQRT13, Surd.sqrt(13), 100)


def test_divergence_sampled_pairs():
    rng = random.Random(17)
    values = sorted({Fraction(p, q) for q in range(1, 8) for p in range(1, 30)
                     if Fraction(p, q) < 8})
    for _ in range(60):
        a, b = rng.sample(values, 2)
        assert first_divergence(a, b, 5000) is not None
