"""Closed forms of the torus root sums against literal evaluation."""

import random

import pytest

from psl2cov.cyclotomic import integer
from psl2cov.rootsums import (
    closed_sum,
    direct_sum,
    lemma_sweep,
    make_spec,
    nonsplit_indices,
    split_indices,
)
from psl2cov.tables import NotAPrimePower, group_params, prime_power


def test_index_ranges_per_case():
    assert list(split_indices(group_params(8))) == [1, 2, 3]
    assert list(nonsplit_indices(group_params(8))) == [1, 2, 3, 4]
    assert list(split_indices(group_params(11))) == [2, 4]
    assert list(nonsplit_indices(group_params(11))) == [2, 4]
    assert list(split_indices(group_params(13))) == [2, 4]
    assert list(nonsplit_indices(group_params(13))) == [2, 4, 6]


def test_make_spec_rejects_bad_input():
    with pytest.raises(NotAPrimePower):
        make_spec(6, "split", 1, 1)
    with pytest.raises(ValueError):
        make_spec(8, "diagonal", 1, 1)
    with pytest.raises(ValueError):
        make_spec(8, "split", 0, 1)
    with pytest.raises(ValueError):
        make_spec(8, "split", 4, 1)  # only 1..3 legal
    with pytest.raises(ValueError):
        make_spec(11, "split", 3, 1)  # odd index in an even-only range
    with pytest.raises(ValueError):
        make_spec(8, "split", 1, 0)


def test_closed_equals_direct_on_seeded_specs():
    rng = random.Random(4001)
    qs = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)
    for _ in range(200):
        q = rng.choice(qs)
        kind = rng.choice(("split", "nonsplit"))
        params = group_params(q)
        legal = list(split_indices(params) if kind == "split"
                     else nonsplit_indices(params))
        if not legal:  # q = 5 has no principal series at all
            continue
        spec = make_spec(q, kind, rng.choice(legal), rng.randint(1, 20))
        assert direct_sum(spec) == closed_sum(spec), spec


def test_degenerate_branches():
    # every root collapses to 1: the value is the summand count
    assert closed_sum(make_spec(8, "split", 1, 7)) == integer(6)  # q - 2
    assert direct_sum(make_spec(8, "split", 1, 7)) == integer(6)
    assert closed_sum(make_spec(8, "nonsplit", 3, 3)) == integer(8)  # q
    assert direct_sum(make_spec(8, "nonsplit", 3, 3)) == integer(8)
    # odd q: the corrected counts (q -+ 3)/2 and (q - 1)/2
    assert direct_sum(make_spec(11, "nonsplit", 4, 3)) == integer(4)
    assert closed_sum(make_spec(11, "nonsplit", 4, 3)) == integer(4)
    assert direct_sum(make_spec(13, "split", 4, 3)) == integer(6)
    assert closed_sum(make_spec(13, "split", 4, 3)) == integer(6)
    assert direct_sum(make_spec(13, "nonsplit", 2, 7)) == integer(6)
    assert closed_sum(make_spec(13, "nonsplit", 2, 7)) == integer(6)


def test_nondegenerate_split_values():
    # generic split sums collapse to -1 (even, 3mod4) or -1 +- 1 (1mod4)
    assert closed_sum(make_spec(8, "split", 1, 1)) == integer(-1)
    assert closed_sum(make_spec(11, "split", 2, 1)) == integer(-1)
    assert closed_sum(make_spec(13, "split", 2, 1)) == integer(-2)  # tk/2 odd
    assert closed_sum(make_spec(13, "split", 2, 2)) == integer(0)   # tk/2 even


def test_lemma_sweep_small_range():
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32):
        report = lemma_sweep(q, t_max=12)
        assert report.ok, (q, report.counterexamples)
        want = 12 * (len(split_indices(group_params(q)))
                     + len(nonsplit_indices(group_params(q))))
        assert report.checked == want, q


def test_lemma_sweep_total_volume():
    total = sum(lemma_sweep(q, t_max=12).checked
                for q in range(4, 65) if prime_power(q))
    assert total == 4704
