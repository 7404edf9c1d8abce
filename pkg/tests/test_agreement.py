# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from echelon import Scale, ValidationError
from echelon.agreement import (
    RatingTable,
    agreement_report,
    brennan_prediger,
    gwet_gamma,
    krippendorff_alpha,
    krippendorff_alpha_flagged,
    percent_agreement,
    scale_agreement,
    tables_from_votes,
)
from echelon.labels import VoteRecord


def ratings(pair):
    return [0] * int(pair[0]) + [1] * int(pair[1])


def oracle_percent_agreement(pairs):
    shares = []
    for pair in pairs:
        values = ratings(pair)
        if len(values) < 2:
            continue
        agreeing = sum(
            1 for i, j in itertools.permutations(range(len(values)), 2) if values[i] == values[j]
        )
        shares.append(agreeing / (len(values) * (len(values) - 1)))
    return sum(shares) / len(shares)


def oracle_alpha(pairs):
    coincidence = np.zeros((2, 2))
    for pair in pairs:
        values = ratings(pair)
        m = len(values)
        if m < 2:
            continue
        for i, j in itertools.permutations(range(m), 2):
            coincidence[values[i], values[j]] += 1.0 / (m - 1)
    marginals = coincidence.sum(axis=1)
    total = marginals.sum()
    observed = (coincidence[0, 1] + coincidence[1, 0]) / total
    expected = 2.0 * marginals[0] * marginals[1] / (total * (total - 1.0))
    if expected == 0.0:
        return None
    return 1.0 - observed / expected


def oracle_ac1(pairs):
    usable = [pair for pair in pairs if sum(pair) >= 2]
    p_a = oracle_percent_agreement(usable)
    share = sum(pair[1] / sum(pair) for pair in usable) / len(usable)
    p_e = 2.0 * share * (1.0 - share)
    return (p_a - p_e) / (1.0 - p_e)


tables = st.lists(
    st.tuples(st.integers(0, 8), st.integers(0, 8)).filter(lambda p: 0 < sum(p) <= 8),
    min_size=1,
    max_size=6,
).filter(lambda pairs: any(sum(p) >= 2 for p in pairs))


@settings(max_examples=200)
@given(tables)
def test_coefficients_match_oracles(pairs):
    table = RatingTable.from_pairs(pairs)
    p_a = percent_agreement(table)
    kappa = brennan_prediger(table)
    gamma = gwet_gamma(table)
    assert p_a == pytest.approx(oracle_percent_agreement(pairs), abs=1e-10)
    assert gamma == pytest.approx(oracle_ac1(pairs), abs=1e-10)
    assert gamma >= kappa - 1e-12
    alpha, degenerate = krippendorff_alpha_flagged(table)
    expected = oracle_alpha(pairs)
    if expected is None:
        assert degenerate and alpha == 1.0
    else:
        assert not degenerate
        assert alpha == pytest.approx(expected, abs=1e-10)


@given(tables)
def test_coefficients_ignore_pole_orientation(pairs):
    table = RatingTable.from_pairs(pairs)
    left = scale_agreement(table)
    right = scale_agreement(table.swapped())
    assert right.p_a == pytest.approx(left.p_a, abs=1e-12)
    assert right.alpha == pytest.approx(left.alpha, abs=1e-12)
    assert right.gamma == pytest.approx(left.gamma, abs=1e-12)


@pytest.mark.parametrize(
    "p_a, kappa",
    [(0.87454, 0.74908), (0.80204, 0.60408), (0.83334, 0.66669), (0.90624, 0.81247)],
)
def test_brennan_prediger_reference_values(p_a, kappa):
    table = RatingTable.from_pairs([(2, 0), (1, 1)])
    assert brennan_prediger(table) == 2.0 * percent_agreement(table) - 1.0
    assert abs((2.0 * p_a - 1.0) - kappa) < 1e-3


def test_perfect_agreement():
    table = RatingTable.from_pairs([(3, 0), (0, 3)])
    assert percent_agreement(table) == 1.0
    assert brennan_prediger(table) == 1.0
    assert krippendorff_alpha(table) == 1.0
    assert gwet_gamma(table) == 1.0


def test_single_category_alpha_is_flagged():
    table = RatingTable.from_pairs([(3, 0), (2, 0)])
    assert krippendorff_alpha_flagged(table) == (1.0, True)
    assert scale_agreement(table).alpha_degenerate


def test_skewed_table_shows_the_paradox():
    # high raw agreement on a rare category still gives a low alpha
    table = RatingTable.from_pairs([(9, 1)] * 10 + [(10, 0)] * 10)
    assert percent_agreement(table) > 0.85
    assert krippendorff_alpha(table) < 0.1
    assert gwet_gamma(table) > 0.85


def test_subjects_with_one_rater_are_excluded(caplog):
    caplog.set_level("INFO")
    table = RatingTable.from_pairs([(2, 0), (1, 0), (0, 0)], subjects=["a", "b", "c"])
    row = scale_agreement(table)
    assert (row.n_subjects, row.n_excluded) == (1, 2)
    assert "excluding 2 subject(s)" in caplog.text
    with pytest.raises(ValidationError):
        percent_agreement(RatingTable.from_pairs([(1, 0), (0, 1)]))


def test_rating_table_validation():
    with pytest.raises(ValidationError):
        RatingTable(("a",), np.array([[1, 2], [3, 4]]))
    with pytest.raises(ValidationError):
        RatingTable.from_pairs([(-1, 2)])


def test_report_from_votes():
    votes = {
        "a": [VoteRecord(s, 3, 1) for s in ("ei", "sn", "tf", "jp")],
        "b": [VoteRecord(s, 0, 4) for s in ("ei", "sn", "tf", "jp")],
    }
    tables = tables_from_votes(votes)
    assert tables[Scale.EI].subjects == ("a", "b")
    assert tables[Scale.EI].counts.tolist() == [[3, 1], [0, 4]]
    report = agreement_report(tables)
    assert report["ei"].p_a == pytest.approx((0.5 + 1.0) / 2)
    frame = report.to_frame()
    assert list(frame["scale"]) == ["E–I", "S–N", "T–F", "J–P"]
    assert frame["p_a"].iloc[0] == pytest.approx(75.0)


def test_report_names_failing_scale():
    votes = {
        "a": [VoteRecord("ei", 1, 0)] + [VoteRecord(s, 2, 2) for s in ("sn", "tf", "jp")],
    }
    with pytest.raises(ValidationError, match="scale ei"):
        agreement_report(tables_from_votes(votes))
