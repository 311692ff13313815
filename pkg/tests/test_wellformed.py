"""Gcd conditions: golden examples, violation completeness, variant agreement."""

import random

from wcidp.classifier import Candidate
from wcidp.wellformed import PAIR_GCD, SINGLE_GCD, TRIPLE_GCD, check_wf, is_well_formed


def test_table_row_is_well_formed():
    assert check_wf(Candidate.of(2, 2, 3, 3, 3, 6, 6)).passed


def test_triple_gcd_violation_is_reported_with_witness():
    report = check_wf(Candidate.of(1, 2, 2, 5, 5, 6, 7))
    assert not report.passed
    hits = [v for v in report.violations if v.condition == TRIPLE_GCD]
    assert any(v.omitted == (0, 1, 2) and v.gcd_value == 5 for v in hits)


def test_four_weight_common_factor_fails_single_condition():
    report = check_wf(Candidate.of(2, 2, 3, 4, 6, 7, 9))
    singles = [v for v in report.violations if v.condition == SINGLE_GCD]
    assert any(v.omitted == (2,) and v.gcd_value == 2 for v in singles)


def test_all_violations_are_listed_not_just_the_first():
    # Every weight even, both degrees odd: all 25 sub-conditions fail.
    report = check_wf(Candidate.of(2, 2, 2, 2, 2, 3, 5))
    assert not report.passed
    by_kind = {TRIPLE_GCD: 0, PAIR_GCD: 0, SINGLE_GCD: 0}
    for v in report.violations:
        by_kind[v.condition] += 1
    assert by_kind == {TRIPLE_GCD: 10, PAIR_GCD: 10, SINGLE_GCD: 5}


def test_report_invariant_passed_iff_no_violations():
    rng = random.Random(3)
    for _ in range(300):
        c = Candidate(
            tuple(rng.randint(1, 12) for _ in range(5)),
            rng.randint(1, 30),
            rng.randint(1, 30),
        )
        report = check_wf(c)
        assert report.passed == (len(report.violations) == 0)


def test_invariant_under_input_reordering():
    rng = random.Random(11)
    for _ in range(100):
        weights = [rng.randint(1, 10) for _ in range(5)]
        d = sorted((rng.randint(1, 25), rng.randint(1, 25)))
        base = check_wf(Candidate(weights, d[0], d[1]))
        shuffled = list(weights)
        rng.shuffle(shuffled)
        again = check_wf(Candidate(shuffled, d[1], d[0]))
        assert base == again


def test_short_circuit_variant_agrees_with_report():
    rng = random.Random(17)
    for _ in range(400):
        c = Candidate(
            tuple(rng.randint(1, 14) for _ in range(5)),
            rng.randint(1, 40),
            rng.randint(1, 40),
        )
        assert is_well_formed(c.weights.a, c.d1, c.d2) == check_wf(c).passed
