import random
from fractions import Fraction

import pytest

from priceofmajority import (
    Proposal,
    ResourceLimitError,
    VoterMatrix,
    absolute_representativeness,
    best_representation,
    column_tally,
    has_majority_support,
    half_proposal,
    lemma1_matrix,
    md_of,
    r_V,
    rule_of_three_fourths_check,
    theorem2_matrix,
)
from priceofmajority.core import VoterRow, agreements
from priceofmajority.oracle import Metric, proposal_stats
from priceofmajority.sampling import random_matrix


class TestMdOf:
    def test_intro_matrix(self, intro_matrix):
        assert md_of(intro_matrix) == 6

    def test_lemma1_matrices_are_tight(self):
        for t in range(1, 11):
            assert md_of(lemma1_matrix(t)) == (t + 2) // 2

    def test_single_all_y_voter(self):
        for t in (1, 4, 9):
            matrix = VoterMatrix(t, (VoterRow((1 << t) - 1, t),))
            assert md_of(matrix) == t

    def test_floor_on_random_matrices(self):
        rng = random.Random(3)
        for _ in range(400):
            matrix = random_matrix(rng, max_t=8)
            assert md_of(matrix) >= (matrix.t + 2) // 2

    def test_resource_cap(self):
        matrix = VoterMatrix(30, (VoterRow(0, 30),))
        with pytest.raises(ResourceLimitError):
            md_of(matrix)


class TestBestRepresentation:
    def test_intro_matrix(self, intro_matrix):
        result = best_representation(intro_matrix)
        assert result.metric is Metric.MAX_MATCHES
        assert result.value == 37
        assert r_V(intro_matrix) == Fraction(37, 39)
        assert has_majority_support(intro_matrix, result.best_proposal)

    def test_unanimous_matrix(self):
        matrix = VoterMatrix.from_strings(["YYYY"], weights=[3])
        result = best_representation(matrix)
        assert result.best_proposal.to_string() == "YYYY"
        assert r_V(matrix) == 1

    def test_theorem2_value(self):
        assert r_V(theorem2_matrix(10)) == Fraction(98, 117)

    def test_large_weights(self):
        # weights near and beyond byte range must not wrap the match counts
        for l in (43, 64, 200):
            assert r_V(theorem2_matrix(l)) == Fraction(10 * l - 2, 12 * l - 3)
        huge = VoterMatrix.from_strings(["YNY", "NYN"], weights=[2**70, 1])
        result = best_representation(huge)
        assert result.best_proposal.to_string() == "YNY"
        assert result.value == 3 * 2**70

    def test_deterministic_witness(self, intro_matrix):
        first = best_representation(intro_matrix)
        second = best_representation(intro_matrix)
        assert first == second

    def test_matches_minimize_hamming(self):
        # maximal matches == n*t - minimal weighted hamming distance sum
        rng = random.Random(5)
        for _ in range(100):
            matrix = random_matrix(rng, max_t=6)
            result = best_representation(matrix)
            t = matrix.t
            best_h = min(
                sum(
                    r.weight * (t - agreements(r.mask, p, t))
                    for r in matrix.rows
                )
                for p in range(1 << t)
                if has_majority_support(matrix, Proposal(p, t))
            )
            assert result.value == matrix.n * t - best_h

    def test_python_and_numpy_paths_agree(self):
        rng = random.Random(9)
        for _ in range(30):
            matrix = random_matrix(rng, max_t=6)
            fractional = VoterMatrix(
                matrix.t,
                tuple(
                    VoterRow(r.mask, r.t, Fraction(r.weight)) for r in matrix.rows
                ),
            )
            fast = best_representation(matrix)
            slow = best_representation(fractional)
            assert fast.best_proposal == slow.best_proposal
            assert fast.value == slow.value


class TestProposalStats:
    def test_pair_support_over_all_proposals(self):
        rng = random.Random(13)
        for _ in range(100):
            matrix = random_matrix(rng, max_t=7)
            supp, _ = proposal_stats(matrix)
            full = (1 << matrix.t) - 1
            for p in range(1 << matrix.t):
                assert supp[p] + supp[full - p] >= matrix.n


class TestHalfProposal:
    def test_unanimous_four_topics(self):
        matrix = VoterMatrix.from_strings(["YYYY"], weights=[4])
        p = half_proposal(matrix)
        assert has_majority_support(matrix, p)
        assert absolute_representativeness(matrix, p) >= Fraction(1, 2) - Fraction(1, 4)

    def test_single_topic(self):
        matrix = VoterMatrix.from_strings(["Y", "N"], weights=[2, 1])
        p = half_proposal(matrix)
        assert p.to_string() == "Y"

    def test_theorem2_matrices(self):
        for l in range(1, 12):
            matrix = theorem2_matrix(l)
            p = half_proposal(matrix)
            assert has_majority_support(matrix, p)
            assert absolute_representativeness(matrix, p) >= Fraction(1, 6)

    def test_postcondition_on_random_matrices(self):
        rng = random.Random(17)
        for _ in range(400):
            matrix = random_matrix(rng)
            p = half_proposal(matrix)
            t = matrix.t
            assert has_majority_support(matrix, p)
            assert absolute_representativeness(matrix, p) >= Fraction(1, 2) - Fraction(1, t)


class TestRuleOfThreeFourths:
    def test_unanimous(self):
        matrix = VoterMatrix.from_strings(["YYY"], weights=[2])
        assert column_tally(matrix).m_V == 1
        assert rule_of_three_fourths_check(matrix)

    def test_intro_matrix_vacuous(self, intro_matrix):
        assert column_tally(intro_matrix).m_V < Fraction(3, 4)
        assert rule_of_three_fourths_check(intro_matrix)

    def test_random_matrices(self):
        rng = random.Random(23)
        hits = 0
        for _ in range(600):
            matrix = random_matrix(rng, max_t=6, max_rows=3)
            if column_tally(matrix).m_V >= Fraction(3, 4):
                hits += 1
            assert rule_of_three_fourths_check(matrix)
        assert hits > 0  # the non-vacuous branch was exercised


class TestRelativeFloor:
    def test_r_v_at_least_one_third(self):
        rng = random.Random(29)
        for _ in range(400):
            assert r_V(random_matrix(rng, max_t=8)) >= Fraction(1, 3)

    def test_r_v_lemma5_consequence(self):
        rng = random.Random(31)
        for _ in range(400):
            matrix = random_matrix(rng)
            t = matrix.t
            assert r_V(matrix) >= Fraction(2, 3) - Fraction(4, 3 * t)
