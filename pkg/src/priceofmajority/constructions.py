"""Generators for the worst-case voter matrices behind each bound.

Every generator returns a weighted :class:`VoterMatrix`; brute-force checks
on them are therefore independent of the (often huge) nominal voter count.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .combinatorics import binomial, min_k, s_kl
from .core import (
    ParameterError,
    ResourceLimitError,
    TypeProfile,
    VoterMatrix,
    VoterRow,
    column_tally,
)

VLP_TOPIC_CAP = 20


def lemma1_matrix(t: int) -> VoterMatrix:
    """t singleton-Y voters plus an all-Y block of weight t-1.

    Every column tallies t of n = 2t - 1 Ys, yet no majority-supported
    proposal can side with more than ceil((t+1)/2) majorities: the tight
    worst case for counting majority decisions.
    """
    if t < 1:
        raise ParameterError("lemma1_matrix requires t >= 1")
    rows = [VoterRow(1 << i, t) for i in range(t)]
    if t > 1:
        rows.append(VoterRow((1 << t) - 1, t, t - 1))
    return VoterMatrix(t, tuple(rows))


def theorem2_matrix(l: int) -> VoterMatrix:
    """The 3-topic family showing the relative-representativeness floor of 5/6.

    Three singleton voters with weight l each plus an all-Y block of weight
    3l - 1; the all-Y proposal narrowly misses majority support, and the best
    supported proposal achieves exactly (10l - 2)/(12l - 3) -> 5/6.
    """
    if l < 1:
        raise ParameterError("theorem2_matrix requires l >= 1")
    rows = (
        VoterRow(0b001, 3, l),
        VoterRow(0b010, 3, l),
        VoterRow(0b100, 3, l),
        VoterRow(0b111, 3, 3 * l - 1),
    )
    return VoterMatrix(3, rows)


def theorem3_matrix(t: int, k: int, M: int) -> VoterMatrix:
    """Equal-majority matrix: n = 2k+1 voters, every column with exactly M Ys.

    The bottom k voters are all-Y; the remaining (M - k) * t Ys are dealt to
    the top k+1 voters round-robin over the columns, so every column gets
    exactly M - k of them and row counts differ by at most one.
    """
    if t < 1:
        raise ParameterError("theorem3_matrix requires t >= 1")
    n = 2 * k + 1
    if not k + 1 <= M <= n:
        raise ParameterError(f"theorem3_matrix requires k+1 <= M <= 2k+1, got M={M}")
    total = (M - k) * t
    base, extra = divmod(total, k + 1)
    col = 0
    rows = []
    for i in range(k + 1):
        quota = base + (1 if i < extra else 0)
        mask = 0
        for _ in range(quota):
            mask |= 1 << col
            col = (col + 1) % t
        rows.append(VoterRow(mask, t))
    if k >= 1:
        rows.append(VoterRow((1 << t) - 1, t, k))
    matrix = VoterMatrix(t, tuple(rows))
    # cyclic dealing guarantees per-column balance; cheap to double-check
    if any(y != M for y in column_tally(matrix).y_weights):
        raise AssertionError("column balance violated in theorem3_matrix")
    return matrix


def theorem3_rv_bound(t: int, k: int, M: int) -> float:
    """Provable bound on r_V of theorem3_matrix(t, k, M).

    No proposal with x + ceil((t+1)/2) or more Ys (x the largest top-voter
    Y-count) gets any top-voter support, hence no majority; the best
    remaining proposal is bounded by this expression.
    """
    n = 2 * k + 1
    x = -(-((M - k) * t) // (k + 1))
    return 1 - ((t + 1) // 2 - x) * (2 * M - n) / (t * M)


def theorem3_proof_parameters(t: int, k_limit: int = 200) -> tuple[int, int]:
    """Smallest (k, M) whose provable r_V bound undercuts the analytic limit.

    Scans k upward (M over its full range per k), mirroring the proof's
    "k and M sufficiently large with M/k near sqrt(3/2)" prescription but
    returning concrete parameters usable at brute-force scale.
    """
    from .bounds import rt_analytic_upper

    target = rt_analytic_upper(t)
    for k in range(2, k_limit + 1):
        for M in range(k + 1, 2 * k + 2):
            if theorem3_rv_bound(t, k, M) <= target:
                return k, M
    raise ParameterError(f"no (k, M) with provable bound below {target} for t={t}")


def lemma7_matrix(t: int, w: int, n: int) -> VoterMatrix:
    """High-average-majority matrix with no majority-supported w-Y proposal.

    Top ceil(n/2) voters say Y exactly on the first w - ceil((t+1)/2) topics;
    the bottom floor(n/2) are all-Y. For odd n no proposal with w or more Ys
    has majority support (counted in this construction's Y-frame; columns
    outside the top block have an N-majority for odd n, so the matrix is not
    canonical there).
    """
    if not min_k(t) <= w <= t:
        raise ParameterError(f"lemma7_matrix requires {min_k(t)} <= w <= {t}")
    if n < 1:
        raise ParameterError("lemma7_matrix requires n >= 1")
    a = w - min_k(t)
    rows = [VoterRow((1 << a) - 1, t, -(-n // 2))]
    if n // 2 >= 1:
        rows.append(VoterRow((1 << t) - 1, t, n // 2))
    return VoterMatrix(t, tuple(rows))


def vlp_matrix(t: int, w: int, profile: TypeProfile) -> VoterMatrix:
    """Topic-symmetric matrix realizing a feasible l-voter type profile.

    For each l with positive mass, all C(t, l) distinct l-voters appear with
    equal rational weight, so permuting topics maps the row multiset onto
    itself; the total weight is 1 and the average majority equals the
    profile's objective value sum(l * v_l) / t. Feasibility (every k-proposal
    with k >= w supported by at most half the weight) is validated with the
    closed constraint set, so a boundary profile is accepted with supporter
    weight exactly 1/2.
    """
    if t > VLP_TOPIC_CAP:
        raise ResourceLimitError(f"vlp_matrix materializes up to 2^t rows; t > {VLP_TOPIC_CAP}")
    if profile.t != t:
        raise ParameterError(f"profile covers {profile.t} topics, expected {t}")
    if not min_k(t) <= w <= t:
        raise ParameterError(f"vlp_matrix requires {min_k(t)} <= w <= {t}")
    for k in range(w, t + 1):
        lhs = sum(s_kl(t, k, l) * profile.fractions[l] for l in range(t + 1))
        if lhs > Fraction(binomial(t, k), 2):
            raise ParameterError(
                f"profile infeasible: k-proposal support exceeds half at k={k}"
            )
    rows = []
    for l, v in enumerate(profile.fractions):
        if v == 0:
            continue
        share = v / binomial(t, l)
        for positions in combinations(range(t), l):
            mask = 0
            for pos in positions:
                mask |= 1 << pos
            rows.append(VoterRow(mask, t, share))
    return VoterMatrix(t, tuple(rows))
