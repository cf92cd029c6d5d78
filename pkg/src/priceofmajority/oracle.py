"""Exhaustive ground truth over all 2^t proposals.

Enumerates proposals as bitmasks 0..2^t-1 and evaluates agreements with
bitwise XOR + popcount against the (weighted) voter rows, so the cost is
independent of the number of voters. Integer-weighted matrices go through a
vectorized numpy path; matrices with rational weights fall back to exact
Python arithmetic.

At least one of any proposal/opposite pair always has majority support (their
supporter weights sum to at least n), so the maxima computed here are taken
over a nonempty set.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .core import (
    ColumnTally,
    ParameterError,
    Proposal,
    ResourceLimitError,
    VoterMatrix,
    absolute_representativeness,
    column_tally,
    has_majority_support,
    support_threshold,
)

DEFAULT_TOPIC_CAP = 24
HARD_TOPIC_CAP = 30
_CHUNK = 1 << 20


class Metric(Enum):
    MAX_MAJORITY_DECISIONS = "md"
    MAX_MATCHES = "matches"


@dataclass(frozen=True)
class OracleResult:
    best_proposal: Proposal
    value: object
    supporter_weight: object
    metric: Metric


def _check_cap(matrix: VoterMatrix, max_topics: int | None) -> None:
    cap = DEFAULT_TOPIC_CAP if max_topics is None else max_topics
    if cap > HARD_TOPIC_CAP:
        raise ParameterError(f"topic cap cannot exceed {HARD_TOPIC_CAP}")
    if matrix.t > cap:
        raise ResourceLimitError(
            f"enumeration over 2^{matrix.t} proposals exceeds the cap of {cap} topics"
        )
    if max_topics is not None and max_topics > DEFAULT_TOPIC_CAP:
        warnings.warn(
            f"enumerating 2^{matrix.t} proposals; this may take a while",
            stacklevel=3,
        )


def proposal_stats(matrix: VoterMatrix) -> tuple[list, list]:
    """Supporter weight and match count for every proposal mask 0..2^t-1.

    Intended for small t (hard limit 20); the scanning reductions below should
    be used for anything larger.
    """
    if matrix.t > 20:
        raise ResourceLimitError("proposal_stats materializes 2^t values; t > 20")
    supp, match = [], []
    for lo, hi, s, m in _scan(matrix):
        supp.extend(s.tolist() if isinstance(s, np.ndarray) else s)
        match.extend(m.tolist() if isinstance(m, np.ndarray) else m)
    return supp, match


def _scan(matrix: VoterMatrix):
    """Yield (lo, hi, supporter_weights, matches) per chunk of proposal masks."""
    t = matrix.t
    threshold = support_threshold(t)
    # n * t bounds every accumulated value; stay in exact Python ints beyond int64
    if matrix.has_integer_weights() and matrix.n * t < 2**62:
        rows = [(np.int64(r.mask), r.weight) for r in matrix.rows]
        for lo in range(0, 1 << t, _CHUNK):
            hi = min(lo + _CHUNK, 1 << t)
            masks = np.arange(lo, hi, dtype=np.int64)
            supp = np.zeros(hi - lo, dtype=np.int64)
            match = np.zeros(hi - lo, dtype=np.int64)
            for rmask, w in rows:
                # bitwise_count returns uint8; widen before weighting
                agree = t - np.bitwise_count(masks ^ rmask).astype(np.int64)
                supp += w * (agree >= threshold)
                match += w * agree
            yield lo, hi, supp, match
    else:
        rows = [(r.mask, r.weight) for r in matrix.rows]
        for lo in range(0, 1 << t, _CHUNK):
            hi = min(lo + _CHUNK, 1 << t)
            supp, match = [], []
            for p in range(lo, hi):
                s = 0
                m = 0
                for rmask, w in rows:
                    agree = t - (rmask ^ p).bit_count()
                    if agree >= threshold:
                        s += w
                    m += w * agree
                supp.append(s)
                match.append(m)
            yield lo, hi, supp, match


def md_of(matrix: VoterMatrix, max_topics: int | None = None) -> int:
    """Maximum Y-count over all majority-supported proposals."""
    _check_cap(matrix, max_topics)
    t = matrix.t
    n = matrix.n
    best = -1
    for lo, hi, supp, match in _scan(matrix):
        if isinstance(supp, np.ndarray):
            ok = 2 * supp >= n
            if ok.any():
                masks = np.arange(lo, hi, dtype=np.int64)[ok]
                best = max(best, int(np.bitwise_count(masks).max()))
        else:
            for p, s in zip(range(lo, hi), supp):
                if 2 * s >= n:
                    best = max(best, p.bit_count())
    if best < 0:
        raise AssertionError("no majority-supported proposal; pair-support violated")
    return best


def best_representation(
    matrix: VoterMatrix, max_topics: int | None = None
) -> OracleResult:
    """Majority-supported proposal maximizing the match count.

    Ties are broken toward the larger Y-count, then the lexicographically
    smallest bitmask, so identical inputs always yield identical witnesses.
    """
    _check_cap(matrix, max_topics)
    t = matrix.t
    n = matrix.n
    best = None  # (matches, ones, -mask) maximized
    best_supp = None
    for lo, hi, supp, match in _scan(matrix):
        if isinstance(supp, np.ndarray):
            ok = 2 * supp >= n
            if not ok.any():
                continue
            masks = np.arange(lo, hi, dtype=np.int64)[ok]
            svals = supp[ok]
            mvals = match[ok]
            keep = mvals == mvals.max()
            masks, mvals, svals = masks[keep], mvals[keep], svals[keep]
            ones = np.bitwise_count(masks)
            keep = ones == ones.max()
            masks, mvals, svals, ones = masks[keep], mvals[keep], svals[keep], ones[keep]
            i = int(np.argmin(masks))
            cand = (int(mvals[i]), int(ones[i]), -int(masks[i]))
            if best is None or cand > best:
                best = cand
                best_supp = int(svals[i])
        else:
            for p, s, m in zip(range(lo, hi), supp, match):
                if 2 * s >= n:
                    cand = (m, p.bit_count(), -p)
                    if best is None or cand > best:
                        best = cand
                        best_supp = s
    if best is None:
        raise AssertionError("no majority-supported proposal; pair-support violated")
    value, _, neg_mask = best
    return OracleResult(
        best_proposal=Proposal(-neg_mask, t),
        value=value,
        supporter_weight=best_supp,
        metric=Metric.MAX_MATCHES,
    )


def r_V(matrix: VoterMatrix, max_topics: int | None = None) -> Fraction:
    """Best relative representativeness of a majority-supported proposal."""
    result = best_representation(matrix, max_topics)
    tally = column_tally(matrix)
    return Fraction(result.value) / (Fraction(matrix.n) * matrix.t * tally.m_V)


def R_V(matrix: VoterMatrix, max_topics: int | None = None) -> Fraction:
    result = best_representation(matrix, max_topics)
    return Fraction(result.value) / (Fraction(matrix.n) * matrix.t)


def half_proposal(matrix: VoterMatrix) -> Proposal:
    """A majority-supported proposal with representativeness >= 1/2 - 1/t.

    Takes the maximal k (in the given topic order) such that agreeing with
    the majority on the first k topics and the minority on the rest stays at
    representativeness <= 1/2; that proposal and its opposite then straddle
    1/2, and whichever has majority support is returned (preferring the
    larger representativeness when both qualify). Linear time, no
    enumeration; requires canonical input.
    """
    tally = column_tally(matrix)
    t = matrix.t
    total = sum(Fraction(1) - tally.m(i) for i in range(t))
    k = 0
    while k < t:
        candidate = total + 2 * tally.m(k) - 1  # swap topic k from minority to majority
        if candidate > Fraction(t, 2):
            break
        total = candidate
        k += 1
    p = Proposal((1 << k) - 1, t)
    q = p.opposite()
    p_ok = has_majority_support(matrix, p)
    q_ok = has_majority_support(matrix, q)
    if p_ok and q_ok:
        return (
            p
            if absolute_representativeness(matrix, p)
            > absolute_representativeness(matrix, q)
            else q
        )
    return p if p_ok else q


def rule_of_three_fourths_check(matrix: VoterMatrix) -> bool:
    """Whether an average majority of >= 3/4 implies the all-Y proposal is supported.

    Vacuously true when the average majority is below 3/4; expected to hold
    for every canonical matrix.
    """
    tally = column_tally(matrix)
    if tally.m_V < Fraction(3, 4):
        return True
    all_y = Proposal((1 << matrix.t) - 1, matrix.t)
    return has_majority_support(matrix, all_y)
