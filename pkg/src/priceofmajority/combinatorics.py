"""Exact big-integer combinatorics for support counting.

``s_kl(t, k, l)`` counts the k-proposals supported by any fixed l-voter; the
count is well-defined because permuting topics maps l-voters onto each other
while leaving the set of k-proposals invariant. The closed formula is only
valid for k >= ceil((t+1)/2); :func:`s_kl_oracle` enumerates directly and
works for every k (at exponential cost).
"""

from __future__ import annotations

import math
from itertools import combinations

from .core import ParameterError, ResourceLimitError, support_threshold

ORACLE_TOPIC_CAP = 20


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ParameterError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def min_k(t: int) -> int:
    """Smallest k for which the s_kl formula (and the ma LP) is defined."""
    return _ceil_div(t + 1, 2)


def s_kl(t: int, k: int, l: int) -> int:
    """Number of k-proposals supported by an l-voter, for k in [ceil((t+1)/2), t].

    A k-proposal sharing x Ys with the l-voter agrees with it on
    x + (t - l) - (k - x) topics, so it is supported iff
    x >= ceil((k + l - floor(t/2)) / 2).
    """
    if t < 1:
        raise ParameterError("s_kl requires t >= 1")
    if not 0 <= l <= t:
        raise ParameterError(f"s_kl requires 0 <= l <= t, got l={l}")
    if not min_k(t) <= k <= t:
        raise ParameterError(
            f"s_kl formula is only valid for k in [{min_k(t)}, {t}], got k={k}; "
            "use s_kl_oracle for general k"
        )
    lo = max(0, _ceil_div(k + l - t // 2, 2))
    return sum(binomial(l, x) * binomial(t - l, k - x) for x in range(lo, k + 1))


def s_kl_oracle(t: int, k: int, l: int, voter_mask: int | None = None) -> int:
    """Count supported k-proposals by direct enumeration over all C(t, k) of them.

    Defaults to the l-voter Y^l N^(t-l); any other l-voter mask can be passed
    to exercise the permutation invariance.
    """
    if t < 1:
        raise ParameterError("s_kl_oracle requires t >= 1")
    if t > ORACLE_TOPIC_CAP:
        raise ResourceLimitError(
            f"s_kl_oracle enumerates C(t, k) proposals; t={t} exceeds {ORACLE_TOPIC_CAP}"
        )
    if not 0 <= k <= t or not 0 <= l <= t:
        raise ParameterError("s_kl_oracle requires 0 <= k, l <= t")
    if voter_mask is None:
        voter_mask = (1 << l) - 1
    elif voter_mask.bit_count() != l:
        raise ParameterError("voter_mask is not an l-voter")
    threshold = support_threshold(t)
    count = 0
    for positions in combinations(range(t), k):
        p = 0
        for pos in positions:
            p |= 1 << pos
        if t - (p ^ voter_mask).bit_count() >= threshold:
            count += 1
    return count


def c_l(t: int, l: int) -> int:
    """Weighted support sum c_l = sum_{k=ceil(t/2)}^{t} (2k - t) * s_kl(t, k, l).

    Defined here for odd t (where ceil(t/2) = ceil((t+1)/2), keeping every
    term inside the formula's validity range). Equals l * C(t-1, floor(t/2));
    the test suite checks that identity against this summation form.
    """
    if t < 1 or t % 2 == 0:
        raise ParameterError("c_l is defined for odd t >= 1")
    if not 0 <= l <= t:
        raise ParameterError("c_l requires 0 <= l <= t")
    return sum((2 * k - t) * s_kl(t, k, l) for k in range(_ceil_div(t, 2), t + 1))
