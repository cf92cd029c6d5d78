"""Exact rational linear programming for the maximum average majority ma_t(w).

ma_t(w) is the supremum of average majorities over voter matrices in which no
proposal with w or more majority decisions has majority support. It is the
optimum of an LP over the l-voter type fractions v'_0..v'_t:

    maximize (1/t) * sum_l l * v'_l
    subject to sum_l s_kl(t, k, l) * v'_l <= s_kl(t, k, t) / 2   for k = w..t
               sum_l v'_l = 1,  v'_l >= 0

The strict "<" of the underlying feasibility condition is relaxed to "<=":
the closed optimum equals the supremum of the open region, and matrices
arbitrarily close to it exist (supremum semantics). Constraint rows are
normalized by s_kl(t, k, t) so every coefficient is a rational in [0, 1].

The exact solver is a dense tableau simplex over rationals (gmpy2.mpq when
available, Fraction otherwise) with Dantzig pricing and a switch to Bland's
anti-cycling rule after a run of degenerate pivots, so termination is
guaranteed and results are deterministic. A float fallback based on
scipy's HiGHS backend extends sweeps to t around 1000.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, min_k, s_kl
from .core import ParameterError, ResourceLimitError, TypeProfile

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rational = Fraction

EXACT_T_CAP = 200
FLOAT_T_CAP = 1000
_DEGENERATE_PIVOT_LIMIT = 30


@dataclass(frozen=True)
class LinearProgram:
    """Normalized LP for ma_t(w): rows k = w..t, variables v'_0..v'_t."""

    t: int
    w: int
    objective: tuple[Fraction, ...]  # l/t for l = 0..t
    ks: tuple[int, ...]
    rows: tuple[tuple[Fraction, ...], ...]  # s_kl / s_kt, in [0, 1]
    rhs: tuple[Fraction, ...]  # 1/2 per row


@dataclass(frozen=True)
class LpSolution:
    t: int
    w: int
    profile: TypeProfile | tuple
    ma: Fraction | float
    active: tuple[int, ...]  # k values of tight inequality rows
    pivots: int
    exact: bool = True
    residual: float = 0.0  # max constraint violation (float mode only)


def build_ma_lp(t: int, w: int) -> LinearProgram:
    if not min_k(t) <= w <= t:
        raise ParameterError(f"w must lie in [{min_k(t)}, {t}], got {w}")
    ks = tuple(range(w, t + 1))
    rows = tuple(
        tuple(Fraction(s_kl(t, k, l), binomial(t, k)) for l in range(t + 1))
        for k in ks
    )
    return LinearProgram(
        t=t,
        w=w,
        objective=tuple(Fraction(l, t) for l in range(t + 1)),
        ks=ks,
        rows=rows,
        rhs=tuple(Fraction(1, 2) for _ in ks),
    )


def _simplex(c, A, b):
    """Maximize c.x subject to A x <= b, x >= 0, with exact rationals.

    All b >= 0, so the slack basis is feasible. Returns (x, value, pivots).
    """
    m, n = len(A), len(c)
    zero = _rational(0)
    one = _rational(1)
    T = [
        [_rational(v) for v in A[i]]
        + [one if j == i else zero for j in range(m)]
        + [_rational(b[i])]
        for i in range(m)
    ]
    obj = [-_rational(v) for v in c] + [zero] * (m + 1)
    basis = list(range(n, n + m))
    pivots = 0
    degenerate_run = 0
    while True:
        if degenerate_run < _DEGENERATE_PIVOT_LIMIT:
            enter, best = None, zero
            for j in range(n + m):
                if obj[j] < best:
                    best, enter = obj[j], j
        else:  # Bland: smallest index with negative reduced cost
            enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        ratio = None
        for i in range(m):
            coef = T[i][enter]
            if coef > 0:
                r = T[i][-1] / coef
                if (
                    ratio is None
                    or r < ratio
                    or (r == ratio and basis[i] < basis[leave])
                ):
                    ratio, leave = r, i
        if leave is None:
            raise AssertionError("LP unbounded; the mass constraint is missing")
        degenerate_run = degenerate_run + 1 if ratio == 0 else 0
        piv = T[leave][enter]
        row = [v / piv for v in T[leave]]
        T[leave] = row
        for i in range(m):
            f = T[i][enter]
            if i != leave and f:
                T[i] = [a - f * r for a, r in zip(T[i], row)]
        f = obj[enter]
        if f:
            obj = [a - f * r for a, r in zip(obj, row)]
        basis[leave] = enter
        pivots += 1
    x = [zero] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][-1]
    return x, obj[-1], pivots


def solve_ma(t: int, w: int) -> LpSolution:
    """Exact optimum of the ma_t(w) LP.

    The mass equality is solved as sum v'_l <= 1; any slack is absorbed into
    v'_0, which has zero objective weight and appears in no inequality row
    (a 0-voter never supports a proposal with more than half Ys).
    """
    if t > EXACT_T_CAP:
        raise ResourceLimitError(
            f"exact mode is capped at t={EXACT_T_CAP}; use float fallback"
        )
    lp = build_ma_lp(t, w)
    A = [row for row in lp.rows] + [tuple(Fraction(1) for _ in range(t + 1))]
    b = list(lp.rhs) + [Fraction(1)]
    x, value, pivots = _simplex(lp.objective, A, b)
    fractions = [Fraction(int(v.numerator), int(v.denominator)) for v in x]
    fractions[0] += 1 - sum(fractions)
    profile = TypeProfile(tuple(fractions))
    ma = Fraction(int(value.numerator), int(value.denominator))
    active = tuple(
        k
        for k, row, rhs in zip(lp.ks, lp.rows, lp.rhs)
        if sum(coef * v for coef, v in zip(row, profile.fractions)) == rhs
    )
    return LpSolution(t=t, w=w, profile=profile, ma=ma, active=active, pivots=pivots)


def _normalized_coefficients_float(t: int):
    """s_kl / s_kt for all k >= ceil((t+1)/2) as a float matrix.

    The normalized coefficient is the hypergeometric tail probability
    P[X >= ceil((k + l - floor(t/2)) / 2)] for X ~ Hypergeom(t, l, k).
    """
    import numpy as np
    from scipy.stats import hypergeom

    w0 = min_k(t)
    ks = np.arange(w0, t + 1)
    ls = np.arange(0, t + 1)
    K, L = np.meshgrid(ks, ls, indexing="ij")
    lo = -((-(K + L - t // 2)) // 2)
    return hypergeom.sf(lo - 1, t, L, K)


def solve_ma_float(t: int, w: int, _coeffs=None) -> LpSolution:
    """Double-precision fallback for large t; results labeled approximate."""
    import numpy as np
    from scipy.optimize import linprog

    if t > FLOAT_T_CAP:
        raise ResourceLimitError(f"float mode is capped at t={FLOAT_T_CAP}")
    if not min_k(t) <= w <= t:
        raise ParameterError(f"w must lie in [{min_k(t)}, {t}], got {w}")
    S = _normalized_coefficients_float(t) if _coeffs is None else _coeffs
    A = S[w - min_k(t) :, :]
    b = np.full(A.shape[0], 0.5)
    c = -np.arange(t + 1) / t
    res = linprog(
        c,
        A_ub=A,
        b_ub=b,
        A_eq=[np.ones(t + 1)],
        b_eq=[1.0],
        bounds=(0, None),
        method="highs",
    )
    if res.status != 0:
        raise AssertionError(f"float LP failed at t={t}, w={w}: {res.message}")
    x = res.x
    lhs = A @ x
    residual = float(max(np.max(lhs - b, initial=0.0), abs(x.sum() - 1.0)))
    active = tuple(
        int(k) for k, v in zip(range(w, t + 1), lhs) if v >= 0.5 - 1e-9
    )
    return LpSolution(
        t=t,
        w=w,
        profile=tuple(x),
        ma=float(-res.fun),
        active=active,
        pivots=0,
        exact=False,
        residual=residual,
    )


def ma_table(t: int, exact: bool | None = None) -> list[tuple[int, Fraction | float]]:
    """(w, ma_t(w)) for every w in [ceil((t+1)/2), t].

    ``exact=None`` picks exact mode up to the exact cap and the float
    fallback beyond it.
    """
    if exact is None:
        exact = t <= EXACT_T_CAP
    w0 = min_k(t)
    if exact:
        return [(w, solve_ma(t, w).ma) for w in range(w0, t + 1)]
    coeffs = _normalized_coefficients_float(t)
    return [
        (w, solve_ma_float(t, w, _coeffs=coeffs).ma) for w in range(w0, t + 1)
    ]
