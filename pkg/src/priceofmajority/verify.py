"""Named property suites over exact identities and seeded random matrices."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .combinatorics import binomial, c_l, min_k, s_kl, s_kl_oracle
from .constructions import lemma1_matrix
from .core import VoterMatrix
from .sampling import random_matrix

DEFAULT_SEED = 2022


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[tuple[str, VoterMatrix | None]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, description: str, matrix: VoterMatrix | None = None):
        self.checks += 1
        if not ok:
            self.failures.append((description, matrix))


def suite_skl(t_max: int = 12) -> SuiteResult:
    """Closed formula vs direct enumeration for every (t, k, l) in range."""
    result = SuiteResult("skl")
    for t in range(1, t_max + 1):
        for k in range(min_k(t), t + 1):
            for l in range(t + 1):
                ok = s_kl(t, k, l) == s_kl_oracle(t, k, l)
                result.record(ok, f"s_kl mismatch at t={t}, k={k}, l={l}")
    return result


def suite_identity(t_max: int = 30) -> SuiteResult:
    """Weighted support sums collapse to l * C(t-1, floor(t/2)) for odd t."""
    result = SuiteResult("identity")
    for t in range(1, t_max + 1, 2):
        for l in range(t + 1):
            ok = c_l(t, l) == l * binomial(t - 1, t // 2)
            result.record(ok, f"coefficient identity fails at t={t}, l={l}")
    return result


def suite_mdtight(t_max: int = 12) -> SuiteResult:
    """The singleton-plus-all-Y family pins md exactly at ceil((t+1)/2)."""
    result = SuiteResult("mdtight")
    for t in range(1, t_max + 1):
        matrix = lemma1_matrix(t)
        ok = oracle.md_of(matrix) == min_k(t)
        result.record(ok, f"lemma1 matrix md != ceil((t+1)/2) at t={t}", matrix)
    return result


def suite_r3(seed: int = DEFAULT_SEED, samples: int = 10_000) -> SuiteResult:
    """Random 3-topic matrices always allow a majority-supported r >= 5/6."""
    result = SuiteResult("r3")
    rng = random.Random(seed)
    floor = Fraction(5, 6)
    for _ in range(samples):
        matrix = random_matrix(rng, t=3)
        ok = oracle.r_V(matrix) >= floor
        result.record(ok, "3-topic matrix with r_V < 5/6", matrix)
    return result


def suite_rule34(seed: int = DEFAULT_SEED, samples: int = 10_000) -> SuiteResult:
    """Average majority >= 3/4 always implies all-Y majority support."""
    result = SuiteResult("rule34")
    rng = random.Random(seed)
    for _ in range(samples):
        matrix = random_matrix(rng)
        ok = oracle.rule_of_three_fourths_check(matrix)
        result.record(ok, "rule-of-three-fourths violated", matrix)
    return result


SUITES = {
    "skl": lambda seed, samples: suite_skl(),
    "identity": lambda seed, samples: suite_identity(),
    "mdtight": lambda seed, samples: suite_mdtight(),
    "r3": suite_r3,
    "rule34": suite_rule34,
}


def run_suites(
    names, seed: int = DEFAULT_SEED, samples: int = 10_000
) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    return [SUITES[name](seed, samples) for name in names]
