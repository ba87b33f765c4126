"""Registry of exact identity checks with structured pass/fail reports.

Each check pairs two independent evaluators of a quantity indexed by n
(lhs and rhs always come from different modules or different methods) and
is verified over a configurable range.  Multi-part statements compare
tuples.  Checks that enumerate partitions are flagged so callers can cap
them separately from pure series checks.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import mexcount, partitions, statistics
from .partitions import CapacityError
from .series import (
    ResidueCondition,
    TruncatedSeries,
    alternating_theta,
    cauchy_sum_specialized,
    crank_generating_series,
    euler_product,
    jtp_specialized,
    parts_parity_series,
    pochhammer_finite,
    rank_generating_series,
    residue_product,
    second_crank_moment_series,
    second_rank_moment_series,
    symmetric_residues,
)
from .statistics import MexParams

Value = int | tuple[int, ...]
Evaluator = Callable[[int], Value]
EvaluatorFactory = Callable[[int], Evaluator]

# Sweep bounds (identity-family parameters, not the n range).
RANK_CRANK_J_MAX = 8
CONGRUENCE_K_MAX = 5
JTP_K_MAX = 6
CAUCHY_T_EXPONENT_MAX = 5
SWEEP_A_MAX = 10
SWEEP_a_MAX = 15
SHIFT_A_MAX = 8


@dataclass(frozen=True)
class IdentityCheck:
    """One verifiable identity: two evaluator factories plus its n range."""

    check_id: str
    description: str
    valid_from: int
    make_lhs: EvaluatorFactory
    make_rhs: EvaluatorFactory
    requires_enumeration: bool = False
    notes: str = ""


@dataclass
class IdentityReport:
    """Outcome of verifying one identity over [n_from, n_to]."""

    check_id: str
    description: str
    n_from: int
    n_to: int
    failures: list[tuple[int, str, str]] = field(default_factory=list)
    notes: str = ""
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json_dict(self) -> dict:
        return {
            "id": self.check_id,
            "description": self.description,
            "range": {"from": self.n_from, "to": self.n_to},
            "status": self.status,
            "failures": [
                {"n": n, "lhs": lhs, "rhs": rhs} for n, lhs, rhs in self.failures
            ],
            "notes": self.notes,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def csv_row(self) -> list[str]:
        return [
            self.check_id,
            str(self.n_from),
            str(self.n_to),
            self.status,
            str(len(self.failures)),
        ]


CSV_HEADER = ["id", "n_from", "n_to", "status", "num_failures"]


def _fmt(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


# ---------------------------------------------------------------------------
# evaluator helpers
# ---------------------------------------------------------------------------


def _legal_even_i(k: int) -> list[int]:
    # i = k would make the classes +i and -i mod 2k coincide, doubling a
    # product factor; the partition-count reading only holds for i != k.
    return [i for i in range(1, 2 * k) if i != k]


def _not_congruent_count(n: int, modulus: int, classes: frozenset[int]) -> int:
    cond = ResidueCondition(modulus, classes, mode="exclude")
    return partitions.count_parts_restricted(n, cond)


def _series_eval(build: Callable[[int], TruncatedSeries]) -> EvaluatorFactory:
    def factory(n_max: int) -> Evaluator:
        s = build(n_max)
        return lambda n: s.coeff(n)

    return factory


def _series_tuple_eval(build: Callable[[int], Sequence[TruncatedSeries]]) -> EvaluatorFactory:
    def factory(n_max: int) -> Evaluator:
        ss = list(build(n_max))
        return lambda n: tuple(s.coeff(n) for s in ss)

    return factory


def _pbar_recurrence(A: int, a: int, n: int) -> int:
    return mexcount.pbar_mex_recurrence(MexParams(A, a), n)


def _p_recurrence(A: int, a: int, n: int) -> int:
    return mexcount.p_mex_recurrence(MexParams(A, a), n)


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------


def build_registry() -> dict[str, IdentityCheck]:
    """Construct the full catalog of checks, keyed by id."""
    checks: list[IdentityCheck] = []

    def add(check: IdentityCheck) -> None:
        checks.append(check)

    # -- direct counting relations -----------------------------------------

    def thm31_lhs(n_max: int) -> Evaluator:
        row1 = mexcount.p_mex_series(MexParams(3, 1), n_max)
        row2 = mexcount.p_mex_series(MexParams(3, 2), n_max)
        return lambda n: row1[n] + row2[n]

    add(
        IdentityCheck(
            "thm-3.1",
            "p_{3,1}(n) + p_{3,2}(n) = p(n) for n >= 1",
            1,
            thm31_lhs,
            lambda n_max: partitions.p_count,
            notes="lhs: generating-series rows; rhs: pentagonal recurrence",
        )
    )

    grid = [(A, a) for A in range(1, SWEEP_A_MAX + 1) for a in range(1, SWEEP_a_MAX + 1)]

    def thm32_enum(n_max: int) -> Evaluator:
        def ev(n: int):
            census = mexcount.mex_census(n, SWEEP_a_MAX, SWEEP_A_MAX)
            return tuple(census[pair][0] for pair in grid)

        return ev

    def thm32_rec(n_max: int) -> Evaluator:
        return lambda n: tuple(_p_recurrence(A, a, n) for A, a in grid)

    add(
        IdentityCheck(
            "thm-3.2",
            "p_{A,a}(n) recurrence over shifted p(n) agrees with direct enumeration "
            f"(A <= {SWEEP_A_MAX}, a <= {SWEEP_a_MAX})",
            0,
            thm32_enum,
            thm32_rec,
            requires_enumeration=True,
            notes="lhs: enumeration census; rhs: recurrence",
        )
    )

    # -- rank relations ------------------------------------------------------

    js = list(range(0, RANK_CRANK_J_MAX + 1))

    def thm33_lhs(n_max: int) -> Evaluator:
        rows = [mexcount.pbar_mex_series(MexParams(3, j + 1), n_max) for j in js]
        return lambda n: tuple(row[n] for row in rows)

    add(
        IdentityCheck(
            "thm-3.3",
            f"pbar_{{3,j+1}}(n) counts partitions of n with rank >= j (j = 0..{RANK_CRANK_J_MAX})",
            1,
            thm33_lhs,
            lambda n_max: lambda n: tuple(statistics.rank_count_at_least(j, n) for j in js),
            requires_enumeration=True,
            notes="lhs: generating-series rows; rhs: enumerated rank histogram",
        )
    )

    def cor34_lhs(n_max: int) -> Evaluator:
        row = mexcount.pbar_mex_series(MexParams(3, 3), n_max)
        return lambda n: row[n]

    add(
        IdentityCheck(
            "cor-3.4",
            "pbar_{3,3}(n) counts the Garden-of-Eden partitions of n (rank <= -2)",
            1,
            cor34_lhs,
            lambda n_max: statistics.goe_count,
            requires_enumeration=True,
            notes="lhs: generating-series row; rhs: enumerated rank histogram",
        )
    )

    def cor35_lhs(n_max: int) -> Evaluator:
        rows = [mexcount.p_mex_series(MexParams(3, j + 1), n_max) for j in js]
        return lambda n: tuple(row[n] for row in rows)

    add(
        IdentityCheck(
            "cor-3.5",
            f"p_{{3,j+1}}(n) counts partitions of n with rank < j (j = 0..{RANK_CRANK_J_MAX})",
            1,
            cor35_lhs,
            lambda n_max: lambda n: tuple(statistics.rank_count_below(j, n) for j in js),
            requires_enumeration=True,
            notes="lhs: generating-series rows; rhs: enumerated rank histogram",
        )
    )

    # -- crank relations (series-defined crank counts) -----------------------

    crank_js = list(range(1, RANK_CRANK_J_MAX + 1))

    def crank_rows(n_max: int) -> list[tuple[int, ...]]:
        return [crank_generating_series(m, n_max).coeffs for m in range(0, n_max + 1)]

    def crank_at_least_fn(n_max: int):
        rows = crank_rows(n_max)

        def at_least(j: int, n: int) -> int:
            # only needed for j >= 0; the crank of a partition of n is <= n
            return sum(rows[m][n] for m in range(j, n + 1))

        return at_least

    def thm36_lhs(n_max: int) -> Evaluator:
        return lambda n: tuple(_pbar_recurrence(1, j, n) for j in crank_js)

    def thm36_rhs(n_max: int) -> Evaluator:
        at_least = crank_at_least_fn(n_max)
        return lambda n: tuple(at_least(j, n) for j in crank_js)

    add(
        IdentityCheck(
            "thm-3.6",
            f"pbar_{{1,j}}(n) counts partitions of n with crank >= j (j = 1..{RANK_CRANK_J_MAX})",
            1,
            thm36_lhs,
            thm36_rhs,
            notes="lhs: recurrence; rhs: crank series counts; j = 0 needs a = 0 and is out of range",
        )
    )

    def cor37_lhs(n_max: int) -> Evaluator:
        return lambda n: tuple(_p_recurrence(1, j, n) for j in crank_js)

    def cor37_rhs(n_max: int) -> Evaluator:
        at_least = crank_at_least_fn(n_max)
        return lambda n: tuple(partitions.p_count(n) - at_least(j, n) for j in crank_js)

    add(
        IdentityCheck(
            "cor-3.7",
            f"p_{{1,j}}(n) counts partitions of n with crank < j (j = 1..{RANK_CRANK_J_MAX})",
            1,
            cor37_lhs,
            cor37_rhs,
            notes="lhs: recurrence; rhs: crank series counts complemented against p(n)",
        )
    )

    def thm11_rhs(n_max: int) -> Evaluator:
        at_least = crank_at_least_fn(n_max)
        return lambda n: at_least(0, n)

    add(
        IdentityCheck(
            "thm-1.1",
            "p_{1,1}(n) counts partitions of n with crank >= 0",
            1,
            lambda n_max: lambda n: _p_recurrence(1, 1, n),
            thm11_rhs,
            notes="lhs: recurrence; rhs: crank series counts",
        )
    )

    add(
        IdentityCheck(
            "thm-1.2",
            "p_{3,3}(n) counts partitions of n with rank >= -1",
            1,
            lambda n_max: lambda n: _p_recurrence(3, 3, n),
            lambda n_max: lambda n: statistics.rank_count_at_least(-1, n),
            requires_enumeration=True,
            notes="lhs: recurrence; rhs: enumerated rank histogram",
        )
    )

    def thm13_lhs(n_max: int) -> Evaluator:
        row = mexcount.p_mex_series(MexParams(2, 1), n_max)
        row_bar = mexcount.pbar_mex_series(MexParams(2, 1), n_max)
        return lambda n: (row[n], row_bar[n])

    def thm13_rhs(n_max: int) -> Evaluator:
        even, odd = partitions.parts_parity_counts(n_max)
        return lambda n: (even[n], odd[n])

    add(
        IdentityCheck(
            "thm-1.3",
            "p_{2,1}(n) = p_e(n) and pbar_{2,1}(n) = p_o(n) (partitions by parity of #parts)",
            0,
            thm13_lhs,
            thm13_rhs,
            notes="lhs: generating-series rows; rhs: parity-tracking part DP",
        )
    )

    # -- second moments and spt ----------------------------------------------

    def weighted_pbar_sum(A_step: int, a_of_r: Callable[[int], int], r_top: Callable[[int], int]):
        def ev(n: int) -> int:
            return 2 * sum(
                (2 * r + 1) * _pbar_recurrence(A_step, a_of_r(r), n)
                for r in range(0, r_top(n) + 1)
            )

        return ev

    add(
        IdentityCheck(
            "thm-3.8-rank",
            "sum_m m^2 N(m,n) = 2 * sum_{r=0}^{n-2} (2r+1) pbar_{3,r+2}(n)",
            1,
            lambda n_max: lambda n: statistics.rank_moment(2, n),
            lambda n_max: weighted_pbar_sum(3, lambda r: r + 2, lambda n: n - 2),
            requires_enumeration=True,
            notes="lhs: enumerated rank moment; rhs: recurrence-weighted sum",
        )
    )

    add(
        IdentityCheck(
            "thm-3.8-crank",
            "sum_m m^2 M(m,n) = 2 * sum_{r=0}^{n-1} (2r+1) pbar_{1,r+1}(n)",
            1,
            lambda n_max: lambda n: statistics.crank_moment(2, n),
            lambda n_max: weighted_pbar_sum(1, lambda r: r + 1, lambda n: n - 1),
            notes="lhs: crank series moment; rhs: recurrence-weighted sum",
        )
    )

    def cor39_rhs(n_max: int) -> Evaluator:
        def ev(n: int):
            barred = sum(
                (2 * r + 1) * (_pbar_recurrence(1, r + 1, n) - _pbar_recurrence(3, r + 2, n))
                for r in range(0, n)
            )
            unbarred = sum(
                (2 * r + 1) * (_p_recurrence(3, r + 2, n) - _p_recurrence(1, r + 1, n))
                for r in range(0, n)
            )
            return (barred, unbarred)

        return ev

    add(
        IdentityCheck(
            "cor-3.9",
            "spt(n) = sum_r (2r+1)[pbar_{1,r+1}(n) - pbar_{3,r+2}(n)] "
            "= sum_r (2r+1)[p_{3,r+2}(n) - p_{1,r+1}(n)]",
            1,
            lambda n_max: lambda n: (statistics.spt_direct(n), statistics.spt_direct(n)),
            cor39_rhs,
            requires_enumeration=True,
            notes="lhs: direct smallest-part tally; rhs: recurrence-weighted sums",
        )
    )

    # -- congruence-class part counts ----------------------------------------

    even_cases = [(k, i) for k in range(1, CONGRUENCE_K_MAX + 1) for i in _legal_even_i(k)]
    odd_cases = [(k, i) for k in range(1, CONGRUENCE_K_MAX + 1) for i in range(1, 2 * k + 1)]

    def thm310_even_lhs(n_max: int) -> Evaluator:
        return lambda n: tuple(
            _p_recurrence(2 * k, 2 * k - i, n) - _pbar_recurrence(2 * k, i, n)
            for k, i in even_cases
        )

    def thm310_even_rhs(n_max: int) -> Evaluator:
        conds = [(2 * k, frozenset({0, i % (2 * k), (-i) % (2 * k)})) for k, i in even_cases]
        return lambda n: tuple(_not_congruent_count(n, m, cls) for m, cls in conds)

    add(
        IdentityCheck(
            "thm-3.10-even",
            "p_{2k,2k-i}(n) - pbar_{2k,i}(n) counts partitions into parts != 0, +-i (mod 2k) "
            f"(k = 1..{CONGRUENCE_K_MAX}, 1 <= i <= 2k-1, i != k)",
            0,
            thm310_even_lhs,
            thm310_even_rhs,
            notes="lhs: recurrence difference; rhs: restricted-part DP; "
            "i = k excluded (the +-i classes coincide there)",
        )
    )

    def thm310_odd_lhs(n_max: int) -> Evaluator:
        return lambda n: tuple(
            _p_recurrence(2 * k + 1, 2 * k + 1 - i, n) - _pbar_recurrence(2 * k + 1, i, n)
            for k, i in odd_cases
        )

    def thm310_odd_rhs(n_max: int) -> Evaluator:
        conds = [
            (2 * k + 1, frozenset({0, i % (2 * k + 1), (-i) % (2 * k + 1)})) for k, i in odd_cases
        ]
        return lambda n: tuple(_not_congruent_count(n, m, cls) for m, cls in conds)

    add(
        IdentityCheck(
            "thm-3.10-odd",
            "p_{2k+1,2k+1-i}(n) - pbar_{2k+1,i}(n) counts partitions into parts != 0, +-i "
            f"(mod 2k+1) (k = 1..{CONGRUENCE_K_MAX}, 1 <= i <= 2k)",
            0,
            thm310_odd_lhs,
            thm310_odd_rhs,
            notes="lhs: recurrence difference; rhs: restricted-part DP",
        )
    )

    add(
        IdentityCheck(
            "psi-minus-q",
            "p_{4,1}(n) - pbar_{4,3}(n) counts partitions into parts == 2 (mod 4)",
            0,
            lambda n_max: lambda n: _p_recurrence(4, 1, n) - _pbar_recurrence(4, 3, n),
            lambda n_max: lambda n: partitions.count_parts_restricted(
                n, ResidueCondition(4, frozenset({2}))
            ),
            notes="lhs: recurrence difference; rhs: restricted-part DP",
        )
    )

    # -- shifted identities ----------------------------------------------------

    mod32 = symmetric_residues(32, (2, 8, 12, 14))
    mod24 = symmetric_residues(24, (1, 4, 6, 8, 10, 11))
    mod40_excluded = symmetric_residues(40, (3, 4, 7, 10, 13, 17)) | {0, 20}
    mod40_distinct = symmetric_residues(40, (8, 12))

    add(
        IdentityCheck(
            "thm-3.11",
            "p_{2,3}(n) - p_{4,6}(n-1) counts partitions into parts == +-2, +-8, +-12, +-14 (mod 32)",
            0,
            lambda n_max: lambda n: _p_recurrence(2, 3, n) - _p_recurrence(4, 6, n - 1),
            lambda n_max: lambda n: partitions.count_parts_restricted(
                n, ResidueCondition(32, mod32)
            ),
            notes="lhs: recurrence difference; rhs: restricted-part DP",
        )
    )

    add(
        IdentityCheck(
            "thm-3.12",
            "p_{2,3}(n) - p_{6,9}(n-2) counts partitions into parts == +-1, +-4, +-6, +-8, "
            "+-10, +-11 (mod 24)",
            0,
            lambda n_max: lambda n: _p_recurrence(2, 3, n) - _p_recurrence(6, 9, n - 2),
            lambda n_max: lambda n: partitions.count_parts_restricted(
                n, ResidueCondition(24, mod24)
            ),
            notes="lhs: recurrence difference; rhs: restricted-part DP",
        )
    )

    add(
        IdentityCheck(
            "thm-3.13",
            "p_{2,3}(n) - p_{10,15}(n-4) counts partitions into parts outside "
            "0, +-3, +-4, +-7, +-10, +-13, +-17, 20 (mod 40) with extra distinct parts "
            "== +-8, +-12 (mod 40)",
            0,
            lambda n_max: lambda n: _p_recurrence(2, 3, n) - _p_recurrence(10, 15, n - 4),
            lambda n_max: lambda n: partitions.count_parts_restricted(
                n,
                ResidueCondition(40, mod40_excluded, mode="exclude"),
                ResidueCondition(40, mod40_distinct, sign="plus"),
            ),
            notes="lhs: recurrence difference; rhs: mixed distinct/unrestricted DP",
        )
    )

    # pure series forms of the shifted identities

    def mexdiff_series(A2: int, a2: int, shift: int) -> Callable[[int], TruncatedSeries]:
        def build(n_max: int) -> TruncatedSeries:
            lead = TruncatedSeries(mexcount.p_mex_series(MexParams(2, 3), n_max))
            trail = mexcount.p_mex_series(MexParams(A2, a2), n_max)
            shifted = [0] * (n_max + 1)
            for e in range(shift, n_max + 1):
                shifted[e] = trail[e - shift]
            return lead - TruncatedSeries(shifted)

        return build

    add(
        IdentityCheck(
            "thm-3.11-series",
            "series form: F_{2,3}(q) - q*F_{4,6}(q) equals 1/prod(1-q^n) over "
            "n == +-2, +-8, +-12, +-14 (mod 32)",
            0,
            _series_eval(mexdiff_series(4, 6, 1)),
            _series_eval(
                lambda n_max: residue_product(ResidueCondition(32, mod32), n_max).invert()
            ),
            notes="lhs: theta-quotient rows; rhs: inverted congruence product",
        )
    )

    add(
        IdentityCheck(
            "thm-3.12-series",
            "series form: F_{2,3}(q) - q^2*F_{6,9}(q) equals 1/prod(1-q^n) over "
            "n == +-1, +-4, +-6, +-8, +-10, +-11 (mod 24)",
            0,
            _series_eval(mexdiff_series(6, 9, 2)),
            _series_eval(
                lambda n_max: residue_product(ResidueCondition(24, mod24), n_max).invert()
            ),
            notes="lhs: theta-quotient rows; rhs: inverted congruence product",
        )
    )

    def thm313_quotient(n_max: int) -> TruncatedSeries:
        numerator = residue_product(
            ResidueCondition(40, mod40_distinct, sign="plus"), n_max
        )
        denominator = residue_product(
            ResidueCondition(40, mod40_excluded, mode="exclude"), n_max
        )
        return numerator * denominator.invert()

    add(
        IdentityCheck(
            "thm-3.13-series",
            "series form: F_{2,3}(q) - q^4*F_{10,15}(q) equals "
            "prod(1+q^n)[n == +-8, +-12 (40)] / prod(1-q^n)[n not== 0, +-3, +-4, +-7, "
            "+-10, +-13, +-17, 20 (40)]",
            0,
            _series_eval(mexdiff_series(10, 15, 4)),
            _series_eval(thm313_quotient),
            notes="lhs: theta-quotient rows; rhs: congruence-product quotient",
        )
    )

    # -- product/theta identities ---------------------------------------------

    def theta_difference(c2: int, c1: int) -> Callable[[int], TruncatedSeries]:
        # sum_{n>=1} (-1)^n (q^(c2*n^2-1) - q^(c1*n^2-1))
        def build(n_max: int) -> TruncatedSeries:
            big = alternating_theta(lambda n: c2 * n * n - 1, 1, n_max)
            small = alternating_theta(lambda n: c1 * n * n - 1, 1, n_max)
            return big - small

        return build

    add(
        IdentityCheck(
            "thm-2.10a",
            "prod(1-q^n) over n not== +-2, +-8, +-12, +-14 (mod 32) equals "
            "sum_{n>=1} (-1)^n (q^{2n^2-1} - q^{n^2-1})",
            0,
            _series_eval(
                lambda n_max: residue_product(
                    ResidueCondition(32, mod32, mode="exclude"), n_max
                )
            ),
            _series_eval(theta_difference(2, 1)),
            notes="lhs: congruence product; rhs: alternating theta difference",
        )
    )

    add(
        IdentityCheck(
            "thm-2.10b",
            "prod(1-q^n) over n not== +-1, +-4, +-6, +-8, +-10, +-11 (mod 24) equals "
            "sum_{n>=1} (-1)^n (q^{3n^2-1} - q^{n^2-1})",
            0,
            _series_eval(
                lambda n_max: residue_product(
                    ResidueCondition(24, mod24, mode="exclude"), n_max
                )
            ),
            _series_eval(theta_difference(3, 1)),
            notes="lhs: congruence product; rhs: alternating theta difference",
        )
    )

    def thm211_product(n_max: int) -> TruncatedSeries:
        p1 = residue_product(ResidueCondition(10, frozenset({0, 3, 7})), n_max)
        p2 = residue_product(ResidueCondition(40, frozenset({4, 36})), n_max)
        p3 = residue_product(ResidueCondition(20, frozenset({8, 12}), sign="plus"), n_max)
        return p1 * p2 * p3

    add(
        IdentityCheck(
            "thm-2.11",
            "prod(1-q^n)[n == 0, +-3 (10)] * prod(1-q^n)[n == +-4 (40)] * "
            "prod(1+q^n)[n == +-8 (20)] equals sum_{n>=1} (-1)^n (q^{5n^2-1} - q^{n^2-1})",
            0,
            _series_eval(thm211_product),
            _series_eval(theta_difference(5, 1)),
            notes="lhs: three congruence products; rhs: alternating theta difference",
        )
    )

    # -- classical series-engine identities -------------------------------------

    add(
        IdentityCheck(
            "thm-2.1",
            "the pentagonal-number expansion of prod(1-q^n) matches the literal product",
            0,
            _series_eval(euler_product),
            _series_eval(
                lambda n_max: residue_product(
                    ResidueCondition(1, frozenset({0})), n_max
                )
            ),
            notes="lhs: pentagonal exponent table; rhs: factor-by-factor product",
        )
    )

    jtp_odd_cases = [
        (k, i) for k in range(1, JTP_K_MAX + 1) for i in range(1, 2 * k + 1)
    ]
    jtp_even_cases = [
        (k, i) for k in range(1, JTP_K_MAX + 1) for i in range(1, 2 * k)
    ]

    add(
        IdentityCheck(
            "thm-2.8",
            f"odd-modulus triple-product specialization: sum side = product side "
            f"(k = 1..{JTP_K_MAX}, 1 <= i <= 2k)",
            0,
            _series_tuple_eval(
                lambda n_max: [
                    jtp_specialized(k, i, "odd", "sum", n_max) for k, i in jtp_odd_cases
                ]
            ),
            _series_tuple_eval(
                lambda n_max: [
                    jtp_specialized(k, i, "odd", "product", n_max) for k, i in jtp_odd_cases
                ]
            ),
            notes="lhs: bilateral theta sums; rhs: triple products",
        )
    )

    add(
        IdentityCheck(
            "jtp-even-lemma",
            f"even-modulus triple-product specialization: sum side = product side "
            f"(k = 1..{JTP_K_MAX}, 1 <= i <= 2k-1)",
            0,
            _series_tuple_eval(
                lambda n_max: [
                    jtp_specialized(k, i, "even", "sum", n_max) for k, i in jtp_even_cases
                ]
            ),
            _series_tuple_eval(
                lambda n_max: [
                    jtp_specialized(k, i, "even", "product", n_max) for k, i in jtp_even_cases
                ]
            ),
            notes="lhs: bilateral theta sums; rhs: triple products",
        )
    )

    cauchy_cases: list[tuple[int, bool]] = [
        (j, False) for j in range(1, CAUCHY_T_EXPONENT_MAX + 1)
    ] + [(1, True)]

    def cauchy_lhs(n_max: int) -> list[TruncatedSeries]:
        return [cauchy_sum_specialized(j, neg, n_max) for j, neg in cauchy_cases]

    def cauchy_rhs(n_max: int) -> list[TruncatedSeries]:
        out = []
        for j, neg in cauchy_cases:
            sign = "plus" if neg else "minus"
            cond = ResidueCondition(1, frozenset({0}), sign=sign)
            prod = residue_product(cond, n_max)
            if j > 1:
                # strip the factors below q^j: divide them back out
                head = pochhammer_finite(j - 1, n_max)
                prod = prod * head.invert()
            out.append(prod.invert())
        return out

    add(
        IdentityCheck(
            "thm-2.9",
            "sum_{n>=0} t^n/(q)_n = 1/((1-t)(1-tq)(1-tq^2)...) at t = q^j "
            f"(j = 1..{CAUCHY_T_EXPONENT_MAX}) and t = -q",
            0,
            _series_tuple_eval(cauchy_lhs),
            _series_tuple_eval(cauchy_rhs),
            notes="lhs: termwise sums with running 1/(q)_n; rhs: inverted products",
        )
    )

    add(
        IdentityCheck(
            "thm-2.4",
            "second rank moment generating series matches the enumerated moments",
            1,
            _series_eval(second_rank_moment_series),
            lambda n_max: lambda n: statistics.rank_moment(2, n),
            requires_enumeration=True,
            notes="lhs: weighted theta quotient; rhs: enumerated rank histogram",
        )
    )

    add(
        IdentityCheck(
            "thm-2.5",
            "second crank moment generating series matches the enumerated moments (n >= 2)",
            2,
            _series_eval(second_crank_moment_series),
            lambda n_max: lambda n: statistics.crank_moment_enumerated(2, n),
            requires_enumeration=True,
            notes="lhs: weighted theta quotient; rhs: enumerated crank histogram; "
            "n = 1 differs by the documented crank anomaly",
        )
    )

    def rank_rows_eval(n_max: int) -> Evaluator:
        rows = [rank_generating_series(m, n_max).coeffs for m in range(0, n_max + 1)]
        return lambda n: tuple(rows[abs(m)][n] for m in range(-n, n + 1))

    add(
        IdentityCheck(
            "thm-2.2",
            "rank generating series N(m,n) matches enumerated rank counts for |m| <= n",
            1,
            rank_rows_eval,
            lambda n_max: lambda n: tuple(
                statistics.rank_count(m, n) for m in range(-n, n + 1)
            ),
            requires_enumeration=True,
            notes="lhs: theta-quotient rows; rhs: enumerated rank histogram",
        )
    )

    def crank_rows_eval(n_max: int) -> Evaluator:
        rows = crank_rows(n_max)
        return lambda n: tuple(rows[abs(m)][n] for m in range(-n, n + 1))

    add(
        IdentityCheck(
            "thm-2.3",
            "crank generating series M(m,n) matches enumerated crank counts for |m| <= n, n >= 2",
            2,
            crank_rows_eval,
            lambda n_max: lambda n: tuple(
                statistics.crank_count(m, n) for m in range(-n, n + 1)
            ),
            requires_enumeration=True,
            notes="lhs: theta-quotient rows; rhs: enumerated crank histogram; "
            "n = 1 differs by the documented crank anomaly",
        )
    )

    def pepo_rhs(n_max: int) -> Evaluator:
        even, odd = partitions.parts_parity_counts(n_max)
        return lambda n: (even[n], odd[n])

    add(
        IdentityCheck(
            "pe-po-genfun",
            "sum_j q^(2j)/(q)_(2j) and sum_j q^(2j+1)/(q)_(2j+1) generate p_e(n) and p_o(n)",
            0,
            _series_tuple_eval(
                lambda n_max: [
                    parts_parity_series("even", n_max),
                    parts_parity_series("odd", n_max),
                ]
            ),
            pepo_rhs,
            notes="lhs: running 1/(q)_j sums; rhs: parity-tracking part DP",
        )
    )

    # -- auxiliary relations ----------------------------------------------------

    shift_pairs = [
        (A, a)
        for A in range(1, SHIFT_A_MAX + 1)
        for a in range(A + 1, SWEEP_a_MAX + 1)
    ]

    def thm51_lhs(n_max: int) -> Evaluator:
        return lambda n: tuple(_p_recurrence(A, a, n - (a - A)) for A, a in shift_pairs)

    def thm51_rhs(n_max: int) -> Evaluator:
        rows = {
            (A, a): mexcount.pbar_mex_series(MexParams(A, a - A), n_max)
            for A, a in shift_pairs
        }
        return lambda n: tuple(rows[pair][n] for pair in shift_pairs)

    add(
        IdentityCheck(
            "thm-5.1",
            "p_{A,a}(n-(a-A)) = pbar_{A,a-A}(n) for a > A "
            f"(A <= {SHIFT_A_MAX}, a <= {SWEEP_a_MAX})",
            0,
            thm51_lhs,
            thm51_rhs,
            notes="lhs: recurrence at shifted argument; rhs: generating-series rows",
        )
    )

    add(
        IdentityCheck(
            "cor-5.2",
            "p_{3,6}(n-3) counts the Garden-of-Eden partitions of n",
            1,
            lambda n_max: lambda n: _p_recurrence(3, 6, n - 3),
            lambda n_max: statistics.goe_count,
            requires_enumeration=True,
            notes="lhs: recurrence at shifted argument; rhs: enumerated rank histogram",
        )
    )

    add(
        IdentityCheck(
            "thm-5.3",
            "p_{k,k}(k) = p_{k,k-1}(k) = p(k) - 1 for k >= 2 (checked at n = k)",
            2,
            lambda n_max: lambda k: (_p_recurrence(k, k, k), _p_recurrence(k, k - 1, k)),
            lambda n_max: lambda k: (
                partitions.p_count(k) - 1,
                partitions.p_count(k) - 1,
            ),
            notes="lhs: recurrence; rhs: pentagonal p(k) minus one",
        )
    )

    def thm54_lhs(n_max: int) -> Evaluator:
        def ev(n: int):
            second = _p_recurrence(3, n + 1, n) - _p_recurrence(1, n, n)
            if n < 2:
                return (second,)
            first = _p_recurrence(3, n, n) - _p_recurrence(1, n - 1, n)
            return (first, second)

        return ev

    add(
        IdentityCheck(
            "thm-5.4",
            "p_{3,n}(n) - p_{1,n-1}(n) = 0 (n >= 2) and p_{3,n+1}(n) - p_{1,n}(n) = 1 (n >= 1)",
            1,
            thm54_lhs,
            lambda n_max: lambda n: (1,) if n < 2 else (0, 1),
            notes="lhs: recurrence differences; rhs: stated constants",
        )
    )

    def lemma_pairs(n: int) -> list[tuple[int, int]]:
        return [
            (A, a)
            for A in range(1, SWEEP_A_MAX + 1)
            for a in range(n + 1, SWEEP_a_MAX + 1)
        ]

    def lemma_lhs(n_max: int) -> Evaluator:
        p_rows = {
            (A, a): mexcount.p_mex_series(MexParams(A, a), n_max)
            for A in range(1, SWEEP_A_MAX + 1)
            for a in range(1, SWEEP_a_MAX + 1)
        }
        pbar_rows = {
            pair: mexcount.pbar_mex_series(MexParams(*pair), n_max) for pair in p_rows
        }

        def ev(n: int):
            pairs = lemma_pairs(n)
            return tuple(p_rows[pair][n] for pair in pairs) + tuple(
                pbar_rows[pair][n] for pair in pairs
            )

        return ev

    def lemma_rhs(n_max: int) -> Evaluator:
        def ev(n: int):
            pairs = lemma_pairs(n)
            return (partitions.p_count(n),) * len(pairs) + (0,) * len(pairs)

        return ev

    add(
        IdentityCheck(
            "lemma-a-gt-n",
            "p_{A,a}(n) = p(n) and pbar_{A,a}(n) = 0 whenever a > n "
            f"(A <= {SWEEP_A_MAX}, a <= {SWEEP_a_MAX})",
            0,
            lemma_lhs,
            lemma_rhs,
            notes="lhs: generating-series rows; rhs: pentagonal p(n) and zero",
        )
    )

    registry = {}
    for check in checks:
        if check.check_id in registry:
            raise ValueError(f"duplicate identity id {check.check_id!r}")
        registry[check.check_id] = check
    return registry


REGISTRY: dict[str, IdentityCheck] = build_registry()


# ---------------------------------------------------------------------------
# verification driver
# ---------------------------------------------------------------------------


def verify(
    check_id: str,
    n_max: int,
    *,
    registry: dict[str, IdentityCheck] | None = None,
) -> IdentityReport:
    """Evaluate both sides of one identity for every n in [valid_from, n_max]."""
    reg = REGISTRY if registry is None else registry
    if check_id not in reg:
        raise ValueError(f"unknown identity id {check_id!r}; see list_identities()")
    check = reg[check_id]
    if n_max < check.valid_from:
        raise ValueError(
            f"n_max={n_max} is below the first asserted value n={check.valid_from}"
        )
    if check.requires_enumeration and n_max > partitions.ENUMERATION_CAP:
        raise CapacityError(
            f"identity {check_id!r} needs partition enumeration, capped at "
            f"n = {partitions.ENUMERATION_CAP}; requested n_max={n_max}"
        )
    start = time.perf_counter()
    lhs = check.make_lhs(n_max)
    rhs = check.make_rhs(n_max)
    failures: list[tuple[int, str, str]] = []
    for n in range(check.valid_from, n_max + 1):
        lv = lhs(n)
        rv = rhs(n)
        if lv != rv:
            failures.append((n, _fmt(lv), _fmt(rv)))
    elapsed = (time.perf_counter() - start) * 1000.0
    return IdentityReport(
        check_id=check.check_id,
        description=check.description,
        n_from=check.valid_from,
        n_to=n_max,
        failures=failures,
        notes=check.notes,
        elapsed_ms=elapsed,
    )


def verify_all(
    n_max_enum: int,
    n_max_series: int,
    *,
    registry: dict[str, IdentityCheck] | None = None,
) -> list[IdentityReport]:
    """Run every registered check; enumeration-backed ones capped at n_max_enum."""
    reg = REGISTRY if registry is None else registry
    reports = []
    for check_id, check in reg.items():
        n_max = n_max_enum if check.requires_enumeration else n_max_series
        n_max = max(n_max, check.valid_from)
        reports.append(verify(check_id, n_max, registry=reg))
    return reports


def list_identities(
    *, registry: dict[str, IdentityCheck] | None = None
) -> list[dict[str, object]]:
    """The catalog as [{id, description, valid_from, requires_enumeration}, ...]."""
    reg = REGISTRY if registry is None else registry
    return [
        {
            "id": c.check_id,
            "description": c.description,
            "valid_from": c.valid_from,
            "requires_enumeration": c.requires_enumeration,
        }
        for c in reg.values()
    ]


def reports_to_json(reports: Sequence[IdentityReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)
