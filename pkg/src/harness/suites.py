"""
Verification suites.

Every suite sweeps a family of cases, compares two independent routes per
case and folds the outcomes into a SuiteReport. Cases fan out with joblib and
are sorted by key before aggregation, so a report does not depend on how the
work was scheduled. Report-only suites list disagreements as findings and
never fail.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Any, Callable, Iterable

from joblib import Parallel, delayed

from src.carry.lattice import (
    carry_pattern,
    h0_composition_factors,
    hom_b_via_carry,
    is_h0_factor,
    shift_factor_check,
    submodule_lattice,
    twist_multiplicity_equal,
)
from src.combinatorics.partitions import (
    Partition,
    add_power_to_first_part,
    enumerate_partitions,
    hook_length_dimension,
    l_p,
    prepend_part,
    scale_partition,
    two_part_partitions,
)
from src.core.config import Settings
from src.core.errors import FalsifiedLemmaError, NonUniqueMaximumError, SpechtCohError, UnknownSuiteError
from src.criteria.cohomology import (
    CohomologyResult,
    Source,
    admissible_first_rows,
    andersen_implication,
    h0_result,
    h1_twopart_criterion,
    h1_twopart_psi,
    h1_twopart_result,
    james_h0,
    predict_first_row_h0,
    predict_generic_h1,
    predict_shift_h1,
    psi_contains,
)
from src.harness.report import Failure, SuiteReport
from src.oracle.cocycles import h0_dim, h1_dim
from src.oracle.specht import build_specht_rep
from src.weights.calculus import (
    Weight,
    corollary63_check,
    freudenthal_multiplicity,
    is_double_twist_admissible,
    lemma62_witness,
    pairing,
    rho_multiple,
    single_twist_gamma,
    steinberg_contains,
    weyl_weights_contain,
)

logger = logging.getLogger("specht_coh.harness")


@dataclass(frozen=True)
class Outcome:
    key: tuple
    input: Any
    ok: bool
    expected: Any
    got: Any


def _check(key: tuple, inp: Any, expected: Any, got: Any) -> Outcome:
    return Outcome(key, inp, expected == got, expected, got)


def _desc(lam: Partition) -> tuple:
    # decreasing lexicographic order under ascending sort
    return tuple(-x for x in lam.parts)


def _fan_out(fn: Callable, cases: Iterable, settings: Settings) -> list[Outcome]:
    batches = Parallel(n_jobs=settings.threads)(delayed(fn)(case, settings) for case in cases)
    return [o for batch in batches for o in batch]


def _report(name: str, asserting: bool, outcomes: list[Outcome], notes: Iterable[str] = ()) -> SuiteReport:
    outcomes = sorted(outcomes, key=lambda o: o.key)
    failures = [Failure(o.input, o.expected, o.got) for o in outcomes if not o.ok]
    return SuiteReport(
        suite=name,
        asserting=asserting,
        cases=len(outcomes),
        passed=len(outcomes) - len(failures),
        failures=failures,
        notes=list(notes),
    )


@lru_cache(maxsize=1024)
def _oracle(parts: tuple[int, ...], p: int, settings: Settings, degree: int) -> int:
    rep = build_specht_rep(Partition(parts), p, settings)
    return h0_dim(rep) if degree == 0 else h1_dim(rep, settings)


def _oracle_outcome(key: tuple, inp: dict, expected: Any, compute: Callable[[], Any]) -> Outcome:
    try:
        got = compute()
    except SpechtCohError as e:
        return Outcome(key, inp, False, expected, f"{type(e).__name__}: {e}")
    return _check(key, inp, expected, got)


# =========================
# registry
# =========================
@dataclass(frozen=True)
class Suite:
    name: str
    asserting: bool
    run: Callable[[Settings, bool], SuiteReport]
    description: str


SUITES: dict[str, Suite] = {}


def suite(name: str, asserting: bool = True, description: str = ""):
    def register(fn):
        SUITES[name] = Suite(name, asserting, fn, description)
        return fn
    return register


def run_suite(name: str, settings: Settings, heavy: bool = False) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
    logger.info("suite %s: start", name)
    t0 = time.time()
    report = SUITES[name].run(settings, heavy)
    report.wall_time = time.time() - t0
    logger.info("suite %s: %d/%d passed in %.2fs", name, report.passed, report.cases, report.wall_time)
    return report


def run_all(settings: Settings, heavy: bool = False) -> list[SuiteReport]:
    return [run_suite(name, settings, heavy) for name in SUITES]


# =========================
# H⁰ and carries
# =========================
def _james_carry_case(case, settings):
    p, d = case
    return [
        _check(("sweep", p, d, _desc(lam)), {"p": p, "partition": lam.to_json()},
               james_h0(lam, p), hom_b_via_carry(lam, p, settings))
        for lam in enumerate_partitions(d, settings=settings)
    ]


@suite("james-carry", description="James' congruences against Hom_B(H⁰(d), λ) from carry patterns")
def james_carry(settings: Settings, heavy: bool) -> SuiteReport:
    pinned = [
        _check(("pinned", 0), {"carry_pattern": [5, 5, 2], "p": 3},
               [2, 1], carry_pattern((5, 5, 2), 3).to_json()),
        _check(("pinned", 1), {"james_h0": [20, 5], "p": 5}, 0, james_h0(Partition.of(20, 5), 5)),
        _check(("pinned", 2), {"is_h0_factor": [20, 5], "p": 5}, True, is_h0_factor(Partition.of(20, 5), 5)),
        _check(("pinned", 3), {"hom_b_via_carry": [20, 5], "p": 5}, 0,
               hom_b_via_carry(Partition.of(20, 5), 5, settings)),
        _check(("pinned", 4), {"james_h0": [2, 2], "p": 3}, 1, james_h0(Partition.of(2, 2), 3)),
    ]
    cases = [(p, d) for p in (3, 5, 7) for d in range(0, 21)]
    return _report("james-carry", True, pinned + _fan_out(_james_carry_case, cases, settings))


def _psi_case(case, settings):
    p, d = case
    out = []
    for lam in two_part_partitions(d, d):
        l1, l2 = lam.parts
        out.append(_check(("sweep", p, d, -l1), {"p": p, "partition": [l1, l2]},
                          h1_twopart_psi(l1, l2, p), h1_twopart_criterion(l1, l2, p)))
    return out


@suite("psi-criterion", description="Ψ_p membership against the two-case H¹ criterion for two-part λ")
def psi_criterion(settings: Settings, heavy: bool) -> SuiteReport:
    pinned = [
        _check(("pinned", 0), {"h1_twopart_psi": [29, 25], "p": 5}, 1, h1_twopart_psi(29, 25, 5)),
        _check(("pinned", 1), {"h1_twopart_criterion": [29, 25], "p": 5}, 1, h1_twopart_criterion(29, 25, 5)),
        _check(("pinned", 2), {"h1_twopart_psi": [9, 3], "p": 3}, 1, h1_twopart_psi(9, 3, 3)),
        _check(("pinned", 3), {"h1_twopart_psi": [4, 2], "p": 3}, 0, h1_twopart_psi(4, 2, 3)),
        _check(("pinned", 4), {"h1_twopart_criterion": [3, 3], "p": 3}, 1, h1_twopart_criterion(3, 3, 3)),
        _check(("pinned", 5), {"h1_twopart_criterion": [2, 1], "p": 3}, 1, h1_twopart_criterion(2, 1, 3)),
        _check(("pinned", 6), {"psi_contains": [4, 20], "p": 5}, True, psi_contains(4, 20, 5)),
        _check(("pinned", 7), {"psi_contains": [0, 0], "p": 3}, False, psi_contains(0, 0, 3)),
    ]
    cases = [(p, d) for p in (3, 5, 7) for d in range(2, 301)]
    return _report("psi-criterion", True, pinned + _fan_out(_psi_case, cases, settings))


# =========================
# oracle against criteria
# =========================
def _oracle_h0_case(case, settings):
    p, d = case
    out = []
    for lam in enumerate_partitions(d, settings=settings):
        inp = {"p": p, "partition": lam.to_json()}
        out.append(_oracle_outcome(("h0", p, d, _desc(lam)), inp, james_h0(lam, p),
                                   lambda: _oracle(lam.parts, p, settings, 0)))
        out.append(_oracle_outcome(("dim", p, d, _desc(lam)), {**inp, "check": "dim"},
                                   hook_length_dimension(lam),
                                   lambda: build_specht_rep(lam, p, settings).dim))
    return out


@suite("oracle-h0", description="oracle H⁰ against James' criterion, λ ⊢ d ≤ 7")
def oracle_h0(settings: Settings, heavy: bool) -> SuiteReport:
    cases = [(p, d) for p in (3, 5, 7) for d in range(1, 8)]
    return _report("oracle-h0", True, _fan_out(_oracle_h0_case, cases, settings))


def _oracle_h1_case(case, settings):
    p, d = case
    out = []
    for lam in two_part_partitions(d, d):
        out.append(_oracle_outcome(("sweep", p, d, -lam.parts[0]), {"p": p, "partition": lam.to_json()},
                                   h1_twopart_psi(*lam.parts, p),
                                   lambda: _oracle(lam.parts, p, settings, 1)))
    return out


@suite("oracle-h1-twopart", description="oracle H¹ against Ψ_p for two-part λ ⊢ d ≤ 7")
def oracle_h1_twopart(settings: Settings, heavy: bool) -> SuiteReport:
    pinned = [
        _oracle_outcome(("pinned", 0), {"p": 3, "partition": [3, 3]}, 1, lambda: _oracle((3, 3), 3, settings, 1)),
        _oracle_outcome(("pinned", 1), {"p": 3, "partition": [2, 1]}, 1, lambda: _oracle((2, 1), 3, settings, 1)),
        _oracle_outcome(("pinned", 2), {"p": 5, "partition": [1, 1]}, 0, lambda: _oracle((1, 1), 5, settings, 1)),
    ]
    cases = [(p, d) for p in (3, 5) for d in range(2, 8)]
    return _report("oracle-h1-twopart", True, pinned + _fan_out(_oracle_h1_case, cases, settings))


def _andersen_case(case, settings):
    p, d = case
    out = []
    for lam in enumerate_partitions(d, settings=settings):
        inp = {"p": p, "partition": lam.to_json()}
        out.append(_oracle_outcome(("andersen", p, d, _desc(lam)), inp, True,
                                   lambda: andersen_implication(lam, p, _oracle(lam.parts, p, settings, 1))))
        if p > d:
            out.append(_oracle_outcome(
                ("semisimple", p, d, _desc(lam)), {**inp, "check": "semisimple"},
                [int(lam.is_row()), 0],
                lambda: [_oracle(lam.parts, p, settings, 0), _oracle(lam.parts, p, settings, 1)],
            ))
    return out


@suite("andersen", description="H⁰ ≠ 0 and λ ≠ (d) imply H¹ ≠ 0, λ ⊢ d ≤ 7")
def andersen(settings: Settings, heavy: bool) -> SuiteReport:
    cases = [(p, d) for p in (3, 5) for d in range(1, 8)]
    return _report("andersen", True, _fan_out(_andersen_case, cases, settings))


# =========================
# symmetric powers
# =========================
def _doty_case(case, settings):
    p, d = case
    n = max(d, 1)
    inp = {"p": p, "d": d, "n": n}
    out = []
    expected = sorted(str(lam) for lam in enumerate_partitions(d, max_parts=n, settings=settings)
                      if is_h0_factor(lam, p))
    try:
        factors = h0_composition_factors(d, n, p, settings)
    except NonUniqueMaximumError as e:
        return [Outcome(("factors", p, d), {**inp, "check": "factors"}, False, "unique maxima", str(e))]
    out.append(_check(("factors", p, d), {**inp, "check": "factors"},
                      expected, sorted(str(lam) for lam in factors.values())))
    lattice = submodule_lattice(d, n, p, settings)
    out.append(_check(("closure", p, d), {**inp, "check": "closed under union and intersection"},
                      True, lattice.closed_under_meet_and_join()))
    out.append(_check(("top", p, d), {**inp, "check": "top dimension"},
                      comb(d + n - 1, n - 1), lattice.top.dimension))
    return out


@suite("doty-lattice", description="carry-pattern factors against the digit test; ideal lattice closure")
def doty_lattice(settings: Settings, heavy: bool) -> SuiteReport:
    chain = submodule_lattice(4, 4, 3, settings)
    pinned = [
        _check(("pinned", 0), {"sympower": {"p": 3, "d": 4}, "check": "nodes"}, 3, len(chain.nodes)),
        _check(("pinned", 1), {"sympower": {"p": 3, "d": 4}, "check": "factors"},
               ["(4)", "(2,2)"], [str(f) for f in chain.top.factors]),
    ]
    cases = [(p, d) for p in (3, 5, 7) for d in range(0, 16)]
    return _report("doty-lattice", True, pinned + _fan_out(_doty_case, cases, settings))


def _twist_case(case, settings):
    p, d = case
    return [
        _check(("sweep", p, d, _desc(lam)), {"p": p, "partition": lam.to_json()}, True,
               twist_multiplicity_equal(lam, p))
        for lam in enumerate_partitions(d, settings=settings)
    ]


@suite("twist-multiplicity", description="[H⁰(pd):L(pλ)] = [H⁰(d):L(λ)] for d ≤ 12, p = 3")
def twist_multiplicity(settings: Settings, heavy: bool) -> SuiteReport:
    cases = [(3, d) for d in range(1, 13)]
    return _report("twist-multiplicity", True, _fan_out(_twist_case, cases, settings))


def _shift_factors_case(case, settings):
    p, d = case
    r = l_p(d, p)  # smallest r with p^r > d
    return [_check(("sweep", p, d), {"p": p, "d": d, "r": r}, True, shift_factor_check(d, p, r, settings))]


@suite("shift-factors", description="factors of H⁰(d+p^r) with first part ≥ p^r are the shifted factors of H⁰(d)")
def shift_factors(settings: Settings, heavy: bool) -> SuiteReport:
    cases = [(p, d) for p in (3, 5) for d in range(1, 13)]
    return _report("shift-factors", True, _fan_out(_shift_factors_case, cases, settings))


# =========================
# weights
# =========================
STEINBERG_SETTINGS = ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2))


def _steinberg_case(case, settings):
    p, d = case
    out = []
    pairs = 0
    for mu in enumerate_partitions(d, settings=settings):
        for lam in enumerate_partitions(p * p * d, settings=settings):
            if not is_double_twist_admissible(lam, mu, p):
                continue
            pairs += 1
            inp = {"p": p, "lambda": lam.to_json(), "mu": mu.to_json()}
            key = ("pair", p, d, _desc(mu), _desc(lam))
            try:
                found = lemma62_witness(lam, mu, p, strict=True) is not None
            except FalsifiedLemmaError as e:
                found = str(e)
            out.append(_check(key + ("witness",), {**inp, "check": "simple root with pairing >= p^2"}, True, found))
            out.append(_check(key + ("steinberg",), {**inp, "check": "not a Steinberg weight"},
                              True, corollary63_check(lam, mu, p)))
    if d >= 2:
        out.append(_check(("count", p, d), {"p": p, "d": d, "check": "admissible pairs exist"}, True, pairs > 0))
    out.append(Outcome(("count", p, d, "n"), {"p": p, "d": d, "admissible_pairs": pairs}, True, pairs, pairs))
    return out


def _weyl_case(case, settings):
    p, n = case
    kappa = rho_multiple(p - 1, n)
    m = max(kappa.coords)
    out = []
    for coords in product(range(-m, m + 1), repeat=n):
        if sum(coords) != 0:
            continue
        nu = Weight(coords)
        out.append(_check(("weyl", p, n, coords), {"kappa": kappa.to_json(), "nu": list(coords)},
                          weyl_weights_contain(kappa, nu),
                          freudenthal_multiplicity(kappa, nu, settings) > 0))
    return out


@suite("steinberg-lemmas", description="double-twist weight lemmas, the single-twist counterexample, Weyl weights")
def steinberg_lemmas(settings: Settings, heavy: bool) -> SuiteReport:
    remark = single_twist_gamma(Partition.of(9, 1), Partition.of(1, 1), 5)
    example = Weight.of(17, 1) - Weight.of(9, 9)
    pinned = [
        _check(("pinned", 0), {"single_twist": {"lambda": [9, 1], "p_mu": [5, 5], "p": 5},
                               "check": "expected Steinberg member"},
               True, steinberg_contains(remark, 5, 1, 2)),
        _check(("pinned", 1), {"lambda": [17, 1], "mu": [1, 1], "p": 3, "check": "witness index"},
               1, lemma62_witness(Partition.of(17, 1), Partition.of(1, 1), 3)),
        _check(("pinned", 2), {"lambda": [17, 1], "mu": [1, 1], "p": 3, "check": "pairing"},
               16, pairing(example, 1)),
        _check(("pinned", 3), {"lambda": [17, 1], "mu": [1, 1], "p": 3, "check": "not a Steinberg weight"},
               True, corollary63_check(Partition.of(17, 1), Partition.of(1, 1), 3)),
    ]
    outcomes = pinned
    outcomes += _fan_out(_steinberg_case, STEINBERG_SETTINGS, settings)
    outcomes += _fan_out(_weyl_case, [(p, n) for p in (3, 5) for n in (2, 3, 4)], settings)
    notes = []
    for o in outcomes:
        if o.key[0] == "count" and len(o.key) == 4:
            p, d = o.key[1], o.key[2]
            suffix = " (vacuous: p²μ is dominance-maximal)" if d == 1 and o.got == 0 else ""
            notes.append(f"p={p} d={d}: {o.got} admissible pairs{suffix}")
    return _report("steinberg-lemmas", True, outcomes, notes)


# =========================
# stability
# =========================
def _generic_twopart_case(case, settings):
    p, d = case
    out = []
    for lam in two_part_partitions(d, d):
        values = [h1_twopart_psi(*scale_partition(lam, p**a).parts, p) for a in (1, 2, 3)]
        inp = {"p": p, "partition": lam.to_json()}
        out.append(_check(("twist", p, d, -lam.parts[0]), inp, [values[0]] * 3, values))
        known = h1_twopart_result(*scale_partition(lam, p).parts, p)
        out.append(_check(("transport", p, d, -lam.parts[0]), {**inp, "check": "transport"},
                          values[1], predict_generic_h1(lam, p, known).dim))
    return out


def _h0_twist_case(case, settings):
    p, d = case
    return [
        _check(("h0", p, d, _desc(lam)), {"p": p, "partition": lam.to_json(), "check": "H0 of p·λ vanishes"},
               0, james_h0(scale_partition(lam, p), p))
        for lam in enumerate_partitions(d, settings=settings)
        if not lam.is_row()
    ]


@suite("generic-twopart", description="H¹(S^{p^a λ}) constant in a ≥ 1 for two-part λ ⊢ d ≤ 50")
def generic_twopart(settings: Settings, heavy: bool) -> SuiteReport:
    pinned = [_check(("pinned", 0), {"p": 3, "partition": [9, 9]}, 1, h1_twopart_psi(9, 9, 3))]
    outcomes = pinned + _fan_out(_generic_twopart_case, [(p, d) for p in (3, 5) for d in range(2, 51)], settings)
    outcomes += _fan_out(_h0_twist_case, [(p, d) for p in (3, 5) for d in range(1, 13)], settings)
    return _report("generic-twopart", True, outcomes)


@suite("generic-oracle", description="H¹(S^{(3,3)}) by oracle against H¹(S^{(9,9)}) by formula at p = 3")
def generic_oracle(settings: Settings, heavy: bool) -> SuiteReport:
    lam = Partition.of(1, 1)
    outcomes = [
        _oracle_outcome(("oracle", 0), {"p": 3, "partition": [3, 3], "route": "oracle"}, 1,
                        lambda: _oracle((3, 3), 3, settings, 1)),
        _check(("formula", 0), {"p": 3, "partition": [9, 9], "route": "formula"}, 1, h1_twopart_psi(9, 9, 3)),
    ]
    notes = []
    try:
        known = CohomologyResult(1, _oracle((3, 3), 3, settings, 1), Source.ORACLE, 3, Partition.of(3, 3))
        outcomes.append(_check(("transport", 0), {"p": 3, "partition": [9, 9], "route": "transport"},
                               h1_twopart_psi(9, 9, 3), predict_generic_h1(lam, 3, known).dim))
    except SpechtCohError as e:
        outcomes.append(Outcome(("transport", 0), {"p": 3, "partition": [9, 9], "route": "transport"},
                                False, 1, f"{type(e).__name__}: {e}"))
    if heavy:
        big = settings.with_overrides({"cocycle_unknowns": max(settings.max_cocycle_unknowns, 100_000)})
        outcomes.append(_oracle_outcome(("oracle", 1), {"p": 3, "partition": [9, 9], "route": "oracle"}, 1,
                                        lambda: _oracle((9, 9), 3, big, 1)))
    else:
        notes.append("oracle side at (9,9) skipped; pass --heavy to run it")
    return _report("generic-oracle", True, outcomes, notes)


def _shift_formula_case(case, settings):
    p, d = case
    r = l_p(d, p)
    out = []
    for lam in two_part_partitions(d, d):
        shifted = add_power_to_first_part(lam, p, r)
        inp = {"p": p, "partition": lam.to_json(), "r": r}
        direct = h1_twopart_psi(*shifted.parts, p)
        out.append(_check(("formula", p, d, -lam.parts[0]), inp, h1_twopart_psi(*lam.parts, p), direct))
        known = h1_twopart_result(*lam.parts, p)
        out.append(_check(("transport", p, d, -lam.parts[0]), {**inp, "check": "transport"},
                          direct, predict_shift_h1(lam, p, r, known).dim))
    return out


def _shift_oracle_case(case, settings):
    p, r, d = case
    out = []
    for lam in enumerate_partitions(d, settings=settings):
        shifted = add_power_to_first_part(lam, p, r)
        out.append(_oracle_outcome(
            ("oracle", p, d, _desc(lam)), {"p": p, "partition": lam.to_json(), "shifted": shifted.to_json()},
            _oracle(lam.parts, p, settings, 1),
            lambda: _oracle(shifted.parts, p, settings, 1),
        ))
    return out


@suite("shift-stability", description="H¹(S^λ) = H¹(S^{λ+p^r}) when p^r > |λ|")
def shift_stability(settings: Settings, heavy: bool) -> SuiteReport:
    pinned = [_check(("pinned", 0), {"p": 3, "partition": [11, 1]}, 1, h1_twopart_criterion(11, 1, 3))]
    outcomes = pinned + _fan_out(_shift_formula_case, [(p, d) for p in (3, 5) for d in range(2, 41)], settings)
    outcomes += _fan_out(_shift_oracle_case, [(3, 2, d) for d in range(1, 5)], settings)
    return _report("shift-stability", True, outcomes)


@suite("first-row-h0", description="H⁰ unchanged by a new first row a ≡ −1 mod p^{l_p(λ1)}")
def first_row_h0(settings: Settings, heavy: bool) -> SuiteReport:
    outcomes = []
    for p in (3, 5):
        for d in range(1, 11):
            for lam in enumerate_partitions(d, settings=settings):
                for a in admissible_first_rows(lam, p, 2):
                    predicted = predict_first_row_h0(lam, p, a, h0_result(lam, p))
                    outcomes.append(_check(("sweep", p, d, _desc(lam), a), {"p": p, "partition": lam.to_json(), "a": a},
                                           james_h0(prepend_part(lam, a), p), predicted.dim))
    return _report("first-row-h0", True, outcomes)


# =========================
# report-only probes
# =========================
def _conjecture_case(case, settings):
    p, d = case
    out = []
    for lam in enumerate_partitions(d, settings=settings):
        if lam.is_row() or not is_h0_factor(lam, p):
            continue
        out.append(_oracle_outcome(("sweep", p, d, _desc(lam)), {"p": p, "partition": lam.to_json()}, True,
                                   lambda: _oracle(lam.parts, p, settings, 1) > 0))
    return out


@suite("conjecture-83", asserting=False,
       description="does every factor L(λ) ≠ L(d) of H⁰(d) give H¹(S^λ) ≠ 0? (open)")
def conjecture_83(settings: Settings, heavy: bool) -> SuiteReport:
    cases = [(p, d) for p in (3, 5) for d in range(1, 8)]
    return _report("conjecture-83", False, _fan_out(_conjecture_case, cases, settings))


def _first_row_h1_case(case, settings):
    p, d = case
    out = []
    for lam in enumerate_partitions(d, settings=settings):
        a = p ** l_p(lam.parts[0], p) - 1
        bigger = prepend_part(lam, a)
        out.append(_oracle_outcome(("sweep", p, d, _desc(lam)),
                                   {"p": p, "partition": lam.to_json(), "extended": bigger.to_json()},
                                   _oracle(lam.parts, p, settings, 1),
                                   lambda: _oracle(bigger.parts, p, settings, 1)))
    return out


@suite("first-row-h1", asserting=False, description="does the first-row move also preserve H¹? (open)")
def first_row_h1(settings: Settings, heavy: bool) -> SuiteReport:
    return _report("first-row-h1", False, _fan_out(_first_row_h1_case, [(3, d) for d in range(1, 4)], settings))


def _single_twist_case(case, settings):
    p, d = case
    out = []
    for lam in two_part_partitions(d, d):
        out.append(_check(("sweep", p, d, -lam.parts[0]), {"p": p, "partition": lam.to_json()},
                          h1_twopart_psi(*lam.parts, p), h1_twopart_psi(*scale_partition(lam, p).parts, p)))
    return out


@suite("single-twist", asserting=False, description="where H¹(S^λ) and H¹(S^{pλ}) differ")
def single_twist(settings: Settings, heavy: bool) -> SuiteReport:
    outcomes = _fan_out(_single_twist_case, [(p, d) for p in (3, 5) for d in range(2, 31)], settings)
    changed = sum(1 for o in outcomes if not o.ok)
    return _report("single-twist", False, outcomes, [f"{changed} of {len(outcomes)} two-part shapes change under one twist"])
