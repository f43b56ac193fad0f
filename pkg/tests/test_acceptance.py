"""Acceptance battery.

Each numbered criterion runs at its stated bounds and prints one PASS/FAIL
line (run pytest with -s to see them).  Every comparison is exact equality
of rational coefficients; no numeric tolerance exists anywhere.
"""

import json
import time

import pytest

from cqsym.algebra import partitions_of, z_lambda
from cqsym.chromatic import omega_x_via_f_theorem, p_expansion_theorem, perm_stats
from cqsym.families import cycle_p_coefficient, directed_cycle
from cqsym.verify import (
    GOLDEN_CHART,
    GOLDEN_OMEGA_X,
    K12_DIGRAPH,
    K21_DIGRAPH,
    P3_DIGRAPH,
    run_suite,
)


def _report(number, description, results, started):
    ok = all(r.passed for r in results)
    elapsed = time.time() - started
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} [{elapsed:.1f}s] {description}")
    if not ok:
        failures = [r for r in results if not r.passed]
        detail = "; ".join(
            f"{r.suite}/{r.name}: {json.dumps(r.detail)}" for r in failures
        )
        pytest.fail(f"criterion {number} failed: {detail}")


def test_criterion_1_f_theorem_oracle_equivalence():
    started = time.time()
    results = run_suite(
        "f-theorem",
        {"max_n": 4, "random_count": 500, "seed": 2024, "exhaustive": True},
    )
    _report(
        1,
        "F-expansion equals the coloring oracle: exhaustive n<=4, 500 random n in {5,6}",
        results,
        started,
    )


def test_criterion_2_golden_expansions_and_chart():
    started = time.time()
    ok = True
    for sigma, (des, inv_p3, inv_k12, inv_k21) in GOLDEN_CHART.items():
        st = perm_stats(P3_DIGRAPH, sigma)
        ok &= st.gdes == frozenset(des) and st.ginv == inv_p3
        ok &= perm_stats(K12_DIGRAPH, sigma).ginv == inv_k12
        ok &= perm_stats(K21_DIGRAPH, sigma).ginv == inv_k21
    ok &= omega_x_via_f_theorem(P3_DIGRAPH) == GOLDEN_OMEGA_X["P3"]
    ok &= omega_x_via_f_theorem(K12_DIGRAPH) == GOLDEN_OMEGA_X["K12"]
    ok &= omega_x_via_f_theorem(K21_DIGRAPH) == GOLDEN_OMEGA_X["K21"]
    elapsed = time.time() - started
    print(
        f"ACCEPTANCE 2: {'PASS' if ok else 'FAIL'} [{elapsed:.1f}s] "
        "golden omega-X expansions and the statistics chart reproduce row by row"
    )
    assert ok


def test_criterion_3_p_theorem():
    started = time.time()
    results = run_suite("p-theorem", {"max_n": 5, "family_n": 7})
    _report(
        3,
        "power-sum expansion: symmetric classes n<=5 (up to relabeling), "
        "cycles/paths/g_c n<=7, all scaled coefficients nonnegative",
        results,
        started,
    )


def test_criterion_4_cycle_p_factorization():
    started = time.time()
    ok = True
    for n in range(2, 8):
        p = p_expansion_theorem(directed_cycle(n), assume_symmetric=True)
        for lam in partitions_of(n):
            ok &= cycle_p_coefficient(n, lam) == p.coeff(lam) * z_lambda(lam)
    elapsed = time.time() - started
    print(
        f"ACCEPTANCE 4: {'PASS' if ok else 'FAIL'} [{elapsed:.1f}s] "
        "cycle p-coefficient factorization matches the generic expansion, n<=7"
    )
    assert ok


def test_criterion_5_eulerian_lemma():
    started = time.time()
    results = run_suite("eulerian", {"max_k": 7, "recurrence_n": 9})
    _report(
        5,
        "k-cycle excedance polynomials equal t*A_(k-1)(t) for 2<=k<=7, by enumeration",
        results,
        started,
    )


def test_criterion_6_cycle_and_path_e_expansions():
    started = time.time()
    results = run_suite("cycle-e", {"max_n": 8}) + run_suite("path-e", {"max_n": 8})
    _report(
        6,
        "cycle/path closed e-forms match brute force n<=8; positivity, "
        "unimodality, palindromicity batteries",
        results,
        started,
    )


def test_criterion_7_sink_sum_and_refinements():
    started = time.time()
    results = run_suite("sink-sum", {"max_n": 7}) + run_suite(
        "refinements", {"max_n": 7}
    )
    _report(
        7,
        "acyclic-orientation sink sums and the cycle/path refinements agree "
        "exactly, n<=7",
        results,
        started,
    )


def test_criterion_8_gc_closed_forms_and_positivity():
    started = time.time()
    results = run_suite("closed-forms", {"max_n": 6, "positivity_n": 7})
    _report(
        8,
        "closed forms for the complete/near-complete circular families match "
        "brute force n<=6; g_c(n,r) e-positive and e-unimodal for n<=7",
        results,
        started,
    )


def test_criterion_9_symmetry_theorem_and_phi():
    started = time.time()
    results = run_suite(
        "symmetry", {"max_n": 5, "random_count": 200, "seed": 2024}
    ) + run_suite("phi", {"samples": 10000, "seed": 2024})
    _report(
        9,
        "forbidden-free digraphs have symmetric X; all claw orientations "
        "flagged; color-swap involution checks on 10^4 sampled triples",
        results,
        started,
    )


def test_criterion_10_chung_graham_t_analog():
    started = time.time()
    results = run_suite(
        "chung-graham",
        {"max_n": 4, "family_n": 5, "random_count": 10, "seed": 2024},
    )
    _report(
        10,
        "chi(m,t) agrees via direct enumeration, the delta table, and "
        "specialization for m<=n+2; delta t-layers palindromic",
        results,
        started,
    )


def test_supplementary_module_invariants():
    started = time.time()
    results = run_suite("palindromic", {"max_n": 5}) + run_suite(
        "intervals", {"trials": 40, "seed": 2024}
    )
    _report(
        "S",
        "rho/descent oracle and palindromicity over all classes n<=5; "
        "interval/arc round trips; orientation counts vs chi(-1)",
        results,
        started,
    )
