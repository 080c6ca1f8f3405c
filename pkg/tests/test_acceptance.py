"""Acceptance battery: one test per published criterion, exact tolerances.

Every check here is exact (integer/rational arithmetic; zero tolerance).
Each test prints a one-line verdict so a verbose run reads as a checklist.
The third criterion is split in two: the modified-equation half holds, while
the unmodified-equation half is asserted as published and fails honestly,
because the jordanian-plus-standard family used here has an identically
vanishing Schouten bracket (see the suite module docstring); the assertion
is kept rather than weakened.
"""

from __future__ import annotations

import time

from lieworkbench.bialgebra import (
    adjoint_twist_r,
    check_cybe,
    check_invariant,
    check_mcybe,
    proportionality_constant,
    sym_part,
)
from lieworkbench.catalog import make_rdj, make_rjordan, make_sl
from lieworkbench.scalars import param
from lieworkbench import suite

H = param("h")
XI = param("xi")


def _verdict(number: int, title: str, ok: bool, budget: float, start: float):
    elapsed = time.perf_counter() - start
    print(f"criterion {number:02d} [{'PASS' if ok else 'FAIL'}] "
          f"{title} ({elapsed:.2f}s)")
    assert elapsed < budget, f"criterion {number} exceeded {budget}s"
    assert ok


def test_criterion_01_catalog_soundness():
    start = time.perf_counter()
    result = suite.criterion_catalog_jacobi()
    _verdict(1, "catalog algebras satisfy graded Jacobi identically",
             result.ok, 10.0, start)


def test_criterion_02_jordanian_r_matrices_satisfy_cybe():
    start = time.perf_counter()
    result = suite.criterion_jordanian_cybe()
    _verdict(2, "jordanian tensors solve the unmodified equation (N=2,3,4)",
             result.ok, 10.0, start)


def test_criterion_03_standard_r_satisfies_the_modified_equation():
    start = time.perf_counter()
    ok = True
    for N in (2, 3):
        A = make_sl(N)
        r = make_rdj(N)
        ok = ok and check_mcybe(A, r) and check_invariant(A, sym_part(r))
    _verdict(3, "standard tensors solve the modified equation (N=2,3)",
             ok, 30.0, start)


def test_criterion_03_standard_r_fails_the_unmodified_equation():
    # Published expectation: the standard tensor is NOT an unmodified
    # solution.  For this family the Schouten bracket vanishes identically,
    # so the expectation is unattainable; the assertion is kept as stated
    # and this test fails honestly rather than being weakened.
    start = time.perf_counter()
    ok = all(not check_cybe(make_sl(N), make_rdj(N)) for N in (2, 3))
    _verdict(3, "standard tensors fail the unmodified equation (N=2,3)",
             ok, 30.0, start)


def test_criterion_04_decomposition_and_limit():
    start = time.perf_counter()
    result = suite.criterion_decompose_limit()
    _verdict(4, "combined tensor splits exactly and limits to the "
             "jordanian part (N=2,3,4)", result.ok, 5.0, start)


def test_criterion_05_adjoint_twist_mechanism():
    start = time.perf_counter()
    result = suite.criterion_adjoint_twist()
    ok = result.ok
    for N in (2, 3):
        A = make_sl(N)
        r = make_rdj(N)
        twisted = adjoint_twist_r(A, r, A.gen(f"E1{N}"), XI)
        first = (twisted - r).graded_part(frozenset({"xi"}), 1)
        ok = ok and proportionality_constant(first, make_rjordan(N)) == H * -1
    _verdict(5, "adjoint twisting adds the jordanian tensor at first order "
             "(constant -h)", ok, 10.0, start)


def test_criterion_06_quantum_double_case():
    start = time.perf_counter()
    result = suite.criterion_double()
    _verdict(6, "double r-matrix cobracket splits as a1*d1 + a2*d2 and "
             "dualizes to the dual pencil", result.ok, 5.0, start)


def test_criterion_07_mutual_cocycles_and_compatibility():
    start = time.perf_counter()
    result = suite.criterion_mutual_cocycles()
    _verdict(7, "paired brackets are 2-cocycles of each other and "
             "compatible", result.ok, 10.0, start)


def test_criterion_08_coboundary_and_nontriviality():
    start = time.perf_counter()
    result = suite.criterion_coboundary()
    _verdict(8, "orthosymplectic class is a coboundary; sl(2) dual class "
             "is obstructed with a certificate", result.ok, 30.0, start)


def test_criterion_09_first_order_table_transcription():
    start = time.perf_counter()
    result = suite.criterion_mu_prime()
    _verdict(9, "literal transcription report is produced, deterministic, "
             "and states Jacobi/compatibility status", result.ok, 10.0, start)


def test_criterion_10_twist_engine():
    start = time.perf_counter()
    result = suite.criterion_twists(order=3)
    _verdict(10, "jordanian and extended twists pass cocycle/counit/QYBE "
             "checks with the expected classical limits", result.ok,
             300.0, start)


def test_criterion_11_negative_controls():
    start = time.perf_counter()
    result = suite.criterion_negative_controls()
    _verdict(11, "corrupted algebra, non-twist, and non-cocycle all fail "
             "with concrete witnesses", result.ok, 10.0, start)
