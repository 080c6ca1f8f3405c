"""Differentials, cocycle checks, compatibility, and the coboundary solver."""

from __future__ import annotations

import random

from lieworkbench.bialgebra import cobracket_from_r
from lieworkbench.catalog import (
    make_borel,
    make_dual_jordanian,
    make_dual_standard,
    make_osp12,
    make_rjordan,
    make_sl,
)
from lieworkbench.cohomology import (
    Cochain1,
    Cochain2,
    coboundary_in_wedge,
    cocycle2_witness,
    compare_cochain2,
    compatible_pair,
    d1,
    d2_residual,
    h2_dim,
    is_cocycle2,
    mixed_jacobiator,
    solve_coboundary,
)
from lieworkbench.liealg import LieSuperAlgebra
from lieworkbench.scalars import Poly, as_poly


def _random_cochain1(rng: random.Random, A: LieSuperAlgebra, parity: int) -> Cochain1:
    values = {}
    for name in A.basis.names:
        want = (A.basis.parity(name) + parity) % 2
        targets = [n for n in A.basis.names if A.basis.parity(n) == want]
        values[name] = {t: as_poly(rng.randint(-3, 3)) for t in targets}
    return Cochain1(A.basis, values, parity=parity)


# -- cochains ------------------------------------------------------------------------


def test_cochain1_rejects_parity_violations():
    A, _, _, _ = make_osp12()
    import pytest

    with pytest.raises(ValueError):
        Cochain1(A.basis, {"h": {"vp": 1}}, parity=0)
    Cochain1(A.basis, {"h": {"vp": 1}}, parity=1)  # declared odd: fine


def test_cochain1_table_lines():
    sl2 = make_sl(2)
    psi = Cochain1(sl2.basis, {"E12": {"H1": 2, "E12": -1}})
    assert psi.table_lines() == ["H1 -> 0", "E12 -> 2*H1 - E12", "E21 -> 0"]


def test_cochain2_from_algebra_reproduces_the_bracket():
    _, mu1, _, _ = make_osp12()
    phi = Cochain2.from_algebra(mu1)
    for a in mu1.basis.names:
        for b in mu1.basis.names:
            assert phi.apply_names(a, b) == dict(mu1.bracket_basis(a, b).coeffs)


# -- the complex is a complex ---------------------------------------------------------


def test_d2_of_d1_vanishes_for_even_and_odd_cochains():
    rng = random.Random(23)
    algebras = [make_sl(2), make_osp12()[1]]
    for A in algebras:
        for parity in (0, 1):
            psi = _random_cochain1(rng, A, parity)
            assert cocycle2_witness(A, d1(A, psi)) is None


def test_bracket_cochain_is_a_cocycle():
    for A in (make_sl(2), make_sl(3), make_osp12()[0]):
        assert is_cocycle2(A, Cochain2.from_algebra(A))


def test_cocycle2_witness_flags_a_broken_table():
    sl2 = make_sl(2)
    bad = Cochain2(sl2.basis, {("E12", "E21"): {"E12": 1}})
    triple, residual = cocycle2_witness(sl2, bad)
    assert triple == ("H1", "E12", "E21")
    assert residual == {"E12": as_poly(2)}
    assert d2_residual(sl2, bad, *triple) == residual


# -- compatibility of bracket pairs ----------------------------------------------------


def test_osp_bracket_pair_is_compatible_both_ways():
    _, mu1, mu2, _ = make_osp12()
    assert compatible_pair(mu1, mu2)
    assert compatible_pair(mu2, mu1)


def test_incompatible_pair_has_an_explicit_witness():
    sl2 = make_sl(2)
    partial = LieSuperAlgebra("partial", sl2.basis, {("H1", "E12"): {"E12": 1}})
    assert partial.verify_jacobi().ok
    assert not compatible_pair(sl2, partial)
    value = mixed_jacobiator(sl2, partial, "H1", "E12", "E21")
    assert value == sl2.gen("H1").scaled(-1)


# -- the coboundary solver --------------------------------------------------------------


def test_solver_round_trips_random_coboundaries():
    rng = random.Random(31)
    for A in (make_sl(2), make_osp12()[1]):
        for parity in (0, 1):
            psi = _random_cochain1(rng, A, parity)
            phi = d1(A, psi)
            out = solve_coboundary(A, phi)
            assert out.status == "solved" and out.found
            assert compare_cochain2(d1(A, out.psi), phi).equal


def test_solved_case_with_explicit_certificate():
    _, mu1, mu2, _ = make_osp12()
    out = solve_coboundary(mu1, Cochain2.from_algebra(mu2))
    assert out.status == "solved"
    assert (out.rank, out.rank_augmented) == (9, 9)
    assert out.assumptions == ()
    assert out.psi.table_lines() == [
        "h_hat -> 0",
        "Xp_hat -> -h_hat",
        "Xm_hat -> 0",
        "vp_hat -> vm_hat",
        "vm_hat -> 0",
    ]
    assert compare_cochain2(d1(mu1, out.psi), Cochain2.from_algebra(mu2)).equal


def test_published_candidate_differs_from_the_solver_answer_in_one_entry():
    # The shipped 1-cochain reproduces the target bracket except on the
    # (vm_hat, vm_hat) diagonal; the comparison table pinpoints the slot.
    _, mu1, mu2, psi = make_osp12()
    comparison = compare_cochain2(d1(mu1, psi), Cochain2.from_algebra(mu2))
    assert not comparison.equal
    assert comparison.mismatches == ("(vm_hat, vm_hat)",)
    table = comparison.table("candidate", "target")
    assert table.splitlines()[-1].endswith("<== differs")


def test_obstructed_case_reports_a_specialization_certificate():
    out = solve_coboundary(make_dual_standard(2),
                           Cochain2.from_algebra(make_dual_jordanian(2)))
    assert out.status == "obstructed"
    assert not out.found
    assert out.psi is None
    assert (out.rank, out.rank_augmented) == (0, 1)
    assert out.assumptions == ("h", "-h")
    assert out.obstruction == (
        "every solution inverts h; at h = 0, xi = 1 the system has rank 0 "
        "but augmented rank 1, so no solution regular there exists"
    )


def test_assuming_the_pivot_nonzero_unlocks_the_rational_solution():
    out = solve_coboundary(make_dual_standard(2),
                           Cochain2.from_algebra(make_dual_jordanian(2)),
                           assume_nonzero=("h",))
    assert out.status == "solved" and out.found
    assert (out.rank, out.rank_augmented) == (3, 3)
    assert out.assumptions == ("h", "-h")
    assert out.psi.table_lines() == [
        "H1_hat -> 0",
        "E12_hat -> (2*xi/h)*H1_hat",
        "E21_hat -> 0",
    ]


def test_non_cocycle_input_is_rejected_with_a_witness():
    sl2 = make_sl(2)
    bad = Cochain2(sl2.basis, {("E12", "E21"): {"E12": 1}})
    out = solve_coboundary(sl2, bad)
    assert out.status == "not-cocycle"
    assert not out.found
    assert out.psi is None
    assert out.witness == ("H1", "E12", "E21")


# -- cohomology dimensions ---------------------------------------------------------------


def test_h2_vanishes_for_the_simple_algebra():
    report = h2_dim(make_sl(2))
    assert (report.kernel_dim, report.image_dim, report.quotient_dim) == (6, 6, 0)
    assert report.parameter_assumptions == ()


def test_h2_dimensions_are_frozen():
    _, mu1, mu2, _ = make_osp12()
    expectations = [
        (make_borel(), (2, 2, 0), ()),
        (make_dual_standard(2), (6, 3, 3), ("h", "-h", "-2*h")),
        (make_dual_jordanian(2), (6, 3, 3), ("2*xi", "-2*xi", "4*xi")),
        (mu1, (20, 19, 1), ()),
        (mu2, (21, 18, 3), ()),
    ]
    for algebra, dims, assumptions in expectations:
        report = h2_dim(algebra)
        assert (report.kernel_dim, report.image_dim, report.quotient_dim) == dims
        assert report.parameter_assumptions == assumptions


# -- tensor-valued coboundaries agree with the cobracket ---------------------------------


def test_wedge_coboundary_agrees_with_the_cobracket():
    A = make_sl(2)
    r = make_rjordan(2)
    assert coboundary_in_wedge(A, r) == cobracket_from_r(A, r)
