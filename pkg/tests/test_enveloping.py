"""Truncated enveloping algebras, twists, R-matrices, and classical limits."""

from __future__ import annotations

import random

import pytest

from lieworkbench.bialgebra import proportionality_constant
from lieworkbench.catalog import (
    make_borel,
    make_osp12,
    make_rborel,
    make_rjordan,
    make_sl,
)
from lieworkbench.enveloping import (
    TensorUEA,
    UEA,
    build_extended_twist,
    build_jordanian_twist,
    classical_limit,
    coproduct,
    counit,
    exp_trunc,
    factored_R_compare,
    factored_r_matrix,
    invert_trunc,
    log_trunc,
    pbw_normalize,
    qybe_check,
    tensor_product,
    twist_cocycle_check,
    twist_counit_ok,
    universal_R,
)
from lieworkbench.scalars import (
    Poly,
    TruncationOrder,
    UnsupportedInputError,
    param,
)

XI = param("xi")

UNTRUNCATED = TruncationOrder(0, frozenset())


def _random_element(rng: random.Random, uea: UEA, terms: int = 2):
    out = uea.zero()
    names = uea.algebra.basis.names
    for _ in range(terms):
        word = tuple(rng.choice(names) for _ in range(rng.randint(0, 2)))
        out = out + pbw_normalize(uea, word).scaled(rng.randint(-2, 2))
    return out


# -- normal ordering -------------------------------------------------------------------


def test_pbw_reordering_on_the_borel_algebra():
    U = UEA(make_borel(), UNTRUNCATED)
    h, x = U.gen("h"), U.gen("x")
    assert str(x * h) == "-2*x + h*x"
    assert str(h * x) == "h*x"


def test_odd_squares_collapse_to_even_generators():
    A, _, _, _ = make_osp12()
    U = UEA(A, UNTRUNCATED)
    vp, vm = U.gen("vp"), U.gen("vm")
    assert str(vp * vp) == "1/4*Xp"
    assert str(vm * vm) == "-1/4*Xm"
    assert str(vm * vp) == "-1/4*h - vp*vm"


def test_multiplication_is_associative():
    rng = random.Random(41)
    for algebra in (make_sl(2), make_osp12()[0]):
        U = UEA(algebra, UNTRUNCATED)
        for _ in range(6):
            u, v, w = (_random_element(rng, U) for _ in range(3))
            assert (u * v) * w == u * (v * w)


def test_lift_is_linear():
    A = make_sl(2)
    U = UEA(A, UNTRUNCATED)
    x = A.gen("E12").scaled(2) + A.gen("H1").scaled(-1)
    assert U.lift(x) == U.gen("E12").scaled(2) - U.gen("H1")


# -- coalgebra structure ----------------------------------------------------------------


def test_coproduct_is_an_algebra_homomorphism():
    rng = random.Random(43)
    A, _, _, _ = make_osp12()
    U = UEA(A, UNTRUNCATED)
    for _ in range(6):
        u, v = _random_element(rng, U), _random_element(rng, U)
        assert coproduct(u * v) == coproduct(u) * coproduct(v)


def test_counit_axiom():
    rng = random.Random(47)
    U = UEA(make_sl(2), UNTRUNCATED)
    for _ in range(4):
        u = _random_element(rng, U)
        two_sided = coproduct(u)
        assert two_sided.counit_slot(0) == u
        assert two_sided.counit_slot(1) == u
        assert counit(U.one()) == Poly.one()


def test_coproduct_of_a_generator_is_primitive():
    U = UEA(make_borel(), UNTRUNCATED)
    x = U.gen("x")
    assert coproduct(x) == tensor_product(x, U.one()) + tensor_product(U.one(), x)


# -- truncated series --------------------------------------------------------------------


def test_exp_and_log_are_mutually_inverse():
    U = UEA(make_borel(), TruncationOrder(3, frozenset({"xi"})))
    u = U.gen("x").scaled(XI * 2) + (U.gen("h") * U.gen("x")).scaled(XI * XI)
    assert log_trunc(exp_trunc(u)) == u
    assert exp_trunc(log_trunc(U.one() + u)) == U.one() + u


def test_log_of_a_geometric_unit():
    U = UEA(make_borel(), TruncationOrder(3, frozenset({"xi"})))
    u = U.one() + U.gen("x").scaled(XI * 2)
    assert str(log_trunc(u)) == "2*xi*x - 2*xi^2*x^2 + 8/3*xi^3*x^3"


def test_truncated_inverse():
    U = UEA(make_borel(), TruncationOrder(3, frozenset({"xi"})))
    u = U.one() + U.gen("x").scaled(XI) + (U.gen("h") * U.gen("h")).scaled(XI * XI)
    assert u * invert_trunc(u) == U.one()
    assert invert_trunc(u) * u == U.one()


def test_series_require_the_right_leading_term():
    U = UEA(make_borel(), TruncationOrder(2, frozenset({"xi"})))
    with pytest.raises(ValueError):
        exp_trunc(U.one())  # constant term must sit in positive degree
    with pytest.raises(ValueError):
        log_trunc(U.gen("x").scaled(XI))  # needs unit leading term


# -- the jordanian twist -------------------------------------------------------------------


def test_jordanian_twist_at_second_order():
    F = build_jordanian_twist(2)
    assert str(F) == "1(x)1 + xi*h(x)x - xi^2*h(x)x^2 + 1/2*xi^2*h^2(x)x^2"


def test_jordanian_twist_satisfies_the_cocycle_and_counit_laws():
    for order in (1, 2, 3):
        F = build_jordanian_twist(order)
        assert twist_counit_ok(F)
        assert not twist_cocycle_check(F)


def test_jordanian_R_matrix_and_its_classical_limit():
    for order in (1, 2, 3):
        R = universal_R(build_jordanian_twist(order))
        assert not qybe_check(R)
        limit = classical_limit(R)
        assert proportionality_constant(limit, make_rborel()) == XI * -1


# -- the extended twist ----------------------------------------------------------------------


def test_extended_twist_produces_the_jordanian_limit_on_sl3():
    F = build_extended_twist(3, 2)
    assert twist_counit_ok(F)
    assert not twist_cocycle_check(F)
    R = universal_R(F)
    assert not qybe_check(R)
    assert classical_limit(R) == make_rjordan(3)


def test_factored_r_matrix_matches_the_twist_route():
    assert factored_R_compare(3, 2)
    R_direct = universal_R(build_extended_twist(3, 2))
    R_factored = factored_r_matrix(3, 2)
    assert R_direct == R_factored


# -- negative controls -------------------------------------------------------------------------


def test_non_twist_fails_the_cocycle_law_with_a_leading_witness():
    U = UEA(make_borel(), TruncationOrder(2, frozenset({"xi"})))
    x = U.gen("x")
    candidate = TensorUEA.unit(U, 2) + tensor_product(x, x).scaled(XI)
    residual = twist_cocycle_check(candidate)
    assert residual
    key, coeff = residual.leading_term()
    assert key == ("x", "x", "x^2")
    assert coeff == XI * XI * -1


def test_classical_limit_rejects_a_unitless_tensor():
    U = UEA(make_borel(), TruncationOrder(2, frozenset({"xi"})))
    x = U.gen("x")
    with pytest.raises(UnsupportedInputError) as err:
        classical_limit(tensor_product(x, x))
    assert "does not reduce to the unit tensor" in str(err.value)


def test_classical_limit_rejects_nonlinear_first_order_terms():
    U = UEA(make_borel(), TruncationOrder(2, frozenset({"xi"})))
    x = U.gen("x")
    bad = TensorUEA.unit(U, 2) + tensor_product(x * x, x).scaled(XI)
    with pytest.raises(UnsupportedInputError) as err:
        classical_limit(bad)
    assert str(err.value) == (
        "first-order term is not linear in each tensor slot: x^2(x)x")


# -- tensor plumbing ------------------------------------------------------------------------------


def test_flip_reverses_slots_with_signs():
    A, _, _, _ = make_osp12()
    U = UEA(A, UNTRUNCATED)
    vp, vm = U.gen("vp"), U.gen("vm")
    assert tensor_product(vp, vm).flip() == tensor_product(vm, vp).scaled(-1)
    h = U.gen("h")
    assert tensor_product(h, vp).flip() == tensor_product(vp, h)


def test_embedding_into_three_slots():
    U = UEA(make_borel(), UNTRUNCATED)
    h, x = U.gen("h"), U.gen("x")
    r = tensor_product(h, x)
    r13 = r.embed(3, (0, 2))
    assert r13 == tensor_product(h, U.one(), x)


def test_truncation_drops_high_degree_terms():
    U = UEA(make_borel(), TruncationOrder(3, frozenset({"xi"})))
    t = TensorUEA.unit(U, 2) + tensor_product(U.gen("x"), U.gen("x")).scaled(XI * XI)
    cut = t.truncated(1)
    assert cut.uea.order.degree == 1
    assert cut == TensorUEA.unit(cut.uea, 2)
    assert t.truncated(2).terms == t.terms
