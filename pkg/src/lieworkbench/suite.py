"""End-to-end verdict suite over the built-in catalog.

Eleven numbered criteria exercise the whole stack — bracket tables,
classical r-matrices, cobrackets and duals, cohomology, the coboundary
solver, the transcribed first-order dual bracket, the twist engine, and a
set of negative controls.  Every computation is exact; a criterion either
holds identically in all parameters or fails with a concrete witness.

Criterion 3 records an expectation that the standard r-matrices satisfy
the modified classical Yang-Baxter equation while failing the unmodified
one.  The constructed tensors include the symmetric (invariant) part, and
their Schouten bracket vanishes identically, so the unmodified equation
holds as well.  The suite reports the computed facts and marks the
criterion failed rather than adjusting either the expectation or the
tensor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import (
    LieBialgebra,
    adjoint_twist_r,
    check_cybe,
    check_invariant,
    check_mcybe,
    cobracket_from_r,
    decompose_check,
    dual_algebra,
    limit_r,
    proportionality_constant,
    schouten,
    sym_part,
)
from .catalog import (
    cartan_name,
    catalog_get,
    make_borel,
    make_double_pieces,
    make_dual_jordanian,
    make_dual_standard,
    make_osp12,
    make_rborel,
    make_rdj,
    make_rfull,
    make_rjordan,
    make_sl,
    mu_prime_transcription,
    pair_name,
)
from .cohomology import (
    Cochain2,
    cocycle2_witness,
    compare_cochain2,
    compatible_pair,
    d1,
    is_cocycle2,
    solve_coboundary,
)
from .enveloping import (
    TensorUEA,
    UEA,
    build_extended_twist,
    build_jordanian_twist,
    classical_limit,
    factored_R_compare,
    qybe_check,
    tensor_product,
    twist_cocycle_check,
    twist_counit_ok,
    universal_R,
)
from .liealg import GradedBasis, LieSuperAlgebra, pencil
from .scalars import Poly, TruncationOrder, param, scalar_str

__all__ = [
    "CriterionResult",
    "run_suite",
    "render_suite",
    "suite_exit_code",
]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    ok: bool
    lines: tuple[str, ...]


def _result(number: int, title: str, ok, lines) -> CriterionResult:
    return CriterionResult(number, title, bool(ok), tuple(str(l) for l in lines))


CATALOG_ALGEBRAS = (
    "sl2", "sl3", "sl4", "gl3", "borel", "osp12",
    "double.g1", "double.g2", "double.g1dual", "double.g2dual",
    "double.pencil",
)


def criterion_catalog_jacobi() -> CriterionResult:
    lines = []
    ok = True
    for name in CATALOG_ALGEBRAS:
        report = catalog_get(name).verify_jacobi()
        if report.ok:
            lines.append(f"{name}: ok ({report.triples_checked} triples)")
        else:
            ok = False
            lines.append(f"{name}: FAILS at {report.witness}: {report.residual}")
    return _result(1, "catalog bracket tables satisfy the graded Jacobi "
                   "identity", ok, lines)


def criterion_jordanian_cybe() -> CriterionResult:
    lines = []
    ok = True
    for N in (2, 3, 4):
        holds = check_cybe(make_sl(N), make_rjordan(N))
        ok = ok and holds
        lines.append(f"sl({N}): classical Yang-Baxter for the jordanian "
                     f"r-matrix: {holds}")
    return _result(2, "jordanian r-matrices satisfy the classical "
                   "Yang-Baxter equation", ok, lines)


def criterion_standard_r() -> CriterionResult:
    lines = []
    ok = True
    for N in (2, 3):
        A = make_sl(N)
        r = make_rdj(N)
        modified = check_mcybe(A, r)
        unmodified = check_cybe(A, r)
        sym_invariant = check_invariant(A, sym_part(r))
        lines.append(f"sl({N}): modified equation {modified}, symmetric part "
                     f"invariant {sym_invariant}, unmodified equation "
                     f"{unmodified} (expected False)")
        if unmodified:
            lines.append(f"sl({N}): the Schouten bracket vanishes "
                         "identically, so the unmodified equation cannot "
                         "fail for this tensor; reported, not patched")
        ok = ok and modified and sym_invariant and not unmodified
    return _result(3, "standard r-matrices: modified equation holds and "
                   "the unmodified one fails", ok, lines)


def criterion_decompose_limit() -> CriterionResult:
    lines = []
    ok = True
    for N in (2, 3, 4):
        full = make_rfull(N)
        split = decompose_check(full, make_rdj(N), make_rjordan(N))
        limit = limit_r(full, "h") == make_rjordan(N)
        ok = ok and split and limit
        lines.append(f"sl({N}): standard + jordanian decomposition {split}, "
                     f"h -> 0 limit equals jordanian {limit}")
    return _result(4, "combined r-matrix decomposes exactly and its h -> 0 "
                   "limit is jordanian", ok, lines)


def criterion_adjoint_twist() -> CriterionResult:
    lines = []
    ok = True
    xi = param("xi")
    graded = frozenset({"xi"})
    for N in (2, 3):
        A = make_sl(N)
        r = make_rdj(N)
        z = A.gen(pair_name("E", 1, N, N))
        twisted = adjoint_twist_r(A, r, z, xi)
        first_order = (twisted - r).graded_part(graded, 1)
        constant = proportionality_constant(first_order, make_rjordan(N))
        if constant is None:
            ok = False
            lines.append(f"sl({N}): first-order difference is NOT "
                         "proportional to the jordanian r-matrix")
        else:
            lines.append(f"sl({N}): conjugated minus standard is first-order "
                         f"({scalar_str(constant)}) * jordanian")
    return _result(5, "conjugating the standard r-matrix by exp(xi ad) of "
                   "the highest root vector is first-order jordanian",
                   ok, lines)


def criterion_double() -> CriterionResult:
    g1, g2, g1dual, g2dual, r_double = make_double_pieces()
    a1, a2 = param("alpha1"), param("alpha2")
    combined = pencil(g1, g2, a1, a2, name="double.pencil")
    delta = cobracket_from_r(combined, r_double)
    split = (cobracket_from_r(g1, r_double).scaled(a1)
             + cobracket_from_r(g2, r_double).scaled(a2))
    factorizes = delta == split
    dual = dual_algebra(LieBialgebra(combined, delta))
    expected = pencil(g1dual, g2dual, a1, a2)
    dual_matches = (dual.basis == expected.basis
                    and dual.table == expected.table)
    lines = [
        f"cobracket of the pencil = alpha1 * (first piece) + alpha2 * "
        f"(second piece): {factorizes}",
        f"dual algebra of the pencil equals the pencil of dual brackets: "
        f"{dual_matches}",
    ]
    return _result(6, "the double's cobracket factorizes linearly and "
                   "dualizes onto the dual pencil",
                   factorizes and dual_matches, lines)


def criterion_mutual_cocycles() -> CriterionResult:
    _, mu1, mu2, _ = make_osp12()
    pairs = [
        ("sl(2) standard dual", "sl(2) jordanian dual",
         make_dual_standard(2), make_dual_jordanian(2)),
        ("osp(1|2) first dual bracket", "osp(1|2) second dual bracket",
         mu1, mu2),
    ]
    lines = []
    ok = True
    for name_a, name_b, A, B in pairs:
        compat = compatible_pair(A, B)
        b_over_a = is_cocycle2(A, Cochain2.from_algebra(B))
        a_over_b = is_cocycle2(B, Cochain2.from_algebra(A))
        ok = ok and compat and b_over_a and a_over_b
        lines.append(f"{name_a} / {name_b}: compatible {compat}, "
                     f"second closed over first {b_over_a}, "
                     f"first closed over second {a_over_b}")
    return _result(7, "dual bracket pairs are compatible and are "
                   "2-cocycles of each other", ok, lines)


def criterion_coboundary() -> CriterionResult:
    lines = []
    _, mu1, mu2, psi_printed = make_osp12()
    phi = Cochain2.from_algebra(mu2)
    outcome = solve_coboundary(mu1, phi)
    solved = outcome.status == "solved"
    lines.append(f"second osp(1|2) dual bracket over the first: "
                 f"{outcome.status} (rank {outcome.rank}/"
                 f"{outcome.rank_augmented})")
    if solved:
        lines.extend(f"  psi: {line}" for line in outcome.psi.table_lines())
    comparison = compare_cochain2(d1(mu1, psi_printed), phi)
    if comparison.equal:
        lines.append("printed psi table: differential matches the target")
    else:
        lines.append("printed psi table: differential DIFFERS at "
                     f"{', '.join(comparison.mismatches)} (reported, "
                     "not patched)")
    obstruction = solve_coboundary(make_dual_jordanian(2),
                                   Cochain2.from_algebra(make_dual_standard(2)))
    lines.append("sl(2) standard dual bracket over the jordanian dual: "
                 f"{obstruction.status} (rank {obstruction.rank} < "
                 f"augmented {obstruction.rank_augmented})")
    if obstruction.obstruction:
        lines.append(f"  certificate: {obstruction.obstruction}")
    obstructed = obstruction.status == "obstructed"
    return _result(8, "coboundary solver finds the osp(1|2) connecting "
                   "cochain and certifies the sl(2) obstruction",
                   solved and obstructed, lines)


def criterion_mu_prime() -> CriterionResult:
    first = mu_prime_transcription(3)
    second = mu_prime_transcription(3)
    deterministic = first.render_lines() == second.render_lines()
    lines = list(first.render_lines())
    lines.append(f"report deterministic across rebuilds: {deterministic}")
    return _result(9, "transcribed first-order dual bracket report is "
                   "complete and deterministic", deterministic, lines)


def criterion_twists(order: int = 3) -> CriterionResult:
    lines = []
    ok = True
    reference = make_rborel().scaled(param("xi"))
    for degree in range(1, order + 1):
        F = build_jordanian_twist(degree)
        cocycle_ok = not twist_cocycle_check(F)
        counit_ok = twist_counit_ok(F)
        R = universal_R(F)
        qybe_ok = not qybe_check(R)
        sign = proportionality_constant(classical_limit(R), reference)
        sign_text = scalar_str(sign) if sign is not None else "none"
        ok = ok and cocycle_ok and counit_ok and qybe_ok and sign is not None
        lines.append(f"jordanian twist, order {degree}: cocycle {cocycle_ok},"
                     f" counit {counit_ok}, quantum Yang-Baxter {qybe_ok},"
                     f" classical limit = ({sign_text}) * xi * h^x")
    F3 = build_extended_twist(3, 2)
    ext_cocycle = not twist_cocycle_check(F3)
    ext_counit = twist_counit_ok(F3)
    ext_limit = classical_limit(universal_R(F3))
    ext_constant = proportionality_constant(ext_limit, make_rjordan(3))
    ext_text = scalar_str(ext_constant) if ext_constant is not None else "none"
    ok = ok and ext_cocycle and ext_counit and ext_constant is not None
    lines.append(f"extended sl(3) twist, order 2: cocycle {ext_cocycle}, "
                 f"counit {ext_counit}, classical limit = ({ext_text}) * "
                 "jordanian r-matrix")
    factored = factored_R_compare(3, 2)
    ok = ok and factored
    lines.append(f"slot-factored R-matrix product equals the twisted "
                 f"universal R at order 2: {factored}")
    return _result(10, "twists pass cocycle, counit, and quantum "
                   "Yang-Baxter checks with the expected classical limits",
                   ok, lines)


def criterion_negative_controls() -> CriterionResult:
    lines = []
    ok = True

    basis = GradedBasis(("H1", "E12", "E21"))
    corrupted = LieSuperAlgebra("corrupted.sl2", basis, {
        ("H1", "E12"): {"E12": 2},
        ("H1", "E21"): {"E21": -2},
        ("E12", "E21"): {"E12": 1},  # deliberately wrong: should be H1
    })
    report = corrupted.verify_jacobi()
    if report.ok:
        ok = False
        lines.append("corrupted sl(2): Jacobi UNEXPECTEDLY passes")
    else:
        lines.append(f"corrupted sl(2): Jacobi fails at {report.witness} "
                     f"with residual {report.residual}")

    uea = UEA(make_borel(), TruncationOrder(2, frozenset({"xi"})))
    x = uea.gen("x")
    non_twist = (TensorUEA.unit(uea, 2)
                 + tensor_product(x, x).scaled(param("xi")))
    residual = twist_cocycle_check(non_twist)
    if residual:
        key, coeff = residual.leading_term()
        lines.append("non-twist 1(x)1 + xi*x(x)x: cocycle residual has "
                     f"leading term {scalar_str(coeff)} at "
                     f"({', '.join(key)})")
    else:
        ok = False
        lines.append("non-twist: cocycle residual UNEXPECTEDLY vanishes")

    sl2 = make_sl(2)
    bad_cochain = Cochain2(sl2.basis, {("E12", "E21"): {"E12": 1}})
    witness = cocycle2_witness(sl2, bad_cochain)
    if witness is None:
        ok = False
        lines.append("non-cocycle 2-cochain: UNEXPECTEDLY closed")
    else:
        (a, b, c), vec = witness
        rendered = " + ".join(f"{scalar_str(v)}*{n}"
                              for n, v in sorted(vec.items()))
        lines.append(f"non-cocycle 2-cochain on sl(2): fails at "
                     f"({a}, {b}, {c}) with residual {rendered}")

    return _result(11, "negative controls fail with concrete witnesses",
                   ok, lines)


def run_suite(order: int = 3) -> list[CriterionResult]:
    """All eleven criteria; ``order`` bounds the jordanian twist degree."""
    return [
        criterion_catalog_jacobi(),
        criterion_jordanian_cybe(),
        criterion_standard_r(),
        criterion_decompose_limit(),
        criterion_adjoint_twist(),
        criterion_double(),
        criterion_mutual_cocycles(),
        criterion_coboundary(),
        criterion_mu_prime(),
        criterion_twists(order),
        criterion_negative_controls(),
    ]


def render_suite(results: list[CriterionResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.ok else 'FAIL'}] {r.number:2d}. {r.title}")
        lines.extend(f"      {detail}" for detail in r.lines)
    passing = sum(r.ok for r in results)
    lines.append(f"{passing}/{len(results)} criteria pass")
    return "\n".join(lines) + "\n"


def suite_exit_code(results: list[CriterionResult]) -> int:
    return 0 if all(r.ok for r in results) else 1
