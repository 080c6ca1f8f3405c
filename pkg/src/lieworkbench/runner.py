"""Evaluation of workbench definition files and check execution.

Loading happens in two phases.  Declarations (params, algebras, tensors,
cochains) are evaluated in order and every check's names are resolved up
front, so unknown identifiers are rejected at load time with a source
position.  Check execution then runs in declaration order; each check is
pure, reports ``pass``/``fail`` with detail lines, and an operation that
refuses its input (for example a Schouten bracket of an odd tensor) is
reported as ``unsupported`` rather than crashing the run.

Name resolution inside expressions prefers generators over parameters,
and declarations in the file shadow the built-in catalog.  A tensor
written without an explicit ``on ALG`` clause draws its generators from
the algebras declared in the file (requiring the names to be unambiguous
among them); with the clause, the named algebra — catalog algebras
included — provides the generators.
"""

from __future__ import annotations

import json
import time
from collections.abc import Mapping
from dataclasses import dataclass, field

from . import dsl
from .bialgebra import (
    adjoint_twist_r,
    check_cybe,
    check_invariant,
    check_mcybe,
    decompose_check,
    proportionality_constant,
    schouten,
    sym_part,
)
from .catalog import (
    catalog_entries,
    catalog_entry,
    catalog_get,
    catalog_names,
    make_borel,
    make_rborel,
    make_rjordan,
    make_sl,
)
from .cohomology import (
    Cochain1,
    Cochain2,
    cocycle2_witness,
    compare_cochain2,
    compatible_pair,
    d1,
    mixed_jacobiator,
    solve_coboundary,
)
from .enveloping import (
    build_extended_twist,
    build_jordanian_twist,
    classical_limit,
    qybe_check,
    twist_cocycle_check,
    twist_counit_ok,
    universal_R,
)
from .liealg import Element, GradedBasis, LieSuperAlgebra, Tensor, otimes, wedge
from .scalars import Poly, UnsupportedInputError, param, scalar_str

__all__ = [
    "LoadError",
    "RunOptions",
    "CheckResult",
    "Environment",
    "load",
    "run_checks",
    "run_source",
    "render_text",
    "render_structured",
    "exit_code",
]

DEFAULT_ORDER = 3


class LoadError(ValueError):
    """Declaration or resolution error with a source line."""

    def __init__(self, message: str, line: int = 0):
        prefix = f"line {line}: " if line else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


@dataclass(frozen=True)
class RunOptions:
    order: int = DEFAULT_ORDER          # default twist truncation order
    assume_nonzero: tuple[str, ...] = ()  # parameters granted inversion


@dataclass(frozen=True)
class CheckResult:
    label: str
    status: str  # "pass" | "fail" | "unsupported"
    details: tuple[str, ...]
    elapsed: float = field(default=0.0, compare=False)


# -- environment -------------------------------------------------------------------


class Environment:
    """Named values declared by a file, with catalog fallback."""

    def __init__(self):
        self.params: dict[str, Poly] = {}
        self.algebras: dict[str, LieSuperAlgebra] = {}
        self.tensors: dict[str, Tensor] = {}
        self.tensor_carrier: dict[str, str | None] = {}
        self.cochains: dict[str, Cochain1] = {}

    # resolution (file first, then catalog)

    def _catalog(self, name: str, kind: str):
        try:
            entry = catalog_entry(name)
        except ValueError:
            return None
        if entry.kind != kind:
            return None
        return catalog_get(name)

    def resolve_algebra(self, name: str, line: int = 0) -> LieSuperAlgebra:
        if name in self.algebras:
            return self.algebras[name]
        found = self._catalog(name, "algebra")
        if found is None:
            raise LoadError(f"unknown algebra {name!r}", line)
        return found

    def resolve_tensor(self, name: str, line: int = 0) -> tuple[Tensor, str | None]:
        """The tensor and the name of its carrier algebra, if known."""
        if name in self.tensors:
            return self.tensors[name], self.tensor_carrier.get(name)
        found = self._catalog(name, "tensor")
        if found is None:
            raise LoadError(f"unknown tensor {name!r}", line)
        return found, catalog_entry(name).algebra

    def resolve_cochain1(self, name: str, line: int = 0) -> Cochain1:
        if name in self.cochains:
            return self.cochains[name]
        found = self._catalog(name, "cochain")
        if found is None:
            raise LoadError(f"unknown 1-cochain {name!r}", line)
        return found

    def resolve_cochain2(self, name: str, line: int = 0) -> Cochain2:
        """A 2-cochain named by a bracket table (an algebra's bracket)."""
        algebra = None
        if name in self.algebras:
            algebra = self.algebras[name]
        else:
            algebra = self._catalog(name, "algebra")
        if algebra is None:
            raise LoadError(
                f"unknown 2-cochain {name!r} (name an algebra to use its "
                "bracket table)", line)
        return Cochain2.from_algebra(algebra)

    def carrier_for(self, tensor: Tensor, hint: str | None,
                    explicit: str | None, line: int = 0) -> LieSuperAlgebra:
        """The algebra whose basis carries the tensor."""
        if explicit is not None:
            A = self.resolve_algebra(explicit, line)
            if A.basis != tensor.basis:
                raise LoadError(
                    f"algebra {explicit!r} does not carry this tensor", line)
            return A
        if hint is not None:
            A = self.resolve_algebra(hint, line)
            if A.basis == tensor.basis:
                return A
        for A in self.algebras.values():
            if A.basis == tensor.basis:
                return A
        for entry in catalog_entries():
            if entry.kind == "algebra":
                A = catalog_get(entry.name)
                if A.basis == tensor.basis:
                    return A
        raise LoadError("no known algebra carries this tensor "
                        "(add an 'on ALGEBRA' clause)", line)


# -- expression evaluation ------------------------------------------------------------


def _is_zero_scalar(value) -> bool:
    return isinstance(value, Poly) and not value


def _eval_add(left, right, op: str, line: int):
    if _is_zero_scalar(left):
        return right if op == "+" else _negate(right)
    if _is_zero_scalar(right):
        return left
    if isinstance(left, Poly) and isinstance(right, Poly):
        return left + right if op == "+" else left - right
    if type(left) is type(right):
        try:
            return left + right if op == "+" else left - right
        except ValueError as exc:
            raise LoadError(str(exc), line) from None
    raise LoadError(f"cannot {'add' if op == '+' else 'subtract'} "
                    f"{_kind_name(left)} and {_kind_name(right)}", line)


def _negate(value):
    return -value if isinstance(value, Poly) else value.scaled(-1)


def _kind_name(value) -> str:
    if isinstance(value, Poly):
        return "a scalar"
    if isinstance(value, Element):
        return "an algebra element"
    if isinstance(value, Tensor):
        return "a tensor"
    return type(value).__name__


def _eval_mul(left, right, line: int):
    if isinstance(left, Poly) and isinstance(right, Poly):
        return left * right
    if isinstance(left, Poly):
        return right.scaled(left)
    if isinstance(right, Poly):
        return left.scaled(right)
    raise LoadError("cannot multiply two algebra values; use ^ or (x)", line)


def _eval_pairing(op: str, left, right, line: int):
    if not isinstance(left, Element) or not isinstance(right, Element):
        raise LoadError(f"both sides of {op} must be algebra elements", line)
    try:
        return wedge(left, right) if op == "^" else otimes(left, right)
    except ValueError as exc:
        raise LoadError(str(exc), line) from None


def eval_expr(expr: dsl.Expr, lookup, line: int):
    """Evaluate to a Poly, Element, or Tensor; ``lookup`` resolves names."""
    if isinstance(expr, dsl.Num):
        return Poly.const(expr.value)
    if isinstance(expr, dsl.Name):
        return lookup(expr.ident)
    if isinstance(expr, dsl.Neg):
        return _negate(eval_expr(expr.operand, lookup, line))
    if isinstance(expr, dsl.BinOp):
        left = eval_expr(expr.left, lookup, line)
        right = eval_expr(expr.right, lookup, line)
        if expr.op in ("+", "-"):
            return _eval_add(left, right, expr.op, line)
        if expr.op == "*":
            return _eval_mul(left, right, line)
        return _eval_pairing(expr.op, left, right, line)
    raise TypeError(f"cannot evaluate {expr!r}")  # pragma: no cover


# -- loading -----------------------------------------------------------------------


def _scope_lookup(env: Environment, generators: dict[str, Element],
                  line: int, allow_tensors: bool):
    """Name resolution: generators, then parameters, then tensors."""

    def lookup(ident: str):
        if ident in generators:
            return generators[ident]
        if ident in env.params:
            return env.params[ident]
        if allow_tensors:
            if ident in env.tensors:
                return env.tensors[ident]
            try:
                entry = catalog_entry(ident)
            except ValueError:
                entry = None
            if entry is not None and entry.kind == "tensor":
                return catalog_get(ident)
        raise LoadError(f"unknown identifier {ident!r}", line)

    return lookup


def _file_generators(env: Environment, line: int) -> dict[str, Element]:
    """Generators of all file-declared algebras; ambiguous names rejected."""
    owners: dict[str, str] = {}
    out: dict[str, Element] = {}
    for alg_name, A in env.algebras.items():
        for gen_name in A.basis.names:
            if gen_name in owners:
                raise LoadError(
                    f"generator {gen_name!r} is declared by both "
                    f"{owners[gen_name]!r} and {alg_name!r}; "
                    "add an 'on ALGEBRA' clause", line)
            owners[gen_name] = alg_name
            out[gen_name] = A.gen(gen_name)
    return out


def _declare_param(env: Environment, stmt: dsl.ParamDecl):
    for name in stmt.names:
        if name in env.params:
            raise LoadError(f"parameter {name!r} re-declared", stmt.line)
        env.params[name] = param(name)


def _declare_algebra(env: Environment, stmt: dsl.AlgebraDecl):
    if stmt.name in env.algebras:
        raise LoadError(f"algebra {stmt.name!r} re-declared", stmt.line)
    names = [name for name, _ in stmt.basis]
    if len(set(names)) != len(names):
        raise LoadError("duplicate generator in basis", stmt.line)
    basis = GradedBasis(names, [1 if p == "odd" else 0 for _, p in stmt.basis])
    generators = {name: Element.basis_vector(basis, name) for name in names}
    table: dict[tuple[str, str], dict[str, Poly]] = {}
    for br in stmt.brackets:
        for side in (br.left, br.right):
            if side not in generators:
                raise LoadError(f"unknown identifier {side!r}", br.line)
        if (br.left, br.right) in table:
            raise LoadError(
                f"bracket [{br.left},{br.right}] re-declared", br.line)
        lookup = _scope_lookup(env, generators, br.line, allow_tensors=False)
        value = eval_expr(br.rhs, lookup, br.line)
        if _is_zero_scalar(value):
            continue
        if not isinstance(value, Element):
            raise LoadError("a bracket value must be an algebra element",
                            br.line)
        table[(br.left, br.right)] = dict(value.coeffs)
    try:
        env.algebras[stmt.name] = LieSuperAlgebra(stmt.name, basis, table)
    except ValueError as exc:
        raise LoadError(str(exc), stmt.line) from None


def _declare_tensor(env: Environment, stmt: dsl.TensorDecl):
    if stmt.name in env.tensors:
        raise LoadError(f"tensor {stmt.name!r} re-declared", stmt.line)
    if stmt.algebra is not None:
        A = env.resolve_algebra(stmt.algebra, stmt.line)
        generators = {name: A.gen(name) for name in A.basis.names}
        carrier = stmt.algebra
    else:
        generators = _file_generators(env, stmt.line)
        carrier = None
    lookup = _scope_lookup(env, generators, stmt.line, allow_tensors=True)
    value = eval_expr(stmt.expr, lookup, stmt.line)
    if not isinstance(value, Tensor) or value.rank != 2:
        raise LoadError("a tensor definition must produce a rank-2 tensor",
                        stmt.line)
    if carrier is None:
        for alg_name, A in env.algebras.items():
            if A.basis == value.basis:
                carrier = alg_name
                break
    env.tensors[stmt.name] = value
    env.tensor_carrier[stmt.name] = carrier


def _declare_cochain(env: Environment, stmt: dsl.CochainDecl):
    if stmt.name in env.cochains:
        raise LoadError(f"cochain {stmt.name!r} re-declared", stmt.line)
    A = env.resolve_algebra(stmt.algebra, stmt.line)
    generators = {name: A.gen(name) for name in A.basis.names}
    lookup = _scope_lookup(env, generators, stmt.line, allow_tensors=False)
    values: dict[str, Element] = {}
    for source, expr in stmt.entries:
        if source not in generators:
            raise LoadError(f"unknown identifier {source!r}", stmt.line)
        if source in values:
            raise LoadError(f"cochain entry {source!r} re-declared", stmt.line)
        value = eval_expr(expr, lookup, stmt.line)
        if _is_zero_scalar(value):
            continue
        if not isinstance(value, Element):
            raise LoadError("a cochain value must be an algebra element",
                            stmt.line)
        values[source] = value
    try:
        env.cochains[stmt.name] = Cochain1(
            A.basis, values, parity=1 if stmt.parity == "odd" else 0)
    except ValueError as exc:
        raise LoadError(str(exc), stmt.line) from None


def _validate_check(env: Environment, stmt: dsl.CheckDecl):
    """Resolve every name a check uses, failing at load time."""
    kind = stmt.kind
    if kind == "jacobi":
        env.resolve_algebra(stmt.subject, stmt.line)
    elif kind in ("cybe", "mcybe"):
        tensor, hint = env.resolve_tensor(stmt.subject, stmt.line)
        env.carrier_for(tensor, hint, stmt.on, stmt.line)
    elif kind in ("cocycle", "coboundary"):
        phi = env.resolve_cochain2(stmt.subject, stmt.line)
        A = env.resolve_algebra(stmt.over, stmt.line)
        if phi.basis != A.basis:
            raise LoadError(
                f"2-cochain {stmt.subject!r} is not over the basis of "
                f"{stmt.over!r}", stmt.line)
        if stmt.compare is not None:
            psi = env.resolve_cochain1(stmt.compare, stmt.line)
            if psi.basis != A.basis:
                raise LoadError(
                    f"1-cochain {stmt.compare!r} is not over the basis of "
                    f"{stmt.over!r}", stmt.line)
    elif kind == "compatible":
        first = env.resolve_algebra(stmt.subject, stmt.line)
        second = env.resolve_algebra(stmt.pair, stmt.line)
        if first.basis != second.basis:
            raise LoadError("compatibility needs a shared basis", stmt.line)
    elif kind == "decompose":
        whole, hint = env.resolve_tensor(stmt.subject, stmt.line)
        env.carrier_for(whole, hint, stmt.on, stmt.line)
        for part in stmt.parts:
            tensor, _ = env.resolve_tensor(part, stmt.line)
            if tensor.basis != whole.basis:
                raise LoadError(
                    f"summand {part!r} lives over a different basis",
                    stmt.line)
    elif kind == "twist":
        if stmt.twist_kind == "extended" and stmt.twist_n < 3:
            raise LoadError("the extended twist needs N >= 3", stmt.line)
    else:  # pragma: no cover - parser rejects unknown kinds
        raise LoadError(f"unknown check kind {kind!r}", stmt.line)


def load(file: dsl.WorkbenchFile) -> tuple[Environment, list[dsl.CheckDecl]]:
    """Evaluate declarations and resolve check names; LoadError on failure."""
    env = Environment()
    checks: list[dsl.CheckDecl] = []
    for stmt in file.statements:
        if isinstance(stmt, dsl.ParamDecl):
            _declare_param(env, stmt)
        elif isinstance(stmt, dsl.AlgebraDecl):
            _declare_algebra(env, stmt)
        elif isinstance(stmt, dsl.TensorDecl):
            _declare_tensor(env, stmt)
        elif isinstance(stmt, dsl.CochainDecl):
            _declare_cochain(env, stmt)
        elif isinstance(stmt, dsl.CheckDecl):
            _validate_check(env, stmt)
            checks.append(stmt)
        else:  # pragma: no cover
            raise LoadError(f"cannot load {stmt!r}")
    return env, checks


# -- check execution ------------------------------------------------------------------


def _check_label(stmt: dsl.CheckDecl) -> str:
    text = dsl._render_statement(stmt)[0]
    return text[len("check "):-1]


def _tensor_witness(t: Tensor, what: str) -> list[str]:
    items = sorted(t.coeffs.items())
    key, coeff = items[0]
    return [f"{what} has {len(items)} nonzero coordinate(s)",
            f"first at {key}: {scalar_str(coeff)}"]


def _run_jacobi(env: Environment, stmt: dsl.CheckDecl):
    A = env.resolve_algebra(stmt.subject, stmt.line)
    report = A.verify_jacobi()
    if report.ok:
        return "pass", [f"graded Jacobi holds on all "
                        f"{report.triples_checked} ordered triples"]
    x, y, z = report.witness
    return "fail", [f"witness triple ({x}, {y}, {z})",
                    f"residual {report.residual}"]


def _run_cybe(env: Environment, stmt: dsl.CheckDecl):
    tensor, hint = env.resolve_tensor(stmt.subject, stmt.line)
    A = env.carrier_for(tensor, hint, stmt.on, stmt.line)
    bracket = schouten(A, tensor)
    if not bracket:
        return "pass", [f"Schouten bracket vanishes over {A.name}"]
    return "fail", _tensor_witness(bracket, "Schouten bracket")


def _run_mcybe(env: Environment, stmt: dsl.CheckDecl):
    tensor, hint = env.resolve_tensor(stmt.subject, stmt.line)
    A = env.carrier_for(tensor, hint, stmt.on, stmt.line)
    sym_ok = check_invariant(A, sym_part(tensor))
    schouten_ok = check_invariant(A, schouten(A, tensor))
    details = [f"symmetric part ad-invariant over {A.name}: {sym_ok}",
               f"Schouten bracket ad-invariant: {schouten_ok}"]
    return ("pass" if sym_ok and schouten_ok else "fail"), details


def _run_cocycle(env: Environment, stmt: dsl.CheckDecl):
    phi = env.resolve_cochain2(stmt.subject, stmt.line)
    A = env.resolve_algebra(stmt.over, stmt.line)
    witness = cocycle2_witness(A, phi)
    if witness is None:
        return "pass", [f"closed under the differential of {A.name}"]
    (x, y, z), residual = witness
    rendered = "; ".join(f"{scalar_str(c)}*{n}" for n, c in sorted(residual.items()))
    return "fail", [f"witness triple ({x}, {y}, {z})", f"residual {rendered}"]


def _run_compatible(env: Environment, stmt: dsl.CheckDecl):
    first = env.resolve_algebra(stmt.subject, stmt.line)
    second = env.resolve_algebra(stmt.pair, stmt.line)
    if compatible_pair(first, second):
        return "pass", ["mixed jacobiator vanishes identically"]
    names = first.basis.names
    for x in names:
        for y in names:
            for z in names:
                residual = mixed_jacobiator(first, second, x, y, z)
                if residual:
                    return "fail", [f"witness triple ({x}, {y}, {z})",
                                    f"mixed jacobiator {residual}"]
    raise AssertionError("unreachable")  # pragma: no cover


def _run_coboundary(env: Environment, stmt: dsl.CheckDecl,
                    options: RunOptions):
    phi = env.resolve_cochain2(stmt.subject, stmt.line)
    A = env.resolve_algebra(stmt.over, stmt.line)
    outcome = solve_coboundary(A, phi, assume_nonzero=options.assume_nonzero)
    details = [f"solver status: {outcome.status}",
               f"rank {outcome.rank}, augmented rank {outcome.rank_augmented}"]
    if outcome.assumptions:
        details.append("nonzero assumptions: "
                       + ", ".join(outcome.assumptions))
    if outcome.status == "solved":
        details.append("solution:")
        details.extend(f"  {line}" for line in outcome.psi.table_lines())
    elif outcome.status == "obstructed":
        details.append(outcome.obstruction)
    elif outcome.status == "not-cocycle":
        details.append(f"input is not closed; witness triple {outcome.witness}")
    if stmt.compare is not None:
        psi = env.resolve_cochain1(stmt.compare, stmt.line)
        comparison = compare_cochain2(d1(A, psi), phi)
        details.append(f"declared table {stmt.compare!r}: d1 image "
                       + ("matches" if comparison.equal
                          else f"differs at {comparison.mismatches}"))
        details.extend(
            f"  {line}"
            for line in comparison.table("d1 of declared", "target").splitlines())
    return ("pass" if outcome.found else "fail"), details


def _run_decompose(env: Environment, stmt: dsl.CheckDecl):
    whole, hint = env.resolve_tensor(stmt.subject, stmt.line)
    env.carrier_for(whole, hint, stmt.on, stmt.line)
    first, _ = env.resolve_tensor(stmt.parts[0], stmt.line)
    second, _ = env.resolve_tensor(stmt.parts[1], stmt.line)
    if decompose_check(whole, first, second):
        return "pass", [f"{stmt.subject} = {stmt.parts[0]} + {stmt.parts[1]} "
                        "identically in all parameters"]
    difference = whole - (first + second)
    return "fail", _tensor_witness(difference, "difference")


def _run_twist(stmt: dsl.CheckDecl, options: RunOptions):
    order = stmt.order if stmt.order is not None else options.order
    if stmt.twist_kind == "jordanian":
        F = build_jordanian_twist(order)
        carrier = make_borel()
        reference = make_rborel()
        reference_name = "h^x"
    else:
        F = build_extended_twist(stmt.twist_n, order)
        carrier = make_sl(stmt.twist_n)
        reference = make_rjordan(stmt.twist_n)
        reference_name = f"the jordanian r-matrix on sl({stmt.twist_n})"
    details = [f"truncation order {order}"]
    residual = twist_cocycle_check(F)
    details.append("2-cocycle residual: "
                   + ("0" if not residual else str(residual.leading_term())))
    counit_ok = twist_counit_ok(F)
    details.append(f"counit normalisation: {counit_ok}")
    R = universal_R(F)
    qybe_residual = qybe_check(R)
    details.append("quantum Yang-Baxter residual: "
                   + ("0" if not qybe_residual
                      else str(qybe_residual.leading_term())))
    limit = classical_limit(R)
    details.append(f"classical limit: {limit}")
    constant = proportionality_constant(limit, reference)
    if constant is None:
        details.append(f"not proportional to {reference_name}")
    else:
        details.append(f"= ({scalar_str(constant)}) * ({reference_name})")
        details.append("classical Yang-Baxter for the limit: "
                       f"{check_cybe(carrier, limit)}")
    ok = (not residual) and counit_ok and (not qybe_residual)
    return ("pass" if ok else "fail"), details


def run_checks(env: Environment, checks: list[dsl.CheckDecl],
               options: RunOptions | None = None) -> list[CheckResult]:
    options = options or RunOptions()
    results: list[CheckResult] = []
    for stmt in checks:
        started = time.perf_counter()
        try:
            if stmt.kind == "jacobi":
                status, details = _run_jacobi(env, stmt)
            elif stmt.kind == "cybe":
                status, details = _run_cybe(env, stmt)
            elif stmt.kind == "mcybe":
                status, details = _run_mcybe(env, stmt)
            elif stmt.kind == "cocycle":
                status, details = _run_cocycle(env, stmt)
            elif stmt.kind == "compatible":
                status, details = _run_compatible(env, stmt)
            elif stmt.kind == "coboundary":
                status, details = _run_coboundary(env, stmt, options)
            elif stmt.kind == "decompose":
                status, details = _run_decompose(env, stmt)
            elif stmt.kind == "twist":
                status, details = _run_twist(stmt, options)
            else:  # pragma: no cover
                raise LoadError(f"unknown check kind {stmt.kind!r}", stmt.line)
        except UnsupportedInputError as exc:
            status, details = "unsupported", [str(exc)]
        elapsed = time.perf_counter() - started
        results.append(CheckResult(_check_label(stmt), status,
                                   tuple(details), elapsed))
    return results


def run_source(source: str, options: RunOptions | None = None) -> list[CheckResult]:
    """Parse, load, and execute a DSL document."""
    env, checks = load(dsl.parse(source))
    return run_checks(env, checks, options)


# -- reports -----------------------------------------------------------------------


def exit_code(results: list[CheckResult]) -> int:
    return 0 if all(r.status == "pass" for r in results) else 1


def render_text(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"[{r.status}] {r.label}  ({r.elapsed:.3f}s)")
        lines.extend(f"    {detail}" for detail in r.details)
    passed = sum(r.status == "pass" for r in results)
    failed = sum(r.status == "fail" for r in results)
    unsupported = sum(r.status == "unsupported" for r in results)
    lines.append(f"{passed} passed, {failed} failed, "
                 f"{unsupported} unsupported")
    return "\n".join(lines) + "\n"


def render_structured(results: list[CheckResult]) -> str:
    """A bit-stable JSON report (wall times are deliberately excluded)."""
    tree = {
        "checks": [
            {"label": r.label, "status": r.status, "details": list(r.details)}
            for r in results
        ],
        "summary": {
            "pass": sum(r.status == "pass" for r in results),
            "fail": sum(r.status == "fail" for r in results),
            "unsupported": sum(r.status == "unsupported" for r in results),
        },
    }
    return json.dumps(tree, indent=2, sort_keys=True) + "\n"


def catalog_list() -> str:
    """One line per catalog entry: name, kind, description."""
    width = max(len(name) for name in catalog_names())
    lines = []
    for entry in catalog_entries():
        lines.append(f"{entry.name:<{width}}  {entry.kind:<8}"
                     f"  {entry.provenance}")
    return "\n".join(lines) + "\n"


# -- catalog entries as definition files ------------------------------------------


def _signed_factors(poly: Poly) -> tuple[str, str]:
    """A single-monomial polynomial as (sign, product-of-factors) text."""
    terms = list(poly.items())
    if len(terms) != 1:
        raise ValueError(f"coefficient {poly} is not a single monomial")
    mono, coeff = terms[0]
    factors = []
    if abs(coeff) != 1:
        factors.append(str(abs(coeff)))
    for name, exponent in mono:
        factors.extend([name] * exponent)
    return ("-" if coeff < 0 else "+"), "*".join(factors)


def _combination(parts: list[tuple[str, str]]) -> str:
    """Join signed terms into an expression, folding signs."""
    first_sign, first_text = parts[0]
    out = [first_text if first_sign == "+" else f"- {first_text}"]
    for sign, text in parts[1:]:
        out.append(f"{sign} {text}")
    return " ".join(out)


def _element_expr(coeffs: Mapping) -> str:
    parts = []
    for name, poly in sorted(coeffs.items()):
        sign, factors = _signed_factors(poly)
        parts.append((sign, f"{factors}*{name}" if factors else name))
    return _combination(parts)


def _tensor_expr(tensor: Tensor) -> str:
    parts = []
    for (a, b), poly in tensor.items():
        sign, factors = _signed_factors(poly)
        pair = f"{a} (x) {b}"
        parts.append((sign, f"{factors} * {pair}" if factors else pair))
    return _combination(parts)


def _algebra_source(name: str, A: LieSuperAlgebra) -> list[str]:
    basis = A.basis
    parities = " ".join(
        f"{n}:{'odd' if basis.parity(n) else 'even'}" for n in basis.names)
    lines = [f"algebra {name} {{", f"  basis {parities};"]
    for (i, j), entry in sorted(A.table.items()):
        left, right = basis.names[i], basis.names[j]
        lines.append(f"  bracket [{left},{right}] = {_element_expr(entry)};")
    lines.append("}")
    return lines


def entry_source(name: str) -> str:
    """A canonical definition file reconstructing one catalog entry.

    The text declares the entry's parameters and the entry itself; parsing
    and loading it rebuilds an object equal to the catalog's (same basis
    and coefficients).  Raises ValueError for entries whose coefficients
    are not expressible in the definition grammar.
    """
    entry = catalog_entry(name)
    value = catalog_get(name)
    lines: list[str] = []

    if entry.kind == "algebra":
        parameters = sorted({p for coeffs in value.table.values()
                             for poly in coeffs.values()
                             for p in poly.parameters()})
        if parameters:
            lines.append(f"param {' '.join(parameters)};")
        lines.extend(_algebra_source(name, value))
    elif entry.kind == "tensor":
        parameters = sorted({p for poly in value.coeffs.values()
                             for p in poly.parameters()})
        if parameters:
            lines.append(f"param {' '.join(parameters)};")
        lines.append(f"tensor {name} = {_tensor_expr(value)}"
                     + (f" on {entry.algebra};" if entry.algebra else ";"))
    elif entry.kind == "cochain":
        parity = "odd" if value.parity else "even"
        lines.append(f"cochain {name}:{parity} over {entry.algebra} {{")
        for source in value.basis.names:
            image = value.apply_name(source)
            if image:
                lines.append(f"  {source} -> {_element_expr(image)};")
        lines.append("}")
    else:  # pragma: no cover
        raise ValueError(f"unknown entry kind {entry.kind!r}")

    text = "\n".join(lines) + "\n"
    return dsl.render(dsl.parse(text))  # canonical spelling
