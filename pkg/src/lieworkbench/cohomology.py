"""Chevalley-Eilenberg cohomology in low degree, with a coboundary solver.

Cochains take values in the adjoint module.  Degree-1 cochains are linear
maps g -> g; degree-2 cochains are graded-antisymmetric bilinear maps
g x g -> g (the same symmetry type as a bracket, so any candidate bracket
can be viewed as a 2-cochain).  The differentials carry Koszul signs for
both the argument parities and the parity of the cochain itself; in the
purely even case they reduce to the classical formulas.

Cochain values are sparse vectors over the basis whose scalars may be
polynomials or rational functions in the parameters: the coboundary solver
works over the parameter function field, and its rank decisions record
which polynomials were assumed nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .bialgebra import Cobracket, ad_action, cobracket_from_r
from .liealg import Element, GradedBasis, LieSuperAlgebra, Tensor
from .linsolve import (
    RatFunc,
    matrix_rank,
    rank_at_point,
    solve_linear,
    verify_rank_generically,
)
from .scalars import Poly, as_poly, param, poly_divmod

__all__ = [
    "Cochain1",
    "Cochain2",
    "d1",
    "d2_residual",
    "is_cocycle2",
    "cocycle2_witness",
    "mixed_jacobiator",
    "compatible_pair",
    "solve_coboundary",
    "CoboundaryOutcome",
    "coboundary_in_wedge",
    "h2_dim",
    "CohomologyReport",
    "Cochain2Comparison",
    "compare_cochain2",
]

# A sparse vector over basis labels; scalars are Poly or RatFunc.
Vector = dict


def _vec(entries: Mapping[str, object] | None = None) -> Vector:
    out: Vector = {}
    for name, value in (entries or {}).items():
        if isinstance(value, RatFunc):
            if value:
                out[name] = value
        else:
            poly = as_poly(value)
            if poly:
                out[name] = poly
    return out


def _vadd(a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for name, value in b.items():
        acc = out.get(name, Poly.zero()) + value
        if acc:
            out[name] = acc
        else:
            out.pop(name, None)
    return out


def _vscale(vec: Vector, scalar) -> Vector:
    if not scalar:
        return {}
    return {n: v * scalar for n, v in vec.items()}


def _vneg(vec: Vector) -> Vector:
    return {n: -v for n, v in vec.items()}


def _veq(a: Vector, b: Vector) -> bool:
    for name in set(a) | set(b):
        x = a.get(name, Poly.zero())
        y = b.get(name, Poly.zero())
        if not (x == y):
            return False
    return True


def _vec_from_element(x: Element) -> Vector:
    return dict(x.coeffs)


def _vec_str(vec: Vector, basis: GradedBasis) -> str:
    if not vec:
        return "0"
    parts = []
    for name in basis.names:
        if name not in vec:
            continue
        text = str(vec[name])
        if text == "1":
            parts.append(name)
        elif text == "-1":
            parts.append(f"-{name}")
        elif " " in text or "/" in text:
            parts.append(f"({text})*{name}")
        else:
            parts.append(f"{text}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def _bracket_vec(A: LieSuperAlgebra, name: str, vec: Vector) -> Vector:
    """[e_name, vec] extended linearly over possibly-rational scalars."""
    out: Vector = {}
    for target, scalar in vec.items():
        image = A.bracket_basis(name, target)
        for t, c in image.coeffs.items():
            acc = out.get(t, Poly.zero()) + c * scalar
            if acc:
                out[t] = acc
            else:
                out.pop(t, None)
    return out


def _vector_parity(basis: GradedBasis, vec: Vector) -> int | None:
    parities = {basis.parity(n) for n in vec}
    if len(parities) == 1:
        return parities.pop()
    return None if parities else 0


class Cochain1:
    """A parity-homogeneous linear map g -> g given on basis elements."""

    __slots__ = ("basis", "parity", "values")

    def __init__(self, basis: GradedBasis,
                 values: Mapping[str, Mapping | Element] | None = None,
                 parity: int = 0):
        self.basis = basis
        self.parity = int(parity) % 2
        clean: dict[str, Vector] = {}
        for name, value in (values or {}).items():
            basis.index(name)
            vec = _vec_from_element(value) if isinstance(value, Element) else _vec(value)
            if not vec:
                continue
            vp = _vector_parity(basis, vec)
            if vp is None or vp != (basis.parity(name) + self.parity) % 2:
                raise ValueError(
                    f"cochain value at {name!r} violates the declared parity")
            clean[name] = vec
        self.values = clean

    def apply_name(self, name: str) -> Vector:
        self.basis.index(name)
        return dict(self.values.get(name, {}))

    def apply_vec(self, vec: Vector) -> Vector:
        out: Vector = {}
        for name, scalar in vec.items():
            out = _vadd(out, _vscale(self.apply_name(name), scalar))
        return out

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain1):
            return NotImplemented
        if self.basis != other.basis or self.parity != other.parity:
            return False
        for name in set(self.values) | set(other.values):
            if not _veq(self.values.get(name, {}), other.values.get(name, {})):
                return False
        return True

    def table_lines(self) -> list[str]:
        return [f"{name} -> {_vec_str(self.values.get(name, {}), self.basis)}"
                for name in self.basis.names]

    def __repr__(self):
        return f"Cochain1({'; '.join(self.table_lines())})"


class Cochain2:
    """A parity-homogeneous graded-antisymmetric bilinear map g x g -> g.

    Canonical storage mirrors a bracket table: one vector per index pair
    (i, j) with i < j, plus diagonal (i, i) for odd generators.  Any bracket
    candidate is therefore representable, and a Lie algebra's own bracket
    converts via :meth:`from_algebra`.
    """

    __slots__ = ("basis", "parity", "values")

    def __init__(self, basis: GradedBasis,
                 values: Mapping[tuple, Mapping | Element] | None = None,
                 parity: int = 0):
        self.basis = basis
        self.parity = int(parity) % 2
        canonical: dict[tuple[int, int], Vector] = {}
        for (a, b), value in (values or {}).items():
            i, j = basis.index(a), basis.index(b)
            vec = _vec_from_element(value) if isinstance(value, Element) else _vec(value)
            if i < j:
                key, entry = (i, j), vec
            elif i > j:
                sign = (-1) ** (basis.parities[i] * basis.parities[j])
                key, entry = (j, i), _vscale(vec, -sign)
            else:
                if basis.parities[i] == 0:
                    if vec:
                        raise ValueError(
                            f"value at even diagonal pair ({a}, {a}) must vanish")
                    continue
                key, entry = (i, i), vec
            if key in canonical:
                if not _veq(canonical[key], entry):
                    raise ValueError(f"conflicting values for pair ({a}, {b})")
                continue
            if entry:
                canonical[key] = entry
        for (i, j), entry in canonical.items():
            expected = (basis.parities[i] + basis.parities[j] + self.parity) % 2
            vp = _vector_parity(basis, entry)
            if vp is None or vp != expected:
                raise ValueError(
                    f"value at pair ({basis.names[i]}, {basis.names[j]}) "
                    f"violates the declared parity")
        self.values = canonical

    @classmethod
    def from_algebra(cls, A: LieSuperAlgebra) -> "Cochain2":
        values = {(A.basis.names[i], A.basis.names[j]): dict(entry)
                  for (i, j), entry in A.table.items()}
        return cls(A.basis, values, parity=0)

    def apply_names(self, a: str, b: str) -> Vector:
        i, j = self.basis.index(a), self.basis.index(b)
        if i < j or i == j:
            return dict(self.values.get((i, j), {}))
        sign = (-1) ** (self.basis.parities[i] * self.basis.parities[j])
        return _vscale(self.values.get((j, i), {}), -sign)

    def apply_vec_name(self, vec: Vector, b: str) -> Vector:
        """phi(vec, e_b) extended linearly in the first argument."""
        out: Vector = {}
        for name, scalar in vec.items():
            out = _vadd(out, _vscale(self.apply_names(name, b), scalar))
        return out

    def __bool__(self):
        return any(self.values.values())

    def __eq__(self, other):
        if not isinstance(other, Cochain2):
            return NotImplemented
        if self.basis != other.basis:
            return False
        for key in set(self.values) | set(other.values):
            if not _veq(self.values.get(key, {}), other.values.get(key, {})):
                return False
        return True

    def canonical_pairs(self) -> list[tuple[int, int]]:
        n = len(self.basis)
        return [(i, j) for i in range(n) for j in range(i, n)
                if i != j or self.basis.parities[i]]

    def table_lines(self) -> list[str]:
        lines = []
        names = self.basis.names
        for (i, j) in self.canonical_pairs():
            vec = self.values.get((i, j), {})
            lines.append(f"({names[i]}, {names[j]}) -> {_vec_str(vec, self.basis)}")
        return lines

    def __repr__(self):
        body = "; ".join(line for line in self.table_lines() if not line.endswith(" 0"))
        return f"Cochain2({body or '0'})"


def _canonical_pairs(basis: GradedBasis) -> list[tuple[int, int]]:
    n = len(basis)
    return [(i, j) for i in range(n) for j in range(i, n)
            if i != j or basis.parities[i]]


def _canonical_triples(basis: GradedBasis) -> list[tuple[int, int, int]]:
    n = len(basis)
    out = []
    for i in range(n):
        for j in range(i, n):
            if i == j and not basis.parities[i]:
                continue
            for k in range(j, n):
                if j == k and not basis.parities[j]:
                    continue
                out.append((i, j, k))
    return out


def d1(A: LieSuperAlgebra, psi: Cochain1) -> Cochain2:
    """The degree-1 CE differential with adjoint coefficients.

    (d1 psi)(x, y) = (-1)^{|x||psi|}[x, psi(y)]
                   - (-1)^{|y||psi| + |x||y|}[y, psi(x)] - psi([x, y]).
    """
    basis = A.basis
    if basis != psi.basis:
        raise ValueError("cochain is not over the algebra's basis")
    p = psi.parity
    values: dict[tuple, Vector] = {}
    for (i, j) in _canonical_pairs(basis):
        a, b = basis.names[i], basis.names[j]
        pa, pb = basis.parities[i], basis.parities[j]
        term = _vscale(_bracket_vec(A, a, psi.apply_name(b)), (-1) ** (pa * p))
        term = _vadd(term, _vscale(_bracket_vec(A, b, psi.apply_name(a)),
                                   -((-1) ** (pb * p + pa * pb))))
        term = _vadd(term, _vneg(psi.apply_vec(
            _vec_from_element(A.bracket_basis(a, b)))))
        if term:
            values[(a, b)] = term
    return Cochain2(basis, values, parity=p)


def d2_residual(A: LieSuperAlgebra, phi: Cochain2,
                x: str, y: str, z: str) -> Vector:
    """(d2 phi)(x, y, z) for basis labels, with graded signs.

    (d2 phi)(x,y,z) = (-1)^{|x|p}[x, phi(y,z)]
                    - (-1)^{|y|(p+|x|)}[y, phi(x,z)]
                    + (-1)^{|z|(p+|x|+|y|)}[z, phi(x,y)]
                    - phi([x,y], z) + (-1)^{|y||z|} phi([x,z], y)
                    - (-1)^{|x|(|y|+|z|)} phi([y,z], x).
    """
    basis = A.basis
    p = phi.parity
    px, py, pz = basis.parity(x), basis.parity(y), basis.parity(z)
    out = _vscale(_bracket_vec(A, x, phi.apply_names(y, z)), (-1) ** (px * p))
    out = _vadd(out, _vscale(_bracket_vec(A, y, phi.apply_names(x, z)),
                             -((-1) ** (py * (p + px)))))
    out = _vadd(out, _vscale(_bracket_vec(A, z, phi.apply_names(x, y)),
                             (-1) ** (pz * (p + px + py))))
    out = _vadd(out, _vneg(phi.apply_vec_name(
        _vec_from_element(A.bracket_basis(x, y)), z)))
    out = _vadd(out, _vscale(phi.apply_vec_name(
        _vec_from_element(A.bracket_basis(x, z)), y), (-1) ** (py * pz)))
    out = _vadd(out, _vscale(phi.apply_vec_name(
        _vec_from_element(A.bracket_basis(y, z)), x),
        -((-1) ** (px * (py + pz)))))
    return out


def cocycle2_witness(A: LieSuperAlgebra, phi: Cochain2):
    """First basis triple where d2(phi) fails to vanish, or None."""
    names = A.basis.names
    for x in names:
        for y in names:
            for z in names:
                residual = d2_residual(A, phi, x, y, z)
                if residual:
                    return (x, y, z), residual
    return None


def is_cocycle2(A: LieSuperAlgebra, phi: Cochain2) -> bool:
    """True iff d2(phi) vanishes on every basis triple."""
    return cocycle2_witness(A, phi) is None


def mixed_jacobiator(mu1: LieSuperAlgebra, mu2: LieSuperAlgebra,
                     x: str, y: str, z: str) -> Element:
    """The cross term of the jacobiator of the pencil mu1 + t*mu2.

    Vanishing for all triples is exactly the condition for mu1 + t*mu2 to
    satisfy Jacobi identically in t (given that mu1 and mu2 each do).
    """
    if mu1.basis != mu2.basis:
        raise ValueError("mixed jacobiator requires a shared basis")
    basis = mu1.basis
    sign = (-1) ** (basis.parity(x) * basis.parity(y))
    result = Element(basis)
    for outer, inner in ((mu1, mu2), (mu2, mu1)):
        gx, gy, gz = (Element.basis_vector(basis, n) for n in (x, y, z))
        result = result + outer.bracket(gx, inner.bracket(gy, gz))
        result = result - outer.bracket(inner.bracket(gx, gy), gz)
        result = result - outer.bracket(gy, inner.bracket(gx, gz)).scaled(sign)
    return result


def compatible_pair(mu1: LieSuperAlgebra, mu2: LieSuperAlgebra) -> bool:
    """True iff the mixed jacobiator of the two brackets vanishes identically."""
    names = mu1.basis.names
    return all(not mixed_jacobiator(mu1, mu2, x, y, z)
               for x in names for y in names for z in names)


@dataclass(frozen=True)
class CoboundaryOutcome:
    """Result of solving d1(psi) = phi.

    statuses: "solved" (psi returned), "inconsistent" (no solution over the
    function field; generic rank certificate), "obstructed" (solutions exist
    over the function field but every one inverts a polynomial that was not
    assumed nonzero, and a parameter point witnesses the rank gap), and
    "not-cocycle" (phi fails d2; witness holds the failing triple).  For
    "obstructed" the rank pair is the specialized one at the witness point.
    """

    status: str  # "solved" | "inconsistent" | "obstructed" | "not-cocycle"
    psi: Cochain1 | None
    rank: int
    rank_augmented: int
    assumptions: tuple[str, ...]
    witness: tuple | None = None  # failing triple when status = "not-cocycle"
    obstruction: str | None = None  # description when status = "obstructed"

    @property
    def found(self) -> bool:
        return self.status == "solved"


def _unknown_slots(basis: GradedBasis, parity: int) -> list[tuple[int, int]]:
    """(source index, target index) slots a parity-p 1-cochain may use."""
    n = len(basis)
    return [(j, k) for j in range(n) for k in range(n)
            if (basis.parities[j] + parity) % 2 == basis.parities[k]]


def _as_assumed_polys(assume_nonzero) -> list[Poly]:
    polys = []
    for entry in assume_nonzero:
        poly = param(entry) if isinstance(entry, str) else as_poly(entry)
        if not poly:
            raise ValueError("cannot assume the zero polynomial nonzero")
        if not poly.is_constant():
            polys.append(poly)
    return polys


def _divides_out(den: Poly, assumed: list[Poly]) -> bool:
    """True iff den is a nonzero constant times a product of assumed factors."""
    current = den
    while not current.is_constant():
        for factor in assumed:
            quotient, remainder = poly_divmod(current, factor)
            if not remainder:
                current = quotient
                break
        else:
            return False
    return True


def _solution_denominators(solution) -> list[Poly]:
    dens: dict[str, Poly] = {}
    for value in solution:
        if isinstance(value, RatFunc) and not value.den.is_constant():
            dens.setdefault(str(value.den), value.den)
    return [dens[key] for key in sorted(dens)]


def _obstruction_point(matrix, rhs, dens, assumed):
    """A rational point where rank(M) < rank(M|b), or None.

    Such a point proves that no solution avoiding the listed denominators
    exists: a solution regular at the point would specialize to a solution
    of the specialized system.  Points are searched on the vanishing locus
    of each denominator, keeping the assumed-nonzero polynomials nonzero.
    """
    params: set[str] = set()
    for row in matrix:
        for e in row:
            params |= e.parameters()
    for e in rhs:
        params |= e.parameters()
    for den in dens:
        params |= den.parameters()
    for poly in assumed:
        params |= poly.parameters()
    names = sorted(params)
    aug = [row + [rhs[i]] for i, row in enumerate(matrix)]
    for den in dens:
        for var in sorted(den.parameters()):
            for filler in (1, 2, 3, 5, 7, 11):
                point = {n: Fraction(filler) for n in names}
                point[var] = Fraction(0)
                if den.substitute(point):
                    continue  # not on this denominator's zero locus
                if any(not a.substitute(point) for a in assumed):
                    continue
                try:
                    rank = rank_at_point(matrix, point)
                    rank_aug = rank_at_point(aug, point)
                except (ValueError, ZeroDivisionError):
                    continue
                if rank < rank_aug:
                    return point, rank, rank_aug
    return None


def solve_coboundary(A: LieSuperAlgebra, phi: Cochain2,
                     assume_nonzero=()) -> CoboundaryOutcome:
    """Find psi with d1(psi) = phi, or certify that none exists.

    The linear solve runs over the field of rational functions in the
    declared parameters, with one restriction: a solution may only divide
    by polynomials the caller has explicitly assumed nonzero
    (``assume_nonzero``: parameter names or polynomials).  When every
    solution requires inverting an unsanctioned polynomial, the solver
    looks for a parameter point on that polynomial's zero locus where the
    system has a rank gap; such a point certifies that no solution regular
    there exists, and the outcome is "obstructed" with the specialized
    rank pair.  If no certificate is found (for instance, a polynomial
    solution exists along another choice of free coordinates) the
    rational-function solution is returned with its denominators recorded
    in the assumptions.

    The canonical solution sets free coordinates to zero; unknowns are
    ordered by (source basis index, target basis index).  A system that is
    inconsistent over the function field itself yields the generic rank
    certificate (rank, rank_augmented).  Every symbolic rank decision is
    re-verified at random rational parameter points.
    """
    basis = A.basis
    if basis != phi.basis:
        raise ValueError("cochain is not over the algebra's basis")
    witness = cocycle2_witness(A, phi)
    if witness is not None:
        return CoboundaryOutcome("not-cocycle", None, 0, 0, tuple(),
                                 witness[0])
    parity = phi.parity
    slots = _unknown_slots(basis, parity)
    pairs = _canonical_pairs(basis)
    # Rows: canonical pair x target; columns: d1 of unit cochains.
    columns = []
    coords = [(i, j, t) for (i, j) in pairs for t in range(len(basis))]
    for (j, k) in slots:
        unit = Cochain1(basis, {basis.names[j]: {basis.names[k]: 1}},
                        parity=parity)
        image = d1(A, unit)
        columns.append([image.values.get((i, jj), {}).get(basis.names[t],
                                                          Poly.zero())
                        for (i, jj, t) in coords])
    matrix = [[columns[c][r] for c in range(len(columns))]
              for r in range(len(coords))]
    rhs = [phi.values.get((i, j), {}).get(basis.names[t], Poly.zero())
           for (i, j, t) in coords]
    outcome = solve_linear(matrix, rhs)
    assumptions = tuple(str(p) for p in outcome.assumptions)
    if outcome.status == "inconsistent":
        verify_rank_generically(matrix, outcome.rank, outcome.assumptions)
        aug = [row + [rhs[i]] for i, row in enumerate(matrix)]
        verify_rank_generically(aug, outcome.rank_augmented,
                                outcome.assumptions)
        return CoboundaryOutcome("inconsistent", None, outcome.rank,
                                 outcome.rank_augmented, assumptions)
    assumed = _as_assumed_polys(assume_nonzero)
    dens = _solution_denominators(outcome.solution)
    unsanctioned = [d for d in dens if not _divides_out(d, assumed)]
    if unsanctioned:
        certificate = _obstruction_point(matrix, rhs, unsanctioned, assumed)
        if certificate is not None:
            point, rank, rank_aug = certificate
            where = ", ".join(f"{n} = {v}" for n, v in sorted(point.items()))
            description = (
                "every solution inverts "
                + ", ".join(str(d) for d in unsanctioned)
                + f"; at {where} the system has rank {rank} but augmented "
                  f"rank {rank_aug}, so no solution regular there exists")
            return CoboundaryOutcome("obstructed", None, rank, rank_aug,
                                     assumptions, obstruction=description)
    values: dict[str, Vector] = {}
    for (j, k), coeff in zip(slots, outcome.solution):
        if coeff:
            source = basis.names[j]
            values.setdefault(source, {})[basis.names[k]] = coeff
    psi = Cochain1(basis, values, parity=parity)
    if d1(A, psi) != phi:
        raise AssertionError("solver produced a non-solution")  # pragma: no cover
    solved_assumptions = tuple(dict.fromkeys(
        list(assumptions) + [str(d) for d in dens]))
    return CoboundaryOutcome("solved", psi, outcome.rank,
                             outcome.rank_augmented, solved_assumptions)


def coboundary_in_wedge(A: LieSuperAlgebra, r: Tensor) -> Cobracket:
    """The degree-0 coboundary of r with coefficients in the tensor square.

    This is x -> (ad_x (x) 1 + 1 (x) ad_x)(r), the same map produced by
    cobracket_from_r; the agreement is asserted to tie the two readings
    together.
    """
    result = Cobracket(A, {name: ad_action(A, A.gen(name), r)
                           for name in A.basis.names})
    if result != cobracket_from_r(A, r):  # pragma: no cover
        raise AssertionError("coboundary and cobracket readings disagree")
    return result


@dataclass(frozen=True)
class CohomologyReport:
    kernel_dim: int
    image_dim: int
    quotient_dim: int
    parameter_assumptions: tuple[str, ...]

    def __post_init__(self):
        if self.quotient_dim != self.kernel_dim - self.image_dim:
            raise ValueError("inconsistent cohomology dimensions")
        if self.quotient_dim < 0:
            raise ValueError("negative cohomology dimension")


def h2_dim(A: LieSuperAlgebra, max_dim: int = 12) -> CohomologyReport:
    """Dimensions of Z^2, B^2 and H^2 with adjoint coefficients.

    Both cochain parities contribute; dimensions are generic in the declared
    parameters, with the recorded nonvanishing assumptions.  Guarded to
    small algebras (dense linear algebra over the function field).
    """
    basis = A.basis
    if A.dim > max_dim:
        raise ValueError(f"h2_dim guard: dim {A.dim} exceeds {max_dim}")
    pairs = _canonical_pairs(basis)
    triples = _canonical_triples(basis)
    n = len(basis)
    kernel_dim = 0
    image_dim = 0
    assumptions: list[str] = []

    for parity in (0, 1):
        # Coordinates of C^2 at this cochain parity.
        pair_coords = [(i, j, t) for (i, j) in pairs for t in range(n)
                       if (basis.parities[i] + basis.parities[j] + parity) % 2
                       == basis.parities[t]]
        # d1 matrix: columns are unit 1-cochains.
        d1_cols = []
        for (j, k) in _unknown_slots(basis, parity):
            unit = Cochain1(basis, {basis.names[j]: {basis.names[k]: 1}},
                            parity=parity)
            image = d1(A, unit)
            d1_cols.append([image.values.get((i, jj), {}).get(basis.names[t],
                                                              Poly.zero())
                            for (i, jj, t) in pair_coords])
        if d1_cols:
            d1_matrix = [[col[r] for col in d1_cols]
                         for r in range(len(pair_coords))]
            res = verify_and_rank(d1_matrix)
            image_dim += res.rank
            assumptions.extend(str(p) for p in res.assumptions)
        # d2 matrix: columns are unit 2-cochains.
        d2_cols = []
        for (i, j, t) in pair_coords:
            unit = Cochain2(basis, {(basis.names[i], basis.names[j]):
                                    {basis.names[t]: 1}}, parity=parity)
            col = []
            for (x, y, z) in triples:
                residual = d2_residual(A, unit, basis.names[x],
                                       basis.names[y], basis.names[z])
                col.extend(residual.get(basis.names[m], Poly.zero())
                           for m in range(n))
            d2_cols.append(col)
        if d2_cols:
            d2_matrix = [[col[r] for col in d2_cols]
                         for r in range(len(d2_cols[0]))]
            res = verify_and_rank(d2_matrix)
            kernel_dim += len(pair_coords) - res.rank
            assumptions.extend(str(p) for p in res.assumptions)

    unique = tuple(dict.fromkeys(assumptions))
    return CohomologyReport(kernel_dim, image_dim, kernel_dim - image_dim,
                            unique)


def verify_and_rank(matrix):
    """Symbolic rank with the random-point genericity cross-check."""
    res = matrix_rank(matrix)
    verify_rank_generically(matrix, res.rank, res.assumptions)
    return res


@dataclass(frozen=True)
class Cochain2Comparison:
    """Side-by-side comparison of two 2-cochains over a shared basis."""

    equal: bool
    lines: tuple[tuple[str, str, str], ...]  # (pair, left value, right value)
    mismatches: tuple[str, ...]

    def table(self, left_title: str = "left", right_title: str = "right") -> str:
        width = max((len(p) for p, _, _ in self.lines), default=4)
        header = f"{'pair'.ljust(width)} | {left_title} | {right_title}"
        rows = [header, "-" * len(header)]
        for pair, lv, rv in self.lines:
            marker = "" if lv == rv else "   <== differs"
            rows.append(f"{pair.ljust(width)} | {lv} | {rv}{marker}")
        return "\n".join(rows)


def compare_cochain2(left: Cochain2, right: Cochain2) -> Cochain2Comparison:
    if left.basis != right.basis:
        raise ValueError("comparison requires a shared basis")
    basis = left.basis
    lines = []
    mismatches = []
    for (i, j) in _canonical_pairs(basis):
        pair = f"({basis.names[i]}, {basis.names[j]})"
        lv = _vec_str(left.values.get((i, j), {}), basis)
        rv = _vec_str(right.values.get((i, j), {}), basis)
        lines.append((pair, lv, rv))
        if not _veq(left.values.get((i, j), {}), right.values.get((i, j), {})):
            mismatches.append(pair)
    return Cochain2Comparison(not mismatches, tuple(lines), tuple(mismatches))
