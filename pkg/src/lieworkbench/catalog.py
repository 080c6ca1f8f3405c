"""Named constructors for the workbench's standard objects.

Everything here is exact data: special/general linear algebras in the
matrix-unit basis, the two-dimensional solvable algebra span{h, x}, the
orthosymplectic superalgebra osp(1|2) with its two dual-space brackets and
the connecting 1-cochain, standard and jordanian classical r-matrices,
their dual algebras, the four-dimensional quantum-double pieces with their
constant r-matrix, and a literal transcription of the first-order dual
bracket on gl(N) coordinates together with its transcription report.

Entries are registered under stable string names for the CLI and the
definition-file format; ``catalog_get`` memoizes construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bialgebra import LieBialgebra, cobracket_from_r, dual_algebra
from .cohomology import Cochain1, compatible_pair
from .liealg import (
    Element,
    GradedBasis,
    JacobiReport,
    LieSuperAlgebra,
    Tensor,
    otimes,
    pencil,
    wedge,
)
from .scalars import Poly, as_poly, param

__all__ = [
    "cartan_name",
    "pair_name",
    "make_sl",
    "make_gl",
    "make_borel",
    "make_osp12",
    "make_rdj",
    "make_rjordan",
    "make_rfull",
    "make_rborel",
    "make_double_pieces",
    "make_dual_standard",
    "make_dual_jordanian",
    "make_mu_prime",
    "mu_prime_transcription",
    "MuPrimeTranscription",
    "TranscriptionLine",
    "CatalogEntry",
    "catalog_names",
    "catalog_entry",
    "catalog_entries",
    "catalog_get",
]


def cartan_name(k: int) -> str:
    """Name of the k-th Cartan generator (1-based)."""
    return f"H{k}"


def pair_name(prefix: str, i: int, j: int, N: int) -> str:
    """Name of a doubly-indexed generator; indices separated only if N > 9."""
    return f"{prefix}{i}_{j}" if N > 9 else f"{prefix}{i}{j}"


def make_sl(N: int) -> LieSuperAlgebra:
    """sl(N): traceless Cartan combinations H_k = Y_kk - Y_{k+1,k+1} first,
    then off-diagonal matrix units E_ij in lexicographic order."""
    if N < 2:
        raise ValueError("make_sl requires N >= 2")

    def e(i: int, j: int) -> str:
        return pair_name("E", i, j, N)

    names = [cartan_name(k) for k in range(1, N)]
    off = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i != j]
    names.extend(e(i, j) for (i, j) in off)
    basis = GradedBasis(tuple(names))

    def cartan(diag: dict[int, int]) -> dict[str, int]:
        """Coefficients of a traceless diagonal matrix over the H_k."""
        out = {}
        partial = 0
        for k in range(1, N):
            partial += diag.get(k, 0)
            if partial:
                out[cartan_name(k)] = partial
        return out

    table: dict[tuple[str, str], dict[str, object]] = {}
    for k in range(1, N):
        for (i, j) in off:
            coef = (i == k) - (j == k) - (i == k + 1) + (j == k + 1)
            if coef:
                table[(cartan_name(k), e(i, j))] = {e(i, j): coef}
    for a in range(len(off)):
        for b in range(a + 1, len(off)):
            (i, j), (k, l) = off[a], off[b]
            if j == k and i == l:
                table[(e(i, j), e(k, l))] = cartan({i: 1, j: -1})
                continue
            coeffs: dict[str, int] = {}
            if j == k:
                coeffs[e(i, l)] = coeffs.get(e(i, l), 0) + 1
            if l == i:
                coeffs[e(k, j)] = coeffs.get(e(k, j), 0) - 1
            if coeffs:
                table[(e(i, j), e(k, l))] = coeffs
    return LieSuperAlgebra(f"sl{N}", basis, table)


def make_gl(N: int) -> LieSuperAlgebra:
    """gl(N) on the full matrix-unit basis Y_ij (lexicographic order)."""
    if N < 2:
        raise ValueError("make_gl requires N >= 2")

    def y(i: int, j: int) -> str:
        return pair_name("Y", i, j, N)

    units = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    basis = GradedBasis(tuple(y(i, j) for (i, j) in units))
    table: dict[tuple[str, str], dict[str, object]] = {}
    for a in range(len(units)):
        for b in range(a + 1, len(units)):
            (i, j), (k, l) = units[a], units[b]
            coeffs: dict[str, int] = {}
            if j == k:
                coeffs[y(i, l)] = coeffs.get(y(i, l), 0) + 1
            if l == i:
                coeffs[y(k, j)] = coeffs.get(y(k, j), 0) - 1
            coeffs = {n: c for n, c in coeffs.items() if c}
            if coeffs:
                table[(y(i, j), y(k, l))] = coeffs
    return LieSuperAlgebra(f"gl{N}", basis, table)


def make_borel() -> LieSuperAlgebra:
    """The two-dimensional solvable algebra span{h, x | [h, x] = 2x}."""
    basis = GradedBasis(("h", "x"))
    return LieSuperAlgebra("borel", basis, {("h", "x"): {"x": 2}})


def make_rborel() -> Tensor:
    """The skew constant tensor h(x)x - x(x)h on span{h, x}."""
    A = make_borel()
    return wedge(A.gen("h"), A.gen("x"))


def _standard_r(basis: GradedBasis, hk: list[Element],
                e: Callable[[int, int], Element], N: int, h: Poly) -> Tensor:
    """Inverse-Cartan block plus 2h * sum of lower-by-upper matrix units."""
    r = Tensor(basis, 2)
    for k in range(1, N):
        r = r + otimes(hk[k - 1], hk[k - 1]).scaled(h * Fraction(k * (N - k), N))
    for k in range(1, N):
        for l in range(k + 1, N):
            block = otimes(hk[k - 1], hk[l - 1]) + otimes(hk[l - 1], hk[k - 1])
            r = r + block.scaled(h * Fraction(k * (N - l), N))
    for k in range(1, N + 1):
        for l in range(k + 1, N + 1):
            r = r + otimes(e(l, k), e(k, l)).scaled(2 * h)
    return r


def make_rdj(N: int, h=None) -> Tensor:
    """Standard classical r-matrix on sl(N) (parameter h)."""
    if N < 2:
        raise ValueError("make_rdj requires N >= 2")
    hp = param("h") if h is None else as_poly(h)
    A = make_sl(N)
    hk = [A.gen(cartan_name(k)) for k in range(1, N)]

    def e(i: int, j: int) -> Element:
        return A.gen(pair_name("E", i, j, N))

    return _standard_r(A.basis, hk, e, N, hp)


def make_rjordan(N: int, xi=None) -> Tensor:
    """Jordanian classical r-matrix on sl(N) (parameter xi):
    -xi*(H1N ^ E1N + 2 * sum_{k=2..N-1} E1k ^ EkN)."""
    if N < 2:
        raise ValueError("make_rjordan requires N >= 2")
    x = param("xi") if xi is None else as_poly(xi)
    A = make_sl(N)

    def e(i: int, j: int) -> Element:
        return A.gen(pair_name("E", i, j, N))

    h1n = Element(A.basis)
    for k in range(1, N):
        h1n = h1n + A.gen(cartan_name(k))
    r = wedge(h1n, e(1, N)).scaled(-x)
    for k in range(2, N):
        r = r + wedge(e(1, k), e(k, N)).scaled(-2 * x)
    return r


def make_rfull(N: int, h=None, xi=None) -> Tensor:
    """The combined two-parameter r-matrix: make_rdj + make_rjordan."""
    return make_rdj(N, h) + make_rjordan(N, xi)


def make_double_pieces() -> tuple[LieSuperAlgebra, LieSuperAlgebra,
                                  LieSuperAlgebra, LieSuperAlgebra, Tensor]:
    """The quantum-double pieces on basis {H, Hp, Xp, Xm}.

    Returns (g1, g2, g1dual, g2dual, r_double) where the duals live on the
    hatted basis and r_double = theta*(Xp(x)Xm + H(x)Hp) is the constant
    r-matrix of the double.
    """
    theta = param("theta")
    basis = GradedBasis(("H", "Hp", "Xp", "Xm"))
    g1 = LieSuperAlgebra("double.g1", basis, {
        ("H", "Xp"): {"Xp": 1},
        ("H", "Xm"): {"Xm": -1},
        ("Xp", "Xm"): {"Hp": 1},
    })
    g2 = LieSuperAlgebra("double.g2", basis, {
        ("Hp", "Xp"): {"Xp": 1},
        ("Hp", "Xm"): {"Xm": -1},
        ("Xp", "Xm"): {"H": 1},
    })
    dual_basis = basis.renamed("_hat")
    g1dual = LieSuperAlgebra("double.g1dual", dual_basis, {
        ("Hp_hat", "Xm_hat"): {"Xm_hat": -theta},
    })
    g2dual = LieSuperAlgebra("double.g2dual", dual_basis, {
        ("H_hat", "Xp_hat"): {"Xp_hat": -theta},
    })
    A = g1  # the tensor lives over the shared underlying basis
    r_double = (otimes(A.gen("Xp"), A.gen("Xm"))
                + otimes(A.gen("H"), A.gen("Hp"))).scaled(theta)
    return g1, g2, g1dual, g2dual, r_double


def make_osp12() -> tuple[LieSuperAlgebra, LieSuperAlgebra,
                          LieSuperAlgebra, Cochain1]:
    """osp(1|2) and its two dual-space brackets, plus the connecting cochain.

    Primary relations: [h, v+-] = +-v+-, {v+, v-} = -h/4; the even root
    vectors are the derived squares X+- = +-4*v+-*v+- (so {v+-, v+-} =
    +-X+-/2), with the remaining brackets forced by the Jacobi identity.
    Returns (algebra, mu1star, mu2star, psi) where mu1star/mu2star are the
    two bracket tables on the hatted dual basis and psi is the degree-1
    cochain whose coboundary over mu1star is compared against mu2star.
    """
    basis = GradedBasis(("h", "Xp", "Xm", "vp", "vm"), (0, 0, 0, 1, 1))
    A = LieSuperAlgebra("osp12", basis, {
        ("h", "Xp"): {"Xp": 2},
        ("h", "Xm"): {"Xm": -2},
        ("Xp", "Xm"): {"h": 1},
        ("h", "vp"): {"vp": 1},
        ("h", "vm"): {"vm": -1},
        ("Xp", "vm"): {"vp": 1},
        ("Xm", "vp"): {"vm": 1},
        ("vp", "vp"): {"Xp": Fraction(1, 2)},
        ("vm", "vm"): {"Xm": Fraction(-1, 2)},
        ("vp", "vm"): {"h": Fraction(-1, 4)},
    })
    dual = basis.renamed("_hat")
    mu1star = LieSuperAlgebra("mu1star", dual, {
        ("h_hat", "Xp_hat"): {"Xp_hat": -2},
        ("h_hat", "Xm_hat"): {"Xm_hat": -2},
        ("h_hat", "vp_hat"): {"vp_hat": -1},
        ("h_hat", "vm_hat"): {"vm_hat": -1},
        ("vp_hat", "vp_hat"): {"Xp_hat": 4},
        ("vm_hat", "vm_hat"): {"Xm_hat": 4},
    })
    mu2star = LieSuperAlgebra("mu2star", dual, {
        ("Xp_hat", "h_hat"): {"h_hat": 2},
        ("Xp_hat", "Xm_hat"): {"Xm_hat": 2},
        ("Xp_hat", "vp_hat"): {"vp_hat": 1},
        ("Xp_hat", "vm_hat"): {"vm_hat": 1},
        ("vp_hat", "vp_hat"): {"h_hat": 4},
        ("vp_hat", "vm_hat"): {"Xm_hat": 4},
    })
    psi = Cochain1(dual, {
        "h_hat": {"Xp_hat": -1},
        "Xp_hat": {"h_hat": -1},
        "Xm_hat": {"Xm_hat": -1},
        "vp_hat": {"vm_hat": 1},
        "vm_hat": {"vm_hat": 1},
    }, parity=0)
    return A, mu1star, mu2star, psi


def make_dual_standard(N: int, h=None) -> LieSuperAlgebra:
    """Dual bracket of sl(N) induced by the standard r-matrix (hatted basis)."""
    A = make_sl(N)
    B = LieBialgebra(A, cobracket_from_r(A, make_rdj(N, h)))
    out = dual_algebra(B)
    out.name = f"dual.standard.sl{N}"
    return out


def make_dual_jordanian(N: int, xi=None) -> LieSuperAlgebra:
    """Dual bracket of sl(N) induced by the jordanian r-matrix (hatted basis)."""
    A = make_sl(N)
    B = LieBialgebra(A, cobracket_from_r(A, make_rjordan(N, xi)))
    out = dual_algebra(B)
    out.name = f"dual.jordan.sl{N}"
    return out


# --------------------------------------------------------------------------
# Literal transcription of the first-order dual bracket on gl(N) coordinates.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TranscriptionLine:
    """One printed table line: its formula, index conditions, and tallies."""

    label: str
    formula: str
    condition: str
    instances: int
    nonzero: int
    unsatisfiable: bool

    def render(self) -> str:
        if self.unsatisfiable:
            status = "condition unsatisfiable as printed; line skipped"
        elif not self.instances:
            status = "vacuous at this N"
        else:
            status = f"{self.instances} instance(s), {self.nonzero} nonzero"
        cond = f" for {self.condition}" if self.condition else ""
        return f"{self.label}: {self.formula}{cond}  [{status}]"


@dataclass(frozen=True)
class MuPrimeTranscription:
    """Deterministic report of the table-to-algebra transcription."""

    N: int
    algebra: LieSuperAlgebra
    lines: tuple[TranscriptionLine, ...]
    conflicts: tuple[str, ...]
    jacobi: JacobiReport
    compatible_with_standard_dual: bool

    def render_lines(self) -> list[str]:
        out = [f"first-order dual bracket table on gl({self.N}) coordinates"]
        out.extend(line.render() for line in self.lines)
        if self.conflicts:
            out.append("conflicting assignments:")
            out.extend(f"  {c}" for c in self.conflicts)
        else:
            out.append("no conflicting assignments")
        out.append(f"jacobi: {self.jacobi}")
        out.append("compatible with standard dual bracket: "
                   f"{self.compatible_with_standard_dual}")
        return out


def _rdj_on_gl(N: int) -> Tensor:
    """The standard r-matrix written over the gl(N) matrix-unit basis."""
    A = make_gl(N)

    def y(i: int, j: int) -> Element:
        return A.gen(pair_name("Y", i, j, N))

    hk = [y(k, k) - y(k + 1, k + 1) for k in range(1, N)]
    return _standard_r(A.basis, hk, y, N, param("h"))


def _standard_dual_on_gl(N: int) -> LieSuperAlgebra:
    """Dual bracket induced by the standard r-matrix, on the same Y names."""
    A = make_gl(N)
    B = LieBialgebra(A, cobracket_from_r(A, _rdj_on_gl(N)))
    out = dual_algebra(B, suffix="")
    out.name = f"dual.standard.gl{N}"
    return out


def _mu_prime_lines(N: int):
    """The printed table lines: label, formula, condition, instances.

    Each instance is (left label, right label, value coefficients).  Index
    conditions are applied exactly as printed; delta factors inside the
    values are evaluated, so an instance may carry a zero value (an explicit
    claim that the bracket of that pair vanishes).
    """

    def y(i: int, j: int) -> str:
        return pair_name("Y", i, j, N)

    def combine(*pairs) -> dict[str, int]:
        out: dict[str, int] = {}
        for coef, name in pairs:
            if coef:
                out[name] = out.get(name, 0) + coef
        return {n: c for n, c in out.items() if c}

    rng = range(1, N + 1)

    line1 = []
    for k in rng:
        for i in rng:
            for j in rng:
                if k < N and j < N and i > 1:
                    line1.append((y(1, k), y(i, j),
                                  combine((2 * (i == k), y(N, j)))))
    line2 = []
    for i in rng:
        for j in rng:
            for l in rng:
                if j < N and i > 1 and l > 1:
                    line2.append((y(i, j), y(l, N),
                                  combine((-2 * (j == l), y(N, j)))))
    line3 = []
    for i in rng:
        for j in rng:
            if j < N and i > 1:
                line3.append((y(i, j), y(1, N),
                              combine((-(j == 1), y(i, 1)),
                                      (-(i == N), y(N, j)))))
    line4 = []
    for i in rng:
        if N > i > 1:
            line4.append((y(1, i), y(1, N), combine((-1, y(1, i)))))
    # The printed condition "k < N < 1" holds for no index at any N >= 2;
    # the line is carried so the report can flag it rather than repair it.
    line5 = []
    for k in rng:
        if k < N < 1:
            line5.append((y(1, N), y(k, N), combine((1, y(k, N)))))
    line6 = [
        (y(1, 1), y(1, N), combine((-1, y(1, 1)), (1, y(N, N)))),
        (y(1, N), y(N, N), combine((-1, y(1, 1)), (1, y(N, N)))),
    ]
    line7 = []
    for i in rng:
        for k in rng:
            if k < N and i < N and k > 1:
                line7.append((y(1, i), y(1, k),
                              combine(((i == 1), y(N, k)))))
    line8 = []
    for i in rng:
        for k in rng:
            if k > 1 and i > 1 and i < N:
                line8.append((y(i, N), y(k, N),
                              combine((-(k == N), y(i, 1)))))
    line9 = []
    for i in rng:
        for k in rng:
            if i < N and k > 1:
                line9.append((y(1, i), y(k, N),
                              combine(((i == 1), y(k, 1)),
                                      (-(k == N), y(N, i)),
                                      (-2 * (i == k), y(1, 1)),
                                      (2 * (i == k), y(N, N)))))

    return [
        ("L1", "mu'(Y1k, Yij) = 2 d_ik YNj", "k,j<N; i>1", line1, False),
        ("L2", "mu'(Yij, YlN) = -2 d_jl YNj", "j<N; i,l>1", line2, False),
        ("L3", "mu'(Yij, Y1N) = -d_j1 Yi1 - d_iN YNj", "j<N; i>1", line3,
         False),
        ("L4", "mu'(Y1i, Y1N) = -Y1i", "N>i>1", line4, False),
        ("L5", "mu'(Y1N, YkN) = YkN", "k<N<1", line5, True),
        ("L6", "mu'(Y11, Y1N) = mu'(Y1N, YNN) = -(Y11 - YNN)", "", line6,
         False),
        ("L7", "mu'(Y1i, Y1k) = d_i1 YNk", "k,i<N; k>1", line7, False),
        ("L8", "mu'(YiN, YkN) = -d_kN Yi1", "k,i>1; i<N", line8, False),
        ("L9", "mu'(Y1i, YkN) = d_i1 Yk1 - d_kN YNi - 2 d_ik (Y11 - YNN)",
         "i<N; k>1", line9, False),
    ]


def mu_prime_transcription(N: int) -> MuPrimeTranscription:
    """Transcribe the printed first-order dual bracket table for gl(N).

    The table is taken literally, line by line; every index assignment
    satisfying a line's printed condition contributes a claim about one
    ordered basis pair.  Claims are merged under antisymmetry; differing
    claims about the same pair are recorded as conflicts (first claim wins,
    processing lines in order).  Lines with unsatisfiable conditions are
    flagged rather than repaired.  The Jacobi status of the resulting
    bracket and its compatibility with the standard dual bracket on the
    same coordinates are computed, not assumed.
    """
    if N < 2:
        raise ValueError("mu_prime_transcription requires N >= 2")
    A_gl = make_gl(N)
    basis = A_gl.basis

    claims: dict[tuple[int, int], tuple[dict[str, int], str, str]] = {}
    conflicts: list[str] = []
    lines: list[TranscriptionLine] = []

    for label, formula, condition, instances, unsatisfiable in _mu_prime_lines(N):
        nonzero = 0
        for (a, b, value) in instances:
            if value:
                nonzero += 1
            i, j = basis.index(a), basis.index(b)
            if i == j:
                if value:
                    conflicts.append(
                        f"{label}: nonzero value on the even diagonal pair "
                        f"({a}, {a})")
                continue
            if i < j:
                key, entry = (i, j), dict(value)
            else:
                key, entry = (j, i), {n: -c for n, c in value.items()}
            pair = f"({basis.names[key[0]]}, {basis.names[key[1]]})"
            if key in claims:
                prev_entry, prev_label, prev_pair = claims[key]
                if prev_entry != entry:
                    conflicts.append(
                        f"{pair}: {label} (from {a}, {b}) disagrees with "
                        f"{prev_label} (from {prev_pair}); keeping {prev_label}")
                continue
            claims[key] = (entry, label, f"{a}, {b}")
        lines.append(TranscriptionLine(
            label, formula, condition, len(instances), nonzero,
            unsatisfiable=unsatisfiable))

    table = {(basis.names[i], basis.names[j]): entry
             for (i, j), (entry, _, _) in claims.items() if entry}
    algebra = LieSuperAlgebra(f"mu.prime.gl{N}", basis, table)
    jacobi = algebra.verify_jacobi()
    compatible = compatible_pair(algebra, _standard_dual_on_gl(N))
    return MuPrimeTranscription(N, algebra, tuple(lines), tuple(conflicts),
                                jacobi, compatible)


def make_mu_prime(N: int) -> LieSuperAlgebra:
    """The transcribed first-order dual bracket on gl(N) coordinates."""
    return mu_prime_transcription(N).algebra


# --------------------------------------------------------------------------
# Registry.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A named catalog object with its default algebra association."""

    name: str
    kind: str  # "algebra" | "tensor" | "cochain"
    provenance: str
    make: Callable[[], object]
    algebra: str | None = None


_REGISTRY: dict[str, CatalogEntry] = {}
_CACHE: dict[str, object] = {}


def _register(name: str, kind: str, provenance: str,
              make: Callable[[], object], algebra: str | None = None):
    if name in _REGISTRY:  # pragma: no cover
        raise ValueError(f"duplicate catalog name {name!r}")
    _REGISTRY[name] = CatalogEntry(name, kind, provenance, make, algebra)


_register("sl2", "algebra",
          "special linear algebra sl(2), matrix-unit basis", lambda: make_sl(2))
_register("sl3", "algebra",
          "special linear algebra sl(3), matrix-unit basis", lambda: make_sl(3))
_register("sl4", "algebra",
          "special linear algebra sl(4), matrix-unit basis", lambda: make_sl(4))
_register("gl3", "algebra",
          "general linear algebra gl(3), matrix-unit basis", lambda: make_gl(3))
_register("borel", "algebra",
          "two-dimensional solvable algebra span{h, x | [h,x] = 2x}",
          make_borel)
_register("osp12", "algebra",
          "orthosymplectic superalgebra osp(1|2)",
          lambda: make_osp12()[0])
_register("double.g1", "algebra",
          "first bracket of the quantum double of two Borel algebras",
          lambda: make_double_pieces()[0])
_register("double.g2", "algebra",
          "second bracket of the quantum double of two Borel algebras",
          lambda: make_double_pieces()[1])
_register("double.g1dual", "algebra",
          "dual bracket paired with double.g1",
          lambda: make_double_pieces()[2])
_register("double.g2dual", "algebra",
          "dual bracket paired with double.g2",
          lambda: make_double_pieces()[3])
_register("double.pencil", "algebra",
          "pencil alpha1*g1 + alpha2*g2 of the double brackets",
          lambda: pencil(make_double_pieces()[0], make_double_pieces()[1],
                         param("alpha1"), param("alpha2"),
                         name="double.pencil"))
_register("r.dj", "tensor",
          "standard classical r-matrix on sl(3) (parameter h)",
          lambda: make_rdj(3), algebra="sl3")
_register("r.jordan", "tensor",
          "jordanian classical r-matrix on sl(3) (parameter xi)",
          lambda: make_rjordan(3), algebra="sl3")
_register("r.full", "tensor",
          "combined standard-plus-jordanian r-matrix on sl(3)",
          lambda: make_rfull(3), algebra="sl3")
_register("r.double", "tensor",
          "constant r-matrix of the quantum double (parameter theta)",
          lambda: make_double_pieces()[4], algebra="double.pencil")
_register("r.borel", "tensor",
          "skew tensor h^x on the two-dimensional solvable algebra",
          make_rborel, algebra="borel")
_register("mu.prime", "algebra",
          "literal transcription of the first-order dual bracket on gl(3)",
          lambda: make_mu_prime(3))
_register("mu1star", "algebra",
          "first dual-space bracket of osp(1|2), hatted basis",
          lambda: make_osp12()[1])
_register("mu2star", "algebra",
          "second dual-space bracket of osp(1|2), hatted basis",
          lambda: make_osp12()[2])
_register("psi", "cochain",
          "degree-1 cochain connecting the two osp(1|2) dual brackets",
          lambda: make_osp12()[3], algebra="mu1star")
_register("dual.standard.sl2", "algebra",
          "dual bracket of sl(2) induced by the standard r-matrix",
          lambda: make_dual_standard(2))
_register("dual.jordan.sl2", "algebra",
          "dual bracket of sl(2) induced by the jordanian r-matrix",
          lambda: make_dual_jordanian(2))


def catalog_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown catalog name {name!r}") from None


def catalog_entries() -> tuple[CatalogEntry, ...]:
    return tuple(_REGISTRY.values())


def catalog_get(name: str) -> object:
    if name not in _CACHE:
        _CACHE[name] = catalog_entry(name).make()
    return _CACHE[name]
