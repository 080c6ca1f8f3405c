"""Truncated universal envelopes, twists, and R-matrices.

Elements live in the universal enveloping algebra of a Lie superalgebra
(or its tensor square/cube), with polynomial coefficients truncated at a
fixed total degree in designated deformation parameters.  Every product
is rewritten to the Poincare-Birkhoff-Witt normal form ordered by basis
declaration order; an odd generator squares to half its self-bracket, so
odd letters never repeat in a normal word.

On top of the arithmetic the module builds the jordanian twist
F = exp(h (x) sigma) with sigma = (1/2)log(1 + 2 xi x) over the solvable
pair {h, x | [h, x] = 2x}, its extension over sl(N), the twist 2-cocycle
residual, the triangular R-matrix R = F_21 F^{-1} with its quantum
Yang-Baxter residual, the slot-factored form of that R-matrix, and the
extraction of the classical r-matrix from the first deformation order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .catalog import cartan_name, make_borel, make_sl, pair_name
from .liealg import Element, LieSuperAlgebra, Tensor
from .scalars import (
    Poly,
    TruncationOrder,
    UnsupportedInputError,
    as_poly,
    param,
    scalar_str,
)

__all__ = [
    "UEA",
    "UEAElement",
    "TensorUEA",
    "pbw_normalize",
    "tensor_product",
    "coproduct",
    "counit",
    "exp_trunc",
    "log_trunc",
    "invert_trunc",
    "build_jordanian_twist",
    "build_extended_twist",
    "twist_cocycle_check",
    "twist_counit_ok",
    "universal_R",
    "classical_limit",
    "qybe_check",
    "factored_r_matrix",
    "factored_R_compare",
]

Word = tuple[int, ...]


def _accumulate(store: dict, key, value) -> None:
    if not value:
        return
    total = store.get(key)
    total = value if total is None else total + value
    if total:
        store[key] = total
    else:
        del store[key]


class UEA:
    """A universal enveloping algebra with a fixed truncation order.

    Words are tuples of basis indices; the normal form is weakly
    increasing in the basis declaration order with odd indices appearing
    at most once.  Rewriting results are memoised per instance.
    """

    def __init__(self, algebra: LieSuperAlgebra, order: TruncationOrder):
        self.algebra = algebra
        self.order = order
        self._normal: dict[Word, dict[Word, Poly]] = {}
        self._delta: dict[Word, "TensorUEA"] = {}

    def __repr__(self):
        return f"UEA({self.algebra.name}, order {self.order.degree})"

    # -- elements -----------------------------------------------------------

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def one(self) -> "UEAElement":
        return UEAElement(self, {(): Poly.one()})

    def gen(self, name: str) -> "UEAElement":
        return UEAElement(self, {(self.algebra.basis.index(name),): 1})

    def lift(self, x: Element) -> "UEAElement":
        """A Lie-algebra element as a degree-1 enveloping element."""
        if x.basis != self.algebra.basis:
            raise ValueError("element lives over a different basis")
        index = self.algebra.basis.index
        return UEAElement(self, {(index(n),): c for n, c in x.coeffs.items()})

    def word_parity(self, word: Word) -> int:
        parities = self.algebra.basis.parities
        return sum(parities[i] for i in word) % 2

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        names = self.algebra.basis.names
        chunks = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = names[word[i]]
            chunks.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(chunks)

    # -- PBW rewriting -------------------------------------------------------

    def normalize_word(self, word: Word) -> Mapping[Word, Poly]:
        """Expand a raw word as {normal word: coefficient}."""
        cached = self._normal.get(word)
        if cached is None:
            cached = self._rewrite(word)
            self._normal[word] = cached
        return cached

    def _rewrite(self, word: Word) -> dict[Word, Poly]:
        parities = self.algebra.basis.parities
        names = self.algebra.basis.names
        index = self.algebra.basis.index
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a < b or (a == b and parities[a] == 0):
                continue
            head, tail = word[:i], word[i + 2:]
            out: dict[Word, Poly] = {}
            if a > b:
                # x_a x_b = (-1)^{|a||b|} x_b x_a + [x_a, x_b]
                swap_sign = -1 if parities[a] and parities[b] else 1
                for w, c in self.normalize_word(head + (b, a) + tail).items():
                    _accumulate(out, w, c * swap_sign)
                reduced = self.algebra.bracket_basis(names[a], names[b])
                scale = Fraction(1)
            else:
                # adjacent equal odd letters: x x = [x, x] / 2
                reduced = self.algebra.bracket_basis(names[a], names[a])
                scale = Fraction(1, 2)
            for target, c in reduced.coeffs.items():
                coeff = c * scale
                shorter = head + (index(target),) + tail
                for w, c2 in self.normalize_word(shorter).items():
                    _accumulate(out, w, c2 * coeff)
            return out
        return {word: Poly.one()}

    def coproduct_of_word(self, word: Word) -> "TensorUEA":
        """The coproduct of one PBW word as a rank-2 tensor."""
        cached = self._delta.get(word)
        if cached is None:
            cached = TensorUEA.unit(self, 2)
            for i in word:
                primitive = TensorUEA(self, 2, {((i,), ()): 1, ((), (i,)): 1})
                cached = cached * primitive
            self._delta[word] = cached
        return cached


class UEAElement:
    """Truncated enveloping-algebra element in PBW normal form.

    The constructor accepts arbitrary words and normalises them, so any
    {word: scalar} mapping is a valid input.
    """

    __slots__ = ("uea", "terms")

    def __init__(self, uea: UEA, terms: Mapping[Word, object]):
        self.uea = uea
        clean: dict[Word, Poly] = {}
        for word, coeff in terms.items():
            poly = as_poly(coeff).truncate(uea.order)
            if not poly:
                continue
            for w, c in uea.normalize_word(tuple(word)).items():
                _accumulate(clean, w, (poly * c).truncate(uea.order))
        self.terms = {w: c for w, c in clean.items() if c}

    # -- structure -----------------------------------------------------------

    def _check_compatible(self, other: "UEAElement"):
        if self.uea is other.uea:
            return
        if (self.uea.algebra != other.uea.algebra
                or self.uea.order != other.uea.order):
            raise ValueError("operands live in different enveloping algebras")

    def __bool__(self):
        return bool(self.terms)

    def unit_coefficient(self) -> Poly:
        return self.terms.get((), Poly.zero())

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return UEAElement(self.uea, out)

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, scalar) -> "UEAElement":
        poly = as_poly(scalar)
        return UEAElement(self.uea,
                          {w: c * poly for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            self._check_compatible(other)
            order = self.uea.order
            out: dict[Word, Poly] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    coeff = (c1 * c2).truncate(order)
                    if not coeff:
                        continue
                    for w, c in self.uea.normalize_word(w1 + w2).items():
                        _accumulate(out, w, (coeff * c).truncate(order))
            return UEAElement(self.uea, out)
        return self.scaled(other)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    # -- comparison and rendering ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return (self.uea.algebra == other.uea.algebra
                and self.uea.order == other.uea.order
                and self.terms == other.terms)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in sorted(self.terms.items(),
                                  key=lambda kv: (len(kv[0]), kv[0])):
            body = self.uea.render_word(word)
            text = scalar_str(coeff)
            if body == "1":
                parts.append(f"({text})" if " " in text else text)
            elif text == "1":
                parts.append(body)
            elif text == "-1":
                parts.append(f"-{body}")
            elif " " in text:
                parts.append(f"({text})*{body}")
            else:
                parts.append(f"{text}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UEAElement({self})"


class TensorUEA:
    """A rank-n tensor power of the enveloping algebra (slot-wise PBW).

    Multiplication is slot-wise with Koszul signs: moving the right
    factor's slot i past the left factor's slots j > i contributes
    (-1)^{|w_i||u_j|}.  For purely even algebras this is plain slot-wise
    multiplication.
    """

    __slots__ = ("uea", "rank", "terms")

    def __init__(self, uea: UEA, rank: int,
                 terms: Mapping[tuple[Word, ...], object]):
        if rank < 1:
            raise ValueError("tensor rank must be at least 1")
        self.uea = uea
        self.rank = rank
        order = uea.order
        clean: dict[tuple[Word, ...], Poly] = {}
        for key, coeff in terms.items():
            poly = as_poly(coeff).truncate(order)
            if not poly:
                continue
            key = tuple(tuple(w) for w in key)
            if len(key) != rank:
                raise ValueError(f"key {key!r} does not have rank {rank}")
            partial: list[tuple[tuple[Word, ...], Poly]] = [((), poly)]
            for w in key:
                grown = []
                for done, c in partial:
                    for nw, nc in uea.normalize_word(w).items():
                        c2 = (c * nc).truncate(order)
                        if c2:
                            grown.append((done + (nw,), c2))
                partial = grown
            for done, c in partial:
                _accumulate(clean, done, c)
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def unit(cls, uea: UEA, rank: int = 2) -> "TensorUEA":
        return cls(uea, rank, {((),) * rank: Poly.one()})

    # -- structure -----------------------------------------------------------

    def _check_compatible(self, other: "TensorUEA"):
        if self.rank != other.rank:
            raise ValueError("tensor ranks differ")
        if self.uea is other.uea:
            return
        if (self.uea.algebra != other.uea.algebra
                or self.uea.order != other.uea.order):
            raise ValueError("operands live in different enveloping algebras")

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TensorUEA):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorUEA(self.uea, self.rank, out)

    def __sub__(self, other):
        if not isinstance(other, TensorUEA):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, scalar) -> "TensorUEA":
        poly = as_poly(scalar)
        return TensorUEA(self.uea, self.rank,
                         {k: c * poly for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorUEA):
            self._check_compatible(other)
            uea = self.uea
            order = uea.order
            out: dict[tuple[Word, ...], Poly] = {}
            for k1, c1 in self.terms.items():
                left_par = [uea.word_parity(w) for w in k1]
                for k2, c2 in other.terms.items():
                    coeff = (c1 * c2).truncate(order)
                    if not coeff:
                        continue
                    right_par = [uea.word_parity(w) for w in k2]
                    crossings = sum(right_par[i] * left_par[j]
                                    for i in range(self.rank)
                                    for j in range(i + 1, self.rank))
                    if crossings % 2:
                        coeff = -coeff
                    partial: list[tuple[tuple[Word, ...], Poly]] = [((), coeff)]
                    for i in range(self.rank):
                        grown = []
                        for done, c in partial:
                            for w, nc in uea.normalize_word(k1[i] + k2[i]).items():
                                c2w = (c * nc).truncate(order)
                                if c2w:
                                    grown.append((done + (w,), c2w))
                        partial = grown
                    for done, c in partial:
                        _accumulate(out, done, c)
            return TensorUEA(self.uea, self.rank, out)
        return self.scaled(other)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    # -- slot operations --------------------------------------------------------

    def flip(self) -> "TensorUEA":
        """a (x) b -> (-1)^{|a||b|} b (x) a (rank 2 only)."""
        if self.rank != 2:
            raise ValueError("flip is defined for rank-2 tensors")
        parity = self.uea.word_parity
        out: dict[tuple[Word, ...], Poly] = {}
        for (w1, w2), c in self.terms.items():
            if parity(w1) and parity(w2):
                c = -c
            _accumulate(out, (w2, w1), c)
        return TensorUEA(self.uea, 2, out)

    def embed(self, rank: int, slots: tuple[int, ...]) -> "TensorUEA":
        """Place the slots at the given (increasing) positions of a larger
        rank, filling the rest with the unit.  The unit is even, so no
        Koszul signs arise."""
        if len(slots) != self.rank:
            raise ValueError("need one target position per slot")
        if list(slots) != sorted(set(slots)) or slots[-1] >= rank:
            raise ValueError("positions must be strictly increasing and fit")
        out: dict[tuple[Word, ...], Poly] = {}
        for key, c in self.terms.items():
            new_key: list[Word] = [()] * rank
            for pos, w in zip(slots, key):
                new_key[pos] = w
            _accumulate(out, tuple(new_key), c)
        return TensorUEA(self.uea, rank, out)

    def coproduct_slot(self, slot: int) -> "TensorUEA":
        """Apply the coproduct to one slot, raising the rank by one."""
        order = self.uea.order
        out: dict[tuple[Word, ...], Poly] = {}
        for key, c in self.terms.items():
            for (wa, wb), c2 in self.uea.coproduct_of_word(key[slot]).terms.items():
                new_key = key[:slot] + (wa, wb) + key[slot + 1:]
                _accumulate(out, new_key, (c * c2).truncate(order))
        return TensorUEA(self.uea, self.rank + 1, out)

    def counit_slot(self, slot: int):
        """Apply the counit to one slot (the rank drops by one); a rank-2
        tensor collapses to an enveloping-algebra element."""
        out: dict = {}
        for key, c in self.terms.items():
            if key[slot]:
                continue
            reduced = key[:slot] + key[slot + 1:]
            _accumulate(out, reduced, c)
        if self.rank == 2:
            return UEAElement(self.uea, {k[0]: c for k, c in out.items()})
        return TensorUEA(self.uea, self.rank - 1, out)

    def truncated(self, degree: int) -> "TensorUEA":
        """Re-truncate to a lower total deformation degree."""
        if degree > self.uea.order.degree:
            raise ValueError("cannot raise a truncation order after the fact")
        uea = UEA(self.uea.algebra,
                  TruncationOrder(degree, self.uea.order.graded))
        return TensorUEA(uea, self.rank, self.terms)

    def leading_term(self) -> tuple[tuple[str, ...], Poly] | None:
        """(rendered slot words, coefficient) of the least term, or None."""
        if not self.terms:
            return None
        key = min(self.terms, key=lambda k: (sum(map(len, k)), k))
        return (tuple(self.uea.render_word(w) for w in key), self.terms[key])

    # -- comparison and rendering ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TensorUEA):
            return NotImplemented
        return (self.rank == other.rank
                and self.uea.algebra == other.uea.algebra
                and self.uea.order == other.uea.order
                and self.terms == other.terms)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in sorted(self.terms.items(),
                                 key=lambda kv: (sum(map(len, kv[0])), kv[0])):
            body = "(x)".join(self.uea.render_word(w) for w in key)
            text = scalar_str(coeff)
            if text == "1":
                parts.append(body)
            elif text == "-1":
                parts.append(f"-{body}")
            elif " " in text:
                parts.append(f"({text})*{body}")
            else:
                parts.append(f"{text}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TensorUEA({self})"


# -- constructors -------------------------------------------------------------


def pbw_normalize(uea: UEA, factors: Iterable) -> UEAElement:
    """Product of the factors in the written order, in PBW normal form.

    Each factor is a generator name or a Lie-algebra element.
    """
    result = uea.one()
    for factor in factors:
        piece = uea.gen(factor) if isinstance(factor, str) else uea.lift(factor)
        result = result * piece
    return result


def tensor_product(*factors: UEAElement) -> TensorUEA:
    """u1 (x) u2 (x) ... over the common enveloping algebra."""
    if not factors:
        raise ValueError("tensor_product needs at least one factor")
    uea = factors[0].uea
    order = uea.order
    terms: dict[tuple[Word, ...], Poly] = {(): Poly.one()}
    for factor in factors:
        factors[0]._check_compatible(factor)
        grown: dict[tuple[Word, ...], Poly] = {}
        for key, c in terms.items():
            for w, c2 in factor.terms.items():
                prod = (c * c2).truncate(order)
                if prod:
                    _accumulate(grown, key + (w,), prod)
        terms = grown
    return TensorUEA(uea, len(factors), terms)


def coproduct(u: UEAElement) -> TensorUEA:
    """The coproduct: an algebra map with every generator primitive."""
    out = TensorUEA(u.uea, 2, {})
    for word, c in u.terms.items():
        out = out + u.uea.coproduct_of_word(word).scaled(c)
    return out


def counit(u: UEAElement) -> Poly:
    """The counit: kills every generator, keeps the unit coefficient."""
    return u.unit_coefficient()


# -- truncated series ----------------------------------------------------------


def _one_like(u):
    if isinstance(u, UEAElement):
        return u.uea.one()
    return TensorUEA.unit(u.uea, u.rank)


def _require_positive_degree(u, what: str) -> None:
    graded = u.uea.order.graded
    for coeff in u.terms.values():
        if coeff.graded_part(graded, 0):
            raise UnsupportedInputError(
                f"{what} needs every term to carry positive deformation degree")


def exp_trunc(u):
    """Truncated exponential; u must vanish at deformation degree 0."""
    _require_positive_degree(u, "exp_trunc")
    result = _one_like(u)
    power = _one_like(u)
    factorial = 1
    for k in range(1, u.uea.order.degree + 1):
        power = power * u
        if not power:
            break
        factorial *= k
        result = result + power.scaled(Fraction(1, factorial))
    return result


def log_trunc(u):
    """Truncated logarithm; u - 1 must vanish at deformation degree 0."""
    v = u - _one_like(u)
    _require_positive_degree(v, "log_trunc")
    result = v.scaled(0)
    power = _one_like(u)
    for k in range(1, u.uea.order.degree + 1):
        power = power * v
        if not power:
            break
        result = result + power.scaled(Fraction((-1) ** (k + 1), k))
    return result


def invert_trunc(u):
    """Inverse of u = 1 + v by the geometric series; v must vanish at
    deformation degree 0."""
    v = u - _one_like(u)
    _require_positive_degree(v, "invert_trunc")
    result = _one_like(u)
    power = _one_like(u)
    for k in range(1, u.uea.order.degree + 1):
        power = power * v
        if not power:
            break
        result = result + power.scaled((-1) ** k)
    return result


# -- twists ---------------------------------------------------------------------


def _deformation_order(degree: int) -> TruncationOrder:
    if degree < 1:
        raise ValueError("truncation order must be at least 1")
    return TruncationOrder(degree, frozenset({"xi"}))


def _half_log_shift(uea: UEA, x: UEAElement, xi: Poly) -> UEAElement:
    """sigma = (1/2) log(1 + 2 xi x)."""
    return log_trunc(uea.one() + x.scaled(xi * 2)).scaled(Fraction(1, 2))


def build_jordanian_twist(order: int) -> TensorUEA:
    """F = exp(h (x) sigma), sigma = (1/2)log(1 + 2 xi x), over {h, x}."""
    uea = UEA(make_borel(), _deformation_order(order))
    sigma = _half_log_shift(uea, uea.gen("x"), param("xi"))
    return exp_trunc(tensor_product(uea.gen("h"), sigma))


def _sl_twist_parts(N: int, order: int):
    """Shared ingredients of the extended twist over sl(N)."""
    uea = UEA(make_sl(N), _deformation_order(order))
    xi = param("xi")
    x = uea.gen(pair_name("E", 1, N, N))
    cartan = uea.zero()
    for k in range(1, N):
        cartan = cartan + uea.gen(cartan_name(k))
    sigma = _half_log_shift(uea, x, xi)
    return uea, xi, cartan, sigma


def build_extended_twist(N: int, order: int) -> TensorUEA:
    """F = exp{2 xi sum_i E_1i (x) E_iN e^{-sigma}} exp{H (x) sigma}
    over sl(N), with x = E_1N, H the Cartan element dual to that root,
    sigma = (1/2)log(1 + 2 xi x), and i running over 2..N-1."""
    if N < 3:
        raise ValueError("the extended twist needs N >= 3")
    uea, xi, cartan, sigma = _sl_twist_parts(N, order)
    damp = exp_trunc(sigma.scaled(-1))
    carrier = TensorUEA(uea, 2, {})
    for i in range(2, N):
        left = uea.gen(pair_name("E", 1, i, N))
        right = uea.gen(pair_name("E", i, N, N)) * damp
        carrier = carrier + tensor_product(left, right).scaled(xi * 2)
    return exp_trunc(carrier) * exp_trunc(tensor_product(cartan, sigma))


def factored_r_matrix(N: int, order: int) -> TensorUEA:
    """The slot-factored R-matrix of the extended twist:

    prod_j exp(2 xi E_jN e^{-sigma} (x) E_1j) * exp(sigma (x) H)
    * exp(-H (x) sigma) * prod_j exp(-2 xi E_1j (x) E_jN e^{-sigma}),

    with j ascending over 2..N-1 in both products.
    """
    if N < 3:
        raise ValueError("the factored R-matrix needs N >= 3")
    uea, xi, cartan, sigma = _sl_twist_parts(N, order)
    damp = exp_trunc(sigma.scaled(-1))
    result = TensorUEA.unit(uea, 2)
    for j in range(2, N):
        lowered = uea.gen(pair_name("E", j, N, N)) * damp
        raiser = uea.gen(pair_name("E", 1, j, N))
        result = result * exp_trunc(tensor_product(lowered, raiser).scaled(xi * 2))
    result = result * exp_trunc(tensor_product(sigma, cartan))
    result = result * exp_trunc(tensor_product(cartan, sigma).scaled(-1))
    for j in range(2, N):
        lowered = uea.gen(pair_name("E", j, N, N)) * damp
        raiser = uea.gen(pair_name("E", 1, j, N))
        result = result * exp_trunc(tensor_product(raiser, lowered).scaled(xi * -2))
    return result


# -- checks ----------------------------------------------------------------------


def twist_cocycle_check(F: TensorUEA, order: int | None = None) -> TensorUEA:
    """Residual F_12 (Delta (x) id)F - F_23 (id (x) Delta)F; zero iff F
    satisfies the twist 2-cocycle identity at the working order."""
    if F.rank != 2:
        raise ValueError("a twist must be a rank-2 tensor")
    if order is not None:
        F = F.truncated(order)
    lhs = F.embed(3, (0, 1)) * F.coproduct_slot(0)
    rhs = F.embed(3, (1, 2)) * F.coproduct_slot(1)
    return lhs - rhs


def twist_counit_ok(F: TensorUEA) -> bool:
    """Counit normalisation: applying the counit to either slot gives 1."""
    one = F.uea.one()
    return F.counit_slot(0) == one and F.counit_slot(1) == one


def universal_R(F: TensorUEA) -> TensorUEA:
    """R = F_21 F^{-1} (flip, then geometric-series inverse)."""
    if F.rank != 2:
        raise ValueError("a twist must be a rank-2 tensor")
    return F.flip() * invert_trunc(F)


def classical_limit(R: TensorUEA) -> Tensor:
    """The deformation-degree-1 part of R - 1 (x) 1 as a tensor over the
    underlying Lie algebra.

    R must reduce to the unit tensor at deformation degree 0, and every
    first-order term must be a single generator in each slot; anything
    else signals a non-Lie first order and raises an error.
    """
    if R.rank != 2:
        raise ValueError("classical limits are taken of rank-2 tensors")
    uea = R.uea
    graded = uea.order.graded
    basis = uea.algebra.basis
    delta = R - TensorUEA.unit(uea, 2)
    coeffs: dict[tuple[str, str], Poly] = {}
    for (w1, w2), c in delta.terms.items():
        if c.graded_part(graded, 0):
            raise UnsupportedInputError(
                "R does not reduce to the unit tensor at deformation degree 0")
        first = c.graded_part(graded, 1)
        if not first:
            continue
        if len(w1) != 1 or len(w2) != 1:
            raise UnsupportedInputError(
                "first-order term is not linear in each tensor slot: "
                f"{uea.render_word(w1)}(x){uea.render_word(w2)}")
        coeffs[(basis.names[w1[0]], basis.names[w2[0]])] = first
    return Tensor(basis, 2, coeffs)


def qybe_check(R: TensorUEA, order: int | None = None) -> TensorUEA:
    """Residual R_12 R_13 R_23 - R_23 R_13 R_12 at the working order."""
    if R.rank != 2:
        raise ValueError("the quantum Yang-Baxter check needs a rank-2 tensor")
    if order is not None:
        R = R.truncated(order)
    r12 = R.embed(3, (0, 1))
    r13 = R.embed(3, (0, 2))
    r23 = R.embed(3, (1, 2))
    return r12 * r13 * r23 - r23 * r13 * r12


def factored_R_compare(N: int = 3, order: int = 2) -> bool:
    """Structural equality of the slot-factored R-matrix product and
    F_21 F^{-1} for the extended twist, at the given truncation order."""
    return factored_r_matrix(N, order) == universal_R(build_extended_twist(N, order))
