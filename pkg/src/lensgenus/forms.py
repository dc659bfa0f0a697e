"""Intersection pairings, linking forms, and the calculus connecting them.

An intersection pairing is a nondegenerate symmetric integer matrix ``S``.
It presents the linking form on ``coker(S)`` given by ``-S^{-1}`` mod 1;
every construction in this package is checked against that single rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from . import intmatrix as im
from .numtheory import gcd, is_quadratic_residue

__all__ = [
    "Parity",
    "GramPairing",
    "CyclicLinkingForm",
    "FiniteLinkingForm",
    "parity",
    "direct_sum",
    "is_characteristic",
    "characteristic_vector",
    "characteristic_vectors",
    "blow_down",
    "presented_linking_form",
    "lemma_pairing_matrix",
    "as_cyclic",
    "cyclic_equivalent",
    "linking_forms_isomorphic",
    "negate",
    "canonical_q",
    "presents",
    "EMPTY",
    "HYPERBOLIC",
]


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class GramPairing:
    """A nondegenerate symmetric integer bilinear form on ``Z^rank``."""

    gram: im.IntMatrix

    def __post_init__(self):
        g = im.as_matrix(self.gram)
        if not im.is_symmetric(g):
            raise ValueError("Gram matrix must be square and symmetric")
        if im.determinant(g) == 0:
            raise ValueError("Gram matrix is singular")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return im.determinant(self.gram)

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        return im.bilinear(self.gram, x, y)

    def square(self, x: Sequence[int]) -> int:
        return im.bilinear(self.gram, x, x)

    def negated(self) -> "GramPairing":
        return GramPairing(tuple(tuple(-x for x in row) for row in self.gram))

    @property
    def definiteness(self) -> im.Definiteness:
        return im.definiteness(self.gram)

    @property
    def signature(self) -> int:
        return im.signature(self.gram)


EMPTY = GramPairing(())
HYPERBOLIC = GramPairing(((0, 1), (1, 0)))


@dataclass(frozen=True)
class CyclicLinkingForm:
    """The form ``(q/p)`` on ``Z/p``; ``q`` is kept reduced into ``[0, p)``."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if gcd(self.q, self.p) != 1:
            raise ValueError(f"q={self.q} is not prime to p={self.p}")
        object.__setattr__(self, "q", self.q % self.p)


@dataclass(frozen=True)
class FiniteLinkingForm:
    """Linking form on ``Z/d_1 + ... + Z/d_k`` given by its generator pairings.

    ``pairing[i][j]`` lies in ``[0, 1)``; ``generators[i]`` is the dual-basis
    coordinate vector the ``i``-th cyclic summand is generated by.
    """

    invariant_factors: tuple[int, ...]
    pairing: im.RatMatrix
    generators: tuple[tuple[int, ...], ...] = ()

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n


def parity(P: GramPairing) -> Parity:
    return Parity.EVEN if all(P.gram[i][i] % 2 == 0 for i in range(P.rank)) else Parity.ODD


def direct_sum(*pairings: GramPairing) -> GramPairing:
    return GramPairing(im.block_diag(*(P.gram for P in pairings)))


def is_characteristic(P: GramPairing, v: Sequence[int]) -> bool:
    """``v.w == w.w (mod 2)`` for every ``w``."""
    if len(v) != P.rank:
        raise ValueError(f"vector of length {len(v)} for a rank {P.rank} pairing")
    sv = im.matvec(P.gram, v)
    return all((sv[i] - P.gram[i][i]) % 2 == 0 for i in range(P.rank))


def characteristic_vector(P: GramPairing) -> tuple[int, ...]:
    """A characteristic vector with coordinates in ``{0, 1}``."""
    diag = [P.gram[i][i] for i in range(P.rank)]
    return im.solve_mod2(P.gram, diag)


def characteristic_vectors(P: GramPairing) -> list[tuple[int, ...]]:
    """Every {0,1}-vector that is characteristic (one per class mod 2).

    The one returned by ``characteristic_vector`` comes first.
    """
    base = characteristic_vector(P)
    kernel = im.kernel_mod2(P.gram)
    out = []
    for coeffs in product((0, 1), repeat=len(kernel)):
        v = list(base)
        for c, k in zip(coeffs, kernel):
            if c:
                v = [x ^ y for x, y in zip(v, k)]
        out.append(tuple(v))
    return out


def blow_down(P: GramPairing, v: Sequence[int]) -> tuple[GramPairing, im.IntMatrix]:
    """Restrict ``P`` to the orthogonal complement of a (+-1)-vector.

    Returns the new pairing and the ``(rank-1) x rank`` matrix whose rows are
    its basis in the old coordinates.
    """
    s = P.square(v)
    if s not in (1, -1):
        raise ValueError(f"can only blow down a vector of square +-1, got {s}")
    sv = im.matvec(P.gram, v)
    n = P.rank
    # e_i - s (e_i.v) v spans v-perp since 1/s == s
    span = [[int(i == j) - s * sv[i] * v[j] for j in range(n)] for i in range(n)]
    basis = im.hermite_normal_form(span)
    if len(basis) != n - 1:
        raise ArithmeticError("complement basis has the wrong rank")
    gram = im.matmul(im.matmul(basis, P.gram), im.transpose(basis))
    return GramPairing(gram), basis


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def presented_linking_form(P: GramPairing) -> FiniteLinkingForm:
    """The linking form ``-S^{-1}`` mod 1 on the cokernel of ``S``.

    >>> presented_linking_form(GramPairing(((5,),))).pairing
    ((Fraction(4, 5),),)
    """
    snf = im.smith_normal_form(P.gram)
    keep = [i for i, d in enumerate(snf.invariant_factors) if d > 1]
    gens = tuple(tuple(snf.U_inv[r][i] for r in range(P.rank)) for i in keep)
    # S^{-1} g for each generator g, without forming the whole inverse
    sols = im.solve_rational(P.gram, gens) if gens else ()
    pairing = tuple(tuple(_mod1(-sum(a * b for a, b in zip(g, x))) for x in sols)
                    for g in gens)
    return FiniteLinkingForm(
        invariant_factors=tuple(snf.invariant_factors[i] for i in keep),
        pairing=pairing,
        generators=gens,
    )


def lemma_pairing_matrix(P: GramPairing) -> tuple[tuple[int, ...], im.RatMatrix]:
    """Generator pairings computed from lifts instead of from ``S^{-1}``.

    For each cyclic summand of order ``n_i`` with generator ``alpha_i`` this
    uses the integer vector ``xi_i`` with ``S xi_i = n_i alpha_i`` (a column
    of the right Smith transform) and evaluates
    ``-S(xi_i, xi_j) / (n_i n_j)`` mod 1.
    """
    snf = im.smith_normal_form(P.gram)
    out_factors, xis, alphas = [], [], []
    for i, d in enumerate(snf.invariant_factors):
        if d <= 1:
            continue
        xi = tuple(snf.V[r][i] for r in range(P.rank))
        alpha = tuple(snf.U_inv[r][i] for r in range(P.rank))
        if im.matvec(P.gram, xi) != tuple(d * a for a in alpha):
            raise ArithmeticError("lift does not satisfy S xi = n alpha")
        out_factors.append(d)
        xis.append(xi)
    pairing = tuple(
        tuple(_mod1(Fraction(-P.dot(x, y), ni * nj)) for y, nj in zip(xis, out_factors))
        for x, ni in zip(xis, out_factors)
    )
    return tuple(out_factors), pairing


def as_cyclic(L: FiniteLinkingForm) -> Optional[CyclicLinkingForm]:
    """``(q/p)`` when the group is cyclic, ``None`` otherwise."""
    if not L.invariant_factors:
        return CyclicLinkingForm(1, 0)
    if len(L.invariant_factors) != 1:
        return None
    p = L.invariant_factors[0]
    x = L.pairing[0][0] * p
    if x.denominator != 1:
        raise ArithmeticError("self-pairing denominator does not divide the order")
    return CyclicLinkingForm(p, int(x))


def cyclic_equivalent(a: CyclicLinkingForm, b: CyclicLinkingForm) -> bool:
    """Same ``p`` and ``q_b = u^2 q_a`` for a unit ``u`` mod ``p``."""
    if a.p != b.p:
        return False
    if a.p == 1:
        return True
    return is_quadratic_residue(b.q * pow(a.q, -1, a.p), a.p)


def negate(L: CyclicLinkingForm) -> CyclicLinkingForm:
    return CyclicLinkingForm(L.p, -L.q)


def canonical_q(L: CyclicLinkingForm) -> int:
    """Least element of the orbit of ``q`` under multiplication by unit squares."""
    if L.p == 1:
        return 0
    return min(u * u * L.q % L.p for u in range(1, L.p) if gcd(u, L.p) == 1)


def presents(P: GramPairing, target: CyclicLinkingForm) -> bool:
    """Does ``P`` present ``target``?"""
    if abs(P.det) != target.p:
        return False
    got = as_cyclic(presented_linking_form(P))
    return got is not None and cyclic_equivalent(got, target)


_ISO_LIMIT = 10**4


def linking_forms_isomorphic(a: FiniteLinkingForm, b: FiniteLinkingForm) -> bool:
    """Isomorphism test for cyclic groups and small two-generator groups.

    Raises ``NotImplementedError`` for three or more invariant factors or for
    non-cyclic groups of order above 10^4.
    """
    if a.invariant_factors != b.invariant_factors:
        return False
    k = len(a.invariant_factors)
    if k <= 1:
        return cyclic_equivalent(as_cyclic(a), as_cyclic(b))
    if k > 2 or a.order > _ISO_LIMIT:
        raise NotImplementedError("isomorphism test only for <= 2 factors, order <= 10^4")
    d1, d2 = a.invariant_factors

    def value(form, x, y):
        return _mod1(sum(xi * yj * form.pairing[i][j]
                         for i, xi in enumerate(x) for j, yj in enumerate(y)))

    elements = list(product(range(d1), range(d2)))
    self_b = {x: value(b, x, x) for x in elements}
    # images of the two generators; a form-preserving map out of a
    # nonsingular form is injective, so equal orders make it bijective
    target11, target22, target12 = a.pairing[0][0], a.pairing[1][1], a.pairing[0][1]
    xs = [x for x in elements if self_b[x] == target11
          and (d1 * x[0]) % d1 == 0 and (d1 * x[1]) % d2 == 0]
    ys = [y for y in elements if self_b[y] == target22]
    return any(value(b, x, y) == target12 for x in xs for y in ys)
