"""Small prime-field helpers: reduction of rationals, row reduction, and F_{p^2}."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .algebra import MultiPoly


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def reduce_scalar(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"{p} divides the denominator of {x}")
    return x.numerator * pow(x.denominator, -1, p) % p


def reduce_poly(poly: MultiPoly, p: int) -> dict[tuple[int, ...], int]:
    """Coefficients mod p, dropping those that vanish."""
    out = {}
    for exp, c in poly.terms.items():
        v = reduce_scalar(c, p)
        if v:
            out[exp] = v
    return out


def eval_mod(terms: dict[tuple[int, ...], int], point: Sequence[int], p: int) -> int:
    total = 0
    for exp, c in terms.items():
        term = c
        for x, e in zip(point, exp):
            if e:
                term = term * pow(x, e, p) % p
        total += term
    return total % p


def rref_mod(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 0
    return len(rref_mod(rows, p)[1])


def projective_points(dim: int, p: int) -> Iterator[tuple[int, ...]]:
    """Normalized representatives of P^dim(F_p): last nonzero coordinate is 1."""
    for lead in range(dim + 1):
        # coordinates after ``lead`` are zero, coordinate ``lead`` is 1
        for head in product(range(p), repeat=lead):
            yield head + (1,) + (0,) * (dim - lead)


class GF2:
    """Elements ``a + b*s`` of F_{p^2} where ``s^2 = nonresidue``."""

    __slots__ = ("a", "b", "p", "nr")

    def __init__(self, a: int, b: int, p: int, nr: int):
        self.a, self.b, self.p, self.nr = a % p, b % p, p, nr

    def __add__(self, o: "GF2") -> "GF2":
        return GF2(self.a + o.a, self.b + o.b, self.p, self.nr)

    def __mul__(self, o) -> "GF2":
        if isinstance(o, int):
            return GF2(self.a * o, self.b * o, self.p, self.nr)
        return GF2(
            self.a * o.a + self.nr * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.p,
            self.nr,
        )

    def __pow__(self, e: int) -> "GF2":
        out = GF2(1, 0, self.p, self.nr)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def quadratic_nonresidue(p: int) -> int:
    if p == 2:
        raise ValueError("F_4 is not supported; use an odd prime")
    return next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)


def gf2_elements(p: int) -> list[GF2]:
    nr = quadratic_nonresidue(p)
    return [GF2(a, b, p, nr) for b in range(p) for a in range(p)]


def eval_gf2(terms: dict[tuple[int, ...], int], point: Sequence[GF2]) -> GF2:
    p, nr = point[0].p, point[0].nr
    total = GF2(0, 0, p, nr)
    for exp, c in terms.items():
        term = GF2(c, 0, p, nr)
        for x, e in zip(point, exp):
            if e:
                term = term * x**e
        total = total + term
    return total


def projective_points_gf2(dim: int, p: int) -> Iterator[tuple[GF2, ...]]:
    elems = gf2_elements(p)
    one, zero = elems[1], elems[0]
    for lead in range(dim + 1):
        for head in product(elems, repeat=lead):
            yield head + (one,) + (zero,) * (dim - lead)
