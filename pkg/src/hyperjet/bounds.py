"""Effective degree bounds, the degree decomposition, and the k-jet hypothesis check.

All arithmetic is on Python integers, so nothing overflows.  Every report
keeps the intermediate constants so each line of the derivation can be
re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundReport:
    name: str
    n: int
    c: int
    k: int
    delta0: int
    exact: int
    simplified: int
    params: dict = field(default_factory=dict)

    @property
    def within_simplified(self) -> bool:
        return self.exact <= self.simplified

    def as_dict(self) -> dict:
        return {
            "bound": self.name,
            "n": self.n,
            "c": self.c,
            "k": self.k,
            "delta0": self.delta0,
            "exact": self.exact,
            "simplified": self.simplified,
            "exact_le_simplified": self.within_simplified,
            "params": dict(self.params),
        }


def generic_d0(c: int, k: int, delta0: int) -> int:
    """``delta0 * (c(k+1)(k + delta0 + k delta0 - 1) delta0^(c(k+1)-1) + 1 + k) + k``."""
    x = c * (k + 1) * (k + delta0 + k * delta0 - 1) * delta0 ** (c * (k + 1) - 1)
    return delta0 * (x + 1 + k) + k


def kobayashi_bound(n: int) -> BoundReport:
    """Hypersurface bound with ``k = n - 1``, ``delta = n^2``, ``m_inf = k``, ``M = delta^k``."""
    if n < 2:
        raise ValueError("kobayashi bound needs n >= 2")
    k = n - 1
    delta = n * n
    m_inf = k
    big_m = delta**k
    big_r = big_m * (k + 1) * (m_inf + delta - 1 + k * delta) + 1
    exact = m_inf + delta + (big_r + k) * delta
    simplified = n ** (2 * n + 3) * (n + 1)
    return BoundReport(
        "kobayashi",
        n,
        1,
        k,
        delta,
        exact,
        simplified,
        {"delta": delta, "m_inf": m_inf, "M": big_m, "R": big_r},
    )


def debarre_bound(n: int) -> BoundReport:
    if n < 2:
        raise ValueError("debarre bound needs n >= 2")
    c = ceil_div(n, 2)
    k = 1
    delta0 = 2 * n - 1
    closed = 4 * delta0 ** (2 * c + 1) * c + 2 * delta0 + 1
    generic = generic_d0(c, k, delta0)
    return BoundReport(
        "debarre",
        n,
        c,
        k,
        delta0,
        closed,
        (2 * n) ** (n + 3),
        {"closed_form": closed, "generic_form": generic, "routes_agree": closed == generic},
    )


def dt_bound(n: int, c: int) -> BoundReport:
    if not 1 <= c <= n - 1:
        raise ValueError(f"need 1 <= c <= n - 1, got n={n}, c={c}")
    q = ceil_div(n, c)
    k = q - 1
    delta0 = n * (k + 1)
    b = delta0 ** (c * (k + 1) - 1)
    exact = generic_d0(c, k, delta0)
    middle = delta0 ** (c * (k + 1)) * c * (k + 1) ** 2 * (delta0 + 1)
    simplified = 2 * c * n ** (c * q + 1) * q ** (c * q + 3)
    return BoundReport(
        "dt",
        n,
        c,
        k,
        delta0,
        exact,
        simplified,
        {"b": b, "intermediate": middle},
    )


def b_coeffs(deltas: Sequence[int], k: int) -> list[int]:
    if any(d < 1 for d in deltas):
        raise ValueError("all degrees must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    total = prod(d ** (k + 1) for d in deltas)
    out = []
    for d in deltas:
        q, r = divmod(total, d)
        assert r == 0
        out.append(q)
    return out


@dataclass(frozen=True)
class Decomposition:
    d: int
    n: int
    c: int
    eps: int
    r: int
    delta0: int
    k: int
    d0: int
    r_threshold: int

    @property
    def satisfies_r_bound(self) -> bool:
        return self.r > self.r_threshold

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "c": self.c,
            "eps": self.eps,
            "r": self.r,
            "delta0": self.delta0,
            "k": self.k,
            "d0": self.d0,
            "r_threshold": self.r_threshold,
            "r_bound_holds": self.satisfies_r_bound,
        }


def decompose(d: int, n: int, c: int) -> Decomposition | None:
    """Write ``d = delta0 (r + k) + eps`` with ``k <= eps < k + delta0``.

    Returns ``None`` below the threshold ``d0(n, c)``.  The strict inequality
    on ``r`` is recomputed, not assumed; see ``Decomposition.satisfies_r_bound``.
    """
    report = dt_bound(n, c)
    k, delta0, d0 = report.k, report.delta0, report.exact
    if d < d0:
        return None
    candidates = [e for e in range(k, k + delta0) if (d - e - k * delta0) % delta0 == 0]
    if len(candidates) != 1:
        raise AssertionError(f"residue window produced {candidates} for d={d}")
    eps = candidates[0]
    r = (d - eps) // delta0 - k
    b = delta0 ** (c * (k + 1) - 1)
    threshold = c * b * (k + 1) * (eps + k * delta0)
    return Decomposition(d, n, c, eps, r, delta0, k, d0, threshold)


@dataclass(frozen=True)
class KJetVerdict:
    n: int
    c: int
    k: int
    delta0: int
    b: tuple[int, ...]
    r_threshold: int
    deltas_ok: bool
    eps_ok: bool
    r_ok: bool
    degrees: tuple[int, ...]

    @property
    def verdict(self) -> bool:
        return self.deltas_ok and self.eps_ok and self.r_ok

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "k": self.k,
            "delta0": self.delta0,
            "b": list(self.b),
            "r_threshold": self.r_threshold,
            "deltas_ok": self.deltas_ok,
            "eps_ok": self.eps_ok,
            "r_ok": self.r_ok,
            "degrees": list(self.degrees),
            "verdict": self.verdict,
        }


def kjet_check(
    n: int, c: int, eps: Sequence[int], deltas: Sequence[int], r: int
) -> KJetVerdict:
    if not 1 <= c <= n - 1:
        raise ValueError(f"need 1 <= c <= n - 1, got n={n}, c={c}")
    if len(eps) != c or len(deltas) != c:
        raise ValueError(f"eps and deltas must both have length c={c}")
    k = ceil_div(n, c) - 1
    delta0 = n * (k + 1)
    deltas_ok = all(d >= delta0 for d in deltas)
    eps_ok = all(e >= k for e in eps)
    b = b_coeffs(deltas, k) if all(d >= 1 for d in deltas) else [0] * c
    threshold = sum(bi * (k + 1) * (e + k * d) for bi, e, d in zip(b, eps, deltas))
    degrees = tuple(e + (r + k) * d for e, d in zip(eps, deltas))
    return KJetVerdict(
        n, c, k, delta0, tuple(b), threshold, deltas_ok, eps_ok, r > threshold, degrees
    )
