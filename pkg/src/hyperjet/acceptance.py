"""Exit criteria for the package, runnable from pytest or ``hyperjet selftest``.

Every criterion is an exact check; each also has a wall-clock budget in
seconds.  ``quick=True`` shrinks the random sample counts (never the
tolerances) for a fast smoke run.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import MultiPoly, series_derivative
from .bounds import b_coeffs, debarre_bound, decompose, dt_bound, kobayashi_bound
from .fermat import FermatSpec, build_section, diagonal_coeffs, random_coeffs, smoothness_probe
from .incidence import (
    ChartIdeal,
    GrassCurveSpec,
    local_length,
    plucker_degree,
    plucker_degrees,
    verify_product_mult,
    verify_single_mult,
)
from .jets import derive, eval_on_germ, weighted_degree
from .samples import (
    random_germ,
    random_high_order_perturbation,
    random_jetpoly,
    random_poly,
    random_reparam,
    random_unit_at,
    random_wronskian_input,
)
from .wronskian import (
    WronskianInput,
    check_jet_dependence,
    check_reparam_invariance,
    check_trivialization,
    wronskian,
    wronskian_series_oracle,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    budget: float
    failures: list[str] = field(default_factory=list)
    checks: int = 0
    seconds: float = 0.0

    @property
    def exact_ok(self) -> bool:
        return not self.failures

    @property
    def time_ok(self) -> bool:
        return self.seconds < self.budget

    @property
    def passed(self) -> bool:
        return self.exact_ok and self.time_ok

    def expect(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = f"{self.checks} checks, {self.seconds:.2f}s / {self.budget:g}s"
        if self.failures:
            detail += f"; first failure: {self.failures[0]}"
        elif not self.time_ok:
            detail += "; over time budget"
        return f"[{status}] {self.number}. {self.name} ({detail})"

    def as_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "seconds": round(self.seconds, 3),
            "budget": self.budget,
            "failures": self.failures[:10],
        }


def _timed(number: int, name: str, budget: float):
    def wrap(fn: Callable[[CriterionResult, int, bool], None]):
        def run(seed: int = 0, quick: bool = False) -> CriterionResult:
            res = CriterionResult(number, name, budget)
            start = time.perf_counter()
            fn(res, seed, quick)
            res.seconds = time.perf_counter() - start
            return res

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


@_timed(1, "bound formulas", 1.0)
def bound_formulas(res: CriterionResult, seed: int, quick: bool) -> None:
    for n, exact, simple in [(2, 269, 384), (3, 61274, 78732)]:
        b = kobayashi_bound(n)
        res.expect(b.exact == exact, f"kobayashi({n}).exact={b.exact}, want {exact}")
        res.expect(b.simplified == simple, f"kobayashi({n}).simplified={b.simplified}, want {simple}")
        res.expect(b.exact <= b.simplified, f"kobayashi({n}) exceeds simplified bound")
    d = debarre_bound(3)
    res.expect(d.exact == 25011 and d.simplified == 46656, f"debarre(3)={d.exact}, {d.simplified}")
    res.expect(d.exact <= d.simplified, "debarre(3) exceeds simplified bound")
    res.expect(d.params["generic_form"] == d.params["closed_form"], "debarre routes disagree")
    t = dt_bound(3, 1)
    res.expect(t.exact == 61265 and t.simplified == 118098, f"dt(3,1)={t.exact}, {t.simplified}")
    res.expect(t.exact <= t.simplified, "dt(3,1) exceeds simplified bound")
    res.expect(dt_bound(2, 1).exact == 265, f"dt(2,1)={dt_bound(2, 1).exact}")


@_timed(2, "degree decomposition", 1.0)
def degree_decomposition(res: CriterionResult, seed: int, quick: bool) -> None:
    dec = decompose(265, 2, 1)
    got = None if dec is None else (dec.eps, dec.r, dec.delta0, dec.k)
    res.expect(got == (1, 65, 4, 1), f"decompose(265,2,1) = {got}")
    rng = random.Random(seed)
    pairs = [(n, c) for n in range(2, 7) for c in range(1, n)]
    for _ in range(100 if quick else 500):
        n, c = rng.choice(pairs)
        d0 = dt_bound(n, c).exact
        d = d0 + rng.randrange(0, 2 * d0)
        dec = decompose(d, n, c)
        if dec is None:
            res.expect(False, f"decompose({d},{n},{c}) infeasible above d0={d0}")
            continue
        res.expect(d == dec.delta0 * (dec.r + dec.k) + dec.eps, f"reconstruction fails at d={d}")
        res.expect(dec.k <= dec.eps < dec.k + dec.delta0, f"eps window fails at d={d}")
        b = dec.delta0 ** (c * (dec.k + 1) - 1)
        rhs = sum(b * (dec.k + 1) * (dec.eps + dec.k * dec.delta0) for _ in range(c))
        res.expect(dec.r > rhs, f"r-inequality fails at d={d}, n={n}, c={c}")
    res.expect(decompose(264, 2, 1) is None, "decompose(d0 - 1) should be infeasible")


@_timed(3, "derivation oracle", 10.0)
def derivation_oracle(res: CriterionResult, seed: int, quick: bool) -> None:
    rng = random.Random(seed)
    for trial in range(50 if quick else 200):
        n, k, order = rng.randint(1, 3), rng.randint(0, 3), rng.randint(0, 3)
        q = random_jetpoly(rng, n, k)
        f = random_germ(rng, n, k + 1 + order)
        lhs = eval_on_germ(derive(q), f, order)
        rhs = series_derivative(eval_on_germ(q, f, order + 1))
        res.expect(lhs == rhs, f"trial {trial}: {q} on {f}")


@_timed(4, "wronskian identities", 30.0)
def wronskian_identities(res: CriterionResult, seed: int, quick: bool) -> None:
    rng = random.Random(seed)
    scale = 4 if quick else 1
    # (a) oracle equivalence
    for trial in range(200 // scale):
        n, k, order = rng.randint(1, 3), rng.randint(0, 3), rng.randint(0, 4)
        inp = random_wronskian_input(rng, n, k)
        f = random_germ(rng, n, k + order)
        w = wronskian(inp)
        res.expect(
            eval_on_germ(w, f, order) == wronskian_series_oracle(inp, f, order),
            f"(a) trial {trial}",
        )
        res.expect(
            w.is_zero() or weighted_degree(w) == inp.weight, f"(a) weight of trial {trial}"
        )
    # (b) reparametrization covariance
    for trial in range(100 // scale):
        n, k = rng.randint(1, 3), rng.randint(0, 3)
        inp = random_wronskian_input(rng, n, k)
        order = max(k, 1)
        f = random_germ(rng, n, order)
        rep = check_reparam_invariance(inp, f, random_reparam(rng, order))
        res.expect(rep.equal, f"(b) trial {trial}: {rep}")
    # (c) alternating and multilinear
    for trial in range(40 // scale):
        n, k = rng.randint(1, 3), rng.randint(1, 3)
        inp = random_wronskian_input(rng, n, k)
        w = wronskian(inp)
        i, j = rng.sample(range(k + 1), 2)
        g = list(inp.g)
        rep = list(g)
        rep[j] = g[i]
        res.expect(wronskian(WronskianInput(k, tuple(rep))).is_zero(), f"(c) repeat {trial}")
        sw = list(g)
        sw[i], sw[j] = sw[j], sw[i]
        res.expect(wronskian(WronskianInput(k, tuple(sw))) == -w, f"(c) swap {trial}")
        extra = random_poly(rng, n)
        lam = rng.randint(-4, 4)
        add = wronskian(inp.replace(i, g[i] + extra))
        res.expect(add == w + wronskian(inp.replace(i, extra)), f"(c) additivity {trial}")
        res.expect(wronskian(inp.replace(i, g[i] * lam)) == w * lam, f"(c) homogeneity {trial}")
    # (d) trivialization independence
    for trial in range(40 // scale):
        n, k = rng.randint(1, 3), rng.randint(0, 3)
        inp = random_wronskian_input(rng, n, k)
        f = random_germ(rng, n, k)
        unit = random_unit_at(rng, f.base_point())
        lhs, rhs = check_trivialization(inp, unit, f)
        res.expect(lhs == rhs, f"(d) trial {trial}: {lhs} != {rhs}")
    # (e) k-jet dependence
    for trial in range(40 // scale):
        n, k = rng.randint(1, 3), rng.randint(0, 3)
        inp = random_wronskian_input(rng, n, k)
        point = [rng.randint(-2, 2) for _ in range(n)]
        h = random_high_order_perturbation(rng, point, k + 1)
        report = check_jet_dependence(inp, h, point, trials=3, seed=seed + trial)
        res.expect(report.equal, f"(e) trial {trial}")


@_timed(5, "intersection multiplicities", 60.0)
def intersection_multiplicities(res: CriterionResult, seed: int, quick: bool) -> None:
    for N, delta in itertools.product((2, 3, 4), (1, 2, 3, 4)):
        rep = verify_single_mult(N, delta)
        res.expect(rep.computed == delta ** (N - 1), f"single ({N},{delta}) -> {rep.computed}")
    for c in (1, 2, 3):
        for k in (0, 1, 2):
            for deltas in itertools.product((1, 2, 3), repeat=c):
                if quick and len(set(deltas)) == c == 3:
                    continue
                b = b_coeffs(deltas, k)
                for i in range(1, c + 1):
                    rep = verify_product_mult(c, k, deltas, i)
                    res.expect(
                        rep.computed == b[i - 1],
                        f"product c={c} k={k} deltas={deltas} i={i}: {rep.computed} != {b[i - 1]}",
                    )
    two_three = [verify_product_mult(2, 1, (2, 3), i).computed for i in (1, 2)]
    res.expect(two_three == [18, 12], f"(2,1,(2,3)) -> {two_three}")


@_timed(6, "pluecker degrees", 5.0)
def pluecker_degrees(res: CriterionResult, seed: int, quick: bool) -> None:
    for N, delta in itertools.product((2, 3), (2, 3)):
        d = plucker_degree(GrassCurveSpec("single", N=N, delta=delta))
        res.expect(d == 1, f"single ({N},{delta}) degree {d}")
    for c in (1, 2, 3):
        for k in (0, 1, 2):
            for deltas in itertools.product((1, 2, 3), repeat=c):
                for i in range(1, c + 1):
                    degs = plucker_degrees(GrassCurveSpec("product", c=c, k=k, deltas=deltas, i=i))
                    want = [int(m == i) for m in range(1, c + 1)]
                    res.expect(degs == want, f"product c={c} k={k} {deltas} i={i}: {degs}")


# diagonal Fermat forms used by the smoothness probe; degrees 2 and 3 are prime to 7
PROBE_SPECS = [FermatSpec(2, 0, 1, 1, 1), FermatSpec(3, 0, 1, 2, 1)]


@_timed(7, "fermat sections", 30.0)
def fermat_sections(res: CriterionResult, seed: int, quick: bool) -> None:
    rng = random.Random(seed)
    for trial in range(25 if quick else 100):
        spec = FermatSpec(
            rng.randint(1, 3), rng.randint(0, 2), rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 2)
        )
        sigma = build_section(spec, random_coeffs(spec, rng))
        ok = sigma.is_zero() or (sigma.is_homogeneous() and sigma.total_degree() == spec.degree)
        res.expect(ok, f"trial {trial}: degree {sigma.total_degree()} != {spec.degree}")
    for probe_seed in range(seed, seed + 5):
        for spec in PROBE_SPECS:
            sigma = build_section(spec, diagonal_coeffs(spec))
            rep = smoothness_probe([sigma], 200, 7, seed=probe_seed)
            res.expect(rep.tested == 200, f"only {rep.tested} zeros sampled")
            res.expect(not rep.failures, f"false alarm at {rep.failures[:3]} (seed {probe_seed})")
            degenerate = MultiPoly.var(0, spec.n + 1) ** spec.degree
            bad = smoothness_probe([degenerate], 200, 7, seed=probe_seed)
            res.expect(bool(bad.failures), f"degenerate z0^{spec.degree} not flagged (seed {probe_seed})")


@_timed(8, "local length oracle", 10.0)
def local_length_oracle(res: CriterionResult, seed: int, quick: bool) -> None:
    rng = random.Random(seed)
    for trial in range(20 if quick else 50):
        m = rng.randint(1, 4)
        a = [rng.randint(1, 4) for _ in range(m)]
        gens = tuple(MultiPoly.var(j, m) ** a[j] for j in range(m))
        ideal = ChartIdeal(tuple(f"x{j}" for j in range(m)), gens, (0,) * m)
        got = local_length(ideal, split=False)
        want = 1
        for x in a:
            want *= x
        res.expect(got == want, f"exponents {a}: {got} != {want}")


CRITERIA = [
    bound_formulas,
    degree_decomposition,
    derivation_oracle,
    wronskian_identities,
    intersection_multiplicities,
    pluecker_degrees,
    fermat_sections,
    local_length_oracle,
]


def run_all(seed: int = 0, quick: bool = False) -> list[CriterionResult]:
    return [crit(seed=seed, quick=quick) for crit in CRITERIA]
