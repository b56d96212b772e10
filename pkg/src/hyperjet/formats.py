"""JSON interchange documents for polynomials, series, jet polynomials and specs."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from .algebra import CurveGerm, MultiPoly, ReparamGerm, TruncatedSeries
from .fermat import FermatSpec, diagonal_coeffs, random_coeffs, zero_coeffs
from .incidence import GrassCurveSpec, GrassPointFq
from .jets import JetPoly
from .wronskian import WronskianInput


class FormatError(ValueError):
    """Malformed interchange document."""


def scalar_doc(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def scalar_from_doc(doc) -> Fraction:
    if isinstance(doc, int):
        return Fraction(doc)
    if isinstance(doc, str):
        return Fraction(doc)
    try:
        return Fraction(int(doc["num"]), int(doc.get("den", "1")))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar {doc!r}") from exc


def poly_to_doc(p: MultiPoly) -> dict:
    return {
        "vars": p.num_vars,
        "terms": [{"exp": list(e), **scalar_doc(p.terms[e])} for e in sorted(p.terms)],
    }


def poly_from_doc(doc) -> MultiPoly:
    try:
        nv = int(doc["vars"])
        terms = {}
        for t in doc["terms"]:
            exp = tuple(int(e) for e in t["exp"])
            terms[exp] = terms.get(exp, 0) + scalar_from_doc(t)
        return MultiPoly(nv, terms)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad polynomial document: {exc}") from exc


def series_to_doc(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [scalar_doc(c) for c in s.coeffs]}


def series_from_doc(doc) -> TruncatedSeries:
    try:
        return TruncatedSeries([scalar_from_doc(c) for c in doc["coeffs"]], int(doc["order"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad series document: {exc}") from exc


def jet_to_doc(q: JetPoly) -> dict:
    doc = poly_to_doc(q.poly)
    doc["vars"] = q.n
    doc["order"] = q.k
    return doc


def jet_from_doc(doc) -> JetPoly:
    try:
        n, k = int(doc["vars"]), int(doc["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad jet document: {exc}") from exc
    poly = poly_from_doc({"vars": n * (k + 1), "terms": doc["terms"]})
    return JetPoly(n, k, poly)


def germ_from_doc(doc) -> CurveGerm:
    try:
        return CurveGerm([series_from_doc(c) for c in doc["components"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad germ document: {exc}") from exc


def reparam_from_doc(doc) -> ReparamGerm:
    s = series_from_doc(doc)
    return ReparamGerm(s.coeffs, s.order)


def wronskian_input_from_doc(doc) -> WronskianInput:
    try:
        return WronskianInput(int(doc["k"]), tuple(poly_from_doc(g) for g in doc["g"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad wronskian input: {exc}") from exc


def index_key(idx) -> str:
    return ",".join(str(i) for i in idx)


def parse_index(key: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in key.split(","))
    except ValueError as exc:
        raise FormatError(f"bad multi-index {key!r}") from exc


def fermat_from_doc(doc, rng=None) -> tuple[FermatSpec, dict]:
    """Parse ``{n, eps, delta, r, k, tau?, coeffs}``.

    ``coeffs`` is a map from index strings such as ``"2,0,1"`` to polynomial
    documents (missing indices are zero), or one of the words ``"diagonal"``
    and ``"random"``.
    """
    try:
        tau = tuple(poly_from_doc(t) for t in doc.get("tau", []))
        spec = FermatSpec(
            int(doc["n"]), int(doc["eps"]), int(doc["delta"]), int(doc["r"]), int(doc["k"]), tau
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad fermat spec: {exc}") from exc
    raw = doc.get("coeffs", {})
    if raw == "diagonal":
        return spec, diagonal_coeffs(spec)
    if raw == "random":
        return spec, random_coeffs(spec, rng or random.Random(int(doc.get("seed", 0))))
    coeffs = zero_coeffs(spec)
    for key, pdoc in raw.items():
        idx = parse_index(key)
        if idx not in coeffs:
            raise FormatError(f"index {key} is not a degree-{spec.delta} multi-index of length {spec.n + 1}")
        coeffs[idx] = poly_from_doc(pdoc)
    return spec, coeffs


def curve_spec_from_doc(doc) -> GrassCurveSpec:
    try:
        mode = doc["mode"]
        if mode == "single":
            return GrassCurveSpec("single", N=int(doc["N"]), delta=int(doc["delta"]))
        return GrassCurveSpec(
            mode,
            c=int(doc["c"]),
            k=int(doc["k"]),
            deltas=tuple(int(d) for d in doc["deltas"]),
            i=int(doc["i"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad curve spec: {exc}") from exc


def grass_point_from_doc(doc, p: int) -> GrassPointFq:
    try:
        return GrassPointFq(p, int(doc["N"]), int(doc["delta"]), tuple(tuple(r) for r in doc["rows"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad matrix document: {exc}") from exc


def load(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=_default)


def _default(obj):
    if isinstance(obj, Fraction):
        return scalar_doc(obj)
    if isinstance(obj, MultiPoly):
        return poly_to_doc(obj)
    if isinstance(obj, TruncatedSeries):
        return series_to_doc(obj)
    if isinstance(obj, JetPoly):
        return jet_to_doc(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")
