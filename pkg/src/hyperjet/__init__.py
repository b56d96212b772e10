"""Exact jet calculus, Wronskians, Fermat-type families and effective degree bounds."""

from .algebra import CurveGerm, MultiPoly, ReparamGerm, TruncatedSeries, poly_eval_germ
from .jets import JetPoly, d_pow, derive, eval_on_germ, weighted_degree
from .wronskian import WronskianInput, wronskian, wronskian_series_oracle

__all__ = [
    "CurveGerm",
    "JetPoly",
    "MultiPoly",
    "ReparamGerm",
    "TruncatedSeries",
    "WronskianInput",
    "d_pow",
    "derive",
    "eval_on_germ",
    "poly_eval_germ",
    "weighted_degree",
    "wronskian",
    "wronskian_series_oracle",
]
