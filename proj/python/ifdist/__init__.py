"""Interpolating-family size distributions.

Every function taking ``dist`` accepts either an :class:`IFParams` or a spec
string such as ``"if(p=2,b=3,c=1,q=2,x0=0)"`` or ``"pareto1(q=2,x0=1)"``.
"""

from ._core import (
    IFParams,
    NonConvergence,
    Unsupported,
    cases,
    cdf,
    entropy,
    logpdf,
    moment,
    parse,
    pdf,
    quantile,
    resolve,
    sample,
    sf,
    verify,
)

__all__ = [
    "IFParams",
    "NonConvergence",
    "Unsupported",
    "cases",
    "cdf",
    "entropy",
    "logpdf",
    "moment",
    "parse",
    "pdf",
    "quantile",
    "resolve",
    "sample",
    "sf",
    "verify",
]
