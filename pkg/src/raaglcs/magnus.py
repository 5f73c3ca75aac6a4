"""Magnus-type representation into unit series and the depth read off from it.

Each generator s maps to 1 + s, which is invertible in the truncated series
ring; the image of a word is the product of its syllable factors.  An element
lies in the k-th dimension subgroup iff its image is 1 plus terms of degree
at least k, and for graph groups that filtration coincides with the lower
central series, so the minimal positive degree in the image is the element's
exact lower-central-series depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .series import TruncatedSeries
from .words import Trace


def syllable_factor(graph, s, e, cap):
    """(1 + s)^e truncated below cap.

    The degree-k coefficient is the generalized binomial C(e, k), so negative
    exponents expand by the alternating geometric series.
    """
    if e == 0:
        raise ValueError("exponent must be nonzero")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    graph.index(s)
    terms = []
    coeff = 1
    for k in range(cap):
        if k:
            coeff = coeff * (e - k + 1) // k  # exact: binomials are integers
        if coeff == 0:
            break
        terms.append((Trace(graph, (s,) * k), coeff))
    return TruncatedSeries(graph, cap, terms)


def mu(word, cap):
    """Image of a word under generator -> 1 + generator, truncated below cap."""
    out = TruncatedSeries.one(word.graph, cap)
    for s, e in word.syllables:
        if e:
            out = out * syllable_factor(word.graph, s, e, cap)
    return out


def in_dimension_subgroup(word, k):
    """True iff the series image of the word is 1 + (terms of degree >= k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return mu(word, k) == TruncatedSeries.one(word.graph, k)


@dataclass(frozen=True)
class DepthResult:
    """Depth of an element in the lower central series.

    kind is "exact" (depth is exactly `depth`), "at_least" (nothing below the
    searched cap, so depth >= `bound`), or "infinite" (identity element).
    witness_trace is the lex-least trace at the minimal nonzero degree.
    """

    kind: str
    depth: Optional[int] = None
    bound: Optional[int] = None
    witness_trace: Optional[Trace] = None

    @classmethod
    def exact(cls, depth, witness_trace=None):
        return cls("exact", depth=depth, witness_trace=witness_trace)

    @classmethod
    def at_least(cls, bound):
        return cls("at_least", bound=bound)

    @classmethod
    def infinite(cls):
        return cls("infinite")


def _depth_at_cap(reduced, cap):
    series = mu(reduced, cap)
    degree = series.min_positive_degree()
    if degree is None:
        return DepthResult.at_least(cap)
    for trace in series.terms:  # (degree, lex) order: first hit is the witness
        if trace.length == degree:
            return DepthResult.exact(degree, trace)
    raise AssertionError("unreachable")


def lcs_depth(word, cap=None):
    """Largest k such that the element lies in the k-th lower central term.

    The default cap of norm + 1 always suffices for an exact answer on a
    nontrivial element, because the leading square-free term of the image
    survives in degree <= norm.  The search raises the cap incrementally, so
    shallow elements (the common case) stay cheap; coefficients below a cap
    do not depend on it, so the answer matches a single full-cap computation.
    A caller-lowered cap may return an at_least bound instead.
    """
    reduced = word.reduced()
    if not reduced.syllables:
        return DepthResult.infinite()
    if cap is not None:
        return _depth_at_cap(reduced, cap)
    limit = reduced.norm() + 1
    for c in range(2, limit + 1):
        result = _depth_at_cap(reduced, c)
        if result.kind == "exact":
            return result
    return DepthResult.at_least(limit)
