"""Exhaustive desk-scale searches over group elements.

Enumeration by norm feeds two consumers: the depth function (least norm of a
nontrivial element in the k-th lower central term) and the sweep that checks
depth <= norm for every element up to a norm bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .magnus import in_dimension_subgroup, lcs_depth
from .words import GroupWord, commutator


def _sort_key(word):
    idx = word.graph.index
    return (word.norm(), tuple((idx(s), e) for s, e in word.syllables))


def enumerate_elements(graph, max_norm):
    """All distinct nontrivial elements of norm <= max_norm.

    Walks freely reduced strings over the generators and their inverses,
    canonicalizes, and deduplicates; results come back sorted by (norm, lex).
    Cost grows exponentially with max_norm.
    """
    if max_norm < 0:
        raise ValueError("max_norm must be >= 0")
    letters = [(s, 1) for s in graph.vertices] + [(s, -1) for s in graph.vertices]
    found = {}
    level = [()]
    for _ in range(max_norm):
        grown = []
        for string in level:
            for s, e in letters:
                if string and string[-1] == (s, -e):
                    continue
                grown.append(string + ((s, e),))
        level = grown
        for string in level:
            word = GroupWord(graph, string).canonical()
            if word.syllables and word.syllables not in found:
                found[word.syllables] = word
    return sorted(found.values(), key=_sort_key)


@dataclass(frozen=True)
class DepthFunctionRow:
    """Least norm among nontrivial elements of the k-th lower central term.

    kind "exact" carries the norm and the first witness in enumeration order;
    kind "at_least" records that nothing was found up to the searched bound,
    with norm = searched max_norm + 1.
    """

    k: int
    kind: str
    norm: int
    minimal_witness: Optional[GroupWord] = None


def depth_function(graph, k, max_norm):
    """Depth function value at k by exhaustive scan of norms <= max_norm."""
    if graph.is_complete():
        raise ValueError(
            "complete graph: the group is free abelian, hence nilpotent, and "
            "deep lower central terms are trivial")
    if k < 1:
        raise ValueError("k must be >= 1")
    for word in enumerate_elements(graph, max_norm):
        if in_dimension_subgroup(word, k):
            return DepthFunctionRow(k, "exact", word.norm(), word)
    return DepthFunctionRow(k, "at_least", max_norm + 1)


def commutator_witness(graph, k):
    """Left-normed commutator [..[[s,t],t].., t] of weight k.

    s, t is the first non-adjacent vertex pair in declaration order; the
    result lies in the k-th lower central term by construction.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    verts = graph.vertices
    pair = None
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if not graph.are_adjacent(verts[i], verts[j]):
                pair = (verts[i], verts[j])
                break
        if pair:
            break
    if pair is None:
        raise ValueError("complete graph: every pair of generators commutes")
    s, t = pair
    word = GroupWord(graph, [(s, 1)])
    step = GroupWord(graph, [(t, 1)])
    for _ in range(k - 1):
        word = commutator(word, step).reduced()
    return word


@dataclass
class VerifyReport:
    """Outcome of the depth <= norm sweep up to max_norm."""

    max_norm: int
    checked: int
    cells: dict        # (norm, depth) -> element count
    violations: list   # (word, norm, depth) with depth > norm

    @property
    def passed(self):
        return not self.violations

    def lines(self):
        out = [f"norm={n} depth={d} count={c}" for (n, d), c in sorted(self.cells.items())]
        out.append(f"checked={self.checked} max_norm={self.max_norm}")
        for word, n, d in self.violations:
            out.append(f"VIOLATION: word={word} norm={n} depth={d}")
        out.append("PASS" if self.passed else "FAIL")
        return out


def verify_depth_bound(graph, max_norm):
    """Check depth <= norm for every nontrivial element of norm <= max_norm.

    Tallies the (norm, depth) histogram and collects violations; complete
    graphs are allowed (a degenerate run where every depth is 1).
    """
    cells = {}
    violations = []
    checked = 0
    for word in enumerate_elements(graph, max_norm):
        n = word.norm()
        d = lcs_depth(word).depth
        checked += 1
        cells[(n, d)] = cells.get((n, d), 0) + 1
        if d > n:
            violations.append((word, n, d))
    return VerifyReport(max_norm, checked, cells, violations)
