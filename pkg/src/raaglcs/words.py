"""Syllable words over a commutation graph and traces in its positive monoid.

Two words represent the same group element exactly when their canonical forms
coincide: full reduction makes the word's syllable multiset unique up to swaps
of adjacent commuting syllables, and the lexicographically least arrangement
is a well-defined representative of that swap class.
"""

from __future__ import annotations

import re
from functools import lru_cache


class GroupWord:
    """A word s1^e1 ... sn^en over the vertices of a commutation graph.

    Construction is purely syntactic: nothing is cancelled or reordered until
    `reduced()` or `canonical()` is called.  Instances are immutable.
    """

    __slots__ = ("graph", "syllables", "_reduced", "_canonical")

    def __init__(self, graph, syllables=()):
        checked = []
        for gen, exp in syllables:
            graph.index(gen)
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise ValueError(f"exponent for {gen!r} must be an integer, got {exp!r}")
            checked.append((gen, exp))
        self.graph = graph
        self.syllables = tuple(checked)
        self._reduced = None
        self._canonical = None

    def reduced(self):
        """Equivalent fully reduced word.

        Repeatedly merge two equal-generator syllables whenever every syllable
        between them commutes with that generator, dropping zero exponents;
        each merge shortens the word, so this terminates at a fixpoint where
        equal generators are always separated by a non-commuting one.
        """
        if self._reduced is not None:
            return self._reduced
        graph = self.graph
        syls = [(s, e) for s, e in self.syllables if e != 0]
        changed = True
        while changed:
            changed = False
            for i in range(len(syls)):
                gen = syls[i][0]
                for j in range(i + 1, len(syls)):
                    other = syls[j][0]
                    if other == gen:
                        exp = syls[i][1] + syls[j][1]
                        head = syls[:i]
                        if exp:
                            head.append((gen, exp))
                        syls = head + syls[i + 1:j] + syls[j + 1:]
                        changed = True
                        break
                    if not graph.are_adjacent(gen, other):
                        break
                if changed:
                    break
        word = GroupWord(graph, syls)
        word._reduced = word
        self._reduced = word
        return word

    def is_fully_reduced(self):
        return self.syllables == self.reduced().syllables

    def canonical(self):
        """The lexicographically least fully reduced representative.

        Greedy: repeatedly emit the least movable syllable, where a syllable
        is movable iff its generator differs from and commutes with every
        earlier unemitted generator.  Syllables compare by (generator order,
        exponent ascending).
        """
        if self._canonical is not None:
            return self._canonical
        graph = self.graph
        idx = graph.index
        pending = list(self.reduced().syllables)
        out = []
        while pending:
            best_key = None
            best_pos = 0
            for pos, (gen, exp) in enumerate(pending):
                movable = True
                for earlier, _ in pending[:pos]:
                    if earlier == gen or not graph.are_adjacent(gen, earlier):
                        movable = False
                        break
                if movable:
                    key = (idx(gen), exp)
                    if best_key is None or key < best_key:
                        best_key = key
                        best_pos = pos
            out.append(pending.pop(best_pos))
        word = GroupWord(graph, out)
        word._reduced = word
        word._canonical = word
        self._canonical = word
        return word

    def equals(self, other):
        """True iff both words represent the same group element."""
        if self.graph != other.graph:
            raise ValueError("words live over different graphs")
        return self.canonical().syllables == other.canonical().syllables

    def is_identity(self):
        return not self.reduced().syllables

    def norm(self):
        """Geodesic word length: the sum of |e_i| over the fully reduced form."""
        return sum(abs(e) for _, e in self.reduced().syllables)

    def __mul__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        if self.graph != other.graph:
            raise ValueError("words live over different graphs")
        return GroupWord(self.graph, self.syllables + other.syllables)

    def inverse(self):
        return GroupWord(self.graph, [(s, -e) for s, e in reversed(self.syllables)])

    def to_trace(self):
        """Canonical trace of a positive word; rejects nonpositive exponents."""
        letters = []
        for gen, exp in self.syllables:
            if exp <= 0:
                raise ValueError(f"nonpositive exponent {exp} on {gen!r}; traces take positive words")
            letters.extend([gen] * exp)
        return Trace(self.graph, letters)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.syllables)

    def __repr__(self):
        return f"<GroupWord {self}>"


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@lru_cache(maxsize=1 << 18)
def _lex_least_letters(graph, letters):
    # Greedy linearization: repeatedly pull out the least letter that differs
    # from and commutes with everything before it.
    if len(letters) < 2:
        return letters
    idx = graph.index
    pending = list(letters)
    out = []
    while pending:
        best = None
        best_pos = 0
        for pos, a in enumerate(pending):
            blocked = False
            for b in pending[:pos]:
                if b == a or not graph.are_adjacent(a, b):
                    blocked = True
                    break
            if not blocked and (best is None or idx(a) < idx(best)):
                best = a
                best_pos = pos
        out.append(pending.pop(best_pos))
    return tuple(out)


class Trace:
    """A positive monoid element, stored as its lex-least letter sequence.

    All words for the same trace have the same length, so `length` is
    well-defined.  Traces are hashable values and multiply by concatenation
    followed by re-canonicalization.
    """

    __slots__ = ("graph", "letters", "_hash")

    def __init__(self, graph, letters=()):
        letters = tuple(letters)
        for a in letters:
            graph.index(a)
        self.graph = graph
        self.letters = _lex_least_letters(graph, letters)
        self._hash = hash((graph, self.letters))

    @property
    def length(self):
        return len(self.letters)

    def sort_key(self):
        idx = self.graph.index
        return (len(self.letters), tuple(idx(a) for a in self.letters))

    def __mul__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        if self.graph != other.graph:
            raise ValueError("traces live over different graphs")
        return Trace(self.graph, self.letters + other.letters)

    def is_square_free(self):
        """True iff no word representing this trace has two consecutive equal letters.

        Reducing the unit-exponent word detects exactly the failures: a merge
        happens iff some representative brings two equal letters together.
        """
        word = GroupWord(self.graph, [(a, 1) for a in self.letters]).reduced()
        return len(word.syllables) == len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.letters == other.letters and self.graph == other.graph

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "*".join(self.letters) if self.letters else "ε"

    def __repr__(self):
        return f"<Trace {self}>"


_SYLLABLE_RE = re.compile(r"[A-Za-z0-9_]+(?:\^[+-]?\d+)?")


def parse_syllables(text):
    """Parse word syntax into raw (generator, exponent) pairs.

    Grammar: whitespace-separated syllables `gen` or `gen^E` with E a nonzero
    signed integer, the bare literal `1` for the identity, and nestable
    commutator brackets `[w1,w2]`.  (A vertex literally named "1" cannot be
    referenced bare; `1^E` still parses as that generator.)
    """
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "[],":
            tokens.append(ch)
            pos += 1
            continue
        match = _SYLLABLE_RE.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse word at {text[pos:pos + 12]!r}")
        tokens.append(match.group(0))
        pos = match.end()

    def parse_seq(i):
        out = []
        while i < len(tokens) and tokens[i] not in ("]", ","):
            if tokens[i] == "[":
                left, i = parse_seq(i + 1)
                if i >= len(tokens) or tokens[i] != ",":
                    raise ValueError("expected ',' inside commutator brackets")
                right, i = parse_seq(i + 1)
                if i >= len(tokens) or tokens[i] != "]":
                    raise ValueError("expected ']' closing commutator brackets")
                i += 1
                out.extend(left)
                out.extend(right)
                out.extend((s, -e) for s, e in reversed(left))
                out.extend((s, -e) for s, e in reversed(right))
            else:
                token = tokens[i]
                i += 1
                if token == "1":
                    continue
                name, _, exp = token.partition("^")
                if not exp:
                    out.append((name, 1))
                else:
                    value = int(exp)
                    if value == 0:
                        raise ValueError(f"zero exponent in {token!r}")
                    out.append((name, value))
        return out, i

    syllables, i = parse_seq(0)
    if i != len(tokens):
        raise ValueError(f"unexpected {tokens[i]!r} in word")
    return syllables


def parse_word(text, graph):
    """Parse word syntax against a graph, validating generator names."""
    return GroupWord(graph, parse_syllables(text))
