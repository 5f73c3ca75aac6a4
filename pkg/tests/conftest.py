"""Shared fixtures-as-functions: small graphs, seeded random samplers, and the
brute-force swap-closure oracle used to pin canonical forms."""

import itertools

from raaglcs import Graph, GroupWord


def f2():
    return Graph(["a", "b"])


def z2():
    return Graph(["a", "b"], [("a", "b")])


def p3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


def c4():
    return Graph(["a", "b", "c", "d"],
                 [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def k3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


def k3_minus_edge():
    return Graph(["a", "b", "c"], [("a", "c"), ("b", "c")])


def random_graph(rng, max_vertices=4):
    n = rng.randint(2, max_vertices)
    vertices = ["a", "b", "c", "d"][:n]
    edges = [pair for pair in itertools.combinations(vertices, 2)
             if rng.random() < 0.4]
    return Graph(vertices, edges)


def random_word(rng, graph, max_syllables=4, max_exp=3):
    exps = [e for e in range(-max_exp, max_exp + 1) if e != 0]
    syls = [(rng.choice(graph.vertices), rng.choice(exps))
            for _ in range(rng.randint(0, max_syllables))]
    return GroupWord(graph, syls)


def swap_closure_lex_min(word):
    """Oracle for canonical forms: breadth-first closure of single swaps of
    adjacent commuting syllables on the fully reduced word, then lex-min."""
    graph = word.graph
    start = word.reduced().syllables
    seen = {start}
    frontier = [start]
    while frontier:
        grown = []
        for syls in frontier:
            for i in range(len(syls) - 1):
                (s, e), (t, f) = syls[i], syls[i + 1]
                if s != t and graph.are_adjacent(s, t):
                    swapped = syls[:i] + ((t, f), (s, e)) + syls[i + 2:]
                    if swapped not in seen:
                        seen.add(swapped)
                        grown.append(swapped)
        frontier = grown
    idx = graph.index
    return min(seen, key=lambda syls: tuple((idx(s), e) for s, e in syls))


def piling_is_trivial(word):
    """Independent word-problem oracle: the per-generator pile algorithm.

    Letters drop onto their own pile and a blocker onto every non-commuting
    pile; a letter cancels when it meets its inverse on top of its own pile.
    The word is trivial iff nothing remains.
    """
    graph = word.graph
    letters = []
    for s, e in word.syllables:
        letters += [(s, 1 if e > 0 else -1)] * abs(e)
    piles = {v: [] for v in graph.vertices}
    remaining = 0
    for s, eps in letters:
        if piles[s] and piles[s][-1] == -eps:
            remaining -= 1
            for v in graph.vertices:
                if v == s or not graph.are_adjacent(s, v):
                    piles[v].pop()
        else:
            remaining += 1
            piles[s].append(eps)
            for v in graph.vertices:
                if v != s and not graph.are_adjacent(s, v):
                    piles[v].append(0)
    return remaining == 0


def freely_reduced_strings(graph, max_length):
    """All strings over the generators and inverses with no immediate
    cancellation, as syllable tuples, lengths 1..max_length."""
    letters = [(s, 1) for s in graph.vertices] + [(s, -1) for s in graph.vertices]
    level = [()]
    for _ in range(max_length):
        grown = []
        for string in level:
            for s, e in letters:
                if string and string[-1] == (s, -e):
                    continue
                grown.append(string + ((s, e),))
        level = grown
        yield from level
