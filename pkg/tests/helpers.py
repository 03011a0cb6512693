"""Shared fixtures-in-spirit: named small graphs and corpus samplers."""

from __future__ import annotations

import random

from isrecon import Graph, gen_cograph
from isrecon.oracle import get_oracle


def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def p3() -> Graph:
    # path 0 - 2 - 1 (center 2)
    return Graph.from_edges(3, [(0, 2), (1, 2)])


def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def p4() -> Graph:
    # smallest non-cograph
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def sample_triples(g: Graph, count: int, seed: int):
    """Random (A, B, k) triples over the independent sets of ``g``."""
    rng = random.Random(seed)
    sets = get_oracle(g).sets
    out = []
    for _ in range(count):
        amask = sets[rng.randrange(len(sets))]
        bmask = sets[rng.randrange(len(sets))]
        a = frozenset(v for v in range(g.n) if amask & (1 << v))
        b = frozenset(v for v in range(g.n) if bmask & (1 << v))
        out.append((a, b, rng.randint(0, min(len(a), len(b)))))
    return out


def greedy_independent_set(g: Graph, rng: random.Random) -> frozenset:
    """A random maximal independent set, built by shuffled greedy insertion."""
    taken = 0
    blocked = 0
    for v in rng.sample(range(g.n), g.n):
        bit = 1 << v
        if not (blocked & bit):
            taken |= bit
            blocked |= bit | g.adj[v]
    return frozenset(v for v in range(g.n) if taken & (1 << v))


def cograph_corpus(count: int, max_n: int, seed_base: int = 0):
    """The deterministic cograph corpus used by the acceptance suite."""
    rng = random.Random(seed_base)
    for seed in range(seed_base, seed_base + count):
        n = rng.randint(1, max_n)
        g, t = gen_cograph(n, seed)
        yield seed, g, t
