"""Base-case solver for nontrivial cotree leaves: chordal graphs.

Chordality is recognized via Lex-BFS plus the standard perfect-elimination
check; a maximum independent set follows greedily along the elimination
ordering.  Reachability and maximum-reachable-size inside a chordal leaf
reduce to a dominating-set test, because chordal graphs are even-hole-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, UnsupportedGraphClassError
from .graph import Graph, bits, is_independent, mask_of


@dataclass(frozen=True)
class EliminationOrdering:
    """A candidate perfect elimination ordering (simplicial vertex first)."""

    order: tuple[int, ...]
    is_perfect: bool


def chordality(g: Graph) -> EliminationOrdering:
    """Lex-BFS ordering with perfect-elimination flag; perfect iff chordal."""
    n = g.n
    if n == 0:
        return EliminationOrdering((), True)
    labels: list[list[int]] = [[] for _ in range(n)]
    pos = [-1] * n
    sigma = []
    for step in range(n):
        best = -1
        for v in range(n):
            if pos[v] < 0 and (best < 0 or labels[v] > labels[best]):
                best = v
        pos[best] = step
        sigma.append(best)
        for w in bits(g.adj[best]):
            if pos[w] < 0:
                labels[w].append(n - step)
    # Reverse of the visit order is a PEO iff the graph is chordal.
    perfect = True
    for v in range(n):
        earlier = [w for w in bits(g.adj[v]) if pos[w] < pos[v]]
        if len(earlier) <= 1:
            continue
        p = max(earlier, key=lambda w: pos[w])
        pmask = g.adj[p]
        for w in earlier:
            if w != p and not (pmask & (1 << w)):
                perfect = False
                break
        if not perfect:
            break
    return EliminationOrdering(tuple(reversed(sigma)), perfect)


def alpha_chordal(g: Graph, peo: EliminationOrdering) -> tuple[int, frozenset]:
    """Maximum independent set size of a chordal graph, with a witness set.

    Greedy over the elimination ordering: take each vertex unless a chosen
    vertex already dominates it.
    """
    if not peo.is_perfect:
        raise InputError("alpha_chordal requires a perfect elimination ordering")
    if sorted(peo.order) != list(range(g.n)):
        raise InputError("ordering is not a permutation of the vertex set")
    chosen = 0
    excluded = 0
    for v in peo.order:
        b = 1 << v
        if not (excluded & b):
            chosen |= b
            excluded |= b | g.adj[v]
    return chosen.bit_count(), frozenset(bits(chosen))


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a member of ``s``."""
    smask = g.check_vertex_set(s)
    covered = smask
    for v in bits(smask):
        covered |= g.adj[v]
    return covered == g.full_mask


def _require_chordal(g: Graph) -> None:
    if not chordality(g).is_perfect:
        raise UnsupportedGraphClassError("leaf graph is not chordal")


def leaf_reachable(g: Graph, a: Iterable[int], b: Iterable[int], ell: int) -> bool:
    """TAR reachability between independent sets of a chordal graph.

    Distinct sets are mutually reachable at threshold ``ell`` unless one of
    them is a dominating set of size exactly ``ell`` (such a set is isolated
    in the solution graph).  Threshold 0 always connects.
    """
    amask = g.check_vertex_set(a)
    bmask = g.check_vertex_set(b)
    if not is_independent(g, bits(amask)) or not is_independent(g, bits(bmask)):
        raise InputError("leaf_reachable requires independent sets")
    if amask.bit_count() < ell or bmask.bit_count() < ell:
        raise InputError("both sets must have size at least the threshold")
    _require_chordal(g)
    if amask == bmask or ell <= 0:
        return True
    for m in (amask, bmask):
        if m.bit_count() == ell and is_dominating(g, bits(m)):
            return False
    return True


def leaf_ris_table(g: Graph, i: Iterable[int]) -> list[int]:
    """Maximum reachable independent-set size per threshold, for a chordal leaf.

    Entry ``ell`` is the starting size when the start set is a dominating set
    pinned at exactly ``ell`` tokens, and the graph's independence number
    otherwise.  Index range is ``0..|i|``.
    """
    imask = g.check_vertex_set(i)
    if not is_independent(g, bits(imask)):
        raise InputError("leaf_ris_table requires an independent set")
    peo = chordality(g)
    if not peo.is_perfect:
        raise UnsupportedGraphClassError("leaf graph is not chordal")
    alpha, _ = alpha_chordal(g, peo)
    size = imask.bit_count()
    values = [alpha] * (size + 1)
    if size > 0 and is_dominating(g, bits(imask)):
        values[size] = size
    return values
