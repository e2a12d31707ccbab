"""Pendant constructions on split graphs and their value identities.

Attaching k-1 pendant vertices to every clique vertex of a split graph
shifts both the k-rainbow and the weak {k} domination numbers by exactly
|C|*(k-1) over the plain domination number.  The construction, the
witness normalization used in the argument (pendants carry at most one
color / at most unit weight) and the extraction of a dominating set from
a normalized witness are all executable here, so the identities become
tests run against the exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .semantics import (
    RainbowFunction,
    WeightFunction,
)

__all__ = [
    "SplitPartition",
    "split_partition",
    "parse_split_partition",
    "render_split_partition",
    "pendant_gadget",
    "GadgetInfo",
    "GadgetReport",
    "verify_gadget_identities",
    "normalize_gadget_rainbow",
    "normalize_gadget_weights",
    "extract_dominating_set",
]


@dataclass(frozen=True)
class SplitPartition:
    """Clique side C and independent side I; C maximal as a clique."""

    C: frozenset[int]
    I: frozenset[int]


def _is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(vs), 2))


def _is_independent(g: Graph, vs) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(vs), 2))


def split_partition(g: Graph):
    """A split partition with C grown to a maximal clique, or None.

    Candidate clique sizes come from the sorted degree sequence; each
    candidate is verified directly.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    # the largest m with deg >= m-1 for the top m vertices brackets the
    # clique size of any split partition
    m = 0
    for i, d in enumerate(degs):
        if d >= i:
            m = i + 1
    for size in (m, m - 1, m + 1):
        if not (0 <= size <= g.n):
            continue
        C = set(order[:size])
        I = set(order[size:])
        if _is_clique(g, C) and _is_independent(g, I):
            # grow C maximal: adopt independent vertices joined to all of C
            for v in sorted(I):
                if all(g.has_edge(v, c) for c in C):
                    C.add(v)
                    I.discard(v)
            return SplitPartition(frozenset(C), frozenset(I))
    return None


def parse_split_partition(text: str) -> SplitPartition:
    """Two lines: the clique side, then the independent side."""
    lines = text.splitlines()
    if len(lines) < 2:
        raise ValueError("expected two lines: clique side then independent side")
    C = frozenset(int(x) for x in lines[0].split())
    I = frozenset(int(x) for x in lines[1].split())
    return SplitPartition(C, I)


def render_split_partition(p: SplitPartition) -> str:
    return (
        " ".join(map(str, sorted(p.C)))
        + "\n"
        + " ".join(map(str, sorted(p.I)))
        + "\n"
    )


@dataclass(frozen=True)
class GadgetInfo:
    """Which pendant vertices were attached to which clique vertex."""

    k: int
    pendants: tuple[tuple[int, tuple[int, ...]], ...]

    def pendant_of(self) -> dict:
        owner = {}
        for c, ps in self.pendants:
            for p in ps:
                owner[p] = c
        return owner


def pendant_gadget(g: Graph, part: SplitPartition, k: int):
    """Attach k-1 pendant vertices to every clique vertex; the result is
    again a split graph (pendants join the independent side)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if part.C | part.I != frozenset(range(g.n)):
        raise ValueError("partition does not cover the graph")
    edges = list(g.edges)
    pendants = []
    nxt = g.n
    for c in sorted(part.C):
        mine = []
        for _ in range(k - 1):
            edges.append((c, nxt))
            mine.append(nxt)
            nxt += 1
        pendants.append((c, tuple(mine)))
    return Graph(nxt, edges), GadgetInfo(k, tuple(pendants))


def normalize_gadget_rainbow(
    f: RainbowFunction, info: GadgetInfo
) -> RainbowFunction:
    """Push all but one color of any multi-colored pendant onto its clique
    owner; cost is preserved and the function stays rainbow."""
    labels = [set(lab) for lab in f.labels]
    for p, c in info.pendant_of().items():
        if len(labels[p]) > 1:
            keep = min(labels[p])
            labels[c] |= labels[p] - {keep}
            labels[p] = {keep}
    return RainbowFunction(f.k, tuple(frozenset(s) for s in labels))


def normalize_gadget_weights(
    w: WeightFunction, info: GadgetInfo
) -> WeightFunction:
    """Cap pendant weights at one, moving the excess onto the owner."""
    weights = list(w.weights)
    for p, c in info.pendant_of().items():
        if weights[p] > 1:
            weights[c] = min(w.k, weights[c] + weights[p] - 1)
            weights[p] = 1
    return WeightFunction(w.k, tuple(weights))


def extract_dominating_set(witness, n_original: int) -> set[int]:
    """Original vertices carrying anything; for a normalized witness of the
    gadget this is a dominating set of the original graph."""
    if isinstance(witness, RainbowFunction):
        return {v for v in range(n_original) if witness.labels[v]}
    return {v for v in range(n_original) if witness.weights[v] > 0}


@dataclass(frozen=True)
class GadgetReport:
    n_original: int
    clique_size: int
    k: int
    domination: int
    rainbow_of_gadget: int
    weak_of_gadget: int
    expected: int
    rainbow_matches: bool
    weak_matches: bool

    @property
    def ok(self) -> bool:
        return self.rainbow_matches and self.weak_matches


def verify_gadget_identities(
    g: Graph, part: SplitPartition, k: int, cap: int | None = None
) -> GadgetReport:
    """Compute both sides of the two pendant identities by oracle."""
    from . import oracle as _oracle

    gp, info = pendant_gadget(g, part, k)
    dom = _oracle.exact_domination(g, cap=cap)
    rk = _oracle.exact_rainbow(gp, k, cap=cap)
    wk = _oracle.exact_weight_variant(gp, "weak_k", k)
    expected = dom.value + len(part.C) * (k - 1)
    return GadgetReport(
        n_original=g.n,
        clique_size=len(part.C),
        k=k,
        domination=dom.value,
        rainbow_of_gadget=rk.value,
        weak_of_gadget=wk.value,
        expected=expected,
        rainbow_matches=rk.value == expected,
        weak_matches=wk.value == expected,
    )
