"""Rooted tree models and linear-time weight-domination solvers for graphs
whose adjacency is the ancestor relation of a rooted forest.

The weak {k}-L solver first applies the instance reduction: vertices with a
positive weight floor are fixed at that floor and removed, vertices whose
neighborhood already collects enough fixed weight are removed as satisfied,
and the remaining demand levels are rewritten.  The reduced problem is then
solved by a bottom-up dynamic program: for each subtree and each amount of
help h in {0..k} arriving from the vertices above it, the table holds the
cheapest internal weight; any total above that minimum and below capacity
is realizable by padding, which is what a parent buys when its own demand
exceeds the children's combined minima.  Every vertex of a subtree is a
descendant of the whole path above it, so a subtree's help to each ancestor
equals its internal total and a single scalar per side suffices.

This DP replaces a one-scalar elimination schedule that is order-sensitive
on trees with several branch vertices (see the regression test with two
asymmetric branches); values are certified against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .semantics import KAssignment, WeightFunction
from .oracle import InfeasibleInstance

__all__ = [
    "RootedTreeModel",
    "TPRefusal",
    "ReducedInstance",
    "DescendantOrder",
    "parse_tree_model",
    "render_tree_model",
    "parse_assignment",
    "render_assignment",
    "build_tree_model",
    "reduce_instance",
    "descendant_order",
    "gamma_wkL",
    "gamma_wk_tp",
    "gamma_rk_tp",
    "jk_domination_tp",
    "random_tree_model",
]

INF = float("inf")


@dataclass(frozen=True)
class TPRefusal:
    """Witness that the input has an induced P4 or C4."""

    kind: str  # 'P4' | 'C4'
    vertices: tuple[int, int, int, int]


class RootedTreeModel:
    """Rooted forest whose ancestor relation is the modeled adjacency."""

    __slots__ = ("parents", "roots", "children", "depth", "order")

    def __init__(self, parents):
        parents = tuple(parents)
        n = len(parents)
        children: list[list[int]] = [[] for _ in range(n)]
        roots = []
        for v, p in enumerate(parents):
            if p == -1:
                roots.append(v)
            elif 0 <= p < n:
                children[p].append(v)
            else:
                raise ValueError(f"parent of {v} out of range")
        if not roots and n:
            raise ValueError("a nonempty forest needs a root")
        depth = [-1] * n
        order = []  # top-down (BFS) order
        queue = list(roots)
        for r in roots:
            depth[r] = 1
        i = 0
        while i < len(queue):
            v = queue[i]
            i += 1
            order.append(v)
            for c in children[v]:
                depth[c] = depth[v] + 1
                queue.append(c)
        if len(order) != n:
            raise ValueError("parent pointers contain a cycle")
        self.parents = parents
        self.roots = tuple(roots)
        self.children = tuple(tuple(c) for c in children)
        self.depth = tuple(depth)
        self.order = tuple(order)

    @property
    def n(self) -> int:
        return len(self.parents)

    def ancestors(self, v: int) -> list[int]:
        out = []
        p = self.parents[v]
        while p != -1:
            out.append(p)
            p = self.parents[p]
        return out

    def derived_graph(self) -> Graph:
        """Adjacency = strict ancestor relation (quadratic; desk scale)."""
        edges = []
        for v in range(self.n):
            for a in self.ancestors(v):
                edges.append((v, a))
        return Graph(self.n, edges)

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        for v in reversed(self.order):
            p = self.parents[v]
            if p != -1:
                size[p] += size[v]
        return size


def parse_tree_model(text: str) -> RootedTreeModel:
    """n lines ``v parent`` with -1 marking roots."""
    entries = {}
    for ln in (raw.strip() for raw in text.splitlines()):
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed model line: {ln!r}")
        entries[int(parts[0])] = int(parts[1])
    n = len(entries)
    if sorted(entries) != list(range(n)):
        raise ValueError("model must list each vertex 0..n-1 exactly once")
    return RootedTreeModel([entries[v] for v in range(n)])


def render_tree_model(model: RootedTreeModel) -> str:
    return "\n".join(f"{v} {p}" for v, p in enumerate(model.parents)) + "\n"


def parse_assignment(text: str, k: int) -> KAssignment:
    """n lines ``v a b``."""
    entries = {}
    for ln in (raw.strip() for raw in text.splitlines()):
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"malformed assignment line: {ln!r}")
        entries[int(parts[0])] = (int(parts[1]), int(parts[2]))
    n = len(entries)
    if sorted(entries) != list(range(n)):
        raise ValueError("assignment must list each vertex 0..n-1 exactly once")
    return KAssignment(k, tuple(entries[v] for v in range(n)))


def render_assignment(L: KAssignment) -> str:
    return "\n".join(f"{v} {a} {b}" for v, (a, b) in enumerate(L.pairs)) + "\n"


def _find_p4_or_c4(g: Graph, vertices) -> TPRefusal:
    for quad in combinations(sorted(vertices), 4):
        edges = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
        deg = {v: 0 for v in quad}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        degs = sorted(deg.values())
        if len(edges) == 3 and degs == [1, 1, 2, 2]:
            return TPRefusal("P4", quad)
        if len(edges) == 4 and degs == [2, 2, 2, 2]:
            return TPRefusal("C4", quad)
    raise AssertionError("graph without universal vertex must contain P4 or C4")


def build_tree_model(g: Graph):
    """Model construction by repeatedly extracting a universal vertex of
    each connected piece; refusal exhibits an induced P4 or C4."""
    parents = [-1] * g.n
    stack: list[tuple[list[int], int]] = [
        (comp, -1) for comp in reversed(g.components())
    ]
    while stack:
        comp, parent = stack.pop()
        if len(comp) == 1:
            parents[comp[0]] = parent
            continue
        sub, keep = g.induced(comp)
        universal = next(
            (v for v in range(sub.n) if sub.degree(v) == sub.n - 1), None
        )
        if universal is None:
            return _find_p4_or_c4(g, comp)
        root = keep[universal]
        parents[root] = parent
        rest = [v for v in comp if v != root]
        sub2, keep2 = g.induced(rest)
        for c in reversed(sub2.components()):
            stack.append(([keep2[i] for i in c], root))
    return RootedTreeModel(parents)


# --- instance reduction ------------------------------------------------------


@dataclass(frozen=True)
class ReducedInstance:
    model: RootedTreeModel
    labels: KAssignment
    offset: int
    kept: tuple[int, ...]              # reduced index -> original vertex
    removed_weights: dict              # original vertex -> fixed weight


def _closed_a_sums(model: RootedTreeModel, a: list[int]) -> list[int]:
    """For each x: the sum of floors over ancestors, x itself and descendants."""
    n = model.n
    anc = [0] * n
    for v in model.order:
        p = model.parents[v]
        anc[v] = 0 if p == -1 else anc[p] + a[p]
    desc = [0] * n
    for v in reversed(model.order):
        p = model.parents[v]
        if p != -1:
            desc[p] += desc[v] + a[v]
    return [anc[v] + a[v] + desc[v] for v in range(n)]


def reduce_instance(model: RootedTreeModel, L: KAssignment) -> ReducedInstance:
    """Fix positive floors, drop already-satisfied vertices, rewrite demands.

    Removed vertices keep weight a_x (zero for the satisfied ones); the
    demand of every survivor drops by the fixed weight its neighborhood
    already collects, and each component root additionally absorbs the
    component's total fixed weight.
    """
    n = model.n
    if len(L.pairs) != n:
        raise ValueError("assignment does not match the model")
    k = L.k
    a = [p[0] for p in L.pairs]
    b = [p[1] for p in L.pairs]
    nsum = _closed_a_sums(model, a)
    root_set = set(model.roots)

    removed_weights: dict[int, int] = {}
    kept: list[int] = []
    for x in range(n):
        if x in root_set:
            kept.append(x)
        elif a[x] > 0:
            removed_weights[x] = a[x]
        elif nsum[x] >= b[x]:
            removed_weights[x] = 0
        else:
            kept.append(x)

    new_index = {orig: i for i, orig in enumerate(kept)}
    new_parents = []
    for orig in kept:
        p = model.parents[orig]
        while p != -1 and p not in new_index:
            p = model.parents[p]
        new_parents.append(-1 if p == -1 else new_index[p])

    # per-component sums of non-root floors, for the root rewrite
    comp_of = {}
    for r in model.roots:
        comp_of[r] = r
    for v in model.order:
        p = model.parents[v]
        if p != -1:
            comp_of[v] = comp_of[p]
    comp_sum: dict[int, int] = {r: 0 for r in model.roots}
    offset = 0
    for x in range(n):
        if x not in root_set:
            comp_sum[comp_of[x]] += a[x]
            offset += a[x]

    # Demands drop only by the weight that is fixed AND removed.  The root's
    # floor also makes removal tests pass (every solution carries it), but it
    # stays inside the reduced instance, so it must not be credited here.
    new_pairs = []
    for orig in kept:
        if orig in root_set:
            new_pairs.append((a[orig], max(0, b[orig] - comp_sum[orig])))
        else:
            credit = nsum[orig] - a[comp_of[orig]]
            new_pairs.append((0, max(0, b[orig] - credit)))
    return ReducedInstance(
        RootedTreeModel(new_parents),
        KAssignment(k, tuple(new_pairs)),
        offset,
        tuple(kept),
        removed_weights,
    )


# --- descendant ordering -----------------------------------------------------


@dataclass(frozen=True)
class DescendantOrder:
    """Descendant cliques of a branch vertex, sorted for greedy exchange.

    Each clique (a path hanging below the vertex) is reordered so its
    demand levels do not increase with depth; the discounted demand of the
    vertex at position p is its level minus the p-1 clique members above it.
    The merged order lists all descendants by discounted demand, ties broken
    by (clique index, position)."""

    cliques: tuple[tuple[int, ...], ...]
    d_values: dict
    z_order: tuple[int, ...]


def descendant_order(
    model: RootedTreeModel, labels: KAssignment, x: int
) -> DescendantOrder:
    b = [p[1] for p in labels.pairs]
    cliques = []
    for c in model.children[x]:
        path = []
        v = c
        while True:
            path.append(v)
            kids = model.children[v]
            if not kids:
                break
            if len(kids) > 1:
                raise ValueError(
                    f"subtree below {x} branches at {v}; expected bare paths"
                )
            v = kids[0]
        path.sort(key=lambda u: (-b[u], u))
        cliques.append(tuple(path))
    d_values = {}
    keyed = []
    for ci, clique in enumerate(cliques):
        for pos, v in enumerate(clique, start=1):
            d_values[v] = b[v] - pos + 1
            keyed.append((-d_values[v], ci, pos, v))
    keyed.sort()
    return DescendantOrder(
        tuple(cliques), d_values, tuple(item[3] for item in keyed)
    )


# --- the subtree-menu dynamic program ----------------------------------------


def _solve_tree_weakL(model: RootedTreeModel, pairs, k: int):
    """Exact minimum and witness for the weak {k}-L problem on a forest
    model with per-vertex floors (a, b).  O(k n)."""
    n = model.n
    if n == 0:
        return 0, []
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    size = model.subtree_sizes()
    children = model.children

    # f[v][s]: cheapest subtree total when vertices above v contribute s
    k1 = k + 1
    zeros = [0] * k1
    f: list[list[int]] = [None] * n  # type: ignore[list-item]
    childsum: list[list[int]] = [None] * n  # type: ignore[list-item]
    leaf_cache: dict[tuple[int, int], list[int]] = {}
    suffix = [0] * k1
    for v in reversed(model.order):
        ch = children[v]
        av, bv = a[v], b[v]
        if not ch:
            fv = leaf_cache.get((av, bv))
            if fv is None:
                base = max(av, 1)
                fv = [0 if (av == 0 and s >= bv) else base for s in range(k1)]
                leaf_cache[(av, bv)] = fv
            f[v] = fv
            childsum[v] = zeros
            continue
        if len(ch) == 1:
            cs = f[ch[0]]
        else:
            cs = list(f[ch[0]])
            for c in ch[1:]:
                fc = f[c]
                for h in range(k1):
                    cs[h] += fc[h]
        childsum[v] = cs
        cap_below = k * (size[v] - 1)
        # positive-weight choices: h + childsum[h] minimized over reachable
        # help columns; weights past k-s all land on the clamped column.
        w_lo = max(1, av)
        run = INF
        for h in range(k - 1, -1, -1):
            m = h + cs[h]
            if m < run:
                run = m
            suffix[h] = run
        csk = cs[k]
        fv = [0] * k1
        for s in range(k1):
            w_clamp = k - s
            if w_lo > w_clamp:
                w_clamp = w_lo
            best = w_clamp + csk
            lo_h = s + w_lo
            if lo_h < k:
                t = suffix[lo_h] - s
                if t < best:
                    best = t
            if av == 0:
                need0 = bv - s
                if need0 <= cap_below:
                    cand = cs[s]
                    if need0 > cand:
                        cand = need0
                    if cand < best:
                        best = cand
            fv[s] = best
        f[v] = fv

    value = sum(f[r][0] for r in model.roots)

    # realize the witness: per vertex pick the cheapest weight again and
    # hand each child its minimum plus a share of any padding
    weights = [0] * n
    stack = [(r, 0, f[r][0]) for r in model.roots]
    while stack:
        v, s, target = stack.pop()
        cs = childsum[v]
        cap_below = k * (size[v] - 1)
        best = None
        w_lo = max(1, a[v])
        for w in range(w_lo, k + 1):
            h = min(k, s + w)
            cand = (w + cs[h], w)
            if best is None or cand < best:
                best = cand
        if a[v] == 0:
            need0 = b[v] - s
            if need0 <= cap_below:
                cand = (max(cs[s], need0), 0)
                if cand < best:
                    best = cand
        total, w = best
        assert total <= target <= k * size[v]
        h = min(k, s + w)
        need_below = max(cs[s], b[v] - s) if w == 0 else cs[h]
        # padding goes below first; the vertex's own weight absorbs the rest
        extra = target - total
        give_below = min(extra, cap_below - need_below)
        weights[v] = w + (extra - give_below)
        below_target = need_below + give_below
        spread = below_target - cs[h]
        for c in children[v]:
            give = min(spread, k * size[c] - f[c][h])
            stack.append((c, h, f[c][h] + give))
            spread -= give
        assert spread == 0
    return value, weights


def gamma_wkL(model: RootedTreeModel, L: KAssignment):
    """Exact weak {k}-L-domination number of the modeled graph, with a
    validating witness.  Reduction first, then the subtree DP."""
    red = reduce_instance(model, L)
    value_red, weights_red = _solve_tree_weakL(red.model, red.labels.pairs, L.k)
    weights = [0] * model.n
    for orig, w in red.removed_weights.items():
        weights[orig] = w
    for new_id, orig in enumerate(red.kept):
        weights[orig] = weights_red[new_id]
    return value_red + red.offset, WeightFunction(L.k, tuple(weights))


def gamma_wk_tp(model: RootedTreeModel, k: int):
    """Weak {k}-domination via the all-(0,k) assignment."""
    return gamma_wkL(model, KAssignment.uniform(k, model.n))


def gamma_rk_tp(model: RootedTreeModel, k: int) -> int:
    """Rainbow domination number, using the equality with the weak number
    on this class; value only, no rainbow witness."""
    value, _ = gamma_wk_tp(model, k)
    return min(value, model.n)


def jk_domination_tp(model: RootedTreeModel, j: int, k: int):
    """Weights j on the first floor(k/j) depth levels of each tree and the
    remainder k mod j on the next level; raises when some leaf sits too
    close to its root for any function to exist."""
    if not (1 <= j <= k):
        raise ValueError("j must satisfy 1 <= j <= k")
    full_levels = k // j
    rem = k % j
    weights = []
    for v in range(model.n):
        d = model.depth[v]
        if d <= full_levels:
            weights.append(j)
        elif d == full_levels + 1:
            weights.append(rem)
        else:
            weights.append(0)
    # a leaf at depth d caps every function at j*d on its closed neighborhood
    for v in range(model.n):
        if not model.children[v] and j * model.depth[v] < k:
            raise InfeasibleInstance(
                f"leaf {v} at depth {model.depth[v]} cannot reach {k} with cap {j}"
            )
    return sum(weights), WeightFunction(k, tuple(weights))


def random_tree_model(n: int, seed: int) -> RootedTreeModel:
    """Random single-rooted model: each vertex attaches to a random earlier
    vertex."""
    import random as _random

    rng = _random.Random(seed)
    parents = [-1]
    for v in range(1, n):
        parents.append(rng.randrange(v))
    return RootedTreeModel(parents)
