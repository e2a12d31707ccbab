"""Exponential-time exact solvers used as ground truth.

``exact_domination`` is a bitmask branch-and-bound for minimum domination;
``exact_rainbow`` reduces rainbow domination to domination of the product
with a complete graph and decodes the witness back to color labels.
``exact_weight_variant`` is a branch-and-bound over weight vectors shared
by the weak {k}, {k}, (j,k) and weak {k}-L variants.

Every call is pure and independent; results carry a validating witness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

from .graph import Graph, cartesian_product_complete
from .semantics import (
    KAssignment,
    RainbowFunction,
    WeightFunction,
)

__all__ = [
    "OracleResult",
    "OracleCapExceeded",
    "OracleBudgetExceeded",
    "InfeasibleInstance",
    "DEFAULT_VERTEX_CAP",
    "vertex_cap",
    "exact_domination",
    "exact_rainbow",
    "exact_rainbow_direct",
    "exact_weight_variant",
    "dominating_set_of",
]

DEFAULT_VERTEX_CAP = 24
DEFAULT_NODE_BUDGET = 20_000_000


class OracleCapExceeded(RuntimeError):
    """Instance is larger than the configured vertex cap."""


class OracleBudgetExceeded(RuntimeError):
    """Search exceeded the configured node budget."""


class InfeasibleInstance(RuntimeError):
    """No function of the requested kind exists on this instance."""


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Union[RainbowFunction, WeightFunction]
    nodes_explored: int


def vertex_cap(cap: int | None = None) -> int:
    """Resolve the oracle vertex cap: explicit arg, else env, else default."""
    if cap is not None:
        return cap
    env = os.environ.get("RAINBOWDOM_ORACLE_CAP")
    if env:
        return int(env)
    return DEFAULT_VERTEX_CAP


def _greedy_dominating(nb: list[int], full: int) -> list[int]:
    dominated = 0
    chosen: list[int] = []
    while dominated != full:
        best_v = -1
        best_gain = -1
        for v, mask in enumerate(nb):
            gain = bin(mask & ~dominated).count("1")
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen.append(best_v)
        dominated |= nb[best_v]
    return chosen


def exact_domination(
    g: Graph, cap: int | None = None, node_budget: int | None = None
) -> OracleResult:
    """Minimum dominating set by cardinality-increasing depth-first search.

    A greedy solution bounds the search from above; at each node the branch
    vertex is an undominated vertex with the fewest covering candidates, and
    candidates whose residual coverage is contained in another candidate's
    are pruned.
    """
    cap = vertex_cap(cap)
    if g.n > cap:
        raise OracleCapExceeded(f"n={g.n} exceeds oracle cap {cap}")
    budget = node_budget if node_budget is not None else DEFAULT_NODE_BUDGET
    n = g.n
    if n == 0:
        return OracleResult(0, WeightFunction(1, ()), 0)

    nb = [0] * n
    for v in range(n):
        m = 1 << v
        for u in g.neighbors(v):
            m |= 1 << u
        nb[v] = m
    full = (1 << n) - 1

    greedy = _greedy_dominating(nb, full)
    ub = len(greedy)
    best_sets: dict[int, list[int]] = {ub: greedy}
    nodes = 0

    def depth_limited(dominated: int, chosen: list[int], left: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise OracleBudgetExceeded(f"domination search passed {budget} nodes")
        if dominated == full:
            best_sets[len(chosen)] = list(chosen)
            return True
        if left == 0:
            return False
        rem = full & ~dominated
        max_cov = 0
        for mask in nb:
            c = bin(mask & rem).count("1")
            if c > max_cov:
                max_cov = c
        if max_cov * left < bin(rem).count("1"):
            return False
        # branch on the undominated vertex with fewest covering candidates
        pick = -1
        pick_count = n + 2
        r = rem
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            c = bin(nb[v]).count("1")
            if c < pick_count:
                pick_count = c
                pick = v
        cands = []
        m = nb[pick]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            cands.append((v, nb[v] & rem))
        # drop candidates dominated by another candidate's residual coverage
        keep = []
        for i, (v, cov) in enumerate(cands):
            dominated_choice = False
            for jdx, (w, cov2) in enumerate(cands):
                if i == jdx:
                    continue
                if cov | cov2 == cov2 and (cov != cov2 or w < v):
                    dominated_choice = True
                    break
            if not dominated_choice:
                keep.append((v, cov))
        keep.sort(key=lambda t: (-bin(t[1]).count("1"), t[0]))
        for v, cov in keep:
            chosen.append(v)
            if depth_limited(dominated | nb[v], chosen, left - 1):
                chosen.pop()
                return True
            chosen.pop()
        return False

    lb = 1
    target = lb
    while target < ub:
        if depth_limited(0, [], target):
            ub = min(k for k in best_sets)
            break
        target += 1

    size = min(best_sets)
    weights = [0] * n
    for v in best_sets[size]:
        weights[v] = 1
    return OracleResult(size, WeightFunction(1, tuple(weights)), nodes)


def dominating_set_of(res: OracleResult) -> set[int]:
    """Vertex set of a 0/1 domination witness."""
    w = res.witness
    assert isinstance(w, WeightFunction)
    return {v for v, x in enumerate(w.weights) if x}


def exact_rainbow(
    g: Graph, k: int, cap: int | None = None, node_budget: int | None = None
) -> OracleResult:
    """Exact k-rainbow domination number via the product construction.

    A minimum dominating set of the product of g with a complete graph on k
    vertices decodes to an optimal rainbow function: color c+1 joins the
    label of v exactly when product vertex v*k + c is selected.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cap = vertex_cap(cap)
    if g.n * k > cap:
        raise OracleCapExceeded(f"product size {g.n * k} exceeds oracle cap {cap}")
    prod = cartesian_product_complete(g, k)
    res = exact_domination(prod, cap=cap, node_budget=node_budget)
    labels: list[set[int]] = [set() for _ in range(g.n)]
    assert isinstance(res.witness, WeightFunction)
    for idx, x in enumerate(res.witness.weights):
        if x:
            labels[idx // k].add(idx % k + 1)
    f = RainbowFunction(k, tuple(frozenset(s) for s in labels))
    return OracleResult(res.value, f, res.nodes_explored)


def exact_rainbow_direct(
    g: Graph, k: int, work_cap: int = 10_000_000
) -> OracleResult:
    """Independent rainbow oracle: branch and bound over label vectors.

    Exponential in n and k; intended as a cross-check of the product route
    on tiny instances.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if (1 << k) ** n > work_cap:
        raise OracleCapExceeded("label space exceeds the work cap")
    if n == 0:
        return OracleResult(0, RainbowFunction(k, ()), 0)

    all_colors = (1 << k) - 1
    neighbor_lists = [sorted(g.neighbors(v)) for v in range(n)]
    best_cost = n + 1  # all-singletons is always valid
    best_labels = [1] * n
    labels = [0] * n
    nodes = 0

    def feasible_complete() -> bool:
        for v in range(n):
            if labels[v] == 0:
                seen = 0
                for u in neighbor_lists[v]:
                    seen |= labels[u]
                if seen != all_colors:
                    return False
        return True

    def rec(v: int, cost: int) -> None:
        nonlocal best_cost, best_labels, nodes
        nodes += 1
        if cost >= best_cost:
            return
        if v == n:
            if feasible_complete():
                best_cost = cost
                best_labels = labels.copy()
            return
        for mask in range(1 << k):
            labels[v] = mask
            rec(v + 1, cost + bin(mask).count("1"))
        labels[v] = 0

    rec(0, 0)
    labs = tuple(
        frozenset(c + 1 for c in range(k) if best_labels[v] >> c & 1)
        for v in range(n)
    )
    return OracleResult(best_cost, RainbowFunction(k, labs), nodes)


_VARIANTS = ("weak_k", "k_dom", "jk_dom", "weak_kL")


def exact_weight_variant(
    g: Graph,
    variant: str,
    k: int,
    j: int | None = None,
    assignment: KAssignment | None = None,
    node_budget: int | None = None,
) -> OracleResult:
    """Exact minimum for a weight-vector domination variant.

    Branch and bound over weight vectors, assigning vertices in decreasing
    degree order, with neighborhood-potential propagation and a seeded
    upper bound.  Raises ``InfeasibleInstance`` when no function exists
    (only possible for the (j,k) variant).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    budget = node_budget if node_budget is not None else DEFAULT_NODE_BUDGET
    n = g.n
    if n == 0:
        return OracleResult(0, WeightFunction(k, ()), 0)

    lo = [0] * n
    hi = [k] * n
    # threshold for zero vertices (conditional variants); None = unconditional
    conditional = variant in ("weak_k", "weak_kL")
    thr = [k] * n
    if variant == "weak_kL":
        if assignment is None:
            raise ValueError("weak_kL requires an assignment")
        if assignment.k != k or len(assignment.pairs) != n:
            raise ValueError("assignment does not match the instance")
        for v, (a, b) in enumerate(assignment.pairs):
            lo[v] = a
            thr[v] = b
    if variant == "jk_dom":
        if j is None or not (1 <= j <= k):
            raise ValueError("jk_dom requires 1 <= j <= k")
        hi = [j] * n
        for v in range(n):
            if j * (g.degree(v) + 1) < k:
                raise InfeasibleInstance(
                    f"vertex {v} cannot reach closed weight {k} with cap {j}"
                )

    closed = [sorted(g.neighbors(v) | {v}) for v in range(n)]

    def valid_cost(weights: list[int]) -> int | None:
        for v in range(n):
            if weights[v] < lo[v]:
                return None
            if conditional:
                if weights[v] == 0 and sum(weights[u] for u in closed[v]) < thr[v]:
                    return None
            else:
                if sum(weights[u] for u in closed[v]) < k:
                    return None
        return sum(weights)

    # seed the incumbent with cheap valid solutions
    seeds = []
    if variant == "weak_k":
        seeds.append([1] * n)
    elif variant == "weak_kL":
        seeds.append([max(lo[v], 1) for v in range(n)])
    elif variant == "jk_dom":
        seeds.append([j] * n)
    if variant in ("weak_k", "k_dom"):
        dom = _greedy_dominating(
            [sum(1 << u for u in closed[v]) for v in range(n)], (1 << n) - 1
        )
        w = [0] * n
        for v in dom:
            w[v] = k
        seeds.append(w)
    best_cost = None
    best_weights = None
    for s in seeds:
        c = valid_cost(s)
        if c is not None and (best_cost is None or c < best_cost):
            best_cost, best_weights = c, s
    assert best_cost is not None and best_weights is not None

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    # closed neighborhoods in assignment order for incremental updates
    csum = [0] * n  # weight already assigned in N[v]
    pot = [sum(hi[u] for u in closed[v]) for v in range(n)]
    weights = [-1] * n
    rem_lo = sum(lo)
    nodes = 0

    def rec(i: int, cost: int) -> None:
        nonlocal best_cost, best_weights, nodes, rem_lo
        nodes += 1
        if nodes > budget:
            raise OracleBudgetExceeded(f"weight search passed {budget} nodes")
        if cost + rem_lo >= best_cost:
            return
        if i == n:
            best_cost = cost
            best_weights = weights.copy()
            return
        u = order[i]
        rem_lo -= lo[u]
        for x in range(lo[u], hi[u] + 1):
            weights[u] = x
            ok = True
            for v in closed[u]:
                csum[v] += x
                pot[v] -= hi[u]
            for v in closed[u]:
                need = None
                if conditional:
                    if weights[v] == 0:
                        need = thr[v]
                else:
                    need = k
                if need is not None and csum[v] + pot[v] < need:
                    ok = False
                    break
            if ok:
                rec(i + 1, cost + x)
            for v in closed[u]:
                csum[v] -= x
                pot[v] += hi[u]
        weights[u] = -1
        rem_lo += lo[u]

    rec(0, 0)
    return OracleResult(best_cost, WeightFunction(k, tuple(best_weights)), nodes)
