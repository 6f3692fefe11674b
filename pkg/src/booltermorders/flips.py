"""Primitive pairs, flippable pairs, flips, flip graphs, and products.

A primitive pair is a disjoint pair occupying consecutive ranks; a
flippable pair additionally has every disjoint-union translate consecutive.
Flipping swaps all translates at once and yields another valid order that
agrees with the original on every other disjoint comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DisjointPair,
    TermOrder,
    canonicalize,
    full_mask,
    require_valid,
    submasks,
)


class FlipError(ValueError):
    pass


def primitive_pairs(order: TermOrder) -> list[DisjointPair]:
    """Disjoint pairs at consecutive ranks, in rank order."""
    require_valid(order)
    chain = order.chain
    return [
        DisjointPair(a, b)
        for a, b in zip(chain, chain[1:])
        if not a & b
    ]


def flippable_pairs(order: TermOrder) -> list[DisjointPair]:
    """Primitive pairs whose every disjoint translate is also consecutive."""
    require_valid(order)
    rank = order.rank
    full = full_mask(order.n)
    out = []
    for pair in primitive_pairs(order):
        rest = full & ~(pair.left | pair.right)
        if all(
            rank[pair.right | l] == rank[pair.left | l] + 1 for l in submasks(rest)
        ):
            out.append(pair)
    return out


def flip(order: TermOrder, pair: DisjointPair) -> TermOrder:
    """Swap every translate of the pair; requires a flippable, nonempty left side."""
    if pair.left == 0:
        raise FlipError("cannot flip a pair with empty left side")
    if pair not in flippable_pairs(order):
        raise FlipError(f"pair {pair} is not flippable in this order")
    rank = list(order.rank)
    rest = full_mask(order.n) & ~(pair.left | pair.right)
    for l in submasks(rest):
        a = pair.left | l
        b = pair.right | l
        rank[a], rank[b] = rank[b], rank[a]
    return TermOrder(order.n, tuple(rank))


def unit_order() -> TermOrder:
    """The unique order on a one-element ground set."""
    return TermOrder(1, (0, 1))


def lex_product(order_a: TermOrder, order_b: TermOrder) -> TermOrder:
    """Order on [m+k] comparing by the first factor, tie-broken by the second.

    The second factor's ground set becomes 1..k, the first factor's is
    shifted up by k.
    """
    require_valid(order_a)
    require_valid(order_b)
    k = order_b.n
    chain = [
        (a << k) | b
        for a in order_a.chain
        for b in order_b.chain
    ]
    return TermOrder.from_chain(order_a.n + k, chain)


def deficient_extension(order: TermOrder, n: int) -> TermOrder:
    """Extend by appending variables, each entering right above the full set.

    Every new variable k+1 satisfies [k] < {k+1}, so the new chain is the
    old one followed by its translate by the new variable.  Each step adds
    exactly one flippable pair (the new central pair), so a seed with few
    flippable pairs stays flip deficient.
    """
    require_valid(order)
    if n < order.n:
        raise ValueError(f"cannot shrink ground set from {order.n} to {n}")
    chain = list(order.chain)
    for k in range(order.n, n):
        top = 1 << k
        chain = chain + [mask | top for mask in chain]
    return TermOrder.from_chain(n, chain)


@dataclass
class FlipGraph:
    """Flip graph on term orders, either per class or per labeling."""

    n: int
    mode: str
    vertices: list[TermOrder]
    adjacency: list[set[int]]
    coherent: list[bool] | None = None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for adj in self.adjacency:
            hist[len(adj)] = hist.get(len(adj), 0) + 1
        return dict(sorted(hist.items()))

    def coherent_subgraph(self) -> "FlipGraph":
        """Restriction to coherent vertices; degrees count coherent neighbors."""
        if self.coherent is None:
            raise ValueError("graph was built without coherence flags")
        keep = [i for i, c in enumerate(self.coherent) if c]
        remap = {old: new for new, old in enumerate(keep)}
        adjacency = [
            {remap[w] for w in self.adjacency[old] if self.coherent[w]}
            for old in keep
        ]
        return FlipGraph(
            n=self.n,
            mode=self.mode,
            vertices=[self.vertices[i] for i in keep],
            adjacency=adjacency,
            coherent=[True] * len(keep),
        )


def flip_graph(n: int, mode: str = "canonical", coherence: bool = False) -> FlipGraph:
    """Build the flip graph on all orders on [n].

    ``mode="canonical"`` takes one vertex per relabeling class and tests
    edges through canonical forms of flip neighbors; ``mode="labeled"``
    keeps every labeling.  With ``coherence`` each vertex gets a coherence
    flag (an exact LP per vertex).
    """
    from .enumeration import enumerate_orders

    if mode not in ("canonical", "labeled"):
        raise ValueError(f"unknown mode {mode!r}")
    if not 1 <= n <= 6:
        raise ValueError(f"n must be in 1..6, got {n}")
    emit = "canonical" if mode == "canonical" else "all"
    vertices = list(enumerate_orders(n, mode=emit))
    index = {o.rank: i for i, o in enumerate(vertices)}
    adjacency: list[set[int]] = [set() for _ in vertices]
    for i, order in enumerate(vertices):
        for pair in flippable_pairs(order):
            if pair.left == 0:
                continue
            neighbor = flip(order, pair)
            if mode == "canonical":
                neighbor = canonicalize(neighbor)
            j = index[neighbor.rank]
            if j != i:
                adjacency[i].add(j)
                adjacency[j].add(i)
    coherent = None
    if coherence:
        from .coherence import is_coherent

        coherent = [is_coherent(o) for o in vertices]
    return FlipGraph(n=n, mode=mode, vertices=vertices, adjacency=adjacency, coherent=coherent)


def flippable_count_histogram(n: int) -> dict[int, int]:
    """Histogram of flippable-pair counts over the classes of orders on [n]."""
    from .enumeration import enumerate_orders

    hist: dict[int, int] = {}
    for order in enumerate_orders(n, mode="canonical"):
        k = len(flippable_pairs(order))
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))
