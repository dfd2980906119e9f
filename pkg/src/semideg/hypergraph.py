"""Uniform hypergraphs, their r-partitions, contraction and partite reduction.

Vertices are always 1..n.  An r-partition is an unordered partition of the
vertices into r non-empty blocks such that every edge meets every block in
exactly one vertex.  Enumeration is exponential in n and meant for small
hypergraphs only.

Convention: a hypergraph with no edges is reported as having 0 r-partitions.
Every result that consumes partition counts assumes at least one edge, so
this makes accidental use on an edgeless hypergraph loud instead of huge.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .numerics import ceil_log, pi_r

__all__ = [
    "Hypergraph",
    "complete_r_partite",
    "is_r_partition",
    "enumerate_r_partitions",
    "count_r_partitions",
    "contract",
    "reduce_to_partite",
    "max_edges",
    "parse_hypergraph",
    "format_hypergraph",
]

Partition = tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set {1..n} with a set of non-empty edges.

    ``r`` is the common edge size when the hypergraph is uniform and has
    edges; it may also be given explicitly for an edgeless r-hypergraph.
    """

    n: int
    edges: frozenset[frozenset[int]]
    r: int | None = None

    def __init__(self, n: int, edges: Iterable[Iterable[int]], r: int | None = None):
        es = frozenset(frozenset(e) for e in edges)
        if n < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        for e in es:
            if not e:
                raise ValueError("edges must be non-empty")
            if not all(1 <= v <= n for v in e):
                raise ValueError(f"edge {sorted(e)} has a vertex outside 1..{n}")
        sizes = {len(e) for e in es}
        if r is not None and sizes and sizes != {r}:
            raise ValueError(f"edges are not all of size {r}")
        if r is None and len(sizes) == 1:
            r = sizes.pop()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "r", r)

    @property
    def is_uniform(self) -> bool:
        return len({len(e) for e in self.edges}) <= 1

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def _check_partition(partition: Sequence[Iterable[int]], n: int | None = None) -> Partition:
    blocks = tuple(frozenset(b) for b in partition)
    if any(not b for b in blocks):
        raise ValueError("partition blocks must be non-empty")
    union = frozenset().union(*blocks)
    if sum(len(b) for b in blocks) != len(union):
        raise ValueError("partition blocks overlap")
    m = len(union) if n is None else n
    if union != frozenset(range(1, m + 1)):
        raise ValueError(f"partition blocks do not cover 1..{m}")
    return blocks


def complete_r_partite(partition: Sequence[Iterable[int]]) -> Hypergraph:
    """All transversals of the partition, as an r-hypergraph."""
    blocks = _check_partition(partition)
    n = sum(len(b) for b in blocks)
    edges = [frozenset(t) for t in itertools.product(*(sorted(b) for b in blocks))]
    return Hypergraph(n, edges, r=len(blocks))


def is_r_partition(H: Hypergraph, partition: Sequence[Iterable[int]]) -> bool:
    blocks = _check_partition(partition, H.n)
    r = H.r
    if r is None:
        raise ValueError("is_r_partition needs a uniform hypergraph")
    if len(blocks) != r:
        raise ValueError(f"partition has {len(blocks)} blocks, hypergraph is {r}-uniform")
    return all(all(len(e & b) == 1 for b in blocks) for e in H.edges)


def enumerate_r_partitions(H: Hypergraph) -> Iterator[Partition]:
    """Yield each r-partition once, blocks ordered by least element.

    Backtracks over vertices 1..n, placing each in an existing block or
    opening a new one, and prunes as soon as some edge has two vertices in
    the same block.
    """
    r = H.r
    if not H.edges or r is None or not H.is_uniform:
        return
    n = H.n
    # edges through v restricted to earlier vertices
    earlier: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for e in H.edges:
        for v in e:
            earlier[v].append(tuple(w for w in e if w < v))
    block_of = [0] * (n + 1)
    blocks: list[list[int]] = []

    def place(v: int) -> Iterator[Partition]:
        if v > n:
            if len(blocks) == r:
                yield tuple(frozenset(b) for b in blocks)
            return
        if r - len(blocks) > n - v + 1:
            return
        options = list(range(len(blocks)))
        if len(blocks) < r:
            options.append(len(blocks))
        for b in options:
            if any(block_of[w] == b for ws in earlier[v] for w in ws):
                continue
            if b == len(blocks):
                blocks.append([v])
            else:
                blocks[b].append(v)
            block_of[v] = b
            yield from place(v + 1)
            if len(blocks[b]) == 1:
                blocks.pop()
            else:
                blocks[b].pop()

    yield from place(1)


def count_r_partitions(H: Hypergraph) -> int:
    """Number of r-partitions; 0 for an edgeless hypergraph (see module notes)."""
    return sum(1 for _ in enumerate_r_partitions(H))


def contract(H: Hypergraph, u: int, v: int) -> Hypergraph:
    """Identify vertices ``u`` and ``v``.

    The merged vertex takes the label ``min(u, v)``; labels above
    ``max(u, v)`` shift down by one so vertices stay 1..n-1.  Edges that
    collapse onto each other are merged, so the edge count can drop, and an
    edge containing both ``u`` and ``v`` shrinks, so uniformity can be lost.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if not (1 <= u <= H.n and 1 <= v <= H.n):
        raise ValueError(f"vertices {u}, {v} not in 1..{H.n}")
    keep, drop = min(u, v), max(u, v)

    def relabel(w: int) -> int:
        if w == drop:
            return keep
        return w - 1 if w > drop else w

    edges = {frozenset(relabel(w) for w in e) for e in H.edges}
    sizes = {len(e) for e in edges}
    r = H.r if sizes <= {H.r} else None
    return Hypergraph(H.n - 1, edges, r=r)


def reduce_to_partite(H: Hypergraph, l: int) -> Hypergraph:
    """Contract ``l`` times down to an r-partite r-hypergraph with the same edges.

    Requires at least ``r**(l-1) + 1`` distinct r-partitions.  Each step
    contracts the lexicographically first vertex pair that shares a block in
    at least ``r**(l'-2) + 1`` (or, on the last step, at least one) of the
    current partitions but not in all of them, where ``l'`` is the number of
    contractions still to do.
    """
    if l < 1:
        raise ValueError("reduce_to_partite needs l >= 1")
    if not H.edges or H.r is None or not H.is_uniform:
        raise ValueError("reduce_to_partite needs a uniform hypergraph with at least one edge")
    r = H.r
    parts = list(enumerate_r_partitions(H))
    need = r ** (l - 1) + 1
    if len(parts) < need:
        raise ValueError(f"need at least {need} r-partitions, hypergraph has {len(parts)}")
    q = len(H.edges)
    for remaining in range(l, 0, -1):
        threshold = r ** (remaining - 2) + 1 if remaining >= 2 else 1
        pair = None
        for u, v in itertools.combinations(range(1, H.n + 1), 2):
            together = sum(1 for P in parts if any(u in b and v in b for b in P))
            if threshold <= together < len(parts):
                pair = (u, v)
                break
        if pair is None:  # pragma: no cover - a co-blocked pair always exists
            raise RuntimeError("no contractible vertex pair found")
        H = contract(H, *pair)
        if len(H.edges) != q or H.r != r or not H.is_uniform:  # pragma: no cover
            raise RuntimeError("contraction lost edges or uniformity")
        parts = list(enumerate_r_partitions(H))
    if not parts:  # pragma: no cover
        raise RuntimeError("reduced hypergraph is not r-partite")
    return H


def max_edges(n: int, r: int, p: int) -> int | None:
    """Most edges of an r-hypergraph on n vertices with >= p distinct r-partitions.

    Returns None when no non-empty such hypergraph exists.
    """
    if r < 2:
        raise ValueError("max_edges needs r >= 2")
    if n < 1 or p < 1:
        raise ValueError("max_edges needs n, p >= 1")
    l = ceil_log(r, p)
    if r + l > n:
        return None
    return pi_r(n - l, r)


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.r if H.r is not None else 0}"]
    lines += [" ".join(map(str, e)) for e in H.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """First line ``n r``, then one edge per line as space-separated vertices."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("first line must be 'n r'")
    n, r = int(rows[0][0]), int(rows[0][1])
    edges = [[int(x) for x in row] for row in rows[1:]]
    return Hypergraph(n, edges, r=r or None)
