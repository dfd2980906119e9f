"""Brute-force ground truth at small sizes.

These searches avoid the structure theory used by the formula modules where
they can: embeddings are found by backtracking over raw maps, null
subsemigroups are cliques of commuting square-to-zero maps, graphs are
enumerated edge set by edge set.  The 3-nilpotent search is the exception;
it walks every (zeta, V, W) system and so reuses the classification, but it
builds each semigroup and checks it instead of trusting the size formula.

Every search has a hard size envelope and raises ValueError outside it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import networkx as nx

from .transform import Transformation, compose, full_transformation_semigroup, is_idempotent

__all__ = [
    "CayleyTable",
    "parse_cayley_table",
    "find_embedding",
    "verify_embedding",
    "min_degree_bruteforce",
    "max_null_bruteforce",
    "count_maximal_null_bruteforce",
    "max_three_nilpotent_bruteforce",
    "max_edges_bruteforce",
    "left_null_search",
    "find_left_null",
]


@dataclass(frozen=True)
class CayleyTable:
    """A finite semigroup on {0..k-1}; ``product[i][j]`` is the index of i*j.

    The text form and the constructor from ``from_one_indexed`` use 1..k.
    """

    product: tuple[tuple[int, ...], ...]

    def __init__(self, product: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in product)
        k = len(rows)
        if k == 0:
            raise ValueError("empty Cayley table")
        if any(len(row) != k for row in rows):
            raise ValueError("Cayley table must be square")
        if any(not 0 <= v < k for row in rows for v in row):
            raise ValueError("Cayley table entry out of range")
        for a, b, c in itertools.product(range(k), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise ValueError(f"not associative at ({a + 1}, {b + 1}, {c + 1})")
        object.__setattr__(self, "product", rows)

    @classmethod
    def from_one_indexed(cls, rows: Sequence[Sequence[int]]) -> "CayleyTable":
        return cls([[v - 1 for v in row] for row in rows])

    @property
    def order(self) -> int:
        return len(self.product)

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def variant(self, a: int) -> "CayleyTable":
        """The sandwich semigroup with x * y = x a y."""
        P = self.product
        return CayleyTable([[P[P[x][a]][y] for y in range(self.order)] for x in range(self.order)])

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines += [" ".join(str(v + 1) for v in row) for row in self.product]
        return "\n".join(lines) + "\n"


def parse_cayley_table(text: str) -> CayleyTable:
    """First line k, then k rows of k one-indexed entries."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise ValueError("first line must be the order k")
    k = int(rows[0][0])
    body = [[int(x) for x in row] for row in rows[1:]]
    if len(body) != k:
        raise ValueError(f"expected {k} rows, got {len(body)}")
    return CayleyTable.from_one_indexed(body)


def _power_pattern(mul, x) -> tuple[int, int]:
    # (index, period) of the monogenic subsemigroup generated by x
    seen = {}
    p, i = x, 1
    while p not in seen:
        seen[p] = i
        p = mul(p, x)
        i += 1
    return seen[p], i - seen[p]


@lru_cache(maxsize=8)
def _maps_by_pattern(m: int) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    out: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for f in full_transformation_semigroup(m):
        out.setdefault(_power_pattern(compose, f), []).append(f.images)
    return out


@lru_cache(maxsize=8)
def _orbit_reps(m: int) -> frozenset[tuple[int, ...]]:
    # one map per conjugacy class under relabelling the points
    perms = list(itertools.permutations(range(1, m + 1)))
    seen: set[tuple[int, ...]] = set()
    reps = set()
    for f in itertools.product(range(1, m + 1), repeat=m):
        if f in seen:
            continue
        reps.add(f)
        for s in perms:
            g = [0] * m
            for i in range(m):
                g[s[i] - 1] = s[f[i] - 1]
            seen.add(tuple(g))
    return frozenset(reps)


def _mul_images(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g[x - 1] for x in f)


def find_embedding(S: CayleyTable, m: int) -> list[Transformation] | None:
    """An injective homomorphism S -> T_m as a list of images, or None.

    Elements outside S*S are assigned first, in index order; every product of
    assigned elements is then forced, and a clash or repeated image prunes.
    Each element's image must share its power pattern (index and period).
    The first image is taken up to relabelling of the points.
    """
    k = S.order
    if k > 6 or m > 6:
        raise ValueError("find_embedding envelope is |S| <= 6 and m <= 6")
    if m < 1:
        return None
    P = S.product
    pattern = [_power_pattern(S.mul, x) for x in range(k)]
    by_pattern = _maps_by_pattern(m)
    cands = [by_pattern.get(pattern[x], []) for x in range(k)]
    if any(not c for c in cands):
        return None
    squares = {P[a][b] for a in range(k) for b in range(k)}
    order = sorted(range(k), key=lambda x: (x in squares, x))
    reps = _orbit_reps(m)
    cand_sets = [set(c) for c in cands]

    def assign(img: list, used: set, x: int, f: tuple[int, ...]) -> bool:
        # assign x -> f and close under forced products; mutates img and used
        stack = [(x, f)]
        while stack:
            a, fa = stack.pop()
            if img[a] is not None:
                if img[a] != fa:
                    return False
                continue
            if fa in used or fa not in cand_sets[a]:
                return False
            img[a] = fa
            used.add(fa)
            for b in range(k):
                fb = img[b]
                if fb is None:
                    continue
                stack.append((P[a][b], _mul_images(fa, fb)))
                stack.append((P[b][a], _mul_images(fb, fa)))
        return True

    def search(i: int, img: list, used: set):
        while i < k and img[order[i]] is not None:
            i += 1
        if i == k:
            return img
        x = order[i]
        for f in cands[x]:
            if i == 0 and f not in reps:
                continue
            if f in used:
                continue
            img2, used2 = list(img), set(used)
            if assign(img2, used2, x, f):
                res = search(i + 1, img2, used2)
                if res is not None:
                    return res
        return None

    res = search(0, [None] * k, set())
    if res is None:
        return None
    out = [Transformation._raw(f) for f in res]
    if not verify_embedding(S, out):  # pragma: no cover
        raise RuntimeError("backtracking produced an invalid embedding")
    return out


def verify_embedding(S: CayleyTable, images: Sequence[Transformation]) -> bool:
    """Check injectivity and (xy)' = x'y' over all pairs."""
    k = S.order
    if len(images) != k or len(set(images)) != k:
        return False
    return all(compose(images[a], images[b]) == images[S.mul(a, b)] for a in range(k) for b in range(k))


def min_degree_bruteforce(S: CayleyTable, m_max: int) -> int | None:
    """Least m <= m_max with S embedding in T_m; None means the bound was exceeded."""
    if S.order > 6 or m_max > 6:
        raise ValueError("min_degree_bruteforce envelope is |S| <= 6 and m_max <= 6")
    for m in range(1, m_max + 1):
        if find_embedding(S, m) is not None:
            return m
    return None


def _null_graphs(n: int):
    # per idempotent zeta: graph on maps f != zeta with f^2 = f zeta = zeta f = zeta,
    # joined when fg = gf = zeta
    T = full_transformation_semigroup(n)
    for zeta in T:
        if not is_idempotent(zeta):
            continue
        nodes = [
            f for f in T
            if f != zeta and compose(f, f) == zeta and compose(f, zeta) == zeta and compose(zeta, f) == zeta
        ]
        G = nx.Graph()
        G.add_nodes_from(nodes)
        for f, g in itertools.combinations(nodes, 2):
            if compose(f, g) == zeta and compose(g, f) == zeta:
                G.add_edge(f, g)
        yield zeta, G


def max_null_bruteforce(n: int) -> int:
    """Largest null subsemigroup of T_n, by maximum cliques."""
    if not 1 <= n <= 4:
        raise ValueError("max_null_bruteforce envelope is 1 <= n <= 4")
    best = 0
    for _, G in _null_graphs(n):
        size = max((len(c) for c in nx.find_cliques(G)), default=0) + 1
        best = max(best, size)
    return best


def count_maximal_null_bruteforce(n: int) -> int:
    """Number of maximal null subsemigroups of T_n.

    A null subsemigroup is its zero plus a clique; it is maximal exactly when
    the clique is maximal (an empty graph gives the single semigroup {zeta}).
    """
    if not 1 <= n <= 4:
        raise ValueError("count_maximal_null_bruteforce envelope is 1 <= n <= 4")
    total = 0
    for _, G in _null_graphs(n):
        total += sum(1 for _ in nx.find_cliques(G)) if G.number_of_nodes() else 1
    return total


def _subsets_containing(block: Sequence[int], z: int):
    rest = [x for x in block if x != z]
    for k in range(len(rest) + 1):
        for c in itertools.combinations(rest, k):
            yield frozenset((z,) + c)


def max_three_nilpotent_bruteforce(n: int) -> int:
    """Largest 3-nilpotent subsemigroup of T_n over every (zeta, V, W) system.

    Each candidate is built and checked for 3-nilpotence; 0 if none exists.
    """
    from .nildeg import ZetaSystem, construct_NVWz, is_three_nilpotent

    if not 1 <= n <= 5:
        raise ValueError("max_three_nilpotent_bruteforce envelope is 1 <= n <= 5")
    best = 0
    for zeta in full_transformation_semigroup(n):
        if not is_idempotent(zeta):
            continue
        blocks: dict[int, list[int]] = {}
        for x, z in enumerate(zeta.images, 1):
            blocks.setdefault(z, []).append(x)
        zs = sorted(blocks)
        per_block = []
        for z in zs:
            opts = []
            for W in _subsets_containing(blocks[z], z):
                for V in _subsets_containing(sorted(W), z):
                    opts.append((W, V))
            per_block.append(opts)
        for combo in itertools.product(*per_block):
            sys = ZetaSystem(zeta, {z: wv[0] for z, wv in zip(zs, combo)}, {z: wv[1] for z, wv in zip(zs, combo)})
            if sys.size() <= best:
                continue
            elems = construct_NVWz(sys)
            if is_three_nilpotent(elems):
                best = len(elems)
    return best


def max_edges_bruteforce(n: int, r: int, p: int) -> int | None:
    """Most edges of a non-empty graph on n vertices with >= p bipartitions; None if none.

    Each unordered bipartition is a set A containing vertex 1 with a
    non-empty complement; a graph admits it iff every edge crosses it.
    """
    if r != 2 or not 2 <= n <= 6 or not 1 <= p <= 4:
        raise ValueError("max_edges_bruteforce envelope is r = 2, 2 <= n <= 6, p <= 4")
    pairs = list(itertools.combinations(range(n), 2))
    crossing = []
    for mask in range(1 << (n - 1)):
        A = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        if len(A) == n:
            continue
        crossing.append(sum(1 << e for e, (u, v) in enumerate(pairs) if (u in A) != (v in A)))
    best = None
    for E in range(1, 1 << len(pairs)):
        size = bin(E).count("1")
        if best is not None and size <= best:
            continue
        if sum(1 for X in crossing if E & ~X == 0) >= p:
            best = size
    return best


def find_left_null(n: int, p: int = 2, q: int = 2) -> list[Transformation] | None:
    """A 2 x 2 left null subsemigroup of T_n (xy = xx, two classes of two), or None."""
    if not 1 <= n <= 5 or (p, q) != (2, 2):
        raise ValueError("left_null_search envelope is n <= 5 and p = q = 2")
    T = full_transformation_semigroup(n)
    by_square: dict[Transformation, list[Transformation]] = {}
    for f in T:
        by_square.setdefault(compose(f, f), []).append(f)
    idem = [f for f in T if is_idempotent(f)]
    # companions a of zero z: a != z, a^2 = z, az = za = z
    comp = {
        z: [a for a in by_square.get(z, []) if a != z and compose(a, z) == z and compose(z, a) == z]
        for z in idem
    }
    for z1, z2 in itertools.permutations(idem, 2):
        if compose(z1, z2) != z1 or compose(z2, z1) != z2:
            continue
        c1 = [a for a in comp[z1] if compose(a, z2) == z1 and compose(z2, a) == z2]
        c2 = [b for b in comp[z2] if compose(b, z1) == z2 and compose(z1, b) == z1]
        for a in c1:
            for b in c2:
                if compose(a, b) == z1 and compose(b, a) == z2:
                    return [z1, a, z2, b]
    return None


def left_null_search(n: int, p: int = 2, q: int = 2) -> bool:
    return find_left_null(n, p, q) is not None
