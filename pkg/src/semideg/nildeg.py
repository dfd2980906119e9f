"""Null and 3-nilpotent subsemigroups of T_n.

A zeta-system picks, for each kernel block Z_i of an idempotent zeta, a
subset W_i containing the block's image point z_i (and optionally a smaller
V_i for the 3-nilpotent construction).  The maps that push Z_i into W_i and
collapse W_i onto z_i form a null semigroup with zero zeta.

The counting functions F, F1, G, G1, H, H1 are exact recurrences for the
numbers of maximal null (F) and maximal 3-nilpotent (G) subsemigroups.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .numerics import Xi_r, alpha, xi
from .transform import Transformation, is_idempotent

__all__ = [
    "ZetaSystem",
    "canonical_system",
    "construct_NWz",
    "construct_NVWz",
    "null_witness",
    "nilpotent_witness",
    "is_null_semigroup",
    "is_three_nilpotent",
    "nu_r",
    "nu",
    "null_degree",
    "kappa",
    "count_F",
    "count_G",
    "F_table",
    "G_table",
]


@dataclass(frozen=True)
class ZetaSystem:
    """An idempotent ``zeta`` with per-block sets, keyed by the block's image point.

    ``W[z]`` (and ``V[z]`` when present) must satisfy z in V[z] <= W[z] <= Z,
    where Z is the kernel block of zeta mapping to z.
    """

    zeta: Transformation
    W: Mapping[int, frozenset[int]]
    V: Mapping[int, frozenset[int]] | None = None

    def __post_init__(self):
        if not is_idempotent(self.zeta):
            raise ValueError("zeta must be idempotent")
        blocks = self.blocks()
        W = {z: frozenset(s) for z, s in self.W.items()}
        if set(W) != set(blocks):
            raise ValueError(f"W must be given for exactly the image points {sorted(blocks)}")
        V = None
        if self.V is not None:
            V = {z: frozenset(s) for z, s in self.V.items()}
            if set(V) != set(blocks):
                raise ValueError(f"V must be given for exactly the image points {sorted(blocks)}")
        for z, Z in blocks.items():
            if not (z in W[z] and W[z] <= Z):
                raise ValueError(f"need z in W <= Z for block {sorted(Z)}")
            if V is not None and not (z in V[z] and V[z] <= W[z]):
                raise ValueError(f"need z in V <= W for block {sorted(Z)}")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "V", V)

    def blocks(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for x, z in enumerate(self.zeta.images, 1):
            out.setdefault(z, set()).add(x)
        return {z: frozenset(b) for z, b in out.items()}

    def size(self) -> int:
        """Size of the semigroup this system defines, without building it."""
        total = 1
        for z, Z in self.blocks().items():
            W = self.W[z]
            total *= len(W) ** len(Z - W)
            if self.V is not None:
                total *= len(self.V[z]) ** len(W - self.V[z])
        return total


def canonical_system(
    block_sizes: Iterable[int], w_sizes: Iterable[int], v_sizes: Iterable[int] | None = None
) -> ZetaSystem:
    """Consecutive interval blocks, z_i the least point, W_i and V_i initial segments."""
    block_sizes, w_sizes = list(block_sizes), list(w_sizes)
    v_sizes = list(v_sizes) if v_sizes is not None else None
    if len(w_sizes) != len(block_sizes) or (v_sizes is not None and len(v_sizes) != len(block_sizes)):
        raise ValueError("size lists must have one entry per block")
    images, W, V = [], {}, {}
    start = 1
    for i, s in enumerate(block_sizes):
        block = list(range(start, start + s))
        images += [start] * s
        W[start] = frozenset(block[: w_sizes[i]])
        if v_sizes is not None:
            V[start] = frozenset(block[: v_sizes[i]])
        start += s
    return ZetaSystem(Transformation(images), W, V if v_sizes is not None else None)


def _build(sys: ZetaSystem, layers: list[dict[int, frozenset[int]]]) -> list[Transformation]:
    # layers run outermost to innermost: Z, W, (V); each point goes one layer in
    n = sys.zeta.degree
    choices: list[tuple[int, ...]] = [()] * n
    for z, Z in sys.blocks().items():
        sets = [Z] + [layer[z] for layer in layers]
        for x in Z:
            # innermost layer containing x
            depth = max(k for k, s in enumerate(sets) if x in s)
            if depth == len(sets) - 1:
                choices[x - 1] = (z,)
            else:
                choices[x - 1] = tuple(sorted(sets[depth + 1]))
    return [Transformation._raw(t) for t in itertools.product(*choices)]


def construct_NWz(sys: ZetaSystem) -> list[Transformation]:
    """All f with Z_i f <= W_i and W_i f = {z_i}; a null semigroup with zero zeta."""
    return _build(sys, [sys.W])


def construct_NVWz(sys: ZetaSystem) -> list[Transformation]:
    """All f with Z_i f <= W_i, W_i f <= V_i and V_i f = {z_i}."""
    if sys.V is None:
        raise ValueError("construct_NVWz needs a system with V")
    return _build(sys, [sys.W, sys.V])


def null_witness(n: int) -> list[Transformation]:
    """A largest null subsemigroup of T_n (size xi(n)): maps into {1..t} sending {1..t} to 1."""
    if n < 1:
        raise ValueError("null_witness needs n >= 1")
    return construct_NWz(canonical_system([n], [alpha(n)]))


def nilpotent_witness(n: int) -> list[Transformation]:
    """A largest 3-nilpotent subsemigroup of T_n (size kappa(n))."""
    _, t, u = kappa(n)
    return construct_NVWz(canonical_system([n], [t], [u]))


def _table(elems: list[Transformation]) -> tuple[list[list[int]], dict]:
    index = {e.images: i for i, e in enumerate(elems)}
    imgs = [e.images for e in elems]
    table = [[index.get(tuple(g[x - 1] for x in f), -1) for g in imgs] for f in imgs]
    return table, index


def is_null_semigroup(elems: Iterable[Transformation]) -> bool:
    elems = list(set(elems))
    table, _ = _table(elems)
    z = table[0][0]
    return z >= 0 and all(v == z for row in table for v in row)


def is_three_nilpotent(elems: Iterable[Transformation]) -> bool:
    """All triple products equal one element z of the set, and some pair product differs from z."""
    elems = list(set(elems))
    table, _ = _table(elems)
    if any(v < 0 for row in table for v in row):
        return False
    k = len(elems)
    z = table[table[0][0]][0]
    if any(table[table[i][j]][l] != z for i in range(k) for j in range(k) for l in range(k)):
        return False
    return any(v != z for row in table for v in row)


def nu_r(n: int, r: int) -> int:
    """Largest null subsemigroup of T_n whose zero has rank r."""
    return Xi_r(n, r)


def nu(n: int) -> int:
    return xi(n)


def null_degree(p: int) -> int:
    """Degree of a p-element null semigroup."""
    if p < 1:
        raise ValueError("null_degree needs p >= 1")
    n = 1
    while xi(n) < p:
        n += 1
    return n


@lru_cache(maxsize=1024)
def kappa(n: int) -> tuple[int, int, int]:
    """(largest 3-nilpotent subsemigroup of T_n, t, u), smallest t on ties, u = alpha(t)."""
    if n < 4:
        raise ValueError("3-nilpotent subsemigroups of T_n need n >= 4")
    best, bt = -1, 0
    for t in range(1, n + 1):
        v = t ** (n - t) * xi(t)
        if v > best:
            best, bt = v, t
    return best, bt, alpha(bt)


def _f1(k: int) -> int:
    if k <= 2:
        return k
    return k * (2 ** (k - 1) - 2)


def _h1(k: int) -> int:
    return math.factorial(k) if k <= 3 else 0


def _g1(k: int) -> int:
    if k <= 3:
        return 0
    return 3 * k * (1 + 3 ** (k - 2) - 2 ** (k - 1))


def F_table(n: int) -> tuple[list[int], list[int]]:
    """Lists F[0..n] and F1[0..n] (F1[0] is 0, unused)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    F1 = [0] + [_f1(k) for k in range(1, n + 1)]
    F = [1] + [0] * n
    for m in range(1, n + 1):
        c, s = 1, 0  # c = C(m-1, k-1)
        for k in range(1, m + 1):
            s += c * F1[k] * F[m - k]
            c = c * (m - k) // k
        F[m] = s
    return F, F1


def G_table(n: int) -> tuple[list[int], list[int], list[int], list[int]]:
    """Lists G, G1, H, H1 over 0..n (G1[0], H1[0] are 0, unused)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    G1 = [0] + [_g1(k) for k in range(1, n + 1)]
    H1 = [0] + [_h1(k) for k in range(1, n + 1)]
    G, H = [0] * (n + 1), [1] + [0] * n
    for m in range(1, n + 1):
        c, g, h = 1, 0, 0
        for k in range(1, m + 1):
            if H1[k]:
                h += c * H1[k] * H[m - k]
                g += c * H1[k] * G[m - k]
            if G1[k]:
                g += c * G1[k] * (G[m - k] + H[m - k])
            c = c * (m - k) // k
        G[m], H[m] = g, h
    return G, G1, H, H1


def count_F(n: int) -> tuple[int, int]:
    """(F(n), F1(n)): maximal null subsemigroups of T_n, all and with rank-1 zero."""
    F, F1 = F_table(n)
    return F[n], (F1[n] if n >= 1 else 0)


def count_G(n: int) -> tuple[int, int, int, int]:
    """(G(n), G1(n), H(n), H1(n)) for maximal 3-nilpotent counting."""
    G, G1, H, H1 = G_table(n)
    return G[n], G1[n], H[n], H1[n]
