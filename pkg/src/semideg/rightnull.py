"""Right null semigroups and the degree of rank-1 variants of T_n.

A p x q right null semigroup is a right zero band of p idempotents, each
carrying a q-element null semigroup, with S_b S_c = {z_c}.  Its degree is
the least 2A + 3B + C + D over A in {0,1,2}, B, D >= 0, C >= 2 with
2^A 3^B C >= p and C^D >= q; the witness uses A blocks of size 2, B of
size 3 and one block of size C + D.

The variant of T_n at a rank-1 sandwich element is an n x n^(n-1) right null
semigroup, so its degree mu(n) is the same optimisation with q = n^(n-1).
"""
from __future__ import annotations

import heapq
import itertools
import math
import random
from dataclasses import dataclass

from .numerics import Composition, DominancePair, ceil_log, eta, pi, xi
from .transform import Transformation, constant, variant_product, full_transformation_semigroup
from .nildeg import ZetaSystem, canonical_system, construct_NWz, null_witness

__all__ = [
    "RnSolution",
    "VariantBounds",
    "rn_feasible",
    "rn_degree",
    "rn_witness",
    "mu_rank1",
    "variant_degree",
    "variant_decompose",
]


@dataclass(frozen=True)
class RnSolution:
    """Optimal degree and, for p, q >= 2, the (A, B, C, D) attaining it.

    For p = 1 or q = 1 the degree comes from a plain scan and A..D are None.
    """

    degree: int
    A: int | None = None
    B: int | None = None
    C: int | None = None
    D: int | None = None

    def to_dict(self) -> dict:
        return {"degree": self.degree, "A": self.A, "B": self.B, "C": self.C, "D": self.D}


@dataclass(frozen=True)
class VariantBounds:
    n: int
    r: int
    lower: int
    upper: int
    exact: int | None = None

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "lower": self.lower, "upper": self.upper, "exact": self.exact}


def _partitions(m: int, largest: int | None = None):
    # non-increasing partitions; the feasibility conditions ignore part order
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest or m), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def rn_feasible(m: int, p: int, q: int) -> DominancePair | None:
    """Some tau <= sigma |= m with prod(tau) >= p and eta(sigma, tau) >= q, or None.

    Exhaustive over partitions of m (exponential; meant for small m).
    """
    if min(m, p, q) < 1:
        raise ValueError("rn_feasible needs m, p, q >= 1")
    if pi(m) < p:
        return None
    for sigma in _partitions(m):
        if math.prod(sigma) < p or math.prod(xi(s) for s in sigma) < q:
            continue
        for tau in itertools.product(*(range(1, s + 1) for s in sigma)):
            if math.prod(tau) >= p and eta((sigma, tau)) >= q:
                return DominancePair(Composition(sigma), Composition(tau))
    return None


def _min_b(p: int, base: int) -> int:
    # least B >= 0 with base * 3**B >= p
    b, v = 0, base
    while v < p:
        v *= 3
        b += 1
    return b


def _solve(p: int, q: int, c_max: int) -> RnSolution:
    """Minimise 2A + 3B + C + D; ties broken by (degree, C, A).

    D = ceil_log(C, q) is exact but costly when q is huge, so candidates are
    visited in order of a float lower bound on their total and exact values
    are only computed while that bound can still reach the best total.
    """
    lnq = math.log(q)
    heap = []
    for C in range(2, c_max + 1):
        # the float estimate can be off by a little; floor minus one is safe
        d_lb = max(0, math.floor(lnq / math.log(C)) - 1)
        part = min(2 * A + 3 * _min_b(p, 2**A * C) for A in range(3))
        heap.append((part + C + d_lb, C))
    heapq.heapify(heap)
    best = None
    while heap:
        lb, C = heapq.heappop(heap)
        if best is not None and lb > best[0]:
            break
        D = ceil_log(C, q)
        for A in range(3):
            B = _min_b(p, 2**A * C)
            cand = (2 * A + 3 * B + C + D, C, A, B, D)
            if best is None or cand[:3] < best[:3]:
                best = cand
    deg, C, A, B, D = best
    return RnSolution(deg, A, B, C, D)


def rn_degree(p: int, q: int) -> RnSolution:
    """Degree of a p x q right null semigroup."""
    if p < 1 or q < 1:
        raise ValueError("rn_degree needs p, q >= 1")
    if p == 1:
        n = 1
        while xi(n) < q:
            n += 1
        return RnSolution(n)
    if q == 1:
        n = 1
        while pi(n) < p:
            n += 1
        return RnSolution(n)
    return _solve(p, q, rn_degree(p, 1).degree + rn_degree(1, q).degree)


def _right_zero_blocks(n: int) -> list[int]:
    # block sizes whose product is pi(n)
    if n == 1:
        return [1]
    k, m = divmod(n, 3)
    if m == 0:
        return [3] * k
    if m == 1:
        return [3] * (k - 1) + [2, 2]
    return [3] * k + [2]


def rn_witness(p: int, q: int) -> list[Transformation]:
    """A p x q right null subsemigroup of T_m, m = rn_degree(p, q).degree.

    Blocks Z_i carry sets W_i; every idempotent sending each Z_i to a point
    of W_i is kept, together with the null semigroup of maps pushing Z_i into
    W_i and W_i onto that point.  The result is trimmed to p idempotents with
    q elements each.
    """
    sol = rn_degree(p, q)
    if p == 1:
        return _trim_null(null_witness(sol.degree), None, q)
    if q == 1:
        sizes = _right_zero_blocks(sol.degree)
        wsizes = sizes
    else:
        sizes = [2] * sol.A + [3] * sol.B + [sol.C + sol.D]
        wsizes = [2] * sol.A + [3] * sol.B + [sol.C]
    base = canonical_system(sizes, wsizes)
    blocks = sorted(base.blocks().items())
    out: list[Transformation] = []
    choices = itertools.product(*(sorted(base.W[z]) for z, _ in blocks))
    for pts in itertools.islice(choices, p):
        images = [0] * base.zeta.degree
        W = {}
        for (z, Z), w in zip(blocks, pts):
            for x in Z:
                images[x - 1] = w
            W[w] = base.W[z]
        zeta = Transformation(images)
        out += _trim_null(construct_NWz(ZetaSystem(zeta, W)), zeta, q)
    if len(out) != p * q:  # pragma: no cover
        raise RuntimeError("right null witness layout too small")
    return out


def _trim_null(elems: list[Transformation], zero: Transformation | None, q: int) -> list[Transformation]:
    # keep the zero plus the first q - 1 other elements
    if zero is None:
        zero = elems[0] * elems[0]
    rest = sorted(e for e in elems if e != zero)
    return [zero] + rest[: q - 1]


def mu_rank1(n: int) -> int:
    """Degree of the variant of T_n at a rank-1 sandwich element."""
    if n < 1:
        raise ValueError("mu_rank1 needs n >= 1")
    if n == 1:
        return 1
    # C <= n suffices here, tighter than the general bound
    return _solve(n, n ** (n - 1), n).degree


def variant_degree(n: int, r: int) -> VariantBounds:
    """Bounds n <= degree <= 2n - r for the variant of T_n at a rank-r element.

    The exact value is known when r >= n - 6 (it is 2n - r) and when r = 1.
    """
    if not 1 <= r <= n:
        raise ValueError(f"variant_degree needs 1 <= r <= n, got n={n}, r={r}")
    exact = None
    if r >= n - 6:
        exact = 2 * n - r
    elif r == 1:
        exact = mu_rank1(n)
    return VariantBounds(n, r, n, 2 * n - r, exact)


def variant_decompose(n: int, samples: int = 2000, seed: int = 0) -> list[list[Transformation]]:
    """Split T_n into S_i = {f : 1f = i} and check S_i * S_j = {e_j} under the e_1 sandwich.

    The check is exhaustive for n <= 4 and uses ``samples`` random pairs above that.
    """
    if not 2 <= n <= 6:
        raise ValueError("variant_decompose supports 2 <= n <= 6")
    parts: list[list[Transformation]] = [[] for _ in range(n)]
    for f in full_transformation_semigroup(n):
        parts[f(1) - 1].append(f)
    a = constant(n, 1)
    if n <= 4:
        pairs = ((i, f, j, g) for i in range(n) for j in range(n) for f in parts[i] for g in parts[j])
    else:
        rng = random.Random(seed)
        pairs = []
        for _ in range(samples):
            i, j = rng.randrange(n), rng.randrange(n)
            pairs.append((i, rng.choice(parts[i]), j, rng.choice(parts[j])))
    for i, f, j, g in pairs:
        if variant_product(f, a, g) != constant(n, j + 1):  # pragma: no cover
            raise RuntimeError(f"sandwich law fails for {f} and {g}")
    return parts
