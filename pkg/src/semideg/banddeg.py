"""Degrees of left zero, right zero and rectangular band semigroups.

``beta_r(p, q, r)`` is the least n such that some rank-r part of T_n holds a
p x q rectangular band; ``beta(p, q)`` minimises over r.  Rectangular groups
reduce to the same numbers once the group's own degree is known.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .numerics import ceil_log, pi, pi_r, xi
from .transform import Transformation

__all__ = [
    "DegreeResult",
    "lz_degree_rank",
    "lz_degree",
    "rz_degree_rank",
    "rz_degree",
    "beta_r",
    "beta",
    "band_witness",
    "rect_group_degree",
]


def _check_pos(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def _least(pred, lo: int) -> int:
    """Least n >= lo with pred(n), for a monotone predicate (exponential then binary search)."""
    if pred(lo):
        return lo
    step = 1
    hi = lo + step
    while not pred(hi):
        lo = hi
        step *= 2
        hi = lo + step
    # pred(lo) false, pred(hi) true
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def lz_degree_rank(p: int, r: int) -> int:
    """Least n with r**(n-r) >= p: degree of a p-element left zero semigroup at rank r."""
    _check_pos(p=p)
    if r < 2:
        raise ValueError(f"lz_degree_rank needs r >= 2, got {r}")
    return ceil_log(r, p) + r


def lz_degree(p: int) -> int:
    _check_pos(p=p)
    return _least(lambda n: xi(n) >= p, 1)


def rz_degree_rank(q: int, r: int) -> int:
    _check_pos(q=q, r=r)
    return _least(lambda n: pi_r(n, r) >= q, r)


def rz_degree(q: int) -> int:
    _check_pos(q=q)
    return _least(lambda n: pi(n) >= q, 1)


def beta_r(p: int, q: int, r: int) -> int | float:
    """Least degree at rank r of a p x q rectangular band; ``math.inf`` if none."""
    _check_pos(p=p, q=q, r=r)
    if r == 1:
        return math.inf if p >= 2 else q
    if q == 1:
        return lz_degree_rank(p, r)
    if p == 1:
        return rz_degree_rank(q, r)
    l = ceil_log(r, p)
    return l + _least(lambda m: pi_r(m, r) >= q, r)


@dataclass(frozen=True)
class DegreeResult:
    degree: int
    rank: int
    per_rank: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "rank": self.rank,
            "per_rank": {str(r): n for r, n in sorted(self.per_rank.items())},
        }


def _min_over_ranks(p: int, q: int, r_lo: int) -> DegreeResult:
    # beta_r >= r, so ranks past the best value found cannot improve it
    per_rank: dict[int, int] = {}
    best, best_r = math.inf, 0
    r = r_lo
    while r <= best:
        b = beta_r(p, q, r)
        if b != math.inf:
            per_rank[r] = b
            if b < best:
                best, best_r = b, r
        r += 1
    return DegreeResult(int(best), best_r, per_rank)


def beta(p: int, q: int) -> DegreeResult:
    """Degree of a p x q rectangular band, with the least rank attaining it."""
    _check_pos(p=p, q=q)
    res = _min_over_ranks(p, q, 1 if p == 1 else 2)
    # the closed forms for the degenerate shapes must agree with the rank search
    if q == 1 and p >= 2:
        assert res.degree == lz_degree(p)
    if p == 1:
        assert res.degree == rz_degree(q)
    return res


def _near_equal_blocks(start: int, m: int, r: int) -> list[list[int]]:
    # r consecutive blocks of {start..start+m-1}, the larger ones first
    size, extra = divmod(m, r)
    blocks, x = [], start
    for i in range(r):
        s = size + 1 if i < extra else size
        blocks.append(list(range(x, x + s)))
        x += s
    return blocks


def band_witness(p: int, q: int) -> list[Transformation]:
    """A p x q rectangular band inside T_n at rank r, with (n, r) from ``beta``.

    Points 1..l are a prefix steered by functions f: {1..l} -> {1..r}; the
    remaining points split into r near-equal blocks whose transversals give
    the images.  The map e(f, A) sends block i, plus the prefix points that f
    sends to i, onto the i-th point of A.
    """
    res = beta(p, q)
    n, r = res.degree, res.rank
    l = ceil_log(r, p) if r >= 2 else 0
    blocks = _near_equal_blocks(l + 1, n - l, r)
    funcs = itertools.islice(itertools.product(range(r), repeat=l), p)
    funcs = list(funcs)
    transversals = list(itertools.islice(itertools.product(*blocks), q))
    if len(funcs) < p or len(transversals) < q:  # pragma: no cover
        raise RuntimeError("witness layout too small")
    out = []
    for f in funcs:
        for A in transversals:
            images = [0] * n
            for i, blk in enumerate(blocks):
                for x in blk:
                    images[x - 1] = A[i]
            for x in range(1, l + 1):
                images[x - 1] = A[f[x - 1]]
            out.append(Transformation._raw(tuple(images)))
    return out


def rect_group_degree(p: int, q: int, d: int) -> int:
    """Degree of a p x q rectangular band times a group of degree ``d``."""
    _check_pos(p=p, q=q, d=d)
    cap = beta(p, q).degree + d
    best: int | float = math.inf
    r = d
    while r <= min(cap, best):
        best = min(best, beta_r(p, q, r))
        r += 1
    return int(best)
