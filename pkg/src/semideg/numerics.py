"""Exact integer functions on naturals and compositions.

Every function here returns a Python ``int`` (arbitrary precision).  Floats
are only ever used to *seed* a search; the returned value is always settled
by exact integer comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "Composition",
    "DominancePair",
    "L",
    "xi_alpha",
    "xi",
    "alpha",
    "pi",
    "pi_r",
    "eta",
    "xi_comp",
    "Xi_r",
    "ceil_log",
    "binomial",
    "compositions",
]


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(s) for s in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(s < 1 for s in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def sum(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def product(self) -> int:
        return math.prod(self.parts)


@dataclass(frozen=True)
class DominancePair:
    """Compositions ``tau <= sigma`` of equal length, compared part by part."""

    sigma: Composition
    tau: Composition

    def __post_init__(self):
        if len(self.sigma) != len(self.tau):
            raise ValueError(
                f"length mismatch: sigma has {len(self.sigma)} parts, tau has {len(self.tau)}"
            )
        for s, t in zip(self.sigma, self.tau):
            if t > s:
                raise ValueError(f"tau part {t} exceeds sigma part {s}")


def compositions(n: int, length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every composition of ``n`` (optionally of a fixed length) as a tuple."""
    if n < 1:
        return
    if length is not None:
        if length < 1 or length > n:
            return
        if length == 1:
            yield (n,)
            return
        for first in range(1, n - length + 2):
            for rest in compositions(n - first, length - 1):
                yield (first,) + rest
        return
    yield (n,)
    for first in range(1, n):
        for rest in compositions(n - first):
            yield (first,) + rest


def L(t: float) -> float:
    """The unique real x > 1/e with x + x*ln(x) = t, for t > 0.

    Bisection on an increasing function; only used to seed integer searches.
    """
    if t <= 0:
        raise ValueError("L is defined on positive reals")
    lo, hi = math.exp(-1), max(1.0, float(t))
    while hi + hi * math.log(hi) < t:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid + mid * math.log(mid) < t:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    return (lo + hi) / 2


@lru_cache(maxsize=4096)
def xi_alpha(n: int) -> tuple[int, int]:
    """Return ``(max t**(n-t), largest maximising t)`` over 1 <= t <= n.

    t**(n-t) is unimodal in t with its real peak at L(n), so only a small
    window of integers around that peak is evaluated.
    """
    if n < 1:
        raise ValueError(f"xi/alpha need n >= 1, got {n}")
    est = L(n)
    lo = max(1, math.floor(est) - 2)
    hi = min(n, math.ceil(est) + 2)
    best, arg = -1, 0
    for t in range(lo, hi + 1):
        v = t ** (n - t)
        if v >= best:
            best, arg = v, t
    return best, arg


def xi(n: int) -> int:
    return xi_alpha(n)[0]


def alpha(n: int) -> int:
    return xi_alpha(n)[1]


def pi_r(n: int, r: int) -> int:
    """Largest product of a length-``r`` composition of ``n``."""
    if r < 1 or r > n:
        raise ValueError(f"pi_r needs 1 <= r <= n, got n={n}, r={r}")
    q, t = divmod(n, r)
    return (q + 1) ** t * q ** (r - t) if t else q**r


def pi(n: int) -> int:
    """Largest product of any composition of ``n``."""
    if n < 1:
        raise ValueError(f"pi needs n >= 1, got {n}")
    if n == 1:
        return 1
    k, m = divmod(n, 3)
    if m == 0:
        return 3**k
    if m == 1:
        return 4 * 3 ** (k - 1)
    return 2 * 3**k


def eta(pair: DominancePair | tuple[Sequence[int], Sequence[int]]) -> int:
    """prod t_i ** (s_i - t_i) for ``tau <= sigma``."""
    if not isinstance(pair, DominancePair):
        sigma, tau = pair
        pair = DominancePair(Composition(sigma), Composition(tau))
    return math.prod(t ** (s - t) for s, t in zip(pair.sigma, pair.tau))


def xi_comp(sigma: Composition | Sequence[int]) -> int:
    parts = sigma.parts if isinstance(sigma, Composition) else Composition(sigma).parts
    return math.prod(xi(s) for s in parts)


def Xi_r(n: int, r: int) -> int:
    """Largest ``xi_comp`` over length-``r`` compositions of ``n``."""
    if r < 1 or r > n:
        raise ValueError(f"Xi_r needs 1 <= r <= n, got n={n}, r={r}")
    return xi(n - r + 1)


def ceil_log(base: int, q: int) -> int:
    """Smallest D >= 0 with base**D >= q."""
    if base < 2:
        raise ValueError(f"ceil_log needs base >= 2, got {base}")
    if q < 1:
        raise ValueError(f"ceil_log needs q >= 1, got {q}")
    if q == 1:
        return 0
    d = max(0, math.ceil(math.log(q) / math.log(base)) - 2)
    p = base**d
    while p < q:
        p *= base
        d += 1
    # the seed may overshoot when the float estimate was high
    while d > 0 and p // base >= q:
        p //= base
        d -= 1
    return d


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"binomial needs 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k)
