"""Transformations of {1..n} and a structure classifier for finite sets of them.

Maps act on the right, as in ``x f``: the product ``f * g`` applies ``f``
first and ``g`` second, so ``i (f g) = (i f) g``.  Most libraries compose the
other way round; everything in this package uses this left-to-right order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Transformation",
    "identity",
    "constant",
    "compose",
    "image",
    "kernel_partition",
    "rank",
    "is_idempotent",
    "is_idempotent_tabular",
    "oplus",
    "variant_product",
    "StructureReport",
    "classify_structure",
    "parse_transformation",
    "format_transformation",
    "full_transformation_semigroup",
]


class Transformation:
    """A total self-map of {1..n}; ``images[i-1]`` holds the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValueError("a transformation needs degree >= 1")
        for x in images:
            if not 1 <= x <= n:
                raise ValueError(f"image {x} outside 1..{n}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Transformation":
        # trusted constructor for images already known to be valid
        obj = cls.__new__(cls)
        obj.images = images
        obj._hash = hash(images)
        return obj

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Transformation) and self.images == other.images

    def __lt__(self, other: "Transformation") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"

    def __str__(self) -> str:
        return format_transformation(self)


def identity(n: int) -> Transformation:
    return Transformation._raw(tuple(range(1, n + 1)))


def constant(n: int, i: int) -> Transformation:
    """The constant map e_i on {1..n}."""
    if not 1 <= i <= n:
        raise ValueError(f"constant value {i} outside 1..{n}")
    return Transformation._raw((i,) * n)


def compose(f: Transformation, g: Transformation) -> Transformation:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    gi = g.images
    return Transformation._raw(tuple(gi[x - 1] for x in f.images))


def variant_product(f: Transformation, a: Transformation, g: Transformation) -> Transformation:
    """The sandwich product f a g."""
    return compose(compose(f, a), g)


def image(f: Transformation) -> frozenset[int]:
    return frozenset(f.images)


def kernel_partition(f: Transformation) -> frozenset[frozenset[int]]:
    blocks: dict[int, list[int]] = {}
    for i, x in enumerate(f.images, 1):
        blocks.setdefault(x, []).append(i)
    return frozenset(frozenset(b) for b in blocks.values())


def rank(f: Transformation) -> int:
    return len(set(f.images))


def is_idempotent(f: Transformation) -> bool:
    return compose(f, f) == f


def is_idempotent_tabular(f: Transformation) -> bool:
    """Idempotence via the tabular form: each image point lies in its own preimage block."""
    return all(f(a) == a for a in image(f))


def oplus(blocks: Sequence[tuple[Iterable[int], Mapping[int, int] | Transformation]]) -> Transformation:
    """Glue maps on disjoint blocks covering {1..n} into one transformation.

    A local map is either a mapping ``{x: x f}`` on the block, or a
    ``Transformation`` of degree ``|block|`` read through the sorted order of
    the block (so a map on {1..k} glues onto the block {1..k} unchanged).
    """
    assigned: dict[int, int] = {}
    for points, local in blocks:
        pts = sorted(set(points))
        if not pts:
            raise ValueError("empty block")
        if isinstance(local, Transformation):
            if local.degree != len(pts):
                raise ValueError(f"local map of degree {local.degree} on a block of size {len(pts)}")
            local = {pts[i]: pts[local.images[i] - 1] for i in range(len(pts))}
        if set(local) != set(pts):
            raise ValueError(f"local map domain {sorted(local)} differs from block {pts}")
        ptset = set(pts)
        for x, y in local.items():
            if x in assigned:
                raise ValueError(f"blocks overlap at {x}")
            if y not in ptset:
                raise ValueError(f"local map sends {x} to {y}, outside its block")
            assigned[x] = y
    n = len(assigned)
    if set(assigned) != set(range(1, n + 1)):
        missing = sorted(set(range(1, max(assigned) + 1)) - set(assigned))
        raise ValueError(f"blocks do not cover 1..n; missing {missing}")
    return Transformation._raw(tuple(assigned[i] for i in range(1, n + 1)))


def full_transformation_semigroup(n: int) -> list[Transformation]:
    """All n**n maps of {1..n}, in lexicographic order of image tuples."""
    from itertools import product

    return [Transformation._raw(t) for t in product(range(1, n + 1), repeat=n)]


@dataclass(frozen=True)
class StructureReport:
    closed: bool
    is_null: bool = False
    zero: Transformation | None = None
    is_left_zero: bool = False
    is_right_zero: bool = False
    band_dimensions: tuple[int, int] | None = None
    right_null_dimensions: tuple[int, int] | None = None
    left_null_dimensions: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "closed": self.closed,
            "null": self.is_null,
            "zero": str(self.zero) if self.zero is not None else None,
            "left_zero": self.is_left_zero,
            "right_zero": self.is_right_zero,
            "band": list(self.band_dimensions) if self.band_dimensions else None,
            "right_null": list(self.right_null_dimensions) if self.right_null_dimensions else None,
            "left_null": list(self.left_null_dimensions) if self.left_null_dimensions else None,
        }


def _null_like_dimensions(elems, table, k, squares, right: bool) -> tuple[int, int] | None:
    # right null: xy = yy for all x, y; left null: xy = xx
    for i in range(k):
        row = table[i]
        for j in range(k):
            if row[j] != (squares[j] if right else squares[i]):
                return None
    classes: dict[int, int] = {}
    for s in squares:
        classes[s] = classes.get(s, 0) + 1
    sizes = set(classes.values())
    if len(sizes) != 1:
        return None
    return len(classes), sizes.pop()


def classify_structure(elements: Iterable[Transformation]) -> StructureReport:
    """Multiply every ordered pair of ``elements`` and report which laws hold.

    Cost is quadratic in the number of elements.
    """
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("classify_structure needs a non-empty set")
    n = elems[0].degree
    if any(e.degree != n for e in elems):
        raise ValueError("elements have different degrees")
    k = len(elems)
    index = {e.images: i for i, e in enumerate(elems)}
    imgs = [e.images for e in elems]
    table: list[list[int]] = []
    for fi in imgs:
        row = []
        for gi in imgs:
            j = index.get(tuple(gi[x - 1] for x in fi))
            if j is None:
                return StructureReport(closed=False)
            row.append(j)
        table.append(row)

    squares = [table[i][i] for i in range(k)]
    first = table[0][0]
    is_null = all(v == first for row in table for v in row)
    left_zero = all(table[i][j] == i for i in range(k) for j in range(k))
    right_zero = all(table[i][j] == j for i in range(k) for j in range(k))

    band = None
    if all(squares[i] == i for i in range(k)) and all(
        table[table[i][j]][i] == i for i in range(k) for j in range(k)
    ):
        # rectangular band: rows are R-classes, columns L-classes
        rows = {frozenset(j for j in range(k) if table[i][j] == j and table[j][i] == i) for i in range(k)}
        cols = {frozenset(j for j in range(k) if table[i][j] == i and table[j][i] == j) for i in range(k)}
        if len(rows) * len(cols) == k:
            band = (len(rows), len(cols))

    return StructureReport(
        closed=True,
        is_null=is_null,
        zero=elems[first] if is_null else None,
        is_left_zero=left_zero,
        is_right_zero=right_zero,
        band_dimensions=band,
        right_null_dimensions=_null_like_dimensions(elems, table, k, squares, right=True),
        left_null_dimensions=_null_like_dimensions(elems, table, k, squares, right=False),
    )


_TWO_LINE = re.compile(r"^\s*\[\s*([\d\s]*?)\s*->\s*([\d\s]*?)\s*\]\s*$")


def format_transformation(f: Transformation) -> str:
    """Two-line notation on one line, e.g. ``[1 2 3 4 -> 1 2 3 3]``."""
    dom = " ".join(str(i) for i in range(1, f.degree + 1))
    return f"[{dom} -> {' '.join(map(str, f.images))}]"


def parse_transformation(text: str) -> Transformation:
    m = _TWO_LINE.match(text)
    if not m:
        raise ValueError(f"not in two-line notation: {text!r}")
    dom = [int(x) for x in m.group(1).split()]
    img = [int(x) for x in m.group(2).split()]
    if len(dom) != len(img):
        raise ValueError(f"top and bottom rows differ in length: {text!r}")
    if sorted(dom) != list(range(1, len(dom) + 1)):
        raise ValueError(f"top row must list 1..n: {text!r}")
    mapping = dict(zip(dom, img))
    return Transformation(mapping[i] for i in range(1, len(dom) + 1))
