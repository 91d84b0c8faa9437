"""Standard simple closed curves on a disk with holes.

The fiber is a round disk with ``h`` holes placed left to right on a
horizontal axis.  A standard curve is determined by the set ``S`` of holes it
encloses: it bounds a neighborhood of those holes joined by arcs that run
below every hole it skips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class FiberModel:
    holes: int

    def __post_init__(self):
        if self.holes < 1:
            raise CurveError("a fiber needs at least one hole")

    @property
    def boundary_components(self) -> int:
        return self.holes + 1


@dataclass(frozen=True, order=True)
class StandardCurve:
    enclosed: tuple[int, ...]

    def __init__(self, enclosed: Iterable[int]):
        s = tuple(sorted(set(int(i) for i in enclosed)))
        if not s:
            raise CurveError("empty curve")
        if s[0] < 1:
            raise CurveError(f"hole index {s[0]} must be positive")
        object.__setattr__(self, "enclosed", s)

    @property
    def is_consecutive(self) -> bool:
        return self.enclosed[-1] - self.enclosed[0] + 1 == len(self.enclosed)

    @property
    def span(self) -> tuple[int, int]:
        return self.enclosed[0], self.enclosed[-1]

    def check(self, fiber: FiberModel) -> None:
        if self.enclosed[-1] > fiber.holes:
            raise CurveError(f"hole index {self.enclosed[-1]} exceeds {fiber.holes} holes")

    def __str__(self) -> str:
        return format_curve(self)


def curve(*holes: int) -> StandardCurve:
    return StandardCurve(holes)


def format_curve(c: StandardCurve) -> str:
    return "{" + ",".join(map(str, c.enclosed)) + "}"


def homology_class(c: StandardCurve, f: FiberModel) -> tuple[int, ...]:
    """Coordinates of ``[c]`` in the basis of hole classes of ``H_1(fiber)``."""
    c.check(f)
    members = set(c.enclosed)
    return tuple(1 if i in members else 0 for i in range(1, f.holes + 1))


def is_allowable(c) -> bool:
    """Whether a curve is homologically nontrivial on the fiber.

    Hole classes form a free basis, so every standard curve qualifies.  Raw
    hole collections (as read from files) are validated first and an empty
    one raises :class:`CurveError` rather than returning ``False``.
    """
    if not isinstance(c, StandardCurve):
        c = StandardCurve(c)
    return any(homology_class(c, FiberModel(c.enclosed[-1])))


def _inside_one_gap(inner: tuple[int, ...], outer: tuple[int, ...]) -> bool:
    lo, hi = inner[0], inner[-1]
    return not any(lo < j < hi for j in outer) and outer[0] < lo and hi < outer[-1]


def disjoint(c1: StandardCurve, c2: StandardCurve, f: FiberModel | None = None) -> bool:
    """Conservative test that the two curves can be isotoped off each other.

    ``True`` is a guarantee; ``False`` only means the arcs-below picture does
    not exhibit disjoint representatives.
    """
    if f is not None:
        c1.check(f)
        c2.check(f)
    s1, s2 = set(c1.enclosed), set(c2.enclosed)
    if s1 <= s2 or s2 <= s1:
        return True
    if s1 & s2:
        return False
    a, b = c1.enclosed, c2.enclosed
    if a[-1] < b[0] or b[-1] < a[0]:
        return True
    return _inside_one_gap(a, b) or _inside_one_gap(b, a)


def all_curves(f: FiberModel) -> list[StandardCurve]:
    """Every standard curve on ``f``, ordered by size then lexicographically."""
    from itertools import combinations

    out = []
    for r in range(1, f.holes + 1):
        out.extend(StandardCurve(c) for c in combinations(range(1, f.holes + 1), r))
    return out
