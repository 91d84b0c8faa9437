"""Mapping classes of a disk with holes, relative to the boundary.

A mapping class is stored as its action on the free fundamental group of the
fiber (basepoint on the outer boundary, ``x_i`` a loop around hole ``i``)
together with a framing vector that counts full turns of each inner
boundary circle.  The action on ``pi_1`` forgets twists about inner boundary
circles; the framing vector records exactly those, so the pair decides
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import freegroup as fg
from .curves import FiberModel, StandardCurve, homology_class


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """Signed Artin generators: ``i`` is sigma_i, ``-i`` its inverse."""

    letters: tuple[int, ...]
    strands: int

    def __init__(self, letters: Iterable[int], strands: int):
        letters = tuple(int(a) for a in letters)
        for a in letters:
            if a == 0 or abs(a) > strands - 1:
                raise BraidError(f"generator sigma_{abs(a)} outside {strands} strands")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "strands", strands)

    def inverse(self) -> "BraidWord":
        return BraidWord([-a for a in reversed(self.letters)], self.strands)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise BraidError("strand count mismatch")
        return BraidWord(self.letters + other.letters, self.strands)

    def permutation(self) -> tuple[int, ...]:
        """Image positions: entry ``p-1`` is where the strand starting at ``p`` ends."""
        pos = list(range(1, self.strands + 1))
        for a in self.letters:
            i = abs(a)
            for s, p in enumerate(pos):
                if p == i:
                    pos[s] = i + 1
                elif p == i + 1:
                    pos[s] = i
        return tuple(pos)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(1, self.strands + 1))


def _sigma(i: int, sign: int, rank: int) -> fg.FreeAutomorphism:
    x = lambda j: [j]  # noqa: E731
    fwd = [x(j) for j in range(1, rank + 1)]
    bwd = [x(j) for j in range(1, rank + 1)]
    # sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    fwd[i - 1], fwd[i] = [i, i + 1, -i], [i]
    bwd[i - 1], bwd[i] = [i + 1], [-(i + 1), i, i + 1]
    if sign < 0:
        fwd, bwd = bwd, fwd
    return fg.automorphism(rank, fwd, bwd)


def artin_action(b: BraidWord) -> fg.FreeAutomorphism:
    """Automorphism of ``F_h`` induced by a braid, composed in word order."""
    out = fg.identity(b.strands)
    for a in b.letters:
        out = fg.compose(out, _sigma(abs(a), 1 if a > 0 else -1, b.strands))
    return out


def gathering_braid(c: StandardCurve, holes: int) -> tuple[BraidWord, StandardCurve]:
    """Braid sliding the holes of ``c`` into a consecutive block.

    Enclosed strands after the first are moved left, one at a time from left
    to right, with positive generators.  Returns the braid ``P`` and the
    consecutive block curve; the twist about ``c`` is ``P t_block P^-1``.
    """
    s = c.enclosed
    letters: list[int] = []
    for t in range(1, len(s)):
        target = s[0] + t
        letters.extend(range(s[t] - 1, target - 1, -1))
    block = StandardCurve(range(s[0], s[0] + len(s)))
    return BraidWord(letters, holes), block


def _block_twist(lo: int, hi: int, rank: int, sign: int) -> fg.FreeAutomorphism:
    gamma = fg.reduce(range(lo, hi + 1), rank)
    gi = gamma.inverse()
    if sign < 0:
        gamma, gi = gi, gamma
    fwd, bwd = [], []
    for j in range(1, rank + 1):
        x = fg.generator(j, rank)
        if lo <= j <= hi:
            fwd.append(fg.product([gamma, x, gi], rank))
            bwd.append(fg.product([gi, x, gamma], rank))
        else:
            fwd.append(x)
            bwd.append(x)
    return fg._unchecked(rank, fwd, bwd)


def twist_automorphism(c: StandardCurve, holes: int, sign: int = 1) -> fg.FreeAutomorphism:
    """Action on ``pi_1`` of the Dehn twist about ``c`` (right-handed for sign +1)."""
    if c.is_consecutive:
        return _block_twist(c.enclosed[0], c.enclosed[-1], holes, sign)
    braid, block = gathering_braid(c, holes)
    g = artin_action(braid)
    inner = _block_twist(block.enclosed[0], block.enclosed[-1], holes, sign)
    return fg.compose(g, fg.compose(inner, g.inverse()))


@dataclass(frozen=True)
class MappingClass:
    aut: fg.FreeAutomorphism
    framing: tuple[int, ...]

    def __post_init__(self):
        if self.aut.rank != len(self.framing):
            raise ValueError("automorphism rank and framing length differ")

    @property
    def holes(self) -> int:
        return self.aut.rank

    def inverse(self) -> "MappingClass":
        return MappingClass(self.aut.inverse(), tuple(-a for a in self.framing))

    def is_identity(self) -> bool:
        return self.aut.is_identity() and not any(self.framing)

    def __matmul__(self, other: "MappingClass") -> "MappingClass":
        return compose_mc(self, other)

    def homology_action(self) -> list[list[int]]:
        """Matrix of the induced map on ``H_1(fiber)``; column ``i`` is the image of ``[x_i]``."""
        cols = [w.abelianization() for w in self.aut.forward]
        return [[cols[j][i] for j in range(self.holes)] for i in range(self.holes)]

    def describe(self) -> str:
        lines = self.aut.table()
        lines.append("framing (" + ",".join(map(str, self.framing)) + ")")
        return "\n".join(lines)


def identity_mc(holes: int) -> MappingClass:
    return MappingClass(fg.identity(holes), (0,) * holes)


def dehn_twist(c: StandardCurve, f: FiberModel, sign: int = 1) -> MappingClass:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ind = homology_class(c, f)
    return MappingClass(twist_automorphism(c, f.holes, sign), tuple(sign * a for a in ind))


def braid_mapping_class(b: BraidWord) -> MappingClass:
    """Mapping class of a pure braid with all strand framings zero."""
    if not b.is_pure():
        raise BraidError("braid is not pure; its mapping class permutes holes")
    return MappingClass(artin_action(b), (0,) * b.strands)


def compose_mc(g1: MappingClass, g2: MappingClass) -> MappingClass:
    """``g1 after g2``; framings add because boundary twists are central."""
    if g1.holes != g2.holes:
        raise fg.RankError(f"rank mismatch: {g1.holes} vs {g2.holes}")
    return MappingClass(
        fg.compose(g1.aut, g2.aut),
        tuple(a + b for a, b in zip(g1.framing, g2.framing)),
    )


def compose_all_mc(classes: Sequence[MappingClass], holes: int) -> MappingClass:
    out = identity_mc(holes)
    for g in classes:
        out = compose_mc(out, g)
    return out


def equals_mc(g1: MappingClass, g2: MappingClass) -> bool:
    return g1.framing == g2.framing and fg.equals(g1.aut, g2.aut)


def lantern_sides(f: FiberModel | None = None) -> tuple[MappingClass, MappingClass]:
    """Both sides of the lantern relation on the three-holed disk."""
    f = f or FiberModel(3)
    t = lambda *s: dehn_twist(StandardCurve(s), f)  # noqa: E731
    lhs = compose_all_mc([t(1, 2, 3), t(1), t(2), t(3)], 3)
    rhs = compose_all_mc([t(1, 2), t(1, 3), t(2, 3)], 3)
    return lhs, rhs
