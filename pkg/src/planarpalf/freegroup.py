"""Reduced words and automorphisms of finitely generated free groups.

Letters are nonzero integers: ``i`` stands for the generator ``x_i`` and
``-i`` for its inverse.  Words are kept freely reduced at all times, so
equality of words is plain tuple equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class RankError(ValueError):
    """Raised when generator indices or ranks do not fit together."""


def _letter(item) -> int:
    # accepts a signed int or an (index, sign) pair with sign in {+1, -1, '+', '-'}
    if isinstance(item, tuple):
        index, sign = item
        if sign in ("+", 1):
            return int(index)
        if sign in ("-", "−", -1):
            return -int(index)
        raise ValueError(f"bad sign {sign!r}")
    return int(item)


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise RankError("rank must be nonnegative")
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise RankError(f"letter {a} outside rank {self.rank}")
        if free_reduce(self.letters) != self.letters:
            raise ValueError("Word letters must be freely reduced; use reduce()")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def inverse(self) -> "Word":
        return Word(tuple(-a for a in reversed(self.letters)), self.rank)

    def is_identity(self) -> bool:
        return not self.letters

    def abelianization(self) -> tuple[int, ...]:
        counts = [0] * self.rank
        for a in self.letters:
            counts[abs(a) - 1] += 1 if a > 0 else -1
        return tuple(counts)

    def __str__(self) -> str:
        return format_word(self)


def reduce(letters: Iterable, rank: int) -> Word:
    """Free reduction of a raw letter sequence.

    >>> str(reduce([(1, '+'), (1, '-'), (2, '+')], 2))
    'x2'
    """
    raw = [_letter(x) for x in letters]
    for a in raw:
        if a == 0 or abs(a) > rank:
            raise RankError(f"generator index {abs(a)} outside rank {rank}")
    return Word(free_reduce(raw), rank)


def generator(i: int, rank: int) -> Word:
    return reduce([i], rank)


def identity_word(rank: int) -> Word:
    return Word((), rank)


def concat(a: Word, b: Word) -> Word:
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")
    return Word(free_reduce(a.letters + b.letters), a.rank)


def product(words: Sequence[Word], rank: int) -> Word:
    letters: list[int] = []
    for w in words:
        if w.rank != rank:
            raise RankError(f"rank mismatch: {w.rank} vs {rank}")
        letters.extend(w.letters)
    return Word(free_reduce(letters), rank)


_TOKEN = re.compile(r"([xX])(\d+)")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``x1x2X1`` style text; the empty string and ``1`` mean the identity."""
    text = text.strip()
    if text in ("", "1", "e"):
        return identity_word(rank)
    pos = 0
    letters = []
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse word {text!r} at offset {pos}")
        i = int(m.group(2))
        letters.append(i if m.group(1) == "x" else -i)
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"cannot parse word {text!r} at offset {pos}")
    return reduce(letters, rank)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return "".join(f"x{a}" if a > 0 else f"X{-a}" for a in w.letters)


@dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism given by generator images, stored with its inverse.

    ``forward[i]`` is the image of ``x_{i+1}`` and ``backward[i]`` its image
    under the inverse automorphism.  The two are checked against each other
    on construction.
    """

    rank: int
    forward: tuple[Word, ...]
    backward: tuple[Word, ...]

    def __post_init__(self):
        if len(self.forward) != self.rank or len(self.backward) != self.rank:
            raise RankError("need one image per generator in both directions")
        for w in self.forward + self.backward:
            if w.rank != self.rank:
                raise RankError("image word has wrong rank")
        for i in range(1, self.rank + 1):
            x = generator(i, self.rank)
            if _substitute(self.backward, _substitute(self.forward, x)) != x:
                raise ValueError(f"backward images do not invert forward images at x{i}")
            if _substitute(self.forward, _substitute(self.backward, x)) != x:
                raise ValueError(f"forward images do not invert backward images at x{i}")

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def inverse(self) -> "FreeAutomorphism":
        return FreeAutomorphism(self.rank, self.backward, self.forward)

    def is_identity(self) -> bool:
        return all(w.letters == (i + 1,) for i, w in enumerate(self.forward))

    def table(self) -> list[str]:
        return [f"x{i + 1} -> {format_word(w)}" for i, w in enumerate(self.forward)]


def _substitute(images: Sequence[Word], w: Word) -> Word:
    letters: list[int] = []
    for a in w.letters:
        img = images[abs(a) - 1].letters
        if a > 0:
            letters.extend(img)
        else:
            letters.extend(-b for b in reversed(img))
    return Word(free_reduce(letters), w.rank)


def _unchecked(rank: int, forward, backward) -> FreeAutomorphism:
    # composition of valid automorphisms is valid; skip the round-trip check
    obj = object.__new__(FreeAutomorphism)
    object.__setattr__(obj, "rank", rank)
    object.__setattr__(obj, "forward", tuple(forward))
    object.__setattr__(obj, "backward", tuple(backward))
    return obj


def automorphism(rank: int, forward: Sequence, backward: Sequence) -> FreeAutomorphism:
    """Build an automorphism from image words (Word objects or letter lists)."""

    def as_word(w):
        return w if isinstance(w, Word) else reduce(w, rank)

    return FreeAutomorphism(rank, tuple(map(as_word, forward)), tuple(map(as_word, backward)))


def identity(rank: int) -> FreeAutomorphism:
    gens = tuple(generator(i, rank) for i in range(1, rank + 1))
    return _unchecked(rank, gens, gens)


def conjugation(u: Word) -> FreeAutomorphism:
    """The inner automorphism ``x -> u x u^-1``."""
    r = u.rank
    ui = u.inverse()
    fwd = [product([u, generator(i, r), ui], r) for i in range(1, r + 1)]
    bwd = [product([ui, generator(i, r), u], r) for i in range(1, r + 1)]
    return _unchecked(r, fwd, bwd)


def apply(phi: FreeAutomorphism, w: Word) -> Word:
    if phi.rank != w.rank:
        raise RankError(f"rank mismatch: automorphism {phi.rank}, word {w.rank}")
    return _substitute(phi.forward, w)


def compose(phi: FreeAutomorphism, psi: FreeAutomorphism) -> FreeAutomorphism:
    """``compose(phi, psi)(x) == phi(psi(x))``."""
    if phi.rank != psi.rank:
        raise RankError(f"rank mismatch: {phi.rank} vs {psi.rank}")
    fwd = [_substitute(phi.forward, w) for w in psi.forward]
    bwd = [_substitute(psi.backward, w) for w in phi.backward]
    return _unchecked(phi.rank, fwd, bwd)


def compose_all(autos: Sequence[FreeAutomorphism], rank: int) -> FreeAutomorphism:
    out = identity(rank)
    for a in autos:
        out = compose(out, a)
    return out


def equals(phi: FreeAutomorphism, psi: FreeAutomorphism) -> bool:
    return phi.rank == psi.rank and phi.forward == psi.forward
