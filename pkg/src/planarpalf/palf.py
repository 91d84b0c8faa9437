"""Planar PALF descriptions and the 4-manifold invariants they determine.

A description is a disk with ``h`` holes plus an ordered list of vanishing
cycles (first entry attached first).  The total space is built from
``fiber x D^2`` (one 0-handle and ``h`` 1-handles) by one Lefschetz
2-handle per cycle.  Cycles drawn flat at distinct levels are pairwise
unlinked and carry page framing 0, hence framing -1 in the diagram; the
intersection form is therefore ``-I`` restricted to the integer kernel of the
incidence matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import forms
from .curves import CurveError, FiberModel, StandardCurve, homology_class, is_allowable
from .kirby import KirbyDiagram
from .mcg import MappingClass, compose_all_mc, dehn_twist


@dataclass(frozen=True)
class PalfDescription:
    fiber: FiberModel
    cycles: tuple[StandardCurve, ...] = ()
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        for c in self.cycles:
            c.check(self.fiber)
            if not is_allowable(c):
                raise CurveError(f"cycle {c} is not allowable")
        names = tuple(self.names) or tuple(f"c{i}" for i in range(1, len(self.cycles) + 1))
        if len(names) != len(self.cycles):
            raise ValueError("one name per cycle")
        object.__setattr__(self, "names", names)

    @property
    def holes(self) -> int:
        return self.fiber.holes

    def __len__(self) -> int:
        return len(self.cycles)

    def word(self) -> str:
        """Monodromy as a product of twists, last attached leftmost."""
        if not self.cycles:
            return "1"
        return " ".join(f"t_{n}" for n in reversed(self.names))


def palf(holes: int, cycles: Sequence, names: Sequence[str] = ()) -> PalfDescription:
    return PalfDescription(FiberModel(holes), tuple(c if isinstance(c, StandardCurve) else StandardCurve(c) for c in cycles), tuple(names))


def euler_characteristic(p: PalfDescription) -> int:
    return 1 - p.holes + len(p.cycles)


def incidence_matrix(p: PalfDescription) -> list[list[int]]:
    """``h x k`` matrix whose column ``j`` is the homology class of cycle ``j``."""
    cols = [homology_class(c, p.fiber) for c in p.cycles]
    return [[col[i] for col in cols] for i in range(p.holes)]


@dataclass(frozen=True)
class Homology:
    H1: tuple[int, ...]
    b2: int

    def __str__(self) -> str:
        return f"H1 = {forms.format_group(self.H1)}, b2 = {self.b2}"


def homology(p: PalfDescription) -> Homology:
    N = incidence_matrix(p)
    k = len(p.cycles)
    if k == 0:
        return Homology(tuple([0] * p.holes), 0)
    sf = forms.smith_normal_form(N)
    return Homology(tuple(forms.cokernel(N, p.holes)), k - sf.rank)


def second_homology_basis(p: PalfDescription, method: str = "smith") -> list[list[int]]:
    """Integral basis of the kernel of the incidence matrix."""
    N = incidence_matrix(p)
    k = len(p.cycles)
    if method == "smith":
        return forms.kernel_basis(N, k)
    if method == "hermite":
        return forms.kernel_basis_hermite(N, k)
    raise ValueError(f"unknown kernel method {method!r}")


def intersection_form(p: PalfDescription, method: str = "smith") -> forms.IntSymForm:
    k = len(p.cycles)
    minus_identity = [[-int(i == j) for j in range(k)] for i in range(k)]
    return forms.restrict(minus_identity, second_homology_basis(p, method))


def total_monodromy(p: PalfDescription) -> MappingClass:
    """``t_{c_k} o ... o t_{c_1}`` for cycles ``c_1, ..., c_k`` in attaching order."""
    twists = [dehn_twist(c, p.fiber) for c in reversed(p.cycles)]
    return compose_all_mc(twists, p.holes)


def attach_lefschetz_handle(p: PalfDescription, c, name: str | None = None) -> PalfDescription:
    if not isinstance(c, StandardCurve):
        c = StandardCurve(c)
    if not is_allowable(c):
        raise CurveError(f"{c} is not homologically nontrivial")
    name = name or f"c{len(p.cycles) + 1}"
    return PalfDescription(p.fiber, p.cycles + (c,), p.names + (name,))


def to_kirby(p: PalfDescription) -> KirbyDiagram:
    """Dotted circle per hole, one (-1)-framed 2-handle per cycle.

    A cycle enclosing hole ``i`` runs once through dotted circle ``i``, so every
    nonzero incidence is tagged as geometrically once.
    """
    N = incidence_matrix(p)
    k = len(p.cycles)
    L = [[-int(i == j) for j in range(k)] for i in range(k)]
    Nk = [[N[i][j] for i in range(p.holes)] for j in range(k)]
    tags = {(j, i) for j in range(k) for i in range(p.holes) if Nk[j][i]}
    return KirbyDiagram(p.holes, L, Nk, tags)


@dataclass(frozen=True)
class PalfInvariants:
    chi: int
    H1: tuple[int, ...]
    b2: int
    form: forms.IntSymForm
    signature: int
    parity: str
    boundary_H1: tuple[int, ...]

    def summary(self) -> dict:
        return {
            "chi": self.chi,
            "H1": forms.format_group(self.H1),
            "b2": self.b2,
            "gram": [list(r) for r in self.form.gram],
            "parity": self.parity,
            "signature": self.signature,
            "det": self.form.det,
            "boundary_H1": forms.format_group(self.boundary_H1),
        }


def invariants(p: PalfDescription) -> PalfInvariants:
    hom = homology(p)
    form = intersection_form(p)
    k, h = len(p.cycles), p.holes
    N = incidence_matrix(p)
    # surgery matrix of the boundary: [[-I, N^T], [N, 0]]
    M = [[-int(i == j) for j in range(k)] + [N[r][i] for r in range(h)] for i in range(k)]
    M += [[N[r][j] for j in range(k)] + [0] * h for r in range(h)]
    return PalfInvariants(
        chi=euler_characteristic(p),
        H1=hom.H1,
        b2=hom.b2,
        form=form,
        signature=forms.signature(form),
        parity=forms.parity(form),
        boundary_H1=tuple(forms.cokernel(M, k + h)),
    )
