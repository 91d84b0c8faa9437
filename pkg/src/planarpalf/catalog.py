"""Catalog objects: the W_{m,n} plugs, the manifolds A and B, the plug twist.

Curve data is read from the text files under ``data/``.  Those files were
produced by :func:`search_curve_family` under invariant constraints (their
``meta constraints`` line records which), so every number they imply is
checked here, while the geometric identity of the curves is not claimed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import forms, kirby
from . import formats as fmt
from .curves import FiberModel, all_curves, is_allowable
from .kirby import KirbyDiagram
from .palf import PalfDescription, attach_lefschetz_handle, palf
from . import palf as palf_mod


def default_data_dir() -> Path:
    return Path(str(resources.files("planarpalf") / "data"))


def _dir(data_dir) -> Path:
    return Path(data_dir) if data_dir is not None else default_data_dir()


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class PlugParams:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 2:
            raise ValueError(f"W_{{m,n}} needs m >= 1 and n >= 2, got m={self.m}, n={self.n}")


def _params(p, n=None) -> PlugParams:
    if isinstance(p, PlugParams):
        return p
    return PlugParams(p, n)


# --------------------------------------------------------------------------
# W_{m,n}


def plug_palf(p, n: int | None = None, data_dir=None, l: int | None = None) -> PalfDescription:
    """PALF on the (2n+m-1)-holed disk with 2n+m vanishing cycles."""
    if l is not None:
        raise NotImplementedError("W_{m,n,l} has no shipped curve data")
    p = _params(p, n)
    doc = fmt.load("family", _dir(data_dir) / "W.family")
    holes, cycles = fmt.family_cycles(doc, {"m": p.m, "n": p.n})
    return palf(holes, cycles, [f"a{i}" for i in range(1, len(cycles) + 1)])


def plug_kirby(p, n: int | None = None, data_dir=None) -> KirbyDiagram:
    """Handle diagram of W_{m,n}: one dotted circle, a 0-framed and a -m-framed 2-handle."""
    p = _params(p, n)
    path = _dir(data_dir) / "W.kirby.tmpl"
    text = fmt.instantiate(path.read_text(encoding="utf-8"), {"m": p.m, "n": p.n})
    return fmt.kirby_from_doc(fmt.parse("kirby", text, source=str(path))).diagram


def load_script(name: str, data_dir=None) -> kirby.MoveScript:
    doc = fmt.load("script", _dir(data_dir) / f"{name}.script")
    return fmt.script_from_doc(doc, name)


def reduce_W(p, n: int | None = None, data_dir=None) -> KirbyDiagram:
    return kirby.run_script(plug_kirby(p, n, data_dir), load_script("reduce_W", data_dir)).diagram


# --------------------------------------------------------------------------
# marked diagrams and the plug twist


@dataclass(frozen=True)
class MarkedDiagram:
    """A Kirby diagram with a marked (dotted circle, 0-framed 2-handle) pair.

    ``swap_tags`` lists the geometric-once tags that hold after the dot and
    the 0 are exchanged; the twist swaps them with ``diagram.tags``.
    """

    diagram: KirbyDiagram
    marked_pair: tuple[int, int]
    swap_tags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "marked_pair", tuple(self.marked_pair))
        object.__setattr__(self, "swap_tags", frozenset(self.swap_tags))
        check_marking(self)


def check_marking(md: MarkedDiagram) -> None:
    dgm = md.diagram
    d, h = md.marked_pair
    if not (0 <= d < dgm.dotted and 0 <= h < dgm.handles):
        raise CatalogError(f"marked pair {md.marked_pair} out of range")
    if dgm.L[h][h] != 0:
        raise CatalogError(f"marked 2-handle {h + 1} has framing {dgm.L[h][h]}, expected 0")
    if any(dgm.N[h][e] for e in range(dgm.dotted) if e != d):
        raise CatalogError("marked 2-handle runs over another dotted circle")
    if (h, d) not in dgm.tags and not md.swap_tags:
        raise CatalogError("marked pair neither links once geometrically nor carries a swap annotation")
    for a, b in md.swap_tags:
        if not (0 <= a < dgm.handles and 0 <= b < dgm.dotted):
            raise CatalogError(f"swap tag ({a + 1}, {b + 1}) out of range")


def dot_to_zero(dgm: KirbyDiagram, d: int) -> KirbyDiagram:
    """Half of the plug twist: the dotted circle d becomes a 0-framed 2-handle (appended last)."""
    k, dd = dgm.handles, dgm.dotted
    col = [dgm.N[i][d] for i in range(k)]
    L = [list(dgm.L[i]) + [col[i]] for i in range(k)] + [col + [0]]
    keep = [e for e in range(dd) if e != d]
    N = [[dgm.N[i][e] for e in keep] for i in range(k)] + [[0] * len(keep)]
    return KirbyDiagram(dd - 1, L, N, ())


def plug_twist(md: MarkedDiagram) -> MarkedDiagram:
    """Exchange the marked dot and 0; the new objects keep the old positions."""
    check_marking(md)
    dgm = md.diagram
    d, h = md.marked_pair
    k, dd = dgm.handles, dgm.dotted
    L = [list(r) for r in dgm.L]
    N = [list(r) for r in dgm.N]
    for j in range(k):
        if j != h:
            L[j][h] = L[h][j] = dgm.N[j][d]
            N[j][d] = dgm.L[j][h]
    L[h][h] = 0
    N[h] = [dgm.N[h][d] if e == d else 0 for e in range(dd)]
    return MarkedDiagram(KirbyDiagram(dd, L, N, md.swap_tags), (d, h), dgm.tags)


def _marked_from_file(path: Path) -> MarkedDiagram:
    rec = fmt.kirby_from_doc(fmt.load("kirby", path))
    if rec.mark is None:
        raise CatalogError(f"{path}: diagram has no 'mark' line")
    return MarkedDiagram(rec.diagram, rec.mark, rec.swap_tags)


def _manifold(name: str, data_dir) -> tuple[PalfDescription, MarkedDiagram]:
    base = _dir(data_dir)
    shipped = fmt.palf_from_doc(fmt.load("palf", base / f"{name}.palf"))
    w = plug_palf(1, 2, data_dir)
    if shipped.holes != w.holes or shipped.cycles[: len(w)] != w.cycles or len(shipped) != len(w) + 1:
        raise CatalogError(f"{base / (name + '.palf')}: not W(1,2) extended by one cycle")
    built = attach_lefschetz_handle(w, shipped.cycles[-1], shipped.names[-1])
    return built, _marked_from_file(base / f"{name}.kirby")


def manifold_A(data_dir=None) -> tuple[PalfDescription, MarkedDiagram]:
    return _manifold("A", data_dir)


def manifold_B(data_dir=None) -> tuple[PalfDescription, MarkedDiagram]:
    return _manifold("B", data_dir)


def reduced(name: str, data_dir=None) -> KirbyDiagram:
    """The A or B diagram after its shipped reduction script."""
    _, md = _manifold(name, data_dir)
    return kirby.run_script(md.diagram, load_script(f"reduce_{name}", data_dir)).diagram


# --------------------------------------------------------------------------
# search


def _multisets(curves, k: int, mult: int):
    for combo in itertools.combinations_with_replacement(range(len(curves)), k):
        if mult >= k or max(Counter(combo).values()) <= mult:
            yield [curves[i] for i in combo]


def search_curve_family(c: fmt.Constraints) -> list[PalfDescription]:
    """All curve multisets meeting the constraints, in a fixed order.

    The prefix cycles are kept in front in the given order; the remaining
    cycles range over multisets of standard curves in ascending order.
    """
    h, k = c.holes, c.cycles
    extra = k - len(c.prefix)
    if h < 1 or extra < 0 or (c.b2 is not None and (c.b2 > k or c.b2 < 0)):
        return []
    fiber = FiberModel(h)
    curves = [cv for cv in all_curves(fiber) if c.pattern != "consecutive" or cv.is_consecutive]
    target = forms.IntSymForm(c.form) if c.form else None
    if target is not None and c.b2 is not None and target.rank != c.b2:
        return []
    found = []
    for rest in _multisets(curves, extra, c.multiplicity):
        cycles = [tuple(s) for s in c.prefix] + [cv.enclosed for cv in rest]
        if max(Counter(cycles).values(), default=0) > c.multiplicity:
            continue
        p = palf(h, cycles)
        hom = palf_mod.homology(p)
        if c.h1 is not None and hom.H1 != tuple(c.h1):
            continue
        if c.b2 is not None and hom.b2 != c.b2:
            continue
        if target is not None:
            if hom.b2 != target.rank:
                continue
            if forms.congruent(palf_mod.intersection_form(p), target).verdict != "yes":
                continue
        found.append(p)
        if c.limit is not None and len(found) >= c.limit:
            break
    return found


# --------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    entries: list[tuple[str, str, bool, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, obj: str, check: str, ok: bool, detail: str = "") -> None:
        self.entries.append((obj, check, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(e[2] for e in self.entries)

    def failures(self) -> list[tuple[str, str, bool, str]]:
        return [e for e in self.entries if not e[2]]

    def lines(self) -> list[str]:
        out = [f"{'PASS' if ok else 'FAIL'} {obj}: {check}" + (f" ({detail})" if detail else "") for obj, check, ok, detail in self.entries]
        return out + [f"note: {n}" for n in self.notes]


def agree(pi: palf_mod.PalfInvariants, ki: kirby.Invariants) -> bool:
    """Do the PALF and Kirby routes give the same invariants?"""
    same = (pi.chi, pi.H1, pi.b2, pi.boundary_H1) == (ki.chi, ki.H1, ki.b2, ki.boundary_H1)
    return same and forms.congruent(pi.form, ki.form).verdict == "yes"


def check_plug(m: int, n: int, data_dir=None) -> list[tuple[str, bool, str]]:
    """Profile checks (cycle count, allowability, invariants) for one (m, n)."""
    p = plug_palf(m, n, data_dir)
    pi = palf_mod.invariants(p)
    kd = plug_kirby(m, n, data_dir)
    ki = kirby.invariants(kd)
    red = kirby.invariants(reduce_W(m, n, data_dir))
    w = 4 * (m + n - 1)
    return [
        ("cycles = 2n+m", len(p) == 2 * n + m, f"{len(p)}"),
        ("all cycles allowable", all(is_allowable(cv) for cv in p.cycles), ""),
        ("chi = 2", pi.chi == 2, f"{pi.chi}"),
        ("H1 = 0", pi.H1 == (), f"{pi.H1}"),
        ("b2 = 1", pi.b2 == 1, f"{pi.b2}"),
        ("negative definite", pi.signature == -pi.b2, f"signature {pi.signature}"),
        ("form <-4(m+n-1)>", pi.form.gram == ((-w,),), f"{pi.form.gram}"),
        ("PALF and Kirby agree", agree(pi, ki), ""),
        ("reduce_W ends at <-4(m+n-1)>", red.form.gram == ((-w,),) and red.chi == 2, ""),
    ]


def validate_catalog(data_dir=None, sweep=((1, 4), (2, 5))) -> ValidationReport:
    rep = ValidationReport()
    base = _dir(data_dir)
    (m0, m1), (n0, n1) = sweep
    for m in range(m0, m1 + 1):
        for n in range(n0, n1 + 1):
            try:
                for check, ok, detail in check_plug(m, n, data_dir):
                    rep.add(f"W({m},{n})", check, ok, detail)
            except (fmt.FormatError, ValueError, OSError) as err:
                rep.add(f"W({m},{n})", "load", False, str(err))
    targets = {"A": ((-8, 1), (1, -2)), "B": ((-8, -3), (-3, -3))}
    marked = {}
    for name, gram in targets.items():
        try:
            p, md = _manifold(name, data_dir)
            marked[name] = md
            red = reduced(name, data_dir)
        except (fmt.FormatError, ValueError, OSError, kirby.MovePreconditionError) as err:
            rep.add(name, "load", False, str(err))
            continue
        pi, ki = palf_mod.invariants(p), kirby.invariants(md.diagram)
        rep.add(name, "extends W(1,2) by one cycle", True)
        rep.add(name, "chi = 3, H1 = 0, b2 = 2", (pi.chi, pi.H1, pi.b2) == (3, (), 2))
        rep.add(name, "PALF and Kirby agree", agree(pi, ki))
        rep.add(name, f"reduce_{name} ends at {list(map(list, gram))}", red.L == gram, f"{red.L}")
        rep.add(name, "PALF form congruent to target", forms.congruent(pi.form, forms.IntSymForm(gram)).verdict == "yes")
        rep.add(name, "boundary H1 = Z/15", pi.boundary_H1 == (15,), f"{pi.boundary_H1}")
    if len(marked) == 2:
        rep.add("A", "plug twist gives B", plug_twist(marked["A"]) == marked["B"])
        rep.add("A", "plug twist is an involution", plug_twist(plug_twist(marked["A"])) == marked["A"])
    try:
        fmt.expectations_from_doc(fmt.load("expectations", base / "expectations.txt"))
        rep.add("expectations", "parses", True)
    except (fmt.FormatError, OSError) as err:
        rep.add("expectations", "parses", False, str(err))
    rep.notes.append("W(m,n) fiber: 2n+m-1 holes, i.e. 2n+m boundary components")
    rep.notes.append("alternative reading with 2n+m holes would give chi = 1 for 2n+m cycles, contradicting chi(A) = 3")
    rep.notes.append("W(1,2) factorization has five twists; a four-twist listing is not used")
    return rep
