"""Matrix-level Kirby diagrams and a scripted move engine.

A diagram records ``d`` dotted circles (1-handles, mutually unlinked and
0-framed for boundary computations) and ``k`` framed 2-handles through

* ``L`` -- symmetric ``k x k`` linking matrix, framings on the diagonal,
* ``N`` -- ``k x d`` linking numbers of 2-handles with dotted circles,
* ``tags`` -- (handle, dotted) pairs known to meet geometrically once.

Matrix data alone cannot certify that a 1-/2-handle pair cancels, so
cancellation requires a tag.  Handle indices are 0-based in this API and
1-based in the text formats.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from . import forms


class MovePreconditionError(ValueError):
    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(message if step is None else f"step {step}: {message}")


class InvariantViolation(RuntimeError):
    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(message if step is None else f"step {step}: {message}")


def _freeze(m) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True)
class KirbyDiagram:
    dotted: int
    L: tuple[tuple[int, ...], ...]
    N: tuple[tuple[int, ...], ...]
    tags: frozenset = field(default_factory=frozenset)

    def __init__(self, dotted: int, L=(), N=None, tags=()):
        L = _freeze(L)
        k = len(L)
        N = _freeze(N) if N is not None else tuple(() for _ in range(k))
        if dotted < 0:
            raise ValueError("negative dotted circle count")
        if any(len(r) != k for r in L):
            raise ValueError("L must be square")
        if any(L[i][j] != L[j][i] for i in range(k) for j in range(i)):
            raise ValueError("L must be symmetric")
        if len(N) != k or any(len(r) != dotted for r in N):
            raise ValueError(f"N must be {k} x {dotted}")
        tags = frozenset((int(a), int(b)) for a, b in tags)
        for a, b in tags:
            if not (0 <= a < k and 0 <= b < dotted):
                raise ValueError(f"tag ({a}, {b}) out of range")
        object.__setattr__(self, "dotted", dotted)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "tags", tags)

    @property
    def handles(self) -> int:
        return len(self.L)

    @property
    def framings(self) -> tuple[int, ...]:
        return tuple(self.L[i][i] for i in range(self.handles))

    def boundary_matrix(self) -> list[list[int]]:
        """Surgery matrix of the boundary, dotted circles read as 0-framed unknots."""
        k, d = self.handles, self.dotted
        M = [list(self.L[i]) + list(self.N[i]) for i in range(k)]
        M += [[self.N[j][i] for j in range(k)] + [0] * d for i in range(d)]
        return M


def empty_diagram() -> KirbyDiagram:
    return KirbyDiagram(0)


# --------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class Invariants:
    chi: int
    H1: tuple[int, ...]
    b2: int
    torsion: tuple[int, ...]
    form: forms.IntSymForm
    parity: str
    signature: int
    boundary_H1: tuple[int, ...]

    def summary(self) -> dict:
        return {
            "chi": self.chi,
            "H1": forms.format_group(self.H1),
            "b2": self.b2,
            "torsion": list(self.torsion),
            "gram": [list(r) for r in self.form.gram],
            "parity": self.parity,
            "signature": self.signature,
            "det": self.form.det,
            "boundary_H1": forms.format_group(self.boundary_H1),
        }


def invariants(dgm: KirbyDiagram) -> Invariants:
    k, d = dgm.handles, dgm.dotted
    Nt = [[dgm.N[j][i] for j in range(k)] for i in range(d)]
    H1 = forms.cokernel(Nt, d) if d else []
    basis = forms.kernel_basis_hermite(Nt, k) if d else forms.identity_matrix(k)
    form = forms.restrict(dgm.L, basis)
    return Invariants(
        chi=1 - d + k,
        H1=tuple(H1),
        b2=len(basis),
        torsion=tuple(x for x in H1 if x),
        form=form,
        parity=forms.parity(form),
        signature=forms.signature(form),
        boundary_H1=tuple(forms.cokernel(dgm.boundary_matrix(), k + d)),
    )


def form_class(inv: Invariants) -> dict:
    return forms.form_invariants(inv.form)


# --------------------------------------------------------------------------
# moves


def _check_handle(dgm: KirbyDiagram, i: int, what: str = "handle") -> None:
    if not 0 <= i < dgm.handles:
        raise MovePreconditionError(f"{what} {i + 1} does not exist ({dgm.handles} handles)")


def slide(dgm: KirbyDiagram, i: int, j: int, sign: int) -> KirbyDiagram:
    """Slide handle ``i`` over handle ``j``; its class becomes ``i + sign * j``."""
    _check_handle(dgm, i)
    _check_handle(dgm, j)
    if i == j:
        raise MovePreconditionError("cannot slide a handle over itself")
    if sign not in (1, -1):
        raise MovePreconditionError("slide sign must be + or -")
    L = [list(r) for r in dgm.L]
    k = dgm.handles
    lii = L[i][i] + L[j][j] + 2 * sign * L[i][j]
    for m in range(k):
        if m != i:
            L[i][m] = L[m][i] = L[i][m] + sign * L[j][m]
    L[i][i] = lii
    N = [list(r) for r in dgm.N]
    N[i] = [a + sign * b for a, b in zip(N[i], N[j])]
    tags = {t for t in dgm.tags if t[0] != i}
    return KirbyDiagram(dgm.dotted, L, N, tags)


def _delete(dgm: KirbyDiagram, handle: int | None, dotted: int | None) -> KirbyDiagram:
    keep_h = [m for m in range(dgm.handles) if m != handle]
    keep_d = [m for m in range(dgm.dotted) if m != dotted]
    L = [[dgm.L[a][b] for b in keep_h] for a in keep_h]
    N = [[dgm.N[a][b] for b in keep_d] for a in keep_h]
    hmap = {old: new for new, old in enumerate(keep_h)}
    dmap = {old: new for new, old in enumerate(keep_d)}
    tags = {(hmap[a], dmap[b]) for a, b in dgm.tags if a in hmap and b in dmap}
    return KirbyDiagram(len(keep_d), L, N, tags)


def cancel_steps(dgm: KirbyDiagram, j: int, i: int) -> Iterator[tuple[str, KirbyDiagram]]:
    """Yield the slides clearing dotted circle ``i`` and then the cancellation."""
    _check_handle(dgm, j)
    if not 0 <= i < dgm.dotted:
        raise MovePreconditionError(f"dotted circle {i + 1} does not exist ({dgm.dotted} dotted)")
    n = dgm.N[j][i]
    if abs(n) != 1:
        raise MovePreconditionError(
            f"handle {j + 1} links dotted circle {i + 1} {n} times algebraically; need +-1"
        )
    if (j, i) not in dgm.tags:
        raise MovePreconditionError(
            f"handle {j + 1} links dotted circle {i + 1} algebraically once but the pair is "
            "not tagged as geometrically once; matrix data cannot certify cancellation"
        )
    cur = dgm
    for m in range(dgm.handles):
        if m == j:
            continue
        e = cur.N[m][i]
        s = -e * n // abs(e) if e else 0
        for _ in range(abs(e)):
            cur = slide(cur, m, j, s)
            yield f"slide {m + 1} over {j + 1} {'+' if s > 0 else '-'}", cur
    yield f"cancel {j + 1} with {i + 1}", _delete(cur, j, i)


def cancel_pair(dgm: KirbyDiagram, j: int, i: int) -> KirbyDiagram:
    out = dgm
    for _, out in cancel_steps(dgm, j, i):
        pass
    return out


def add_cancelling_pair(dgm: KirbyDiagram) -> KirbyDiagram:
    k, d = dgm.handles, dgm.dotted
    L = [list(r) + [0] for r in dgm.L] + [[0] * (k + 1)]
    N = [list(r) + [0] for r in dgm.N] + [[0] * d + [1]]
    return KirbyDiagram(d + 1, L, N, set(dgm.tags) | {(k, d)})


def blow_up(dgm: KirbyDiagram, sign: int) -> KirbyDiagram:
    if sign not in (1, -1):
        raise MovePreconditionError("blow-up sign must be + or -")
    k, d = dgm.handles, dgm.dotted
    L = [list(r) + [0] for r in dgm.L] + [[0] * k + [sign]]
    N = [list(r) for r in dgm.N] + [[0] * d]
    return KirbyDiagram(d, L, N, dgm.tags)


def blow_down_steps(dgm: KirbyDiagram, j: int) -> Iterator[tuple[str, KirbyDiagram]]:
    _check_handle(dgm, j)
    f = dgm.L[j][j]
    if abs(f) != 1:
        raise MovePreconditionError(f"handle {j + 1} has framing {f}; blow-down needs +-1")
    if any(dgm.N[j]):
        raise MovePreconditionError(f"handle {j + 1} links a dotted circle; cannot blow down")
    cur = dgm
    for m in range(dgm.handles):
        if m == j:
            continue
        e = cur.L[m][j]
        s = -(e // abs(e)) * f if e else 0
        for _ in range(abs(e)):
            cur = slide(cur, m, j, s)
            yield f"slide {m + 1} over {j + 1} {'+' if s > 0 else '-'}", cur
    yield f"blowdown {j + 1}", _delete(cur, j, None)


def blow_down(dgm: KirbyDiagram, j: int) -> KirbyDiagram:
    out = dgm
    for _, out in blow_down_steps(dgm, j):
        pass
    return out


# --------------------------------------------------------------------------
# scripts


@dataclass(frozen=True)
class Move:
    """One scripted move; indices are 0-based."""

    kind: str  # slide | cancel | pair | blowup | blowdown
    args: tuple[int, ...] = ()

    def __str__(self) -> str:
        a = self.args
        sgn = lambda s: "+" if s > 0 else "-"  # noqa: E731
        if self.kind == "slide":
            return f"slide {a[0] + 1} over {a[1] + 1} {sgn(a[2])}"
        if self.kind == "cancel":
            return f"cancel {a[0] + 1} with {a[1] + 1}"
        if self.kind == "pair":
            return "pair+"
        if self.kind == "blowup":
            return f"blowup {sgn(a[0])}"
        if self.kind == "blowdown":
            return f"blowdown {a[0] + 1}"
        raise ValueError(f"unknown move {self.kind}")


@dataclass(frozen=True)
class MoveScript:
    moves: tuple[Move, ...] = ()
    name: str = ""

    def __len__(self) -> int:
        return len(self.moves)


def apply_move(dgm: KirbyDiagram, mv: Move) -> Iterator[tuple[str, KirbyDiagram]]:
    if mv.kind == "slide":
        i, j, s = mv.args
        yield str(mv), slide(dgm, i, j, s)
    elif mv.kind == "cancel":
        yield from cancel_steps(dgm, *mv.args)
    elif mv.kind == "pair":
        yield str(mv), add_cancelling_pair(dgm)
    elif mv.kind == "blowup":
        yield str(mv), blow_up(dgm, mv.args[0])
    elif mv.kind == "blowdown":
        yield from blow_down_steps(dgm, mv.args[0])
    else:
        raise MovePreconditionError(f"unknown move {mv.kind!r}")


def expected_change(kind: str, args: Sequence[int], before: Invariants) -> dict:
    """What each invariant should become after a move of this kind."""
    exp = {
        "chi": before.chi,
        "H1": before.H1,
        "b2": before.b2,
        "boundary_H1": before.boundary_H1,
        "form": forms.form_invariants(before.form),
    }
    if kind in ("blowup", "blowdown"):
        sign = args[0] if kind == "blowup" else args[1]
        delta = 1 if kind == "blowup" else -1
        exp["chi"] += delta
        exp["b2"] += delta
        f = dict(exp["form"])
        f["rank"] += delta
        f["signature"] += delta * sign
        f["det"] = f["det"] * sign
        f.pop("parity")
        exp["form"] = f
    return exp


def check_invariants(before: Invariants, after: Invariants, kind: str, args=(), step=None) -> None:
    exp = expected_change(kind, args, before)
    got = {
        "chi": after.chi,
        "H1": after.H1,
        "b2": after.b2,
        "boundary_H1": after.boundary_H1,
        "form": {k: v for k, v in forms.form_invariants(after.form).items() if k in exp["form"]},
    }
    for key, val in exp.items():
        if got[key] != val:
            raise InvariantViolation(f"{key} changed from {val} to {got[key]} under {kind}", step)


@dataclass
class ScriptResult:
    diagram: KirbyDiagram
    trace: list[str]
    final_congruence: forms.Congruence | None = None


def run_script(dgm: KirbyDiagram, script: MoveScript, check: bool = True) -> ScriptResult:
    """Apply moves in order, re-verifying invariants after every elementary step."""
    trace: list[str] = []
    cur = dgm
    inv0 = inv = invariants(dgm) if check else None
    for step, mv in enumerate(script.moves, start=1):
        try:
            for desc, nxt in apply_move(cur, mv):
                if check:
                    new = invariants(nxt)
                    kind = desc.split()[0]
                    args: tuple = ()
                    if kind == "blowup":
                        args = (mv.args[0],)
                    elif kind == "blowdown":
                        args = (0, cur.L[mv.args[0]][mv.args[0]])
                    check_invariants(inv, new, kind, args, step)
                    inv = new
                cur = nxt
                trace.append(f"[{step}] {desc}: dotted={cur.dotted} handles={cur.handles}")
        except MovePreconditionError as err:
            raise MovePreconditionError(str(err), step) from None
    result = ScriptResult(cur, trace)
    if check and inv0.b2 == inv.b2 and inv.b2 <= 3 and all(m.kind not in ("blowup", "blowdown") for m in script.moves):
        result.final_congruence = forms.congruent(inv0.form, inv.form)
        if result.final_congruence.verdict == "no":
            raise InvariantViolation("intersection form changed congruence class", len(script.moves))
    return result


def replace_tags(dgm: KirbyDiagram, tags) -> KirbyDiagram:
    return KirbyDiagram(dgm.dotted, dgm.L, dgm.N, tags)
