"""Relation and property suites shared by ``selftest-relations`` and the tests.

Each suite returns a :class:`SuiteResult`; a suite that finds a counterexample
records it in ``failures`` instead of raising.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import forms, kirby
from . import freegroup as fg
from .curves import FiberModel, StandardCurve, all_curves, disjoint
from .mcg import BraidWord, artin_action, compose_mc, dehn_twist, equals_mc, lantern_sides


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {"name": self.name, "cases": self.cases, "passed": self.passed, "failures": self.failures[:5]}


def lantern() -> SuiteResult:
    res = SuiteResult("lantern relation (h = 3)", 1)
    lhs, rhs = lantern_sides()
    if not equals_mc(lhs, rhs):
        res.failures.append("t123 t1 t2 t3 differs from t12 t13 t23")
    return res


def braid_relations(max_strands: int = 6) -> SuiteResult:
    res = SuiteResult("braid relations")
    for n in range(2, max_strands + 1):
        act = lambda letters: artin_action(BraidWord(letters, n))  # noqa: E731
        for i in range(1, n):
            res.cases += 1
            if not act([i, -i]).is_identity():
                res.failures.append(f"s{i} s{i}^-1 != 1 on {n} strands")
            if i + 1 < n:
                res.cases += 1
                if not fg.equals(act([i, i + 1, i]), act([i + 1, i, i + 1])):
                    res.failures.append(f"braid relation fails at i={i}, n={n}")
            for j in range(i + 2, n):
                res.cases += 1
                if not fg.equals(act([i, j]), act([j, i])):
                    res.failures.append(f"s{i} and s{j} do not commute on {n} strands")
    return res


def disjoint_commutation(max_holes: int = 5) -> SuiteResult:
    res = SuiteResult(f"disjoint twists commute (h <= {max_holes})")
    for h in range(1, max_holes + 1):
        f = FiberModel(h)
        curves = all_curves(f)
        twists = {c: dehn_twist(c, f) for c in curves}
        for a, b in itertools.combinations(curves, 2):
            if not disjoint(a, b, f):
                continue
            res.cases += 1
            if not equals_mc(compose_mc(twists[a], twists[b]), compose_mc(twists[b], twists[a])):
                res.failures.append(f"h={h}: {a} and {b}")
    return res


def twist_inverses(cases: int = 100, seed: int = 0, max_holes: int = 6) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("t composed with its inverse is the identity")
    for _ in range(cases):
        h = rng.randint(1, max_holes)
        f = FiberModel(h)
        c = StandardCurve(rng.sample(range(1, h + 1), rng.randint(1, h)))
        t = dehn_twist(c, f)
        res.cases += 1
        if not (compose_mc(t, dehn_twist(c, f, -1)).is_identity() and compose_mc(t, t.inverse()).is_identity()):
            res.failures.append(f"h={h}: {c}")
    return res


def random_diagram(rng: random.Random, max_dotted: int = 3, max_handles: int = 6, bound: int = 3) -> kirby.KirbyDiagram:
    d = rng.randint(0, max_dotted)
    k = rng.randint(1, max_handles)
    L = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            L[i][j] = L[j][i] = rng.randint(-bound, bound)
    N = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(k)]
    tags = [(i, e) for i in range(k) for e in range(d) if abs(N[i][e]) == 1 and rng.random() < 0.5]
    return kirby.KirbyDiagram(d, L, N, tags)


def random_legal_move(rng: random.Random, dgm: kirby.KirbyDiagram) -> kirby.Move:
    options = ["pair", "blowup"]
    if dgm.handles >= 2:
        options += ["slide"] * 4
    cancellable = [(a, b) for a, b in dgm.tags if abs(dgm.N[a][b]) == 1]
    if cancellable:
        options += ["cancel"] * 2
    downable = [j for j in range(dgm.handles) if abs(dgm.L[j][j]) == 1 and not any(dgm.N[j])]
    if downable:
        options.append("blowdown")
    kind = rng.choice(options)
    if kind == "slide":
        i, j = rng.sample(range(dgm.handles), 2)
        return kirby.Move("slide", (i, j, rng.choice((1, -1))))
    if kind == "cancel":
        return kirby.Move("cancel", rng.choice(sorted(cancellable)))
    if kind == "blowdown":
        return kirby.Move("blowdown", (rng.choice(downable),))
    if kind == "blowup":
        return kirby.Move("blowup", (rng.choice((1, -1)),))
    return kirby.Move("pair")


def kirby_move_invariance(cases: int = 1000, seed: int = 0, max_moves: int = 10) -> SuiteResult:
    """Random diagrams, random legal move sequences, invariants checked at every step."""
    rng = random.Random(seed)
    res = SuiteResult("random Kirby moves preserve invariants")
    for case in range(cases):
        dgm = random_diagram(rng)
        moves = []
        cur = dgm
        for _ in range(rng.randint(1, max_moves)):
            mv = random_legal_move(rng, cur)
            moves.append(mv)
            for _, cur in kirby.apply_move(cur, mv):
                pass
        res.cases += 1
        try:
            kirby.run_script(dgm, kirby.MoveScript(tuple(moves)), check=True)
        except (kirby.InvariantViolation, kirby.MovePreconditionError) as err:
            res.failures.append(f"case {case}: {err} ({'; '.join(map(str, moves))})")
    return res


def smith_properties(cases: int = 200, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("Smith normal form properties")
    for _ in range(cases):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        res.cases += 1
        try:
            sf = forms.smith_normal_form(m, c)
            forms.check_smith(m, sf)
            if r == c and abs(forms.determinant(m)) != abs(_prod(sf.diagonal[:r])):
                res.failures.append(f"determinant mismatch for {m}")
        except AssertionError as err:
            res.failures.append(f"{m}: {err}")
    return res


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def run_all(seed: int = 0, cases: int = 200) -> list[SuiteResult]:
    return [
        lantern(),
        braid_relations(),
        disjoint_commutation(),
        twist_inverses(max(100, cases // 2), seed),
        kirby_move_invariance(cases, seed),
        smith_properties(cases, seed),
    ]
