"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 move precondition failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import catalog, forms, kirby, selftest
from . import formats as fmt
from . import palf as palf_mod
from .curves import is_allowable

EXIT_OK, EXIT_USAGE, EXIT_MOVE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# reports


@dataclass
class Comparison:
    id: str
    source: str  # claim or derived
    expected: str
    computed: str
    passed: bool


@dataclass
class Report:
    object: str
    invariants: dict = field(default_factory=dict)
    comparisons: list[Comparison] = field(default_factory=list)
    items: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons) and all(self.items.values())

    def to_json(self) -> str:
        data = asdict(self)
        data["passed"] = self.passed
        return json.dumps(data, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        data.pop("passed", None)
        data["comparisons"] = [Comparison(**c) for c in data["comparisons"]]
        return cls(**data)

    def text(self) -> str:
        lines = [f"== {self.object}"]
        for key, val in self.invariants.items():
            if key == "gram":
                lines.append("gram:")
                lines += ["  " + " ".join(f"{x:>4}" for x in row) for row in val] or ["  (empty)"]
            else:
                lines.append(f"{key}: {val}")
        for c in self.comparisons:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {c.id} [{c.source}] expected {c.expected}, computed {c.computed}")
        for item, ok in self.items.items():
            lines.append(f"{'PASS' if ok else 'FAIL'} {item}")
        return "\n".join(lines)


def _emit(reports, as_json: bool) -> None:
    if as_json:
        if isinstance(reports, Report):
            print(reports.to_json())
        else:
            print("[" + ",\n".join(r.to_json() for r in reports) + "]")
    else:
        for r in [reports] if isinstance(reports, Report) else reports:
            print(r.text())


# --------------------------------------------------------------------------
# targets


_REF = re.compile(r"^catalog:(W\((\d+),(\d+)\)|A|B)(\.(kirby|reduced|palf))?$")


def _data_dir(args):
    return getattr(args, "data_dir", None)


def load_target(kind: str, target: str, data_dir=None):
    """A file path or a catalog reference, loaded as a PALF or a Kirby diagram."""
    if target.startswith("catalog:"):
        m = _REF.match(target.replace(" ", ""))
        if not m:
            raise UsageError(f"unknown catalog reference {target!r}")
        name, mm, nn, suffix = m.group(1), m.group(2), m.group(3), m.group(5)
        if kind == "palf":
            if suffix not in (None, "palf"):
                raise UsageError(f"{target} is a Kirby diagram, not a PALF")
            if name.startswith("W"):
                return catalog.plug_palf(int(mm), int(nn), data_dir)
            return (catalog.manifold_A if name == "A" else catalog.manifold_B)(data_dir)[0]
        if suffix == "palf":
            return palf_mod.to_kirby(load_target("palf", target[: -len(".palf")], data_dir))
        if name.startswith("W"):
            if suffix == "reduced":
                return catalog.reduce_W(int(mm), int(nn), data_dir)
            return catalog.plug_kirby(int(mm), int(nn), data_dir)
        if suffix == "reduced":
            return catalog.reduced(name, data_dir)
        return (catalog.manifold_A if name == "A" else catalog.manifold_B)(data_dir)[1].diagram
    doc = fmt.load(kind, target)
    return fmt.palf_from_doc(doc) if kind == "palf" else fmt.kirby_from_doc(doc).diagram


def load_script(target: str, data_dir=None) -> kirby.MoveScript:
    if target.startswith("catalog:"):
        name = target[len("catalog:"):]
        if not re.fullmatch(r"reduce_(A|B|W)", name):
            raise UsageError(f"unknown catalog script {target!r}")
        return catalog.load_script(name, data_dir)
    return fmt.script_from_doc(fmt.load("script", target), Path(target).stem)


# --------------------------------------------------------------------------
# commands


def invariants_report(obj, name: str) -> Report:
    if isinstance(obj, palf_mod.PalfDescription):
        inv = palf_mod.invariants(obj)
        data = inv.summary()
        mono = palf_mod.total_monodromy(obj)
        data.update(
            holes=obj.holes,
            cycles=[str(c) for c in obj.cycles],
            monodromy=obj.word(),
            monodromy_framing=list(mono.framing),
        )
    else:
        data = kirby.invariants(obj).summary()
        data.update(dotted=obj.dotted, handles=obj.handles)
    return Report(name, data)


def cmd_invariants(args) -> int:
    obj = load_target(args.kind, args.target, _data_dir(args))
    _emit(invariants_report(obj, args.target), args.json)
    return EXIT_OK


def cmd_run_script(args) -> int:
    dgm = load_target("kirby", args.diagram, _data_dir(args))
    script = load_script(args.script, _data_dir(args))
    start = time.perf_counter()
    try:
        res = kirby.run_script(dgm, script)
    except kirby.MovePreconditionError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MOVE
    except kirby.InvariantViolation as err:
        print(f"error: invariant violation at {err}", file=sys.stderr)
        return EXIT_VERIFY
    elapsed = time.perf_counter() - start
    rep = invariants_report(res.diagram, f"{args.diagram} after {script.name or args.script}")
    if args.trace:
        rep.invariants["trace"] = res.trace
    if res.final_congruence is not None:
        rep.invariants["congruent_to_start"] = res.final_congruence.verdict
        rep.invariants["witness"] = res.final_congruence.witness
    rep.invariants["seconds"] = round(elapsed, 4)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.text())
        print("final diagram:")
        print(fmt.serialize(fmt.kirby_to_doc(res.diagram)), end="")
    return EXIT_OK


def _cmp(rep: Report, exp: dict, key: str, computed, fallback: str = "") -> bool:
    e = exp.get(key)
    expected, source = (e.value, e.source) if e else (fallback, "derived")
    ok = str(computed) == expected
    rep.comparisons.append(Comparison(key, source, expected, str(computed), ok))
    return ok


def _expectations(data_dir) -> dict:
    path = catalog._dir(data_dir) / "expectations.txt"
    return {e.id: e for e in fmt.expectations_from_doc(fmt.load("expectations", path))}


def _group(factors) -> str:
    return "trivial" if not factors else "+".join(str(x) for x in factors)


def theorem1_report(m: int, n: int, data_dir=None) -> Report:
    exp = _expectations(data_dir)
    p = catalog.plug_palf(m, n, data_dir)
    pi = palf_mod.invariants(p)
    ki = kirby.invariants(catalog.plug_kirby(m, n, data_dir))
    rep = Report(f"W({m},{n})", pi.summary())
    _cmp(rep, exp, "W.cycles", "2n+m" if len(p) == 2 * n + m else str(len(p)))
    _cmp(rep, exp, "W.genus", 0)
    _cmp(rep, exp, "W.chi", pi.chi)
    _cmp(rep, exp, "W.H1", _group(pi.H1))
    _cmp(rep, exp, "W.b2", pi.b2)
    _cmp(rep, exp, "W.definite", pi.signature)
    rep.items["all cycles allowable"] = all(is_allowable(c) for c in p.cycles)
    rep.items["PALF and Kirby invariants agree"] = catalog.agree(pi, ki)
    rep.invariants["cycles"] = len(p)
    rep.invariants["holes"] = p.holes
    return rep


def cmd_verify_theorem1(args) -> int:
    try:
        catalog.PlugParams(args.m, args.n)
    except ValueError as err:
        raise UsageError(str(err)) from None
    rep = theorem1_report(args.m, args.n, _data_dir(args))
    _emit(rep, args.json)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _form_str(gram) -> str:
    return ";".join(",".join(str(x) for x in row) for row in gram)


def _parse_form(text: str):
    return tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))


def theorem2_reports(data_dir=None) -> list[Report]:
    exp = _expectations(data_dir)
    out = []
    for i, (title, fn) in enumerate(THEOREM2_ITEMS, 1):
        rep = Report(f"item ({i}) {title}")
        try:
            fn(rep, exp, data_dir)
        except (fmt.FormatError, ValueError, OSError, kirby.MovePreconditionError, kirby.InvariantViolation) as err:
            rep.items[f"error: {err}"] = False
        out.append(rep)
    return out


def _t2_item1(rep, exp, data_dir):
    _, a = catalog.manifold_A(data_dir)
    _, b = catalog.manifold_B(data_dir)
    twisted = catalog.plug_twist(a)
    _cmp(rep, exp, "A.twist", "B" if twisted == b else "not B")
    rep.items["plug twist is an involution"] = catalog.plug_twist(twisted) == a
    chi = kirby.invariants(a.diagram).chi
    half = catalog.dot_to_zero(a.diagram, a.marked_pair[0])
    rep.items["dot to 0 alone raises chi by 2"] = kirby.invariants(half).chi == chi + 2
    rep.items["full swap keeps chi and boundary H1"] = (
        kirby.invariants(twisted.diagram).chi == chi
        and kirby.invariants(twisted.diagram).boundary_H1 == kirby.invariants(a.diagram).boundary_H1
    )


def _t2_item2(rep, exp, data_dir):
    w = catalog.plug_palf(1, 2, data_dir)
    for name, fn in (("A", catalog.manifold_A), ("B", catalog.manifold_B)):
        p, _ = fn(data_dir)
        ok = all(is_allowable(c) for c in p.cycles) and p.cycles[: len(w)] == w.cycles
        _cmp(rep, exp, f"{name}.allowable", "yes" if ok else "no")


def _t2_item3(rep, exp, data_dir):
    for name, fn in (("A", catalog.manifold_A), ("B", catalog.manifold_B)):
        p, md = fn(data_dir)
        pi, ki = palf_mod.invariants(p), kirby.invariants(md.diagram)
        _cmp(rep, exp, f"{name}.b2", pi.b2 if pi.b2 == ki.b2 else f"{pi.b2} vs {ki.b2}")
        _cmp(rep, exp, f"{name}.H1", _group(pi.H1) if pi.H1 == ki.H1 else f"{pi.H1} vs {ki.H1}")
        rep.items[f"{name}: H2 free of rank 2 (kernel of a free boundary map)"] = len(palf_mod.second_homology_basis(p)) == 2


def _t2_item4(rep, exp, data_dir):
    pa, _ = catalog.manifold_A(data_dir)
    pb, _ = catalog.manifold_B(data_dir)
    ia, ib = palf_mod.invariants(pa), palf_mod.invariants(pb)
    _cmp(rep, exp, "A.boundary", _group(ia.boundary_H1))
    _cmp(rep, exp, "B.boundary", _group(ib.boundary_H1))
    la, lb = forms.linking_form(ia.form), forms.linking_form(ib.form)
    iso = forms.linking_forms_isomorphic(la, lb)
    _cmp(rep, exp, "AB.linking", {True: "isomorphic", False: "not isomorphic", None: "undecided"}[iso])
    rep.items["self-pairing multisets agree"] = la.self_pairing_multiset() == lb.self_pairing_multiset()


def _t2_item5(rep, exp, data_dir):
    reduced = {}
    for name, fn in (("A", catalog.manifold_A), ("B", catalog.manifold_B)):
        p, md = fn(data_dir)
        target = forms.IntSymForm(_parse_form(exp[f"{name}.form"].value))
        red = kirby.run_script(md.diagram, catalog.load_script(f"reduce_{name}", data_dir)).diagram
        f = forms.IntSymForm(red.L) if red.dotted == 0 else kirby.invariants(red).form
        reduced[name] = f
        c = forms.congruent(f, target) if f.rank == target.rank else forms.Congruence("no", reason="rank")
        _cmp(rep, exp, f"{name}.form", _form_str(target.gram) if c.verdict == "yes" else _form_str(f.gram))
        rep.items[f"{name}: PALF form congruent to the reduced diagram"] = (
            palf_mod.intersection_form(p).rank == f.rank
            and forms.congruent(palf_mod.intersection_form(p), f).verdict == "yes"
        )
        _cmp(rep, exp, f"{name}.parity", forms.parity(f))
    mutual = forms.congruent(reduced["A"], reduced["B"]) if reduced["A"].rank == reduced["B"].rank else forms.Congruence("no", reason="rank")
    _cmp(rep, exp, "AB.congruent", mutual.verdict)
    rep.invariants["mutual_reason"] = mutual.reason


def _t2_item6(rep, exp, data_dir):
    pa, _ = catalog.manifold_A(data_dir)
    pb, _ = catalog.manifold_B(data_dir)
    _cmp(rep, exp, "A.length", len(pa))
    _cmp(rep, exp, "B.length", len(pb))
    shared = 0
    while shared < min(len(pa), len(pb)) and pa.cycles[shared] == pb.cycles[shared]:
        shared += 1
    w = catalog.plug_palf(1, 2, data_dir)
    _cmp(rep, exp, "AB.prefix", shared if pa.cycles[:shared] == w.cycles else f"{shared} (not W(1,2))")
    rep.invariants["A_word"] = pa.word()
    rep.invariants["B_word"] = pb.word()


THEOREM2_ITEMS = [
    ("plug twist of A is B", _t2_item1),
    ("A and B are PALFs", _t2_item2),
    ("homology of A and B", _t2_item3),
    ("boundaries of A and B", _t2_item4),
    ("intersection forms and parity", _t2_item5),
    ("monodromy words", _t2_item6),
]


def cmd_verify_theorem2(args) -> int:
    reps = theorem2_reports(_data_dir(args))
    _emit(reps, args.json)
    return EXIT_OK if all(r.passed for r in reps) else EXIT_VERIFY


def cmd_selftest(args) -> int:
    results = selftest.run_all(args.seed, args.cases)
    rep = Report(f"selftest-relations seed={args.seed} cases={args.cases}")
    for r in results:
        rep.items[f"{r.name} ({r.cases} cases)"] = r.passed
        if r.failures:
            rep.invariants[r.name] = r.failures[:5]
    _emit(rep, args.json)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_search(args) -> int:
    c = fmt.constraints_from_doc(fmt.load("constraints", args.constraints))
    if args.limit is not None:
        c = fmt.Constraints(**{**c.__dict__, "limit": args.limit})
    found = catalog.search_curve_family(c)
    if args.json:
        print(json.dumps([{"holes": p.holes, "cycles": [list(cv.enclosed) for cv in p.cycles]} for p in found], indent=2))
    else:
        print(f"# {len(found)} candidate(s)")
        for i, p in enumerate(found, 1):
            print(f"# candidate {i}")
            print(fmt.serialize(fmt.palf_to_doc(p, names=False)), end="")
    return EXIT_OK


def cmd_validate(args) -> int:
    rep = catalog.validate_catalog(_data_dir(args))
    print("\n".join(rep.lines()))
    return EXIT_OK if rep.ok else EXIT_VERIFY


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planarpalf", description="Genus-zero PALFs, Kirby diagrams and plug checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--data-dir", help="catalog data directory (default: the shipped data)")
        return sp

    sp = add("invariants", cmd_invariants, "invariant report for a PALF or a Kirby diagram")
    sp.add_argument("kind", choices=["palf", "kirby"])
    sp.add_argument("target", help="file path or catalog reference such as catalog:A.kirby")
    sp.add_argument("--json", action="store_true")

    sp = add("run-script", cmd_run_script, "apply a move script to a Kirby diagram")
    sp.add_argument("diagram")
    sp.add_argument("script")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--json", action="store_true")

    sp = add("verify-theorem1", cmd_verify_theorem1, "check the W(m,n) PALF profile")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("verify-theorem2", cmd_verify_theorem2, "check the six items about A and B")
    sp.add_argument("--json", action="store_true")

    sp = add("selftest-relations", cmd_selftest, "mapping class relations and randomized property suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=200)
    sp.add_argument("--json", action="store_true")

    sp = add("search", cmd_search, "enumerate curve families meeting constraints")
    sp.add_argument("--constraints", required=True)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--json", action="store_true")

    add("validate", cmd_validate, "run every shipped catalog object through the invariant suite")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except fmt.FormatError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, catalog.CatalogError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except kirby.MovePreconditionError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MOVE


if __name__ == "__main__":
    sys.exit(main())
