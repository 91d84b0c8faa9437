"""One grammar module for every text format the package reads or writes.

Each format is line oriented: a keyword followed by a payload, ``#`` starts a
comment, blank lines are ignored.  :func:`parse` produces a
:class:`Document` whose entries keep source positions for error messages;
:func:`serialize` writes the canonical form (sorted hole sets, single
spaces, fixed entry order), so parse and serialize are inverse on canonical
text.  The grammars are documented in ``FORMATS.md``.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable

KINDS = ("palf", "kirby", "script", "constraints", "expectations", "family")


class FormatError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        self.message, self.line, self.column, self.source = message, line, column, source
        where = f"line {line}, column {column}: " if line else ""
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}{where}{message}")


@dataclass(frozen=True)
class Entry:
    keyword: str
    values: tuple
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Document:
    kind: str
    entries: tuple[Entry, ...] = ()

    def get(self, keyword: str) -> list[Entry]:
        return [e for e in self.entries if e.keyword == keyword]

    def first(self, keyword: str, default=None):
        found = self.get(keyword)
        return found[0].values if found else default

    def meta(self) -> dict[str, str]:
        return {e.values[0]: e.values[1] for e in self.get("meta")}


_TOKEN = re.compile(r"\{[^}]*\}?|\S+")


@dataclass(frozen=True)
class _Tok:
    text: str
    column: int


def _tokens(line: str) -> list[_Tok]:
    return [_Tok(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int(tok: _Tok, line: int) -> int:
    try:
        return int(tok.text.replace("−", "-"))
    except ValueError:
        raise FormatError(f"expected an integer, got {tok.text!r}", line, tok.column) from None


def _sign(tok: _Tok, line: int) -> int:
    if tok.text == "+":
        return 1
    if tok.text in ("-", "−"):
        return -1
    raise FormatError(f"expected + or -, got {tok.text!r}", line, tok.column)


def parse_set(text: str, line: int = 0, column: int = 0) -> tuple[int, ...]:
    if not (text.startswith("{") and text.endswith("}")):
        raise FormatError(f"expected a hole set like {{1,3}}, got {text!r}", line, column)
    body = text[1:-1].strip()
    if not body:
        raise FormatError("empty curve", line, column)
    items = []
    for part in body.split(","):
        part = part.strip()
        try:
            items.append(int(part))
        except ValueError:
            raise FormatError(f"bad hole index {part!r}", line, column) from None
    if len(set(items)) != len(items):
        raise FormatError("repeated hole in curve", line, column)
    if min(items) < 1:
        raise FormatError("hole indices start at 1", line, column)
    return tuple(sorted(items))


def format_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _arity(toks, n, line, exact=True):
    if (len(toks) != n) if exact else (len(toks) < n):
        # too many: the first surplus token; too few: the last token present
        col = toks[n].column if len(toks) > n else toks[-1].column
        raise FormatError(f"{toks[0].text!r} expects {n - 1} argument(s), got {len(toks) - 1}", line, col)


# --------------------------------------------------------------------------
# per-keyword payload readers: (tokens, line, raw line) -> values


def _meta(toks, line, raw):
    _arity(toks, 2, line, exact=False)
    key = toks[1].text
    rest = raw[toks[2].column - 1:].strip() if len(toks) > 2 else ""
    return (key, " ".join(rest.split()))


def _one_int(toks, line, raw):
    _arity(toks, 2, line)
    return (_int(toks[1], line),)


def _int_row(toks, line, raw):
    return tuple(_int(t, line) for t in toks[1:])


def _cycle(toks, line, raw):
    if len(toks) not in (2, 3):
        _arity(toks, 2, line)
    s = parse_set(toks[1].text, line, toks[1].column)
    return (s, toks[2].text) if len(toks) == 3 else (s,)


def _handle(toks, line, raw):
    _arity(toks, 2, line)
    t = toks[1]
    if not t.text.startswith("f="):
        raise FormatError(f"expected f=<int>, got {t.text!r}", line, t.column)
    return (_int(_Tok(t.text[2:], t.column + 2), line),)


def _tag(toks, line, raw):
    _arity(toks, 4, line)
    if toks[1].text != "geo":
        raise FormatError(f"unknown tag kind {toks[1].text!r}", line, toks[1].column)
    return (_int(toks[2], line), _int(toks[3], line))


def _mark(toks, line, raw):
    _arity(toks, 3, line)
    return (_int(toks[1], line), _int(toks[2], line))


def _slide(toks, line, raw):
    _arity(toks, 5, line)
    if toks[2].text != "over":
        raise FormatError("expected 'over'", line, toks[2].column)
    return (_int(toks[1], line), _int(toks[3], line), _sign(toks[4], line))


def _cancel(toks, line, raw):
    _arity(toks, 4, line)
    if toks[2].text != "with":
        raise FormatError("expected 'with'", line, toks[2].column)
    return (_int(toks[1], line), _int(toks[3], line))


def _none(toks, line, raw):
    _arity(toks, 1, line)
    return ()


def _blowup(toks, line, raw):
    _arity(toks, 2, line)
    return (_sign(toks[1], line),)


def _h1(toks, line, raw):
    if len(toks) == 2 and toks[1].text == "trivial":
        return ()
    if len(toks) < 2:
        raise FormatError("h1 expects 'trivial' or invariant factors", line, toks[0].column)
    return tuple(_int(t, line) for t in toks[1:])


def _word(toks, line, raw):
    _arity(toks, 2, line)
    return (toks[1].text,)


def _prefix(toks, line, raw):
    _arity(toks, 2, line)
    return (parse_set(toks[1].text, line, toks[1].column),)


def _expect(toks, line, raw):
    _arity(toks, 6, line)
    if toks[2].text not in ("claim", "derived"):
        raise FormatError("source must be 'claim' or 'derived'", line, toks[2].column)
    return tuple(t.text for t in toks[1:])


def _let(toks, line, raw):
    _arity(toks, 4, line)
    if toks[2].text != "=":
        raise FormatError("expected '='", line, toks[2].column)
    _check_expr(toks[3], line)
    return (toks[1].text, toks[3].text)


def _expr(toks, line, raw):
    _arity(toks, 2, line)
    _check_expr(toks[1], line)
    return (toks[1].text,)


def _param(toks, line, raw):
    _arity(toks, 3, line)
    return (toks[1].text, _int(toks[2], line))


def _fam_cycle(toks, line, raw):
    _arity(toks, 2, line)
    _check_setexpr(toks[1], line)
    return (toks[1].text,)


def _fam_each(toks, line, raw):
    # each <var> <lo>..<hi> cycle <setexpr>
    _arity(toks, 5, line)
    if toks[3].text != "cycle":
        raise FormatError("expected 'cycle'", line, toks[3].column)
    lo, _, hi = toks[2].text.partition("..")
    if not hi:
        raise FormatError("expected a range lo..hi", line, toks[2].column)
    _check_expr(_Tok(lo, toks[2].column), line)
    _check_expr(_Tok(hi, toks[2].column), line)
    _check_setexpr(toks[4], line)
    return (toks[1].text, lo, hi, toks[4].text)


GRAMMARS: dict[str, dict[str, Callable]] = {
    "palf": {"meta": _meta, "holes": _one_int, "cycle": _cycle},
    "kirby": {
        "meta": _meta, "dotted": _one_int, "handle": _handle, "L": _int_row, "N": _int_row,
        "tag": _tag, "mark": _mark, "swaptag": _tag,
    },
    "script": {"meta": _meta, "slide": _slide, "cancel": _cancel, "pair+": _none, "blowup": _blowup, "blowdown": _one_int},
    "constraints": {
        "meta": _meta, "holes": _one_int, "cycles": _one_int, "h1": _h1, "b2": _one_int, "form": _int_row,
        "multiplicity": _one_int, "prefix": _prefix, "pattern": _word, "limit": _one_int,
    },
    "expectations": {"meta": _meta, "expect": _expect},
    "family": {"meta": _meta, "param": _param, "let": _let, "holes": _expr, "cycle": _fam_cycle, "each": _fam_each},
}

# canonical keyword order; keywords in the same group keep their relative order
ORDER = {
    "palf": [("holes",), ("meta",), ("cycle",)],
    "kirby": [("meta",), ("dotted",), ("handle",), ("L",), ("N",), ("tag",), ("mark",), ("swaptag",)],
    "script": [("meta",), ("slide", "cancel", "pair+", "blowup", "blowdown")],
    "constraints": [("meta",), ("holes",), ("cycles",), ("h1",), ("b2",), ("form",), ("multiplicity",), ("pattern",), ("limit",), ("prefix",)],
    "expectations": [("meta",), ("expect",)],
    "family": [("meta",), ("param",), ("let",), ("holes",), ("cycle", "each")],
}

SINGLE = {
    "palf": {"holes"},
    "kirby": {"dotted", "mark"},
    "script": set(),
    "constraints": {"holes", "cycles", "h1", "b2", "multiplicity", "pattern", "limit"},
    "expectations": set(),
    "family": {"holes"},
}


def parse(kind: str, text: str, source: str = "") -> Document:
    if kind not in GRAMMARS:
        raise FormatError(f"unknown document kind {kind!r}")
    grammar = GRAMMARS[kind]
    entries = []
    seen: dict[str, int] = {}
    try:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            toks = _tokens(line)
            if not toks:
                continue
            kw = toks[0].text
            if kw not in grammar:
                raise FormatError(f"unknown keyword {kw!r} in {kind} document", lineno, toks[0].column)
            if kw in SINGLE[kind] and kw in seen:
                raise FormatError(f"{kw!r} given twice (first on line {seen[kw]})", lineno, toks[0].column)
            seen.setdefault(kw, lineno)
            entries.append(Entry(kw, grammar[kw](toks, lineno, line), lineno, toks[0].column))
        doc = Document(kind, tuple(entries))
        VALIDATORS.get(kind, lambda d: None)(doc)
    except FormatError as err:
        if source and not err.source:
            raise FormatError(err.message, err.line, err.column, source) from None
        raise
    return doc


def _fmt_values(e: Entry) -> str:
    kw, v = e.keyword, e.values
    if kw == "meta":
        return f"meta {v[0]} {v[1]}".rstrip()
    if kw == "cycle" and v and isinstance(v[0], tuple):
        return " ".join(["cycle", format_set(v[0])] + list(v[1:]))
    if kw == "handle":
        return f"handle f={v[0]}"
    if kw in ("tag", "swaptag"):
        return f"{kw} geo {v[0]} {v[1]}"
    if kw == "slide":
        return f"slide {v[0]} over {v[1]} {'+' if v[2] > 0 else '-'}"
    if kw == "cancel":
        return f"cancel {v[0]} with {v[1]}"
    if kw == "blowup":
        return f"blowup {'+' if v[0] > 0 else '-'}"
    if kw == "h1":
        return "h1 " + (" ".join(map(str, v)) if v else "trivial")
    if kw == "prefix":
        return f"prefix {format_set(v[0])}"
    if kw == "let":
        return f"let {v[0]} = {v[1]}"
    if kw == "each":
        return f"each {v[0]} {v[1]}..{v[2]} cycle {v[3]}"
    return " ".join([kw] + [str(x) for x in v])


def canonical(doc: Document) -> Document:
    groups = ORDER[doc.kind]
    rank = {kw: i for i, grp in enumerate(groups) for kw in grp}
    entries = sorted(doc.entries, key=lambda e: rank[e.keyword])  # stable
    if doc.kind == "kirby":
        fixed = [e for e in entries if e.keyword not in ("tag", "swaptag")]
        for kw in ("tag", "swaptag"):
            tags = sorted({e.values for e in entries if e.keyword == kw})
            pos = next((i for i, e in enumerate(fixed) if rank[e.keyword] > rank[kw]), len(fixed))
            fixed[pos:pos] = [Entry(kw, t) for t in tags]
        entries = fixed
    return Document(doc.kind, tuple(entries))


def serialize(doc: Document) -> str:
    lines = [_fmt_values(e) for e in canonical(doc).entries]
    return "".join(line + "\n" for line in lines)


# --------------------------------------------------------------------------
# structural validation


def _at(e: Entry | None):
    return (e.line, e.column) if e else (0, 0)


def _validate_palf(doc: Document) -> None:
    holes = doc.get("holes")
    cycles = doc.get("cycle")
    if not holes:
        if cycles:
            raise FormatError("'holes' must be declared", *_at(cycles[0]))
        return
    h = holes[0].values[0]
    if h < 1:
        raise FormatError("a fiber needs at least one hole", *_at(holes[0]))
    for e in cycles:
        if max(e.values[0]) > h:
            raise FormatError(f"hole {max(e.values[0])} exceeds {h} holes", *_at(e))


def _validate_kirby(doc: Document) -> None:
    dotted = doc.get("dotted")
    handles = doc.get("handle")
    if not dotted and not handles and not doc.get("L"):
        return
    d = dotted[0].values[0] if dotted else 0
    if d < 0:
        raise FormatError("dotted count must be nonnegative", *_at(dotted[0]))
    k = len(handles)
    rows = doc.get("L")
    if len(rows) != k:
        raise FormatError(f"expected {k} L rows, got {len(rows)}", *_at(rows[-1] if rows else None))
    for i, e in enumerate(rows):
        if len(e.values) != k:
            raise FormatError(f"L row needs {k} entries", *_at(e))
        if e.values[i] != handles[i].values[0]:
            raise FormatError(f"L diagonal {e.values[i]} differs from framing {handles[i].values[0]}", *_at(e))
    for i, e in enumerate(rows):
        for j in range(i):
            if e.values[j] != rows[j].values[i]:
                raise FormatError("L must be symmetric", *_at(e))
    nrows = doc.get("N")
    if d == 0 and all(not e.values for e in nrows) and len(nrows) in (0, k):
        pass
    elif len(nrows) != k:
        raise FormatError(f"expected {k} N rows, got {len(nrows)}", *_at(nrows[-1] if nrows else None))
    for e in nrows:
        if len(e.values) != d:
            raise FormatError(f"N row needs {d} entries", *_at(e))
    for kw in ("tag", "swaptag"):
        for e in doc.get(kw):
            a, b = e.values
            if not (1 <= a <= k):
                raise FormatError(f"handle {a} out of range", *_at(e))
            if kw == "tag" and not (1 <= b <= d):
                raise FormatError(f"dotted circle {b} out of range", *_at(e))
    for e in doc.get("mark"):
        a, b = e.values
        if not (1 <= a <= d and 1 <= b <= k):
            raise FormatError("mark out of range", *_at(e))


def _validate_constraints(doc: Document) -> None:
    for kw in ("holes", "cycles"):
        if not doc.get(kw):
            raise FormatError(f"constraints need '{kw}'")
    rows = doc.get("form")
    for e in rows:
        if len(e.values) != len(rows):
            raise FormatError("form must be square", *_at(e))
    pat = doc.first("pattern")
    if pat and pat[0] not in ("any", "consecutive"):
        raise FormatError("pattern must be 'any' or 'consecutive'", *_at(doc.get("pattern")[0]))


def _validate_family(doc: Document) -> None:
    if not doc.get("holes"):
        raise FormatError("family needs 'holes'")


VALIDATORS = {
    "palf": _validate_palf,
    "kirby": _validate_kirby,
    "constraints": _validate_constraints,
    "family": _validate_family,
}


# --------------------------------------------------------------------------
# integer expressions for parametric families

_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult, ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Load)


def _compile(text: str) -> ast.Expression:
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED) or (isinstance(node, ast.Constant) and not isinstance(node.value, int)):
            raise ValueError(f"unsupported expression {text!r}")
    return tree


def _check_expr(tok: _Tok, line: int) -> None:
    try:
        _compile(tok.text)
    except (SyntaxError, ValueError):
        raise FormatError(f"bad integer expression {tok.text!r}", line, tok.column) from None


def _check_setexpr(tok: _Tok, line: int) -> None:
    t = tok.text
    if not (t.startswith("{") and t.endswith("}")) or not t[1:-1].strip():
        raise FormatError(f"expected a set expression, got {t!r}", line, tok.column)
    for part in t[1:-1].split(","):
        for piece in part.split(".."):
            _check_expr(_Tok(piece.strip(), tok.column), line)


def eval_expr(text: str, env: dict[str, int]) -> int:
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ValueError(f"unknown name {node.id!r}")
            return env[node.id]
        if isinstance(node, ast.UnaryOp):
            return -ev(node.operand) if isinstance(node.op, ast.USub) else ev(node.operand)
        a, b = ev(node.left), ev(node.right)
        return a + b if isinstance(node.op, ast.Add) else a - b if isinstance(node.op, ast.Sub) else a * b

    return ev(_compile(text))


def eval_setexpr(text: str, env: dict[str, int]) -> tuple[int, ...]:
    out: list[int] = []
    for part in text.strip()[1:-1].split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(eval_expr(lo.strip(), env), eval_expr(hi.strip(), env) + 1))
        else:
            out.append(eval_expr(part.strip(), env))
    return tuple(out)


# --------------------------------------------------------------------------
# documents <-> domain objects (files are 1-based, the Python API 0-based)


def load(kind: str, path) -> Document:
    from pathlib import Path

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise FormatError(f"cannot read file: {err.strerror}", source=str(path)) from None
    return parse(kind, text, source=str(path))


def palf_from_doc(doc: Document):
    from .palf import palf

    holes = doc.first("holes")
    if holes is None:
        raise FormatError("'holes' must be declared")
    cycles = [e.values[0] for e in doc.get("cycle")]
    names = [e.values[1] if len(e.values) > 1 else f"c{i}" for i, e in enumerate(doc.get("cycle"), 1)]
    return palf(holes[0], cycles, names)


def palf_to_doc(p, meta: Iterable[tuple[str, str]] = (), names: bool = True) -> Document:
    entries = [Entry("holes", (p.holes,))]
    entries += [Entry("meta", (k, v)) for k, v in meta]
    for c, name in zip(p.cycles, p.names):
        entries.append(Entry("cycle", (c.enclosed, name) if names else (c.enclosed,)))
    return Document("palf", tuple(entries))


@dataclass(frozen=True)
class KirbyRecord:
    diagram: object
    mark: tuple[int, int] | None = None
    swap_tags: frozenset = frozenset()
    meta: tuple[tuple[str, str], ...] = ()


def kirby_from_doc(doc: Document) -> KirbyRecord:
    from .kirby import KirbyDiagram

    d = (doc.first("dotted") or (0,))[0]
    L = [e.values for e in doc.get("L")]
    N = [e.values for e in doc.get("N")] or None
    tags = [(a - 1, b - 1) for a, b in (e.values for e in doc.get("tag"))]
    mark = doc.first("mark")
    return KirbyRecord(
        KirbyDiagram(d, L, N, tags),
        (mark[0] - 1, mark[1] - 1) if mark else None,
        frozenset((a - 1, b - 1) for a, b in (e.values for e in doc.get("swaptag"))),
        tuple(e.values for e in doc.get("meta")),
    )


def kirby_to_doc(dgm, mark=None, swap_tags=(), meta=()) -> Document:
    entries = [Entry("meta", tuple(m)) for m in meta]
    entries.append(Entry("dotted", (dgm.dotted,)))
    entries += [Entry("handle", (f,)) for f in dgm.framings]
    entries += [Entry("L", tuple(r)) for r in dgm.L]
    if dgm.dotted:
        entries += [Entry("N", tuple(r)) for r in dgm.N]
    entries += [Entry("tag", (a + 1, b + 1)) for a, b in sorted(dgm.tags)]
    if mark is not None:
        entries.append(Entry("mark", (mark[0] + 1, mark[1] + 1)))
    entries += [Entry("swaptag", (a + 1, b + 1)) for a, b in sorted(swap_tags)]
    return Document("kirby", tuple(entries))


def script_from_doc(doc: Document, name: str = ""):
    from .kirby import Move, MoveScript

    moves = []
    for e in doc.entries:
        v = e.values
        if e.keyword == "slide":
            moves.append(Move("slide", (v[0] - 1, v[1] - 1, v[2])))
        elif e.keyword == "cancel":
            moves.append(Move("cancel", (v[0] - 1, v[1] - 1)))
        elif e.keyword == "pair+":
            moves.append(Move("pair"))
        elif e.keyword == "blowup":
            moves.append(Move("blowup", v))
        elif e.keyword == "blowdown":
            moves.append(Move("blowdown", (v[0] - 1,)))
    return MoveScript(tuple(moves), name or doc.meta().get("name", ""))


def script_to_doc(script, meta=()) -> Document:
    return parse("script", "".join(f"meta {k} {v}\n" for k, v in meta) + "".join(f"{m}\n" for m in script.moves))


@dataclass(frozen=True)
class Constraints:
    """Search constraints for :func:`planarpalf.catalog.search_curve_family`."""

    holes: int
    cycles: int
    h1: tuple[int, ...] | None = None
    b2: int | None = None
    form: tuple[tuple[int, ...], ...] | None = None
    multiplicity: int = 1
    pattern: str = "any"
    limit: int | None = None
    prefix: tuple[tuple[int, ...], ...] = ()


def constraints_from_doc(doc: Document) -> Constraints:
    def one(kw, default=None):
        v = doc.first(kw)
        return v[0] if v else default

    rows = [e.values for e in doc.get("form")]
    return Constraints(
        holes=one("holes"),
        cycles=one("cycles"),
        h1=doc.first("h1"),
        b2=one("b2"),
        form=tuple(rows) if rows else None,
        multiplicity=one("multiplicity", 1),
        pattern=one("pattern", "any"),
        limit=one("limit"),
        prefix=tuple(e.values[0] for e in doc.get("prefix")),
    )


def constraints_to_doc(c: Constraints, meta=()) -> Document:
    entries = [Entry("meta", tuple(m)) for m in meta]
    entries += [Entry("holes", (c.holes,)), Entry("cycles", (c.cycles,))]
    if c.h1 is not None:
        entries.append(Entry("h1", tuple(c.h1)))
    if c.b2 is not None:
        entries.append(Entry("b2", (c.b2,)))
    entries += [Entry("form", tuple(r)) for r in c.form or ()]
    if c.multiplicity != 1:
        entries.append(Entry("multiplicity", (c.multiplicity,)))
    if c.pattern != "any":
        entries.append(Entry("pattern", (c.pattern,)))
    if c.limit is not None:
        entries.append(Entry("limit", (c.limit,)))
    entries += [Entry("prefix", (s,)) for s in c.prefix]
    return Document("constraints", tuple(entries))


@dataclass(frozen=True)
class Expectation:
    id: str
    source: str  # "claim" (stated result) or "derived" (computed oracle)
    object: str
    quantity: str
    value: str


def expectations_from_doc(doc: Document) -> list[Expectation]:
    return [Expectation(*e.values) for e in doc.get("expect")]


_SUBST = re.compile(r"\$\(([^)]*)\)")


def instantiate(template: str, env: dict[str, int]) -> str:
    """Replace every ``$(expr)`` in a template with its integer value."""
    return _SUBST.sub(lambda m: str(eval_expr(m.group(1), env)), template)


def family_cycles(doc: Document, env: dict[str, int]) -> tuple[int, list[tuple[int, ...]]]:
    """Evaluate a family document at concrete parameters: (holes, cycles)."""
    env = dict(env)
    for e in doc.get("param"):
        name, lower = e.values
        if name not in env:
            raise ValueError(f"missing parameter {name}")
        if env[name] < lower:
            raise ValueError(f"parameter {name} must be at least {lower}, got {env[name]}")
    for e in doc.get("let"):
        env[e.values[0]] = eval_expr(e.values[1], env)
    holes = eval_expr(doc.first("holes")[0], env)
    cycles: list[tuple[int, ...]] = []
    for e in doc.entries:
        if e.keyword == "cycle":
            cycles.append(eval_setexpr(e.values[0], env))
        elif e.keyword == "each":
            var, lo, hi, body = e.values
            for i in range(eval_expr(lo, env), eval_expr(hi, env) + 1):
                cycles.append(eval_setexpr(body, {**env, var: i}))
    return holes, cycles
