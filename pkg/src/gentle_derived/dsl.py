"""Line-oriented text format for graded quivers with relations (``.gq`` files).

    vertices: 1 2 3
    arrow a: 1 -> 2
    arrow b: 2 -> 1 deg 1
    arrow g: 2 -> 3          # deg defaults to 0
    rel b a                  # b then a vanishes
    rel a g

``rel X Y`` is read diagrammatically: first ``X``, then ``Y``.  It is stored
as the pair ``(Y, X)`` (see :mod:`gentle_derived.quiver`).  An arrow's id
defaults to its position among the arrow declarations (0-based) and may be
overridden with a trailing ``id N``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import GentleError, ParameterOutOfRange
from .quiver import Arrow, GradedAlgebraPresentation, GradedQuiver

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
INT_RE = re.compile(r"-?\d+\Z")
TOKEN_RE = re.compile(r"->|:|(?:(?!->)[^\s:])+")


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    line: int
    col: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}-{self.end_col}: {self.kind}: {self.message}"


class ParseError(GentleError):
    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class _Tok:
    text: str
    col: int  # 1-based

    @property
    def end(self) -> int:
        return self.col + len(self.text)


def _tokenize(line: str) -> List[_Tok]:
    body = line.split("#", 1)[0]
    return [_Tok(m.group(0), m.start() + 1) for m in TOKEN_RE.finditer(body)]


def parse(text: str) -> GradedAlgebraPresentation:
    """Parse ``.gq`` text; raises :class:`ParseError` listing every diagnostic."""
    diags: List[Diagnostic] = []

    def err(kind, msg, lineno, tok: Optional[_Tok] = None, col=1, end=1):
        if tok is not None:
            col, end = tok.col, tok.end
        diags.append(Diagnostic(kind, msg, lineno, col, end))

    vertex_line: Optional[Tuple[int, List[_Tok]]] = None
    arrow_lines: List[Tuple[int, List[_Tok]]] = []
    rel_lines: List[Tuple[int, List[_Tok]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw)
        if not toks:
            continue
        head = toks[0].text
        if head == "vertices" and len(toks) > 1 and toks[1].text == ":":
            if vertex_line is not None:
                err("DuplicateId", "second vertices section", lineno, toks[0])
                continue
            vertex_line = (lineno, toks[2:])
        elif head == "arrow":
            arrow_lines.append((lineno, toks))
        elif head == "rel":
            rel_lines.append((lineno, toks))
        else:
            err("Syntax", f"unrecognized declaration {head!r}", lineno, toks[0])

    vertices: List[int] = []
    if vertex_line is None:
        diags.append(Diagnostic("MissingSection", "no vertices section", 1, 1, 1))
    else:
        lineno, toks = vertex_line
        if not toks:
            err("MissingSection", "vertices section is empty", lineno, col=1, end=len("vertices:") + 1)
        for t in toks:
            if not INT_RE.match(t.text):
                err("Syntax", f"vertex id {t.text!r} is not an integer", lineno, t)
                continue
            v = int(t.text)
            if v in vertices:
                err("DuplicateId", f"vertex {v} declared twice", lineno, t)
            else:
                vertices.append(v)
    vset = set(vertices)

    arrows: List[Arrow] = []
    by_name: Dict[str, Arrow] = {}
    used_ids: Dict[int, int] = {}
    for index, (lineno, toks) in enumerate(arrow_lines):
        texts = [t.text for t in toks]
        if len(toks) < 6 or texts[2] != ":" or texts[4] != "->":
            err("Syntax", "expected 'arrow NAME: SOURCE -> TARGET [deg D] [id N]'", lineno, toks[0])
            continue
        name_t, src_t, tgt_t = toks[1], toks[3], toks[5]
        ok = True
        if not NAME_RE.match(name_t.text):
            err("Syntax", f"invalid arrow name {name_t.text!r}", lineno, name_t)
            ok = False
        ends = []
        for t in (src_t, tgt_t):
            if not INT_RE.match(t.text):
                err("Syntax", f"vertex id {t.text!r} is not an integer", lineno, t)
                ok = False
            elif int(t.text) not in vset:
                err("UnknownVertex", f"vertex {t.text} is not declared", lineno, t)
                ok = False
            else:
                ends.append(int(t.text))
        degree, aid = 0, index
        rest = toks[6:]
        seen_opts = set()
        i = 0
        while i < len(rest):
            key = rest[i]
            if key.text not in ("deg", "id") or key.text in seen_opts:
                err("Syntax", f"unexpected token {key.text!r}", lineno, key)
                ok = False
                break
            seen_opts.add(key.text)
            if i + 1 >= len(rest):
                kind = "DegreeNotInteger" if key.text == "deg" else "Syntax"
                err(kind, f"missing value after {key.text!r}", lineno, key)
                ok = False
                break
            val = rest[i + 1]
            if not INT_RE.match(val.text):
                kind = "DegreeNotInteger" if key.text == "deg" else "Syntax"
                err(kind, f"{key.text} value {val.text!r} is not an integer", lineno, val)
                ok = False
            elif key.text == "deg":
                degree = int(val.text)
            else:
                aid = int(val.text)
            i += 2
        if name_t.text in by_name:
            err("DuplicateId", f"arrow name {name_t.text!r} already used", lineno, name_t)
            ok = False
        if aid in used_ids:
            err("DuplicateId", f"arrow id {aid} already used on line {used_ids[aid]}", lineno, name_t)
            ok = False
        if ok:
            a = Arrow(aid, ends[0], ends[1], degree, name_t.text)
            arrows.append(a)
            by_name[a.name] = a
            used_ids[aid] = lineno

    relations: Dict[Tuple[int, int], int] = {}
    for lineno, toks in rel_lines:
        if len(toks) != 3:
            err("Syntax", "expected 'rel FIRST THEN'", lineno, toks[0])
            continue
        x_t, y_t = toks[1], toks[2]
        missing = False
        for t in (x_t, y_t):
            if t.text not in by_name:
                err("UnknownArrow", f"arrow {t.text!r} is not declared", lineno, t)
                missing = True
        if missing:
            continue
        x, y = by_name[x_t.text], by_name[y_t.text]
        if x.target != y.source:
            err(
                "NonComposableRelation",
                f"{x.name} ends at {x.target} but {y.name} starts at {y.source}",
                lineno,
                col=x_t.col,
                end=y_t.end,
            )
            continue
        key = (y.id, x.id)
        if key in relations:
            err("DuplicateRelation", f"relation repeated from line {relations[key]}", lineno, col=x_t.col, end=y_t.end)
            continue
        relations[key] = lineno

    if diags:
        raise ParseError(diags)
    return GradedAlgebraPresentation(GradedQuiver(tuple(vertices), tuple(arrows)), frozenset(relations))


def serialize(P: GradedAlgebraPresentation) -> str:
    """Canonical text: vertices ascending, arrows by id, relations by (first, then) id."""
    lines = ["vertices: " + " ".join(str(v) for v in P.vertices)]
    for index, a in enumerate(P.arrows):
        line = f"arrow {a.label}: {a.source} -> {a.target}"
        if a.degree:
            line += f" deg {a.degree}"
        if a.id != index:
            line += f" id {a.id}"
        lines.append(line)
    amap = P.quiver.arrow_map
    for f, g in sorted(P.relations, key=lambda fg: (fg[1], fg[0])):
        lines.append(f"rel {amap[g].label} {amap[f].label}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- builtins


def gamma(p: int, q: int, r: int) -> GradedAlgebraPresentation:
    """Two directed paths of lengths p and q from vertex p+1 to vertex 1; deg(a_{p+q}) = r."""
    if p < 1 or q < 1:
        raise ParameterOutOfRange(f"Gamma requires p, q >= 1 (got p={p}, q={q})")
    n = p + q
    arrows = []
    for i in range(1, p + 1):
        arrows.append(Arrow(i, i + 1, i, 0, f"a{i}"))
    chain = [p + 1] + list(range(p + 2, n + 1)) + [1]
    for k in range(q):
        i = p + 1 + k
        arrows.append(Arrow(i, chain[k], chain[k + 1], r if i == n else 0, f"a{i}"))
    return GradedAlgebraPresentation(GradedQuiver(tuple(range(1, n + 1)), tuple(arrows)), frozenset())


def gamma_prime(q: int, r: int) -> GradedAlgebraPresentation:
    """Oriented q-cycle modulo all length-2 paths; deg(a_q) = q - r."""
    if q < 1:
        raise ParameterOutOfRange(f"GammaPrime requires q >= 1 (got q={q})")
    arrows = [Arrow(i, i + 1, i, 0, f"a{i}") for i in range(1, q)]
    arrows.append(Arrow(q, 1, q, q - r, f"a{q}"))
    rels = set()
    for a in arrows:
        for b in arrows:
            if a.target == b.source:
                rels.add((b.id, a.id))
    return GradedAlgebraPresentation(GradedQuiver(tuple(range(1, q + 1)), tuple(arrows)), frozenset(rels))


def lambda_family(r: int, n: int, m: int, d: int = 0) -> GradedAlgebraPresentation:
    """Oriented n-cycle 0 -> 1 -> ... -> n-1 -> 0 with a tail -m -> ... -> 0.

    Arrow ids equal their index i; the relations are that a_k followed by
    a_{k+1 mod n} vanishes for k = n-r, ..., n-1, and deg(a_{n-1}) = d.
    """
    if not (n >= r >= 1 and m >= 0):
        raise ParameterOutOfRange(f"Lambda requires n >= r >= 1 and m >= 0 (got r={r}, n={n}, m={m})")
    arrows = [Arrow(-k, -k, -k + 1, 0, f"t{k}") for k in range(m, 0, -1)]
    for i in range(n):
        arrows.append(Arrow(i, i, (i + 1) % n, d if i == n - 1 else 0, f"a{i}"))
    rels = frozenset(((k + 1) % n, k) for k in range(n - r, n))
    return GradedAlgebraPresentation(GradedQuiver(tuple(range(-m, n)), tuple(arrows)), rels)


_FAMILY_RE = re.compile(r"\s*(Gamma|GammaPrime|Lambda)\s*\(([^)]*)\)\s*\Z")


def parse_family(spec: str) -> Tuple[str, Tuple[int, ...]]:
    m = _FAMILY_RE.match(spec)
    if not m:
        raise ParameterOutOfRange(f"unrecognized family spec {spec!r}")
    try:
        args = tuple(int(x) for x in m.group(2).split(",")) if m.group(2).strip() else ()
    except ValueError:
        raise ParameterOutOfRange(f"non-integer parameter in {spec!r}") from None
    expected = {"Gamma": (3,), "GammaPrime": (2,), "Lambda": (3, 4)}[m.group(1)]
    if len(args) not in expected:
        raise ParameterOutOfRange(f"{m.group(1)} takes {' or '.join(map(str, expected))} parameters")
    return m.group(1), args


def builtin(spec: str) -> GradedAlgebraPresentation:
    """Presentation for ``Gamma(p,q,r)``, ``GammaPrime(q,r)`` or ``Lambda(r,n,m[,d])``."""
    family, args = parse_family(spec)
    if family == "Gamma":
        return gamma(*args)
    if family == "GammaPrime":
        return gamma_prime(*args)
    return lambda_family(*args)


EXAMPLE_GENTLE_TEXT = """\
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow g: 2 -> 3
rel b a
rel a g
"""
