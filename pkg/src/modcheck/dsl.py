"""A small spec language for rings, modules, submodules and endomorphisms.

Grammar (whitespace is insignificant)::

    ring    := "Z" INT ("x" "Z" INT)*
    module  := cyclic ("x" cyclic)* "over" ring
    cyclic  := "Z" INT ["@" INT]
    elem    := "(" INT ("," INT)* ")"
    submod  := "span" "{" elem ("," elem)* "}" | "0" | "full"
    endo    := "matrix" "[" row (";" row)* "]"
    row     := INT ([","] INT)*

``@k`` binds a factor to ring component ``k`` (1-based); without it the
default assignment of :func:`modcheck.module.default_action` applies.
Every node carries a ``(start, end)`` span into the source; errors raise
:class:`~modcheck.errors.SpecError` with the offending span.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .endo import Endomorphism
from .errors import ModcheckError, SpecError
from .module import FinModule, generating_set, span
from .ring import FiniteRing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<kw>span|full|over|matrix|Z|x)|(?P<punct>[(){}\[\],;@]))")


@dataclass(frozen=True)
class Token:
    kind: str      # "int", "kw", "punct" or "end"
    text: str
    start: int
    end: int


def tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise SpecError(f"unexpected character {text[start]!r}", (start, start + 1), text)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind), m.end(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text), len(text)))
    return tokens


# AST


@dataclass(frozen=True)
class RingAst:
    moduli: tuple
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class CyclicAst:
    order: int
    component: int = None   # 1-based, None for the default assignment
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class ModuleAst:
    factors: tuple
    ring: RingAst
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class ElemAst:
    coords: tuple
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class SubmoduleAst:
    kind: str               # "span", "zero" or "full"
    gens: tuple = ()
    span: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class EndoAst:
    rows: tuple
    span: tuple = field(default=None, compare=False)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return SpecError(msg, (tok.start, max(tok.end, tok.start + 1)), self.text)

    def take(self, kind, text=None):
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text else kind
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise self.error(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def at(self, kind, text=None):
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def integer(self, positive=False):
        tok = self.take("int")
        value = int(tok.text)
        if positive and value < 1:
            raise self.error("expected a positive integer", tok)
        return value, tok

    def finish(self, node):
        if not self.at("end"):
            raise self.error(f"unexpected trailing input {self.tok.text!r}")
        return node

    def ring(self):
        start = self.take("kw", "Z").start
        n, last = self.integer(positive=True)
        moduli = [n]
        while self.at("kw", "x"):
            self.take("kw", "x")
            self.take("kw", "Z")
            n, last = self.integer(positive=True)
            moduli.append(n)
        return RingAst(tuple(moduli), (start, last.end))

    def cyclic(self):
        start = self.take("kw", "Z").start
        d, last = self.integer(positive=True)
        comp = None
        if self.at("punct", "@"):
            self.take("punct", "@")
            comp, last = self.integer(positive=True)
        return CyclicAst(d, comp, (start, last.end))

    def module(self):
        factors = [self.cyclic()]
        while self.at("kw", "x"):
            self.take("kw", "x")
            factors.append(self.cyclic())
        self.take("kw", "over")
        ring = self.ring()
        return ModuleAst(tuple(factors), ring, (factors[0].span[0], ring.span[1]))

    def elem(self):
        start = self.take("punct", "(").start
        coords = [self.integer()[0]]
        while self.at("punct", ","):
            self.take("punct", ",")
            coords.append(self.integer()[0])
        end = self.take("punct", ")").end
        return ElemAst(tuple(coords), (start, end))

    def submodule(self):
        tok = self.tok
        if self.at("int", "0"):
            self.i += 1
            return SubmoduleAst("zero", (), (tok.start, tok.end))
        if self.at("kw", "full"):
            self.i += 1
            return SubmoduleAst("full", (), (tok.start, tok.end))
        if not self.at("kw", "span"):
            raise self.error("expected 'span', '0' or 'full'")
        self.i += 1
        self.take("punct", "{")
        gens = [self.elem()]
        while self.at("punct", ","):
            self.take("punct", ",")
            gens.append(self.elem())
        end = self.take("punct", "}").end
        return SubmoduleAst("span", tuple(gens), (tok.start, end))

    def endo(self):
        start = self.take("kw", "matrix").start
        self.take("punct", "[")
        rows = [self.row()]
        while self.at("punct", ";"):
            self.take("punct", ";")
            rows.append(self.row())
        end = self.take("punct", "]").end
        return EndoAst(tuple(rows), (start, end))

    def row(self):
        values = [self.integer()[0]]
        while self.at("int") or self.at("punct", ","):
            if self.at("punct", ","):
                self.take("punct", ",")
            values.append(self.integer()[0])
        return tuple(values)


def parse_ring(text):
    p = _Parser(text)
    return p.finish(p.ring())


def parse_module(text):
    p = _Parser(text)
    return p.finish(p.module())


def parse_elem(text):
    p = _Parser(text)
    return p.finish(p.elem())


def parse_submodule(text):
    p = _Parser(text)
    return p.finish(p.submodule())


def parse_endo(text):
    p = _Parser(text)
    return p.finish(p.endo())


def parse_spec(text):
    """Parse any one spec, choosing the production by its leading token."""
    p = _Parser(text)
    tok = p.tok
    if tok.kind == "kw" and tok.text == "Z":
        # a ring and a module both start with Z; only a module has "over"
        node = p.module() if any(t.kind == "kw" and t.text == "over" for t in p.tokens) else p.ring()
    elif tok.kind == "kw" and tok.text == "matrix":
        node = p.endo()
    elif tok.kind == "punct" and tok.text == "(":
        node = p.elem()
    elif tok.kind == "end":
        raise p.error("empty spec")
    else:
        node = p.submodule()
    return p.finish(node)


# printing


def to_text(node):
    """Canonical text for an AST node; ``parse`` of the result gives an equal node."""
    if isinstance(node, RingAst):
        return " x ".join(f"Z{n}" for n in node.moduli)
    if isinstance(node, CyclicAst):
        return f"Z{node.order}" + (f"@{node.component}" if node.component is not None else "")
    if isinstance(node, ModuleAst):
        return " x ".join(to_text(f) for f in node.factors) + " over " + to_text(node.ring)
    if isinstance(node, ElemAst):
        return "(" + ",".join(map(str, node.coords)) + ")"
    if isinstance(node, SubmoduleAst):
        if node.kind == "zero":
            return "0"
        if node.kind == "full":
            return "full"
        return "span {" + ", ".join(to_text(g) for g in node.gens) + "}"
    if isinstance(node, EndoAst):
        return "matrix [" + "; ".join(" ".join(map(str, r)) for r in node.rows) + "]"
    raise TypeError(f"not a spec node: {node!r}")


# semantics


def build_module(node, source=None):
    """The :class:`FinModule` a module AST denotes; violations are reported against the node's spans."""
    if isinstance(node, str):
        source, node = node, parse_module(node)
    ring = FiniteRing(node.ring.moduli)
    action = []
    explicit = any(f.component is not None for f in node.factors)
    for f in node.factors:
        if f.component is not None:
            if f.component > ring.ncomponents:
                raise SpecError(f"ring {ring} has no component {f.component}", f.span, source)
            c = f.component - 1
            if ring.moduli[c] % f.order:
                raise SpecError(f"{f.order} does not divide {ring.moduli[c]}: Z{f.order} is not a module over Z{ring.moduli[c]}", f.span, source)
            action.append(c)
        elif not any(n % f.order == 0 for n in ring.moduli):
            where = " or ".join(map(str, ring.moduli))
            raise SpecError(f"{f.order} does not divide {where}: Z{f.order} is not a module over {ring}", f.span, source)
        else:
            action.append(None)
    orders = tuple(f.order for f in node.factors)
    try:
        if explicit:
            if None in action:
                raise SpecError("either every factor or no factor may carry '@k'", node.span, source)
            return FinModule(ring, orders, tuple(action))
        return FinModule(ring, orders)
    except SpecError:
        raise
    except ModcheckError as exc:
        raise SpecError(str(exc), node.span, source) from None


def build_element(M, node, source=None):
    if len(node.coords) != M.rank:
        raise SpecError(f"element needs {M.rank} coordinates for {M}", node.span, source)
    for c, d in zip(node.coords, M.orders):
        if c >= d:
            raise SpecError(f"coordinate {c} out of range for Z{d}", node.span, source)
    return tuple(node.coords)


def build_submodule(M, node, source=None):
    if isinstance(node, str):
        source, node = node, parse_submodule(node)
    if node.kind == "zero":
        return M.zero_submodule()
    if node.kind == "full":
        return M.full_submodule()
    return span(M, [build_element(M, g, source) for g in node.gens])


def build_endo(M, node, source=None):
    if isinstance(node, str):
        source, node = node, parse_endo(node)
    try:
        return Endomorphism(M, node.rows)
    except ModcheckError as exc:
        raise SpecError(str(exc), node.span, source) from None


def submodule_to_text(N):
    """Spec text for a submodule, via its generators."""
    if N.is_zero():
        return "0"
    if not N.is_proper():
        return "full"
    M = N.parent
    gens = (ElemAst(tuple(int(c) for c in M.element(g))) for g in generating_set(N))
    return to_text(SubmoduleAst("span", tuple(gens)))
