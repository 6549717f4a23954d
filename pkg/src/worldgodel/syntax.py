"""Object-language alphabet, formulas, and world-tagged expressions.

The alphabet is the minimal first-order one: ``(``, ``)``, ``,``, negation,
the two quantifiers, equality, variables ``v<i>``, predicate letters
``A<i>_<n>`` and function letters ``f<i>_<n>`` (``n`` is the arity).
Formulas are written predicate-first, e.g. ``=(0,0)``; ``0`` is the constant
``f0_0``.  Every token of the surface syntax is exactly one symbol of the
coded string, so ``linearize`` and the tokenizer agree symbol for symbol.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import ArityError, ParseError


class Punct(enum.Enum):
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    NOT = "~"
    FORALL = "forall"
    EXISTS = "exists"
    EQUALS = "="

    def __repr__(self):
        return f"Punct.{self.name}"


LPAREN = Punct.LPAREN
RPAREN = Punct.RPAREN
COMMA = Punct.COMMA
NOT = Punct.NOT
FORALL = Punct.FORALL
EXISTS = Punct.EXISTS
EQUALS = Punct.EQUALS


def _check_natural(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class Var:
    """The variable ``v<index>``; both a symbol and a term."""

    index: int

    def __post_init__(self):
        _check_natural("variable index", self.index)


@dataclass(frozen=True)
class Pred:
    index: int
    arity: int

    def __post_init__(self):
        _check_natural("predicate index", self.index)
        _check_natural("predicate arity", self.arity)


@dataclass(frozen=True)
class Func:
    index: int
    arity: int

    def __post_init__(self):
        _check_natural("function index", self.index)
        _check_natural("function arity", self.arity)


Symbol = Union[Punct, Var, Pred, Func]


@dataclass(frozen=True)
class FuncApp:
    func: Func
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.func.arity:
            raise ArityError(
                f"{render_symbol(self.func)} takes {self.func.arity} argument(s), "
                f"got {len(self.args)}"
            )


Term = Union[Var, FuncApp]

ZERO = FuncApp(Func(0, 0))


def const(index: int = 0) -> FuncApp:
    return FuncApp(Func(index, 0))


@dataclass(frozen=True)
class Atom:
    pred: Union[Punct, Pred]
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.pred is EQUALS:
            arity = 2
        elif isinstance(self.pred, Pred):
            arity = self.pred.arity
        else:
            raise TypeError(f"atom head must be EQUALS or a Pred, got {self.pred!r}")
        if len(self.args) != arity:
            raise ArityError(
                f"{render_symbol(self.pred)} takes {arity} argument(s), got {len(self.args)}"
            )


@dataclass(frozen=True)
class Neg:
    body: "Formula"


@dataclass(frozen=True)
class Quant:
    kind: Punct
    var: int
    body: "Formula"

    def __post_init__(self):
        if self.kind not in (FORALL, EXISTS):
            raise TypeError(f"quantifier kind must be FORALL or EXISTS, got {self.kind!r}")
        _check_natural("bound variable index", self.var)


Formula = Union[Atom, Neg, Quant]


@dataclass(frozen=True)
class TaggedSentence:
    """A formula together with the world it belongs to (``phi@k``)."""

    formula: Formula
    world: int

    def __post_init__(self):
        if not isinstance(self.world, int) or isinstance(self.world, bool) or self.world < 1:
            raise ValueError(f"world index must be a positive integer, got {self.world!r}")

    def __str__(self):
        return f"{render(self.formula)}@{self.world}"


# ---------- rendering ----------

def render_symbol(s: Symbol) -> str:
    if isinstance(s, Punct):
        return s.value
    if isinstance(s, Var):
        return f"v{s.index}"
    if isinstance(s, Pred):
        return f"A{s.index}_{s.arity}"
    if isinstance(s, Func):
        if s.index == 0 and s.arity == 0:
            return "0"
        return f"f{s.index}_{s.arity}"
    raise TypeError(f"not a symbol: {s!r}")


def _render_app(head: Symbol, args: Sequence) -> str:
    if not args:
        return render_symbol(head)
    return f"{render_symbol(head)}({','.join(_render_term(a) for a in args)})"


def _render_term(t: Term) -> str:
    if isinstance(t, Var):
        return render_symbol(t)
    return _render_app(t.func, t.args)


def render(f: Formula) -> str:
    """Surface text for ``f``; ``parse(render(f)) == f``."""
    prefix = []
    while not isinstance(f, Atom):
        if isinstance(f, Neg):
            prefix.append("~")
            f = f.body
        elif isinstance(f, Quant):
            prefix.append(f"{f.kind.value} v{f.var} ")
            f = f.body
        else:
            raise TypeError(f"not a formula: {f!r}")
    return "".join(prefix) + _render_app(f.pred, f.args)


# ---------- linearization ----------

def _linearize_term(t: Term, out: list):
    if isinstance(t, Var):
        out.append(t)
        return
    out.append(t.func)
    if t.args:
        out.append(LPAREN)
        for n, a in enumerate(t.args):
            if n:
                out.append(COMMA)
            _linearize_term(a, out)
        out.append(RPAREN)


def linearize(f: Formula) -> list:
    """The symbol string of ``f``, in the order it is coded."""
    out: list = []
    while not isinstance(f, Atom):
        if isinstance(f, Neg):
            out.append(NOT)
            f = f.body
        else:
            out.append(f.kind)
            out.append(Var(f.var))
            f = f.body
    out.append(f.pred)
    if f.args:
        out.append(LPAREN)
        for n, a in enumerate(f.args):
            if n:
                out.append(COMMA)
            _linearize_term(a, out)
        out.append(RPAREN)
    return out


# ---------- tokenizing and parsing ----------

_NUM = r"(0|[1-9][0-9]*)"
_TOKEN = re.compile(
    r"(?P<kw>forall|exists)(?![A-Za-z0-9_])"
    rf"|v{_NUM}(?![A-Za-z0-9_])"
    rf"|A{_NUM}_{_NUM}(?![A-Za-z0-9_])"
    rf"|f{_NUM}_{_NUM}(?![A-Za-z0-9_])"
    r"|(?P<zero>0)(?![A-Za-z0-9_])"
    r"|(?P<punct>[(),~=])"
)
_PUNCT = {p.value: p for p in Punct}


def tokenize(text: str) -> list:
    """Split surface text into ``(symbol, position)`` pairs."""
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        g = m.groups()
        if m.group("kw"):
            sym = _PUNCT[m.group("kw")]
        elif g[1] is not None:
            sym = Var(int(g[1]))
        elif g[2] is not None:
            sym = Pred(int(g[2]), int(g[3]))
        elif g[4] is not None:
            sym = Func(int(g[4]), int(g[5]))
        elif m.group("zero"):
            sym = Func(0, 0)
        else:
            sym = _PUNCT[m.group("punct")]
        tokens.append((sym, pos))
        pos = m.end()


class _SymbolParser:
    def __init__(self, symbols: Sequence, positions: Sequence):
        self.symbols = symbols
        self.positions = positions
        self.i = 0

    def _pos(self):
        if self.i < len(self.positions):
            return self.positions[self.i]
        return self.positions[-1] + 1 if self.positions else 0

    def _peek(self):
        return self.symbols[self.i] if self.i < len(self.symbols) else None

    def _fail(self, *expected):
        got = self._peek()
        what = "end of input" if got is None else repr(render_symbol(got))
        raise ParseError(f"unexpected {what}", self._pos(), expected)

    def formula(self) -> Formula:
        prefix = []
        while True:
            s = self._peek()
            if s is NOT:
                prefix.append(None)
                self.i += 1
            elif s is FORALL or s is EXISTS:
                self.i += 1
                v = self._peek()
                if not isinstance(v, Var):
                    self._fail("variable")
                self.i += 1
                prefix.append((s, v.index))
            else:
                break
        s = self._peek()
        if not (s is EQUALS or isinstance(s, Pred)):
            self._fail("'~'", "quantifier", "'='", "predicate")
        self.i += 1
        arity = 2 if s is EQUALS else s.arity
        f: Formula = Atom(s, self._args(s, arity))
        for q in reversed(prefix):
            f = Neg(f) if q is None else Quant(q[0], q[1], f)
        return f

    def _args(self, head, arity):
        if self._peek() is not LPAREN:
            if arity == 0:
                return ()
            raise ArityError(f"{render_symbol(head)} takes {arity} argument(s), got 0")
        self.i += 1
        args = []
        if self._peek() is not RPAREN:
            while True:
                args.append(self.term())
                if self._peek() is COMMA:
                    self.i += 1
                    continue
                if self._peek() is RPAREN:
                    break
                self._fail("','", "')'")
        self.i += 1
        if arity == 0 and not args:
            raise ParseError(f"{render_symbol(head)} takes no parentheses", self._pos())
        if len(args) != arity:
            raise ArityError(f"{render_symbol(head)} takes {arity} argument(s), got {len(args)}")
        return tuple(args)

    def term(self) -> Term:
        s = self._peek()
        if isinstance(s, Var):
            self.i += 1
            return s
        if isinstance(s, Func):
            self.i += 1
            return FuncApp(s, self._args(s, s.arity))
        self._fail("variable", "function symbol")

    def done(self):
        if self.i != len(self.symbols):
            self._fail("end of input")


def parse_symbols(symbols: Sequence) -> Formula:
    """Parse a symbol string (as produced by ``linearize``) back into a formula."""
    p = _SymbolParser(list(symbols), list(range(len(symbols))))
    f = p.formula()
    p.done()
    return f


def parse(text: str) -> Formula:
    if not text or not text.strip():
        raise ParseError("empty formula", 0, ("formula",))
    tokens = tokenize(text)
    p = _SymbolParser([t[0] for t in tokens], [t[1] for t in tokens])
    f = p.formula()
    p.done()
    return f


# ---------- variables ----------

def _term_vars(t: Term) -> Iterator[int]:
    if isinstance(t, Var):
        yield t.index
    else:
        for a in t.args:
            yield from _term_vars(a)


def free_vars(f: Formula) -> frozenset:
    bound = []
    while not isinstance(f, Atom):
        if isinstance(f, Quant):
            bound.append(f.var)
        f = f.body
    return frozenset(v for a in f.args for v in _term_vars(a)) - set(bound)


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


# ---------- tagged expressions and files ----------

def parse_tagged(text: str, default_world: int | None = None) -> TaggedSentence:
    """Parse ``formula@k``; the suffix may be omitted when a default is given."""
    body, sep, tag = text.rpartition("@")
    if not sep:
        if default_world is None:
            raise ParseError("missing world tag", len(text), ("'@<world>'",))
        return TaggedSentence(parse(text), default_world)
    tag = tag.strip()
    if not tag.isdigit() or int(tag) < 1:
        raise ParseError(f"bad world tag {tag!r}", len(body) + 1, ("positive integer",))
    return TaggedSentence(parse(body), int(tag))


def content_lines(text: str) -> Iterator[tuple]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def read_expressions(text: str, default_world: int = 1) -> list:
    """Read an expression file: one ``formula[@world]`` per line, ``#`` comments."""
    out = []
    for lineno, line in content_lines(text):
        try:
            out.append(parse_tagged(line, default_world))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return out


# ---------- meta-level expressions ----------

@dataclass(frozen=True)
class MetaNot:
    body: "MetaExpression"


@dataclass(frozen=True)
class MetaAnd:
    left: "MetaExpression"
    right: "MetaExpression"


@dataclass(frozen=True)
class MetaOr:
    left: "MetaExpression"
    right: "MetaExpression"


@dataclass(frozen=True)
class MetaIff:
    left: "MetaExpression"
    right: "MetaExpression"


MetaExpression = Union[TaggedSentence, MetaNot, MetaAnd, MetaOr, MetaIff]

_META_BINARY = {"and": MetaAnd, "or": MetaOr, "iff": MetaIff}


@dataclass(frozen=True)
class World:
    """The expression is a sentence of world ``k``."""

    k: int

    def __str__(self):
        return f"World({self.k})"


@dataclass(frozen=True)
class Hybrid:
    """The expression mixes sentences of several worlds; it belongs to none."""

    worlds: frozenset

    def __str__(self):
        return "Hybrid{" + ",".join(str(w) for w in sorted(self.worlds)) + "}"


def leaves(e: MetaExpression) -> Iterator[TaggedSentence]:
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, TaggedSentence):
            yield node
        elif isinstance(node, MetaNot):
            stack.append(node.body)
        else:
            stack.append(node.right)
            stack.append(node.left)


def world_membership(e: MetaExpression):
    tags = frozenset(leaf.world for leaf in leaves(e))
    if len(tags) == 1:
        return World(next(iter(tags)))
    return Hybrid(tags)


def render_meta(e: MetaExpression) -> str:
    if isinstance(e, TaggedSentence):
        return str(e)
    if isinstance(e, MetaNot):
        return f"not ({render_meta(e.body)})"
    op = {MetaAnd: "and", MetaOr: "or", MetaIff: "iff"}[type(e)]
    return f"({render_meta(e.left)}) {op} ({render_meta(e.right)})"


def meta_lines(e: MetaExpression) -> list:
    """Serialize ``e`` in the prefix line format read by ``read_meta``."""
    out = []
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, TaggedSentence):
            out.append(str(node))
        elif isinstance(node, MetaNot):
            out.append("not")
            stack.append(node.body)
        else:
            out.append({MetaAnd: "and", MetaOr: "or", MetaIff: "iff"}[type(node)])
            stack.append(node.right)
            stack.append(node.left)
    return out


def read_meta(text: str | Iterable[str]) -> MetaExpression:
    """Read a meta-expression in prefix form, one node per line.

    Connective lines are ``not``, ``and``, ``or``, ``iff``; every other line is
    a leaf ``formula@world``.  ``#`` starts a comment.
    """
    if not isinstance(text, str):
        text = "\n".join(text)
    items = list(content_lines(text))
    if not items:
        raise ParseError("empty meta-expression", 0, ("leaf",))
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(items):
            raise ParseError("truncated meta-expression", len(items), ("connective", "leaf"))
        lineno, line = items[pos]
        pos += 1
        word = line.lower()
        if word == "not":
            return MetaNot(node())
        if word in _META_BINARY:
            left = node()
            return _META_BINARY[word](left, node())
        try:
            return parse_tagged(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc

    result = node()
    if pos != len(items):
        raise ParseError(f"line {items[pos][0]}: trailing input", items[pos][0], ("end of input",))
    return result
