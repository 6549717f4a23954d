"""Finite Kripke frames, modal valuation, and worlds as sets of signed atoms."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import ParseError, UnknownAtom, UnknownWorld


def _check_world(w):
    if not isinstance(w, int) or isinstance(w, bool) or w < 1:
        raise ValueError(f"world index must be a positive integer, got {w!r}")


@dataclass(frozen=True)
class Frame:
    worlds: frozenset
    relation: frozenset = frozenset()
    _succ: Mapping = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        worlds = frozenset(self.worlds)
        relation = frozenset((a, b) for a, b in self.relation)
        for w in worlds:
            _check_world(w)
        for a, b in relation:
            if a not in worlds or b not in worlds:
                raise UnknownWorld(f"relation pair ({a}, {b}) leaves the world set")
        succ = {w: [] for w in sorted(worlds)}
        for a, b in sorted(relation):
            succ[a].append(b)
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "_succ", {w: tuple(s) for w, s in succ.items()})

    def successors(self, w: int) -> tuple:
        try:
            return self._succ[w]
        except KeyError:
            raise UnknownWorld(f"world {w} is not in the frame") from None

    def accesses(self, a: int, b: int) -> bool:
        return (a, b) in self.relation


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    symmetric: bool
    transitive: bool


def relation_properties(f: Frame) -> RelationProperties:
    r = f.relation
    return RelationProperties(
        reflexive=all((w, w) in r for w in f.worlds),
        symmetric=all((b, a) in r for a, b in r),
        transitive=all((a, c) in r for a, b in r for c in f.successors(b)),
    )


# ---------- modal formulas ----------

@dataclass(frozen=True)
class PropAtom:
    name: str


@dataclass(frozen=True)
class MNot:
    body: "ModalFormula"


@dataclass(frozen=True)
class MAnd:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class MOr:
    left: "ModalFormula"
    right: "ModalFormula"


@dataclass(frozen=True)
class Diamond:
    body: "ModalFormula"


@dataclass(frozen=True)
class Box:
    body: "ModalFormula"


ModalFormula = Union[PropAtom, MNot, MAnd, MOr, Diamond, Box]


def eval_modal(f: Frame, v: Mapping, phi: ModalFormula, w: int) -> bool:
    """Truth of ``phi`` at world ``w``.

    ``v`` maps each atom name to the set of worlds where it holds; every atom
    occurring in ``phi`` must have an entry.  Box is vacuously true and
    Diamond false at a world with no successors.
    """
    f.successors(w)
    return _eval(f._succ, v, phi, w)


def _eval(succ, v, phi, w):
    t = type(phi)
    if t is PropAtom:
        try:
            return w in v[phi.name]
        except KeyError:
            raise UnknownAtom(f"atom {phi.name!r} has no valuation") from None
    if t is MNot:
        return not _eval(succ, v, phi.body, w)
    if t is MAnd:
        return _eval(succ, v, phi.left, w) and _eval(succ, v, phi.right, w)
    if t is MOr:
        return _eval(succ, v, phi.left, w) or _eval(succ, v, phi.right, w)
    if t is Diamond:
        for u in succ[w]:
            if _eval(succ, v, phi.body, u):
                return True
        return False
    if t is Box:
        for u in succ[w]:
            if not _eval(succ, v, phi.body, u):
                return False
        return True
    raise TypeError(f"not a modal formula: {phi!r}")


def modal_atoms(phi: ModalFormula) -> frozenset:
    if isinstance(phi, PropAtom):
        return frozenset({phi.name})
    if isinstance(phi, (MNot, Diamond, Box)):
        return modal_atoms(phi.body)
    return modal_atoms(phi.left) | modal_atoms(phi.right)


def render_modal(phi: ModalFormula) -> str:
    if isinstance(phi, PropAtom):
        return phi.name
    if isinstance(phi, MNot):
        return "~" + render_modal(phi.body)
    if isinstance(phi, Diamond):
        return "<>" + render_modal(phi.body)
    if isinstance(phi, Box):
        return "[]" + render_modal(phi.body)
    op = "&" if isinstance(phi, MAnd) else "|"
    return f"({render_modal(phi.left)} {op} {render_modal(phi.right)})"


_MODAL_TOKEN = re.compile(r"\s*(<>|\[\]|[~&|()]|[A-Za-z_][A-Za-z0-9_]*)")


def parse_modal(text: str) -> ModalFormula:
    """Parse ``<>``, ``[]``, ``~``, ``&``, ``|`` over identifier atoms.

    Unary operators bind tightest, then ``&``, then ``|``; both binary
    operators associate to the left.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _MODAL_TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def fail(*expected):
        where = tokens[i][1] if i < len(tokens) else len(text)
        got = "end of input" if peek() is None else repr(peek())
        raise ParseError(f"unexpected {got}", where, expected)

    def disj():
        nonlocal i
        left = conj()
        while peek() == "|":
            i += 1
            left = MOr(left, conj())
        return left

    def conj():
        nonlocal i
        left = unary()
        while peek() == "&":
            i += 1
            left = MAnd(left, unary())
        return left

    def unary():
        nonlocal i
        t = peek()
        if t in ("~", "<>", "[]"):
            i += 1
            body = unary()
            return {"~": MNot, "<>": Diamond, "[]": Box}[t](body)
        if t == "(":
            i += 1
            inner = disj()
            if peek() != ")":
                fail("')'")
            i += 1
            return inner
        if t is not None and (t[0].isalpha() or t[0] == "_"):
            i += 1
            return PropAtom(t)
        fail("atom", "'('", "'~'", "'<>'", "'[]'")

    if not tokens:
        raise ParseError("empty modal formula", 0, ("atom",))
    result = disj()
    if i != len(tokens):
        fail("end of input")
    return result


# ---------- frame files ----------

def frame_from_json(data) -> tuple:
    """``(Frame, valuation)`` from ``{"worlds": [...], "relation": [[a, b], ...], "valuation": {...}}``."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict) or "worlds" not in data:
        raise ValueError("frame file must be an object with a 'worlds' list")
    frame = Frame(frozenset(data["worlds"]), frozenset(tuple(p) for p in data.get("relation", [])))
    valuation = {}
    for name, ws in data.get("valuation", {}).items():
        ws = frozenset(ws)
        stray = ws - frame.worlds
        if stray:
            raise UnknownWorld(f"valuation of {name!r} mentions worlds {sorted(stray)} outside the frame")
        valuation[name] = ws
    return frame, valuation


def frame_to_json(frame: Frame, valuation: Mapping | None = None) -> dict:
    out = {"worlds": sorted(frame.worlds), "relation": [list(p) for p in sorted(frame.relation)]}
    if valuation is not None:
        out["valuation"] = {k: sorted(v) for k, v in sorted(valuation.items())}
    return out


# ---------- worlds as sets of sentences ----------

@dataclass(frozen=True)
class WorldTheory:
    """A world given as signed atoms: ``("p", True)`` for p, ``("p", False)`` for ~p."""

    universe: frozenset
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        object.__setattr__(self, "members", frozenset((a, bool(s)) for a, s in self.members))
        stray = {a for a, _ in self.members} - self.universe
        if stray:
            raise UnknownAtom(f"members outside the universe: {sorted(stray)}")


@dataclass(frozen=True)
class Consistency:
    maximal: bool
    consistent: bool


def check_maximal_consistent(t: WorldTheory) -> Consistency:
    signs = {}
    for atom, sign in t.members:
        signs.setdefault(atom, set()).add(sign)
    return Consistency(
        maximal=all(a in signs for a in t.universe),
        consistent=all(len(s) == 1 for s in signs.values()),
    )
