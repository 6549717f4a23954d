"""Classification of two-world systems.

Two worlds, labelled ``i`` and ``k``, with four possible accessibility edges.
From an edge configuration the classifier derives which predicates with
sentence arguments are admissible, whether each world has a Gödel sentence
and where it becomes provable and true, where a Liar arises, and what is left
of each world's truth predicate.  The sixteen configurations collapse to ten
types once the mirror image (``i`` and ``k`` exchanged) is identified.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, replace
from typing import Mapping

from .numbering import accessible, family_from_frame
from .worlds import Frame

I, K = "i", "k"
LABELS = (I, K)
# Frame indices used when a configuration is realized as a Kripke frame.
WORLD_INDEX = {I: 1, K: 2}


def other(w: str) -> str:
    return K if w == I else I


@dataclass(frozen=True)
class AccessConfig:
    ii: bool = False
    kk: bool = False
    ik: bool = False
    ki: bool = False

    def accesses(self, a: str, b: str) -> bool:
        return getattr(self, a + b)

    def swap(self) -> "AccessConfig":
        return AccessConfig(ii=self.kk, kk=self.ii, ik=self.ki, ki=self.ik)

    def pairs(self) -> frozenset:
        return frozenset((a, b) for a in LABELS for b in LABELS if self.accesses(a, b))

    def to_frame(self) -> Frame:
        return Frame(
            frozenset(WORLD_INDEX.values()),
            frozenset((WORLD_INDEX[a], WORLD_INDEX[b]) for a, b in self.pairs()),
        )

    @classmethod
    def from_pairs(cls, pairs) -> "AccessConfig":
        pairs = set(pairs)
        return cls(**{a + b: (a, b) in pairs for a in LABELS for b in LABELS})


def all_configs() -> list:
    return [
        AccessConfig(ii, kk, ik, ki)
        for ii in (False, True)
        for kk in (False, True)
        for ik in (False, True)
        for ki in (False, True)
    ]


# The ten table rows, in order: (ii, kk, ik, ki).
CANONICAL = (
    AccessConfig(False, False, False, False),
    AccessConfig(False, False, True, False),
    AccessConfig(False, False, True, True),
    AccessConfig(True, False, False, False),
    AccessConfig(True, True, False, False),
    AccessConfig(True, False, True, False),
    AccessConfig(False, True, True, False),
    AccessConfig(True, False, True, True),
    AccessConfig(True, True, True, False),
    AccessConfig(True, True, True, True),
)


@dataclass(frozen=True)
class CaseId:
    id: int
    swapped: bool = False


def canonicalize(c: AccessConfig) -> CaseId:
    for n, row in enumerate(CANONICAL, 1):
        if c == row:
            return CaseId(n, False)
    mirror = c.swap()
    for n, row in enumerate(CANONICAL, 1):
        if mirror == row:
            return CaseId(n, True)
    raise AssertionError(f"configuration {c} matches no table row")


class TruthKind(enum.Enum):
    ABSENT = "Absent"
    COMPLETE = "Complete"
    PARTIAL = "Partial"
    ELIMINATED = "Eliminated"


@dataclass(frozen=True)
class TruthStatus:
    """What remains of a world's truth predicate.

    ``domain`` holds the labels of the worlds whose true sentences the
    predicate still applies to; ``suppressed`` the labels whose sentences
    were removed to block a Liar.
    """

    kind: TruthKind
    domain: frozenset = frozenset()
    suppressed: frozenset = frozenset()

    def __post_init__(self):
        if self.kind is TruthKind.PARTIAL and not (self.domain and self.suppressed):
            raise ValueError("a partial truth predicate needs a domain and a suppressed set")
        if self.kind is TruthKind.ELIMINATED and self.domain:
            raise ValueError("an eliminated truth predicate has an empty domain")
        if self.kind is TruthKind.ABSENT and (self.domain or self.suppressed):
            raise ValueError("an absent truth predicate has no domain")


@dataclass(frozen=True)
class GoedelRecord:
    world: str
    exists: bool
    provable_in: frozenset = frozenset()
    true_in: frozenset = frozenset()


@dataclass(frozen=True)
class SystemReport:
    case: CaseId
    predicates: frozenset
    goedel: Mapping
    liars: frozenset
    truth: Mapping
    notes: tuple


STACKING_NOTE = "stacking of predicates: present in some form (not modelled)"


def _truth_status(c: AccessConfig, w: str, liar: bool) -> TruthStatus:
    domain = {v for v in LABELS if c.accesses(w, v)}
    if not domain:
        return TruthStatus(TruthKind.ABSENT)
    if not liar:
        return TruthStatus(TruthKind.COMPLETE, frozenset(domain))
    suppressed = frozenset({w})
    rest = frozenset(domain - suppressed)
    if not rest:
        return TruthStatus(TruthKind.ELIMINATED, suppressed=suppressed)
    return TruthStatus(TruthKind.PARTIAL, rest, suppressed)


def _notes(case: CaseId, goedel, liars, truth) -> tuple:
    notes = []
    for w in LABELS:
        o = other(w)
        g = goedel[w]
        t = truth[w]
        if g.exists:
            notes.append(f"G_{w} exists and is unprovable in w_{w}")
        if o in g.provable_in:
            notes.append(f"Axiom_{o}(G_{w}): G_{w} is provable in w_{o}")
        if o in g.true_in:
            notes.append(f"T_{o}(G_{w}): G_{w} is true in w_{o}")
        if w in liars:
            if t.kind is TruthKind.ELIMINATED:
                notes.append(f"L_{w}: T_{w} is eliminated")
            else:
                notes.append(f"L_{w}: S_{w} is suppressed from T_{w}, so T_{w} is partial")
        if t.kind is TruthKind.COMPLETE:
            dom = ", ".join(f"Sigma_{v}" for v in sorted(t.domain))
            notes.append(f"T_{w}({dom}): T_{w} is complete")
    if not liars and not any(g.exists for g in goedel.values()):
        notes.append("no self-reference: no Goedel sentences and no Liars")
    if case.id >= 3:
        notes.append(STACKING_NOTE)
    return tuple(sorted(notes))


def classify(c: AccessConfig) -> SystemReport:
    case = canonicalize(c)
    predicates = c.pairs()
    liars = frozenset(w for w in LABELS if c.accesses(w, w))
    truth = {w: _truth_status(c, w, w in liars) for w in LABELS}
    goedel = {}
    for w in LABELS:
        o = other(w)
        if not c.accesses(w, w):
            goedel[w] = GoedelRecord(w, False)
            continue
        provable = frozenset({o}) if c.accesses(o, w) else frozenset()
        true_in = frozenset({o}) if w in truth[o].domain else frozenset()
        goedel[w] = GoedelRecord(w, True, provable, true_in)
    return SystemReport(case, predicates, goedel, liars, truth, _notes(case, goedel, liars, truth))


def full_table() -> list:
    return [classify(c) for c in CANONICAL]


# ---------- label exchange ----------

_LABEL_IN_NOTE = re.compile(r"_([ik])\b")


def _swap_set(s) -> frozenset:
    return frozenset(other(w) for w in s)


def swap_report(r: SystemReport) -> SystemReport:
    """Exchange ``i`` and ``k`` throughout a report."""
    row = CANONICAL[r.case.id - 1]
    symmetric = row == row.swap()
    case = CaseId(r.case.id, False if symmetric else not r.case.swapped)
    goedel = {
        other(w): replace(g, world=other(w), provable_in=_swap_set(g.provable_in), true_in=_swap_set(g.true_in))
        for w, g in r.goedel.items()
    }
    truth = {
        other(w): replace(t, domain=_swap_set(t.domain), suppressed=_swap_set(t.suppressed))
        for w, t in r.truth.items()
    }
    notes = tuple(sorted(_LABEL_IN_NOTE.sub(lambda m: "_" + other(m.group(1)), n) for n in r.notes))
    return SystemReport(
        case,
        frozenset((other(a), other(b)) for a, b in r.predicates),
        {w: goedel[w] for w in LABELS},
        _swap_set(r.liars),
        {w: truth[w] for w in LABELS},
        notes,
    )


def predicates_via_numbering(c: AccessConfig) -> frozenset:
    """Admissible (owner, target) pairs read off the numbering families of the frame."""
    frame = c.to_frame()
    out = set()
    for a in LABELS:
        fam = family_from_frame(frame, WORLD_INDEX[a])
        for b in LABELS:
            if accessible(fam, WORLD_INDEX[b]):
                out.add((a, b))
    return frozenset(out)


# ---------- serialization ----------

def report_to_dict(r: SystemReport) -> dict:
    def labels(s):
        return sorted(s)

    return {
        "case": r.case.id,
        "swapped": r.case.swapped,
        "predicates": [[a, b] for a, b in sorted(r.predicates)],
        "goedel": {
            w: {
                "exists": g.exists,
                "provable_in": labels(g.provable_in),
                "true_in": labels(g.true_in),
            }
            for w, g in ((w, r.goedel[w]) for w in LABELS)
        },
        "liars": labels(r.liars),
        "truth": {
            w: {
                "status": t.kind.value,
                "domain": [f"Sigma_{v}" for v in labels(t.domain)],
                "suppressed": [f"S_{v}" for v in labels(t.suppressed)],
            }
            for w, t in ((w, r.truth[w]) for w in LABELS)
        },
        "notes": list(r.notes),
    }


def dumps(obj) -> str:
    """Canonical JSON text: two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def table_json() -> str:
    return dumps([report_to_dict(r) for r in full_table()])


def _fmt_truth(w: str, t: TruthStatus) -> str:
    if t.kind is TruthKind.ABSENT:
        return f"T_{w} absent"
    dom = ", ".join(f"Σ_{v}" for v in sorted(t.domain))
    sup = ", ".join(f"S_{v}" for v in sorted(t.suppressed))
    if t.kind is TruthKind.COMPLETE:
        return f"T_{w} complete over {dom}"
    if t.kind is TruthKind.PARTIAL:
        return f"T_{w} partial over {dom} ({sup} suppressed)"
    return f"T_{w} eliminated ({sup} suppressed)"


def _fmt_goedel(g: GoedelRecord) -> str:
    w = g.world
    if not g.exists:
        return f"no G_{w}"
    parts = [f"G_{w} unprovable in w_{w}"]
    if g.provable_in:
        parts.append("provable in " + ", ".join(f"w_{v}" for v in sorted(g.provable_in)))
    else:
        parts.append("provable nowhere")
    if g.true_in:
        parts.append("true in " + ", ".join(f"w_{v}" for v in sorted(g.true_in)))
    return "; ".join(parts)


def format_report(r: SystemReport) -> str:
    head = f"case {r.case.id}" + (" (i and k swapped)" if r.case.swapped else "")
    preds = ", ".join(f"P_{a}(S_{b})" for a, b in sorted(r.predicates)) or "none"
    liars = ", ".join(f"L_{w}" for w in sorted(r.liars)) or "none"
    lines = [
        head,
        f"  predicates: {preds}",
        *(f"  goedel:     {_fmt_goedel(r.goedel[w])}" for w in LABELS),
        f"  liars:      {liars}",
        *(f"  truth:      {_fmt_truth(w, r.truth[w])}" for w in LABELS),
    ]
    lines.extend(f"  note:       {n}" for n in r.notes)
    return "\n".join(lines)
