"""World-tagged Gödel numbering.

A string ``x_0 ... x_{n-1}`` belonging to world ``k`` is coded as

    2**k * 3**n * 5**code(x_0) * 7**code(x_1) * ... * p(n+1)**code(x_{n-1})

where ``p(j)`` is the j-th prime counting from ``p(0) = 2``.  The owning world
and the length are read back with ``lo(e, 2)`` and ``lo(e, 3)``.

A numbering family belongs to one world and holds one component per world.
A component is either ``ABSENT`` (the owner cannot reach that world, so its
sentences have no code there) or a ``Present`` variant that may permute
symbol codes.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    AccessDenied,
    ArityError,
    BadCode,
    BadLength,
    BadParse,
    BadTail,
    BadWorld,
    InvalidCode,
    ParseError,
    UnknownWorld,
)
from .syntax import (
    COMMA,
    EQUALS,
    EXISTS,
    FORALL,
    LPAREN,
    NOT,
    RPAREN,
    Func,
    Pred,
    Punct,
    TaggedSentence,
    Var,
    linearize,
    parse_symbols,
)

# ---------- primes and lo ----------

_primes = [2, 3]
_primes_lock = threading.Lock()


def _has_no_known_factor(c: int) -> bool:
    limit = math.isqrt(c)
    for p in _primes:
        if p > limit:
            return True
        if c % p == 0:
            return False
    return True


def nth_prime(j: int) -> int:
    """Zero-based: ``nth_prime(0) == 2``, ``nth_prime(1) == 3``."""
    if j < 0:
        raise ValueError("prime index must be non-negative")
    if j < len(_primes):
        return _primes[j]
    with _primes_lock:
        while len(_primes) <= j:
            c = _primes[-1] + 2
            while not _has_no_known_factor(c):
                c += 2
            _primes.append(c)
    return _primes[j]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    limit = math.isqrt(n)
    j = 0
    while True:
        p = nth_prime(j)
        if p > limit:
            return True
        if n % p == 0:
            return False
        j += 1


def lo(x: int, y: int) -> int:
    """Largest ``z`` with ``y**z`` dividing ``x``; 0 unless ``x > 1`` and ``y > 1``."""
    if x <= 1 or y <= 1 or x % y:
        return 0
    # y**(2**t) for every t such that it still divides x
    powers = [y]
    while True:
        sq = powers[-1] * powers[-1]
        if sq > x or x % sq:
            break
        powers.append(sq)
    z = 0
    for t in range(len(powers) - 1, -1, -1):
        q, r = divmod(x, powers[t])
        if not r:
            x = q
            z += 1 << t
    return z


# ---------- symbol codes ----------

_PUNCT_CODES = {
    LPAREN: 1,
    RPAREN: 3,
    COMMA: 5,
    NOT: 7,
    FORALL: 9,
    EXISTS: 11,
    EQUALS: 13,
}
_CODE_PUNCT = {c: s for s, c in _PUNCT_CODES.items()}


def symbol_code(s) -> int:
    if isinstance(s, Punct):
        return _PUNCT_CODES[s]
    if isinstance(s, Var):
        return 2 * 5**s.index
    if isinstance(s, Pred):
        return 4 * 3**s.arity * 5**s.index
    if isinstance(s, Func):
        return 8 * 3**s.arity * 5**s.index
    raise TypeError(f"not a symbol: {s!r}")


def decode_symbol(c: int):
    if not isinstance(c, int) or c < 1:
        raise InvalidCode(f"{c!r} is not a symbol code")
    if c % 2:
        try:
            return _CODE_PUNCT[c]
        except KeyError:
            raise InvalidCode(f"{c} is not a symbol code") from None
    twos = lo(c, 2)
    rest = c >> twos
    arity = lo(rest, 3)
    rest //= 3**arity
    index = lo(rest, 5)
    rest //= 5**index
    if rest == 1:
        if twos == 1 and arity == 0:
            return Var(index)
        if twos == 2:
            return Pred(index, arity)
        if twos == 3:
            return Func(index, arity)
    raise InvalidCode(f"{c} is not a symbol code")


def is_symbol_code(c: int) -> bool:
    try:
        decode_symbol(c)
    except InvalidCode:
        return False
    return True


# ---------- numbering families ----------

class Absent:
    """Component for an inaccessible world: no sentence there gets a code."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ABSENT"

    def __reduce__(self):
        return (Absent, ())


ABSENT = Absent()


@dataclass(frozen=True)
class Present:
    """Component for an accessible world.

    ``permutation`` maps symbol codes to the codes this component uses in
    their place.  It must be a bijection of a finite set of valid codes onto
    itself; codes outside it are left unchanged.
    """

    permutation: tuple = field(default=())

    def __post_init__(self):
        items = self.permutation
        if isinstance(items, Mapping):
            items = items.items()
        items = tuple(sorted((int(a), int(b)) for a, b in items if a != b))
        keys = {a for a, _ in items}
        values = {b for _, b in items}
        if len(keys) != len(items) or keys != values:
            raise ValueError("component permutation must be a bijection of a set of codes onto itself")
        for c in keys:
            if not is_symbol_code(c):
                raise InvalidCode(f"{c} is not a symbol code")
        object.__setattr__(self, "permutation", items)
        object.__setattr__(self, "_fwd", dict(items))
        object.__setattr__(self, "_back", {b: a for a, b in items})

    def forward(self, code: int) -> int:
        return self._fwd.get(code, code)

    def backward(self, code: int) -> int:
        return self._back.get(code, code)


IDENTITY = Present()


@dataclass(frozen=True)
class NumberingFamily:
    """The numbering ``g_owner``: one component per world.

    Worlds missing from ``components`` are treated as ``ABSENT``.
    """

    owner: int
    components: Mapping = field(default_factory=dict)

    def component(self, k: int):
        return self.components.get(k, ABSENT)

    @classmethod
    def identity(cls, owner: int, worlds) -> "NumberingFamily":
        return cls(owner, {k: IDENTITY for k in worlds})


def family_from_frame(frame, i: int) -> NumberingFamily:
    """Component ``k`` of ``g_i`` is present exactly when ``i R k``."""
    if i not in frame.worlds:
        raise UnknownWorld(f"world {i} is not in the frame")
    return NumberingFamily(
        i, {k: IDENTITY if (i, k) in frame.relation else ABSENT for k in sorted(frame.worlds)}
    )


def accessible(fam: NumberingFamily, k: int) -> bool:
    return isinstance(fam.component(k), Present)


def accessible_worlds(fam: NumberingFamily) -> frozenset:
    return frozenset(k for k, c in fam.components.items() if isinstance(c, Present))


# ---------- encoding and decoding ----------

class GodelNumber(int):
    """A natural number, printed also in factored form on request."""

    def __repr__(self):
        return f"GodelNumber({int(self)})"

    def factored(self) -> str:
        return to_factored(self)


def _component_for(world: int, fam):
    if fam is None:
        return IDENTITY
    comp = fam.component(world)
    if not isinstance(comp, Present):
        raise AccessDenied(
            f"world {fam.owner} has no access to world {world}: its numbering component is empty"
        )
    return comp


def encode(s: TaggedSentence, fam: NumberingFamily | None = None) -> GodelNumber:
    """Code ``s`` under ``fam``; ``fam=None`` means the identity numbering on every world."""
    comp = _component_for(s.world, fam)
    symbols = linearize(s.formula)
    factors = [1 << s.world, 3 ** len(symbols)]
    for j, sym in enumerate(symbols):
        factors.append(nth_prime(j + 2) ** comp.forward(symbol_code(sym)))
    return GodelNumber(math.prod(factors))


def decode(e: int, fam: NumberingFamily | None = None) -> TaggedSentence:
    e = int(e)
    world = lo(e, 2)
    if world == 0:
        raise BadWorld("exponent of 2 is 0: no world index")
    comp = _component_for(world, fam)
    rest = e >> world
    length = lo(rest, 3)
    if length == 0:
        raise BadLength("exponent of 3 is 0: empty string")
    rest //= 3**length
    symbols = []
    for j in range(length):
        p = nth_prime(j + 2)
        c = lo(rest, p)
        if c:
            rest //= p**c
        try:
            symbols.append(decode_symbol(comp.backward(c)))
        except InvalidCode:
            raise BadCode(f"exponent {c} of prime {p} (position {j}) is not a symbol code") from None
    if rest != 1:
        raise BadTail(f"factors beyond prime {nth_prime(length + 1)} remain")
    try:
        formula = parse_symbols(symbols)
    except (ParseError, ArityError) as exc:
        raise BadParse(f"symbol string is not a formula: {exc}") from None
    return TaggedSentence(formula, world)


def world_of(e: int) -> int:
    return lo(int(e), 2)


def length_of(e: int) -> int:
    return lo(int(e), 3)


# ---------- text forms ----------

def factor_exponents(n: int) -> list:
    """``[(p, a), ...]`` with ascending primes, by trial division."""
    n = int(n)
    if n < 2:
        raise ValueError(f"{n} has no prime factorization")
    parts = []
    j = 0
    while n > 1:
        p = nth_prime(j)
        if p * p > n:
            parts.append((n, 1))
            break
        z = lo(n, p)
        if z:
            parts.append((p, z))
            n //= p**z
        j += 1
    return parts


def to_factored(n: int) -> str:
    return " * ".join(f"{p}^{a}" for p, a in factor_exponents(n))


_FACTOR = re.compile(r"\s*([0-9]+)\s*\^\s*([0-9]+)\s*")


def parse_number(text: str) -> GodelNumber:
    """Read a number in decimal or in factored form ``2^a * 3^b * ...``."""
    s = text.strip()
    if re.fullmatch(r"[0-9]+", s):
        return GodelNumber(int(s))
    value = 1
    last = 1
    for n, term in enumerate(s.split("*")):
        m = _FACTOR.fullmatch(term)
        if m is None:
            raise ParseError(f"bad factor {term.strip()!r} in term {n}", expected=("<prime>^<exponent>",))
        p, a = int(m.group(1)), int(m.group(2))
        if not is_prime(p):
            raise ParseError(f"base {p} is not prime")
        if p <= last:
            raise ParseError(f"primes must be strictly ascending ({p} after {last})")
        if a < 1:
            raise ParseError(f"exponent of {p} must be positive")
        value *= p**a
        last = p
    return GodelNumber(value)


def numeral(e: int) -> str:
    """Decimal numeral of ``e``, used when a code appears as a predicate argument."""
    return str(int(e))
