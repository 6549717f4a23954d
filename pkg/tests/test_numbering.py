import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import tagged
from worldgodel import numbering as N
from worldgodel import syntax as S
from worldgodel.errors import (
    AccessDenied,
    BadCode,
    BadLength,
    BadParse,
    BadTail,
    BadWorld,
    InvalidCode,
    MalformedNumber,
    ParseError,
    UnknownWorld,
)
from worldgodel.worlds import Frame

WORKED = 2**2 * 3**6 * 5**13 * 7**1 * 11**8 * 13**5 * 17**8 * 19**3
EQ00 = S.parse("=(0,0)")


def sieve(limit):
    flags = [True] * limit
    flags[0] = flags[1] = False
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def brute_lo(x, y):
    if x <= 1 or y <= 1:
        return 0
    z = 0
    while x % y ** (z + 1) == 0:
        z += 1
    return z


# ---------- primes and lo ----------

def test_nth_prime_small():
    assert [N.nth_prime(j) for j in range(3)] == [2, 3, 5]
    assert N.nth_prime(7) == 19
    assert N.nth_prime(10) == 31


def test_nth_prime_matches_sieve():
    primes = sieve(2000)
    assert [N.nth_prime(j) for j in range(201)] == primes[:201]


def test_is_prime_matches_sieve():
    primes = set(sieve(3000))
    assert all(N.is_prime(n) == (n in primes) for n in range(3000))


def test_lo_examples():
    assert N.lo(12, 2) == 2
    assert N.lo(5, 7) == 0
    assert N.lo(WORKED, 2) == 2
    assert N.lo(1, 2) == 0
    assert N.lo(8, 1) == 0
    assert N.lo(0, 3) == 0


@given(st.integers(0, 10**30), st.integers(0, 60))
def test_lo_matches_brute_force(x, y):
    assert N.lo(x, y) == brute_lo(x, y)


@given(st.integers(2, 40), st.integers(0, 300), st.integers(1, 10**6))
def test_lo_on_prime_powers(p, z, m):
    if m % p == 0:
        return
    assert N.lo(p**z * m, p) == z


# ---------- symbol codes ----------

@pytest.mark.parametrize(
    "symbol, code",
    [
        (S.Func(0, 0), 8),
        (S.EQUALS, 13),
        (S.LPAREN, 1),
        (S.COMMA, 5),
        (S.RPAREN, 3),
        (S.NOT, 7),
        (S.FORALL, 9),
        (S.EXISTS, 11),
        (S.Var(1), 10),
        (S.Var(0), 2),
        (S.Pred(2, 1), 4 * 3 * 25),
        (S.Func(1, 2), 8 * 9 * 5),
    ],
)
def test_symbol_codes(symbol, code):
    assert N.symbol_code(symbol) == code
    assert N.decode_symbol(code) == symbol


def _code_forms(limit):
    """Every code of every form up to ``limit``, enumerated from the table."""
    codes = {1, 3, 5, 7, 9, 11, 13}
    for i in range(12):
        for n in range(12):
            for base in (4, 8):
                codes.add(base * 3**n * 5**i)
        codes.add(2 * 5**i)
    return {c for c in codes if c <= limit}


def test_decode_symbol_rejects_non_codes():
    valid = _code_forms(5000)
    assert 6 not in valid
    with pytest.raises(InvalidCode):
        N.decode_symbol(6)
    for c in range(0, 5001):
        if c in valid:
            assert N.symbol_code(N.decode_symbol(c)) == c
        else:
            with pytest.raises(InvalidCode):
                N.decode_symbol(c)


def test_symbol_codes_injective():
    symbols = list(S.Punct)
    symbols += [S.Var(i) for i in range(6)]
    symbols += [cls(i, n) for cls in (S.Pred, S.Func) for i in range(6) for n in range(6)]
    codes = [N.symbol_code(s) for s in symbols]
    assert len(set(codes)) == len(codes)


# ---------- encode / decode ----------

def test_worked_example():
    e = N.encode(S.TaggedSentence(EQ00, 2))
    assert e == WORKED
    assert N.world_of(e) == 2 and N.length_of(e) == 6
    assert e.factored() == "2^2 * 3^6 * 5^13 * 7^1 * 11^8 * 13^5 * 17^8 * 19^3"
    assert N.decode(WORKED) == S.TaggedSentence(EQ00, 2)


def test_world_one_halves_the_code():
    assert N.encode(S.TaggedSentence(EQ00, 1)) * 2 == WORKED


def test_world_and_length_extraction():
    assert N.world_of(3**5 * 7) == 0
    assert N.world_of(2**5) == 5
    assert N.length_of(2**4 * 5) == 0
    assert N.length_of(3**4) == 4


@pytest.mark.parametrize(
    "value, error",
    [
        (7, BadWorld),
        (1, BadWorld),
        (0, BadWorld),
        (2, BadLength),
        (2 * 3**2 * 5**13, BadCode),
        (2 * 3 * 5**6, BadCode),
        (2 * 3 * 5**13 * 7, BadTail),
        (WORKED * 23, BadTail),
        (2 * 3 * 5**1, BadParse),
        (2 * 3**2 * 5**8 * 7**8, BadParse),
    ],
)
def test_decode_errors(value, error):
    with pytest.raises(error):
        N.decode(value)
    assert issubclass(error, MalformedNumber)


@settings(max_examples=200)
@given(tagged())
def test_round_trip(s):
    assert N.decode(N.encode(s)) == s


@settings(max_examples=200)
@given(tagged())
def test_extraction(s):
    e = N.encode(s)
    assert N.world_of(e) == s.world
    assert N.length_of(e) == len(S.linearize(s.formula))


@settings(max_examples=100)
@given(tagged(), tagged())
def test_injective(a, b):
    if a != b:
        assert N.encode(a) != N.encode(b)


# ---------- families ----------

def test_identity_family_encodes_like_default():
    fam = N.NumberingFamily.identity(1, [1, 2])
    s = S.TaggedSentence(EQ00, 2)
    assert N.encode(s, fam) == N.encode(s)


def test_absent_component_denies_access():
    fam = N.NumberingFamily(1, {1: N.ABSENT, 2: N.IDENTITY})
    with pytest.raises(AccessDenied):
        N.encode(S.TaggedSentence(EQ00, 1), fam)
    with pytest.raises(AccessDenied):
        N.encode(S.TaggedSentence(EQ00, 3), fam)
    assert N.encode(S.TaggedSentence(EQ00, 2), fam) == WORKED


SWAP_PARENS = N.Present({1: 3, 3: 1, 8: 2, 2: 8})


def test_permuted_component_changes_codes():
    fam = N.NumberingFamily(1, {2: SWAP_PARENS})
    e = N.encode(S.TaggedSentence(EQ00, 2), fam)
    assert e == 2**2 * 3**6 * 5**13 * 7**3 * 11**2 * 13**5 * 17**2 * 19**1
    assert N.decode(e, fam) == S.TaggedSentence(EQ00, 2)


@settings(max_examples=150)
@given(tagged(max_world=2), tagged(max_world=2))
def test_permuted_round_trip_and_injectivity(a, b):
    fam = N.NumberingFamily(1, {1: SWAP_PARENS, 2: N.Present({13: 7, 7: 9, 9: 13})})
    ea = N.encode(a, fam)
    assert N.decode(ea, fam) == a
    if a != b:
        assert ea != N.encode(b, fam)


def test_permutation_must_be_bijection_of_codes():
    with pytest.raises(ValueError):
        N.Present({1: 3})
    with pytest.raises(InvalidCode):
        N.Present({1: 6, 6: 1})
    assert N.Present({1: 1}) == N.IDENTITY


def test_family_from_frame_examples():
    only_ik = Frame(frozenset({1, 2}), frozenset({(1, 2)}))
    fam = N.family_from_frame(only_ik, 1)
    assert fam.components == {1: N.ABSENT, 2: N.IDENTITY}
    assert N.accessible(fam, 2) and not N.accessible(fam, 1)

    total = Frame(frozenset({1, 2}), frozenset(itertools.product([1, 2], repeat=2)))
    assert N.accessible_worlds(N.family_from_frame(total, 1)) == {1, 2}

    empty = Frame(frozenset({1, 2}))
    fam = N.family_from_frame(empty, 2)
    assert not any(N.accessible(fam, k) for k in (1, 2, 3))
    assert not N.accessible(N.NumberingFamily(1), 1)

    with pytest.raises(UnknownWorld):
        N.family_from_frame(empty, 3)


def test_family_reproduces_frame_exhaustively():
    for n in range(1, 5):
        ws = list(range(1, n + 1))
        pairs = list(itertools.product(ws, repeat=2))
        for mask in range(1 << len(pairs)):
            rel = frozenset(p for b, p in enumerate(pairs) if mask >> b & 1)
            frame = Frame(frozenset(ws), rel)
            for i in ws:
                fam = N.family_from_frame(frame, i)
                assert {k for k in ws if N.accessible(fam, k)} == {k for (a, k) in rel if a == i}


# ---------- text forms ----------

def test_factored_round_trip():
    text = "2^2 * 3^6 * 5^13 * 7^1 * 11^8 * 13^5 * 17^8 * 19^3"
    assert N.parse_number(text) == WORKED
    assert N.to_factored(N.parse_number(text)) == text
    assert N.parse_number(str(WORKED)) == WORKED
    assert N.to_factored(7) == "7^1"
    assert N.to_factored(2 * 5) == "2^1 * 5^1"


@pytest.mark.parametrize("text", ["2^2 * 2^1", "3^1 * 2^1", "4^1", "2^0", "x", "2^1 *", ""])
def test_factored_rejects(text):
    with pytest.raises(ParseError):
        N.parse_number(text)


@given(st.integers(2, 10**9))
def test_factored_round_trip_property(n):
    assert N.parse_number(N.to_factored(n)) == n
