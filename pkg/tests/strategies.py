"""Hypothesis strategies and seeded generators for formulas and meta-trees."""

from hypothesis import strategies as st

from worldgodel import syntax as S

small = st.integers(0, 3)


def terms(max_depth=2):
    leaf = st.one_of(small.map(S.Var), small.map(S.const))

    def extend(children):
        return st.integers(1, 2).flatmap(
            lambda n: st.tuples(small, st.lists(children, min_size=n, max_size=n)).map(
                lambda t: S.FuncApp(S.Func(t[0], n), t[1])
            )
        )

    return st.recursive(leaf, extend, max_leaves=4)


def atoms():
    eq = st.tuples(terms(), terms()).map(lambda ab: S.Atom(S.EQUALS, ab))
    pred = st.integers(0, 2).flatmap(
        lambda n: st.tuples(small, st.lists(terms(), min_size=n, max_size=n)).map(
            lambda t: S.Atom(S.Pred(t[0], n), t[1])
        )
    )
    return st.one_of(eq, pred)


def formulas():
    return st.recursive(
        atoms(),
        lambda inner: st.one_of(
            inner.map(S.Neg),
            st.tuples(st.sampled_from([S.FORALL, S.EXISTS]), small, inner).map(lambda t: S.Quant(*t)),
        ),
        max_leaves=6,
    )


def tagged(max_world=9):
    return st.builds(S.TaggedSentence, formulas(), st.integers(1, max_world))


# Seeded generator for fixed-count sweeps (acceptance criteria).

def random_term(rng, depth):
    if depth <= 0 or rng.random() < 0.4:
        if rng.random() < 0.5:
            return S.Var(rng.randrange(3))
        return S.const(rng.randrange(2))
    n = rng.randint(1, 2)
    return S.FuncApp(S.Func(rng.randrange(2), n), [random_term(rng, depth - 1) for _ in range(n)])


def random_formula(rng, depth=6):
    """A formula of depth at most ``depth`` (an atom has depth 1)."""
    if depth <= 1 or rng.random() < 0.25:
        if rng.random() < 0.5:
            return S.Atom(S.EQUALS, [random_term(rng, 2), random_term(rng, 2)])
        n = rng.randint(0, 2)
        return S.Atom(S.Pred(rng.randrange(3), n), [random_term(rng, 2) for _ in range(n)])
    r = rng.random()
    body = random_formula(rng, depth - 1)
    if r < 0.4:
        return S.Neg(body)
    return S.Quant(rng.choice([S.FORALL, S.EXISTS]), rng.randrange(3), body)


def formula_depth(f):
    d = 1
    while not isinstance(f, S.Atom):
        d += 1
        f = f.body
    return d


def random_meta(rng, max_leaves=5, worlds=(1, 2, 3)):
    n = rng.randint(1, max_leaves)
    nodes = [S.TaggedSentence(random_formula(rng, 2), rng.choice(worlds)) for _ in range(n)]
    while len(nodes) > 1:
        a = nodes.pop(rng.randrange(len(nodes)))
        b = nodes.pop(rng.randrange(len(nodes)))
        op = rng.choice([S.MetaAnd, S.MetaOr, S.MetaIff])
        node = op(a, b)
        if rng.random() < 0.3:
            node = S.MetaNot(node)
        nodes.append(node)
    return nodes[0]
