import itertools

import pytest

from ifg import syntax, trump, algebra
from ifg.algebra import Element, AlgebraContext, leq, leq_plus, leq_minus
from ifg.errors import IfgError, GuardExceeded
from ifg.model import Structure

CTX = AlgebraContext(2, 2)
EQ2 = Structure(2)
CONST2 = Structure(2, constants={"c0": 0, "c1": 1})


def teamset(ctx, *teams):
    mask = 0
    for t in teams:
        mask |= 1 << ctx.space.parse_team(t)
    return mask


def default_pool(ctx):
    d01 = ctx.diag(0, 1)
    spread = ctx.add(ctx.full_j, d01, ctx.neg(d01))
    f0 = ctx.flat(ctx.space.parse_team("00,01"))
    f1 = ctx.flat(ctx.space.parse_team("10,11"))
    return [ctx.zero, ctx.one, ctx.omega, ctx.mho, d01, ctx.diag(0, 0),
            ctx.neg(d01), spread, f0, f1, ctx.add(ctx.full_j, f0, f1)]


# -- constants and basic operations ----------------------------------------------


def test_constant_values():
    assert CTX.zero == Element(1, CTX.all_teamsets)
    assert CTX.one == Element(CTX.all_teamsets, 1)
    assert CTX.omega == Element(1, 1)
    assert CTX.mho == Element(CTX.all_teamsets, CTX.all_teamsets)
    sp = CTX.space
    assert CTX.diag(0, 1) == Element(sp.powerset_mask(sp.parse_team("00,11")),
                                     sp.powerset_mask(sp.parse_team("01,10")))
    assert CTX.diag(0, 0) == CTX.one


def test_negation_involution_and_duality():
    pool = default_pool(CTX)
    for x in pool:
        assert CTX.neg(CTX.neg(x)) == x
    for j in CTX.jsets():
        for x, y in itertools.product(pool, repeat=2):
            assert CTX.mul(j, x, y) == CTX.neg(
                CTX.add(j, CTX.neg(x), CTX.neg(y)))


def test_order_basics():
    pool = default_pool(CTX)
    for x in pool:
        assert leq(x, x)
        assert leq_plus(x, CTX.mho) and leq_minus(x, CTX.mho)
    # omega sits inside mho coordinatewise but not conversely
    assert leq_plus(CTX.omega, CTX.mho) and leq_minus(CTX.omega, CTX.mho)
    assert not (leq_plus(CTX.mho, CTX.omega)
                and leq_minus(CTX.mho, CTX.omega))
    for x, y in itertools.product(pool, repeat=2):
        assert leq(x, y) == leq(CTX.neg(y), CTX.neg(x))
        if leq(x, y) and leq(y, x):
            assert x == y


def test_flat_builds_powersets():
    team = CTX.space.parse_team("00,10")
    x = CTX.flat(team)
    assert x.plus == CTX.space.powerset_mask(team)
    assert algebra.is_double_suit(CTX, x) and algebra.is_flat(CTX, x)


# -- semantics bridge -------------------------------------------------------------


def test_meaning_homomorphism_depth_two():
    # meanings compose through the algebra operations connective by connective
    for nvars in (1, 2):
        ctx = AlgebraContext(2, nvars)
        ev = trump.Evaluator(EQ2, nvars)

        def elem(node):
            return Element(ev.winning_mask(node, True),
                           ev.winning_mask(node, False))

        atoms = [syntax.atomic(syntax.Eq(syntax.Var(i), syntax.Var(j)))
                 for i in range(nvars) for j in range(nvars)]
        for a in atoms:
            assert elem(syntax.negate(a)) == ctx.neg(elem(a))
            for j in ctx.jsets():
                for b in atoms:
                    assert (elem(syntax.disj(j, a, b))
                            == ctx.add(j, elem(a), elem(b)))
                for n in range(nvars):
                    assert (elem(syntax.exists(n, j, a))
                            == ctx.cyl(n, j, elem(a)))


def test_element_of_matches_meaning():
    f = syntax.parse("v0=v1", 2)
    assert CTX.element_of(EQ2, f) == CTX.diag(0, 1)


# -- classification -----------------------------------------------------------------


def test_classify_flags():
    flags = algebra.classify(CTX, CTX.omega)
    assert flags == {"rooted": True, "pair_of_suits": True,
                     "double_suit": True, "flat": True, "fixed_point": True}
    mho = algebra.classify(CTX, CTX.mho)
    assert mho["rooted"] and mho["pair_of_suits"] and mho["fixed_point"]
    assert not mho["double_suit"]
    d = algebra.classify(CTX, CTX.diag(0, 1))
    assert d["double_suit"] and d["flat"] and not d["fixed_point"]
    not_suit = Element(1 | (1 << CTX.space.parse_team("00,11")), 1)
    assert not algebra.is_suit(CTX, not_suit.plus)
    assert not algebra.is_suit(CTX, 0)


# -- generated subalgebras -------------------------------------------------------------


def test_generate_contains_constants_and_closes():
    ctx = AlgebraContext(2, 1)
    gen = ctx.flat(1)
    elems = algebra.generate_subalgebra(ctx, [gen])
    assert ctx.zero in elems and ctx.one in elems and gen in elems
    pool = set(elems)
    for x in elems:
        assert ctx.neg(x) in pool
        for j in ctx.jsets():
            assert ctx.cyl(0, j, x) in pool
            for y in elems:
                assert ctx.add(j, x, y) in pool
                assert ctx.mul(j, x, y) in pool


def test_generate_is_deterministic():
    ctx = AlgebraContext(2, 1)
    a = algebra.generate_subalgebra(ctx, [ctx.flat(1)])
    b = algebra.generate_subalgebra(ctx, [ctx.flat(1)])
    assert a == b


def test_generate_cap():
    ctx = AlgebraContext(2, 1)
    with pytest.raises(GuardExceeded):
        algebra.generate_subalgebra(ctx, [ctx.flat(1)], cap=3)


def test_generate_target_early_exit():
    ctx = AlgebraContext(2, 1)
    assert algebra.generate_subalgebra(ctx, [], target=ctx.zero) is True
    assert algebra.generate_subalgebra(ctx, [], target=ctx.omega) is False


def test_cyls_of_singleton_base():
    elems = algebra.cyls_of(Structure(1), 1)
    ctx = AlgebraContext(1, 1)
    assert set(elems) == {ctx.zero, ctx.one}


def test_omega_prediction_matches_closure():
    for structure, nvars in ((EQ2, 2), (EQ2, 1), (Structure(1), 2),
                             (CONST2, 1)):
        assert (algebra.omega_in_cyls(structure, nvars)
                == algebra.omega_expected(structure, nvars))


# -- cylindrification goldens -----------------------------------------------------------


def test_diagonal_cylindrification_value():
    sp = CTX.space
    c = CTX.cyl(0, CTX.full_j, CTX.diag(0, 1))
    assert c.plus == (sp.powerset_mask(sp.parse_team("00,10"))
                      | sp.powerset_mask(sp.parse_team("01,11")))
    assert c.minus == 1


def test_dual_cyl_is_de_morgan_dual():
    pool = default_pool(CTX)
    for n in range(2):
        for j in CTX.jsets():
            for x in pool:
                assert CTX.dual_cyl(n, j, x) == CTX.neg(
                    CTX.cyl(n, j, CTX.neg(x)))


def test_cyl_chain_order():
    ctx = AlgebraContext(2, 2)
    x = ctx.diag(0, 1)
    jsets = [frozenset(), frozenset({1})]
    assert ctx.cyl_chain(x, jsets) == ctx.cyl(
        0, jsets[0], ctx.cyl(1, jsets[1], x))


# -- the law registry ----------------------------------------------------------------


def test_law_registry_api():
    names = algebra.law_names()
    assert len(names) == len(set(names)) == 42
    with pytest.raises(IfgError):
        algebra.check_law("no-such-law", CTX, [])


MIXED_LAWS = {"associativity-mixed-eq"}


def test_all_laws_match_expectations():
    main_pool = default_pool(CTX)
    mixed_ctx = AlgebraContext(3, 1)
    mixed_pool = [mixed_ctx.zero, mixed_ctx.one, mixed_ctx.omega]
    mixed_pool += [mixed_ctx.flat(1 << v) for v in range(3)]
    for name in algebra.law_names():
        if name in MIXED_LAWS:
            detail = algebra.check_law(name, mixed_ctx, mixed_pool)
        else:
            detail = algebra.check_law(name, CTX, main_pool)
        assert (detail is None) == algebra.law_expected(name), (name, detail)


def test_run_laws_reports():
    report = algebra.run_laws(CTX, [CTX.zero, CTX.one],
                              names=["demorgan", "excluded-middle"])
    assert report[0] == ("demorgan", True, True, None)
    name, expected, holds, detail = report[1]
    assert name == "excluded-middle" and not expected and holds


# -- rendering ------------------------------------------------------------------------


def test_render_and_dump():
    ctx = AlgebraContext(2, 1)
    text = ctx.render(ctx.omega)
    assert text == "plus=[{}] minus=[{}]"
    dump = ctx.dump([ctx.zero, ctx.one])
    assert dump.splitlines()[0] == "base=2 dim=1 count=2"


def test_context_guard():
    with pytest.raises(GuardExceeded):
        AlgebraContext(5, 2)
