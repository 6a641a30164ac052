import itertools

import pytest

from hhtwist.cohomology import (Cochain, GerstenhaberContext, coboundary,
                                subgroup_restriction, tensor_bracket,
                                transport_pair, verify_main_theorem)
from hhtwist.diagonals import diagonal_koszul_dual_numbers
from hhtwist.homotopies import phi_koszul_dual_numbers


# Frozen cohomology dimension tables per homological degree.  Degrees 0-2
# are forced by the known generator sets (e.g. generic: {1, xy} in degree
# 0, {x*e(1,0), y*e(0,1)} in degree 1, their cup in degree 2, nothing
# higher); the rest are regression values from the verified resolution.
KNOWN_DIMS = {
    "generic": [2, 2, 1, 0, 0, 0],
    "neg1": [4, 4, 5, 6, 7, 8],
    "q1": [2, 4, 6, 8, 10, 12],
    "char2_q1": [4, 8, 12, 16, 20, 24],
}


@pytest.mark.parametrize("key", sorted(KNOWN_DIMS))
def test_hh_dimensions(builds, key):
    b = builds(key, max_degree=6)
    coh = b.ctx.cohomology
    dims = [sum(coh.space(n, a)["dim"] for a in coh.internal_degrees(n))
            for n in range(6)]
    assert dims == KNOWN_DIMS[key]


def test_cocycle_and_class_machinery(builds):
    b = builds("generic")
    coh = b.ctx.cohomology
    f = b.generators["x*e(1,0)"]
    assert coh.is_cocycle(f)
    assert not coh.is_coboundary(f)
    assert coh.reduce_to_class(f + f) == [c + c for c in
                                          coh.reduce_to_class(f)]
    # a coboundary reduces to zero
    g = coh.elementary(0, (-1, 0), b.K.pair_gen(0, 0, 0, 0),
                       b.algebra.index["x"])
    db = coboundary(g)
    assert coh.is_coboundary(db)
    assert all(not c for c in coh.reduce_to_class(db))


def test_cup_graded_commutative(builds):
    for key in ("generic", "q1", "even_i"):
        b = builds(key)
        gens = [b.generators[n] for n in b.gen_order]
        for f, g in itertools.combinations(gens, 2):
            if f.n + g.n > b.N - 1:
                continue
            sgn = b.field.from_int((-1) ** (f.n * g.n))
            assert b.ctx.is_zero_class(
                b.ctx.cup(f, g) - b.ctx.cup(g, f).scale(sgn))


def test_bracket_antisymmetric(builds):
    for key in ("q1", "neg1", "f4"):
        b = builds(key)
        gens = [b.generators[n] for n in b.gen_order]
        for f, g in itertools.product(gens, repeat=2):
            if f.n + g.n - 1 > b.N - 1 or f.n + g.n - 1 < 0:
                continue
            sgn = b.field.from_int((-1) ** ((f.n - 1) * (g.n - 1)))
            lhs = b.ctx.bracket(f, g)
            rhs = b.ctx.bracket(g, f).scale(sgn)
            assert (lhs + rhs).is_zero()  # holds at chain level


def test_jacobi(builds):
    b = builds("q1")
    F = b.field
    gens = [b.generators[n] for n in b.gen_order]
    checked = 0
    for f, g, h in itertools.combinations(gens, 3):
        i, j, l = f.n, g.n, h.n
        if i + j + l - 2 > b.N - 1:
            continue
        s1 = F.from_int((-1) ** ((i - 1) * (l - 1)))
        s2 = F.from_int((-1) ** ((j - 1) * (i - 1)))
        s3 = F.from_int((-1) ** ((l - 1) * (j - 1)))
        total = (b.ctx.bracket(f, b.ctx.bracket(g, h)).scale(s1)
                 + b.ctx.bracket(g, b.ctx.bracket(h, f)).scale(s2)
                 + b.ctx.bracket(h, b.ctx.bracket(f, g)).scale(s3))
        assert b.ctx.is_zero_class(total)
        checked += 1
    assert checked >= 20


def test_derivation_law(builds):
    """[f cup g, h] = [f, h] cup g + (-1)^(i(l-1)) f cup [g, h] as classes."""
    for key in ("q1", "generic"):
        b = builds(key)
        gens = [b.generators[n] for n in b.gen_order]
        checked = 0
        for f, g, h in itertools.permutations(gens, 3):
            i, l = f.n, h.n
            if f.n + g.n + h.n - 1 > b.N - 1:
                continue
            lhs = b.ctx.bracket(b.ctx.cup(f, g), h)
            rhs = b.ctx.cup(b.ctx.bracket(f, h), g) + \
                b.ctx.cup(f, b.ctx.bracket(g, h)).scale(
                    b.field.from_int((-1) ** (i * (l - 1))))
            assert b.ctx.is_zero_class(lhs - rhs)
            checked += 1
        assert checked >= 6


def test_reverse_order_relation(builds):
    """For cocycles: g cup f - (-1)^(mm') f cup g = (-1)^(m'-1) d*(f o g),
    exactly at chain level."""
    b = builds("q1")
    gens = [b.generators[n] for n in b.gen_order]
    for f, g in itertools.permutations(gens, 2):
        m, mp = f.n, g.n
        if m + mp > b.N - 1 or m + mp - 1 < 0:
            continue
        lhs = b.ctx.cup(g, f) - b.ctx.cup(f, g).scale(
            b.field.from_int((-1) ** (m * mp)))
        rhs = coboundary(b.ctx.circle(f, g)).scale(
            b.field.from_int((-1) ** (mp - 1)))
        assert (lhs - rhs).is_zero()


def test_subgroup_restriction(builds):
    b = builds("even_i")  # q = i, twist entry -1/i of order 8... columns
    in_a, in_b = subgroup_restriction(b.twist)
    # degree (0,) is always restricted; the restricted degrees form a
    # subgroup (closed under addition of observed members)
    members = [d for d in range(-8, 9) if in_a((d,))]
    assert 0 in members
    for d1 in members:
        for d2 in members:
            if -8 <= d1 + d2 <= 8:
                assert in_a((d1 + d2,))


def test_transport_and_tensor_bracket(builds):
    """The q = -1 factor classes transported to the product reproduce the
    product table by the tensor formula."""
    b = builds("neg1")
    K = b.K
    F = b.field
    ctxs = {}
    for var, res in (("x", K.P), ("y", K.Q)):
        ctxs[var] = GerstenhaberContext(
            res, diagonal_koszul_dual_numbers(res),
            phi_koszul_dual_numbers(res))

    def fc(var, n, a, mon):
        alg = ctxs[var].cx.algebra
        return Cochain(ctxs[var].cx, n, (a,),
                       {0: alg.monomial(alg.index[mon], F.one())})

    x0, xe1, e2 = fc("x", 0, -1, "x"), fc("x", 1, 0, "x"), fc("x", 2, 2, "1")
    y0, ye1, f2 = fc("y", 0, -1, "y"), fc("y", 1, 0, "y"), fc("y", 2, 2, "1")
    ux, uy = fc("x", 0, 0, "1"), fc("y", 0, 0, "1")

    # factor-level brackets
    assert ctxs["x"].same_class(ctxs["x"].bracket(xe1, x0), x0)
    assert ctxs["x"].same_class(ctxs["x"].bracket(e2, xe1),
                                e2.scale(F.from_int(2)))

    cases = [
        ((xe1, uy), (x0, uy), "x*e(0,0)"),
        ((ux, ye1), (ux, y0), "y*e(0,0)"),
        ((xe1, uy), (e2, uy), "-2*1*e(2,0)"),
        ((ux, ye1), (ux, f2), "-2*1*e(0,2)"),
    ]
    for (al, be), (alp, bep), want in cases:
        direct = b.ctx.bracket(transport_pair(al, be, K),
                               transport_pair(alp, bep, K))
        via_factors = tensor_bracket(ctxs["x"], ctxs["y"], K,
                                     al, be, alp, bep)
        assert b.ctx.same_class(direct, via_factors)
        assert b.ctx.same_class(direct, b.parse_cochain(want))


def test_main_theorem_small():
    from hhtwist.algebra import truncated_poly
    from hhtwist.fields import RationalField, Twist
    F = RationalField()
    R = truncated_poly(F, "x", 2)
    S = truncated_poly(F, "y", 2)
    rep = verify_main_theorem(R, S, Twist([[-F.one()]]), 4)
    assert rep["ok"] and rep["checked"] > 0
