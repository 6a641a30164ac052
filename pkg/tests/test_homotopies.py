import pytest

from hhtwist.complexes import (TensorComplex, bar_resolution, elem_add_into,
                               elem_sub, normalized_bar_resolution,
                               tensor_over_algebra)
from hhtwist.homotopies import (TwistedProductComplex, f_left, f_right,
                                f_total, phi_bar, phi_koszul_dual_numbers,
                                phi_normalized_bar, phi_qci, phi_twisted,
                                sigma, verify_homotopy)


def test_phi_qci_homotopy(builds):
    for key in ("generic", "neg1", "q1", "char2_q1"):
        b = builds(key, max_degree=6)
        assert verify_homotopy(phi_qci(b.K, b.q), 5)


def test_phi_koszul_homotopy(builds):
    b = builds("generic", max_degree=6)
    assert verify_homotopy(phi_koszul_dual_numbers(b.Kx), 5)
    assert verify_homotopy(phi_koszul_dual_numbers(b.Ky), 5)


def test_phi_twisted_homotopy(builds):
    for key in ("generic", "neg1", "even_i"):
        b = builds(key, max_degree=6)
        phi = phi_twisted(b.K, phi_koszul_dual_numbers(b.Kx),
                          phi_koszul_dual_numbers(b.Ky))
        assert verify_homotopy(phi, 5)


def test_phi_bar_homotopies(builds):
    b = builds("generic", max_degree=6)
    B = bar_resolution(b.algebra, 4)
    assert verify_homotopy(phi_bar(B), 3)
    NB = normalized_bar_resolution(b.algebra, 4)
    assert verify_homotopy(phi_normalized_bar(NB), 3)


def test_phi_twisted_equals_phi_qci_brackets(builds):
    """The two homotopies give identical chain-level brackets on the
    generator pairs (not merely cohomologous)."""
    for key in ("generic", "q1", "f4"):
        b1 = builds(key)
        b2 = builds(key, phi="twisted")
        t1, t2 = b1.bracket_table(), b2.bracket_table()
        assert [r["chain_level"] for r in t1] == \
               [r["chain_level"] for r in t2]
        assert all(r["match"] for r in t2)


def test_sigma_bijective_and_chain(builds):
    b = builds("generic", max_degree=5)
    sqP = tensor_over_algebra(b.Kx)
    sqQ = tensor_over_algebra(b.Ky)
    fwd, bwd, target = sigma(b.K, sqP, sqQ)
    square = fwd.source
    for n in range(0, 5):
        for g in square.gen_keys(n):
            back = bwd.apply(n, fwd.on_gen(n, g))
            assert not elem_sub(back, square.gen_elem(g))
        for g in target.gen_keys(n):
            back = fwd.apply(n, bwd.on_gen(n, g))
            assert not elem_sub(back, target.gen_elem(g))
    fwd.check_chain_map(4)
    bwd.check_chain_map(4)


def test_f_factorization_through_sigma(builds):
    """(F^l_P (x) F^l_Q - F^r_P (x) F^r_Q) sigma = F on K (x) K."""
    b = builds("generic", max_degree=6)
    K = b.K
    sqP = tensor_over_algebra(b.Kx)
    sqQ = tensor_over_algebra(b.Ky)
    fwd, _, target = sigma(K, sqP, sqQ)
    flP, frP = f_left(sqP), f_right(sqP)
    flQ, frQ = f_left(sqQ), f_right(sqQ)
    F = f_total(TensorComplex(K, 2))
    one = b.field.one()

    # the factor collapse maps land in P / Q themselves; recombine their
    # outputs into K with the twisted interleaving
    def collapse(n, key):
        dx, kx, ky = key
        out = {}
        pl = flP.on_gen(dx, kx)
        ql = flQ.on_gen(n - dx, ky)
        pr = frP.on_gen(dx, kx)
        qr = frQ.on_gen(n - dx, ky)
        # F^l lands in degree dx (the square degree), F on squares is
        # degree 0 onto the factor complex
        if pl and ql:
            elem_add_into(out, K.combine(dx, pl, n - dx, ql))
        if pr and qr:
            elem_add_into(out, K.combine(dx, pr, n - dx, qr), -one)
        return out

    square = TensorComplex(K, 2)
    for n in range(0, 6):
        for g in square.gen_keys(n):
            lhs = {}
            for (l, tkey, r), c in fwd.on_gen(n, g).items():
                elem_add_into(lhs, K.act_mon(collapse(n, tkey), l, r), c)
            rhs = F.on_gen(n, g)
            assert not elem_sub(lhs, rhs), f"degree {n} generator {g}"


def test_twisted_product_complex_d_squared(builds):
    b = builds("generic", max_degree=5)
    sqP = tensor_over_algebra(b.Kx)
    sqQ = tensor_over_algebra(b.Ky)
    tp = TwistedProductComplex(sqP, sqQ, b.twist, b.algebra)
    tp.check_d_squared(5)
