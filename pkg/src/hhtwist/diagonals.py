"""Diagonal approximations and comparison chain maps.

A diagonal is a chain map K -> K (x)_Lambda K lifting the identity; cup
and circle products are computed against it.  Alongside the standard bar
diagonal this module provides the closed diagonal on the quantum-plane
Koszul resolution, the embedding into the bar resolution in low degrees,
twisted Alexander-Whitney / Eilenberg-Zilber maps between the normalized
bar resolution of a twisted tensor algebra and the total complex of the
factor normalized bar resolutions, and the induced diagonal on that total
complex.
"""

from __future__ import annotations

import itertools

from .algebra import pair_index
from .complexes import GenMap, TensorComplex, elem_add_into, elem_sub


def diagonal_bar(B):
    """Delta(u_1,...,u_n) = sum over splits (u_1..u_d) (x) 1 (x) (u_(d+1)..u_n);
    works for the plain and the normalized bar resolution alike."""
    alg = B.algebra
    square = TensorComplex(B, 2)

    def fn(n, key):
        t = B.tuples[n][key]
        out = {}
        for d in range(n + 1):
            front = B.tuple_index[d][t[:d]]
            back = B.tuple_index[n - d][t[d:]]
            elem_add_into(out, {(alg.unit_idx, (d, front, alg.unit_idx, back),
                                 alg.unit_idx): alg.field.one()})
        return out

    return GenMap(B, square, 0, fn, name="diagonal_bar")


def diagonal_koszul_dual_numbers(K):
    """Delta(e_n) = sum_w e_w (x) 1 (x) e_(n-w) on the reduced resolution of
    the dual numbers."""
    alg = K.algebra
    square = TensorComplex(K, 2)

    def fn(n, key):
        out = {}
        for w in range(n + 1):
            elem_add_into(out, {(alg.unit_idx, (w, 0, alg.unit_idx, 0),
                                 alg.unit_idx): alg.field.one()})
        return out

    return GenMap(K, square, 0, fn, name="diagonal_koszul")


def diagonal_qci(K, q):
    """Closed diagonal on the quantum-plane Koszul resolution:
    Delta(e_(i,l)) = sum_(w,j) q^(j(i+j-w)) e_(w-j,j) (x) e_(i+j-w,l-j)."""
    alg = K.algebra
    square = TensorComplex(K, 2)

    def fn(n, key):
        i, _, _ = K.split_gen(n, key)
        l = n - i
        out = {}
        for w in range(n + 1):
            for j in range(max(0, w - i), min(w, l) + 1):
                c = q ** (j * (i + j - w))
                front = K.pair_gen(w, w - j, 0, 0)
                back = K.pair_gen(n - w, i + j - w, 0, 0)
                elem_add_into(out, {(alg.unit_idx,
                                     (w, front, alg.unit_idx, back),
                                     alg.unit_idx): c})
        return out

    return GenMap(K, square, 0, fn, name="diagonal_qci")


def iota_qci(K, B, q):
    """Embedding of the quantum-plane Koszul resolution into the bar
    resolution: e_(i,l) goes to the sum over all interleavings of i x's and
    l y's weighted by q^(number of y-before-x inversions)."""
    alg = K.algebra
    x_idx, y_idx = alg.index["x"], alg.index["y"]

    def fn(n, key):
        i, _, _ = K.split_gen(n, key)
        l = n - i
        out = {}
        for positions in itertools.combinations(range(n), i):
            word = [y_idx] * n
            inv = 0
            for k, pos in enumerate(positions):
                word[pos] = x_idx
                inv += pos - k  # y's preceding this x
            idx = B.tuple_index[n][tuple(word)]
            elem_add_into(out, {(alg.unit_idx, idx, alg.unit_idx): q ** inv})
        return out

    return GenMap(K, B, 0, fn, name="iota_qci")


# ----------------------------------------------------------------------
# twisted Alexander-Whitney and Eilenberg-Zilber maps

def _entry_split(alg, m):
    from .algebra import split_index
    return split_index(alg, m)


def aw_twisted(B, Ktw):
    """From the normalized bar resolution of R (x)^t S to
    Tot(nbar(R) (x)^t nbar(S)).

    On (l_1,...,l_n) with l_i = r_i (x) s_i:
      sum_d (-1)^(d(n-d)) t* (r_1...r_d (x) (r_(d+1),..,r_n) (x) 1)
                              (x)^t (1 (x) (s_1,..,s_d) (x) s_(d+1)...s_n)
    with t* = prod_(i>=2) t^<|r_i| | |s_1|+...+|s_(i-1)|>; a summand
    survives only if all r_i with i > d and all s_i with i <= d are
    non-unit monomials.
    """
    alg = Ktw.algebra
    P, Q = Ktw.P, Ktw.Q
    R, S = P.algebra, Q.algebra
    twist = Ktw.twist
    one = alg.field.one()

    def fn(n, key):
        tup = B.tuples[n][key]
        parts = [_entry_split(alg, m) for m in tup]
        # global twist factor t*
        tstar = one
        acc = [0] * S.grading_rank
        for i, (r_i, s_i) in enumerate(parts):
            if i >= 1:
                tstar = tstar * twist.eval(R.degrees[r_i], tuple(acc))
            acc = [x + y for x, y in zip(acc, S.degrees[s_i])]
        out = {}
        for d in range(n + 1):
            if any(parts[i][0] == R.unit_idx for i in range(d, n)):
                continue
            if any(parts[i][1] == S.unit_idx for i in range(d)):
                continue
            r_tail = tuple(parts[i][0] for i in range(d, n))
            s_head = tuple(parts[i][1] for i in range(d))
            # coefficients: products r_1...r_d in R and s_(d+1)...s_n in S
            r_prod = R.unit_elem()
            for i in range(d):
                r_prod = R.multiply(r_prod, R.monomial(parts[i][0]))
            if not r_prod:
                continue
            s_prod = S.unit_elem()
            for i in range(d, n):
                s_prod = S.multiply(s_prod, S.monomial(parts[i][1]))
            if not s_prod:
                continue
            sign = one if (d * (n - d)) % 2 == 0 else -one
            gp = P.tuple_index[n - d][r_tail]
            gq = Q.tuple_index[d][s_head]
            tgt = Ktw.pair_gen(n, n - d, gp, gq)
            for rm, cr in r_prod.items():
                for sm, cs in s_prod.items():
                    elem_add_into(out, {(pair_index(alg, rm, S.unit_idx), tgt,
                                         pair_index(alg, R.unit_idx, sm)):
                                        sign * tstar * cr * cs})
        return out

    return GenMap(B, Ktw, 0, fn, name="AW^t")


def ez_twisted(Ktw, B):
    """From Tot(nbar(R) (x)^t nbar(S)) to the normalized bar resolution of
    R (x)^t S: signed twisted shuffles.

    On (r_1,..,r_a) (x)^t (s_1,..,s_b) each shuffle xi contributes
    (-1)^|xi| t^(-inv(xi)) times the shuffled word, with one factor
    t^(-<|r_i| | |s_j|>) per inverted pair (s_j before r_i).
    """
    alg = B.algebra
    P, Q = Ktw.P, Ktw.Q
    R, S = P.algebra, Q.algebra
    twist = Ktw.twist
    one = alg.field.one()

    def fn(n, key):
        a, gp, gq = Ktw.split_gen(n, key)
        b = n - a
        r_tup = P.tuples[a][gp]
        s_tup = Q.tuples[b][gq]
        out = {}
        for positions in itertools.combinations(range(n), a):
            # positions of the r-entries in the shuffled word
            word = [None] * n
            for k, pos in enumerate(positions):
                word[pos] = pair_index(alg, r_tup[k], S.unit_idx)
            s_slots = [idx for idx in range(n) if word[idx] is None]
            for k, pos in enumerate(s_slots):
                word[pos] = pair_index(alg, R.unit_idx, s_tup[k])
            coeff = one
            inv = 0
            for k, pos in enumerate(positions):
                # s-entries before this r-entry
                for sj, spos in enumerate(s_slots):
                    if spos < pos:
                        inv += 1
                        coeff = coeff * twist.eval_inv(R.degrees[r_tup[k]],
                                                       S.degrees[s_tup[sj]])
            if inv % 2 == 1:
                coeff = -coeff
            idx = B.tuple_index[n][tuple(word)]
            elem_add_into(out, {(alg.unit_idx, idx, alg.unit_idx): coeff})
        return out

    return GenMap(Ktw, B, 0, fn, name="EZ^t")


def diagonal_twisted_nbar(Ktw):
    """Diagonal on Tot(nbar(R) (x)^t nbar(S)):
    Delta((r_1..r_c) (x)^t (s_1..s_d)) =
      sum_(j,i) (-1)^(i(c-j)) t^(-<|r_(j+1)..r_c| | |s_1..s_i|>)
        ((r_1..r_j)|(s_1..s_i)) (x) ((r_(j+1)..r_c)|(s_(i+1)..s_d)).
    """
    alg = Ktw.algebra
    P, Q = Ktw.P, Ktw.Q
    R, S = P.algebra, Q.algebra
    twist = Ktw.twist
    square = TensorComplex(Ktw, 2)
    one = alg.field.one()

    def fn(n, key):
        c, gp, gq = Ktw.split_gen(n, key)
        d = n - c
        r_tup = P.tuples[c][gp]
        s_tup = Q.tuples[d][gq]
        out = {}
        for j in range(c + 1):
            tail_deg = [0] * R.grading_rank
            for k in range(j, c):
                tail_deg = [x + y for x, y in
                            zip(tail_deg, R.degrees[r_tup[k]])]
            for i in range(d + 1):
                head_deg = [0] * S.grading_rank
                for k in range(i):
                    head_deg = [x + y for x, y in
                                zip(head_deg, S.degrees[s_tup[k]])]
                tw = twist.eval_inv(tuple(tail_deg), tuple(head_deg))
                sign = one if (i * (c - j)) % 2 == 0 else -one
                front = Ktw.pair_gen(j + i, j,
                                     P.tuple_index[j][r_tup[:j]],
                                     Q.tuple_index[i][s_tup[:i]])
                back = Ktw.pair_gen(n - j - i, c - j,
                                    P.tuple_index[c - j][r_tup[j:]],
                                    Q.tuple_index[d - i][s_tup[i:]])
                elem_add_into(out, {(alg.unit_idx,
                                     (j + i, front, alg.unit_idx, back),
                                     alg.unit_idx): sign * tw})
        return out

    return GenMap(Ktw, square, 0, fn, name="diagonal_twisted_nbar")


# ----------------------------------------------------------------------
# derived maps

def tensor_square_map(f, square_target=None, name=""):
    """f (x) f on tensor squares, for a degree-0 chain map f: K -> B."""
    K, Btarget = f.source, f.target
    squareK = TensorComplex(K, 2)
    squareB = square_target or TensorComplex(Btarget, 2)
    alg = K.algebra

    def fn(n, key):
        i, g1, m, g2 = key
        out = {}
        for (l1, h1, r1), c1 in f.on_gen(i, g1).items():
            for (l2, h2, r2), c2 in f.on_gen(n - i, g2).items():
                mid = alg.multiply(alg.mul_mon(r1, m), alg.monomial(l2))
                for mm, cm in mid.items():
                    elem_add_into(out, {(l1, (i, h1, mm, h2), r2):
                                        c1 * c2 * cm})
        return out

    return GenMap(squareK, squareB, 0, fn, name=name or f"({f.name})x2")


def delta_squared(delta):
    """(Delta (x) 1) Delta : K -> K (x) K (x) K, the input to circle
    products."""
    K = delta.source
    alg = K.algebra
    cube = TensorComplex(K, 3)

    def fn(n, key):
        out = {}
        for (l, (d1, g1, m1, g2), r), c in delta.on_gen(n, key).items():
            for (l2, (d2, h1, m2, h2), r2), c2 in delta.on_gen(d1, g1).items():
                for mm, cm in alg.multiply(alg.mul_mon(r2, m1),
                                           alg.unit_elem()).items():
                    lm = alg.mul_mon(l, l2)
                    for li, cl in lm.items():
                        elem_add_into(
                            out,
                            {(li, (d2, h1, m2, d1 - d2, h2, mm, g2), r):
                             c * c2 * cm * cl})
        return out

    return GenMap(K, cube, 0, fn, name=f"({delta.name})^2")


def delta_squared_right(delta):
    """(1 (x) Delta) Delta : K -> K (x) K (x) K, the coassociativity
    partner of :func:`delta_squared`."""
    K = delta.source
    alg = K.algebra
    cube = TensorComplex(K, 3)

    def fn(n, key):
        out = {}
        for (l, (d1, g1, m1, g2), r), c in delta.on_gen(n, key).items():
            for (l2, (d2, h1, m2, h2), r2), c2 in \
                    delta.on_gen(n - d1, g2).items():
                for ma, ca in alg.mul_mon(m1, l2).items():
                    for rm, cr in alg.mul_mon(r2, r).items():
                        elem_add_into(
                            out,
                            {(l, (d1, g1, ma, d2, h1, m2, h2), rm):
                             c * c2 * ca * cr})
        return out

    return GenMap(K, cube, 0, fn, name=f"(1x{delta.name})")


def check_coassociative(delta, upto):
    """(Delta (x) 1) Delta = (1 (x) Delta) Delta on generators, per degree."""
    left = delta_squared(delta)
    right = delta_squared_right(delta)
    K = delta.source
    entries = []
    for n in range(0, upto + 1):
        good = True
        for g in K.gen_keys(n):
            if elem_sub(left.on_gen(n, g), right.on_gen(n, g)):
                good = False
        entries.append({"degree": n, "ok": good})
    return entries
