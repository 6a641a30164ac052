"""Contracting homotopies phi with  d phi + phi d = F_K  on K (x)_Lambda K.

F_K = F_left - F_right collapses one tensor factor of homological degree
zero; phi is the extra datum needed for circle products.  Homotopies are
available for bar-type resolutions, the reduced resolution of the dual
numbers, twisted tensor products assembled from factor homotopies, and a
closed piecewise formula on the quantum-plane Koszul resolution.
"""

from __future__ import annotations

from .complexes import (GenMap, ComplexBase, TensorComplex, elem_add_into,
                        elem_scale)


# ----------------------------------------------------------------------
# the degree-zero maps F

def f_left(square):
    """F_left on K (x) K: multiply a degree-0 left factor into the middle."""
    K = square.K
    alg = square.algebra

    def fn(n, key):
        i, g1, m, g2 = key
        if i != 0:
            return {}
        # aug(g1) . m . g2 with unit augmentation
        out = {}
        for m2, c in alg.rmul_mon(K.augs[g1], m).items():
            elem_add_into(out, {(m2, g2, alg.unit_idx): c})
        return out

    return GenMap(square, K, 0, fn, name="F_left")


def f_right(square):
    K = square.K
    alg = square.algebra

    def fn(n, key):
        i, g1, m, g2 = key
        if n - i != 0:
            return {}
        out = {}
        for m2, c in alg.lmul_mon(m, K.augs[g2]).items():
            elem_add_into(out, {(alg.unit_idx, g1, m2): c})
        return out

    return GenMap(square, K, 0, fn, name="F_right")


def f_total(square):
    """F = F_left - F_right; the map the homotopy contracts onto."""
    fl, fr = f_left(square), f_right(square)

    def fn(n, key):
        out = dict(fl.on_gen(n, key))
        for k, c in fr.on_gen(n, key).items():
            elem_add_into(out, {k: -c})
        return out

    return GenMap(square, square.K, 0, fn, name="F")


# ----------------------------------------------------------------------
# the interchange sigma

class TwistedProductComplex(ComplexBase):
    """X (x)^t Y for complexes X over R and Y over S, over the twisted
    tensor algebra; generators are (degree-of-X-part, x-key, y-key)."""

    def __init__(self, X, Y, twist, algebra):
        self.X, self.Y = X, Y
        self.twist = twist
        self.algebra = algebra
        self.name = f"{X.name}(x)t{Y.name}"

    def max_degree(self):
        return self.X.max_degree() + self.Y.max_degree()

    def gen_keys(self, n):
        for i in range(n + 1):
            j = n - i
            if i > self.X.max_degree() or j > self.Y.max_degree():
                continue
            for kx in self.X.gen_keys(i):
                for ky in self.Y.gen_keys(j):
                    yield (i, kx, ky)

    def gen_ideg(self, n, key):
        i, kx, ky = key
        return tuple(self.X.gen_ideg(i, kx)) + tuple(self.Y.gen_ideg(n - i, ky))

    def diff_gen(self, n, key):
        from .algebra import pair_index
        i, kx, ky = key
        j = n - i
        R, S = self.X.algebra, self.Y.algebra
        alg, twist = self.algebra, self.twist
        one = alg.field.one()
        out = {}
        if i > 0:
            jdeg = self.Y.gen_ideg(j, ky)
            for (a, t, b), c in self.X.diff_gen(i, kx).items():
                tw = twist.eval_inv(R.degrees[b], jdeg)
                elem_add_into(out, {(pair_index(alg, a, S.unit_idx),
                                     (i - 1, t, ky),
                                     pair_index(alg, b, S.unit_idx)): c * tw})
        if j > 0:
            sign = one if i % 2 == 0 else -one
            ideg = self.X.gen_ideg(i, kx)
            for (a, t, b), c in self.Y.diff_gen(j, ky).items():
                tw = twist.eval_inv(ideg, S.degrees[a])
                elem_add_into(out, {(pair_index(alg, R.unit_idx, a),
                                     (i, kx, t),
                                     pair_index(alg, R.unit_idx, b)):
                                    sign * c * tw})
        return out


def sigma(Ktw, squareP, squareQ):
    """Interchange (K (x) K) -> (P (x)_R P) (x)^t (Q (x)_S Q) for the
    twisted resolution K = Tot(P (x)^t Q), together with its inverse.

    On (x (x) y) (x) (x' (x) y') with y in Q_j, x' in P_p the map is
    (-1)^(jp) t^<|x'| | |y|> (x (x) x') (x) (y (x) y').
    Returns (sigma, sigma_inverse, target_complex).
    """
    twist = Ktw.twist
    P, Q = Ktw.P, Ktw.Q
    alg = Ktw.algebra
    square = TensorComplex(Ktw, 2)
    target = TwistedProductComplex(squareP, squareQ, twist, alg)
    one = alg.field.one()
    unit_pair = alg.unit_idx

    def fwd(n, key):
        d1, gK, m, gK2 = key
        d2 = n - d1
        i, gp, gq = Ktw.split_gen(d1, gK)
        j = d1 - i
        p, gp2, gq2 = Ktw.split_gen(d2, gK2)
        rm, sm = Ktw.split_mon(m)
        # m . gK2 = t^<|gp2| | |sm|> (rm gp2) (x) (sm gq2)
        tw = twist.eval(P.gen_ideg(p, gp2), Q.algebra.degrees[sm])
        tw = tw * twist.eval(
            tuple(x + y for x, y in zip(P.algebra.degrees[rm],
                                        P.gen_ideg(p, gp2))),
            Q.gen_ideg(j, gq))
        sign = one if (j * p) % 2 == 0 else -one
        xkey = (i + p, (i, gp, rm, gp2))
        ykey = (j, gq, sm, gq2)
        return {(unit_pair, (i + p, xkey[1], ykey), unit_pair): sign * tw}

    def bwd(n, key):
        dx, kx, ky = key
        i, gp, rm, gp2 = kx
        j, gq, sm, gq2 = ky
        p = dx - i
        q_deg = n - dx - j
        tw = twist.eval_inv(
            tuple(x + y for x, y in zip(P.algebra.degrees[rm],
                                        P.gen_ideg(p, gp2))),
            Q.gen_ideg(j, gq))
        tw = tw * twist.eval_inv(P.gen_ideg(p, gp2), Q.algebra.degrees[sm])
        sign = one if (j * p) % 2 == 0 else -one
        from .algebra import pair_index
        m = pair_index(alg, rm, sm)
        gK = Ktw.pair_gen(i + j, i, gp, gq)
        gK2 = Ktw.pair_gen(p + q_deg, p, gp2, gq2)
        return {(alg.unit_idx, (i + j, gK, m, gK2), alg.unit_idx): sign * tw}

    fwd_map = GenMap(square, target, 0, fwd, name="sigma")
    bwd_map = GenMap(target, square, 0, bwd, name="sigma^-1")
    return fwd_map, bwd_map, target


# ----------------------------------------------------------------------
# homotopies

def phi_bar(B):
    """G on the (normalized) bar resolution: splice the middle coefficient
    back in, (u (x) m (x) v) -> (-1)^|u| (u..., m, v...); zero when m is the
    unit in the normalized version."""
    alg = B.algebra
    square = TensorComplex(B, 2)
    normalized = getattr(B, "normalized", False)

    def fn(n, key):
        i, g1, m, g2 = key
        if normalized and m == alg.unit_idx:
            return {}
        t = B.tuples[i][g1] + (m,) + B.tuples[n - i][g2]
        level = B.tuple_index.get(n + 1)
        if level is None:
            raise ValueError("splice exceeds the built degree range")
        idx = level[t]
        sign = alg.field.one() if i % 2 == 0 else -alg.field.one()
        return {(alg.unit_idx, idx, alg.unit_idx): sign}

    return GenMap(square, B, 1, fn, name="phi_bar")


def phi_normalized_bar(B):
    if not getattr(B, "normalized", False):
        raise ValueError("expected a normalized bar resolution")
    return phi_bar(B)


def phi_koszul_dual_numbers(K):
    """phi(e_i (x) x^m e_j) = delta_(m,1) (-1)^i e_(i+j+1) on the reduced
    resolution of the dual numbers."""
    alg = K.algebra
    square = TensorComplex(K, 2)
    x_idx = [i for i in range(alg.dim) if i != alg.unit_idx][0]

    def fn(n, key):
        i, g1, m, g2 = key
        if m != x_idx:
            return {}
        if n + 1 > K.max_degree():
            raise ValueError("homotopy output exceeds the built degree range")
        sign = alg.field.one() if i % 2 == 0 else -alg.field.one()
        return {(alg.unit_idx, 0, alg.unit_idx): sign}

    return GenMap(square, K, 1, fn, name="phi_koszul")


def phi_twisted(Ktw, phiP, phiQ):
    """Assemble a homotopy on K = Tot(P (x)^t Q) from factor homotopies:
    phi = (phi_P (x) F^l_Q + (-1)^(i+p) F^r_P (x) phi_Q) after the
    interchange sigma."""
    P, Q = Ktw.P, Ktw.Q
    R, S = P.algebra, Q.algebra
    alg, twist = Ktw.algebra, Ktw.twist
    square = TensorComplex(Ktw, 2)
    one = alg.field.one()

    def fn(n, key):
        d1, gK, m, gK2 = key
        d2 = n - d1
        i, gp, gq = Ktw.split_gen(d1, gK)
        j = d1 - i
        p, gp2, gq2 = Ktw.split_gen(d2, gK2)
        qd = d2 - p
        rm, sm = Ktw.split_mon(m)
        tw = twist.eval(P.gen_ideg(p, gp2), S.degrees[sm])
        tw = tw * twist.eval(
            tuple(x + y for x, y in zip(R.degrees[rm], P.gen_ideg(p, gp2))),
            Q.gen_ideg(j, gq))
        sign_jp = one if (j * p) % 2 == 0 else -one
        coeff = tw * sign_jp
        out = {}
        if j == 0:
            p_elem = phiP.on_gen(i + p, (i, gp, rm, gp2))
            if p_elem:
                q_elem = {(sm, gq2, S.unit_idx): Q.algebra.field.one()}
                elem_add_into(out, Ktw.combine(i + p + 1, p_elem, qd, q_elem),
                              coeff)
        if p == 0:
            q_elem = phiQ.on_gen(j + qd, (j, gq, sm, gq2))
            if q_elem:
                p_elem = {(R.unit_idx, gp, rm): R.field.one()}
                sign = one if (i + p) % 2 == 0 else -one
                elem_add_into(out, Ktw.combine(i, p_elem, j + qd + 1, q_elem),
                              coeff * sign)
        return out

    return GenMap(square, Ktw, 1, fn, name="phi_twisted")


def phi_qci(K, q):
    """Closed-form homotopy on the quantum-plane Koszul resolution.

    With generators e_(i,j) and monomials x^l y^m:
      phi(e_(i,0) (x) x^l y^m e_(p,r)) =
          delta_(l,1) (-q)^(m i + m) (-1)^i  y^m e_(i+p+1, r)        (p > 0)
        + [same with p = 0] + delta_(m,1) (-q)^(l r + l) (-1)^i e_(i, r+1) x^l
                                                                      (p = 0)
      phi(e_(i,j) (x) x^l y^m e_(0,r)) =
          delta_(m,1) (-q)^(l r + l) (-1)^(i+j) e_(i, j+r+1) x^l      (j > 0)
    and zero when j > 0 and p > 0.
    """
    alg = K.algebra
    field = alg.field
    square = TensorComplex(K, 2)
    x_idx = alg.index["x"]
    y_idx = alg.index["y"]
    xy_idx = alg.index["xy"]
    mon_exps = {alg.unit_idx: (0, 0), x_idx: (1, 0), y_idx: (0, 1),
                xy_idx: (1, 1)}
    neg_q = -q

    def sign(k):
        return field.one() if k % 2 == 0 else -field.one()

    def fn(n, key):
        d1, gK, m, gK2 = key
        i, _, _ = K.split_gen(d1, gK)
        j = d1 - i
        p, _, _ = K.split_gen(n - d1, gK2)
        r = (n - d1) - p
        l, me = mon_exps[m]
        out = {}
        if j == 0:
            if l == 1:
                c = (neg_q ** (me * i + me)) * sign(i)
                left = y_idx if me == 1 else alg.unit_idx
                tgt = K.pair_gen(n + 1, i + p + 1, 0, 0)
                elem_add_into(out, {(left, tgt, alg.unit_idx): c})
            if p == 0 and me == 1:
                c = (neg_q ** (l * r + l)) * sign(i)
                right = x_idx if l == 1 else alg.unit_idx
                tgt = K.pair_gen(n + 1, i, 0, 0)
                elem_add_into(out, {(alg.unit_idx, tgt, right): c})
        elif p == 0:
            if me == 1:
                c = (neg_q ** (l * r + l)) * sign(i + j)
                right = x_idx if l == 1 else alg.unit_idx
                tgt = K.pair_gen(n + 1, i, 0, 0)
                elem_add_into(out, {(alg.unit_idx, tgt, right): c})
        return out

    return GenMap(square, K, 1, fn, name="phi_qci")


def verify_homotopy(phi, upto):
    """Check d phi + phi d = F_left - F_right through the given degree."""
    from .complexes import check_homotopy
    F = f_total(phi.source)
    return check_homotopy(phi, F, upto)
