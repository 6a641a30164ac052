"""Hochschild cohomology from a free bimodule resolution.

Cochains are bimodule maps K_n -> Lambda recorded by their generator
values, always homogeneous: a cochain of internal degree a sends a
generator of internal degree w to an element of degree w - a.  The
differential is composition with the resolution differential; cup and
circle products are computed against a diagonal and a contracting
homotopy, bundled in :class:`GerstenhaberContext`.
"""

from __future__ import annotations

from .algebra import pair_index
from .complexes import TensorComplex, elem_add_into
from .diagonals import delta_squared
from .linalg import SparseMatrix, extend_basis


class Cochain:
    """Homogeneous cochain on a complex: degree n, internal degree a."""

    def __init__(self, cx, n, a, values):
        self.cx = cx
        self.n = n
        self.a = tuple(a)
        self.values = {g: dict(v) for g, v in values.items() if v}
        alg = cx.algebra
        for g, v in self.values.items():
            want = tuple(x - y for x, y in zip(cx.gen_ideg(n, g), self.a))
            for m in v:
                if tuple(alg.degrees[m]) != want:
                    raise ValueError(
                        f"cochain value on generator {g!r} is not homogeneous "
                        f"of degree {want}")

    def is_zero(self):
        return not self.values

    def value(self, g):
        return self.values.get(g, {})

    def apply(self, elem):
        """Evaluate on a chain element {(l, g, r): c} -> algebra element."""
        alg = self.cx.algebra
        out = alg.zero_elem()
        for (l, g, r), c in elem.items():
            v = self.values.get(g)
            if v:
                alg.add_into(out, alg.rmul_mon(alg.lmul_mon(l, v), r), c)
        return out

    def __add__(self, other):
        assert (self.n, self.a) == (other.n, other.a)
        alg = self.cx.algebra
        values = {g: dict(v) for g, v in self.values.items()}
        for g, v in other.values.items():
            alg.add_into(values.setdefault(g, {}), v)
        return Cochain(self.cx, self.n, self.a, values)

    def __sub__(self, other):
        return self + other.scale(-self.cx.algebra.field.one())

    def scale(self, c):
        alg = self.cx.algebra
        return Cochain(self.cx, self.n, self.a,
                       {g: alg.scale(v, c) for g, v in self.values.items()})

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.n == other.n
                and self.a == other.a and self.values == other.values)

    def __repr__(self):
        alg = self.cx.algebra
        if not self.values:
            return f"<zero cochain n={self.n} a={self.a}>"
        parts = [f"{alg.render_elem(v)}.({g})" for g, v in
                 sorted(self.values.items(), key=lambda kv: str(kv[0]))]
        return " + ".join(parts)


def coboundary(f):
    """(d* f)(w) = f(d w)."""
    cx = f.cx
    n = f.n + 1
    values = {}
    for g in cx.gen_keys(n):
        v = f.apply(cx.diff_gen(n, g))
        if v:
            values[g] = v
    return Cochain(cx, n, f.a, values)


def cup(f, g, delta):
    """(f cup g)(w) = (f (x) g) Delta(w), with no extra sign."""
    cx = f.cx
    alg = cx.algebra
    n = f.n + g.n
    a = tuple(x + y for x, y in zip(f.a, g.a))
    values = {}
    for w in cx.gen_keys(n):
        out = alg.zero_elem()
        for (l, (d1, w1, m, w2), r), c in delta.on_gen(n, w).items():
            if d1 != f.n:
                continue
            fv = f.values.get(w1)
            if not fv:
                continue
            gv = g.values.get(w2)
            if not gv:
                continue
            term = alg.lmul_mon(l, fv)
            term = alg.multiply(alg.rmul_mon(term, m), gv)
            term = alg.rmul_mon(term, r)
            alg.add_into(out, term, c)
        if out:
            values[w] = out
    return Cochain(cx, n, a, values)


def circle(f, g, delta2, phi):
    """Circle product against (Delta (x) 1) Delta and the homotopy phi.

    (f o g)(w) sums over the three-factor splittings of w with the middle
    factor in g's degree, applies 1 (x) g (x) 1 with the Koszul sign
    (-1)^(left homological degree * deg g), contracts with phi, then f.
    Returns the zero cochain when the target degree i + j - 1 is negative.
    """
    cx = f.cx
    alg = cx.algebra
    i, j = f.n, g.n
    n = i + j - 1
    a = tuple(x + y for x, y in zip(f.a, g.a))
    if n < 0:
        return Cochain(cx, 0, a, {})
    values = {}
    for w in cx.gen_keys(n):
        square_elem = {}
        for (l, (d1, h1, m1, d2, h2, m2, h3), r), c in \
                delta2.on_gen(n, w).items():
            if d2 != j:
                continue
            gv = g.values.get(h2)
            if not gv:
                continue
            mid = alg.rmul_mon(alg.lmul_mon(m1, gv), m2)
            if (d1 * j) % 2 == 1:
                c = -c
            for mm, cm in mid.items():
                elem_add_into(square_elem, {(l, (d1, h1, mm, h3), r): c * cm})
        if not square_elem:
            continue
        v = f.apply(phi.apply(n - j, square_elem))
        if v:
            values[w] = v
    return Cochain(cx, n, a, values)


def bracket(f, g, delta2, phi):
    """[f, g] = f o g - (-1)^((i-1)(j-1)) g o f at chain level."""
    fg = circle(f, g, delta2, phi)
    gf = circle(g, f, delta2, phi)
    if ((f.n - 1) * (g.n - 1)) % 2 == 0:
        return fg - gf
    return fg + gf


# ----------------------------------------------------------------------
# cohomology spaces

class CohomologyRing:
    """HH^(n,a) computed per degree pair, with deterministic bases."""

    def __init__(self, cx):
        self.cx = cx
        self.alg = cx.algebra
        self._hom = {}
        self._space = {}

    def hom_basis(self, n, a):
        """Elementary cochains (gen, monomial) of internal degree a."""
        key = (n, tuple(a))
        if key not in self._hom:
            alg = self.alg
            basis = []
            for g in self.cx.gen_keys(n):
                want = tuple(x - y for x, y in zip(self.cx.gen_ideg(n, g), a))
                for m in range(alg.dim):
                    if tuple(alg.degrees[m]) == want:
                        basis.append((g, m))
            self._hom[key] = basis
        return self._hom[key]

    def internal_degrees(self, n):
        """All internal degrees with nonzero Hom in degree n."""
        alg = self.alg
        out = set()
        for g in self.cx.gen_keys(n):
            gd = self.cx.gen_ideg(n, g)
            for m in range(alg.dim):
                out.add(tuple(x - y for x, y in zip(gd, alg.degrees[m])))
        return sorted(out)

    def coords(self, f):
        basis = self.hom_basis(f.n, f.a)
        index = {bm: i for i, bm in enumerate(basis)}
        vec = {}
        for g, v in f.values.items():
            for m, c in v.items():
                vec[index[(g, m)]] = c
        return vec

    def from_coords(self, n, a, vec):
        basis = self.hom_basis(n, a)
        values = {}
        alg = self.alg
        for i, c in vec.items():
            g, m = basis[i]
            alg.add_into(values.setdefault(g, {}), alg.monomial(m, c))
        return Cochain(self.cx, n, a, values)

    def elementary(self, n, a, g, m, coeff=None):
        c = coeff if coeff is not None else self.alg.field.one()
        return Cochain(self.cx, n, a, {g: self.alg.monomial(m, c)})

    def _dstar_columns(self, n, a):
        """Coboundaries of the elementary (n, a) cochains, as coordinate
        vectors over the (n+1, a) hom basis."""
        cols = []
        for (g, m) in self.hom_basis(n, a):
            f = self.elementary(n, a, g, m)
            cols.append(self.coords(coboundary(f)))
        return cols

    def space(self, n, a):
        """dict with cocycle basis, coboundary basis, and chosen HH basis
        (coordinate vectors over the hom basis), plus representative
        cochains for the HH basis."""
        key = (n, tuple(a))
        if key in self._space:
            return self._space[key]
        field = self.alg.field
        dim_n = len(self.hom_basis(n, a))
        dim_up = len(self.hom_basis(n + 1, a))
        mat = SparseMatrix.from_columns(field, dim_up, self._dstar_columns(n, a))
        cocycles = mat.kernel_basis()
        if n == 0:
            cobounds = []
        else:
            cobounds = [v for v in self._dstar_columns(n - 1, a) if v]
        picked = extend_basis(field, dim_n, cobounds, cocycles)
        hh = [cocycles[i] for i in picked]
        out = {
            "cocycles": cocycles,
            "coboundaries": cobounds,
            "hh_basis": hh,
            "reps": [self.from_coords(n, a, v) for v in hh],
            "dim": len(hh),
        }
        self._space[key] = out
        return out

    def is_cocycle(self, f):
        return coboundary(f).is_zero()

    def is_coboundary(self, f):
        if f.is_zero():
            return True
        if f.n == 0:
            return False
        sp = self.space(f.n, f.a)
        cob = sp["coboundaries"]
        dim = len(self.hom_basis(f.n, f.a))
        mat = SparseMatrix.from_columns(self.alg.field, dim, cob)
        return mat.solve(self.coords(f)) is not None

    def reduce_to_class(self, f):
        """Coordinates of a cocycle in the chosen HH basis."""
        if not self.is_cocycle(f):
            raise ValueError("not a cocycle")
        sp = self.space(f.n, f.a)
        cols = sp["hh_basis"] + sp["coboundaries"]
        dim = len(self.hom_basis(f.n, f.a))
        mat = SparseMatrix.from_columns(self.alg.field, dim, cols)
        sol = mat.solve(self.coords(f))
        if sol is None:
            raise AssertionError("cocycle outside cocycle space")
        k = len(sp["hh_basis"])
        return [sol.get(i, self.alg.field.zero()) for i in range(k)]

    def cohomologous(self, f, g):
        return self.is_coboundary(f - g)


# ----------------------------------------------------------------------
# bundled context

class GerstenhaberContext:
    """A resolution with its diagonal and homotopy, plus cached cohomology."""

    def __init__(self, cx, delta, phi):
        self.cx = cx
        self.delta = delta
        self.delta2 = delta_squared(delta)
        self.phi = phi
        self.cohomology = CohomologyRing(cx)

    @property
    def field(self):
        return self.cx.algebra.field

    def zero(self, n, a):
        return Cochain(self.cx, n, tuple(a), {})

    def cup(self, f, g):
        return cup(f, g, self.delta)

    def circle(self, f, g):
        return circle(f, g, self.delta2, self.phi)

    def bracket(self, f, g):
        return bracket(f, g, self.delta2, self.phi)

    def reduce(self, f):
        return self.cohomology.reduce_to_class(f)

    def same_class(self, f, g):
        if f.n != g.n or f.a != g.a:
            return f.is_zero() and g.is_zero()
        return self.cohomology.cohomologous(f, g)

    def is_zero_class(self, f):
        return self.cohomology.is_coboundary(f)


# ----------------------------------------------------------------------
# twisted tensor product structure on cohomology

def subgroup_restriction(twist):
    """Membership tests for the restricted grading subgroups.

    a lies in A' when the character t^<a|-> is trivial, i.e. for every
    column v: prod_u t_uv^(a_u) = 1; B' is the symmetric condition.
    Returns (in_A_prime, in_B_prime) predicates on integer tuples.
    """
    field = twist.field
    one = field.one()

    def in_a(a):
        for v in range(twist.n):
            val = one
            for u in range(twist.m):
                if a[u]:
                    val = val * (twist.entries[u][v] ** a[u])
            if val != one:
                return False
        return True

    def in_b(b):
        for u in range(twist.m):
            val = one
            for v in range(twist.n):
                if b[v]:
                    val = val * (twist.entries[u][v] ** b[v])
            if val != one:
                return False
        return True

    return in_a, in_b


def transport_pair(alpha, beta, Ktw):
    """(alpha (x) beta) as a cochain on the twisted total complex:
    value alpha(u) (x) beta(v) on the generator u (x)^t v, supported on
    bidegree (deg alpha, deg beta)."""
    alg = Ktw.algebra
    S = Ktw.Q.algebra
    n = alpha.n + beta.n
    a = tuple(alpha.a) + tuple(beta.a)
    values = {}
    for g in Ktw.gen_keys(n):
        i, gp, gq = Ktw.split_gen(n, g)
        if i != alpha.n:
            continue
        av = alpha.values.get(gp)
        bv = beta.values.get(gq)
        if not av or not bv:
            continue
        out = {}
        for rm, c1 in av.items():
            for sm, c2 in bv.items():
                elem_add_into(out, {pair_index(alg, rm, sm): c1 * c2})
        if out:
            values[g] = out
    return Cochain(Ktw, n, a, values)


def tensor_bracket(ctx_r, ctx_s, Ktw, alpha, beta, alpha2, beta2):
    """Chain-level right-hand side of the tensor product bracket formula:

      [a (x) b, a' (x) b'] = (-1)^((m+n-1) n') [a,a'] (x) (b cup b')
                           + (-1)^(m (m'+n'-1)) (a cup a') (x) [b,b']

    with m, n, m', n' the degrees of a, b, a', b'.  Factor brackets and
    cups are computed in the factor contexts; the result is transported to
    the twisted total complex.  Terms of negative total degree vanish.
    """
    field = ctx_r.field
    m, n = alpha.n, beta.n
    m2, n2 = alpha2.n, beta2.n
    total = m + n + m2 + n2 - 1
    a_tot = tuple(x + y for x, y in zip(
        tuple(alpha.a) + tuple(beta.a),
        tuple(alpha2.a) + tuple(beta2.a)))
    result = Cochain(Ktw, max(total, 0), a_tot, {})
    if m + m2 - 1 >= 0:
        br = ctx_r.bracket(alpha, alpha2)
        cu = ctx_s.cup(beta, beta2)
        term = transport_pair(br, cu, Ktw)
        if ((m + n - 1) * n2) % 2 == 1:
            term = term.scale(-field.one())
        if term.n == result.n:
            result = result + term
        elif not term.is_zero():
            raise AssertionError("degree mismatch in tensor bracket")
    if n + n2 - 1 >= 0:
        cu = ctx_r.cup(alpha, alpha2)
        br = ctx_s.bracket(beta, beta2)
        term = transport_pair(cu, br, Ktw)
        if (m * (m2 + n2 - 1)) % 2 == 1:
            term = term.scale(-field.one())
        if term.n == result.n:
            result = result + term
        elif not term.is_zero():
            raise AssertionError("degree mismatch in tensor bracket")
    return result


def verify_main_theorem(R, S, twist, N):
    """Check the Gerstenhaber isomorphism on restricted classes.

    Builds the total complex of the factor normalized bar resolutions,
    enumerates HH basis classes of both factors whose internal degrees lie
    in the restricted subgroups, and for every pair of product classes of
    total bracket degree <= N compares the bracket computed directly on
    the total complex with the tensor formula.  Returns a report dict.
    """
    from .complexes import normalized_bar_resolution, twisted_tensor_resolution
    from .diagonals import diagonal_bar, diagonal_twisted_nbar
    from .homotopies import phi_bar, phi_twisted

    top = N + 1
    nbR = normalized_bar_resolution(R, top)
    nbS = normalized_bar_resolution(S, top)
    Ktw = twisted_tensor_resolution(nbR, nbS, twist, top)
    ctx_r = GerstenhaberContext(nbR, diagonal_bar(nbR), phi_bar(nbR))
    ctx_s = GerstenhaberContext(nbS, diagonal_bar(nbS), phi_bar(nbS))
    ctx_t = GerstenhaberContext(Ktw, diagonal_twisted_nbar(Ktw),
                                phi_twisted(Ktw, ctx_r.phi, ctx_s.phi))
    in_a, in_b = subgroup_restriction(twist)

    def restricted_classes(ctx, member):
        out = []
        for m in range(N + 1):
            for a in ctx.cohomology.internal_degrees(m):
                if not member(a):
                    continue
                for k, rep in enumerate(ctx.cohomology.space(m, a)["reps"]):
                    out.append((m, a, k, rep))
        return out

    r_classes = restricted_classes(ctx_r, in_a)
    s_classes = restricted_classes(ctx_s, in_b)
    pairs = [(alpha, beta) for (m, a, k, alpha) in r_classes
             for (n, b, j, beta) in s_classes if m + n <= N]
    report = {"checked": 0, "failures": [], "classes": len(pairs)}
    for i1, (alpha, beta) in enumerate(pairs):
        for (alpha2, beta2) in pairs:
            total = alpha.n + beta.n + alpha2.n + beta2.n - 1
            if total > N or total < 0:
                continue
            lhs = ctx_t.bracket(transport_pair(alpha, beta, Ktw),
                                transport_pair(alpha2, beta2, Ktw))
            rhs = tensor_bracket(ctx_r, ctx_s, Ktw, alpha, beta, alpha2, beta2)
            ok = ctx_t.same_class(lhs, rhs)
            report["checked"] += 1
            if not ok:
                report["failures"].append({
                    "left": (alpha.n, alpha.a, beta.n, beta.a),
                    "right": (alpha2.n, alpha2.a, beta2.n, beta2.a),
                })
    report["ok"] = not report["failures"]
    return report
