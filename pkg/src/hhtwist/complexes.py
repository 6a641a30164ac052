"""Complexes of free bimodules over a graded algebra.

A degree-n chain element is a sparse dict {(lmon, genkey, rmon): Scalar},
meaning sum of  lmon . genkey . rmon  with lmon, rmon basis-monomial
indices of the algebra.  Generator keys are ints for materialized
complexes and nested tuples for tensor squares/cubes, but all element
arithmetic is key-agnostic.

Provided complexes: bar and normalized bar resolutions, the reduced
Koszul-type resolution of the dual numbers, twisted tensor products of
resolutions, and tensor squares/cubes of a resolution over the algebra.
"""

from __future__ import annotations

import itertools

from .algebra import twisted_tensor_algebra, pair_index, split_index


# ----------------------------------------------------------------------
# element helpers

def elem_add_into(dest, src, coeff=None):
    for key, c in src.items():
        if coeff is not None:
            c = c * coeff
        if key in dest:
            v = dest[key] + c
            if v:
                dest[key] = v
            else:
                del dest[key]
        elif c:
            dest[key] = c
    return dest


def elem_scale(elem, c):
    if not c:
        return {}
    return {k: v * c for k, v in elem.items()}


def elem_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        if k in out:
            w = out[k] - v
            if w:
                out[k] = w
            else:
                del out[k]
        else:
            out[k] = -v
    return out


class ComplexBase:
    """Shared machinery: bimodule action, differential application, checks."""

    algebra = None
    name = ""

    def max_degree(self):
        raise NotImplementedError

    def gen_keys(self, n):
        raise NotImplementedError

    def gen_ideg(self, n, key):
        raise NotImplementedError

    def diff_gen(self, n, key):
        """Differential on a generator, as an element of degree n-1."""
        raise NotImplementedError

    def num_gens(self, n):
        return sum(1 for _ in self.gen_keys(n))

    def act_mon(self, elem, l, r):
        """(l . elem . r) for basis-monomial indices l, r."""
        alg = self.algebra
        out = {}
        for (a, g, b), c in elem.items():
            left = alg.mul_mon(l, a)
            if not left:
                continue
            right = alg.mul_mon(b, r)
            if not right:
                continue
            for li, cl in left.items():
                clc = cl * c
                for ri, cr in right.items():
                    elem_add_into(out, {(li, g, ri): clc * cr})
        return out

    def apply_diff(self, n, elem):
        out = {}
        for (l, g, r), c in elem.items():
            img = self.diff_gen(n, g)
            if img:
                elem_add_into(out, self.act_mon(img, l, r), c)
        return out

    def gen_elem(self, key, coeff=None):
        c = coeff if coeff is not None else self.algebra.field.one()
        return {(self.algebra.unit_idx, key, self.algebra.unit_idx): c}

    def elem_ideg(self, n, elem):
        """Common internal degree of a homogeneous element; None for zero."""
        alg = self.algebra
        degs = set()
        for (l, g, r), _ in elem.items():
            degs.add(tuple(x + y + z for x, y, z in
                           zip(alg.degrees[l], self.gen_ideg(n, g), alg.degrees[r])))
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not internally homogeneous")
        return degs.pop()

    def check_d_squared(self, upto=None):
        """Verify d(d(gen)) = 0 for every generator up to the given degree."""
        top = self.max_degree() if upto is None else min(upto, self.max_degree())
        for n in range(2, top + 1):
            for g in self.gen_keys(n):
                if self.apply_diff(n - 1, self.diff_gen(n, g)):
                    raise AssertionError(
                        f"d^2 != 0 on degree-{n} generator {g!r} of {self.name}")
        return True


# ----------------------------------------------------------------------
# materialized free bimodule complexes

class FreeBimoduleComplex(ComplexBase):
    """Explicit complex: per-degree generator lists plus differential triples.

    diffs[n][i] is a list of (coeff, lmon, target_gen, rmon) tuples; degree-0
    generators carry an augmentation value in the algebra (default 1).
    """

    def __init__(self, algebra, name=""):
        self.algebra = algebra
        self.name = name
        self.gens = []    # per degree: list of (label, ideg tuple)
        self.diffs = []   # per degree: list (per gen) of triples
        self.augs = []    # per degree-0 gen: algebra element

    def add_degree(self, gens, diffs=None):
        n = len(self.gens)
        self.gens.append(list(gens))
        if n == 0:
            self.diffs.append([[] for _ in gens])
            self.augs = [self.algebra.unit_elem() for _ in gens]
        else:
            if diffs is None or len(diffs) != len(gens):
                raise ValueError("each generator needs a differential")
            self.diffs.append([list(d) for d in diffs])

    def max_degree(self):
        return len(self.gens) - 1

    def gen_keys(self, n):
        return range(len(self.gens[n]))

    def gen_ideg(self, n, key):
        return self.gens[n][key][1]

    def gen_label(self, n, key):
        return self.gens[n][key][0]

    def diff_gen(self, n, key):
        out = {}
        for (c, l, t, r) in self.diffs[n][key]:
            elem_add_into(out, {(l, t, r): c})
        return out

    def augment(self, elem):
        """Apply the augmentation to a degree-0 element."""
        alg = self.algebra
        out = alg.zero_elem()
        for (l, g, r), c in elem.items():
            v = alg.rmul_mon(alg.lmul_mon(l, self.augs[g]), r)
            alg.add_into(out, v, c)
        return out

    def check_augmented(self):
        """aug(d_1(gen)) = 0 for all degree-1 generators."""
        for g in self.gen_keys(1):
            if self.augment(self.diff_gen(1, g)):
                raise AssertionError(f"augmentation does not kill d_1({g})")
        return True


# ----------------------------------------------------------------------
# bar-type resolutions

def bar_resolution(alg, N, normalized=False, name=None):
    """(Normalized) bar resolution of alg through homological degree N.

    Degree-n generators are n-tuples of basis monomials; in the normalized
    version unit entries are dropped (tuples of non-unit monomials).
    """
    cx = FreeBimoduleComplex(
        alg, name or ("nbar(" + alg.name + ")" if normalized else "bar(" + alg.name + ")"))
    entries = alg.non_unit_indices() if normalized else list(range(alg.dim))
    degree_index = {}  # tuple -> index, per degree

    def ideg(tup):
        d = [0] * alg.grading_rank
        for m in tup:
            d = [x + y for x, y in zip(d, alg.degrees[m])]
        return tuple(d)

    def label(tup):
        return "(" + ",".join(alg.labels[m] for m in tup) + ")" if tup else "()"

    prev_index = {(): 0}
    cx.add_degree([(label(()), ideg(()))])
    cx.tuples = {0: [()]}
    for n in range(1, N + 1):
        tuples = list(itertools.product(entries, repeat=n))
        index = {t: i for i, t in enumerate(tuples)}
        gens = [(label(t), ideg(t)) for t in tuples]
        diffs = []
        for t in tuples:
            triples = []
            # first entry moves out left
            triples.append((alg.field.one(), t[0], prev_index[t[1:]], alg.unit_idx))
            sign = alg.field.one()
            for j in range(n - 1):
                sign = -sign
                prod = alg.mul_mon(t[j], t[j + 1])
                for m, c in prod.items():
                    if normalized and m == alg.unit_idx:
                        continue
                    newt = t[:j] + (m,) + t[j + 2:]
                    triples.append((sign * c, alg.unit_idx, prev_index[newt],
                                    alg.unit_idx))
            # last entry moves out right, sign (-1)^n
            last_sign = alg.field.one() if n % 2 == 0 else -alg.field.one()
            triples.append((last_sign, alg.unit_idx, prev_index[t[:-1]], t[-1]))
            diffs.append(triples)
        cx.add_degree(gens, diffs)
        prev_index = index
        degree_index[n] = index
        cx.tuples[n] = tuples
    degree_index[0] = {(): 0}
    cx.tuple_index = degree_index
    cx.entry_indices = entries
    cx.normalized = normalized
    return cx


def normalized_bar_resolution(alg, N, name=None):
    return bar_resolution(alg, N, normalized=True, name=name)


def koszul_dual_numbers(field, var, N, algebra=None):
    """Reduced resolution of k[x]/(x^2): one generator e_n per degree, with
    d(e_n) = x e_{n-1} + (-1)^n e_{n-1} x."""
    from .algebra import truncated_poly
    alg = algebra if algebra is not None else truncated_poly(field, var, 2)
    cx = FreeBimoduleComplex(alg, f"koszul({alg.name})")
    x = alg.index[var]
    cx.add_degree([("e0", (0,))])
    for n in range(1, N + 1):
        sign = field.one() if n % 2 == 0 else -field.one()
        cx.add_degree([(f"e{n}", (n,))],
                      [[(field.one(), x, 0, alg.unit_idx),
                        (sign, alg.unit_idx, 0, x)]])
    return cx


# ----------------------------------------------------------------------
# twisted tensor product of resolutions

class TwistedResolution(FreeBimoduleComplex):
    """Total complex of P (x)^t Q over the twisted tensor algebra.

    Remembers the bidegree splitting of each generator so that homotopies
    and diagonals defined factorwise can be evaluated on it.
    """

    def __init__(self, P, Q, twist, N, algebra=None, name=None):
        R, S = P.algebra, Q.algebra
        alg = algebra if algebra is not None else twisted_tensor_algebra(R, S, twist)
        super().__init__(alg, name or f"tot({P.name}(x)t{Q.name})")
        self.P, self.Q, self.twist = P, Q, twist
        self.pairs = []       # per degree: list of (i, gp, gq)
        self.pair_lookup = [] # per degree: dict (i, gp, gq) -> index
        one = alg.field.one()
        for n in range(N + 1):
            pairs, gens, diffs = [], [], []
            lookup = {}
            for i in range(n + 1):
                j = n - i
                if i > P.max_degree() or j > Q.max_degree():
                    continue
                for gp in P.gen_keys(i):
                    for gq in Q.gen_keys(j):
                        lookup[(i, gp, gq)] = len(pairs)
                        pairs.append((i, gp, gq))
                        lab = f"{P.gen_label(i, gp)}|{Q.gen_label(j, gq)}"
                        gens.append((lab, tuple(P.gen_ideg(i, gp)) +
                                     tuple(Q.gen_ideg(j, gq))))
            if n == 0:
                self.add_degree(gens)
            else:
                prev = self.pair_lookup[n - 1]
                for (i, gp, gq) in pairs:
                    j = n - i
                    triples = []
                    if i > 0:
                        jdeg = Q.gen_ideg(j, gq)
                        for (a, t, b), c in P.diff_gen(i, gp).items():
                            tw = twist.eval_inv(R.degrees[b], jdeg)
                            triples.append((c * tw,
                                            pair_index(alg, a, S.unit_idx),
                                            prev[(i - 1, t, gq)],
                                            pair_index(alg, b, S.unit_idx)))
                    if j > 0:
                        sign = one if i % 2 == 0 else -one
                        ideg_p = P.gen_ideg(i, gp)
                        for (a, t, b), c in Q.diff_gen(j, gq).items():
                            tw = twist.eval_inv(ideg_p, S.degrees[a])
                            triples.append((sign * c * tw,
                                            pair_index(alg, R.unit_idx, a),
                                            prev[(i, gp, t)],
                                            pair_index(alg, R.unit_idx, b)))
                    diffs.append(triples)
                self.add_degree(gens, diffs)
            self.pairs.append(pairs)
            self.pair_lookup.append(lookup)

    def split_gen(self, n, key):
        """(i, gp, gq) with i + (n-i) = n."""
        return self.pairs[n][key]

    def pair_gen(self, n, i, gp, gq):
        return self.pair_lookup[n][(i, gp, gq)]

    def split_mon(self, k):
        return split_index(self.algebra, k)

    def combine(self, i, p_elem, j, q_elem):
        """Image of (P_i elem) (x) (Q_j elem) in the total complex at i+j.

        Moving the S-parts across the P-parts costs
        t^{-<|x| | c> - <b | |y|> - <b | c>} on a.x.b (x) c.y.d.
        """
        R, S = self.P.algebra, self.Q.algebra
        alg, twist = self.algebra, self.twist
        out = {}
        for (a, gp, b), c1 in p_elem.items():
            bdeg = R.degrees[b]
            xdeg = self.P.gen_ideg(i, gp)
            for (cq, gq, d), c2 in q_elem.items():
                cdeg = S.degrees[cq]
                tw = (twist.eval_inv(xdeg, cdeg) * twist.eval_inv(bdeg, self.Q.gen_ideg(j, gq))
                      * twist.eval_inv(bdeg, cdeg))
                key = (pair_index(alg, a, cq),
                       self.pair_gen(i + j, i, gp, gq),
                       pair_index(alg, b, d))
                elem_add_into(out, {key: c1 * c2 * tw})
        return out


def twisted_tensor_resolution(P, Q, t, N, algebra=None, name=None):
    return TwistedResolution(P, Q, t, N, algebra=algebra, name=name)


# ----------------------------------------------------------------------
# tensor square / cube over the algebra

class TensorComplex(ComplexBase):
    """K (x)_Lambda K (copies=2) or triple product (copies=3).

    Square keys: (i, g1, m, g2) for g1 in K_i, m a basis monomial, g2 in
    K_{n-i}.  Cube keys: (i, g1, m1, j, g2, m2, g3).  The differential uses
    the usual sign (-1)^(degree to the left).
    """

    def __init__(self, K, copies=2):
        if copies not in (2, 3):
            raise ValueError("copies must be 2 or 3")
        self.K = K
        self.copies = copies
        self.algebra = K.algebra
        self.name = f"{K.name}^(x){copies}"

    def max_degree(self):
        return self.K.max_degree()

    def gen_keys(self, n):
        K = self.K
        dim = self.algebra.dim
        if self.copies == 2:
            for i in range(n + 1):
                j = n - i
                if i > K.max_degree() or j > K.max_degree():
                    continue
                for g1 in K.gen_keys(i):
                    for m in range(dim):
                        for g2 in K.gen_keys(j):
                            yield (i, g1, m, g2)
        else:
            for i in range(n + 1):
                for j in range(n - i + 1):
                    k = n - i - j
                    if max(i, j, k) > K.max_degree():
                        continue
                    for g1 in K.gen_keys(i):
                        for m1 in range(dim):
                            for g2 in K.gen_keys(j):
                                for m2 in range(dim):
                                    for g3 in K.gen_keys(k):
                                        yield (i, g1, m1, j, g2, m2, g3)

    def gen_ideg(self, n, key):
        K, alg = self.K, self.algebra
        if self.copies == 2:
            i, g1, m, g2 = key
            parts = (K.gen_ideg(i, g1), alg.degrees[m], K.gen_ideg(n - i, g2))
        else:
            i, g1, m1, j, g2, m2, g3 = key
            parts = (K.gen_ideg(i, g1), alg.degrees[m1], K.gen_ideg(j, g2),
                     alg.degrees[m2], K.gen_ideg(n - i - j, g3))
        return tuple(sum(xs) for xs in zip(*parts))

    def diff_gen(self, n, key):
        K, alg = self.K, self.algebra
        one = alg.field.one()
        out = {}
        if self.copies == 2:
            i, g1, m, g2 = key
            j = n - i
            if i > 0:
                for (a, t, b), c in K.diff_gen(i, g1).items():
                    for m2, cm in alg.mul_mon(b, m).items():
                        elem_add_into(out, {(a, (i - 1, t, m2, g2), alg.unit_idx):
                                            c * cm})
            if j > 0:
                sign = one if i % 2 == 0 else -one
                for (a, t, b), c in K.diff_gen(j, g2).items():
                    for m2, cm in alg.mul_mon(m, a).items():
                        elem_add_into(out, {(alg.unit_idx, (i, g1, m2, t), b):
                                            sign * c * cm})
            return out
        i, g1, m1, j, g2, m2, g3 = key
        k = n - i - j
        if i > 0:
            for (a, t, b), c in K.diff_gen(i, g1).items():
                for mm, cm in alg.mul_mon(b, m1).items():
                    elem_add_into(out, {(a, (i - 1, t, mm, j, g2, m2, g3),
                                         alg.unit_idx): c * cm})
        if j > 0:
            sign = one if i % 2 == 0 else -one
            for (a, t, b), c in K.diff_gen(j, g2).items():
                for ml, cl in alg.mul_mon(m1, a).items():
                    for mr, cr in alg.mul_mon(b, m2).items():
                        elem_add_into(out, {(alg.unit_idx,
                                             (i, g1, ml, j - 1, t, mr, g3),
                                             alg.unit_idx): sign * c * cl * cr})
        if k > 0:
            sign = one if (i + j) % 2 == 0 else -one
            for (a, t, b), c in K.diff_gen(k, g3).items():
                for mm, cm in alg.mul_mon(m2, a).items():
                    elem_add_into(out, {(alg.unit_idx,
                                         (i, g1, m1, j, g2, mm, t), b):
                                        sign * c * cm})
        return out


def tensor_over_algebra(K, copies=2):
    return TensorComplex(K, copies)


# ----------------------------------------------------------------------
# lifting comparison maps between resolutions

def lift_chain_map(source, target, N):
    """Lift the identity of the algebra to a chain map source -> target.

    Both complexes must resolve the same algebra (degree-0 generators with
    augmentations).  Built degree by degree: psi_0 matches augmentations,
    and psi_n solves d psi_n = psi_{n-1} d over the internal-degree-matching
    bimodule basis elements of the target.  Deterministic via the linear
    solver's pivot rule.
    """
    from .linalg import SparseMatrix

    alg = source.algebra
    field = alg.field
    values = []  # per degree: list per source gen of target elements

    def candidates(n, ideg):
        out = []
        for h in target.gen_keys(n):
            hd = target.gen_ideg(n, h)
            for l in range(alg.dim):
                ld = alg.degrees[l]
                for r in range(alg.dim):
                    total = tuple(x + y + z for x, y, z in
                                  zip(ld, hd, alg.degrees[r]))
                    if total == tuple(ideg):
                        out.append((l, h, r))
        return out

    # degree 0: match augmentations
    deg0 = []
    for g in source.gen_keys(0):
        want = source.augs[g]
        cand = candidates(0, source.gen_ideg(0, g))
        rows = {}
        cols = []
        for (l, h, r) in cand:
            img = alg.rmul_mon(alg.lmul_mon(l, target.augs[h]), r)
            col = {}
            for m, c in img.items():
                rows.setdefault(m, len(rows))
                col[rows[m]] = c
            cols.append(col)
        rhs = {}
        for m, c in want.items():
            rows.setdefault(m, len(rows))
            rhs[rows[m]] = c
        cols = [{ri: c for ri, c in col.items()} for col in cols]
        sol = SparseMatrix.from_columns(field, len(rows), cols).solve(rhs)
        if sol is None:
            raise ValueError("no augmentation-compatible degree-0 lift")
        elem = {}
        for ci, c in sol.items():
            elem_add_into(elem, {cand[ci]: c})
        deg0.append(elem)
    values.append(deg0)

    for n in range(1, N + 1):
        prev = values[n - 1]
        cur = []
        for g in source.gen_keys(n):
            rhs_elem = {}
            for (l, t, r), c in source.diff_gen(n, g).items():
                elem_add_into(rhs_elem, target.act_mon(prev[t], l, r), c)
            cand = candidates(n, source.gen_ideg(n, g))
            rows = {}
            cols = []
            for (l, h, r) in cand:
                img = target.act_mon(target.diff_gen(n, h), l, r)
                col = {}
                for key, c in img.items():
                    rows.setdefault(key, len(rows))
                    col[rows[key]] = c
                cols.append(col)
            rhs = {}
            for key, c in rhs_elem.items():
                rows.setdefault(key, len(rows))
                rhs[rows[key]] = c
            sol = SparseMatrix.from_columns(field, len(rows), cols).solve(rhs)
            if sol is None:
                raise ValueError(
                    f"no lift in degree {n} for generator {g!r}")
            elem = {}
            for ci, c in sol.items():
                elem_add_into(elem, {cand[ci]: c})
            cur.append(elem)
        values.append(cur)

    return GenMap(source, target, 0,
                  lambda n, key: values[n][key],
                  name=f"lift({source.name}->{target.name})")


# ----------------------------------------------------------------------
# chain maps between complexes

class GenMap:
    """A bimodule map given by its values on generators, with memoization.

    fn(n, key) must return an element of target degree n + offset.
    """

    def __init__(self, source, target, offset, fn, name=""):
        self.source = source
        self.target = target
        self.offset = offset
        self.fn = fn
        self.name = name
        self._cache = {}

    def on_gen(self, n, key):
        ck = (n, key)
        if ck not in self._cache:
            self._cache[ck] = self.fn(n, key)
        return self._cache[ck]

    def apply(self, n, elem):
        out = {}
        for (l, g, r), c in elem.items():
            val = self.on_gen(n, g)
            if val:
                elem_add_into(out, self.target.act_mon(val, l, r), c)
        return out

    def check_chain_map(self, upto):
        """f d = d f on all generators up to the given source degree."""
        for n in range(1, upto + 1):
            for g in self.source.gen_keys(n):
                lhs = self.apply(n - 1, self.source.diff_gen(n, g))
                rhs = self.target.apply_diff(n + self.offset, self.on_gen(n, g))
                if elem_sub(lhs, rhs):
                    raise AssertionError(
                        f"{self.name or 'map'} is not a chain map on "
                        f"degree-{n} generator {g!r}")
        return True

    def compose(self, other, name=""):
        """self after other (other first)."""
        def fn(n, key):
            return self.apply(n + other.offset, other.on_gen(n, key))
        return GenMap(other.source, self.target, self.offset + other.offset,
                      fn, name or f"{self.name}.{other.name}")


def check_homotopy(phi, F, upto):
    """d phi + phi d = F on all generators up to the given degree.

    phi raises degree by one on the same complex pair (source = square,
    target = K); F is a degree-zero map with the same source and target.
    """
    src, tgt = phi.source, phi.target
    for n in range(0, upto + 1):
        for g in src.gen_keys(n):
            total = {}
            d_phi = tgt.apply_diff(n + 1, phi.on_gen(n, g))
            elem_add_into(total, d_phi)
            if n > 0:
                elem_add_into(total, phi.apply(n - 1, src.diff_gen(n, g)))
            want = F.on_gen(n, g)
            if elem_sub(total, want):
                raise AssertionError(
                    f"homotopy identity fails on degree-{n} generator {g!r}")
    return True
