"""Bracket computations for the quantum plane Lambda_q = k<x,y>/(x^2, y^2, xy + q yx).

Six regimes of q are covered, each with its known generator set of
Hochschild cohomology and expected bracket table:

* ``generic``          -- q transcendental over Q;
* ``neg1``             -- char 0, q = -1 (the untwisted tensor product);
* ``odd_root``         -- char 0, q a primitive odd r-th root of unity;
* ``even_or_char2_root`` -- char 0 with q a primitive even-order root (q != 1),
                          or char 2 with q a root of unity, q != 1;
* ``char2_q1``         -- char 2, q = 1;
* ``q1``               -- char 0, q = 1.

A build bundles the algebra, its Koszul-type resolution as a twisted
tensor product of two dual-numbers resolutions, the closed diagonal and
homotopy, and the named generator cochains, with helpers to parse and
render cochain expressions like ``x*e(1,0)`` or ``-2*1*e(2,0)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import quantum_plane_algebra
from .cohomology import Cochain, GerstenhaberContext
from .complexes import twisted_tensor_resolution
from .diagonals import diagonal_qci
from .fields import (CyclotomicField, PrimeField, RationalField,
                     RationalFunctionField, Scalar, parse_scalar, scalar_order)
from .homotopies import phi_qci


CASE_KEYS = ("generic", "neg1", "odd_root", "even_or_char2_root",
             "char2_q1", "q1")


@dataclass
class QciCase:
    key: str
    field: object
    q: Scalar
    r: int | None = None

    @property
    def default_degree(self):
        if self.key == "odd_root":
            return 2 * self.r * 2 + 1  # deep enough for all generator pairs
        if self.key == "even_or_char2_root":
            return 2 * self.r + 1
        return 6


def classify(field, q):
    """Sort (field, q) into one of the six regimes."""
    if not q:
        raise ValueError("q must be invertible")
    order = scalar_order(q)
    p = field.char
    if order is None:
        return QciCase("generic", field, q)
    if order == 1:  # q = 1
        if p == 2:
            return QciCase("char2_q1", field, q)
        if p == 0:
            return QciCase("q1", field, q)
        raise ValueError(f"q = 1 in characteristic {p} is not covered")
    if p == 2:
        return QciCase("even_or_char2_root", field, q, r=order)
    if p != 0:
        raise ValueError(f"roots of unity in characteristic {p} are not covered")
    if order == 2:  # q = -1
        return QciCase("neg1", field, q)
    if order % 2 == 1:
        return QciCase("odd_root", field, q, r=order)
    return QciCase("even_or_char2_root", field, q, r=order)


def case_from_options(q_option, char=0):
    """Build a QciCase from CLI-style options: 'generic', 'root:r', or a
    scalar literal, with the characteristic."""
    if q_option == "generic":
        if char:
            raise ValueError("generic q requires characteristic 0")
        fld = RationalFunctionField()
        return classify(fld, fld.q())
    if isinstance(q_option, str) and q_option.startswith("root:"):
        r = int(q_option.split(":", 1)[1])
        if r < 2:
            raise ValueError("root order must be >= 2")
        if char:
            fld = CyclotomicField(r, p=char)
        elif r == 1:
            fld = RationalField()
        else:
            fld = CyclotomicField(r)
        return classify(fld, fld.q())
    # literal
    if char:
        fld = PrimeField(char)
        q = parse_scalar(str(q_option), fld)
        fld = PrimeField(char, q_value=q.raw)
        return classify(fld, fld.q())
    fld = RationalField()
    return classify(fld, parse_scalar(str(q_option), fld))


# ----------------------------------------------------------------------
# the build

class QciBuild:
    def __init__(self, case, max_degree=None, phi="qci"):
        self.case = case
        self.field = case.field
        self.q = case.q
        self.r = case.r
        self.phi_kind = phi
        self.N = max_degree if max_degree is not None else case.default_degree
        (self.algebra, self.R, self.S, self.twist) = \
            quantum_plane_algebra(self.field, self.q)
        from .complexes import koszul_dual_numbers
        self.Kx = koszul_dual_numbers(self.field, "x", self.N,
                                      algebra=self.R)
        self.Ky = koszul_dual_numbers(self.field, "y", self.N,
                                      algebra=self.S)
        self.K = twisted_tensor_resolution(self.Kx, self.Ky, self.twist,
                                           self.N, algebra=self.algebra,
                                           name="K(lambda_q)")
        if phi == "qci":
            phi_map = phi_qci(self.K, self.q)
        elif phi == "twisted":
            from .homotopies import phi_koszul_dual_numbers, phi_twisted
            phi_map = phi_twisted(self.K, phi_koszul_dual_numbers(self.Kx),
                                  phi_koszul_dual_numbers(self.Ky))
        else:
            raise ValueError(f"unknown homotopy choice {phi!r}")
        self.ctx = GerstenhaberContext(self.K, diagonal_qci(self.K, self.q),
                                       phi_map)
        self.gen_order = [self._subst_r(e) for e in GENERATORS[case.key]]
        self.generators = {e: self.parse_cochain(e) for e in self.gen_order}
        self.expected = {(self._subst_r(f), self._subst_r(g)):
                         self._subst_r(v)
                         for (f, g), v in EXPECTED[case.key].items()}

    # -- expression handling ------------------------------------------

    def _subst_r(self, expr):
        if "r" not in expr:
            return expr
        if self.r is None:
            raise ValueError("expression uses r but q is not a root of unity")
        out = []
        i = 0
        while i < len(expr):
            ch = expr[i]
            if ch == "r":
                # preceded by digits -> multiply
                j = len(out)
                digits = ""
                while out and out[-1].isdigit():
                    digits = out.pop() + digits
                coeff = int(digits) if digits else 1
                out.append(str(coeff * self.r))
            else:
                out.append(ch)
            i += 1
        return "".join(out)

    def gen_index(self, i, j):
        return self.K.pair_gen(i + j, i, 0, 0)

    def parse_cochain(self, expr):
        """Parse sums of [scalar*]monomial*e(i,j) into a cochain."""
        expr = self._subst_r(expr.strip())
        alg = self.algebra
        if expr == "0":
            raise ValueError("the literal 0 needs degree context; "
                             "use an explicit zero cochain")
        terms = _split_terms(expr)
        n = None
        a = None
        values = {}
        for sign, term in terms:
            if "e(" not in term:
                raise ValueError(f"term {term!r} has no e(i,j) part")
            head, epart = term.rsplit("*", 1) if "*" in term else ("", term)
            if not epart.startswith("e(") or not epart.endswith(")"):
                raise ValueError(f"malformed generator reference {epart!r}")
            inds = epart[2:-1].split(",")
            if len(inds) != 2:
                raise ValueError(f"e(i,j) needs two indices: {epart!r}")
            i, j = int(inds[0]), int(inds[1])
            if head:
                if "*" in head:
                    scalar_part, mon = head.rsplit("*", 1)
                else:
                    scalar_part, mon = None, head
            else:
                scalar_part, mon = None, "1"
            if mon not in alg.index:
                # the whole head might be a scalar with unit monomial
                raise ValueError(f"unknown monomial {mon!r}")
            c = (parse_scalar(scalar_part, self.field) if scalar_part
                 else self.field.one())
            if sign < 0:
                c = -c
            term_n = i + j
            mon_idx = alg.index[mon]
            term_a = tuple(x - y for x, y in zip((i, j),
                                                 alg.degrees[mon_idx]))
            if n is None:
                n, a = term_n, term_a
            elif (n, a) != (term_n, term_a):
                raise ValueError("expression mixes degrees or internal degrees")
            if n > self.N:
                raise ValueError(f"degree {n} exceeds max degree {self.N}")
            g = self.gen_index(i, j)
            alg.add_into(values.setdefault(g, {}), alg.monomial(mon_idx, c))
        return Cochain(self.K, n, a, values)

    def render_cochain(self, f):
        """Inverse of parse_cochain, with deterministic term order."""
        alg = self.algebra
        if f.is_zero():
            return "0"
        parts = []
        items = []
        for g, v in f.values.items():
            i, _, _ = self.K.split_gen(f.n, g)
            j = f.n - i
            for m in sorted(v):
                items.append((i, j, m, v[m]))
        items.sort(key=lambda t: (t[0], t[2]))
        for (i, j, m, c) in items:
            cs = repr(c)
            mon = alg.labels[m]
            if cs == "1":
                term = f"{mon}*e({i},{j})"
            else:
                if any(op in cs[1:] for op in "+-") or "/" in cs:
                    cs = f"({cs})"
                term = f"{cs}*{mon}*e({i},{j})"
            parts.append(term)
        return " + ".join(parts)

    # -- computations ---------------------------------------------------

    def expected_cochain(self, expr, like):
        """Expected-value cochain; '0' borrows (n, a) from the computed one."""
        if expr == "0":
            return self.ctx.zero(like.n, like.a)
        return self.parse_cochain(expr)

    def expected_bracket(self, fname, gname, like):
        """Expected class for [f, g]; unlisted transposes follow from
        antisymmetry [f, g] = -(-1)^((i-1)(j-1)) [g, f]."""
        if (fname, gname) in self.expected:
            return (self.expected[(fname, gname)],
                    self.expected_cochain(self.expected[(fname, gname)], like))
        if (gname, fname) in self.expected:
            f, g = self.generators[fname], self.generators[gname]
            exp = self.expected_cochain(self.expected[(gname, fname)], like)
            if ((f.n - 1) * (g.n - 1)) % 2 == 0:
                exp = exp.scale(-self.field.one())
            return (self.render_cochain(exp), exp)
        return ("0", self.expected_cochain("0", like))

    def bracket_table(self):
        """All generator-pair brackets with expected values and match flags."""
        rows = []
        for fname in self.gen_order:
            for gname in self.gen_order:
                f = self.generators[fname]
                g = self.generators[gname]
                chain = self.ctx.bracket(f, g)
                expected_expr, exp = self.expected_bracket(fname, gname, chain)
                match = self.ctx.same_class(chain, exp)
                rows.append({
                    "f": fname,
                    "g": gname,
                    "chain_level": self.render_cochain(chain),
                    "expected": expected_expr,
                    "chain_equals_expected": chain == exp,
                    "match": match,
                })
        return rows

    def circle_value(self, f_expr, g_expr, i, j):
        """(f o g)(e_(i,j)) as an algebra element."""
        f = self.parse_cochain(f_expr)
        g = self.parse_cochain(g_expr)
        chain = self.ctx.circle(f, g)
        return chain.apply(self.K.gen_elem(self.gen_index(i, j)))

    def verify_generators_are_cocycles(self):
        for name, f in self.generators.items():
            if not self.ctx.cohomology.is_cocycle(f):
                raise AssertionError(f"generator {name} is not a cocycle")
        return True


def build_case(case, max_degree=None, phi="qci"):
    return QciBuild(case, max_degree=max_degree, phi=phi)


def _split_terms(expr):
    """Split a sum into (sign, term) pairs at top-level + and -."""
    terms = []
    depth = 0
    cur = ""
    sign = 1
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip():
            terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and depth == 0 and not cur.strip():
            # leading sign
            if ch == "-":
                sign = -sign
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


# ----------------------------------------------------------------------
# generator sets and expected tables (indices may contain the symbol r)

GENERATORS = {
    "generic": ["xy*e(0,0)", "x*e(1,0)", "y*e(0,1)"],
    "neg1": ["x*e(0,0)", "y*e(0,0)", "x*e(1,0)", "y*e(0,1)",
             "1*e(2,0)", "1*e(0,2)"],
    "odd_root": ["xy*e(0,0)", "x*e(1,0)", "y*e(0,1)",
                 "1*e(2r,0)", "1*e(r,r)", "1*e(0,2r)"],
    "even_or_char2_root": ["xy*e(0,0)", "x*e(1,0)", "y*e(0,1)",
                           "1*e(r,0)", "1*e(0,r)"],
    "char2_q1": ["x*e(0,0)", "y*e(0,0)", "1*e(1,0)", "1*e(0,1)"],
    "q1": ["xy*e(0,0)", "x*e(1,0)", "y*e(1,0)", "x*e(0,1)", "y*e(0,1)",
           "1*e(2,0)", "1*e(1,1)", "1*e(0,2)"],
}

EXPECTED = {
    "generic": {
        ("x*e(1,0)", "xy*e(0,0)"): "xy*e(0,0)",
        ("y*e(0,1)", "xy*e(0,0)"): "xy*e(0,0)",
    },
    "neg1": {
        ("x*e(1,0)", "x*e(0,0)"): "x*e(0,0)",
        ("y*e(0,1)", "y*e(0,0)"): "y*e(0,0)",
        ("x*e(1,0)", "1*e(2,0)"): "-2*1*e(2,0)",
        ("y*e(0,1)", "1*e(0,2)"): "-2*1*e(0,2)",
    },
    "odd_root": {
        ("x*e(1,0)", "xy*e(0,0)"): "xy*e(0,0)",
        ("y*e(0,1)", "xy*e(0,0)"): "xy*e(0,0)",
        ("1*e(2r,0)", "x*e(1,0)"): "2r*1*e(2r,0)",
        ("1*e(r,r)", "x*e(1,0)"): "r*1*e(r,r)",
        ("1*e(r,r)", "y*e(0,1)"): "r*1*e(r,r)",
        ("1*e(0,2r)", "y*e(0,1)"): "2r*1*e(0,2r)",
    },
    "even_or_char2_root": {
        ("x*e(1,0)", "xy*e(0,0)"): "xy*e(0,0)",
        ("y*e(0,1)", "xy*e(0,0)"): "xy*e(0,0)",
        ("1*e(r,0)", "x*e(1,0)"): "r*1*e(r,0)",
        ("1*e(0,r)", "y*e(0,1)"): "r*1*e(0,r)",
    },
    "char2_q1": {
        ("x*e(0,0)", "1*e(1,0)"): "1*e(0,0)",
        ("y*e(0,0)", "1*e(0,1)"): "1*e(0,0)",
    },
    "q1": {
        ("xy*e(0,0)", "x*e(1,0)"): "-xy*e(0,0)",
        ("xy*e(0,0)", "y*e(0,1)"): "-xy*e(0,0)",
        ("xy*e(0,0)", "1*e(2,0)"): "-2*y*e(1,0)",
        ("xy*e(0,0)", "1*e(1,1)"): "-y*e(0,1) + x*e(1,0)",
        ("xy*e(0,0)", "1*e(0,2)"): "2*x*e(0,1)",
        ("x*e(1,0)", "y*e(1,0)"): "-y*e(1,0)",
        ("x*e(1,0)", "x*e(0,1)"): "x*e(0,1)",
        ("y*e(1,0)", "x*e(0,1)"): "y*e(0,1) - x*e(1,0)",
        ("y*e(1,0)", "y*e(0,1)"): "-y*e(1,0)",
        ("x*e(0,1)", "y*e(0,1)"): "x*e(0,1)",
        ("x*e(1,0)", "1*e(2,0)"): "-2*1*e(2,0)",
        ("x*e(1,0)", "1*e(1,1)"): "-1*e(1,1)",
        ("y*e(1,0)", "1*e(1,1)"): "-1*e(2,0)",
        ("y*e(1,0)", "1*e(0,2)"): "-2*1*e(1,1)",
        ("x*e(0,1)", "1*e(2,0)"): "-2*1*e(1,1)",
        ("x*e(0,1)", "1*e(1,1)"): "-1*e(0,2)",
        ("y*e(0,1)", "1*e(1,1)"): "-1*e(1,1)",
        ("y*e(0,1)", "1*e(0,2)"): "-2*1*e(0,2)",
    },
}

# informational chain-level circle products printed in two of the regimes:
# (f, g, (i, j) of the probed generator, expected algebra element label or 0)
CIRCLE_VALUES = {
    "generic": [
        ("x*e(1,0)", "x*e(1,0)", (1, 0), "x"),
        ("x*e(1,0)", "y*e(0,1)", (0, 1), "0"),
        ("y*e(0,1)", "x*e(1,0)", (1, 0), "0"),
        ("y*e(0,1)", "y*e(0,1)", (0, 1), "y"),
    ],
    "neg1": [
        ("x*e(1,0)", "x*e(0,0)", (0, 0), "x"),
        ("y*e(0,1)", "y*e(0,0)", (0, 0), "y"),
        ("x*e(1,0)", "x*e(1,0)", (1, 0), "x"),
        ("y*e(0,1)", "y*e(0,1)", (0, 1), "y"),
        ("1*e(2,0)", "x*e(1,0)", (2, 0), "2"),
        ("1*e(0,2)", "y*e(0,1)", (0, 2), "2"),
    ],
}

# post-table consequences of the graded derivation law, per regime:
# (cup factors or plain generator, bracket partner, expected)
DERIVED_CHECKS = {
    "odd_root": {"cup": ("1*e(2r,0)", "1*e(2r,0)"), "with": "x*e(1,0)",
                 "scale": "4r"},
    "char2_q1": {"f": "x*e(1,0)", "with": "1*e(1,0)",
                 "expected": "1*e(1,0)"},
    "q1": {"f": "1*e(2,0)", "with": "xy*e(0,2)",
           "expected": "-2*y*e(1,2)"},
}
