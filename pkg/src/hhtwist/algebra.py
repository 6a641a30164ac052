"""Finite-dimensional graded algebras with explicit multiplication tables.

An algebra element is a sparse dict {basis_index: Scalar}; all element
arithmetic lives on :class:`GradedAlgebra` so elements stay plain data.
Gradings are by Z^m, one integer tuple per basis monomial, and the unit is
required to be a basis monomial of degree zero.
"""

from __future__ import annotations

import json

from .fields import FieldSpec, Twist, parse_scalar


class AlgebraError(ValueError):
    pass


class GradedAlgebra:
    def __init__(self, field, name, labels, degrees, unit_label, table,
                 check=True):
        """table maps (i, j) index pairs to element dicts; missing means zero."""
        self.field = field
        self.name = name
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise AlgebraError("duplicate basis labels")
        self.degrees = [tuple(d) for d in degrees]
        if len(self.degrees) != len(self.labels):
            raise AlgebraError("basis/degree length mismatch")
        self.grading_rank = len(self.degrees[0]) if self.degrees else 0
        if any(len(d) != self.grading_rank for d in self.degrees):
            raise AlgebraError("inconsistent grading rank")
        if unit_label not in self.index:
            raise AlgebraError(f"unit label {unit_label!r} not in basis")
        self.unit_idx = self.index[unit_label]
        self.table = {k: dict(v) for k, v in table.items() if v}
        if check:
            self.verify()

    @property
    def dim(self):
        return len(self.labels)

    # -- element helpers -------------------------------------------------

    def zero_elem(self):
        return {}

    def monomial(self, i, coeff=None):
        c = coeff if coeff is not None else self.field.one()
        return {i: c} if c else {}

    def unit_elem(self):
        return self.monomial(self.unit_idx)

    def from_label(self, label, coeff=None):
        return self.monomial(self.index[label], coeff)

    def add(self, a, b):
        out = dict(a)
        for i, c in b.items():
            v = out.get(i, self.field.zero()) + c
            if v:
                out[i] = v
            else:
                out.pop(i, None)
        return out

    def add_into(self, dest, elem, coeff=None):
        for i, c in elem.items():
            if coeff is not None:
                c = c * coeff
            v = dest.get(i, self.field.zero()) + c
            if v:
                dest[i] = v
            else:
                dest.pop(i, None)

    def scale(self, a, c):
        if not c:
            return {}
        return {i: v * c for i, v in a.items()}

    def neg(self, a):
        return {i: -v for i, v in a.items()}

    def mul_mon(self, i, j):
        return self.table.get((i, j), {})

    def multiply(self, a, b):
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                prod = self.table.get((i, j))
                if prod:
                    self.add_into(out, prod, ca * cb)
        return out

    def lmul_mon(self, i, elem):
        out = {}
        for j, c in elem.items():
            prod = self.table.get((i, j))
            if prod:
                self.add_into(out, prod, c)
        return out

    def rmul_mon(self, elem, j):
        out = {}
        for i, c in elem.items():
            prod = self.table.get((i, j))
            if prod:
                self.add_into(out, prod, c)
        return out

    def elem_degree(self, a):
        """Common degree of a homogeneous element, None for 0, error if mixed."""
        degs = {self.degrees[i] for i in a}
        if not degs:
            return None
        if len(degs) > 1:
            raise AlgebraError(f"element is not homogeneous: {self.render_elem(a)}")
        return degs.pop()

    def non_unit_indices(self):
        return [i for i in range(self.dim) if i != self.unit_idx]

    def render_elem(self, a):
        if not a:
            return "0"
        parts = []
        for i in sorted(a):
            c = a[i]
            lab = self.labels[i]
            cs = repr(c)
            if cs == "1":
                parts.append(lab)
            elif lab == self.labels[self.unit_idx]:
                parts.append(cs if ("+" not in cs[1:] and "-" not in cs[1:] and "/" not in cs) else f"({cs})")
            else:
                cs = cs if ("+" not in cs[1:] and "-" not in cs[1:] and "/" not in cs) else f"({cs})"
                parts.append(f"{cs}*{lab}")
        return " + ".join(parts)

    # -- verification -----------------------------------------------------

    def verify(self):
        """Exhaustive unit, degree-homogeneity and associativity checks."""
        u = self.unit_idx
        if any(self.degrees[u]):
            raise AlgebraError("unit must have degree zero")
        for i in range(self.dim):
            if self.mul_mon(u, i) != self.monomial(i):
                raise AlgebraError(f"1 * {self.labels[i]} != {self.labels[i]}")
            if self.mul_mon(i, u) != self.monomial(i):
                raise AlgebraError(f"{self.labels[i]} * 1 != {self.labels[i]}")
        for (i, j), prod in self.table.items():
            want = tuple(x + y for x, y in zip(self.degrees[i], self.degrees[j]))
            for k in prod:
                if self.degrees[k] != want:
                    raise AlgebraError(
                        f"product {self.labels[i]} * {self.labels[j]} is not "
                        f"homogeneous of degree {want}")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = self.multiply(self.mul_mon(i, j), self.monomial(k))
                    rhs = self.multiply(self.monomial(i), self.mul_mon(j, k))
                    if lhs != rhs:
                        raise AlgebraError(
                            "associativity fails on "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    # -- serialization ----------------------------------------------------

    def to_json(self, field_spec=None):
        products = []
        for (i, j) in sorted(self.table):
            terms = [{"coeff": repr(c), "basis": self.labels[k]}
                     for k, c in sorted(self.table[(i, j)].items())]
            products.append({"left": self.labels[i], "right": self.labels[j],
                             "terms": terms})
        out = {
            "format": 1,
            "name": self.name,
            "grading_rank": self.grading_rank,
            "basis": [{"label": lab, "degree": list(self.degrees[i])}
                      for i, lab in enumerate(self.labels)],
            "unit": self.labels[self.unit_idx],
            "products": products,
        }
        if field_spec is not None:
            out["field"] = field_spec.to_json()
        return out


def normalization_split(alg):
    """Split Lambda = k.1 (+) complement; returns (unit index, complement indices).

    Every basis monomial other than the unit spans the complement, so the
    section of Lambda -> Lambda/k.1 just drops the unit coordinate.
    """
    return alg.unit_idx, alg.non_unit_indices()


def parse_algebra(data, field=None):
    """Build a GradedAlgebra from its JSON presentation (dict or JSON text).

    The presentation carries its own field spec unless a field is passed in.
    Returns (algebra, field).
    """
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise AlgebraError("algebra presentation must be a JSON object")
    fmt = data.get("format", 1)
    if fmt != 1:
        raise AlgebraError(f"unsupported format {fmt!r}")
    if field is None:
        if "field" not in data:
            raise AlgebraError("algebra presentation is missing 'field'")
        field = FieldSpec.from_json(data["field"]).build()
    for key in ("basis", "unit", "products"):
        if key not in data:
            raise AlgebraError(f"algebra presentation is missing {key!r}")
    labels = []
    degrees = []
    for entry in data["basis"]:
        if "label" not in entry or "degree" not in entry:
            raise AlgebraError("basis entries need 'label' and 'degree'")
        labels.append(entry["label"])
        degrees.append(tuple(int(x) for x in entry["degree"]))
    rank = data.get("grading_rank")
    if rank is not None and degrees and len(degrees[0]) != rank:
        raise AlgebraError("grading_rank does not match degree vectors")
    index = {lab: i for i, lab in enumerate(labels)}
    table = {}
    unit = data["unit"]
    for prod in data["products"]:
        for key in ("left", "right", "terms"):
            if key not in prod:
                raise AlgebraError("product entries need 'left', 'right', 'terms'")
        if prod["left"] not in index or prod["right"] not in index:
            raise AlgebraError(
                f"product references unknown label "
                f"{prod['left']!r} * {prod['right']!r}")
        elem = {}
        for term in prod["terms"]:
            if term["basis"] not in index:
                raise AlgebraError(f"unknown basis label {term['basis']!r}")
            c = parse_scalar(term["coeff"], field)
            k = index[term["basis"]]
            v = elem.get(k, field.zero()) + c
            if v:
                elem[k] = v
            else:
                elem.pop(k, None)
        if elem:
            table[(index[prod["left"]], index[prod["right"]])] = elem
    if unit not in index:
        raise AlgebraError("unit not in basis")
    # unit products are implied if absent
    u = index[unit]
    for i in range(len(labels)):
        table.setdefault((u, i), {i: field.one()})
        table.setdefault((i, u), {i: field.one()})
    alg = GradedAlgebra(field, data.get("name", "algebra"), labels, degrees,
                        unit, table)
    alg.verify()
    return alg, field


# ----------------------------------------------------------------------
# builders

def truncated_poly(field, var, n, degree=None):
    """k[var]/(var^n), graded with |var| = degree (default the 1-tuple (1,))."""
    if n < 2:
        raise AlgebraError("truncation exponent must be >= 2")
    degree = tuple(degree) if degree is not None else (1,)
    labels = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, n)]
    degrees = [tuple(k * d for d in degree) for k in range(n)]
    table = {}
    one = field.one()
    for i in range(n):
        for j in range(n):
            if i + j < n:
                table[(i, j)] = {i + j: one}
    return GradedAlgebra(field, f"{var}^{n}-truncated", labels, degrees, "1",
                         table)


def twisted_tensor_algebra(r_alg, s_alg, twist, name=None):
    """Twisted tensor product R (x)^t S.

    Basis is the pairs (a, b) in R-major order; the product is
    (a (x) b)(a' (x) b') = t^<|a'| | |b|> aa' (x) bb'.  Labels concatenate
    the factor labels, dropping unit factors.
    """
    field = r_alg.field
    if s_alg.field.key() != field.key() or twist.field.key() != field.key():
        raise AlgebraError("factors and twist must share one field")
    if twist.m != r_alg.grading_rank or twist.n != s_alg.grading_rank:
        raise AlgebraError("twist shape must match the factor grading ranks")
    nr, ns = r_alg.dim, s_alg.dim

    def pair(i, j):
        return i * ns + j

    labels = []
    degrees = []
    for i in range(nr):
        for j in range(ns):
            if i == r_alg.unit_idx and j == s_alg.unit_idx:
                labels.append("1")
            elif j == s_alg.unit_idx:
                labels.append(r_alg.labels[i])
            elif i == r_alg.unit_idx:
                labels.append(s_alg.labels[j])
            else:
                labels.append(r_alg.labels[i] + s_alg.labels[j])
            degrees.append(tuple(r_alg.degrees[i]) + tuple(s_alg.degrees[j]))
    table = {}
    for i1 in range(nr):
        for j1 in range(ns):
            for i2 in range(nr):
                for j2 in range(ns):
                    rprod = r_alg.mul_mon(i1, i2)
                    if not rprod:
                        continue
                    sprod = s_alg.mul_mon(j1, j2)
                    if not sprod:
                        continue
                    t = twist.eval(r_alg.degrees[i2], s_alg.degrees[j1])
                    elem = {}
                    for a, ca in rprod.items():
                        for b, cb in sprod.items():
                            elem[pair(a, b)] = ca * cb * t
                    table[(pair(i1, j1), pair(i2, j2))] = elem
    name = name or f"{r_alg.name}(x)t{s_alg.name}"
    alg = GradedAlgebra(field, name, labels, degrees, "1", table)
    alg.factor_shape = (nr, ns)
    return alg


def pair_index(alg, i, j):
    """Basis index of (i, j) in a twisted tensor algebra."""
    return i * alg.factor_shape[1] + j


def split_index(alg, k):
    ns = alg.factor_shape[1]
    return divmod(k, ns)


def quantum_plane_algebra(field, q_scalar, name="lambda_q"):
    """k<x,y>/(x^2, y^2, xy + q yx) as a twisted tensor product of two
    dual-numbers algebras, with twist t(1,1) = -1/q."""
    kx = truncated_poly(field, "x", 2)
    ky = truncated_poly(field, "y", 2)
    twist = Twist([[-q_scalar.inv()]])
    return twisted_tensor_algebra(kx, ky, twist, name=name), kx, ky, twist
