"""Exact coefficient arithmetic.

Four families of coefficient fields are supported, all with unique
canonical representations so that equality is plain value equality:

* ``Q``          -- rational numbers (``fractions.Fraction``);
* ``Fp``         -- prime fields, optionally with a value assigned to the
                    symbol ``q``;
* ``Qq``         -- rational functions in a transcendental ``q`` over Q,
                    stored as reduced fractions of integer polynomials with
                    primitive, positive-leading-coefficient denominator;
* ``cyclotomic`` -- Q (or F_p) with a primitive r-th root of unity ``q``
                    adjoined, i.e. polynomials reduced mod the r-th
                    cyclotomic polynomial.

A :class:`Scalar` wraps a canonical raw value together with its field and
supports ordinary arithmetic operators.  :class:`Twist` evaluates a grading
bicharacter given as a matrix of invertible scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


# ----------------------------------------------------------------------
# polynomial helpers (coefficient sequences, lowest degree first)

def _trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def poly_neg(a):
    return tuple(-c for c in a)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def poly_divmod_frac(a, b):
    """Polynomial division over Q; inputs may mix ints and Fractions."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    binv = Fraction(1, 1) / Fraction(b[-1])
    while len(rem) >= len(b) and any(rem):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(b):
            break
        c = rem[-1] * binv
        k = len(rem) - len(b)
        quo[k] = c
        for i, cb in enumerate(b):
            rem[k + i] -= c * Fraction(cb)
        rem.pop()
    return _trim(quo), _trim(rem)


def poly_gcd_frac(a, b):
    """Monic gcd over Q."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod_frac(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(Fraction(c) / lead for c in a)


def _int_content(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g or 1


def _clear_denominators(a):
    """Fraction poly -> (integer poly, positive scale) with poly = intpoly/scale."""
    d = 1
    for c in a:
        d = lcm(d, Fraction(c).denominator)
    return tuple(int(Fraction(c) * d) for c in a), d


def cyclotomic_poly(r):
    """Integer coefficients of the r-th cyclotomic polynomial."""
    if r < 1:
        raise ValueError("r must be positive")
    # (q^r - 1) / prod of proper cyclotomic divisors
    num = tuple([-1] + [0] * (r - 1) + [1])
    for d in range(1, r):
        if r % d == 0:
            quo, rem = poly_divmod_frac(num, cyclotomic_poly(d))
            assert not rem
            num = tuple(int(c) for c in quo)
    return num


def _multiplicative_order(a, n):
    if gcd(a, n) != 1:
        return None
    k, x = 1, a % n
    while x != 1:
        x = (x * a) % n
        k += 1
    return k


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# ----------------------------------------------------------------------
# fields

class Field:
    """Base class; raw values are canonical hashable objects."""

    char = 0

    def key(self):
        raise NotImplementedError

    def zero(self):
        return Scalar(self, self._zero_raw())

    def one(self):
        return Scalar(self, self._one_raw())

    def from_int(self, n):
        return Scalar(self, self._from_int_raw(n))

    def q(self):
        """The scalar assigned to the symbol q, or None."""
        return None

    # raw arithmetic, implemented by subclasses
    def _zero_raw(self):
        return self._from_int_raw(0)

    def _one_raw(self):
        return self._from_int_raw(1)

    def _from_int_raw(self, n):
        raise NotImplementedError

    def _add_raw(self, a, b):
        raise NotImplementedError

    def _neg_raw(self, a):
        raise NotImplementedError

    def _mul_raw(self, a, b):
        raise NotImplementedError

    def _inv_raw(self, a):
        raise NotImplementedError

    def _render_raw(self, a):
        raise NotImplementedError

    def scalar_order_raw(self, a):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<Field {self.key()}>"


class RationalField(Field):
    def key(self):
        return ("Q",)

    def _from_int_raw(self, n):
        return Fraction(n)

    def _add_raw(self, a, b):
        return a + b

    def _neg_raw(self, a):
        return -a

    def _mul_raw(self, a, b):
        return a * b

    def _inv_raw(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def _render_raw(self, a):
        return str(a)

    def scalar_order_raw(self, a):
        if a == 1:
            return 1
        if a == -1:
            return 2
        return None


class PrimeField(Field):
    def __init__(self, p, q_value=None):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        if q_value is not None:
            q_value %= p
            if q_value == 0:
                raise ValueError("q must be nonzero")
        self.q_value = q_value

    def key(self):
        return ("Fp", self.p, self.q_value)

    def q(self):
        if self.q_value is None:
            return None
        return Scalar(self, self.q_value)

    def _from_int_raw(self, n):
        return n % self.p

    def _add_raw(self, a, b):
        return (a + b) % self.p

    def _neg_raw(self, a):
        return (-a) % self.p

    def _mul_raw(self, a, b):
        return (a * b) % self.p

    def _inv_raw(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _render_raw(self, a):
        return str(a)

    def scalar_order_raw(self, a):
        if a == 0:
            raise ZeroDivisionError("order of zero")
        for d in _divisors(self.p - 1):
            if pow(a, d, self.p) == 1:
                return d
        raise AssertionError("unreachable")


class RationalFunctionField(Field):
    """Q(q): raw values are (num, den) integer polynomial tuples."""

    def key(self):
        return ("Qq",)

    def q(self):
        return Scalar(self, ((0, 1), (1,)))

    def _normalize(self, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (1,))
        g = poly_gcd_frac(num, den)
        if len(g) > 1:
            num, _ = poly_divmod_frac(num, g)
            den, _ = poly_divmod_frac(den, g)
        num, sn = _clear_denominators(num)
        den, sd = _clear_denominators(den)
        # num/sn over den/sd -> (num*sd)/(den*sn), then primitive positive den
        num = tuple(c * sd for c in num)
        den = tuple(c * sn for c in den)
        cn, cd = _int_content(num), _int_content(den)
        g = gcd(cn, cd)
        num = tuple(c // g for c in num)
        den = tuple(c // g for c in den)
        # remaining denominator content folded into the numerator fractions?
        # keep it: canonical form is gcd-reduced with primitive positive den.
        cd = _int_content(den)
        if cd != 1:
            if all(c % cd == 0 for c in num):
                num = tuple(c // cd for c in num)
                den = tuple(c // cd for c in den)
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return (num, den)

    def _from_int_raw(self, n):
        return ((n,) if n else (), (1,))

    def _add_raw(self, a, b):
        return self._normalize(poly_add(poly_mul(a[0], b[1]), poly_mul(b[0], a[1])),
                               poly_mul(a[1], b[1]))

    def _neg_raw(self, a):
        return (poly_neg(a[0]), a[1])

    def _mul_raw(self, a, b):
        return self._normalize(poly_mul(a[0], b[0]), poly_mul(a[1], b[1]))

    def _inv_raw(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self._normalize(a[1], a[0])

    def _render_raw(self, a):
        num = _poly_str(a[0])
        if a[1] == (1,):
            return num
        return f"({num})/({_poly_str(a[1])})"

    def scalar_order_raw(self, a):
        if not a[0]:
            raise ZeroDivisionError("order of zero")
        if a == ((1,), (1,)):
            return 1
        if a == ((-1,), (1,)):
            return 2
        return None


class CyclotomicField(Field):
    """k(zeta_r) for k = Q or F_p; raw values are coefficient tuples mod Phi_r.

    Over F_p the r-th cyclotomic polynomial must stay irreducible, which
    holds exactly when p has multiplicative order phi(r) modulo r.
    """

    def __init__(self, r, p=None):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.p = p
        self.modulus = cyclotomic_poly(r)
        self.degree = len(self.modulus) - 1
        if p is not None:
            PrimeField(p)  # primality check
            self.char = p
            if r % p == 0:
                raise ValueError(f"r = {r} not coprime to p = {p}")
            if _multiplicative_order(p, r) != self.degree:
                raise ValueError(
                    f"cyclotomic polynomial of order {r} is reducible mod {p}")

    def key(self):
        return ("cyclotomic", self.r, self.p)

    def q(self):
        if self.degree == 1:
            # q is rational: Phi_1 = q - 1, Phi_2 = q + 1
            return self.from_int(1 if self.r == 1 else -1)
        return Scalar(self, self._reduce((self._cf(0), self._cf(1))))

    def _cf(self, n):
        return n % self.p if self.p is not None else Fraction(n)

    def _reduce(self, coeffs):
        c = list(coeffs)
        m = self.modulus
        d = self.degree
        while len(c) > d:
            top = c.pop()
            if not top:
                continue
            if self.p is not None:
                top %= self.p
            k = len(c) - d
            for i in range(d):
                c[k + i] -= top * m[i]
        if self.p is not None:
            c = [x % self.p for x in c]
        else:
            c = [Fraction(x) for x in c]
        while c and not c[-1]:
            c.pop()
        return tuple(c)

    def _from_int_raw(self, n):
        return self._reduce((self._cf(n),))

    def _add_raw(self, a, b):
        return self._reduce(poly_add(a, b))

    def _neg_raw(self, a):
        if self.p is not None:
            return tuple((-c) % self.p for c in a)
        return poly_neg(a)

    def _mul_raw(self, a, b):
        return self._reduce(poly_mul(a, b))

    def _inv_raw(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        # extended euclid in k[q] against the modulus
        if self.p is None:
            r0, r1 = tuple(Fraction(c) for c in self.modulus), a
            s0, s1 = (), (self._cf(1),)
            while r1:
                q, r = poly_divmod_frac(r0, r1)
                r0, r1 = r1, r
                s0, s1 = s1, poly_add(s0, poly_neg(poly_mul(q, s1)))
            inv_lead = Fraction(1) / Fraction(r0[-1])
            assert len(r0) == 1
            return self._reduce(tuple(Fraction(c) * inv_lead for c in s0))
        r0, r1 = self.modulus, a
        s0, s1 = (), (1,)
        p = self.p
        while r1:
            q, r = _ppoly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _trim([(x - y) % p for x, y in _zip_pad(s0, _ppoly_mul(q, s1, p))])
        assert len(r0) == 1
        inv_lead = pow(r0[0], p - 2, p)
        return self._reduce(tuple((c * inv_lead) % p for c in s0))

    def _render_raw(self, a):
        return _poly_str(a)

    def scalar_order_raw(self, a):
        if not a:
            raise ZeroDivisionError("order of zero")
        if self.p is not None:
            bound = self.p ** self.degree - 1
        else:
            bound = lcm(2, self.r)
        one = self._one_raw()
        for d in _divisors(bound):
            x = one
            for _ in range(d):
                x = self._mul_raw(x, a)
            if x == one:
                return d
        return None


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)) for i in range(n)]


def _ppoly_mul(a, b, p):
    return tuple(c % p for c in poly_mul(a, b))


def _ppoly_divmod(a, b, p):
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    binv = pow(b[-1], p - 2, p)
    while len(rem) >= len(b):
        while rem and rem[-1] % p == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        c = (rem[-1] * binv) % p
        k = len(rem) - len(b)
        quo[k] = c
        for i, cb in enumerate(b):
            rem[k + i] = (rem[k + i] - c * cb) % p
        rem.pop()
    return _trim(quo), _trim([c % p for c in rem])


def _poly_str(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            body = str(abs(c) if not isinstance(c, Fraction) else abs(c))
        else:
            mag = abs(c)
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = ("-" if sign == "-" else "") + body
        else:
            out += f" {sign} {body}"
    return out


# ----------------------------------------------------------------------
# scalars

class Scalar:
    """An element of a :class:`Field`, in canonical form."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field.key() != self.field.key():
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add_raw(self.raw, other.raw))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg_raw(self.raw))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add_raw(self.raw, self.field._neg_raw(other.raw)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul_raw(self.raw, other.raw))

    __rmul__ = __mul__

    def inv(self):
        return Scalar(self.field, self.field._inv_raw(self.raw))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        n = abs(n)
        acc = self.field.one()
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __bool__(self):
        return self.raw != self.field._zero_raw()

    def is_one(self):
        return self.raw == self.field._one_raw()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field.key() == other.field.key() and self.raw == other.raw

    def __hash__(self):
        return hash((self.field.key(), self.raw))

    def __repr__(self):
        return self.field._render_raw(self.raw)


def scalar_order(s):
    """Least n >= 1 with s^n = 1, or None for infinite order.

    The search is bounded by the field structure: roots of unity in Q and
    Q(q) are only +-1, in a cyclotomic field their order divides lcm(2, r),
    and in a finite field it divides the group order.
    """
    if not s:
        raise ZeroDivisionError("order of zero")
    return s.field.scalar_order_raw(s.raw)


# ----------------------------------------------------------------------
# scalar literal parsing

class ScalarParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch == "q":
            tokens.append(("q", None))
            i += 1
        elif ch in "+-*/^()":
            tokens.append((ch, None))
            i += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r} in scalar literal")
    return tokens


class _ScalarParser:
    def __init__(self, tokens, field):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ScalarParseError("unexpected end of scalar literal")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ScalarParseError(f"expected {kind!r}, got {tok[0]!r}")
        self.pos += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            n = self.take("int")[1]
            return base ** (-n if neg else n)
        return base

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return self.field.from_int(self.take()[1])
        if kind == "q":
            self.take()
            qv = self.field.q()
            if qv is None:
                raise ScalarParseError("the symbol q has no value in this field")
            return qv
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        raise ScalarParseError(f"unexpected token {kind!r} in scalar literal")


def parse_scalar(text, field):
    """Parse a scalar literal like ``-1/2``, ``q^2+1`` or ``-1/q``."""
    parser = _ScalarParser(_tokenize(str(text)), field)
    val = parser.expr()
    if parser.pos != len(parser.tokens):
        raise ScalarParseError(f"trailing input in scalar literal {text!r}")
    return val


# ----------------------------------------------------------------------
# field specifications

@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of a coefficient field.

    kind is one of ``Q``, ``Fp``, ``Qq``, ``cyclotomic``; ``p`` accompanies
    ``Fp`` (and optionally ``cyclotomic``, giving F_p with a primitive r-th
    root adjoined); ``q`` optionally assigns a value to the symbol q in a
    prime field.
    """

    kind: str
    p: int | None = None
    r: int | None = None
    q: str | None = None

    def build(self):
        if self.kind == "Q":
            return RationalField()
        if self.kind == "Fp":
            if self.p is None:
                raise ValueError("Fp spec requires p")
            fld = PrimeField(self.p)
            if self.q is not None:
                qv = parse_scalar(self.q, fld)
                if not qv:
                    raise ValueError("q must be nonzero")
                fld = PrimeField(self.p, q_value=qv.raw)
            return fld
        if self.kind == "Qq":
            return RationalFunctionField()
        if self.kind == "cyclotomic":
            if self.r is None:
                raise ValueError("cyclotomic spec requires r")
            return CyclotomicField(self.r, p=self.p)
        raise ValueError(f"unknown field kind {self.kind!r}")

    def to_json(self):
        out = {"kind": self.kind}
        if self.p is not None:
            out["p"] = self.p
        if self.r is not None:
            out["r"] = self.r
        if self.q is not None:
            out["q"] = self.q
        return out

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError("field spec must be an object with a 'kind'")
        return cls(kind=data["kind"], p=data.get("p"), r=data.get("r"),
                   q=data.get("q"))


# ----------------------------------------------------------------------
# twists

class Twist:
    """A bicharacter Z^m x Z^n -> k^x given by a matrix of invertible scalars."""

    def __init__(self, entries):
        if not entries or not entries[0]:
            raise ValueError("twist matrix must be nonempty")
        self.entries = [list(row) for row in entries]
        self.m = len(entries)
        self.n = len(entries[0])
        for row in self.entries:
            if len(row) != self.n:
                raise ValueError("ragged twist matrix")
            for s in row:
                if not s:
                    raise ValueError("twist entries must be invertible")
        self.field = self.entries[0][0].field

    def eval(self, a, b):
        """t^<a|b> = prod t_uv^(a_u b_v)."""
        if len(a) != self.m or len(b) != self.n:
            raise ValueError(
                f"twist dimension mismatch: got |a|={len(a)}, |b|={len(b)}, "
                f"expected {self.m}, {self.n}")
        out = self.field.one()
        for u, au in enumerate(a):
            if not au:
                continue
            for v, bv in enumerate(b):
                if not bv:
                    continue
                out = out * (self.entries[u][v] ** (au * bv))
        return out

    def eval_inv(self, a, b):
        return self.eval(a, b).inv()

    @classmethod
    def trivial(cls, field, m, n):
        return cls([[field.one()] * n for _ in range(m)])

    def is_trivial(self):
        return all(s.is_one() for row in self.entries for s in row)
