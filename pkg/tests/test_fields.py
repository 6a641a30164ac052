from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhtwist.fields import (CyclotomicField, FieldSpec, PrimeField,
                            RationalField, RationalFunctionField, Twist,
                            parse_scalar, scalar_order)

FIELDS = {
    "Q": RationalField(),
    "F5": PrimeField(5),
    "Qq": RationalFunctionField(),
    "C3": CyclotomicField(3),
    "C4": CyclotomicField(4),
    "F4": CyclotomicField(3, p=2),
}


def scalars(field):
    """Small random scalars: integer combinations of 1 and q (when present)."""
    def build(a, b):
        s = field.from_int(a)
        if hasattr(field, "q"):
            try:
                s = s + field.q() * field.from_int(b)
            except Exception:
                pass
        return s
    return st.builds(build, st.integers(-6, 6), st.integers(-6, 6))


@pytest.mark.parametrize("name", sorted(FIELDS))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(name, data):
    field = FIELDS[name]
    a = data.draw(scalars(field))
    b = data.draw(scalars(field))
    c = data.draw(scalars(field))
    zero, one = field.zero(), field.one()
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + zero == a
    assert a + (-a) == zero
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one == a
    assert a * (b + c) == a * b + a * c
    if a:
        inv = one / a
        assert a * inv == one


@pytest.mark.parametrize("name", sorted(FIELDS))
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_scalar_repr_parses_back(name, data):
    field = FIELDS[name]
    a = data.draw(scalars(field))
    assert parse_scalar(repr(a), field) == a


def test_parse_scalar_grammar():
    Q = FIELDS["Q"]
    assert parse_scalar("2 + 3*4", Q) == Q.from_int(14)
    assert parse_scalar("-(1 - 3)/2", Q) == Q.one()
    assert parse_scalar("2^3", Q) == Q.from_int(8)
    Qq = FIELDS["Qq"]
    q = Qq.q()
    assert parse_scalar("q^2 - 1", Qq) == q * q - Qq.one()
    assert parse_scalar("1/q", Qq) * q == Qq.one()
    with pytest.raises(ValueError):
        parse_scalar("q", Q)
    with pytest.raises(ValueError):
        parse_scalar("2 +", Q)


def test_scalar_order():
    Q = FIELDS["Q"]
    assert scalar_order(Q.one()) == 1
    assert scalar_order(-Q.one()) == 2
    assert scalar_order(Q.from_int(3)) is None
    assert scalar_order(FIELDS["Qq"].q()) is None
    assert scalar_order(FIELDS["C3"].q()) == 3
    assert scalar_order(FIELDS["C4"].q()) == 4
    assert scalar_order(FIELDS["F4"].q()) == 3
    f7 = PrimeField(7)
    assert scalar_order(f7.from_int(2)) == 3  # 2^3 = 8 = 1 mod 7


def test_cyclotomic_relations():
    C3 = FIELDS["C3"]
    z = C3.q()
    # 1 + z + z^2 = 0 and z^3 = 1
    assert z * z + z + C3.one() == C3.zero()
    assert z ** 3 == C3.one()
    F4 = FIELDS["F4"]
    w = F4.q()
    assert w ** 3 == F4.one()
    assert w ** 2 + w + F4.one() == F4.zero()  # x^2+x+1 over F_2
    assert F4.char == 2


def test_rational_function_normalization():
    Qq = FIELDS["Qq"]
    q = Qq.q()
    a = (q * q - Qq.one()) / (q - Qq.one())
    assert a == q + Qq.one()  # common factor cancelled
    assert repr(a) == repr(q + Qq.one())


def test_field_spec_round_trip():
    specs = [FieldSpec("Q"), FieldSpec("Fp", p=5), FieldSpec("Qq"),
             FieldSpec("cyclotomic", r=3), FieldSpec("cyclotomic", r=3, p=2),
             FieldSpec("Fp", p=7, q="2")]
    for sp in specs:
        sp2 = FieldSpec.from_json(sp.to_json())
        assert sp2 == sp
        f1, f2 = sp.build(), sp2.build()
        assert repr(f1.one() + f1.one()) == repr(f2.one() + f2.one())
    with pytest.raises(ValueError):
        FieldSpec("Fp").build()
    with pytest.raises(ValueError):
        FieldSpec("nope").build()


@settings(max_examples=40, deadline=None)
@given(a1=st.integers(-3, 3), a2=st.integers(-3, 3),
       b1=st.integers(-3, 3), b2=st.integers(-3, 3))
def test_twist_bicharacter(a1, a2, b1, b2):
    """t^<a+a'|b> = t^<a|b> t^<a'|b> and symmetrically; inverse matches."""
    C = CyclotomicField(4)
    t = Twist([[C.q()]])
    a, ap, b = (a1,), (a2,), (b1,)
    assert t.eval((a1 + a2,), b) == t.eval(a, b) * t.eval(ap, b)
    assert t.eval(a, (b1 + b2,)) == t.eval(a, (b1,)) * t.eval(a, (b2,))
    assert t.eval(a, b) * t.eval_inv(a, b) == C.one()


def test_twist_triviality():
    Q = RationalField()
    assert Twist.trivial(Q, 1, 1).is_trivial()
    assert not Twist([[-Q.one()]]).is_trivial()
    with pytest.raises(ValueError):
        Twist([[Q.zero()]])
