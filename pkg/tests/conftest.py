import pytest

from hhtwist.fields import (CyclotomicField, PrimeField, RationalField,
                            RationalFunctionField)
from hhtwist.qci import build_case, classify

# (field factory, q picker, default max degree) per regime
_CASES = {
    "generic": (RationalFunctionField, "q", 6),
    "neg1": (RationalField, "-1", 7),
    "q1": (RationalField, "1", 6),
    "char2_q1": (lambda: PrimeField(2), "1", 6),
    "odd_root": (lambda: CyclotomicField(3), "q", 13),
    "even_i": (lambda: CyclotomicField(4), "q", 9),
    "f4": (lambda: CyclotomicField(3, p=2), "q", 7),
}


def make_case(key):
    mk, qexpr, n = _CASES[key]
    field = mk()
    q = (field.q() if qexpr == "q"
         else field.one() if qexpr == "1" else -field.one())
    return classify(field, q), n


@pytest.fixture(scope="session")
def builds():
    """Lazy session cache of QciBuild instances keyed by regime."""
    cache = {}

    def get(key, max_degree=None, phi="qci"):
        case, n = make_case(key)
        deg = max_degree if max_degree is not None else n
        ck = (key, deg, phi)
        if ck not in cache:
            cache[ck] = build_case(case, max_degree=deg, phi=phi)
        return cache[ck]

    return get
