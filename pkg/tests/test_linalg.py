from hypothesis import given, settings
from hypothesis import strategies as st

from hhtwist.fields import PrimeField, RationalField
from hhtwist.linalg import SparseMatrix, extend_basis, vectors_rank

Q = RationalField()
F5 = PrimeField(5)


def matrices(field, max_dim=5):
    def build(rows, cols, ents):
        m = SparseMatrix(field, rows, cols)
        for (r, c, v) in ents:
            m.set(r % rows if rows else 0, c % cols if cols else 0,
                  field.from_int(v))
        return m
    return st.builds(
        build,
        st.integers(1, max_dim), st.integers(1, max_dim),
        st.lists(st.tuples(st.integers(0, max_dim - 1),
                           st.integers(0, max_dim - 1),
                           st.integers(-4, 4)), max_size=12))


@settings(max_examples=80, deadline=None)
@given(m=matrices(Q))
def test_rank_nullity(m):
    ker = m.kernel_basis()
    assert m.rank() + len(ker) == m.cols
    for v in ker:
        assert not m.apply(v)
    assert vectors_rank(Q, m.cols, ker) == len(ker)


@settings(max_examples=80, deadline=None)
@given(m=matrices(F5), data=st.data())
def test_solve_consistent_system(m, data):
    """A x for random x must be solvable, and the solution verified."""
    x = {c: F5.from_int(data.draw(st.integers(-4, 4)))
         for c in range(m.cols)}
    x = {c: v for c, v in x.items() if v}
    rhs = m.apply(x)
    sol = m.solve(rhs)
    assert sol is not None
    assert m.apply(sol) == rhs


def test_solve_inconsistent():
    m = SparseMatrix(Q, 2, 1)
    m.set(0, 0, Q.one())
    assert m.solve({1: Q.one()}) is None


def test_deterministic_kernel():
    ents = {(0, 0): Q.one(), (0, 1): Q.from_int(2), (0, 2): Q.from_int(3)}
    k1 = SparseMatrix(Q, 1, 3, ents).kernel_basis()
    k2 = SparseMatrix(Q, 1, 3, ents).kernel_basis()
    assert [sorted(v.items()) for v in k1] == [sorted(v.items()) for v in k2]


def test_extend_basis():
    # coboundary space = span{e0+e1}; cocycles = span{e0+e1, e2}
    one = Q.one()
    inner = [{0: one, 1: one}]
    ambient = [{0: one, 1: one}, {2: one}]
    picked = extend_basis(Q, 3, inner, ambient)
    assert picked == [1]
    # inner empty: everything gets picked
    assert extend_basis(Q, 3, [], ambient) == [0, 1]
