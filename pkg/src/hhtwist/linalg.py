"""Deterministic sparse linear algebra over an exact field.

Gaussian elimination with a fixed pivot rule (first nonzero entry in the
lowest-index column, breaking ties by lowest row index) so that kernel
bases and particular solutions are reproducible across runs.
"""

from __future__ import annotations


class SparseMatrix:
    """Sparse matrix with entries indexed by (row, col)."""

    def __init__(self, field, rows, cols, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    def set(self, r, c, v):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        if v:
            self.entries[(r, c)] = v
        else:
            self.entries.pop((r, c), None)

    def get(self, r, c):
        return self.entries.get((r, c), self.field.zero())

    def add_to(self, r, c, v):
        self.set(r, c, self.get(r, c) + v)

    @classmethod
    def from_columns(cls, field, rows, columns):
        """columns: list of {row: Scalar} dicts."""
        m = cls(field, rows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                m.set(r, c, v)
        return m

    def column(self, c):
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def apply(self, vec):
        """Matrix times a sparse column vector {col: Scalar} -> {row: Scalar}."""
        out = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                w = out.get(r, self.field.zero()) + v * vec[c]
                if w:
                    out[r] = w
                else:
                    out.pop(r, None)
        return out

    def _row_echelon(self):
        """Reduced row echelon form; returns (rows as col->Scalar dicts, pivots).

        pivots is a list of (row_index_in_output, column) pairs in column order.
        """
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        pivots = []
        used = [False] * self.rows
        for col in range(self.cols):
            pivot = None
            for r in range(self.rows):
                if not used[r] and col in rows[r]:
                    pivot = r
                    break
            if pivot is None:
                continue
            used[pivot] = True
            inv = rows[pivot][col].inv()
            rows[pivot] = {c: v * inv for c, v in rows[pivot].items()}
            prow = rows[pivot]
            for r in range(self.rows):
                if r != pivot and col in rows[r]:
                    factor = rows[r][col]
                    row = rows[r]
                    for c, v in prow.items():
                        w = row.get(c, self.field.zero()) - factor * v
                        if w:
                            row[c] = w
                        else:
                            row.pop(c, None)
            pivots.append((pivot, col))
        return rows, pivots

    def rank(self):
        return len(self._row_echelon()[1])

    def kernel_basis(self):
        """Basis of the null space as sparse {col: Scalar} vectors.

        One basis vector per free column, with a 1 in the free column; the
        result is deterministic given the pivot rule.
        """
        rows, pivots = self._row_echelon()
        pivot_cols = {c: r for r, c in pivots}
        free_cols = [c for c in range(self.cols) if c not in pivot_cols]
        basis = []
        one = self.field.one()
        for fc in free_cols:
            vec = {fc: one}
            for c, r in pivot_cols.items():
                v = rows[r].get(fc)
                if v:
                    vec[c] = -v
            basis.append(vec)
        return basis

    def solve(self, rhs):
        """A particular solution x (free variables 0) of Ax = rhs, or None.

        rhs is a sparse {row: Scalar} dict.
        """
        aug = SparseMatrix(self.field, self.rows, self.cols + 1, dict(self.entries))
        for r, v in rhs.items():
            aug.set(r, self.cols, v)
        rows, pivots = aug._row_echelon()
        sol = {}
        for r, c in pivots:
            if c == self.cols:
                return None  # inconsistent
            v = rows[r].get(self.cols)
            if v:
                sol[c] = v
        # verify (cheap insurance against pivoting bugs)
        check = self.apply(sol)
        if check != {r: v for r, v in rhs.items() if v}:
            raise AssertionError("solver produced an invalid solution")
        return sol


def vectors_rank(field, dim, vectors):
    """Rank of a list of sparse {index: Scalar} vectors."""
    return SparseMatrix.from_columns(field, dim, vectors).rank()


def extend_basis(field, dim, base, candidates):
    """Greedily pick candidates that extend span(base); returns picked indices."""
    chosen = list(base)
    picked = []
    rank = vectors_rank(field, dim, chosen) if chosen else 0
    for i, v in enumerate(candidates):
        trial = chosen + [v]
        r = vectors_rank(field, dim, trial)
        if r > rank:
            chosen = trial
            rank = r
            picked.append(i)
    return picked
