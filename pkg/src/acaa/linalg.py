"""Dense exact matrices, reduced echelon forms and canonical subspaces.

All arithmetic goes through field elements (`Fraction` or `FpElement`), so
rank, kernel and span computations are exact over Q and over F_p.  A
subspace is always stored through its reduced row-echelon basis, which
makes subspace equality a syntactic comparison.
"""


def _rref(field, rows):
    """Reduced row echelon form of a list of row lists.  Returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class Matrix:
    """Immutable dense matrix over one exact field."""

    __slots__ = ("field", "entries", "nrows", "ncols")

    def __init__(self, field, entries):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged rows")
        self.field = field
        self.entries = entries
        self.nrows = len(entries)
        self.ncols = len(entries[0]) if entries else 0

    @classmethod
    def build(cls, field, rows):
        """Construct while coercing ints / literals into field elements."""
        return cls(field, [[field.coerce(v) for v in row] for row in rows])

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def _same_field(self, other):
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.field.zero
        out = []
        for row in self.entries:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = other.entries[k]
                acc = [s + a * b for s, b in zip(acc, orow)]
            out.append(acc)
        return Matrix(self.field, out)

    def scale(self, scalar):
        scalar = self.field.coerce(scalar)
        return Matrix(self.field, [[scalar * a for a in row] for row in self.entries])

    def apply(self, vec):
        """Matrix-vector product, vec given as a sequence of field elements."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero
        out = []
        for row in self.entries:
            s = zero
            for a, v in zip(row, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return tuple(out)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.entries)) if self.entries else [])

    def rref(self):
        rows, pivots = _rref(self.field, self.entries)
        return Matrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        _, pivots = _rref(self.field, self.entries)
        return len(pivots)

    def kernel_vectors(self):
        """A basis of the right kernel (one vector per free column)."""
        rows, pivots = _rref(self.field, self.entries)
        zero, one = self.field.zero, self.field.one
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [zero] * self.ncols
            v[free] = one
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][free]
            basis.append(tuple(v))
        return basis

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        aug = [list(r) + list(i) for r, i in zip(self.entries, ident.entries)]
        rows, pivots = _rref(self.field, aug)
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in rows])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field == self.field
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"Matrix({self.field}, [{body}])"


class Subspace:
    """A linear subspace held through its canonical reduced-echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim, basis_rows):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis_rows)
        if any(len(r) != ambient_dim for r in self.basis):
            raise ValueError("basis vector length differs from ambient dimension")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        v = list(vec)
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if x)
            if v[lead]:
                f = v[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.field == self.field
                and other.ambient_dim == self.ambient_dim and other.basis == self.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim} over {self.field})"


def span(field, vectors, ambient_dim) -> Subspace:
    """Linear hull of the given row vectors, in canonical echelon form."""
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    if not vectors:
        return Subspace(field, ambient_dim, [])
    rows, pivots = _rref(field, vectors)
    return Subspace(field, ambient_dim, rows[:len(pivots)])


def rank_kernel(m: Matrix):
    """Rank of m together with its right kernel as a canonical subspace."""
    rank = m.rank()
    kernel = span(m.field, m.kernel_vectors(), m.ncols)
    return rank, kernel


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    if a.field != b.field:
        raise ValueError("subspaces over different fields")
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return a == b


def random_matrix(field, nrows, ncols, rng, lo=-3, hi=3) -> Matrix:
    return Matrix(field, [[field.from_int(rng.randint(lo, hi)) for _ in range(ncols)]
                          for _ in range(nrows)])


def random_invertible(field, n, rng, lo=-3, hi=3) -> Matrix:
    """Seeded random invertible matrix (resampled until full rank)."""
    while True:
        m = random_matrix(field, n, n, rng, lo, hi)
        if m.rank() == n:
            return m
