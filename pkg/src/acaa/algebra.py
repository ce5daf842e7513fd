"""Structure-constant algebras over exact fields.

An algebra is a tensor c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
This module holds product evaluation, polarization, the identity checkers
(anticommutativity, the cyclic triple-bracket law, Jacobi, the general
12-term quadratic family, rho-associativity, admissibility) and the
isomorphism-invariant fingerprint.

Checkers return None when the identity holds, otherwise the first
violating tuple of basis indices in lexicographic order.
"""

from dataclasses import dataclass

from .linalg import Matrix, span

# Order of the twelve degree-3 monomials in the general quadratic identity:
# first the left-bracketed products (x_a x_b) x_c, then the right-bracketed
# x_a (x_b x_c), with (a, b, c) running through TRIPLE_PERMS in both blocks.
TRIPLE_PERMS = ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2))


def perm_sign(seq) -> int:
    """Signature of a sequence of distinct comparable items."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


class Algebra:
    """A finite-dimensional bilinear product held as structure constants.

    ``symmetry="skew"`` promises an anticommutative tensor; that promise is
    validated at construction time.
    """

    __slots__ = ("field", "dim", "tensor", "labels", "symmetry", "name", "_nz")

    def __init__(self, field, dim, tensor, labels=None, symmetry="none", name=None):
        tensor = tuple(tuple(tuple(row) for row in plane) for plane in tensor)
        if len(tensor) != dim or any(len(p) != dim for p in tensor) or any(
                len(r) != dim for p in tensor for r in p):
            raise ValueError("tensor shape does not match dimension")
        if symmetry not in ("none", "skew"):
            raise ValueError(f"unknown symmetry hint {symmetry!r}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("label count does not match dimension")
        self.field = field
        self.dim = dim
        self.tensor = tensor
        self.labels = labels
        self.symmetry = symmetry
        self.name = name
        self._nz = tuple(tuple(tuple((k, c) for k, c in enumerate(row) if c)
                               for row in plane) for plane in tensor)
        if symmetry == "skew":
            w = check_anticommutative(self)
            if w is not None:
                raise ValueError(f"tensor marked skew but fails at basis pair {w}")

    @classmethod
    def from_products(cls, field, dim, products, labels=None, skew=False, name=None):
        """Build from a sparse table {(i, j): {k: value}}.

        With ``skew=True`` only pairs i < j may appear; the flipped products
        and the zero diagonal are filled in automatically.
        """
        zero = field.zero
        tensor = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product index ({i}, {j}) out of range")
            if skew and i >= j:
                raise ValueError(f"skew table must only list pairs i < j, got ({i}, {j})")
            for k, v in row.items():
                k = int(k)
                if not 0 <= k < dim:
                    raise ValueError(f"coordinate index {k} out of range")
                c = field.coerce(v)
                tensor[i][j][k] = c
                if skew:
                    tensor[j][i][k] = -c
        return cls(field, dim, tensor, labels=labels,
                   symmetry="skew" if skew else "none", name=name)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i + 1}"

    def product(self, i: int, j: int):
        """Coordinates of e_i * e_j."""
        return self.tensor[i][j]

    def nonzero(self, i: int, j: int):
        """Nonzero coordinates of e_i * e_j as (index, coefficient) pairs."""
        return self._nz[i][j]

    def multiply_coords(self, x, y):
        zero = self.field.zero
        acc = [zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            nz_i = self._nz[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                s = xi * yj
                for k, c in nz_i[j]:
                    acc[k] = acc[k] + s * c
        return tuple(acc)

    def basis(self, i: int) -> "Element":
        zero, one = self.field.zero, self.field.one
        return Element(self, tuple(one if k == i else zero for k in range(self.dim)))

    def element(self, coords) -> "Element":
        coords = tuple(self.field.coerce(v) for v in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate count does not match dimension")
        return Element(self, coords)

    def zero_element(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements do not belong to this algebra")
        return Element(self, self.multiply_coords(x.coords, y.coords))

    def __eq__(self, other):
        return (isinstance(other, Algebra) and other.field == self.field
                and other.dim == self.dim and other.tensor == self.tensor)

    def __hash__(self):
        return hash((self.field, self.dim))

    def __repr__(self):
        name = self.name or "algebra"
        return f"Algebra({name}, dim {self.dim} over {self.field})"


class Element:
    """A coordinate vector attached to its algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _same_algebra(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._same_algebra(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same_algebra(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        scalar = self.algebra.field.coerce(scalar)
        return Element(self.algebra, tuple(scalar * a for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            lbl = self.algebra.label(i)
            terms.append(lbl if c == self.algebra.field.one else f"{c}*{lbl}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class QuadIdentityCoeffs:
    """Coefficients (a_1..a_6, b_1..b_6) of the 12-term quadratic identity.

    a_i weight the left-bracketed monomials (x_a x_b) x_c and b_i the
    right-bracketed x_a (x_b x_c), both in TRIPLE_PERMS order.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != 6 or len(self.b) != 6:
            raise ValueError("need exactly six left and six right coefficients")

    @classmethod
    def build(cls, field, a, b):
        return cls(tuple(field.coerce(v) for v in a), tuple(field.coerce(v) for v in b))


def jacobi_coeffs(field) -> QuadIdentityCoeffs:
    """x1(x2x3) + x2(x3x1) + x3(x1x2) = 0."""
    return QuadIdentityCoeffs.build(field, (0,) * 6, (1, 0, 0, 0, 1, 1))


def acaa_coeffs(field) -> QuadIdentityCoeffs:
    """x1(x2x3) - x2(x3x1) = 0, the cyclic triple-bracket law."""
    return QuadIdentityCoeffs.build(field, (0,) * 6, (1, 0, 0, 0, -1, 0))


def antiassociativity_coeffs(field) -> QuadIdentityCoeffs:
    """(x1x2)x3 + x1(x2x3) = 0."""
    return QuadIdentityCoeffs.build(field, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0))


def quadratic_identity_value(A: Algebra, coeffs: QuadIdentityCoeffs, x, y, z) -> Element:
    """Evaluate the 12-term sum at elements (x, y, z)."""
    xs = (x, y, z)
    total = A.zero_element()
    for idx, (a, b, c) in enumerate(TRIPLE_PERMS):
        ca = coeffs.a[idx]
        if ca:
            total = total + ca * ((xs[a - 1] * xs[b - 1]) * xs[c - 1])
        cb = coeffs.b[idx]
        if cb:
            total = total + cb * (xs[a - 1] * (xs[b - 1] * xs[c - 1]))
    return total


def check_anticommutative(A: Algebra):
    """None, or the first basis pair (i, j) violating x*y = -y*x."""
    for i in range(A.dim):
        for j in range(A.dim):
            if i == j:
                if any(A.tensor[i][i]):
                    return (i, i)
            elif any(a + b for a, b in zip(A.tensor[i][j], A.tensor[j][i])):
                return (i, j)
    return None


def _bracket_into(A, i, pairs, acc, negate=False):
    # acc += [e_i, v] where v is given sparsely as (index, coeff) pairs
    nz_i = A._nz[i]
    for m, c in pairs:
        for k, c2 in nz_i[m]:
            t = c * c2
            acc[k] = acc[k] - t if negate else acc[k] + t
    return acc


def check_acaa(A: Algebra):
    """None, or the first triple (i, j, k) violating the linearized law
    [e_i, [e_j, e_k]] + [e_k, [e_j, e_i]] = 0.

    Requires an anticommutative algebra over a field of characteristic
    different from 2; under those hypotheses the linearized law is
    equivalent to [x, [y, x]] = 0 for all elements.
    """
    if A.field.characteristic == 2:
        raise ValueError("the linearized check is not valid in characteristic 2")
    w = check_anticommutative(A)
    if w is not None:
        raise ValueError(f"precondition failed: not anticommutative at basis pair {w}")
    zero = A.field.zero
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                acc = [zero] * A.dim
                _bracket_into(A, i, A._nz[j][k], acc)
                _bracket_into(A, k, A._nz[j][i], acc)
                if any(acc):
                    return (i, j, k)
    return None


def check_quadratic_identity(A: Algebra, coeffs: QuadIdentityCoeffs):
    """None, or the first basis triple where the 12-term sum is nonzero.

    Multilinearity makes checking on basis triples sufficient.
    """
    for i in range(A.dim):
        ei = A.basis(i)
        for j in range(A.dim):
            ej = A.basis(j)
            for k in range(A.dim):
                if quadratic_identity_value(A, coeffs, ei, ej, A.basis(k)):
                    return (i, j, k)
    return None


def polarize(A: Algebra):
    """Split the product into its antisymmetric and symmetric parts.

    Returns (minus, plus) with minus[i][j] = c[i][j] - c[j][i] (carrying the
    skew hint) and plus[i][j] = c[i][j] + c[j][i].
    """
    t = A.tensor
    minus = [[[a - b for a, b in zip(t[i][j], t[j][i])] for j in range(A.dim)]
             for i in range(A.dim)]
    plus = [[[a + b for a, b in zip(t[i][j], t[j][i])] for j in range(A.dim)]
            for i in range(A.dim)]
    return (Algebra(A.field, A.dim, minus, labels=A.labels, symmetry="skew"),
            Algebra(A.field, A.dim, plus, labels=A.labels))


def commutator_algebra(B: Algebra) -> Algebra:
    """The bracket [x, y] = x*y - y*x as a new (skew) algebra."""
    t = B.tensor
    minus = [[[a - b for a, b in zip(t[i][j], t[j][i])] for j in range(B.dim)]
             for i in range(B.dim)]
    return Algebra(B.field, B.dim, minus, labels=B.labels, symmetry="skew",
                   name=f"[{B.name},.]" if B.name else None)


def rho(B: Algebra, x: Element, y: Element, z: Element) -> Element:
    """(x*y)*z - z*(x*y)."""
    xy = x * y
    return xy * z - z * xy


def check_rho_associative(B: Algebra):
    """None, or the first basis triple with (e_i e_j) e_k != e_k (e_i e_j)."""
    for i in range(B.dim):
        ei = B.basis(i)
        for j in range(B.dim):
            ej = B.basis(j)
            for k in range(B.dim):
                if rho(B, ei, ej, B.basis(k)):
                    return (i, j, k)
    return None


def check_acaa_admissible(B: Algebra):
    """None, or the first basis triple violating the admissibility identity

    rho(x,y,z) - rho(y,x,z) + rho(x,z,y) - rho(z,x,y) = 0,

    which holds for all triples exactly when the commutator bracket of B
    satisfies the cyclic triple-bracket law.
    """
    for i in range(B.dim):
        ei = B.basis(i)
        for j in range(B.dim):
            ej = B.basis(j)
            for k in range(B.dim):
                ek = B.basis(k)
                v = (rho(B, ei, ej, ek) - rho(B, ej, ei, ek)
                     + rho(B, ei, ek, ej) - rho(B, ek, ei, ej))
                if v:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants: (dim, derived dim, annihilator dim, cube dim)."""

    dim: int
    derived_dim: int
    ann_dim: int
    cube_dim: int

    def as_tuple(self):
        return (self.dim, self.derived_dim, self.ann_dim, self.cube_dim)


def fingerprint(A: Algebra) -> Fingerprint:
    d = A.dim
    products = [A.tensor[i][j] for i in range(d) for j in range(d)]
    derived = span(A.field, products, d).dim

    cubes = []
    for i in range(d):
        for j in range(d):
            u = A.tensor[i][j]
            if not any(u):
                continue
            for k in range(d):
                ek = [A.field.one if m == k else A.field.zero for m in range(d)]
                cubes.append(A.multiply_coords(u, ek))
                cubes.append(A.multiply_coords(ek, u))
    cube = span(A.field, cubes, d).dim

    # x is in the annihilator iff x*e_j = 0 and e_j*x = 0 for every j.
    rows = []
    for j in range(d):
        for k in range(d):
            rows.append([A.tensor[i][j][k] for i in range(d)])
            rows.append([A.tensor[j][i][k] for i in range(d)])
    ann = d - Matrix(A.field, rows).rank() if rows else d

    return Fingerprint(d, derived, ann, cube)


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Block sum; cross products between the summands vanish."""
    if A.field != B.field:
        raise ValueError("direct sum over different fields")
    d = A.dim + B.dim
    zero = A.field.zero
    tensor = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.nonzero(i, j):
                tensor[i][j][k] = c
    for i in range(B.dim):
        for j in range(B.dim):
            for k, c in B.nonzero(i, j):
                tensor[A.dim + i][A.dim + j][A.dim + k] = c
    labels = None
    if A.labels and B.labels:
        labels = A.labels + B.labels
    symmetry = "skew" if A.symmetry == "skew" and B.symmetry == "skew" else "none"
    name = f"{A.name}+{B.name}" if A.name and B.name else None
    return Algebra(A.field, d, tensor, labels=labels, symmetry=symmetry, name=name)


def change_basis(A: Algebra, P: Matrix) -> Algebra:
    """Rewrite the tensor in the basis whose vectors are the columns of P."""
    if P.field != A.field or P.shape != (A.dim, A.dim):
        raise ValueError("change of basis matrix has wrong shape or field")
    pinv = P.inverse()
    d = A.dim
    cols = [tuple(P.entries[i][a] for i in range(d)) for a in range(d)]
    tensor = []
    for a in range(d):
        plane = []
        for b in range(d):
            w = A.multiply_coords(cols[a], cols[b])
            plane.append(list(pinv.apply(w)))
        tensor.append(plane)
    return Algebra(A.field, d, tensor, symmetry=A.symmetry)


def random_element(A: Algebra, rng, lo=-3, hi=3) -> Element:
    return A.element([A.field.from_int(rng.randint(lo, hi)) for _ in range(A.dim)])
