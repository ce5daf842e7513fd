"""Adjoint operators, operator identities and associative representations.

For an algebra satisfying the cyclic triple-bracket law the adjoint maps
anticommute pairwise, square to zero, and obey
2 ad[x, y] = -(ad x ad y - ad y ad x); ad x is a weight-2 anti-derivation.
A representation sends each element to a square matrix with
rho([x, y]) = -rho(x) rho(y) = rho(y) rho(x).

``h3_faithfulness_search`` exhausts all pairs of 3x3 matrices over F_p
with X^2 = Y^2 = 0 and XY = -YX and confirms that XY = 0 for every such
pair, so no faithful triple of images exists for the 3-dimensional
Heisenberg algebra at that matrix size.
"""

import numpy as np

from .algebra import Algebra, Element, check_acaa
from .linalg import Matrix


def ad_matrix(A: Algebra, x) -> Matrix:
    """Matrix of y -> [x, y]; column j holds the coordinates of [x, e_j].

    The algebra is expected to be anticommutative.
    """
    if isinstance(x, Element):
        if x.algebra is not A:
            raise ValueError("element does not belong to the algebra")
        coords = x.coords
    else:
        coords = tuple(A.field.coerce(v) for v in x)
        if len(coords) != A.dim:
            raise ValueError("coordinate count does not match dimension")
    zero = A.field.zero
    cols = []
    for j in range(A.dim):
        acc = [zero] * A.dim
        for i, xi in enumerate(coords):
            if not xi:
                continue
            for k, c in A.nonzero(i, j):
                acc[k] = acc[k] + xi * c
        cols.append(acc)
    return Matrix(A.field, list(zip(*cols)))


class Representation:
    """A linear map into End(K^target_dim), given by the basis images."""

    __slots__ = ("algebra", "target_dim", "images")

    def __init__(self, algebra: Algebra, target_dim: int, images):
        images = tuple(images)
        if len(images) != algebra.dim:
            raise ValueError("need one image matrix per basis vector")
        for m in images:
            if m.field != algebra.field:
                raise ValueError("image matrix over a different field")
            if m.shape != (target_dim, target_dim):
                raise ValueError("image matrix is not square of the target size")
        self.algebra = algebra
        self.target_dim = target_dim
        self.images = images

    def image(self, x: Element) -> Matrix:
        if x.algebra is not self.algebra:
            raise ValueError("element does not belong to the source algebra")
        acc = Matrix.zero(self.algebra.field, self.target_dim, self.target_dim)
        for i, c in enumerate(x.coords):
            if c:
                acc = acc + self.images[i].scale(c)
        return acc

    def __repr__(self):
        return f"Representation({self.algebra!r} -> gl_{self.target_dim})"


def adjoint_representation(A: Algebra) -> Representation:
    return Representation(A, A.dim, [ad_matrix(A, A.basis(i)) for i in range(A.dim)])


def check_ad_identities(A: Algebra):
    """Verify the adjoint operator laws on all basis pairs.

    Checks, in order: (ad e_i)^2 = 0; ad e_i ad e_j + ad e_j ad e_i = 0;
    2 ad[e_i, e_j] + ad e_i ad e_j - ad e_j ad e_i = 0.  Returns None or a
    (law, indices) witness.  Requires the triple-bracket law.
    """
    w = check_acaa(A)
    if w is not None:
        raise ValueError(f"precondition failed: triple-bracket law fails at {w}")
    ads = [ad_matrix(A, A.basis(i)) for i in range(A.dim)]
    two = A.field.from_int(2)
    for i in range(A.dim):
        if not (ads[i] * ads[i]).is_zero():
            return ("square", (i,))
    for i in range(A.dim):
        for j in range(A.dim):
            ij = ads[i] * ads[j]
            ji = ads[j] * ads[i]
            if not (ij + ji).is_zero():
                return ("anticommutation", (i, j))
            ad_bracket = ad_matrix(A, A.element(A.product(i, j)))
            if not (ad_bracket.scale(two) + ij - ji).is_zero():
                return ("double-bracket", (i, j))
    return None


def check_weighted_antiderivation(A: Algebra, f: Matrix, weight: int):
    """None, or the first pair (i, j) violating
    weight * f(e_i e_j) + e_i f(e_j) + f(e_i) e_j = 0.
    """
    if weight < 1:
        raise ValueError("weight must be a positive integer")
    if f.field != A.field or f.shape != (A.dim, A.dim):
        raise ValueError("endomorphism has wrong shape or field")
    k = A.field.from_int(weight)
    f_basis = [f.apply([A.field.one if m == i else A.field.zero for m in range(A.dim)])
               for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            v = [k * t for t in f.apply(A.product(i, j))]
            ei = [A.field.one if m == i else A.field.zero for m in range(A.dim)]
            ej = [A.field.one if m == j else A.field.zero for m in range(A.dim)]
            left = A.multiply_coords(ei, f_basis[j])
            right = A.multiply_coords(f_basis[i], ej)
            if any(a + b + c for a, b, c in zip(v, left, right)):
                return (i, j)
    return None


def check_representation(rep: Representation):
    """Verify the representation axiom on all basis pairs.

    Checks rho(e_i)^2 = 0, rho(e_i) rho(e_j) = -rho(e_j) rho(e_i) and
    rho([e_i, e_j]) = -rho(e_i) rho(e_j).  The source algebra must satisfy
    the triple-bracket law.
    """
    A = rep.algebra
    w = check_acaa(A)
    if w is not None:
        raise ValueError(f"precondition failed: triple-bracket law fails at {w}")
    imgs = rep.images
    for i in range(A.dim):
        if not (imgs[i] * imgs[i]).is_zero():
            return ("square", (i,))
    for i in range(A.dim):
        for j in range(A.dim):
            ij = imgs[i] * imgs[j]
            if not (ij + imgs[j] * imgs[i]).is_zero():
                return ("anticommutation", (i, j))
            rho_bracket = rep.image(A.element(A.product(i, j)))
            if not (rho_bracket + ij).is_zero():
                return ("bracket", (i, j))
    return None


def is_faithful(rep: Representation) -> bool:
    """True iff the basis images are linearly independent."""
    w = check_representation(rep)
    if w is not None:
        raise ValueError(f"not a representation: {w[0]} fails at {w[1]}")
    rows = [[v for row in m.entries for v in row] for m in rep.images]
    return Matrix(rep.algebra.field, rows).rank() == rep.algebra.dim


_SEARCH_GUARD = 10_000_000


def h3_faithfulness_search(p: int, d: int = 3, jobs: int = 1):
    """Exhaust pairs (X, Y) of d x d matrices over F_p with X^2 = Y^2 = 0
    and XY = -YX, verifying XY = 0 for each.

    Returns None when the search is exhausted without a counterexample,
    otherwise the offending pair as integer matrices.  Only d = 3 and
    p in {3, 5} are supported.
    """
    if d != 3:
        raise ValueError("the search is specific to 3x3 matrices")
    if p not in (3, 5):
        raise ValueError("p must be 3 or 5")
    total = p ** (d * d)
    if total > _SEARCH_GUARD:
        raise ValueError("matrix space exceeds the size guard")

    chunk = 1 << 17
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]

    def scan(bound):
        lo, hi = bound
        codes = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, d * d), dtype=np.int64)
        c = codes.copy()
        for q in range(d * d):
            digits[:, q] = c % p
            c //= p
        M = digits.reshape(hi - lo, d, d)
        sq = np.einsum("nij,njk->nik", M, M) % p
        return M[(sq == 0).all(axis=(1, 2))]

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(scan, bounds))
    else:
        parts = [scan(b) for b in bounds]
    nilpotents = np.concatenate(parts)

    products = np.einsum("aij,bjk->abik", nilpotents, nilpotents) % p
    anti = ((products + products.transpose(1, 0, 2, 3)) % p == 0).all(axis=(2, 3))
    nonzero = (products != 0).any(axis=(2, 3))
    bad = anti & nonzero
    if bad.any():
        a, b = np.argwhere(bad)[0]
        x = tuple(tuple(int(v) for v in row) for row in nilpotents[a])
        y = tuple(tuple(int(v) for v in row) for row in nilpotents[b])
        return (x, y)
    return None
