"""Named small algebras, fingerprint recognition, and the mod-p oracle.

The classification lists cover dimensions 2..5, where every algebra
satisfying the cyclic triple-bracket law is one of the catalog entries up
to isomorphism.  ``enumerate_finite`` re-derives the dimension-2 and -3
statements over F_3 and F_5 by brute force: it enumerates every
anticommutative tensor, filters by the linearized law, and counts orbits
under the full general linear group.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import Algebra, Fingerprint, check_acaa, fingerprint
from .fields import Q, is_prime
from .free import free_acaa


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: Algebra
    fingerprint: Fingerprint
    description: str


def _abelian(dim: int) -> Algebra:
    return Algebra.from_products(Q, dim, {}, skew=True, name=f"abelian{dim}")


def _skew(dim, products, name) -> Algebra:
    return Algebra.from_products(Q, dim, products, skew=True, name=name)


_CACHE = {}


def _entries() -> dict:
    if _CACHE:
        return _CACHE
    defs = [
        ("abelian2", _abelian(2), (2, 0, 2, 0), "2-dimensional abelian algebra"),
        ("abelian3", _abelian(3), (3, 0, 3, 0), "3-dimensional abelian algebra"),
        ("h3", _skew(3, {(0, 1): {2: 1}}, "h3"), (3, 1, 1, 0),
         "3-dimensional Heisenberg algebra"),
        ("abelian4", _abelian(4), (4, 0, 4, 0), "4-dimensional abelian algebra"),
        ("h3+K", _skew(4, {(0, 1): {2: 1}}, "h3+K"), (4, 1, 2, 0),
         "Heisenberg algebra plus a 1-dimensional abelian summand"),
        ("abelian5", _abelian(5), (5, 0, 5, 0), "5-dimensional abelian algebra"),
        ("h3+K2", _skew(5, {(0, 1): {2: 1}}, "h3+K2"), (5, 1, 3, 0),
         "Heisenberg algebra plus a 2-dimensional abelian summand"),
        ("L5", _skew(5, {(0, 1): {2: 1}, (0, 3): {4: 1}}, "L5"), (5, 2, 2, 0),
         "5-dimensional 2-step nilpotent Lie algebra with 2-dimensional"
         " derived subalgebra"),
        ("h5", _skew(5, {(0, 1): {4: 1}, (2, 3): {4: 1}}, "h5"), (5, 1, 1, 0),
         "5-dimensional Heisenberg algebra"),
        ("n6", _skew(6, {(0, 1): {3: 1}, (0, 2): {4: 1}, (1, 2): {5: 1}}, "n6"),
         (6, 3, 3, 0), "free 2-step nilpotent Lie algebra on 3 generators"),
        ("free3", free_acaa(3).algebra, (7, 4, 1, 1),
         "free anticommutative antiassociative algebra on 3 generators"),
    ]
    for name, alg, fp, desc in defs:
        _CACHE[name] = CatalogEntry(name, alg, Fingerprint(*fp), desc)
    return _CACHE


_CLASSIFICATION = {
    2: ("abelian2",),
    3: ("abelian3", "h3"),
    4: ("abelian4", "h3+K"),
    5: ("abelian5", "h3+K2", "L5", "h5"),
}

_EXTRAS = ("n6", "free3")


def catalog(dim: int) -> list:
    """The complete classification list for dimension 2..5."""
    if dim not in _CLASSIFICATION:
        raise ValueError(f"no classification list for dimension {dim};"
                         f" extra entries are exposed by name")
    entries = _entries()
    return [entries[name] for name in _CLASSIFICATION[dim]]


def all_entries() -> list:
    """Every named entry: the classification lists plus free3 and n6."""
    entries = _entries()
    names = [n for dim in sorted(_CLASSIFICATION) for n in _CLASSIFICATION[dim]]
    names.extend(_EXTRAS)
    return [entries[n] for n in names]


def entry(name: str) -> CatalogEntry:
    entries = _entries()
    if name not in entries:
        raise ValueError(f"unknown catalog entry {name!r}")
    return entries[name]


_RECOGNITION = {
    (2, 0, 2, 0): "abelian2",
    (3, 0, 3, 0): "abelian3",
    (3, 1, 1, 0): "h3",
    (4, 0, 4, 0): "abelian4",
    (4, 1, 2, 0): "h3+K",
    (5, 0, 5, 0): "abelian5",
    (5, 1, 3, 0): "h3+K2",
    (5, 2, 2, 0): "L5",
    (5, 1, 1, 0): "h5",
}


def recognize(A: Algebra) -> str:
    """Catalog name of A, matched by fingerprint.

    Only dimensions 2..5 over Q are supported, and A must satisfy the
    cyclic triple-bracket law.  "unknown" would contradict the completeness
    of the classification.
    """
    if A.field != Q:
        raise ValueError("recognition works over Q only")
    if not 2 <= A.dim <= 5:
        raise ValueError("recognition covers dimensions 2..5 only")
    w = check_acaa(A)
    if w is not None:
        raise ValueError(f"algebra fails the triple-bracket law at {w}")
    return _RECOGNITION.get(fingerprint(A).as_tuple(), "unknown")


# --- exhaustive enumeration over F_p ---------------------------------------

_SIZE_GUARD = 10_000_000
_CHUNK = 1 << 17


def _decode(codes, count, p):
    out = np.empty((len(codes), count), dtype=np.int64)
    c = codes.copy()
    for q in range(count):
        out[:, q] = c % p
        c //= p
    return out


def _encode(out, p):
    # out: (n, npairs, dim), pair-major digit order matching _decode
    n, npairs, dim = out.shape
    codes = np.zeros(n, dtype=np.int64)
    mult = 1
    for pi in range(npairs):
        for k in range(dim):
            codes += out[:, pi, k] * mult
            mult *= p
    return codes


def _acaa_mask(C, dim, p, pairs):
    """Mask of tensors satisfying [e_i,[e_j,e_k]] + [e_k,[e_j,e_i]] = 0.

    The condition is symmetric in (i, k), so only i <= k is checked.  Each
    basis bracket is a signed pair vector, which keeps everything in a few
    broadcast multiplies per triple.
    """
    n = C.shape[0]
    pair_index = {pr: q for q, pr in enumerate(pairs)}

    def basis_bracket(i, m):
        if i == m:
            return None
        if i < m:
            return 1, pair_index[(i, m)]
        return -1, pair_index[(m, i)]

    ok = np.ones(n, dtype=bool)
    for i in range(dim):
        for k in range(i, dim):
            for j in range(dim):
                acc = np.zeros((n, dim), dtype=np.int64)
                for outer, inner_pair in ((i, (j, k)), (k, (j, i))):
                    b1 = basis_bracket(*inner_pair)
                    if b1 is None:
                        continue
                    s1, q1 = b1
                    for m in range(dim):
                        b2 = basis_bracket(outer, m)
                        if b2 is None:
                            continue
                        s2, q2 = b2
                        term = C[:, q1, m, None] * C[:, q2, :]
                        if s1 * s2 > 0:
                            acc += term
                        else:
                            acc -= term
                ok &= (acc % p == 0).all(axis=1)
    return ok


_GL_CACHE = {}


def _gl_group(dim, p):
    """All invertible dim x dim matrices over F_p with their inverses."""
    key = (dim, p)
    if key in _GL_CACHE:
        return _GL_CACHE[key]
    total = p ** (dim * dim)
    M = _decode(np.arange(total, dtype=np.int64), dim * dim, p).reshape(total, dim, dim)
    if dim == 2:
        det = (M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]) % p
    else:
        det = (M[:, 0, 0] * (M[:, 1, 1] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 1])
               - M[:, 0, 1] * (M[:, 1, 0] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 0])
               + M[:, 0, 2] * (M[:, 1, 0] * M[:, 2, 1] - M[:, 1, 1] * M[:, 2, 0])) % p
    keep = det != 0
    G = M[keep]
    det = det[keep]
    inv_table = np.array([0] + [pow(i, p - 2, p) for i in range(1, p)], dtype=np.int64)
    adj = np.empty_like(G)
    idx = list(range(dim))
    for a in range(dim):
        for b in range(dim):
            if dim == 2:
                minor = G[:, 1 - b, 1 - a] % p
            else:
                r = [x for x in idx if x != b]
                c = [x for x in idx if x != a]
                minor = (G[:, r[0], c[0]] * G[:, r[1], c[1]]
                         - G[:, r[0], c[1]] * G[:, r[1], c[0]]) % p
            if (a + b) % 2:
                minor = (-minor) % p
            adj[:, a, b] = minor
    Ginv = (adj * inv_table[det][:, None, None]) % p
    sample = min(64, len(G))
    check = np.einsum("gij,gjk->gik", G[:sample], Ginv[:sample]) % p
    if not (check == np.eye(dim, dtype=np.int64)[None]).all():
        raise RuntimeError("inverse table failed self-check")
    _GL_CACHE[key] = (G, Ginv)
    return G, Ginv


def _act_all(G, Ginv, pairs, c, p, dim):
    """Codes of g.c for every g, acting by change of basis on a skew tensor."""
    npairs = len(pairs)
    out_codes = []
    for lo in range(0, len(G), _CHUNK):
        Gc = G[lo:lo + _CHUNK]
        Gi = Ginv[lo:lo + _CHUNK]
        ng = len(Gc)
        if dim == 2:
            det = (Gc[:, 0, 0] * Gc[:, 1, 1] - Gc[:, 0, 1] * Gc[:, 1, 0]) % p
            tmp = (det[:, None] * c[0][None, :]) % p
            out = (np.einsum("gkm,gm->gk", Gi, tmp) % p)[:, None, :]
        else:
            minors = np.empty((ng, npairs, npairs), dtype=np.int64)
            for s, (i, j) in enumerate(pairs):
                for t, (a, b) in enumerate(pairs):
                    minors[:, s, t] = (Gc[:, i, a] * Gc[:, j, b]
                                       - Gc[:, j, a] * Gc[:, i, b]) % p
            tmp = np.einsum("gst,sm->gtm", minors, c) % p
            out = np.einsum("gkm,gtm->gtk", Gi, tmp) % p
        out_codes.append(_encode(out, p))
    return np.concatenate(out_codes)


def enumerate_finite(dim: int, p: int, jobs: int = 1):
    """Count anticommutative tensors over F_p satisfying the linearized
    triple-bracket law, and their isomorphism classes under GL(dim, p).

    Returns (acaa_count, iso_class_count).
    """
    if dim not in (2, 3):
        raise ValueError("enumeration supports dimensions 2 and 3 only")
    if not is_prime(p) or p == 2 or p > 5:
        raise ValueError("p must be an odd prime at most 5")
    pairs = list(combinations(range(dim), 2))
    ncoef = len(pairs) * dim
    total = p ** ncoef
    if total > _SIZE_GUARD:
        raise ValueError(f"{total} candidates exceed the size guard")

    bounds = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def scan(bound):
        lo, hi = bound
        codes = np.arange(lo, hi, dtype=np.int64)
        C = _decode(codes, ncoef, p).reshape(hi - lo, len(pairs), dim)
        return codes[_acaa_mask(C, dim, p, pairs)]

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(scan, bounds))
    else:
        parts = [scan(b) for b in bounds]
    survivors = np.concatenate(parts)
    survivor_set = set(survivors.tolist())

    G, Ginv = _gl_group(dim, p)
    visited = set()
    classes = 0
    for code in survivors.tolist():
        if code in visited:
            continue
        c = _decode(np.array([code], dtype=np.int64), ncoef, p).reshape(len(pairs), dim)
        orbit = set(np.unique(_act_all(G, Ginv, pairs, c, p, dim)).tolist())
        if not orbit <= survivor_set:
            raise RuntimeError("orbit left the filtered set; enumeration inconsistent")
        visited |= orbit
        classes += 1
    return len(survivor_set), classes
