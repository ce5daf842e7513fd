"""Free anticommutative antiassociative algebras.

The free algebra on n generators is graded with homogeneous dimensions
(n, C(n,2), C(n,3)) and nothing in degree 4 or higher.  Basis monomials are
X_i, then X_ij (i < j), then X_ijk (i < j < k), each in lexicographic
order.  Signs follow [X_a, [X_b, X_c]] = sign(a,b,c) X_{sorted(a,b,c)}.

Bracket words are fully parenthesized binary trees over the generators;
``normal_form`` reduces them symbolically while ``eval_word`` folds the
structure-constant product, giving two independent routes to the same
value.
"""

from itertools import combinations
from math import comb

from .algebra import Algebra, Element, perm_sign
from .fields import Q


def graded_dims(n: int) -> list:
    """Homogeneous dimensions [n, C(n,2), C(n,3)] of the free algebra."""
    if n < 1:
        raise ValueError("need at least one generator")
    return [n, comb(n, 2), comb(n, 3)]


class FreeAcaaAlgebra:
    """The free algebra on n generators with its graded monomial basis."""

    __slots__ = ("n", "algebra", "monomials", "degrees", "index")

    def __init__(self, n, algebra, monomials, degrees):
        self.n = n
        self.algebra = algebra
        self.monomials = monomials
        self.degrees = degrees
        self.index = {mon: i for i, mon in enumerate(monomials)}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def generator(self, i: int) -> Element:
        if not 0 <= i < self.n:
            raise ValueError(f"generator index {i} out of range")
        return self.algebra.basis(i)

    def monomial(self, indices) -> Element:
        return self.algebra.basis(self.index[tuple(indices)])


def _monomial_label(mon) -> str:
    return "X" + "".join(str(i + 1) for i in mon)


def free_acaa(n: int, field=Q) -> FreeAcaaAlgebra:
    """Construct the free algebra on generators X_1 .. X_n."""
    if n < 1:
        raise ValueError("need at least one generator")
    monomials = ([(i,) for i in range(n)]
                 + list(combinations(range(n), 2))
                 + list(combinations(range(n), 3)))
    index = {mon: i for i, mon in enumerate(monomials)}
    degrees = tuple(len(mon) for mon in monomials)

    products = {}
    # degree 1 x degree 1
    for i, j in combinations(range(n), 2):
        products[(index[(i,)], index[(j,)])] = {index[(i, j)]: 1}
    # degree 1 x degree 2; generator indices always precede pair indices,
    # and the skew completion fills the flipped products
    for a in range(n):
        for b, c in combinations(range(n), 2):
            if a in (b, c):
                continue
            sign = perm_sign((a, b, c))
            target = index[tuple(sorted((a, b, c)))]
            products[(index[(a,)], index[(b, c)])] = {target: sign}
    labels = tuple(_monomial_label(m) for m in monomials)
    algebra = Algebra.from_products(field, len(monomials), products,
                                    labels=labels, skew=True, name=f"free{n}")
    return FreeAcaaAlgebra(n, algebra, tuple(monomials), degrees)


def parse_word(text: str):
    """Parse bracket-word syntax such as "((X1 X2) X3)" into a binary tree.

    Leaves are 0-based generator indices; internal nodes are (left, right)
    pairs.  Generators are written X1, X2, ...
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse_node():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of word")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            left = parse_node()
            right = parse_node()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError("expected ')'")
            pos += 1
            return (left, right)
        if tok == ")":
            raise ValueError("unexpected ')'")
        if not tok.startswith("X"):
            raise ValueError(f"bad token {tok!r}")
        try:
            idx = int(tok[1:])
        except ValueError:
            raise ValueError(f"bad generator {tok!r}") from None
        if idx < 1:
            raise ValueError(f"generator numbers start at 1, got {tok!r}")
        pos += 1
        return idx - 1

    tree = parse_node()
    if pos != len(tokens):
        raise ValueError("trailing input after word")
    return tree


def word_to_str(tree) -> str:
    if isinstance(tree, int):
        return f"X{tree + 1}"
    left, right = tree
    return f"({word_to_str(left)} {word_to_str(right)})"


def word_degree(tree) -> int:
    if isinstance(tree, int):
        return 1
    return word_degree(tree[0]) + word_degree(tree[1])


def eval_word(F: FreeAcaaAlgebra, tree) -> Element:
    """Fold the algebra product over the word (the numeric route)."""
    if isinstance(tree, int):
        return F.generator(tree)
    return eval_word(F, tree[0]) * eval_word(F, tree[1])


def normal_form(F: FreeAcaaAlgebra, tree):
    """Symbolic reduction of a bracket word.

    Returns None for zero, otherwise (sign, monomial) with the monomial a
    sorted index tuple.  Words of degree >= 4 vanish; degree-3 words with a
    repeated generator vanish; the rest pick up the permutation signature
    relative to sorted order.
    """
    if isinstance(tree, int):
        if not 0 <= tree < F.n:
            raise ValueError(f"generator index {tree} out of range")
        return (1, (tree,))
    left = normal_form(F, tree[0])
    right = normal_form(F, tree[1])
    if left is None or right is None:
        return None
    sl, ml = left
    sr, mr = right
    degree = len(ml) + len(mr)
    if degree >= 4:
        return None
    sign = sl * sr
    if degree == 2:
        (i,), (j,) = ml, mr
        if i == j:
            return None
        if i > j:
            sign, i, j = -sign, j, i
        return (sign, (i, j))
    # degree 3: anticommute so the single generator acts from the left
    if len(ml) == 2:
        sign = -sign
        ml, mr = mr, ml
    (a,), (b, c) = ml, mr
    if a in (b, c):
        return None
    return (sign * perm_sign((a, b, c)), tuple(sorted((a, b, c))))


def normal_form_element(F: FreeAcaaAlgebra, tree) -> Element:
    nf = normal_form(F, tree)
    if nf is None:
        return F.algebra.zero_element()
    sign, mon = nf
    return F.algebra.field.from_int(sign) * F.monomial(mon)
