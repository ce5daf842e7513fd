"""JSON formats for algebras, representations and cochains.

Rational values travel as strings ("p/q" or "n"); prime-field values as
integers in [0, p).  For skew algebras only products with left < right are
stored; the loader restores the flipped entries and the zero diagonal.
"""

import json

from .algebra import Algebra
from .fields import field_from_json, field_to_json
from .linalg import Matrix


def algebra_to_json(A: Algebra) -> dict:
    data = {}
    if A.name:
        data["name"] = A.name
    data["field"] = field_to_json(A.field)
    data["dim"] = A.dim
    if A.labels:
        data["basis"] = list(A.labels)
    data["symmetry"] = A.symmetry
    products = []
    for i in range(A.dim):
        for j in range(A.dim):
            if A.symmetry == "skew" and i >= j:
                continue
            nz = A.nonzero(i, j)
            if not nz:
                continue
            value = {str(k): A.field.to_json(c) for k, c in nz}
            products.append({"left": i, "right": j, "value": value})
    data["products"] = products
    return data


def algebra_from_json(data: dict) -> Algebra:
    field = field_from_json(data["field"])
    dim = int(data["dim"])
    symmetry = data.get("symmetry", "none")
    if symmetry not in ("none", "skew"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    skew = symmetry == "skew"
    products = {}
    for item in data.get("products", []):
        i, j = int(item["left"]), int(item["right"])
        if skew and i >= j:
            raise ValueError(f"skew file lists product ({i}, {j}) with left >= right")
        value = {int(k): field.parse(v) for k, v in item["value"].items()}
        if (i, j) in products:
            raise ValueError(f"duplicate product entry ({i}, {j})")
        products[(i, j)] = value
    return Algebra.from_products(field, dim, products, labels=data.get("basis"),
                                 skew=skew, name=data.get("name"))


def dump_algebra(A: Algebra) -> str:
    return json.dumps(algebra_to_json(A), indent=2)


def save_algebra(A: Algebra, path) -> None:
    with open(path, "w") as fh:
        fh.write(dump_algebra(A))
        fh.write("\n")


def load_algebra(path) -> Algebra:
    with open(path) as fh:
        return algebra_from_json(json.load(fh))


def matrix_to_json(m: Matrix) -> list:
    return [[m.field.to_json(v) for v in row] for row in m.entries]


def matrix_from_json(field, rows) -> Matrix:
    return Matrix(field, [[field.parse(v) for v in row] for row in rows])


def representation_to_json(rep, source: str) -> dict:
    return {
        "source": source,
        "target_dim": rep.target_dim,
        "images": [matrix_to_json(m) for m in rep.images],
    }


def representation_from_json(data: dict, algebra: Algebra):
    from .reps import Representation

    target_dim = int(data["target_dim"])
    images = [matrix_from_json(algebra.field, rows) for rows in data["images"]]
    return Representation(algebra, target_dim, images)


def cochain_to_json(field, arity: int, dim: int, values) -> dict:
    def encode(node, depth):
        if depth == 0:
            return field.to_json(node)
        return [encode(child, depth - 1) for child in node]

    return {
        "arity": arity,
        "dim": dim,
        "field": field_to_json(field),
        "values": encode(values, arity + 1),
    }


def cochain_from_json(data: dict):
    field = field_from_json(data["field"])
    arity = int(data["arity"])
    dim = int(data["dim"])

    def decode(node, depth):
        if depth == 0:
            return field.parse(node)
        if len(node) != dim:
            raise ValueError("cochain tensor does not match declared dimension")
        return tuple(decode(child, depth - 1) for child in node)

    return field, arity, dim, decode(data["values"], arity + 1)
