"""JSON codecs for the domain types moved across the CLI boundary.

Scalars are kept exact where possible: integers stay integers, non-integer
rationals travel as "p/q" strings, floats stay floats.  Every emitter here
produces something the matching parser accepts unchanged."""

import json
from fractions import Fraction

from .boxball import BoxBallState
from .lsym import LoopVarArray
from .matpoly import MatrixPoly
from .shapes import Partition, SkewShape, Tableau, aspartition


def scalar_from_json(obj):
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        return Fraction(str(obj))
    if isinstance(obj, str):
        return Fraction(obj)
    raise ValueError("cannot read scalar from %r" % (obj,))


def scalar_to_json(value):
    if isinstance(value, float):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return "%d/%d" % (value.numerator, value.denominator)


def partition_from_json(obj):
    return aspartition(tuple(obj))


def shape_from_json(obj):
    if isinstance(obj, dict):
        return SkewShape(tuple(obj["outer"]), tuple(obj.get("inner", ())))
    return SkewShape(tuple(obj))


def shape_to_json(shape):
    return {"outer": list(shape.outer.parts), "inner": list(shape.inner.parts)}


def tableau_from_json(obj):
    return Tableau.from_rows(obj["rows"], inner=tuple(obj.get("inner", ())))


def tableau_to_json(tab):
    return {"inner": list(tab.shape.inner.parts), "rows": tab.rows()}


def loopvars_from_json(obj):
    n, m = int(obj["n"]), int(obj["m"])
    if obj.get("symbolic"):
        return LoopVarArray.symbolic(n, m)
    values = obj["values"]
    if len(values) != m or any(len(col) != n for col in values):
        raise ValueError("values must be m lists of n entries")
    return LoopVarArray.numeric(
        n, m, [[scalar_from_json(v) for v in col] for col in values]
    )


def loopvars_to_json(arr):
    if arr.is_symbolic():
        return {"n": arr.n, "m": arr.m, "symbolic": True}
    return {
        "n": arr.n,
        "m": arr.m,
        "values": [
            [scalar_to_json(arr.value(i, j)) for j in range(1, arr.n + 1)]
            for i in range(1, arr.m + 1)
        ],
    }


def matrixpoly_from_json(obj):
    n = int(obj["n"])
    mats = [
        [[scalar_from_json(v) for v in row] for row in mat] for mat in obj["coeffs"]
    ]
    return MatrixPoly.from_coeff_matrices(n, mats)


def matrixpoly_to_json(P):
    return {
        "n": P.n,
        "coeffs": [
            [[scalar_to_json(v) for v in row] for row in mat]
            for mat in P.to_coeff_matrices()
        ],
    }


def state_from_json(obj):
    return BoxBallState(obj["boxes"])


def state_to_json(state):
    return {"boxes": list(state.boxes)}


def dumps(obj):
    """Canonical one-line JSON: sorted keys, no trailing whitespace."""
    return json.dumps(obj, sort_keys=True)


def loads(text):
    return json.loads(text)
