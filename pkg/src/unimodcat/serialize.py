"""Instance file format: one JSON document per Hopf algebra and optional comodule algebra.

Schema (version 1)::

    {
      "format": "unimodcat-instance",
      "version": 1,
      "field": {"cyclotomic_order": N},
      "hopf": {
        "algebra": {"dim": n, "names": [...], "structure_constants": [[i, j, k, s], ...], "unit": [s, ...]},
        "comult": [[[i, k], j, s], ...],
        "counit": [s, ...],
        "antipode": [[s, ...], ...]
      },
      "comodule_algebra": {
        "algebra": {...},
        "coaction": [[[i, k], j, s], ...],
        "frobenius_forms": {"name": [s, ...]},
        "grouplike_candidates": [[s, ...], ...]
      }
    }

A scalar s is a list of [exponent, "p/q"] pairs meaning sum (p/q) zeta_N^exponent.
Structure constants say b_i b_j has coefficient s at b_k.  Sparse lists omit zeros.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra import StructureAlgebra
from .comodalg import ComoduleAlgebra
from .exactmath import Matrix, Scalar
from .hopf import HopfData

__all__ = [
    "FORMAT_NAME",
    "FormatError",
    "Instance",
    "dumps",
    "instance_to_json",
    "loads",
    "parse_scalar",
    "scalar_from_json",
    "scalar_to_json",
]

FORMAT_NAME = "unimodcat-instance"
FORMAT_VERSION = 1
_INLINE_WIDTH = 100


class FormatError(ValueError):
    """Malformed instance file; the message carries the position or the JSON path."""


@dataclass
class Instance:
    hopf: HopfData
    comodule: ComoduleAlgebra | None


# scalars -------------------------------------------------------------------

def scalar_to_json(s: Scalar) -> list:
    return s.to_pairs()


def scalar_from_json(obj: Any, order: int, path: str) -> Scalar:
    if not isinstance(obj, list):
        raise FormatError(f"{path}: scalar must be a list of [exponent, \"p/q\"] pairs")
    pairs = []
    for k, pair in enumerate(obj):
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int) and isinstance(pair[1], str)):
            raise FormatError(f"{path}[{k}]: expected [exponent, \"p/q\"]")
        try:
            pairs.append((pair[0], Fraction(pair[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"{path}[{k}]: bad rational {pair[1]!r}") from exc
    return Scalar.from_pairs(pairs, order)


_TERM = re.compile(r"\s*([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*(\*?\s*z(?:\^([0-9]+))?)?\s*")


def parse_scalar(text: str, order: int) -> Scalar:
    """Parse text such as ``0``, ``-1/2``, ``z``, ``z^2``, ``1 - 3*z`` as an element of Q(zeta_order)."""
    src = text.strip()
    if not src:
        raise ValueError("empty scalar")
    total = Scalar(0, order)
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign between terms in {text!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coeff = -coeff
        exp = 0
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        total = total + Scalar.zeta(order, exp) * coeff
        pos = m.end()
    return total


# emit ------------------------------------------------------------------------

def _dense(m: Matrix) -> list:
    return [scalar_to_json(s) for s in m.to_list()]


def _algebra_to_json(alg: StructureAlgebra) -> dict:
    n = alg.dim
    consts = []
    for k, col in sorted(alg.mult.nonzero_entries(), key=lambda rc: (rc[1], rc[0])):
        i, j = divmod(col, n)
        consts.append([i, j, k, scalar_to_json(alg.mult.entry(k, col))])
    return {"dim": n, "names": list(alg.names), "structure_constants": consts, "unit": _dense(alg.unit)}


def _tensor_to_json(t: Matrix, d2: int) -> list:
    out = []
    for r, c in sorted(t.nonzero_entries(), key=lambda rc: (rc[1], rc[0])):
        i, k = divmod(r, d2)
        out.append([[i, k], c, scalar_to_json(t.entry(r, c))])
    return out


def instance_to_json(hopf: HopfData, comodule: ComoduleAlgebra | None = None) -> dict:
    doc: dict = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "field": {"cyclotomic_order": hopf.order},
        "hopf": {
            "algebra": _algebra_to_json(hopf.algebra),
            "comult": _tensor_to_json(hopf.comult, hopf.dim),
            "counit": _dense(hopf.counit),
            "antipode": [_dense(hopf.antipode[i, :]) for i in range(hopf.dim)],
        },
    }
    if comodule is not None:
        doc["comodule_algebra"] = {
            "algebra": _algebra_to_json(comodule.algebra),
            "coaction": _tensor_to_json(comodule.coaction, comodule.algebra.dim),
            "frobenius_forms": {name: _dense(f) for name, f in comodule.forms.items()},
            "grouplike_candidates": [_dense(g) for g in comodule.candidates],
        }
    return doc


def _format(obj: Any, indent: int) -> str:
    flat = json.dumps(obj, separators=(", ", ": "))
    if len(flat) + indent <= _INLINE_WIDTH or not isinstance(obj, (list, dict)) or not obj:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_format(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _format(v, indent + 2) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dumps(hopf: HopfData, comodule: ComoduleAlgebra | None = None) -> str:
    return _format(instance_to_json(hopf, comodule), 0) + "\n"


# parse -----------------------------------------------------------------------

def _get(obj: dict, key: str, path: str, kind: type | tuple[type, ...]):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{path}: missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise FormatError(f"{path}.{key}: expected {getattr(kind, '__name__', kind)}")
    return val


def _index(v: Any, bound: int, path: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
        raise FormatError(f"{path}: index {v!r} out of range 0..{bound - 1}")
    return v


def _dense_from_json(obj: Any, length: int, order: int, path: str) -> list[Scalar]:
    if not isinstance(obj, list) or len(obj) != length:
        raise FormatError(f"{path}: expected a list of {length} scalars")
    return [scalar_from_json(s, order, f"{path}[{i}]") for i, s in enumerate(obj)]


def _algebra_from_json(obj: Any, order: int, path: str) -> StructureAlgebra:
    n = _get(obj, "dim", path, int)
    if n < 1:
        raise FormatError(f"{path}.dim: must be positive")
    names = _get(obj, "names", path, list)
    if len(names) != n or not all(isinstance(s, str) for s in names):
        raise FormatError(f"{path}.names: expected {n} strings")
    rows = [[Scalar(0, order)] * (n * n) for _ in range(n)]
    for t, entry in enumerate(_get(obj, "structure_constants", path, list)):
        p = f"{path}.structure_constants[{t}]"
        if not (isinstance(entry, list) and len(entry) == 4):
            raise FormatError(f"{p}: expected [i, j, k, scalar]")
        i, j, k = (_index(entry[q], n, p) for q in range(3))
        rows[k][i * n + j] = scalar_from_json(entry[3], order, p)
    unit = _dense_from_json(_get(obj, "unit", path, list), n, order, f"{path}.unit")
    return StructureAlgebra(Matrix.from_scalars(rows, order, (n, n * n)), Matrix.column(unit, order), tuple(names))


def _tensor_from_json(obj: Any, d1: int, d2: int, cols: int, order: int, path: str) -> Matrix:
    rows = [[Scalar(0, order)] * cols for _ in range(d1 * d2)]
    if not isinstance(obj, list):
        raise FormatError(f"{path}: expected a list of [[i, k], j, scalar] triples")
    for t, entry in enumerate(obj):
        p = f"{path}[{t}]"
        if not (isinstance(entry, list) and len(entry) == 3 and isinstance(entry[0], list) and len(entry[0]) == 2):
            raise FormatError(f"{p}: expected [[i, k], j, scalar]")
        i = _index(entry[0][0], d1, p)
        k = _index(entry[0][1], d2, p)
        j = _index(entry[1], cols, p)
        rows[i * d2 + k][j] = scalar_from_json(entry[2], order, p)
    return Matrix.from_scalars(rows, order, (d1 * d2, cols))


def loads(text: str, validate: bool = False) -> Instance:
    """Parse an instance document; axioms are checked only when ``validate`` is set."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FormatError("$: top level must be an object")
    if doc.get("format") != FORMAT_NAME or doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"$: expected format {FORMAT_NAME!r} version {FORMAT_VERSION}")
    order = _get(_get(doc, "field", "$", dict), "cyclotomic_order", "$.field", int)
    if order < 1:
        raise FormatError("$.field.cyclotomic_order: must be positive")
    hb = _get(doc, "hopf", "$", dict)
    halg = _algebra_from_json(_get(hb, "algebra", "$.hopf", dict), order, "$.hopf.algebra")
    n = halg.dim
    comult = _tensor_from_json(_get(hb, "comult", "$.hopf", list), n, n, n, order, "$.hopf.comult")
    counit = Matrix.row(_dense_from_json(_get(hb, "counit", "$.hopf", list), n, order, "$.hopf.counit"), order)
    srows = _get(hb, "antipode", "$.hopf", list)
    if len(srows) != n:
        raise FormatError(f"$.hopf.antipode: expected {n} rows")
    antipode = Matrix.from_scalars(
        [_dense_from_json(r, n, order, f"$.hopf.antipode[{i}]") for i, r in enumerate(srows)], order, (n, n)
    )
    hopf = HopfData(halg, comult, counit, antipode, validate=validate)
    comodule = None
    if "comodule_algebra" in doc:
        cb = _get(doc, "comodule_algebra", "$", dict)
        path = "$.comodule_algebra"
        alg = _algebra_from_json(_get(cb, "algebra", path, dict), order, f"{path}.algebra")
        m = alg.dim
        coaction = _tensor_from_json(_get(cb, "coaction", path, list), n, m, m, order, f"{path}.coaction")
        forms = {}
        for name, f in (cb.get("frobenius_forms") or {}).items():
            forms[name] = Matrix.row(_dense_from_json(f, m, order, f"{path}.frobenius_forms.{name}"), order)
        cands = [
            Matrix.column(_dense_from_json(g, n, order, f"{path}.grouplike_candidates[{i}]"), order)
            for i, g in enumerate(cb.get("grouplike_candidates") or [])
        ]
        comodule = ComoduleAlgebra(hopf, alg, coaction, forms=forms, candidates=cands, validate=validate)
    return Instance(hopf, comodule)
