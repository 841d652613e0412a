"""JSON formats for complexes, cochains, differential cochains and trivializations.

Rationals are decimal-free strings ``"p/q"`` or ``"n"``; cochain values are
keyed by ``"[v0,...,vk]"`` and omitted simplices are zero.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .diffcochain import DiffCochain
from .simplicial import Cochain, Lattice, SimplicialComplex, format_rational
from .trivialization import Trivialization
from . import corpus


class SchemaError(ValueError):
    """Input that does not match the expected JSON layout."""


def _require(obj: Any, key: str, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise SchemaError(f"missing key {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"key {key!r} should be {kind.__name__}")
    return value


def simplex_key(s) -> str:
    return "[" + ",".join(str(v) for v in s) + "]"


def parse_simplex_key(key: str) -> tuple[int, ...]:
    try:
        s = json.loads(key)
    except json.JSONDecodeError as e:
        raise SchemaError(f"bad simplex key {key!r}") from e
    if not isinstance(s, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in s):
        raise SchemaError(f"bad simplex key {key!r}")
    return tuple(s)


# -- complexes ---------------------------------------------------------------


def maximal_simplices(K: SimplicialComplex) -> list[tuple[int, ...]]:
    faces = set()
    for k in range(1, K.dim + 1):
        for s in K.simplices(k):
            for i in range(len(s)):
                faces.add(s[:i] + s[i + 1:])
    return [s for k in range(K.dim + 1) for s in K.simplices(k) if s not in faces]


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"name": K.name, "simplices": [list(s) for s in maximal_simplices(K)]}


def complex_from_json(obj: dict) -> SimplicialComplex:
    simplices = _require(obj, "simplices", list)
    for s in simplices:
        if not isinstance(s, list) or not s or not all(
                isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in s):
            raise SchemaError(f"simplex {s!r} is not a non-empty list of non-negative integers")
        if len(set(s)) != len(s):
            raise SchemaError(f"simplex {s!r} repeats a vertex")
    try:
        return SimplicialComplex(simplices, name=str(obj.get("name", "")))
    except ValueError as e:
        raise SchemaError(str(e)) from e


# -- cochains ----------------------------------------------------------------


def cochain_to_json(c: Cochain) -> dict:
    return {
        "degree": c.degree,
        "coefficients": c.coefficients,
        "lattice": format_rational(c.lattice.alpha),
        "values": {simplex_key(s): format_rational(v) for s, v in c.as_dict().items()},
    }


def cochain_from_json(obj: dict, K: SimplicialComplex) -> Cochain:
    degree = _require(obj, "degree", int)
    coefficients = obj.get("coefficients", "V")
    try:
        lattice = Lattice.parse(obj.get("lattice", "1"))
        values = {parse_simplex_key(k): v for k, v in _require(obj, "values", dict).items()}
        for s in values:
            if s not in K:
                raise SchemaError(f"simplex {list(s)} is not in complex {K.name!r}")
        return Cochain.from_dict(K, degree, values, coefficients, lattice)
    except SchemaError:
        raise
    except (ValueError, TypeError) as e:
        raise SchemaError(str(e)) from e


# -- differential cochains ---------------------------------------------------


def diffcochain_to_json(x: DiffCochain) -> dict:
    out = {
        "n": x.n,
        "k": x.k,
        "lattice": format_rational(x.lattice.alpha),
        "c": cochain_to_json(x.c),
        "h": cochain_to_json(x.h),
    }
    if x.omega is not None:
        out["omega"] = cochain_to_json(x.omega)
    return out


def diffcochain_from_json(obj: dict, K: SimplicialComplex) -> DiffCochain:
    n = _require(obj, "n", int)
    k = _require(obj, "k", int)
    try:
        lattice = Lattice.parse(obj.get("lattice", "1"))
    except ValueError as e:
        raise SchemaError(str(e)) from e
    c = cochain_from_json(_require(obj, "c", dict), K)
    h = cochain_from_json(_require(obj, "h", dict), K)
    omega = cochain_from_json(obj["omega"], K) if obj.get("omega") is not None else None
    if k >= n and omega is None:
        raise SchemaError(f"Č({n})^{k} needs an 'omega' component")
    try:
        return DiffCochain(n, k, c, h, omega, lattice)
    except ValueError as e:
        raise SchemaError(str(e)) from e


# -- trivializations ---------------------------------------------------------


def trivialization_to_json(s: Trivialization) -> dict:
    return {
        "b": cochain_to_json(s.b),
        "khat": cochain_to_json(s.khat),
        "eta": cochain_to_json(s.eta),
        "of": diffcochain_to_json(s.x),
    }


def trivialization_from_json(obj: dict, K: SimplicialComplex) -> Trivialization:
    x = diffcochain_from_json(_require(obj, "of", dict), K)
    try:
        return Trivialization(cochain_from_json(_require(obj, "b", dict), K),
                              cochain_from_json(_require(obj, "khat", dict), K),
                              cochain_from_json(_require(obj, "eta", dict), K), x)
    except SchemaError:
        raise
    except ValueError as e:
        raise SchemaError(str(e)) from e


# -- files -------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise SchemaError(f"malformed JSON in {path}: {e.msg} (line {e.lineno})") from e


def load_complex(spec: str) -> SimplicialComplex:
    """A bundled complex by name, or a complex JSON file."""
    if spec in corpus.COMPLEXES:
        return corpus.get_complex(spec)
    return complex_from_json(load_json(spec))


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
