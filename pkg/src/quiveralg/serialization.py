"""JSON descriptions of quivers and morphisms.

Quiver documents look like

    {"vertices": ["u"],
     "edges": [{"id": "l", "src": "u", "rng": "u", "weight": "1/1"}]}

and weights are always strings ``"p/q"`` (or ``"p"``), parsed exactly;
JSON numbers are rejected so no value ever passes through a float.

Morphism documents look like

    {"dom": "path/to/quiver.json", "cod": {...inline quiver...},
     "vmap": {"a": "u"}, "emap": {"e1": "l"}}

``dom`` and ``cod`` may each be a path (resolved relative to the morphism
file) or an inline quiver object; generated morphisms are emitted with
inline quivers so a single document round-trips by itself.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .correspondence import EdgeVector, VertexFunction
from .morphisms import QuiverMorphism
from .quivers import Edge, FiniteQuiver

_WEIGHT_RE = re.compile(r"^-?\d+(/\d+)?$")


class SchemaError(ValueError):
    """A document does not match the expected schema."""


def parse_weight(s, where: str) -> Fraction:
    if not isinstance(s, str) or not _WEIGHT_RE.match(s):
        raise SchemaError(f"{where}: weight must be a string like \"3/4\", got {s!r}")
    return Fraction(s)


def format_weight(w: Fraction) -> str:
    return f"{w.numerator}/{w.denominator}"


def _expect(obj, key, typ, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if typ is not None and not isinstance(value, typ):
        raise SchemaError(f"{where}.{key}: expected {typ.__name__}, got {type(value).__name__}")
    return value


def quiver_from_obj(obj, where: str = "quiver") -> FiniteQuiver:
    vertices = _expect(obj, "vertices", list, where)
    for i, v in enumerate(vertices):
        if not isinstance(v, str):
            raise SchemaError(f"{where}.vertices[{i}]: vertex ids are strings")
    raw_edges = _expect(obj, "edges", list, where)
    edges = []
    for i, e in enumerate(raw_edges):
        loc = f"{where}.edges[{i}]"
        edges.append(
            Edge(
                id=_expect(e, "id", str, loc),
                src=_expect(e, "src", str, loc),
                rng=_expect(e, "rng", str, loc),
                weight=parse_weight(_expect(e, "weight", None, loc), loc),
            )
        )
    return FiniteQuiver(tuple(vertices), tuple(edges))


def quiver_to_obj(q: FiniteQuiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "edges": [
            {"id": e.id, "src": e.src, "rng": e.rng, "weight": format_weight(e.weight)}
            for e in q.edges
        ],
    }


def _quiver_ref(ref, base: Path | None, where: str) -> FiniteQuiver:
    if isinstance(ref, str):
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_quiver(path)
    if isinstance(ref, dict):
        return quiver_from_obj(ref, where)
    raise SchemaError(f"{where}: expected a path or an inline quiver object")


def morphism_from_obj(obj, base: Path | None = None, where: str = "morphism") -> QuiverMorphism:
    dom = _quiver_ref(_expect(obj, "dom", None, where), base, f"{where}.dom")
    cod = _quiver_ref(_expect(obj, "cod", None, where), base, f"{where}.cod")
    vmap = _expect(obj, "vmap", dict, where)
    emap = _expect(obj, "emap", dict, where)
    for k, v in list(vmap.items()) + list(emap.items()):
        if not isinstance(k, str) or not isinstance(v, str):
            raise SchemaError(f"{where}: vmap/emap entries are string-to-string")
    return QuiverMorphism(dom=dom, cod=cod, vmap=dict(vmap), emap=dict(emap))


def morphism_to_obj(m: QuiverMorphism, dom_ref: str | None = None,
                    cod_ref: str | None = None) -> dict:
    """Inline quivers by default; pass path strings to reference files."""
    return {
        "dom": dom_ref if dom_ref is not None else quiver_to_obj(m.dom),
        "cod": cod_ref if cod_ref is not None else quiver_to_obj(m.cod),
        "vmap": {v: m.vmap[v] for v in m.dom.vertices},
        "emap": {e.id: m.emap[e.id] for e in m.dom.edges},
    }


def load_quiver(path) -> FiniteQuiver:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return quiver_from_obj(obj, str(path))


def load_morphism(path) -> QuiverMorphism:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return morphism_from_obj(obj, base=path.parent, where=str(path))


def dumps_quiver(q: FiniteQuiver) -> str:
    return json.dumps(quiver_to_obj(q), ensure_ascii=False, indent=2)


def dumps_morphism(m: QuiverMorphism) -> str:
    return json.dumps(morphism_to_obj(m), ensure_ascii=False, indent=2)


def vertex_function_to_obj(f: VertexFunction) -> dict:
    return {v: f.values[v].serialize() for v in f.quiver.vertices}


def edge_vector_to_obj(xi: EdgeVector) -> dict:
    return {e: xi.values[e].serialize() for e in xi.quiver.edge_ids}
