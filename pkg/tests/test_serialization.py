import json

import pytest

from quiveralg import EdgeVector, VertexFunction, gen_quiver, gen_regular_morphism, make_quiver
from quiveralg.serialization import (
    SchemaError,
    dumps_morphism,
    dumps_quiver,
    edge_vector_to_obj,
    load_morphism,
    load_quiver,
    morphism_from_obj,
    morphism_to_obj,
    quiver_from_obj,
    quiver_to_obj,
    vertex_function_to_obj,
)
from fixtures import COLLAPSE, WLOOP


def test_quiver_round_trip():
    for seed in range(25):
        q = gen_quiver(seed, max_vertices=5, max_edges=9)
        assert quiver_from_obj(quiver_to_obj(q)) == q
        assert quiver_from_obj(json.loads(dumps_quiver(q))) == q


def test_morphism_round_trip():
    for seed in range(15):
        m = gen_regular_morphism(seed, max_vertices=4, max_edges=6)
        assert morphism_from_obj(morphism_to_obj(m)) == m
        assert morphism_from_obj(json.loads(dumps_morphism(m))) == m


def test_unicode_ids_round_trip():
    q = make_quiver(["ü"], [("ℓ", "ü", "ü", 1)])
    assert quiver_from_obj(json.loads(dumps_quiver(q))) == q


def test_weight_strings_parse_exactly():
    obj = {"vertices": ["u"], "edges": [{"id": "l", "src": "u", "rng": "u", "weight": "3/4"}]}
    q = quiver_from_obj(obj)
    assert str(q.edge("l").weight) == "3/4"


def test_numeric_weights_rejected():
    obj = {"vertices": ["u"], "edges": [{"id": "l", "src": "u", "rng": "u", "weight": 0.75}]}
    with pytest.raises(SchemaError, match="weight"):
        quiver_from_obj(obj)


def test_schema_errors_carry_location():
    with pytest.raises(SchemaError, match=r"edges\[0\]"):
        quiver_from_obj({"vertices": ["u"], "edges": [{"id": "l"}]})
    with pytest.raises(SchemaError, match="vmap"):
        morphism_from_obj({"dom": quiver_to_obj(WLOOP), "cod": quiver_to_obj(WLOOP),
                           "vmap": "nope", "emap": {}})


def test_morphism_path_references(tmp_path):
    (tmp_path / "dom.json").write_text(dumps_quiver(COLLAPSE.dom), encoding="utf-8")
    (tmp_path / "cod.json").write_text(dumps_quiver(COLLAPSE.cod), encoding="utf-8")
    doc = morphism_to_obj(COLLAPSE, dom_ref="dom.json", cod_ref="cod.json")
    (tmp_path / "m.json").write_text(json.dumps(doc), encoding="utf-8")
    assert load_morphism(tmp_path / "m.json") == COLLAPSE


def test_load_quiver_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError, match="JSON"):
        load_quiver(path)


def test_scalar_maps_serialize():
    f = VertexFunction.delta(WLOOP, "u")
    assert vertex_function_to_obj(f) == {"u": "1/1+0/1·i"}
    xi = EdgeVector.delta(WLOOP, "l", -2)
    assert edge_vector_to_obj(xi) == {"l": "-2/1+0/1·i"}
