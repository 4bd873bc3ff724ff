import json

from src.carry.lattice import carry_poset, submodule_lattice
from src.carry.serialize import lattice_to_dot, lattice_to_json, poset_to_dot, poset_to_json


def test_poset_json():
    payload = poset_to_json(carry_poset(4, 4, 3))
    assert (payload["p"], payload["d"], payload["n"]) == (3, 4, 4)
    assert payload["patterns"] == [
        {"pattern": [], "factor": [4], "compositions": 16},
        {"pattern": [1], "factor": [2, 2], "compositions": 19},
    ]
    assert payload["cover_edges"] == [[[], [1]]]


def test_lattice_json_is_plain_data():
    payload = lattice_to_json(submodule_lattice(4, 4, 3))
    assert json.loads(json.dumps(payload)) == payload
    assert [node["dimension"] for node in payload["nodes"]] == [0, 16, 35]
    assert payload["edges"][1] == {"lower": 1, "upper": 2, "pattern": [1], "factor": [2, 2]}


def test_dot_output():
    poset_dot = poset_to_dot(carry_poset(4, 4, 3))
    assert poset_dot.startswith("digraph carry_poset_p3_d4 {")
    assert "  c0 -> c1;" in poset_dot
    lattice_dot = lattice_to_dot(submodule_lattice(4, 4, 3))
    assert lattice_dot.startswith("digraph submodules_p3_d4_n4 {")
    assert '  n0 -> n1 [label="(4)"];' in lattice_dot
    assert lattice_dot.rstrip().endswith("}")
