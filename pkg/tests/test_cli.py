import json
from pathlib import Path

import pytest

from quiveralg.cli import run

DATA = Path(__file__).parent / "data"


def path(name: str) -> str:
    return str(DATA / name)


def test_validate_ok(capsys):
    assert run(["validate", path("loop.json")]) == 0
    assert "valid" in capsys.readouterr().out


def test_validate_violation_exits_1(capsys):
    assert run(["validate", path("zero_weight.json")]) == 1
    assert "non-positive weight l" in capsys.readouterr().out


def test_malformed_input_exits_2(capsys):
    assert run(["validate", path("malformed.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert run(["validate", path("no_such_file.json")]) == 2
    assert capsys.readouterr().err


def test_classify_output(capsys):
    assert run(["classify", path("arrow.json")]) == 0
    out = capsys.readouterr().out
    assert "sinks: b" in out
    assert "regular: a" in out


def test_check_morphism(capsys):
    assert run(["check-morphism", path("collapse.json")]) == 0
    assert "commuting squares hold" in capsys.readouterr().out


def test_check_regular_pass(capsys):
    assert run(["check-regular", path("collapse.json")]) == 0
    out = capsys.readouterr().out
    assert "A2: pass" in out and "A3: pass" in out


def test_check_regular_a3_failure(capsys):
    assert run(["check-regular", path("fork_to_loop.json")]) == 1
    out = capsys.readouterr().out
    assert "A3 fails at b" in out


def test_check_regular_structured(capsys):
    assert run(["check-regular", path("arrow_to_loop.json"), "--format", "structured"]) == 1
    obj = json.loads(capsys.readouterr().out)
    assert obj["ok"] is False
    assert obj["a2_failures"][0]["vertex"] == "a"


def test_compose_round_trips(capsys, tmp_path):
    assert run(["compose", path("collapse.json"), path("mod2.json")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["vmap"].values()) == {"u"}
    assert set(doc["emap"].values()) == {"l"}
    out = tmp_path / "composite.json"
    out.write_text(json.dumps(doc), encoding="utf-8")
    assert run(["check-regular", str(out)]) == 0


def test_compose_mismatch_exits_2(capsys):
    assert run(["compose", path("mod2.json"), path("collapse.json")]) == 2
    assert "rejected" in capsys.readouterr().err


def test_check_covariance(capsys):
    assert run(["check-covariance", path("collapse.json")]) == 0
    assert run(["check-covariance", path("fork_to_loop.json")]) == 1
    out = capsys.readouterr().out
    assert "C3: FAIL" in out


def test_c4lemma(capsys):
    assert run(["c4lemma", path("mod2.json"), "--seed", "1", "--random", "3"]) == 0
    out = capsys.readouterr().out
    assert "transport identity holds" in out
    assert run(["c4lemma", path("arrow_to_loop.json")]) == 1


def test_presentation_wloop(capsys):
    assert run(["presentation", path("wloop.json")]) == 0
    out = capsys.readouterr().out
    assert "t_l* t_l = 2 p_u" in out
    assert "p_u = (1/2) t_l t_l*" in out


def test_presentation_structured(capsys):
    assert run(["presentation", path("loop.json"), "--format", "structured"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["projections"] == ["p_u"]
    assert any(r["relation"] == "p_u = t_l t_l*" for r in obj["relations"])


def test_induced_hom(capsys):
    assert run(["induced-hom", path("collapse.json")]) == 0
    out = capsys.readouterr().out
    assert "p_u -> p_a + p_b" in out
    assert "t_l -> t_e1 + t_e2" in out


def test_induced_hom_rejects_non_regular(capsys):
    assert run(["induced-hom", path("arrow_to_loop.json")]) == 1
    assert "A2 fails" in capsys.readouterr().out


def test_verify_induced(capsys):
    assert run(["verify-induced", path("collapse.json")]) == 0
    assert "all relations preserved" in capsys.readouterr().out


def test_factor_check(capsys):
    assert run(["factor-check", path("collapse.json")]) == 0
    out = capsys.readouterr().out
    assert "F2: pass" in out
    assert "agrees" in out


def test_factor_check_failure(capsys):
    assert run(["factor-check", path("fork_to_loop.json")]) == 1
    assert "regular-factor: FAIL" in capsys.readouterr().out


def test_factor_check_rejects_weighted(capsys):
    assert run(["factor-check", path("wloop.json")]) == 2
    # wloop.json is a quiver document, not a morphism: schema error
    assert capsys.readouterr().err


def test_factor_check_rejects_weighted_morphism(capsys, tmp_path):
    from quiveralg import identity
    from quiveralg.serialization import dumps_morphism
    from fixtures import WLOOP

    doc = tmp_path / "wloop_id.json"
    doc.write_text(dumps_morphism(identity(WLOOP)), encoding="utf-8")
    assert run(["factor-check", str(doc)]) == 2
    assert "counting" in capsys.readouterr().err


def test_gen_commands_round_trip(capsys, tmp_path):
    assert run(["gen-quiver", "--seed", "7", "--max-vertices", "4", "--max-edges", "6"]) == 0
    q_text = capsys.readouterr().out
    q_file = tmp_path / "q.json"
    q_file.write_text(q_text, encoding="utf-8")
    assert run(["validate", str(q_file)]) == 0
    capsys.readouterr()

    assert run(["gen-regular-morphism", "--seed", "7"]) == 0
    m_text = capsys.readouterr().out
    m_file = tmp_path / "m.json"
    m_file.write_text(m_text, encoding="utf-8")
    assert run(["check-regular", str(m_file)]) == 0
    capsys.readouterr()

    # determinism: same seed, same document
    assert run(["gen-regular-morphism", "--seed", "7"]) == 0
    assert capsys.readouterr().out == m_text


def test_exit_code_contract(capsys):
    # exit 1 exactly when a mathematical check fails
    checks = [
        (["check-regular", path("collapse.json")], 0),
        (["check-regular", path("arrow_to_loop.json")], 1),
        (["check-regular", path("fork_to_loop.json")], 1),
        (["check-covariance", path("arrow_to_loop.json")], 1),
        (["verify-induced", path("mod2.json")], 0),
    ]
    for argv, expected in checks:
        assert run(argv) == expected, argv
        capsys.readouterr()
