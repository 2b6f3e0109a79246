import json

import pytest
from click.testing import CliRunner

from mvlab.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def _parse(result):
    return json.loads(result.output)


def test_enumerate(runner):
    result = runner.invoke(main, ["enumerate", "--n", "2", "--max-height", "1"])
    assert result.exit_code == 0
    body = _parse(result)
    assert len(body["items"]) == 4
    assert body["order"] == [[1, 2], [1, 3], [2, 3]]


def test_apply_left_to_right(runner):
    result = runner.invoke(main, ["apply", "--ops", "f1 f2 f1"],
                           input='{"n": 2, "a": {}}')
    assert result.exit_code == 0
    body = _parse(result)
    assert body["datum"]["a"] == {"1,2": 1, "1,3": 1}


def test_apply_word_order_identity(runner):
    """Two operator words that land on the same element print identical JSON."""
    first = runner.invoke(main, ["apply", "--ops", "f1 f2 f2 f1"],
                          input='{"n": 2, "a": {}}')
    second = runner.invoke(main, ["apply", "--ops", "f2 f1 f1 f2"],
                           input='{"n": 2, "a": {}}')
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.output == second.output


def test_apply_bottom_exit_code(runner):
    result = runner.invoke(main, ["apply", "--ops", "e1"], input='{"n": 2, "a": {}}')
    assert result.exit_code == 3
    assert _parse(result)["bottom"] is True


def test_apply_invalid_json(runner):
    result = runner.invoke(main, ["apply", "--ops", "f1"], input="not json")
    assert result.exit_code == 1
    assert _parse(result)["schema"] == "mvlab/error.v1"


def test_apply_invalid_datum(runner):
    result = runner.invoke(main, ["apply", "--ops", "f1"],
                           input='{"n": 2, "a": {"5,5": 1}}')
    assert result.exit_code == 1


def test_psi_zero(runner):
    result = runner.invoke(main, ["psi"], input='{"n": 2, "a": {}}')
    assert result.exit_code == 0
    assert set(_parse(result)["M"].values()) == {0}


def test_polytope(runner):
    result = runner.invoke(main, ["polytope"], input='{"n": 2, "a": {"1,3": 1}}')
    assert result.exit_code == 0
    assert len(_parse(result)["vertices"]) == 6


def test_quiver(runner):
    result = runner.invoke(main, ["quiver", "--n", "2", "--maya", "1,3"])
    assert result.exit_code == 0
    assert _parse(result)["adapted_word"] == [2, 1, 2]


def test_quiver_bad_maya(runner):
    result = runner.invoke(main, ["quiver", "--n", "2", "--maya", "1,x"])
    assert result.exit_code == 1
    result = runner.invoke(main, ["quiver", "--n", "2", "--maya", "1,2,3"])
    assert result.exit_code == 1


def test_lagrangian(runner):
    result = runner.invoke(main, ["lagrangian", "--seed", "2"],
                           input='{"n": 1, "a": {"1,2": 3}}')
    assert result.exit_code == 0
    assert _parse(result)["ok"] is True


def test_verify_ok(runner):
    result = runner.invoke(
        main, ["verify", "--suite", "crystal-axioms", "--n", "1", "--max-height", "3"]
    )
    assert result.exit_code == 0
    body = _parse(result)
    assert body["ok"] is True and body["instances"] == 4


def test_verify_component_axioms_rank_three(runner):
    result = runner.invoke(
        main, ["verify", "--suite", "bz-axioms", "--n", "3", "--max-height", "5"]
    )
    assert result.exit_code == 0
    body = _parse(result)
    assert body["ok"] is True
    assert body["instances"] > 0


def test_verify_rejects_unknown_suite(runner):
    result = runner.invoke(main, ["verify", "--suite", "bogus"])
    assert result.exit_code == 1
    assert "unknown suite" in _parse(result)["error"]


def test_verify_violation_exit_code(runner, monkeypatch):
    from mvlab import suites

    def fake_run_suite(name, n=None, max_height=None, jobs=1, seed=suites.DEFAULT_SEED):
        return suites.VerifyReport(
            suite=name,
            params={},
            instances=1,
            violations=({"check": "synthetic"},),
            elapsed=0.0,
        )

    monkeypatch.setattr(suites, "run_suite", fake_run_suite)
    result = runner.invoke(main, ["verify", "--suite", "crystal-axioms"])
    assert result.exit_code == 2
    assert _parse(result)["ok"] is False


def test_output_keys_are_sorted(runner):
    result = runner.invoke(main, ["psi"], input='{"n": 1, "a": {"1,2": 1}}')
    keys = [line.strip().split(":")[0] for line in result.output.splitlines()
            if line.strip().endswith(",") and ":" in line]
    assert keys == sorted(keys)
