import json
import os
import subprocess
from pathlib import Path

import pytest

import cyclohodge

ROOT = Path(__file__).resolve().parents[2]
SCHEMA_DIR = Path(os.environ.get("CYCLOHODGE_SCHEMA_DIR", ROOT / "schema"))
CLI = os.environ.get("CYCLOHODGE_CLI")

SEPTIC_BRANCH = [
    {"label": "0", "m": 1},
    {"label": "1", "m": 1},
    {"label": "x", "m": 4},
    {"label": "inf", "m": 1},
]
BASE_COVER = {"n": 7, "branch": [{"over": v, "e": 7} for v in ("0", "1", "inf")]}
FUJITA_SPEC = {"fiber": {"n": 7, "branch": SEPTIC_BRANCH}, "base_genus": 3, "base_cover": BASE_COVER}


def load_schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


@pytest.fixture(scope="module")
def output_validator():
    jsonschema = pytest.importorskip("jsonschema")
    return jsonschema.Draft202012Validator(load_schema("output.schema.json"))


@pytest.fixture(scope="module")
def job_validator():
    jsonschema = pytest.importorskip("jsonschema")
    return jsonschema.Draft202012Validator(load_schema("job.schema.json"))


def test_helpers():
    assert cyclohodge.frac("8/7") == "1/7"
    assert cyclohodge.frac("-1/4") == "3/4"
    assert cyclohodge.cover_genus(7, [1, 1, 4, 1]) == 6
    assert cyclohodge.hj_resolve(7, 3) == [3, 2, 2]
    assert cyclohodge.semistable_base_order([7, 4, 2, 1, 1]) == 28
    assert cyclohodge.hurwitz_base_genus(7, 0, [7, 7, 7]) == 3
    with pytest.raises(cyclohodge.CoreError, match="GcdNotOne"):
        cyclohodge.hj_resolve(6, 4)


def test_analyze_cover():
    out = cyclohodge.analyze_cover(7, SEPTIC_BRANCH)
    assert out["genus"] == 6
    assert out["dims"] == [2, 2, 1, 1, 0, 0]
    assert out["degrees"] == [1, 1, 2, 2, 3, 3]


def test_classify_and_monodromy():
    c = cyclohodge.classify_hg("8/7", "3/7", "9/7")
    assert c["finite"] is False
    assert c["interlacing"]["failing_k"] == 3
    m = cyclohodge.monodromy("1/4", "-1/4", "1/2")
    assert m["finiteness"]["verdict"] == "Finite"
    assert m["finiteness"]["bfs"]["order_if_found"] == 8
    pure = cyclohodge.monodromy("8/7", "3/7", "9/7", bfs_bound=500, certify_infinite=False)
    assert pure["finiteness"]["bfs"]["stop_reason"] == "BoundExceeded"


def test_fujita_report():
    r = cyclohodge.fujita_report(FUJITA_SPEC)
    assert r["total_rank"] == 6
    assert [(s["kind"], s["rank"], s["monodromy"]) for s in r["summands"]] == [
        ("Ample", 2, None),
        ("UnitaryFlat", 2, "Infinite"),
        ("UnitaryFlat", 2, "Infinite"),
    ]
    assert r["semiample"] == "No"


def test_small_commands():
    assert cyclohodge.resolve_sing(7, 6)["string"] == [2] * 6
    assert cyclohodge.reduce([1, 2, 3, 7, 3, 2, 1])["base_order"] == 42
    assert cyclohodge.reduce(base_cover=BASE_COVER)["hurwitz_genus"] == 3
    assert cyclohodge.kodaira_check(56, 3, 3, 8)["consistent"] is True


def test_errors():
    with pytest.raises(cyclohodge.CyclohodgeError) as e:
        cyclohodge.run("resolve-sing", {"n": 7})
    assert e.value.code == "SchemaViolation"
    with pytest.raises(cyclohodge.CyclohodgeError) as e:
        cyclohodge.monodromy("1", "1/3", "1/2")
    assert e.value.code == "ResonantInput"


SAMPLE_JOBS = [
    ("analyze-cover", {"n": 7, "branch": SEPTIC_BRANCH}),
    ("classify-hg", {"alpha": "8/7", "beta": "3/7", "gamma": "9/7"}),
    ("classify-hg", {"cover": {"n": 7, "branch": SEPTIC_BRANCH}, "j": 3}),
    ("monodromy", {"alpha": "1/4", "beta": "-1/12", "gamma": "1/2"}),
    ("monodromy", {"alpha": "8/7", "beta": "3/7", "gamma": "9/7"}),
    ("resolve-sing", {"n": 7, "q": 3}),
    ("reduce", {"multiplicities": [7, 4, 2, 1, 1], "base_cover": BASE_COVER}),
    ("fujita-report", FUJITA_SPEC),
    ("kodaira-check", {"K2": 56, "b": 3, "g": 3, "sigma": 8}),
]


@pytest.mark.parametrize("command,payload", SAMPLE_JOBS)
def test_outputs_match_schema(command, payload, output_validator, job_validator):
    job_validator.validate({"schema_version": 1, "command": command, "input": payload})
    output_validator.validate(cyclohodge.run(command, payload))


def test_error_matches_schema(output_validator):
    out = json.loads(cyclohodge._core.run_command("resolve-sing", json.dumps({"n": 6, "q": 4}), 100, True))
    output_validator.validate(out)
    assert out["error"]["code"] == "GcdNotOne"


@pytest.mark.skipif(CLI is None, reason="CYCLOHODGE_CLI not set")
class TestCli:
    def run_cli(self, *args, stdin=None):
        return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, check=False)

    def test_deterministic(self, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({"command": "fujita-report", "input": FUJITA_SPEC}))
        a = self.run_cli("run", str(job))
        b = self.run_cli("run", str(job))
        assert a.returncode == 0
        assert a.stdout == b.stdout
        assert json.loads(a.stdout)["semiample"] == "No"

    def test_stdin_and_text(self):
        r = self.run_cli("--format", "text", "resolve-sing", stdin='{"n": 7, "q": 3}')
        assert r.returncode == 0
        assert "-3 -2 -2" in r.stdout

    def test_exit_code_on_error(self, output_validator):
        r = self.run_cli("analyze-cover", '{"n": 7}')
        assert r.returncode == 2
        out = json.loads(r.stdout)
        output_validator.validate(out)
        assert out["error"]["code"] == "SchemaViolation"
        r = self.run_cli("classify-hg", "not json")
        assert r.returncode == 2
