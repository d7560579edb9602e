import json
import subprocess
import sys

import jsonschema
import pytest

from cli_cases import CASES
from fermat_workbench.cli import main, run
from fermat_workbench.report import Report, load_schema, to_jsonable


@pytest.fixture(scope="module")
def validator():
    schema = load_schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def invoke(line):
    code, report = run(line.split())
    return code, report


@pytest.mark.parametrize("line", CASES)
def test_every_subcommand_emits_valid_json(line, validator):
    code, report = invoke(line)
    assert code == 0, line
    doc = json.loads(report.to_json())
    validator.validate(doc)
    assert doc["command"] == " ".join(line.split()[:2])


@pytest.mark.parametrize("line", ["legendre check 2 3 5", "zmodule sweep --samples 100 --seed 5", "quad conj-check --samples 50"])
def test_deterministic_modulo_elapsed(line):
    docs = []
    for _ in range(2):
        _, report = invoke(line)
        d = report.to_dict()
        d.pop("elapsed_ms")
        docs.append(json.dumps(d, sort_keys=True))
    assert docs[0] == docs[1]


def test_jobs_do_not_change_output():
    a = invoke("exp integer-scan --cmax 25 --jobs 1")[1].to_dict()
    b = invoke("exp integer-scan --cmax 25 --jobs 3")[1].to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_roundtrip():
    _, report = invoke("legendre frey 7 9 11 --n 9")
    text = report.to_json()
    assert Report.from_json(text).to_json() == text


def test_big_integers_are_strings():
    _, report = invoke("legendre frey 7 9 11 --n 9")
    disc = report.to_dict()["results"]["discriminant"]
    assert isinstance(disc, str)
    a, b = 7**9, 9**9
    assert int(disc) == 16 * (a * b * (a + b)) ** 2
    assert to_jsonable(2**53) == 2**53 and to_jsonable(2**53 + 1) == str(2**53 + 1)
    assert to_jsonable(float("inf")) is None


@pytest.mark.parametrize(
    "line, code",
    [
        ("legendre check 2 3", 2),
        ("legendre frey 2 2 1 --n 3", 2),
        ("exp solve 3 4 5", 2),
        ("zmodule thm22 --s 2 4 5 --k 2", 2),
        ("zmodule thm22 --s 3 4 5 --k 2 --l0 1,3,3", 2),
        ("pythagoras variant --kind bogus 1 1", 2),
        ("nonsense", 2),
    ],
)
def test_usage_errors(line, code, capsys):
    assert main(line.split()) == code
    captured = capsys.readouterr()
    assert captured.out == "" and captured.err


def test_violation_exit_code():
    # a negative tolerance cannot be met by any residual
    code, report = invoke("quad conj-check --samples 20 --tol -1")
    assert code == 1 and report.verdict == "violated"
    code, report = invoke("pythagoras search --n 1 --bound 10")
    assert code == 0 and report.verdict == "found"


def test_subprocess_entry_point(tmp_path):
    env_cases = [
        (["legendre", "check", "2", "3", "5"], 0),
        (["legendre", "check", "2", "3"], 2),
        (["quad", "conj-check", "--samples", "100", "--seed", "7"], 0),
    ]
    for argv, code in env_cases:
        proc = subprocess.run([sys.executable, "-m", "fermat_workbench", *argv], capture_output=True, text=True)
        assert proc.returncode == code, proc.stderr
        if code == 0:
            json.loads(proc.stdout)
        else:
            assert proc.stdout == ""


def test_jobs_env_fallback(monkeypatch):
    monkeypatch.setenv("FERMAT_WORKBENCH_JOBS", "2")
    code, report = invoke("scan flt --nmax 4 --zmax 30")
    assert code == 0 and report.verdict == "none-found"
