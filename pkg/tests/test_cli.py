import io
import json
import subprocess
import sys

import jsonschema
import pytest

from monomial_conductor import cli
from monomial_conductor.cli import InputError, load_schema, main, parse_spec, parse_vectors

S39 = '{"dim": 2, "generators": [[2, 0], [3, 0], [1, 1], [0, 1]]}'
N345 = '{"numerical": [3, 4, 5]}'
SQUARE = '{"dim": 3, "generators": [[0,0,2],[0,0,3],[1,0,1],[0,1,1],[1,1,1]]}'
REPORT = jsonschema.Draft202012Validator(load_schema("report.schema.json"))


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("MONOMIAL_CONDUCTOR_DEGREE_CAP", raising=False)


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("s39", S39), ("n345", N345), ("square", SQUARE),
                       ("plane", '{"dim": 2, "generators": [[1, 0], [0, 1]], "labels": ["s", "t"]}')):
        p = tmp_path / f"{name}.json"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(argv):
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


def run_json(argv):
    code, text = run(argv + ["--format", "json"])
    doc = json.loads(text)
    REPORT.validate(doc)
    return code, doc


# -- parsing ------------------------------------------------------------------

def test_parse_spec_examples():
    assert parse_spec(N345).numerical == (3, 4, 5)
    spec = parse_spec(S39)
    assert spec.dim == 2 and spec.generators == ((2, 0), (3, 0), (1, 1), (0, 1))
    with pytest.raises(InputError, match="zero generator"):
        parse_spec('{"dim": 2, "generators": [[0, 0]]}')


@pytest.mark.parametrize("text,needle,line", [
    ('{"numerical": [4, 6]}', "gcd", 1),
    ('{"dim": 2,\n "generators": [[1, 0],\n   [1, 2, 3]]}', "dimension mismatch", 3),
    ('{"numerical": [3, 4], "dim": 1}', "mutually exclusive", 1),
    ('{"numerical": [3, true]}', "booleans", 1),
    ('{"numerical": [3, 4],\n  "numerical": [5]}', "duplicate key", None),
    ('{"numerical": [3, -4]}', "minimum", 1),
    ('{"dim": 2, "generators": [[1, 0]], "labels": ["s"]}', "labels", 1),
    ('{"dim": 2, "generators": [[1, 0]], "extra": 1}', "", 1),
    ('{"dim": 2, "generators": [[1, 0]\n', "malformed JSON", 2),
    ('[1, 2]', "object", 1),
])
def test_parse_spec_errors(text, needle, line):
    with pytest.raises(InputError) as exc:
        parse_spec(text)
    assert needle in str(exc.value)
    if line is not None:
        assert exc.value.line == line and exc.value.column >= 1


def test_parse_spec_position_points_at_bad_value():
    text = '{"dim": 2,\n "generators": [[1, 0],\n   [1, 2, 3]]}'
    with pytest.raises(InputError) as exc:
        parse_spec(text)
    assert (exc.value.line, exc.value.column) == (3, 4)


def test_parse_vectors():
    assert parse_vectors("2 0; 0 1", 2) == [(2, 0), (0, 1)]
    assert parse_vectors("1,2", 2) == [(1, 2)]
    for bad in ("2 0;", "2 x", "1 2 3"):
        with pytest.raises(InputError):
            parse_vectors(bad, 2)


def test_instance_schema_matches_parser():
    schema = jsonschema.Draft202012Validator(load_schema("instance.schema.json"))
    for text in (S39, N345, SQUARE):
        schema.validate(json.loads(text))
        assert schema.is_valid(parse_spec(text).to_dict())


# -- commands -----------------------------------------------------------------

def test_analyze_text_reports_maximal_conductor(files):
    code, text = run(["analyze", files["s39"]])
    assert code == 0
    assert "conductor = maximal ideal: true" in text


def test_analyze_json(files):
    code, doc = run_json(["analyze", files["s39"]])
    assert code == 0
    r = doc["result"]
    assert r["conductor"]["equals_maximal"] is True
    assert r["normalization"]["module_generators"] == [[0, 0], [1, 0]]
    assert r["certificate"]["verdict"] == "CertifiedUniversal"
    assert doc["limits"]["conductor_degree_cap"] == 30


def test_numerical_analyze(files):
    code, doc = run_json(["analyze", files["n345"]])
    assert code == 0
    assert doc["result"]["numerical"]["frobenius"] == 2


def test_ikeda_sop(files):
    code, doc = run_json(["ikeda", files["s39"], "--sop", "2 0; 0 1"])
    assert code == 0 and doc["result"]["contained"] is False
    code, doc = run_json(["ikeda", files["s39"], "--sop", "1 0; 0 1"])
    assert code == 2 and doc["error"]["type"] == "NotASystemOfParameters"
    code, doc = run_json(["ikeda", files["s39"], "--sop", "2 0"])
    assert code == 2
    code, doc = run_json(["ikeda", files["n345"]])
    assert code == 0 and doc["result"]["certificate"]["verdict"] == "CertifiedUniversal"


def test_normalize_and_conductor(files):
    code, doc = run_json(["normalize", files["plane"]])
    assert code == 0 and doc["result"]["is_normal"] is True
    assert doc["instance"]["labels"] == ["s", "t"]
    code, doc = run_json(["conductor", files["n345"], "--method", "search"])
    assert code == 0 and doc["result"]["r_generators"] == [[3], [4], [5]]


def test_uncertified_exits_3(files):
    code, doc = run_json(["conductor", files["square"]])
    assert code == 3 and doc["result"]["certified"] is False
    code, doc = run_json(["analyze", files["square"]])
    assert code == 3
    code, doc = run_json(["ikeda", files["square"]])
    assert code == 3 and doc["error"]["type"] == "UncertifiedResult"


def test_guard_exit_and_partial(files):
    code, doc = run_json(["normalize", files["s39"], "--closure-cap", "1"])
    assert code == 3
    assert doc["error"]["guard"] == "closure_cap" and doc["error"]["partial"] == [[0, 0]]
    assert doc["limits"]["closure_cap"] == 1


def test_input_errors_exit_2(files, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "generators": [[0, 0]]}')
    code, doc = run_json(["analyze", str(bad)])
    assert code == 2 and "zero generator" in doc["error"]["message"]
    assert doc["error"]["line"] == 1
    code, doc = run_json(["analyze", str(tmp_path / "missing.json")])
    assert code == 2


def test_corpus_verify():
    code, text = run(["corpus", "verify"])
    assert code == 0 and "PASS 345" in text
    code, doc = run_json(["corpus", "verify", "--only", "345", "xn-family-3"])
    assert code == 0 and [e["id"] for e in doc["result"]["entries"]] == ["345", "xn-family-3"]


def test_fuzz(files):
    code, doc = run_json(["fuzz", "--seed", "42", "--count", "20", "--workers", "1"])
    assert code == 0 and doc["result"]["counterexamples"] == 0
    code, doc = run_json(["fuzz", "--seed", "1", "--count", "3", "--mode", "affine", "--workers", "1"])
    assert code in (0, 3) and doc["result"]["config"]["max_generator"] == 4
    code, doc = run_json(["fuzz", "--seed", "1", "--count", "0"])
    assert code == 2
    code, doc = run_json(["fuzz", "--seed", "1", "--count", "2", "--degree-cap", "4", "--workers", "1"])
    assert doc["limits"]["sop_degree_cap"] == 4 and doc["result"]["config"]["sop_degree_cap"] == 4


def test_env_var_sets_default_cap(files, monkeypatch):
    monkeypatch.setenv("MONOMIAL_CONDUCTOR_DEGREE_CAP", "12")
    code, doc = run_json(["conductor", files["s39"]])
    assert doc["limits"]["conductor_degree_cap"] == 12
    code, doc = run_json(["conductor", files["s39"], "--conductor-degree-cap", "9"])
    assert doc["limits"]["conductor_degree_cap"] == 9


def _leaves(value, key=None):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _leaves(v, k)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for v in value:
            yield from _leaves(v, key)
    else:
        yield key, value


@pytest.mark.parametrize("argv", [["analyze", "s39"], ["analyze", "n345"], ["normalize", "square"],
                                  ["conductor", "square"], ["ikeda", "s39"], ["analyze", "plane"]])
def test_text_and_json_carry_same_data(files, argv):
    argv = [argv[0], files[argv[1]]]
    _, doc = run_json(argv)
    _, text = run(argv)
    lines = set(line.strip() for line in text.splitlines())
    for key, value in _leaves(doc):
        label = cli._LABELS.get(key, key.replace("_", " "))
        assert f"{label}: {cli._text(value)}" in lines, (key, value)


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "monomial_conductor.cli", "analyze", files["s39"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "conductor = maximal ideal: true" in proc.stdout
