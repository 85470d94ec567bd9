import json

from beta_numeration.__main__ import main
from beta_numeration.communication.models import RepresentationDTO
from beta_numeration.digits import canonicalize, format_representation, parse_representation


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_eval(capsys):
    code, out, _ = _run(capsys, "eval", "--field=-3,2", "--rep", "1•(0,-1)ω", "--rep", "1,-1•")
    assert code == 0
    assert out.splitlines() == ["1/5", "1/2"]


def test_represent_round_trip(capsys):
    code, rep, _ = _run(capsys, "represent", "--field=-1,-1,1", "--value", "3/7")
    assert code == 0
    code, out, _ = _run(capsys, "eval", "--field=-1,-1,1", f"--rep={rep}")
    assert (code, out) == (0, "3/7")


def test_represent_normalized_json(capsys):
    code, out, _ = _run(capsys, "--json", "represent", "--field=-3,2", "--value", "1/5", "--normalize")
    assert code == 0
    dto = RepresentationDTO.model_validate_json(out)
    assert dto.alphabet_bound <= 2
    assert dto.to_representation() == canonicalize(parse_representation(dto.text))
    code, value, _ = _run(capsys, "eval", "--field=-3,2", f"--rep={dto.text}")
    assert value == "1/5"


def test_represent_trace(capsys):
    code, out, _ = _run(capsys, "represent", "--field=-3,2", "--value", "1/5", "--trace", "--json")
    assert code == 0
    body = json.loads(out)
    assert (body["m"], body["l"], body["s"]) == (0, 4, 4)
    assert body["Z"] == [[13]]
    assert body["z"] == {"0": 13}


def test_represent_with_selector(capsys):
    code, rep, _ = _run(capsys, "represent", "--field=-1,-1,1", "--value", "1/3", "--selector", "greedy")
    assert code == 0
    assert set(parse_representation(rep).digits) <= {0, 1}


def test_invert(capsys):
    assert _run(capsys, "invert", "--field=-3,2", "--n", "2")[1] == "-1*beta^1 + 2*beta^0"
    code, out, _ = _run(capsys, "invert", "--field=-3,2", "--n", "5")
    assert (code, out) == (0, "not invertible in Z[beta,1/beta]")
    code, out, _ = _run(capsys, "--json", "invert", "--field=-5,0,1", "--n", "5")
    assert json.loads(out) == {"n": 5, "invertible": True, "terms": {"-2": 1}}


def test_classify(capsys):
    code, out, _ = _run(capsys, "--json", "classify", "--field=-1,-1,1")
    assert code == 0
    body = json.loads(out)
    assert body["label"] == "Pisot"
    assert body["hypotheses"] == "guaranteed"
    code, out, _ = _run(capsys, "classify", "--field=1,-1,-1,-1,1")
    assert "label: Salem" in out.splitlines()


def test_add_and_convert(capsys):
    expected = format_representation(canonicalize(parse_representation("2,1,2•(0,1,0)ω")))
    code, out, _ = _run(capsys, "add", "--field=-3,2", "--rep", "1•(1,0,2)ω", "--rep", "2,2•(2,-1,-1)ω",
                        "--normalize")
    assert (code, out) == (0, expected)
    assert _run(capsys, "convert", "--field=-3,2", "--rep", "2,3•(3,-1,1)ω")[1] == expected


def test_mul_and_lift(capsys):
    code, rep, _ = _run(capsys, "mul", "--field=-3,2", "--value", "13", "--rep", "0•(0,0,0,1)ω")
    assert code == 0
    assert _run(capsys, "eval", "--field=-3,2", f"--rep={rep}")[1] == "16/5"
    assert _run(capsys, "lift", "--field=-5,0,1", "--power", "2", "--rep", "1•", "--rep", "1•")[1] == "1,1•"


def test_orbit(capsys):
    code, rep, _ = _run(capsys, "orbit", "--field=-1,-1,1", "--value", "1/2")
    assert code == 0
    assert _run(capsys, "eval", "--field=-1,-1,1", f"--rep={rep}")[1] == "1/2"


def test_rule_file(capsys, tmp_path):
    path = tmp_path / "rule.json"
    path.write_text(json.dumps({"t": 0, "r": 0, "input_range": [-1, 1], "alphabet": [-1, 0, 1],
                                "table": {"-1": -1, "0": 0, "1": 1}}))
    code, out, _ = _run(capsys, "convert", "--field=-1,-1,1", "--rep", "1,0•(-1,1)ω", f"--rule-file={path}")
    assert (code, out) == (0, "1,0•(-1,1)ω")


def test_selector_file(capsys, tmp_path):
    path = tmp_path / "selector.json"
    path.write_text(json.dumps({"kind": "thurston", "gaussian": True}))
    code, rep, _ = _run(capsys, "orbit", "--field=2,2,1", "--value", "2/7", f"--selector-file={path}")
    assert code == 0
    assert _run(capsys, "eval", "--field=2,2,1", f"--rep={rep}")[1] == "2/7"


def test_bench(capsys):
    code, out, _ = _run(capsys, "--json", "bench", "--field=-3,2", "--q-from", "2", "--q-to", "6", "--workers", "2")
    assert code == 0
    rows = json.loads(out)
    assert [row["q"] for row in rows] == [2, 3, 4, 5, 6]
    assert rows[3]["period_length"] > 0
    code, out, _ = _run(capsys, "--json", "bench", "--field=-3,2", "--q-from", "5", "--q-to", "4")
    assert json.loads(out) == []
    code, out, _ = _run(capsys, "bench", "--field=-3,2", "--q-from", "2", "--q-to", "3")
    assert out.splitlines()[0] == "q,seconds,preperiod_length,period_length,alphabet_bound"


def test_schema(capsys):
    code, out, _ = _run(capsys, "schema", "trace")
    assert code == 0
    assert "qbar" in json.loads(out)["properties"]


def test_parse_errors(capsys):
    code, out, err = _run(capsys, "represent", "--value", "1/5")
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "ParseError"
    code, _, err = _run(capsys, "eval", "--field=-3,2", "--rep", "1•(0")
    assert code == 2
    assert json.loads(err)["error"] == "ParseError"


def test_domain_errors(capsys):
    code, _, err = _run(capsys, "represent", "--field=1,-1,-1,-1,1", "--value", "1/2")
    assert code == 1
    assert json.loads(err)["error"] == "HypothesisViolated"
    code, _, err = _run(capsys, "convert", "--field=-1,-1,1", "--rep", "1•")
    assert code == 1
    assert json.loads(err)["error"] == "FieldMismatch"
    code, _, err = _run(capsys, "represent", "--field=-1,-1,1", "--value", "1/3", "--normalize")
    assert json.loads(err)["error"] == "FieldMismatch"


def test_negative_values_as_separate_tokens(capsys):
    code, out, _ = _run(capsys, "invert", "--field", "-3,2", "--n", "5")
    assert (code, out) == (0, "not invertible in Z[beta,1/beta]")
    code, out, _ = _run(capsys, "eval", "--field", "-1,-1,1", "--rep", "1•")
    assert (code, out) == (0, "1")
    code, out, _ = _run(capsys, "--json", "classify", "--field", "-1,-1,1")
    assert json.loads(out)["label"] == "Pisot"
    code, rep, _ = _run(capsys, "represent", "--field", "-3,2", "--value", "-1/5")
    assert _run(capsys, "eval", "--field", "-3,2", "--rep", rep)[1] == "-1/5"
