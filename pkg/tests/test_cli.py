import io
import json

import pytest

from skeinquot.cli import main
from skeinquot.exprparse import parse_poly
from skeinquot.generators import gen_G
from skeinquot.ringcore import serialize, deserialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "bk(2)*y")
    assert code == 0
    assert out.strip() == "(-q^2 + q^-2)*x1*x2"


def test_nf_json_cert(capsys):
    code, out, _ = run(capsys, "nf", "G(2)*x1 + y", "--json", "--cert")
    obj = json.loads(out)
    assert code == 0
    assert deserialize(json.dumps(obj["rep"])) == deserialize(serialize(parse_poly("y")))
    assert [e["n"] for e in obj["cert"]] == [2]


def test_nf_cert_text(capsys):
    code, out, _ = run(capsys, "nf", "G(2)*x1 + G(1)", "--cert")
    assert out.splitlines() == ["0", "cert: {2: x1, 1: 1}"]


def test_member(capsys):
    code, out, _ = run(capsys, "member", "G(2)*x1 + G(1)")
    assert code == 0 and out.strip() == "member; cert: {2: x1, 1: 1}"
    code, out, _ = run(capsys, "member", "y")
    assert code == 1 and out.strip() == "not a member"
    code, out, _ = run(capsys, "member", "y", "--json")
    assert code == 1 and json.loads(out) == {"member": False}
    code, out, _ = run(capsys, "member", "G(1)", "--json")
    assert json.loads(out)["member"] is True


def test_classify(capsys):
    assert run(capsys, "classify", "J(1)")[1].strip() == "Torsion"
    assert run(capsys, "classify", "y")[1].strip() == "HasFreePart"
    assert json.loads(run(capsys, "classify", "0", "--json")[1]) == {"class": "Zero"}


def test_split(capsys):
    code, out, _ = run(capsys, "split", "J(1) + x1")
    assert out.splitlines() == ["torsion: {1: 1}", "free: x1"]
    obj = json.loads(run(capsys, "split", "J(1) + x1", "--json")[1])
    assert [t["n"] for t in obj["torsion"]] == [1]


def test_nf_loc(capsys):
    code, out, _ = run(capsys, "nf-loc", "y")
    assert code == 0
    assert out.strip() == "(-q^2*x1*x2) / (q^4 + 1)"
    assert run(capsys, "nf-loc", "G(3)")[1].strip() == "0"
    obj = json.loads(run(capsys, "nf-loc", "y", "--json")[1])
    assert obj["denominator"] == [[4, "1"], [0, "1"]]


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "G", "1")
    assert out.strip() == str(gen_G(1))
    assert json.loads(run(capsys, "gen", "G", "1", "--json")[1]) == json.loads(serialize(gen_G(1)))
    code, _, err = run(capsys, "gen", "J", "0")
    assert code == 2 and "error" in err


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("bk(2)*y\n"))
    assert run(capsys, "nf", "-")[1].strip() == "(-q^2 + q^-2)*x1*x2"


@pytest.mark.parametrize("argv", [
    ["nf", "y +"], ["nf", "x1^-1"], ["bogus"], [], ["gen", "Z", "1"], ["verify", "--max-n", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_syntax_error_message(capsys):
    _, _, err = run(capsys, "nf", "y +")
    assert "line 1, column 4" in err and "expected one of" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--cases", "3", "--degree-bound", "3", "--json")
    assert code == 0
    assert all(c["status"] == "pass" for c in json.loads(out)["checks"])
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--cases", "2")
    assert code == 0 and "lemma_maintech" in out
