import json

import jsonschema
import pytest

from oideal.cli import main
from oideal.report import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_suite_twisted_cubic_json(capsys):
    code, out, _ = run(capsys, "suite", "corpus/twisted_cubic.oi", "--json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    claims = {c["claim_id"] for c in doc["checks"]}
    assert {"resolution-suite", "edge-nonzero", "small-canonical-implication", "lift-independence"} <= claims


def test_monomial_segre_t2(capsys):
    code, out, _ = run(capsys, "monomial", "corpus/segre.oi", "--t", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS monomial segre:Q/s")


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "resolve", "missing.oi")
    assert code == 2 and "no such instance file" in err


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.oi"
    p.write_text("ring QQ[x]\nideal I = x + 1\n")
    code, _, err = run(capsys, "resolve", str(p))
    assert code == 2 and "line 2" in err


def test_false_verdict_exit_1(tmp_path, capsys):
    p = tmp_path / "mixed.oi"
    p.write_text("ring QQ[x,y]\nideal I = x^2, x*y\n")
    code, out, _ = run(capsys, "unmixed", str(p))
    assert code == 1 and out.startswith("FALSE unmixed")


def test_resource_limit_exit_3(capsys):
    code, out, _ = run(capsys, "resolve", "corpus/quartic.oi", "--degree-cap", "3")
    assert code == 3 and "resource-limit" in out


def test_out_file_and_betti_diagram(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "betti", "corpus/lines.oi", "--out", str(dest))
    assert code == 0
    assert "total: 1 4 4 1" in out
    doc = json.loads(dest.read_text())
    assert doc["command"] == "betti" and doc["summary"]["total"] == 2


def test_jobs_do_not_change_output(capsys):
    _, one, _ = run(capsys, "suite", "corpus/aci.oi", "--json")
    _, four, _ = run(capsys, "suite", "corpus/aci.oi", "--json", "--jobs", "3")
    assert one == four


def test_fuzz_deterministic(capsys):
    _, a, _ = run(capsys, "fuzz", "--seed", "1", "--count", "10", "--json")
    _, b, _ = run(capsys, "fuzz", "--seed", "1", "--count", "10", "--json")
    assert a == b
    doc = json.loads(a)
    assert doc["summary"]["forced_failures"] == []
    jsonschema.validate(doc, load_schema())


def test_fuzz_degree_zero_profile(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "3", "--count", "10", "--profile", "degree0", "--json")
    doc = json.loads(out)
    kinds = {s["kind"] for s in doc["skipped"]}
    assert "input-invalid" in kinds and code in (0, 3)
    assert doc["summary"]["forced_failures"] == []


def test_bad_flag_values(capsys):
    assert main(["resolve", "corpus/segre.oi", "--jobs", "0"]) == 2
    with pytest.raises(SystemExit):
        main(["monomial", "corpus/segre.oi", "--t", "zero"])
