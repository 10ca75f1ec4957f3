import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oideal import Ideal
from oideal.instance import corpus_files, format_instance, load_instance, parse_instance
from oideal.polyparse import ParseError, parse_polynomial
from oideal.report import build_report, load_schema, summary_consistent
from oideal.limits import Limits
from oideal.runner import Options, run_command

from strategies import QQ3, homogeneous


def test_parse_simple():
    spec = parse_instance("ring QQ[x,y]\nideal I = x^2, x*y")
    R = spec.ring
    x, y = R.gens()
    assert spec.ideals["I"] == Ideal(R, [x * x, x * y])


def test_coefficient_reducing_to_zero_warns():
    spec = parse_instance("ring Fp 7[x]\nideal I = 7*x")
    assert spec.ideals["I"].is_zero()
    assert spec.warnings and "reduces to 0" in spec.warnings[0]


def test_non_homogeneous_rejected_with_position():
    with pytest.raises(ParseError) as e:
        parse_instance("ring QQ[x]\nideal I = x + 1")
    assert e.value.line == 2 and e.value.column == 11


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("ideal I = x", 1, 1),
        ("ring QQ[x,y]\nideal I = x + z", 2, 15),
        ("ring QQ[x]\nideal I = x^", 2, 13),
        ("ring QQ[x]\nideal I = x\nideal I = x", 3, 7),
        ("ring QQ[x]\ncheck frobnicate I", 2, 7),
        ("ring Fp 6[x]\nideal I = x", 1, 9),
        ("ring QQ[x]\nsop s = x, 0", 2, 12),
        ("ring QQ[x,y]\nmodule M = [x, y; x] degrees 0, 0", 2, 13),
    ],
)
def test_errors_carry_positions(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_instance(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_comments_fractions_and_modules():
    spec = parse_instance(
        "# header\nring QQ[a,b]   # ring\nideal I = 1/2*a^2 - (a + b)*b\nmodule M = [a, b; b, a] degrees 0, 0\n"
    )
    assert str(spec.ideals["I"].generators[0]) == "1/2*a^2 - a*b - b^2"
    assert spec.modules["M"].rank == 2


def test_unused_variable_and_parse_polynomial():
    R = QQ3
    f = parse_polynomial(R, "-(x - y)^2 + 3*z*x")
    x, y, z = R.gens()
    assert f == -(x - y) ** 2 + 3 * z * x


@given(st.lists(homogeneous(QQ3, max_degree=3), min_size=1, max_size=4))
def test_roundtrip_is_a_fixed_point(polys):
    polys = [p for p in polys if p] or [QQ3.var(0)]
    spec = parse_instance("ring QQ[x,y,z]\n")
    spec.ideals["I"] = Ideal(QQ3, polys)
    spec.sops["s"] = polys[:1]
    text = format_instance(spec)
    again = parse_instance(text)
    assert again.ideals["I"].generators == spec.ideals["I"].generators
    assert format_instance(again) == text


def test_corpus_roundtrip_and_size():
    names = set()
    total_ideals = 0
    for path in corpus_files():
        spec = load_instance(path)
        names.add(path.name)
        total_ideals += sum(1 for I in spec.ideals.values() if not I.is_zero())
        assert format_instance(parse_instance(format_instance(spec))) == format_instance(spec)
    assert {"twisted_cubic.oi", "segre.oi"} <= names
    assert total_ideals >= 10


def test_report_validates_against_schema():
    spec = load_instance("corpus/segre.oi")
    out = run_command(spec, "suite", Options())
    doc = build_report("suite", [spec.instance_id], out.reports, out.skipped, seed=0, limits=Limits())
    jsonschema.validate(doc, load_schema())
    assert summary_consistent(doc)
    assert doc["summary"]["verdict"] is True
    assert [c["claim_id"] for c in doc["checks"]] == sorted(c["claim_id"] for c in doc["checks"])


def test_improper_ideal_recorded_as_input_invalid():
    spec = parse_instance("ring QQ[x,y]\nideal U = x, 1*x^0\n")
    out = run_command(spec, "resolve", Options())
    assert out.skipped[0]["kind"] == "input-invalid"
