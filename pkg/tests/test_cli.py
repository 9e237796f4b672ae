import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from mhv.cli.config import load_config, parse_config
from mhv.cli.main import main
from mhv.cli.report import build_report, dumps, emit_report
from mhv.cli.seedexpr import parse_seed, render
from mhv.errors import BasisKeyError, ConfigError, ParseError
from mhv.liealg import WhittakerFunctionD, WhittakerFunctionH, d, h
from mhv.modops import OmegaModule, tensor, whittaker_module

W1 = whittaker_module(WhittakerFunctionD.make(1, {1: 1}, {"1/2": 1}, 0, 1))
WH = whittaker_module(WhittakerFunctionH.make({"1/2": 1}, 1))


# -- seed expressions ------------------------------------------------------------

def test_parse_seed_examples():
    assert parse_seed("w", WH) == WH.vacuum()
    assert parse_seed("h(-1/2)*w + 2*w", WH) == WH.basis((h("-1/2"),)) + WH.vacuum() * 2
    assert parse_seed("0", WH) == WH.zero()
    with pytest.raises(BasisKeyError, match="lies in"):
        parse_seed("d(1)*w", W1)


def test_parse_seed_powers_and_order():
    v = parse_seed("-1/2*h(-1/2)^2 * d(0) * w - 3*d(-1)*w", W1)
    assert v.coeff((h("-1/2"), h("-1/2"), d(0))) == F(-1, 2)
    assert v.coeff((d(-1),)) == -3


def test_parse_seed_tensor():
    T = tensor(OmegaModule(1, 1, 0), W1)
    v = parse_seed("t^2 (x) h(-1/2) * w + 3 * t (x) w", T)
    assert v.coeff((2, (h("-1/2"),))) == 1 and v.coeff((1, ())) == 3
    om = OmegaModule(2)
    assert parse_seed("t^3 + 1/2*t", om) == om.vector({3: 1, 1: F(1, 2)})


@pytest.mark.parametrize("text", ["h(-1/2) *", "2 w +", "h(1/3)*w", "w w", "d(0.5)*w"])
def test_parse_seed_errors(text):
    with pytest.raises((ParseError, BasisKeyError)):
        parse_seed(text, W1)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_seed("w + + w", WH)
    assert err.value.position == 4


keys = st.lists(st.sampled_from([(), (d(-1),), (d(0),), (h("-1/2"),), (h("-3/2"), h("-1/2")),
                                 (d(-1), h("-1/2"), d(0))]), unique=True, max_size=4)


@given(keys, st.lists(st.builds(F, st.integers(-9, 9).filter(bool), st.integers(1, 5)),
                      min_size=4, max_size=4))
def test_seed_render_round_trip(ks, cs):
    v = W1.vector({W1.order.sort(k): c for k, c in zip(ks, cs)})
    assert parse_seed(render(v), W1) == v


# -- config -------------------------------------------------------------------------

def test_config_rejects_unknown_keys():
    with pytest.raises(ConfigError, match="bogus"):
        parse_config({"suites": [], "bogus": 1})
    with pytest.raises(ConfigError):
        parse_config({"modules": {"x": {"type": "omega", "lambda0": "1", "gamma": "2"}}})
    with pytest.raises(ConfigError):
        parse_config({"suites": [{"type": "nope"}]})


def test_config_rejects_floats(tmp_path):
    p = tmp_path / "c.json"
    p.write_text('{"modules": {"o": {"type": "omega", "lambda0": 0.5}}}')
    with pytest.raises(ConfigError):
        load_config(p)


def test_config_named_references(tmp_path):
    cfg = parse_config({"modules": {
        "o": {"type": "omega", "lambda0": "2", "alpha": "1"},
        "w": {"type": "whittakerD", "m": 1, "d": {"1": "1"}, "h": {"1/2": "1"}, "l": "1"},
        "t": {"type": "tensor", "left": "o", "right": "w"}}})
    assert cfg.modules["t"].left == cfg.modules["o"]


# -- reports and commands -------------------------------------------------------------

def test_empty_report(tmp_path, capsys):
    assert dumps(build_report([])) == '{"suites":[],"verdict":"pass"}'
    cfg = tmp_path / "empty.json"
    cfg.write_text('{"suites": []}')
    assert main(["verify", "--config", str(cfg)]) == 0
    assert capsys.readouterr().out == '{"suites":[],"verdict":"pass"}\n'


def test_emit_report_to_file(tmp_path):
    out = tmp_path / "r.json"
    emit_report(build_report([], seed=3), out)
    assert json.loads(out.read_text()) == {"seed": 3, "suites": [], "verdict": "pass"}


SMALL = {
    "modules": {
        "WH": {"type": "whittakerH", "h": {"1/2": "1"}, "l": "1"},
        "WH0": {"type": "whittakerH", "h": {"1/2": "1"}, "l": "0"},
        "S": {"type": "sugawara", "h": {"1/2": "1"}, "l": "1"},
        "omega": {"type": "omega", "lambda0": "1", "alpha": "1"}},
    "caps": {"index_window": 3, "max_word_length": 3, "max_dimension": 200},
    "suites": [
        {"type": "axioms", "window": 2, "max_degree": 1, "random_cases": 10,
         "modules": ["WH0", "omega"]},
        {"type": "probe", "module": "WH0", "seed": "h(-1/2) * w", "expect": "ProperWitness"},
        {"type": "probe", "module": "WH", "seed": "h(-1/2) * w", "expect": "CyclicEvidence"}],
}


def write(tmp_path, obj, name="c.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_verify_passes_and_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, SMALL)
    outs = []
    for jobs in (1, 2):
        assert main(["verify", "--config", path, "--jobs", str(jobs), "--seed", "4"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    assert report["verdict"] == "pass" and report["seed"] == 4
    assert len(report["suites"]) == 3


def test_verify_failing_probe_exits_one(tmp_path, capsys):
    cfg = dict(SMALL, suites=[{"type": "probe", "module": "WH0", "seed": "h(-1/2) * w",
                               "expect": "CyclicEvidence"}])
    assert main(["verify", "--config", write(tmp_path, cfg)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "fail"
    assert "h(-1/2) * w" in json.dumps(report)


def test_sugawara_suite_needs_sugawara_module(tmp_path, capsys):
    cfg = dict(SMALL, suites=[{"type": "sugawara", "module": "WH"}])
    assert main(["verify", "--config", write(tmp_path, cfg)]) == 1


def test_error_exit_codes(tmp_path, capsys):
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2
    bad = write(tmp_path, {"suites": [{"type": "probe", "module": "nope", "seed": "w",
                                       "expect": "ProperWitness"}]})
    assert main(["verify", "--config", bad]) == 2
    path = write(tmp_path, SMALL)
    assert main(["probe", "--config", path, "--module", "WH", "--seed-expr", "d(0)*w"]) == 2
    assert "error" in capsys.readouterr().err


def test_probe_command(tmp_path, capsys):
    path = write(tmp_path, SMALL)
    assert main(["probe", "--config", path, "--module", "WH0", "--seed-expr", "h(-1/2)*w"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "ProperWitness" and out["certified"] is True


def test_criteria_command(tmp_path, capsys):
    path = write(tmp_path, SMALL)
    assert main(["criteria", "--config", path]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table
    assert "WH" in json.dumps(table)
