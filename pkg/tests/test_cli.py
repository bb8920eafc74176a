import json

import pytest

from berndt.cli import main
from berndt.mpcore import GammaPiExpr
from berndt.reference import load_golden


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_closed_form_json_matches_golden(capsys):
    code, out, _ = run(capsys, "closed-form", "--m", "2", "--json")
    assert code == 0
    e = GammaPiExpr.from_json(out)
    assert e == load_golden("mixed", 2)
    assert len(json.loads(out)["terms"]) == 5
    assert e.to_json() == out.strip()


def test_closed_form_value_digits(capsys):
    code, out, _ = run(capsys, "closed-form", "--m", "3", "--prec", "60")
    assert code == 0
    value = [l for l in out.splitlines() if l.startswith("value:")][0].split()[1]
    assert value.startswith("22.934507902109183806505777164392109780370949854972860689289")


def test_m1_rejected(capsys):
    code, _, err = run(capsys, "closed-form", "--m", "1")
    assert code == 2 and "m > 1" in err


def test_series_value(capsys):
    code, out, _ = run(capsys, "series", "--family", "C", "--p", "5", "--m", "2", "--y", "pi", "--digits", "40")
    assert code == 0
    assert "value: -0.0006427288708124946569046625328129533979053" in out


def test_series_rejects_negative_y(capsys):
    code, _, err = run(capsys, "series", "--family", "C", "--p", "5", "--m", "2", "--y", "-1")
    assert code == 2 and "positive" in err


def test_series_rejects_unknown_family(capsys):
    code, _, _ = run(capsys, "series", "--family", "nope", "--p", "5")
    assert code == 2


def test_integral(capsys):
    code, out, _ = run(capsys, "integral", "--s", "5", "--prec", "30")
    assert code == 0
    assert "value: 0.67196224286498274924243822479" in out and "tail bound" in out


def test_integral_needs_s4(capsys):
    code, _, err = run(capsys, "integral", "--s", "3")
    assert code == 2 and "s >= 4" in err


def test_barnes_command(capsys):
    code, out, _ = run(capsys, "barnes", "--m", "2", "--prec", "30")
    assert code == 0
    assert "value: 0.0013999213393020473942550796349" in out and "bridge residual" in out


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_verify_suite_passes_and_is_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--suite", "thm32", "--prec", "40")
    assert code == 0
    assert out1.count("PASS") == 27 and "FAIL" not in out1
    _, out2, _ = run(capsys, "verify", "--suite", "thm32", "--prec", "40")
    assert out1 == out2


def test_verify_thm6(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm6", "--prec", "40")
    assert code == 0, out


def test_verify_reports_failures_with_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "historical", "--prec", "30")
    assert code == 1
    assert "FAIL historical/ramanujan/n=2" in out


def test_verify_json_and_workers(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "core", "--prec", "30", "--json", "--workers", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["failed"] == 0 and doc["precision"] == 30
    keys = [r["key"] for r in doc["results"]]
    assert keys == sorted(keys)


def test_env_precision_and_out_file(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("BERNDT_PREC", "25")
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "closed-form", "--m", "2", "--out", str(target))
    assert code == 0 and out == ""
    value = [l for l in target.read_text().splitlines() if l.startswith("value:")][0].split()[1]
    assert len(value.replace("0.", "", 1).lstrip("0")) == 25


def test_more_precision_only_appends_digits(capsys):
    def value(prec):
        _, out, _ = run(capsys, "closed-form", "--m", "4", "--prec", str(prec))
        return [l for l in out.splitlines() if l.startswith("value:")][0].split()[1]

    lo, hi = value(30), value(70)
    assert hi.startswith(lo)
