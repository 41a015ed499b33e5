import runpy
import sys
from pathlib import Path

from tori.experiments import (NormTableConfig, SurveyConfig, config_from_args,
                              crosscheck_survey, norm_torus_table)

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_norm_table_shyr_is_e():
    rows = norm_torus_table(NormTableConfig(max_e=3, max_f=2, q=5))
    assert len(rows) == 6
    assert all(r["shyr"] == r["e"] for r in rows)


def test_survey_unramified_has_no_mismatch():
    res = crosscheck_survey(SurveyConfig(seed=1, count=30, unramified=True))
    assert res.total == 30 and not res.mismatches and res.geometric_mismatches == 0


def test_survey_geometric_orders_always_agree():
    res = crosscheck_survey(SurveyConfig(seed=2, count=60))
    assert res.geometric_mismatches == 0
    assert all(name == "S3" for name, *_ in res.mismatches)


def test_config_from_args():
    cfg = config_from_args(SurveyConfig, ["--seed", "7", "--count", "3", "--unramified"])
    assert cfg == SurveyConfig(seed=7, count=3, unramified=True)


def test_scripts_run(capsys, monkeypatch):
    monkeypatch.setattr(sys, "argv", ["x", "--max-e", "2", "--max-f", "1"])
    runpy.run_path(str(SCRIPTS / "norm_torus_table.py"), run_name="__main__")
    monkeypatch.setattr(sys, "argv", ["x", "--count", "5"])
    runpy.run_path(str(SCRIPTS / "crosscheck_survey.py"), run_name="__main__")
    out = capsys.readouterr().out
    assert "shyr" in out and "instances: 5" in out
