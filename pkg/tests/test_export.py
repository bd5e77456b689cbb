import io

import pandas as pd
import pytest

from constadesign.exceptions import UsageError
from constadesign.models.designs import DesignReport
from constadesign.models.reports import CheckResult, VerificationReport, WdistReport
from constadesign.services.gf import build_tower
from constadesign.services.wdist import macwilliams_dual, weight_distribution_analytic
from constadesign.utils.export import blocks_frame, distribution_frame, render, write_report


def _wdist_report():
    wd = weight_distribution_analytic(3)
    return WdistReport(method="analytic", distribution=wd, dual=macwilliams_dual(wd), minimum_distance=6,
                       dual_distance=4)


def test_distribution_csv():
    frame = pd.read_csv(io.StringIO(render(_wdist_report(), "csv")))
    assert list(frame.columns) == ["weight", "count"]
    assert frame.values.tolist() == [[0, 1], [6, 240], [8, 2160], [9, 2000], [10, 2160]]


def test_distribution_frame_keeps_exact_integers():
    frame = distribution_frame(weight_distribution_analytic(32))
    assert frame["count"].tolist()[2] == 532575436800


def test_blocks_frame_skips_omitted_lists():
    shown = DesignReport(v=4, kappa=2, t=1, eta=1, b=2, blocks=[[0, 1], [2, 3]])
    omitted = DesignReport(v=4, kappa=2, t=1, eta=1, b=2, blocks=None, blocks_omitted=True)
    frame = blocks_frame({"primal": shown, "dual": omitted})
    assert frame["points"].tolist() == ["0 1", "2 3"]
    assert set(frame["design"]) == {"primal"}


def test_json_is_stable():
    report = _wdist_report()
    assert render(report) == render(report)
    assert '"schema": 1' in render(report)


def test_csv_only_for_tables():
    report = VerificationReport(q=2, tower=build_tower(2, 1).descriptor(),
                                checks=[CheckResult(name="x", passed=True)], passed=True)
    with pytest.raises(UsageError):
        render(report, "csv")


def test_write_report(tmp_path):
    out = tmp_path / "reports" / "wdist.json"
    text = write_report(_wdist_report(), str(out))
    assert out.read_text() == text
