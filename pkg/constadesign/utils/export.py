"""Report writers: JSON for every report, CSV for weight distributions and design blocks."""
import logging
from pathlib import Path
from typing import Optional

import pandas as pd
from pydantic import BaseModel

from ..exceptions import UsageError
from ..models.codes import WeightDistribution
from ..models.designs import DesignReport
from ..models.reports import DesignsReport, WdistReport

logger = logging.getLogger(__name__)


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(by_alias=True, indent=2)


def distribution_frame(wd: WeightDistribution) -> pd.DataFrame:
    """A_0 and every nonzero A_w, one row per weight"""
    rows = [(0, wd.count(0))] + wd.nonzero()
    return pd.DataFrame(rows, columns=["weight", "count"])


def blocks_frame(designs: dict) -> pd.DataFrame:
    """One row per block: design label, block index, space-separated points"""
    records = []
    for label, design in designs.items():
        if design is None:
            continue
        if design.blocks is None:
            logger.warning("Blocks of the %s design were omitted (b=%d); raise the block threshold", label, design.b)
            continue
        for i, block in enumerate(design.blocks):
            records.append({"design": label, "block": i, "points": " ".join(str(x) for x in block)})
    return pd.DataFrame(records, columns=["design", "block", "points"])


def to_csv(report: BaseModel) -> str:
    if isinstance(report, WdistReport):
        return distribution_frame(report.distribution).to_csv(index=False)
    if isinstance(report, DesignsReport):
        designs = {"primal": report.primal, "dual": report.dual, "complement": report.complement}
        return blocks_frame(designs).to_csv(index=False)
    if isinstance(report, DesignReport):
        return blocks_frame({"design": report}).to_csv(index=False)
    raise UsageError("CSV output is available for wdist and designs only", {"report": type(report).__name__})


def render(report: BaseModel, fmt: str = "json") -> str:
    return to_csv(report) if fmt == "csv" else to_json(report) + "\n"


def write_report(report: BaseModel, out: Optional[str] = None, fmt: str = "json") -> str:
    """Render the report, write it to `out` when given, and return the text"""
    text = render(report, fmt)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info("Wrote %s report to %s", fmt, path)
    return text
