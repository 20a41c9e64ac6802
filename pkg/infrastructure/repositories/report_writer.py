"""
Infrastructure Layer - Report Writer

Implements IReportWriter: human text, JSON documents and CSV tables
(pandas). File output is atomic and guarded by a FileLock.
"""
import json
import os
import sys
from typing import Optional

import pandas as pd
from filelock import FileLock

from domain.entities.reports import Report
from domain.interfaces import FORMATS, IReportWriter
from utils.logging_config import logger


class ReportWriter(IReportWriter):
    """Writes reports to stdout or to a file"""

    def __init__(self, stream=None):
        self._stream = stream

    def render(self, report: Report, fmt: str) -> str:
        if fmt not in FORMATS:
            raise ValueError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}")
        if fmt == "json":
            return json.dumps(report.to_dict(), indent=2, default=str)
        if fmt == "csv":
            return pd.DataFrame(report.to_records()).to_csv(index=False)
        return report.to_text()

    def write(self, report: Report, fmt: str, out: Optional[str] = None) -> Optional[str]:
        text = self.render(report, fmt)
        if not text.endswith("\n"):
            text += "\n"
        if out is None:
            stream = self._stream or sys.stdout
            stream.write(text)
            stream.flush()
            return None

        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with FileLock(f"{out}.lock"):
            temp_file = f"{out}.tmp"
            with open(temp_file, "w") as f:
                f.write(text)
            os.replace(temp_file, out)
        logger.info(f"Report written to {out}")
        return out
