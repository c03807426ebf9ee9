"""
Writes command results as CSV, JSON or Markdown, to files or to stdout.
"""

import datetime
import json
import os
import sys
from typing import Dict, Optional, Sequence

import pandas as pd

from export import export_tools
from schemes.mask import Mask
from tools import constants, tools


class DataExporter():
    """
    Exports masks, analysis reports and benchmark results.
    Without an output directory, results are written to stdout.
    """

    def __init__(self, out_dir: Optional[str] = None, file_format: str = "csv", stream=None):
        """
        Constructor.

        Parameters
        ----------
        out_dir : str, optional
            folder where the output should be stored, stdout if empty
        file_format : str, optional
            one of 'csv', 'json', 'md', by default 'csv'
        stream : optional
            text stream used instead of stdout
        """
        if file_format not in constants.OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format '{file_format}'.")
        self.out_dir = out_dir or None
        self.file_format = file_format
        self.stream = stream
        self.time_now = datetime.datetime.now().strftime("%Y-%m-%d--%H-%M-%S")
        self.written_files = []
        if self.out_dir:
            os.makedirs(self.out_dir, exist_ok=True)


    def _write(self, kind: str, content: str, extension: Optional[str] = None) -> Optional[str]:
        if not self.out_dir:
            (self.stream or sys.stdout).write(content)
            return None
        file_name = os.path.join(self.out_dir, f"{kind}__{self.time_now}.{extension or self.file_format}")
        with open(file_name, "w", encoding="utf-8") as out_file:
            out_file.write(content)
        self.written_files.append(file_name)
        tools.print_info_message(f"Results are stored in '{file_name}'.")
        return file_name


    def _render_records(self, frame: pd.DataFrame, records, index: bool = False) -> str:
        if self.file_format == "json":
            return json.dumps(records, indent=1, sort_keys=True, default=str) + "\n"
        if self.file_format == "md":
            return export_tools.frame_to_markdown(frame, index=index)
        return frame.to_csv(index=index, float_format=None)


    def export_mask(self, mask: Mask) -> Optional[str]:
        """ Coefficient matrix (CSV / Markdown) or exact term list (JSON). """
        frame = export_tools.mask_frame(mask)
        frame.index.name = "alpha1\\alpha2"
        return self._write(f"mask_{mask.family}", self._render_records(frame, mask.to_json(), index=True))


    def export_record(self, kind: str, record: Dict) -> Optional[str]:
        """ A single result object, e.g. an analysis report or a solve summary. """
        frame = pd.DataFrame([{key: json.dumps(value) if isinstance(value, (list, dict)) else value
                               for key, value in record.items()}])
        return self._write(kind, self._render_records(frame, record))


    def export_records(self, kind: str, records: Sequence[Dict]) -> Optional[str]:
        frame = pd.DataFrame([{key: json.dumps(value) if isinstance(value, (list, dict)) else value
                               for key, value in record.items()} for record in records])
        return self._write(kind, self._render_records(frame, list(records)))


    def export_table(self, table_id: int, rows: Sequence[Dict]) -> Optional[str]:
        """
        Benchmark rows: the full result columns for CSV / JSON, the published layout
        (cases side by side) for Markdown.
        """
        if self.file_format == "md":
            content = f"### Table {table_id}\n\n" + export_tools.frame_to_markdown(export_tools.published_layout_frame(rows))
            return self._write(f"table{table_id}", content)
        return self._write(f"table{table_id}", self._render_records(export_tools.table_frame(rows), list(rows)))


    def export_residual_history(self, history: Sequence[float]) -> Optional[str]:
        """ Relative residual per V-cycle, always as CSV. """
        return self._write("residuals", export_tools.history_frame(history).to_csv(index=False), "csv")
