import csv
import json
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, TextIO


class ReportWriter(ABC):
    @abstractmethod
    def write_table(self, stream: TextIO, fields: Sequence[str], rows: List[Dict[str, str]]) -> None:
        """
        Write report rows in the order given

        Parameters
        ----------
        stream: TextIO
            Data output; nothing else is written to it
        fields: Sequence[str]
            Column names, in output order
        rows: List[Dict[str, str]]
            Pre-formatted values keyed by field
        """
        pass

    def write_document(self, stream: TextIO, document: dict) -> None:
        """
        Structured reports (catalogs, cross-checks) are JSON whatever the table format
        """
        json.dump(document, stream, indent=2)
        stream.write("\n")


class CsvReportWriter(ReportWriter):
    def write_table(self, stream: TextIO, fields: Sequence[str], rows: List[Dict[str, str]]) -> None:
        writer = csv.DictWriter(stream, fieldnames=list(fields), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


class JsonReportWriter(ReportWriter):
    def write_table(self, stream: TextIO, fields: Sequence[str], rows: List[Dict[str, str]]) -> None:
        json.dump([{field: row[field] for field in fields} for row in rows], stream, indent=2)
        stream.write("\n")

