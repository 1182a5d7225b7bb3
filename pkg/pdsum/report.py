"""
pdsum Report Module
Renders command results as human-readable text, JSON or CSV

Human output comes from the jinja2 templates in pdsum/templates; PASS/FAIL
marks are coloured with colorama and stripped again by click.echo when
stdout is not a terminal.
"""

import csv
import io
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from colorama import Fore, Style
from jinja2 import Environment, FileSystemLoader

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TEMPLATE_DIR = Path(__file__).resolve().parent / "templates"


class OutputFormat(Enum):
    """Output formats accepted by --format"""
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"

    @classmethod
    def choices(cls) -> Sequence[str]:
        return [fmt.value for fmt in cls]


def status_mark(passed: bool) -> str:
    """PASS in green or FAIL in red"""
    if passed:
        return f"{Fore.GREEN}PASS{Style.RESET_ALL}"
    return f"{Fore.RED}FAIL{Style.RESET_ALL}"


def text_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> List[str]:
    """Left-aligned columns separated by two spaces, header underlined"""
    cells = [[str(h) for h in header]] + [["" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def _build_environment() -> Environment:
    env = Environment(
        loader=FileSystemLoader(str(TEMPLATE_DIR)),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters['mark'] = status_mark
    return env


class Reporter:
    """
    Turns one command's result into text in the requested format.

    Each command supplies a JSON payload, a CSV header with rows, and the
    name of its human template; the reporter picks the one it needs.
    """

    def __init__(self, fmt: OutputFormat):
        self.fmt = fmt
        self._env: Optional[Environment] = None

    @property
    def env(self) -> Environment:
        if self._env is None:
            self._env = _build_environment()
        return self._env

    def render(self, command: str, payload: Dict[str, Any], header: Sequence[str],
               rows: Iterable[Sequence[Any]], template: Optional[str] = None,
               context: Optional[Dict[str, Any]] = None) -> str:
        """
        Render a command result.

        Args:
            command: Command name recorded in JSON output
            payload: JSON body (merged with schema and command)
            header: CSV header row
            rows: CSV data rows
            template: Human template name (default '<command>.txt.j2')
            context: Extra template variables (default: the payload)
        """
        if self.fmt is OutputFormat.JSON:
            return render_json(command, payload)
        if self.fmt is OutputFormat.CSV:
            return render_csv(header, rows)
        name = template or f"{command}.txt.j2"
        logger.debug("Rendering %s", name)
        return self.env.get_template(name).render(**(context if context is not None else payload))


def render_json(command: str, payload: Dict[str, Any]) -> str:
    document = {"schema": SCHEMA_VERSION, "command": command}
    document.update(payload)
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if value is None else value for value in row])
    return buffer.getvalue()
