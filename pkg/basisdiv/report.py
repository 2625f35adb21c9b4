#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Reports produced by the command line front end.

A report is a JSON-compatible tree::

    {"schema_version": 1,
     "command": "classify-basis",
     "arguments": {...},
     "results": {...},
     "exit_code": 0,
     "timings": {...}}

"timings" is only present when requested, so reports are byte-stable for fixed input and seed.
Every failing division verdict carries its witness, the ideal generated by the product and a
"replayed" flag. Fuzz reports list the seed of every trial.
"""

from smart_open import open

from typing import Dict, Optional

import json
import logging

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TEXT = "text"
JSON = "json"

class Report(object):

    def __init__(self, command:str, arguments:Dict[str, object], results:Dict[str, object], exit_code:int=0, timings:Optional[Dict[str, float]]=None):
        self.command = command
        self.arguments = dict(arguments)
        self.results = results
        self.exit_code = exit_code
        self.timings = timings

    def __str__(self) -> str:
        return f"{self.__class__.__name__} of {self.command} with exit code {self.exit_code}"

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "arguments": self.arguments,
            "results": self.results,
            "exit_code": self.exit_code,
        }
        if self.timings is not None:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out

def _text_lines(value, indent:int=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar_text(item)}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) and item:
                lines = list(_text_lines(item, indent + 1))
                yield f"{pad}- {lines[0].lstrip()}"
                yield from lines[1:]
            elif isinstance(item, list) and item and any(isinstance(i, (dict, list)) for i in item):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {_scalar_text(item)}"
    else:
        yield f"{pad}{_scalar_text(value)}"

def _scalar_text(value) -> str:
    if isinstance(value, dict):
        return "{}" if not value else json.dumps(value, sort_keys=True, ensure_ascii=False)
    if isinstance(value, list):
        return "[" + ", ".join(_scalar_text(v) for v in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)

def emit_report(report:Report, format:str=TEXT) -> bytes:
    """ Serializes a report.

    Parameters
    ----------
    report : :class:`~basisdiv.report.Report`
        The report.
    format : {"text", "json"}, optional
        Human-readable outline or JSON with sorted keys.

    Returns
    -------
    bytes
        UTF-8 encoded serialization ending with a newline; identical for equal reports.

    """
    tree = report.to_dict()
    if format == JSON:
        text = json.dumps(tree, sort_keys=True, indent=2, ensure_ascii=False)
    elif format == TEXT:
        text = "\n".join(_text_lines(tree))
    else:
        raise ValueError(f"unknown report format {format!r}")
    return (text + "\n").encode("utf-8")

def write_report(report:Report, path:str, format:str=TEXT):
    with open(str(path), "wb") as f:
        f.write(emit_report(report, format))
    logger.info(f"wrote {report} to {path}")
