#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Reading and writing algebra files.

An algebra file is UTF-8 JSON with exact scalars kept as strings::

    {"field": {"type": "Fp", "p": 5},
     "dim": 2,
     "basis": ["b1", "b2"],
     "products": [{"left": "b2", "right": "b2", "result": {"b1": "1", "b2": "1"}}]}

Products that are not listed are zero. Files are opened through :mod:`smart_open`, so any
location it supports (local paths, compressed files, remote storage) can be read and written.
"""

from basisdiv.algebra import AlgebraPresentation, Vector, validate_presentation
from basisdiv.field import render, scalar_parse

from smart_open import open

from pathlib import Path

from typing import List

import json
import logging

logger = logging.getLogger(__name__)

CORPUS = Path(__file__).parent / "corpus"
SUFFIX = ".alg.json"

def parse_algebra_text(text:str, source:str="<data>") -> AlgebraPresentation:
    """ Parses algebra file content; JSON syntax errors are reported as source:line:col """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{source}:{e.lineno}:{e.colno}: {e.msg}")
    return validate_presentation(raw, source)

def parse_algebra_file(path:str) -> AlgebraPresentation:
    """ Reads and validates an algebra file.

    Parameters
    ----------
    path : str
        Location of the file, anything :func:`smart_open.open` accepts.

    Returns
    -------
    :class:`~basisdiv.algebra.AlgebraPresentation`
        The validated presentation.

    """
    with open(str(path), "r", encoding="utf-8") as f:
        text = f.read()
    A = parse_algebra_text(text, str(path))
    logger.info(f"loaded {A} from {path}")
    return A

def presentation_to_dict(A:AlgebraPresentation) -> dict:
    """ The algebra file layout of a presentation, products in index order """
    products = []
    for (i, j) in sorted(A.products):
        entry = A.products[(i, j)]
        products.append({
            "left": A.labels[i],
            "right": A.labels[j],
            "result": {A.labels[k]: render(entry[k]) for k in sorted(entry)},
        })
    return {
        "field": A.field.to_dict(),
        "dim": A.dim,
        "basis": list(A.labels),
        "products": products,
    }

def dump_algebra(A:AlgebraPresentation) -> str:
    return json.dumps(presentation_to_dict(A), indent=2, ensure_ascii=False) + "\n"

def write_algebra_file(A:AlgebraPresentation, path:str):
    """ Writes a presentation in the algebra file format """
    with open(str(path), "w", encoding="utf-8") as f:
        f.write(dump_algebra(A))
    logger.info(f"wrote {A} to {path}")

def corpus_names() -> List[str]:
    return sorted(p.name[:-len(SUFFIX)] for p in CORPUS.glob(f"*{SUFFIX}"))

def load_corpus(name:str) -> AlgebraPresentation:
    """ Loads a shipped example by name, e.g. "ex1", "d2" or "sl2-F5" """
    path = CORPUS / f"{name}{SUFFIX}"
    if not path.exists():
        raise ValueError(f"unknown corpus entry {name!r}; available: {', '.join(corpus_names())}")
    return parse_algebra_file(str(path))

def parse_element(text:str, A:AlgebraPresentation) -> Vector:
    """ An element given as a bare label ("b2") or as label=scalar pairs ("b1=1,b2=-1/2") """
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    coords = [A.field.zero] * A.dim
    for part in text.split(","):
        part = part.strip()
        if "=" in part:
            label, scalar = (s.strip() for s in part.split("=", 1))
        else:
            label, scalar = part, "1"
        i = A.index(label)
        coords[i] = coords[i] + scalar_parse(scalar, A.field)
    return A.vector(coords)
