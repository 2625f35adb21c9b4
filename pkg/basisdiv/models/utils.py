#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

from psutil import virtual_memory

from typing import Dict, Iterable, List, Sequence, Tuple

import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_SUBSPACE_CEILING = 256
DEFAULT_BASIS_CEILING = 10**6
CEILING_ENV = "BASISDIV_CEILING"

# rough size of one exact scalar held in an object array
SCALAR_BYTES = 100

def enumeration_ceilings() -> Tuple[int, int]:
    """ Ceilings for subspace enumeration (q^dim) and ordered-basis enumeration.

    The environment variable BASISDIV_CEILING overrides the defaults: "N" sets both
    ceilings to N, "N,M" sets them separately.

    Returns
    -------
    int, int
        Subspace ceiling and ordered-basis ceiling.

    """
    raw = os.environ.get(CEILING_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SUBSPACE_CEILING, DEFAULT_BASIS_CEILING
    parts = [p.strip() for p in raw.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"{CEILING_ENV} must be 'N' or 'N,M' with positive integers. Got {raw!r}")
    if len(values) not in (1, 2) or any(v <= 0 for v in values):
        raise ValueError(f"{CEILING_ENV} must be 'N' or 'N,M' with positive integers. Got {raw!r}")
    if len(values) == 1:
        values = values * 2
    logger.info(f"enumeration ceilings overridden by {CEILING_ENV}: {values[0]}, {values[1]}")
    return values[0], values[1]

def estimate_memory(count:int, dim:int) -> Dict[str, int]:
    """ Estimates the memory needed to hold `count` subspaces of a `dim`-dimensional space
    (or as many change-of-basis matrices) and warns when it will likely not fit into RAM.

    Parameters
    ----------
    count : int
        Number of objects kept in memory at once.
    dim : int
        Ambient dimension.

    Returns
    -------
    dict
        Dictionary of estimated memory sizes in bytes.

    """
    report = {}
    report["Matrices"] = count * dim * dim * SCALAR_BYTES
    report["Overhead"] = count * 256
    report["Total"] = sum(report.values())
    mb_size = int(report["Total"] / 1024**2)
    logger.debug(f"estimated memory for {count} objects of dimension {dim}: {mb_size} MB")
    if report["Total"] >= 0.95 * virtual_memory()[1]:
        logger.warning(f"holding {count} objects of dimension {dim} will likely not fit into RAM")
    return report

def connected_components(nodes:int, edges:Iterable[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    """ Connected components of an undirected graph on range(nodes), via union-find.

    Components are returned with sorted members, ordered by their least member, so the
    result only depends on the edge set.
    """
    parent = list(range(nodes))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    groups = {}
    for a in range(nodes):
        groups.setdefault(find(a), []).append(a)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])

def dot_graph(name:str, node_labels:Sequence[str], edges:Iterable[Tuple[int, int]]) -> str:
    """ Undirected DOT subgraph with one node per label """
    lines = [f"  subgraph \"{name}\" {{", f"    label=\"{name}\";"]
    for i, label in enumerate(node_labels):
        lines.append(f"    \"{name}:{i}\" [label=\"{label}\"];")
    for a, b in sorted(edges):
        lines.append(f"    \"{name}:{a}\" -- \"{name}:{b}\";")
    lines.append("  }")
    return "\n".join(lines)
