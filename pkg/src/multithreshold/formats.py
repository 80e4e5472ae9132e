"""Text and JSON forms shared by the CLI and the experiment harness."""

import json
from pathlib import Path

from .graphs import Graph, build_family, format_edge_list, parse_edge_list, parse_family
from .lp.intervals import IntervalSet
from .lp.rational import parse_rational
from .representation import RankAssignment, ThresholdVector


def parse_rational_list(text):
    """``"-1,1,5"`` or ``"1/4 1/4 5/2"`` -> list of Fractions (no decimals)."""
    items = [x for x in text.replace(",", " ").split() if x]
    if not items:
        raise ValueError("empty list of rationals")
    return [parse_rational(x) for x in items]


def parse_thetas(text):
    return ThresholdVector(parse_rational_list(text))


def parse_ranks(text):
    """Inline list, ``@path``, or a path to a file holding a list or a JSON
    array of rational strings / a representation object with ``"ranks"``."""
    source = text
    if text.startswith("@"):
        source = Path(text[1:]).read_text()
    elif Path(text).is_file():
        source = Path(text).read_text()
    stripped = source.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        obj = json.loads(stripped)
        if isinstance(obj, dict):
            obj = obj["ranks"]
        return RankAssignment(parse_rational(str(x)) for x in obj)
    return RankAssignment(parse_rational_list(stripped))


def load_graph(family=None, edges=None):
    if (family is None) == (edges is None):
        raise ValueError("give exactly one of --family or --edges")
    if family is not None:
        return build_family(parse_family(family))
    return parse_edge_list(Path(edges).read_text())


def graph_to_json(g):
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(obj):
    return Graph(int(obj["n"]), frozenset(tuple(e) for e in obj["edges"]))


def thetas_to_json(th):
    return [str(t) for t in th]


def thetas_from_json(items):
    return ThresholdVector(parse_rational(str(x)) for x in items)


def ranks_to_json(r):
    return [str(x) for x in r]


def ranks_from_json(items):
    return RankAssignment(parse_rational(str(x)) for x in items)


def interval_set_to_json(s):
    return s.to_json()


def interval_set_from_json(items):
    return IntervalSet.from_json(items)


__all__ = [
    "format_edge_list",
    "graph_from_json",
    "graph_to_json",
    "interval_set_from_json",
    "interval_set_to_json",
    "load_graph",
    "parse_edge_list",
    "parse_rational_list",
    "parse_ranks",
    "parse_thetas",
    "ranks_from_json",
    "ranks_to_json",
    "thetas_from_json",
    "thetas_to_json",
]
