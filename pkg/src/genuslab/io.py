"""File formats: group JSON files, edge lists and DOT export."""
from __future__ import annotations

import json
from pathlib import Path

from .graphs import SimpleGraph
from .groups import FiniteGroup, GroupError, from_cayley_table, from_permutation_generators


class FileFormatError(ValueError):
    pass


def parse_group(payload: dict, source: str = "<input>") -> FiniteGroup:
    if not isinstance(payload, dict):
        raise FileFormatError(f"{source}: expected a JSON object")
    name = str(payload.get("name", Path(source).stem))
    try:
        if "table" in payload:
            G = from_cayley_table(payload["table"], name)
            if "order" in payload and payload["order"] != G.order:
                raise FileFormatError(f"{source}: declared order {payload['order']} but table has {G.order} rows")
            return G
        if "generators" in payload:
            return from_permutation_generators(int(payload["degree"]), payload["generators"], name)
    except (GroupError, TypeError, KeyError) as exc:
        raise FileFormatError(f"{source}: {exc}") from exc
    raise FileFormatError(f"{source}: need either 'table' or 'degree' + 'generators'")


def load_group_file(path) -> FiniteGroup:
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_group(payload, str(path))


def group_to_json(G: FiniteGroup) -> str:
    return json.dumps({"name": G.name, "order": G.order, "table": G.table.tolist()})


def edgelist_text(g: SimpleGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_edgelist(text: str, source: str = "<input>") -> SimpleGraph:
    """One ``u v`` pair per line; ``#`` comments and blank lines are skipped.

    The vertex count is one more than the largest index, or the value of a
    leading ``# vertices N`` comment when that is larger.
    """
    edges = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "vertices" and parts[1].isdigit():
                n = max(n, int(parts[1]))
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FileFormatError(f"{source}:{lineno}: expected two vertex indices, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FileFormatError(f"{source}:{lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return SimpleGraph.from_edges(n, edges)


def load_edgelist(path) -> SimpleGraph:
    path = Path(path)
    return parse_edgelist(path.read_text(), str(path))


def dot_text(g: SimpleGraph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v in range(g.vertex_count):
        label = g.labels[v] if g.labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
