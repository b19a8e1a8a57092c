import os
import tempfile
from pathlib import Path
from typing import Iterator, List, Union

from recoloureur.errors import MalformedInput
from recoloureur.graph.graph_base import Graph, build_graph

PathLike = Union[str, Path]


def write_text_atomic(path: PathLike, text: str) -> None:
    """
    Writes `text` to a temporary file next to `path`, then renames it over.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def content_lines(text: str) -> Iterator[List[str]]:
    """
    Yields the whitespace-split tokens of every line that is neither blank
    nor a `#` comment.
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line.split()


def _ints(tokens: List[str], where: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput(f"{where}: expected integers, got {' '.join(tokens)!r}")


# ---------------------------------------------------------
# Graph text format: "n m" then m lines "u v" (u < v, sorted)
# ---------------------------------------------------------

def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.vertex_count} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = list(content_lines(text))
    if not rows:
        raise MalformedInput("graph file is empty")
    header = _ints(rows[0], "graph header")
    if len(header) != 2:
        raise MalformedInput("graph header must be 'n m'")
    n, m = header
    if len(rows) - 1 != m:
        raise MalformedInput(f"graph header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for i, row in enumerate(rows[1:], start=1):
        pair = _ints(row, f"edge line {i}")
        if len(pair) != 2:
            raise MalformedInput(f"edge line {i} must hold two endpoints")
        edges.append((pair[0], pair[1]))
    return build_graph(n, edges)


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path: PathLike, g: Graph) -> None:
    write_text_atomic(path, format_graph(g))
