from pathlib import Path

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.errors import MalformedInput
from recoloureur.graph.graph_io import PathLike, content_lines, write_text_atomic


def format_colouring(c: Colouring) -> str:
    return f"palette {c.palette_size}\n" + " ".join(str(x) for x in c.colours) + "\n"


def parse_colouring(text: str) -> Colouring:
    """
    Reads an optional `palette l` header and one line of 1-based colours.
    Without the header the palette is the largest colour present.
    """
    rows = list(content_lines(text))
    palette = 0
    if rows and rows[0][0] == "palette":
        if len(rows[0]) != 2:
            raise MalformedInput("palette header must be 'palette l'")
        try:
            palette = int(rows[0][1])
        except ValueError:
            raise MalformedInput(f"bad palette size {rows[0][1]!r}")
        rows = rows[1:]
    if len(rows) > 1:
        raise MalformedInput("colouring must be a single line")
    try:
        colours = [int(t) for t in rows[0]] if rows else []
    except ValueError:
        raise MalformedInput("colours must be integers")
    if any(x < 1 for x in colours):
        raise MalformedInput("colours are 1-based")
    if palette and any(x > palette for x in colours):
        raise MalformedInput(f"colour above palette {palette}")
    return Colouring.of(colours, palette)


def read_colouring(path: PathLike) -> Colouring:
    return parse_colouring(Path(path).read_text(encoding="utf-8"))


def write_colouring(path: PathLike, c: Colouring) -> None:
    write_text_atomic(path, format_colouring(c))
