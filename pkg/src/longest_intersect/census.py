"""The packaged census: every connected graph on 3 to 8 vertices, up to isomorphism."""

from __future__ import annotations

from importlib import resources
from typing import TextIO

from .graph import Graph
from .graph6 import parse_graph6, read_graph6_lines

CENSUS_FILE = "connected_3_8.g6"
# connected graphs per vertex count (OEIS A001349)
CENSUS_COUNTS = {3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def open_census() -> TextIO:
    return resources.files(__package__).joinpath("data", CENSUS_FILE).open("r", encoding="ascii")


def census(n_min: int = 3, n_max: int = 8) -> list[tuple[str, Graph]]:
    with open_census() as fh:
        out = []
        for _, line in read_graph6_lines(fh):
            g = parse_graph6(line)
            if n_min <= g.n <= n_max:
                out.append((line, g))
    return out
