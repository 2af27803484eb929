from collections import Counter

from longest_intersect.census import CENSUS_COUNTS, census, open_census
from longest_intersect.graph6 import emit_graph6


def test_counts_match_known_census():
    graphs = census()
    assert Counter(g.n for _, g in graphs) == CENSUS_COUNTS


def test_all_connected_and_canonical_text():
    for line, g in census(3, 7):
        assert g.is_connected()
        assert emit_graph6(g) == line


def test_no_duplicate_lines():
    with open_census() as fh:
        lines = [x.strip() for x in fh if x.strip()]
    assert len(lines) == len(set(lines)) == sum(CENSUS_COUNTS.values())
