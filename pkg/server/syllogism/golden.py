"""Published results for the 196 problems, shipped as data.

Each grid is indexed [major][minor] with both codes in table order
a, á, e, é, i, o, u. A cell lists the deduced codes, comma separated.
A printed `u` stands for {i, o, u}.
These values are transcribed, never computed, so a mismatch against
`enumerate_all` points at either the transcription or the solver.
"""
from __future__ import annotations

from typing import NamedTuple

from engine.statements import CODES, RelationCode

from .catalog import Problem

CLASSICAL = 'classical'
COMPLEMENTARY = 'complementary'
KINDS = (CLASSICAL, COMPLEMENTARY)

_EMPTY = ('',) * 7

_GRIDS = {
    (1, CLASSICAL): (
        ('a', 'á,a,i', '', '', 'i', '', 'i'),
        ('a', 'á,a,i', '', '', 'i', '', 'i'),
        ('e', 'é,e,o', '', '', 'o', '', 'o'),
        ('e', 'é,e,o', '', '', 'o', '', 'o'),
        _EMPTY,
        _EMPTY,
        _EMPTY,
    ),
    (1, COMPLEMENTARY): (
        _EMPTY,
        ('', '', 'i', 'i', '', '', ''),
        _EMPTY,
        ('', '', 'o', 'o', '', '', ''),
        ('', '', 'i', 'i', '', '', ''),
        ('', '', 'o', 'o', '', '', ''),
        ('', '', 'u', 'u', '', '', ''),
    ),
    (2, CLASSICAL): (
        ('', '', 'e', 'é,e,o', '', 'o', 'o'),
        ('', '', 'e', 'é,e,o', '', 'o', 'o'),
        ('e', 'é,e,o', '', '', 'o', '', 'o'),
        ('e', 'é,e,o', '', '', 'o', '', 'o'),
        _EMPTY,
        _EMPTY,
        _EMPTY,
    ),
    (2, COMPLEMENTARY): (
        _EMPTY,
        ('', '', 'i', 'i', '', '', ''),
        _EMPTY,
        ('i', 'i', '', '', '', '', ''),
        ('', '', 'i', 'i', '', '', ''),
        ('i', 'i', '', '', '', '', ''),
        ('i', 'i', 'i', 'i', '', '', ''),
    ),
    (3, CLASSICAL): (
        ('', 'i', '', '', 'i', '', 'i'),
        ('i', 'i', '', '', 'i', '', 'i'),
        ('', 'o', '', '', 'o', '', 'o'),
        ('o', 'o', '', '', 'o', '', 'o'),
        ('i', 'i', '', '', '', '', ''),
        ('o', 'o', '', '', '', '', ''),
        ('u', 'u', '', '', '', '', ''),
    ),
    (3, COMPLEMENTARY): (
        ('', '', '', 'i', '', 'i', 'i'),
        ('', '', 'i', 'i', '', 'i', 'i'),
        ('', '', '', 'o', '', 'o', 'o'),
        ('', '', 'o', 'o', '', 'o', 'o'),
        ('', '', 'i', 'i', '', '', ''),
        ('', '', 'o', 'o', '', '', ''),
        ('', '', 'u', 'u', '', '', ''),
    ),
    (4, CLASSICAL): (
        ('', '', 'e', 'e', '', '', ''),
        ('i', 'i', 'e', 'e', '', '', ''),
        ('', 'o', '', '', 'o', '', 'o'),
        ('', 'o', '', '', 'o', '', 'o'),
        ('i', 'i', '', '', '', '', ''),
        _EMPTY,
        ('i', 'i', '', '', '', '', ''),
    ),
    (4, COMPLEMENTARY): (
        ('e', 'e', '', '', '', '', ''),
        ('e', 'e', 'i', 'i', '', '', ''),
        ('', '', '', 'o', '', 'o', 'o'),
        ('', '', '', 'o', '', 'o', 'o'),
        ('', '', 'i', 'i', '', '', ''),
        _EMPTY,
        ('', '', 'i', 'i', '', '', ''),
    ),
}


class GoldenCell(NamedTuple):
    classical: frozenset
    complementary: frozenset


def parse_cell(text: str) -> frozenset:
    codes = frozenset(RelationCode.parse(token) for token in text.split(',') if token.strip())
    # the printed tables show u alone; whatever gives u also gives i and o
    if RelationCode.U in codes:
        codes |= {RelationCode.I, RelationCode.O}
    return codes


def golden_tables(grids: dict = None) -> dict:
    """Expected (classical, complementary) code sets keyed by Problem, in table order."""
    grids = grids or _GRIDS
    table = {}
    for number in range(1, 5):
        classical, complementary = grids[number, CLASSICAL], grids[number, COMPLEMENTARY]
        for row, major in enumerate(CODES):
            for column, minor in enumerate(CODES):
                table[Problem(number, major, minor)] = GoldenCell(
                    parse_cell(classical[row][column]),
                    parse_cell(complementary[row][column]),
                )
    return table


def raw_grids() -> dict:
    """A mutable copy of the transcribed grids, accepted back by `golden_tables`."""
    return {key: [list(row) for row in grid] for key, grid in _GRIDS.items()}


class Mismatch(NamedTuple):
    problem: Problem
    kind: str
    expected: frozenset
    computed: frozenset


def compare(computed: dict, expected: dict) -> list:
    """Cells where computed deductions differ from the expected ones; only problems present in both."""
    mismatches = []
    for problem, result in computed.items():
        if problem not in expected:
            continue
        cell = expected[problem]
        for kind, want, got in (
            (CLASSICAL, cell.classical, result.classical),
            (COMPLEMENTARY, cell.complementary, result.complementary),
        ):
            if frozenset(want) != frozenset(got):
                mismatches.append(Mismatch(problem, kind, frozenset(want), frozenset(got)))
    return mismatches
