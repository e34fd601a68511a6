"""Mood labels (`eio-2`, `iei-~1`), medieval names and turnstile rendering."""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable, Optional

from engine.exceptions import StatementSyntaxError
from engine.statements import RelationCode, format_statement, sort_codes

from .catalog import CatalogError

COMPLEMENT_MARK = '~'
_BARS = ('~', '\u00af', '\u0305')  # ascii, macron, combining overline
_CODE_TOKENS = ('a+', 'e+', 'á', 'é', 'a', 'e', 'i', 'o', 'u')

# Historical names keyed by the unaccented mood. The last five (Celaront and
# the four existential fallacies) name patterns and do not assert validity.
MEDIEVAL_NAMES = {
    ('a', 'a', 'a', 1): 'Barbara',
    ('a', 'i', 'i', 1): 'Darii',
    ('e', 'a', 'e', 1): 'Celarent',
    ('e', 'i', 'o', 1): 'Ferio',
    ('a', 'e', 'e', 2): 'Camestres',
    ('a', 'o', 'o', 2): 'Baroco',
    ('e', 'a', 'e', 2): 'Cesare',
    ('e', 'i', 'o', 2): 'Festino',
    ('a', 'i', 'i', 3): 'Datisi',
    ('e', 'i', 'o', 3): 'Ferison',
    ('i', 'a', 'i', 3): 'Disamis',
    ('o', 'a', 'o', 3): 'Bocardo',
    ('a', 'e', 'e', 4): 'Camenes',
    ('e', 'i', 'o', 4): 'Fresison',
    ('i', 'a', 'i', 4): 'Dimaris',
    ('e', 'a', 'o', 1): 'Celaront',
    ('a', 'a', 'i', 3): 'Darapti',
    ('e', 'a', 'o', 3): 'Felapton',
    ('a', 'a', 'i', 4): 'Bramantip',
    ('e', 'a', 'o', 4): 'Fesapo',
}

_VOWELS = 'aeiouAEIOU'
_PLAIN = {RelationCode.A_EXISTENTIAL: 'a', RelationCode.E_EXISTENTIAL: 'e'}


@dataclass(frozen=True)
class MoodLabel:
    major: RelationCode
    minor: RelationCode
    conclusion: RelationCode
    figure: int
    complementary: bool = False

    def __post_init__(self):
        for name in ('major', 'minor', 'conclusion'):
            object.__setattr__(self, name, RelationCode.parse(str(getattr(self, name))))
        if self.figure not in (1, 2, 3, 4):
            raise CatalogError(f"figure must be one of 1, 2, 3, 4; got {self.figure!r}")

    @property
    def codes(self) -> tuple:
        return self.major, self.minor, self.conclusion

    def text(self, ascii: bool = False) -> str:
        codes = ''.join(c.ascii if ascii else c.value for c in self.codes)
        bar = COMPLEMENT_MARK if self.complementary else ''
        return f"{codes}-{bar}{self.figure}"

    def __str__(self) -> str:
        return self.text()


def parse_mood(text: str) -> MoodLabel:
    """Read `eio-2`, `ea+e+-1`, `iei-~1` or `iei-1̄` (overline) back into a label."""
    body = unicodedata.normalize('NFC', text.strip())
    head, sep, tail = body.rpartition('-')
    if not sep:
        raise StatementSyntaxError(text, "a mood reads like 'eio-2'")
    complementary = False
    for bar in _BARS:
        if tail.startswith(bar) or tail.endswith(bar):
            complementary = True
            tail = tail.strip(bar)
    if tail not in ('1', '2', '3', '4'):
        raise StatementSyntaxError(text, f"unknown figure {tail!r}")
    codes = []
    rest = head
    while rest:
        token = next((t for t in _CODE_TOKENS if rest.startswith(t)), None)
        if token is None:
            raise StatementSyntaxError(text, f"unknown relation code at {rest!r}")
        codes.append(RelationCode.parse(token))
        rest = rest[len(token):]
    if len(codes) != 3:
        raise StatementSyntaxError(text, f"a mood has three relation codes, got {len(codes)}")
    return MoodLabel(*codes, figure=int(tail), complementary=complementary)


def _accent(vowel: str, style: str) -> str:
    if style == 'unicode':
        return unicodedata.normalize('NFC', vowel + '\u0301')
    return "\\'" + vowel


def medieval_name(mood: MoodLabel, style: str = 'tex') -> Optional[str]:
    """Historical name of a classical mood, accents copied onto the name's vowels.

    The first three vowels of a name spell the mood (Celarent: e, a, e), so an
    existential code in position k accents the k-th vowel: eáé-1 is
    `Cel\\'ar\\'ent` (style 'tex') or `Celárént` (style 'unicode').
    """
    if mood.complementary:
        return None
    plain = tuple(_PLAIN.get(code, code.value) for code in mood.codes)
    name = MEDIEVAL_NAMES.get(plain + (mood.figure,))
    if name is None:
        return None
    positions = [i for i, ch in enumerate(name) if ch in _VOWELS][:3]
    out = list(name)
    for position, code in zip(positions, mood.codes):
        if code.existential:
            out[position] = _accent(name[position], style)
    return ''.join(out)


def moods_for(figure: int, major: RelationCode, minor: RelationCode, conclusions: Iterable[RelationCode],
              complementary: bool = False) -> list:
    return [MoodLabel(major, minor, code, figure, complementary) for code in sort_codes(conclusions)]


def turnstile(premises: Iterable, conclusion, ascii: bool = False) -> str:
    """`BeA, BiC ⊢ AoC`; with ascii=True the turnstile is `|-` and accents use aliases."""
    left = ', '.join(format_statement(p, ascii=ascii) for p in premises)
    return f"{left} {'|-' if ascii else '⊢'} {format_statement(conclusion, ascii=ascii)}"


def tabular(premises: Iterable, conclusion) -> str:
    """Premises stacked over a rule, conclusion under it marked with ∴."""
    lines = [f"  {format_statement(p)}" for p in premises]
    width = max(len(line) for line in lines + [f"∴ {format_statement(conclusion)}"])
    lines.append('─' * width)
    lines.append(f"∴ {format_statement(conclusion)}")
    return '\n'.join(lines)
