"""ASCII rendering of band diagrams.

Strands are columns two characters apart.  The header names the strands
``a``, ``b``, ...; the footer shows where each named strand ends.  Each letter
gets one row in which the crossing between columns i and i+1 is drawn as
`` / `` (positive generator, over-crossing) or `` \\ `` (negative, under).
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from . import braid as br
from .errors import MalformedToken, TooManyStrands
from .lenslift import BandDiagram

OVER = " / "
UNDER = " \\ "
MAX_STRANDS = 26


@dataclass(frozen=True)
class AsciiDiagram:
    lines: tuple[str, ...]

    def __str__(self) -> str:
        return "\n".join(self.lines)


def render_band(band: BandDiagram) -> AsciiDiagram:
    n = band.strands
    if n > MAX_STRANDS:
        raise TooManyStrands(f"can render at most {MAX_STRANDS} strands, got {n}")
    names = string.ascii_lowercase[:n]
    header = " ".join(names)
    perm = br.permutation(band.word).images
    final = [""] * n
    for s, pos in enumerate(perm):
        final[pos - 1] = names[s]
    footer = " ".join(final)
    rows = []
    blank = " ".join("|" * n)
    for e in band.word.letters:
        i = abs(e) - 1
        row = blank[:2 * i] + (OVER if e > 0 else UNDER) + blank[2 * i + 3:]
        rows.append(row)
    return AsciiDiagram((header, *rows, footer))


def parse_diagram(diagram: AsciiDiagram) -> br.BraidWord:
    """Recover the braid word from a rendered diagram."""
    lines = diagram.lines
    if len(lines) < 2:
        raise MalformedToken("a diagram has at least a header and a footer")
    n = len(lines[0].split())
    letters = []
    for row in lines[1:-1]:
        for glyph, sign in ((OVER, 1), (UNDER, -1)):
            at = row.find(glyph)
            if at >= 0:
                letters.append(sign * (at // 2 + 1))
                break
        else:
            raise MalformedToken(f"no crossing glyph in row {row!r}")
    return br.BraidWord(n, tuple(letters))
