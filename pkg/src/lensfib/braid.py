"""Braid words in the Artin generators of B_n.

A letter ``e > 0`` stands for sigma_e and ``e < 0`` for sigma_|e|^-1.  Only
free reduction is applied to words; no braid relations are used, so exact
identity testing is available on two strands only (where B_2 is infinite
cyclic).  Closures are oriented with every strand running downward, which
makes sigma_1^2 a Hopf link with linking number +1.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .errors import GeneratorOutOfRange, MalformedToken, NotTwoStrands, StrandMismatch

__all__ = [
    "BraidWord",
    "StrandPermutation",
    "ClosureInvariants",
    "TwoStrandKind",
    "TwoStrandClosure",
    "parse_word",
    "format_word",
    "identity",
    "garside_delta",
    "concat",
    "power",
    "inverse",
    "free_reduce",
    "permutation",
    "closure_invariants",
    "classify_two_strand_closure",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise GeneratorOutOfRange(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(e) for e in self.letters)
        object.__setattr__(self, "letters", letters)
        for e in letters:
            if e == 0:
                raise MalformedToken("zero is not a braid generator")
            if abs(e) > self.strands - 1:
                raise GeneratorOutOfRange(
                    f"generator {e} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if e > 0 else -1 for e in self.letters)

    def to_dict(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_dict(cls, data: dict) -> "BraidWord":
        return cls(int(data["strands"]), tuple(data["letters"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "BraidWord":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class StrandPermutation:
    """``images[i]`` is the final position of the strand that starts at ``i + 1``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles as 1-based tuples, ordered by their smallest element."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k + 1)
                k = self.images[k] - 1
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class ClosureInvariants:
    component_count: int
    exponent_sum: int
    # linking[i][j] for i != j is lk(K_i, K_j); linking[i][i] is the self-writhe of K_i
    linking: tuple[tuple[int, ...], ...]
    # components[i] lists the starting strand positions making up K_i
    components: tuple[tuple[int, ...], ...] = ()

    def lk(self, i: int, j: int) -> int:
        """Linking number of components ``i`` and ``j`` (1-based)."""
        return self.linking[i - 1][j - 1]

    def to_dict(self) -> dict:
        return {
            "components": self.component_count,
            "exponent_sum": self.exponent_sum,
            "linking": [list(row) for row in self.linking],
        }


def parse_word(text: str, strands: int) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            e = int(tok)
        except ValueError:
            raise MalformedToken(f"not an integer: {tok!r}") from None
        if e == 0:
            raise MalformedToken("zero is not a braid generator")
        letters.append(e)
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(e) for e in w.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def garside_delta(n: int) -> BraidWord:
    """Positive half twist s_1 (s_2 s_1) ... (s_{n-1} ... s_1).

    The descending blocks are taken shortest first.  Listing them longest
    first, (s_{n-1} ... s_1)(s_{n-2} ... s_1) ... s_1, gives a word of the
    same length that is not reduced for n >= 3 (it ends in s_1 s_1) and does
    not reverse the strands.
    """
    letters: list[int] = []
    for top in range(1, n):
        letters.extend(range(top, 0, -1))
    return BraidWord(n, tuple(letters))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(f"cannot concatenate braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        w, k = inverse(w), -k
    return BraidWord(w.strands, w.letters * k)


def product(words: Iterable[BraidWord], strands: int) -> BraidWord:
    out = identity(strands)
    for w in words:
        out = concat(out, w)
    return out


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(_backend.free_reduce(w.letters)))


def permutation(w: BraidWord) -> StrandPermutation:
    return StrandPermutation(tuple(_backend.permutation(w.strands, w.letters)))


def closure_invariants(w: BraidWord) -> ClosureInvariants:
    cycles = permutation(w).cycles()
    comp = [0] * w.strands
    for c, cyc in enumerate(cycles):
        for s in cyc:
            comp[s - 1] = c
    tally = _backend.crossing_tally(w.strands, w.letters, comp, len(cycles))
    k = len(cycles)
    linking = []
    for i in range(k):
        row = []
        for j in range(k):
            if i == j:
                row.append(tally[i][i])
            else:
                # crossings between two closed components come in pairs
                assert tally[i][j] % 2 == 0, tally
                row.append(tally[i][j] // 2)
        linking.append(tuple(row))
    return ClosureInvariants(
        component_count=k,
        exponent_sum=w.exponent_sum,
        linking=tuple(linking),
        components=tuple(cycles),
    )


class TwoStrandKind(enum.Enum):
    TWO_UNLINK = "TwoUnlink"
    UNKNOT = "Unknot"
    HOPF_POSITIVE_LINKING = "HopfPositiveLinking"
    HOPF_NEGATIVE_LINKING = "HopfNegativeLinking"
    TORUS_LINK = "TorusLink"


# The fibred-link naming read from the page-boundary orientation, which
# reverses one strand relative to the coherent braid orientation.
FIBRED_HOPF_NAMES = {
    TwoStrandKind.HOPF_NEGATIVE_LINKING: "H+",
    TwoStrandKind.HOPF_POSITIVE_LINKING: "H-",
}


@dataclass(frozen=True)
class TwoStrandClosure:
    kind: TwoStrandKind
    exponent: int

    def label(self, fibred_naming: bool = False) -> str:
        if fibred_naming and self.kind in FIBRED_HOPF_NAMES:
            return FIBRED_HOPF_NAMES[self.kind]
        if self.kind is TwoStrandKind.TORUS_LINK:
            return f"TorusLink({self.exponent})"
        return self.kind.value


def classify_two_strand_closure(w: BraidWord) -> TwoStrandClosure:
    if w.strands != 2:
        raise NotTwoStrands(f"expected a 2-strand braid, got {w.strands} strands")
    k = free_reduce(w).exponent_sum
    if k == 0:
        kind = TwoStrandKind.TWO_UNLINK
    elif abs(k) == 1:
        kind = TwoStrandKind.UNKNOT
    elif k == 2:
        kind = TwoStrandKind.HOPF_POSITIVE_LINKING
    elif k == -2:
        kind = TwoStrandKind.HOPF_NEGATIVE_LINKING
    else:
        kind = TwoStrandKind.TORUS_LINK
    return TwoStrandClosure(kind, k)
