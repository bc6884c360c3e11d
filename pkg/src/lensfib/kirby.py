"""Kirby calculus on framed links, modelled by their linking matrices.

The diagonal holds framings and off-diagonal entries hold pairwise linking
numbers.  Component indices in the public API are 1-based.  Every move is an
integral unimodular congruence (possibly with a ±1 block added or removed),
so ``|det|`` -- the order of H_1 of the surgered manifold -- is invariant.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import IndexOutOfRange, NotRemovable, NotUnimodalFraming, UnsupportedShape

INFINITE = math.inf


@dataclass(frozen=True)
class FramedLinkMatrix:
    entries: tuple[tuple[int, ...], ...] = ()

    def __init__(self, entries: Iterable[Iterable[int]] = ()) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("linking matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"linking matrix not symmetric at ({i + 1}, {j + 1})")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def framings(self) -> list[int]:
        return [self.entries[i][i] for i in range(self.size)]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    @classmethod
    def from_json(cls, text: str) -> "FramedLinkMatrix":
        return cls(json.loads(text))

    @classmethod
    def diag(cls, *framings: int) -> "FramedLinkMatrix":
        n = len(framings)
        return cls([[framings[i] if i == j else 0 for j in range(n)] for i in range(n)])


def determinant(M: FramedLinkMatrix) -> int:
    """Exact integer determinant by Gaussian elimination over the rationals.

    Each row is kept sparse as integer numerators over one common row
    denominator, so chain (tridiagonal) matrices cost O(n^2).
    """
    rows = [{j: v for j, v in enumerate(r) if v} for r in M.rows()]
    dens = [1] * len(rows)
    n = len(rows)
    num, den = 1, 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if k in rows[r]), None)
        if pivot is None:
            return 0
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            dens[k], dens[pivot] = dens[pivot], dens[k]
            num = -num
        top = rows[k]
        akk = top[k]
        num *= akk
        den *= dens[k]
        tail = [(j, v) for j, v in top.items() if j > k]
        for i in range(k + 1, n):
            row = rows[i]
            if k not in row:
                continue
            # row_i <- row_i - (a_ik / a_kk) row_k, cleared of denominators
            aik = row.pop(k)
            for j in row:
                row[j] *= akk
            for j, v in tail:
                x = row.get(j, 0) - aik * v
                if x:
                    row[j] = x
                else:
                    row.pop(j, None)
            d = dens[i] * akk
            g = math.gcd(d, *row.values())
            if g > 1:
                for j in row:
                    row[j] //= g
                d //= g
            dens[i] = d
    q, r = divmod(num, den)
    assert r == 0
    return q


def h1_order(M: FramedLinkMatrix) -> Union[int, float]:
    """``|det M|``; a zero determinant means infinite H_1 and returns INFINITE."""
    d = abs(determinant(M))
    return INFINITE if d == 0 else d


def _check_index(M: FramedLinkMatrix, *indices: int) -> None:
    for i in indices:
        if not 1 <= i <= M.size:
            raise IndexOutOfRange(f"component {i} out of range 1..{M.size}")


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


def k1_add(M: FramedLinkMatrix, sign: int) -> FramedLinkMatrix:
    _check_sign(sign)
    rows = [r + [0] for r in M.rows()]
    rows.append([0] * M.size + [sign])
    return FramedLinkMatrix(rows)


def _delete(rows: list[list[int]], k: int) -> list[list[int]]:
    return [r[:k] + r[k + 1:] for idx, r in enumerate(rows) if idx != k]


def k1_remove(M: FramedLinkMatrix, index: int) -> FramedLinkMatrix:
    _check_index(M, index)
    k = index - 1
    row = M.entries[k]
    if abs(row[k]) != 1 or any(x != 0 for j, x in enumerate(row) if j != k):
        raise NotRemovable(f"component {index} is not an unlinked ±1-framed unknot")
    return FramedLinkMatrix(_delete(M.rows(), k))


def k2_slide(M: FramedLinkMatrix, i: int, j: int, sign: int = 1) -> FramedLinkMatrix:
    """Slide component ``i`` over component ``j``.

    New framing of ``i`` is ``n_i + n_j + 2*sign*lk(i, j)``.
    """
    _check_index(M, i, j)
    _check_sign(sign)
    if i == j:
        raise IndexOutOfRange("cannot slide a component over itself")
    a, b = i - 1, j - 1
    rows = M.rows()
    rows[a] = [x + sign * y for x, y in zip(rows[a], rows[b])]
    for r in rows:
        r[a] += sign * r[b]
    return FramedLinkMatrix(rows)


def blow_down(M: FramedLinkMatrix, index: int) -> FramedLinkMatrix:
    _check_index(M, index)
    e = index - 1
    eps = M.entries[e][e]
    if eps not in (1, -1):
        raise NotUnimodalFraming(f"component {index} has framing {eps}, not ±1")
    col = [M.entries[r][e] for r in range(M.size)]
    rows = [[M.entries[r][c] - eps * col[r] * col[c] for c in range(M.size)]
            for r in range(M.size)]
    return FramedLinkMatrix(_delete(rows, e))


# --- moves and traces -------------------------------------------------------

@dataclass(frozen=True)
class K1Add:
    sign: int


@dataclass(frozen=True)
class K1Remove:
    index: int


@dataclass(frozen=True)
class K2Slide:
    i: int
    j: int
    sign: int = 1


@dataclass(frozen=True)
class BlowDown:
    index: int
    sign: int


Move = Union[K1Add, K1Remove, K2Slide, BlowDown]

_MOVE_NAMES = {K1Add: "k1_add", K1Remove: "k1_remove", K2Slide: "k2_slide", BlowDown: "blow_down"}
_MOVE_TYPES = {v: k for k, v in _MOVE_NAMES.items()}


def apply_move(M: FramedLinkMatrix, move: Move) -> FramedLinkMatrix:
    if isinstance(move, K1Add):
        return k1_add(M, move.sign)
    if isinstance(move, K1Remove):
        return k1_remove(M, move.index)
    if isinstance(move, K2Slide):
        return k2_slide(M, move.i, move.j, move.sign)
    if isinstance(move, BlowDown):
        _check_index(M, move.index)
        if M[move.index, move.index] != move.sign:
            raise NotUnimodalFraming(
                f"component {move.index} has framing {M[move.index, move.index]}, expected {move.sign}")
        return blow_down(M, move.index)
    raise TypeError(f"not a Kirby move: {move!r}")


def move_to_dict(move: Move) -> dict:
    d = {"move": _MOVE_NAMES[type(move)]}
    d.update(vars(move))
    return d


def move_from_dict(data: dict) -> Move:
    data = dict(data)
    try:
        cls = _MOVE_TYPES[data.pop("move")]
    except KeyError:
        raise ValueError(f"unknown move record: {data!r}") from None
    return cls(**{k: int(v) for k, v in data.items()})


@dataclass(frozen=True)
class AddedCircle:
    """A ±1-framed unknot introduced during framing reduction.

    ``links`` maps original component index (1-based) to the circle's linking
    number with it.  ``purpose`` is ``"linking"`` for circles that cancel a
    linking between adjacent components and ``"framing"`` otherwise.
    """

    index: int
    sign: int
    links: tuple[tuple[int, int], ...]
    purpose: str


@dataclass(frozen=True)
class MoveTrace:
    moves: tuple[Move, ...] = ()
    circles: tuple[AddedCircle, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.moves)

    def net_framing_circles(self) -> dict[int, int]:
        """Per original component: (+1 circles) - (-1 circles) changing its framing."""
        out: dict[int, int] = {}
        for c in self.circles:
            if c.purpose == "framing":
                (comp, _), = c.links
                out[comp] = out.get(comp, 0) + c.sign
        return out

    def to_list(self) -> list[dict]:
        return [move_to_dict(m) for m in self.moves]


def replay(M: FramedLinkMatrix, moves: Iterable[Move]) -> FramedLinkMatrix:
    for m in moves:
        M = apply_move(M, m)
    return M


def is_chain(M: FramedLinkMatrix) -> bool:
    n = M.size
    for i in range(n):
        for j in range(n):
            d = abs(i - j)
            x = M.entries[i][j]
            if d == 1 and abs(x) != 1:
                return False
            if d > 1 and x != 0:
                return False
    return n >= 1


def reduce_to_zero_framings(M: FramedLinkMatrix) -> tuple[FramedLinkMatrix, MoveTrace]:
    """Blow up ±1 circles until every original framing and linking is zero.

    Each circle is a K1 addition followed by K2 slides of original components
    over it.  Adjacent linkings are cancelled first, then framings are walked
    to zero one unit at a time.
    """
    if not is_chain(M):
        raise UnsupportedShape("framing reduction needs a chain-shaped linking matrix")
    n = M.size
    cur = M
    moves: list[Move] = []
    circles: list[AddedCircle] = []

    def blow_up(sign: int, slides: Sequence[tuple[int, int]], purpose: str) -> None:
        nonlocal cur
        step = [K1Add(sign)]
        c = cur.size + 1
        step += [K2Slide(i, c, s) for i, s in slides]
        cur = replay(cur, step)
        moves.extend(step)
        circles.append(AddedCircle(c, sign, tuple((i, s * sign) for i, s in slides), purpose))

    for i in range(1, n):
        lk = cur[i, i + 1]
        if lk != 0:
            blow_up(1, [(i, 1), (i + 1, -lk)], "linking")
    for i in range(1, n + 1):
        while cur[i, i] != 0:
            blow_up(1 if cur[i, i] < 0 else -1, [(i, 1)], "framing")
    return cur, MoveTrace(tuple(moves), tuple(circles))
