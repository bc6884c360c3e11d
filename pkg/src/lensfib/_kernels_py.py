"""Pure-Python braid-word kernels; reference semantics for the compiled core."""

from __future__ import annotations

from typing import Sequence


def free_reduce(letters: Sequence[int]) -> list[int]:
    stack: list[int] = []
    for e in letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return stack


def permutation(n: int, letters: Sequence[int]) -> list[int]:
    """images[s] is the 1-based final position of the strand starting at s+1."""
    pos = list(range(n))
    for e in letters:
        a = abs(e) - 1
        pos[a], pos[a + 1] = pos[a + 1], pos[a]
    images = [0] * n
    for k, s in enumerate(pos):
        images[s] = k + 1
    return images


def crossing_tally(n: int, letters: Sequence[int], comp: Sequence[int],
                   ncomp: int) -> list[list[int]]:
    """Signed crossing counts between closure components.

    Off-diagonal entries count each crossing once in both (i, j) and (j, i);
    diagonal entries are self-crossings (self-writhe).
    """
    pos = list(range(n))
    tally = [[0] * ncomp for _ in range(ncomp)]
    for e in letters:
        a = abs(e) - 1
        sign = 1 if e > 0 else -1
        c1 = comp[pos[a]]
        c2 = comp[pos[a + 1]]
        tally[c1][c2] += sign
        if c1 != c2:
            tally[c2][c1] += sign
        pos[a], pos[a + 1] = pos[a + 1], pos[a]
    return tally
