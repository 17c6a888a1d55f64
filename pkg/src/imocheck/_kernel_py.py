"""Pure-Python kernels: the fallback backend.

Same surface as the compiled module ``imocheck._kernel_cy``; see
``imocheck.backend`` for the import-time selection.  Orbit values obey the
same checked 64-bit ceiling as the compiled kernels so the two backends are
interchangeable.
"""

from __future__ import annotations

from math import isqrt as _isqrt

from .errors import OrbitOverflowError

BACKEND_NAME = "pure"

# Checked ceiling for orbit values.  Kept a little under 2**64 so the
# compiled kernel can track the next perfect square without wraparound.
ORBIT_CEILING = (1 << 64) - (1 << 33)


def isqrt(x: int) -> int:
    return _isqrt(x)


def orbit_fill(a0: int, k: int) -> list[int]:
    """Values a_0..a_k of the sequence x -> isqrt(x) if square else x + 3."""
    v = a0
    out = [v]
    for _ in range(k):
        s = _isqrt(v)
        if s * s == v:
            v = s
        else:
            if v + 3 > ORBIT_CEILING:
                raise OrbitOverflowError(f"orbit value {v} + 3 exceeds ceiling")
            v = v + 3
        out.append(v)
    return out


def confirm_plus3_run(start: int, nsteps: int) -> int:
    """Confirm that nsteps orbit steps from ``start`` are all +3 steps.

    Equivalent to checking that none of start, start+3, ..., start+3*(nsteps-1)
    is a perfect square.  Returns -1 when confirmed, else the offset of the
    first perfect square in the run.  Instead of stepping, this scans the
    perfect squares falling inside the window, which is exact and keeps the
    fallback usable at desk scale.
    """
    if nsteps <= 0:
        return -1
    if start + 3 * nsteps > ORBIT_CEILING:
        raise OrbitOverflowError(f"run from {start} over {nsteps} steps exceeds ceiling")
    last = start + 3 * (nsteps - 1)
    s = _isqrt(start)
    if s * s < start:
        s += 1
    while s * s <= last:
        if (s * s - start) % 3 == 0:
            return (s * s - start) // 3
        s += 1
    return -1


def enum_tilings(a: int, b: int) -> list[tuple[tuple[int, int, int, int], ...]]:
    """All tilings of the a x b board by valid integer rectangles.

    Canonical construction: repeatedly cover the lexicographically smallest
    uncovered square with every rectangle having that square as its
    lower-left corner.  Each tiling is produced exactly once; tiles appear
    in order of their lower-left corners.  Occupancy is a bitmask with bit
    index x*b + y, so the lowest free bit is the lex-min uncovered square.
    """
    total = a * b
    full = (1 << total) - 1
    results: list[tuple] = []
    tiles: list[tuple[int, int, int, int]] = []

    def colstrip(cx: int, ylo: int, yhi: int) -> int:
        return ((1 << yhi) - (1 << ylo)) << (cx * b)

    def rec(occ: int) -> None:
        if occ == full:
            results.append(tuple(tiles))
            return
        free = full & ~occ
        idx = (free & -free).bit_length() - 1
        x, y = divmod(idx, b)
        for y2 in range(y + 1, b + 1):
            if occ & (1 << (x * b + y2 - 1)):
                break
            mask = colstrip(x, y, y2)
            x2 = x + 1
            while True:
                tiles.append((x, x2, y, y2))
                rec(occ | mask)
                tiles.pop()
                if x2 == a:
                    break
                strip = colstrip(x2, y, y2)
                if occ & strip:
                    break
                mask |= strip
                x2 += 1

    rec(0)
    return results
