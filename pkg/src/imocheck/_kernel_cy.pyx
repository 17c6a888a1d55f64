# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirrors the surface of ``imocheck._kernel_py``: integer square root, orbit
filling, +3-run confirmation and tiling enumeration.  Everything is integer
arithmetic on unsigned 64-bit values; no floating point is used anywhere.
"""

from .errors import OrbitOverflowError

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND_NAME = "cython"

# 2**64 - 2**33 == (2**32 - 1)**2 - 1: below this ceiling the smallest
# perfect square above any orbit value still fits in 64 bits.
ORBIT_CEILING = (1 << 64) - (1 << 33)

cdef unsigned long long _CEILING = 18446744065119617024ULL


cdef inline unsigned long long _isqrt_u64(unsigned long long x) noexcept nogil:
    # Integer Newton iteration seeded above sqrt(x); converges to the floor.
    cdef unsigned long long r, nr
    cdef int bl
    if x < 2:
        return x
    bl = 64 - __builtin_clzll(x)
    r = (<unsigned long long>1) << ((bl + 1) >> 1)
    while True:
        nr = (r + x // r) >> 1
        if nr >= r:
            return r
        r = nr


def isqrt(x):
    return _isqrt_u64(x)


def orbit_fill(unsigned long long a0, long long k):
    """Values a_0..a_k of the sequence x -> isqrt(x) if square else x + 3."""
    cdef list out = [a0]
    cdef unsigned long long v = a0, s
    cdef long long i
    for i in range(k):
        s = _isqrt_u64(v)
        if s * s == v:
            v = s
        else:
            if v > _CEILING - 3:
                raise OrbitOverflowError(f"orbit value {v} + 3 exceeds ceiling")
            v = v + 3
        out.append(v)
    return out


def confirm_plus3_run(unsigned long long start, unsigned long long nsteps):
    """Offset of the first perfect square among start + 3*i, i < nsteps; -1 if none.

    A square at offset i means orbit step i is not a +3 step, i.e. the run
    stops being strictly increasing there.  Tracks the next square above the
    current value instead of recomputing square roots.
    """
    if nsteps == 0:
        return -1
    if nsteps > _CEILING // 3 or start > _CEILING - 3 * nsteps:
        raise OrbitOverflowError(f"run from {start} over {nsteps} steps exceeds ceiling")
    cdef unsigned long long v = start, s, next_sq
    cdef unsigned long long i = 0
    s = _isqrt_u64(v)
    if s * s < v:
        s += 1
    next_sq = s * s
    while True:
        if v == next_sq:
            return <long long>i
        i += 1
        if i == nsteps:
            return -1
        v += 3
        while next_sq < v:
            s += 1
            next_sq = s * s


cdef inline unsigned long long _colstrip(int b, int cx, int ylo, int yhi) noexcept nogil:
    return (((<unsigned long long>1) << yhi) - ((<unsigned long long>1) << ylo)) << (cx * b)


cdef void _enum_rec(int a, int b, unsigned long long occ, unsigned long long full,
                    list tiles, list results):
    cdef int idx, x, y, x2, y2
    cdef unsigned long long free, mask, strip
    if occ == full:
        results.append(tuple(tiles))
        return
    free = full & ~occ
    idx = __builtin_ctzll(free)
    x = idx // b
    y = idx % b
    for y2 in range(y + 1, b + 1):
        if occ & ((<unsigned long long>1) << (x * b + y2 - 1)):
            break
        mask = _colstrip(b, x, y, y2)
        x2 = x + 1
        while True:
            tiles.append((x, x2, y, y2))
            _enum_rec(a, b, occ | mask, full, tiles, results)
            tiles.pop()
            if x2 == a:
                break
            strip = _colstrip(b, x2, y, y2)
            if occ & strip:
                break
            mask |= strip
            x2 += 1


def enum_tilings(int a, int b):
    """All tilings of the a x b board, canonical order, each exactly once.

    Same construction as the pure kernel: always cover the lexicographically
    smallest uncovered square (bit index x*b + y) with every rectangle whose
    lower-left corner is that square.
    """
    if a * b > 60:
        raise ValueError("board exceeds the 60-square kernel mask")
    cdef unsigned long long full = ((<unsigned long long>1) << (a * b)) - 1
    cdef list results = []
    cdef list tiles = []
    _enum_rec(a, b, 0, full, tiles, results)
    return results
