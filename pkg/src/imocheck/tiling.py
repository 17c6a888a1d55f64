"""IMO 2017 shortlist C1: tilings of an odd-by-odd board by integer rectangles.

A rectangle is the quadruple (x1, x2, y1, y2) of its left, right, bottom and
top lines on natural coordinates; it is valid iff x1 < x2 and y1 < y2
(validity is checked, not encoded in the type).  Its unit squares are the
half-open product [x1, x2) x [y1, y2), each square named by its lower-left
corner.  Squares are colored green when x + y is even, yellow otherwise.

The checked theorem: in any tiling of a board with both sides odd, some tile
has distances to the four board sides that are all even or all odd.  The
proof chain runs through corner colors, green/yellow counting and the
parity-of-distances lemma, and every link is executable here.

Set-level predicates (overlap, cover, inside) exist twice: literally over
materialized square sets, and as interval arithmetic fast paths.  The
property tests assert their agreement, keeping the set definitions
authoritative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from . import backend
from .errors import (BoardTooLargeError, InvalidPinwheelError, InvalidRangeError,
                     InvalidRectError, PreconditionFailedError, TheoremViolationError,
                     TilingParseError)
from .report import ClaimReport, failed, passed

Rect = tuple[int, int, int, int]
Square = tuple[int, int]


def valid_rect(r: Rect) -> bool:
    x1, x2, y1, y2 = r
    return x1 < x2 and y1 < y2


def _require_valid(r: Rect) -> None:
    if not valid_rect(r):
        raise InvalidRectError(f"rect {r} needs x1 < x2 and y1 < y2")


def area(r: Rect) -> int:
    return (r[1] - r[0]) * (r[3] - r[2]) if valid_rect(r) else 0


def squares(r: Rect) -> set[Square]:
    """Unit squares of r: the product of [x1, x2) and [y1, y2).

    Invalid rects have no squares.
    """
    x1, x2, y1, y2 = r
    return {(x, y) for x in range(x1, x2) for y in range(y1, y2)}


# -- set-level predicates: interval fast paths + literal oracles --------------

def overlap(r1: Rect, r2: Rect) -> bool:
    """Whether the two rects share a square (interval form)."""
    return (max(r1[0], r2[0]) < min(r1[1], r2[1])
            and max(r1[2], r2[2]) < min(r1[3], r2[3]))


def overlap_literal(r1: Rect, r2: Rect) -> bool:
    return bool(squares(r1) & squares(r2))


def non_overlapping(rs: Iterable[Rect]) -> bool:
    return not any(overlap(r1, r2) for r1, r2 in combinations(sorted(set(rs)), 2))


def cover(rs: Iterable[Rect], r: Rect) -> bool:
    """Literal definition: the union of the tiles' squares equals r's squares."""
    u: set[Square] = set()
    for t in rs:
        u |= squares(t)
    return u == squares(r)


def tiles(rs: Iterable[Rect], r: Rect) -> bool:
    """cover(rs, r) and non_overlapping(rs), by counting instead of materializing.

    For non-overlapping tiles the union equals squares(r) exactly when every
    tile sits inside r and the areas add up; the literal route stays around
    as the small-board oracle.
    """
    rset = set(rs)
    return (non_overlapping(rset)
            and all(inside(t, r) for t in rset)
            and sum(area(t) for t in rset) == area(r))


def inside(ri: Rect, ro: Rect) -> bool:
    """squares(ri) subset-of squares(ro), by coordinate comparison."""
    if not valid_rect(ri):
        return True
    if not valid_rect(ro):
        return False
    return (ro[0] <= ri[0] and ri[1] <= ro[1]
            and ro[2] <= ri[2] and ri[3] <= ro[3])


def inside_literal(ri: Rect, ro: Rect) -> bool:
    return squares(ri) <= squares(ro)


# -- coloring and counting ----------------------------------------------------

def green(s: Square) -> bool:
    return (s[0] + s[1]) % 2 == 0


def yellow(s: Square) -> bool:
    return not green(s)


def corners(r: Rect) -> set[Square]:
    """The up-to-four corner squares of a valid rect."""
    _require_valid(r)
    x1, x2, y1, y2 = r
    return {(x1, y1), (x1, y2 - 1), (x2 - 1, y1), (x2 - 1, y2 - 1)}


class RectClass(Enum):
    GREEN = "Green"
    YELLOW = "Yellow"
    MIXED = "Mixed"


def classify_rect(r: Rect) -> RectClass:
    cs = corners(r)
    if all(green(c) for c in cs):
        return RectClass.GREEN
    if all(yellow(c) for c in cs):
        return RectClass.YELLOW
    return RectClass.MIXED


def count_green(r: Rect) -> int:
    """Number of green squares: (k+1) div 2 for a green start, k div 2 otherwise.

    k is the total square count; a yellow start is the green-start formula
    for the rect shifted one square sideways, hence the swapped roles.
    """
    _require_valid(r)
    k = area(r)
    return (k + 1) // 2 if green((r[0], r[2])) else k // 2


def count_yellow(r: Rect) -> int:
    _require_valid(r)
    k = area(r)
    return k // 2 if green((r[0], r[2])) else (k + 1) // 2


def count_green_row(x1: int, x2: int, y0: int) -> int:
    """Green squares in the single row y0, x in [x1, x2)."""
    if x1 >= x2:
        raise InvalidRangeError(f"row needs x1 < x2, got [{x1}, {x2})")
    n = x2 - x1
    return (n + 1) // 2 if green((x1, y0)) else n // 2


# -- tilings -------------------------------------------------------------------

@dataclass(frozen=True)
class Tiling:
    """A board rect (0, a, 0, b) plus the finite set of tiles claimed to tile it."""

    board: Rect
    tiles: frozenset[Rect]


def tiling_problems(t: Tiling) -> list[str]:
    """Invariant violations, human-readable; empty list means valid."""
    problems = []
    b = t.board
    if b[0] != 0 or b[2] != 0:
        problems.append(f"board {b} is not anchored at the origin")
    if not valid_rect(b):
        problems.append(f"board {b} is not a valid rectangle")
    ordered = sorted(t.tiles)
    for r in ordered:
        if not valid_rect(r):
            problems.append(f"tile {r} is invalid (needs x1 < x2 and y1 < y2)")
        elif not inside(r, b):
            problems.append(f"tile {r} is not inside the board")
    for r1, r2 in combinations(ordered, 2):
        if overlap(r1, r2):
            problems.append(f"tiles {r1} and {r2} overlap")
            break
    covered = sum(area(r) for r in ordered)
    if not problems and covered != area(b):
        problems.append(f"tiles cover {covered} of {area(b)} board squares")
    return problems


def is_valid_tiling(t: Tiling) -> bool:
    return (t.board[0] == 0 and t.board[2] == 0 and valid_rect(t.board)
            and all(valid_rect(r) for r in t.tiles)
            and tiles(t.tiles, t.board))


def _lex_tiles(t: Tiling) -> list[Rect]:
    # scan order for witness/green-tile tie-breaking: (x1, y1, x2, y2)
    return sorted(t.tiles, key=lambda r: (r[0], r[2], r[1], r[3]))


def find_green_tile(t: Tiling) -> Rect:
    """First tile (in (x1, y1, x2, y2) order) whose corners are all green.

    On a valid tiling of an odd-by-odd board one always exists; running out
    of tiles therefore raises TheoremViolationError.
    """
    for r in _lex_tiles(t):
        if classify_rect(r) is RectClass.GREEN:
            return r
    raise TheoremViolationError(f"no green tile in a tiling of {t.board}")


def side_distances(r: Rect, board: Rect) -> tuple[int, int, int, int]:
    """Distances of the tile to the four board sides: left, right, bottom, top."""
    return (r[0] - board[0], board[1] - r[1], r[2] - board[2], board[3] - r[3])


class WitnessParity(Enum):
    ALL_EVEN = "AllEven"
    ALL_ODD = "AllOdd"


def distance_parity(ds: tuple[int, ...]) -> WitnessParity | None:
    if all(d % 2 == 0 for d in ds):
        return WitnessParity.ALL_EVEN
    if all(d % 2 == 1 for d in ds):
        return WitnessParity.ALL_ODD
    return None


def witness(t: Tiling) -> tuple[Rect, WitnessParity]:
    """First tile whose four side distances share a parity, with that parity.

    Scans every tile directly for the distance property, in the same
    (x1, y1, x2, y2) order as find_green_tile.
    """
    for r in _lex_tiles(t):
        parity = distance_parity(side_distances(r, t.board))
        if parity is not None:
            return r, parity
    raise TheoremViolationError(f"no parity witness in a tiling of {t.board}")


def parity_lemma_check(ri: Rect, ro: Rect) -> ClaimReport:
    """Green-inside-green distance parity: the four gaps are all even or all odd."""
    if not (valid_rect(ri) and valid_rect(ro)):
        raise PreconditionFailedError("both rects must be valid")
    if classify_rect(ri) is not RectClass.GREEN or classify_rect(ro) is not RectClass.GREEN:
        raise PreconditionFailedError("both rects must be green")
    if not inside(ri, ro):
        raise PreconditionFailedError("ri must lie inside ro")
    ds = (ri[0] - ro[0], ro[1] - ri[1], ri[2] - ro[2], ro[3] - ri[3])
    params = {"d_left": ds[0], "d_right": ds[1], "d_bottom": ds[2], "d_top": ds[3]}
    if distance_parity(ds) is None:
        return failed("c1.parity_lemma", params, (ri, ro))
    return passed("c1.parity_lemma", params, steps=1)


# -- generators and enumeration -------------------------------------------------

def gen_guillotine(a: int, b: int, seed: int) -> Tiling:
    """A valid tiling by recursive straight cuts; deterministic per seed."""
    if a < 1 or b < 1:
        raise InvalidRectError(f"board {a}x{b} needs positive sides")
    rng = random.Random(seed)
    out: list[Rect] = []

    def cut(x1: int, x2: int, y1: int, y2: int) -> None:
        w, h = x2 - x1, y2 - y1
        if (w == 1 and h == 1) or rng.random() < 0.25:
            out.append((x1, x2, y1, y2))
            return
        if w > 1 and (h == 1 or rng.random() < 0.5):
            c = rng.randint(x1 + 1, x2 - 1)
            cut(x1, c, y1, y2)
            cut(c, x2, y1, y2)
        else:
            c = rng.randint(y1 + 1, y2 - 1)
            cut(x1, x2, y1, c)
            cut(x1, x2, c, y2)

    cut(0, a, 0, b)
    return Tiling((0, a, 0, b), frozenset(out))


def pinwheel(a: int, b: int, cx1: int, cx2: int, cy1: int, cy2: int) -> Tiling:
    """The 5-tile pinwheel: four interlocking rects around a center rect.

    Not a grid decomposition, so it exercises the general tiling definition.
    """
    if not (0 < cx1 < cx2 < a and 0 < cy1 < cy2 < b):
        raise InvalidPinwheelError(
            f"need 0 < {cx1} < {cx2} < {a} and 0 < {cy1} < {cy2} < {b}")
    rects = frozenset([
        (0, cx2, 0, cy1),
        (cx2, a, 0, cy2),
        (cx1, a, cy2, b),
        (0, cx1, cy1, b),
        (cx1, cx2, cy1, cy2),
    ])
    return Tiling((0, a, 0, b), rects)


ENUM_AREA_CAP = 16


def enumerate_tilings(a: int, b: int) -> Iterator[Tiling]:
    """Every tiling of the a x b board, each exactly once (canonical order).

    Guarded: enumeration is exponential, so the board area is capped.
    """
    if a * b > ENUM_AREA_CAP:
        raise BoardTooLargeError(f"{a}x{b} exceeds the area cap {ENUM_AREA_CAP}")
    board = (0, a, 0, b)
    for tile_list in backend.enum_tilings(a, b):
        yield Tiling(board, frozenset(tile_list))


def count_tilings_reference(a: int, b: int) -> int:
    """Independent tiling counter used as the enumeration oracle.

    Recurses on the set of uncovered squares with the literal squares()
    definition; shares no code or representation with the enumerator.
    """
    board_squares = frozenset(squares((0, a, 0, b)))

    @lru_cache(maxsize=None)
    def go(uncovered: frozenset) -> int:
        if not uncovered:
            return 1
        x, y = min(uncovered)
        n = 0
        for x2 in range(x + 1, a + 1):
            for y2 in range(y + 1, b + 1):
                sq = squares((x, x2, y, y2))
                if sq <= uncovered:
                    n += go(uncovered - sq)
        return n

    return go(board_squares)


# -- text format -----------------------------------------------------------------

def serialize_tiling(t: Tiling) -> str:
    """Canonical text form: "board A B" then one "tile X1 X2 Y1 Y2" per tile.

    Tiles are emitted in lexicographic tuple order, so serialization is a
    canonical form: parse followed by serialize is the identity on its output.
    """
    if t.board[0] != 0 or t.board[2] != 0:
        raise InvalidRectError(f"board {t.board} is not anchored at the origin")
    lines = [f"board {t.board[1]} {t.board[3]}"]
    lines += [f"tile {x1} {x2} {y1} {y2}" for x1, x2, y1, y2 in sorted(t.tiles)]
    return "\n".join(lines) + "\n"


def parse_tiling(text: str) -> Tiling:
    """Parse the tiling text format; malformed lines raise with their number."""
    board: Rect | None = None
    rects: set[Rect] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]
        if not all(tok.isdecimal() for tok in args):
            raise TilingParseError(line_no, f"expected decimal naturals, got {args}")
        values = [int(tok) for tok in args]
        if keyword == "board":
            if board is not None:
                raise TilingParseError(line_no, "duplicate board line")
            if len(values) != 2:
                raise TilingParseError(line_no, "board needs exactly A B")
            board = (0, values[0], 0, values[1])
        elif keyword == "tile":
            if board is None:
                raise TilingParseError(line_no, "tile before board line")
            if len(values) != 4:
                raise TilingParseError(line_no, "tile needs exactly X1 X2 Y1 Y2")
            rect = (values[0], values[1], values[2], values[3])
            if rect in rects:
                raise TilingParseError(line_no, f"duplicate tile {rect}")
            rects.add(rect)
        else:
            raise TilingParseError(line_no, f"unknown keyword {keyword!r}")
    if board is None:
        raise TilingParseError(1, "missing board line")
    return Tiling(board, frozenset(rects))
