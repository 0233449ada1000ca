"""Per-type strip patterns: the fundamental building data for each map type.

A pattern describes one vertical period of the unrolled strip.  Rows are the
horizontal cutting cycles; between consecutive rows lies a *strip* of faces,
possibly with extra *gap* vertices that belong to no row.  Faces are given
per strip phase for one horizontal period, as references

    ('r', 0, o)  vertex o of the strip's bottom row (o counts slots, may
                 reach into neighbouring periods),
    ('r', 1, o)  vertex o of the top row,
    ('g', o)     gap vertex o of this strip,

with all faces listed counterclockwise.  Instantiating a pattern for given
(i, j, k) replicates each strip template i/slots times horizontally and j
rows vertically; the top row of the last strip wraps onto row 0 shifted by
k vertex slots (plus the per-type seam offset that accounts for the drawn
start of the wrapped row).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

F = Fraction

R0 = lambda o: ("r", 0, o)
R1 = lambda o: ("r", 1, o)
G = lambda o: ("g", o)


@dataclass(frozen=True)
class TilePattern:
    """One vertical period of a type's unrolled strip."""

    key: str
    slots: int                                   # row vertices per horizontal period
    px: Fraction                                 # horizontal extent of one period
    rows: int                                    # number of strip phases (vertical period)
    gap_slots: tuple[int, ...]                   # gap vertices per period, per strip phase
    strips: tuple[tuple[tuple, ...], ...]        # faces per strip phase
    row_xy: tuple[tuple[tuple[Fraction, Fraction], ...], ...]   # per row phase: slot (x, dy)
    gap_xy: tuple[tuple[tuple[Fraction, Fraction], ...], ...]   # per strip phase: gap (x, dy)
    row_h: Fraction = F(1)                       # drawn distance between row baselines
    seam_offset: Callable[[int], int] = field(default=lambda j: 0, compare=False)
    # offset added to k at the seam so that the published admissible k values
    # line up with the absolute slot indexing used here (drawn row starts)
    diagonals: tuple[tuple[tuple, tuple], ...] = ()   # per strip phase is not needed:
    # flat list of (ref, ref) edges per strip phase, see diag_strips
    diag_strips: tuple[tuple[tuple[tuple, tuple], ...], ...] = ()

    def blocks(self, i: int) -> int:
        assert i % self.slots == 0
        return i // self.slots


def _grid_pattern(key: str, square_phases: set[int], rows: int) -> TilePattern:
    """Patterns built from full square strips and full '/'-triangle strips."""
    strips = []
    diags = []
    for ph in range(rows):
        if ph in square_phases:
            strips.append(((R0(0), R0(1), R1(1), R1(0)),))
            diags.append(())
        else:
            strips.append(
                (
                    (R0(0), R0(1), R1(1)),
                    (R0(0), R1(1), R1(0)),
                )
            )
            diags.append((((R0(0)), (R1(1))),))
    return TilePattern(
        key=key,
        slots=1,
        px=F(1),
        rows=rows,
        gap_slots=(0,) * rows,
        strips=tuple(strips),
        row_xy=((( F(0), F(0)),),) * rows,
        gap_xy=((),) * rows,
        diag_strips=tuple(tuple((a, b) for a, b in d) for d in diags),
    )


TABLE: dict[str, TilePattern] = {}


def _register(p: TilePattern) -> TilePattern:
    TABLE[p.key] = p
    return p


# [3^6:3^3.4^2]_r: one square strip then r+1 identical triangle strips.
_register(_grid_pattern("t36_3344_1", {0}, 3))
_register(_grid_pattern("t36_3344_2", {0}, 4))

# [3^3.4^2:4^4]_r: r+1 square strips then one triangle strip.
_register(_grid_pattern("t3344_44_1", {0, 1}, 3))
_register(_grid_pattern("t3344_44_2", {0, 1, 2}, 4))

# [3^3.4^2:3^2.4.3.4]_2: alternating two-column groups of triangles and
# squares; triangle diagonals lean backward in even strips, forward in odd.
_register(
    TilePattern(
        key="t3344_32434_2",
        slots=4,
        px=F(4),
        rows=2,
        gap_slots=(0, 0),
        strips=(
            (
                (R0(0), R0(1), R1(0)),
                (R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(1)),
                (R0(2), R1(2), R1(1)),
                (R0(2), R0(3), R1(3), R1(2)),
                (R0(3), R0(4), R1(4), R1(3)),
            ),
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(2), R1(1)),
                (R0(2), R0(3), R1(3)),
                (R0(2), R1(3), R1(2)),
                (R0(3), R0(4), R1(4)),
                (R0(3), R1(4), R1(3)),
            ),
        ),
        row_xy=(
            tuple((F(c), F(0)) for c in range(4)),
            tuple((F(c), F(0)) for c in range(4)),
        ),
        gap_xy=((), ()),
        diag_strips=(
            ((R0(1), R1(0)), (R0(2), R1(1))),
            ((R0(2), R1(3)), (R0(3), R1(4))),
        ),
    )
)

# [3^3.4^2:3^2.4.3.4]_1: rows of five slots per four x-units; the off-grid
# slot hosts a three-triangle fan, gaps appear in alternate strips.
_register(
    TilePattern(
        key="t3344_32434_1",
        slots=5,
        px=F(4),
        rows=4,
        gap_slots=(0, 2, 0, 2),
        strips=(
            (   # fan up at bottom slot 2, fan down at top slot 4
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(1)),
                (R0(2), R1(2), R1(1)),
                (R0(2), R0(3), R1(2)),
                (R0(3), R0(4), R1(3), R1(2)),
                (R1(4), R1(3), R0(4)),
                (R0(5), R1(4), R0(4)),
                (R0(5), R1(5), R1(4)),
            ),
            (   # gaps above bottom pairs (0,1) and (2,3)
                (R0(0), R0(1), G(0)),
                (G(0), R1(1), R1(0)),
                (G(0), R1(0), R0(0)),
                (R0(1), R0(2), G(1), G(0)),
                (G(0), G(1), R1(2), R1(1)),
                (G(1), R0(2), R0(3)),
                (G(1), R0(3), R1(3)),
                (R1(3), R1(2), G(1)),
                (R0(3), R0(4), R1(4), R1(3)),
                (R0(4), R0(5), R1(5), R1(4)),
            ),
            (   # mirror of phase 0: fan down at top slot 2, fan up at bottom 4
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R1(2), R1(1)),
                (R0(2), R1(2), R0(1)),
                (R1(3), R1(2), R0(2)),
                (R0(2), R0(3), R1(4), R1(3)),
                (R0(4), R1(4), R0(3)),
                (R1(5), R1(4), R0(4)),
                (R1(5), R0(4), R0(5)),
            ),
            (   # gaps beside bottom pairs (0,1) and (3,4)
                (G(0), R0(0), R0(1)),
                (R0(1), R1(1), G(0)),
                (R1(0), G(0), R1(1)),
                (R0(1), R0(2), R1(2), R1(1)),
                (R0(2), R0(3), R1(3), R1(2)),
                (R0(3), R0(4), G(1)),
                (G(1), R1(3), R0(3)),
                (R1(4), R1(3), G(1)),
                (R0(4), R0(5), G(2), G(1)),
                (G(1), G(2), R1(5), R1(4)),
            ),
        ),
        row_xy=(
            ((F(0), F(0)), (F(1), F(0)), (F(3, 2), F(0)), (F(2), F(0)), (F(3), F(0))),
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(0)), (F(7, 2), F(0))),
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(0)), (F(7, 2), F(0))),
            ((F(0), F(0)), (F(1), F(0)), (F(3, 2), F(0)), (F(2), F(0)), (F(3), F(0))),
        ),
        gap_xy=(
            (),
            ((F(1), F(1, 2)), (F(2), F(1, 2))),
            (),
            ((F(0), F(1, 2)), (F(3), F(1, 2))),
        ),
    )
)

# [3^6:3^2.4.3.4]: square/triangle strips with hexagonal-fan gap vertices in
# alternate strips.
_register(
    TilePattern(
        key="t36_32434",
        slots=3,
        px=F(3),
        rows=4,
        gap_slots=(0, 1, 0, 1),
        strips=(
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R1(1), R0(1), R0(2)),
                (R1(1), R0(2), R0(3), R1(2)),
                (R1(2), R0(3), R1(3)),
            ),
            (
                (G(0), R0(0), R0(1)),
                (R1(0), R0(0), G(0)),
                (G(0), R0(1), R0(2)),
                (R0(2), R1(2), G(0)),
                (R1(1), R1(0), G(0)),
                (G(0), R1(2), R1(1)),
                (R0(2), R0(3), R1(3), R1(2)),
            ),
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R1(2), R1(1), R0(1)),
                (R0(1), R0(2), R1(3), R1(2)),
                (R1(3), R0(2), R0(3)),
            ),
            (
                (R0(0), R0(1), G(0)),
                (R0(1), R1(1), G(0)),
                (G(0), R1(1), R1(0)),
                (G(0), R1(0), R1(-1)),
                (G(0), R1(-1), R0(-1)),
                (G(0), R0(-1), R0(0)),
                (R0(1), R0(2), R1(2), R1(1)),
            ),
        ),
        row_xy=(
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0))),
            ((F(1, 2), F(0)), (F(3, 2), F(0)), (F(5, 2), F(0))),
            ((F(1, 2), F(0)), (F(3, 2), F(0)), (F(5, 2), F(0))),
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0))),
        ),
        gap_xy=(
            (),
            ((F(3, 2), F(1, 2)),),
            (),
            ((F(0), F(1, 2)),),
        ),
    )
)

# [3.4^2.6:3.6.3.6]_1: hexagon bands alternating in phase, separated by
# square strips.
_register(
    TilePattern(
        key="t3426_3636_1",
        slots=2,
        px=F(2),
        rows=4,
        gap_slots=(1, 0, 1, 0),
        strips=(
            (
                (R0(0), R0(1), G(0)),
                (G(0), R1(1), R1(0)),
                (G(0), R0(1), R0(2), G(1), R1(2), R1(1)),
            ),
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(2), R1(1)),
            ),
            (
                (R0(1), R0(2), G(0)),
                (G(0), R1(2), R1(1)),
                (G(0), R0(2), R0(3), G(1), R1(3), R1(2)),
            ),
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(2), R1(1)),
            ),
        ),
        row_xy=(((F(0), F(0)), (F(1), F(0))),) * 4,
        gap_xy=(
            ((F(1, 2), F(1)),),
            (),
            ((F(3, 2), F(1)),),
            (),
        ),
        row_h=F(3, 2),
        seam_offset=lambda j: -1,
    )
)

# [3.4^2.6:3.6.3.6]_2: every hexagon band skewed the same way.
_register(
    TilePattern(
        key="t3426_3636_2",
        slots=2,
        px=F(2),
        rows=2,
        gap_slots=(1, 0),
        strips=(
            (
                (R0(0), R0(1), G(0)),
                (G(0), R1(0), R1(-1)),
                (G(0), R0(1), R0(2), G(1), R1(1), R1(0)),
            ),
            (
                (R0(0), R0(1), R1(1), R1(0)),
                (R0(1), R0(2), R1(2), R1(1)),
            ),
        ),
        row_xy=(((F(0), F(0)), (F(1), F(0))),) * 2,
        gap_xy=(
            ((F(1, 2), F(1)),),
            (),
        ),
        row_h=F(3, 2),
    )
)

# [3^2.6^2:3.6.3.6]: identical hexagon bands in every strip.
_register(
    TilePattern(
        key="t3266_3636",
        slots=2,
        px=F(2),
        rows=1,
        gap_slots=(1,),
        strips=(
            (
                (R0(0), R0(1), G(0)),
                (G(0), R1(1), R1(0)),
                (G(0), R0(1), R0(2), G(1), R1(2), R1(1)),
            ),
        ),
        row_xy=(((F(0), F(0)), (F(1), F(0))),),
        gap_xy=(((F(1, 2), F(1)),),),
        row_h=F(2),
        seam_offset=lambda j: -(j % 2),
    )
)

# [3^4.6:3^2.6^2]: triangle bands alternate with hexagon bands; hexagon
# centres shift one column between consecutive bands.
_register(
    TilePattern(
        key="t346_3266",
        slots=2,
        px=F(2),
        rows=4,
        gap_slots=(0, 0, 0, 0),
        strips=(
            (
                (R0(1), R0(2), R1(1)),
                (R0(0), R0(1), R1(1)),
                (R1(1), R0(2), R1(2)),
                (R1(0), R0(0), R1(1)),
            ),
            (
                (R0(0), R0(1), R0(2), R1(2), R1(1), R1(0)),
            ),
            (
                (R0(0), R0(1), R1(0)),
                (R0(1), R0(2), R1(2)),
                (R1(1), R1(0), R0(1)),
                (R0(1), R1(2), R1(1)),
            ),
            (
                (R0(1), R0(2), R0(3), R1(3), R1(2), R1(1)),
            ),
        ),
        row_xy=(
            ((F(0), F(1, 4)), (F(1), F(0))),
            ((F(0), F(1, 4)), (F(1), F(0))),
            ((F(0), F(0)), (F(1), F(1, 4))),
            ((F(0), F(0)), (F(1), F(1, 4))),
        ),
        gap_xy=((), (), (), ()),
        seam_offset=lambda j: -1 if j % 4 == 0 else 0,
    )
)

# [3^2.4.3.4:3.4.6.4]: thick strips of upright hexagons flanked by diamond
# squares and triangles, alternating with thin square/triangle strips.
_register(
    TilePattern(
        key="t32434_3464",
        slots=4,
        px=F(4),
        rows=4,
        gap_slots=(4, 0, 4, 0),
        strips=(
            (
                (R1(-1), G(-2), R0(-1), R0(0), G(1), R1(0)),
                (R0(0), R0(1), G(0), G(1)),
                (G(0), R0(1), R0(2)),
                (G(2), G(0), R0(2), R0(3)),
                (G(1), G(0), G(3)),
                (G(3), G(0), G(2)),
                (R1(1), R1(0), G(1), G(3)),
                (R1(1), G(3), R1(2)),
                (G(3), G(2), R1(3), R1(2)),
            ),
            (
                (R0(-1), R0(0), R1(0), R1(-1)),
                (R1(1), R0(1), R0(2), R1(2)),
                (R0(2), R0(3), R1(3)),
                (R1(0), R0(0), R0(1)),
                (R1(1), R1(0), R0(1)),
                (R1(2), R0(2), R1(3)),
            ),
            (
                (R1(1), G(1), R0(1), R0(2), G(2), R1(2)),
                (R0(2), R0(3), G(0), G(2)),
                (G(0), R0(3), R0(4)),
                (G(5), G(0), R0(4), R0(5)),
                (G(2), G(0), G(3)),
                (G(3), G(0), G(5)),
                (R1(3), R1(2), G(2), G(3)),
                (R1(3), G(3), R1(4)),
                (G(3), G(5), R1(5), R1(4)),
            ),
            (
                (R0(1), R0(2), R1(2), R1(1)),
                (R1(3), R0(3), R0(4), R1(4)),
                (R0(0), R0(1), R1(1)),
                (R1(2), R0(2), R0(3)),
                (R1(3), R1(2), R0(3)),
                (R1(0), R0(0), R1(1)),
            ),
        ),
        row_xy=(
            ((F(0), F(1, 2)), (F(1), F(0)), (F(2), F(0)), (F(3), F(1, 2))),
            ((F(0), F(1, 2)), (F(1), F(0)), (F(2), F(0)), (F(3), F(1, 2))),
            ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(1, 2)), (F(3), F(0))),
            ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(1, 2)), (F(3), F(0))),
        ),
        gap_xy=(
            ((F(3, 2), F(1, 2)), (F(1, 2), F(1)), (F(5, 2), F(1)), (F(3, 2), F(3, 2))),
            (),
            ((F(7, 2), F(1, 2)), (F(1, 2), F(1)), (F(5, 2), F(1)), (F(7, 2), F(3, 2))),
            (),
        ),
        row_h=F(2),
        seam_offset=lambda j: 2 if j % 4 == 2 else 0,
    )
)

# [3^6:3^4.6]_2: strips of spaced hexagons alternating with plain triangle
# strips; the hexagon columns advance one slot per double strip (period 6).
def _t36_346_2() -> TilePattern:
    hex0 = (
        (R0(0), R0(1), G(0)),
        (G(0), R0(1), R0(2), G(1), R1(2), R1(1)),
        (G(1), R0(2), R0(3)),
        (G(1), R0(3), G(2)),
        (G(1), R1(3), R1(2)),
        (G(2), R1(3), G(1)),
        (G(2), R1(4), R1(3)),
    )
    tri = (
        (R0(0), R0(1), R1(0)),
        (R1(0), R0(1), R1(1)),
        (R0(1), R0(2), R1(1)),
        (R1(1), R0(2), R1(2)),
        (R0(2), R0(3), R1(2)),
        (R1(2), R0(3), R1(3)),
    )
    gxy0 = ((F(1, 2), F(1)), (F(5, 2), F(1)))

    def shift(faces, gap_xy, d):
        moved = sorted(((x + d) % 3, dy, t) for t, (x, dy) in enumerate(gap_xy))
        remap = {}
        for newpos, (x, dy, told) in enumerate(moved):
            remap[told] = (newpos, int((gap_xy[told][0] + d) // 3))
        out = []
        for face in faces:
            nf = []
            for ref in face:
                if ref[0] == "r":
                    nf.append(("r", ref[1], ref[2] + d))
                else:
                    b, tt = divmod(ref[1], 2)
                    newpos, carry = remap[tt]
                    nf.append(("g", (b + carry) * 2 + newpos))
            out.append(tuple(nf))
        return tuple(out), tuple((x, dy) for x, dy, _ in moved)

    hex1, gxy1 = shift(hex0, gxy0, 1)
    hex2, gxy2 = shift(hex0, gxy0, 2)
    row = ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)))
    return TilePattern(
        key="t36_346_2",
        slots=3,
        px=F(3),
        rows=6,
        gap_slots=(2, 0, 2, 0, 2, 0),
        strips=(hex0, tri, hex1, tri, hex2, tri),
        row_xy=(row,) * 6,
        gap_xy=(gxy0, (), gxy1, (), gxy2, ()),
        row_h=F(2),
    )


_register(_t36_346_2())

# [3.4.3.12:3.12^2]: diamond squares bridge consecutive zigzag rows, flanked
# by two gap vertices; 12-gons fill the rest.  Odd strips shift by three.
_register(
    TilePattern(
        key="t34312_3122",
        slots=6,
        px=F(6),
        rows=2,
        gap_slots=(2, 2),
        strips=(
            (
                (R0(0), R0(1), G(0)),
                (G(1), R0(1), R0(2)),
                (G(0), R0(1), G(1), R1(1)),
                (R1(1), R1(0), G(0)),
                (R1(1), G(1), R1(2)),
                (R1(4), R1(3), R1(2), G(1), R0(2), R0(3),
                 R0(4), R0(5), R0(6), G(2), R1(6), R1(5)),
            ),
            (
                (R0(3), R0(4), G(0)),
                (G(1), R0(4), R0(5)),
                (G(0), R0(4), G(1), R1(4)),
                (R1(4), R1(3), G(0)),
                (R1(4), G(1), R1(5)),
                (R1(7), R1(6), R1(5), G(1), R0(5), R0(6),
                 R0(7), R0(8), R0(9), G(2), R1(9), R1(8)),
            ),
        ),
        row_xy=(
            ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(0)),
             (F(3), F(-1)), (F(4), F(-3, 2)), (F(5), F(-1))),
            ((F(0), F(0)), (F(1), F(-1, 2)), (F(2), F(0)),
             (F(3), F(1)), (F(4), F(3, 2)), (F(5), F(1))),
        ),
        gap_xy=(
            ((F(1, 2), F(1)), (F(3, 2), F(1))),
            ((F(7, 2), F(1)), (F(9, 2), F(1))),
        ),
        row_h=F(2),
        seam_offset=lambda j: (j + 1) % 2,
    )
)

# [3^6:3^2.4.12]: 12-gons joined by squares of four gap vertices, with
# triangle fans; thin strips of triangles and diamond squares between.
# The 12-gon columns advance two slots per double strip (period 10 rows).
def _t36_32412() -> TilePattern:
    thick0 = (
        (R1(5), R1(4), R1(3), G(3), G(1), R0(3), R0(4), R0(5),
         R0(6), G(4), G(6), R1(6)),
        (G(0), G(1), G(3), G(2)),
        (R0(2), G(0), R0(1)),
        (R0(2), G(1), G(0)),
        (R0(3), G(1), R0(2)),
        (G(2), R1(2), R1(1)),
        (G(3), R1(2), G(2)),
        (R1(3), R1(2), G(3)),
    )
    thin0 = (
        (R1(0), R0(0), R0(1), R1(1)),
        (R0(2), R1(1), R0(1)),
        (R1(2), R1(1), R0(2)),
        (R1(2), R0(2), R0(3)),
        (R1(3), R1(2), R0(3), R0(4)),
        (R1(4), R0(4), R0(5)),
        (R1(-1), R0(0), R1(0)),
        (R0(4), R1(4), R1(3)),
    )
    gxy0 = ((F(3, 2), F(1)), (F(5, 2), F(1)), (F(3, 2), F(2)), (F(5, 2), F(2)))

    def shift_gaps(faces, gap_xy, d):
        moved = sorted(
            (((x + d) % 5, dy), int((x + d) // 5), t) for t, (x, dy) in enumerate(gap_xy)
        )
        moved.sort(key=lambda q: (q[0][1], q[0][0]))
        remap = {}
        new_xy = []
        for newpos, ((x, dy), carry, told) in enumerate(moved):
            remap[told] = (newpos, carry)
            new_xy.append((x, dy))
        out = []
        for face in faces:
            nf = []
            for ref in face:
                if ref[0] == "r":
                    nf.append(("r", ref[1], ref[2] + d))
                else:
                    b, tt = divmod(ref[1], 4)
                    newpos, carry = remap[tt]
                    nf.append(("g", (b + carry) * 4 + newpos))
            out.append(tuple(nf))
        return tuple(out), tuple(new_xy)

    row0 = ((F(0), F(-1, 2)), (F(1), F(0)), (F(2), F(0)), (F(3), F(0)), (F(4), F(-1, 2)))
    row1 = ((F(0), F(1, 2)), (F(1), F(0)), (F(2), F(0)), (F(3), F(0)), (F(4), F(1, 2)))
    strips, gxys, rxys, gslots = [], [], [], []
    for t in range(5):
        d = 2 * t
        thick, gxy = shift_gaps(thick0, gxy0, d)
        thin = tuple(
            tuple(("r", r[1], r[2] + d) if r[0] == "r" else r for r in f) for f in thin0
        )
        strips += [thick, thin]
        gxys += [gxy, ()]
        rxys += [row0, row1]
        gslots += [4, 0]
    return TilePattern(
        key="t36_32412",
        slots=5,
        px=F(5),
        rows=10,
        gap_slots=tuple(gslots),
        strips=tuple(strips),
        row_xy=tuple(rxys),
        gap_xy=tuple(gxys),
        row_h=F(5, 2),
        seam_offset=lambda j: (-j) % 5,
    )


_register(_t36_32412())

# [3.4.6.4:4.6.12]: 12-gons flanked by diamond squares, hexagons made of six
# gap vertices, and a thin strip of upright hexagons and squares.  The thick
# strips alternate between two phases three slots apart.
def _t3464_4612() -> TilePattern:
    thick0 = (
        (R0(7), G(7), G(9), R1(7), R1(6), R1(5), R1(4), G(4), G(2),
         R0(4), R0(5), R0(6)),
        (G(5), G(3), G(1), G(0), G(2), G(4)),
        (R0(2), G(0), G(1), R0(1)),
        (R0(3), G(0), R0(2)),
        (G(2), G(0), R0(3), R0(4)),
        (R1(3), G(5), G(4), R1(4)),
        (G(5), R1(2), R1(1), G(3)),
        (R1(3), R1(2), G(5)),
    )
    thin = (
        (R1(3), R0(3), R0(4), R0(5), R1(5), R1(4)),
        (R0(6), R1(6), R1(5), R0(5)),
        (R1(6), R0(6), R0(7), R0(8), R1(8), R1(7)),
        (R0(9), R1(9), R1(8), R0(8)),
    )
    gxy0 = (
        (F(5, 2), F(1)), (F(3, 2), F(3, 2)), (F(7, 2), F(3, 2)),
        (F(3, 2), F(5, 2)), (F(7, 2), F(5, 2)), (F(5, 2), F(3)),
    )

    def shift_gaps(faces, gap_xy, d):
        moved = [(((x + d) % 6, dy), int((x + d) // 6), t) for t, (x, dy) in enumerate(gap_xy)]
        moved.sort(key=lambda q: (q[0][1], q[0][0]))
        remap = {}
        new_xy = []
        for newpos, ((x, dy), carry, told) in enumerate(moved):
            remap[told] = (newpos, carry)
            new_xy.append((x, dy))
        out = []
        for face in faces:
            nf = []
            for ref in face:
                if ref[0] == "r":
                    nf.append(("r", ref[1], ref[2] + d))
                else:
                    b, tt = divmod(ref[1], 6)
                    newpos, carry = remap[tt]
                    nf.append(("g", (b + carry) * 6 + newpos))
            out.append(tuple(nf))
        return tuple(out), tuple(new_xy)

    thick3, gxy3 = shift_gaps(thick0, gxy0, 3)
    row_up = ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(0)),
              (F(3), F(0)), (F(4), F(1, 2)), (F(5), F(0)))
    row_dn = ((F(0), F(0)), (F(1), F(-1, 2)), (F(2), F(0)),
              (F(3), F(0)), (F(4), F(-1, 2)), (F(5), F(0)))
    return TilePattern(
        key="t3464_4612",
        slots=6,
        px=F(6),
        rows=4,
        gap_slots=(6, 0, 6, 0),
        strips=(thick0, thin, thick3, thin),
        row_xy=(row_up, row_dn, row_up, row_dn),
        gap_xy=(gxy0, (), gxy3, ()),
        row_h=F(7, 2),
        seam_offset=lambda j: 1,
    )


_register(_t3464_4612())

# [3.4^2.6:3.4.6.4]: thick strips with two hexagon orientations and diamond
# chains; thin strips of square runs and a tall hexagon at the row dips.
# Structure advances two slots (backwards) per double strip: period 10 rows.
def _t3426_3464() -> TilePattern:
    thick0 = (
        (R0(0), R0(1), G(0)),
        (R0(1), R0(2), G(1), G(3), G(2), G(0)),
        (R0(3), G(1), R0(2)),
        (G(1), R0(3), R0(4), G(4)),
        (G(5), G(4), R0(4)),
        (G(8), G(5), R0(4), R0(5)),
        (G(3), G(1), G(4), G(7)),
        (G(6), G(-3), G(0), G(2)),
        (G(3), R1(2), G(2)),
        (R1(3), R1(2), G(3), G(7)),
        (G(2), R1(2), R1(1), G(6)),
        (R1(4), R1(3), G(7)),
        (R1(0), G(6), R1(1)),
        (G(4), G(5), G(14), R1(5), R1(4), G(7)),
    )
    thin0 = (
        (R0(3), R0(4), R1(4), R1(3)),
        (R0(4), R0(5), R1(5), R1(4)),
        (R0(5), R0(6), R1(6), R1(5)),
        (R0(6), R0(7), R0(8), R1(8), R1(7), R1(6)),
    )
    gxy0 = (
        (F(3, 4), F(5, 4)), (F(11, 4), F(5, 4)),
        (F(3, 2), F(9, 4)), (F(9, 4), F(9, 4)), (F(15, 4), F(9, 4)), (F(9, 2), F(9, 4)),
        (F(1, 2), F(13, 4)), (F(13, 4), F(13, 4)),
    )

    def shift_gaps(faces, gap_xy, d):
        moved = [(((x + d) % 5, dy), int((x + d) // 5), t) for t, (x, dy) in enumerate(gap_xy)]
        moved.sort(key=lambda q: (q[0][1], q[0][0]))
        remap = {}
        new_xy = []
        for newpos, ((x, dy), carry, told) in enumerate(moved):
            remap[told] = (newpos, carry)
            new_xy.append((x, dy))
        out = []
        for face in faces:
            nf = []
            for ref in face:
                if ref[0] == "r":
                    nf.append(("r", ref[1], ref[2] + d))
                else:
                    b, tt = divmod(ref[1], 8)
                    newpos, carry = remap[tt]
                    nf.append(("g", (b + carry) * 8 + newpos))
            out.append(tuple(nf))
        return tuple(out), tuple(new_xy)

    strips, gxys, rxys, gslots = [], [], [], []
    for t in range(5):
        d = (-2 * t) % 5
        thick, gxy = shift_gaps(thick0, gxy0, d)
        thin = tuple(
            tuple(("r", r[1], r[2] + d) if r[0] == "r" else r for r in f) for f in thin0
        )
        zup = (4 + d) % 5
        zdn = (2 + d) % 5
        row_even = tuple(
            (F(c), F(1) if c == zup else F(0)) for c in range(5)
        )
        row_odd = tuple(
            (F(c), F(-1) if c == zdn else F(0)) for c in range(5)
        )
        strips += [thick, thin]
        gxys += [gxy, ()]
        rxys += [row_even, row_odd]
        gslots += [8, 0]
    return TilePattern(
        key="t3426_3464",
        slots=5,
        px=F(5),
        rows=10,
        gap_slots=tuple(gslots),
        strips=tuple(strips),
        row_xy=tuple(rxys),
        gap_xy=tuple(gxys),
        row_h=F(4),
        seam_offset=lambda j: j % 5,
    )


_register(_t3426_3464())

# [3^3.4^2:3.4.6.4]: square pairs with upright hexagons between row pairs,
# then two triangle/diamond bands; everything shifts two slots per three rows.
def _t3344_3464() -> TilePattern:
    thin = (
        (R0(0), R0(1), R1(1), R1(0)),
        (R0(1), R0(2), R1(2), R1(1)),
        (R1(2), R0(2), R0(3), R0(4), R1(4), R1(3)),
    )
    band_a = (
        (R0(0), R0(1), R1(0)),
        (R1(0), R0(1), R1(1)),
        (R1(1), R0(1), R0(2)),
        (R1(2), R1(1), R0(2), R0(3)),
        (R1(3), R1(2), R0(3)),
        (R0(3), R0(4), R1(4), R1(3)),
    )
    band_b = (
        (R0(0), R0(1), R1(1)),
        (R1(1), R0(1), R0(2), R1(2)),
        (R1(2), R0(2), R1(3)),
        (R1(3), R0(2), R0(3)),
        (R1(4), R1(3), R0(3)),
        (R0(3), R0(4), R1(5), R1(4)),
    )

    def shift(faces, d):
        return tuple(
            tuple(("r", r[1], r[2] + d) for r in f) for f in faces
        )

    r_dip3 = ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(-1, 2)))
    r_bump3 = ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(1, 2)))
    r_half0 = ((F(1, 2), F(0)), (F(3, 2), F(0)), (F(5, 2), F(1, 2)), (F(7, 2), F(1, 2)))
    r_dip1 = ((F(0), F(0)), (F(1), F(-1, 2)), (F(2), F(0)), (F(3), F(0)))
    r_bump1 = ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(0)), (F(3), F(0)))
    r_half2 = ((F(1, 2), F(1, 2)), (F(3, 2), F(1, 2)), (F(5, 2), F(0)), (F(7, 2), F(0)))
    return TilePattern(
        key="t3344_3464",
        slots=4,
        px=F(4),
        rows=6,
        gap_slots=(0,) * 6,
        strips=(
            thin, band_a, band_b,
            shift(thin, 2), shift(band_a, 2), shift(band_b, 2),
        ),
        row_xy=(r_dip3, r_bump3, r_half0, r_dip1, r_bump1, r_half2),
        gap_xy=((),) * 6,
        row_h=F(3, 2),
        seam_offset=lambda j: -1 if (j // 3) % 2 else -3,
    )


_register(_t3344_3464())

# [3^6:3^4.6]_1: same lattice skeleton as [3^3.4^2:3.4.6.4] with every
# square split into a triangle pair (diagonals fixed by the two-class check).
def _t36_346_1() -> TilePattern:
    thin = (
        (R0(0), R0(1), R1(1)),
        (R0(0), R1(1), R1(0)),
        (R0(1), R0(2), R1(2)),
        (R0(1), R1(2), R1(1)),
        (R1(2), R0(2), R0(3), R0(4), R1(4), R1(3)),
    )
    band_a = (
        (R0(0), R0(1), R1(0)),
        (R1(0), R0(1), R1(1)),
        (R1(1), R0(1), R0(2)),
        (R1(3), R1(2), R0(3)),
        (R1(1), R0(2), R0(3)),
        (R1(1), R0(3), R1(2)),
        (R0(4), R1(4), R1(3)),
        (R0(4), R1(3), R0(3)),
    )
    band_b = (
        (R0(0), R0(1), R1(1)),
        (R1(2), R0(2), R1(3)),
        (R1(3), R0(2), R0(3)),
        (R1(4), R1(3), R0(3)),
        (R1(1), R0(1), R0(2)),
        (R1(1), R0(2), R1(2)),
        (R0(4), R1(5), R1(4)),
        (R0(4), R1(4), R0(3)),
    )

    def shift(faces, d):
        return tuple(tuple(("r", r[1], r[2] + d) for r in f) for f in faces)

    r_dip3 = ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(-1, 2)))
    r_bump3 = ((F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(3), F(1, 2)))
    r_half0 = ((F(1, 2), F(0)), (F(3, 2), F(0)), (F(5, 2), F(1, 2)), (F(7, 2), F(1, 2)))
    r_dip1 = ((F(0), F(0)), (F(1), F(-1, 2)), (F(2), F(0)), (F(3), F(0)))
    r_bump1 = ((F(0), F(0)), (F(1), F(1, 2)), (F(2), F(0)), (F(3), F(0)))
    r_half2 = ((F(1, 2), F(1, 2)), (F(3, 2), F(1, 2)), (F(5, 2), F(0)), (F(7, 2), F(0)))
    return TilePattern(
        key="t36_346_1",
        slots=4,
        px=F(4),
        rows=6,
        gap_slots=(0,) * 6,
        strips=(
            thin, band_a, band_b,
            shift(thin, 2), shift(band_a, 2), shift(band_b, 2),
        ),
        row_xy=(r_dip3, r_bump3, r_half0, r_dip1, r_bump1, r_half2),
        gap_xy=((),) * 6,
        row_h=F(3, 2),
        seam_offset=lambda j: 1 if (j // 3) % 2 else -1,
    )


_register(_t36_346_1())

# [3^6:3^2.6^2]: two brick-offset hexagons and six triangles per period,
# mirrored in alternate strips.
_register(
    TilePattern(
        key="t36_3266",
        slots=3,
        px=F(3),
        rows=2,
        gap_slots=(4, 4),
        strips=(
            (
                (R0(0), R0(1), G(0)),
                (G(0), R0(1), R0(2), G(1), G(3), G(2)),
                (G(1), R0(2), R0(3)),
                (G(1), R0(3), G(4)),
                (G(2), G(3), R1(1)),
                (G(3), R1(2), R1(1)),
                (G(2), R1(1), R1(0)),
                (G(1), G(4), G(6), R1(3), R1(2), G(3)),
            ),
            (
                (G(0), R0(0), R0(1)),
                (G(0), R0(1), G(1)),
                (G(1), R0(1), R0(2)),
                (G(1), R0(2), R0(3), G(4), G(6), G(3)),
                (G(0), G(1), G(3), R1(2), R1(1), G(2)),
                (G(2), R1(1), R1(0)),
                (G(3), R1(3), R1(2)),
                (G(3), G(6), R1(3)),
            ),
        ),
        row_xy=(
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0))),
            ((F(0), F(0)), (F(1), F(0)), (F(2), F(0))),
        ),
        gap_xy=(
            ((F(1, 2), F(1)), (F(5, 2), F(1)), (F(1), F(2)), (F(2), F(2))),
            ((F(1), F(1)), (F(2), F(1)), (F(1, 2), F(2)), (F(5, 2), F(2))),
        ),
        row_h=F(3),
        seam_offset=lambda j: -(j % 2),
    )
)
