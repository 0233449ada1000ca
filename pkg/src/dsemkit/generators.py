"""Instantiate strip patterns into torus maps, gated by admissibility rules.

generate() replicates a type's strip pattern i/slots times around and j rows
up, wrapping the top row onto row 0 with a shift of k vertex slots.  The
admissibility predicate for each type states exactly when the wrapped-up
object is a valid two-class map; generate() refuses inadmissible parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import DsemType
from .core_map import SurfaceMap, build_from_faces
from .patterns import TilePattern

F = Fraction


class AdmissibilityError(ValueError):
    """Parameters outside the type's admissible set.

    ``clause`` is one of BadI, BadJ, TooSmall, BadK.
    """

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class InternalGluingError(RuntimeError):
    """A pattern table produced an inconsistent map (a defect, not bad input)."""


@dataclass(frozen=True)
class ReprParams:
    """(type, i, j, k): i = row length, j = row count, k = seam shift."""

    dsem_type: DsemType
    i: int
    j: int
    k: int

    def __str__(self) -> str:
        return f"{self.dsem_type.name}(i={self.i}, j={self.j}, k={self.k})"


@dataclass
class Layout:
    """Unrolled-strip geometry for one generated map."""

    type_name: str
    i: int
    j: int
    k: int
    seam_shift: int
    width: Fraction
    height: Fraction
    coords: dict[int, tuple[Fraction, Fraction]]
    labels: dict[int, str]
    row_col: dict[int, tuple[int, int]]          # row vertex -> (row, column)
    gap_index: dict[int, tuple[int, int]]        # gap vertex -> (strip, slot)
    disp: dict[tuple[int, int], tuple[Fraction, Fraction]]
    diagonals: frozenset[tuple[int, int]]

    def row_cycle(self, s: int) -> list[int]:
        ids = [v for v, (r, _) in self.row_col.items() if r == s]
        ids.sort(key=lambda v: self.row_col[v][1])
        return ids


def _k_set_note(values) -> str:
    vals = sorted(values)
    if not vals:
        return "no admissible k"
    return "admissible k: " + ", ".join(map(str, vals))


def _check_mod(name: str, value: int, mod: int, clause: str) -> None:
    if value % mod != 0:
        raise AdmissibilityError(clause, f"{name}={value} must be a multiple of {mod}")


def admissible_k_set(t: DsemType, i: int, j: int) -> set[int]:
    """The admissible shifts for (i, j), per the type's published conditions."""
    name = t.name
    full = set(range(i))
    if name in ("[3^6:3^3.4^2]_1", "[3^6:3^3.4^2]_2", "[3^3.4^2:4^4]_1", "[3^3.4^2:4^4]_2"):
        return full
    if name == "[3^3.4^2:3^2.4.3.4]_1":
        if j % 4 == 2:
            return {5 * r + 3 for r in range(i // 5)}
        return {5 * r for r in range(i // 5)}
    if name == "[3^3.4^2:3^2.4.3.4]_2":
        if j == 2:
            return {4 * r for r in range(1, i // 4)}
        return {4 * r for r in range(i // 4)}
    if name == "[3^6:3^2.4.3.4]":
        if j == 2:
            return {3 * r + 2 for r in range(1, (i - 3) // 3)}
        if j % 4 == 2:
            return {3 * r + 2 for r in range(i // 3)}
        return {3 * r for r in range(i // 3)}
    if name in ("[3.4^2.6:3.6.3.6]_1", "[3.4^2.6:3.6.3.6]_2"):
        if j == 2:
            return set(range(4, i - 1))
        return full
    if name == "[3^2.6^2:3.6.3.6]":
        if j == 1:
            ks = {2 * r + 5 for r in range((i - 8) // 2)}
            ks.discard((i - 8) // 2 + 5)
            return ks
        if j == 2:
            return {2 * r for r in range(1, i // 2)}
        if j % 2 == 1:
            return {2 * r + 1 for r in range(i // 2)}
        return {2 * r for r in range(i // 2)}
    if name == "[3^6:3^2.6^2]":
        if j == 1:
            return {3 * r for r in range(2, i // 3)}
        return {3 * r for r in range(i // 3)}
    if name == "[3^4.6:3^2.6^2]":
        if j == 2:
            return {2 * r + 3 for r in range((i - 6) // 2 + 1)}
        return {2 * r + 1 for r in range((i - 2) // 2 + 1)}
    if name == "[3^2.4.3.4:3.4.6.4]":
        return {4 * r for r in range(i // 4)}
    if name == "[3^6:3^4.6]_1":
        return {4 * r + 1 for r in range(i // 4)}
    if name == "[3^6:3^4.6]_2":
        # The published clauses give bare intervals (j=2: 4..i-1, else 0..i-1);
        # construction additionally forces k = -j/2 (mod 3), and j=2 pinches
        # the window further.  See the decisions ledger.
        if j == 2:
            return {3 * r + 2 for r in range(1, (i - 3) // 3)}
        res = (-(j // 2)) % 3
        return {k for k in range(i) if k % 3 == res}
    if name == "[3^6:3^2.4.12]":
        if j == 2:
            return {5 * r for r in range(2, i // 5)}
        return {5 * r for r in range(i // 5)}
    if name == "[3.4.3.12:3.12^2]":
        if j == 1:
            return {6 * r + 3 for r in range(1, (i - 6) // 6)}
        if j == 2:
            return {6 * r + 5 for r in range(1, (i - 12) // 6)}
        if j % 2 == 1:
            return {6 * r + 3 for r in range((i - 6) // 6 + 1)}
        return {6 * r + 5 for r in range((i - 6) // 6 + 1)}
    if name == "[3.4.6.4:4.6.12]":
        # Published: {3r+2} with a window for j=2.  The construction further
        # needs k = 2 (mod 6) when j = 4m+2 and k = 5 (mod 6) when j = 4m.
        # See the decisions ledger.
        res = 2 if j % 4 == 2 else 5
        if j == 2:
            base = {3 * r + 2 for r in range(2, (i - 3) // 3)}
        else:
            base = {3 * r + 2 for r in range(i // 3)}
        return {k for k in base if k % 6 == res}
    if name == "[3.4^2.6:3.4.6.4]":
        return {5 * r for r in range(i // 5)}
    if name == "[3^3.4^2:3.4.6.4]":
        return {4 * r + 3 for r in range(i // 4)}
    raise KeyError(name)


def admissible(p: ReprParams) -> None:
    """Raise AdmissibilityError unless (i, j, k) is admissible for the type."""
    t, i, j, k = p.dsem_type, p.i, p.j, p.k
    name = t.name
    if j < 1:
        raise AdmissibilityError("BadJ", f"j={j} must be positive")
    if i < 1:
        raise AdmissibilityError("BadI", f"i={i} must be positive")

    if name in ("[3^6:3^3.4^2]_1", "[3^3.4^2:4^4]_1"):
        _check_mod("j", j, 3, "BadJ")
        if i < 3:
            raise AdmissibilityError("BadI", f"i={i} must be at least 3")
        if i * j < 9:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 9")
    elif name in ("[3^6:3^3.4^2]_2", "[3^3.4^2:4^4]_2"):
        _check_mod("j", j, 4, "BadJ")
        if i < 3:
            raise AdmissibilityError("BadI", f"i={i} must be at least 3")
        if i * j < 12:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 12")
    elif name == "[3^3.4^2:3^2.4.3.4]_1":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 5, "BadI")
        if 6 * i * j // 5 < 12:
            raise AdmissibilityError("TooSmall", f"6ij/5={6 * i * j // 5} must be at least 12")
    elif name == "[3^3.4^2:3^2.4.3.4]_2":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 4, "BadI")
        if j == 2 and i < 8:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 8 when j=2")
        if i * j < 16:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 16")
    elif name == "[3^6:3^2.4.3.4]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 3, "BadI")
        if j == 2 and i < 9:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 9 when j=2")
        if j >= 4 and i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
        if 7 * i * j // 6 < 21:
            raise AdmissibilityError("TooSmall", f"7ij/6={7 * i * j // 6} must be at least 21")
    elif name in ("[3.4^2.6:3.6.3.6]_1", "[3.4^2.6:3.6.3.6]_2"):
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 2, "BadI")
        if i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
    elif name == "[3^2.6^2:3.6.3.6]":
        _check_mod("i", i, 2, "BadI")
        if j == 1 and i < 10:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 10 when j=1")
        if j >= 2 and i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
    elif name == "[3^6:3^2.6^2]":
        _check_mod("i", i, 3, "BadI")
        if j == 1 and i < 9:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 9 when j=1")
        if j > 1 and i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
    elif name == "[3^4.6:3^2.6^2]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 2, "BadI")
        if i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
        if i * j < 12:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 12")
    elif name == "[3^2.4.3.4:3.4.6.4]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 4, "BadI")
        if 3 * i * j // 2 < 12:
            raise AdmissibilityError("TooSmall", f"3ij/2={3 * i * j // 2} must be at least 12")
    elif name == "[3^6:3^4.6]_1":
        _check_mod("j", j, 3, "BadJ")
        _check_mod("i", i, 4, "BadI")
        if i * j < 12:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 12")
    elif name == "[3^6:3^4.6]_2":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 3, "BadI")
        if j == 2 and i < 9:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 9 when j=2")
        if j >= 4 and i < 6:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 6")
        if 4 * i * j // 3 < 24:
            raise AdmissibilityError("TooSmall", f"4ij/3={4 * i * j // 3} must be at least 24")
    elif name == "[3^6:3^2.4.12]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 5, "BadI")
        if j == 2 and i < 15:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 15 when j=2")
        if j >= 4 and i < 10:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 10")
        if 7 * i * j // 5 < 42:
            raise AdmissibilityError("TooSmall", f"7ij/5={7 * i * j // 5} must be at least 42")
    elif name == "[3.4.3.12:3.12^2]":
        _check_mod("i", i, 6, "BadI")
        if j == 1 and i < 24:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 24 when j=1")
        if j == 2 and i < 18:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 18 when j=2")
        if j > 2 and i < 12:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 12")
        if 4 * i * j // 3 < 32:
            raise AdmissibilityError("TooSmall", f"8ij/6={4 * i * j // 3} must be at least 32")
    elif name == "[3.4.6.4:4.6.12]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 6, "BadI")
        if i < 12:
            raise AdmissibilityError("TooSmall", f"i={i} must be at least 12")
        if 3 * i * j // 2 < 36:
            raise AdmissibilityError("TooSmall", f"3ij/2={3 * i * j // 2} must be at least 36")
    elif name == "[3.4^2.6:3.4.6.4]":
        _check_mod("j", j, 2, "BadJ")
        _check_mod("i", i, 5, "BadI")
        if 9 * i * j // 5 < 18:
            raise AdmissibilityError("TooSmall", f"9ij/5={9 * i * j // 5} must be at least 18")
    elif name == "[3^3.4^2:3.4.6.4]":
        _check_mod("j", j, 3, "BadJ")
        _check_mod("i", i, 4, "BadI")
        if i * j < 12:
            raise AdmissibilityError("TooSmall", f"ij={i * j} must be at least 12")
    else:
        raise KeyError(name)

    if not (0 <= k < i):
        raise AdmissibilityError("BadK", f"k={k} outside 0..{i - 1}")
    ks = admissible_k_set(t, i, j)
    if k not in ks:
        raise AdmissibilityError("BadK", f"k={k} not admissible for j={j}; {_k_set_note(ks)}")


def vertex_count(t: DsemType, i: int, j: int) -> int:
    return t.vertex_count(i, j)


def generate(p: ReprParams) -> tuple[SurfaceMap, Layout]:
    """Build the torus map for admissible parameters, with its strip layout."""
    admissible(p)
    t, i, j, k = p.dsem_type, p.i, p.j, p.k
    pat: TilePattern = t.pattern
    blocks = pat.blocks(i)
    k_eff = (k + pat.seam_offset(j)) % i

    gap_count = [pat.gap_slots[s % pat.rows] * blocks for s in range(j)]
    gap_base = [0] * j
    acc = j * i
    for s in range(j):
        gap_base[s] = acc
        acc += gap_count[s]
    n = acc
    if n != t.vertex_count(i, j):
        raise InternalGluingError(
            f"{t.name}: pattern yields {n} vertices, formula says {t.vertex_count(i, j)}"
        )

    def row_vertex(s: int, c: int) -> int:
        return s * i + c % i

    def resolve(ref, s: int, b: int) -> int:
        kind = ref[0]
        if kind == "r":
            _, up, o = ref
            c = b * pat.slots + o
            if up == 0:
                return row_vertex(s, c)
            if s + 1 < j:
                return row_vertex(s + 1, c)
            return row_vertex(0, c + k_eff)
        _, o = ref
        cnt = gap_count[s]
        return gap_base[s] + (b * pat.gap_slots[s % pat.rows] + o) % cnt

    # Positions in abstract (slot, row) units; these drive the homotopy
    # bookkeeping, so the only requirement is a consistent value per edge.
    def slot_pos(ref, s: int, b: int) -> tuple[Fraction, Fraction]:
        ph = s % pat.rows
        if ref[0] == "r":
            _, up, o = ref
            return (F(b * pat.slots + o), F(s + up))
        _, o = ref
        gslots = pat.gap_slots[ph]
        bb, oo = divmod(b * gslots + o, gslots)
        x, dy = pat.gap_xy[ph][oo]
        return (F(bb * pat.slots) + x * pat.slots / pat.px, F(s) + dy / pat.row_h)

    width = pat.px * blocks
    height = pat.row_h * j
    faces: list[tuple[int, ...]] = []
    disp: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    diagonals: set[tuple[int, int]] = set()
    for s in range(j):
        ph = s % pat.rows
        for b in range(blocks):
            for face in pat.strips[ph]:
                ids = tuple(resolve(ref, s, b) for ref in face)
                pts = [slot_pos(ref, s, b) for ref in face]
                faces.append(ids)
                for t1 in range(len(ids)):
                    t2 = (t1 + 1) % len(ids)
                    u, v = ids[t1], ids[t2]
                    d = (pts[t2][0] - pts[t1][0], pts[t2][1] - pts[t1][1])
                    prev = disp.get((u, v))
                    if prev is not None and prev != d:
                        raise InternalGluingError(
                            f"{t.name}(i={i},j={j},k={k}): edge {u}-{v} drawn with "
                            f"two displacements {prev} and {d}"
                        )
                    disp[(u, v)] = d
                    disp[(v, u)] = (-d[0], -d[1])
            for a_ref, b_ref in (pat.diag_strips[ph] if pat.diag_strips else ()):
                u, v = resolve(a_ref, s, b), resolve(b_ref, s, b)
                diagonals.add((u, v) if u < v else (v, u))

    try:
        m = build_from_faces(faces, vertex_count=n)
    except Exception as exc:
        raise InternalGluingError(f"{t.name}(i={i},j={j},k={k}): {exc}") from exc

    coords: dict[int, tuple[Fraction, Fraction]] = {}
    labels: dict[int, str] = {}
    row_col: dict[int, tuple[int, int]] = {}
    gap_index: dict[int, tuple[int, int]] = {}
    for s in range(j):
        ph = s % pat.rows
        for c in range(i):
            v = row_vertex(s, c)
            bb, oo = divmod(c, pat.slots)
            x, dy = pat.row_xy[ph][oo]
            coords[v] = (pat.px * bb + x, pat.row_h * s + dy)
            labels[v] = f"a_{{{s + 1},{c + 1}}}"
            row_col[v] = (s, c)
        slots = pat.gap_slots[ph]
        for tgap in range(gap_count[s]):
            v = gap_base[s] + tgap
            bb, oo = divmod(tgap, slots)
            x, dy = pat.gap_xy[ph][oo]
            coords[v] = (pat.px * bb + x, pat.row_h * s + dy)
            labels[v] = f"x_{{{s + 1},{tgap + 1}}}"
            gap_index[v] = (s, tgap)

    layout = Layout(
        type_name=t.name,
        i=i,
        j=j,
        k=k,
        seam_shift=k_eff,
        width=width,
        height=height,
        coords=coords,
        labels=labels,
        row_col=row_col,
        gap_index=gap_index,
        disp=disp,
        diagonals=frozenset(diagonals),
    )
    return m, layout


def enumerate_admissible(t: DsemType, max_vertices: int) -> list[ReprParams]:
    """All admissible (i, j, k) with vertex count <= max_vertices, lexicographic."""
    out = []
    for i in range(1, max_vertices + 1):
        for j in range(1, max_vertices + 1):
            n = Fraction(t.num * i * j, t.den)
            if n.denominator != 1:
                continue
            if int(n) > max_vertices:
                break
            for k in range(i):
                try:
                    admissible(ReprParams(t, i, j, k))
                except AdmissibilityError:
                    continue
                out.append(ReprParams(t, i, j, k))
    return sorted(out, key=lambda p: (p.i, p.j, p.k))
