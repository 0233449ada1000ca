"""Registry of the twenty torus map types and the two-class structure check.

Each catalogued type pairs two vertex face-sequences; an instance is accepted
when its vertex set splits into exactly those two classes and the cyclic
sequence of face-sequences around the link is the same for every member of a
class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core_map import FaceSequence, SurfaceMap, classify_vertices, curvature, link_face_sequences
from . import patterns


@dataclass(frozen=True)
class DsemType:
    """Static data for one of the twenty catalogued map types."""

    name: str
    slug: str
    fseq_a: FaceSequence
    fseq_b: FaceSequence
    num: int                     # vertex count = num * i * j / den
    den: int
    min_degree: int
    pattern: "patterns.TilePattern"

    def vertex_count(self, i: int, j: int) -> int:
        val = Fraction(self.num * i * j, self.den)
        if val.denominator != 1:
            raise NotDivisibleError(
                f"{self.name}: {self.num}*{i}*{j}/{self.den} is not an integer"
            )
        return int(val)


class NotDivisibleError(ValueError):
    """Vertex-count formula does not yield an integer for these parameters."""


_SPEC = [
    # (name, fseq_a, fseq_b, num, den, pattern key)
    ("[3^3.4^2:4^4]_1", "3^3.4^2", "4^4", 1, 1, "t3344_44_1"),
    ("[3^3.4^2:4^4]_2", "3^3.4^2", "4^4", 1, 1, "t3344_44_2"),
    ("[3^6:3^3.4^2]_1", "3^6", "3^3.4^2", 1, 1, "t36_3344_1"),
    ("[3^6:3^3.4^2]_2", "3^6", "3^3.4^2", 1, 1, "t36_3344_2"),
    ("[3^3.4^2:3^2.4.3.4]_1", "3^3.4^2", "3^2.4.3.4", 6, 5, "t3344_32434_1"),
    ("[3^3.4^2:3^2.4.3.4]_2", "3^3.4^2", "3^2.4.3.4", 1, 1, "t3344_32434_2"),
    ("[3^6:3^2.4.3.4]", "3^6", "3^2.4.3.4", 7, 6, "t36_32434"),
    ("[3.4^2.6:3.6.3.6]_1", "3.4^2.6", "3.6.3.6", 5, 4, "t3426_3636_1"),
    ("[3.4^2.6:3.6.3.6]_2", "3.4^2.6", "3.6.3.6", 5, 4, "t3426_3636_2"),
    ("[3^2.6^2:3.6.3.6]", "3^2.6^2", "3.6.3.6", 3, 2, "t3266_3636"),
    ("[3^6:3^2.6^2]", "3^6", "3^2.6^2", 7, 3, "t36_3266"),
    ("[3^4.6:3^2.6^2]", "3^4.6", "3^2.6^2", 1, 1, "t346_3266"),
    ("[3^2.4.3.4:3.4.6.4]", "3^2.4.3.4", "3.4.6.4", 3, 2, "t32434_3464"),
    ("[3^6:3^4.6]_1", "3^6", "3^4.6", 1, 1, "t36_346_1"),
    ("[3^6:3^4.6]_2", "3^6", "3^4.6", 4, 3, "t36_346_2"),
    ("[3^3.4^2:3.4.6.4]", "3^3.4^2", "3.4.6.4", 1, 1, "t3344_3464"),
    ("[3^6:3^2.4.12]", "3^6", "3^2.4.12", 7, 5, "t36_32412"),
    ("[3.4.3.12:3.12^2]", "3.4.3.12", "3.12^2", 4, 3, "t34312_3122"),
    ("[3.4.6.4:4.6.12]", "3.4.6.4", "4.6.12", 3, 2, "t3464_4612"),
    ("[3.4^2.6:3.4.6.4]", "3.4^2.6", "3.4.6.4", 9, 5, "t3426_3464"),
]


def catalog() -> list[DsemType]:
    """All twenty types, in a fixed order."""
    out = []
    for name, fa, fb, num, den, key in _SPEC:
        fseq_a = FaceSequence.parse(fa)
        fseq_b = FaceSequence.parse(fb)
        assert curvature(fseq_a) == 0 and curvature(fseq_b) == 0
        out.append(
            DsemType(
                name=name,
                slug=key,
                fseq_a=fseq_a,
                fseq_b=fseq_b,
                num=num,
                den=den,
                min_degree=min(fseq_a.degree(), fseq_b.degree()),
                pattern=patterns.TABLE.get(key),
            )
        )
    return out


def by_name(name: str) -> DsemType:
    for t in catalog():
        if t.name == name or t.slug == name:
            return t
    raise KeyError(f"unknown type {name!r}")


def _canonical_cyclic(seq: tuple, include_reflection: bool) -> tuple:
    variants = [seq]
    if include_reflection:
        variants.append(tuple(reversed(seq)))
    best = None
    for s in variants:
        for t in range(len(s)):
            cand = s[t:] + s[:t]
            if best is None or cand < best:
                best = cand
    return best


@dataclass
class DsemReport:
    """Outcome of checking a map against a catalogued type."""

    ok: bool
    class_sizes: dict[str, int]
    classes_match: bool
    links_constant: bool
    links_constant_oriented: bool
    issues: list[str]

    def __bool__(self) -> bool:
        return self.ok


def verify_dsem(m: SurfaceMap, t: DsemType) -> DsemReport:
    """Check the two-class definition: class structure and constant links.

    Link constancy is checked both up to rotation+reflection (the reported
    pass criterion, matching face-sequence equality) and up to rotation only
    (reported separately in ``links_constant_oriented``).
    """
    issues: list[str] = []
    classes = classify_vertices(m)
    sizes = {str(fs): len(vs) for fs, vs in sorted(classes.items(), key=lambda kv: str(kv[0]))}
    expected = {t.fseq_a, t.fseq_b}
    classes_match = set(classes) == expected
    if not classes_match:
        got = ", ".join(sorted(str(fs) for fs in classes))
        issues.append(f"expected classes {t.fseq_a}/{t.fseq_b}, got {got}")

    links_constant = True
    links_constant_oriented = True
    for fs, vs in classes.items():
        canon = None
        canon_rot = None
        for v in sorted(vs):
            try:
                lfs = link_face_sequences(m, v)
            except Exception as exc:
                links_constant = False
                issues.append(f"link of vertex {v} is not a cycle: {exc}")
                break
            key = _canonical_cyclic(tuple(str(x) for x in lfs), include_reflection=True)
            key_rot = _canonical_cyclic(tuple(str(x) for x in lfs), include_reflection=False)
            if canon is None:
                canon, canon_rot = key, key_rot
            else:
                if key != canon:
                    links_constant = False
                    issues.append(f"link face-sequence varies within class {fs}")
                    break
                if key_rot != canon_rot:
                    links_constant_oriented = False
    ok = classes_match and links_constant
    return DsemReport(
        ok=ok,
        class_sizes=sizes,
        classes_match=classes_match,
        links_constant=links_constant,
        links_constant_oriented=links_constant_oriented,
        issues=issues,
    )
