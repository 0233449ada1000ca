import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from dsemkit.core_map import (
    FaceSequence,
    MapError,
    NotClosedError,
    build_from_faces,
    classify_vertices,
    curvature,
    degree,
    euler_characteristic,
    face_sequence,
    link,
    link_face_sequences,
)
from dsemkit.catalog import by_name
from dsemkit.generators import ReprParams, generate


OCTAHEDRON = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
    (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
]


def quad_torus(w, h):
    faces = []
    for s in range(h):
        for c in range(w):
            faces.append((
                s * w + c,
                s * w + (c + 1) % w,
                ((s + 1) % h) * w + (c + 1) % w,
                ((s + 1) % h) * w + c,
            ))
    return build_from_faces(faces, vertex_count=w * h)


def test_single_square_not_closed():
    with pytest.raises(NotClosedError):
        build_from_faces([(0, 1, 2, 3)])


def test_two_triangles_glued_everywhere_rejected():
    with pytest.raises(MapError):
        build_from_faces([(0, 1, 2), (0, 2, 1)])


def test_octahedron_builds_and_is_a_sphere():
    m = build_from_faces(OCTAHEDRON)
    assert euler_characteristic(m) == 2
    assert all(degree(m, v) == 4 for v in range(6))


def test_quad_torus_grid():
    m = quad_torus(4, 4)
    assert euler_characteristic(m) == 0
    fs = face_sequence(m, 5)
    assert fs == FaceSequence.parse("4^4")
    assert all(face_sequence(m, v) == fs for v in range(16))


def test_generated_instance_validates():
    t = by_name("[3^6:3^3.4^2]_1")
    m, _ = generate(ReprParams(t, 3, 3, 0))
    assert m.vertex_count == 9
    assert euler_characteristic(m) == 0


def test_face_sequence_on_square_row_vertex():
    t = by_name("[3^6:3^3.4^2]_1")
    m, layout = generate(ReprParams(t, 4, 3, 1))
    # row 0 carries the squares above it
    v = layout.row_cycle(0)[0]
    assert face_sequence(m, v) == FaceSequence.parse("3^3.4^2")
    # row 2 sits between two triangle strips
    w = layout.row_cycle(2)[0]
    assert face_sequence(m, w) == FaceSequence.parse("3^6")


def test_link_of_hexagonal_vertex_is_six_cycle():
    t = by_name("[3^6:3^3.4^2]_1")
    m, layout = generate(ReprParams(t, 4, 3, 1))
    w = layout.row_cycle(2)[0]
    lk = link(m, w)
    assert len(lk) == 6
    assert set(lk.vertices) == set(m.rotation[w])


def test_link_lengths_follow_face_sequence():
    # sum of (p - 2) * n over the face-sequence
    t = by_name("[3.4.3.12:3.12^2]")
    m, _ = generate(ReprParams(t, 12, 3, 3))
    for v in range(m.vertex_count):
        fs = face_sequence(m, v)
        assert len(link(m, v)) == fs.link_length()
    assert FaceSequence.parse("3.12^2").link_length() == 21


def test_link_face_sequences_of_triangle_row_vertex():
    t = by_name("[3^6:3^3.4^2]_1")
    m, layout = generate(ReprParams(t, 4, 3, 1))
    w = layout.row_cycle(2)[0]
    seqs = [str(fs) for fs in link_face_sequences(m, w)]
    assert seqs.count("(3^6)") == 2
    assert seqs.count("(3^3,4^2)") == 4


def test_curvature_examples():
    assert curvature(FaceSequence.parse("3^6")) == 0
    assert curvature(FaceSequence.parse("3.12^2")) == 0
    assert curvature(FaceSequence.parse("5^4")) == Fraction(-1, 5)
    assert curvature(FaceSequence.parse("4^4")) == 0


def test_degree_matches_face_sequence():
    assert FaceSequence.parse("3^3.4^2").degree() == 5
    assert FaceSequence.parse("4.6.12").degree() == 3


def test_classify_two_classes():
    t = by_name("[3^6:3^2.6^2]")
    m, _ = generate(ReprParams(t, 9, 1, 6))
    classes = classify_vertices(m)
    assert len(classes) == 2
    assert sum(len(vs) for vs in classes.values()) == m.vertex_count


def test_face_sequence_canonical_rotation_reflection():
    a = FaceSequence.parse("3^3.4^2")
    b = FaceSequence.parse("4^2.3^3")
    c = FaceSequence.parse("4.3^3.4")
    assert a == b == c
    x = FaceSequence.parse("3.4.6.4")
    y = FaceSequence.parse("4.6.4.3")
    z = FaceSequence.parse("4.3.4.6")  # reflection of a rotation
    assert x == y == z


@given(st.lists(st.sampled_from([3, 4, 6, 12]), min_size=1, max_size=8),
       st.integers(0, 7), st.booleans())
def test_face_sequence_canonicalisation_property(sizes, rot, flip):
    rotated = sizes[rot % len(sizes):] + sizes[:rot % len(sizes)]
    if flip:
        rotated = rotated[::-1]
    assert FaceSequence.from_sizes(sizes) == FaceSequence.from_sizes(rotated)


def test_json_round_trip():
    t = by_name("[3^4.6:3^2.6^2]")
    m, layout = generate(ReprParams(t, 6, 2, 3))
    from dsemkit.core_map import SurfaceMap

    doc = m.to_json(labels=layout.labels)
    m2 = SurfaceMap.from_json(doc)
    assert m2.faces == m.faces
    assert m2.edges == m.edges
    assert m2.to_json(labels=layout.labels) == doc


def test_degree_and_link_length_invariants_across_types():
    from dsemkit.catalog import catalog
    from dsemkit.core_map import degree, link
    from dsemkit.generators import enumerate_admissible

    for t in catalog():
        p = enumerate_admissible(t, 48)[0]
        m, _ = generate(p)
        for v in range(m.vertex_count):
            fs = face_sequence(m, v)
            assert degree(m, v) == fs.degree()
            assert len(link(m, v)) == fs.link_length()
