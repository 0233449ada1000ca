import pytest

from dsemkit.catalog import NotDivisibleError, by_name
from dsemkit.generators import (
    AdmissibilityError,
    ReprParams,
    admissible,
    enumerate_admissible,
    generate,
    vertex_count,
)


def ok(name, i, j, k):
    admissible(ReprParams(by_name(name), i, j, k))


def clause(name, i, j, k):
    with pytest.raises(AdmissibilityError) as exc:
        admissible(ReprParams(by_name(name), i, j, k))
    return exc.value.clause


def test_grid_type_boundaries():
    ok("[3^6:3^3.4^2]_1", 3, 3, 0)
    ok("[3^6:3^3.4^2]_1", 3, 3, 2)
    assert clause("[3^6:3^3.4^2]_1", 2, 3, 0) == "BadI"
    assert clause("[3^6:3^3.4^2]_1", 3, 4, 0) == "BadJ"
    assert clause("[3^6:3^3.4^2]_1", 3, 3, 3) == "BadK"
    ok("[3^6:3^3.4^2]_2", 3, 4, 0)
    ok("[3^6:3^3.4^2]_2", 3, 8, 1)


def test_dodecagon_type_boundaries():
    # j=1 needs i >= 24 and k in {6r+3 : 1 <= r < (i-6)/6}
    ok("[3.4.3.12:3.12^2]", 24, 1, 9)
    ok("[3.4.3.12:3.12^2]", 24, 1, 15)
    assert clause("[3.4.3.12:3.12^2]", 24, 1, 10) == "BadK"
    assert clause("[3.4.3.12:3.12^2]", 24, 1, 3) == "BadK"
    assert clause("[3.4.3.12:3.12^2]", 18, 1, 9) == "TooSmall"
    assert clause("[3.4.3.12:3.12^2]", 12, 2, 5) == "TooSmall"
    ok("[3.4.3.12:3.12^2]", 12, 3, 3)


def test_hex_band_windows():
    # j=2 window is 4..i-2 for both [3.4^2.6:3.6.3.6] types
    ok("[3.4^2.6:3.6.3.6]_1", 8, 2, 4)
    ok("[3.4^2.6:3.6.3.6]_1", 8, 2, 6)
    assert clause("[3.4^2.6:3.6.3.6]_1", 8, 2, 3) == "BadK"
    assert clause("[3.4^2.6:3.6.3.6]_1", 8, 2, 7) == "BadK"
    assert clause("[3.4^2.6:3.6.3.6]_1", 4, 2, 0) == "TooSmall"
    assert clause("[3.4^2.6:3.6.3.6]_1", 7, 2, 4) == "BadI"


def test_hexrow_type_boundaries():
    ok("[3^2.6^2:3.6.3.6]", 10, 1, 5)
    assert clause("[3^2.6^2:3.6.3.6]", 8, 1, 5) == "TooSmall"
    # the published j=1 set excludes (i-8)/2 + 5
    assert clause("[3^2.6^2:3.6.3.6]", 12, 1, 7) == "BadK"
    ok("[3^2.6^2:3.6.3.6]", 12, 1, 5)
    # odd j wants odd k, even j wants even k
    ok("[3^2.6^2:3.6.3.6]", 6, 3, 1)
    assert clause("[3^2.6^2:3.6.3.6]", 6, 3, 2) == "BadK"
    ok("[3^2.6^2:3.6.3.6]", 6, 4, 2)
    assert clause("[3^2.6^2:3.6.3.6]", 6, 4, 1) == "BadK"


def test_snub_type_k_depends_on_j_residue():
    ok("[3^3.4^2:3^2.4.3.4]_1", 5, 2, 3)
    assert clause("[3^3.4^2:3^2.4.3.4]_1", 5, 2, 0) == "BadK"
    ok("[3^3.4^2:3^2.4.3.4]_1", 5, 4, 0)
    assert clause("[3^3.4^2:3^2.4.3.4]_1", 5, 4, 3) == "BadK"
    assert clause("[3^3.4^2:3^2.4.3.4]_1", 6, 2, 3) == "BadI"
    assert clause("[3^3.4^2:3^2.4.3.4]_1", 5, 3, 3) == "BadJ"


def test_3266_3636_small_i_requirements():
    ok("[3^2.6^2:3.6.3.6]", 6, 2, 2)
    assert clause("[3^2.6^2:3.6.3.6]", 4, 2, 2) == "TooSmall"


def test_vertex_count_formulas():
    assert vertex_count(by_name("[3^2.6^2:3.6.3.6]"), 10, 1) == 15
    assert vertex_count(by_name("[3^6:3^2.6^2]"), 9, 1) == 21
    assert vertex_count(by_name("[3^4.6:3^2.6^2]"), 6, 2) == 12
    assert vertex_count(by_name("[3^6:3^2.4.12]"), 15, 2) == 42
    with pytest.raises(NotDivisibleError):
        vertex_count(by_name("[3^3.4^2:3^2.4.3.4]_1"), 7, 2)


def test_generate_counts():
    cases = [
        ("[3^6:3^3.4^2]_1", 3, 3, 0, 9),
        ("[3^6:3^2.4.12]", 15, 2, 10, 42),
        ("[3.4^2.6:3.6.3.6]_1", 6, 2, 4, 15),
        ("[3.4.3.12:3.12^2]", 24, 1, 9, 32),
    ]
    for name, i, j, k, n in cases:
        m, layout = generate(ReprParams(by_name(name), i, j, k))
        assert m.vertex_count == n
        assert len(layout.row_cycle(0)) == i


def test_enumerate_admissible_examples():
    t = by_name("[3^6:3^3.4^2]_1")
    got = [(p.i, p.j, p.k) for p in enumerate_admissible(t, 9)]
    assert got == [(3, 3, 0), (3, 3, 1), (3, 3, 2)]
    t = by_name("[3^3.4^2:3.4.6.4]")
    got = [(p.i, p.j, p.k) for p in enumerate_admissible(t, 12)]
    assert got == [(4, 3, 3)]
    assert enumerate_admissible(by_name("[3^6:3^2.4.12]"), 41) == []


def test_layouts_differ_only_at_seam():
    t = by_name("[3^6:3^3.4^2]_1")
    m1, l1 = generate(ReprParams(t, 4, 3, 1))
    m2, l2 = generate(ReprParams(t, 4, 3, 2))
    assert l1.coords == l2.coords
    # faces away from the seam strip coincide
    below1 = {f for f in m1.faces if all(v < 2 * 4 for v in f)}
    below2 = {f for f in m2.faces if all(v < 2 * 4 for v in f)}
    assert below1 == below2
    assert m1.faces != m2.faces


def test_generate_rejects_inadmissible():
    t = by_name("[3^6:3^3.4^2]_1")
    with pytest.raises(AdmissibilityError):
        generate(ReprParams(t, 3, 4, 0))
