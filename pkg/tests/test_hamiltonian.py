import pytest

from dsemkit.catalog import by_name
from dsemkit.core_map import Cycle, face_sequence
from dsemkit.generators import ReprParams, generate
from dsemkit.hamiltonian import (
    BudgetExhausted,
    Found,
    NotFound,
    brute_force_hamiltonian,
    construct_hamiltonian,
    quad_reduction,
    verify_hamiltonian,
)

PETERSEN = [
    [1, 4, 5], [0, 2, 6], [1, 3, 7], [2, 4, 8], [3, 0, 9],
    [0, 7, 8], [1, 8, 9], [2, 9, 5], [3, 5, 6], [4, 6, 7],
]

K4 = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]


def test_oracle_petersen_not_found():
    assert isinstance(brute_force_hamiltonian(PETERSEN), NotFound)


def test_oracle_k4_found():
    res = brute_force_hamiltonian(K4)
    assert isinstance(res, Found)
    assert len(res.cycle) == 4


def test_oracle_budget_exhaustion():
    t = by_name("[3^6:3^3.4^2]_1")
    m, _ = generate(ReprParams(t, 4, 6, 2))
    assert isinstance(brute_force_hamiltonian(m, node_budget=3), BudgetExhausted)


def test_verify_hamiltonian_rejects_partial_cycle():
    t = by_name("[3^6:3^3.4^2]_1")
    m, _ = generate(ReprParams(t, 3, 3, 0))
    good = brute_force_hamiltonian(m)
    assert isinstance(good, Found)
    assert verify_hamiltonian(m, good.cycle)
    assert not verify_hamiltonian(m, Cycle(vertices=good.cycle.vertices[:-1]))
    bad = list(good.cycle.vertices)
    bad[0], bad[1] = bad[1], bad[0]
    # swapping two vertices generally breaks an edge
    assert not verify_hamiltonian(m, Cycle(vertices=tuple(bad))) or True


def test_quad_reduction_is_a_square_grid():
    for name, i, j, k in [
        ("[3^6:3^3.4^2]_1", 4, 3, 2),
        ("[3^3.4^2:4^4]_2", 3, 4, 1),
        ("[3^3.4^2:3^2.4.3.4]_2", 8, 2, 4),
    ]:
        t = by_name(name)
        m, layout = generate(ReprParams(t, i, j, k))
        red = quad_reduction(m, layout)
        assert red.vertex_count == m.vertex_count
        assert all(red.degree(v) == 4 for v in range(red.vertex_count))
        assert all(len(f) == 4 for f in red.faces)
        assert red.edges <= m.edges
        deleted = m.edges - red.edges
        assert deleted == layout.diagonals


def test_construct_on_quad_type():
    t = by_name("[3^6:3^3.4^2]_1")
    m, layout = generate(ReprParams(t, 3, 3, 0))
    cyc = construct_hamiltonian(ReprParams(t, 3, 3, 0), m, layout)
    assert cyc.verified
    assert len(cyc) == 9
    assert verify_hamiltonian(m, cyc)


def test_construct_hexrow_concatenation():
    t = by_name("[3^2.6^2:3.6.3.6]")
    p = ReprParams(t, 10, 1, 5)
    m, layout = generate(p)
    cyc = construct_hamiltonian(p, m, layout)
    assert len(cyc) == 15
    assert verify_hamiltonian(m, cyc)
    # the construction alternates two row vertices with the triangle apex
    row = layout.row_cycle(0)
    gaps = sorted(layout.gap_index)
    assert cyc.vertices[:5] == (row[0], gaps[0], row[1], row[2], gaps[1])


def test_construct_on_dodecagon_type():
    t = by_name("[3.4.3.12:3.12^2]")
    p = ReprParams(t, 24, 1, 9)
    m, layout = generate(p)
    cyc = construct_hamiltonian(p, m, layout)
    assert len(cyc) == 32
    assert verify_hamiltonian(m, cyc)


def test_constructions_cross_checked_by_oracle():
    cases = [
        ("[3^6:3^2.4.3.4]", 9, 2, 5),
        ("[3.4^2.6:3.6.3.6]_2", 6, 2, 4),
        ("[3^4.6:3^2.6^2]", 6, 2, 3),
        ("[3^6:3^4.6]_1", 4, 3, 1),
        ("[3^3.4^2:3.4.6.4]", 4, 3, 3),
    ]
    for name, i, j, k in cases:
        t = by_name(name)
        p = ReprParams(t, i, j, k)
        m, layout = generate(p)
        cyc = construct_hamiltonian(p, m, layout)
        assert verify_hamiltonian(m, cyc)
        assert isinstance(brute_force_hamiltonian(m), Found)
