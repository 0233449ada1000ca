"""Acceptance suite: each test is one criterion, at its stated tolerance.

Every test prints one `ACCEPTANCE n: PASS` line (visible with -s or in the
captured output of a failing run); all checks are exact.
"""

import time

import pytest

from dsemkit.catalog import catalog, by_name, verify_dsem
from dsemkit.connectivity import (
    vertex_connectivity,
    vertical_cutting_cycle,
    winding,
)
from dsemkit.core_map import Cycle, curvature, euler_characteristic, face_sequence
from dsemkit.generators import (
    AdmissibilityError,
    ReprParams,
    admissible,
    enumerate_admissible,
    generate,
)
from dsemkit.hamiltonian import (
    Found,
    NotFound,
    brute_force_hamiltonian,
    construct_hamiltonian,
    quad_reduction,
    verify_hamiltonian,
    QUAD_BACKBONE,
)

MAX_VERTICES = 48
ORACLE_CUTOFF = 42
ORACLE_BUDGET = 10**8


@pytest.fixture(scope="module")
def sweep():
    """All admissible instances with at most 48 vertices, generated once."""
    out = []
    for t in catalog():
        for p in enumerate_admissible(t, MAX_VERTICES):
            m, layout = generate(p)
            out.append((t, p, m, layout))
    return out


def test_acceptance_1_structural_sweep(sweep):
    t0 = time.time()
    assert len(sweep) > 200, "expected several hundred instances"
    for t, p, m, layout in sweep:
        # every edge on exactly two faces is enforced by the builder; check
        # the remaining exact invariants here
        assert m.vertex_count == t.vertex_count(p.i, p.j), str(p)
        assert euler_characteristic(m) == 0, str(p)
        for v in range(m.vertex_count):
            assert curvature(face_sequence(m, v)) == 0, str(p)
    elapsed = time.time() - t0
    assert elapsed < 10, f"structural sweep took {elapsed:.1f}s"
    print(
        f"\nACCEPTANCE 1: PASS structural sweep over {len(sweep)} instances "
        f"({elapsed:.1f}s)"
    )


def test_acceptance_2_dsem_verification(sweep):
    for t, p, m, layout in sweep:
        rep = verify_dsem(m, t)
        assert rep.ok, f"{p}: {rep.issues}"
        assert set(rep.class_sizes.values()) and sum(rep.class_sizes.values()) == m.vertex_count
    print(f"\nACCEPTANCE 2: PASS two-class verification on {len(sweep)} instances")


def test_acceptance_3_hamiltonicity(sweep):
    t0 = time.time()
    oracle_count = 0
    for t, p, m, layout in sweep:
        cyc = construct_hamiltonian(p, m, layout)
        assert cyc.verified and verify_hamiltonian(m, cyc), str(p)
        if m.vertex_count <= ORACLE_CUTOFF:
            res = brute_force_hamiltonian(m, node_budget=ORACLE_BUDGET)
            assert isinstance(res, Found), f"{p}: oracle returned {res!r}"
            oracle_count += 1
    elapsed = time.time() - t0
    assert elapsed < 300, f"hamiltonicity sweep took {elapsed:.1f}s"
    print(
        f"\nACCEPTANCE 3: PASS constructed cycles on {len(sweep)} instances, "
        f"oracle confirmed {oracle_count} (<= {ORACLE_CUTOFF} vertices) "
        f"({elapsed:.1f}s)"
    )


def test_acceptance_4_connectivity():
    t0 = time.time()
    exceptional = {"[3.4.3.12:3.12^2]", "[3.4.6.4:4.6.12]"}
    for t in catalog():
        p = enumerate_admissible(t, 72)[0]
        m, _ = generate(p)
        kappa = vertex_connectivity(m)
        assert kappa == t.min_degree, f"{t.name}: kappa={kappa} mindeg={t.min_degree}"
        if t.name in exceptional:
            assert kappa == 3, t.name
        else:
            assert kappa >= 4, t.name
    elapsed = time.time() - t0
    assert elapsed < 60, f"connectivity checks took {elapsed:.1f}s"
    print(
        f"\nACCEPTANCE 4: PASS kappa = mindeg on the minimal instance of all "
        f"20 types ({elapsed:.1f}s)"
    )


def test_acceptance_5_admissibility_boundaries():
    def ok(name, i, j, k):
        admissible(ReprParams(by_name(name), i, j, k))

    def rejected(name, i, j, k, clause):
        with pytest.raises(AdmissibilityError) as exc:
            admissible(ReprParams(by_name(name), i, j, k))
        assert exc.value.clause == clause, (name, i, j, k, exc.value.clause)

    # just-inside / just-outside pairs, one per published condition family
    ok("[3^6:3^3.4^2]_1", 3, 3, 0);        rejected("[3^6:3^3.4^2]_1", 2, 3, 0, "BadI")
    ok("[3^6:3^3.4^2]_2", 3, 4, 2);        rejected("[3^6:3^3.4^2]_2", 3, 3, 0, "BadJ")
    ok("[3^3.4^2:4^4]_1", 3, 3, 2);        rejected("[3^3.4^2:4^4]_1", 3, 3, 3, "BadK")
    ok("[3^3.4^2:3^2.4.3.4]_1", 5, 2, 3);  rejected("[3^3.4^2:3^2.4.3.4]_1", 5, 2, 5, "BadK")
    ok("[3^3.4^2:3^2.4.3.4]_1", 5, 4, 0);  rejected("[3^3.4^2:3^2.4.3.4]_1", 5, 4, 3, "BadK")
    ok("[3^3.4^2:3^2.4.3.4]_2", 8, 2, 4);  rejected("[3^3.4^2:3^2.4.3.4]_2", 8, 2, 0, "BadK")
    ok("[3^3.4^2:3^2.4.3.4]_2", 4, 4, 0);  rejected("[3^3.4^2:3^2.4.3.4]_2", 4, 2, 0, "TooSmall")
    ok("[3^6:3^2.4.3.4]", 9, 2, 5);        rejected("[3^6:3^2.4.3.4]", 9, 2, 2, "BadK")
    ok("[3^6:3^2.4.3.4]", 6, 4, 0);        rejected("[3^6:3^2.4.3.4]", 6, 2, 5, "TooSmall")
    # j=2 requires 4 <= k <= i-2
    ok("[3.4^2.6:3.6.3.6]_1", 8, 2, 4);    rejected("[3.4^2.6:3.6.3.6]_1", 8, 2, 3, "BadK")
    ok("[3.4^2.6:3.6.3.6]_1", 8, 2, 6);    rejected("[3.4^2.6:3.6.3.6]_1", 8, 2, 7, "BadK")
    ok("[3.4^2.6:3.6.3.6]_2", 6, 2, 4);    rejected("[3.4^2.6:3.6.3.6]_2", 4, 2, 0, "TooSmall")
    ok("[3^2.6^2:3.6.3.6]", 10, 1, 5);     rejected("[3^2.6^2:3.6.3.6]", 8, 1, 5, "TooSmall")
    ok("[3^2.6^2:3.6.3.6]", 12, 1, 5);     rejected("[3^2.6^2:3.6.3.6]", 12, 1, 7, "BadK")
    ok("[3^6:3^2.6^2]", 9, 1, 6);          rejected("[3^6:3^2.6^2]", 9, 1, 3, "BadK")
    ok("[3^6:3^2.6^2]", 6, 2, 0);          rejected("[3^6:3^2.6^2]", 3, 2, 0, "TooSmall")
    ok("[3^4.6:3^2.6^2]", 6, 2, 3);        rejected("[3^4.6:3^2.6^2]", 6, 2, 2, "BadK")
    ok("[3^4.6:3^2.6^2]", 6, 4, 1);        rejected("[3^4.6:3^2.6^2]", 4, 2, 3, "TooSmall")
    ok("[3^2.4.3.4:3.4.6.4]", 4, 2, 0);    rejected("[3^2.4.3.4:3.4.6.4]", 4, 2, 1, "BadK")
    ok("[3^6:3^4.6]_1", 4, 3, 1);          rejected("[3^6:3^4.6]_1", 4, 3, 0, "BadK")
    ok("[3^6:3^4.6]_2", 9, 2, 5);          rejected("[3^6:3^4.6]_2", 6, 2, 5, "TooSmall")
    ok("[3^6:3^2.4.12]", 15, 2, 10);       rejected("[3^6:3^2.4.12]", 10, 2, 5, "TooSmall")
    ok("[3.4.3.12:3.12^2]", 24, 1, 9);     rejected("[3.4.3.12:3.12^2]", 18, 1, 9, "TooSmall")
    ok("[3.4.3.12:3.12^2]", 24, 1, 15);    rejected("[3.4.3.12:3.12^2]", 24, 1, 3, "BadK")
    ok("[3.4.6.4:4.6.12]", 12, 2, 8);      rejected("[3.4.6.4:4.6.12]", 6, 2, 2, "TooSmall")
    ok("[3.4^2.6:3.4.6.4]", 5, 2, 0);      rejected("[3.4^2.6:3.4.6.4]", 5, 2, 1, "BadK")
    ok("[3^3.4^2:3.4.6.4]", 4, 3, 3);      rejected("[3^3.4^2:3.4.6.4]", 4, 3, 1, "BadK")
    rejected("[3^3.4^2:3.4.6.4]", 4, 2, 3, "BadJ")
    print("\nACCEPTANCE 5: PASS admissibility boundary cases for all 20 types")


def test_acceptance_6_oracle_sanity():
    from test_hamiltonian import K4, PETERSEN

    assert isinstance(brute_force_hamiltonian(PETERSEN), NotFound)
    assert isinstance(brute_force_hamiltonian(K4), Found)
    checked = 0
    for name in sorted(QUAD_BACKBONE):
        t = by_name(name)
        p = enumerate_admissible(t, MAX_VERTICES)[0]
        m, layout = generate(p)
        red = quad_reduction(m, layout)
        assert all(red.degree(v) == 4 for v in range(red.vertex_count)), name
        assert all(len(f) == 4 for f in red.faces), name
        checked += 1
    print(
        f"\nACCEPTANCE 6: PASS oracle sanity and {checked} quad reductions "
        "(degree 4, all squares)"
    )


def test_acceptance_7_noncontractible_cutting_cycles(sweep):
    for t, p, m, layout in sweep:
        for s in range(p.j):
            q = Cycle(vertices=tuple(layout.row_cycle(s)))
            assert winding(layout, q) != (0, 0), f"{p} row {s}"
        vc = vertical_cutting_cycle(m, layout)
        assert winding(layout, vc) != (0, 0), f"{p} vertical cut"
    print(
        f"\nACCEPTANCE 7: PASS non-contractible cutting cycles on "
        f"{len(sweep)} instances"
    )
