"""Command-line surface: generation, checking, connectivity, Hamiltonicity,
sweeps and SVG rendering.

Exit codes: 0 success, 2 admissibility rejection, 3 verification failure,
4 internal defect.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import catalog as cat
from . import connectivity as conn
from . import generators as gen
from . import hamiltonian as ham
from .core_map import (
    Cycle,
    SurfaceMap,
    curvature,
    euler_characteristic,
    face_sequence,
    classify_vertices,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_ADMISSIBILITY = 2
EXIT_VERIFICATION = 3
EXIT_DEFECT = 4


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def layout_to_json(layout: gen.Layout) -> str:
    doc = {
        "type": layout.type_name,
        "i": layout.i,
        "j": layout.j,
        "k": layout.k,
        "seam_shift": layout.seam_shift,
        "width": _frac(layout.width),
        "height": _frac(layout.height),
        "vertices": [
            {
                "id": v,
                "x": _frac(layout.coords[v][0]),
                "y": _frac(layout.coords[v][1]),
                "label": layout.labels[v],
                **(
                    {"row": layout.row_col[v][0], "col": layout.row_col[v][1]}
                    if v in layout.row_col
                    else {"gap": list(layout.gap_index[v])}
                ),
            }
            for v in sorted(layout.coords)
        ],
        "disp": {
            f"{u},{v}": [_frac(d[0]), _frac(d[1])]
            for (u, v), d in sorted(layout.disp.items())
        },
        "diagonals": sorted(map(list, layout.diagonals)),
    }
    return json.dumps(doc, sort_keys=True)


def layout_from_json(text: str) -> gen.Layout:
    doc = json.loads(text)
    coords = {}
    labels = {}
    row_col = {}
    gap_index = {}
    for rec in doc["vertices"]:
        v = rec["id"]
        coords[v] = (Fraction(rec["x"]), Fraction(rec["y"]))
        labels[v] = rec["label"]
        if "row" in rec:
            row_col[v] = (rec["row"], rec["col"])
        else:
            gap_index[v] = tuple(rec["gap"])
    disp = {}
    for key, (dx, dy) in doc["disp"].items():
        u, v = map(int, key.split(","))
        disp[(u, v)] = (Fraction(dx), Fraction(dy))
    return gen.Layout(
        type_name=doc["type"],
        i=doc["i"],
        j=doc["j"],
        k=doc["k"],
        seam_shift=doc["seam_shift"],
        width=Fraction(doc["width"]),
        height=Fraction(doc["height"]),
        coords=coords,
        labels=labels,
        row_col=row_col,
        gap_index=gap_index,
        disp=disp,
        diagonals=frozenset(tuple(e) for e in doc["diagonals"]),
    )


def cycle_to_json(c: Cycle) -> str:
    doc = {"vertices": list(c.vertices)}
    if c.winding is not None:
        doc["winding"] = list(c.winding)
    return json.dumps(doc, sort_keys=True)


def cycle_from_json(text: str) -> Cycle:
    doc = json.loads(text)
    w = tuple(doc["winding"]) if "winding" in doc else None
    return Cycle(vertices=tuple(doc["vertices"]), winding=w)


def _load_map(path: str) -> SurfaceMap:
    with open(path) as fh:
        return SurfaceMap.from_json(fh.read())


def cmd_catalog(args) -> int:
    rows = []
    for t in cat.catalog():
        rows.append(
            {
                "name": t.name,
                "key": t.slug,
                "class_a": str(t.fseq_a),
                "class_b": str(t.fseq_b),
                "min_degree": t.min_degree,
                "vertex_count": f"{t.num}*i*j/{t.den}" if t.den != 1 else "i*j",
            }
        )
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in rows:
            print(
                f"{r['name']:24} classes {r['class_a']} / {r['class_b']:12} "
                f"mindeg {r['min_degree']}  n = {r['vertex_count']}"
            )
    return EXIT_OK


def _params(args) -> gen.ReprParams:
    t = cat.by_name(args.type)
    return gen.ReprParams(t, args.i, args.j, args.k)


def cmd_gen(args) -> int:
    p = _params(args)
    try:
        m, layout = gen.generate(p)
    except gen.AdmissibilityError as exc:
        print(f"not admissible: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except gen.InternalGluingError as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    with open(args.out, "w") as fh:
        fh.write(m.to_json(labels=layout.labels))
    if args.layout:
        with open(args.layout, "w") as fh:
            fh.write(layout_to_json(layout))
    if args.json:
        print(json.dumps({"n": m.vertex_count, "edges": m.edge_count,
                          "faces": m.face_count}, sort_keys=True))
    else:
        print(f"wrote {args.out}: n={m.vertex_count} E={m.edge_count} F={m.face_count}")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        m = _load_map(args.infile)
    except Exception as exc:
        print(f"invalid map: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    chi = euler_characteristic(m)
    curv_ok = all(curvature(face_sequence(m, v)) == 0 for v in range(m.vertex_count))
    result = {"n": m.vertex_count, "euler": chi, "curvature_flat": curv_ok}
    ok = chi == 0 and curv_ok
    if args.type:
        t = cat.by_name(args.type)
        rep = cat.verify_dsem(m, t)
        result["dsem_ok"] = rep.ok
        result["class_sizes"] = rep.class_sizes
        result["links_constant"] = rep.links_constant
        result["links_constant_oriented"] = rep.links_constant_oriented
        if rep.issues:
            result["issues"] = rep.issues
        ok = ok and rep.ok
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        for key, val in sorted(result.items()):
            print(f"{key}: {val}")
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_kappa(args) -> int:
    m = _load_map(args.infile)
    kappa = conn.vertex_connectivity(m)
    mindeg = min(m.degree(v) for v in range(m.vertex_count))
    classes = classify_vertices(m)
    per_class = {str(fs): fs.degree() for fs in classes}
    result = {"kappa": kappa, "mindeg": mindeg, "class_degrees": per_class}
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(f"kappa = {kappa}")
        print(f"mindeg = {mindeg}")
        for fs, deg in sorted(per_class.items()):
            print(f"degree of class {fs}: {deg}")
    return EXIT_OK


def cmd_ham(args) -> int:
    p = _params(args)
    try:
        m, layout = gen.generate(p)
    except gen.AdmissibilityError as exc:
        print(f"not admissible: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    try:
        cyc = ham.construct_hamiltonian(p, m, layout)
    except ham.PatternFailure as exc:
        print(f"construction defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    cyc.winding = conn.winding(layout, cyc)
    oracle_note: Optional[str] = None
    if args.oracle:
        res = ham.brute_force_hamiltonian(m)
        if isinstance(res, ham.Found):
            oracle_note = "Found"
        elif isinstance(res, ham.NotFound):
            print("oracle contradicts construction: NotFound", file=sys.stderr)
            return EXIT_DEFECT
        else:
            oracle_note = f"BudgetExhausted({res.visited})"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(cycle_to_json(cyc))
    result = {
        "length": len(cyc),
        "verified": cyc.verified,
        "winding": list(cyc.winding),
    }
    if oracle_note:
        result["oracle"] = oracle_note
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(
            f"Hamiltonian cycle of length {len(cyc)}, winding {cyc.winding}"
            + (f", oracle: {oracle_note}" if oracle_note else "")
        )
    return EXIT_OK


def cmd_svg(args) -> int:
    m = _load_map(args.map)
    with open(args.layout) as fh:
        layout = layout_from_json(fh.read())
    cyc = None
    if args.cycle:
        with open(args.cycle) as fh:
            cyc = cycle_from_json(fh.read())
    try:
        doc = render_svg(m, layout, cyc)
    except Exception as exc:
        print(f"mismatched inputs: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    with open(args.out, "w") as fh:
        fh.write(doc)
    if not args.json:
        print(f"wrote {args.out}")
    return EXIT_OK


from dataclasses import dataclass, field as _field


@dataclass
class SweepReport:
    """Per-instance rows of every module's checks, plus summary counts."""

    rows: list = _field(default_factory=list)
    ok: bool = True

    @property
    def summary(self) -> dict:
        return {
            "instances": len(self.rows),
            "failures": sum(1 for r in self.rows if not r.get("ok")),
        }


def run_sweep(
    type_names: Optional[list[str]],
    max_vertices: int,
    oracle_cutoff: int = 0,
    kappa_mode: str = "min",
) -> SweepReport:
    """Run every module's checks per admissible instance; deterministic order."""
    types = cat.catalog()
    if type_names:
        wanted = set(type_names)
        types = [t for t in types if t.name in wanted or t.slug in wanted]
    rows = []
    all_ok = True
    for t in types:
        params = gen.enumerate_admissible(t, max_vertices)
        kappa_done = False
        for p in params:
            row = {"type": t.name, "i": p.i, "j": p.j, "k": p.k}
            try:
                m, layout = gen.generate(p)
            except Exception as exc:
                row["error"] = str(exc)
                rows.append(row)
                all_ok = False
                continue
            row["n"] = m.vertex_count
            row["n_ok"] = m.vertex_count == t.vertex_count(p.i, p.j)
            row["euler_ok"] = euler_characteristic(m) == 0
            row["curvature_ok"] = all(
                curvature(face_sequence(m, v)) == 0 for v in range(m.vertex_count)
            )
            rep = cat.verify_dsem(m, t)
            row["dsem_ok"] = rep.ok
            row["class_sizes"] = rep.class_sizes
            row["mindeg"] = min(m.degree(v) for v in range(m.vertex_count))
            if kappa_mode == "all" or (kappa_mode == "min" and not kappa_done):
                row["kappa"] = conn.vertex_connectivity(m)
                row["kappa_ok"] = row["kappa"] == t.min_degree
                kappa_done = True
            try:
                cyc = ham.construct_hamiltonian(p, m, layout)
                row["ham_constructed"] = True
                row["ham_verified"] = ham.verify_hamiltonian(m, cyc)
                row["winding"] = list(conn.winding(layout, cyc))
            except ham.PatternFailure as exc:
                row["ham_constructed"] = False
                row["ham_verified"] = False
                row["error"] = str(exc)
            q0 = Cycle(vertices=tuple(layout.row_cycle(0)))
            vc = conn.vertical_cutting_cycle(m, layout)
            row["row_winding"] = list(conn.winding(layout, q0))
            row["cut_winding"] = list(conn.winding(layout, vc))
            row["windings_ok"] = (
                row["row_winding"] != [0, 0] and row["cut_winding"] != [0, 0]
            )
            if oracle_cutoff and m.vertex_count <= oracle_cutoff:
                res = ham.brute_force_hamiltonian(m)
                row["oracle_agrees"] = isinstance(res, ham.Found)
            ok = (
                row["n_ok"]
                and row["euler_ok"]
                and row["curvature_ok"]
                and row["dsem_ok"]
                and row.get("kappa_ok", True)
                and row["ham_verified"]
                and row["windings_ok"]
                and row.get("oracle_agrees", True)
            )
            row["ok"] = ok
            all_ok = all_ok and ok
            rows.append(row)
    return SweepReport(rows=rows, ok=all_ok)


def cmd_sweep(args) -> int:
    report = run_sweep(
        args.types, args.max_vertices, args.oracle_cutoff, args.kappa
    )
    rows, all_ok = report.rows, report.ok
    if args.json:
        print(json.dumps({"rows": rows, "ok": all_ok}, sort_keys=True))
    else:
        for row in rows:
            status = "ok" if row.get("ok") else "FAIL"
            extra = "" if row.get("ok") else f"  <-- {row}"
            print(
                f"{status:4} {row['type']:24} i={row['i']:<3} j={row['j']:<3} "
                f"k={row['k']:<3} n={row.get('n', '?'):<3}{extra}"
            )
        print(f"summary: {report.summary}")
    if not all_ok:
        for row in rows:
            if not row.get("ok"):
                print(f"first failing row: {row}", file=sys.stderr)
                break
        return EXIT_VERIFICATION
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="dsemkit",
        description="Toolkit for two-class uniform maps on the torus.",
    )
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the twenty catalogued types")

    g = sub.add_parser("gen", help="generate an instance as map.json")
    g.add_argument("--type", required=True)
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--j", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out", required=True)
    g.add_argument("--layout")

    c = sub.add_parser("check", help="validate a map.json file")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--type")

    kp = sub.add_parser("kappa", help="vertex connectivity of a map.json")
    kp.add_argument("--in", dest="infile", required=True)

    h = sub.add_parser("ham", help="construct a Hamiltonian cycle")
    h.add_argument("--type", required=True)
    h.add_argument("--i", type=int, required=True)
    h.add_argument("--j", type=int, required=True)
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--oracle", action="store_true")
    h.add_argument("--out")

    s = sub.add_parser("svg", help="render the unrolled strip")
    s.add_argument("--map", required=True)
    s.add_argument("--layout", required=True)
    s.add_argument("--cycle")
    s.add_argument("--out", required=True)

    w = sub.add_parser("sweep", help="run all checks over admissible instances")
    w.add_argument("--types", nargs="*")
    w.add_argument("--max-vertices", type=int, default=48)
    w.add_argument("--oracle-cutoff", type=int, default=0)
    w.add_argument("--kappa", choices=["none", "min", "all"], default="min")

    args = ap.parse_args(argv)
    handlers = {
        "catalog": cmd_catalog,
        "gen": cmd_gen,
        "check": cmd_check,
        "kappa": cmd_kappa,
        "ham": cmd_ham,
        "svg": cmd_svg,
        "sweep": cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except gen.InternalGluingError as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
