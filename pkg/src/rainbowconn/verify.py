"""Verification drivers: enumerate a graph class, solve rc exactly for every
member, compare against the claimed classification, and emit a deterministic
report.

Reports are byte-identical across runs and across worker counts: records are
sorted by (order, canonical code), colors are normalized, and wall-clock
timing is deliberately kept out of the rendered text (it is carried on the
report object for console display only).

The diameter-2 and diameter-3 classes are checked over both 2-connected and
cut-vertex graphs; each record carries a cut-vertex flag so that any mismatch
with the claimed classification is precisely attributable to a subclass.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass

from .enumeration import enumerate_bridgeless_outerplanar
from .families import cycle, fan
from .graphs import Graph, GraphError, block_decomposition, canonical_code, diameter
from .rainbow import formula_rc_cycle, formula_rc_fan, rc_exact

MAX_VERIFY_ORDER = 10
MAX_FORMULAS_ORDER = 12

DIAM2 = "diam2"
DIAM3 = "diam3"
FORMULAS = "formulas"
THEOREMS = (DIAM2, DIAM3, FORMULAS)


@dataclass(frozen=True)
class GraphRecord:
    order: int
    size: int
    diam: int
    has_cut_vertex: bool
    rc: int
    expected: str
    ok: bool
    code_hex: str
    witness: str
    edges_text: str


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    max_n: int
    records: tuple[GraphRecord, ...]
    counterexamples: tuple[GraphRecord, ...]
    verdict: bool
    timing: float
    extras: tuple[tuple[str, str], ...] = ()


def _witness_text(edges: tuple[tuple[int, int], ...], colors: tuple[int, ...]) -> str:
    return ",".join(f"{u}-{v}:{c}" for (u, v), c in zip(edges, colors))


def _edges_text(g: Graph) -> str:
    return " ".join(f"{u}-{v}" for u, v in g.edges)


def _solve(g: Graph) -> tuple[int, tuple[int, ...]]:
    res = rc_exact(g)
    return res.rc, res.witness.colors


def _solve_all(graphs: list[Graph], jobs: int) -> list[tuple[int, tuple[int, ...]]]:
    if jobs <= 1 or len(graphs) < 2:
        return [_solve(g) for g in graphs]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(_solve, graphs)


def _build_record(
    g: Graph, rc: int, colors: tuple[int, ...], expected: str, ok: bool
) -> GraphRecord:
    return GraphRecord(
        order=g.n,
        size=g.m,
        diam=int(diameter(g)),
        has_cut_vertex=bool(block_decomposition(g).cut_vertices),
        rc=rc,
        expected=expected,
        ok=ok,
        code_hex=canonical_code(g).hex(),
        witness=_witness_text(g.edges, colors),
        edges_text=_edges_text(g),
    )


def _collect_class(max_n: int, diam: int) -> list[Graph]:
    graphs: list[Graph] = []
    for n in range(3, max_n + 1):
        for g in enumerate_bridgeless_outerplanar(n):
            if diameter(g) == diam:
                graphs.append(g)
    graphs.sort(key=lambda g: (g.n, canonical_code(g).data))
    return graphs


def _check_cap(theorem: str, max_n: int) -> None:
    cap = MAX_FORMULAS_ORDER if theorem == FORMULAS else MAX_VERIFY_ORDER
    if max_n > cap:
        raise GraphError(
            f"verify {theorem} is capped at max-n <= {cap}, got {max_n}"
        )
    if max_n < 3:
        raise GraphError(f"verify needs max-n >= 3, got {max_n}")


def verify_diam2(max_n: int, jobs: int = 1) -> VerificationReport:
    """Diameter-2 classification: rc = 3 exactly for the classes isomorphic
    to C5 or to a fan with path length >= 7, rc = 2 for everything else."""
    _check_cap(DIAM2, max_n)
    start = time.perf_counter()
    graphs = _collect_class(max_n, 2)
    rc3_codes = set()
    if max_n >= 5:
        rc3_codes.add(canonical_code(cycle(5)).data)
    for k in range(7, max_n):
        rc3_codes.add(canonical_code(fan(k)).data)
    solved = _solve_all(graphs, jobs)
    records = []
    for g, (rc, colors) in zip(graphs, solved):
        expected = 3 if canonical_code(g).data in rc3_codes else 2
        records.append(_build_record(g, rc, colors, str(expected), rc == expected))
    counterexamples = tuple(r for r in records if not r.ok)
    return VerificationReport(
        theorem=DIAM2,
        max_n=max_n,
        records=tuple(records),
        counterexamples=counterexamples,
        verdict=not counterexamples,
        timing=time.perf_counter() - start,
        extras=(
            ("class", "bridgeless outerplanar, diameter 2"),
            ("graphs-checked", str(len(records))),
        ),
    )


def verify_diam3(max_n: int, jobs: int = 1) -> VerificationReport:
    """Diameter-3 bound: rc <= 4 for every graph in the class, plus the
    smallest-order witness showing the bound is attained."""
    _check_cap(DIAM3, max_n)
    start = time.perf_counter()
    graphs = _collect_class(max_n, 3)
    solved = _solve_all(graphs, jobs)
    records = []
    for g, (rc, colors) in zip(graphs, solved):
        records.append(_build_record(g, rc, colors, "<=4", rc <= 4))
    counterexamples = tuple(r for r in records if not r.ok)
    sharp = [r for r in records if r.rc == 4]
    extras = [
        ("class", "bridgeless outerplanar, diameter 3"),
        ("graphs-checked", str(len(records))),
    ]
    if sharp:
        extras.append(("sharpness-order", str(sharp[0].order)))
        extras.append(("sharpness-witness-edges", sharp[0].edges_text))
        extras.append(("sharpness-witness-coloring", sharp[0].witness))
    else:
        extras.append(("sharpness-order", "none-found"))
    return VerificationReport(
        theorem=DIAM3,
        max_n=max_n,
        records=tuple(records),
        counterexamples=counterexamples,
        verdict=not counterexamples,
        timing=time.perf_counter() - start,
        extras=tuple(extras),
    )


def verify_formulas(max_n: int, jobs: int = 1) -> VerificationReport:
    """Closed-form cross-check: solver rc against the cycle and fan formulas."""
    _check_cap(FORMULAS, max_n)
    start = time.perf_counter()
    cases: list[tuple[Graph, int]] = []
    for n in range(4, max_n + 1):
        cases.append((cycle(n), formula_rc_cycle(n)))
    for k in range(2, max_n):  # fan(k) has k+1 vertices
        cases.append((fan(k), formula_rc_fan(k)))
    graphs = [g for g, _ in cases]
    solved = _solve_all(graphs, jobs)
    records = []
    for (g, expected), (rc, colors) in zip(cases, solved):
        records.append(_build_record(g, rc, colors, str(expected), rc == expected))
    records.sort(key=lambda r: (r.order, r.code_hex))
    counterexamples = tuple(r for r in records if not r.ok)
    return VerificationReport(
        theorem=FORMULAS,
        max_n=max_n,
        records=tuple(records),
        counterexamples=counterexamples,
        verdict=not counterexamples,
        timing=time.perf_counter() - start,
        extras=(
            ("families", "cycles 4..max-n, fans 2..max-n-1"),
            ("graphs-checked", str(len(records))),
        ),
    )


def run_verify(theorem: str, max_n: int, jobs: int = 1) -> VerificationReport:
    if theorem == DIAM2:
        return verify_diam2(max_n, jobs)
    if theorem == DIAM3:
        return verify_diam3(max_n, jobs)
    if theorem == FORMULAS:
        return verify_formulas(max_n, jobs)
    raise GraphError(f"unknown theorem {theorem!r}")


def _record_line(r: GraphRecord) -> str:
    return (
        f"{r.order:>2} {r.size:>2} {r.diam:>2} {int(r.has_cut_vertex)} "
        f"{r.rc:>2} {r.expected:>4} {'ok' if r.ok else 'VIOLATION':>9} "
        f"{r.code_hex} {r.witness}"
    )


def render_report(rep: VerificationReport) -> str:
    """Deterministic text form; wall-clock timing is intentionally omitted
    so identical runs produce byte-identical files."""
    lines = [
        "rainbowconn-report: 1",
        f"theorem: {rep.theorem}",
        f"max-n: {rep.max_n}",
    ]
    for key, value in rep.extras:
        lines.append(f"{key}: {value}")
    lines.append(f"verdict: {'pass' if rep.verdict else 'fail'}")
    lines.append(f"counterexamples: {len(rep.counterexamples)}")
    lines.append(f"records: {len(rep.records)}")
    lines.append("columns: order size diam cut rc expected status code witness")
    for r in rep.records:
        lines.append(_record_line(r))
    if rep.counterexamples:
        lines.append("counterexample-records:")
        for r in rep.counterexamples:
            lines.append(_record_line(r))
            lines.append(f"  edges: {r.edges_text}")
    return "\n".join(lines) + "\n"
