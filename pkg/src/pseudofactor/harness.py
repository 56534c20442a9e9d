"""Per-instance bound checking and corpus runs with deterministic reports.

A report row records the instance parameters, the guaranteed ceiling
max(0, alpha - floor(b*(delta-1)/2)) on small components, the exact optimum
and/or the constructive solver's value, and a status. An exact optimum above
the ceiling would falsify the guarantee, so it aborts the run loudly
(BOUND_VIOLATION); b = 3 rows are processed but carry no guarantee, and
graphs with isolated vertices are downgraded to informational rows.

Report bodies are byte-deterministic for a fixed manifest: rows appear in
manifest order regardless of worker count, and the timestamp lives only in a
header line that comparisons exclude.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from .errors import CapacityError
from .graph import Graph, independence_number, min_degree, to_edge_list
from .heuristic import solve
from .oracle import min_small_components_exact

REPORT_SCHEMA = 1

CSV_FIELDS = (
    "instance",
    "n",
    "b",
    "delta",
    "alpha",
    "theorem_bound",
    "oracle_optimum",
    "heuristic_value",
    "kl_regime",
    "isolated_vertices",
    "b3_no_guarantee",
    "status",
)

MODES = ("oracle", "heuristic", "both")


def theorem_bound(alpha: int, delta: int, b: int) -> int:
    """max(0, alpha - floor(b*(delta-1)/2)), in exact integer arithmetic."""
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    if delta < 1:
        raise ValueError(f"delta must be at least 1, got {delta}")
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    return max(0, alpha - (b * (delta - 1)) // 2)


@dataclass(frozen=True)
class BoundReport:
    instance: str
    n: int
    b: int
    delta: int
    alpha: int | None
    theorem_bound: int | None
    oracle_optimum: int | None
    heuristic_value: int | None
    kl_regime: bool
    isolated_vertices: bool
    b3_no_guarantee: bool
    status: str  # ok | BOUND_VIOLATION | capacity_skipped

    def to_dict(self) -> dict:
        return asdict(self)


def verify_instance(g: Graph, b: int, mode: str = "oracle", instance: str = "") -> BoundReport:
    """Fully populated report row for one (graph, b).

    Capacity refusals become status "capacity_skipped", never a silently
    truncated answer. Bound checking needs delta >= 1; isolated vertices set a
    flag and make the row informational.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if g.n < 1:
        raise ValueError("cannot verify an empty graph")
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")

    delta = min_degree(g)
    isolated = delta == 0
    capacity_hit = False

    alpha: int | None = None
    try:
        alpha = independence_number(g)
    except CapacityError:
        capacity_hit = True

    bound: int | None = None
    kl = False
    if alpha is not None and delta >= 1:
        bound = theorem_bound(alpha, delta, b)
        kl = 2 * alpha <= b * (delta - 1)

    oracle_opt: int | None = None
    if mode in ("oracle", "both") and not capacity_hit:
        try:
            oracle_opt = min_small_components_exact(g, b).optimum
        except CapacityError:
            capacity_hit = True

    heur: int | None = None
    if mode in ("heuristic", "both") and not capacity_hit:
        try:
            heur = solve(g, b).small_count
        except CapacityError:
            capacity_hit = True

    if (
        oracle_opt is not None
        and bound is not None
        and b != 3
        and oracle_opt > bound
    ):
        status = "BOUND_VIOLATION"
    elif capacity_hit:
        status = "capacity_skipped"
    else:
        status = "ok"

    return BoundReport(
        instance=instance,
        n=g.n,
        b=b,
        delta=delta,
        alpha=alpha,
        theorem_bound=bound,
        oracle_optimum=oracle_opt,
        heuristic_value=heur,
        kl_regime=kl,
        isolated_vertices=isolated,
        b3_no_guarantee=b == 3,
        status=status,
    )


# ---------------------------------------------------------------------------
# corpus runs


@dataclass(frozen=True)
class CorpusRun:
    reports: tuple[BoundReport, ...]
    summary: dict


def _verify_task(task) -> BoundReport:
    instance, g, b, mode = task
    return verify_instance(g, b, mode=mode, instance=instance)


def summarize(reports) -> dict:
    reports = list(reports)
    guaranteed = [
        r
        for r in reports
        if r.theorem_bound is not None and r.oracle_optimum is not None and r.b != 3
    ]
    heur_rows = [
        r
        for r in reports
        if r.theorem_bound is not None and r.heuristic_value is not None and r.b != 3
    ]
    kl_rows = [r for r in reports if r.kl_regime and r.oracle_optimum is not None and r.b >= 4]
    attained = sum(1 for r in heur_rows if r.heuristic_value <= r.theorem_bound)
    return {
        "rows": len(reports),
        "violations": sum(1 for r in reports if r.status == "BOUND_VIOLATION"),
        "capacity_skipped": sum(1 for r in reports if r.status == "capacity_skipped"),
        "bound_checked": len(guaranteed),
        "tight": sum(1 for r in guaranteed if r.oracle_optimum == r.theorem_bound),
        "kl_rows": len(kl_rows),
        "kl_nonfactor": sum(1 for r in kl_rows if r.oracle_optimum != 0),
        "heuristic_rows": len(heur_rows),
        "heuristic_attained": attained,
        "heuristic_attainment": f"{attained}/{len(heur_rows)}",
    }


def run_corpus(items, b_values, mode: str = "oracle", jobs: int = 1) -> CorpusRun:
    """One report per (instance, b), in manifest order whatever the worker
    count; plus the aggregate summary.

    ``items`` is a sequence of (instance_id, Graph). Workers share nothing
    mutable, so parallel and serial runs produce identical reports.
    """
    tasks = [(instance, g, b, mode) for instance, g in items for b in b_values]
    if jobs <= 1 or len(tasks) <= 1:
        reports = [_verify_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=1))
    return CorpusRun(tuple(reports), summarize(reports))


def write_reproducers(run: CorpusRun, items, out_dir) -> list[str]:
    """Edge-list reproducer files (graph + b) for every violating row."""
    from pathlib import Path

    graphs = dict(items)
    out = Path(out_dir)
    written = []
    for idx, report in enumerate(run.reports):
        if report.status != "BOUND_VIOLATION":
            continue
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"violation_{idx:04d}.edges"
        text = to_edge_list(
            graphs[report.instance],
            comments=(
                f"instance: {report.instance}",
                f"b: {report.b}",
                f"oracle_optimum: {report.oracle_optimum}",
                f"theorem_bound: {report.theorem_bound}",
            ),
        )
        path.write_text(text, encoding="utf-8")
        written.append(str(path))
    return written


# ---------------------------------------------------------------------------
# report files


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def jsonl_body_lines(run: CorpusRun) -> list[str]:
    """Deterministic report body: one JSON object per row plus the summary."""
    lines = [
        json.dumps(r.to_dict(), sort_keys=True, separators=(",", ":"))
        for r in run.reports
    ]
    lines.append(json.dumps({"summary": run.summary}, sort_keys=True, separators=(",", ":")))
    return lines


def write_jsonl(path, run: CorpusRun, generated_at: str | None = None) -> None:
    """Header line (schema + timestamp, excluded from comparisons) followed by
    the deterministic body."""
    header = json.dumps(
        {"schema": REPORT_SCHEMA, "generated_at": generated_at or _timestamp()},
        sort_keys=True,
        separators=(",", ":"),
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for line in jsonl_body_lines(run):
            fh.write(line + "\n")


def write_csv(path, run: CorpusRun, generated_at: str | None = None) -> None:
    """Same fields as the JSONL rows; schema and timestamp in a '#' header."""
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# schema={REPORT_SCHEMA} generated_at={generated_at or _timestamp()}\n")
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for report in run.reports:
            row = report.to_dict()
            writer.writerow({k: ("" if row[k] is None else row[k]) for k in CSV_FIELDS})
