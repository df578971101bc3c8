"""Reproduction harness for the published GP(n,k) girth/cop-number tables.

Computes one row per parameter pair: girth, cop number, the satisfied
parameter relations, and the isomorphism-class representative.  Rows are
cached as CSV so repeated runs skip solving.  Cop numbers come from the
exact solver; theory-derived expectations (k=1 graphs are 2-cop-win, a
cop number of 2 needs girth 3 or 4, everything is pitfall-free) are
cross-checked against the solved values and any disagreement aborts the
run, since it would mean a solver bug.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import gp
from .graph import girth, has_pitfall
from .solver import MemoryBudgetError, cops_win

CACHE_ENV_VAR = "COPNUM_CACHE"
TOOL_VERSION = "gpcops 0.1.0"
SLOW_TIER_MIN_N = 37  # 3-cop solves above this need the slow tier


class TableValidationError(RuntimeError):
    """A computed row contradicts a theory-forced value."""


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int
    relation: str  # satisfied relations, ";"-joined; iso identity for non-min-k rows
    iso_min_k: int | None  # smaller class representative, when one exists
    girth: int
    cop_number: int | None  # None when the solve was refused
    source: str  # computed | cached | budget-exceeded
    solve_ms: float


def relation_string(n: int, k: int) -> tuple[str, int | None]:
    """(relation column, iso column) in the published table's conventions."""
    mk = gp.min_k(n, k)
    if mk != k:
        return gp.format_iso_relation(n, k, mk), mk
    rels = [
        gp.format_relation(t, n, k) for t in gp.FULL_EXCEPTION_TAGS if gp.tag_holds(t, n, k)
    ]
    return ";".join(rels), None


def theory_cop_bounds(n: int, k: int, computed_girth: int) -> tuple[int, int]:
    """(lo, hi) bounds forced by known results, used to validate solves.

    No GP graph has a pitfall, so 2 <= c; two cops can only trap when the
    girth is at most 4, so girth >= 5 forces 3 <= c; c <= 4 always, and
    graphs whose class representative has k in {1,2,3} satisfy c <= 3,
    with k = 1 pinned at exactly 2.
    """
    mk = gp.min_k(n, k)
    lo, hi = 2, 4
    if computed_girth >= 5:
        lo = 3
    if mk in (1, 2, 3):
        hi = 3
    if mk == 1:
        hi = 2
    return lo, hi


def solve_gp_row(args: tuple[int, int]) -> tuple[int, int | None, float, str]:
    """Worker: (n, k) -> (girth, cop number, ms, status).

    Cop number uses the GP-specific ladder: pitfall-freeness rules out 1,
    then exact 2- and 3-cop solves; both losing means 4 by the known upper
    bound for this family.
    """
    n, k = args
    g = gp.build_gp(n, k)
    gir = int(girth(g))
    assert not has_pitfall(g), f"GP({n},{k}) unexpectedly has a pitfall"
    ms = 0.0
    try:
        r2 = cops_win(g, 2)
        ms += r2.solve_ms
        if r2.cops_win_overall:
            return gir, 2, ms, "computed"
        r3 = cops_win(g, 3)
        ms += r3.solve_ms
        c = 3 if r3.cops_win_overall else 4
        return gir, c, ms, "computed"
    except MemoryBudgetError:
        return gir, None, ms, "budget-exceeded"


def _validate_row(n: int, k: int, gir: int, c: int | None) -> None:
    if c is None:
        return
    lo, hi = theory_cop_bounds(n, k, gir)
    if not (lo <= c <= hi):
        raise TableValidationError(
            f"GP({n},{k}): solved cop number {c} outside theory bounds [{lo},{hi}]"
        )


def full_table(
    max_n: int,
    *,
    threads: int = 1,
    cache: dict[tuple[int, int], TableRow] | None = None,
    slow: bool = False,
) -> list[TableRow]:
    """One row per valid (n,k) with n <= max_n, sorted by (n,k)."""
    if max_n >= SLOW_TIER_MIN_N and not slow:
        raise ValueError(f"max_n >= {SLOW_TIER_MIN_N} requires the slow tier (slow=True)")
    pairs = [(n, k) for n in range(5, max_n + 1) for k in range(1, (n - 1) // 2 + 1)]
    rows: dict[tuple[int, int], TableRow] = {}
    todo = []
    for n, k in pairs:
        hit = cache.get((n, k)) if cache else None
        if hit is not None and hit.cop_number is not None:
            rel, iso = relation_string(n, k)
            rows[(n, k)] = TableRow(n, k, rel, iso, hit.girth, hit.cop_number, "cached", 0.0)
        else:
            todo.append((n, k))

    if threads > 1 and todo:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(solve_gp_row, todo))
    else:
        results = [solve_gp_row(nk) for nk in todo]

    for (n, k), (gir, c, ms, status) in zip(todo, results):
        rel, iso = relation_string(n, k)
        rows[(n, k)] = TableRow(n, k, rel, iso, gir, c, status, ms)

    out = [rows[nk] for nk in pairs]
    for r in out:
        _validate_row(r.n, r.k, r.girth, r.cop_number)
    return out


def cop4_table(max_n: int, *, threads: int = 1, cache=None, slow: bool = False) -> list[TableRow]:
    """Rows with cop number exactly 4, sorted by (n,k)."""
    return [r for r in full_table(max_n, threads=threads, cache=cache, slow=slow) if r.cop_number == 4]


# ---------------------------------------------------------------------------
# CSV cache

CSV_FIELDS = ("n", "k", "relation", "iso_min_k", "girth", "cop_number", "source", "solve_ms")


def rows_to_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    buf.write(f"# {TOOL_VERSION}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow(
            [
                r.n,
                r.k,
                r.relation,
                "" if r.iso_min_k is None else r.iso_min_k,
                r.girth,
                "" if r.cop_number is None else r.cop_number,
                r.source,
                f"{r.solve_ms:.1f}",
            ]
        )
    return buf.getvalue()


def rows_from_csv(text: str) -> list[TableRow]:
    """Parse and validate cached rows; malformed input is rejected with its
    line number."""
    rows = []
    lines = [ln for ln in text.splitlines()]
    reader = csv.reader(ln for ln in lines if not ln.startswith("#"))
    header = next(reader, None)
    if header is None:
        raise ValueError("cache file has no header")
    if tuple(header) != CSV_FIELDS:
        raise ValueError(f"bad cache header: {header}")
    for lineno, rec in enumerate(reader, start=2):
        if not rec:
            continue
        try:
            n, k = int(rec[0]), int(rec[1])
            relation = rec[2]
            iso = int(rec[3]) if rec[3] else None
            gir = int(rec[4])
            c = int(rec[5]) if rec[5] else None
            source = rec[6]
            ms = float(rec[7])
        except (IndexError, ValueError) as exc:
            raise ValueError(f"cache line {lineno}: {exc}") from None
        gp.GpParams(n, k)
        if not (3 <= gir <= 8):
            raise ValueError(f"cache line {lineno}: girth {gir} out of range")
        if c is not None and not (2 <= c <= 4):
            raise ValueError(f"cache line {lineno}: cop number {c} out of range")
        rows.append(TableRow(n, k, relation, iso, gir, c, source, ms))
    return rows


def cache_store(rows: list[TableRow], path: str) -> None:
    keep = [r for r in rows if r.cop_number is not None]
    with open(path, "w") as fh:
        fh.write(rows_to_csv(keep))


def cache_load(path: str) -> dict[tuple[int, int], TableRow]:
    with open(path) as fh:
        return {(r.n, r.k): r for r in rows_from_csv(fh.read())}


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV_VAR)
