"""Exhaustive counting of connected coordinate tuples, g(n, k).

The count for fixed (n, k) splits over interior s-vectors; one s-vector is
one work unit, dispatched either inline or over a process pool (CPython
threads would serialise on the interpreter lock, so "threads" here are
worker processes; results are summed, so the outcome is independent of
worker count and scheduling).

Within one s-vector, offset tuples are walked in lexicographic order with
a snapshot stack: the union-find state after applying zones 1..i is copied
once per prefix, so changing a late offset never replays early zones.  Arc
endpoint pairs per (zone, offset) are precomputed once per s-vector.

Optional pruning halves the work twice, and is off by default:
  * s-vectors are enumerated up to reversal, doubling the count of
    non-palindromic ones (tuple reversal is a connectivity-preserving
    bijection between the two orientations);
  * within an s-vector, offset tuples are paired with their range-mirrored
    images (also connectivity-preserving), one representative per pair is
    evaluated, and non-fixed pairs count twice.
Pruned and plain mode must agree; that equality is enforced by tests, not
assumed.

Counts are exact (Python integers are unbounded).  The optional cache is a
UTF-8 JSON-lines file, one object per record with keys n, k, g, mode,
engine_version, elapsed_ms; re-running a cached query returns the stored
count, and two stored records disagreeing on g for one (n, k) are a hard
error.  The cache writer is single-owner; worker processes never touch it.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .coords import SVector, a_range_size, enumerate_s_vectors

ENGINE_VERSION = "braidcensus-1"

MODE_PLAIN = "plain"
MODE_PRUNED = "pruned"


class CacheConflictError(RuntimeError):
    """Two cache records disagree on the count for one (n, k)."""


@dataclass(frozen=True)
class CensusRecord:
    n: int
    k: int
    g: int
    mode: str
    elapsed_ms: int
    engine_version: str = ENGINE_VERSION
    tuples_examined: int | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "g": self.g,
                "mode": self.mode,
                "engine_version": self.engine_version,
                "elapsed_ms": self.elapsed_ms,
            }
        )


def _zone_arc_pairs(bases: list[int], s: tuple[int, ...], i: int, a: int) -> list[int]:
    """Flat [u0, v0, u1, v1, ...] node pairs for zone i at offset a."""
    sl, sr = s[i - 1], s[i]
    bl, br = bases[i - 1] - 1, bases[i] - 1  # pre-shifted for 1-based j
    b = a + abs(sl - sr)
    out: list[int] = []
    for j in range(1, a + 1):
        out.append(bl + j)
        out.append(br + j)
    if sl > sr:
        for j in range(a + 1, b + 1):
            out.append(bl + j)
            out.append(bl + 2 * b + 1 - j)
        shift = 2 * (sl - sr)
        for j in range(a + 1, 2 * sr + 2):
            out.append(bl + j + shift)
            out.append(br + j)
    elif sr > sl:
        for j in range(a + 1, b + 1):
            out.append(br + j)
            out.append(br + 2 * b + 1 - j)
        shift = 2 * (sr - sl)
        for j in range(a + 1, 2 * sl + 2):
            out.append(bl + j)
            out.append(br + j + shift)
    else:
        for j in range(a + 1, 2 * sl + 2):
            out.append(bl + j)
            out.append(br + j)
    return out


def _zone_tables(sv: SVector) -> tuple[list[list[list[int]]], int]:
    s = sv.full()
    n = sv.n
    bases = [0]
    for i in range(n + 1):
        bases.append(bases[-1] + 2 * s[i] + 1)
    tables = [
        [
            _zone_arc_pairs(bases, s, i, a)
            for a in range(a_range_size(s[i - 1], s[i]))
        ]
        for i in range(1, n + 1)
    ]
    return tables, bases[n + 1]


def _count_plain(sv: SVector) -> tuple[int, int]:
    """(connected count, tuples examined) for one s-vector, all offsets."""
    tables, node_count = _zone_tables(sv)
    depth = len(tables)
    actual = 0
    examined = 0
    # explicit DFS stack of (zone index, union-find parents, component count)
    stack: list[tuple[int, list[int], int]] = [(0, list(range(node_count)), node_count)]
    while stack:
        zi, parent0, comp0 = stack.pop()
        last = zi == depth - 1
        for pairs in tables[zi]:
            parent = parent0.copy()
            comp = comp0
            idx = 0
            end = len(pairs)
            while idx < end:
                u = pairs[idx]
                v = pairs[idx + 1]
                idx += 2
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    if u < v:
                        parent[v] = u
                    else:
                        parent[u] = v
                    comp -= 1
            if last:
                examined += 1
                if comp == 1:
                    actual += 1
            else:
                stack.append((zi + 1, parent, comp))
    return actual, examined


def _count_mirror_pruned(sv: SVector) -> tuple[int, int]:
    """Like _count_plain, but evaluates one offset tuple per mirror pair.

    The mirror maps a_i to (range_i - 1) - a_i.  Walking offsets in
    lexicographic order, a prefix decides the comparison with its mirror
    at the first position where 2 a_i != range_i - 1: smaller means this
    tuple represents a pair (weight 2), larger means its mirror was
    already counted (skip the whole subtree).  Fully central tuples are
    their own mirror (weight 1).
    """
    tables, node_count = _zone_tables(sv)
    depth = len(tables)
    actual = 0
    examined = 0
    stack: list[tuple[int, list[int], int, bool]] = [
        (0, list(range(node_count)), node_count, True)
    ]
    while stack:
        zi, parent0, comp0, undecided0 = stack.pop()
        last = zi == depth - 1
        table = tables[zi]
        top = len(table) - 1
        for a, pairs in enumerate(table):
            if undecided0:
                if 2 * a > top:
                    break  # larger than its mirror: already counted
                undecided = 2 * a == top
            else:
                undecided = False
            parent = parent0.copy()
            comp = comp0
            idx = 0
            end = len(pairs)
            while idx < end:
                u = pairs[idx]
                v = pairs[idx + 1]
                idx += 2
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    if u < v:
                        parent[v] = u
                    else:
                        parent[u] = v
                    comp -= 1
            if last:
                examined += 1
                if comp == 1:
                    actual += 1 if undecided else 2
            else:
                stack.append((zi + 1, parent, comp, undecided))
    return actual, examined


def count_for_s_vector(sv: SVector) -> int:
    """Connected offset tuples over one s-vector (the parallel work unit)."""
    return _count_plain(sv)[0]


def _worker(args: tuple[int, tuple[int, ...], str, int]) -> tuple[int, int]:
    n, interior, mode, weight = args
    sv = SVector(n=n, s=interior)
    if mode == MODE_PRUNED:
        actual, examined = _count_mirror_pruned(sv)
    else:
        actual, examined = _count_plain(sv)
    return actual * weight, examined


def default_threads() -> int:
    """Worker count: CENSUS_THREADS when set, else the CPU count."""
    env = os.environ.get("CENSUS_THREADS")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError(f"CENSUS_THREADS must be >= 1, got {env!r}")
        return value
    return os.cpu_count() or 1


def _work_units(n: int, k: int, mode: str) -> Iterable[tuple[int, tuple[int, ...], str, int]]:
    if mode == MODE_PRUNED:
        for sv in enumerate_s_vectors(n, k):
            reverse = sv.s[::-1]
            if sv.s > reverse:
                continue  # its reversal is enumerated instead
            weight = 1 if sv.s == reverse else 2
            yield (n, sv.s, mode, weight)
    else:
        for sv in enumerate_s_vectors(n, k):
            yield (n, sv.s, mode, 1)


ProgressFn = Callable[[int, int, tuple[int, ...]], None]


def count_actual(
    n: int,
    k: int,
    *,
    threads: int | None = None,
    prune: bool = False,
    cache: "CensusCache | None" = None,
    progress: ProgressFn | None = None,
) -> CensusRecord:
    """Exact g(n, k), optionally parallel, pruned, and cached."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if cache is not None:
        hit = cache.lookup(n, k)
        if hit is not None:
            return hit
    mode = MODE_PRUNED if prune else MODE_PLAIN
    workers = threads if threads is not None else default_threads()
    if workers < 1:
        raise ValueError(f"thread count must be >= 1, got {workers}")
    units = list(_work_units(n, k, mode))
    started = time.perf_counter()
    total = 0
    examined = 0
    done = 0

    def consume(results: Iterable[tuple[int, int]]) -> None:
        nonlocal total, examined, done
        for unit, (part, part_examined) in zip(units, results):
            total += part
            examined += part_examined
            done += 1
            if progress is not None:
                progress(done, len(units), unit[1])

    if workers == 1 or len(units) <= 1:
        consume(map(_worker, units))
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(units))) as pool:
            chunk = max(1, len(units) // (8 * workers))
            consume(pool.map(_worker, units, chunksize=chunk))
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    record = CensusRecord(
        n=n,
        k=k,
        g=total,
        mode=mode,
        elapsed_ms=elapsed_ms,
        tuples_examined=examined,
    )
    if cache is not None:
        cache.add(record)
    return record


def count_table(
    n: int,
    kmax: int,
    *,
    threads: int | None = None,
    prune: bool = False,
    cache: "CensusCache | None" = None,
    progress: ProgressFn | None = None,
) -> list[CensusRecord]:
    """Census rows for k = 0 .. kmax."""
    return [
        count_actual(
            n, k, threads=threads, prune=prune, cache=cache, progress=progress
        )
        for k in range(kmax + 1)
    ]


def table_csv(records: list[CensusRecord]) -> str:
    lines = ["n,k,g"]
    lines += [f"{r.n},{r.k},{r.g}" for r in records]
    return "\n".join(lines) + "\n"


class CensusCache:
    """Append-only JSON-lines store of census records, keyed by (n, k).

    Loading tolerates unknown keys and blank lines; duplicate keys must
    agree on g (the first record is kept).  Partial tables are resumable:
    a lookup hit skips recomputation entirely.
    """

    def __init__(self, path: str):
        self.path = path
        self._records: dict[tuple[int, int], CensusRecord] = {}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        obj = json.loads(line)
                    except json.JSONDecodeError as exc:
                        raise CacheConflictError(
                            f"{path}:{lineno}: unreadable record: {exc}"
                        ) from exc
                    record = CensusRecord(
                        n=int(obj["n"]),
                        k=int(obj["k"]),
                        g=int(obj["g"]),
                        mode=str(obj.get("mode", MODE_PLAIN)),
                        elapsed_ms=int(obj.get("elapsed_ms", 0)),
                        engine_version=str(obj.get("engine_version", "unknown")),
                    )
                    self._store(record, source=f"{path}:{lineno}")

    def _store(self, record: CensusRecord, source: str) -> None:
        key = (record.n, record.k)
        existing = self._records.get(key)
        if existing is not None:
            if existing.g != record.g:
                raise CacheConflictError(
                    f"{source}: g({record.n},{record.k}) = {record.g} "
                    f"conflicts with stored value {existing.g}"
                )
            return
        self._records[key] = record

    def lookup(self, n: int, k: int) -> CensusRecord | None:
        return self._records.get((n, k))

    def add(self, record: CensusRecord) -> None:
        key = (record.n, record.k)
        existing = self._records.get(key)
        if existing is not None:
            if existing.g != record.g:
                raise CacheConflictError(
                    f"new result g({record.n},{record.k}) = {record.g} "
                    f"conflicts with cached value {existing.g}"
                )
            return
        self._records[key] = record
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(record.to_json() + "\n")

    def records(self) -> list[CensusRecord]:
        return sorted(self._records.values(), key=lambda r: (r.n, r.k))


def merge_caches(target_path: str, source_paths: list[str]) -> int:
    """Union several cache files into target; conflicts are hard errors.

    Returns the number of records in the merged store.  The target is
    rewritten in sorted order.
    """
    merged = CensusCache(target_path)
    for path in source_paths:
        for record in CensusCache(path).records():
            merged._store(record, source=path)
    with open(target_path, "w", encoding="utf-8") as fh:
        for record in merged.records():
            fh.write(record.to_json() + "\n")
    return len(merged.records())
