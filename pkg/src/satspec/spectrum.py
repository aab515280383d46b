"""Exhaustive saturation spectra with resumable, verifiable records.

A scan walks the augmentation tree of level n one parent at a time.  Work
units are contiguous runs of parent indices; their saturated graphs come
back as canonical graph6 strings and are merged in sorted order, so the
record does not depend on how many workers ran.  A checkpoint after each
completed unit stores the next parent index and the partial tally.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .blocks import blocks
from .canon import canonical_graph, search
from .generate import ENVELOPE, EnvelopeError, children, parents
from .graph import SimpleGraph
from .graph6 import emit_graph6, parse_graph6
from .saturation import saturation_status

log = logging.getLogger(__name__)

CACHE_ENV = "SATSPEC_CACHE"
DEFAULT_CACHE = "./.satspec-cache"
MAX_K = 3


class RecordError(ValueError):
    """A record or checkpoint failed to load: wrong version, corrupt, or failed audit."""


class ScanInterrupted(RuntimeError):
    """Raised when a scan stops early on request; its checkpoint is on disk."""


@dataclass
class SpectrumRecord:
    n: int
    k: int
    es: list[int]
    sat: int | None
    ex: int | None
    count_by_size: dict[int, int]
    witnesses: dict[int, str]
    total_graphs_scanned: int
    elapsed: float = 0.0
    toolkit_version: str = __version__

    def to_json(self) -> dict:
        d = asdict(self)
        d["count_by_size"] = {str(m): c for m, c in sorted(self.count_by_size.items())}
        d["witnesses"] = {str(m): w for m, w in sorted(self.witnesses.items())}
        return d

    @classmethod
    def from_json(cls, data: dict) -> "SpectrumRecord":
        try:
            return cls(
                n=int(data["n"]),
                k=int(data["k"]),
                es=[int(m) for m in data["es"]],
                sat=None if data["sat"] is None else int(data["sat"]),
                ex=None if data["ex"] is None else int(data["ex"]),
                count_by_size={int(m): int(c) for m, c in data["count_by_size"].items()},
                witnesses={int(m): str(w) for m, w in data["witnesses"].items()},
                total_graphs_scanned=int(data["total_graphs_scanned"]),
                elapsed=float(data["elapsed"]),
                toolkit_version=str(data["toolkit_version"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordError(f"malformed spectrum record: {exc}") from exc

    def dumps(self, timing: bool = True) -> str:
        d = self.to_json()
        if not timing:
            d.pop("elapsed")
        return json.dumps(d, indent=2) + "\n"


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE))


def _check_envelope(n: int, k: int) -> None:
    if not 1 <= n <= ENVELOPE:
        raise EnvelopeError(f"n={n} outside the scan envelope [1, {ENVELOPE}]")
    if not 1 <= k <= MAX_K:
        raise EnvelopeError(f"k={k} outside the scan envelope [1, {MAX_K}]")


# scanning -------------------------------------------------------------------


def _passes_prefilter(g: SimpleGraph, k: int) -> bool:
    # Saturated graphs are connected for every k; for k = 2 they also have
    # exactly one non-trivial block.
    if not g.is_connected():
        return False
    if k == 2:
        return sum(1 for b in blocks(g).blocks if len(b) > 2) == 1
    return True


def _scan_unit(n: int, k: int, start: int, stop: int, pruned: bool) -> tuple[int, list[str]]:
    level = parents(n)
    scanned = 0
    found = []
    for idx in range(start, stop):
        parent = level[idx]
        for rows in children(parent, search(parent, n - 1).generators):
            scanned += 1
            g = SimpleGraph(n, rows)
            if pruned and not _passes_prefilter(g, k):
                continue
            if saturation_status(g, k).saturated:
                found.append(emit_graph6(canonical_graph(g)))
    return scanned, found


def _units(total: int, size: int, start: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, total)) for a in range(start, total, size)]


def _record_from(n: int, k: int, scanned: int, saturated: Iterable[str], elapsed: float) -> SpectrumRecord:
    by_size: dict[int, list[str]] = {}
    for s in saturated:
        by_size.setdefault(parse_graph6(s).m, []).append(s)
    es = sorted(by_size)
    return SpectrumRecord(
        n=n,
        k=k,
        es=es,
        sat=es[0] if es else None,
        ex=es[-1] if es else None,
        count_by_size={m: len(v) for m, v in sorted(by_size.items())},
        witnesses={m: min(v) for m, v in sorted(by_size.items())},
        total_graphs_scanned=scanned,
        elapsed=round(elapsed, 3),
    )


def _paths(cache_dir: Path, n: int, k: int, pruned: bool) -> tuple[Path, Path, Path]:
    stem = f"n{n}_k{k}" + ("_pruned" if pruned else "")
    return cache_dir / f"{stem}.json", cache_dir / f"{stem}.g6", cache_dir / f"{stem}.checkpoint.json"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def _load_checkpoint(path: Path, n: int, k: int, pruned: bool) -> dict | None:
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data["toolkit_version"] != __version__:
            raise RecordError(f"checkpoint version {data['toolkit_version']} != {__version__}")
        if (data["n"], data["k"], data["pruned"]) != (n, k, pruned):
            raise RecordError("checkpoint belongs to a different scan")
        int(data["next_parent"]), int(data["scanned"]), list(data["saturated"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise RecordError(f"corrupt checkpoint {path}: {exc}") from exc
    return data


def saturation_spectrum(
    n: int,
    k: int,
    *,
    jobs: int = 1,
    cache_dir: Path | str | None = None,
    use_cache: bool = True,
    pruned: bool = False,
    unit_size: int = 200,
    stop_after: int | None = None,
) -> SpectrumRecord:
    """Exact spectrum of n-vertex kC>=3-saturated graphs.

    With ``use_cache`` a finished record is reused (after audit) and an
    unfinished scan resumes from its checkpoint.  ``stop_after`` ends the
    scan after that many work units with :class:`ScanInterrupted`.
    """
    return _run(n, k, jobs, cache_dir, use_cache, pruned, unit_size, stop_after)[0]


def saturated_graphs(n: int, k: int, *, jobs: int = 1, cache_dir: Path | str | None = None,
                     use_cache: bool = True) -> list[SimpleGraph]:
    """Every n-vertex kC>=3-saturated graph, as canonical representatives in graph6 order."""
    return [parse_graph6(s) for s in _run(n, k, jobs, cache_dir, use_cache, False, 200, None)[1]]


def _run(n, k, jobs, cache_dir, use_cache, pruned, unit_size, stop_after) -> tuple[SpectrumRecord, list[str]]:
    _check_envelope(n, k)
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    rec_path, g6_path, ckpt_path = _paths(cache, n, k, pruned)
    if use_cache and rec_path.exists() and g6_path.exists():
        record = load_record(rec_path)
        listed = g6_path.read_text().split()
        if _record_from(n, k, record.total_graphs_scanned, listed, record.elapsed) != record:
            raise RecordError(f"{g6_path} does not match {rec_path}")
        return record, listed

    total = len(parents(n))
    start, scanned, saturated, prior = 0, 0, [], 0.0
    if use_cache:
        ckpt = _load_checkpoint(ckpt_path, n, k, pruned)
        if ckpt is not None:
            start, scanned = ckpt["next_parent"], ckpt["scanned"]
            saturated, prior = list(ckpt["saturated"]), float(ckpt.get("elapsed", 0.0))
            log.info("resuming n=%d k=%d at parent %d/%d", n, k, start, total)

    t0 = time.perf_counter()
    units = _units(total, unit_size, start)
    done = 0

    def results() -> Iterator[tuple[int, tuple[int, list[str]]]]:
        if jobs <= 1:
            for a, b in units:
                yield b, _scan_unit(n, k, a, b, pruned)
            return
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan_unit, n, k, a, b, pruned) for a, b in units]
            try:
                for (_, b), fut in zip(units, futures):
                    yield b, fut.result()
            finally:
                for fut in futures:
                    fut.cancel()

    for b, (count, found) in results():
        scanned += count
        saturated.extend(found)
        done += 1
        if use_cache:
            _atomic_write(ckpt_path, json.dumps({
                "n": n, "k": k, "pruned": pruned, "toolkit_version": __version__,
                "next_parent": b, "total_parents": total, "scanned": scanned,
                "elapsed": prior + time.perf_counter() - t0,
                "saturated": sorted(saturated),
            }))
        if stop_after is not None and done >= stop_after and b < total:
            raise ScanInterrupted(f"stopped after parent {b} of {total}")

    saturated.sort()
    record = _record_from(n, k, scanned, saturated, prior + time.perf_counter() - t0)
    if use_cache:
        _atomic_write(g6_path, "".join(s + "\n" for s in saturated))
        save_record(record, rec_path)
        ckpt_path.unlink(missing_ok=True)
    return record, saturated


# persistence ------------------------------------------------------------------


def save_record(record: SpectrumRecord, path: Path | str) -> None:
    _atomic_write(Path(path), record.dumps())


def audit_record(record: SpectrumRecord) -> list[str]:
    """Problems found when re-checking a record's internal consistency and witnesses."""
    problems = []
    if record.es != sorted(record.count_by_size):
        problems.append("es does not match count_by_size")
    if record.es and (record.sat != min(record.es) or record.ex != max(record.es)):
        problems.append("sat/ex do not match es")
    if sorted(record.witnesses) != record.es:
        problems.append("witness sizes do not match es")
    for m, w in sorted(record.witnesses.items()):
        try:
            g = parse_graph6(w)
        except ValueError as exc:
            problems.append(f"witness for m={m} is not graph6: {exc}")
            continue
        if g.n != record.n or g.m != m:
            problems.append(f"witness for m={m} has n={g.n}, m={g.m}")
        elif not saturation_status(g, record.k).saturated:
            problems.append(f"witness for m={m} is not saturated")
    return problems


def load_record(path: Path | str, verify: bool = True) -> SpectrumRecord:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise RecordError(f"cannot read record {path}: {exc}") from exc
    record = SpectrumRecord.from_json(data)
    if record.toolkit_version != __version__:
        raise RecordError(f"record version {record.toolkit_version} != toolkit {__version__}")
    if verify:
        problems = audit_record(record)
        if problems:
            raise RecordError("record failed audit: " + "; ".join(problems))
    return record
