"""Compute stratifications for many n, optionally in parallel and cached."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .cache import cache_load, cache_store
from .errors import ConsistencyError
from .graph import build_graph
from .partitions import Partition, enumerate_partitions
from .strata import Mode, Stratification, compute_dims


def _work(args: tuple[int, str]):
    n, mode = args
    g = build_graph(n)
    try:
        return "ok", tuple(compute_dims(g, mode))
    except ConsistencyError as exc:
        # custom exception attributes do not survive pickling
        return "error", (str(exc), tuple(exc.partition), exc.n)


def stratify_many(
    ns: Iterable[int],
    mode: Mode = "capacity",
    jobs: int = 1,
    cache_dir=None,
) -> dict[int, Stratification]:
    """Stratifications keyed by n. Raises ConsistencyError on the smallest failing n."""
    ns = list(ns)
    done: dict[int, Stratification] = {}
    if cache_dir is not None:
        for n in ns:
            s = cache_load(cache_dir, n, require_cross_check=(mode == "cross-check"))
            if s is not None:
                done[n] = s
    todo = [n for n in ns if n not in done]
    tasks = [(n, mode) for n in todo]
    if jobs > 1 and len(tasks) > 1:
        # largest n first keeps workers busy; map() still returns in task order
        order = sorted(range(len(tasks)), key=lambda i: -tasks[i][0])
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(zip(order, pool.map(_work, [tasks[i] for i in order])))
        results = [results[i] for i in range(len(tasks))]
    else:
        results = [_work(t) for t in tasks]

    for n, (status, payload) in zip(todo, results):
        if status == "error":
            msg, parts, bad_n = payload
            raise ConsistencyError(msg, partition=Partition(parts), n=bad_n)
        s = Stratification.from_dims(n, enumerate_partitions(n), payload)
        done[n] = s
        if cache_dir is not None:
            cache_store(cache_dir, s, cross_checked=(mode == "cross-check"))
    return {n: done[n] for n in ns}
