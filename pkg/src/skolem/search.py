"""Exhaustive search for (strong) Skolem starters: configuration, backend
selection, parallel partitioning and cross-validation of the construction.

The backtracking kernel exists twice with one contract: a compiled Cython
extension and a pure-Python fallback.  The compiled one is used when it
built; set SKOLEM_BACKEND=pure or SKOLEM_BACKEND=compiled to force either.

Search cost grows explosively with n, so search_skolem_starters refuses
n above a ceiling (default 27) unless forced; SKOLEM_CEILING overrides
the default.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from . import _pysearch
from .construction import BetaChoice, build_strong_skolem
from .starters import PairSet, full_report

try:
    from . import _fastsearch
except ImportError:
    _fastsearch = None

DEFAULT_CEILING = 27
CEILING_ENV = "SKOLEM_CEILING"
BACKEND_ENV = "SKOLEM_BACKEND"

# Hard memory-safety bound on the kernel arrays; the time wall arrives far
# earlier, the ceiling plus force covers every realistic run.
MAX_SEARCH_N = 1_000_001


class SearchMode(Enum):
    COUNT_ALL = "count"
    FIRST_WITNESS = "first"
    ENUMERATE_ALL = "enumerate"


class CeilingExceededError(RuntimeError):
    """Search refused because n exceeds the configured ceiling."""

    def __init__(self, n: int, ceiling: int):
        self.n = n
        self.ceiling = ceiling
        super().__init__(
            f"n = {n} exceeds the search ceiling {ceiling}; raise "
            f"{CEILING_ENV} or pass force=True (command line: --force)"
        )


def effective_ceiling() -> int:
    """The active search ceiling: SKOLEM_CEILING if set, else the default."""
    raw = os.environ.get(CEILING_ENV)
    if raw is None or raw == "":
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CEILING_ENV} must be an integer, got {raw!r}") from None


def _backend():
    forced = os.environ.get(BACKEND_ENV)
    if forced in (None, ""):
        mod = _fastsearch if _fastsearch is not None else _pysearch
    elif forced == "pure":
        mod = _pysearch
    elif forced == "compiled":
        if _fastsearch is None:
            raise RuntimeError(
                f"{BACKEND_ENV}=compiled but the extension is not built"
            )
        mod = _fastsearch
    else:
        raise ValueError(
            f"unknown {BACKEND_ENV} value {forced!r}; use 'pure' or 'compiled'"
        )
    return mod, ("compiled" if mod is _fastsearch else "pure")


def active_backend() -> str:
    """Name of the kernel the next search would use: compiled or pure."""
    return _backend()[1]


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one exhaustive search over Z_n.

    mode: COUNT_ALL tallies every starter, FIRST_WITNESS stops at the first
    one found, ENUMERATE_ALL tallies everything while collecting witnesses
    (capped at limit when given; the count stays exact past the cap).
    require_strong restricts the walk to strong starters.  workers > 1
    splits the top branching level across processes for COUNT_ALL and
    ENUMERATE_ALL; FIRST_WITNESS always runs sequentially so the witness
    is the deterministic depth-first one.  force bypasses the ceiling.
    """

    n: int
    mode: SearchMode = SearchMode.COUNT_ALL
    require_strong: bool = True
    limit: int | None = None
    workers: int = 1
    force: bool = False
    descending: bool = True

    def __post_init__(self):
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", SearchMode(self.mode))
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"n must be an int, got {n!r}")
        if n < 3 or n % 2 == 0:
            raise ValueError(f"n must be odd and >= 3, got {n}")
        if n > MAX_SEARCH_N:
            raise ValueError(f"exhaustive search beyond n = {MAX_SEARCH_N} is not supported")
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be a positive int or None, got {self.limit}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def t(self) -> int:
        return (self.n - 1) // 2


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search.

    count is the exact number of starters of the requested kind when
    complete is True; for an aborted FIRST_WITNESS run it is the number
    found before stopping (i.e. 1).  nodes_explored counts successful pair
    placements across the whole walk, witnesses holds collected starters in
    deterministic depth-first order.
    """

    n: int
    mode: SearchMode
    require_strong: bool
    count: int
    nodes_explored: int
    witnesses: tuple[PairSet, ...]
    complete: bool
    wall_time: float
    backend: str
    workers: int


def _witness_pair_set(n: int, xs) -> PairSet:
    return PairSet(n, [(x, x + d) for d, x in enumerate(xs, start=1)])


def _partition_task(args):
    backend_name, n, strong, collect_limit, descending, top_x = args
    mod = _pysearch if backend_name == "pure" else _fastsearch
    return mod.run_search(
        n, strong, 0, collect_limit, descending, top_x
    )


def search_skolem_starters(config: SearchConfig) -> SearchResult:
    """Run the exhaustive search described by config.

    Raises CeilingExceededError when config.n exceeds the ceiling and
    force is not set.  Parallel runs return bit-identical results to
    sequential ones: the top level is partitioned in ascending order and
    the partial results are merged in that same order.
    """
    ceiling = effective_ceiling()
    if config.n > ceiling and not config.force:
        raise CeilingExceededError(config.n, ceiling)
    mod, backend_name = _backend()
    n = config.n
    strong = config.require_strong
    if config.mode is SearchMode.FIRST_WITNESS:
        stop_after, collect = 1, 1
    elif config.mode is SearchMode.COUNT_ALL:
        stop_after, collect = 0, 0
    else:
        stop_after, collect = 0, (-1 if config.limit is None else config.limit)

    started = time.perf_counter()
    parallel = (
        config.workers > 1
        and config.mode is not SearchMode.FIRST_WITNESS
        and config.t >= 1
    )
    if parallel:
        top_d = config.t if config.descending else 1
        tops = range(1, n - top_d)
        tasks = [
            (backend_name, n, strong, collect, config.descending, x) for x in tops
        ]
        workers = min(config.workers, len(tasks))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_partition_task, tasks))
        count = sum(p[0] for p in parts)
        nodes = sum(p[1] for p in parts)
        raw_witnesses = [w for p in parts for w in p[2]]
        if collect >= 0:
            raw_witnesses = raw_witnesses[:collect]
        used_workers = workers
    else:
        count, nodes, raw_witnesses = mod.run_search(
            n, strong, stop_after, collect, config.descending, 0
        )
        used_workers = 1
    elapsed = time.perf_counter() - started

    if config.mode is SearchMode.FIRST_WITNESS:
        complete = count == 0
    else:
        complete = True
    return SearchResult(
        n=n,
        mode=config.mode,
        require_strong=strong,
        count=count,
        nodes_explored=nodes,
        witnesses=tuple(_witness_pair_set(n, xs) for xs in raw_witnesses),
        complete=complete,
        wall_time=elapsed,
        backend=backend_name,
        workers=used_workers,
    )


@dataclass(frozen=True)
class CrossValidation:
    """Result of checking the construction against exhaustive enumeration.

    ok means: both constructed starters verify as strong Skolem starters
    and both literally occur among the exhaustively enumerated ones.
    """

    q: int
    strong_count: int
    nodes_explored: int
    verified_two: bool
    verified_half: bool
    found_two: bool
    found_half: bool
    wall_time: float

    @property
    def ok(self) -> bool:
        return (
            self.verified_two
            and self.verified_half
            and self.found_two
            and self.found_half
        )


def cross_validate_construction(
    q: int, alpha: int | None = None, workers: int = 1
) -> CrossValidation:
    """Confront build_strong_skolem(q) with the independent search.

    Enumerates every strong Skolem starter of Z_q and checks that both
    constructed starters (beta = 2 and beta = (q+1)/2) verify and appear
    in the enumeration.  Subject to the search ceiling like any search.
    """
    built = {
        c: build_strong_skolem(q, c, alpha) for c in (BetaChoice.TWO, BetaChoice.HALF)
    }
    verified = {c: all(full_report(ps).verdicts) for c, ps in built.items()}
    result = search_skolem_starters(
        SearchConfig(
            n=q,
            mode=SearchMode.ENUMERATE_ALL,
            require_strong=True,
            workers=workers,
        )
    )
    enumerated = {ps.pairs for ps in result.witnesses}
    return CrossValidation(
        q=q,
        strong_count=result.count,
        nodes_explored=result.nodes_explored,
        verified_two=verified[BetaChoice.TWO],
        verified_half=verified[BetaChoice.HALF],
        found_two=built[BetaChoice.TWO].pairs in enumerated,
        found_half=built[BetaChoice.HALF].pairs in enumerated,
        wall_time=result.wall_time,
    )
