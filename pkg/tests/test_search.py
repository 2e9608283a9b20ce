import pytest

from skolem import (
    CeilingExceededError,
    DEFAULT_CEILING,
    PairSet,
    SearchConfig,
    SearchMode,
    active_backend,
    cross_validate_construction,
    effective_ceiling,
    full_report,
    search_skolem_starters,
)
from skolem import _pysearch
from skolem.search import _fastsearch

from _fixtures import FIRST_STRONG_WITNESS, S_HALF, S_TWO, STARTER_COUNTS
from _naive import element_driven_starters

needs_extension = pytest.mark.skipif(
    _fastsearch is None, reason="compiled extension not built"
)


def _witness_pairs(xs):
    return frozenset((x, x + d) for d, x in enumerate(xs, start=1))


def test_kernel_counts_match_fixtures():
    for (n, strong), expected in STARTER_COUNTS.items():
        if n > 19:
            continue  # larger orders are exercised by the compiled kernel below
        count, nodes, witnesses = _pysearch.run_search(n, strong)
        assert count == expected, (n, strong)
        assert nodes >= count
        assert witnesses == []


@needs_extension
def test_compiled_kernel_counts_match_fixtures():
    for (n, strong), expected in STARTER_COUNTS.items():
        if n > 19:
            continue
        assert _fastsearch.run_search(n, strong)[0] == expected, (n, strong)


@needs_extension
def test_kernels_agree_exactly():
    # count, node count and witness stream all identical, both orders
    for n in (9, 11, 13, 15, 17):
        for strong in (False, True):
            for descending in (True, False):
                py = _pysearch.run_search(n, strong, 0, -1, descending)
                cy = _fastsearch.run_search(n, strong, 0, -1, descending)
                assert py == cy, (n, strong, descending)


def test_variable_order_does_not_change_the_count():
    for n in (9, 11, 13, 15, 17):
        for strong in (False, True):
            down = _pysearch.run_search(n, strong, 0, 0, True)[0]
            up = _pysearch.run_search(n, strong, 0, 0, False)[0]
            assert down == up, (n, strong)


def test_kernel_witnesses_match_element_driven_oracle():
    # Same starter sets from a structurally different enumeration strategy.
    for n in (9, 11, 17):
        for strong in (False, True):
            oracle = {
                frozenset(tuple(sorted(p)) for p in ps)
                for ps in element_driven_starters(n, strong)
            }
            count, _, witnesses = _pysearch.run_search(n, strong, 0, -1)
            kernel = {_witness_pairs(xs) for xs in witnesses}
            assert count == len(oracle) == len(kernel), (n, strong)
            assert kernel == oracle, (n, strong)


def test_kernel_validation():
    with pytest.raises(ValueError, match="odd"):
        _pysearch.run_search(8, True)
    with pytest.raises(ValueError, match="odd"):
        _pysearch.run_search(1, True)
    with pytest.raises(ValueError, match="fixed_top"):
        _pysearch.run_search(11, True, 0, 0, True, 6)


@needs_extension
def test_compiled_kernel_validation():
    with pytest.raises(ValueError, match="odd"):
        _fastsearch.run_search(8, True)
    with pytest.raises(ValueError, match="fixed_top"):
        _fastsearch.run_search(11, True, 0, 0, True, 6)


def test_fixed_top_partitions_the_space():
    # partial counts over the top-level choices sum to the full count
    for strong in (False, True):
        full, full_nodes, _ = _pysearch.run_search(11, strong)
        parts = [_pysearch.run_search(11, strong, 0, 0, True, x) for x in range(1, 6)]
        assert sum(p[0] for p in parts) == full
        assert sum(p[1] for p in parts) == full_nodes


def test_search_config_validation():
    with pytest.raises(ValueError, match="odd"):
        SearchConfig(n=10)
    with pytest.raises(ValueError, match="odd"):
        SearchConfig(n=1)
    with pytest.raises(TypeError, match="must be an int"):
        SearchConfig(n="11")
    with pytest.raises(ValueError, match="limit"):
        SearchConfig(n=11, limit=0)
    with pytest.raises(ValueError, match="workers"):
        SearchConfig(n=11, workers=0)
    with pytest.raises(ValueError):
        SearchConfig(n=11, mode="everything")
    assert SearchConfig(n=11, mode="count").mode is SearchMode.COUNT_ALL
    assert SearchConfig(n=11).t == 5


def test_count_mode():
    result = search_skolem_starters(SearchConfig(n=11))
    assert result.count == 2
    assert result.complete
    assert result.witnesses == ()
    assert result.mode is SearchMode.COUNT_ALL
    assert result.require_strong
    assert result.backend == active_backend()
    assert result.wall_time >= 0
    loose = search_skolem_starters(SearchConfig(n=11, require_strong=False))
    assert loose.count == 10


def test_count_mode_inadmissible_orders():
    # n == 5 or 7 (mod 8) admits no Skolem starter; the walk confirms it
    for n in (5, 7, 13, 15, 21, 23):
        result = search_skolem_starters(SearchConfig(n=n, require_strong=False))
        assert result.count == 0, n


def test_enumerate_mode():
    result = search_skolem_starters(SearchConfig(n=11, mode="enumerate"))
    assert result.count == 2
    assert len(result.witnesses) == 2
    pair_sets = {ps.pairs for ps in result.witnesses}
    assert pair_sets == {S_TWO[11], S_HALF[11]}
    for ps in result.witnesses:
        assert isinstance(ps, PairSet)
        assert full_report(ps).verdicts == (True, True, True)


def test_enumerate_mode_limit_keeps_exact_count():
    full = search_skolem_starters(SearchConfig(n=17, mode="enumerate"))
    capped = search_skolem_starters(SearchConfig(n=17, mode="enumerate", limit=5))
    assert full.count == capped.count == 56
    assert len(full.witnesses) == 56
    assert len(capped.witnesses) == 5
    assert [p.pairs for p in capped.witnesses] == [
        p.pairs for p in full.witnesses[:5]
    ]


def test_first_witness_mode():
    for n, xs in FIRST_STRONG_WITNESS.items():
        if n > effective_ceiling():
            continue
        result = search_skolem_starters(SearchConfig(n=n, mode="first"))
        assert result.count == 1
        assert not result.complete
        assert len(result.witnesses) == 1
        assert result.witnesses[0].pairs == tuple(sorted(_witness_pairs(xs)))
        assert full_report(result.witnesses[0]).verdicts == (True, True, True)


def test_first_witness_exhausts_when_none_exists():
    result = search_skolem_starters(SearchConfig(n=9, mode="first"))
    assert result.count == 0
    assert result.complete
    assert result.witnesses == ()


def test_parallel_matches_sequential():
    seq = search_skolem_starters(SearchConfig(n=17, mode="enumerate"))
    par = search_skolem_starters(SearchConfig(n=17, mode="enumerate", workers=3))
    assert par.workers > 1
    assert (seq.count, seq.nodes_explored) == (par.count, par.nodes_explored)
    assert [p.pairs for p in seq.witnesses] == [p.pairs for p in par.witnesses]


def test_parallel_zero_count_order():
    seq = search_skolem_starters(SearchConfig(n=15, require_strong=False))
    par = search_skolem_starters(
        SearchConfig(n=15, require_strong=False, workers=2)
    )
    assert seq.count == par.count == 0
    assert seq.nodes_explored == par.nodes_explored


def test_first_witness_ignores_workers():
    result = search_skolem_starters(SearchConfig(n=11, mode="first", workers=4))
    assert result.workers == 1
    assert result.witnesses[0].pairs == tuple(
        sorted(_witness_pairs(FIRST_STRONG_WITNESS[11]))
    )


def test_ceiling_enforcement(monkeypatch):
    monkeypatch.delenv("SKOLEM_CEILING", raising=False)
    assert effective_ceiling() == DEFAULT_CEILING
    with pytest.raises(CeilingExceededError) as exc_info:
        search_skolem_starters(SearchConfig(n=29))
    assert exc_info.value.n == 29
    assert exc_info.value.ceiling == DEFAULT_CEILING

    monkeypatch.setenv("SKOLEM_CEILING", "9")
    assert effective_ceiling() == 9
    with pytest.raises(CeilingExceededError):
        search_skolem_starters(SearchConfig(n=11))
    forced = search_skolem_starters(SearchConfig(n=11, force=True))
    assert forced.count == 2

    monkeypatch.setenv("SKOLEM_CEILING", "eleven")
    with pytest.raises(ValueError, match="SKOLEM_CEILING"):
        search_skolem_starters(SearchConfig(n=11))


def test_backend_override(monkeypatch):
    monkeypatch.setenv("SKOLEM_BACKEND", "pure")
    assert active_backend() == "pure"
    result = search_skolem_starters(SearchConfig(n=11))
    assert result.backend == "pure"
    assert result.count == 2

    monkeypatch.setenv("SKOLEM_BACKEND", "bogus")
    with pytest.raises(ValueError, match="SKOLEM_BACKEND"):
        active_backend()


@needs_extension
def test_backends_agree_through_the_front_door(monkeypatch):
    runs = {}
    for backend in ("pure", "compiled"):
        monkeypatch.setenv("SKOLEM_BACKEND", backend)
        result = search_skolem_starters(SearchConfig(n=13, mode="enumerate", require_strong=False))
        runs[backend] = (
            result.count,
            result.nodes_explored,
            [p.pairs for p in result.witnesses],
        )
    assert runs["pure"] == runs["compiled"]


def test_cross_validation():
    cv = cross_validate_construction(11)
    assert cv.ok
    assert cv.strong_count == STARTER_COUNTS[(11, True)]
    assert cv.verified_two and cv.verified_half
    assert cv.found_two and cv.found_half
    assert cv.q == 11


def test_cross_validation_respects_ceiling(monkeypatch):
    monkeypatch.setenv("SKOLEM_CEILING", "9")
    with pytest.raises(CeilingExceededError):
        cross_validate_construction(11)
