import itertools
import math

import pytest

from tricyclic_spectra import (
    ResourceGuardError, canonical_form, enumerate_connected, enumerate_family_members,
    blockgraph_check, theorem_check,
)
from tricyclic_spectra.enumeration import _colex_next, _colex_unrank, make_jobs, run_job
from tricyclic_spectra.subgraph import canonical_graph


def test_connected_class_counts():
    # connected graphs up to isomorphism on 1..7 vertices
    assert [len(enumerate_connected(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_tricyclic_class_counts():
    assert [len(enumerate_connected(n, n + 2)) for n in range(4, 9)] == [1, 4, 22, 107, 486]


@pytest.mark.parametrize("n, m, count", [(4, 6, 1), (5, 7, 4), (3, None, 2), (1, None, 1), (2, 0, 0)])
def test_examples(n, m, count):
    assert len(enumerate_connected(n, m)) == count


def test_representatives_are_canonical_and_distinct():
    graphs = enumerate_connected(6)
    forms = [canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(forms)
    assert forms == sorted(forms)
    for g in graphs:
        assert canonical_graph(g) == g


def test_edge_method_matches_augmentation():
    for n, m in [(5, None), (6, 8), (6, 7), (6, None)]:
        a = [canonical_form(g) for g in enumerate_connected(n, m)]
        b = [canonical_form(g) for g in enumerate_connected(n, m, method="edges")]
        assert a == b


def test_parallel_chunks_match_serial():
    serial = [canonical_form(g) for g in enumerate_connected(6, 8, method="edges")]
    parallel = [canonical_form(g) for g in enumerate_connected(6, 8, method="edges", jobs=3)]
    assert serial == parallel


def test_colex_ranking_walks_every_subset_once():
    universe, k = 7, 3
    c = _colex_unrank(0, k)
    seen = [tuple(c)]
    while _colex_next(c, universe):
        seen.append(tuple(c))
    assert len(seen) == math.comb(universe, k)
    assert seen == sorted(itertools.combinations(range(universe), k), key=lambda s: s[::-1])
    for rank, subset in enumerate(seen):
        assert tuple(_colex_unrank(rank, k)) == subset


def test_jobs_partition_the_rank_space():
    jobs = make_jobs(6, 8, 7)
    assert jobs[0].start == 0 and jobs[-1].stop == math.comb(15, 8)
    assert all(a.stop == b.start for a, b in zip(jobs, jobs[1:]))
    merged = set()
    for j in jobs:
        merged.update(run_job(j))
    assert sorted(merged) == [str(canonical_form(g)) for g in enumerate_connected(6, 8)]


def test_guards():
    with pytest.raises(ResourceGuardError):
        enumerate_connected(8)
    with pytest.raises(ResourceGuardError):
        enumerate_connected(10, 12)
    with pytest.raises(ResourceGuardError):
        theorem_check(10)
    with pytest.raises(ResourceGuardError):
        blockgraph_check(8)
    with pytest.raises(ValueError):
        enumerate_connected(4, method="magic")


def test_theorem_check_small():
    reports = theorem_check(7)
    by_n = {r.n: r for r in reports}
    assert by_n[4].accepted == 0 and by_n[4].total_graphs == 1
    assert by_n[6].accepted == 1
    assert all(r.confirmed for r in reports)
    accepted7 = by_n[7].accepted
    assert accepted7 == len(enumerate_family_members(7)) == 4
    for r in reports:
        assert r.chordality_exceptions == []
        assert r.boundary_suspects == []
    js = by_n[7].to_json()
    assert set(js) >= {"n", "total_graphs", "accepted", "spectral_positive", "disagreements",
                       "boundary_suspects", "chordal_counts", "runtime"}


def test_blockgraph_check_small():
    r3 = blockgraph_check(3)
    assert r3.total_graphs == 3 and r3.disagreements == []       # K2, P3, K3
    r4 = blockgraph_check(4)
    assert r4.disagreements == [] and r4.boundary_suspects == []
    # n=1 is skipped: the single-vertex graph is not counted
    assert blockgraph_check(2).total_graphs == 1
