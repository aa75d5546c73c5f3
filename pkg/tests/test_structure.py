import itertools

import pytest

from tricyclic_spectra import (
    DomainError, Graph, base_of, base_type, block_decomposition, blockgraph_lambda2_below,
    cyclomatic_number, embeds_as_induced, enumerate_connected, generate, is_block_graph,
    is_block_star, is_chordal, is_isomorphic, is_loose_block_graph, lambda2, parse_spec,
)
from tricyclic_spectra.structure import TEMPLATE_LABELS, is_perfect_elimination_order, lex_bfs

from conftest import complete_graph, cycle_graph, path_graph, random_connected, star_graph


def has_chordless_cycle(g):
    for k in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            sub = g.induced(subset)
            if all(d == 2 for d in sub.degrees()) and sub.is_connected():
                return True
    return False


def brute_cut_vertices(g):
    return {v for v in range(g.n) if g.n > 2 and not g.delete_vertices([v]).is_connected()}


def test_chordal_against_chordless_cycle_oracle(rng):
    for _ in range(200):
        g = random_connected(rng, rng.randint(1, 9), p=rng.random() * 0.6)
        assert is_chordal(g) == (not has_chordless_cycle(g))


def test_chordal_examples():
    assert not is_chordal(cycle_graph(4))
    assert is_chordal(complete_graph(4))
    assert is_chordal(generate(parse_spec("t7")))
    assert is_chordal(path_graph(1))


def test_lexbfs_order_is_a_peo_for_chordal_graphs(rng):
    for _ in range(50):
        g = random_connected(rng, rng.randint(2, 9), p=0.5)
        order = lex_bfs(g)
        assert sorted(order) == list(range(g.n))
        assert is_perfect_elimination_order(g, order[::-1]) == is_chordal(g)


def test_blocks_against_cut_vertex_oracle(rng):
    for _ in range(150):
        g = random_connected(rng, rng.randint(2, 10), p=rng.random() * 0.3)
        bd = block_decomposition(g)
        assert set(bd.cut_vertices) == brute_cut_vertices(g)
        # every edge lies in exactly one block, every block with 3+ vertices has no cut vertex
        for u, v in g.edges():
            assert sum(1 for b in bd.blocks if u in b and v in b) == 1
        for b in bd.blocks:
            sub = g.induced(b)
            assert sub.is_connected()
            if len(b) >= 3:
                assert not brute_cut_vertices(sub)


def test_block_examples():
    assert block_decomposition(path_graph(4)).blocks == ((0, 1), (1, 2), (2, 3))
    assert block_decomposition(complete_graph(4)).blocks == ((0, 1, 2, 3),)
    bd = block_decomposition(generate(parse_spec("t1 0 0")))
    assert len(bd.blocks) == 3
    assert bd.cut_vertices == frozenset({2, 4})
    assert bd.blocks_of(2) == [0, 1]


def test_block_graph_predicates():
    assert is_block_star(star_graph(3))
    assert is_loose_block_graph(path_graph(10))
    assert not is_block_graph(cycle_graph(4))
    assert is_block_graph(generate(parse_spec("bga")))
    assert not is_loose_block_graph(star_graph(3))


def test_embedding_examples():
    assert embeds_as_induced(generate(parse_spec("bga")), "bga")
    assert embeds_as_induced(generate(parse_spec("bg 2 2")), "bg")
    assert not embeds_as_induced(star_graph(4), "bga")
    with pytest.raises(DomainError):
        embeds_as_induced(path_graph(1), "bg")


def test_blockgraph_criterion_examples():
    assert blockgraph_lambda2_below(star_graph(3))
    assert blockgraph_lambda2_below(path_graph(10))
    spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert blockgraph_lambda2_below(spider) == (lambda2(spider) < -0.5)
    bga = generate(parse_spec("bga"))
    assert blockgraph_lambda2_below(bga) and lambda2(bga) < -0.5
    with pytest.raises(DomainError):
        blockgraph_lambda2_below(cycle_graph(5))


def test_base_of_properties(rng):
    for text in ["t-general 2 3 1 0 2 0 1", "t3 4", "t4 3", "t5", "t6"]:
        g = generate(parse_spec(text))
        b = base_of(g)
        assert min(b.degrees()) >= 2
        assert cyclomatic_number(b) == 3
        assert base_of(b) == b
    with pytest.raises(DomainError):
        base_of(cycle_graph(5))


def test_base_type_examples():
    assert base_type(complete_graph(4)).label == "G^7_1"
    t = base_type(base_of(generate(parse_spec("t1 1 1"))))
    assert t.label == "G^3_3"
    t = base_type(base_of(generate(parse_spec("t2 0 0"))))
    assert t.label == "G^3_7"
    assert set(t.params.values()) == {0, 3}
    assert t.kernel_label == "G^3_4"
    assert base_type(generate(parse_spec("t4 0"))).label == "G^4_2"
    with pytest.raises(DomainError):
        base_type(generate(parse_spec("t3 2")))


@pytest.mark.slow
def test_every_small_base_gets_one_label():
    seen = set()
    for n in range(4, 10):
        for g in enumerate_connected(n, n + 2):
            if min(g.degrees()) < 2:
                continue
            bt = base_type(g)
            assert bt.label in TEMPLATE_LABELS
            assert base_type(g.relabel(list(range(g.n))[::-1])) == bt
            seen.add(bt.label)
    assert "G^7_1" in seen and "G^3_7" in seen


def test_theta_graph_label():
    # two vertices joined by three internally disjoint paths is bicyclic, not a base
    theta = Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    with pytest.raises(DomainError):
        base_type(theta)


def test_base_type_is_isomorphism_invariant(rng):
    g = base_of(generate(parse_spec("t-general 1 2 0 0 0 0 0")))
    perm = list(range(g.n))
    for _ in range(5):
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert is_isomorphic(g, h)
        assert base_type(h) == base_type(g)
