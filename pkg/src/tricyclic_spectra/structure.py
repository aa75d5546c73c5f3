"""Chordality, block decomposition, tricyclic bases and the block-graph criterion."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ClassificationError, DomainError
from .graph_core import Graph, _bits, compositions, cyclomatic_number, require_connected


# -- chordality ------------------------------------------------------------------

def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order (partition-refinement variant)."""
    if g.n == 0:
        return []
    sets = [list(range(g.n))]
    order = []
    while sets:
        v = sets[0].pop(0)
        if not sets[0]:
            sets.pop(0)
        order.append(v)
        nb = g.rows[v]
        new_sets = []
        for s in sets:
            inside = [w for w in s if nb >> w & 1]
            outside = [w for w in s if not nb >> w & 1]
            if inside:
                new_sets.append(inside)
            if outside:
                new_sets.append(outside)
        sets = new_sets
    return order


def is_perfect_elimination_order(g: Graph, peo: list[int]) -> bool:
    """``peo[0]`` is eliminated first; each vertex's later neighbors must form a clique."""
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [w for w in _bits(g.rows[v]) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        need = 0
        for w in later:
            if w != parent:
                need |= 1 << w
        if need & ~g.rows[parent]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_order(g, lex_bfs(g)[::-1])


# -- blocks ----------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_membership: dict[int, list[int]] = field(compare=False)

    def blocks_of(self, v: int) -> list[int]:
        return self.block_membership.get(v, [])


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by iterative Hopcroft-Tarjan lowpoints."""
    require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    if n == 1:
        blocks.append((0,))
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    blocks.append(tuple(sorted(comp)))
    blocks.sort()
    membership: dict[int, list[int]] = {}
    for k, b in enumerate(blocks):
        for v in b:
            membership.setdefault(v, []).append(k)
    cuts = frozenset(v for v, ks in membership.items() if len(ks) >= 2)
    return BlockDecomposition(tuple(blocks), cuts, membership)


def _is_clique(g: Graph, vs) -> bool:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return all((g.rows[v] | 1 << v) & mask == mask for v in vs)


def is_block_graph(g: Graph) -> bool:
    return all(_is_clique(g, b) for b in block_decomposition(g).blocks)


def is_block_star(g: Graph) -> bool:
    if not is_block_graph(g):
        return False
    blocks = block_decomposition(g).blocks
    return bool(set.intersection(*(set(b) for b in blocks)))


def is_loose_block_graph(g: Graph) -> bool:
    if not is_block_graph(g):
        return False
    bd = block_decomposition(g)
    return all(len(ks) <= 2 for ks in bd.block_membership.values())


def embeds_as_induced(g: Graph, target: str) -> bool:
    """Is ``g`` an induced subgraph of BGA (``target="bga"``) or of some
    BG(p,q,3,2,2) with 2 <= p, q <= n+1 (``target="bg"``)?"""
    from .families import Family, FamilySpec, generate
    from .subgraph import has_induced_subgraph

    require_connected(g)
    if g.n < 2:
        raise DomainError("embedding test is defined for nontrivial graphs (n >= 2)")
    target = target.lower()
    if target == "bga":
        return has_induced_subgraph(generate(FamilySpec(Family.BGA)), g)
    if target == "bg":
        top = g.n + 1
        return any(
            has_induced_subgraph(generate(FamilySpec(Family.BG, (p, q))), g)
            for p in range(2, top + 1) for q in range(2, top + 1)
        )
    raise DomainError(f"unknown embedding target {target!r}; use 'bg' or 'bga'")


@dataclass(frozen=True)
class BlockGraphVerdict:
    below: bool
    block_star: bool
    loose: bool
    in_bg: bool
    in_bga: bool

    def to_json(self) -> dict:
        return {"lambda2_below_half": self.below, "block_star": self.block_star,
                "loose": self.loose, "induced_in_bg": self.in_bg, "induced_in_bga": self.in_bga}


def blockgraph_verdict(g: Graph) -> BlockGraphVerdict:
    if not is_block_graph(g):
        raise DomainError("graph is not a block graph")
    star = is_block_star(g)
    loose = is_loose_block_graph(g)
    in_bg = in_bga = False
    if g.n >= 2 and not (star or loose):
        in_bga = embeds_as_induced(g, "bga")
        in_bg = in_bga or embeds_as_induced(g, "bg")
    return BlockGraphVerdict(star or loose or in_bg or in_bga, star, loose, in_bg, in_bga)


def blockgraph_lambda2_below(g: Graph) -> bool:
    """Block-graph criterion for lambda_2 < -1/2: block star, loose, or an induced
    subgraph of BG(p,q,3,2,2) or of BGA."""
    return blockgraph_verdict(g).below


# -- tricyclic bases ---------------------------------------------------------------

def base_of(g: Graph) -> Graph:
    """Strip pendant vertices until none remain; vertices keep their relative order."""
    if cyclomatic_number(g) != 3:
        raise DomainError(f"base is defined for tricyclic graphs; cyclomatic number is {cyclomatic_number(g)}")
    return g.induced(base_vertices(g))


def base_vertices(g: Graph) -> list[int]:
    alive = (1 << g.n) - 1
    rows = g.rows
    while True:
        leaves = [v for v in _bits(alive) if (rows[v] & alive).bit_count() <= 1]
        if not leaves:
            return list(_bits(alive))
        for v in leaves:
            alive &= ~(1 << v)


# A template is a multigraph kernel whose edges are subdivided into paths.
# Edge kinds: "loop" (a cycle through one kernel vertex, length >= 3),
# "arc" (part of a cycle, length >= 1) and "path" (a connecting path, length >= 1).
# Parallel arcs between the same pair may have at most one of length 1.

@dataclass(frozen=True)
class _Template:
    label: str
    kernel_vertices: int
    edges: tuple[tuple[int, int, str, str], ...]  # (a, b, kind, parameter name)


_TEMPLATES: tuple[_Template, ...] = (
    _Template("G^7_1", 4, (
        (0, 1, "arc", "a01"), (0, 2, "arc", "a02"), (0, 3, "arc", "a03"),
        (1, 2, "arc", "a12"), (1, 3, "arc", "a13"), (2, 3, "arc", "a23"))),
    _Template("G^6_1", 2, (
        (0, 1, "arc", "a1"), (0, 1, "arc", "a2"), (0, 1, "arc", "a3"), (0, 1, "arc", "a4"))),
    _Template("G^6_2", 3, (
        (0, 1, "arc", "a1"), (0, 1, "arc", "a2"), (1, 2, "arc", "b1"), (1, 2, "arc", "b2"),
        (0, 2, "arc", "c"))),
    _Template("G^6_3", 4, (
        (0, 1, "arc", "a1"), (0, 1, "arc", "a2"), (2, 3, "arc", "b1"), (2, 3, "arc", "b2"),
        (1, 2, "arc", "c1"), (3, 0, "arc", "c2"))),
    _Template("G^4_1", 3, (
        (0, 1, "arc", "t1"), (0, 1, "arc", "t2"), (0, 2, "arc", "t3a"), (2, 1, "arc", "t3b"),
        (2, 2, "loop", "cycle"))),
    _Template("G^4_2", 2, (
        (0, 1, "arc", "t1"), (0, 1, "arc", "t2"), (0, 1, "arc", "t3"), (0, 0, "loop", "cycle"))),
    _Template("G^4_3", 4, (
        (0, 1, "arc", "t1"), (0, 1, "arc", "t2"), (0, 2, "arc", "t3a"), (2, 1, "arc", "t3b"),
        (2, 3, "path", "path"), (3, 3, "loop", "cycle"))),
    _Template("G^4_4", 3, (
        (0, 1, "arc", "t1"), (0, 1, "arc", "t2"), (0, 1, "arc", "t3"),
        (0, 2, "path", "path"), (2, 2, "loop", "cycle"))),
    _Template("G^3_1", 2, (
        (0, 0, "loop", "cycle1"), (0, 1, "arc", "mid1"), (0, 1, "arc", "mid2"),
        (1, 1, "loop", "cycle3"))),
    _Template("G^3_2", 3, (
        (0, 0, "loop", "cycle1"), (0, 1, "arc", "mid1"), (0, 1, "arc", "mid2"),
        (1, 2, "path", "path2"), (2, 2, "loop", "cycle3"))),
    _Template("G^3_3", 4, (
        (0, 0, "loop", "cycle1"), (0, 1, "path", "path1"), (1, 2, "arc", "mid1"),
        (1, 2, "arc", "mid2"), (2, 3, "path", "path2"), (3, 3, "loop", "cycle3"))),
    _Template("G^3_4", 1, (
        (0, 0, "loop", "cycle1"), (0, 0, "loop", "cycle2"), (0, 0, "loop", "cycle3"))),
    _Template("G^3_5", 2, (
        (0, 0, "loop", "cycle1"), (0, 0, "loop", "cycle2"), (0, 1, "path", "path2"),
        (1, 1, "loop", "cycle3"))),
    _Template("G^3_6", 4, (
        (0, 1, "path", "path1"), (0, 2, "path", "path2"), (0, 3, "path", "path3"),
        (1, 1, "loop", "cycle1"), (2, 2, "loop", "cycle2"), (3, 3, "loop", "cycle3"))),
    _Template("G^3_7", 3, (
        (0, 0, "loop", "cycle2"), (0, 1, "path", "path1"), (1, 1, "loop", "cycle1"),
        (0, 2, "path", "path2"), (2, 2, "loop", "cycle3"))),
)

TEMPLATE_LABELS = tuple(t.label for t in _TEMPLATES)


def _instantiate(t: _Template, lengths: tuple[int, ...]) -> Graph:
    n = t.kernel_vertices
    edges = []
    for (a, b, kind, _), length in zip(t.edges, lengths):
        if kind == "loop":
            chain = [a] + list(range(n, n + length - 1)) + [a]
            n += length - 1
        else:
            chain = [a] + list(range(n, n + length - 1)) + [b]
            n += length - 1
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def _length_vectors(t: _Template, extra: int):
    """Length assignments whose subdivision vertices total ``extra``."""
    mins = [3 if kind == "loop" else 1 for _, _, kind, _ in t.edges]
    spare = extra - sum(m - 1 for m in mins)
    if spare < 0:
        return
    for add in compositions(spare, len(mins)):
        lengths = tuple(m + a for m, a in zip(mins, add))
        # simple graph: at most one length-1 arc per parallel class
        seen = set()
        ok = True
        for (a, b, kind, _), length in zip(t.edges, lengths):
            if kind != "loop" and length == 1:
                key = (min(a, b), max(a, b))
                if key in seen:
                    ok = False
                    break
                seen.add(key)
        if ok:
            yield lengths


@dataclass(frozen=True)
class BaseType:
    """Template label plus the cycle/path lengths realizing it.

    ``label`` follows the collapsing convention (G^3_1, G^3_2 are reported as
    G^3_3 and G^3_4, G^3_5 as G^3_7 with zero-length paths); ``kernel_label``
    is the template whose connecting paths all have positive length.
    """

    label: str
    params: dict
    kernel_label: str

    def to_json(self) -> dict:
        return {"label": self.label, "params": self.params, "kernel_label": self.kernel_label}


def _collapse(label: str, p: dict) -> tuple[str, dict]:
    if label == "G^3_1":
        return "G^3_3", {"cycle1": p["cycle1"], "path1": 0, "mid1": p["mid1"], "mid2": p["mid2"],
                         "path2": 0, "cycle3": p["cycle3"]}
    if label == "G^3_2":
        return "G^3_3", {"cycle1": p["cycle1"], "path1": 0, "mid1": p["mid1"], "mid2": p["mid2"],
                         "path2": p["path2"], "cycle3": p["cycle3"]}
    if label == "G^3_4":
        return "G^3_7", {"cycle2": p["cycle2"], "path1": 0, "cycle1": p["cycle1"], "path2": 0,
                         "cycle3": p["cycle3"]}
    if label == "G^3_5":
        return "G^3_7", {"cycle2": p["cycle2"], "path1": 0, "cycle1": p["cycle1"],
                         "path2": p["path2"], "cycle3": p["cycle3"]}
    return label, p


@lru_cache(maxsize=64)
def _template_catalog(n: int) -> dict:
    """canonical form -> (kernel label, params) for every template instantiation on n vertices."""
    from .subgraph import canonical_form

    catalog: dict = {}
    for t in _TEMPLATES:
        for lengths in _length_vectors(t, n - t.kernel_vertices):
            key = canonical_form(_instantiate(t, lengths))
            if key not in catalog:
                params = {name: length for (_, _, _, name), length in zip(t.edges, lengths)}
                catalog[key] = (t.label, params)
    return catalog


def base_type(g: Graph) -> BaseType:
    from .subgraph import canonical_form

    if cyclomatic_number(g) != 3:
        raise DomainError("base_type needs a tricyclic graph")
    if min(g.degrees()) < 2:
        raise DomainError("graph has pendant vertices; pass base_of(g)")
    hit = _template_catalog(g.n).get(canonical_form(g))
    if hit is None:
        raise ClassificationError(f"no base template matches {g.to_graph6()}")
    kernel_label, params = hit
    label, shown = _collapse(kernel_label, dict(params))
    return BaseType(label, shown, kernel_label)
