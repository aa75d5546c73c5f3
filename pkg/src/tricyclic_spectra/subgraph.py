"""Canonical labeling, isomorphism, and induced / distance-preserving subgraph search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from collections.abc import Sequence


from .graph_core import Graph, _bits, distance_matrix, write_graph6


# -- canonical labeling -------------------------------------------------------

def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by neighbor counts into a splitter cell, new pieces are
    ordered by count, so the result depends only on the graph and the input
    cell order.
    """
    cells = [list(c) for c in cells]
    while True:
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            new_cells = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(groups) > 1:
                    split = True
                    new_cells.extend(groups[k] for k in sorted(groups))
                else:
                    new_cells.append(cell)
            if split:
                cells = new_cells
                break
        else:
            return cells


def _certificate(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows of the graph relabeled so that ``order[k]`` becomes ``k``."""
    pos = [0] * len(order)
    for k, v in enumerate(order):
        pos[v] = k
    cert = []
    for v in order:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << pos[w]
        cert.append(r)
    return tuple(cert)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that relabeling ``order[k] -> k`` gives the canonical graph.

    Individualization-refinement search: refine the unit partition, branch on
    the first non-singleton cell, keep the largest leaf certificate.  A leaf equal
    to the first leaf yields an automorphism; the search then jumps back to the
    node where the current path left the first path, and sibling branches in the
    same orbit of the automorphisms found so far are skipped.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return []
    state = {"first_cert": None, "first_path": None, "first_order": None,
             "best_cert": None, "best_order": None}
    autos: list[tuple[int, ...]] = []

    def perm_between(order_a, order_b):
        perm = [0] * n
        for a, b in zip(order_a, order_b):
            perm[a] = b
        return tuple(perm)

    def search(cells, fixed):
        """Returns a depth to unwind to, or None to continue normally."""
        cells = _refine(rows, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(rows, order)
            if state["first_cert"] is None:
                state.update(first_cert=cert, first_path=list(fixed), first_order=order,
                             best_cert=cert, best_order=order)
                return None
            if cert == state["first_cert"]:
                autos.append(perm_between(state["first_order"], order))
                fp = state["first_path"]
                depth = next(i for i, (x, y) in enumerate(zip(fixed, fp)) if x != y)
                return depth
            if cert == state["best_cert"]:
                autos.append(perm_between(state["best_order"], order))
            elif cert > state["best_cert"]:
                state.update(best_cert=cert, best_order=order)
            return None
        cell = cells[target]
        depth = len(fixed)
        tried: list[int] = []
        for v in cell:
            # automorphisms fixing the prefix pointwise; skip v if it shares an orbit with a tried vertex
            stab = [a for a in autos if all(a[x] == x for x in fixed)]
            if tried and stab and any(_same_orbit(v, t, stab) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = search(child, fixed + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    search([list(range(n))], [])
    return state["best_order"]


def _same_orbit(v: int, t: int, gens: list[tuple[int, ...]]) -> bool:
    seen = {t}
    frontier = [t]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return v == t


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    return Graph(g.n, _certificate(g.rows, order))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 string of the canonically relabeled graph."""

    text: str

    def graph(self) -> Graph:
        from .graph_core import parse_graph6

        return parse_graph6(self.text)

    def __str__(self) -> str:
        return self.text


@lru_cache(maxsize=200_000)
def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(write_graph6(canonical_graph(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# -- subgraph search ------------------------------------------------------------

@dataclass(frozen=True)
class Occurrence:
    """Host vertices ``subset`` (sorted) and ``mapping[i]`` = host image of pattern vertex i."""

    subset: tuple[int, ...]
    mapping: tuple[int, ...]


def _search_order(pattern: Graph) -> list[int]:
    """Connected-first vertex order for the pattern: start at max degree, then BFS-ish
    picking the vertex with most already-ordered neighbors."""
    n = pattern.n
    if n == 0:
        return []
    deg = pattern.degrees()
    order = [max(range(n), key=lambda v: (deg[v], -v))]
    placed = 1 << order[0]
    while len(order) < n:
        cands = [v for v in range(n) if not placed >> v & 1]
        v = max(cands, key=lambda v: ((pattern.rows[v] & placed).bit_count(), deg[v], -v))
        order.append(v)
        placed |= 1 << v
    return order


def _match(host: Graph, pattern: Graph, *, distances: bool, host_dist=None, pat_dist=None):
    """Backtracking embeddings of ``pattern`` into ``host``.

    With ``distances`` the host distance between images must equal the pattern
    distance (which also forces induced adjacency, since distance 1 means edge).
    Otherwise only induced adjacency is required.  Yields mapping tuples.
    """
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return
    order = _search_order(pattern)
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    hrows, prows = host.rows, pattern.rows
    if distances:
        hd = host_dist if host_dist is not None else distance_matrix(host)
        pd = pat_dist if pat_dist is not None else distance_matrix(pattern)
        hd = hd.tolist()
        pd = pd.tolist()
    mapping = [-1] * np_
    used = 0

    def extend(k):
        nonlocal used
        if k == np_:
            yield tuple(mapping)
            return
        u = order[k]
        prev = order[:k]
        # candidates: neighbors of the image of an already-placed pattern neighbor
        anchor = next((w for w in prev if prows[u] >> w & 1), None)
        if anchor is not None:
            cand_mask = hrows[mapping[anchor]] & ~used
        else:
            cand_mask = ((1 << nh) - 1) & ~used
        for x in _bits(cand_mask):
            if hdeg[x] < pdeg[u]:
                continue
            ok = True
            if distances:
                row_u = pd[u]
                row_x = hd[x]
                for w in prev:
                    if row_x[mapping[w]] != row_u[w]:
                        ok = False
                        break
            else:
                for w in prev:
                    if (hrows[x] >> mapping[w] & 1) != (prows[u] >> w & 1):
                        ok = False
                        break
            if not ok:
                continue
            mapping[u] = x
            used |= 1 << x
            yield from extend(k + 1)
            used &= ~(1 << x)
            mapping[u] = -1

    yield from extend(0)


def has_induced_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is isomorphic to an induced subgraph of ``host``."""
    if pattern.n > host.n or pattern.m > host.m:
        return False
    return next(_match(host, pattern, distances=False), None) is not None


def _colex_key(subset: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(subset, reverse=True))


def find_distance_preserving_induced(host: Graph, pattern: Graph, *, host_dist=None,
                                     first_only: bool = False) -> list[Occurrence]:
    """All vertex subsets S of ``host`` such that host[S] is isomorphic to ``pattern``
    and host distances restricted to S equal the distances inside host[S].

    One occurrence per subset, in colex order of subsets.
    """
    if pattern.n > host.n or pattern.n == 0:
        return []
    if host_dist is None:
        host_dist = distance_matrix(host)
    pat_dist = distance_matrix(pattern)
    # distance multiset filter: the pattern's diameter must fit in the host
    if pat_dist.max() > host_dist.max():
        return []
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    for mp in _match(host, pattern, distances=True, host_dist=host_dist, pat_dist=pat_dist):
        key = tuple(sorted(mp))
        if key not in found:
            found[key] = mp
            if first_only:
                break
    return [Occurrence(s, found[s]) for s in sorted(found, key=_colex_key)]
