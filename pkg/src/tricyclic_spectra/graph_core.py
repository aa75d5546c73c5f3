"""Immutable simple graphs, graph6/DOT I/O, BFS distances and edge counts.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one integer
bitmask per vertex (bit ``j`` of ``rows[i]`` is set iff ``ij`` is an edge),
which keeps induced subgraphs and relabelings cheap.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraphError, Graph6Error, UnsupportedSizeError

MAX_VERTICES = 126
GRAPH6_HEADER = ">>graph6<<"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal only if
    they have the same labeled edge set.
    """

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} references a vertex >= {n}")
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        self._n = n
        self._rows = rows
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        a = np.asarray(adj)
        n = a.shape[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]]
        return cls.from_edges(n, edges)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self._n) for j in _bits(self._rows[i] >> (i + 1) << (i + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``; new vertex ``k`` is ``vertices[k]``."""
        vs = list(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise ValueError("repeated vertex in subset")
        rows = []
        for v in vs:
            r = 0
            for w in _bits(self._rows[v]):
                k = pos.get(w)
                if k is not None:
                    r |= 1 << k
            rows.append(r)
        return Graph(len(vs), rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * self._n
        for v in range(self._n):
            r = 0
            for w in _bits(self._rows[v]):
                r |= 1 << perm[w]
            rows[perm[v]] = r
        return Graph(self._n, rows)

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        gone = set(vertices)
        return self.induced([v for v in range(self._n) if v not in gone])

    def add_vertex(self, neighbors: Iterable[int]) -> Graph:
        """New graph with one extra vertex ``n`` joined to ``neighbors``."""
        rows = list(self._rows)
        mask = 0
        for v in neighbors:
            rows[v] |= 1 << self._n
            mask |= 1 << v
        rows.append(mask)
        return Graph(self._n + 1, rows)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def to_graph6(self) -> str:
        return write_graph6(self)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  {v} [label="{v}"];' for v in range(self._n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m}, graph6={write_graph6(self)!r})"


# -- graph6 ---------------------------------------------------------------

def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 writer supports n <= {MAX_VERTICES}, got {n}")
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    rows = g.rows
    acc = nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 record", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range character {ch!r}", base + k)
    first = ord(s[0]) - 63
    if first < 63:
        n, pos = first, 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated size field", base + len(s))
        if ord(s[1]) - 63 == 63:
            raise Graph6Error("size field exceeds 258047 vertices", base + 1)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error(f"long size field used for n={n}", base)
        if n > MAX_VERTICES:
            raise Graph6Error(f"n={n} exceeds supported maximum {MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(s) - pos}",
            base + min(len(s), pos + nbytes),
        )
    pad = nbytes * 6 - nbits
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    rows = [0] * n
    k = 0
    data = s[pos:]
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


# -- distances ------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    rows = g.rows
    while queue:
        v = queue.popleft()
        for w in _bits(rows[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances as a read-only ``int64`` array.

    Raises DisconnectedGraphError naming an unreachable pair.
    """
    n = g.n
    d = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        row = bfs_distances(g, s)
        for t, x in enumerate(row):
            if x < 0:
                raise DisconnectedGraphError(s, t)
        d[s] = row
    d.setflags(write=False)
    return d


def require_connected(g: Graph) -> None:
    comps = g.components()
    if len(comps) > 1:
        raise DisconnectedGraphError(comps[0][0], comps[1][0])


def cyclomatic_number(g: Graph) -> int:
    require_connected(g)
    return g.m - g.n + 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``total``, in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)
