"""Generators for the named graphs: forbidden graphs F1..F13, the tricyclic
families T(s,t;h1..h5), T3^k, T4^t, T5, T6, T7, the bases T1(s,t), T2(p,q),
and the block graphs BG(p,q,3,2,2) and BGA.

Every generator uses a fixed, documented vertex labeling so that graph6
output is reproducible byte for byte.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ParameterError
from .graph_core import Graph, compositions, distance_matrix
from .spectra import IntPolynomial, Partition, QuotientMatrix, quotient_matrix

log = logging.getLogger(__name__)


class Family(str, enum.Enum):
    T_GENERAL = "t-general"
    T3 = "t3"
    T4 = "t4"
    T5 = "t5"
    T6 = "t6"
    T7 = "t7"
    T1_BASE = "t1"
    T2_BASE = "t2"
    F = "f"
    BG = "bg"
    BGA = "bga"


# number of integer parameters and their lower bounds
_ARITY = {
    Family.T_GENERAL: (7, 0),
    Family.T3: (1, 0),
    Family.T4: (1, 0),
    Family.T5: (0, 0),
    Family.T6: (0, 0),
    Family.T7: (0, 0),
    Family.T1_BASE: (2, 0),
    Family.T2_BASE: (2, 0),
    Family.F: (1, 1),
    Family.BG: (2, 2),
    Family.BGA: (0, 0),
}

THEOREM_FAMILIES = (Family.T_GENERAL, Family.T3, Family.T4, Family.T5, Family.T6, Family.T7)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...] = ()

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity, low = _ARITY[fam]
        if len(self.params) != arity:
            raise ParameterError(f"{fam.value} takes {arity} parameter(s), got {len(self.params)}")
        if any(p < low for p in self.params):
            raise ParameterError(f"{fam.value} parameters must be >= {low}, got {self.params}")
        if fam is Family.F and self.params[0] > 13:
            raise ParameterError(f"forbidden graph index must be in 1..13, got {self.params[0]}")

    def __str__(self) -> str:
        return " ".join([self.family.value, *map(str, self.params)])

    def to_json(self) -> dict:
        return {"family": self.family.value, "params": list(self.params)}


def parse_spec(tokens: list[str] | str) -> FamilySpec:
    """Parse ``"t-general 1 0 2 0 0 0 1"``, ``"t3 4"``, ``"f 11"``, ``"bga"`` and friends."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    if not tokens:
        raise ParameterError("empty family specification")
    try:
        fam = Family(tokens[0].lower())
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise ParameterError(f"unknown family {tokens[0]!r}; expected one of {names}") from None
    try:
        params = tuple(int(t) for t in tokens[1:])
    except ValueError:
        raise ParameterError(f"non-integer parameter in {' '.join(tokens)!r}") from None
    return FamilySpec(fam, params)


# Transcribed from the reference drawings; vertex k is the k-th drawn node.
FORBIDDEN_EDGES: dict[int, tuple[int, list[tuple[int, int]]]] = {
    1: (6, [(0, 1), (1, 2), (0, 3), (0, 5), (0, 4)]),
    2: (6, [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5)]),
    3: (6, [(0, 5), (0, 1), (0, 2), (1, 3), (2, 4)]),
    4: (7, [(0, 1), (1, 3), (3, 5), (0, 2), (2, 6), (2, 4)]),
    5: (6, [(0, 1), (1, 3), (1, 2), (0, 4), (0, 5), (4, 5)]),
    6: (7, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6), (3, 4)]),
    7: (7, [(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 5), (4, 6)]),
    8: (7, [(0, 1), (0, 2), (0, 5), (0, 6), (1, 3), (1, 4), (1, 2), (5, 6)]),
    9: (5, [(0, 4), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    10: (6, [(0, 1), (0, 4), (0, 3), (0, 5), (1, 2), (3, 5), (4, 5)]),
    11: (5, [(0, 1), (0, 2), (0, 4), (0, 3), (1, 4), (3, 4), (3, 2)]),
    12: (5, [(0, 1), (0, 2), (0, 4), (0, 3), (1, 3), (3, 4), (3, 2)]),
    13: (6, [(0, 1), (0, 2), (0, 4), (0, 3), (1, 3), (3, 4), (3, 2), (1, 5), (2, 5), (1, 2)]),
}

# lambda_2 values printed under each forbidden graph (4 decimals)
FORBIDDEN_LAMBDA2 = {
    1: -0.4727, 2: -0.4384, 3: -0.4754, 4: -0.4943, 5: -0.4931, 6: -0.4917, 7: -0.4934,
    8: -0.4931, 9: -0.4521, 10: -0.4807, 11: -0.3820, 12: -0.3723, 13: -0.2679,
}

T5_EDGES = (9, [(0, 1), (0, 4), (1, 3), (1, 2), (2, 3), (0, 7), (4, 7), (4, 8), (4, 5), (4, 6), (5, 6)])
T6_EDGES = (8, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (4, 5), (4, 7), (3, 4)])
T7_EDGES = (7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (4, 5), (4, 6), (3, 4)])
BGA_EDGES = (9, [(0, 1), (0, 2), (2, 6), (2, 7), (2, 3), (1, 5), (1, 8), (1, 4), (8, 5), (6, 7)])


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def triangle(self, a: int | None = None) -> tuple[int, int, int]:
        a = self.vertex() if a is None else a
        b, c = self.vertex(), self.vertex()
        self.edges += [(a, b), (a, c), (b, c)]
        return a, b, c

    def path(self, start: int, length: int) -> int:
        """Grow a path of ``length`` new edges from ``start``; return its far end."""
        cur = start
        for _ in range(length):
            nxt = self.vertex()
            self.edges.append((cur, nxt))
            cur = nxt
        return cur

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _t_general(s, t, h1, h2, h3, h4, h5) -> Graph:
    """Labels: left triangle u1,u2,p0 = 0,1,2; path interior; middle triangle
    (p_s, apex u3, q_0); path interior; right triangle (q_t, u4, u5); then the
    pendant paths at u1..u5 in that order."""
    b = _Builder()
    u1, u2, p0 = b.vertex(), b.vertex(), b.vertex()
    b.edges += [(u1, u2), (u1, p0), (u2, p0)]
    ps = b.path(p0, s)
    _, u3, q0 = b.triangle(ps)
    qt = b.path(q0, t)
    _, u4, u5 = b.triangle(qt)
    for u, h in zip((u1, u2, u3, u4, u5), (h1, h2, h3, h4, h5)):
        b.path(u, h)
    return b.graph()


def _t2_base(p, q) -> Graph:
    """Triangles x, y, z with a path of length p from x3 to y1 and one of length q
    from y1 to z1.  Labels: x1, x2, x3, the x-path interior, y1, y2, y3, the
    z-path interior, then z1, z2, z3 (z1 is y1 when q = 0)."""
    b = _Builder()
    _, _, x3 = b.triangle()
    y1 = b.path(x3, p)
    b.triangle(y1)
    z1 = b.path(y1, q)
    b.triangle(z1)
    return b.graph()


def _t3(k: int) -> Graph:
    """Center 0; triangles (0,1,2), (0,3,4), (0,5,6); pendant vertices 7..6+k at 0."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)]
    edges += [(0, 7 + i) for i in range(k)]
    return Graph.from_edges(7 + k, edges)


def _t4(t: int) -> Graph:
    """Center 0; triangle (0,1,2); diamond on 0,3,4,5 with shared edge 0-5
    (3 and 4 are its non-adjacent tips); pendant vertices 6..5+t at 0."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (3, 5), (4, 5)]
    edges += [(0, 6 + i) for i in range(t)]
    return Graph.from_edges(6 + t, edges)


def _bg(p: int, q: int) -> Graph:
    """K_p on 0..p-1 and K_q on p..p+q-1 joined by the bridge (p-1, p); a triangle
    (0, p+q, p+q+1) and a pendant edge (0, p+q+2) hang at vertex 0."""
    edges = list(combinations(range(p), 2)) + list(combinations(range(p, p + q), 2))
    base = p + q
    edges += [(p - 1, p), (0, base), (0, base + 1), (base, base + 1), (0, base + 2)]
    return Graph.from_edges(base + 3, edges)


def generate(spec: FamilySpec) -> Graph:
    fam, prm = spec.family, spec.params
    if fam is Family.T_GENERAL:
        return _t_general(*prm)
    if fam is Family.T1_BASE:
        return _t_general(prm[0], prm[1], 0, 0, 0, 0, 0)
    if fam is Family.T2_BASE:
        return _t2_base(*prm)
    if fam is Family.T3:
        return _t3(prm[0])
    if fam is Family.T4:
        return _t4(prm[0])
    if fam is Family.T5:
        return Graph.from_edges(*T5_EDGES)
    if fam is Family.T6:
        return Graph.from_edges(*T6_EDGES)
    if fam is Family.T7:
        return Graph.from_edges(*T7_EDGES)
    if fam is Family.F:
        return Graph.from_edges(*FORBIDDEN_EDGES[prm[0]])
    if fam is Family.BG:
        return _bg(*prm)
    if fam is Family.BGA:
        return Graph.from_edges(*BGA_EDGES)
    raise ParameterError(f"unhandled family {fam}")


def forbidden_graph(i: int) -> Graph:
    return generate(FamilySpec(Family.F, (i,)))


def t3_partition(k: int) -> Partition:
    """Cells {v}, {v1,u1,w1}, {v2,u2,w2}, pendants for the T3^k labeling."""
    cells = [[0], [1, 3, 5], [2, 4, 6]]
    if k:
        cells.append(list(range(7, 7 + k)))
    return Partition.of(cells)


def t4_partition(t: int) -> Partition:
    """Cells {v}, {v1,v2}, {u1,u3}, {u2}, pendants for the T4^t labeling."""
    cells = [[0], [1, 2], [3, 4], [5]]
    if t:
        cells.append(list(range(6, 6 + t)))
    return Partition.of(cells)


def expected_quotient_poly(family: Family | str, k: int) -> IntPolynomial:
    """Closed-form characteristic polynomial of the equitable quotient of D(T3^k) or D(T4^k)."""
    family = Family(family)
    if family is Family.T3:
        c = (1, -(2 * k + 6), -(9 * k + 31), -(10 * k + 36), -(3 * k + 12))
    elif family is Family.T4:
        c = (1, -(2 * k + 1), -(15 * k + 35), -(35 * k + 91), -(26 * k + 76), -(6 * k + 20))
    else:
        raise ParameterError("closed-form quotient polynomials exist for t3 and t4 only")
    return IntPolynomial(tuple(Fraction(x) for x in c))


def quotient_of(family: Family | str, k: int) -> QuotientMatrix:
    """Exact quotient of D(T3^k) or D(T4^k) under the standard equitable partition."""
    family = Family(family)
    if family is Family.T3:
        g, part = generate(FamilySpec(family, (k,))), t3_partition(k)
    elif family is Family.T4:
        g, part = generate(FamilySpec(family, (k,))), t4_partition(k)
    else:
        raise ParameterError("standard partitions exist for t3 and t4 only")
    return quotient_matrix(distance_matrix(g), part)


def family_specs(n: int) -> list[FamilySpec]:
    """Every theorem-family parameter choice giving exactly ``n`` vertices (with repeats)."""
    specs = []
    if n >= 7:
        specs += [FamilySpec(Family.T_GENERAL, c) for c in compositions(n - 7, 7)]
        specs.append(FamilySpec(Family.T3, (n - 7,)))
    if n >= 6:
        specs.append(FamilySpec(Family.T4, (n - 6,)))
    fixed = {9: Family.T5, 8: Family.T6, 7: Family.T7}
    if n in fixed:
        specs.append(FamilySpec(fixed[n]))
    return specs


def enumerate_family_members(n: int) -> list[tuple[FamilySpec, Graph]]:
    """Theorem-family members on ``n`` vertices, one per isomorphism class.

    The first spec (in ``family_specs`` order) is kept as the witness; later
    specs landing in an already seen class from a different family are logged.
    """
    from .subgraph import canonical_form

    seen: dict = {}
    out = []
    for spec in family_specs(n):
        g = generate(spec)
        key = canonical_form(g)
        if key in seen:
            prev = seen[key]
            if prev.family is not spec.family:
                log.info("family overlap: %s is isomorphic to %s", spec, prev)
            continue
        seen[key] = spec
        out.append((spec, g))
    return out
