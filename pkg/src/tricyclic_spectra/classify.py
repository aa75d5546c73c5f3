"""Structural decision procedure for lambda_2 < -1/2 on connected tricyclic graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .families import FamilySpec, enumerate_family_members, forbidden_graph
from .graph_core import Graph, cyclomatic_number, distance_matrix
from .spectra import lambda2
from .structure import base_of, block_decomposition, is_chordal
from .subgraph import Occurrence, canonical_form, find_distance_preserving_induced

BOUNDARY_FACTOR = 100
DEFAULT_TOL = 1e-9

NOT_CHORDAL = "not_chordal"
NON_TRIANGLE_CYCLE = "non_triangle_cycle"
BASE_TYPE_EXCLUDED = "base_type_excluded"
FORBIDDEN_SUBGRAPH = "forbidden_subgraph"
NO_FAMILY_MATCH = "no_family_match"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    witness: FamilySpec | None = None
    reject_reason: str | None = None
    forbidden_index: int | None = None
    lambda2: float | None = None
    agreement: bool | None = None
    boundary_suspect: bool = False
    in_scope: bool = True

    def __post_init__(self):
        if self.accepted and self.witness is None:
            raise ValueError("an accepted verdict needs a witness")
        if not self.accepted and self.reject_reason is None:
            raise ValueError("a rejected verdict needs a reason")

    @property
    def reason_text(self) -> str | None:
        if self.reject_reason == FORBIDDEN_SUBGRAPH:
            return f"{FORBIDDEN_SUBGRAPH}(F{self.forbidden_index})"
        return self.reject_reason

    def to_json(self) -> dict:
        out = {
            "accepted": self.accepted,
            "witness": self.witness.to_json() if self.witness else None,
            "reject_reason": self.reason_text,
            "in_scope": self.in_scope,
        }
        if self.lambda2 is not None:
            out["lambda2"] = float(f"{self.lambda2:.12g}")
            out["agreement"] = self.agreement
            out["boundary_suspect"] = self.boundary_suspect
        return out


def scan_forbidden(g: Graph, first_only: bool = False) -> list[tuple[int, Occurrence]]:
    """Every F_i (i = 1..13) occurring as a distance-preserving induced subgraph,
    one witness occurrence each, sorted by pattern index.

    Patterns are tried smallest first; with ``first_only`` the scan stops at
    the first hit in that order.
    """
    d = distance_matrix(g)
    patterns = sorted(range(1, 14), key=lambda i: (forbidden_graph(i).n, i))
    hits = []
    for i in patterns:
        occ = find_distance_preserving_induced(g, forbidden_graph(i), host_dist=d, first_only=True)
        if occ:
            hits.append((i, occ[0]))
            if first_only:
                break
    hits.sort(key=lambda h: h[0])
    return hits


@lru_cache(maxsize=64)
def _family_index(n: int) -> dict:
    return {canonical_form(g): spec for spec, g in enumerate_family_members(n)}


def _has_large_nondiamond_block(base: Graph) -> bool:
    """A block of the base that is neither K2, K3 nor a diamond (K4 minus an edge).

    Every family base is built from triangles, diamonds and bridges, so such a
    block rules the graph out; in a chordal graph it also means the block holds
    a cycle longer than a triangle that is not the outer 4-cycle of a diamond.
    """
    for b in block_decomposition(base).blocks:
        if len(b) <= 3:
            continue
        if len(b) == 4:
            sub = base.induced(b)
            if sub.m == 5:
                continue
        return True
    return False


def classify_tricyclic(g: Graph) -> Verdict:
    c = cyclomatic_number(g)
    if c != 3:
        raise DomainError(
            f"graph is not tricyclic (cyclomatic number {c}); "
            "use the block-graph classifier or another tool for this class"
        )
    if not is_chordal(g):
        return Verdict(False, reject_reason=NOT_CHORDAL)
    base = base_of(g)
    if base.n == 4 and base.m == 6:
        # K4 base: outside the scope of the four families' theorem
        return Verdict(False, reject_reason=BASE_TYPE_EXCLUDED, in_scope=False)
    if _has_large_nondiamond_block(base):
        return Verdict(False, reject_reason=NON_TRIANGLE_CYCLE)
    hits = scan_forbidden(g, first_only=True)
    if hits:
        return Verdict(False, reject_reason=FORBIDDEN_SUBGRAPH, forbidden_index=hits[0][0])
    spec = _family_index(g.n).get(canonical_form(g))
    if spec is None:
        return Verdict(False, reject_reason=NO_FAMILY_MATCH)
    return Verdict(True, witness=spec)


def verify_against_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Verdict:
    v = classify_tricyclic(g)
    lam = lambda2(g)
    spectral = lam < -0.5 - tol
    return Verdict(
        v.accepted, v.witness, v.reject_reason, v.forbidden_index,
        lambda2=lam,
        agreement=(v.accepted == spectral),
        boundary_suspect=abs(lam + 0.5) < BOUNDARY_FACTOR * tol,
        in_scope=v.in_scope,
    )


__all__ = ["Verdict", "classify_tricyclic", "verify_against_spectrum", "scan_forbidden"]
