"""Exhaustive enumeration of small connected graphs and the verification harness."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .classify import verify_against_spectrum
from .errors import ResourceGuardError
from .graph_core import Graph, _bits
from .spectra import lambda2
from .structure import blockgraph_lambda2_below, is_block_graph, is_chordal
from .subgraph import CanonicalForm, canonical_form

log = logging.getLogger(__name__)

TRICYCLIC_MAX_N = 9
UNRESTRICTED_MAX_N = 7
BLOCKGRAPH_MAX_N = 7
BOUNDARY_TOL = 1e-7


def check_guard(n: int, m: int | None, allow_large: bool = False) -> None:
    if allow_large:
        return
    if m is not None and m == n + 2:
        if n > TRICYCLIC_MAX_N:
            raise ResourceGuardError(
                f"tricyclic enumeration is limited to n <= {TRICYCLIC_MAX_N} (got n={n}); use allow_large (CLI: --allow-large) to override")
    elif n > UNRESTRICTED_MAX_N:
        raise ResourceGuardError(
            f"enumeration is limited to n <= {UNRESTRICTED_MAX_N} (got n={n}); use allow_large (CLI: --allow-large) to override")


# -- vertex augmentation -----------------------------------------------------------

def _augment(n: int, m: int | None) -> dict[CanonicalForm, Graph]:
    # Every connected graph on k+1 vertices has a non-cut vertex, so it arises
    # from a connected k-vertex graph by adding one vertex with a nonempty
    # neighborhood.  Edge budgets prune the intermediate levels.
    level = {canonical_form(Graph.empty(1)): Graph.empty(1)}
    for k in range(1, n):
        cap = None if m is None else m - (n - k - 1)
        nxt: dict[CanonicalForm, Graph] = {}
        for g in level.values():
            for mask in range(1, 1 << k):
                if cap is not None and g.m + mask.bit_count() > cap:
                    continue
                cf = canonical_form(g.add_vertex(_bits(mask)))
                if cf not in nxt:
                    nxt[cf] = cf.graph()
        level = nxt
    return level


# -- edge subsets in colex order ------------------------------------------------------

@dataclass(frozen=True)
class EnumerationJob:
    """Colex rank range ``[start, stop)`` of ``m``-edge subsets of K_n."""

    n: int
    m: int
    start: int
    stop: int


def _colex_unrank(rank: int, k: int) -> list[int]:
    out = [0] * k
    for i in range(k, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= rank:
            c += 1
        out[i - 1] = c
        rank -= math.comb(c, i)
    return out


def _colex_next(c: list[int], universe: int) -> bool:
    k = len(c)
    for i in range(k):
        limit = c[i + 1] if i + 1 < k else universe
        if c[i] + 1 < limit:
            c[i] += 1
            for j in range(i):
                c[j] = j
            return True
    return False


def make_jobs(n: int, m: int, chunks: int) -> list[EnumerationJob]:
    total = math.comb(n * (n - 1) // 2, m)
    chunks = max(1, min(chunks, total or 1))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    return [EnumerationJob(n, m, bounds[i], bounds[i + 1]) for i in range(chunks) if bounds[i] < bounds[i + 1]]


def run_job(job: EnumerationJob) -> list[str]:
    """Canonical graph6 strings of connected graphs in the job's rank range."""
    n, m = job.n, job.m
    pairs = list(combinations(range(n), 2))
    bits = [(1 << u | 1 << v, u, v) for u, v in pairs]
    full = (1 << n) - 1
    found: set[str] = set()
    if m == 0:
        if n == 1 and job.start == 0:
            found.add(canonical_form(Graph.empty(1)).text)
        return sorted(found)
    c = _colex_unrank(job.start, m)
    for _ in range(job.stop - job.start):
        rows = [0] * n
        cover = 0
        for idx in c:
            both, u, v = bits[idx]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            cover |= both
        if cover == full or n == 1:
            # connectivity by frontier expansion
            comp = 1
            frontier = 1
            while frontier:
                nb = 0
                for x in _bits(frontier):
                    nb |= rows[x]
                frontier = nb & ~comp
                comp |= frontier
            if comp == full:
                found.add(canonical_form.__wrapped__(Graph(n, rows)).text)
        if not _colex_next(c, len(pairs)):
            break
    return sorted(found)


def _edge_subsets(n: int, m: int | None, jobs: int) -> dict[CanonicalForm, Graph]:
    edge_counts = [m] if m is not None else range(n - 1, n * (n - 1) // 2 + 1)
    work = []
    for mm in edge_counts:
        if mm < n - 1 or mm > n * (n - 1) // 2:
            continue
        work += make_jobs(n, mm, max(1, jobs) * 4)
    texts: set[str] = set()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(run_job, work):
                texts.update(part)
    else:
        for job in work:
            texts.update(run_job(job))
    return {CanonicalForm(t): CanonicalForm(t).graph() for t in texts}


def enumerate_connected(n: int, m: int | None = None, *, method: str = "augment",
                        jobs: int = 1, allow_large: bool = False) -> list[Graph]:
    """One canonical representative per connected isomorphism class on ``n`` vertices
    (with ``m`` edges if given), sorted by canonical graph6 string."""
    if n < 1:
        return []
    check_guard(n, m, allow_large)
    if method == "augment":
        found = _augment(n, m)
    elif method == "edges":
        found = _edge_subsets(n, m, jobs)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    return [found[k] for k in sorted(found) if m is None or found[k].m == m]


# -- reports ------------------------------------------------------------------------

@dataclass
class VerificationReport:
    n: int
    total_graphs: int = 0
    accepted: int = 0
    spectral_positive: int = 0
    disagreements: list[str] = field(default_factory=list)
    boundary_suspects: list[str] = field(default_factory=list)
    out_of_scope: list[str] = field(default_factory=list)
    chordal_counts: dict[str, int] = field(default_factory=lambda: {"chordal": 0, "non_chordal": 0})
    chordality_exceptions: list[str] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def confirmed(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        out = asdict(self)
        out["runtime"] = round(self.runtime, 3)
        return out


def _verify_one(text: str, tol: float):
    g = CanonicalForm(text).graph()
    v = verify_against_spectrum(g, tol)
    return text, v.accepted, v.lambda2, v.agreement, v.boundary_suspect, v.in_scope, is_chordal(g)


def theorem_check(n_max: int, *, tol: float = 1e-9, jobs: int = 1, method: str = "augment",
                  allow_large: bool = False) -> list[VerificationReport]:
    """Classify every connected tricyclic class with n <= ``n_max`` and compare with lambda_2."""
    check_guard(n_max, n_max + 2, allow_large)
    reports = []
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        rep = VerificationReport(n)
        graphs = enumerate_connected(n, n + 2, method=method, jobs=jobs, allow_large=allow_large) if n >= 4 else []
        texts = [str(canonical_form(g)) for g in graphs]
        if jobs > 1 and len(texts) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                rows = list(ex.map(_verify_one, texts, [tol] * len(texts), chunksize=16))
        else:
            rows = [_verify_one(t, tol) for t in texts]
        for text, accepted, lam, agree, boundary, in_scope, chordal in rows:
            rep.total_graphs += 1
            spectral = lam < -0.5 - tol
            rep.accepted += accepted
            rep.spectral_positive += spectral
            rep.chordal_counts["chordal" if chordal else "non_chordal"] += 1
            if spectral and not chordal:
                rep.chordality_exceptions.append(text)
            if boundary:
                rep.boundary_suspects.append(text)
            if not in_scope:
                rep.out_of_scope.append(text)
            elif not agree:
                rep.disagreements.append(text)
        rep.runtime = time.perf_counter() - t0
        log.info("n=%d: %d classes, %d accepted, %d disagreements", n, rep.total_graphs,
                 rep.accepted, len(rep.disagreements))
        reports.append(rep)
    return reports


def blockgraph_check(n_max: int, *, allow_large: bool = False) -> VerificationReport:
    """Block-graph criterion versus lambda_2 over every connected block graph with 2 <= n <= ``n_max``."""
    if n_max > BLOCKGRAPH_MAX_N and not allow_large:
        raise ResourceGuardError(f"block-graph check is limited to n <= {BLOCKGRAPH_MAX_N}")
    t0 = time.perf_counter()
    rep = VerificationReport(n_max)
    for n in range(2, n_max + 1):
        for g in enumerate_connected(n, allow_large=allow_large):
            if not is_block_graph(g):
                continue
            rep.total_graphs += 1
            text = str(canonical_form(g))
            lam = lambda2(g)
            spectral = lam < -0.5
            decided = blockgraph_lambda2_below(g)
            rep.accepted += decided
            rep.spectral_positive += spectral
            rep.chordal_counts["chordal"] += 1
            if abs(lam + 0.5) < BOUNDARY_TOL:
                rep.boundary_suspects.append(text)
            elif decided != spectral:
                rep.disagreements.append(text)
    rep.runtime = time.perf_counter() - t0
    return rep
