"""Distance spectra, quotient matrices of partitions and exact characteristic polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import ContractViolation, DomainError, NumericalError, PartitionError
from .graph_core import Graph, distance_matrix

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
GROUP_TOL = 1e-7
INTERLACE_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the tolerance used to group them."""

    values: tuple[float, ...]
    tol: float = GROUP_TOL

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        return multiplicity(self, value, self.tol if tol is None else tol)

    def to_json(self) -> list[float]:
        return [_round_sig(x) for x in self.values]


def _round_sig(x: float, digits: int = 12) -> float:
    y = float(f"{x:.{digits}g}")
    return 0.0 if y == 0 else y


def eigenvalues_symmetric(a, tol: float = JACOBI_TOL, group_tol: float = GROUP_TOL,
                          max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once every off-diagonal magnitude is below ``tol * ||a||_F``.
    """
    A = np.array(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ContractViolation(f"expected a nonempty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ContractViolation("matrix has non-finite entries")
    asym = np.max(np.abs(A - A.T))
    if asym > 1e-12:
        raise ContractViolation(f"matrix is not symmetric (max |a - a^T| = {asym:.3g})")
    A = (A + A.T) / 2
    n = A.shape[0]
    threshold = tol * np.linalg.norm(A)
    for _ in range(max_sweeps + 1):
        off = np.abs(A - np.diag(np.diag(A)))
        if off.max() <= threshold:
            vals = sorted(np.diag(A).tolist(), reverse=True)
            return Spectrum(tuple(vals), group_tol)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= threshold * 1e-3:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q]
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :]
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    raise NumericalError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def distance_spectrum(g: Graph, group_tol: float = GROUP_TOL) -> Spectrum:
    return eigenvalues_symmetric(distance_matrix(g), group_tol=group_tol)


def lambda2(g: Graph) -> float:
    """Second largest distance eigenvalue of a connected graph."""
    if g.n < 2:
        raise DomainError("lambda2 needs at least two vertices")
    return distance_spectrum(g).values[1]


def multiplicity(s: Spectrum, value: float, tol: float = GROUP_TOL) -> int:
    return sum(1 for x in s.values if abs(x - value) <= tol)


def interlacing_holds(g: Graph, subset: Iterable[int], tol: float = INTERLACE_TOL) -> bool:
    """Check Cauchy interlacing between D(g) and its principal submatrix on ``subset``."""
    idx = sorted(set(subset))
    if not idx:
        raise ContractViolation("subset must be nonempty")
    d = distance_matrix(g)
    full = distance_spectrum(g).values
    sub = eigenvalues_symmetric(d[np.ix_(idx, idx)]).values
    n, m = len(full), len(sub)
    return all(full[i] + tol >= sub[i] >= full[n - m + i] - tol for i in range(m))


# -- partitions and quotients ------------------------------------------------

@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> Partition:
        return cls(tuple(tuple(c) for c in cells))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(tuple((v,) for v in range(n)))

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for k, cell in enumerate(self.cells):
            if not cell:
                raise PartitionError(f"cell {k} is empty")
            for v in cell:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} in cell {k} is outside 0..{n - 1}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in more than one cell")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise PartitionError(f"cells do not cover vertices {missing}")


@dataclass(frozen=True)
class QuotientMatrix:
    b: tuple[tuple[Fraction, ...], ...]
    equitable: bool
    sizes: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.b)

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.b])

    def eigenvalues(self) -> Spectrum:
        """Eigenvalues via the symmetric matrix diag(s)^1/2 B diag(s)^-1/2 similar to B."""
        root = np.sqrt(np.array(self.sizes, dtype=float))
        sym = self.as_float() * root[:, None] / root[None, :]
        return eigenvalues_symmetric((sym + sym.T) / 2)

    def as_int_rows(self) -> list[list[int | Fraction]]:
        return [[int(x) if x.denominator == 1 else x for x in row] for row in self.b]


def _exact(x) -> Fraction:
    if isinstance(x, (Fraction, int, np.integer)):
        return Fraction(int(x)) if not isinstance(x, Fraction) else x
    f = float(x)
    if f.is_integer():
        return Fraction(int(f))
    return Fraction(f)


def quotient_matrix(a, p: Partition) -> QuotientMatrix:
    """Average-row-sum quotient of ``a`` with respect to ``p``, in exact rationals."""
    A = np.asarray(a)
    n = A.shape[0]
    p.validate(n)
    rows = []
    equitable = True
    for ci in p.cells:
        row = []
        for cj in p.cells:
            sums = [sum((_exact(A[u, v]) for v in cj), Fraction(0)) for u in ci]
            if any(s != sums[0] for s in sums):
                equitable = False
            row.append(sum(sums, Fraction(0)) / len(ci))
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), equitable, tuple(len(c) for c in p.cells))


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial; ``coeffs`` run from the leading term down to the constant."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise DomainError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            e = d - k
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if mag == 1 and e > 0 else str(mag)
            var = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            terms.append(f"{sign} {body}{var}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(q: QuotientMatrix | Sequence[Sequence]) -> IntPolynomial:
    """det(xI - Q) by the Faddeev-LeVerrier recurrence over the rationals."""
    rows = q.b if isinstance(q, QuotientMatrix) else q
    M = [[_exact(x) for x in row] for row in rows]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ContractViolation("quotient matrix must be square")
    coeffs = [Fraction(1)]
    # N_k = M (N_{k-1} + c_{k-1} I), c_k = -tr(N_k)/k
    N = [[Fraction(0)] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        P = [[N[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        N = [[sum(M[i][t] * P[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c_prev = -sum(N[i][i] for i in range(n)) / k
        coeffs.append(c_prev)
    return IntPolynomial(tuple(coeffs))


def quotient_spectrum_contained(a, p: Partition, tol: float = 1e-7) -> bool:
    """Each eigenvalue of the quotient lies within ``tol`` of an eigenvalue of ``a``."""
    q = quotient_matrix(a, p)
    full = np.array(eigenvalues_symmetric(a).values)
    return all(np.min(np.abs(full - mu)) <= tol for mu in q.eigenvalues().values)
