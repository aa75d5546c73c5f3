import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tricyclic_spectra import (
    ContractViolation, DomainError, NumericalError, Partition, PartitionError, char_poly,
    distance_matrix, distance_spectrum, eigenvalues_symmetric, generate, interlacing_holds,
    lambda2, multiplicity, parse_spec, quotient_matrix, quotient_spectrum_contained,
    t3_partition, t4_partition,
)
from tricyclic_spectra.spectra import IntPolynomial

from conftest import complete_graph, cycle_graph, path_graph, random_connected, star_graph


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_jacobi_matches_lapack(n, seed):
    r = np.random.default_rng(seed)
    a = r.normal(size=(n, n))
    a = a + a.T
    ours = np.array(eigenvalues_symmetric(a).values)
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    assert np.allclose(ours, ref, atol=1e-10 * max(1.0, np.linalg.norm(a)))


def test_jacobi_on_distance_matrices(rng):
    for _ in range(30):
        g = random_connected(rng, rng.randint(2, 25), p=0.1)
        d = distance_matrix(g)
        ours = np.array(distance_spectrum(g).values)
        ref = np.sort(np.linalg.eigvalsh(d.astype(float)))[::-1]
        assert np.max(np.abs(ours - ref)) < 1e-9


def test_k4_spectrum():
    assert distance_spectrum(complete_graph(4)).values == pytest.approx((3, -1, -1, -1), abs=1e-12)


def test_known_lambda2_values():
    assert lambda2(path_graph(3)) == pytest.approx(1 - math.sqrt(3), abs=1e-12)
    assert lambda2(complete_graph(3)) == pytest.approx(-1, abs=1e-12)
    # D(K_{1,3}): 2 +- sqrt(7) on the quotient, -2 twice on leaf differences
    vals = distance_spectrum(star_graph(3)).values
    assert vals == pytest.approx((2 + math.sqrt(7), 2 - math.sqrt(7), -2, -2), abs=1e-12)


def test_contract_violations():
    with pytest.raises(ContractViolation):
        eigenvalues_symmetric([[0, 1], [0, 0]])
    with pytest.raises(ContractViolation):
        eigenvalues_symmetric(np.zeros((2, 3)))
    with pytest.raises(ContractViolation):
        eigenvalues_symmetric([[float("nan")]])
    with pytest.raises(DomainError):
        lambda2(path_graph(1))


def test_nonconvergence_is_reported():
    a = np.random.default_rng(1).normal(size=(8, 8))
    with pytest.raises(NumericalError):
        eigenvalues_symmetric(a + a.T, max_sweeps=0)


def test_multiplicity_and_json():
    s = distance_spectrum(complete_graph(5))
    assert multiplicity(s, -1.0) == 4
    assert s.multiplicity(4.0) == 1
    assert s.to_json() == [4.0, -1.0, -1.0, -1.0, -1.0]


def test_interlacing_random_subsets(rng):
    for _ in range(40):
        g = random_connected(rng, rng.randint(3, 10))
        k = rng.randint(1, g.n)
        assert interlacing_holds(g, rng.sample(range(g.n), k))


def test_partition_validation():
    Partition.of([[0, 1], [2]]).validate(3)
    for cells in ([[0], [0, 1, 2]], [[0], [1]], [[0, 5], [1, 2]], [[], [0, 1, 2]]):
        with pytest.raises(PartitionError):
            Partition.of(cells).validate(3)


def test_t3_quotient_at_k1():
    g = generate(parse_spec("t3 1"))
    q = quotient_matrix(distance_matrix(g), t3_partition(1))
    assert q.equitable
    assert q.as_int_rows() == [[0, 3, 3, 1], [1, 4, 5, 2], [1, 5, 4, 2], [1, 6, 6, 0]]
    p = char_poly(q)
    assert p.integer_coeffs() == [1, -8, -40, -46, -15]
    assert str(p) == "x^4 - 8x^3 - 40x^2 - 46x - 15"
    assert p(Fraction(-1, 2)) == Fraction(-15, 16)


def test_non_equitable_quotient_is_flagged():
    g = path_graph(4)
    q = quotient_matrix(distance_matrix(g), Partition.of([[0, 1], [2, 3]]))
    assert not q.equitable


def test_char_poly_matches_numpy(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        ours = [float(c) for c in char_poly(m).coeffs]
        assert np.allclose(ours, np.poly(np.array(m, dtype=float)), atol=1e-6)


def test_polynomial_formatting():
    assert str(IntPolynomial((Fraction(1), Fraction(0), Fraction(-1)))) == "x^2 - 1"
    assert str(IntPolynomial((Fraction(1), Fraction(1, 2)))) == "x + 1/2"
    with pytest.raises(DomainError):
        IntPolynomial((Fraction(1), Fraction(1, 2))).integer_coeffs()


def test_quotient_spectrum_contained_for_standard_partitions():
    for k in range(0, 6):
        g = generate(parse_spec(f"t3 {k}"))
        assert quotient_spectrum_contained(distance_matrix(g), t3_partition(k))
        g = generate(parse_spec(f"t4 {k}"))
        assert quotient_spectrum_contained(distance_matrix(g), t4_partition(k))


def test_quotient_of_cycle_by_rotation_orbits():
    # the two color classes of C6 form an equitable partition of D(C6)
    g = cycle_graph(6)
    p = Partition.of([[0, 2, 4], [1, 3, 5]])
    q = quotient_matrix(distance_matrix(g), p)
    assert q.equitable
    assert q.as_int_rows() == [[4, 5], [5, 4]]
    assert quotient_spectrum_contained(distance_matrix(g), p)
