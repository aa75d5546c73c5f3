import pytest

from tricyclic_spectra import (
    Family, FamilySpec, ParameterError, canonical_form, cyclomatic_number, enumerate_family_members,
    forbidden_graph, generate, is_isomorphic, lambda2, parse_spec,
)
from tricyclic_spectra.families import family_specs

REFERENCE_LAMBDA2 = [-0.4727, -0.4384, -0.4754, -0.4943, -0.4931, -0.4917, -0.4934,
                 -0.4931, -0.4521, -0.4807, -0.3820, -0.3723, -0.2679]


@pytest.mark.parametrize("i, value", list(enumerate(REFERENCE_LAMBDA2, start=1)))
def test_forbidden_lambda2(i, value):
    g = forbidden_graph(i)
    assert g.is_connected()
    assert lambda2(g) == pytest.approx(value, abs=5e-5)
    assert lambda2(g) >= -0.5


def test_forbidden_index_range():
    with pytest.raises(ParameterError):
        forbidden_graph(14)
    with pytest.raises(ParameterError):
        forbidden_graph(0)


@pytest.mark.parametrize("text, n", [
    ("t-general 0 0 0 0 0 0 0", 7), ("t-general 2 3 1 0 2 0 1", 16), ("t3 0", 7), ("t3 5", 12),
    ("t4 0", 6), ("t4 3", 9), ("t5", 9), ("t6", 8), ("t7", 7), ("t1 0 0", 7), ("t2 0 0", 7),
    ("t2 1 2", 10), ("bg 2 2", 7), ("bg 4 3", 10), ("bga", 9),
])
def test_sizes(text, n):
    g = generate(parse_spec(text))
    assert g.n == n
    assert g.is_connected()


@pytest.mark.parametrize("text", ["t-general 1 0 2 0 0 0 1", "t3 2", "t4 4", "t5", "t6", "t7",
                                  "t1 2 1", "t2 1 1"])
def test_theorem_families_are_tricyclic(text):
    assert cyclomatic_number(generate(parse_spec(text))) == 3


def test_t3_zero_is_t2_zero_zero():
    assert is_isomorphic(generate(parse_spec("t3 0")), generate(parse_spec("t2 0 0")))


def test_t_general_symmetry():
    # swapping the two ends of the chain of triangles
    a = generate(parse_spec("t-general 2 3 1 0 2 0 1"))
    b = generate(parse_spec("t-general 3 2 0 1 2 1 0"))
    assert is_isomorphic(a, b)


def test_generation_is_deterministic():
    assert generate(parse_spec("t5")).to_graph6() == generate(parse_spec("t5")).to_graph6()
    assert generate(parse_spec("t3 4")).edges() == generate(FamilySpec(Family.T3, (4,))).edges()


@pytest.mark.parametrize("text", ["t3", "t3 -1", "t4 1 2", "bg 1 3", "t-general 1 2 3", "nope 1",
                                  "t3 x", "f 99", ""])
def test_bad_specs(text):
    with pytest.raises(ParameterError):
        generate(parse_spec(text))


def test_spec_roundtrip():
    spec = parse_spec("t-general 2 3 1 0 2 0 1")
    assert parse_spec(str(spec)) == spec
    assert spec.to_json() == {"family": "t-general", "params": [2, 3, 1, 0, 2, 0, 1]}


def test_family_member_counts():
    assert [len(enumerate_family_members(n)) for n in range(5, 10)] == [0, 1, 4, 6, 13]
    assert enumerate_family_members(6)[0][0] == FamilySpec(Family.T4, (0,))


def test_members_are_distinct_classes():
    for n in range(6, 12):
        members = enumerate_family_members(n)
        forms = [canonical_form(g) for _, g in members]
        assert len(forms) == len(set(forms))
        for spec, g in members:
            assert g.n == n
            assert generate(spec) == g


def test_family_specs_cover_parameter_space():
    assert len(family_specs(7)) == 1 + 1 + 1 + 1      # T(0..0), T3^0, T4^1, T7
    assert len(family_specs(8)) == 7 + 1 + 1 + 1       # seven unit compositions, T3^1, T4^2, T6
