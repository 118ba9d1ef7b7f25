from fractions import Fraction

import pytest

from zcert import (
    BoundInputs,
    IsolatedVertexError,
    Verdict,
    equality_classifier,
    eval_bounds,
    from_edge_list,
    theorem1_report,
    theorem2_condition,
    theorem3_condition,
)

from named import complete, complete_bipartite, cycle, hypercube3, petersen


def test_eval_bounds_c4():
    inp = BoundInputs(n=4, e=4, delta=2, Delta=2, b=2)
    assert eval_bounds(inp) == (16, 32, 32, 2, 2)


def test_eval_bounds_k4():
    inp = BoundInputs(n=4, e=6, delta=3, Delta=3, b=1)
    b1 = eval_bounds(inp)[0]
    assert b1 == Fraction(99, 2)


def test_eval_bounds_q3():
    inp = BoundInputs(n=8, e=12, delta=3, Delta=3, b=4)
    assert eval_bounds(inp)[0] == 72


def test_bound_inputs_validation():
    with pytest.raises(IsolatedVertexError):
        BoundInputs(n=3, e=0, delta=0, Delta=1, b=1)
    with pytest.raises(ValueError):
        BoundInputs(n=4, e=4, delta=2, Delta=2, b=4)  # b >= n rejected
    with pytest.raises(ValueError):
        BoundInputs(n=4, e=4, delta=3, Delta=2, b=1)
    with pytest.raises(ValueError):
        BoundInputs(n=4, e=4, delta=1, Delta=2, b=0)


def test_theorem1_report_c6_all_equality():
    report = theorem1_report(cycle(6))
    assert report.inputs.b == 3
    assert report.bounds[0] == 24 == report.actual_z1
    assert report.all_equality


def test_theorem1_report_k23_strict():
    report = theorem1_report(complete_bipartite(2, 3))
    assert report.bounds[0] == Fraction(177, 4)
    assert report.verdicts[0] is Verdict.STRICTLY_SATISFIED
    assert not report.any_violated


def test_theorem1_report_petersen():
    report = theorem1_report(petersen())
    assert report.bounds[0] == Fraction(801, 8)
    assert report.verdicts[0] is Verdict.STRICTLY_SATISFIED
    assert not report.any_violated
    assert not report.all_equality


def test_theorem1_report_isolated_vertex():
    with pytest.raises(IsolatedVertexError):
        theorem1_report(from_edge_list(2, []))


def test_equality_classifier():
    assert equality_classifier(hypercube3())
    assert theorem1_report(hypercube3()).all_equality
    assert not equality_classifier(complete(4))
    assert not theorem1_report(complete(4)).all_equality
    assert equality_classifier(cycle(6))


def test_theorem2_hypothesis_validation():
    with pytest.raises(ValueError):
        theorem2_condition(complete(5), k=1, part=1)
    with pytest.raises(ValueError):
        theorem2_condition(cycle(5), k=3, part=1)  # kappa = 2 < k
    with pytest.raises(ValueError):
        theorem2_condition(complete(5), k=2, part=6)
    # b = k+1 reaching n is rejected, not clamped
    with pytest.raises(ValueError):
        theorem2_condition(complete(4), k=3, part=1)


def test_theorem2_k5():
    # K5 with k=3: b=4, B1 = 16 + 100/8 + 4*64/8 = 121/2; Z1 = 80 >= B1,
    # the condition fires, and K5 is indeed Hamiltonian
    v = theorem2_condition(complete(5), k=3, part=1)
    assert v.bound == Fraction(121, 2)
    assert v.holds and v.actual == 80


def test_theorem2_petersen_all_fail():
    pet = petersen()
    for part in range(1, 6):
        v = theorem2_condition(pet, k=3, part=part, kappa=3)
        assert not v.holds
    v1 = theorem2_condition(pet, k=3, part=1, kappa=3)
    assert v1.bound == Fraction(801, 8) and v1.actual == 90


def test_theorem3_petersen_equalities():
    pet = petersen()
    expected = {1: Fraction(90), 2: Fraction(270), 4: Fraction(10, 3)}
    for part, value in expected.items():
        v = theorem3_condition(pet, k=3, part=part, kappa=3)
        assert v.holds
        assert v.bound == value == v.actual
    # parts 3 and 5 collapse onto parts 2 and 4 for this regular graph
    assert theorem3_condition(pet, k=3, part=3, kappa=3).bound == 270
    assert theorem3_condition(pet, k=3, part=5, kappa=3).bound == Fraction(10, 3)


def test_theorem3_hypothesis_validation():
    with pytest.raises(ValueError):
        theorem3_condition(petersen(), k=0, part=1)
    with pytest.raises(ValueError):
        theorem3_condition(cycle(8), k=1, part=1)  # n < 9
    with pytest.raises(ValueError):
        theorem3_condition(petersen(), k=4, part=1)  # kappa = 3


def test_condition_matches_theorem1_path_when_beta_equals_surrogate():
    # C6: beta = 3 = k+1 with k = 2; the two evaluators share eval_bounds,
    # so the rational bound values must be bit-identical
    g = cycle(6)
    report = theorem1_report(g)
    for part in range(1, 6):
        v = theorem2_condition(g, k=2, part=part, kappa=2)
        assert v.bound == report.bounds[part - 1]
