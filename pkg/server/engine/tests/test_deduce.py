import logging
from fractions import Fraction

import pytest

from engine.deduce import (
    BoundsProfile,
    DeductionResult,
    classical_deductions,
    compute_bounds,
    criteria,
    deduce_general,
    objective_labels,
)
from engine.exceptions import InfeasibleError, ModelError
from engine.model import build_model, standard_model
from engine.statements import RelationCode, parse_statement, translate

EPS = Fraction(1, 100)
R = RelationCode


@pytest.fixture
def model():
    return standard_model()


def deduce(model, *texts, predicate='A', subject='C', eps=EPS):
    premises = [parse_statement(text, model) for text in texts]
    return deduce_general(premises, model.literal(predicate), model.literal(subject), eps, model=model)


def test_festino_bounds(model):
    result = deduce(model, 'BeA', 'BiC')
    assert result.feasible
    assert result.bounds.alpha[1] == EPS
    assert result.bounds.beta[1] == 1
    assert result.classical == frozenset({R.O})


def test_barbara(model):
    result = deduce(model, 'AaB', 'BaC')
    assert result.classical == frozenset({R.A})
    assert result.bounds.beta[1] == 0


def test_existential_minor_strengthens_barbara(model):
    assert deduce(model, 'AaB', 'BáC').classical == frozenset({R.A, R.A_EXISTENTIAL, R.I})


def test_complementary_deduction(model):
    result = deduce(model, 'AiB', 'BeC')
    assert result.classical == frozenset()
    assert result.complementary == frozenset({R.I})


def test_no_premises_bound_nothing(model):
    result = deduce(model)
    assert result.bounds.alpha == (0, 0, 0, 0)
    assert result.bounds.beta == (1, 1, 1, 1)
    assert result.classical == frozenset() and result.complementary == frozenset()


def test_self_contradiction_is_infeasible(model):
    result = deduce(model, 'AoA')
    assert not result.feasible
    assert result.bounds is None
    assert result.classical == frozenset() and result.complementary == frozenset()


def test_infeasible_premises_are_logged(model, caplog, monkeypatch):
    # the configured 'engine' logger does not propagate to caplog's root handler
    monkeypatch.setattr(logging.getLogger('engine'), 'propagate', True)
    with caplog.at_level('WARNING', logger='engine.deduce'):
        deduce(model, 'AeB', 'AiB')
    assert 'jointly infeasible' in caplog.text


def test_compute_bounds_raises_on_infeasible(model):
    constraints = translate(model, parse_statement('AoA', model))
    with pytest.raises(InfeasibleError):
        compute_bounds(constraints, EPS)


@pytest.mark.parametrize('texts', [(), ('BeA', 'BiC'), ('AaB', 'BaC'), ('AiB', 'CoB')])
def test_cells_partition_the_simplex(model, texts):
    bounds = deduce(model, *texts).bounds
    assert sum(bounds.alpha) <= 1 <= sum(bounds.beta)
    for low, high in bounds.pairs():
        assert 0 <= low <= high <= 1


def test_criteria_rows(model):
    rows = criteria(deduce(model, 'BeA', 'BiC').bounds, EPS)
    assert [row.code for row in rows] == [R.A, R.A_EXISTENTIAL, R.E, R.E_EXISTENTIAL, R.I, R.O, R.U]
    fired = {row.code: row.condition for row in rows if row.fired}
    assert fired == {R.O: 'α₂ > 0'}
    complementary = criteria(deduce(model, 'BeA', 'BiC').bounds, EPS, complementary=True)
    assert complementary[1].condition == 'α₃ > 0 ∧ β₄ = 0'


def test_criteria_from_hand_written_bounds():
    bounds = BoundsProfile((EPS, 0, 0, 0), (1, 0, 1, 1))
    assert classical_deductions(bounds, EPS) == frozenset({R.A, R.A_EXISTENTIAL, R.I})
    # a positive lower bound smaller than epsilon is not evidence
    assert classical_deductions(BoundsProfile((EPS / 2, 0, 0, 0), (1, 1, 1, 1)), EPS) == frozenset()


def test_bounds_profile_validation():
    with pytest.raises(ModelError):
        BoundsProfile((0, 0, 0), (1, 1, 1))
    with pytest.raises(ModelError):
        BoundsProfile((Fraction(1, 2), 0, 0, 0), (Fraction(1, 4), 1, 1, 1))


def test_infeasible_result_carries_nothing():
    with pytest.raises(ModelError):
        DeductionResult(feasible=False, classical=frozenset({R.I}))


def test_longer_chain_on_a_larger_model():
    model = build_model('ABCD')
    result = deduce(model, 'AaB', 'BaC', 'CaD', subject='D')
    assert R.A in result.classical


def test_query_term_outside_the_model(model):
    other = build_model('ABCD')
    with pytest.raises(ModelError):
        deduce_general([], model.literal('A'), other.literal('D'), EPS, model=model)


def test_objective_labels():
    assert objective_labels() == ('P(C,A)', 'P(C,~A)', 'P(~C,A)', 'P(~C,~A)')


def test_three_premises_forcing_an_empty_term(model):
    assert not deduce(model, 'AaB', 'AeB', 'BiB').feasible
    assert deduce(model, 'AaB', 'AeB').feasible
