from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from engine.deduce import objective_forms
from engine.exceptions import OracleScaleExceeded
from engine.lp import LpProblem, Sense, Status, reformulate, solve
from engine.model import LinearForm, standard_model
from engine.oracle import vertex_oracle
from engine.statements import Constraint, ConstraintKind, parse_statement, translate

EPS = Fraction(1, 100)
EQ, GT = ConstraintKind.EQ_ZERO, ConstraintKind.GT_ZERO

coefficients = st.lists(st.integers(min_value=0, max_value=1), min_size=8, max_size=8)


@st.composite
def premise_constraints(draw):
    """Premise-style rows: 0/1 sums, optionally minus another 0/1 sum, set to zero or made positive."""
    plus = draw(coefficients)
    minus = draw(st.one_of(st.just([0] * 8), coefficients))
    kind = draw(st.sampled_from([EQ, GT]))
    return Constraint(LinearForm(tuple(p - m for p, m in zip(plus, minus))), kind)


@st.composite
def problems(draw):
    objective = LinearForm(tuple(
        draw(st.fractions(min_value=-3, max_value=3, max_denominator=5)) for _ in range(8)))
    premises = draw(st.lists(premise_constraints(), min_size=0, max_size=3))
    sense = draw(st.sampled_from(list(Sense)))
    return LpProblem(objective, sense, reformulate(premises, EPS, 8))


def form(*indices):
    return LinearForm(tuple(1 if i in indices else 0 for i in range(1, 9)))


def test_oracle_on_worked_problem():
    weak = reformulate([Constraint(form(1, 2), EQ), Constraint(form(1, 5), GT)], EPS, 8)
    assert vertex_oracle(LpProblem(form(5, 7), Sense.MIN, weak)).value == Fraction(1, 100)
    assert vertex_oracle(LpProblem(form(5, 7), Sense.MAX, weak)).value == 1


def test_oracle_detects_infeasibility():
    weak = reformulate([Constraint(form(1, 2), EQ), Constraint(form(1, 2), GT)], EPS, 8)
    assert vertex_oracle(LpProblem(form(1), Sense.MIN, weak)).status is Status.INFEASIBLE


def test_oracle_scale_guard():
    with pytest.raises(OracleScaleExceeded):
        vertex_oracle(LpProblem(LinearForm((1,) * 16), Sense.MIN, ()))


@settings(max_examples=220, deadline=None)
@given(problems())
def test_simplex_agrees_with_vertex_enumeration(problem):
    expected = vertex_oracle(problem)
    got = solve(problem)
    assert got.status is expected.status
    if expected.status is Status.OPTIMAL:
        assert got.value == expected.value


@pytest.mark.parametrize('texts', [('BeA', 'BiC'), ('AaB', 'BaC'), ('AáB', 'CáB'), ('AuB', 'BuC'), ('BéA', 'CoB')])
def test_oracle_agrees_on_figure_objectives(texts):
    model = standard_model()
    premises = [c for text in texts for c in translate(model, parse_statement(text, model))]
    weak = reformulate(premises, EPS, model.size)
    for objective in objective_forms(model):
        for sense in Sense:
            problem = LpProblem(objective, sense, weak)
            assert solve(problem).value == vertex_oracle(problem).value
