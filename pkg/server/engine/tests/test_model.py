from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from engine.exceptions import DimensionMismatch, InvalidPoint, ModelError
from engine.model import (
    LinearForm,
    Literal,
    ModelPoint,
    Term,
    add,
    build_model,
    evaluate,
    output_table,
    prob_of_event,
    standard_model,
    subtract,
)


def form(*indices, size=8):
    """Sum of the listed (1-based) parameters."""
    return LinearForm(tuple(1 if i in indices else 0 for i in range(1, size + 1)))


@st.composite
def points(draw, size=8):
    weights = draw(st.lists(st.integers(min_value=0, max_value=20), min_size=size, max_size=size))
    if not any(weights):
        weights[draw(st.integers(min_value=0, max_value=size - 1))] = 1
    total = sum(weights)
    return ModelPoint(tuple(Fraction(w, total) for w in weights))


def test_standard_model_parameter_order():
    model = standard_model()
    assert model.size == 8
    assert model.parameter_of((True, True, True)) == 1
    assert model.parameter_of((True, True, False)) == 2
    assert model.parameter_of((True, False, True)) == 3
    assert model.parameter_of((False, True, True)) == 5
    assert model.parameter_of((False, False, False)) == 8


def test_small_models():
    one = build_model(['A'])
    assert one.size == 2
    assert one.parameter_of((True,)) == 1 and one.parameter_of((False,)) == 2
    two = build_model(['A', 'B'])
    assert two.size == 4
    assert two.parameter_of((True, False)) == 2
    assert two.parameter_of((False, True)) == 3


@pytest.mark.parametrize('terms', [[], ['A', 'A'], [f"T{i}" for i in range(11)]])
def test_build_model_rejects(terms):
    with pytest.raises(ModelError):
        build_model(terms)


def test_build_model_rejects_misindexed_term():
    with pytest.raises(ModelError):
        build_model([Term('A', 1), Term('B', 0)])


def test_prob_of_event_examples():
    model = standard_model()
    A, B, C = (model.literal(n) for n in 'ABC')
    assert prob_of_event(model, [B]) == form(1, 2, 5, 6)
    assert prob_of_event(model, [C, A.negate()]) == form(5, 7)
    assert prob_of_event(model, []) == model.normalization()
    assert prob_of_event(model, [A, B, C]) == form(1)


def test_prob_of_event_rejects_two_literals_on_one_term():
    model = standard_model()
    with pytest.raises(ModelError):
        prob_of_event(model, [model.literal('A'), model.literal('A', False)])


def test_prob_of_event_rejects_foreign_term():
    with pytest.raises(ModelError):
        prob_of_event(standard_model(), [Literal(Term('D', 3))])


def test_output_tables_reproduced():
    model = standard_model()
    expected = {
        ('A', 'B'): [form(1, 2), form(3, 4), form(5, 6), form(7, 8)],
        ('B', 'C'): [form(1, 5), form(2, 6), form(3, 7), form(4, 8)],
        ('C', 'A'): [form(1, 3), form(5, 7), form(2, 4), form(6, 8)],
        ('A',): [form(1, 2, 3, 4), form(5, 6, 7, 8)],
        ('B',): [form(1, 2, 5, 6), form(3, 4, 7, 8)],
        ('C',): [form(1, 3, 5, 7), form(2, 4, 6, 8)],
    }
    for names, forms in expected.items():
        assert [f for _, f in output_table(model, names)] == forms


@pytest.mark.parametrize('names', [('A',), ('B', 'C'), ('A', 'B', 'C'), ('C', 'A')])
def test_partition_of_unity(names):
    model = standard_model()
    total = LinearForm.zero(model.size)
    for _, f in output_table(model, names):
        total = total + f
    assert total == model.normalization()


def test_marginal_consistency():
    model = standard_model()
    B, A = model.literal('B'), model.literal('A')
    assert prob_of_event(model, [B]) == prob_of_event(model, [B, A]) + prob_of_event(model, [B, A.negate()])


def test_form_arithmetic():
    assert subtract(form(1, 2), form(1, 2, 5, 6)) == LinearForm((0, 0, 0, 0, -1, -1, 0, 0))
    assert add(form(3), LinearForm.zero(8)) == form(3)
    assert form(1, 3) + form(5, 7) + form(2, 4) + form(6, 8) == LinearForm.normalization(8)
    with pytest.raises(DimensionMismatch):
        add(form(1), form(1, size=4))


def test_form_text():
    assert str(form(5, 7)) == 'x5 + x7'
    assert str(-form(5, 6)) == '-x5 - x6'
    assert str(LinearForm.zero(8)) == '0'
    assert str(form(1, 5).shift(Fraction(-1, 100))) == 'x1 + x5 - 1/100'


def test_evaluate_examples():
    uniform = ModelPoint.uniform(8)
    assert evaluate(form(1, 2), uniform) == Fraction(1, 4)
    assert evaluate(LinearForm.normalization(8), uniform) == 1
    point = ModelPoint((0, 0, 0, 0, Fraction(1, 2), 0, Fraction(1, 3), Fraction(1, 6)))
    assert evaluate(form(5, 7), point) == Fraction(5, 6)
    with pytest.raises(DimensionMismatch):
        evaluate(form(1, size=4), uniform)


@pytest.mark.parametrize('values', [(Fraction(1, 2), Fraction(1, 4)), (2, -1), ()])
def test_model_point_rejects(values):
    with pytest.raises(InvalidPoint):
        ModelPoint(values)


@given(points(), points())
def test_evaluate_is_linear(p, q):
    f = LinearForm((1, 2, 0, Fraction(1, 3), 0, 0, 5, 1), Fraction(1, 7))
    g = LinearForm((0, -1, 4, 0, 1, 1, 0, Fraction(2, 9)))
    assert evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p)
    assert evaluate(LinearForm.normalization(8), q) == 1
