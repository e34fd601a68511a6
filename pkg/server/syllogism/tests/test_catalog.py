from fractions import Fraction

import pytest

from engine.model import standard_model
from engine.statements import CODES, CategoricalStatement, RelationCode, format_statement, holds
from syllogism.catalog import (
    PROBLEM_COUNT,
    CatalogError,
    Problem,
    all_problems,
    enumerate_all,
    figure,
    premises_of,
    resolve_jobs,
    solve_problem,
)
from syllogism.golden import compare, golden_tables, parse_cell, raw_grids
from syllogism.moods import MEDIEVAL_NAMES

R = RelationCode
CLASSICAL_CODES = (R.A, R.E, R.I, R.O)

VALID_MOODS = {
    'aaa-1', 'aii-1', 'eae-1', 'eio-1',
    'aee-2', 'aoo-2', 'eae-2', 'eio-2',
    'aii-3', 'eio-3', 'iai-3', 'oao-3',
    'aee-4', 'eio-4', 'iai-4',
}


def test_problem_count_and_order():
    problems = all_problems()
    assert len(problems) == PROBLEM_COUNT == 196
    assert problems[0] == Problem(1, 'a', 'a')
    assert problems[1] == Problem(1, 'a', 'á')
    assert problems[7] == Problem(1, 'á', 'a')
    assert problems[-1] == Problem(4, 'u', 'u')


@pytest.mark.parametrize('number,expected', [
    (1, ('AaB', 'BiC')),
    (2, ('BaA', 'BiC')),
    (3, ('AaB', 'CiB')),
    (4, ('BaA', 'CiB')),
])
def test_premises_follow_the_figure(number, expected):
    premises = premises_of(Problem(number, 'a', 'i'))
    assert tuple(format_statement(p) for p in premises) == expected


def test_problem_accepts_ascii_aliases():
    problem = Problem('2', 'e+', 'a+')
    assert problem.key == (2, R.E_EXISTENTIAL, R.A_EXISTENTIAL)
    assert str(problem) == 'éá-2'


@pytest.mark.parametrize('value', [0, 5, 'x', None])
def test_unknown_figure(value):
    with pytest.raises(CatalogError):
        figure(value)


def test_figure_template():
    assert figure(4).template == 'BmA, CnB'


def test_resolve_jobs():
    assert resolve_jobs('3') == 3
    assert resolve_jobs('auto') >= 1
    for bad in ('0', '-2', 'many'):
        with pytest.raises(CatalogError):
            resolve_jobs(bad)


def test_enumeration_matches_published_tables(results):
    assert len(results) == 196
    assert list(results) == all_problems()
    assert compare(results, golden_tables()) == []


@pytest.mark.parametrize('problem,expected', [
    (Problem(1, 'e', 'a'), {R.E}),
    (Problem(3, 'a', 'a'), set()),
    (Problem(4, 'i', 'a'), {R.I}),
    (Problem(2, 'a', 'é'), {R.E_EXISTENTIAL, R.E, R.O}),
    (Problem(1, 'i', 'i'), set()),
])
def test_single_cells(results, problem, expected):
    assert results[problem].classical == frozenset(expected)


def test_classical_moods_over_plain_codes(results):
    found = set()
    for problem, result in results.items():
        if problem.major in CLASSICAL_CODES and problem.minor in CLASSICAL_CODES:
            for code in result.classical & set(CLASSICAL_CODES):
                found.add(f"{problem.major}{problem.minor}{code}-{problem.figure}")
    assert found == VALID_MOODS


def test_every_valid_mood_has_a_name():
    named = {f"{m}{n}{s}-{k}" for (m, n, s, k) in MEDIEVAL_NAMES}
    assert VALID_MOODS <= named


@pytest.mark.parametrize('problem,code', [
    (Problem(3, 'a', 'a'), R.I),
    (Problem(3, 'e', 'a'), R.O),
    (Problem(4, 'a', 'a'), R.I),
    (Problem(4, 'e', 'a'), R.O),
    (Problem(1, 'e', 'a'), R.O),
])
def test_existential_fallacies_are_rejected(results, problem, code):
    assert code not in results[problem].classical


@pytest.mark.parametrize('problem,code', [
    (Problem(3, 'a', 'á'), R.I),
    (Problem(3, 'á', 'a'), R.I),
    (Problem(3, 'e', 'á'), R.O),
    (Problem(4, 'á', 'a'), R.I),
    (Problem(1, 'e', 'á'), R.O),
])
def test_existential_premises_restore_the_conclusion(results, problem, code):
    assert code in results[problem].classical


@pytest.mark.parametrize('number', [1, 2, 3, 4])
def test_complementary_iei(results, number):
    assert R.I in results[Problem(number, 'i', 'e')].complementary


def test_deductions_do_not_depend_on_epsilon(results, results_fine):
    assert compare(results_fine, results) == []


def test_deduction_sets_are_closed_and_consistent(results):
    for problem, result in results.items():
        assert result.feasible, problem
        for codes in (result.classical, result.complementary):
            if R.A_EXISTENTIAL in codes:
                assert {R.A, R.I} <= codes, problem
            if R.E_EXISTENTIAL in codes:
                assert {R.E, R.O} <= codes, problem
            if R.U in codes:
                assert {R.I, R.O} <= codes, problem
            assert not {R.A, R.E_EXISTENTIAL} <= codes, problem
            assert not {R.E, R.A_EXISTENTIAL} <= codes, problem


def test_bounds_partition_every_problem(results):
    for result in results.values():
        assert sum(result.bounds.alpha) <= 1 <= sum(result.bounds.beta)


def test_parallel_enumeration_matches_serial(results):
    problems = [p for p in all_problems() if p.figure == 2]
    parallel = enumerate_all(Fraction(1, 100), jobs=2, problems=problems)
    assert list(parallel) == problems
    assert all(parallel[p] == results[p] for p in problems)


def test_solve_problem_matches_enumeration(results):
    problem = Problem(2, 'e', 'i')
    assert solve_problem(problem) == results[problem]


def test_golden_reader():
    assert parse_cell('é,e,o') == frozenset({R.E_EXISTENTIAL, R.E, R.O})
    assert parse_cell('') == frozenset()
    assert parse_cell('u') == frozenset({R.I, R.O, R.U})
    tables = golden_tables()
    assert len(tables) == 196
    assert tables[Problem(2, 'u', 'a')].complementary == frozenset({R.I})


def test_compare_reports_each_differing_cell(results):
    grids = raw_grids()
    grids[1, 'classical'][CODES.index(R.E)][CODES.index(R.A)] = 'e,o'
    mismatches = compare(results, golden_tables(grids))
    assert len(mismatches) == 1
    mismatch = mismatches[0]
    assert mismatch.problem == Problem(1, 'e', 'a')
    assert mismatch.kind == 'classical'
    assert mismatch.expected == frozenset({R.E, R.O})
    assert mismatch.computed == frozenset({R.E})


def test_witnesses_satisfy_premises_and_conclusions(results):
    model = standard_model()
    a, c = model.literal('A'), model.literal('C')
    for problem, result in results.items():
        premises = premises_of(problem)
        conclusions = [CategoricalStatement(a, c, code) for code in result.classical]
        conclusions += [CategoricalStatement(a, c.negate(), code) for code in result.complementary]
        for low, high in result.bounds.witnesses:
            for point in (low, high):
                assert all(holds(p, point) for p in premises), problem
                assert all(holds(s, point) for s in conclusions), problem
