"""Text, csv and json renderings of deductions and of the figure tables.

Every rational is printed exactly as p/q. Text output may add a decimal
approximation after `≈`; csv and json never do.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from engine.deduce import criteria, objective_forms, objective_labels
from engine.lp import reformulate, simplex_constraints
from engine.model import format_rational, output_table, standard_model
from engine.statements import (
    CODES,
    CategoricalStatement,
    conditional_text,
    describe,
    format_statement,
    sort_codes,
    translate,
)

from .catalog import FIGURES, Problem, premises_of
from .golden import CLASSICAL, KINDS
from .moods import MoodLabel, medieval_name, tabular, turnstile
from .serializers import cell_payload, render_cells

OUTPUT_TABLES = (('A', 'B'), ('B', 'C'), ('C', 'A'), ('A',), ('B',), ('C',))
_CELL_MIN_WIDTH = 7
# marks a cell whose premises have no model, distinct from an empty deduction set
INFEASIBLE = 'INFEASIBLE'


def format_codes(codes: Iterable, separator: str = ', ') -> str:
    return separator.join(code.value for code in sort_codes(codes))


def exact(value: Fraction) -> str:
    """`99/100 ≈ 0.99` for fractions, plain digits for integers."""
    value = Fraction(value)
    text = format_rational(value)
    if value.denominator != 1:
        text += f" ≈ {float(value):.4g}"
    return text


def _cells_of(cells: Mapping, kind: str) -> dict:
    return {p: (c.classical if kind == CLASSICAL else c.complementary) for p, c in cells.items()}


def _infeasible(cells: Mapping) -> set:
    return {p for p, c in cells.items() if not getattr(c, 'feasible', True)}


def render_grid(number: int, kind: str, cells: Mapping) -> str:
    """One 7x7 table: major premise code down the side, minor premise code across."""
    shapes = FIGURES[number]
    values = _cells_of(cells, kind)
    infeasible = _infeasible(cells)
    if kind == CLASSICAL:
        title = f"Figure {number} (a) classical syllogism AsC from {shapes.template}"
    else:
        title = f"Figure {number} (b) complementary syllogism As~C from {shapes.template}"
    texts = {}
    for major in CODES:
        for minor in CODES:
            problem = Problem(number, major, minor)
            texts[major, minor] = INFEASIBLE if problem in infeasible else format_codes(values.get(problem, ()))
    width = max([_CELL_MIN_WIDTH] + [len(t) for t in texts.values()])
    header = 'm\\n | ' + ' | '.join(code.value.center(width) for code in CODES)
    lines = [title, header, '-' * len(header)]
    for major in CODES:
        row = ' | '.join(texts[major, minor].ljust(width) for minor in CODES)
        lines.append(f"{major.value:<3} | {row}".rstrip())
    return '\n'.join(lines)


def render_tables_text(cells: Mapping) -> str:
    numbers = sorted({problem.figure for problem in cells})
    blocks = [render_grid(number, kind, cells) for number in numbers for kind in KINDS]
    return '\n\n'.join(blocks) + '\n'


def render_csv(cells: Mapping) -> str:
    """Rows `figure,kind,major,minor,"deductions"`, deductions `;`-joined.

    A cell without a model reads `INFEASIBLE`, unquoted.
    """
    lines = ['figure,kind,major,minor,deductions']
    infeasible = _infeasible(cells)
    numbers = sorted({problem.figure for problem in cells})
    for number in numbers:
        for kind in KINDS:
            values = _cells_of(cells, kind)
            for major in CODES:
                for minor in CODES:
                    problem = Problem(number, major, minor)
                    if problem not in values:
                        continue
                    row = f'{number},{kind},{major.value},{minor.value}'
                    if problem in infeasible:
                        lines.append(f'{row},{INFEASIBLE}')
                    else:
                        # always quoted so an empty cell stays visible
                        lines.append(f'{row},"{format_codes(values[problem], ";")}"')
    return '\n'.join(lines) + '\n'


def render_json(results: Mapping) -> str:
    return render_cells(cell_payload(problem, result) for problem, result in results.items())


def render_bounds(bounds, eps: Fraction, predicate: str = 'A', subject: str = 'C') -> list:
    labels = objective_labels(predicate, subject)
    width = max(len(label) for label in labels)
    lines = [f"Bounds (ε = {format_rational(eps)}):"]
    for k, (label, low, high) in enumerate(zip(labels, bounds.alpha, bounds.beta)):
        sub = '₁₂₃₄'[k]
        lines.append(f"  {label:<{width}}  α{sub} = {exact(low):<16} β{sub} = {exact(high)}")
    return lines


def _conclusion(predicate, subject, code) -> CategoricalStatement:
    return CategoricalStatement(predicate, subject, code)


def render_solve_text(problem: Problem, result, eps: Fraction) -> str:
    model = standard_model()
    premises = premises_of(problem)
    a, c = model.literal('A'), model.literal('C')
    lines = [f"Figure {problem.figure}, major {problem.major}, minor {problem.minor}: "
             f"{', '.join(format_statement(p) for p in premises)}"]
    if not result.feasible:
        lines.append(f"INFEASIBLE: the premises admit no probability model at ε = {format_rational(eps)}")
        return '\n'.join(lines) + '\n'
    for title, subject, codes, complementary in (
        ('Classical (A?C)', c, result.classical, False),
        ('Complementary (A?~C)', c.negate(), result.complementary, True),
    ):
        lines.append(f"{title}: {format_codes(codes) or 'none'}")
        for code in sort_codes(codes):
            mood = MoodLabel(problem.major, problem.minor, code, problem.figure, complementary)
            name = medieval_name(mood)
            label = f"{mood} ({name})" if name else str(mood)
            lines.append(f"  {label:<24} {turnstile(premises, _conclusion(a, subject, code))}")
    lines.append('')
    lines.extend(render_bounds(result.bounds, eps))
    return '\n'.join(lines) + '\n'


def render_deduce_text(premises: Sequence, predicate, subject, result, eps: Fraction) -> str:
    premise_text = ', '.join(format_statement(p) for p in premises) or '(none)'
    lines = [f"Premises: {premise_text}", f"Query: {predicate}?{subject}"]
    if not result.feasible:
        lines.append(f"INFEASIBLE: the premises admit no probability model at ε = {format_rational(eps)}")
        return '\n'.join(lines) + '\n'
    for title, query_subject, codes in (
        ('Classical', subject, result.classical),
        ('Complementary', subject.negate(), result.complementary),
    ):
        conclusions = [_conclusion(predicate, query_subject, code) for code in sort_codes(codes)]
        lines.append(f"{title}: {', '.join(format_statement(s) for s in conclusions) or 'none'}")
        for conclusion in conclusions:
            if premises:
                lines.append(f"  {turnstile(premises, conclusion)}")
    lines.append('')
    lines.extend(render_bounds(result.bounds, eps, str(predicate), str(subject)))
    return '\n'.join(lines) + '\n'


def render_explain(problem: Problem, result, eps: Fraction, tables: bool = False) -> str:
    """The whole derivation: translation, weakened LPs with optima and witnesses, criteria."""
    model = standard_model()
    premises = premises_of(problem)
    a, c = model.literal('A'), model.literal('C')
    lines = []

    if tables:
        lines.append('Output probability tables')
        for names in OUTPUT_TABLES:
            lines.append(f"  P({','.join(names)})")
            for values, form in output_table(model, names):
                row = ' '.join('T' if v else 'F' for v in values)
                lines.append(f"    {row}  {form}")
        lines.append('')

    lines.append(f"Premises of {problem} ({FIGURES[problem.figure].template})")
    constraints = []
    for statement in premises:
        translated = translate(model, statement)
        constraints.extend(translated)
        gloss = describe(statement.relation, str(statement.predicate), str(statement.subject))
        lines.append(f"  {format_statement(statement)}: {gloss.description}")
        for constraint in translated:
            lines.append(f"    {constraint}")

    lines.append('')
    lines.append(f"Weakened constraints (ε = {format_rational(eps)})")
    box = set(simplex_constraints(model.size))
    for constraint in reformulate(constraints, eps, model.size):
        if constraint not in box:
            lines.append(f"  {constraint}")
    lines.append(f"  0 <= xi <= 1 for i = 1..{model.size}, {model.normalization()} = 1")

    lines.append('')
    if not result.feasible:
        lines.append('INFEASIBLE: no point of the simplex satisfies the weakened constraints')
        return '\n'.join(lines) + '\n'

    lines.append('Linear programs')
    bounds = result.bounds
    for k, (label, form) in enumerate(zip(objective_labels(), objective_forms(model))):
        low_witness, high_witness = bounds.witnesses[k] if bounds.witnesses else (None, None)
        for sense, value, witness in (('minimize', bounds.alpha[k], low_witness),
                                      ('maximize', bounds.beta[k], high_witness)):
            line = f"  {sense} {form}  [{label}] = {exact(value)}"
            if witness is not None:
                line += f"  at {witness}; P(A|C) = {conditional_text(a, c, witness)}"
            lines.append(line)

    for title, subject, complementary in (('Classical criteria (A?C)', c, False),
                                          ('Complementary criteria (A?~C)', c.negate(), True)):
        lines.append('')
        lines.append(title)
        for row in criteria(bounds, eps, complementary=complementary):
            conclusion = _conclusion(a, subject, row.code)
            if row.fired:
                lines.append(f"  {row.code.value}  {row.condition} ⇒ {format_statement(conclusion)}")
            else:
                lines.append(f"  {row.code.value}  {row.condition}  (not met)")

    deduced = [_conclusion(a, c, code) for code in sort_codes(result.classical)]
    deduced += [_conclusion(a, c.negate(), code) for code in sort_codes(result.complementary)]
    if deduced:
        lines.append('')
        lines.append('Conclusions')
        for conclusion in deduced:
            gloss = describe(conclusion.relation, str(conclusion.predicate), str(conclusion.subject))
            lines.append(f"  {format_statement(conclusion)}: {gloss.name}; {gloss.conditional}; {gloss.description}")
            lines.append('    ' + tabular(premises, conclusion).replace('\n', '\n    '))
    return '\n'.join(lines) + '\n'
