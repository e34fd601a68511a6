"""Brute-force vertex enumeration, an independent check on `lp.solve`.

The feasible set is written in standard form (x >= 0, slack >= 0, equality
rows) and every basic solution is computed exactly with sympy's rational
matrices. The optimum of a linear objective over a nonempty polytope is
attained at one of them. Only practical for small problems, hence the
scale guard.
"""
from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from sympy import Matrix, Rational

from .exceptions import OracleScaleExceeded
from .lp import LpOutcome, LpProblem, Sense, Status, simplex_constraints
from .model import ModelPoint, evaluate
from .statements import ConstraintKind

logger = logging.getLogger(__name__)

MAX_PARAMETERS = 8
MAX_ROWS = 10


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def vertex_oracle(problem: LpProblem) -> LpOutcome:
    """Optimum by enumerating every basic feasible solution."""
    size = problem.size
    if size > MAX_PARAMETERS:
        raise OracleScaleExceeded(f"vertex oracle handles at most {MAX_PARAMETERS} parameters, got {size}")

    # box rows follow from x >= 0 and the normalization
    implied = set(simplex_constraints(size))
    premises = [c for c in problem.constraints if c not in implied]
    if len(premises) > MAX_ROWS:
        raise OracleScaleExceeded(f"vertex oracle handles at most {MAX_ROWS} constraint rows, got {len(premises)}")

    slacks = sum(1 for c in premises if c.kind is ConstraintKind.GE_ZERO)
    width = size + slacks
    rows = []
    slack = size
    for constraint in premises:
        row = [_rational(c) for c in constraint.form.coefficients] + [Rational(0)] * slacks
        if constraint.kind is ConstraintKind.GE_ZERO:
            row[slack] = Rational(-1)
            slack += 1
        rows.append(row + [_rational(-constraint.form.constant)])
    rows.append([Rational(1)] * size + [Rational(0)] * slacks + [Rational(1)])

    reduced, pivots = Matrix(rows).rref()
    if width in pivots:
        # a pivot in the right-hand side column means 0 = nonzero
        return LpOutcome(Status.INFEASIBLE)
    rank = len(pivots)
    matrix = reduced[:rank, :width]
    rhs = reduced[:rank, width]

    best_value, best_point = None, None
    bases = 0
    for basis in itertools.combinations(range(width), rank):
        square, square_pivots = matrix.extract(list(range(rank)), list(basis)).row_join(rhs).rref()
        if square_pivots != tuple(range(rank)):
            continue
        solution = [_fraction(v) for v in square[:, rank]]
        if any(v < 0 for v in solution):
            continue
        bases += 1
        values = [Fraction(0)] * width
        for column, value in zip(basis, solution):
            values[column] = value
        point = ModelPoint(values[:size])
        value = evaluate(problem.objective, point)
        better = best_value is None or (value < best_value if problem.sense is Sense.MIN else value > best_value)
        if better:
            best_value, best_point = value, point
    logger.debug("vertex oracle: %d feasible bases over %d columns, rank %d", bases, width, rank)
    if best_point is None:
        return LpOutcome(Status.INFEASIBLE)
    return LpOutcome(Status.OPTIMAL, best_value, best_point)
