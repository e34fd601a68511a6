"""Exact linear programming over the probability simplex.

Strict premises are weakened with the epsilon reformulation (`f > 0`
becomes `f - eps >= 0`) and the result is solved by a two-phase primal
simplex on `Fraction`s with Bland's pivot rule. The box rows
`0 <= x_i <= 1` and the normalization `sum x_i = 1` are always part of
the problem.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exceptions import DimensionMismatch, InvalidEpsilon, ModelError, SolverError
from .model import LinearForm, ModelPoint, evaluate, format_rational
from .statements import Constraint, ConstraintKind

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = Fraction(1, 100)


def check_epsilon(value: Union[str, int, Fraction]) -> Fraction:
    """Exact epsilon strictly inside (0, 1); accepts "1/100", "0.01" or a Fraction."""
    try:
        eps = Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidEpsilon(f"epsilon {value!r} is not a rational number") from exc
    if not 0 < eps < 1:
        raise InvalidEpsilon(f"epsilon must lie strictly between 0 and 1, got {format_rational(eps)}")
    return eps


class Sense(Enum):
    MIN = 'min'
    MAX = 'max'


class Status(Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class LpProblem:
    objective: LinearForm
    sense: Sense
    constraints: tuple

    def __post_init__(self):
        object.__setattr__(self, 'constraints', tuple(self.constraints))
        for constraint in self.constraints:
            if constraint.form.size != self.objective.size:
                raise DimensionMismatch(self.objective.size, constraint.form.size, what='constraint')
            if constraint.strict:
                raise ModelError(f"strict constraint {constraint} must be reformulated before solving")

    @property
    def size(self) -> int:
        return self.objective.size


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    value: Optional[Fraction] = None
    witness: Optional[ModelPoint] = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def simplex_constraints(size: int) -> tuple:
    """Box rows `1 - x_i >= 0` and the normalization `sum x_i - 1 = 0`."""
    rows = [
        Constraint(-LinearForm.variable(size, i) + LinearForm((0,) * size, 1), ConstraintKind.GE_ZERO)
        for i in range(1, size + 1)
    ]
    rows.append(Constraint(LinearForm.normalization(size).shift(-1), ConstraintKind.EQ_ZERO))
    return tuple(rows)


def reformulate(constraints: Iterable[Constraint], eps: Fraction, size: Optional[int] = None) -> tuple:
    """Replace every `f > 0` by `f >= eps` and append the simplex rows."""
    eps = check_epsilon(eps)
    constraints = tuple(constraints)
    if size is None:
        if not constraints:
            raise ModelError('the parameter count is needed when there are no constraints')
        size = constraints[0].form.size
    weak = []
    for constraint in constraints:
        if constraint.form.size != size:
            raise DimensionMismatch(size, constraint.form.size, what='constraint')
        if constraint.strict:
            weak.append(Constraint(constraint.form.shift(-eps), ConstraintKind.GE_ZERO))
        else:
            weak.append(constraint)
    return tuple(weak) + simplex_constraints(size)


class _Tableau:
    """Dense tableau in equality form with rows `row[:-1] . z = row[-1]`."""

    def __init__(self, constraints: Sequence[Constraint], size: int):
        self.size = size
        rows, basis = [], []
        extra = 0
        plan = []
        for constraint in constraints:
            coefficients = list(constraint.form.coefficients)
            rhs = -constraint.form.constant
            if constraint.kind is ConstraintKind.EQ_ZERO:
                if rhs < 0:
                    coefficients, rhs = [-c for c in coefficients], -rhs
                plan.append((coefficients, rhs, None, True))
            elif rhs <= 0:
                # -a.x + s = -rhs: the slack starts basic
                plan.append(([-c for c in coefficients], -rhs, 1, False))
                extra += 1
            else:
                # a.x - s = rhs: needs an artificial
                plan.append((coefficients, rhs, -1, True))
                extra += 1
        artificials = sum(1 for _, _, _, needs in plan if needs)
        self.width = size + extra + artificials
        self.first_artificial = size + extra
        slack_col, art_col = size, self.first_artificial
        for coefficients, rhs, slack_sign, needs_artificial in plan:
            row = coefficients + [Fraction(0)] * (extra + artificials) + [rhs]
            if slack_sign is not None:
                row[slack_col] = Fraction(slack_sign)
                if not needs_artificial:
                    basis.append(slack_col)
                slack_col += 1
            if needs_artificial:
                row[art_col] = Fraction(1)
                basis.append(art_col)
                art_col += 1
            rows.append(row)
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def _objective_row(self, costs: Sequence[Fraction]) -> list:
        objective = list(costs) + [Fraction(0)] * (self.width - len(costs)) + [Fraction(0)]
        for row, column in zip(self.rows, self.basis):
            factor = objective[column]
            if factor:
                objective = [o - factor * r for o, r in zip(objective, row)]
        return objective

    def _pivot(self, objective: list, leave: int, enter: int) -> None:
        pivot_row = self.rows[leave]
        pivot = pivot_row[enter]
        if pivot != 1:
            pivot_row = [v / pivot for v in pivot_row]
            self.rows[leave] = pivot_row
        support = [j for j, v in enumerate(pivot_row) if v]
        for i, row in enumerate(self.rows):
            if i == leave:
                continue
            factor = row[enter]
            if factor:
                for j in support:
                    row[j] -= factor * pivot_row[j]
        factor = objective[enter]
        if factor:
            for j in support:
                objective[j] -= factor * pivot_row[j]
        self.basis[leave] = enter
        self.pivots += 1

    def _run(self, objective: list, allowed: int) -> None:
        """Minimize with Bland's rule over columns below `allowed`."""
        while True:
            enter = next((j for j in range(allowed) if objective[j] < 0), None)
            if enter is None:
                return
            leave, best = None, None
            for i, row in enumerate(self.rows):
                coefficient = row[enter]
                if coefficient > 0:
                    ratio = row[-1] / coefficient
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        leave, best = i, ratio
            if leave is None:
                raise SolverError('linear program is unbounded; the feasible set should lie in the unit simplex')
            self._pivot(objective, leave, enter)

    def phase_one(self) -> bool:
        """Drive the artificials to zero; False when the rows are inconsistent."""
        costs = [Fraction(0)] * self.first_artificial + [Fraction(1)] * (self.width - self.first_artificial)
        objective = self._objective_row(costs)
        self._run(objective, self.width)
        if -objective[-1] > 0:
            return False
        # pivot remaining (zero-valued) artificials out, dropping redundant rows
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.first_artificial:
                row = self.rows[i]
                enter = next((j for j in range(self.first_artificial) if row[j]), None)
                if enter is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self._pivot(objective, i, enter)
            i += 1
        return True

    def clone(self) -> '_Tableau':
        twin = object.__new__(_Tableau)
        twin.__dict__.update(self.__dict__)
        twin.rows = [list(row) for row in self.rows]
        twin.basis = list(self.basis)
        return twin

    def phase_two(self, costs: Sequence[Fraction]) -> list:
        objective = self._objective_row(costs)
        self._run(objective, self.first_artificial)
        values = [Fraction(0)] * self.width
        for row, column in zip(self.rows, self.basis):
            values[column] = row[-1]
        return values[:self.size]


def _with_simplex(constraints: tuple, size: int) -> tuple:
    present = set(constraints)
    return constraints + tuple(c for c in simplex_constraints(size) if c not in present)


def _finish(tableau: _Tableau, objective: LinearForm, sense: Sense, constraints: tuple) -> LpOutcome:
    sign = 1 if sense is Sense.MIN else -1
    values = tableau.phase_two([sign * c for c in objective.coefficients])
    witness = ModelPoint(values)
    value = evaluate(objective, witness)
    for constraint in constraints:
        if not constraint.satisfied_by(witness):
            logger.error("exactness re-check failed for %s %s", sense.value, objective)
            raise SolverError(f"witness {witness} violates {constraint}")
    logger.debug("%s %s = %s after %d pivots", sense.value, objective, format_rational(value), tableau.pivots)
    return LpOutcome(Status.OPTIMAL, value, witness)


def solve(problem: LpProblem) -> LpOutcome:
    """Exact optimum of the problem over its polytope, or INFEASIBLE."""
    return solve_many(problem.constraints, [(problem.objective, problem.sense)])[0]


def solve_many(constraints: Iterable[Constraint], objectives: Sequence) -> list:
    """Optimize several (objective, sense) pairs over one constraint set.

    Phase one runs once; every objective restarts phase two from a copy
    of the same feasible basis.
    """
    constraints = tuple(constraints)
    objectives = list(objectives)
    if not objectives:
        return []
    problems = [LpProblem(objective, sense, constraints) for objective, sense in objectives]
    size = problems[0].size
    for problem in problems[1:]:
        if problem.size != size:
            raise DimensionMismatch(size, problem.size, what='objective')
    rows = _with_simplex(problems[0].constraints, size)

    start = _Tableau(rows, size)
    if not start.phase_one():
        logger.debug("constraint system infeasible after %d phase-one pivots", start.pivots)
        return [LpOutcome(Status.INFEASIBLE) for _ in problems]
    return [_finish(start.clone(), p.objective, p.sense, rows) for p in problems]


def minimize(objective: LinearForm, constraints: Iterable[Constraint]) -> LpOutcome:
    return solve(LpProblem(objective, Sense.MIN, tuple(constraints)))


def maximize(objective: LinearForm, constraints: Iterable[Constraint]) -> LpOutcome:
    return solve(LpProblem(objective, Sense.MAX, tuple(constraints)))
