"""Bounds on the query cells and the deduction criteria built on them.

For a query with predicate p and subject q the four objectives are
P(q, p), P(q, ~p), P(~q, p) and P(~q, ~p). Minimising and maximising each
over the epsilon-weakened premise polytope gives alpha_k and beta_k. The
classical criteria read (alpha_1, beta_1, alpha_2, beta_2); the
complementary criteria read the same rules off (alpha_3, beta_3, alpha_4,
beta_4), i.e. the relation between the negated subject and the predicate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .exceptions import InfeasibleError, ModelError
from .lp import DEFAULT_EPSILON, Sense, check_epsilon, reformulate, solve_many
from .model import Literal, Model, format_rational, standard_model
from .statements import CategoricalStatement, RelationCode, joint_form, translate

logger = logging.getLogger(__name__)

OBJECTIVE_COUNT = 4
_SUBSCRIPTS = '₁₂₃₄'


def objective_forms(model: Optional[Model] = None, predicate: Optional[Literal] = None,
                    subject: Optional[Literal] = None) -> tuple:
    """The four query cells as linear forms; defaults to the conclusion A?C of the standard model."""
    model = model or standard_model()
    predicate = predicate or model.literal('A')
    subject = subject or model.literal('C')
    return (
        joint_form(model, predicate, subject),
        joint_form(model, predicate.negate(), subject),
        joint_form(model, predicate, subject.negate()),
        joint_form(model, predicate.negate(), subject.negate()),
    )


def objective_labels(predicate: str = 'A', subject: str = 'C') -> tuple:
    return (
        f"P({subject},{predicate})",
        f"P({subject},~{predicate})",
        f"P(~{subject},{predicate})",
        f"P(~{subject},~{predicate})",
    )


@dataclass(frozen=True)
class BoundsProfile:
    alpha: tuple
    beta: tuple
    witnesses: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        beta = tuple(Fraction(b) for b in self.beta)
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'beta', beta)
        if len(alpha) != OBJECTIVE_COUNT or len(beta) != OBJECTIVE_COUNT:
            raise ModelError(f"a bounds profile has {OBJECTIVE_COUNT} alpha and beta values")
        for k, (low, high) in enumerate(zip(alpha, beta), start=1):
            if not 0 <= low <= high <= 1:
                raise ModelError(
                    f"bounds out of order for objective {k}: {format_rational(low)} .. {format_rational(high)}")

    def pairs(self) -> tuple:
        return tuple(zip(self.alpha, self.beta))


def compute_bounds(premise_constraints: Iterable, eps: Fraction = DEFAULT_EPSILON,
                   objectives: Optional[Sequence] = None) -> BoundsProfile:
    """Exact min and max of every objective over the weakened premises.

    Raises InfeasibleError when no point of the simplex satisfies them.
    """
    eps = check_epsilon(eps)
    objectives = tuple(objectives) if objectives is not None else objective_forms()
    weak = reformulate(premise_constraints, eps, size=objectives[0].size)
    outcomes = solve_many(weak, [(form, sense) for form in objectives for sense in (Sense.MIN, Sense.MAX)])
    if not all(outcome.optimal for outcome in outcomes):
        raise InfeasibleError(f"the premises have no model at epsilon {format_rational(eps)}")
    alpha, beta, witnesses = [], [], []
    for k in range(len(objectives)):
        low, high = outcomes[2 * k], outcomes[2 * k + 1]
        logger.debug("objective %d: [%s, %s]", k + 1, format_rational(low.value), format_rational(high.value))
        alpha.append(low.value)
        beta.append(high.value)
        witnesses.append((low.witness, high.witness))
    return BoundsProfile(tuple(alpha), tuple(beta), tuple(witnesses))


class CriterionRow(NamedTuple):
    code: RelationCode
    condition: str
    fired: bool


def criteria(bounds: BoundsProfile, eps: Fraction = DEFAULT_EPSILON, complementary: bool = False) -> tuple:
    """Every rule with its condition text and whether it fires, in table order."""
    hit, miss = (2, 3) if complementary else (0, 1)

    def positive(k: int) -> bool:
        return bounds.alpha[k] >= eps

    def nil(k: int) -> bool:
        return bounds.beta[k] == 0

    def pos_text(k: int) -> str:
        return f"α{_SUBSCRIPTS[k]} > 0"

    def nil_text(k: int) -> str:
        return f"β{_SUBSCRIPTS[k]} = 0"

    code = RelationCode
    return (
        CriterionRow(code.A, nil_text(miss), nil(miss)),
        CriterionRow(code.A_EXISTENTIAL, f"{pos_text(hit)} ∧ {nil_text(miss)}", positive(hit) and nil(miss)),
        CriterionRow(code.E, nil_text(hit), nil(hit)),
        CriterionRow(code.E_EXISTENTIAL, f"{nil_text(hit)} ∧ {pos_text(miss)}", nil(hit) and positive(miss)),
        CriterionRow(code.I, pos_text(hit), positive(hit)),
        CriterionRow(code.O, pos_text(miss), positive(miss)),
        CriterionRow(code.U, f"{pos_text(hit)} ∧ {pos_text(miss)}", positive(hit) and positive(miss)),
    )


def classical_deductions(bounds: BoundsProfile, eps: Fraction = DEFAULT_EPSILON) -> frozenset:
    return frozenset(row.code for row in criteria(bounds, eps) if row.fired)


def complementary_deductions(bounds: BoundsProfile, eps: Fraction = DEFAULT_EPSILON) -> frozenset:
    return frozenset(row.code for row in criteria(bounds, eps, complementary=True) if row.fired)


@dataclass(frozen=True)
class DeductionResult:
    feasible: bool
    classical: frozenset = frozenset()
    complementary: frozenset = frozenset()
    bounds: Optional[BoundsProfile] = None

    def __post_init__(self):
        if not self.feasible and (self.classical or self.complementary or self.bounds is not None):
            raise ModelError('an infeasible result carries no deductions')


def deduce_constraints(constraints: Iterable, objectives: Sequence, eps: Fraction = DEFAULT_EPSILON) -> DeductionResult:
    try:
        bounds = compute_bounds(constraints, eps, objectives)
    except InfeasibleError:
        return DeductionResult(feasible=False)
    return DeductionResult(
        feasible=True,
        classical=classical_deductions(bounds, eps),
        complementary=complementary_deductions(bounds, eps),
        bounds=bounds,
    )


def deduce_general(premises: Iterable[CategoricalStatement], query_predicate: Literal, query_subject: Literal,
                   eps: Fraction = DEFAULT_EPSILON, model: Optional[Model] = None) -> DeductionResult:
    """Deductions about `query_predicate ? query_subject` from any number of premises."""
    model = model or standard_model()
    eps = check_epsilon(eps)
    premises = tuple(premises)
    for literal in (query_predicate, query_subject):
        if not model.owns(literal.term):
            raise ModelError(f"query term {literal.term.name!r} does not belong to the model")
    constraints = [c for stmt in premises for c in translate(model, stmt)]
    result = deduce_constraints(constraints, objective_forms(model, query_predicate, query_subject), eps)
    if not result.feasible:
        logger.warning("premises %s are jointly infeasible", ', '.join(str(p) for p in premises))
    return result
