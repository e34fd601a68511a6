"""Categorical statements: relation taxonomy, translation into constraints, semantic truth.

A statement `PxQ` has predicate literal P, subject literal Q and relation
code x. With J = P(Q, P) and S = P(Q) the seven composite relations are

    a: S - J = 0            á: S - J = 0, S > 0
    e: J = 0                é: J = 0, S > 0
    i: J > 0                o: S - J > 0            u: J > 0, S - J > 0

`holds` evaluates the same relations straight from the four primary
relations at a concrete point and is kept independent of `translate`.
"""
from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .exceptions import ModelError, StatementSyntaxError
from .model import (
    Literal,
    LinearForm,
    Model,
    ModelPoint,
    evaluate,
    format_rational,
    prob_of_event,
)

logger = logging.getLogger(__name__)


class RelationCode(str, Enum):
    A = 'a'
    A_EXISTENTIAL = 'á'
    E = 'e'
    E_EXISTENTIAL = 'é'
    I = 'i'
    O = 'o'
    U = 'u'

    @property
    def existential(self) -> bool:
        return self in (RelationCode.A_EXISTENTIAL, RelationCode.E_EXISTENTIAL)

    @property
    def ascii(self) -> str:
        return _ASCII_ALIASES.get(self, self.value)

    @classmethod
    def parse(cls, text: str) -> 'RelationCode':
        token = unicodedata.normalize('NFC', text.strip())
        for code in cls:
            if token in (code.value, code.ascii):
                return code
        raise StatementSyntaxError(text, f"unknown relation code {token!r}")

    def __str__(self) -> str:
        return self.value


_ASCII_ALIASES = {
    RelationCode.A_EXISTENTIAL: 'a+',
    RelationCode.E_EXISTENTIAL: 'e+',
}

# Row/column order of the result tables.
CODES = tuple(RelationCode)

# Order used when a set of deduced codes is printed ("é, e, o").
DISPLAY_ORDER = (
    RelationCode.A_EXISTENTIAL,
    RelationCode.A,
    RelationCode.E_EXISTENTIAL,
    RelationCode.E,
    RelationCode.I,
    RelationCode.O,
    RelationCode.U,
)


def sort_codes(codes: Iterable[RelationCode]) -> tuple:
    present = set(codes)
    return tuple(code for code in DISPLAY_ORDER if code in present)


class PrimaryRelation(Enum):
    IMPOSSIBLE_SUBJECT = 'I'
    UNIVERSAL_AFFIRMATIVE_EXISTENTIAL = 'II'
    UNIVERSAL_NEGATIVE_EXISTENTIAL = 'III'
    PARTICULAR_INTERMEDIATE = 'IV'


_P = PrimaryRelation
_COMPOSITES = {
    RelationCode.A: frozenset({_P.IMPOSSIBLE_SUBJECT, _P.UNIVERSAL_AFFIRMATIVE_EXISTENTIAL}),
    RelationCode.A_EXISTENTIAL: frozenset({_P.UNIVERSAL_AFFIRMATIVE_EXISTENTIAL}),
    RelationCode.E: frozenset({_P.IMPOSSIBLE_SUBJECT, _P.UNIVERSAL_NEGATIVE_EXISTENTIAL}),
    RelationCode.E_EXISTENTIAL: frozenset({_P.UNIVERSAL_NEGATIVE_EXISTENTIAL}),
    RelationCode.I: frozenset({_P.UNIVERSAL_AFFIRMATIVE_EXISTENTIAL, _P.PARTICULAR_INTERMEDIATE}),
    RelationCode.O: frozenset({_P.UNIVERSAL_NEGATIVE_EXISTENTIAL, _P.PARTICULAR_INTERMEDIATE}),
    RelationCode.U: frozenset({_P.PARTICULAR_INTERMEDIATE}),
}


def composite_definition(code: RelationCode) -> frozenset:
    """The primary relations whose disjunction defines `code`."""
    return _COMPOSITES[RelationCode(code)]


class RelationGloss(NamedTuple):
    name: str
    conditional: str
    description: str


_GLOSSES = {
    RelationCode.A: RelationGloss(
        'Universal-affirmative-material', 'P(P|Q) = 1 or 0/0', 'P belongs to all Q, or there are no Q'),
    RelationCode.A_EXISTENTIAL: RelationGloss(
        'Universal-affirmative-existential', 'P(P|Q) = 1', 'P belongs to all Q, and there are some Q'),
    RelationCode.E: RelationGloss(
        'Universal-negative-material', 'P(P|Q) = 0 or 0/0', 'P belongs to no Q, or there are no Q'),
    RelationCode.E_EXISTENTIAL: RelationGloss(
        'Universal-negative-existential', 'P(P|Q) = 0', 'P belongs to no Q, and there are some Q'),
    RelationCode.I: RelationGloss(
        'Particular-affirmative', 'P(P|Q) > 0', 'P belongs to some Q'),
    RelationCode.O: RelationGloss(
        'Particular-negative', 'P(P|Q) < 1', 'The negation of P belongs to some Q'),
    RelationCode.U: RelationGloss(
        'Particular-intermediate', '0 < P(P|Q) < 1', 'P belongs to some but not all Q'),
}


def describe(code: RelationCode, predicate: str = 'P', subject: str = 'Q') -> RelationGloss:
    """Name, conditional-probability gloss and English reading, instantiated for P and Q."""
    gloss = _GLOSSES[RelationCode(code)]

    def fill(text: str) -> str:
        text = text.replace('P(P|Q)', '\0')
        text = text.replace('P', predicate).replace('Q', subject)
        return text.replace('\0', f"P({predicate}|{subject})")

    return RelationGloss(gloss.name, fill(gloss.conditional), fill(gloss.description))


class ConstraintKind(Enum):
    EQ_ZERO = '='
    GT_ZERO = '>'
    GE_ZERO = '>='


@dataclass(frozen=True)
class Constraint:
    """`form = 0`, `form > 0` or (after epsilon weakening) `form >= 0`."""

    form: LinearForm
    kind: ConstraintKind

    def __post_init__(self):
        # an equality is stored with its first nonzero coefficient positive
        if self.kind is ConstraintKind.EQ_ZERO:
            lead = next((c for c in self.form.coefficients if c), self.form.constant)
            if lead < 0:
                object.__setattr__(self, 'form', -self.form)

    @property
    def strict(self) -> bool:
        return self.kind is ConstraintKind.GT_ZERO

    def satisfied_by(self, point: ModelPoint) -> bool:
        value = evaluate(self.form, point)
        if self.kind is ConstraintKind.EQ_ZERO:
            return value == 0
        if self.kind is ConstraintKind.GT_ZERO:
            return value > 0
        return value >= 0

    def __str__(self) -> str:
        lhs = LinearForm(self.form.coefficients)
        return f"{lhs} {self.kind.value} {format_rational(-self.form.constant)}"


@dataclass(frozen=True)
class CategoricalStatement:
    predicate: Literal
    subject: Literal
    relation: RelationCode

    def __str__(self) -> str:
        return format_statement(self)


def joint_form(model: Model, predicate: Literal, subject: Literal) -> LinearForm:
    if predicate.term == subject.term:
        if predicate.polarity == subject.polarity:
            return prob_of_event(model, [subject])
        return LinearForm.zero(model.size)
    return prob_of_event(model, [subject, predicate])


def translate(model: Model, stmt: CategoricalStatement) -> tuple:
    """Constraints over the model parameters that define the statement."""
    for literal in (stmt.predicate, stmt.subject):
        if not model.owns(literal.term):
            raise ModelError(f"statement {stmt} uses term {literal.term.name!r} outside the model")
    joint = joint_form(model, stmt.predicate, stmt.subject)
    subject = prob_of_event(model, [stmt.subject])
    rest = subject - joint
    eq, gt = ConstraintKind.EQ_ZERO, ConstraintKind.GT_ZERO
    code = RelationCode(stmt.relation)
    constraints = {
        RelationCode.A: [Constraint(rest, eq)],
        RelationCode.A_EXISTENTIAL: [Constraint(rest, eq), Constraint(subject, gt)],
        RelationCode.E: [Constraint(joint, eq)],
        RelationCode.E_EXISTENTIAL: [Constraint(joint, eq), Constraint(subject, gt)],
        RelationCode.I: [Constraint(joint, gt)],
        RelationCode.O: [Constraint(rest, gt)],
        RelationCode.U: [Constraint(joint, gt), Constraint(rest, gt)],
    }[code]
    logger.debug("%s -> %s", stmt, '; '.join(str(c) for c in constraints))
    return tuple(constraints)


def _mass(point: ModelPoint, literals: Iterable[Literal]) -> Fraction:
    """Probability of the conjunction of literals, summed directly from the point."""
    size = point.size
    count = size.bit_length() - 1
    if 2 ** count != size:
        raise ModelError(f"a model point over boolean terms has 2^n values, got {size}")
    literals = list(literals)
    for literal in literals:
        if literal.term.index >= count:
            raise ModelError(f"term {literal.term.name!r} is outside a {count}-term model")
    total = Fraction(0)
    for offset, value in enumerate(point.values):
        # bit (count - 1 - k) of the offset is 0 when term k is true
        if all(((offset >> (count - 1 - lit.term.index)) & 1) == (0 if lit.polarity else 1) for lit in literals):
            total += value
    return total


def primary_relation(predicate: Literal, subject: Literal, point: ModelPoint) -> PrimaryRelation:
    subject_mass = _mass(point, [subject])
    joint_mass = _mass(point, [subject, predicate])
    if subject_mass == 0:
        return PrimaryRelation.IMPOSSIBLE_SUBJECT
    if joint_mass == subject_mass:
        return PrimaryRelation.UNIVERSAL_AFFIRMATIVE_EXISTENTIAL
    if joint_mass == 0:
        return PrimaryRelation.UNIVERSAL_NEGATIVE_EXISTENTIAL
    return PrimaryRelation.PARTICULAR_INTERMEDIATE


def holds(stmt: CategoricalStatement, point: ModelPoint) -> bool:
    """Semantic truth of the statement at a point of the simplex."""
    return primary_relation(stmt.predicate, stmt.subject, point) in composite_definition(stmt.relation)


def conditional_text(predicate: Literal, subject: Literal, point: ModelPoint) -> str:
    """P(predicate | subject) at the point as an exact quotient, or `0/0` for an impossible subject."""
    subject_mass = _mass(point, [subject])
    if subject_mass == 0:
        return '0/0'
    return format_rational(_mass(point, [subject, predicate]) / subject_mass)


# -- text form ---------------------------------------------------------------

_NEGATIONS = ('~', '¬')
_CODE_TOKENS = ('a+', 'e+', 'á', 'é', 'a', 'e', 'i', 'o', 'u')
QUERY_MARK = '?'


def _strip_negation(text: str, whole: str) -> tuple:
    if text[:1] in _NEGATIONS:
        text = text[1:]
        if text[:1] in _NEGATIONS:
            raise StatementSyntaxError(whole, 'malformed literal: repeated negation')
        return False, text
    return True, text


def _scan(text: str, model: Model, allow_query: bool) -> tuple:
    whole = text
    body = unicodedata.normalize('NFC', ''.join(text.split()))
    if not body:
        raise StatementSyntaxError(whole, 'empty statement')
    names = sorted(model.names, key=len, reverse=True)
    tokens = _CODE_TOKENS + ((QUERY_MARK,) if allow_query else ())

    first_polarity, body = _strip_negation(body, whole)
    candidates = [name for name in names if body.startswith(name)]
    if not candidates:
        raise StatementSyntaxError(whole, f"unknown term at {body!r}; terms are {', '.join(model.names)}")
    reason: Optional[str] = None
    for name in candidates:
        rest = body[len(name):]
        token = next((t for t in tokens if rest.startswith(t)), None)
        if token is None:
            reason = f"unknown relation code at {rest!r}" if rest else 'missing relation code'
            continue
        tail = rest[len(token):]
        if not tail:
            reason = 'malformed literal: missing subject'
            continue
        second_polarity, tail = _strip_negation(tail, whole)
        if tail not in model.names:
            reason = f"unknown term {tail!r}" if tail else 'malformed literal: missing subject'
            continue
        predicate = model.literal(name, first_polarity)
        subject = model.literal(tail, second_polarity)
        return predicate, token, subject
    raise StatementSyntaxError(whole, reason or 'malformed statement')


def parse_statement(text: str, model: Model) -> CategoricalStatement:
    """Parse `<literal><code><literal>`, e.g. "AaB", "Ae+C", "Ai~C"."""
    predicate, token, subject = _scan(text, model, allow_query=False)
    return CategoricalStatement(predicate, subject, RelationCode.parse(token))


def parse_query(text: str, model: Model) -> tuple:
    """Parse a query such as "A?C" into its (predicate, subject) literals."""
    predicate, token, subject = _scan(text, model, allow_query=True)
    if token != QUERY_MARK:
        raise StatementSyntaxError(text, f"a query uses '{QUERY_MARK}' in place of the relation code")
    return predicate, subject


def format_statement(stmt: CategoricalStatement, ascii: bool = False) -> str:
    code = RelationCode(stmt.relation)
    return f"{stmt.predicate}{code.ascii if ascii else code.value}{stmt.subject}"
