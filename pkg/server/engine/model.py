"""Parametric joint-probability model over boolean terms.

One parameter x_i per full truth assignment of the terms. Assignments are
enumerated with the first term most significant and T before F, so for the
terms (A, B, C) the table reads TTT -> x1, TTF -> x2, ... FFF -> x8.
Every event probability is then a sum of parameters, i.e. a LinearForm.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .exceptions import DimensionMismatch, InvalidPoint, ModelError

logger = logging.getLogger(__name__)

MAX_TERMS = 10
STANDARD_TERMS = ('A', 'B', 'C')

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """Exact `p/q` text ("1/100", "0", "-3/2")."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Term:
    name: str
    index: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Literal:
    term: Term
    polarity: bool = True

    def negate(self) -> 'Literal':
        return Literal(self.term, not self.polarity)

    def __str__(self) -> str:
        return self.term.name if self.polarity else f"~{self.term.name}"


@dataclass(frozen=True)
class LinearForm:
    """Affine function constant + sum_i coefficients[i-1] * x_i with exact coefficients."""

    coefficients: tuple
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, 'constant', Fraction(self.constant))

    @classmethod
    def zero(cls, size: int) -> 'LinearForm':
        return cls((0,) * size)

    @classmethod
    def variable(cls, size: int, index: int) -> 'LinearForm':
        """The form x_index (1-based, as printed)."""
        if not 1 <= index <= size:
            raise DimensionMismatch(size, index, what='parameter index')
        coefficients = [0] * size
        coefficients[index - 1] = 1
        return cls(tuple(coefficients))

    @classmethod
    def normalization(cls, size: int) -> 'LinearForm':
        return cls((1,) * size)

    @property
    def size(self) -> int:
        return len(self.coefficients)

    def _check(self, other: 'LinearForm') -> None:
        if other.size != self.size:
            raise DimensionMismatch(self.size, other.size)

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        self._check(other)
        return LinearForm(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.constant + other.constant,
        )

    def __sub__(self, other: 'LinearForm') -> 'LinearForm':
        self._check(other)
        return LinearForm(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
            self.constant - other.constant,
        )

    def __neg__(self) -> 'LinearForm':
        return LinearForm(tuple(-c for c in self.coefficients), -self.constant)

    def __mul__(self, factor: Rational) -> 'LinearForm':
        factor = Fraction(factor)
        return LinearForm(tuple(c * factor for c in self.coefficients), self.constant * factor)

    __rmul__ = __mul__

    def shift(self, amount: Rational) -> 'LinearForm':
        return LinearForm(self.coefficients, self.constant + Fraction(amount))

    def __str__(self) -> str:
        parts = []
        for index, coefficient in enumerate(self.coefficients, start=1):
            if not coefficient:
                continue
            magnitude = abs(coefficient)
            text = f"x{index}" if magnitude == 1 else f"{format_rational(magnitude)} x{index}"
            parts.append(('-' if coefficient < 0 else '+', text))
        if self.constant:
            parts.append(('-' if self.constant < 0 else '+', format_rational(abs(self.constant))))
        if not parts:
            return '0'
        sign, text = parts[0]
        out = text if sign == '+' else f"-{text}"
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def add(left: LinearForm, right: LinearForm) -> LinearForm:
    return left + right


def subtract(left: LinearForm, right: LinearForm) -> LinearForm:
    return left - right


@dataclass(frozen=True)
class ModelPoint:
    """A point of the probability simplex: each value in [0, 1], values summing to 1."""

    values: tuple

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        if not values:
            raise InvalidPoint('a model point needs at least one value')
        if any(v < 0 or v > 1 for v in values):
            raise InvalidPoint('every parameter value must lie in [0, 1]')
        if sum(values) != 1:
            raise InvalidPoint(f"parameter values sum to {format_rational(sum(values))}, not 1")

    @classmethod
    def uniform(cls, size: int) -> 'ModelPoint':
        return cls((Fraction(1, size),) * size)

    @classmethod
    def vertex(cls, size: int, index: int) -> 'ModelPoint':
        """All mass on parameter x_index (1-based)."""
        return cls(tuple(1 if i == index else 0 for i in range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return ', '.join(f"x{i}={format_rational(v)}" for i, v in enumerate(self.values, start=1) if v)


def evaluate(form: LinearForm, point: ModelPoint) -> Fraction:
    if form.size != point.size:
        raise DimensionMismatch(form.size, point.size, what='model point')
    return form.constant + sum((c * v for c, v in zip(form.coefficients, point.values) if c), Fraction(0))


@dataclass(frozen=True)
class Model:
    terms: tuple

    @property
    def size(self) -> int:
        return 2 ** len(self.terms)

    @property
    def names(self) -> tuple:
        return tuple(t.name for t in self.terms)

    def term(self, name: str) -> Term:
        for term in self.terms:
            if term.name == name:
                return term
        raise ModelError(f"unknown term {name!r}; model terms are {', '.join(self.names)}")

    def literal(self, name: str, polarity: bool = True) -> Literal:
        return Literal(self.term(name), polarity)

    def owns(self, term: Term) -> bool:
        return term.index < len(self.terms) and self.terms[term.index] == term

    def assignments(self) -> Iterator[tuple]:
        """Full truth assignments in parameter order (x1 first)."""
        return itertools.product((True, False), repeat=len(self.terms))

    def parameter_of(self, assignment: Sequence[bool]) -> int:
        """1-based parameter index of a full assignment."""
        if len(assignment) != len(self.terms):
            raise DimensionMismatch(len(self.terms), len(assignment), what='assignment')
        index = 0
        for value in assignment:
            index = (index << 1) | (0 if value else 1)
        return index + 1

    def normalization(self) -> LinearForm:
        return LinearForm.normalization(self.size)


def build_model(terms: Iterable[Union[str, Term]]) -> Model:
    items = list(terms)
    names = [t.name if isinstance(t, Term) else str(t) for t in items]
    if not 1 <= len(names) <= MAX_TERMS:
        raise ModelError(f"a model needs between 1 and {MAX_TERMS} terms, got {len(names)}")
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise ModelError(f"duplicate term names: {', '.join(duplicates)}")
    for position, term in enumerate(items):
        if isinstance(term, Term) and term.index != position:
            raise ModelError(f"term {term.name!r} has index {term.index}, expected {position}")
    model = Model(tuple(Term(name, i) for i, name in enumerate(names)))
    logger.debug("built model over %s with %d parameters", ','.join(names), model.size)
    return model


@functools.lru_cache(maxsize=None)
def standard_model() -> Model:
    """The three-term model (A major, B middle, C minor) used by every figure problem."""
    return build_model(STANDARD_TERMS)


def prob_of_event(model: Model, literals: Iterable[Literal]) -> LinearForm:
    """Sum of the parameters whose assignment agrees with every literal."""
    required = {}
    for literal in literals:
        if not model.owns(literal.term):
            raise ModelError(f"term {literal.term.name!r} does not belong to this model")
        if literal.term.index in required:
            raise ModelError(f"two literals on term {literal.term.name!r}")
        required[literal.term.index] = literal.polarity
    coefficients = [
        1 if all(assignment[i] == value for i, value in required.items()) else 0
        for assignment in model.assignments()
    ]
    return LinearForm(tuple(coefficients))


def output_table(model: Model, names: Sequence[str]) -> list:
    """Marginal table over the named terms: rows of (truth values, LinearForm), T before F."""
    terms = [model.term(name) for name in names]
    rows = []
    for values in itertools.product((True, False), repeat=len(terms)):
        literals = [Literal(term, value) for term, value in zip(terms, values)]
        rows.append((values, prob_of_event(model, literals)))
    return rows
