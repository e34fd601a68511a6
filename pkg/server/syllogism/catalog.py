"""The four figures and the 196 problems they generate."""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from tqdm import tqdm

from engine.deduce import DeductionResult, deduce_general
from engine.exceptions import EngineError
from engine.lp import DEFAULT_EPSILON, check_epsilon
from engine.model import standard_model
from engine.statements import CODES, CategoricalStatement, RelationCode

logger = logging.getLogger(__name__)

PROBLEM_COUNT = 4 * len(CODES) ** 2


class CatalogError(EngineError, ValueError):
    pass


@dataclass(frozen=True)
class Figure:
    number: int
    major_shape: tuple
    minor_shape: tuple

    @property
    def template(self) -> str:
        """`AmB, BnC` style template of the premises."""
        return f"{self.major_shape[0]}m{self.major_shape[1]}, {self.minor_shape[0]}n{self.minor_shape[1]}"


FIGURES = {
    1: Figure(1, ('A', 'B'), ('B', 'C')),
    2: Figure(2, ('B', 'A'), ('B', 'C')),
    3: Figure(3, ('A', 'B'), ('C', 'B')),
    4: Figure(4, ('B', 'A'), ('C', 'B')),
}


def figure(number) -> Figure:
    try:
        return FIGURES[int(number)]
    except (KeyError, TypeError, ValueError):
        raise CatalogError(f"figure must be one of 1, 2, 3, 4; got {number!r}") from None


@dataclass(frozen=True)
class Problem:
    figure: int
    major: RelationCode
    minor: RelationCode

    def __post_init__(self):
        object.__setattr__(self, 'figure', figure(self.figure).number)
        object.__setattr__(self, 'major', RelationCode.parse(str(self.major)))
        object.__setattr__(self, 'minor', RelationCode.parse(str(self.minor)))

    @property
    def key(self) -> tuple:
        return self.figure, self.major, self.minor

    def __str__(self) -> str:
        return f"{self.major}{self.minor}-{self.figure}"


def premises_of(problem: Problem) -> tuple:
    model = standard_model()
    shapes = FIGURES[problem.figure]
    major = CategoricalStatement(
        model.literal(shapes.major_shape[0]), model.literal(shapes.major_shape[1]), problem.major)
    minor = CategoricalStatement(
        model.literal(shapes.minor_shape[0]), model.literal(shapes.minor_shape[1]), problem.minor)
    return major, minor


def all_problems() -> list:
    """Every problem in table order: figure, then major code, then minor code."""
    return [Problem(number, major, minor) for number in FIGURES for major in CODES for minor in CODES]


def solve_problem(problem: Problem, eps: Fraction = DEFAULT_EPSILON) -> DeductionResult:
    """Deductions about A?C (and A?~C) from the problem's two premises."""
    model = standard_model()
    return deduce_general(premises_of(problem), model.literal('A'), model.literal('C'), eps, model=model)


def _solve_job(job: tuple) -> DeductionResult:
    problem, eps = job
    return solve_problem(problem, eps)


def resolve_jobs(value) -> int:
    if value in (None, 'auto'):
        return os.cpu_count() or 1
    try:
        jobs = int(value)
    except (TypeError, ValueError):
        raise CatalogError(f"jobs must be a positive integer or 'auto', got {value!r}") from None
    if jobs < 1:
        raise CatalogError(f"jobs must be a positive integer or 'auto', got {value!r}")
    return jobs


def enumerate_all(eps: Fraction = DEFAULT_EPSILON, jobs=1, progress: bool = False,
                  problems: Optional[Iterable[Problem]] = None) -> dict:
    """Results for every problem keyed by Problem, in table order whatever the worker count."""
    eps = check_epsilon(eps)
    jobs = resolve_jobs(jobs)
    problems = list(problems) if problems is not None else all_problems()
    logger.info("solving %d problems (%d LPs) with %d worker(s)", len(problems), 8 * len(problems), jobs)
    bar = dict(total=len(problems), desc='problems', unit='problem', disable=not progress, leave=False)
    work = [(problem, eps) for problem in problems]
    if jobs == 1:
        results = [_solve_job(job) for job in tqdm(work, **bar)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order
            results = list(tqdm(pool.map(_solve_job, work, chunksize=7), **bar))
    logger.info("enumeration finished")
    return dict(zip(problems, results))
