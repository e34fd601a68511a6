"""Run configuration: settings.SYLLOGISM defaults overridden by command flags."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional

from django.conf import settings

from engine.lp import DEFAULT_EPSILON, check_epsilon

from .catalog import CatalogError, resolve_jobs


class OutputFormat(str, Enum):
    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'

    @classmethod
    def parse(cls, value: str) -> 'OutputFormat':
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            choices = ', '.join(f.value for f in cls)
            raise CatalogError(f"format must be one of {choices}; got {value!r}") from None


@dataclass(frozen=True)
class RunConfig:
    epsilon: Fraction = DEFAULT_EPSILON
    format: OutputFormat = OutputFormat.TEXT
    jobs: int = 1
    stability_epsilon: Fraction = Fraction(1, 1000)

    @classmethod
    def from_options(cls, options: Mapping, defaults: Optional[Mapping] = None) -> 'RunConfig':
        """Flags win over settings; both go through the same parsers."""
        defaults = defaults if defaults is not None else getattr(settings, 'SYLLOGISM', {})

        def pick(option: str, key: str, fallback):
            value = options.get(option)
            return value if value is not None else defaults.get(key, fallback)

        return cls(
            epsilon=check_epsilon(pick('epsilon', 'EPSILON', DEFAULT_EPSILON)),
            format=OutputFormat.parse(pick('format', 'FORMAT', 'text')),
            jobs=resolve_jobs(pick('jobs', 'JOBS', 'auto')),
            stability_epsilon=check_epsilon(pick('stability_epsilon', 'STABILITY_EPSILON', '1/1000')),
        )
