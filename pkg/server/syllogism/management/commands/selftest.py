import logging

from django.core.management.base import CommandError

from engine.model import format_rational

from ...catalog import all_problems, enumerate_all, figure
from ...golden import compare, golden_tables
from ...rendering import format_codes
from ..base import EXIT_MISMATCH, SyllogismCommand

logger = logging.getLogger(__name__)


def _describe(mismatch, left: str, right: str) -> str:
    problem = mismatch.problem
    return (f"  figure {problem.figure} {mismatch.kind} row {problem.major} column {problem.minor}: "
            f"{left} {{{format_codes(mismatch.expected)}}}, {right} {{{format_codes(mismatch.computed)}}}")


class Command(SyllogismCommand):
    help = 'Recompute every figure problem, compare with the published tables and check epsilon stability.'
    with_jobs = True

    def add_arguments(self, parser):
        parser.add_argument('--stability-epsilon', dest='stability_epsilon',
                            help='second epsilon for the stability check (default 1/1000)')
        parser.add_argument('--figure', action='append', dest='figures', help='restrict to a figure (repeatable)')
        parser.add_argument('--progress', action='store_true', help='progress bar on stderr')
        super().add_arguments(parser)

    def run(self, config, **options):
        wanted = {figure(n).number for n in options.get('figures') or ()}
        problems = [p for p in all_problems() if not wanted or p.figure in wanted]
        progress = options.get('progress', False)

        computed = enumerate_all(config.epsilon, config.jobs, progress=progress, problems=problems)
        mismatches = compare(computed, golden_tables())
        failed = {m.problem for m in mismatches}
        for mismatch in mismatches:
            self.stdout.write(_describe(mismatch, 'expected', 'computed'))

        second = enumerate_all(config.stability_epsilon, config.jobs, progress=progress, problems=problems)
        changed = compare(second, computed)
        if changed:
            logger.warning("%d cells depend on epsilon", len(changed))
            self.stdout.write(f"cells that change between ε = {format_rational(config.epsilon)} "
                              f"and ε = {format_rational(config.stability_epsilon)}:")
        for mismatch in changed:
            self.stdout.write(_describe(mismatch, format_rational(config.epsilon),
                                        format_rational(config.stability_epsilon)))
        self.stdout.write(f"{len(problems) - len(failed)}/{len(problems)} problems match; "
                          f"ε-stability: {len(changed)} cells changed")

        logger.info("selftest: %d mismatches, %d unstable cells", len(mismatches), len(changed))
        if mismatches:
            raise CommandError(f"{len(mismatches)} cells differ from the published tables",
                               returncode=EXIT_MISMATCH)
