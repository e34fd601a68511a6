from django.core.management.base import CommandError

from engine.statements import RelationCode

from ...catalog import Problem, figure, solve_problem
from ...rendering import render_explain
from ..base import EXIT_INFEASIBLE, SyllogismCommand


class Command(SyllogismCommand):
    help = 'Show the derivation behind one figure problem: constraints, the eight LPs, bounds and criteria.'

    def add_arguments(self, parser):
        parser.add_argument('figure', help='figure number 1..4')
        parser.add_argument('major', help='major premise code')
        parser.add_argument('minor', help='minor premise code')
        parser.add_argument('--tables', action='store_true', help='also print the output probability tables')
        super().add_arguments(parser)

    def run(self, config, **options):
        problem = Problem(
            figure(options['figure']).number,
            RelationCode.parse(options['major']),
            RelationCode.parse(options['minor']),
        )
        result = solve_problem(problem, config.epsilon)
        self.stdout.write(render_explain(problem, result, config.epsilon, tables=options['tables']), ending='')
        if not result.feasible:
            raise CommandError(f"premises of {problem} are inconsistent", returncode=EXIT_INFEASIBLE)
