from django.core.management.base import CommandError

from engine.statements import RelationCode

from ...catalog import Problem, figure, solve_problem
from ...config import OutputFormat
from ...rendering import render_csv, render_json, render_solve_text
from ..base import EXIT_INFEASIBLE, SyllogismCommand


class Command(SyllogismCommand):
    help = 'Deduce the classical and complementary conclusions of one figure problem, e.g. "solve 2 e i".'

    def add_arguments(self, parser):
        parser.add_argument('figure', help='figure number 1..4')
        parser.add_argument('major', help='major premise code: a, á (a+), e, é (e+), i, o, u')
        parser.add_argument('minor', help='minor premise code')
        super().add_arguments(parser)

    def run(self, config, **options):
        problem = Problem(
            figure(options['figure']).number,
            RelationCode.parse(options['major']),
            RelationCode.parse(options['minor']),
        )
        result = solve_problem(problem, config.epsilon)
        if config.format is OutputFormat.JSON:
            self.stdout.write(render_json({problem: result}), ending='')
        elif config.format is OutputFormat.CSV:
            self.stdout.write(render_csv({problem: result}), ending='')
        else:
            self.stdout.write(render_solve_text(problem, result, config.epsilon), ending='')
        if not result.feasible:
            raise CommandError(f"premises of {problem} are inconsistent", returncode=EXIT_INFEASIBLE)
