import logging

from django.core.management.base import BaseCommand, CommandError

from engine.exceptions import EngineError, InfeasibleError, SolverError

from ..config import RunConfig

logger = logging.getLogger(__name__)

# Exit statuses shared by every command
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_MISMATCH = 3


class SyllogismCommand(BaseCommand):
    """Common flags (--epsilon, --format, --jobs) and error-to-exit-status mapping."""

    requires_system_checks = []
    with_jobs = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        exit_ = parser.exit

        # argparse reports usage errors with status 2, which is reserved here
        def exit(status=0, message=None):
            exit_(EXIT_USAGE if status == 2 else status, message)

        parser.exit = exit
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--epsilon', help='exact rational in (0, 1), e.g. 1/100')
        parser.add_argument('--format', help='text, csv or json')
        if self.with_jobs:
            parser.add_argument('--jobs', help="worker processes, or 'auto'")

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(options)
            self.run(config, **options)
        except CommandError:
            raise
        except SolverError:
            logger.exception("solver invariant failed")
            raise
        except InfeasibleError as exc:
            raise CommandError(str(exc), returncode=EXIT_INFEASIBLE)
        except EngineError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def run(self, config: RunConfig, **options):
        raise NotImplementedError('subclasses of SyllogismCommand must provide a run() method')
