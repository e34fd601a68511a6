from ...catalog import all_problems, enumerate_all, figure
from ...config import OutputFormat
from ...rendering import render_csv, render_json, render_tables_text
from ..base import SyllogismCommand


class Command(SyllogismCommand):
    help = 'Solve all 196 figure problems and print the classical and complementary tables.'
    with_jobs = True

    def add_arguments(self, parser):
        parser.add_argument('--figure', action='append', dest='figures', help='restrict to a figure (repeatable)')
        parser.add_argument('--progress', action='store_true', help='progress bar on stderr')
        super().add_arguments(parser)

    def run(self, config, **options):
        wanted = {figure(n).number for n in options.get('figures') or ()}
        problems = [p for p in all_problems() if not wanted or p.figure in wanted]
        results = enumerate_all(config.epsilon, config.jobs, progress=options.get('progress', False),
                                problems=problems)
        if config.format is OutputFormat.JSON:
            self.stdout.write(render_json(results), ending='')
        elif config.format is OutputFormat.CSV:
            self.stdout.write(render_csv(results), ending='')
        else:
            self.stdout.write(render_tables_text(results), ending='')
