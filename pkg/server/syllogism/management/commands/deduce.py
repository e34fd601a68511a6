from django.core.management.base import CommandError

from engine.deduce import deduce_general
from engine.model import STANDARD_TERMS, build_model, standard_model
from engine.statements import parse_query, parse_statement

from ...config import OutputFormat
from ...rendering import format_codes, render_deduce_text
from ...serializers import DeductionSerializer, render_data
from ..base import EXIT_INFEASIBLE, SyllogismCommand


def infer_terms(texts) -> list:
    """Single-letter upper-case term names in alphabetical order; A, B, C always included."""
    names = {ch for text in texts for ch in text if ch.isupper()}
    return sorted(names | set(STANDARD_TERMS))


class Command(SyllogismCommand):
    help = 'Deduce what follows about a query such as "A?C" from any premises, e.g. -p BeA -p BiC -q A?C.'

    def add_arguments(self, parser):
        parser.add_argument('-p', '--premise', action='append', dest='premises', default=[],
                            help='premise such as "AaB", "Ae+C" or "Ai~C" (repeatable)')
        parser.add_argument('-q', '--query', required=True, help='query such as "A?C"')
        parser.add_argument('--terms', help='comma-separated term names; inferred from the statements if omitted')
        super().add_arguments(parser)

    def run(self, config, **options):
        texts = list(options['premises']) + [options['query']]
        if options.get('terms'):
            names = [name.strip() for name in options['terms'].split(',') if name.strip()]
        else:
            names = infer_terms(texts)
        model = standard_model() if tuple(names) == STANDARD_TERMS else build_model(names)
        premises = [parse_statement(text, model) for text in options['premises']]
        predicate, subject = parse_query(options['query'], model)
        result = deduce_general(premises, predicate, subject, config.epsilon, model=model)

        if config.format is OutputFormat.TEXT:
            self.stdout.write(render_deduce_text(premises, predicate, subject, result, config.epsilon), ending='')
        else:
            self.stdout.write(self._structured(premises, predicate, subject, result, config), ending='')
        if not result.feasible:
            raise CommandError('premises are inconsistent', returncode=EXIT_INFEASIBLE)

    def _structured(self, premises, predicate, subject, result, config) -> str:
        payload = {
            'premises': [str(p) for p in premises],
            'query': f"{predicate}?{subject}",
            'feasible': result.feasible,
            'classical': result.classical,
            'complementary': result.complementary,
            'alpha': list(result.bounds.alpha) if result.bounds else [],
            'beta': list(result.bounds.beta) if result.bounds else [],
        }
        if config.format is OutputFormat.JSON:
            return render_data(DeductionSerializer(payload).data)
        lines = ['query,kind,deductions']
        for kind, codes in (('classical', result.classical), ('complementary', result.complementary)):
            lines.append(f'{payload["query"]},{kind},"{format_codes(codes, ";")}"')
        return '\n'.join(lines) + '\n'
