from django.core.management.base import CommandError

from core.conf import toolkit_setting
from repcheck.bricks import enumerate_bricks

from ...documents import parse_quiver, read_document, rep_document
from ..base import EXIT_INVALID, ToolkitCommand


def dimension_vector(text):
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError as exc:
        raise CommandError(f"bad dimension vector '{text}'", returncode=EXIT_INVALID) from exc


class Command(ToolkitCommand):
    help = "Count brick isoclasses of a quiver document at a dimension vector by exhaustive search."

    def add_arguments(self, parser):
        parser.add_argument('quiver')
        parser.add_argument('--dims', required=True, help="Comma separated vertex dimensions, e.g. 1,1.")
        parser.add_argument('--field-q', type=int, help="Order of the ground field (default TAUTILT_DEFAULT_FIELD_Q).")
        parser.add_argument('--representatives', action='store_true', help="List one representative per isoclass.")
        super().add_arguments(parser)

    def handle(self, *args, **options):
        quiver = parse_quiver(read_document(options['quiver']), options['quiver'])
        q = options['field_q'] or toolkit_setting('DEFAULT_FIELD_Q')
        census = enumerate_bricks(quiver, dimension_vector(options['dims']), q)
        result = {'q': q, 'dims': [int(d) for d in options['dims'].split(',')], 'count': census.count}
        if options['representatives']:
            result['representatives'] = [rep_document(rep) for rep in census.representatives]
        self.emit(result, options['output'])
