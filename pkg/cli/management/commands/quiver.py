from pathlib import Path

from django.core.management.base import CommandError

from action.presentation import require_valid
from action.reduction import reduce_to_hyperfocal
from decide.verdicts import FrattiniInput
from quiverbuild.quivers import arrow_count_matrix, presentation_quiver, to_dot
from quiverbuild.tables import quiver_from_character_table

from ...documents import parse_character_table, parse_group_spec, quiver_document, read_document
from ..base import EXIT_INVALID, ToolkitCommand


class Command(ToolkitCommand):
    help = "Bound quiver of k[P x| H] as a quiver document, or the quiver of a character table."

    def add_arguments(self, parser):
        parser.add_argument('spec', help="Group spec, or character table with --character-table.")
        parser.add_argument('--reduced', action='store_true', help="Build the quiver of [P, H] x| H.")
        parser.add_argument('--dot', metavar='PATH', help="Also write Graphviz source to PATH.")
        parser.add_argument(
            '--character-table', action='store_true',
            help="Read a character table document and report arrow counts.",
        )
        super().add_arguments(parser)

    def handle(self, *args, **options):
        document = read_document(options['spec'])
        if options['character_table']:
            quiver = quiver_from_character_table(parse_character_table(document, options['spec']))
            result = {**quiver_document(quiver), 'arrow_counts': arrow_count_matrix(quiver)}
        else:
            parsed = parse_group_spec(document, options['spec'])
            pres = require_valid(parsed.presentation() if isinstance(parsed, FrattiniInput) else parsed)
            if options['reduced']:
                pres = reduce_to_hyperfocal(pres)
            _, quiver = presentation_quiver(pres)
            result = quiver_document(quiver)
        if options['dot']:
            try:
                Path(options['dot']).write_text(to_dot(quiver), encoding='utf-8')
            except OSError as exc:
                raise CommandError(f"{options['dot']}: {exc.strerror}", returncode=EXIT_INVALID) from exc
        self.emit(result, options['output'])
