from core.exceptions import NotQualifying
from zigzag.cycles import find_qualifying_cycles, is_qualifying, validate_zigzag

from ...documents import certificate_document, parse_certificate, parse_quiver, read_document
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Qualifying zigzag cycles of a quiver document, or check a certificate against it."

    def add_arguments(self, parser):
        parser.add_argument('quiver', help="Quiver document (.quiver.json).")
        parser.add_argument('--check', metavar='CERT', help="Validate this certificate instead of searching.")
        parser.add_argument('--max-cycle-len', type=int, help="Longest cycle to search (default: number of vertices).")
        parser.add_argument('--shortest', action='store_true', help="Only report cycles of the least length found.")
        super().add_arguments(parser)

    def handle(self, *args, **options):
        quiver = parse_quiver(read_document(options['quiver']), options['quiver'])
        if options['check']:
            arrows = parse_certificate(read_document(options['check']), options['check'])
            cycle = validate_zigzag(quiver, arrows)
            report = is_qualifying(quiver, cycle)
            self.emit({
                'valid': True,
                'qualifies': report.qualifies,
                'reason': report.reason.value,
                'explanation': report.reason.label,
                'certificate': certificate_document(quiver, cycle),
            }, options['output'])
            if not report.qualifies:
                raise NotQualifying(f"cycle {cycle.arrows} does not qualify: {report.reason.label}")
            return
        cycles = find_qualifying_cycles(
            quiver, max_len=options['max_cycle_len'], shortest_only=options['shortest'],
        )
        self.emit({
            'count': len(cycles),
            'cycles': [certificate_document(quiver, c) for c in cycles],
        }, options['output'])
