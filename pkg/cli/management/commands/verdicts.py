from decide.models import VerdictRecord
from decide.verdicts import Outcome

from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "List archived verdicts, most recently updated first."

    def add_arguments(self, parser):
        parser.add_argument('--outcome', choices=Outcome.values)
        parser.add_argument('--limit', type=int, default=50)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        records = VerdictRecord.objects.all()
        if options['outcome']:
            records = records.filter(outcome=options['outcome'])
        self.emit([
            {
                'digest': r.digest,
                'mode': r.mode,
                'outcome': r.outcome,
                'reason': r.reason,
                'hyperfocal': r.hyperfocal,
                'certificate': r.certificate,
                'spec': r.spec,
                'updated_at': r.updated_at.isoformat(),
            }
            for r in records[:options['limit']]
        ], options['output'])
