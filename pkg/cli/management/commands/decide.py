from django.core.management.base import CommandError

from decide.models import VerdictRecord
from decide.verdicts import FrattiniInput, Mode, Outcome, decide_abelian, decide_frattini

from ...documents import group_spec_document, parse_group_spec, read_document, verdict_document
from ..base import EXIT_UNKNOWN, ToolkitCommand


class Command(ToolkitCommand):
    help = "Decide tau-tilting finiteness of k[P x| H] from a group spec (.group.json)."

    def add_arguments(self, parser):
        parser.add_argument('spec', help="Group spec file.")
        parser.add_argument('--mode', choices=Mode.values, help="Override the mode given in the spec.")
        parser.add_argument('--save', action='store_true', help="Store the verdict in the archive.")
        super().add_arguments(parser)

    def handle(self, *args, **options):
        document = read_document(options['spec'])
        if options['mode'] and isinstance(document, dict):
            document = {**document, 'mode': options['mode']}
        parsed = parse_group_spec(document, options['spec'])
        if isinstance(parsed, FrattiniInput):
            verdict = decide_frattini(parsed)
        else:
            verdict = decide_abelian(parsed)
        result = verdict_document(verdict)
        if options['save']:
            record = VerdictRecord.store(group_spec_document(parsed), result)
            self.stderr.write(f"saved {record.digest}")
        self.emit(result, options['output'])
        if verdict.outcome == Outcome.UNKNOWN:
            raise CommandError(verdict.reason.label, returncode=EXIT_UNKNOWN)
