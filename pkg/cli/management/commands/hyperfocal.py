from action.reduction import hyperfocal_data
from decide.verdicts import FrattiniInput, classify_hyperfocal, finiteness_sufficient

from ...documents import group_spec_document, parse_group_spec, read_document
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Hyperfocal subgroup [P, H], centralizer C_P(H) and the reduced spec."

    def add_arguments(self, parser):
        parser.add_argument('spec')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        parsed = parse_group_spec(read_document(options['spec']), options['spec'])
        pres = parsed.presentation() if isinstance(parsed, FrattiniInput) else parsed
        data = hyperfocal_data(pres)
        hyperfocal = classify_hyperfocal(data.hyperfocal.invariant_factors, pres.p)
        self.emit({
            'p': pres.p,
            'hyperfocal': list(hyperfocal.factors),
            'hyperfocal_kind': hyperfocal.kind.value,
            'centralizer': list(data.centralizer.invariant_factors),
            'sufficient': finiteness_sufficient(hyperfocal).value,
            'reduced': group_spec_document(data.reduced),
        }, options['output'])
