from repcheck.bricks import endomorphism_dimension
from repcheck.representations import eval_relations

from ...documents import parse_quiver, parse_rep, read_document
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Check a representation (.rep.json) against the relations of a quiver and test whether it is a brick."

    def add_arguments(self, parser):
        parser.add_argument('quiver')
        parser.add_argument('rep')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        quiver = parse_quiver(read_document(options['quiver']), options['quiver'])
        rep = parse_rep(read_document(options['rep']), quiver, options['rep'])
        violated = eval_relations(rep)
        dimension = endomorphism_dimension(rep)
        self.emit({
            'q': rep.q,
            'dims': list(rep.dims),
            'relations_known': not quiver.quiver_only,
            'satisfies_relations': violated is None,
            'violated_relation': violated,
            'endomorphism_dimension': dimension,
            'brick': not rep.is_zero and dimension == 1,
        }, options['output'])
