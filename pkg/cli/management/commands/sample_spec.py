import random

from core import samples

from ...documents import group_spec_document
from ..base import ToolkitCommand

CHARACTER_TABLES = {
    's3': samples.s3_table_document,
}


class Command(ToolkitCommand):
    help = "Write a curated sample, or a seeded random presentation, as a group spec document."

    def add_arguments(self, parser):
        parser.add_argument('name', choices=sorted([*samples.SAMPLES, *CHARACTER_TABLES, 'random']))
        parser.add_argument('--seed', type=int, default=0, help="Seed for 'random'.")
        parser.add_argument('--prime', type=int, choices=sorted(samples.BLOCK_SHAPES), help="Prime for 'random'.")
        super().add_arguments(parser)

    def handle(self, *args, **options):
        name = options['name']
        if name in CHARACTER_TABLES:
            document = CHARACTER_TABLES[name]()
        elif name == 'random':
            pres = samples.random_presentation(random.Random(options['seed']), p=options['prime'])
            document = group_spec_document(pres)
        else:
            document = group_spec_document(samples.SAMPLES[name]())
        self.emit(document, options['output'])
