import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from action.reduction import reduce_to_hyperfocal
from core import samples
from core.exceptions import SpecParseError
from decide.models import VerdictRecord
from decide.verdicts import FrattiniInput
from quiverbuild.quivers import make_quiver, presentation_quiver
from repcheck.bricks import pull_back_cycle_rep
from zigzag.cycles import find_qualifying_cycles

from .documents import group_spec_document, parse_group_spec, parse_quiver, quiver_document, rep_document

FIXTURES = Path(__file__).resolve().parent / 'fixtures'

G1_DOCUMENT = {
    'p': 2,
    'P': {'blocks': [{'exponent': 1, 'multiplicity': 2}]},
    'H': {'orders': [3]},
    'action': [{'generator': 0, 'blocks': [[[0, 1], [1, 1]]]}],
}

FRATTINI_RANK_TWO = {
    'p': 2,
    'mode': 'frattini',
    'n': 2,
    'H': {'orders': [3]},
    'action': [{'generator': 0, 'matrix': [[0, 1], [1, 1]]}],
}


def with_action(matrix):
    return {**G1_DOCUMENT, 'action': [{'generator': 0, 'blocks': [matrix]}]}


class CommandMixin:

    def setUp(self):
        super().setUp()
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.tmp = Path(tmp.name)

    def write(self, name, document):
        path = self.tmp / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding='utf-8')
        return str(path)

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return json.loads(out.getvalue())

    def assertExitCode(self, code, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command(*args, stdout=out, stderr=StringIO())
        self.assertEqual(cm.exception.returncode, code)
        return cm.exception, out.getvalue()


class ParseGroupSpecTests(SimpleTestCase):

    def test_g1(self):
        pres = parse_group_spec(json.dumps(G1_DOCUMENT))
        self.assertEqual(pres.pgroup.blocks, ((1, 2),))
        self.assertEqual(pres.hgroup.generator_orders, (3,))
        self.assertEqual(pres.action[0].to_lists(), [[[0, 1], [1, 1]]])
        self.assertEqual(pres, samples.g1())

    def test_serialized_samples_parse_back(self):
        for name, build in samples.SAMPLES.items():
            with self.subTest(name):
                pres = build()
                document = group_spec_document(pres)
                self.assertEqual(parse_group_spec(json.dumps(document)), pres)
                self.assertEqual(group_spec_document(parse_group_spec(document)), document)

    def test_empty_blocks(self):
        pres = parse_group_spec({
            'p': 3, 'P': {'blocks': []}, 'H': {'orders': [2]}, 'action': [{'generator': 0, 'blocks': []}],
        })
        self.assertEqual(pres.pgroup.order, 1)

    def test_non_square_matrix(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec(with_action([[0, 1], [1]]))
        self.assertEqual(cm.exception.location, 'action[0].blocks[0][1]')

    def test_non_integer_entry(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec(with_action([[0, 'x'], [1, 1]]))
        self.assertEqual(cm.exception.location, 'action[0].blocks[0][0][1]')

    def test_unknown_field(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec({**G1_DOCUMENT, 'Q': 1})
        self.assertEqual(cm.exception.location, 'Q')
        self.assertIn("unknown field 'Q'", str(cm.exception))

    def test_unknown_nested_field(self):
        document = {**G1_DOCUMENT, 'P': {'blocks': [{'exponent': 1, 'multiplicity': 2, 'rank': 2}]}}
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec(document)
        self.assertEqual(cm.exception.location, 'P.blocks[0].rank')

    def test_missing_prime(self):
        document = dict(G1_DOCUMENT)
        del document['p']
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec(document)
        self.assertEqual(cm.exception.location, 'p')

    def test_malformed_json(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec('{"p": 2,')
        self.assertTrue(cm.exception.location.startswith('line 1 column'))

    def test_duplicate_generator(self):
        document = {**G1_DOCUMENT, 'action': G1_DOCUMENT['action'] * 2}
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec(document)
        self.assertEqual(cm.exception.location, 'action[1].generator')

    def test_missing_generator(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec({**G1_DOCUMENT, 'action': []})
        self.assertEqual(cm.exception.location, 'action')

    def test_frattini(self):
        inp = parse_group_spec(FRATTINI_RANK_TWO)
        self.assertIsInstance(inp, FrattiniInput)
        self.assertEqual((inp.p, inp.n, inp.orders), (2, 2, (3,)))
        self.assertEqual(group_spec_document(inp), FRATTINI_RANK_TWO)

    def test_frattini_rejects_blocks_of_p(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec({**FRATTINI_RANK_TWO, 'P': G1_DOCUMENT['P']})
        self.assertEqual(cm.exception.location, 'P')

    def test_abelian_rejects_rank(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_group_spec({**G1_DOCUMENT, 'n': 2})
        self.assertEqual(cm.exception.location, 'n')


class QuiverDocumentTests(SimpleTestCase):

    def test_parse_back(self):
        _, quiver = presentation_quiver(samples.worked_example())
        document = quiver_document(quiver)
        parsed = parse_quiver(json.loads(json.dumps(document)))
        self.assertEqual(quiver_document(parsed), document)
        self.assertEqual(parsed.arrows, quiver.arrows)
        self.assertEqual(parsed.relations, quiver.relations)

    def test_power_relation_must_follow_arrows(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        document = quiver_document(quiver)
        document['relations']['powers'][0]['label'] = [3, 1]
        with self.assertRaises(SpecParseError) as cm:
            parse_quiver(document)
        self.assertEqual(cm.exception.location, 'relations.powers[0]')

    def test_arrow_to_unknown_vertex(self):
        document = quiver_document(make_quiver(('x', 'y'), [(0, 1, (0, 1))]))
        document['arrows'][0]['tgt'] = 2
        with self.assertRaises(SpecParseError) as cm:
            parse_quiver(document)
        self.assertEqual(cm.exception.location, 'arrows[0].tgt')

    def parallel_pair(self, left, right):
        document = quiver_document(make_quiver(('x', 'y'), [(0, 1, (0, 1)), (0, 1, (0, 2))]))
        document['relations'] = {
            'commutators': [{'id': 0, 'vertex': 0, 'labels': [[0, 1], [0, 2]], 'left': left, 'right': right}],
            'powers': [],
        }
        return document

    def test_commutator_paths_must_compose(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_quiver(self.parallel_pair([0, 1], [1, 0]))
        self.assertEqual(cm.exception.location, 'relations.commutators[0].left')
        self.assertIn('do not compose', str(cm.exception))

    def test_commutator_paths_have_two_arrows(self):
        with self.assertRaises(SpecParseError) as cm:
            parse_quiver(self.parallel_pair([0], [1]))
        self.assertEqual(cm.exception.location, 'relations.commutators[0].left')

    def test_commutator_paths_leave_their_vertex(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        document = quiver_document(quiver)
        commutator = document['relations']['commutators'][0]
        commutator['vertex'] = (commutator['vertex'] + 1) % 3
        with self.assertRaises(SpecParseError) as cm:
            parse_quiver(document)
        self.assertEqual(cm.exception.location, 'relations.commutators[0].left')


class DecideCommandTests(CommandMixin, SimpleTestCase):

    def test_g2_is_infinite_with_a_triangle(self):
        result = self.run_command('decide', self.write('g2.group.json', group_spec_document(samples.g2())))
        self.assertEqual(result['outcome'], 'infinite')
        self.assertEqual(result['reason'], 'large_hyperfocal')
        self.assertEqual(result['hyperfocal'], [4, 4])
        self.assertFalse(result['classification_only'])
        certificate = result['certificate']
        self.assertEqual((certificate['length'], certificate['parity']), (3, 'odd'))
        self.assertEqual(certificate['qualification'], 'closing_path_absent')

    def test_g1_is_finite(self):
        result = self.run_command('decide', self.write('g1.group.json', G1_DOCUMENT))
        self.assertEqual((result['outcome'], result['reason']), ('finite', 'klein_four'))
        self.assertEqual(result['hyperfocal'], [2, 2])
        self.assertNotIn('certificate', result)

    def test_frattini_rank_two_is_unknown(self):
        _, out = self.assertExitCode(3, 'decide', self.write('f.group.json', FRATTINI_RANK_TWO))
        result = json.loads(out)
        self.assertEqual(result['outcome'], 'unknown')
        self.assertEqual(result['frattini_rank'], 2)

    def test_mode_flag(self):
        document = {key: value for key, value in FRATTINI_RANK_TWO.items() if key != 'mode'}
        path = self.write('f.group.json', document)
        self.assertExitCode(4, 'decide', path)
        self.assertExitCode(3, 'decide', path, '--mode', 'frattini')

    def test_p_divides_the_order_of_h(self):
        document = {
            'p': 3, 'P': {'blocks': [{'exponent': 1, 'multiplicity': 1}]}, 'H': {'orders': [3]},
            'action': [{'generator': 0, 'blocks': [[[1]]]}],
        }
        error, _ = self.assertExitCode(4, 'decide', self.write('bad.group.json', document))
        self.assertIn('divides', str(error))

    def test_parse_error_carries_location(self):
        error, _ = self.assertExitCode(4, 'decide', self.write('bad.group.json', with_action([[0, 1], [1]])))
        self.assertIn('action[0].blocks[0][1]', str(error))

    def test_malformed_json(self):
        error, _ = self.assertExitCode(4, 'decide', self.write('bad.group.json', '{"p": 2,\n  "H": }'))
        self.assertIn('bad.group.json:2:', str(error))

    def test_missing_file(self):
        self.assertExitCode(4, 'decide', str(self.tmp / 'absent.group.json'))

    def test_output_file(self):
        output = self.tmp / 'g2.verdict.json'
        result = self.run_command('decide', self.write('g2.group.json', group_spec_document(samples.g2())), '--output', str(output))
        self.assertEqual(json.loads(output.read_text()), result)


class VerdictArchiveTests(CommandMixin, TestCase):

    def test_save_and_list(self):
        path = self.write('g2.group.json', group_spec_document(samples.g2()))
        self.run_command('decide', path, '--save')
        self.run_command('decide', path, '--save')
        self.assertEqual(VerdictRecord.objects.count(), 1)

        listed = self.run_command('verdicts')
        self.assertEqual(len(listed), 1)
        self.assertEqual(listed[0]['outcome'], 'infinite')
        self.assertEqual(listed[0]['hyperfocal'], [4, 4])
        self.assertEqual(listed[0]['spec'], group_spec_document(samples.g2()))
        self.assertEqual(self.run_command('verdicts', '--outcome', 'finite'), [])

    def test_unsaved_by_default(self):
        self.run_command('decide', self.write('g1.group.json', G1_DOCUMENT))
        self.assertFalse(VerdictRecord.objects.exists())


class QuiverCommandTests(CommandMixin, SimpleTestCase):

    def test_worked_example(self):
        path = self.write('ex.group.json', group_spec_document(samples.worked_example()))
        result = self.run_command('quiver', path)
        self.assertEqual(result['orders'], [4])
        self.assertEqual(result['vertices'], [[0], [1], [2], [3]])
        self.assertEqual(len(result['arrows']), 12)
        self.assertEqual(result['labels'], [
            {'label': [1, 1], 'character': [1]},
            {'label': [1, 2], 'character': [3]},
            {'label': [2, 1], 'character': [2]},
        ])
        self.assertEqual(len(result['relations']['commutators']), 12)
        lengths = {(tuple(r['label']), r['length']) for r in result['relations']['powers']}
        self.assertEqual(lengths, {((1, 1), 3), ((1, 2), 3), ((2, 1), 9)})
        self.assertEqual(len(result['relations']['powers']), 12)
        for arrow in result['arrows']:
            character = next(x['character'][0] for x in result['labels'] if x['label'] == arrow['label'])
            self.assertEqual(arrow['tgt'], (arrow['src'] + character) % 4)

    def test_worked_example_matches_golden_file(self):
        path = self.write('ex.group.json', group_spec_document(samples.worked_example()))
        golden = (FIXTURES / 'worked-example.quiver.json').read_text(encoding='utf-8')
        for _ in range(2):
            out = StringIO()
            call_command('quiver', path, stdout=out)
            self.assertEqual(out.getvalue(), golden)

    def test_connectivity(self):
        reduced = self.run_command('quiver', self.write('g2.group.json', group_spec_document(samples.g2())), '--reduced')
        self.assertTrue(reduced['connected'])
        c4_on_c5 = {'p': 5, 'P': {'blocks': [{'exponent': 1, 'multiplicity': 1}]}, 'H': {'orders': [4]},
                    'action': [{'generator': 0, 'blocks': [[[4]]]}]}
        result = self.run_command('quiver', self.write('c4c5.group.json', c4_on_c5))
        self.assertEqual(len(result['vertices']), 4)
        self.assertFalse(result['connected'])

    def test_reduced(self):
        path = self.write('pf.group.json', group_spec_document(samples.partial_fixed()))
        full = self.run_command('quiver', path)
        reduced = self.run_command('quiver', path, '--reduced')
        self.assertEqual(len(full['arrows']), 4)
        self.assertEqual(len(reduced['arrows']), 2)
        self.assertFalse(any(a['src'] == a['tgt'] for a in reduced['arrows']))

    def test_dot(self):
        dot = self.tmp / 'g2.dot'
        path = self.write('g2.group.json', group_spec_document(samples.g2()))
        self.run_command('quiver', path, '--reduced', '--dot', str(dot))
        text = dot.read_text()
        self.assertTrue(text.startswith('digraph quiver {'))
        self.assertEqual(text.count('->'), 6)

    def test_character_table(self):
        path = self.write('s3.chartable.json', samples.s3_table_document())
        result = self.run_command('quiver', path, '--character-table')
        self.assertEqual(result['arrow_counts'], [[1, 1, 0], [1, 2, 1], [0, 1, 1]])
        self.assertEqual(result['vertices'], ['triv', 'std', 'sgn'])
        self.assertIsNone(result['relations'])

    def test_character_table_with_short_row(self):
        document = samples.s3_table_document()
        document['characters'][1]['values'] = [2, 0]
        error, _ = self.assertExitCode(4, 'quiver', self.write('s3.chartable.json', document), '--character-table')
        self.assertIn('characters[1].values', str(error))


class HyperfocalCommandTests(CommandMixin, SimpleTestCase):

    def test_g2(self):
        result = self.run_command('hyperfocal', self.write('g2.group.json', group_spec_document(samples.g2())))
        self.assertEqual(result['hyperfocal'], [4, 4])
        self.assertEqual(result['centralizer'], [])
        self.assertEqual(result['hyperfocal_kind'], 'other')
        self.assertEqual(result['sufficient'], 'unknown')

    def test_partial_fixed(self):
        result = self.run_command('hyperfocal', self.write('pf.group.json', group_spec_document(samples.partial_fixed())))
        self.assertEqual(result['hyperfocal'], [3])
        self.assertEqual(result['centralizer'], [3])
        self.assertEqual(result['sufficient'], 'yes')
        self.assertEqual(result['reduced']['P'], {'blocks': [{'exponent': 1, 'multiplicity': 1}]})
        self.assertEqual(result['reduced']['action'], [{'generator': 0, 'blocks': [[[2]]]}])


class ZigzagCommandTests(CommandMixin, SimpleTestCase):

    def quiver_file(self, pres, name='q.quiver.json'):
        output = self.tmp / name
        self.run_command('quiver', self.write('spec.group.json', group_spec_document(pres)), '--reduced', '--output', str(output))
        return str(output)

    def test_certificate_round_trip(self):
        quiver_path = self.quiver_file(samples.g2())
        verdict = self.run_command('decide', self.write('g2.group.json', group_spec_document(samples.g2())))
        certificate_path = self.write('g2.cert.json', verdict['certificate'])
        result = self.run_command('zigzag', quiver_path, '--check', certificate_path)
        self.assertTrue(result['valid'])
        self.assertTrue(result['qualifies'])
        self.assertEqual(result['certificate'], verdict['certificate'])

    def test_search(self):
        result = self.run_command('zigzag', self.quiver_file(samples.g2()), '--shortest')
        self.assertGreater(result['count'], 0)
        self.assertEqual({c['length'] for c in result['cycles']}, {3})

    def test_search_matches_library(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        result = self.run_command('zigzag', self.quiver_file(samples.g2()), '--max-cycle-len', '3')
        self.assertEqual(
            [c['arrows'] for c in result['cycles']],
            [list(c.arrows) for c in find_qualifying_cycles(quiver, max_len=3)],
        )

    def test_finite_example_has_no_cycles(self):
        result = self.run_command('zigzag', self.quiver_file(samples.g1()))
        self.assertEqual(result, {'count': 0, 'cycles': []})

    def test_non_qualifying_certificate(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g1()))
        arrows = [quiver.arrow_from(0, (1, 1)).id, quiver.arrow_from(2, (1, 2)).id, quiver.arrow_from(2, (1, 1)).id]
        certificate = self.write('c.json', {'arrows': arrows})
        error, out = self.assertExitCode(4, 'zigzag', self.quiver_file(samples.g1()), '--check', certificate)
        self.assertEqual(json.loads(out)['reason'], 'closing_path_appears')

    def test_invalid_certificate(self):
        error, _ = self.assertExitCode(4, 'zigzag', self.quiver_file(samples.g2()), '--check', self.write('c.json', {'arrows': [0]}))
        self.assertIn('length', str(error))

    def test_max_cycle_length_too_small(self):
        self.assertExitCode(4, 'zigzag', self.quiver_file(samples.g2()), '--max-cycle-len', '1')


class CheckRepCommandTests(CommandMixin, SimpleTestCase):

    def setUp(self):
        super().setUp()
        _, self.quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        self.quiver_path = self.write('g2.quiver.json', quiver_document(self.quiver))

    def test_cycle_brick(self):
        cycle = find_qualifying_cycles(self.quiver)[0]
        rep = pull_back_cycle_rep(self.quiver, cycle, 3, 4)
        result = self.run_command('check_rep', self.quiver_path, self.write('b.rep.json', rep_document(rep)))
        self.assertTrue(result['satisfies_relations'])
        self.assertTrue(result['brick'])
        self.assertEqual(result['endomorphism_dimension'], 1)

    def test_power_relation_violated(self):
        ones = {str(self.quiver.arrow_from(v, (2, 1)).id): [[1]] for v in range(3)}
        rep = {'q': 2, 'dims': {'0': 1, '1': 1, '2': 1}, 'matrices': ones}
        result = self.run_command('check_rep', self.quiver_path, self.write('r.rep.json', rep))
        self.assertFalse(result['satisfies_relations'])
        self.assertIsNotNone(result['violated_relation'])

    def test_simple_is_a_brick(self):
        rep = {'q': 2, 'dims': {'1': 1}}
        result = self.run_command('check_rep', self.quiver_path, self.write('s.rep.json', rep))
        self.assertEqual((result['dims'], result['brick']), ([0, 1, 0], True))

    def test_field_order_must_be_a_prime_power(self):
        self.assertExitCode(4, 'check_rep', self.quiver_path, self.write('r.rep.json', {'q': 6, 'dims': {}}))

    def test_wrong_matrix_shape(self):
        rep = {'q': 2, 'dims': {'0': 1}, 'matrices': {'0': [[1, 1]]}}
        self.assertExitCode(4, 'check_rep', self.quiver_path, self.write('r.rep.json', rep))

    def test_unknown_vertex(self):
        error, _ = self.assertExitCode(4, 'check_rep', self.quiver_path, self.write('r.rep.json', {'q': 2, 'dims': {'7': 1}}))
        self.assertIn('dims.7', str(error))

    def test_commutator_that_does_not_compose(self):
        document = quiver_document(make_quiver(('x', 'y'), [(0, 1, (0, 1)), (0, 1, (0, 2))]))
        document['relations'] = {
            'commutators': [{'id': 0, 'vertex': 0, 'labels': [[0, 1], [0, 2]], 'left': [0, 1], 'right': [1, 0]}],
            'powers': [],
        }
        rep = {'q': 2, 'dims': {'0': 1, '1': 2}}
        error, _ = self.assertExitCode(
            4, 'check_rep', self.write('bad.quiver.json', document), self.write('r.rep.json', rep),
        )
        self.assertIn('relations.commutators[0].left', str(error))


class OracleBricksCommandTests(CommandMixin, SimpleTestCase):

    def setUp(self):
        super().setUp()
        kronecker = make_quiver(('x', 'y'), [(0, 1, (0, 1)), (0, 1, (0, 2))])
        self.path = self.write('k.quiver.json', quiver_document(kronecker))

    def test_kronecker(self):
        result = self.run_command('oracle_bricks', self.path, '--dims', '1,1', '--field-q', '3')
        self.assertEqual(result, {'q': 3, 'dims': [1, 1], 'count': 4})

    @override_settings(TAUTILT_DEFAULT_FIELD_Q=2)
    def test_default_field(self):
        self.assertEqual(self.run_command('oracle_bricks', self.path, '--dims', '1,1')['count'], 3)

    def test_representatives(self):
        result = self.run_command('oracle_bricks', self.path, '--dims', '1,1', '--field-q', '2', '--representatives')
        self.assertEqual(len(result['representatives']), result['count'])
        self.assertEqual(result['representatives'][0], {'q': 2, 'dims': {'0': 1, '1': 1}, 'matrices': {'0': [[0]], '1': [[1]]}})

    def test_bad_dimension_vectors(self):
        self.assertExitCode(4, 'oracle_bricks', self.path, '--dims', '1')
        self.assertExitCode(4, 'oracle_bricks', self.path, '--dims', 'a,b')

    @override_settings(TAUTILT_BRICK_SEARCH_CAP=8)
    def test_search_cap(self):
        self.assertExitCode(4, 'oracle_bricks', self.path, '--dims', '1,1', '--field-q', '4')


class SampleSpecCommandTests(CommandMixin, SimpleTestCase):

    def test_curated(self):
        self.assertEqual(self.run_command('sample_spec', 'g1'), group_spec_document(samples.g1()))
        self.assertEqual(self.run_command('sample_spec', 's3'), samples.s3_table_document())

    def test_random_is_seeded(self):
        first = self.run_command('sample_spec', 'random', '--seed', '5', '--prime', '3')
        self.assertEqual(first, self.run_command('sample_spec', 'random', '--seed', '5', '--prime', '3'))
        self.assertEqual(parse_group_spec(first).p, 3)

    def test_sample_decides(self):
        output = self.tmp / 'worked.group.json'
        self.run_command('sample_spec', 'worked-example', '--output', str(output))
        result = self.run_command('decide', str(output))
        self.assertEqual(result['hyperfocal'], [3, 3, 9])
        self.assertEqual(result['outcome'], 'infinite')
