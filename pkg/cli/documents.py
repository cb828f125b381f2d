"""
JSON documents read and written by the management commands.

Group specs (``.group.json``), quivers (``.quiver.json``), representations
(``.rep.json``), verdicts (``.verdict.json``), zigzag certificates and
character tables (``.chartable.json``). Matrices are row-major; column j is
the image of the j-th generator of its block.
"""
import json
from pathlib import Path

from action.presentation import GroupPresentation
from charfield.characters import Character
from core.exceptions import SpecParseError
from decide.verdicts import FrattiniInput, Mode
from quiverbuild.quivers import Arrow, BoundQuiver, Commutator, PowerRelation, RelationSet, is_connected
from quiverbuild.tables import CharacterTable
from repcheck.representations import QuiverRep
from zigzag.cycles import is_qualifying

from .forms import (
    ActionForm,
    ArrowForm,
    BlockForm,
    CertificateForm,
    CharacterRowForm,
    CharacterTableForm,
    ClassForm,
    CommutatorForm,
    GroupSpecForm,
    HGroupForm,
    LabelForm,
    PGroupForm,
    PowerForm,
    QuiverForm,
    RelationsForm,
    RepForm,
    child,
)


def dumps(document):
    return json.dumps(document, indent=2) + '\n'


def loads(text, location=''):
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as exc:
            raise SpecParseError(f"not UTF-8 ({exc.reason})", location) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        where = f"{location}:{exc.lineno}:{exc.colno}" if location else f"line {exc.lineno} column {exc.colno}"
        raise SpecParseError(exc.msg, where) from exc


def read_document(path):
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        raise SpecParseError(exc.strerror or str(exc), str(path)) from exc
    return loads(text, str(path))


def _list(value, location):
    if value is None:
        return []
    if not isinstance(value, list):
        raise SpecParseError("expected a list", location)
    return value


def _int(value, location, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecParseError("expected an integer", location)
    if minimum is not None and value < minimum:
        raise SpecParseError(f"expected an integer >= {minimum}", location)
    return value


def _int_list(value, location, minimum=None):
    return [_int(x, child(location, i), minimum) for i, x in enumerate(_list(value, location))]


def parse_matrix(value, size, location):
    """A size x size integer matrix given as a list of rows."""
    rows = _list(value, location)
    if len(rows) != size:
        raise SpecParseError(f"expected {size} rows, got {len(rows)}", location)
    matrix = []
    for r, row in enumerate(rows):
        entries = _int_list(row, child(location, r))
        if len(entries) != size:
            raise SpecParseError(f"row {r} has {len(entries)} entries, expected {size}", child(location, r))
        matrix.append(entries)
    return matrix


def _generator_entries(actions, ngens, location):
    """Action entries by generator index, each index exactly once."""
    by_generator = {}
    for i, entry in enumerate(actions):
        where = child(location, i)
        data = ActionForm(entry, where).parsed()
        g = data['generator']
        if g >= ngens:
            raise SpecParseError(f"H has {ngens} generators", child(where, 'generator'))
        if g in by_generator:
            raise SpecParseError(f"generator {g} appears twice", child(where, 'generator'))
        by_generator[g] = (where, data)
    missing = sorted(set(range(ngens)) - set(by_generator))
    if missing:
        raise SpecParseError(f"no action given for generator {missing[0]}", location)
    return [by_generator[g] for g in range(ngens)]


def parse_group_spec(text, location=''):
    """A GroupPresentation (abelian mode) or FrattiniInput (frattini mode)."""
    document = loads(text, location) if isinstance(text, (str, bytes)) else text
    data = GroupSpecForm(document).parsed()
    p = data['p']
    h = HGroupForm(data['H'] or {}, 'H').parsed()
    orders = _int_list(h['orders'], 'H.orders', minimum=1)
    actions = _generator_entries(_list(data['action'], 'action'), len(orders), 'action')

    if data['mode'] == Mode.FRATTINI:
        n = data['n']
        matrices = []
        for where, entry in actions:
            if entry['blocks'] is not None:
                raise SpecParseError("frattini mode takes one matrix per generator", child(where, 'blocks'))
            matrices.append(parse_matrix(entry['matrix'] if n else [], n, child(where, 'matrix')))
        return FrattiniInput(p, n, tuple(orders), tuple(matrices))

    pdoc = PGroupForm(data['P'] or {}, 'P').parsed()
    blocks = []
    for i, block in enumerate(_list(pdoc['blocks'], 'P.blocks')):
        b = BlockForm(block, child('P.blocks', i)).parsed()
        blocks.append((b['exponent'], b['multiplicity']))
    matrices = []
    for where, entry in actions:
        if entry['matrix'] is not None:
            raise SpecParseError("abelian mode takes per-block matrices", child(where, 'matrix'))
        given = _list(entry['blocks'], child(where, 'blocks'))
        if len(given) != len(blocks):
            raise SpecParseError(f"expected {len(blocks)} block matrices, got {len(given)}", child(where, 'blocks'))
        matrices.append([
            parse_matrix(m, t, child(child(where, 'blocks'), i)) for i, (m, (_, t)) in enumerate(zip(given, blocks))
        ])
    return GroupPresentation.from_lists(p, blocks, orders, matrices)


def group_spec_document(pres):
    if isinstance(pres, FrattiniInput):
        return {
            'p': pres.p,
            'mode': Mode.FRATTINI.value,
            'n': pres.n,
            'H': {'orders': list(pres.orders)},
            'action': [
                {'generator': g, 'matrix': [list(row) for row in m]} for g, m in enumerate(pres.matrices)
            ],
        }
    return {
        'p': pres.p,
        'mode': Mode.ABELIAN.value,
        'P': {'blocks': [{'exponent': e, 'multiplicity': t} for e, t in pres.pgroup.blocks]},
        'H': {'orders': list(pres.hgroup.generator_orders)},
        'action': [
            {'generator': g, 'blocks': [list(map(list, m)) for m in a.to_lists()]}
            for g, a in enumerate(pres.action)
        ],
    }


def _vertex_label(v):
    return list(v.exponents) if isinstance(v, Character) else str(v)


def quiver_document(quiver):
    orders = next((list(v.orders) for v in quiver.vertices if isinstance(v, Character)), None)
    relations = None
    if not quiver.quiver_only:
        relations = {
            'commutators': [
                {
                    'id': c.id, 'vertex': c.vertex, 'labels': [list(x) for x in c.labels],
                    'left': list(c.left), 'right': list(c.right),
                }
                for c in quiver.relations.commutators
            ],
            'powers': [
                {'id': r.id, 'vertex': r.vertex, 'label': list(r.label), 'length': r.length}
                for r in quiver.relations.powers
            ],
        }
    return {
        'p': quiver.p,
        'orders': orders,
        'vertices': [_vertex_label(v) for v in quiver.vertices],
        'labels': [
            {'label': list(label), 'character': list(chi.exponents)}
            for label, chi in sorted(quiver.label_characters.items())
        ],
        'arrows': [
            {'id': a.id, 'src': a.source, 'tgt': a.target, 'label': list(a.label)} for a in quiver.arrows
        ],
        'relations': relations,
        'connected': is_connected(quiver),
    }


def _label(value, location):
    return tuple(_int_list(value, location))


def _path(value, location, n_arrows):
    path = tuple(_int_list(value, location, minimum=0))
    for i, a in enumerate(path):
        if a >= n_arrows:
            raise SpecParseError(f"unknown arrow id {a}", child(location, i))
    return path


def _commutator_path(value, location, arrows, vertex):
    """A length-2 path of arrows, composable in traversal order, leaving ``vertex``."""
    path = _path(value, location, len(arrows))
    if len(path) != 2:
        raise SpecParseError(f"expected a path of 2 arrows, got {len(path)}", location)
    first, second = arrows[path[0]], arrows[path[1]]
    if first.source != vertex:
        raise SpecParseError(f"arrow {first.id} does not leave vertex {vertex}", location)
    if first.target != second.source:
        raise SpecParseError(f"arrows {first.id} and {second.id} do not compose", location)
    return path


def parse_quiver(text, location=''):
    document = loads(text, location) if isinstance(text, (str, bytes)) else text
    data = QuiverForm(document).parsed()
    orders = data['orders']
    raw_vertices = _list(data['vertices'], 'vertices')
    if orders is not None:
        orders = tuple(_int_list(orders, 'orders', minimum=1))
        vertices = tuple(
            Character(tuple(_int_list(v, child('vertices', i))), orders) for i, v in enumerate(raw_vertices)
        )
        label_characters = {}
        for i, entry in enumerate(_list(data['labels'], 'labels')):
            where = child('labels', i)
            item = LabelForm(entry, where).parsed()
            chi = _int_list(item['character'], child(where, 'character'))
            label_characters[_label(item['label'], child(where, 'label'))] = Character(tuple(chi), orders)
    else:
        vertices = tuple(str(v) for v in raw_vertices)
        label_characters = {}

    arrows = []
    for i, entry in enumerate(_list(data['arrows'], 'arrows')):
        where = child('arrows', i)
        a = ArrowForm(entry, where).parsed()
        if a['id'] != i:
            raise SpecParseError(f"arrow ids must run 0, 1, ...; expected {i}", child(where, 'id'))
        for key in ('src', 'tgt'):
            if a[key] >= len(vertices):
                raise SpecParseError(f"unknown vertex {a[key]}", child(where, key))
        arrows.append(Arrow(i, a['src'], a['tgt'], _label(a['label'], child(where, 'label'))))

    relations = None
    if data['relations'] is not None:
        rel = RelationsForm(data['relations'], 'relations').parsed()
        by_label = {(a.source, a.label): a.target for a in arrows}
        commutators, powers = [], []
        for i, entry in enumerate(_list(rel['commutators'], 'relations.commutators')):
            where = child('relations.commutators', i)
            c = CommutatorForm(entry, where).parsed()
            labels_at = child(where, 'labels')
            labels = tuple(_label(x, child(labels_at, k)) for k, x in enumerate(_list(c['labels'], labels_at)))
            if c['vertex'] >= len(vertices):
                raise SpecParseError(f"unknown vertex {c['vertex']}", child(where, 'vertex'))
            left = _commutator_path(c['left'], child(where, 'left'), arrows, c['vertex'])
            right = _commutator_path(c['right'], child(where, 'right'), arrows, c['vertex'])
            if arrows[left[1]].target != arrows[right[1]].target:
                raise SpecParseError("left and right paths end at different vertices", child(where, 'right'))
            commutators.append(Commutator(c['id'], c['vertex'], labels, left, right))
        for i, entry in enumerate(_list(rel['powers'], 'relations.powers')):
            where = child('relations.powers', i)
            r = PowerForm(entry, where).parsed()
            label = _label(r['label'], child(where, 'label'))
            vertex = r['vertex']
            for _ in range(r['length']):
                if (vertex, label) not in by_label:
                    raise SpecParseError(f"no arrow labelled {list(label)} leaves vertex {vertex}", where)
                vertex = by_label[(vertex, label)]
            powers.append(PowerRelation(r['id'], r['vertex'], label, r['length']))
        relations = RelationSet(tuple(commutators), tuple(powers))
        expected = list(range(len(relations)))
        if [g.id for g in relations.generators()] != expected:
            raise SpecParseError("relation ids must run 0, 1, ... over commutators then powers", 'relations')

    return BoundQuiver(
        vertices=vertices,
        arrows=tuple(arrows),
        relations=relations,
        label_characters=label_characters,
        p=data['p'],
    )


def parse_rep(text, quiver, location=''):
    document = loads(text, location) if isinstance(text, (str, bytes)) else text
    data = RepForm(document).parsed()
    raw_dims = data['dims'] or {}
    if not isinstance(raw_dims, dict):
        raise SpecParseError("expected an object of vertex dimensions", 'dims')
    dims = [0] * len(quiver.vertices)
    for key, value in raw_dims.items():
        where = child('dims', key)
        if not str(key).isdigit() or int(key) >= len(dims):
            raise SpecParseError("unknown vertex", where)
        dims[int(key)] = _int(value, where, minimum=0)
    raw_matrices = data['matrices'] or {}
    if not isinstance(raw_matrices, dict):
        raise SpecParseError("expected an object of arrow matrices", 'matrices')
    matrices = {}
    for key, rows in raw_matrices.items():
        where = child('matrices', key)
        if not str(key).isdigit() or int(key) >= len(quiver.arrows):
            raise SpecParseError("unknown arrow", where)
        matrices[int(key)] = [_int_list(row, child(where, r), minimum=0) for r, row in enumerate(_list(rows, where))]
    return QuiverRep.from_lists(quiver, data['q'], dims, matrices)


def rep_document(rep):
    return {
        'q': rep.q,
        'dims': {str(v): d for v, d in enumerate(rep.dims) if d},
        'matrices': {str(a): rows for a, rows in rep.to_lists().items() if rep.matrices[a].size},
    }


def certificate_document(quiver, cycle):
    report = is_qualifying(quiver, cycle)
    return {
        'arrows': list(cycle.arrows),
        'length': cycle.length,
        'parity': cycle.parity,
        'vertices': [_vertex_label(quiver.vertices[v]) for v in cycle.vertices],
        'steps': [
            {'id': a.id, 'src': a.source, 'tgt': a.target, 'label': list(a.label)}
            for a in (quiver.arrow(x) for x in cycle.arrows)
        ],
        'qualification': report.reason.value,
    }


def parse_certificate(text, location=''):
    document = loads(text, location) if isinstance(text, (str, bytes)) else text
    data = CertificateForm(document).parsed()
    return tuple(_int_list(data['arrows'], 'arrows', minimum=0))


def verdict_document(verdict):
    document = {
        'mode': verdict.mode.value,
        'p': verdict.p,
        'outcome': verdict.outcome.value,
        'reason': verdict.reason.value,
        'explanation': verdict.reason.label,
        'hyperfocal': list(verdict.hyperfocal) if verdict.hyperfocal is not None else None,
        'frattini_rank': verdict.frattini_rank,
        'classification_only': verdict.classification_only,
    }
    if verdict.certificate is not None:
        document['certificate'] = certificate_document(verdict.quiver, verdict.certificate)
    return document


def parse_character_table(text, location=''):
    document = loads(text, location) if isinstance(text, (str, bytes)) else text
    data = CharacterTableForm(document).parsed()
    classes = []
    for i, entry in enumerate(_list(data['classes'], 'classes')):
        c = ClassForm(entry, child('classes', i)).parsed()
        classes.append((c['name'], c['size']))
    characters = []
    for i, entry in enumerate(_list(data['characters'], 'characters')):
        where = child('characters', i)
        row = CharacterRowForm(entry, where).parsed()
        values = _list(row['values'], child(where, 'values'))
        if len(values) != len(classes):
            raise SpecParseError(f"expected {len(classes)} values, got {len(values)}", child(where, 'values'))
        characters.append((row['name'], values))
    module = data['module']
    if module is not None and len(_list(module, 'module')) != len(classes):
        raise SpecParseError(f"expected {len(classes)} values", 'module')
    try:
        return CharacterTable.from_values(data['exponent'], classes, characters, module)
    except (TypeError, ValueError) as exc:
        raise SpecParseError(f"bad character value ({exc})", 'characters') from exc
