"""
Forms that validate decoded JSON documents one object at a time.

Every form rejects keys it does not declare and reports the first problem as
a SpecParseError pointing into the document (``action[0].blocks[1][2]``).
"""
from django import forms

from core.exceptions import SpecParseError
from decide.verdicts import Mode


def child(location, key):
    if isinstance(key, int):
        return f"{location}[{key}]"
    return f"{location}.{key}" if location else key


class DocumentForm(forms.Form):

    def __init__(self, document, location=''):
        self.location = location
        if not isinstance(document, dict):
            raise SpecParseError("expected an object", location)
        unknown = sorted(set(document) - set(self.base_fields))
        if unknown:
            raise SpecParseError(f"unknown field '{unknown[0]}'", child(location, unknown[0]))
        super().__init__(data=document)

    def parsed(self):
        if not self.is_valid():
            name, errors = next(iter(self.errors.as_data().items()))
            where = self.location if name == '__all__' else child(self.location, name)
            raise SpecParseError(errors[0].messages[0], where)
        return self.cleaned_data


class GroupSpecForm(DocumentForm):
    p = forms.IntegerField(min_value=2)
    mode = forms.ChoiceField(choices=Mode.choices, required=False)
    P = forms.JSONField(required=False)
    n = forms.IntegerField(min_value=0, required=False)
    H = forms.JSONField(required=False)
    action = forms.JSONField(required=False)

    def clean(self):
        cleaned = super().clean()
        mode = cleaned.get('mode') or Mode.ABELIAN
        cleaned['mode'] = mode
        if mode == Mode.FRATTINI and cleaned.get('n') is None:
            self.add_error('n', "frattini mode needs the rank n of P/Phi(P)")
        if mode == Mode.FRATTINI and cleaned.get('P'):
            self.add_error('P', "frattini mode takes n instead of P")
        if mode == Mode.ABELIAN and cleaned.get('n') is not None:
            self.add_error('n', "n is only read in frattini mode")
        return cleaned


class PGroupForm(DocumentForm):
    blocks = forms.JSONField(required=False)


class BlockForm(DocumentForm):
    exponent = forms.IntegerField(min_value=1)
    multiplicity = forms.IntegerField(min_value=1)


class HGroupForm(DocumentForm):
    orders = forms.JSONField(required=False)


class ActionForm(DocumentForm):
    generator = forms.IntegerField(min_value=0)
    blocks = forms.JSONField(required=False)
    matrix = forms.JSONField(required=False)


class QuiverForm(DocumentForm):
    p = forms.IntegerField(min_value=2, required=False)
    orders = forms.JSONField(required=False)
    vertices = forms.JSONField(required=False)
    labels = forms.JSONField(required=False)
    arrows = forms.JSONField(required=False)
    relations = forms.JSONField(required=False)
    connected = forms.BooleanField(required=False)


class ArrowForm(DocumentForm):
    id = forms.IntegerField(min_value=0)
    src = forms.IntegerField(min_value=0)
    tgt = forms.IntegerField(min_value=0)
    label = forms.JSONField()


class LabelForm(DocumentForm):
    label = forms.JSONField()
    character = forms.JSONField(required=False)


class RelationsForm(DocumentForm):
    commutators = forms.JSONField(required=False)
    powers = forms.JSONField(required=False)


class CommutatorForm(DocumentForm):
    id = forms.IntegerField(min_value=0)
    vertex = forms.IntegerField(min_value=0)
    labels = forms.JSONField()
    left = forms.JSONField()
    right = forms.JSONField()


class PowerForm(DocumentForm):
    id = forms.IntegerField(min_value=0)
    vertex = forms.IntegerField(min_value=0)
    label = forms.JSONField()
    length = forms.IntegerField(min_value=1)


class RepForm(DocumentForm):
    q = forms.IntegerField(min_value=2)
    dims = forms.JSONField(required=False)
    matrices = forms.JSONField(required=False)


class CertificateForm(DocumentForm):
    arrows = forms.JSONField()
    length = forms.IntegerField(required=False)
    parity = forms.CharField(required=False)
    vertices = forms.JSONField(required=False)
    steps = forms.JSONField(required=False)
    qualification = forms.CharField(required=False)


class CharacterTableForm(DocumentForm):
    exponent = forms.IntegerField(min_value=1)
    classes = forms.JSONField()
    characters = forms.JSONField()
    module = forms.JSONField(required=False)


class ClassForm(DocumentForm):
    name = forms.CharField()
    size = forms.IntegerField(min_value=1)


class CharacterRowForm(DocumentForm):
    name = forms.CharField()
    values = forms.JSONField()
