import hashlib
import json

from django.db import models

from .verdicts import Mode, Outcome


def canonical_json(document):
    return json.dumps(document, sort_keys=True, separators=(',', ':'))


class VerdictRecord(models.Model):
    """A decided group spec, keyed by the digest of its canonical JSON."""
    spec_json = models.TextField()
    digest = models.CharField(max_length=64, unique=True)
    mode = models.CharField(max_length=20, choices=Mode.choices, default=Mode.ABELIAN)
    outcome = models.CharField(max_length=20, choices=Outcome.choices)
    reason = models.CharField(max_length=64)
    hyperfocal = models.JSONField(null=True, blank=True)
    certificate = models.JSONField(null=True, blank=True)

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['-updated_at']
        indexes = [
            models.Index(fields=['outcome', '-updated_at'], name='decide_verd_outcome_5b1c2e_idx'),
        ]

    def __str__(self):
        return f"{self.digest[:12]} {self.outcome}"

    @classmethod
    def store(cls, spec_document, verdict_document):
        """Insert or refresh the record for ``spec_document``."""
        spec_json = canonical_json(spec_document)
        record, _ = cls.objects.update_or_create(
            digest=hashlib.sha256(spec_json.encode('utf-8')).hexdigest(),
            defaults={
                'spec_json': spec_json,
                'mode': verdict_document['mode'],
                'outcome': verdict_document['outcome'],
                'reason': verdict_document['reason'],
                'hyperfocal': verdict_document.get('hyperfocal'),
                'certificate': verdict_document.get('certificate'),
            },
        )
        return record

    @property
    def spec(self):
        return json.loads(self.spec_json)
