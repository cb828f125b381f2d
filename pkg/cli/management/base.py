import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import InternalError, ToolkitError

from ..documents import dumps

logger = logging.getLogger(__name__)

EXIT_UNKNOWN = 3
EXIT_INVALID = 4
EXIT_INTERNAL = 5


class ToolkitCommand(BaseCommand):
    """
    Base for the toolkit commands: JSON documents on stdout, toolkit errors
    turned into exit codes.
    """
    requires_system_checks = []
    requires_migrations_checks = False

    def add_arguments(self, parser):
        parser.add_argument('--output', metavar='PATH', help="Also write the output document to PATH.")

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except InternalError as exc:
            logger.error("internal error: %s", exc)
            raise CommandError(f"internal error: {exc}", returncode=EXIT_INTERNAL) from exc
        except ToolkitError as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID) from exc

    def emit(self, document, output=None):
        text = dumps(document)
        if output:
            try:
                Path(output).write_text(text, encoding='utf-8')
            except OSError as exc:
                raise CommandError(f"{output}: {exc.strerror}", returncode=EXIT_INVALID) from exc
        self.stdout.write(text, ending='')
