import logging
import sys

from cli.commands import run_command
from settings.config import settings
from settings.logging_config import configure_logging

logger = logging.getLogger(__name__)


def main(argv=None) -> int:
    configure_logging(settings.LOG_LEVEL, settings.LOG_FILE)
    result = run_command(sys.argv[1:] if argv is None else argv)
    if result.report:
        print(result.report)
    logger.debug(f"Exit code {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
