import logging
import sys

from cli import main as cli_main
from logger import setup_logging


def main(argv=None):
    setup_logging()
    logger = logging.getLogger(__name__)
    args = sys.argv[1:] if argv is None else argv
    logger.debug(f"Starting mingrp: {' '.join(args)}")
    return cli_main(argv)


if __name__ == '__main__':
    sys.exit(main())
