#!/usr/bin/env python3
"""Spectral Constants Toolkit - command line entry point"""

import os
import sys

from dotenv import load_dotenv

# Run from anywhere: imports are absolute from the project root
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def main() -> int:
    """Main entry point."""
    # Config classes read the environment at import time
    load_dotenv()

    from config import get_config
    from src.harness.cli import cli_main
    from src.utils.logging_config import setup_logging
    from src.utils.logger import get_logger

    config = get_config()
    setup_logging(config.logging_settings())
    logger = get_logger('main')
    logger.debug(f"{config.APP_NAME} v{config.APP_VERSION} starting")

    try:
        return cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        return 130


if __name__ == '__main__':
    sys.exit(main())
