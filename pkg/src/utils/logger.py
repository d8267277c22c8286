"""Logger lookup for the Spectral Constants Toolkit"""

import logging
from typing import Optional

LOGGER_ROOT = 'spectral_constants'


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get logger instance."""
    if name:
        return logging.getLogger(f'{LOGGER_ROOT}.{name}')
    return logging.getLogger(LOGGER_ROOT)
