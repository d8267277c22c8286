"""
Configuration classes for different environments.
Loads settings from environment variables with fallback defaults.

Only ambient concerns (logging, worker count, output defaults) come from the
environment; every numeric choice that changes a result is a CLI flag.
"""

import os


class Config:
    """Base configuration with common settings."""

    # Application
    APP_NAME = "Spectral Constants Toolkit"
    APP_VERSION = "1.0.0"

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
    LOG_FILE = os.getenv('LOG_FILE', '')
    LOG_JSON_FORMAT = os.getenv('LOG_JSON_FORMAT', 'False').lower() == 'true'
    LOG_MAX_BYTES = int(os.getenv('LOG_MAX_BYTES', 10485760))  # 10MB
    LOG_BACKUP_COUNT = int(os.getenv('LOG_BACKUP_COUNT', 5))

    # Performance
    CAMPAIGN_WORKERS = int(os.getenv('CAMPAIGN_WORKERS', 1))

    @classmethod
    def logging_settings(cls) -> dict:
        """Logging settings in the shape expected by setup_logging."""
        return {
            'LOG_LEVEL': cls.LOG_LEVEL,
            'LOG_FILE': cls.LOG_FILE,
            'LOG_JSON_FORMAT': cls.LOG_JSON_FORMAT,
            'LOG_MAX_BYTES': cls.LOG_MAX_BYTES,
            'LOG_BACKUP_COUNT': cls.LOG_BACKUP_COUNT,
        }


class DevelopmentConfig(Config):
    """Development environment configuration."""

    DEBUG = True
    TESTING = False

    # More verbose logging in development
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Batch/CI configuration: structured logs, parallel campaigns."""

    DEBUG = False
    TESTING = False

    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_JSON_FORMAT = True  # JSON logs for CI collectors
    CAMPAIGN_WORKERS = int(os.getenv('CAMPAIGN_WORKERS', -1))


class TestingConfig(Config):
    """Testing environment configuration."""

    DEBUG = True
    TESTING = True

    LOG_LEVEL = 'WARNING'
    LOG_FILE = ''
    CAMPAIGN_WORKERS = 1


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': Config
}


def get_config(env: str = None) -> Config:
    """
    Get configuration for specified environment.

    Args:
        env: Environment name (development, production, testing)
             If None, uses SPECTRAL_ENV environment variable

    Returns:
        Configuration class
    """
    if env is None:
        env = os.getenv('SPECTRAL_ENV', 'default')

    return config.get(env, config['default'])
