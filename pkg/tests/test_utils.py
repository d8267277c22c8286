"""Tests for validators, exceptions, configuration and logging setup"""

import json
import logging
import math

import pytest

from config import get_config
from src.utils.exceptions import BudgetError, DirectionError, DomainError, RangeError, SpectralConstantsError
from src.utils.logger import LOGGER_ROOT, get_logger
from src.utils.logging_config import OperationLogger, setup_logging
from src.utils.validators import validate_finite, validate_int_range, validate_range


class TestValidators:

    def test_finite(self):
        assert validate_finite(3, 'x') == 3.0
        for bad in (math.nan, math.inf, True, '1'):
            with pytest.raises(DomainError):
                validate_finite(bad, 'x')

    def test_range_bounds(self):
        assert validate_range(0.0, 0.0, 1.0, 'x') == 0.0
        with pytest.raises(RangeError):
            validate_range(0.0, 0.0, 1.0, 'x', min_inclusive=False)
        with pytest.raises(RangeError):
            validate_range(1.5, 0.0, 1.0, 'x')

    def test_int_range(self):
        assert validate_int_range(5, 1, 13, 'n') == 5
        with pytest.raises(DomainError):
            validate_int_range(5.0, 1, 13, 'n')
        with pytest.raises(RangeError):
            validate_int_range(14, 1, 13, 'n')


class TestExceptions:

    def test_to_dict(self):
        error = DomainError("bad input", {'x': -1})
        assert error.to_dict() == {'error': 'DOMAIN_ERROR', 'message': 'bad input', 'details': {'x': -1}}

    def test_hierarchy(self):
        assert isinstance(BudgetError(10 ** 9, 10 ** 8), SpectralConstantsError)
        assert DirectionError('lower', 'upper').error_code


class TestConfig:

    def test_environments(self):
        assert get_config('testing').CAMPAIGN_WORKERS == 1
        assert get_config('production').LOG_JSON_FORMAT is True
        assert get_config('unknown') is get_config('default')

    def test_logging_settings_shape(self):
        settings = get_config('testing').logging_settings()
        assert settings['LOG_LEVEL'] == 'WARNING'
        assert set(settings) == {'LOG_LEVEL', 'LOG_FILE', 'LOG_JSON_FORMAT', 'LOG_MAX_BYTES', 'LOG_BACKUP_COUNT'}


class TestLogging:

    @pytest.fixture(autouse=True)
    def restore_handlers(self):
        root = logging.getLogger(LOGGER_ROOT)
        handlers, level, propagate = list(root.handlers), root.level, root.propagate
        yield
        for handler in root.handlers:
            handler.close()
        root.handlers, root.level, root.propagate = handlers, level, propagate

    def test_json_file_log(self, tmp_path):
        log_file = tmp_path / 'logs' / 'run.log'
        setup_logging({'LOG_LEVEL': 'INFO', 'LOG_FILE': str(log_file), 'LOG_JSON_FORMAT': True})
        with OperationLogger('campaign', campaign='hps') as op:
            op.add_context('failed', 0)
        for handler in logging.getLogger(LOGGER_ROOT).handlers:
            handler.flush()

        entries = [json.loads(line) for line in log_file.read_text(encoding='utf-8').splitlines()]
        completed = [e for e in entries if e['message'] == 'campaign finished']
        assert completed
        assert completed[0]['level'] == 'INFO'
        assert completed[0]['campaign'] == 'hps'
        assert completed[0]['failed'] == 0
        assert 'duration_ms' in completed[0]

    def test_failed_operation_is_logged_and_raised(self, tmp_path):
        log_file = tmp_path / 'run.log'
        setup_logging({'LOG_LEVEL': 'INFO', 'LOG_FILE': str(log_file), 'LOG_JSON_FORMAT': False})
        with pytest.raises(RangeError):
            with OperationLogger('table', table='cn'):
                raise RangeError("too large")
        for handler in logging.getLogger(LOGGER_ROOT).handlers:
            handler.flush()
        assert 'table failed: RANGE_ERROR: too large' in log_file.read_text(encoding='utf-8')

    def test_logger_names(self):
        assert get_logger('weyl.cn').name == f"{LOGGER_ROOT}.weyl.cn"
        assert get_logger().name == LOGGER_ROOT
