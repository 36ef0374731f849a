import logging

import pytest

from genus_core.utils.logging import (
    LogConfig,
    get_logger,
    log_run_end,
    log_suite_result,
    setup_logging,
)


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def test_setup_logging_writes_to_stderr(capsys):
    setup_logging(LogConfig(level="INFO"), "test-calc")
    get_logger("genus.test").info("hello from the calculator")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[test-calc]" in captured.err
    assert "hello from the calculator" in captured.err


def test_setup_logging_replaces_handlers():
    setup_logging(LogConfig(level="DEBUG"), "a")
    setup_logging(LogConfig(level="WARNING"), "b")
    root = logging.getLogger()
    assert len(root.handlers) == 1
    assert root.level == logging.WARNING


def test_suite_result_levels(caplog):
    logger = get_logger("genus.suites")
    with caplog.at_level(logging.INFO, logger="genus.suites"):
        log_suite_result(logger, "stima", total=10, failed=0, witnesses=2)
        log_suite_result(logger, "appendix", total=10, failed=3, witnesses=0)
    levels = [record.levelno for record in caplog.records]
    assert levels == [logging.INFO, logging.WARNING]


def test_run_end_level_follows_exit_status(caplog):
    logger = get_logger("genus.cli")
    with caplog.at_level(logging.INFO, logger="genus.cli"):
        log_run_end(logger, "verify", 0, 1.0)
        log_run_end(logger, "verify", 1, 1.0)
        log_run_end(logger, "params", 2, 1.0)
    assert [r.levelno for r in caplog.records] == [logging.INFO, logging.WARNING, logging.ERROR]
