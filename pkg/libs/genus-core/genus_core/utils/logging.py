import logging
import sys
from typing import Optional

from pydantic import BaseModel


class LogConfig(BaseModel):
    
    
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(config: Optional[LogConfig] = None, service_name: str = "genus") -> None:
    
    # stdout carries tables and reports, diagnostics go to stderr
    
    if config is None:
        config = LogConfig()
    
    log_level = getattr(logging, config.level.upper(), logging.INFO)
    
    log_format = f"[{service_name}] {config.format}"
    formatter = logging.Formatter(log_format)
    
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)
    
    logging.debug(f"Logging configured for {service_name} (level: {config.level})")


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def log_run_start(logger: logging.Logger, command: str, version: str):
    
    logger.info(f"🚀 {command} (v{version}) starting")


def log_run_end(logger: logging.Logger, command: str, exit_status: int, duration_ms: float):
    
    
    if exit_status >= 2:
        emoji = "❌"
        log_level = logging.ERROR
    elif exit_status == 1:
        emoji = "⚠️"
        log_level = logging.WARNING
    else:
        emoji = "✅"
        log_level = logging.INFO
    
    logger.log(
        log_level,
        f"{emoji} {command} finished with status {exit_status} ({duration_ms:.1f}ms)"
    )


def log_suite_result(logger: logging.Logger, suite: str, total: int, failed: int, witnesses: int):
    
    if failed:
        logger.warning(f"⚠️ Suite {suite}: {failed}/{total} cases failed")
    else:
        logger.info(f"✅ Suite {suite}: {total} cases passed ({witnesses} boundary witnesses)")


def log_error_with_context(
    logger: logging.Logger,
    error: Exception,
    context: Optional[str] = None,
):
    
    
    error_msg = f"❌ {type(error).__name__}: {str(error)}"
    
    if context:
        error_msg += f" (Context: {context})"
    
    logger.error(error_msg, exc_info=logger.isEnabledFor(logging.DEBUG))
