

import logging
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class GenusError(Exception):
    
    
    exit_status: int = EXIT_USAGE
    default_code: str = "genus_error"
    
    def __init__(
        self,
        detail: str,
        error_code: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        log_level: str = "info"
    ):
        super().__init__(detail)
        self.detail = detail
        self.error_code = error_code or self.default_code
        self.context = context or {}
        
        log_message = f"{self.error_code}: {detail}"
        if context:
            log_message += f" - Context: {context}"
        
        if log_level == "error":
            logger.error(log_message)
        elif log_level == "warning":
            logger.warning(log_message)
        else:
            logger.info(log_message)
    
    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.error_code,
            "detail": self.detail,
            "context": {k: str(v) for k, v in self.context.items()},
        }


class InvalidInputError(GenusError, ValueError):
    default_code = "validation_error"


class RegimeError(GenusError, ValueError):
    default_code = "wrong_regime"


class ThresholdTooLargeError(GenusError):
    default_code = "threshold_too_large"


class IdentityCheckError(GenusError, ArithmeticError):
    exit_status = EXIT_VERIFICATION_FAILED
    default_code = "identity_failed"


def raise_validation_error(
    message: str,
    field: Optional[str] = None,
    value: Optional[Any] = None
) -> None:
    
    
    context = {}
    if field:
        context["field"] = field
    if value is not None:
        context["value"] = str(value)
    
    raise InvalidInputError(message, context=context)


def raise_regime_error(message: str, use: str, **context: Any) -> None:
    
    
    raise RegimeError(
        f"{message}; use {use}",
        context={"use": use, **context},
        log_level="info"
    )


def raise_identity_error(
    name: str,
    expected: Any,
    got: Any,
    context: Optional[Dict[str, Any]] = None
) -> None:
    
    
    raise IdentityCheckError(
        f"identity {name} does not hold: expected {expected}, got {got}",
        context={"identity": name, **(context or {})},
        log_level="error"
    )


def require(condition: bool, message: str, field: Optional[str] = None, value: Optional[Any] = None) -> None:
    if not condition:
        raise_validation_error(message, field, value)
