

from .base import BaseConfig
from .loaders import ConfigLoader, ConfigValidationError, load_config_with_defaults
from .validation import validate_environment, validate_log_level

__all__ = [
    "BaseConfig",
    "ConfigLoader",
    "ConfigValidationError",
    "load_config_with_defaults",
    "validate_environment",
    "validate_log_level",
]
