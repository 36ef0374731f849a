

__version__ = "0.1.0"
__author__ = "Genus Bounds Team"

from .config import BaseConfig, ConfigLoader
from .errors import GenusError

__all__ = [
    "BaseConfig",
    "ConfigLoader",
    "GenusError",
    "__version__",
]
