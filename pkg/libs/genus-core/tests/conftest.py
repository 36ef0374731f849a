import sys
from pathlib import Path

import pytest

LIB_ROOT = Path(__file__).resolve().parents[1]
if str(LIB_ROOT) not in sys.path:
    sys.path.insert(0, str(LIB_ROOT))


@pytest.fixture
def temp_config_file(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text(
        """
service_name: "Test Service from YAML"
log_level: "INFO"
grid_size: 25
""",
        encoding="utf-8",
    )
    return str(config_file)


@pytest.fixture(autouse=True)
def reset_caches():
    from genus_core.config.loaders import load_config_with_defaults
    load_config_with_defaults.cache_clear()
    yield
    load_config_with_defaults.cache_clear()
