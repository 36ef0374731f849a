import os
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
CORE_LIB = REPO_ROOT / "libs" / "genus-core"
for path in (REPO_ROOT, CORE_LIB):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from app.config import CalculatorConfig, reset_config_cache


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    for key in [name for name in os.environ if name.startswith("GENUS_")]:
        monkeypatch.delenv(key, raising=False)
    reset_config_cache()
    yield
    reset_config_cache()


@pytest.fixture()
def small_config() -> CalculatorConfig:
    return CalculatorConfig(
        r_max=12,
        i_max=6,
        d_max=600,
        envelope_r_max=8,
        envelope_i_max=4,
        envelope_d_max=300,
        enumeration_cap=48,
    )


@pytest.fixture()
def threaded_config(small_config) -> CalculatorConfig:
    return small_config.model_copy(update={"workers": 4})
