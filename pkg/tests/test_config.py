"""
Tests de la configuración cargada desde el entorno.
"""
import pytest
from pydantic import ValidationError

from condensation_kit.config import HARD_MAX_N, Settings


def load(**overrides):
    return Settings(_env_file=None, **overrides)


def test_defaults(monkeypatch):
    for name in ("CONDENSATION_KIT_MAX_N", "LOG_LEVEL", "DEFAULT_SEED", "WORKERS"):
        monkeypatch.delenv(name, raising=False)
    s = load()
    assert s.CONDENSATION_KIT_MAX_N == 8
    assert s.LOG_LEVEL == "INFO"
    assert s.DEFAULT_SEED == 0
    assert s.WORKERS == 1


def test_reads_environment(monkeypatch):
    monkeypatch.setenv("CONDENSATION_KIT_MAX_N", "6")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    s = load()
    assert s.CONDENSATION_KIT_MAX_N == 6
    assert s.LOG_LEVEL == "DEBUG"


@pytest.mark.parametrize("value", [0, HARD_MAX_N + 1])
def test_max_n_bounds(value):
    with pytest.raises(ValidationError):
        load(CONDENSATION_KIT_MAX_N=value)


@pytest.mark.parametrize("field, value", [
    ("LOG_LEVEL", "VERBOSE"),
    ("DEFAULT_SEED", -1),
    ("DEFAULT_SEED", 2 ** 64),
    ("DEFAULT_TRIALS", -5),
    ("DEFAULT_FUZZ_CASES", -1),
    ("WORKERS", 0),
])
def test_rejects_invalid_values(field, value):
    with pytest.raises(ValidationError):
        load(**{field: value})
