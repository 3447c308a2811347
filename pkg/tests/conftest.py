"""
Fixtures compartidas de la suite.
"""
import random

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from condensation_kit.matrix import Matrix
from condensation_kit.polynomial import PolynomialRing
from condensation_kit.ring import ZZ, ModularRing

# La aritmética de polinomios no tiene un tiempo por ejemplo acotado
hypothesis_settings.register_profile(
    "condensation",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("condensation")


@pytest.fixture
def zz():
    return ZZ


@pytest.fixture
def mod7():
    return ModularRing(7)


@pytest.fixture
def xy_ring():
    return PolynomialRing(("x", "y"))


@pytest.fixture
def example_matrix():
    """La matriz 3x3 de los ejemplos: det = -3, condensada [[-11,-4],[-2,2]], factor 10"""
    return Matrix.from_rows(ZZ, [[1, 2, 3], [4, 5, 6], [7, 8, 10]])


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def write_text(tmp_path):
    """Escribe un archivo de texto en tmp_path y devuelve su ruta como str"""
    def _write(name: str, content: str) -> str:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)
    return _write
