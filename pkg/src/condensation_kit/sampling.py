"""
Generadores aleatorios reproducibles.

Una corrida tiene una sola semilla de 64 bits; cada caso deriva la suya con
blake2b(semilla, índice), de modo que el caso k se reproduce sin recorrer
los anteriores y el resultado no depende del reparto entre procesos.
"""
import hashlib
import random

from .arborescence import WeightedDigraph
from .funcmap import EndoMap
from .matrix import Matrix
from .polynomial import PolynomialRing
from .ring import Ring, RingValue


def derive_seed(seed: int, case: int, stream: str = "") -> int:
    """Semilla de 64 bits del caso `case` (y del flujo `stream`) de una corrida"""
    data = f"{seed}:{case}:{stream}".encode()
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "big")


def case_rng(seed: int, case: int, stream: str = "") -> random.Random:
    return random.Random(derive_seed(seed, case, stream))


def random_entry(rng: random.Random, ring: Ring, low: int, high: int, zero_probability: float = 0.0) -> RingValue:
    if zero_probability and rng.random() < zero_probability:
        return ring.zero
    return ring.from_int(rng.randint(low, high))


def random_poly(rng: random.Random, ring: PolynomialRing, terms: int = 3, max_degree: int = 2, coeff: int = 3) -> RingValue:
    """Polinomio con a lo sumo `terms` términos de grado parcial <= max_degree"""
    monomials = []
    for _ in range(rng.randint(0, terms)):
        exponents = tuple(rng.randint(0, max_degree) for _ in ring.variables)
        monomials.append((exponents, rng.randint(-coeff, coeff)))
    return ring.canonicalize(monomials)


def random_matrix(
    rng: random.Random,
    ring: Ring,
    rows: int,
    cols: int | None = None,
    low: int = -9,
    high: int = 9,
    zero_probability: float = 0.0,
) -> Matrix:
    """Matriz con entradas enteras uniformes en [low, high] (o polinomios pequeños en un PolynomialRing)"""
    cols = rows if cols is None else cols
    if isinstance(ring, PolynomialRing):
        def entry(i: int, j: int) -> RingValue:
            if zero_probability and rng.random() < zero_probability:
                return ring.zero
            return random_poly(rng, ring)
    else:
        def entry(i: int, j: int) -> RingValue:
            return random_entry(rng, ring, low, high, zero_probability)
    return Matrix.from_function(ring, rows, cols, entry)


def random_singular_matrix(rng: random.Random, ring: Ring, n: int, low: int = -9, high: int = 9) -> Matrix:
    """Matriz con una fila nula o dos filas iguales (determinante cero)"""
    A = random_matrix(rng, ring, n, low=low, high=high)
    rows = A.to_rows()
    p = rng.randrange(n)
    if n == 1 or rng.random() < 0.5:
        rows[p] = [ring.zero] * n
    else:
        q = rng.choice([k for k in range(n) if k != p])
        rows[q] = list(rows[p])
    return Matrix.from_rows(ring, rows, n)


def random_digraph(rng: random.Random, ring: Ring, n: int, low: int = -5, high: int = 5, zero_probability: float = 0.3) -> WeightedDigraph:
    return WeightedDigraph(random_matrix(rng, ring, n, low=low, high=high, zero_probability=zero_probability))


def random_n_fixing_map(rng: random.Random, n: int) -> EndoMap:
    return EndoMap(tuple(rng.randint(1, n) for _ in range(n - 1)) + (n,))
