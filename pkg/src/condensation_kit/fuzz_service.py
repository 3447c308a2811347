"""
Servicio de fuzzing diferencial.

Cada caso sortea un anillo (Z, Z/p o Z[t,u]), un tamaño n <= 5 y una de
dos comparaciones: chio_det contra leibniz_det, o el determinante del
laplaciano contra la suma por fuerza bruta de arborescencias.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from .arborescence import GraphError, brute_arborescence_sum, build_laplacian
from .config import settings
from .funcmap import FuncMapError
from .matrix import MatrixError, chio_det, leibniz_det
from .models import FuzzCaseResult, FuzzSummary
from .polynomial import PolynomialRing
from .ring import ZZ, ModularRing, Ring, RingError
from .sampling import case_rng, random_digraph, random_matrix, random_singular_matrix

logger = logging.getLogger(__name__)

FUZZ_PRIMES = (2, 3, 5, 7, 11, 13, 101)
FUZZ_MAX_N = 5
# Las condensaciones de polinomios crecen rápido en grado
FUZZ_MAX_POLY_N = 4


def _draw_ring(rng) -> Ring:
    kind = rng.choice(("int", "mod", "poly"))
    if kind == "int":
        return ZZ
    if kind == "mod":
        return ModularRing(rng.choice(FUZZ_PRIMES))
    return PolynomialRing(("t", "u"))


def run_fuzz_case(seed: int, case: int, max_n: int) -> FuzzCaseResult:
    """Un caso de fuzzing, reproducible a partir de (seed, case)"""
    rng = case_rng(seed, case, "fuzz")
    ring = _draw_ring(rng)
    top = FUZZ_MAX_POLY_N if isinstance(ring, PolynomialRing) else FUZZ_MAX_N
    n = rng.randint(1, min(top, max_n))
    check = rng.choice(("det", "mtt"))
    try:
        if check == "det":
            if rng.random() < 0.1:
                A = random_singular_matrix(rng, ring, n)
            else:
                A = random_matrix(rng, ring, n, zero_probability=0.25)
            fast, slow = chio_det(A), leibniz_det(A, max_n=max_n)
        else:
            g = random_digraph(rng, ring, n)
            fast, slow = chio_det(build_laplacian(g)), brute_arborescence_sum(g, max_n=max_n)
        agree = fast == slow
        detail = None if agree else f"chio={fast} oráculo={slow}"
    except (MatrixError, FuncMapError, RingError, GraphError) as e:
        agree, detail = False, f"error: {e}"
    if not agree:
        logger.error(f"fuzz caso {case} ({check}, {ring.describe()}, n={n}): {detail}")
    return FuzzCaseResult(case=case, ring=ring.describe(), n=n, check=check, agree=agree, detail=detail)


def _run_fuzz_task(task: tuple[int, int, int]) -> FuzzCaseResult:
    return run_fuzz_case(*task)


class FuzzService:
    """Servicio que genera los casos de fuzzing y arma el resumen"""

    def __init__(self, workers: int | None = None, max_n: int | None = None):
        self.workers = workers or settings.WORKERS
        self.max_n = settings.CONDENSATION_KIT_MAX_N if max_n is None else max_n

    def run(self, cases: int | None = None, seed: int | None = None) -> FuzzSummary:
        """
        Ejecuta la corrida de fuzzing.

        Args:
            cases: Número de casos (por defecto DEFAULT_FUZZ_CASES)
            seed: Semilla de 64 bits (por defecto DEFAULT_SEED)

        Returns:
            FuzzSummary con los resultados ordenados por índice de caso

        Raises:
            ValueError: Si cases es negativo o la semilla no cabe en 64 bits
        """
        cases = settings.DEFAULT_FUZZ_CASES if cases is None else cases
        seed = settings.DEFAULT_SEED if seed is None else seed
        if cases < 0:
            raise ValueError(f"--cases no puede ser negativo: {cases}")
        if not 0 <= seed < 2 ** 64:
            raise ValueError(f"La semilla debe estar en [0, 2^64): {seed}")

        logger.info(f"Iniciando fuzzing: {cases} casos, semilla {seed}, {self.workers} proceso(s)")
        start_time = time.time()
        tasks = [(seed, case, self.max_n) for case in range(cases)]
        if self.workers > 1 and cases > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                results = list(executor.map(_run_fuzz_task, tasks, chunksize=max(1, cases // (4 * self.workers))))
        else:
            results = [_run_fuzz_task(task) for task in tasks]

        failures = sum(1 for r in results if not r.agree)
        elapsed = time.time() - start_time
        logger.info(f"Fuzzing completado: {cases} casos, {failures} fallas en {elapsed:.2f}s")
        return FuzzSummary(
            seed=seed,
            total_cases=cases,
            failures=failures,
            results=results,
            total_time_seconds=round(elapsed, 2),
        )
