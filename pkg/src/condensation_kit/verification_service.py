"""
Servicio que orquesta las corridas de `verify`.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arborescence import GraphError, WeightedDigraph, verify_matrix_tree
from .config import settings
from .funcmap import EndoMap, FuncMapError, enumerate_n_fixing
from .identities import (
    generic_matrix,
    symbolic_ring,
    verify_chio,
    verify_chio_gen,
    verify_supergen,
)
from .matrix import MatrixError, resolve_bound
from .models import CondensationReport, TheoremTag, VerificationSummary
from .polynomial import PolynomialRing
from .ring import RingError, ring_from_spec
from .sampling import case_rng, random_digraph, random_matrix, random_n_fixing_map

logger = logging.getLogger(__name__)

# (mínimo, máximo) de n en modo simbólico; más arriba los polinomios explotan
SYMBOLIC_BOUNDS: dict[str, tuple[int, int]] = {
    "chio": (2, 4),
    "chio-gen": (2, 4),
    "supergen": (2, 3),
    "mtt": (1, 4),
}

# Mínimo de n en modo aleatorio; el máximo es la cota de los oráculos
RANDOM_MIN_N: dict[str, int] = {
    "chio": 2,
    "chio-gen": 2,
    "supergen": 2,
    "mtt": 1,
}


class VerificationRequestError(ValueError):
    """Pedido de verificación fuera de cotas o con un anillo incompatible"""
    pass


@dataclass(frozen=True)
class VerificationCase:
    """Un caso independiente; se serializa a los procesos trabajadores"""
    theorem: str
    n: int
    mode: str
    ring: str
    seed: int
    case: int
    max_n: int
    f: tuple[int, ...] | None = None


def _symbolic_report(task: VerificationCase) -> CondensationReport:
    n = task.n
    if task.theorem == "chio":
        ring = symbolic_ring(n)
        return verify_chio(generic_matrix(ring, n), case=task.case, max_n=task.max_n)
    if task.theorem == "chio-gen":
        ring = symbolic_ring(n)
        return verify_chio_gen(n, EndoMap(task.f), generic_matrix(ring, n), case=task.case, max_n=task.max_n)
    if task.theorem == "supergen":
        ring = symbolic_ring(n, ("x", "y"))
        A = generic_matrix(ring, n, "x")
        B = generic_matrix(ring, n, "y")
        return verify_supergen(n, A, B, case=task.case, max_n=task.max_n)
    ring = PolynomialRing.for_matrices(n, ("w",))
    return verify_matrix_tree(WeightedDigraph.symbolic(ring, n), case=task.case, max_n=task.max_n)


def _random_report(task: VerificationCase) -> CondensationReport:
    n = task.n
    ring = ring_from_spec(task.ring)
    rng = case_rng(task.seed, task.case)
    if task.theorem == "chio":
        A = random_matrix(rng, ring, n, zero_probability=0.2)
        return verify_chio(A, case=task.case, max_n=task.max_n)
    if task.theorem == "chio-gen":
        f = random_n_fixing_map(rng, n)
        A = random_matrix(rng, ring, n, zero_probability=0.2)
        return verify_chio_gen(n, f, A, case=task.case, max_n=task.max_n)
    if task.theorem == "supergen":
        A = random_matrix(rng, ring, n, low=-5, high=5)
        B = random_matrix(rng, ring, n, low=-5, high=5)
        return verify_supergen(n, A, B, case=task.case, max_n=task.max_n)
    g = random_digraph(rng, ring, n)
    return verify_matrix_tree(g, case=task.case, max_n=task.max_n)


def run_case(task: VerificationCase) -> CondensationReport:
    """
    Ejecuta un caso y devuelve su reporte.

    Un error de dominio no aborta la corrida: queda registrado como un
    reporte fallido con lhs 'error: ...'.
    """
    try:
        if task.mode == "symbolic":
            return _symbolic_report(task)
        return _random_report(task)
    except (MatrixError, FuncMapError, RingError, GraphError) as e:
        logger.error(f"Caso {task.case} de {task.theorem} n={task.n} falló: {e}")
        return CondensationReport(
            theorem=task.theorem,
            n=task.n,
            ring=task.ring,
            f=",".join(str(v) for v in task.f) if task.f else None,
            case=task.case,
            lhs=f"error: {e}",
            rhs="-",
            verdict=False,
        )


class VerificationService:
    """
    Servicio que recorre los casos de una identidad y arma el resumen.

    En modo simbólico se verifica la identidad sobre la matriz genérica
    (un caso, o uno por mapa n-fijo para chio-gen); en modo aleatorio se
    generan `trials` instancias enteras a partir de la semilla.
    """

    def __init__(self, workers: int | None = None, max_n: int | None = None):
        self.workers = workers or settings.WORKERS
        self.max_n = resolve_bound(max_n)

    def check_request(self, theorem: str, n: int, mode: str, ring: str) -> None:
        """
        Raises:
            VerificationRequestError: Si el teorema, el modo, el anillo o n no son válidos
        """
        if theorem not in SYMBOLIC_BOUNDS:
            raise VerificationRequestError(f"Teorema desconocido '{theorem}'")
        if mode == "symbolic":
            low, high = SYMBOLIC_BOUNDS[theorem]
            high = min(high, self.max_n)
            if ring.strip().lower() != "poly":
                raise VerificationRequestError("El modo simbólico trabaja sobre --ring poly")
        elif mode == "random":
            low, high = RANDOM_MIN_N[theorem], self.max_n
            if ring.strip().lower() == "poly":
                raise VerificationRequestError("El modo aleatorio requiere --ring int o mod:<m>")
            ring_from_spec(ring)
        else:
            raise VerificationRequestError(f"Modo desconocido '{mode}'")
        if not low <= n <= high:
            raise VerificationRequestError(
                f"{theorem} en modo {mode} admite {low} <= n <= {high}, se recibió n={n}"
            )

    def build_cases(self, theorem: str, n: int, mode: str, trials: int, seed: int, ring: str) -> list[VerificationCase]:
        if mode == "symbolic":
            if theorem == "chio-gen":
                return [
                    VerificationCase(theorem, n, mode, ring, seed, case, self.max_n, f.images)
                    for case, f in enumerate(enumerate_n_fixing(n, max_n=self.max_n))
                ]
            return [VerificationCase(theorem, n, mode, ring, seed, 0, self.max_n)]
        return [VerificationCase(theorem, n, mode, ring, seed, case, self.max_n) for case in range(trials)]

    def run(
        self,
        theorem: TheoremTag,
        n: int,
        mode: str = "random",
        trials: int | None = None,
        seed: int | None = None,
        ring: str | None = None,
    ) -> VerificationSummary:
        """
        Verifica una identidad en todos los casos pedidos.

        Args:
            theorem: chio, chio-gen, supergen o mtt
            n: Tamaño de la matriz (o número de vértices)
            mode: symbolic o random
            trials: Casos aleatorios (por defecto DEFAULT_TRIALS)
            seed: Semilla de 64 bits (por defecto DEFAULT_SEED)
            ring: Especificación de anillo (por defecto poly en simbólico, int en aleatorio)

        Returns:
            VerificationSummary con un reporte por caso, ordenados por índice

        Raises:
            VerificationRequestError: Si el pedido está fuera de cotas
        """
        ring = (ring or ("poly" if mode == "symbolic" else "int")).strip().lower()
        trials = settings.DEFAULT_TRIALS if trials is None else trials
        seed = settings.DEFAULT_SEED if seed is None else seed
        if trials < 0:
            raise VerificationRequestError(f"--trials no puede ser negativo: {trials}")
        if not 0 <= seed < 2 ** 64:
            raise VerificationRequestError(f"La semilla debe estar en [0, 2^64): {seed}")
        self.check_request(theorem, n, mode, ring)

        cases = self.build_cases(theorem, n, mode, trials, seed, ring)
        logger.info(f"Verificando {theorem} n={n} en modo {mode}: {len(cases)} casos, {self.workers} proceso(s)")
        start_time = time.time()

        if self.workers > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                reports = list(executor.map(run_case, cases, chunksize=max(1, len(cases) // (4 * self.workers))))
        else:
            reports = [run_case(task) for task in cases]

        passed = sum(1 for r in reports if r.verdict)
        elapsed = time.time() - start_time
        summary = VerificationSummary(
            theorem=theorem,
            n=n,
            mode=mode,
            ring=reports[0].ring if reports else ring,
            seed=seed if mode == "random" else None,
            total_cases=len(reports),
            passed=passed,
            failed=len(reports) - passed,
            reports=reports,
            total_time_seconds=round(elapsed, 2),
        )
        logger.info(f"Verificación completada: {summary.passed}/{summary.total_cases} casos en {elapsed:.2f}s")
        return summary
