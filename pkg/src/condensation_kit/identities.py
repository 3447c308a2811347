"""
Objetos derivados de las identidades de condensación y sus verificadores.

Construye weight_f, abut_f, las matrices B (Chio generalizado), G (suma
ponderada sobre mapas n-potentes), Z_f, v_f y la matriz de columna unitaria,
y verifica las identidades de forma exacta. Los verificadores usan siempre
el oráculo de Leibniz, nunca chio_det, para que un error del motor de
condensación no pueda ocultarse a sí mismo.
"""
import itertools
import logging
from collections.abc import Sequence

from .funcmap import (
    EndoMap,
    FuncMapError,
    enumerate_n_fixing,
    enumerate_n_potent,
    is_n_potent,
    iterate,
    preimage_count_of_n,
)
from .matrix import (
    DimensionMismatchError,
    InternalIdentityError,
    Matrix,
    PreconditionError,
    chio_condense,
    leibniz_det,
    multiply,
)
from .models import CondensationReport
from .polynomial import PolynomialRing
from .ring import ZZ, Ring, RingValue, product

logger = logging.getLogger(__name__)

# d[i-1][j-1][k-1] = d_{i,j,k}
Cube = Sequence[Sequence[Sequence[RingValue | int]]]


def symbolic_ring(n: int, prefixes: Sequence[str] = ("x",)) -> PolynomialRing:
    """Anillo Z[x1_1, ..., xn_n] (y uno más por cada prefijo adicional)"""
    return PolynomialRing.for_matrices(n, prefixes)


def generic_matrix(ring: PolynomialRing, n: int, prefix: str = "x") -> Matrix:
    return Matrix.symbolic(ring, prefix, n)


def _require_size(f: EndoMap, M: Matrix, name: str) -> int:
    if M.rows != f.n or M.cols != f.n:
        raise DimensionMismatchError(f"{name} debe ser {f.n}x{f.n}, se recibió {M.rows}x{M.cols}")
    return f.n


def weight_of(f: EndoMap, B: Matrix) -> RingValue:
    """weight_f B = ∏_{i=1}^{n−1} b_{i,f(i)} (el producto vacío es uno)"""
    n = _require_size(f, B, "B")
    return product([B[i, f(i)] for i in range(1, n)], B.ring)


def abut_of(f: EndoMap, A: Matrix) -> RingValue:
    """
    abut_f A = a_{n,n}^{|f^{-1}(n)|−2} · ∏_{i<n, f(i)≠n} a_{f(i),n}.

    Raises:
        PreconditionError: Si n < 2 o f no es n-potente
    """
    n = _require_size(f, A, "A")
    if n < 2:
        raise PreconditionError(f"abut_f requiere n >= 2, se recibió n={n}")
    if not is_n_potent(f):
        raise PreconditionError(f"abut_f requiere un mapa n-potente; {f} no lo es")
    exponent = preimage_count_of_n(f) - 2
    if exponent < 0:
        raise InternalIdentityError(f"|f^-1(n)| - 2 = {exponent} < 0 para el mapa n-potente {f}")
    factors = [A[f(i), n] for i in range(1, n) if f(i) != n]
    return A[n, n] ** exponent * product(factors, A.ring)


def abut_excluding(f: EndoMap, A: Matrix, g: int) -> RingValue:
    """
    ∏_{i<n, i≠g} a_{f(i),n} para un vértice g < n con f(g) = n; coincide con
    abut_f A para cualquier elección de g.
    """
    n = _require_size(f, A, "A")
    if not 1 <= g < n or f(g) != n:
        raise PreconditionError(f"g={g} debe cumplir g < n y f(g) = n")
    return product([A[f(i), n] for i in range(1, n) if i != g], A.ring)


def build_condensed_B(f: EndoMap, A: Matrix) -> Matrix:
    """Matriz (n−1)×(n−1) de entradas a_{i,j}a_{f(i),n} − a_{i,n}a_{f(i),j}"""
    n = _require_size(f, A, "A")
    if not f.fixes_n:
        raise FuncMapError(f"El mapa {f} no fija n={n}")
    return Matrix.from_function(
        A.ring, n - 1, n - 1,
        lambda i, j: A[i, j] * A[f(i), n] - A[i, n] * A[f(i), j],
    )


def build_G(A: Matrix, B: Matrix) -> Matrix:
    """
    Con C = BA, la matriz (n−1)×(n−1) de entradas a_{i,j}c_{i,n} − a_{i,n}c_{i,j}.

    Raises:
        DimensionMismatchError: Si A y B no son n×n sobre el mismo anillo
        PreconditionError: Si n < 2
    """
    n = A.rows
    if not (A.is_square and B.rows == n and B.cols == n):
        raise DimensionMismatchError(
            f"A y B deben ser n×n del mismo tamaño: {A.rows}x{A.cols} y {B.rows}x{B.cols}"
        )
    if n < 2:
        raise PreconditionError(f"build_G requiere n >= 2, se recibió n={n}")
    C = multiply(B, A)
    return Matrix.from_function(
        A.ring, n - 1, n - 1,
        lambda i, j: A[i, j] * C[i, n] - A[i, n] * C[i, j],
    )


def build_Zf(f: EndoMap, ring: Ring = ZZ) -> Matrix:
    """Z_f = (δ_{i,j} − (1 − δ_{i,n})·δ_{f(i),j})"""
    n = f.n
    return Matrix.from_function(
        ring, n, n,
        lambda i, j: int(i == j) - (0 if i == n else int(f(i) == j)),
    )


def build_vf(f: EndoMap, ring: Ring = ZZ) -> Matrix:
    """Vector columna con entrada 1 − δ_{f^{n−1}(i),n}: 0 si i llega a n, 1 si no"""
    if not f.fixes_n:
        raise FuncMapError(f"El mapa {f} no fija n={f.n}")
    n = f.n
    return Matrix.from_function(ring, n, 1, lambda i, _: 0 if iterate(f, i, n - 1) == n else 1)


def build_selector_matrix(f: EndoMap, ring: Ring = ZZ) -> Matrix:
    """B = (δ_{j,f(i)}): con esta B la suma ponderada se reduce al mapa f"""
    return Matrix.from_function(ring, f.n, f.n, lambda i, j: int(j == f(i)))


def build_unit_column_matrix(n: int, ring: Ring = ZZ) -> Matrix:
    """a_{i,j} = δ_{i,j} + δ_{j,n}(1 − δ_{i,n}): unos en la diagonal y en la última columna"""
    if n < 1:
        raise PreconditionError(f"n debe ser positivo, se recibió {n}")
    return Matrix.from_function(ring, n, n, lambda i, j: int(i == j or j == n))


def weighted_map_sum(A: Matrix, B: Matrix, max_n: int | None = None) -> RingValue:
    """Σ sobre los mapas n-potentes f de (weight_f B)(abut_f A)"""
    n = A.rows
    total = A.ring.zero
    for f in enumerate_n_potent(n, max_n=max_n):
        total = total + weight_of(f, B) * abut_of(f, A)
    return total


# --- Multilinealidad del determinante ---

def _check_cube(b: Matrix, d: Cube) -> tuple[int, int]:
    m, k = b.rows, b.cols
    if len(d) != m or any(len(plane) != m for plane in d):
        raise DimensionMismatchError(f"d debe tener forma {m}x{m}x{k}")
    if any(len(line) != k for plane in d for line in plane):
        raise DimensionMismatchError(f"d debe tener forma {m}x{m}x{k}")
    return m, k


def build_multilinear_matrix(b: Matrix, d: Cube) -> Matrix:
    """G = (Σ_k b_{i,k} d_{i,j,k}) de tamaño m×m, con b de tamaño m×k"""
    m, k = _check_cube(b, d)
    ring = b.ring

    def entry(i: int, j: int) -> RingValue:
        total = ring.zero
        for s in range(1, k + 1):
            total = total + b[i, s] * d[i - 1][j - 1][s - 1]
        return total

    return Matrix.from_function(ring, m, m, entry)


def _selected_det(d: Cube, images: Sequence[int], ring: Ring, max_n: int | None) -> RingValue:
    m = len(images)
    minor = Matrix.from_function(ring, m, m, lambda i, j: d[i - 1][j - 1][images[i - 1] - 1])
    return leibniz_det(minor, max_n=max_n)


def multilinear_expansion(b: Matrix, d: Cube, max_n: int | None = None) -> RingValue:
    """
    Σ sobre todos los f: {1..m} → {1..k} de (∏_i b_{i,f(i)})·det(d_{i,j,f(i)});
    coincide con det(build_multilinear_matrix(b, d)).
    """
    m, k = _check_cube(b, d)
    ring = b.ring
    total = ring.zero
    for images in itertools.product(range(1, k + 1), repeat=m):
        coeff = product([b[i, images[i - 1]] for i in range(1, m + 1)], ring)
        if coeff.is_zero():
            continue
        total = total + coeff * _selected_det(d, images, ring, max_n)
    return total


def n_fixing_expansion(b: Matrix, d: Cube, max_n: int | None = None) -> RingValue:
    """La misma suma indexada por los mapas f: {1..n} → {1..n} con f(n) = n (m = n−1, k = n)"""
    m, k = _check_cube(b, d)
    if k != m + 1:
        raise DimensionMismatchError(f"Se requiere k = m + 1, se recibió m={m}, k={k}")
    ring = b.ring
    total = ring.zero
    for f in enumerate_n_fixing(k, max_n=max_n):
        images = f.images[:-1]
        coeff = product([b[i, images[i - 1]] for i in range(1, m + 1)], ring)
        if coeff.is_zero():
            continue
        total = total + coeff * _selected_det(d, images, ring, max_n)
    return total


# --- Verificadores ---

def build_report(theorem, n, ring, lhs, rhs, f=None, case=0) -> CondensationReport:
    """Reporte con los lados en forma canónica y veredicto por igualdad exacta"""
    left, right = str(lhs), str(rhs)
    verdict = lhs == rhs
    if not verdict:
        logger.error(f"{theorem} n={n} f={f or '-'}: {left} != {right}")
    return CondensationReport(
        theorem=theorem,
        n=n,
        ring=ring.describe(),
        f=str(f) if f is not None else None,
        case=case,
        lhs=left,
        rhs=right,
        verdict=verdict,
    )


def verify_chio(A: Matrix, case: int = 0, max_n: int | None = None) -> CondensationReport:
    """det(condensada) = a_{n,n}^{n−2}·det A"""
    condensed, factor = chio_condense(A)
    lhs = leibniz_det(condensed, max_n=max_n)
    rhs = factor * leibniz_det(A, max_n=max_n)
    return build_report("chio", A.rows, A.ring, lhs, rhs, case=case)


def verify_chio_gen(n: int, f: EndoMap, A: Matrix, case: int = 0, max_n: int | None = None) -> CondensationReport:
    """
    Verifica el teorema de Chio generalizado para un mapa f que fija n.

    Si f no es n-potente, det B = 0; si lo es (y n >= 2), det B = (abut_f A)·det A.

    Raises:
        FuncMapError: Si f no fija n
        PreconditionError: Si f es n-potente y n < 2
    """
    if f.n != n:
        raise DimensionMismatchError(f"El mapa {f} no es de tamaño n={n}")
    B = build_condensed_B(f, A)
    lhs = leibniz_det(B, max_n=max_n)
    if is_n_potent(f):
        if n < 2:
            raise PreconditionError("La rama n-potente requiere n >= 2")
        rhs = abut_of(f, A) * leibniz_det(A, max_n=max_n)
    else:
        rhs = A.ring.zero
    return build_report("chio-gen", n, A.ring, lhs, rhs, f=f, case=case)


def verify_supergen(n: int, A: Matrix, B: Matrix, case: int = 0, max_n: int | None = None) -> CondensationReport:
    """det G = (Σ_f (weight_f B)(abut_f A))·det A sobre los mapas n-potentes"""
    if A.rows != n:
        raise DimensionMismatchError(f"A debe ser {n}x{n}, se recibió {A.rows}x{A.cols}")
    G = build_G(A, B)
    lhs = leibniz_det(G, max_n=max_n)
    rhs = weighted_map_sum(A, B, max_n=max_n) * leibniz_det(A, max_n=max_n)
    return build_report("supergen", n, A.ring, lhs, rhs, case=case)
