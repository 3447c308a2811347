"""
Matrices densas sobre un anillo conmutativo.

Incluye el oráculo de Leibniz, los lemas clásicos de determinantes que se
usan como invariantes ejecutables y el motor de condensación de Chio. La
indexación pública es 1-based, como en las fórmulas: A[i, j] es a_{i,j}.
"""
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from .config import settings
from .ring import NotAnIntegralDomainError, Ring, RingValue

logger = logging.getLogger(__name__)


class MatrixError(ValueError):
    """Excepción base para errores de matrices"""
    pass


class DimensionMismatchError(MatrixError):
    """Dimensiones incompatibles para la operación"""
    pass


class NotSquareError(MatrixError):
    """La operación requiere una matriz cuadrada"""
    pass


class OracleBoundExceeded(MatrixError):
    """n supera la cota configurada de un oráculo exhaustivo"""
    pass


class PreconditionError(MatrixError):
    """No se cumple la hipótesis de un lema o teorema"""
    pass


class InternalIdentityError(MatrixError):
    """Una identidad que debería valer falló (error interno)"""
    pass


def resolve_bound(max_n: int | None) -> int:
    return settings.CONDENSATION_KIT_MAX_N if max_n is None else max_n


class Matrix:
    """
    Matriz rows×cols inmutable, con entradas de un único anillo.

    La matriz 0×0 es válida (su determinante es uno).
    """

    __slots__ = ("ring", "rows", "cols", "_entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries: Sequence[RingValue | int]):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Dimensiones negativas: {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"Se esperaban {rows * cols} entradas para {rows}x{cols}, se recibieron {len(entries)}"
            )
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._entries = tuple(ring.coerce(e) for e in entries)

    # --- Constructores ---

    @classmethod
    def from_rows(
        cls,
        ring: Ring,
        rows: Sequence[Sequence[RingValue | int]],
        cols: int | None = None,
    ) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows, start=1):
            if len(row) != cols:
                raise DimensionMismatchError(f"La fila {i} tiene {len(row)} entradas, se esperaban {cols}")
        return cls(ring, len(rows), cols, [e for row in rows for e in row])

    @classmethod
    def from_function(
        cls,
        ring: Ring,
        rows: int,
        cols: int,
        entry: Callable[[int, int], RingValue | int],
    ) -> "Matrix":
        """Matriz con entrada (i, j) = entry(i, j), índices 1-based"""
        return cls(
            ring,
            rows,
            cols,
            [entry(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)],
        )

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls.from_function(ring, n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, [0] * (rows * cols))

    @classmethod
    def symbolic(cls, ring: Ring, prefix: str, rows: int, cols: int | None = None) -> "Matrix":
        """Matriz genérica con entrada (i, j) igual a la indeterminada `<prefix><i>_<j>`"""
        cols = rows if cols is None else cols
        return cls.from_function(ring, rows, cols, lambda i, j: ring.variable(f"{prefix}{i}_{j}"))

    # --- Acceso ---

    def __getitem__(self, index: tuple[int, int]) -> RingValue:
        i, j = index
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"Índice ({i}, {j}) fuera de una matriz {self.rows}x{self.cols}")
        return self._entries[(i - 1) * self.cols + (j - 1)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[RingValue, ...]:
        if not 1 <= i <= self.rows:
            raise IndexError(f"Fila {i} fuera de rango")
        start = (i - 1) * self.cols
        return self._entries[start:start + self.cols]

    def column(self, j: int) -> tuple[RingValue, ...]:
        if not 1 <= j <= self.cols:
            raise IndexError(f"Columna {j} fuera de rango")
        return self._entries[j - 1::self.cols] if self.rows else ()

    def to_rows(self) -> list[list[RingValue]]:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    def entries(self) -> tuple[RingValue, ...]:
        return self._entries

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self._entries)

    # --- Transformaciones (devuelven matrices nuevas) ---

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        return Matrix(
            self.ring,
            len(row_indices),
            len(col_indices),
            [self[i, j] for i in row_indices for j in col_indices],
        )

    def leading_minor(self, k: int) -> "Matrix":
        """Submatriz k×k de las primeras k filas y columnas"""
        if not 0 <= k <= min(self.rows, self.cols):
            raise DimensionMismatchError(f"Menor líder {k} fuera de una matriz {self.rows}x{self.cols}")
        return self.submatrix(range(1, k + 1), range(1, k + 1))

    def swap_rows(self, p: int, q: int) -> "Matrix":
        rows = self.to_rows()
        rows[p - 1], rows[q - 1] = rows[q - 1], rows[p - 1]
        return Matrix.from_rows(self.ring, rows, self.cols)

    def swap_cols(self, p: int, q: int) -> "Matrix":
        rows = self.to_rows()
        for row in rows:
            row[p - 1], row[q - 1] = row[q - 1], row[p - 1]
        return Matrix.from_rows(self.ring, rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(1, self.rows + 1))
        return f"Matrix({self.ring.describe()}, {self.rows}x{self.cols}, [{body}])"


def _inversion_sign(images: Sequence[int]) -> int:
    inversions = sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class Permutation:
    """Elemento de S_n: images[i-1] = σ(i) y sign = (−1)^σ"""

    images: tuple[int, ...]
    sign: int

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PreconditionError(f"{self.images} no es una permutación de 1..{len(self.images)}")
        if self.sign != _inversion_sign(self.images):
            raise PreconditionError(f"Signo {self.sign} incorrecto para {self.images}")

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        images = tuple(images)
        return cls(images, _inversion_sign(images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)), 1)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))


def _lex_walk(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    # Elegir el valor en la posición idx de los restantes (ordenados) agrega
    # exactamente idx inversiones: el signo se actualiza sin recontar.
    images: list[int] = []
    remaining = list(range(1, n + 1))

    def walk(sign: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if not remaining:
            yield tuple(images), sign
            return
        for idx in range(len(remaining)):
            value = remaining.pop(idx)
            images.append(value)
            yield from walk(-sign if idx % 2 else sign)
            images.pop()
            remaining.insert(idx, value)

    yield from walk(1)


def permutations(n: int) -> Iterator[Permutation]:
    """Todas las permutaciones de S_n en orden lexicográfico, con su signo"""
    for images, sign in _lex_walk(n):
        yield Permutation(images, sign)


def _require_square(A: Matrix, operation: str) -> int:
    if not A.is_square:
        raise NotSquareError(f"{operation} requiere una matriz cuadrada, se recibió {A.rows}x{A.cols}")
    return A.rows


def multiply(B: Matrix, A: Matrix) -> Matrix:
    """
    Producto BA con entrada (i, j) = Σ_k b_{i,k}·a_{k,j}.

    Raises:
        DimensionMismatchError: Si B.cols != A.rows o los anillos difieren
    """
    if B.cols != A.rows:
        raise DimensionMismatchError(f"No se puede multiplicar {B.rows}x{B.cols} por {A.rows}x{A.cols}")
    if B.ring != A.ring:
        raise DimensionMismatchError(f"Anillos distintos: {B.ring.describe()} y {A.ring.describe()}")
    ring = B.ring
    b_rows = B.to_rows()
    a_cols = [A.column(j) for j in range(1, A.cols + 1)]
    entries = []
    for b_row in b_rows:
        for a_col in a_cols:
            total = ring.zero
            for b, a in zip(b_row, a_col):
                total = total + b * a
            entries.append(total)
    return Matrix(ring, B.rows, A.cols, entries)


def leibniz_det(A: Matrix, max_n: int | None = None) -> RingValue:
    """
    Determinante exacto por la fórmula de Leibniz.

    Recorre las permutaciones en orden lexicográfico acumulando el producto
    parcial de cada prefijo; las ramas con un factor cero se podan.

    Args:
        A: Matriz cuadrada
        max_n: Cota de n (por defecto CONDENSATION_KIT_MAX_N)

    Raises:
        NotSquareError: Si A no es cuadrada
        OracleBoundExceeded: Si n supera la cota
    """
    n = _require_square(A, "leibniz_det")
    bound = resolve_bound(max_n)
    if n > bound:
        raise OracleBoundExceeded(f"leibniz_det: n={n} supera la cota {bound}")
    ring = A.ring
    rows = A.to_rows()
    remaining = list(range(n))
    terms: list[RingValue] = []

    def expand(i: int, partial: RingValue, sign: int) -> None:
        if i == n:
            terms.append(partial if sign > 0 else -partial)
            return
        row = rows[i]
        for idx in range(len(remaining)):
            col = remaining[idx]
            entry = row[col]
            if entry.is_zero():
                continue
            del remaining[idx]
            expand(i + 1, partial * entry, -sign if idx % 2 else sign)
            remaining.insert(idx, col)

    expand(0, ring.one, 1)
    total = ring.zero
    for term in terms:
        total = total + term
    return total


def scale_rows(A: Matrix, b: Sequence[RingValue | int]) -> Matrix:
    """
    Multiplica la fila i de A por b_i.

    El determinante del resultado es (∏ b_i)·det A; los tests lo comprueban
    contra el oráculo de Leibniz.
    """
    if len(b) != A.rows:
        raise DimensionMismatchError(f"Se esperaban {A.rows} factores, se recibieron {len(b)}")
    factors = [A.ring.coerce(x) for x in b]
    return Matrix.from_function(A.ring, A.rows, A.cols, lambda i, j: factors[i - 1] * A[i, j])


def last_column_reduction(A: Matrix, max_n: int | None = None) -> RingValue:
    """
    Determinante de una matriz cuya última columna es cero salvo a_{n,n}:
    devuelve a_{n,n}·det(menor líder (n−1)×(n−1)).

    Raises:
        PreconditionError: Si n < 1 o algún a_{i,n} con i < n es no nulo
    """
    n = _require_square(A, "last_column_reduction")
    if n < 1:
        raise PreconditionError("last_column_reduction requiere n >= 1")
    for i in range(1, n):
        if not A[i, n].is_zero():
            raise PreconditionError(f"a_{{{i},{n}}} = {A[i, n]} no es cero")
    return A[n, n] * leibniz_det(A.leading_minor(n - 1), max_n=max_n)


def kernel_scaling_check(A: Matrix, v: Matrix, max_n: int | None = None) -> bool:
    """
    Comprueba que det(A)·v = 0 para un vector v del núcleo de A.

    Siempre debe devolver True; se usa como prueba de propiedad.

    Raises:
        PreconditionError: Si A·v != 0
    """
    n = _require_square(A, "kernel_scaling_check")
    if v.rows != n or v.cols != 1:
        raise DimensionMismatchError(f"v debe ser {n}x1, se recibió {v.rows}x{v.cols}")
    if not multiply(A, v).is_zero():
        raise PreconditionError("A·v no es el vector cero")
    d = leibniz_det(A, max_n=max_n)
    return all((d * x).is_zero() for x in v.column(1))


def chio_condense(A: Matrix) -> tuple[Matrix, RingValue]:
    """
    Condensación pivotal de Chio con pivote a_{n,n}.

    Returns:
        La matriz (n−1)×(n−1) de entradas a_{i,j}a_{n,n} − a_{i,n}a_{n,j} y el
        factor a_{n,n}^{n−2}, con det(condensada) = factor·det A.

    Raises:
        PreconditionError: Si n < 2
    """
    n = _require_square(A, "chio_condense")
    if n < 2:
        raise PreconditionError(f"chio_condense requiere n >= 2, se recibió n={n}")
    pivot = A[n, n]
    condensed = Matrix.from_function(
        A.ring, n - 1, n - 1,
        lambda i, j: A[i, j] * pivot - A[i, n] * A[n, j],
    )
    return condensed, pivot ** (n - 2)


def chio_condense_leading(A: Matrix) -> tuple[Matrix, RingValue]:
    """Variante con pivote a_{1,1}: entradas a_{i+1,j+1}a_{1,1} − a_{i+1,1}a_{1,j+1}"""
    n = _require_square(A, "chio_condense_leading")
    if n < 2:
        raise PreconditionError(f"chio_condense_leading requiere n >= 2, se recibió n={n}")
    pivot = A[1, 1]
    condensed = Matrix.from_function(
        A.ring, n - 1, n - 1,
        lambda i, j: A[i + 1, j + 1] * pivot - A[i + 1, 1] * A[1, j + 1],
    )
    return condensed, pivot ** (n - 2)


def _find_pivot(A: Matrix) -> tuple[int, int] | None:
    # Columnas desde la última, filas desde la última: un (n, n) no nulo no se mueve
    for q in range(A.cols, 0, -1):
        for p in range(A.rows, 0, -1):
            if not A[p, q].is_zero():
                return p, q
    return None


def chio_det(A: Matrix) -> RingValue:
    """
    Determinante por condensaciones de Chio sucesivas.

    En cada paso lleva una entrada no nula a la posición (n, n) con a lo
    sumo un intercambio de filas y uno de columnas (cada uno cambia el
    signo), condensa, y al final recupera det A dividiendo exactamente por
    los factores a_{n,n}^{n−2} en orden inverso.

    Raises:
        NotSquareError: Si A no es cuadrada
        NotAnIntegralDomainError: Si el anillo no es un dominio de integridad
        InternalIdentityError: Si una división exacta falla
    """
    _require_square(A, "chio_det")
    ring = A.ring
    if not ring.is_integral_domain:
        raise NotAnIntegralDomainError(
            f"chio_det requiere un dominio de integridad; {ring.describe()} no lo es"
        )
    sign = 1
    factors: list[RingValue] = []
    current = A
    while current.rows >= 2:
        pivot = _find_pivot(current)
        if pivot is None:
            logger.debug(f"chio_det: matriz {current.rows}x{current.rows} nula, determinante 0")
            return ring.zero
        n = current.rows
        p, q = pivot
        if p != n:
            current = current.swap_rows(p, n)
            sign = -sign
        if q != n:
            current = current.swap_cols(q, n)
            sign = -sign
        if (p, q) != (n, n):
            logger.debug(f"chio_det: pivote ({p}, {q}) movido a ({n}, {n})")
        current, factor = chio_condense(current)
        factors.append(factor)

    value = current[1, 1] if current.rows == 1 else ring.one
    for factor in reversed(factors):
        quotient = ring.exact_divide(value, factor)
        if quotient is None:
            raise InternalIdentityError(f"chio_det: {factor} no divide a {value}")
        value = quotient
    return value if sign > 0 else -value


def det(A: Matrix, max_n: int | None = None) -> RingValue:
    """Determinante con el backend adecuado: Chio en dominios de integridad, Leibniz si no"""
    if A.ring.is_integral_domain:
        return chio_det(A)
    return leibniz_det(A, max_n=max_n)
