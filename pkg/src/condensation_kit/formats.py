"""
Formatos de texto de entrada y salida.

Matrices: líneas de comentario `#` opcionales, cabecera `n m` y luego n
filas de m enteros. Grafos: cabecera `digraph n` y líneas `u v w`
(cola, cabeza, peso entero); las aristas repetidas se suman.
"""
import logging
from collections.abc import Iterator, Sequence
from pathlib import Path

from .arborescence import WeightedDigraph
from .matrix import Matrix
from .ring import ZZ, Ring

logger = logging.getLogger(__name__)


class InputFormatError(ValueError):
    """Archivo de entrada mal formado; conserva el archivo y la línea (1-based)"""

    def __init__(self, message: str, source: str = "<texto>", line: int | None = None):
        self.source = source
        self.line = line
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _parse_int(token: str, source: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputFormatError(f"'{token}' no es un entero decimal", source, line)


def parse_matrix_text(text: str, ring: Ring = ZZ, source: str = "<texto>") -> Matrix:
    """
    Lee una matriz en formato de texto.

    Args:
        text: Contenido del archivo
        ring: Anillo al que se convierten las entradas enteras
        source: Nombre del archivo para los mensajes de error

    Returns:
        La matriz leída

    Raises:
        InputFormatError: Si la cabecera, una fila o una entrada es inválida
    """
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise InputFormatError("archivo vacío, se esperaba la cabecera 'n m'", source)
    if len(header) != 2:
        raise InputFormatError(f"cabecera inválida '{' '.join(header)}', se esperaba 'n m'", source, number)
    rows, cols = (_parse_int(t, source, number) for t in header)
    if rows < 0 or cols < 0:
        raise InputFormatError(f"dimensiones negativas {rows}x{cols}", source, number)

    values: list[list[int]] = []
    for number, tokens in lines:
        if len(values) == rows:
            raise InputFormatError(f"sobran filas: se declararon {rows}", source, number)
        if len(tokens) != cols:
            raise InputFormatError(f"la fila tiene {len(tokens)} entradas, se esperaban {cols}", source, number)
        values.append([_parse_int(t, source, number) for t in tokens])
    if len(values) != rows:
        raise InputFormatError(f"se declararon {rows} filas y se leyeron {len(values)}", source)
    return Matrix(ring, rows, cols, [v for row in values for v in row])


def read_matrix_file(path: str | Path, ring: Ring = ZZ) -> Matrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"no se pudo leer el archivo: {e.strerror}", str(path))
    matrix = parse_matrix_text(text, ring, source=str(path))
    logger.debug(f"Matriz {matrix.rows}x{matrix.cols} leída de {path}")
    return matrix


def parse_graph_text(text: str, ring: Ring = ZZ, source: str = "<texto>") -> WeightedDigraph:
    """
    Lee un digrafo ponderado en formato de texto.

    Raises:
        InputFormatError: Si la cabecera o alguna arista es inválida
    """
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise InputFormatError("archivo vacío, se esperaba la cabecera 'digraph n'", source)
    if len(header) != 2 or header[0] != "digraph":
        raise InputFormatError(f"cabecera inválida '{' '.join(header)}', se esperaba 'digraph n'", source, number)
    n = _parse_int(header[1], source, number)
    if n < 1:
        raise InputFormatError(f"el digrafo necesita al menos un vértice, se recibió n={n}", source, number)

    edges: list[tuple[int, int, int]] = []
    for number, tokens in lines:
        if len(tokens) != 3:
            raise InputFormatError(f"se esperaba 'u v w', se recibió '{' '.join(tokens)}'", source, number)
        u, v, w = (_parse_int(t, source, number) for t in tokens)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputFormatError(f"arista ({u}, {v}) fuera de {{1,...,{n}}}", source, number)
        edges.append((u, v, w))
    return WeightedDigraph.from_edges(ring, n, edges)


def read_graph_file(path: str | Path, ring: Ring = ZZ) -> WeightedDigraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"no se pudo leer el archivo: {e.strerror}", str(path))
    graph = parse_graph_text(text, ring, source=str(path))
    logger.debug(f"Digrafo con {graph.n} vértices leído de {path}")
    return graph


def format_matrix(M: Matrix) -> list[str]:
    """Cabecera 'rows cols' seguida de una línea por fila (mismo formato que la entrada)"""
    lines = [f"{M.rows} {M.cols}"]
    for row in M.to_rows():
        lines.append(" ".join(str(v) for v in row))
    return lines


def format_symbolic_matrix(M: Matrix) -> list[str]:
    """Una línea '(i,j) = <polinomio>' por entrada, en orden de filas"""
    return [f"({i},{j}) = {M[i, j]}" for i in range(1, M.rows + 1) for j in range(1, M.cols + 1)]


def format_parent_list(parents: Sequence[int | None]) -> str:
    """'2,-,2' para padres (2, None, 2): la raíz se marca con '-'"""
    return ",".join("-" if p is None else str(p) for p in parents)
