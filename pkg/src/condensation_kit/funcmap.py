"""
Mapas f: {1,...,n} → {1,...,n} que fijan n.

Análisis de n-potencia (todo elemento llega a n iterando f), enumeración
lexicográfica y la biyección con árboles etiquetados con raíz n.
"""
import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .config import settings

logger = logging.getLogger(__name__)


class FuncMapError(ValueError):
    """Mapa o árbol inválido para la operación pedida"""
    pass


@dataclass(frozen=True)
class EndoMap:
    """
    Mapa f de {1,...,n} en sí mismo, guardado como arreglo de imágenes:
    images[i-1] = f(i).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise FuncMapError("Un mapa necesita n >= 1")
        for i, v in enumerate(self.images, start=1):
            if not 1 <= v <= n:
                raise FuncMapError(f"f({i}) = {v} fuera de {{1,...,{n}}}")

    @classmethod
    def of(cls, images: Sequence[int]) -> "EndoMap":
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "EndoMap":
        """Lee la sintaxis de la CLI: '3,1,3' significa f(1)=3, f(2)=1, f(3)=3"""
        try:
            images = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise FuncMapError(f"Mapa inválido '{text}': se esperan enteros separados por comas")
        return cls(images)

    @classmethod
    def constant(cls, n: int) -> "EndoMap":
        """El mapa que envía todo a n"""
        return cls((n,) * n)

    @classmethod
    def identity(cls, n: int) -> "EndoMap":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def fixes_n(self) -> bool:
        return self.images[-1] == self.n

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise FuncMapError(f"Vértice {i} fuera de {{1,...,{self.n}}}")
        return self.images[i - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


@dataclass(frozen=True)
class RootedTree:
    """
    Árbol con vértices {1,...,n} y raíz n; parent[i-1] es el padre de i
    para i < n. Las aristas (i, parent(i)) apuntan hacia la raíz.
    """

    n: int
    parent: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise FuncMapError("Un árbol necesita n >= 1")
        if len(self.parent) != self.n - 1:
            raise FuncMapError(f"Se esperaban {self.n - 1} padres, se recibieron {len(self.parent)}")
        if not self.is_valid():
            raise FuncMapError(f"Los padres {self.parent} no forman un árbol con raíz {self.n}")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, p) for i, p in enumerate(self.parent, start=1)]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def is_valid(self) -> bool:
        """Conexo, acíclico y con n−1 aristas (leído como grafo no dirigido)"""
        if any(not 1 <= p <= self.n for p in self.parent):
            return False
        undirected = nx.Graph()
        undirected.add_nodes_from(range(1, self.n + 1))
        undirected.add_edges_from(self.edges())
        # i→p y p→i colapsan en una sola arista de nx.Graph
        return undirected.number_of_edges() == self.n - 1 and nx.is_tree(undirected)


def _check_vertex(f: EndoMap, i: int) -> None:
    if not 1 <= i <= f.n:
        raise FuncMapError(f"Vértice {i} fuera de {{1,...,{f.n}}}")


def _require_n_fixing(f: EndoMap) -> None:
    if not f.fixes_n:
        raise FuncMapError(f"El mapa {f} no fija n={f.n} (f(n) = {f.images[-1]})")


def iterate(f: EndoMap, i: int, k: int) -> int:
    """f^k(i) por aplicación repetida"""
    _check_vertex(f, i)
    if k < 0:
        raise FuncMapError(f"Número de iteraciones negativo: {k}")
    for _ in range(k):
        i = f.images[i - 1]
    return i


def orbit(f: EndoMap, i: int) -> set[int]:
    """{f^s(i) : 0 <= s <= n−1}"""
    _check_vertex(f, i)
    visited = {i}
    for _ in range(f.n - 1):
        i = f.images[i - 1]
        visited.add(i)
    return visited


def is_n_potent(f: EndoMap) -> bool:
    """
    True si f^{n−1}(i) = n para todo i.

    Basta caminar n−1 pasos desde cada vértice: si i llega a n, lo hace en
    a lo sumo n−1 pasos y n queda fijo.

    Raises:
        FuncMapError: Si f(n) != n
    """
    _require_n_fixing(f)
    n = f.n
    return all(iterate(f, i, n - 1) == n for i in range(1, n + 1))


def preimage(f: EndoMap, j: int) -> list[int]:
    _check_vertex(f, j)
    return [i for i, v in enumerate(f.images, start=1) if v == j]


def preimage_count_of_n(f: EndoMap) -> int:
    """|f^{-1}(n)|; es al menos 2 para f n-potente con n >= 2"""
    return sum(1 for v in f.images if v == f.n)


def _check_bound(n: int, max_n: int | None) -> None:
    bound = settings.CONDENSATION_KIT_MAX_N if max_n is None else max_n
    if n > bound:
        raise FuncMapError(f"n={n} supera la cota de enumeración {bound}")


def enumerate_n_fixing(n: int, max_n: int | None = None) -> Iterator[EndoMap]:
    """Los n^{n−1} mapas con f(n) = n, en orden lexicográfico de imágenes"""
    if n < 1:
        raise FuncMapError(f"n debe ser positivo, se recibió {n}")
    _check_bound(n, max_n)
    for head in itertools.product(range(1, n + 1), repeat=n - 1):
        yield EndoMap(head + (n,))


@lru_cache(maxsize=None)
def _n_potent_maps(n: int) -> tuple[EndoMap, ...]:
    maps = tuple(f for f in enumerate_n_fixing(n, max_n=n) if is_n_potent(f))
    logger.debug(f"{len(maps)} mapas n-potentes para n={n}")
    return maps


def enumerate_n_potent(n: int, max_n: int | None = None) -> Iterator[EndoMap]:
    """
    Todos los mapas n-potentes, una vez cada uno, en orden lexicográfico.

    Recorre los n^{n−1} mapas que fijan n y filtra (costo O(n^n)); hay
    n^{n−2} para n >= 2 y exactamente uno para n = 1.

    Raises:
        FuncMapError: Si n < 1 o supera la cota
    """
    if n < 1:
        raise FuncMapError(f"n debe ser positivo, se recibió {n}")
    _check_bound(n, max_n)
    yield from _n_potent_maps(n)


def map_to_tree(f: EndoMap) -> RootedTree:
    """
    Árbol con raíz n y aristas (i, f(i)) para i < n.

    Raises:
        FuncMapError: Si f no es n-potente (sus aristas tendrían un ciclo que evita n)
    """
    if not is_n_potent(f):
        raise FuncMapError(f"El mapa {f} no es n-potente; no define un árbol")
    return RootedTree(f.n, f.images[:-1])


def tree_to_map(t: RootedTree) -> EndoMap:
    """Inversa de map_to_tree: f(i) = padre de i, f(n) = n"""
    return EndoMap(t.parent + (t.n,))
