"""
Anillos conmutativos exactos.

Define la interfaz abstracta `Ring`, el valor inmutable `RingValue` (que
siempre conoce su anillo) y dos anillos concretos: los enteros de precisión
arbitraria y los enteros módulo m. El anillo de polinomios vive en
`polynomial.py`.
"""
import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any

logger = logging.getLogger(__name__)


class RingError(ArithmeticError):
    """Excepción base para errores de aritmética en anillos"""
    pass


class RingMismatchError(RingError):
    """Se operó con valores de anillos distintos"""
    pass


class NotAnIntegralDomainError(RingError):
    """La operación requiere un dominio de integridad"""
    pass


class RingDivisionByZeroError(RingError, ZeroDivisionError):
    """División exacta por cero"""
    pass


class RingSpecError(RingError, ValueError):
    """Especificación de anillo inválida (flag --ring)"""
    pass


class RingValue:
    """
    Elemento inmutable de un anillo.

    `value` es la representación interna (un int para Z y Z/m, un dict
    exponentes → coeficiente para polinomios) y nunca se muta después de
    construido. Los enteros de Python se convierten implícitamente al anillo
    del otro operando.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: "Ring", value: Any):
        self.ring = ring
        self.value = value

    def _operand(self, other: Any) -> "RingValue | None":
        if isinstance(other, RingValue):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other: Any) -> "RingValue":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return self.ring.add(self, rhs)

    def __radd__(self, other: Any) -> "RingValue":
        return self.__add__(other)

    def __sub__(self, other: Any) -> "RingValue":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return self.ring.sub(self, rhs)

    def __rsub__(self, other: Any) -> "RingValue":
        lhs = self._operand(other)
        if lhs is None:
            return NotImplemented
        return self.ring.sub(lhs, self)

    def __mul__(self, other: Any) -> "RingValue":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return self.ring.mul(self, rhs)

    def __rmul__(self, other: Any) -> "RingValue":
        return self.__mul__(other)

    def __neg__(self) -> "RingValue":
        return self.ring.neg(self)

    def __pow__(self, exponent: int) -> "RingValue":
        return self.ring.pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return self.ring == rhs.ring and self.ring.equal(self, rhs)

    def __hash__(self) -> int:
        # Debe coincidir con hash(int) para los valores que comparan igual a un int
        as_int = self.ring.as_int(self)
        if as_int is not None:
            return hash(as_int)
        return hash((self.ring, self.ring.key(self)))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self)

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"RingValue({self.ring.describe()}, {self.ring.format(self)})"


class Ring(ABC):
    """
    Anillo conmutativo con igualdad exacta.

    Las subclases implementan la aritmética sobre la representación interna
    (`_add`, `_mul`, ...); los métodos públicos validan que los operandos
    pertenezcan al anillo y envuelven el resultado en un `RingValue`.
    """

    is_integral_domain: bool = False

    # --- Aritmética sobre la representación interna ---

    @abstractmethod
    def _from_int(self, k: int) -> Any: ...

    @abstractmethod
    def _add(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def _neg(self, x: Any) -> Any: ...

    @abstractmethod
    def _mul(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def _is_zero(self, x: Any) -> bool: ...

    @abstractmethod
    def _divide(self, x: Any, y: Any) -> Any | None:
        """Cociente exacto x / y, o None si no existe (y ≠ 0 garantizado)"""
        ...

    @abstractmethod
    def _format(self, x: Any) -> str: ...

    @abstractmethod
    def describe(self) -> str:
        """Nombre corto del anillo para reportes (ej: 'Z', 'Z/7')"""
        ...

    def _key(self, x: Any) -> Any:
        return x

    # --- Interfaz pública ---

    def from_int(self, k: int) -> RingValue:
        return RingValue(self, self._from_int(k))

    @property
    def zero(self) -> RingValue:
        return self.from_int(0)

    @property
    def one(self) -> RingValue:
        return self.from_int(1)

    def coerce(self, x: "RingValue | int") -> RingValue:
        """Convierte un int al anillo; valida la pertenencia de un RingValue"""
        if isinstance(x, RingValue):
            self._check(x)
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise RingMismatchError(f"No se puede convertir {x!r} al anillo {self.describe()}")

    def _check(self, *values: RingValue) -> None:
        for v in values:
            if v.ring is not self and v.ring != self:
                raise RingMismatchError(
                    f"Valor de {v.ring.describe()} usado en el anillo {self.describe()}"
                )

    def add(self, a: RingValue, b: RingValue) -> RingValue:
        self._check(a, b)
        return RingValue(self, self._add(a.value, b.value))

    def neg(self, a: RingValue) -> RingValue:
        self._check(a)
        return RingValue(self, self._neg(a.value))

    def sub(self, a: RingValue, b: RingValue) -> RingValue:
        self._check(a, b)
        return RingValue(self, self._add(a.value, self._neg(b.value)))

    def mul(self, a: RingValue, b: RingValue) -> RingValue:
        self._check(a, b)
        return RingValue(self, self._mul(a.value, b.value))

    def pow(self, a: RingValue, exponent: int) -> RingValue:
        self._check(a)
        if exponent < 0:
            raise RingError(f"Exponente negativo no soportado: {exponent}")
        result = self._from_int(1)
        base = a.value
        while exponent:
            if exponent & 1:
                result = self._mul(result, base)
            exponent >>= 1
            if exponent:
                base = self._mul(base, base)
        return RingValue(self, result)

    def is_zero(self, a: RingValue) -> bool:
        self._check(a)
        return self._is_zero(a.value)

    def equal(self, a: RingValue, b: RingValue) -> bool:
        return a.value == b.value

    def key(self, a: RingValue) -> Any:
        return self._key(a.value)

    def _as_int(self, x: Any) -> int | None:
        return None

    def as_int(self, a: RingValue) -> int | None:
        """Representante entero canónico del valor, o None si no es una constante entera"""
        return self._as_int(a.value)

    def exact_divide(self, a: RingValue, b: RingValue) -> RingValue | None:
        """
        Cociente exacto q con q·b = a, o None si no existe en el anillo.

        Raises:
            NotAnIntegralDomainError: Si el anillo no es un dominio de integridad
            RingDivisionByZeroError: Si b es cero
        """
        self._check(a, b)
        if not self.is_integral_domain:
            raise NotAnIntegralDomainError(
                f"{self.describe()} no es un dominio de integridad; la división exacta no está definida"
            )
        if self._is_zero(b.value):
            raise RingDivisionByZeroError(f"División por cero en {self.describe()}")
        quotient = self._divide(a.value, b.value)
        if quotient is None:
            return None
        return RingValue(self, quotient)

    def format(self, a: RingValue) -> str:
        return self._format(a.value)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"


class IntegerRing(Ring):
    """Enteros de precisión arbitraria (int de Python)"""

    is_integral_domain = True

    def _from_int(self, k: int) -> int:
        return k

    def _add(self, x: int, y: int) -> int:
        return x + y

    def _neg(self, x: int) -> int:
        return -x

    def _mul(self, x: int, y: int) -> int:
        return x * y

    def _is_zero(self, x: int) -> bool:
        return x == 0

    def _divide(self, x: int, y: int) -> int | None:
        q, r = divmod(x, y)
        return q if r == 0 else None

    def _as_int(self, x: int) -> int:
        return x

    def _format(self, x: int) -> str:
        return str(x)

    def describe(self) -> str:
        return "Z"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("Z")


def is_prime(m: int) -> bool:
    """Primalidad por división de prueba (m es pequeño en la práctica)"""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class ModularRing(Ring):
    """
    Enteros módulo m, con representantes en [0, m).

    Solo es dominio de integridad (y admite división exacta) si m es primo;
    la primalidad se decide una vez al construir el anillo.
    """

    def __init__(self, modulus: int):
        if modulus < 2:
            raise RingSpecError(f"El módulo debe ser al menos 2, se recibió {modulus}")
        self.modulus = modulus
        self.is_integral_domain = is_prime(modulus)
        logger.debug(f"Anillo Z/{modulus} creado (primo: {self.is_integral_domain})")

    def _from_int(self, k: int) -> int:
        return k % self.modulus

    def _add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def _neg(self, x: int) -> int:
        return -x % self.modulus

    def _mul(self, x: int, y: int) -> int:
        return x * y % self.modulus

    def _is_zero(self, x: int) -> bool:
        return x == 0

    def _divide(self, x: int, y: int) -> int:
        return x * pow(y, -1, self.modulus) % self.modulus

    def _as_int(self, x: int) -> int:
        return x

    def _format(self, x: int) -> str:
        return str(x)

    def describe(self) -> str:
        return f"Z/{self.modulus}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ModularRing) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("Z/m", self.modulus))


ZZ = IntegerRing()


def add(a: RingValue, b: RingValue) -> RingValue:
    """Suma exacta de dos valores del mismo anillo"""
    return a.ring.add(a, b)


def sub(a: RingValue, b: RingValue) -> RingValue:
    return a.ring.sub(a, b)


def neg(a: RingValue) -> RingValue:
    return a.ring.neg(a)


def mul(a: RingValue, b: RingValue) -> RingValue:
    """Producto exacto de dos valores del mismo anillo"""
    return a.ring.mul(a, b)


def exact_divide(a: RingValue, b: RingValue) -> RingValue | None:
    """Cociente exacto a / b en un dominio de integridad, o None si b no divide a a"""
    return a.ring.exact_divide(a, b)


def product(values: Sequence[RingValue], ring: Ring) -> RingValue:
    """Producto de una secuencia (el producto vacío es uno)"""
    result = ring.one
    for v in values:
        result = ring.mul(result, v)
    return result


def ring_from_spec(spec: str, variables: Sequence[str] | None = None) -> Ring:
    """
    Construye un anillo a partir del flag --ring.

    Args:
        spec: 'int', 'mod:<m>' o 'poly'
        variables: Nombres de las indeterminadas (solo para 'poly')

    Returns:
        El anillo correspondiente

    Raises:
        RingSpecError: Si la especificación es inválida
    """
    spec = spec.strip().lower()
    if spec == "int":
        return ZZ
    if spec.startswith("mod:"):
        try:
            modulus = int(spec[4:])
        except ValueError:
            raise RingSpecError(f"Módulo inválido en '{spec}'")
        return ModularRing(modulus)
    if spec == "poly":
        from .polynomial import PolynomialRing
        return PolynomialRing(variables or ())
    raise RingSpecError(f"Anillo desconocido '{spec}' (use int, mod:<m> o poly)")
