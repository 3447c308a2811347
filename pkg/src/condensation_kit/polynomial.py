"""
Anillo de polinomios multivariados dispersos sobre los enteros.

Un polinomio se guarda como un dict {vector de exponentes: coeficiente} sin
coeficientes cero. Esa es la forma canónica: dos polinomios son iguales si y
solo si sus dicts son iguales, sin importar el orden de inserción. El orden
de monomios (lexicográfico graduado sobre el orden declarado de las
indeterminadas) solo afecta la impresión y el término líder de la división.
"""
import logging
from collections.abc import Iterable, Mapping, Sequence

from .ring import Ring, RingSpecError, RingValue

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]
Terms = dict[Exponents, int]


def _order_key(exponents: Exponents) -> tuple:
    """Clave de orden: el monomio mayor (grado, luego lex) queda primero"""
    return (-sum(exponents), tuple(-e for e in exponents))


class PolynomialRing(Ring):
    """
    Z[v_1, ..., v_k] con indeterminadas nombradas.

    Los nombres siguen la convención `x<i>_<j>` para la entrada (i, j) de
    una matriz genérica (ver `for_matrices`).
    """

    is_integral_domain = True

    def __init__(self, variables: Sequence[str]):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise RingSpecError(f"Indeterminadas repetidas: {names}")
        self.variables = names
        self._index = {name: i for i, name in enumerate(names)}
        self._constant = (0,) * len(names)

    @classmethod
    def for_matrices(
        cls,
        n: int,
        prefixes: Sequence[str] = ("x",),
        cols: int | None = None,
    ) -> "PolynomialRing":
        """
        Anillo con una indeterminada `<prefijo><i>_<j>` por entrada de cada
        matriz genérica n×cols, en orden de filas.
        """
        cols = n if cols is None else cols
        names = [
            f"{prefix}{i}_{j}"
            for prefix in prefixes
            for i in range(1, n + 1)
            for j in range(1, cols + 1)
        ]
        return cls(names)

    # --- Aritmética sobre dicts canónicos ---

    def _from_int(self, k: int) -> Terms:
        return {self._constant: k} if k else {}

    def _add(self, x: Terms, y: Terms) -> Terms:
        result = dict(x)
        for exps, coeff in y.items():
            total = result.get(exps, 0) + coeff
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return result

    def _neg(self, x: Terms) -> Terms:
        return {exps: -coeff for exps, coeff in x.items()}

    def _mul(self, x: Terms, y: Terms) -> Terms:
        if not x or not y:
            return {}
        result: Terms = {}
        for e1, c1 in x.items():
            for e2, c2 in y.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                result[exps] = result.get(exps, 0) + c1 * c2
        return {exps: coeff for exps, coeff in result.items() if coeff}

    def _is_zero(self, x: Terms) -> bool:
        return not x

    def _key(self, x: Terms) -> frozenset:
        return frozenset(x.items())

    def _as_int(self, x: Terms) -> int | None:
        if not x:
            return 0
        if len(x) == 1 and self._constant in x:
            return x[self._constant]
        return None

    def _divide(self, x: Terms, y: Terms) -> Terms | None:
        # División por término líder: si y | x, cada paso cancela el término
        # líder del resto; un paso imposible prueba que y no divide a x.
        lead_y = min(y, key=_order_key)
        coeff_y = y[lead_y]
        remainder = dict(x)
        quotient: Terms = {}
        while remainder:
            lead_r = min(remainder, key=_order_key)
            coeff_r = remainder[lead_r]
            if coeff_r % coeff_y or any(a < b for a, b in zip(lead_r, lead_y)):
                return None
            exps = tuple(a - b for a, b in zip(lead_r, lead_y))
            step = {exps: coeff_r // coeff_y}
            quotient[exps] = step[exps]
            remainder = self._add(remainder, self._neg(self._mul(step, y)))
        return quotient

    def _format_monomial(self, exponents: Exponents) -> str:
        factors = []
        for name, e in zip(self.variables, exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def _format(self, x: Terms) -> str:
        if not x:
            return "0"
        parts = []
        for i, (exps, coeff) in enumerate(sorted(x.items(), key=lambda t: _order_key(t[0]))):
            monomial = self._format_monomial(exps)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if i == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def describe(self) -> str:
        return f"Z[{','.join(self.variables)}]"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and other.variables == self.variables

    def __hash__(self) -> int:
        return hash(("Z[...]", self.variables))

    # --- Construcción ---

    def variable(self, name: str) -> RingValue:
        """La indeterminada `name` como polinomio"""
        if name not in self._index:
            raise RingSpecError(f"Indeterminada desconocida: {name}")
        exps = [0] * len(self.variables)
        exps[self._index[name]] = 1
        return RingValue(self, {tuple(exps): 1})

    @property
    def gens(self) -> tuple[RingValue, ...]:
        return tuple(self.variable(name) for name in self.variables)

    def canonicalize(self, terms: Iterable[tuple[Exponents, int]]) -> RingValue:
        """Forma canónica de una lista de términos (suma repetidos, quita ceros)"""
        result: Terms = {}
        for exps, coeff in terms:
            if len(exps) != len(self.variables):
                raise RingSpecError(
                    f"Vector de exponentes de largo {len(exps)}, se esperaban {len(self.variables)}"
                )
            result[tuple(exps)] = result.get(tuple(exps), 0) + coeff
        return RingValue(self, {e: c for e, c in result.items() if c})

    # --- Inspección ---

    def terms(self, value: RingValue) -> list[tuple[Exponents, int]]:
        """Términos en el orden canónico de impresión"""
        self._check(value)
        return sorted(value.value.items(), key=lambda t: _order_key(t[0]))

    def coefficient(self, value: RingValue, exponents: Mapping[str, int]) -> int:
        self._check(value)
        exps = [0] * len(self.variables)
        for name, e in exponents.items():
            exps[self._index[name]] = e
        return value.value.get(tuple(exps), 0)

    def total_degree(self, value: RingValue) -> int:
        """Grado total; -1 para el polinomio cero"""
        self._check(value)
        return max((sum(exps) for exps in value.value), default=-1)

    def evaluate(self, value: RingValue, assignment: Mapping[str, int]) -> int:
        """
        Sustituye enteros en todas las indeterminadas.

        Raises:
            RingSpecError: Si falta el valor de alguna indeterminada usada
        """
        self._check(value)
        total = 0
        for exps, coeff in value.value.items():
            term = coeff
            for name, e in zip(self.variables, exps):
                if e:
                    if name not in assignment:
                        raise RingSpecError(f"Falta el valor de la indeterminada '{name}'")
                    term *= assignment[name] ** e
            total += term
        return total
