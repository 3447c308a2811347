"""
Modelos Pydantic para reportes, resúmenes y comandos de condensation-kit.
"""
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

TheoremTag = Literal["chio", "chio-gen", "supergen", "mtt"]


class CondensationReport(BaseModel):
    """
    Resultado de verificar una identidad en un caso concreto.

    Los lados se guardan en su forma textual canónica; como la impresión
    canónica es inyectiva, `verdict` coincide con la igualdad exacta.
    """
    theorem: TheoremTag = Field(description="Identidad verificada")
    n: int = Field(description="Tamaño de la matriz A (o número de vértices)", ge=1)
    ring: str = Field(description="Anillo de los valores (ej: 'Z', 'Z/7', 'Z[x1_1,...]')")
    f: str | None = Field(default=None, description="Mapa f en sintaxis '3,1,3' (si aplica)")
    case: int = Field(default=0, description="Índice del caso dentro de la corrida", ge=0)
    lhs: str = Field(description="Lado izquierdo")
    rhs: str = Field(description="Lado derecho")
    verdict: bool = Field(description="True si y solo si lhs = rhs exactamente")

    class Config:
        """Configuración del modelo"""
        frozen = True
        json_schema_extra = {
            "example": {
                "theorem": "chio-gen",
                "n": 3,
                "ring": "Z[x1_1,...,x3_3]",
                "f": "3,1,3",
                "case": 0,
                "lhs": "x1_3*...",
                "rhs": "x1_3*...",
                "verdict": True
            }
        }

    @model_validator(mode="after")
    def check_verdict(self):
        if self.verdict != (self.lhs == self.rhs):
            raise ValueError("verdict debe ser True si y solo si lhs == rhs")
        return self

    def to_line(self) -> str:
        """Línea de reporte: '<teorema> n=<n> f=<imágenes o -> ok|FAIL'"""
        status = "ok" if self.verdict else "FAIL"
        return f"{self.theorem} n={self.n} f={self.f or '-'} {status}"


class VerificationSummary(BaseModel):
    """
    Resumen de una corrida de `verify`.
    """
    theorem: TheoremTag = Field(description="Identidad verificada")
    n: int = Field(description="Tamaño pedido")
    mode: Literal["symbolic", "random"] = Field(description="Modo de verificación")
    ring: str = Field(description="Anillo usado")
    seed: int | None = Field(default=None, description="Semilla (solo modo random)")
    total_cases: int = Field(default=0, description="Casos verificados")
    passed: int = Field(default=0, description="Casos con veredicto verdadero")
    failed: int = Field(default=0, description="Casos fallidos")
    reports: list[CondensationReport] = Field(default_factory=list, description="Reportes por caso")
    total_time_seconds: float = Field(default=0.0, description="Tiempo total de la corrida")

    @property
    def all_verified(self) -> bool:
        return self.failed == 0


class FuzzCaseResult(BaseModel):
    """Resultado de un caso de fuzzing diferencial"""
    case: int = Field(description="Índice del caso", ge=0)
    ring: str = Field(description="Anillo sorteado")
    n: int = Field(description="Tamaño sorteado")
    check: Literal["det", "mtt"] = Field(description="Comparación realizada")
    agree: bool = Field(description="True si ambos caminos coinciden")
    detail: str | None = Field(default=None, description="Valores en desacuerdo o error")

    def to_line(self) -> str:
        status = "ok" if self.agree else "FAIL"
        return f"fuzz case={self.case} check={self.check} ring={self.ring} n={self.n} {status}"


class FuzzSummary(BaseModel):
    """Resumen de una corrida de fuzzing"""
    seed: int = Field(description="Semilla de la corrida")
    total_cases: int = Field(default=0, description="Casos generados")
    failures: int = Field(default=0, description="Comparaciones en desacuerdo")
    results: list[FuzzCaseResult] = Field(default_factory=list, description="Resultados por caso")
    total_time_seconds: float = Field(default=0.0, description="Tiempo total")


class Command(BaseModel):
    """Invocación de la CLI ya parseada"""
    subcommand: str = Field(description="Subcomando (det, condense, verify, arborescences, fuzz)")
    flags: dict[str, Any] = Field(default_factory=dict, description="Flags parseados")
    inputs: list[str] = Field(default_factory=list, description="Rutas de archivos de entrada")
    ring: str | None = Field(default=None, description="Especificación de anillo (--ring)")
    seed: int | None = Field(default=None, description="Semilla (--seed)")
