"""
Configuración de condensation-kit.

Carga desde variables de entorno (o un archivo .env) las cotas de los
oráculos exhaustivos, la semilla por defecto y el nivel de logging.
"""
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# 10! términos de Leibniz y 10^9 mapas n-fijos: más allá no termina en tiempo razonable
HARD_MAX_N = 10


class Settings(BaseSettings):
    """
    Configuración de la aplicación cargada desde variables de entorno.
    """
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Cotas de los oráculos
    CONDENSATION_KIT_MAX_N: int = Field(
        default=8,
        description="Cota de n para Leibniz, enumeración de mapas n-potentes y sumas por fuerza bruta"
    )

    # Configuración de logging
    LOG_LEVEL: str = Field(
        default="INFO",
        description="Nivel de logging (DEBUG, INFO, WARNING, ERROR)"
    )

    # Configuración de las corridas aleatorias
    DEFAULT_SEED: int = Field(
        default=0,
        description="Semilla de 64 bits usada cuando no se pasa --seed"
    )
    DEFAULT_TRIALS: int = Field(
        default=100,
        description="Número de casos aleatorios de verify cuando no se pasa --trials"
    )
    DEFAULT_FUZZ_CASES: int = Field(
        default=1000,
        description="Número de casos de fuzz cuando no se pasa --cases"
    )
    WORKERS: int = Field(
        default=1,
        description="Procesos para repartir casos independientes de verify/fuzz"
    )

    @field_validator('CONDENSATION_KIT_MAX_N')
    @classmethod
    def validate_max_n(cls, v):
        """Valida que la cota de n sea utilizable"""
        if v < 1:
            raise ValueError("CONDENSATION_KIT_MAX_N debe ser al menos 1")
        if v > HARD_MAX_N:
            raise ValueError(f"CONDENSATION_KIT_MAX_N no puede superar {HARD_MAX_N}")
        return v

    @field_validator('LOG_LEVEL')
    @classmethod
    def validate_log_level(cls, v):
        """Valida que el nivel de log sea válido"""
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        if v.upper() not in valid_levels:
            raise ValueError(f"LOG_LEVEL debe ser uno de: {valid_levels}")
        return v.upper()

    @field_validator('DEFAULT_SEED')
    @classmethod
    def validate_seed(cls, v):
        """La semilla debe caber en 64 bits sin signo"""
        if not 0 <= v < 2 ** 64:
            raise ValueError("DEFAULT_SEED debe estar en [0, 2^64)")
        return v

    @field_validator('DEFAULT_TRIALS', 'DEFAULT_FUZZ_CASES')
    @classmethod
    def validate_counts(cls, v):
        if v < 0:
            raise ValueError("Los conteos de casos no pueden ser negativos")
        return v

    @field_validator('WORKERS')
    @classmethod
    def validate_workers(cls, v):
        if v < 1:
            raise ValueError("WORKERS debe ser al menos 1")
        return v


# Instancia global de configuración
settings = Settings()
