"""
Configurações Gerais da Aplicação
"""
from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    """Configurações da aplicação carregadas do ambiente e do .env"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent
    LOGS_DIR: Path = BASE_DIR / "logs"

    # Logging
    LOG_LEVEL: str = Field("INFO")
    LOG_TO_FILE: bool = Field(False)

    # Avaliação das séries (defaults de EvalOptions)
    HORN_EVAL_MAX_ORDER: int = Field(60)
    HORN_EVAL_ABS_TOL: float = Field(1e-12)
    HORN_EVAL_REL_TOL: float = Field(1e-12)
    HORN_EVAL_MIN_SHELLS: int = Field(8)
    # Razão geométrica máxima aceita por converges_at
    HORN_CONVERGENCE_MAX_RATIO: float = Field(0.98)

    # Funções especiais
    POLE_TOLERANCE: float = Field(1e-12)
    POCHHAMMER_DIRECT_LIMIT: int = Field(64)

    # Verificação (oráculos)
    VERIFY_ORACLE_REL_TOL: float = Field(1e-9)
    VERIFY_FD_ABS_TOL: float = Field(1e-6)
    VERIFY_FD_STEP: float = Field(1e-4)
    # Erros abaixo de VERIFY_ORDER_NOISE·max(1,|F|)/h são arredondamento
    VERIFY_ORDER_NOISE: float = Field(1e-12)


# Singleton da configuração
settings = Settings()


def get_settings() -> Settings:
    """Retorna a instância singleton de configurações"""
    return settings


def validate_minimum_config() -> tuple[bool, list[str]]:
    """
    Valida se a configuração carregada é consistente

    Returns:
        Tupla (is_valid, problems)
    """
    problems = []

    if settings.HORN_EVAL_MIN_SHELLS < 1:
        problems.append("HORN_EVAL_MIN_SHELLS deve ser >= 1")

    if settings.HORN_EVAL_MAX_ORDER < settings.HORN_EVAL_MIN_SHELLS:
        problems.append(
            f"HORN_EVAL_MAX_ORDER ({settings.HORN_EVAL_MAX_ORDER}) menor que "
            f"HORN_EVAL_MIN_SHELLS ({settings.HORN_EVAL_MIN_SHELLS})"
        )

    for name in ("HORN_EVAL_ABS_TOL", "HORN_EVAL_REL_TOL", "POLE_TOLERANCE", "VERIFY_FD_STEP"):
        if getattr(settings, name) <= 0:
            problems.append(f"{name} deve ser positivo")

    if not 0.0 < settings.HORN_CONVERGENCE_MAX_RATIO < 1.0:
        problems.append("HORN_CONVERGENCE_MAX_RATIO deve estar em (0, 1)")

    if settings.VERIFY_ORDER_NOISE < 0:
        problems.append("VERIFY_ORDER_NOISE não pode ser negativo")

    if settings.POCHHAMMER_DIRECT_LIMIT < 0:
        problems.append("POCHHAMMER_DIRECT_LIMIT não pode ser negativo")

    return (len(problems) == 0, problems)
