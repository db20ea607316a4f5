"""
Sistema de Logging Estruturado
"""
import sys
from typing import Any, Optional
from loguru import logger

from config.settings import settings


class LogManager:
    """Gerenciador centralizado de logs"""

    def __init__(self):
        self.logs_dir = settings.LOGS_DIR
        self._setup_logger()

    def _setup_logger(self):
        """Configura o logger"""
        # Remove handler padrão
        logger.remove()

        # Console em stderr: stdout fica reservado para o JSON da CLI
        # sys.stderr resolvido a cada mensagem
        logger.add(
            lambda message: sys.stderr.write(message),
            format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>",
            level=settings.LOG_LEVEL.upper(),
            colorize=sys.stderr.isatty()
        )

        if settings.LOG_TO_FILE:
            self.logs_dir.mkdir(parents=True, exist_ok=True)
            logger.add(
                self.logs_dir / "horn_{time:YYYY-MM-DD}.log",
                format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}",
                level="DEBUG",
                rotation="00:00",  # Novo arquivo à meia-noite
                retention="30 days",
                compression="zip"
            )

    def set_level(self, level: str):
        """Reconfigura o nível do console (ex.: --verbose da CLI)"""
        settings.LOG_LEVEL = level
        self._setup_logger()

    def log_step_start(self, step: str, detail: Any = None):
        """Log de início de uma operação"""
        msg = f"🟢 Iniciando: {step}"
        if detail:
            msg += f" | {detail}"
        logger.debug(msg)

    def log_step_complete(self, step: str, detail: Any = None):
        """Log de conclusão de uma operação"""
        msg = f"✅ Concluído: {step}"
        if detail:
            msg += f" | {detail}"
        logger.debug(msg)

    def log_step_error(self, step: str, error: Exception):
        """Log de erro em uma operação"""
        logger.error(f"❌ Erro em {step}: {error}")

    def log_validation(self, step: str, is_valid: bool, details: str = ""):
        """Log de validação"""
        if is_valid:
            msg = f"✓ Validação OK [{step}]"
            if details:
                msg += f": {details}"
            logger.debug(msg)
        else:
            msg = f"✗ Validação FALHOU [{step}]"
            if details:
                msg += f": {details}"
            logger.warning(msg)

    def log_evaluation(self, step: str, result: Any):
        """Log do resultado de uma soma truncada"""
        status = "convergiu" if result.converged else "NÃO convergiu"
        msg = (
            f"🔢 {step}: {status} | valor={result.value:.15g} | cauda={result.tail_estimate:.3e} "
            f"| camadas={result.shells_used} | termos={result.terms_used}"
        )
        if result.converged:
            logger.debug(msg)
        else:
            logger.warning(msg)


# Singleton global
_log_manager: Optional[LogManager] = None


def get_logger() -> LogManager:
    """Retorna instância singleton do LogManager"""
    global _log_manager
    if _log_manager is None:
        _log_manager = LogManager()
    return _log_manager


# Atalhos para funções comuns
def log_step_start(step: str, detail: Any = None):
    get_logger().log_step_start(step, detail)


def log_step_complete(step: str, detail: Any = None):
    get_logger().log_step_complete(step, detail)


def log_step_error(step: str, error: Exception):
    get_logger().log_step_error(step, error)


def log_validation(step: str, is_valid: bool, details: str = ""):
    get_logger().log_validation(step, is_valid, details)


def log_evaluation(step: str, result: Any):
    get_logger().log_evaluation(step, result)
