# Configuration Classes

import os
from typing import Any, Callable, Optional


def _to_bool(value: str) -> bool:
    return str(value).strip().lower() in ('1', 'true', 'yes', 'on')


def get_env_value(env_var: str, default: Any = None, cast: Optional[Callable[[str], Any]] = None) -> Any:
    """
    Helper per ottenere un valore dalla variabile ambiente

    Args:
        env_var: Nome variabile ambiente
        default: Valore di default se la variabile non e' impostata
        cast: Conversione opzionale del valore letto (int, bool, ...)

    Returns:
        Valore della variabile (convertito) o default
    """
    env_value = os.getenv(env_var)
    if env_value is None or env_value == '':
        return default

    if cast is bool:
        return _to_bool(env_value)
    if cast is not None:
        return cast(env_value)
    return env_value


class Config:
    """Configurazione base."""

    # Intervalli supportati per d
    MIN_D = 2
    MAX_D = get_env_value('PVC_MAX_D', 8, int)
    GENERAL_MIN_D = 3
    SMALL_KERNEL_D = (4, 5)

    # Oracoli
    MIN_PVC_MAX_VERTICES = get_env_value('PVC_MIN_PVC_MAX_VERTICES', 22, int)

    # Verifica batch
    VERIFY_WORKERS = get_env_value('PVC_VERIFY_WORKERS', 1, int)

    # Controlli interni (audit, bound, asserzioni sui claim)
    CHECK_INVARIANTS = get_env_value('PVC_CHECK_INVARIANTS', True, bool)

    # Logging
    LOG_LEVEL = get_env_value('LOG_LEVEL', 'INFO')
    LOG_TO_STDOUT = get_env_value('LOG_TO_STDOUT', False, bool)
    LOG_TO_FILE = get_env_value('LOG_TO_FILE', False, bool)
    LOG_FILE = get_env_value('LOG_FILE', 'logs/pvc-kernel.log')


class DevelopmentConfig(Config):
    """Configurazione per ambiente di sviluppo."""

    DEBUG = True
    LOG_LEVEL = get_env_value('LOG_LEVEL', 'DEBUG')


class TestingConfig(Config):
    """Configurazione per testing."""

    TESTING = True
    VERIFY_WORKERS = 1
    CHECK_INVARIANTS = True
    LOG_TO_FILE = False


class ProductionConfig(Config):
    """Configurazione per produzione (run batch lunghi)."""

    DEBUG = False
    LOG_LEVEL = get_env_value('LOG_LEVEL', 'WARNING')
    LOG_TO_STDOUT = get_env_value('LOG_TO_STDOUT', True, bool)
    VERIFY_WORKERS = get_env_value('PVC_VERIFY_WORKERS', os.cpu_count() or 1, int)


# Mapping delle configurazioni
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}


def get_config(config_name=None):
    """
    Ottieni configurazione per environment

    Args:
        config_name: Nome configurazione (development, production, testing)

    Returns:
        Classe configurazione
    """
    if config_name is None:
        config_name = os.getenv('PVC_ENV', 'development')

    return config.get(config_name, config['default'])
