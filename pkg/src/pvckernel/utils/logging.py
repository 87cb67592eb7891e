import logging
import os
import sys
from logging.handlers import RotatingFileHandler

PACKAGE_LOGGER = __package__.rpartition('.')[0]


def setup_logging(config):
    """
    Configura il logging del pacchetto.

    Args:
        config: Classe di configurazione (LOG_LEVEL, LOG_TO_STDOUT, LOG_TO_FILE, LOG_FILE)

    Returns:
        Logger del pacchetto
    """
    log_level = getattr(logging, str(config.LOG_LEVEL).upper(), logging.INFO)

    # Formato dei log
    formatter = logging.Formatter(
        '[%(asctime)s] %(levelname)s in %(module)s: %(message)s'
    )

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(log_level)

    # Rimuovi handler esistenti
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    if config.LOG_TO_STDOUT:
        stream_handler = logging.StreamHandler(sys.stdout)
        stream_handler.setLevel(log_level)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)

    if config.LOG_TO_FILE:
        log_dir = os.path.dirname(config.LOG_FILE)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = RotatingFileHandler(
            config.LOG_FILE,
            maxBytes=10240000,  # 10MB
            backupCount=10
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    # networkx non deve inondare i log di debug
    logging.getLogger('networkx').setLevel(logging.WARNING)
    return logger


def log_run_details(logger, stats):
    """
    Riga di riepilogo di una kernelizzazione.

    Args:
        logger: Logger di destinazione
        stats: KernelStats
    """
    logger.info(
        f'{stats.method} d={stats.d} k={stats.k}: '
        f'n {stats.n_in}->{stats.n_out}, m {stats.m_in}->{stats.m_out}, '
        f'decided={stats.decided}, bound={stats.bound}, bound_satisfied={stats.bound_satisfied}'
    )
