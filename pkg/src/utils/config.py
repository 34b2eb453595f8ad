import os
import logging
from typing import Any, Dict, Optional

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# Default log level (can be overridden by .env or the environment).
# Unset solver limits and worker counts stay None; the solver fills in its own defaults.
DEFAULT_LOG_LEVEL = "INFO"


def configure_logging(level: str = DEFAULT_LOG_LEVEL) -> None:
    """Configure basic logging on stderr with the project's format."""
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        numeric = logging.INFO
    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)


def _positive(name: str, raw: Optional[str], cast) -> Optional[Any]:
    if raw is None or raw == "":
        return None
    try:
        value = cast(raw)
    except ValueError:
        logging.warning(f"{name}={raw!r} is not a number; ignoring it")
        return None
    if value <= 0:
        logging.warning(f"{name}={raw!r} must be positive; ignoring it")
        return None
    return value


def load_config(dotenv_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Loads solver configuration from an optional .env file and the environment.

    Recognized variables: PACKING_NODE_LIMIT, PACKING_TIME_LIMIT,
    PACKING_WORKERS, PACKING_LOG_LEVEL. None of them is required.
    """
    if dotenv_path is None:
        # This assumes config.py is in src/utils and .env is in the root project directory
        project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
        dotenv_path = os.path.join(project_root, '.env')

    if os.path.exists(dotenv_path):
        load_dotenv(dotenv_path=dotenv_path, override=False)
        logging.debug(f"Loaded configuration from: {dotenv_path}")
    else:
        logging.debug(f"No .env file at {dotenv_path}; using environment and defaults")

    config: Dict[str, Any] = {
        "node_limit": _positive("PACKING_NODE_LIMIT", os.getenv("PACKING_NODE_LIMIT"), int),
        "time_limit": _positive("PACKING_TIME_LIMIT", os.getenv("PACKING_TIME_LIMIT"), float),
        "workers": _positive("PACKING_WORKERS", os.getenv("PACKING_WORKERS"), int),
        "log_level": (os.getenv("PACKING_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper(),
    }
    logging.debug(f"Solver configuration: {config}")
    return config
