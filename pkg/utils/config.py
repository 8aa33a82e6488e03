import os
from dotenv import load_dotenv

load_dotenv()

DEFAULT_API_KEY = "demo-key"


def _get_int(name, default):
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        return default


def _get_flag(name, default=False):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def api_key():
    """Get the API key the HTTP layer expects."""
    return os.getenv("CARPET_API_KEY", DEFAULT_API_KEY)


def max_generators():
    """Get the generator count above which a slowness warning is logged."""
    return _get_int("CARPET_MAX_GENERATORS", 20)


def interval_start_precision():
    """Get the starting precision (bits) of certified interval arithmetic."""
    return _get_int("CARPET_INTERVAL_START_PRECISION", 53)


def interval_max_precision():
    """Get the precision (bits) at which interval refinement gives up."""
    return _get_int("CARPET_INTERVAL_MAX_PRECISION", 1024)


def planarity_crosscheck():
    """Whether the planarity decision is cross-checked against the oracle."""
    return _get_flag("CARPET_PLANARITY_CROSSCHECK")


def oracle_max_vertices():
    """Get the vertex bound of the rotation-system oracle."""
    return _get_int("CARPET_ORACLE_MAX_VERTICES", 8)


def cohomology_max_dimension():
    """Get the largest complex dimension for which cohomology is computed."""
    return _get_int("CARPET_COHOMOLOGY_MAX_DIMENSION", 2)
