import logging
import os
import sys
from pathlib import Path

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)


def env_search_dirs() -> list[Path]:
    """Directories whose ancestors may hold a .env: cwd, the running script's directory, this package."""
    dirs = [Path.cwd()]
    main_file = getattr(sys.modules.get("__main__"), "__file__", None)
    if main_file:
        dirs.append(Path(main_file).resolve().parent)
    dirs.append(Path(__file__).resolve().parent)
    return dirs


def find_env_file(env_search_dirs: list[Path]) -> str | None:
    """Find the first .env file in the given list of paths and their parents."""
    env_file = find_dotenv(usecwd=True)
    if env_file:
        return env_file
    for search_dir in env_search_dirs:
        for parent_dir in (search_dir, *search_dir.parents):
            candidate = parent_dir / ".env"
            logger.debug("Looking for '.env' file at '%s'", parent_dir)
            if candidate.is_file():
                return str(candidate)
    return None


def get_variable_env(name: str, allow_empty=True, default=None) -> str | None:
    """Retrieve environment variable with optional validation and default value."""
    val = os.environ.get(name, default)
    if not allow_empty and ((val is None) or (val == "")):
        raise ValueError(f"Environment variable {name} is not set")
    return val


def get_int_env(name: str, default: int) -> int:
    """Integer environment variable; empty or unset gives the default."""
    val = get_variable_env(name)
    if val is None or val == "":
        return default
    try:
        return int(val)
    except ValueError as e:
        raise ValueError(f"Environment variable {name}={val!r} is not an integer") from e


def load_env_variables() -> str | None:
    """Load the nearest .env file into os.environ; a missing file is not an error."""
    env_file = find_env_file(env_search_dirs())
    if env_file:
        logger.debug("Using .env file at '%s'", env_file)
        load_dotenv(env_file)
    else:
        logger.debug("No '.env' file found, using defaults")
    return env_file
