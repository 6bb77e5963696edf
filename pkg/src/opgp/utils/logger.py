# logger.py
import logging
import os
import sys
from typing import Dict, Optional

try:
    import colorlog
except ImportError:
    colorlog = None

from .. import constants

_PLAIN_FORMAT = '[%(levelname).4s] %(name)s: %(message)s'
_COLOR_FORMAT = '%(log_color)s[%(levelname).4s]%(reset)s %(cyan)s%(name)s%(reset)s: %(message)s'
_FILE_FORMAT = '%(asctime)s [%(levelname).4s] %(name)s: %(message)s'


def parse_level_spec(spec: Optional[str]) -> Dict[str, str]:
    """
    Parse "gb=DEBUG,kc=INFO" into {"gb": "DEBUG", "kc": "INFO"}.
    Malformed pairs are skipped.
    """
    levels: Dict[str, str] = {}
    if not spec:
        return levels
    for pair in spec.split(','):
        pair = pair.strip()
        if '=' not in pair:
            continue
        name, lvl = pair.split('=', 1)
        if name.strip():
            levels[name.strip()] = lvl.strip().upper()
    return levels


def _console_formatter() -> logging.Formatter:
    # NO_COLOR: https://no-color.org/
    if colorlog is None or os.environ.get("NO_COLOR") or not sys.stderr.isatty():
        return logging.Formatter(_PLAIN_FORMAT)
    return colorlog.ColoredFormatter(
        _COLOR_FORMAT,
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        },
        reset=True,
        style='%',
    )


def setup_logger(debug: bool = False, module_levels: Optional[Dict[str, str]] = None, log_file: Optional[str] = None):
    """
    Configures the root logger with colored console output.

    Args:
        debug: Enable debug logging level
        module_levels: Per-module log levels, keys may be aliases from constants.LOG_ALIAS_MAP
        log_file: Optional path of a log file written alongside the console
    """
    root = logging.getLogger()
    root.setLevel(logging.DEBUG if debug else logging.INFO)

    # Called again (e.g. a subcommand turning on --debug): only adjust levels
    if root.handlers:
        _apply_module_levels(module_levels)
        return

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.NOTSET)
    console.setFormatter(_console_formatter())
    root.addHandler(console)

    if log_file:
        try:
            handler = logging.FileHandler(log_file, mode='w', encoding='utf-8')
            handler.setFormatter(logging.Formatter(_FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
            root.addHandler(handler)
            logging.info(f"Logging to file: {log_file}")
        except OSError as e:
            logging.error(f"Failed to create log file handler for '{log_file}': {e}")

    _apply_module_levels(module_levels)


def _apply_module_levels(module_levels: Optional[Dict[str, str]]):
    """Apply per-module levels from the mapping, or from OPGP_LOG_LEVELS when none is given."""
    if module_levels is None:
        module_levels = parse_level_spec(os.environ.get(constants.LOG_LEVELS_ENV))

    for name, lvl_str in module_levels.items():
        lvl = getattr(logging, lvl_str.upper(), None)
        if not isinstance(lvl, int):
            continue
        logging.getLogger(normalize_module_name(name)).setLevel(lvl)


def normalize_module_name(name: str) -> str:
    """Expand aliases, strip a trailing '.*' and prefix known top modules with 'opgp.'."""
    if name in constants.LOG_ALIAS_MAP:
        return constants.LOG_ALIAS_MAP[name]
    if name.endswith('.*'):
        name = name[:-2]
    if not name.startswith('opgp.') and name.split('.', 1)[0] in constants.KNOWN_TOP_MODULES:
        name = f'opgp.{name}'
    return name
