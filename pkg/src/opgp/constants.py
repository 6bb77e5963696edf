# --- Log and Debug ---
# Short aliases for module names to keep CLI/env concise
LOG_ALIAS_MAP = {
    "alg": "opgp.orealg",
    "parse": "opgp.orealg.parser",
    "gb": "opgp.groebner",
    "bb": "opgp.groebner.basis",
    "syz": "opgp.groebner.syzygy",
    "par": "opgp.parametrize",
    "kc": "opgp.kernelcalc",
    "gpr": "opgp.gpr",
    "run": "opgp.pipeline.runner",
    "chk": "opgp.pipeline.checks",
    "conf": "opgp.config",
    "svg": "opgp.render",
    "cli": "opgp.cli",
}

# Top-level modules within opgp for auto-prefixing
KNOWN_TOP_MODULES = {
    "orealg",
    "groebner",
    "parametrize",
    "kernelcalc",
    "gpr",
    "pipeline",
    "render",
    "datacls",
    "utils",
    "config",
    "cli",
}

LOG_LEVELS_ENV = "OPGP_LOG_LEVELS"

# --- Algebra ---
# Name given to the partial derivative of a base variable, e.g. x -> Dx
PARTIAL_PREFIX = "D"
# Buchberger aborts after this many S-vector reductions
MAX_PAIR_REDUCTIONS = 10**6

# --- Kernels and regression ---
DEFAULT_JITTER = 1e-5
FD_STEP = 1e-4
FD_TOLERANCE = 1e-5
GRAM_SYMMETRY_TOLERANCE = 1e-12
# Group suffixes of the paired kernel variables, x -> x1 / x2
GROUP_SUFFIXES = ("1", "2")

# --- Artifacts ---
CSV_SIGNIFICANT_DIGITS = 12
CHECK_REPORT_FILENAME = "check_report.json"
MATRIX_SUFFIX = ".txt"
KERNEL_SUFFIX = ".json"
MODEL_SUFFIX = ".json"
GRID_SUFFIX = ".csv"
SVG_SUFFIX = ".svg"
DEFAULT_OUTPUT_DIR = "output"
SCENARIO_SUFFIXES = (".yml", ".yaml")

# --- Quiver rendering ---
SVG_CANVAS = 480
SVG_MARGIN = 32
SVG_DEFAULT_SCALE = 0.1
SVG_PROJECTION_AXES = ("x", "y", "z")

# --- Exit codes ---
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
