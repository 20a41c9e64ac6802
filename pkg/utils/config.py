"""
Configuration management using environment variables with sensible defaults.
"""
import os
from pathlib import Path

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent
DATA_PATH = os.getenv("DATA_PATH", str(BASE_DIR / "data"))
OUTPUT_PATH = os.getenv("OUTPUT_PATH", str(BASE_DIR / "output"))

# Shipped data
FIXTURES_PATH = os.path.join(DATA_PATH, os.getenv("FIXTURES_DIR", "fixtures"))
JOBS_PATH = os.path.join(DATA_PATH, os.getenv("JOBS_DIR", "jobs"))
TABLE_MANIFEST = os.path.join(DATA_PATH, os.getenv("TABLE_MANIFEST", "table_manifest.json"))
FACTORIZATIONS_FILE = os.path.join(DATA_PATH, os.getenv("FACTORIZATIONS_FILE", "factorizations.json"))

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_JSON = os.getenv("LOG_JSON", "false").lower() == "true"
LOG_FILE = os.getenv("LOG_FILE", "")

# Distance computation budgets
DISTANCE_BUDGET_OPS = int(os.getenv("DISTANCE_BUDGET_OPS", str(50_000_000)))
DISTANCE_BUDGET_SECS = float(os.getenv("DISTANCE_BUDGET_SECS", "60"))
EXHAUSTIVE_BUDGET = int(os.getenv("EXHAUSTIVE_BUDGET", str(2 ** 26)))
CHUNK_CODEWORDS = int(os.getenv("CHUNK_CODEWORDS", str(2 ** 15)))
# Chunks admitted per dispatch round; fixed so work never depends on MAX_WORKERS
ROUND_CHUNKS = int(os.getenv("ROUND_CHUNKS", "16"))

# --long-run replaces both distance budgets
LONG_RUN_BUDGET_OPS = int(os.getenv("LONG_RUN_BUDGET_OPS", str(10 ** 13)))
LONG_RUN_BUDGET_SECS = float(os.getenv("LONG_RUN_BUDGET_SECS", str(3 * 24 * 3600)))

# Divisor search
DIVISOR_SEARCH_BUDGET = int(os.getenv("DIVISOR_SEARCH_BUDGET", str(10 ** 8)))
SEARCH_MAX_CODES = int(os.getenv("SEARCH_MAX_CODES", "200"))

# Performance
MAX_WORKERS = int(os.getenv("MAX_WORKERS", "4"))
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# Largest field for which dense addition/multiplication tables are built
MAX_TABLE_ORDER = int(os.getenv("MAX_TABLE_ORDER", str(2 ** 12)))

# Conway polynomials, ascending coefficients, keyed by (p, m).
CONWAY_MODULI = {
    (2, 1): [1, 1],
    (3, 1): [1, 1],
    (5, 1): [3, 1],
    (7, 1): [4, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (3, 2): [2, 2, 1],
    (3, 3): [1, 2, 0, 1],
    (3, 4): [2, 0, 0, 2, 1],
    (5, 2): [2, 4, 1],
    (7, 2): [3, 6, 1],
}


def ensure_directories():
    """Ensure all required directories exist."""
    directories = [
        OUTPUT_PATH,
        os.path.dirname(LOG_FILE) if LOG_FILE else None,
    ]

    for directory in directories:
        if directory:
            os.makedirs(directory, exist_ok=True)
