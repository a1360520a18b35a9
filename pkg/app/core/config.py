"""
Environment-driven configuration (12-Factor compliant).
Reads from environment variables (and an optional .env file) with safe defaults.
"""
import os

from dotenv import load_dotenv

load_dotenv()

# Exhaustive enumeration caps
MAX_POSET_ORDER: int = int(os.getenv("MAX_POSET_ORDER", "7"))
MAX_GRAPH_ORDER: int = int(os.getenv("MAX_GRAPH_ORDER", "6"))
POSET_SHARD_PREFIX: int = int(os.getenv("POSET_SHARD_PREFIX", "3"))

# Exact NP-hard invariants (clique, independence, domination)
EXACT_SEARCH_CAP: int = int(os.getenv("EXACT_SEARCH_CAP", "64"))

# Ring and cone families
# 2^20 vertices is the largest idempotent graph supported
IDEMPOTENT_WIDTH_LIMIT: int = 20
IDEMPOTENT_WIDTH_CAP: int = min(int(os.getenv("IDEMPOTENT_WIDTH_CAP", "12")), IDEMPOTENT_WIDTH_LIMIT)
CONE_WINDOW_CAP: int = int(os.getenv("CONE_WINDOW_CAP", "30"))
CONE_RAW_SUBSET_CAP: int = int(os.getenv("CONE_RAW_SUBSET_CAP", "5000"))
MAX_FAMILY_VERTICES: int = int(os.getenv("MAX_FAMILY_VERTICES", "20000"))

# Parallel verification
RAMSEY_WORKERS: int = int(os.getenv("RAMSEY_WORKERS", str(os.cpu_count() or 1)))

# Witness fuzzing
FUZZ_SAMPLES: int = int(os.getenv("FUZZ_SAMPLES", "10000"))
FUZZ_MAX_SIZE: int = int(os.getenv("FUZZ_MAX_SIZE", "40"))
FUZZ_SEED: int = int(os.getenv("FUZZ_SEED", "0"))

# Diagnostics
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

# Server configuration
HOST: str = os.getenv("HOST", "0.0.0.0")
PORT: int = int(os.getenv("PORT", "8000"))
