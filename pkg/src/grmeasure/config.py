"""Default caps, budgets and seeds.

``GRMEASURE_BUDGET`` overrides the default enumeration budget,
``GRMEASURE_CAP`` the default exhaustive-search cap.
"""

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    return int(float(raw))


DEFAULT_CAP = _env_int("GRMEASURE_CAP", 10**6)
DEFAULT_BUDGET = _env_int("GRMEASURE_BUDGET", 10**7)
DEFAULT_SEED = 0
RANDOM_TRIALS = 48
