import os
from dataclasses import dataclass, replace

DEFAULT_STATE_BUDGET = 20_000_000
DEFAULT_EXACT_BOUND = 24
DEFAULT_DIAMETER_LIMIT = 100_000


@dataclass(frozen=True)
class Settings:
    """
    Tuning values shared by the oracle, the exact solvers and the generators.
    """
    state_budget: int = DEFAULT_STATE_BUDGET
    exact_chromatic_bound: int = DEFAULT_EXACT_BOUND
    exact_diameter_limit: int = DEFAULT_DIAMETER_LIMIT
    generation_retries: int = 50
    seed: int = 0

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Reads RECOLOUREUR_* variables, falling back to the defaults.
        """
        def _int(name: str, default: int) -> int:
            raw = os.environ.get(name)
            return int(raw) if raw not in (None, "") else default

        return cls(
            state_budget=_int("RECOLOUREUR_STATE_BUDGET", DEFAULT_STATE_BUDGET),
            exact_chromatic_bound=_int("RECOLOUREUR_EXACT_BOUND", DEFAULT_EXACT_BOUND),
            exact_diameter_limit=_int("RECOLOUREUR_DIAMETER_LIMIT", DEFAULT_DIAMETER_LIMIT),
            seed=_int("RECOLOUREUR_SEED", 0),
        )

    def with_overrides(self, **changes) -> "Settings":
        # None means "flag not given"
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
