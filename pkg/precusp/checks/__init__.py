from precusp.checks.executor import CheckExecutor
from precusp.checks.invariants import REGISTRY

__all__ = ["CheckExecutor", "REGISTRY"]
