from .common import CheckContext, XMode
from .registry import (
    BY_ID,
    CATALOG,
    Check,
    RunSpec,
    explore_conjecture,
    resolve,
    run_check,
    run_congruence,
    run_identity,
    select,
)
from .result import CheckResult, Status

__all__ = [
    "BY_ID", "CATALOG", "Check", "CheckContext", "CheckResult", "RunSpec", "Status",
    "XMode", "explore_conjecture", "resolve", "run_check", "run_congruence",
    "run_identity", "select",
]
