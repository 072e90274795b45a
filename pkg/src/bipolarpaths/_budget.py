from __future__ import annotations

import os

from .errors import BudgetExceeded

ENV_VAR = "BIPOLAR_BUDGET"


def check_budget(size: int, default: int, what: str) -> None:
    """Raise :class:`BudgetExceeded` when ``size`` exceeds the allowed cap.

    ``BIPOLAR_BUDGET`` replaces ``default`` when set.
    """
    cap = default
    raw = os.environ.get(ENV_VAR)
    if raw:
        cap = int(raw)
    if size > cap:
        raise BudgetExceeded(size, f"{what} is capped at {cap} (set {ENV_VAR} to raise it)")
