"""Switch for the expensive per-step invariant assertions used by the test suite."""

import os

from .errors import InvariantError

enabled = os.environ.get("FASTGB_CHECKS", "") not in ("", "0")


def enable(flag: bool = True):
    global enabled
    enabled = flag


def require(cond, message):
    if not cond:
        raise InvariantError(message)
