"""Resource caps for Groebner computations."""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    degree_cap: int = 24
    pair_cap: int = 10**6


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("oideal_limits", default=Limits())


def get_limits() -> Limits:
    return _current.get()


def set_limits(limits: Limits) -> None:
    _current.set(limits)


@contextlib.contextmanager
def limits_scope(**kwargs):
    """Temporarily override caps, e.g. ``with limits_scope(degree_cap=10): ...``."""
    token = _current.set(Limits(**{**get_limits().__dict__, **kwargs}))
    try:
        yield get_limits()
    finally:
        _current.reset(token)
