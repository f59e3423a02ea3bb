"""Small harness for exact-equality checks that stop at the first mismatch."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from mahonian.polyring import Poly

__all__ = ["CheckReport", "run_check"]


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    checked: int = 0
    failure: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


class _Failure(Exception):
    def __init__(self, info: dict):
        super().__init__(info)
        self.info = info


def run_check(name: str, body: Callable[[Callable], None]) -> CheckReport:
    """Run ``body(expect)``; ``expect(lhs, rhs, **where)`` compares two Poly
    (or int) values and aborts with a counterexample on the first mismatch."""
    count = 0

    def expect(lhs, rhs, **where):
        nonlocal count
        count += 1
        if isinstance(lhs, (bool, str)) or isinstance(rhs, (bool, str)):
            if lhs != rhs:
                raise _Failure({"lhs": lhs, "rhs": rhs, **where})
            return
        lhs, rhs = Poly._coerce(lhs), Poly._coerce(rhs)
        if lhs != rhs:
            raise _Failure({"lhs": lhs.to_text(), "rhs": rhs.to_text(), **where})

    try:
        body(expect)
    except _Failure as exc:
        return CheckReport(name, False, count, exc.info)
    return CheckReport(name, True, count)
