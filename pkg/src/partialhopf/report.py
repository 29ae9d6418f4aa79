"""Verification reports and the deterministic parallel map used by checkers."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

WORKERS_ENV = "PARTIALHOPF_WORKERS"


@dataclass(frozen=True)
class Entry:
    """One checked instance of a law: the basis tuple and both sides."""

    labels: tuple[str, ...]
    lhs: object
    rhs: object
    passed: bool
    law: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check, or an aggregate of several (``parts``).

    A part with ``required=False`` is informational: it is reported but does
    not influence ``passed`` of the aggregate.
    """

    check: str
    entries: tuple[Entry, ...] = ()
    parts: tuple["VerificationReport", ...] = ()
    required: bool = True
    title: str = ""

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries) and all(
            p.passed for p in self.parts if p.required
        )

    @property
    def counterexamples(self) -> tuple[Entry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    @property
    def n_entries(self) -> int:
        return len(self.entries)

    @property
    def n_passed(self) -> int:
        return sum(e.passed for e in self.entries)

    def part(self, check: str) -> "VerificationReport":
        for p in self.parts:
            if p.check == check:
                return p
        raise KeyError(check)

    def walk(self) -> Iterable["VerificationReport"]:
        """Leaf reports in order (the report itself when it has no parts)."""
        if not self.parts:
            yield self
        for p in self.parts:
            yield from p.walk()

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.parts:
            return f"{self.check}: {status}"
        return f"{self.check}: {status} ({self.n_passed}/{self.n_entries})"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence, workers: int | None = None) -> list:
    """``list(map(fn, items))``, optionally spread over worker processes.

    Results keep input order whatever the worker count, so reports are
    byte-identical between sequential and parallel runs.
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
