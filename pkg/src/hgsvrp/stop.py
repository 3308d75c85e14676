"""Stopping criteria for the genetic search loop."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class RunProgress:
    iterations: int
    elapsed: float
    iterations_since_improvement: int


class MaxRuntime:
    """Stop once the wall clock passes ``seconds``."""

    def __init__(self, seconds: float):
        if seconds <= 0:
            raise ValueError("runtime bound must be positive")
        self.seconds = seconds

    def should_stop(self, progress: RunProgress) -> bool:
        return progress.elapsed >= self.seconds


class MaxIterations:
    """Stop after ``count`` iterations (0 allows none at all)."""

    def __init__(self, count: int):
        if count < 0:
            raise ValueError("iteration bound must be non-negative")
        self.count = count

    def should_stop(self, progress: RunProgress) -> bool:
        return progress.iterations >= self.count


class NoImprovement:
    """Stop after ``count`` consecutive iterations without a new best."""

    def __init__(self, count: int):
        if count <= 0:
            raise ValueError("improvement bound must be positive")
        self.count = count

    def should_stop(self, progress: RunProgress) -> bool:
        return progress.iterations_since_improvement >= self.count


def should_stop(criterion, progress: RunProgress) -> bool:
    return criterion.should_stop(progress)
