from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A node-limited search ran out of budget.

    ``lower`` and ``upper`` are the best bounds known when the search stopped
    (``upper`` may be ``math.inf`` for tau' when no cover was found yet).
    """

    def __init__(self, what: str, nodes: int, lower=None, upper=None):
        self.what = what
        self.nodes = nodes
        self.lower = lower
        self.upper = upper
        super().__init__(f"{what}: node budget exhausted after {nodes} nodes "
                         f"(lower={lower}, upper={upper})")


class Budget:
    __slots__ = ("limit", "used", "what")

    def __init__(self, limit: int | None, what: str = "search"):
        self.limit = limit
        self.used = 0
        self.what = what

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.what, self.used)
