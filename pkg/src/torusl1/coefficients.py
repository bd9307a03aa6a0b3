"""Convex positive coefficient sequences and their difference calculus.

A sequence is a short explicit head plus a closed-form tail rule.  The two
canonical families are a_n = 1/log n and a_n = 1/log^2 n for n >= 2, with
the undefined entries a_0, a_1 filled by linear extension (which forces
the first two second differences to vanish and keeps convexity).  A
"constant" tail rule freezes the last head value, which turns the
underlying cosine series into a trigonometric polynomial plus a constant;
those sequences are the cheap exact test cases.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvexSequence",
    "ConvexityReport",
    "GrowthReport",
    "verify_convex",
    "growth_classification",
]

_TAIL_RULES = ("log_reciprocal", "log_squared_reciprocal", "constant")


@dataclass(frozen=True)
class ConvexSequence:
    """Coefficients a_0, a_1, ... given by an explicit head then a tail rule.

    head: the leading values (positive reals).
    tail_rule: one of "log_reciprocal" (a_n = 1/ln n), "log_squared_reciprocal"
        (a_n = 1/ln^2 n), or "constant" (a_n = head[-1]) for n >= len(head).
    """

    head: tuple
    tail_rule: str = "constant"
    label: str = ""

    def __post_init__(self):
        if self.tail_rule not in _TAIL_RULES:
            raise ValueError(f"unknown tail rule {self.tail_rule!r}")
        head = tuple(float(v) for v in self.head)
        if not head:
            raise ValueError("head must contain at least one value")
        if any(not math.isfinite(v) or v <= 0.0 for v in head):
            raise ValueError("head values must be positive and finite")
        if self.tail_rule != "constant" and len(head) < 2:
            raise ValueError("log tail rules need the two undefined leading values in the head")
        object.__setattr__(self, "head", head)

    # -- constructors -------------------------------------------------

    @classmethod
    def log_reciprocal(cls):
        """a_n = 1/ln n for n >= 2; a_1, a_0 by linear extension."""
        a2 = 1.0 / math.log(2.0)
        a3 = 1.0 / math.log(3.0)
        a1 = 2.0 * a2 - a3
        a0 = 2.0 * a1 - a2
        return cls(head=(a0, a1), tail_rule="log_reciprocal", label="log")

    @classmethod
    def log_squared_reciprocal(cls):
        """a_n = 1/ln^2 n for n >= 2; a_1, a_0 by linear extension."""
        a2 = 1.0 / math.log(2.0) ** 2
        a3 = 1.0 / math.log(3.0) ** 2
        a1 = 2.0 * a2 - a3
        a0 = 2.0 * a1 - a2
        return cls(head=(a0, a1), tail_rule="log_squared_reciprocal", label="log2")

    @classmethod
    def from_head(cls, values, tail_rule="constant", label=""):
        return cls(head=tuple(values), tail_rule=tail_rule, label=label)

    @classmethod
    def from_file(cls, path):
        """Load a sequence from a text file.

        One positive real per line (the head, in order).  A line holding one
        of the tail rule keywords declares the tail; absent that, the last
        head value continues forever.  '#' starts a comment.
        """
        head = []
        rule = "constant"
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if line in _TAIL_RULES:
                    rule = line
                    continue
                head.append(float(line))
        return cls(head=tuple(head), tail_rule=rule,
                   label=os.path.basename(str(path)))

    # -- values and differences ---------------------------------------

    def _rule_value(self, n):
        if self.tail_rule == "log_reciprocal":
            return 1.0 / math.log(n)
        if self.tail_rule == "log_squared_reciprocal":
            return 1.0 / math.log(n) ** 2
        return self.head[-1]

    def value(self, n):
        """a_n for n >= 0."""
        if n != int(n) or n < 0:
            raise ValueError("index must be a nonnegative integer")
        n = int(n)
        if n < len(self.head):
            return self.head[n]
        return self._rule_value(n)

    def values(self, count):
        """Array of a_0 .. a_{count-1}."""
        count = int(count)
        out = np.empty(max(count, 0))
        k = len(self.head)
        m = min(k, count)
        out[:m] = self.head[:m]
        if count > k:
            n = np.arange(k, count, dtype=float)
            if self.tail_rule == "log_reciprocal":
                out[k:] = 1.0 / np.log(n)
            elif self.tail_rule == "log_squared_reciprocal":
                out[k:] = 1.0 / np.log(n) ** 2
            else:
                out[k:] = self.head[-1]
        return out

    def tail_limit(self):
        """lim_n a_n: 0 for the log rules, the frozen value for constant tails."""
        if self.tail_rule == "constant":
            return self.head[-1]
        return 0.0

    def first_difference(self, j):
        """a_j - a_{j+1}."""
        return self.value(j) - self.value(j + 1)

    def second_difference(self, j):
        """a_j + a_{j+2} - 2 a_{j+1}."""
        return self.value(j) + self.value(j + 2) - 2.0 * self.value(j + 1)

    def second_differences(self, count):
        """Array of second differences for j = 0 .. count-1."""
        a = self.values(int(count) + 2)
        return a[:-2] + a[2:] - 2.0 * a[1:-1]

    def weighted_tail_beyond(self, J):
        """sum_{j>J} (j+1) * second_difference(j), in closed telescoped form.

        Equals a_{J+1} + (J+1)(a_{J+1} - a_{J+2}) - lim a_n; valid because the
        tails here are convex with n*(a_n - a_{n+1}) -> 0.
        """
        J = int(J)
        return (self.value(J + 1) + (J + 1) * self.first_difference(J + 1)
                - self.tail_limit())

    def squared_weighted_tail_beyond(self, J):
        """sum_{j>J} (j+1)^2 * second_difference(j), or +inf when divergent.

        For both log-rule families the summand behaves like a power of
        1/log j, so the series diverges and +inf is returned; for constant
        tails only finitely many terms are nonzero and the sum is exact.
        """
        J = int(J)
        if self.tail_rule != "constant":
            return math.inf
        end = len(self.head)  # second differences vanish for j >= end - 1
        if J + 1 >= end:
            return 0.0
        j = np.arange(J + 1, end, dtype=float)
        d2 = self.second_differences(end)[J + 1:end]
        return float(np.sum((j + 1) ** 2 * d2))


@dataclass(frozen=True)
class ConvexityReport:
    min_second_difference: float
    argmin: int
    min_value: float
    horizon: int
    passed: bool


@dataclass(frozen=True)
class GrowthReport:
    sup_product: float
    sup_at: int
    start_product: float
    end_product: float
    ratio: float
    label: str
    horizon: int


def verify_convex(seq, horizon):
    """Scan a_n > 0 and second differences >= -1e-12 for 0 <= j <= horizon."""
    horizon = int(horizon)
    if horizon < 2:
        raise ValueError("horizon must be >= 2")
    a = seq.values(horizon + 3)
    d2 = a[:-2] + a[2:] - 2.0 * a[1:-1]
    d2 = d2[: horizon + 1]
    argmin = int(np.argmin(d2))
    min_d2 = float(d2[argmin])
    min_a = float(np.min(a))
    passed = (min_d2 >= -1e-12) and (min_a > 0.0)
    return ConvexityReport(min_d2, argmin, min_a, horizon, passed)


def growth_classification(seq, horizon):
    """Heuristic class of a_n * ln n over 2 <= n <= horizon.

    Labels: "unbounded" when the product grows by at least 2x from n=2 to the
    horizon, "o(1)" when it shrinks to at most half, "O(1)-not-o(1)"
    otherwise.  A finite-horizon heuristic, not a proof.
    """
    horizon = int(horizon)
    if horizon < 16:
        raise ValueError("horizon must be >= 16")
    n = np.arange(2, horizon + 1, dtype=float)
    p = seq.values(horizon + 1)[2:] * np.log(n)
    sup_at = int(np.argmax(p))
    start, end = float(p[0]), float(p[-1])
    ratio = end / start
    if ratio >= 2.0:
        label = "unbounded"
    elif ratio <= 0.5:
        label = "o(1)"
    else:
        label = "O(1)-not-o(1)"
    return GrowthReport(float(p[sup_at]), sup_at + 2, start, end, ratio,
                        label, horizon)
