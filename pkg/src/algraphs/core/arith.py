# ==============================================================================
# arith.py — Totient and the clique number of cyclic power graphs
# ==============================================================================
# Purpose: Euler's totient, prime-power tests, the clique number f(n) of the
#          power graph of the cyclic group of order n, and the f(n)/φ(n) table.
# Sections: Imports, Public exports, Number Theory, Cyclic Clique Numbers,
#           Ratio Table
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

# Internal ----------------------------------------------------------------------
from .algebra_graphs import build_graph
from .builders import cyclic
from .exceptions import InputError
from .invariants import clique_number
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "RATIO_ENVELOPE",
    "prime_factorization",
    "is_prime_power",
    "euler_phi",
    "power_clique_cyclic",
    "CliqueRatioRow",
    "clique_ratio_table",
    "max_ratio_row",
    "write_ratio_csv",
]

RATIO_ENVELOPE = Fraction(2649, 1000)
"""Upper envelope for f(n)/φ(n), just above the limiting constant 2.6481..."""


# ==============================================================================
# Number Theory
# ==============================================================================

def prime_factorization(n: int) -> dict[int, int]:
    """Trial division; maps each prime divisor of n to its exponent."""
    if n < 1:
        raise InputError(f"expected a positive integer, got {n}")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime_power(n: int) -> bool:
    """True for 1 and for p^k with p prime."""
    return len(prime_factorization(n)) <= 1


def euler_phi(n: int) -> int:
    """
    Number of k in [1, n] coprime to n.

    Raises:
        InputError: If n < 1.
    """
    result = n
    for p in prime_factorization(n):
        result = result // p * (p - 1)
    return result


# ==============================================================================
# Cyclic Clique Numbers
# ==============================================================================

def power_clique_cyclic(n: int, limits: SearchLimits | None = None) -> int:
    """
    f(n): clique number of the power graph of the cyclic group of order n,
    computed from the graph itself.

    Raises:
        ResourceLimitExceeded: If n exceeds max_cyclic_clique_order.
    """
    limits = resolve_limits(limits)
    limits.require("max_cyclic_clique_order", n)
    widened = limits.clone(
        max_clique_order=max(limits.max_clique_order, n),
        max_graph_order=max(limits.max_graph_order, n),
    )
    return clique_number(build_graph(cyclic(n), "power", widened), widened)


# ==============================================================================
# Ratio Table
# ==============================================================================

@dataclass(frozen=True)
class CliqueRatioRow:
    n: int
    phi: int
    f: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.f, self.phi)


def clique_ratio_table(max_n: int, limits: SearchLimits | None = None) -> list[CliqueRatioRow]:
    """Rows for n = 1..max_n."""
    if max_n < 1:
        raise InputError(f"max_n must be positive, got {max_n}")
    rows = [CliqueRatioRow(n, euler_phi(n), power_clique_cyclic(n, limits)) for n in range(1, max_n + 1)]
    top = max_ratio_row(rows)
    logger.info(f"f/phi up to {max_n}: max ratio {top.ratio} at n={top.n}")
    if top.ratio > RATIO_ENVELOPE:
        logger.warning(f"f/phi ratio {top.ratio} at n={top.n} is above the envelope {RATIO_ENVELOPE}")
    return rows


def max_ratio_row(rows: list[CliqueRatioRow]) -> CliqueRatioRow:
    """The row with the largest f/φ ratio, the smallest n on ties."""
    if not rows:
        raise InputError("no rows to compare")
    return max(rows, key=lambda r: (r.ratio, -r.n))


def write_ratio_csv(rows: list[CliqueRatioRow], path: str | Path | None = None) -> str:
    """CSV with header `n,phi,f,ratio`; ratios are exact fractions like `5/2`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "phi", "f", "ratio"])
    for row in rows:
        writer.writerow([row.n, row.phi, row.f, str(row.ratio)])
    text = buffer.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
