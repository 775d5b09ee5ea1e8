"""Exhaustive generation of inversion sequences, with pattern pruning.

This module is the brute-force oracle behind every counting claim in the
package.  Generation extends a prefix e by each candidate last entry in
0..len(e); a candidate is pruned when it completes a pattern occurrence,
which is sound because a prefix that already avoids the patterns can only
gain an occurrence through its new last entry.

Counts are exact Python integers throughout; nothing here ever touches
floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (STATISTIC_NAMES, as_pattern, extends_with_occurrence,
                   parse_pattern, stats)


def _normalize_avoid(avoid: Iterable) -> tuple[tuple[int, ...], ...]:
    out = []
    for p in avoid:
        if isinstance(p, str):
            out.append(parse_pattern(p))
        else:
            out.append(as_pattern(p))
    return tuple(out)


def generate(n: int, avoid: Iterable = ()) -> Iterator[tuple[int, ...]]:
    """Yield every length-n inversion sequence avoiding all given patterns,
    exactly once, in lexicographic order.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    patterns = _normalize_avoid(avoid)
    prefix: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        d = len(prefix)
        if d == n:
            yield tuple(prefix)
            return
        for v in range(d + 1):
            if any(extends_with_occurrence(prefix, v, p) for p in patterns):
                continue
            prefix.append(v)
            yield from rec()
            prefix.pop()

    return rec()


def count_by_length(avoid: Iterable, n_max: int) -> list[int]:
    """Exact counts [|I_1(p)|, ..., |I_n_max(p)|] from a single search.

    Every node of the pruned search tree at depth d is an avoider of
    length d, so one traversal counts all lengths at once.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    patterns = _normalize_avoid(avoid)
    counts = [0] * (n_max + 1)
    prefix: list[int] = []
    append = prefix.append
    pop = prefix.pop

    def rec() -> None:
        d = len(prefix)
        counts[d] += 1
        if d == n_max:
            return
        for v in range(d + 1):
            ok = True
            for p in patterns:
                if extends_with_occurrence(prefix, v, p):
                    ok = False
                    break
            if ok:
                append(v)
                rec()
                pop()

    rec()
    return counts[1:]


def avoidance_sequence(avoid: Iterable, n_max: int) -> list[int]:
    """The avoidance sequence |I_1(p)|, ..., |I_n_max(p)| by brute force."""
    return count_by_length(avoid, n_max)


def count(n: int, avoid: Iterable = ()) -> int:
    """Exact |I_n(p)| by brute force; |I_0| = 1."""
    if n == 0:
        return 1
    return count_by_length(avoid, n)[-1]


@dataclass(frozen=True)
class Histogram:
    """Distribution of one statistic over a generated family.

    ``bins`` maps statistic value -> exact count; the bin counts sum to the
    size of the family that was enumerated.
    """

    n: int
    statistic: str
    bins: dict[int, int]

    def total(self) -> int:
        return sum(self.bins.values())

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "statistic": self.statistic,
            "bins": {str(v): str(c) for v, c in sorted(self.bins.items())},
        }
        return json.dumps(payload, sort_keys=True)


def distribution(n: int, avoid: Iterable, statistic: str) -> Histogram:
    """Histogram of a StatRecord statistic over I_n(avoid)."""
    if statistic not in STATISTIC_NAMES:
        raise ValueError(f"unknown statistic {statistic!r}; "
                         f"expected one of {STATISTIC_NAMES}")
    bins: dict[int, int] = {}
    for e in generate(n, avoid):
        v = getattr(stats(e), statistic)
        bins[v] = bins.get(v, 0) + 1
    return Histogram(n=n, statistic=statistic, bins=bins)
