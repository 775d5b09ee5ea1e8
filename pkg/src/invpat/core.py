"""Inversion sequences, word patterns, containment, and entry statistics.

An inversion sequence of length n is an integer word (e_1, ..., e_n) with
0 <= e_i < i for every position i; in particular e_1 = 0 whenever n >= 1.
Positions are 1-indexed throughout the documentation and all text forms;
internally entries live in ordinary Python tuples.

A word pattern is a word in reduced form: its set of distinct letters is
exactly {0, 1, ..., m} for some m.  An inversion sequence contains a
pattern p if some subsequence of it reduces to p, and avoids p otherwise.

Text forms: an inversion sequence is written as comma-separated decimal
entries (``0,1,0,2``); a pattern as a digit string when all letters are
single digits (``021``), otherwise comma-separated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Reduce a word: replace the i-th smallest letters by i-1.

    >>> reduce_word((3, 0, 5, 2, 6, 6, 2))
    (2, 0, 3, 1, 4, 4, 1)
    >>> reduce_word((5, 2, 9))
    (1, 0, 2)
    """
    if len(word) == 0:
        raise ValueError("empty word")
    rank = {v: i for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[x] for x in word)


def is_reduced(word: Sequence[int]) -> bool:
    """True if the distinct letters of ``word`` are exactly {0..m}."""
    if len(word) == 0:
        return False
    letters = set(word)
    return letters == set(range(len(letters)))


def as_pattern(word: Sequence[int]) -> tuple[int, ...]:
    """Validate a reduced word and return it as a tuple."""
    p = tuple(int(x) for x in word)
    if not is_reduced(p):
        raise ValueError(f"pattern must be a reduced word, got {p}")
    return p


def is_inversion_sequence(entries: Sequence[int]) -> bool:
    """True if 0 <= e_i < i at every (1-indexed) position i."""
    return all(0 <= x < i for i, x in enumerate(entries, 1))


def as_inversion_sequence(entries: Sequence[int]) -> tuple[int, ...]:
    """Validate an inversion sequence and return it as a tuple."""
    e = tuple(int(x) for x in entries)
    if not is_inversion_sequence(e):
        raise ValueError(f"not an inversion sequence: {e}")
    return e


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse comma-separated entries; empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed sequence text: {text!r}") from exc


def format_sequence(entries: Sequence[int]) -> str:
    return ",".join(str(x) for x in entries)


def parse_pattern(text: str) -> tuple[int, ...]:
    """Parse a pattern from a digit string or comma-separated letters.

    >>> parse_pattern("021")
    (0, 2, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        word = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"malformed pattern text: {text!r}")
        word = tuple(int(ch) for ch in text)
    return as_pattern(word)


def format_pattern(pattern: Sequence[int]) -> str:
    if all(0 <= x <= 9 for x in pattern):
        return "".join(str(x) for x in pattern)
    return ",".join(str(x) for x in pattern)


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


def extends_with_occurrence(prefix: Sequence[int], value: int,
                            pattern: Sequence[int]) -> bool:
    """True if appending ``value`` to ``prefix`` completes an occurrence of
    ``pattern`` that ends at the new position.

    This is the incremental form of containment: if ``prefix`` avoids the
    pattern, the extended word contains it iff this returns True, because
    any new occurrence must use the new last entry.
    """
    k = len(pattern)
    if k == 1:
        return True
    if k - 1 > len(prefix):
        return False
    if k == 3:
        return _completes_three(prefix, value, pattern)
    return _completes_generic(prefix, value, pattern)


def _completes_three(prefix: Sequence[int], v: int,
                     p: Sequence[int]) -> bool:
    # One left-to-right scan.  For each candidate middle element x we ask
    # whether some earlier element can play the first pattern letter; the
    # candidates for that role are tracked by min/max per value class
    # relative to v, plus a seen-value set for the equality cases.
    r12 = _sign(p[0], p[1])
    r13 = _sign(p[0], p[2])
    r23 = _sign(p[1], p[2])
    lt_min = lt_max = gt_min = gt_max = None
    seen: set[int] = set()
    for x in prefix:
        if _sign(x, v) == r23:
            if r12 == 0:
                # first letter equals the middle one
                if x in seen and _sign(x, v) == r13:
                    return True
            elif r13 == 0:
                # first letter equals the last one
                if v in seen and _sign(v, x) == r12:
                    return True
            elif r13 < 0:
                if r12 < 0:
                    if lt_min is not None and lt_min < x:
                        return True
                else:
                    if lt_max is not None and lt_max > x:
                        return True
            else:
                if r12 < 0:
                    if gt_min is not None and gt_min < x:
                        return True
                else:
                    if gt_max is not None and gt_max > x:
                        return True
        seen.add(x)
        if x < v:
            if lt_min is None:
                lt_min = lt_max = x
            else:
                if x < lt_min:
                    lt_min = x
                if x > lt_max:
                    lt_max = x
        elif x > v:
            if gt_min is None:
                gt_min = gt_max = x
            else:
                if x < gt_min:
                    gt_min = x
                if x > gt_max:
                    gt_max = x
    return False


def _completes_generic(prefix: Sequence[int], value: int,
                       pattern: Sequence[int]) -> bool:
    # Backtracking over the first k-1 subsequence positions, checking the
    # pairwise order relations against the pattern as we go.  The final
    # pattern letter is pinned to ``value``.
    k = len(pattern)
    chosen: list[int] = []

    def consistent(x: int) -> bool:
        t = len(chosen)
        for a, y in enumerate(chosen):
            if _sign(y, x) != _sign(pattern[a], pattern[t]):
                return False
        return True

    def search(start: int) -> bool:
        t = len(chosen)
        if t == k - 1:
            return consistent(value)
        for i in range(start, len(prefix) - (k - 2 - t)):
            x = prefix[i]
            if consistent(x):
                chosen.append(x)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def contains(entries: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``entries`` reduces to ``pattern``.

    >>> contains((0, 1, 0, 2), (0, 1, 2))
    True
    >>> contains((0, 0, 0), (0, 1))
    False
    """
    p = tuple(pattern)
    if len(p) > len(entries):
        return False
    return any(extends_with_occurrence(entries[:i], entries[i], p)
               for i in range(len(p) - 1, len(entries)))


def avoids(entries: Sequence[int], pattern: Sequence[int]) -> bool:
    """Negation of :func:`contains`."""
    return not contains(entries, pattern)


def shift_positive(entries: Sequence[int], t: int) -> tuple[int, ...]:
    """Translate the positive entries by ``t``; zeros are fixed.

    Applicable to arbitrary substrings, so the result need not be a valid
    inversion sequence.  With negative ``t`` every positive entry must
    exceed ``-t`` so the result stays positive.

    >>> shift_positive((0, 3, 0, 4), -2)
    (0, 1, 0, 2)
    """
    if t < 0 and any(0 < x <= -t for x in entries):
        raise ValueError("shift would produce nonpositive entry")
    return tuple(0 if x == 0 else x + t for x in entries)


@dataclass(frozen=True)
class StatRecord:
    """All entry statistics used anywhere in the package.

    ``zeros``
        number of zero entries; always zeros == leading_zeros + late_zeros.
    ``ascents``
        positions i with e_i < e_{i+1}.
    ``maximal_entries``
        positions i with e_i = i-1 (e_1 = 0 always counts for n >= 1).
    ``distinct_values`` / ``distinct_nonzero_values``
        cardinalities of the value set, with and without 0.
    ``leading_zeros``
        length of the maximal zero prefix.
    ``late_zeros``
        zeros strictly after the first nonzero entry.
    ``top`` / ``bottom``
        the largest entry, and the largest entry at a position that is not
        a weak left-to-right maximum; ``bottom`` is -1 iff the sequence is
        weakly increasing, and both are -1 for the empty sequence.
    ``weak_lr_maxima``
        the 1-indexed positions j with e_i <= e_j for all i < j.
    """

    zeros: int
    ascents: int
    maximal_entries: int
    distinct_values: int
    distinct_nonzero_values: int
    late_zeros: int
    leading_zeros: int
    top: int
    bottom: int
    weak_lr_maxima: tuple[int, ...]


#: StatRecord fields usable as distribution statistics.
STATISTIC_NAMES = ("zeros", "ascents", "maximal_entries", "distinct_values",
                   "distinct_nonzero_values", "late_zeros", "leading_zeros",
                   "top", "bottom")


def stats(entries: Sequence[int]) -> StatRecord:
    """Compute every statistic of an inversion sequence in one pass."""
    e = tuple(entries)
    n = len(e)
    zeros = sum(1 for x in e if x == 0)
    ascents = sum(1 for i in range(n - 1) if e[i] < e[i + 1])
    maximal = sum(1 for i, x in enumerate(e, 1) if x == i - 1)
    values = set(e)
    leading = 0
    for x in e:
        if x != 0:
            break
        leading += 1
    maxima: list[int] = []
    running = -1
    bottom = -1
    for i, x in enumerate(e, 1):
        if x >= running:
            maxima.append(i)
            running = x
        elif x > bottom:
            bottom = x
    return StatRecord(
        zeros=zeros,
        ascents=ascents,
        maximal_entries=maximal,
        distinct_values=len(values),
        distinct_nonzero_values=len(values) - (1 if 0 in values else 0),
        late_zeros=zeros - leading,
        leading_zeros=leading,
        top=running if n else -1,
        bottom=bottom,
        weak_lr_maxima=tuple(maxima),
    )


@dataclass(frozen=True)
class Block:
    """One block of the decomposition of a 021-avoiding sequence.

    ``value`` is the block letter k; ``start`` is the 1-indexed position of
    the block's first entry (None when the block is empty); ``entries`` are
    the block's letters, each equal to ``value`` or 0.  A block is maximal
    iff it starts at position value+1.
    """

    value: int
    start: int | None
    entries: tuple[int, ...]
    maximal: bool


@dataclass(frozen=True)
class BlockDecomposition:
    """Factorization e = b_0 b_1 ... b_{n-1} of a 021-avoiding sequence.

    Block b_k begins at the first occurrence of the letter k and extends
    over the following letters drawn from {k, 0}; b_0 is the leading zero
    run.  Blocks for letters that never occur are present but empty.
    """

    blocks: tuple[Block, ...]

    def concatenation(self) -> tuple[int, ...]:
        out: list[int] = []
        for b in self.blocks:
            out.extend(b.entries)
        return tuple(out)

    def nonempty(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.entries)


def blocks(entries: Sequence[int]) -> BlockDecomposition:
    """Block decomposition of a 021-avoiding inversion sequence."""
    e = as_inversion_sequence(entries)
    if contains(e, (0, 2, 1)):
        raise ValueError("block decomposition undefined: sequence contains 021")
    n = len(e)
    if n == 0:
        return BlockDecomposition(blocks=())
    found: dict[int, tuple[int, list[int]]] = {}
    i = 0
    lead: list[int] = []
    while i < n and e[i] == 0:
        lead.append(0)
        i += 1
    found[0] = (1, lead)
    current = 0
    while i < n:
        x = e[i]
        if x != 0 and x != current:
            current = x
            found[current] = (i + 1, [])
        found[current][1].append(x)
        i += 1
    out = []
    for k in range(n):
        if k in found:
            start, ent = found[k]
            out.append(Block(value=k, start=start, entries=tuple(ent),
                             maximal=(start == k + 1)))
        else:
            out.append(Block(value=k, start=None, entries=(), maximal=False))
    return BlockDecomposition(blocks=tuple(out))
