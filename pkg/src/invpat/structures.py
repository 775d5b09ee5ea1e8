"""Companion combinatorial families and their statistics.

Schroeder paths are step words over {U, D, F} (up, down, flat) from (0,0)
to (2n,0) that never go below the axis; the size n of a path is the
number of U steps plus the number of F steps.  Black/white binary trees
carry the constraint that no node has the same color as its right child.
Restricted growth functions encode set partitions.  Permutations are
tuples over [n] with the avoidance predicates used by the verification
suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterator, Sequence

from .core import as_pattern, contains, reduce_word

# -- Schroeder paths -----------------------------------------------------------

PATH_STEPS = frozenset("UDF")


def is_schroder_path(steps: str) -> bool:
    """Prefix-sum validity: never below the axis, ends on it."""
    h = 0
    for c in steps:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
        elif c != "F":
            return False
        if h < 0:
            return False
    return h == 0


def as_schroder_path(steps: str) -> str:
    if not is_schroder_path(steps):
        raise ValueError(f"invalid step word: {steps!r}")
    return steps


def path_size(steps: str) -> int:
    """Semantic size n of a path to (2n, 0)."""
    return steps.count("U") + steps.count("F")


def schroder_paths(n: int) -> Iterator[str]:
    """All Schroeder n-paths, by first-return decomposition.

    A nonempty path is either F b or U a D b with a, b complete paths.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    yield from _paths_cached(n)


@lru_cache(maxsize=None)
def _paths_cached(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("",)
    out: list[str] = []
    for b in _paths_cached(n - 1):
        out.append("F" + b)
    for j in range(n):
        for a in _paths_cached(j):
            for b in _paths_cached(n - 1 - j):
                out.append("U" + a + "D" + b)
    return tuple(out)


@dataclass(frozen=True)
class PathStats:
    """Step statistics of a Schroeder path.

    ``flats``: F steps.  ``peaks``: UD factors.  ``valleys``: DU factors.
    ``initial_up_run``: length of the leading run of U steps.
    ``ascents``: maximal runs of consecutive U steps.
    ``flats_at_height0``: F steps taken at height 0.
    ``valley_word_U_count``: U letters left in the valley word, which is
    the number of U steps not ending a DU factor.
    """

    flats: int
    peaks: int
    valleys: int
    initial_up_run: int
    ascents: int
    flats_at_height0: int
    valley_word_U_count: int


def path_stats(steps: str) -> PathStats:
    """All step statistics of a valid path in one scan."""
    as_schroder_path(steps)
    flats = peaks = valleys = ascents = flats0 = ups = 0
    initial = 0
    h = 0
    prev = ""
    for c in steps:
        if c == "U":
            ups += 1
            if prev == "D":
                valleys += 1
            if prev != "U":
                ascents += 1
            h += 1
        elif c == "D":
            if prev == "U":
                peaks += 1
            h -= 1
        else:
            flats += 1
            if h == 0:
                flats0 += 1
        prev = c
    i = 0
    while i < len(steps) and steps[i] == "U":
        i += 1
    initial = i
    return PathStats(flats=flats, peaks=peaks, valleys=valleys,
                     initial_up_run=initial, ascents=ascents,
                     flats_at_height0=flats0,
                     valley_word_U_count=ups - valleys)


def valley_word(steps: str) -> str:
    """Replace every DU factor by V, left to right.

    >>> valley_word("UDUD")
    'UVD'
    """
    as_schroder_path(steps)
    return steps.replace("DU", "V")


def peak_flat_involution(steps: str) -> str:
    """Swap every UD factor with F and vice versa.

    A size-preserving involution exchanging the flat and peak statistics.

    >>> peak_flat_involution("UUDD")
    'UFD'
    """
    as_schroder_path(steps)
    out: list[str] = []
    i = 0
    while i < len(steps):
        if steps.startswith("UD", i):
            out.append("F")
            i += 2
        elif steps[i] == "F":
            out.append("UD")
            i += 1
        else:
            out.append(steps[i])
            i += 1
    return "".join(out)


# -- Black/white binary trees ---------------------------------------------------

@dataclass(frozen=True)
class BWNode:
    """A node of a black/white binary tree; children may be None.

    The empty tree is represented by None.  Validity: no node has the
    same color as its right child.
    """

    color: str  # "B" or "W"
    left: "BWNode | None" = None
    right: "BWNode | None" = None


BWTree = BWNode | None


def validate_bwtree(tree: BWTree) -> None:
    """Raise ValueError on a bad color or a right-child color clash."""
    if tree is None:
        return
    if tree.color not in ("B", "W"):
        raise ValueError(f"bad color {tree.color!r}")
    if tree.right is not None and tree.right.color == tree.color:
        raise ValueError("right-child color clash")
    validate_bwtree(tree.left)
    validate_bwtree(tree.right)


def is_valid_bwtree(tree: BWTree) -> bool:
    try:
        validate_bwtree(tree)
    except ValueError:
        return False
    return True


def tree_size(tree: BWTree) -> int:
    if tree is None:
        return 0
    return 1 + tree_size(tree.left) + tree_size(tree.right)


def black_count(tree: BWTree) -> int:
    """Number of black nodes."""
    if tree is None:
        return 0
    return (tree.color == "B") + black_count(tree.left) + black_count(tree.right)


def leftmost_branch_colors(tree: BWTree) -> str:
    """Colors along root, root.left, root.left.left, ... as a string."""
    out: list[str] = []
    node = tree
    while node is not None:
        out.append(node.color)
        node = node.left
    return "".join(out)


def serialize_tree(tree: BWTree) -> str:
    """Canonical text form: ``color '(' left ',' right ')'``, empty slots
    left blank; the empty tree serializes to the empty string.

    >>> serialize_tree(BWNode("W", None, BWNode("B")))
    'W(,B(,))'
    """
    if tree is None:
        return ""
    return (tree.color + "(" + serialize_tree(tree.left) + ","
            + serialize_tree(tree.right) + ")")


def parse_tree(text: str) -> BWTree:
    """Parse the tree grammar ``node := color '(' node? (',' node?)? ')'``.

    Parsing validates the right-child color constraint.
    """
    text = text.strip()
    pos = 0

    def node() -> BWTree:
        nonlocal pos
        if pos >= len(text) or text[pos] in ",)":
            return None
        color = text[pos]
        if color not in ("B", "W"):
            raise ValueError(f"parse error at {pos}: bad color {color!r}")
        pos += 1
        if pos >= len(text) or text[pos] != "(":
            raise ValueError(f"parse error at {pos}: expected '('")
        pos += 1
        left = node()
        right = None
        if pos < len(text) and text[pos] == ",":
            pos += 1
            right = node()
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"parse error at {pos}: expected ')'")
        pos += 1
        return BWNode(color, left, right)

    if not text:
        return None
    tree = node()
    if pos != len(text):
        raise ValueError(f"parse error at {pos}: trailing text")
    validate_bwtree(tree)
    return tree


def bwtrees(n: int) -> Iterator[BWTree]:
    """All valid black/white trees with n nodes."""
    if n < 0:
        raise ValueError("n must be >= 0")
    yield from _bwtrees_cached(n)


@lru_cache(maxsize=None)
def _bwtrees_cached(n: int) -> tuple[BWTree, ...]:
    if n == 0:
        return (None,)
    out: list[BWTree] = []
    for color in ("W", "B"):
        for left_size in range(n):
            for left in _bwtrees_cached(left_size):
                for right in _bwtrees_cached(n - 1 - left_size):
                    if right is not None and right.color == color:
                        continue
                    out.append(BWNode(color, left, right))
    return tuple(out)


# -- Restricted growth functions and set partitions ------------------------------

def is_rgf(word: Sequence[int]) -> bool:
    """v_1 = 1 and v_i <= 1 + max of the prefix."""
    if len(word) == 0:
        return True
    if word[0] != 1:
        return False
    top = 1
    for v in word[1:]:
        if not 1 <= v <= top + 1:
            return False
        top = max(top, v)
    return True


def as_rgf(word: Sequence[int]) -> tuple[int, ...]:
    v = tuple(int(x) for x in word)
    if not is_rgf(v):
        raise ValueError(f"not a restricted growth function: {v}")
    return v


def rgfs(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth functions of length n (Bell(n) of them)."""
    if n == 0:
        yield ()
        return
    word = [1]

    def rec(top: int) -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for v in range(1, top + 2):
            word.append(v)
            yield from rec(max(top, v))
            word.pop()

    yield from rec(1)


def rgf_to_partition(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The set partition of [n] with i in block number v_i.

    Blocks come out ordered by their minima.

    >>> rgf_to_partition((1, 2, 1))
    ((1, 3), (2,))
    """
    v = as_rgf(word)
    nblocks = max(v) if v else 0
    out: list[list[int]] = [[] for _ in range(nblocks)]
    for i, b in enumerate(v, 1):
        out[b - 1].append(i)
    return tuple(tuple(b) for b in out)


def partition_to_rgf(blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Inverse of :func:`rgf_to_partition`; blocks must be min-ordered and
    partition [n].
    """
    elems = sorted(x for b in blocks for x in b)
    n = len(elems)
    if elems != list(range(1, n + 1)):
        raise ValueError("blocks must partition {1..n}")
    mins = [min(b) for b in blocks if b]
    if len(mins) != len(blocks) or mins != sorted(mins):
        raise ValueError("blocks must be nonempty and ordered by minima")
    v = [0] * n
    for bi, b in enumerate(blocks, 1):
        for x in b:
            v[x - 1] = bi
    return as_rgf(v)


def format_partition(blocks: Sequence[Sequence[int]]) -> str:
    return "|".join("{" + ",".join(str(x) for x in b) + "}" for b in blocks)


def parse_partition(text: str) -> tuple[tuple[int, ...], ...]:
    parts = text.strip().split("|")
    out = []
    for part in parts:
        part = part.strip()
        if not (part.startswith("{") and part.endswith("}")):
            raise ValueError(f"malformed partition block: {part!r}")
        inner = part[1:-1].strip()
        out.append(tuple(sorted(int(x) for x in inner.split(","))) if inner
                   else ())
    return tuple(out)


# -- Permutations -----------------------------------------------------------------

def is_permutation(word: Sequence[int]) -> bool:
    """True if ``word`` is a bijection on [n] in one-line notation."""
    return sorted(word) == list(range(1, len(word) + 1))


def as_permutation(word: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(int(x) for x in word)
    if not is_permutation(pi):
        raise ValueError(f"not a permutation of [n]: {pi}")
    return pi


def permutations_of(n: int) -> Iterator[tuple[int, ...]]:
    yield from _permutations(range(1, n + 1))


def avoids_classical(pi: Sequence[int], patterns) -> bool:
    """True if the permutation avoids every classical pattern given.

    Patterns are permutations in one-line notation, e.g. (3, 2, 1); the
    subsequence test reuses word containment after reduction.
    """
    word = as_permutation(pi)
    for sigma in patterns:
        if contains(word, reduce_word(sigma)):
            return False
    return True


def avoids_1_23_4(pi: Sequence[int]) -> bool:
    """No i < j < k with pi_i < pi_j < pi_{j+1} < pi_k (j, j+1 adjacent)."""
    word = as_permutation(pi)
    n = len(word)
    for j in range(1, n - 1):
        if word[j - 1] >= word[j]:
            continue
        for i in range(j - 1):
            if word[i] >= word[j - 1]:
                continue
            for k in range(j + 1, n):
                if word[k] > word[j]:
                    return False
    return True


def _has_double_descent(word: Sequence[int]) -> bool:
    return any(word[i] > word[i + 1] > word[i + 2]
               for i in range(len(word) - 2))


def is_simsun(pi: Sequence[int]) -> bool:
    """No double descents, even after deleting n, n-1, ... in turn.

    >>> is_simsun((2, 5, 6, 3, 7, 8, 1, 4))
    False
    """
    word = list(as_permutation(pi))
    for m in range(len(word), 0, -1):
        if _has_double_descent(word):
            return False
        word.remove(m)
    return True


def is_down_up(pi: Sequence[int]) -> bool:
    """pi_1 > pi_2 < pi_3 > pi_4 < ... (alternating, starting down)."""
    word = as_permutation(pi)
    for i in range(len(word) - 1):
        if i % 2 == 0:
            if word[i] <= word[i + 1]:
                return False
        elif word[i] >= word[i + 1]:
            return False
    return True


def descents(pi: Sequence[int]) -> int:
    """Number of positions i with pi_i > pi_{i+1}."""
    word = as_permutation(pi)
    return sum(1 for i in range(len(word) - 1) if word[i] > word[i + 1])


# -- 0-1-2 increasing trees ---------------------------------------------------------

def is_increasing_012_tree(parents: Sequence[int]) -> bool:
    """Validity of a parent array p_1..p_n over labels {0..n-1}.

    The array encodes a tree on {0..n} rooted at 0 with p_i the parent of
    i; it is a 0-1-2 increasing tree iff p_i < i for all i and no label
    has more than two children.

    >>> is_increasing_012_tree((0, 1, 0, 3, 2, 1, 2, 4, 6, 4))
    True
    >>> is_increasing_012_tree((0, 0, 0))
    False
    """
    seen: dict[int, int] = {}
    for i, p in enumerate(parents, 1):
        if not 0 <= p < i:
            return False
        seen[p] = seen.get(p, 0) + 1
        if seen[p] > 2:
            return False
    return True
