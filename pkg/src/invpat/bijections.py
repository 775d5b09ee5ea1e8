"""The explicit bijections between inversion sequences and companion
families, each paired with its inverse.

theta
    permutations of [n] <-> inversion sequences of length n, via counts
    of earlier larger letters.
rho, phi
    two different bijections between 021-avoiders of length n and
    Schroeder (n-1)-paths; they do not coincide and are never conflated.
kappa
    011-avoiders <-> restricted growth functions of the same length.
tau
    021-avoiders of length n <-> black/white trees on n-1 nodes.
mu
    210-avoiders -> 201-avoiders, fixing weak left-to-right maxima.
tree000
    0-1-2 increasing trees on {0..n} <-> 000-avoiders of length n, by
    reading parents as entries.
"""

from __future__ import annotations

from typing import Sequence

from .core import (as_inversion_sequence, avoids, blocks, contains,
                   shift_positive, stats)
from .structures import (BWNode, BWTree, as_permutation, as_rgf,
                         as_schroder_path, is_increasing_012_tree,
                         validate_bwtree)


def _require_avoider(entries: Sequence[int], pattern: tuple[int, ...],
                     name: str) -> tuple[int, ...]:
    e = as_inversion_sequence(entries)
    if contains(e, pattern):
        raise ValueError(f"input contains {name}")
    return e


# -- theta: permutations <-> inversion sequences --------------------------------

def theta(pi: Sequence[int]) -> tuple[int, ...]:
    """e_i = number of indices j < i with pi_j > pi_i.

    >>> theta((3, 1, 2))
    (0, 1, 1)
    """
    word = as_permutation(pi)
    return tuple(sum(1 for y in word[:i] if y > x)
                 for i, x in enumerate(word))


def theta_inv(entries: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`theta`.

    Working right to left, pi_i must be the (e_i + 1)-th largest of the
    values not yet placed: every value above it that is still unplaced
    sits to its left and contributes one earlier larger letter.
    """
    e = as_inversion_sequence(entries)
    available = sorted(range(1, len(e) + 1), reverse=True)
    out = [0] * len(e)
    for i in range(len(e) - 1, -1, -1):
        out[i] = available.pop(e[i])
    return tuple(out)


# -- rho: 021-avoiders <-> Schroeder paths (maximal-entry recursion) -------------

def rho(entries: Sequence[int]) -> str:
    """Map a 021-avoider of length n to a Schroeder (n-1)-path.

    Let j+1 be the last maximal position (e_{j+1} = j).  A sequence with
    j = 0 maps to F followed by the image of (e_2, ..., e_n); otherwise it
    maps to U rho(e_1..e_j) D rho(0 . tail) where the tail is
    (e_{j+2}, ..., e_n) with positive entries lowered by j-1.
    """
    e = _require_avoider(entries, (0, 2, 1), "021")
    if len(e) == 0:
        raise ValueError("rho is defined on nonempty sequences")
    return _rho(e)


def _rho(e: tuple[int, ...]) -> str:
    n = len(e)
    if n == 1:
        return ""
    j = max(i for i in range(1, n + 1) if e[i - 1] == i - 1) - 1
    if j == 0:
        return "F" + _rho(e[1:])
    tail = (0,) + shift_positive(e[j + 1:], 1 - j)
    return "U" + _rho(e[:j]) + "D" + _rho(tail)


def rho_inv(steps: str) -> tuple[int, ...]:
    """Inverse of :func:`rho`, by first-step / first-return decomposition."""
    as_schroder_path(steps)
    return _rho_inv(steps)


def _rho_inv(steps: str) -> tuple[int, ...]:
    if not steps:
        return (0,)
    if steps[0] == "F":
        rest = _rho_inv(steps[1:])
        return (0,) + rest
    # steps[0] == "U": split at the matching first return to height 0
    h = 0
    for i, c in enumerate(steps):
        h += 1 if c == "U" else -1 if c == "D" else 0
        if h == 0:
            break
    middle, rest = steps[1:i], steps[i + 1:]
    left = _rho_inv(middle)
    f = _rho_inv(rest)
    j = len(left)
    tail = shift_positive(f[1:], j - 1)
    return left + (j,) + tail


# -- phi: Schroeder paths -> 021-avoiders (valley-word interpreter) ---------------

def phi(steps: str) -> tuple[int, ...]:
    """Interpret the valley word of a size-(n-1) path as block-building
    instructions, producing a 021-avoider of length n.

    State: the sequence under construction (a list of blocks) and a stack
    M of open block letters, initially the single block (0) and M = [0].
    Reading the valley word: U opens a new block whose letter is the
    current length of the sequence; D closes the top block; V appends 0
    and F appends the block letter to the top block, both inserting at
    that block's current end.
    """
    as_schroder_path(steps)
    word = steps.replace("DU", "V")
    block_list: list[list[int]] = [[0]]
    by_letter: dict[int, list[int]] = {0: block_list[0]}
    stack = [0]
    length = 1
    for c in word:
        if c == "U":
            blk = [length]
            block_list.append(blk)
            by_letter[length] = blk
            stack.append(length)
            length += 1
        elif c == "D":
            stack.pop()
        elif c == "V":
            by_letter[stack[-1]].append(0)
            length += 1
        else:  # F
            j = stack[-1]
            by_letter[j].append(j)
            length += 1
    out: list[int] = []
    for blk in block_list:
        out.extend(blk)
    return as_inversion_sequence(out)


def phi_inv(entries: Sequence[int]) -> str:
    """Inverse of :func:`phi`, replaying the construction.

    At each step exactly one action is consistent with the target's block
    decomposition: a block keyed by the current length must be opened now
    (U), else the top block emits its next letter (V for a late zero, F
    otherwise), else the top block is finished and closes (D).  A zero
    arriving in the zero block is an F at height 0, never a V.
    """
    e = _require_avoider(entries, (0, 2, 1), "021")
    if len(e) == 0:
        raise ValueError("phi_inv is defined on nonempty sequences")
    decomp = {b.value: list(b.entries) for b in blocks(e).nonempty()}
    emitted = {k: (1 if k == 0 else 0) for k in decomp}
    stack = [0]
    length = 1
    total = len(e)
    word: list[str] = []
    while length < total or len(stack) > 1:
        if emitted.get(length) == 0:
            word.append("U")
            emitted[length] = 1
            stack.append(length)
            length += 1
            continue
        top = stack[-1]
        if emitted[top] < len(decomp[top]):
            nxt = decomp[top][emitted[top]]
            word.append("V" if (nxt == 0 and top > 0) else "F")
            emitted[top] += 1
            length += 1
        else:
            word.append("D")
            stack.pop()
    return "".join(word).replace("V", "DU")


# -- kappa: 011-avoiders <-> restricted growth functions --------------------------

def kappa(entries: Sequence[int]) -> tuple[int, ...]:
    """Encode a 011-avoider as a restricted growth function.

    Scanning left to right with k = zeros seen so far: a zero entry emits
    the new letter k+1; a positive entry e_i must be one of the k unused
    positive values a_1 < ... < a_k below its position and emits its rank.
    """
    e = _require_avoider(entries, (0, 1, 1), "011")
    used: set[int] = set()
    zeros = 0
    out: list[int] = []
    for i, x in enumerate(e, 1):
        if x == 0:
            zeros += 1
            out.append(zeros)
        else:
            candidates = [a for a in range(1, i) if a not in used]
            out.append(candidates.index(x) + 1)
            used.add(x)
    return as_rgf(out)


def kappa_inv(word: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`kappa`.

    A letter equal to one more than the running maximum decodes to a zero;
    any other letter v decodes to the v-th smallest unused positive value.
    """
    v = as_rgf(word)
    used: set[int] = set()
    top = 0
    out: list[int] = []
    for i, letter in enumerate(v, 1):
        if letter == top + 1:
            top += 1
            out.append(0)
        else:
            candidates = [a for a in range(1, i) if a not in used]
            x = candidates[letter - 1]
            used.add(x)
            out.append(x)
    return as_inversion_sequence(out)


# -- tau: 021-avoiders <-> black/white trees ---------------------------------------

def tau(entries: Sequence[int]) -> BWTree:
    """Map a 021-avoider of length n to a black/white tree on n-1 nodes,
    carrying ascents to black nodes.

    With l the length of the constant run e_2 = ... = e_{l+1} and k+1 the
    earliest later position where e_{k+1} >= k-l+1 (k = n if none), the
    root is white when e_2 = 0 and black when e_2 = 1; the left subtree
    encodes l zeros followed by the lowered tail (e_{k+1}, ..., e_n) and
    the right subtree encodes (0, e_{l+2}, ..., e_k).
    """
    e = _require_avoider(entries, (0, 2, 1), "021")
    if len(e) == 0:
        raise ValueError("tau is defined on nonempty sequences")
    return _tau(e)


def _tau(e: tuple[int, ...]) -> BWTree:
    n = len(e)
    if n == 1:
        return None
    run = 1
    while run + 1 < n and e[run + 1] == e[1]:
        run += 1
    k = n
    for pos in range(run + 2, n + 1):
        if e[pos - 1] >= (pos - 1) - run + 1:
            k = pos - 1
            break
    left_arg = (0,) * run + shift_positive(e[k:], run - k)
    right_arg = (0,) + e[run + 1:k]
    color = "W" if e[1] == 0 else "B"
    return BWNode(color, _tau(left_arg), _tau(right_arg))


def tau_inv(tree: BWTree) -> tuple[int, ...]:
    """Inverse of :func:`tau`.

    The run length l is the leading-zero run of the left subtree's
    preimage (its tail starts with a positive entry), which together with
    the subtree sizes pins down the split positions.
    """
    validate_bwtree(tree)
    return _tau_inv(tree)


def _tau_inv(tree: BWTree) -> tuple[int, ...]:
    if tree is None:
        return (0,)
    left = _tau_inv(tree.left)
    right = _tau_inv(tree.right)
    n = len(left) + len(right)
    run = 0
    while run < len(left) and left[run] == 0:
        run += 1
    k = run + n - len(left)
    letter = 0 if tree.color == "W" else 1
    head = (0,) + (letter,) * run
    middle = right[1:]
    tail = shift_positive(left[run:], k - run)
    e = head + middle + tail
    return as_inversion_sequence(e)


# -- mu: 210-avoiders -> 201-avoiders ------------------------------------------------

def mu_210_to_201(entries: Sequence[int]) -> tuple[int, ...]:
    """Rewrite a 210-avoider into a 201-avoider.

    Weak left-to-right maxima keep their positions and values.  The
    remaining values are reassigned greedily in position order: each slot
    takes the largest unused value below the running prefix maximum.
    """
    e = _require_avoider(entries, (2, 1, 0), "210")
    wm = set(stats(e).weak_lr_maxima)
    pool = sorted((e[i - 1] for i in range(1, len(e) + 1) if i not in wm),
                  reverse=True)
    out = list(e)
    running = 0
    for pos in range(1, len(e) + 1):
        if pos in wm:
            running = max(running, e[pos - 1])
            continue
        pick = None
        for idx, value in enumerate(pool):
            if value < running:
                pick = idx
                break
        if pick is None:
            raise ValueError("input contains 210 (no candidate value fits)")
        out[pos - 1] = pool.pop(pick)
    return tuple(out)


def mu_inv(entries: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`mu_210_to_201`.

    The non-maxima of a 210-avoider are weakly increasing, so the inverse
    sorts the multiset of non-maximum values back into position order,
    keeping the weak maxima fixed.  Each placed value must stay below the
    running prefix maximum; violations mean the input was not a
    201-avoider produced by the forward map.
    """
    f = _require_avoider(entries, (2, 0, 1), "201")
    wm = set(stats(f).weak_lr_maxima)
    pool = sorted(f[i - 1] for i in range(1, len(f) + 1) if i not in wm)
    out = list(f)
    running = 0
    j = 0
    for pos in range(1, len(f) + 1):
        if pos in wm:
            running = max(running, f[pos - 1])
            continue
        value = pool[j]
        j += 1
        if value >= running:
            raise ValueError("value escapes its prefix maximum; "
                             "input is not in the image of mu")
        out[pos - 1] = value
    return as_inversion_sequence(out)


# -- tree000: 0-1-2 increasing trees <-> 000-avoiders ----------------------------------

def tree000_to_inv(parents: Sequence[int]) -> tuple[int, ...]:
    """Read a 0-1-2 increasing tree on {0..n} as the sequence e_i = parent(i).

    >>> tree000_to_inv((0, 1, 0, 3, 2, 1, 2, 4, 6, 4))
    (0, 1, 0, 3, 2, 1, 2, 4, 6, 4)
    """
    p = tuple(int(x) for x in parents)
    if not is_increasing_012_tree(p):
        raise ValueError(f"not a 0-1-2 increasing tree parent array: {p}")
    return as_inversion_sequence(p)


def inv_to_tree000(entries: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`tree000_to_inv`: a 000-avoider is a parent array."""
    e = _require_avoider(entries, (0, 0, 0), "000")
    if not is_increasing_012_tree(e):
        raise ValueError(f"not a valid parent array: {e}")
    return e
