"""Exact enumeration, bijections, and verification suites for
pattern-avoiding inversion sequences.

The package is organized by role:

- :mod:`invpat.core` -- inversion sequences, patterns, containment, and
  entry statistics;
- :mod:`invpat.enumerator` -- pruned exhaustive generation, the
  brute-force oracle for every count;
- :mod:`invpat.counting` -- recurrences, count tables, and power series;
- :mod:`invpat.structures` -- Schroeder paths, black/white binary trees,
  restricted growth functions, permutation predicates;
- :mod:`invpat.bijections` -- the explicit maps between families, with
  inverses;
- :mod:`invpat.verify` -- Wilf-equivalence, equidistribution, conjecture,
  and OEIS cross-check suites;
- :mod:`invpat.cli` -- the ``invpat`` command-line front end.
"""

from .core import (avoids, contains, reduce_word, shift_positive, stats,
                   blocks)
from .enumerator import avoidance_sequence, count, distribution, generate

__all__ = [
    "avoids", "contains", "reduce_word", "shift_positive", "stats", "blocks",
    "avoidance_sequence", "count", "distribution", "generate",
]

__version__ = "0.1.0"
