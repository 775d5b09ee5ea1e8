"""Verification suites: Wilf equivalences, statistic equidistributions,
the two conjectured identities, and OEIS b-file cross-checks.

Every check compares two independently computed sides and reports a
per-n verdict.  A failing check is a first-class outcome carrying its
first counterexample; it is not an error.
"""

from __future__ import annotations

import json
import os
import time
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Sequence

from . import bijections, counting, structures
from .core import parse_pattern, format_pattern, stats
from .enumerator import avoidance_sequence, distribution, generate

# -- verdicts --------------------------------------------------------------------


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one suite over a range of n.

    ``status`` maps each checked n to True (pass) or False (fail); a
    failed n implies ``counterexample`` holds the first mismatch found,
    as JSON-serializable data.
    """

    suite: str
    n_range: tuple[int, int]
    status: dict[int, bool]
    counterexample: dict | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(self.status.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "status": {str(n): ("pass" if ok else "fail")
                       for n, ok in sorted(self.status.items())},
            "passed": self.passed,
            "counterexample": self.counterexample,
            "elapsed_seconds": round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _run_per_n(suite: str, n_lo: int, n_hi: int,
               check: Callable[[int], dict | None]) -> VerdictReport:
    t0 = time.perf_counter()
    status: dict[int, bool] = {}
    counterexample = None
    for n in range(n_lo, n_hi + 1):
        mismatch = check(n)
        status[n] = mismatch is None
        if mismatch is not None and counterexample is None:
            counterexample = mismatch
    return VerdictReport(suite=suite, n_range=(n_lo, n_hi), status=status,
                         counterexample=counterexample,
                         elapsed=time.perf_counter() - t0)


# -- Wilf equivalence ---------------------------------------------------------------


def check_wilf(p1, p2, n_max: int) -> VerdictReport:
    """Compare the brute-force avoidance sequences of two patterns."""
    a = parse_pattern(p1) if isinstance(p1, str) else tuple(p1)
    b = parse_pattern(p2) if isinstance(p2, str) else tuple(p2)
    seq_a = avoidance_sequence([a], n_max)
    seq_b = avoidance_sequence([b], n_max)
    name = f"wilf[{format_pattern(a)},{format_pattern(b)}]"

    def check(n: int) -> dict | None:
        if seq_a[n - 1] == seq_b[n - 1]:
            return None
        return {"n": n, format_pattern(a): str(seq_a[n - 1]),
                format_pattern(b): str(seq_b[n - 1])}

    return _run_per_n(name, 1, n_max, check)


# -- equidistribution claims -----------------------------------------------------------

Hist = dict[int, int]


def _hist_paths(n: int, statistic: str, shift: int = 0) -> Hist:
    """Histogram of a path statistic over Schroeder n-paths, with bin
    labels shifted by ``shift`` (to line up k-1 against k claims)."""
    bins: Hist = {}
    for p in structures.schroder_paths(n):
        v = getattr(structures.path_stats(p), statistic) + shift
        bins[v] = bins.get(v, 0) + 1
    return bins


def _hist_inv(n: int, pattern: str, statistic: str) -> Hist:
    return dict(distribution(n, [pattern], statistic).bins)


def _hist_table(table: counting.CountTable, n: int) -> Hist:
    return {k[-1]: v for k, v in table.cells.items() if k[0] == n}


def _hist_partition_blocks(n: int) -> Hist:
    bins: Hist = {}
    for v in structures.rgfs(n):
        k = len(set(v))
        bins[k] = bins.get(k, 0) + 1
    return bins


def _hist_bwtree_blacks(n_nodes: int, shift: int = 0) -> Hist:
    bins: Hist = {}
    for t in structures.bwtrees(n_nodes):
        k = structures.black_count(t) + shift
        bins[k] = bins.get(k, 0) + 1
    return bins


def _hist_simsun_descents(n: int) -> Hist:
    bins: Hist = {}
    for pi in structures.permutations_of(n):
        if structures.is_simsun(pi):
            k = structures.descents(pi)
            bins[k] = bins.get(k, 0) + 1
    return bins


def _count_hist(value: int) -> Hist:
    return {0: value}


@dataclass(frozen=True)
class Claim:
    """A named equidistribution or cross-count claim.

    ``sides`` computes the two histograms for a given n, already aligned
    to a common bin labeling (offsets are applied inside, never inferred).
    """

    name: str
    description: str
    sides: Callable[[int], tuple[Hist, Hist]]
    n_min: int = 1


def _claims() -> dict[str, Claim]:
    c = counting
    s = structures

    def zeros_vs_flats(n):
        return (_hist_inv(n, "021", "zeros"), _hist_paths(n - 1, "flats", 1))

    def zeros_vs_peaks(n):
        return (_hist_inv(n, "021", "zeros"), _hist_paths(n - 1, "peaks", 1))

    def maximal_vs_initial_ups(n):
        return (_hist_inv(n, "021", "maximal_entries"),
                _hist_paths(n - 1, "initial_up_run", 1))

    def ascent_symmetry(n):
        h = _hist_inv(n, "021", "ascents")
        mirrored = {n - 1 - k: v for k, v in h.items()}
        return (h, mirrored)

    def ascents_vs_blacks(n):
        return (_hist_inv(n, "021", "ascents"), _hist_bwtree_blacks(n - 1))

    def maximal_vs_Y(n):
        return (_hist_inv(n, "021", "maximal_entries"),
                _hist_table(c.table_Y(n), n))

    def zeros011_vs_blocks(n):
        return (_hist_inv(n, "011", "zeros"), _hist_partition_blocks(n))

    def zeros011_vs_stirling(n):
        return (_hist_inv(n, "011", "zeros"),
                _hist_table(c.table_stirling(n), n))

    def distinct000_vs_E(n):
        return (_hist_inv(n, "000", "distinct_values"),
                _hist_table(c.table_E000(n), n))

    def simsun_vs_rs(n):
        return (_hist_simsun_descents(n), _hist_table(c.table_simsun(n), n))

    def rs_vs_E_duality(n):
        rs = _hist_table(c.table_simsun(n), n)
        e = _hist_table(c.table_E000(n), n)
        return (rs, {n - k: v for k, v in e.items()})

    def zeros101_vs_callan(n):
        return (_hist_inv(n, "101", "zeros"),
                _hist_table(c.table_callan(n), n))

    def bwtree_color_swap(n):
        blacks = _hist_bwtree_blacks(n)
        return (blacks, {n - k: v for k, v in blacks.items()})

    def boolean_perms(n):
        cnt = sum(1 for pi in s.permutations_of(n)
                  if s.avoids_classical(pi, [(3, 2, 1), (3, 4, 1, 2)]))
        return (_count_hist(cnt), _count_hist(c.count_012(n)))

    def separable_perms(n):
        # separable permutations of [n] are Schroeder-counted with an
        # explicit one-step offset: |S_n(2413,3142)| = r_{n-1}
        cnt = sum(1 for pi in s.permutations_of(n)
                  if s.avoids_classical(pi, [(2, 4, 1, 3), (3, 1, 4, 2)]))
        return (_count_hist(cnt), _count_hist(c.schroder(n - 1)))

    def bwtree_count(n):
        cnt = sum(1 for _ in s.bwtrees(n))
        return (_count_hist(cnt), _count_hist(c.schroder(n)))

    def path_count(n):
        cnt = sum(1 for _ in s.schroder_paths(n))
        return (_count_hist(cnt), _count_hist(c.schroder(n)))

    def vincular_count(n):
        cnt = sum(1 for pi in s.permutations_of(n) if s.avoids_1_23_4(pi))
        return (_count_hist(cnt), _count_hist(c.count_101_110(n)))

    def theta_001(n):
        image = {bijections.theta_inv(e) for e in generate(n, ["001"])}
        target = {pi for pi in s.permutations_of(n)
                  if s.avoids_classical(pi, [(1, 3, 2), (2, 3, 1)])}
        return (_count_hist(len(image & target)),
                _count_hist(len(image | target)))

    claims = [
        Claim("zeros_021_vs_path_flats",
              "zeros on 021-avoiders of length n match flats+1 on "
              "Schroeder (n-1)-paths", zeros_vs_flats),
        Claim("zeros_021_vs_path_peaks",
              "zeros on 021-avoiders match peaks+1 on (n-1)-paths",
              zeros_vs_peaks),
        Claim("maximal_021_vs_initial_ups",
              "maximal entries match initial up-run + 1",
              maximal_vs_initial_ups),
        Claim("ascents_021_symmetry",
              "ascent histogram on 021-avoiders is symmetric "
              "(bins[k] = bins[n-1-k])", ascent_symmetry),
        Claim("ascents_021_vs_tree_blacks",
              "ascents on 021-avoiders match black nodes on (n-1)-node "
              "black/white trees", ascents_vs_blacks),
        Claim("maximal_021_vs_Y_table",
              "maximal-entry histogram matches the Y table row",
              maximal_vs_Y),
        Claim("zeros_011_vs_partition_blocks",
              "zeros on 011-avoiders match block counts of set partitions",
              zeros011_vs_blocks),
        Claim("zeros_011_vs_stirling_table",
              "zeros on 011-avoiders match the Stirling row",
              zeros011_vs_stirling),
        Claim("distinct_000_vs_E_table",
              "distinct-entry histogram on 000-avoiders matches the E "
              "table row", distinct000_vs_E),
        Claim("simsun_descents_vs_rs_table",
              "simsun descent histogram matches the rs table row",
              simsun_vs_rs),
        Claim("rs_vs_E_duality", "rs_{n,k} = E_{n,n-k}", rs_vs_E_duality),
        Claim("zeros_101_vs_callan_table",
              "zeros on 101-avoiders match the u table row",
              zeros101_vs_callan),
        Claim("bwtree_color_swap",
              "black-count histogram on n-node trees is symmetric",
              bwtree_color_swap,
              n_min=0),
        Claim("boolean_permutation_count",
              "|S_n(321,3412)| equals the 012 count", boolean_perms),
        Claim("separable_permutation_count",
              "|S_n(2413,3142)| = r_{n-1} (explicit offset)",
              separable_perms),
        Claim("bwtree_count", "n-node black/white trees are r_n many",
              bwtree_count, n_min=0),
        Claim("schroder_path_count", "Schroeder n-paths are r_n many",
              path_count, n_min=0),
        Claim("vincular_1_23_4_count",
              "|S_n(1-23-4)| equals the 101/110 count", vincular_count),
        Claim("theta_image_001",
              "theta_inv maps 001-avoiders onto S_n(132,231)", theta_001),
    ]
    return {cl.name: cl for cl in claims}


CLAIMS: dict[str, Claim] = _claims()


def check_equidistribution(claim: str, n_max: int) -> VerdictReport:
    """Run one named claim for n up to n_max."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; "
                         f"known: {sorted(CLAIMS)}")
    cl = CLAIMS[claim]

    def check(n: int) -> dict | None:
        a, b = cl.sides(n)
        a = {k: v for k, v in a.items() if v}
        b = {k: v for k, v in b.items() if v}
        if a == b:
            return None
        return {"n": n,
                "side_a": {str(k): str(v) for k, v in sorted(a.items())},
                "side_b": {str(k): str(v) for k, v in sorted(b.items())}}

    return _run_per_n(f"equidistribution[{claim}]", cl.n_min, n_max, check)


# -- conjectures -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _entringer_oracle_row(n: int) -> tuple[int, ...]:
    """d_{n,k} for k = 0..n by enumerating down/up permutations of [n+1]
    with first entry k+1."""
    row = [0] * (n + 1)
    for pi in structures.permutations_of(n + 1):
        if structures.is_down_up(pi):
            row[pi[0] - 1] += 1
    return tuple(row)


@lru_cache(maxsize=None)
def _entringer_table_validated(n_max: int) -> counting.CountTable:
    """The d table, cross-checked cell by cell against the permutation
    oracle before anything downstream trusts it."""
    table = counting.table_entringer(n_max)
    for n in range(1, min(n_max, 8) + 1):
        oracle = _entringer_oracle_row(n)
        for k in range(0, n + 1):
            if table.get(n, k) != oracle[k]:
                raise AssertionError(
                    f"entringer table disagrees with the down/up oracle at "
                    f"(n={n}, k={k}): {table.get(n, k)} vs {oracle[k]}")
    return table


def run_conjecture(conjecture_id: str, n_max: int) -> VerdictReport:
    """Test one of the two conjectured identities by brute force.

    ``entringer``: d_{n,k} counts 000-avoiders of length n with last
    entry k-1.  ``schroder_ascents``: (n-1)-paths with k-1 ascents are as
    many as 021-avoiders of length n with k distinct values.  Both sides
    are computed independently; a failure is reported as a counterexample.
    """
    if conjecture_id == "entringer":
        table = _entringer_table_validated(max(n_max, 1))

        def check(n: int) -> dict | None:
            bins: Hist = {}
            for e in generate(n, ["000"]):
                k = e[-1] + 1
                bins[k] = bins.get(k, 0) + 1
            row = {k: table.get(n, k) for k in range(1, n + 1)
                   if table.get(n, k)}
            if bins == row:
                return None
            return {"n": n,
                    "last_entry_histogram":
                        {str(k): str(v) for k, v in sorted(bins.items())},
                    "entringer_row":
                        {str(k): str(v) for k, v in sorted(row.items())}}

        return _run_per_n("conjecture[entringer]", 1, n_max, check)

    if conjecture_id == "schroder_ascents":

        def check(n: int) -> dict | None:
            paths = _hist_paths(n - 1, "ascents", 1)
            seqs = _hist_inv(n, "021", "distinct_values")
            if paths == seqs:
                return None
            return {"n": n,
                    "path_ascents":
                        {str(k): str(v) for k, v in sorted(paths.items())},
                    "distinct_values":
                        {str(k): str(v) for k, v in sorted(seqs.items())}}

        return _run_per_n("conjecture[schroder_ascents]", 1, n_max, check)

    raise ValueError(f"unknown conjecture {conjecture_id!r}; "
                     "known: entringer, schroder_ascents")


def check_callan_identity(n_max: int) -> VerdictReport:
    """Exact rational identity on the u table:
    u_{n,k+1} + k u_{n-1,k} = (k+1)/k (u_{n,k} - u_{n-1,k-1})."""
    table = counting.table_callan(n_max)

    def check(n: int) -> dict | None:
        for k in range(1, n):
            lhs = Fraction(table.get(n, k + 1) + k * table.get(n - 1, k))
            rhs = Fraction(k + 1, k) * (table.get(n, k)
                                        - table.get(n - 1, k - 1))
            if lhs != rhs:
                return {"n": n, "k": k, "lhs": str(lhs), "rhs": str(rhs)}
        return None

    return _run_per_n("callan_identity", 2, n_max, check)


# -- OEIS cross-checks --------------------------------------------------------------------


def parse_b_file(text: str) -> dict[int, int]:
    """Parse b-file lines ``n a(n)``; ``#`` comments and blanks ignored."""
    out: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed b-file line {lineno}: {line!r}")
        out[int(parts[0])] = int(parts[1])
    return out


def _fixture_path(sequence_id: str):
    return resources.files("invpat").joinpath(
        f"data/oeis/b{sequence_id[1:]}.txt")


def load_b_file(sequence_id: str, *, source: str | None = None,
                offline: bool = True,
                cache_dir: str | None = None) -> dict[int, int]:
    """Load b-file terms for an A-number.

    Precedence: explicit ``source`` path, then the fetch cache, then the
    bundled fixture; with ``offline=False`` a missing sequence is fetched
    from the standard b-file URL and cached.  The cache directory is
    ``cache_dir`` or ``$INVPAT_CACHE``.
    """
    if source is not None:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_b_file(fh.read())
    cache_dir = cache_dir or os.environ.get("INVPAT_CACHE")
    if cache_dir:
        cached = os.path.join(cache_dir, f"b{sequence_id[1:]}.txt")
        if os.path.exists(cached):
            with open(cached, "r", encoding="utf-8") as fh:
                return parse_b_file(fh.read())
    fixture = _fixture_path(sequence_id)
    if fixture.is_file():
        return parse_b_file(fixture.read_text(encoding="utf-8"))
    if offline:
        raise FileNotFoundError(
            f"no bundled fixture for {sequence_id} and offline mode is on")
    url = (f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt")
    with urllib.request.urlopen(url, timeout=30) as resp:
        text = resp.read().decode("utf-8")
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        with open(os.path.join(cache_dir, f"b{sequence_id[1:]}.txt"),
                  "w", encoding="utf-8") as fh:
            fh.write(text)
    return parse_b_file(text)


def oeis_crosscheck(terms: Sequence[int], sequence_id: str, *,
                    start_index: int, source: str | None = None,
                    offline: bool = True,
                    cache_dir: str | None = None) -> VerdictReport:
    """Match computed terms against b-file terms.

    ``terms[i]`` is compared to the b-file value at index start_index + i;
    the index map is always declared by the caller, never inferred.
    """
    t0 = time.perf_counter()
    reference = load_b_file(sequence_id, source=source, offline=offline,
                            cache_dir=cache_dir)
    status: dict[int, bool] = {}
    counterexample = None
    for i, value in enumerate(terms):
        idx = start_index + i
        if idx not in reference:
            status[idx] = False
            if counterexample is None:
                counterexample = {"index": idx, "computed": str(value),
                                  "reference": "missing"}
            continue
        ok = reference[idx] == value
        status[idx] = ok
        if not ok and counterexample is None:
            counterexample = {"index": idx, "computed": str(value),
                              "reference": str(reference[idx])}
    return VerdictReport(
        suite=f"oeis[{sequence_id}]",
        n_range=(start_index, start_index + len(terms) - 1),
        status=status, counterexample=counterexample,
        elapsed=time.perf_counter() - t0)


@dataclass(frozen=True)
class CrossCheck:
    """A registered OEIS comparison with its explicit index map."""

    sequence_id: str
    description: str
    compute: Callable[[int], list[int]]  # n_terms -> terms
    start_index: int
    default_terms: int


def _crosschecks() -> dict[str, CrossCheck]:
    c = counting

    def seq(fn, first=1):
        return lambda m: [fn(n) for n in range(first, first + m)]

    checks = [
        CrossCheck("A001519", "avoiders of 012 (odd-indexed Fibonacci); "
                   "|I_n(012)| = A001519(n)",
                   seq(c.count_012), start_index=1, default_terms=20),
        CrossCheck("A006318", "avoiders of 021 (large Schroeder); "
                   "|I_n(021)| = A006318(n-1)",
                   seq(c.count_021), start_index=0, default_terms=18),
        CrossCheck("A000111", "avoiders of 000 (Euler up/down); "
                   "|I_n(000)| = A000111(n+1)",
                   seq(c.count_000), start_index=2, default_terms=14),
        CrossCheck("A000079", "avoiders of 001 (powers of two); "
                   "|I_n(001)| = A000079(n-1)",
                   seq(c.count_001), start_index=0, default_terms=24),
        CrossCheck("A000110", "avoiders of 011 (Bell); "
                   "|I_n(011)| = A000110(n)",
                   seq(c.bell), start_index=1, default_terms=16),
        CrossCheck("A113227", "avoiders of 101 and of 110; "
                   "|I_n(101)| = A113227(n)",
                   seq(c.count_101_110), start_index=1, default_terms=12),
        CrossCheck("A200753", "avoiders of 102; |I_n(102)| = A200753(n)",
                   seq(c.count_102), start_index=1, default_terms=12),
        CrossCheck("A263777", "avoiders of 201 and of 210; "
                   "|I_n(201)| = A263777(n)",
                   seq(c.count_201_210), start_index=1, default_terms=12),
        CrossCheck("A263778", "avoiders of 120 (brute force); "
                   "|I_n(120)| = A263778(n)",
                   lambda m: avoidance_sequence(["120"], m),
                   start_index=1, default_terms=9),
        CrossCheck("A263779", "avoiders of 010 (brute force); "
                   "|I_n(010)| = A263779(n)",
                   lambda m: avoidance_sequence(["010"], m),
                   start_index=1, default_terms=9),
        CrossCheck("A263780", "avoiders of 100 (brute force); "
                   "|I_n(100)| = A263780(n)",
                   lambda m: avoidance_sequence(["100"], m),
                   start_index=1, default_terms=9),
    ]
    return {ck.sequence_id: ck for ck in checks}


CROSSCHECKS: dict[str, CrossCheck] = _crosschecks()


def run_crosscheck(sequence_id: str, *, n_terms: int | None = None,
                   source: str | None = None, offline: bool = True,
                   cache_dir: str | None = None) -> VerdictReport:
    """Run a registered cross-check by A-number."""
    if sequence_id not in CROSSCHECKS:
        raise ValueError(f"no registered cross-check for {sequence_id!r}; "
                         f"known: {sorted(CROSSCHECKS)}")
    ck = CROSSCHECKS[sequence_id]
    m = n_terms if n_terms is not None else ck.default_terms
    return oeis_crosscheck(ck.compute(m), sequence_id,
                           start_index=ck.start_index, source=source,
                           offline=offline, cache_dir=cache_dir)


# -- the full default suite ------------------------------------------------------------------


def run_suite(name: str, n_max: int = 8) -> list[VerdictReport]:
    """Run a named suite, or every suite with ``all``.

    The default suite is the release gate: both Wilf pairs, every claim,
    both conjectures, and the Callan identity.
    """
    if name == "all":
        reports = [
            check_wilf("201", "210", n_max),
            check_wilf("101", "110", n_max),
        ]
        for claim in CLAIMS:
            reports.append(check_equidistribution(claim, n_max))
        reports.append(run_conjecture("entringer", n_max))
        reports.append(run_conjecture("schroder_ascents", n_max))
        reports.append(check_callan_identity(max(n_max, 10)))
        return reports
    if name == "wilf":
        return [check_wilf("201", "210", n_max),
                check_wilf("101", "110", n_max)]
    if name == "callan_identity":
        return [check_callan_identity(n_max)]
    if name in CLAIMS:
        return [check_equidistribution(name, n_max)]
    raise ValueError(f"unknown suite {name!r}; known: all, wilf, "
                     f"callan_identity, and the claims {sorted(CLAIMS)}")
