"""Orbits of the interchange relations, canonical representatives, Fibonacci
class sizes, and the class-counting formulas and series.

Orbits are computed by breadth-first closure over the move relation with a
visited set; member ordering is always lexicographic, independent of
traversal order. The memory guard is twofold: an explicit member cap
(default 10**7) and, when the SALIENT_LIMIT_MB environment variable is set,
an approximate byte budget for the visited set.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import partial

from salient import series
from salient.errors import (DomainError, GuardExceeded, InternalConsistencyError,
                            OrbitOverflowError)
from salient.words import (MultisetSpec, Word, check_permutation, check_word,
                           consecutive_moves, fibonacci, geq_j_moves,
                           _is_salient)

CONSECUTIVE = "consecutive"
DEFAULT_ORBIT_CAP = 10_000_000
DEFAULT_BRUTE_N = 8
DEFAULT_SINGLETON_BRUTE_N = 9
DEFAULT_MULTISET_TOTAL = 10


@dataclass(frozen=True)
class EquivalenceClass:
    """An orbit: lexicographically sorted members plus the canonical one."""

    members: tuple[Word, ...]
    representative: Word
    size: int

    def __contains__(self, word) -> bool:
        return tuple(word) in self.members


@dataclass(frozen=True)
class SegmentDecomposition:
    """Maximal runs of consecutive integers whose concatenation lies in the
    class; the class factors as the product of the segment classes."""

    segments: tuple[Word, ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.segments)


def parse_relation(relation: str) -> tuple[str, int | None]:
    """Normalize a relation name: "consecutive" or "geq:J" with J >= 2."""
    if relation == CONSECUTIVE:
        return CONSECUTIVE, None
    if relation.startswith("geq:"):
        try:
            j = int(relation[4:])
        except ValueError:
            raise DomainError(f"bad relation {relation!r}") from None
        if j < 2:
            raise DomainError("geq relation needs j >= 2")
        return "geq", j
    raise DomainError(f"unknown relation {relation!r}")


def _moves_for(relation: str):
    kind, j = parse_relation(relation)
    if kind == CONSECUTIVE:
        return consecutive_moves
    return partial(geq_j_moves, j=j)


def _orbit_cap(word_length: int, max_members: int | None) -> int:
    cap = DEFAULT_ORBIT_CAP if max_members is None else max_members
    limit_mb = os.environ.get("SALIENT_LIMIT_MB")
    if limit_mb:
        try:
            budget = int(limit_mb)
        except ValueError:
            raise DomainError(
                f"SALIENT_LIMIT_MB must be an integer, got {limit_mb!r}") from None
        # rough per-member footprint: tuple header + letters + set slot
        per_member = 150 + 8 * word_length
        cap = min(cap, budget * 2 ** 20 // per_member)
    return cap


def class_of(word, relation: str = CONSECUTIVE,
             max_members: int | None = None) -> EquivalenceClass:
    """Breadth-first closure of a word under the relation's moves.

    Multiset words are only meaningful for the consecutive relation; the
    geq relations require a permutation.
    """
    kind, _ = parse_relation(relation)
    w = check_word(word) if kind == CONSECUTIVE else check_permutation(word)
    moves = _moves_for(relation)
    cap = _orbit_cap(len(w), max_members)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for v in moves(u):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise OrbitOverflowError(
                            f"orbit of {w} exceeds {cap} members")
                    nxt.append(v)
        frontier = nxt
    members = tuple(sorted(seen))
    return EquivalenceClass(members=members, representative=members[0],
                            size=len(members))


def class_partition(n: int, relation: str = CONSECUTIVE,
                    max_n: int = DEFAULT_BRUTE_N) -> list[EquivalenceClass]:
    """All orbits of the relation on the permutations of [n].

    Classes come out sorted by representative because permutations are
    scanned in lexicographic order and the first unseen word of a class is
    its minimum.
    """
    if n > max_n:
        raise GuardExceeded(f"n = {n} exceeds brute-force limit {max_n}")
    seen: set[Word] = set()
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        if p in seen:
            continue
        cls = class_of(p, relation)
        seen.update(cls.members)
        out.append(cls)
    return out


def multiset_class_partition(spec: MultisetSpec,
                             max_total: int = DEFAULT_MULTISET_TOTAL
                             ) -> list[EquivalenceClass]:
    """All consecutive-relation orbits on the arrangements of a multiset."""
    if spec.total > max_total:
        raise GuardExceeded(
            f"multiset size {spec.total} exceeds limit {max_total}")
    seen: set[Word] = set()
    out = []
    for w in spec.words():
        if w in seen:
            continue
        cls = class_of(w)
        seen.update(cls.members)
        out.append(cls)
    return out


def salient_representative(word) -> Word:
    """The unique salient member of the word's class (its lexicographic
    minimum)."""
    w = check_permutation(word)
    cls = class_of(w)
    salient = [u for u in cls.members if _is_salient(u)]
    if len(salient) != 1:
        raise InternalConsistencyError(
            f"class of {w} has {len(salient)} salient members")
    return salient[0]


def _leading_run_length(w: Word) -> int:
    if len(w) < 2:
        return len(w)
    step = w[1] - w[0]
    if step not in (1, -1):
        return 1
    length = 2
    while length < len(w) and w[length] - w[length - 1] == step:
        length += 1
    return length


def segment_decomposition(word) -> SegmentDecomposition:
    """Split a permutation's class into maximal consecutive-run segments.

    Works by locating, inside the class, the member whose leading run of
    consecutive integers is longest, peeling that run off, and recursing on
    the remainder. Runs of length two are normalized to increasing order
    (the only ambiguity in the decomposition).
    """
    w = check_word(word)
    if len(set(w)) != len(w):
        raise DomainError("segment decomposition needs distinct letters")
    segments: list[Word] = []
    rest = w
    while rest:
        best_len = 0
        best_member = None
        for u in class_of(rest).members:
            run = _leading_run_length(u)
            if run > best_len:
                best_len, best_member = run, u
        seg = best_member[:best_len]
        if best_len == 2 and seg[0] > seg[1]:
            seg = (seg[1], seg[0])
        segments.append(seg)
        rest = best_member[best_len:]
    return SegmentDecomposition(tuple(segments))


def class_size(word) -> int:
    """Size of the word's class as a product of Fibonacci numbers.

    Each segment of length m contributes a factor F(m+1); no orbit is
    materialized beyond the segment search, so this scales far past the
    breadth-first guard.
    """
    decomposition = segment_decomposition(word)
    out = 1
    for m in decomposition.lengths:
        out *= fibonacci(m + 1)
    return out


# ---------------------------------------------------------------------------
# counting formulas and series
# ---------------------------------------------------------------------------

def count_classes_brute(n: int, max_n: int = DEFAULT_BRUTE_N) -> int:
    """Number of consecutive-relation classes on permutations of [n], by
    scanning for salient permutations (one per class)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > max_n:
        raise GuardExceeded(f"n = {n} exceeds brute-force limit {max_n}")
    return sum(1 for p in itertools.permutations(range(1, n + 1))
               if _is_salient(p))


def f_inclusion_exclusion(n: int) -> int:
    """Class count by inclusion-exclusion:
    sum over j of (-1)^j (n-j)! C(n-j, j)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return sum((-1) ** j * math.factorial(n - j) * math.comb(n - j, j)
               for j in range(n // 2 + 1))


def f_series(order: int) -> list[int]:
    """Coefficients of x^0..x^order of sum over m of m! (x (1 - x))^m."""
    if order < 0:
        raise DomainError("order must be >= 0")
    out = [0] * (order + 1)
    fact = 1
    for m in range(order + 1):
        if m:
            fact *= m
        for i in range(min(m, order - m) + 1):
            out[m + i] += fact * (-1) ** i * math.comb(m, i)
    return out


def count_singletons(n: int, max_n: int = DEFAULT_SINGLETON_BRUTE_N) -> int:
    """Permutations of [n] whose adjacent letters always differ by >= 2;
    these are exactly the one-element classes."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > max_n:
        raise GuardExceeded(f"n = {n} exceeds brute-force limit {max_n}")
    if n == 0:
        return 1
    return sum(1 for p in itertools.permutations(range(1, n + 1))
               if all(abs(a - b) >= 2 for a, b in zip(p, p[1:])))


def singleton_series(order: int) -> list[int]:
    """Coefficients of x^0..x^order of sum over m of m! (x(1-x)/(1+x))^m."""
    if order < 0:
        raise DomainError("order must be >= 0")
    base = series.expand_rational([0, 1, -1], [1, 1], order)
    out = [0] * (order + 1)
    out[0] = 1
    power = [1] + [0] * order
    fact = 1
    for m in range(1, order + 1):
        power = _poly_mul_trunc(power, base, order)
        fact *= m
        for i in range(m, order + 1):
            out[i] += fact * power[i]
    return out


def _poly_mul_trunc(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ca in enumerate(a):
        if ca:
            for j in range(min(len(b), order + 1 - i)):
                out[i + j] += ca * b[j]
    return out


def f_j_count(n: int, j: int, method: str = "formula",
              max_brute_n: int = DEFAULT_BRUTE_N) -> int:
    """Number of classes of the swap-when-differing-by-at-least-j relation.

    The formula branch returns n! for n <= j and j! * j^(n-j) otherwise; the
    brute branch counts breadth-first orbits directly.
    """
    if n < 0 or j < 2:
        raise DomainError("need n >= 0 and j >= 2")
    if method == "formula":
        if n <= j:
            return math.factorial(n)
        return math.factorial(j) * j ** (n - j)
    if method == "brute":
        return len(class_partition(n, relation=f"geq:{j}", max_n=max_brute_n))
    raise DomainError(f"unknown method {method!r}")
