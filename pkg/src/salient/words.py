"""Words, descent sets, salience, and the elementary interchange moves.

A word is a tuple of positive integers (letters are 1-based). A permutation
of [n] = {1, ..., n} is a word containing each of 1..n exactly once; multiset
words repeat letters according to a MultisetSpec. Words compare
lexicographically by their letter sequence, and that order is the tie-breaker
everywhere ("lexicographically least member", canonical representatives).

Two families of moves act on words:

* consecutive moves swap adjacent letters whose values differ by exactly one,
* geq-j moves (permutations only, j >= 2) swap adjacent letters whose values
  differ by at least j.

Serialization: a word prints as a plain digit string when every letter is at
most 9 ("13254") and as comma-separated integers otherwise ("10,2,1").
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from salient.errors import DomainError

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# construction, validation, serialization
# ---------------------------------------------------------------------------

def check_word(word) -> Word:
    """Validate letters and normalize to a tuple.

    >>> check_word([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(word)
    for a in w:
        if not isinstance(a, int) or a < 1:
            raise DomainError(f"letters must be integers >= 1, got {a!r}")
    return w


def is_permutation(word) -> bool:
    """True if the word contains each of 1..n exactly once.

    The empty word is the (unique) permutation of the empty set.

    >>> [is_permutation(w) for w in [(), (1, 2), (2, 2), (1, 3)]]
    [True, True, False, False]
    """
    w = tuple(word)
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(word) -> Word:
    w = check_word(word)
    if not is_permutation(w):
        raise DomainError(f"{format_word(w)!r} is not a permutation of [n]")
    return w


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def reverse(word) -> Word:
    return tuple(reversed(tuple(word)))


def parse_word(text: str) -> Word:
    """Parse the serialized form of a word.

    >>> parse_word("13254")
    (1, 3, 2, 5, 4)
    >>> parse_word("10,2,1")
    (10, 2, 1)
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        letters = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"cannot parse word {text!r}") from None
    return check_word(letters)


def format_word(word) -> str:
    w = tuple(word)
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


# ---------------------------------------------------------------------------
# descents and salience
# ---------------------------------------------------------------------------

def descent_set(word) -> frozenset[int]:
    """Positions i (1-based) where letter i exceeds letter i+1.

    >>> sorted(descent_set((2, 1, 3, 5, 4)))
    [1, 4]
    >>> descent_set(())
    frozenset()
    """
    w = check_word(word)
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def _is_salient(w: Word) -> bool:
    # no unchecked validation; shared by the brute-force scans
    n = len(w)
    for i in range(n - 1):
        if w[i] == w[i + 1] + 1:
            return False
    for i in range(n - 2):
        if w[i] == w[i + 1] + 2 and w[i] == w[i + 2] + 1:
            return False
    return True


def is_salient(word) -> bool:
    """True if no adjacent descent by exactly one and no factor (c+2, c, c+1).

    Salient permutations are the canonical representatives of the
    consecutive-interchange equivalence classes: each class contains exactly
    one, and it is the lexicographic minimum of the class.

    >>> [is_salient(w) for w in [(1, 2, 3, 4), (2, 1, 3, 4), (3, 1, 2)]]
    [True, False, False]
    """
    return _is_salient(check_permutation(word))


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

def consecutive_moves(word) -> set[Word]:
    """All words reachable by one swap of adjacent letters differing by 1.

    >>> sorted(consecutive_moves((1, 2, 3)))
    [(1, 3, 2), (2, 1, 3)]
    """
    w = check_word(word)
    out = set()
    for i in range(len(w) - 1):
        if abs(w[i] - w[i + 1]) == 1:
            out.add(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
    return out


def geq_j_moves(word, j: int) -> set[Word]:
    """All words reachable by one swap of adjacent letters differing by >= j.

    Defined for permutations only; j must be at least 2.

    >>> sorted(geq_j_moves((1, 3, 2), 2))
    [(3, 1, 2)]
    """
    if j < 2:
        raise DomainError(f"j must be >= 2, got {j}")
    w = check_permutation(word)
    out = set()
    for i in range(len(w) - 1):
        if abs(w[i] - w[i + 1]) >= j:
            out.add(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
    return out


# ---------------------------------------------------------------------------
# sparse subsets and Fibonacci numbers
# ---------------------------------------------------------------------------

def is_sparse(ranks) -> bool:
    """True if the set contains no two consecutive integers."""
    s = sorted(ranks)
    return all(b - a >= 2 for a, b in zip(s, s[1:]))


def sparse_subsets(n: int) -> list[frozenset[int]]:
    """All sparse subsets of [n-1]; there are F(n+1) of them.

    >>> [sorted(s) for s in sparse_subsets(3)]
    [[], [1], [2]]
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    subs: list[tuple[int, ...]] = [()]
    for v in range(1, n):
        subs = subs + [s + (v,) for s in subs if not s or s[-1] < v - 1]
    subs.sort(key=lambda s: (len(s), s))
    return [frozenset(s) for s in subs]


def fibonacci(n: int) -> int:
    """Fibonacci numbers with F(1) = F(2) = 1 (and F(0) = 0).

    >>> [fibonacci(k) for k in range(1, 9)]
    [1, 1, 2, 3, 5, 8, 13, 21]
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# ---------------------------------------------------------------------------
# multisets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultisetSpec:
    """A multiset {1^r1, ..., n^rn}, stored as sorted (value, count) pairs.

    Zero counts are dropped; gaps in the value support are allowed, e.g.
    {1^2, 2, 4^2}. Serialized form: "1:2,2:1,3:2".
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for v, r in self.counts:
            if not isinstance(v, int) or v < 1:
                raise DomainError(f"multiset values must be >= 1, got {v!r}")
            if not isinstance(r, int) or r < 1:
                raise DomainError(f"counts must be >= 1, got {r!r}")
            if v in seen:
                raise DomainError(f"duplicate value {v}")
            seen.add(v)
        if tuple(sorted(self.counts)) != self.counts:
            raise DomainError("counts must be sorted by value")

    @classmethod
    def from_mapping(cls, mapping) -> "MultisetSpec":
        pairs = tuple(sorted((v, r) for v, r in dict(mapping).items() if r))
        return cls(pairs)

    @classmethod
    def from_word(cls, word) -> "MultisetSpec":
        w = check_word(word)
        counts: dict[int, int] = {}
        for a in w:
            counts[a] = counts.get(a, 0) + 1
        return cls.from_mapping(counts)

    @classmethod
    def parse(cls, text: str) -> "MultisetSpec":
        """Parse "1:2,2:1,3:2" into a spec.

        >>> MultisetSpec.parse("1:2,2:1,3:2").total
        5
        """
        counts: dict[int, int] = {}
        text = text.strip()
        if not text:
            return cls(())
        for part in text.split(","):
            try:
                v, r = part.split(":")
                counts[int(v)] = counts.get(int(v), 0) + int(r)
            except ValueError:
                raise DomainError(f"cannot parse multiset {text!r}") from None
        return cls.from_mapping(counts)

    def format(self) -> str:
        return ",".join(f"{v}:{r}" for v, r in self.counts)

    @property
    def total(self) -> int:
        return sum(r for _, r in self.counts)

    @property
    def max_value(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    def multiplicity(self, v: int) -> int:
        return dict(self.counts).get(v, 0)

    def caps_vector(self) -> tuple[int, ...]:
        """Multiplicities of 1..max_value, zeros filling gaps."""
        m = dict(self.counts)
        return tuple(m.get(v, 0) for v in range(1, self.max_value + 1))

    def is_word_of(self, word) -> bool:
        return MultisetSpec.from_word(word) == self

    def words(self) -> Iterator[Word]:
        """All distinct arrangements, in lexicographic order."""
        counts = dict(self.counts)
        values = sorted(counts)
        n = self.total
        word: list[int] = []

        def rec() -> Iterator[Word]:
            if len(word) == n:
                yield tuple(word)
                return
            for v in values:
                if counts[v]:
                    counts[v] -= 1
                    word.append(v)
                    yield from rec()
                    word.pop()
                    counts[v] += 1

        yield from rec()
