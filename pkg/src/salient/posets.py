"""Graded posets, natural partial orders, flag f/h-vectors, order-ideal
lattices, the two-per-rank lattice family L(gamma), and the stretching and
proliferation constructions.

Conventions:

* GradedPoset elements are indexed 0..size-1 with optional string labels;
  covers always raise rank by exactly one.
* NaturalPoset lives on labels 1..n with the partial order refining the
  integer order; internally it is a tuple of down-set bitmasks (bit v-1 for
  label v).
* Rank subsets S of [n-1] appear as frozensets in the public API and as
  bitmasks (bit i-1 for rank i) in vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import json

from salient import _kernels
from salient.errors import (DomainError, GuardExceeded,
                            InternalConsistencyError)
from salient.words import Word

DEFAULT_ISO_SIZE = 24
DEFAULT_IDEAL_CAP = 200_000
DEFAULT_EXTENSION_LIST_SIZE = 12
DEFAULT_EXTENSION_COUNT_SIZE = 20
DEFAULT_DESCENT_SIZE = 14
DEFAULT_NATURAL_SWEEP = 7


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from_ranks(ranks, n: int) -> int:
    mask = 0
    for i in ranks:
        if not 1 <= i <= n - 1:
            raise DomainError(f"rank {i} outside [1, {n - 1}]")
        mask |= 1 << (i - 1)
    return mask


def ranks_from_mask(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in _iter_bits(mask))


# ---------------------------------------------------------------------------
# canonical forms (shared by both poset flavors)
# ---------------------------------------------------------------------------

def _heights(n: int, below) -> list[int]:
    heights = [0] * n
    for i in sorted(range(n), key=lambda e: bin(below[e]).count("1")):
        heights[i] = 1 + max((heights[j] for j in _iter_bits(below[i])),
                             default=-1)
    return heights


def _refine_colors(n: int, below, above, init) -> list[int]:
    ranking = {c: r for r, c in enumerate(sorted(set(init)))}
    colors = [ranking[c] for c in init]
    while True:
        sigs = []
        for i in range(n):
            down_sig = tuple(sorted(colors[j] for j in _iter_bits(below[i])))
            up_sig = tuple(sorted(colors[j] for j in _iter_bits(above[i])))
            sigs.append((colors[i], down_sig, up_sig))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_relation_key(n: int, below, init_colors=None) -> tuple:
    """Canonical certificate of a poset given as strict down-set bitmasks.

    Two posets are isomorphic exactly when their keys agree. The search
    relabels elements color class by color class, keeping the
    lexicographically least relation encoding; colors come from iterated
    invariant refinement seeded with element heights (plus any caller
    colors, which must themselves be isomorphism-invariant).
    """
    if n == 0:
        return (0, (), ())
    heights = _heights(n, below)
    if init_colors is None:
        init = heights
    else:
        init = [(h, c) for h, c in zip(heights, init_colors)]
    above = [0] * n
    for i in range(n):
        for j in _iter_bits(below[i]):
            above[j] |= 1 << i
    colors = _refine_colors(n, below, above, init)
    color_seq = sorted(colors)

    best: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []
    used = [False] * n

    def rec(pos: int) -> None:
        nonlocal best
        if pos == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        req = color_seq[pos]
        grouped: dict[int, list[int]] = {}
        for i in range(n):
            if used[i] or colors[i] != req:
                continue
            row = 0
            for idx, p in enumerate(placed):
                if below[i] >> p & 1:
                    row |= 1 << (2 * idx)
                if below[p] >> i & 1:
                    row |= 1 << (2 * idx + 1)
            grouped.setdefault(row, []).append(i)
        for row in sorted(grouped):
            if best is not None:
                rows.append(row)
                worse = rows > best[: pos + 1]
                rows.pop()
                if worse:
                    break
            for i in grouped[row]:
                used[i] = True
                placed.append(i)
                rows.append(row)
                rec(pos + 1)
                rows.pop()
                placed.pop()
                used[i] = False

    rec(0)
    return (n, tuple(color_seq), tuple(best))


# ---------------------------------------------------------------------------
# graded posets
# ---------------------------------------------------------------------------

class GradedPoset:
    """Finite graded poset: ranked elements plus rank-increasing covers."""

    __slots__ = ("ranks", "covers", "labels", "_above", "_alpha", "_beta")

    def __init__(self, ranks, covers, labels=None):
        ranks = tuple(ranks)
        covers = tuple(sorted(tuple(c) for c in covers))
        size = len(ranks)
        for r in ranks:
            if not isinstance(r, int) or r < 0:
                raise DomainError(f"bad rank {r!r}")
        for lo, hi in covers:
            if not (0 <= lo < size and 0 <= hi < size):
                raise DomainError(f"cover ({lo}, {hi}) out of range")
            if ranks[hi] != ranks[lo] + 1:
                raise DomainError(
                    f"cover ({lo}, {hi}) does not raise rank by one")
        if labels is None:
            labels = tuple(str(i) for i in range(size))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != size or len(set(labels)) != size:
                raise DomainError("labels must be distinct, one per element")
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_above", None)
        object.__setattr__(self, "_alpha", None)
        object.__setattr__(self, "_beta", None)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoset is immutable")

    # -- basic structure

    @property
    def size(self) -> int:
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return max(self.ranks, default=0)

    def layers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for e, r in enumerate(self.ranks):
            out[r].append(e)
        return out

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers())

    def up_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.size)]
        for lo, hi in self.covers:
            out[lo].append(hi)
        return out

    def down_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.size)]
        for lo, hi in self.covers:
            out[hi].append(lo)
        return out

    def above_masks(self) -> list[int]:
        """above_masks()[e] has a bit for every element strictly above e."""
        if self._above is None:
            up = self.up_covers()
            above = [0] * self.size
            order = sorted(range(self.size), key=lambda e: -self.ranks[e])
            for e in order:
                m = 0
                for u in up[e]:
                    m |= (1 << u) | above[u]
                above[e] = m
            object.__setattr__(self, "_above", above)
        return self._above

    def below_masks(self) -> list[int]:
        below = [0] * self.size
        for i, m in enumerate(self.above_masks()):
            for j in _iter_bits(m):
                below[j] |= 1 << i
        return below

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.above_masks()[a] >> b & 1)

    # -- boundedness

    @property
    def bottom(self) -> int | None:
        zeros = [e for e, r in enumerate(self.ranks) if r == 0]
        if len(zeros) != 1:
            return None
        e = zeros[0]
        if bin(self.above_masks()[e]).count("1") == self.size - 1:
            return e
        return None

    @property
    def top(self) -> int | None:
        n = self.rank
        tops = [e for e, r in enumerate(self.ranks) if r == n]
        if len(tops) != 1:
            return None
        e = tops[0]
        below = sum(1 for m in self.above_masks() if m >> e & 1)
        if below == self.size - 1:
            return e
        return None

    @property
    def has_bottom(self) -> bool:
        return self.bottom is not None

    @property
    def has_top(self) -> bool:
        return self.top is not None

    def is_bounded_graded(self) -> bool:
        """Bottom, top, and every maximal chain running between them."""
        if self.size == 0 or not self.has_bottom or not self.has_top:
            return False
        up = self.up_covers()
        down = self.down_covers()
        n = self.rank
        for e in range(self.size):
            if self.ranks[e] < n and not up[e]:
                return False
            if self.ranks[e] > 0 and not down[e]:
                return False
        return True

    def _require_bounded(self) -> None:
        if not self.is_bounded_graded():
            raise DomainError("operation needs a graded poset with bottom "
                              "and top on every maximal chain")

    # -- flag vectors

    def flag_alpha_vector(self) -> list[int]:
        """alpha over all subsets of [rank-1], indexed by rank-set bitmask."""
        if self._alpha is not None:
            return self._alpha
        self._require_bounded()
        n = self.rank
        if n <= 1:
            alpha = [1]
        else:
            layers = self.layers()
            above = self.above_masks()
            alpha = [0] * (1 << (n - 1))
            alpha[0] = 1

            def extend(last: int, vec: list[int], smask: int) -> None:
                for r in range(last + 1, n):
                    prev = layers[last]
                    nvec = []
                    for e in layers[r]:
                        tot = 0
                        for k, p in enumerate(prev):
                            if above[p] >> e & 1:
                                tot += vec[k]
                        nvec.append(tot)
                    m2 = smask | (1 << (r - 1))
                    alpha[m2] = sum(nvec)
                    extend(r, nvec, m2)

            for r in range(1, n):
                vec = [1] * len(layers[r])
                alpha[1 << (r - 1)] = len(layers[r])
                extend(r, vec, 1 << (r - 1))
        object.__setattr__(self, "_alpha", alpha)
        return alpha

    def flag_beta_vector(self) -> list[int]:
        if self._beta is not None:
            return self._beta
        alpha = self.flag_alpha_vector()
        beta = alpha.copy()
        nbits = max(self.rank - 1, 0)
        for b in range(nbits):
            bit = 1 << b
            for s in range(len(beta)):
                if s & bit:
                    beta[s] -= beta[s ^ bit]
        object.__setattr__(self, "_beta", beta)
        return beta

    def alpha(self, ranks) -> int:
        return self.flag_alpha_vector()[mask_from_ranks(ranks, self.rank)]

    def beta(self, ranks) -> int:
        return self.flag_beta_vector()[mask_from_ranks(ranks, self.rank)]

    def flag_rows(self) -> list[tuple[tuple[int, ...], int, int]]:
        alpha = self.flag_alpha_vector()
        beta = self.flag_beta_vector()
        out = []
        for mask in range(len(alpha)):
            s = tuple(sorted(ranks_from_mask(mask)))
            out.append((s, alpha[mask], beta[mask]))
        out.sort(key=lambda row: (len(row[0]), row[0]))
        return out

    def is_multiplicity_free(self) -> bool:
        return all(-1 <= b <= 1 for b in self.flag_beta_vector())

    def has_at_most_two_per_rank(self) -> bool:
        return all(s <= 2 for s in self.layer_sizes())

    # -- constructions

    def stretch(self, i: int) -> "GradedPoset":
        """Insert a copy of rank-i layer just above it, each copy over its
        original only; covers out of rank i move to the copies."""
        self._require_bounded()
        n = self.rank
        if not 1 <= i <= n - 1:
            raise DomainError(f"stretch rank {i} outside [1, {n - 1}]")
        layer = [e for e in range(self.size) if self.ranks[e] == i]
        copy_of = {t: self.size + idx for idx, t in enumerate(layer)}
        ranks = [r if r <= i else r + 1 for r in self.ranks]
        ranks += [i + 1] * len(layer)
        covers = []
        for lo, hi in self.covers:
            if self.ranks[lo] == i:
                covers.append((copy_of[lo], hi))
            else:
                covers.append((lo, hi))
        covers += [(t, copy_of[t]) for t in layer]
        labels = list(self.labels) + [f"{self.labels[t]}'" for t in layer]
        return GradedPoset(ranks, covers, labels)

    def proliferate(self, i: int) -> "GradedPoset":
        """Insert a copy of rank-i layer with complete bipartite covers from
        the originals; the result is the ordinal sum of the two sections."""
        self._require_bounded()
        n = self.rank
        if not 1 <= i <= n - 1:
            raise DomainError(f"proliferate rank {i} outside [1, {n - 1}]")
        layer = [e for e in range(self.size) if self.ranks[e] == i]
        copy_of = {t: self.size + idx for idx, t in enumerate(layer)}
        ranks = [r if r <= i else r + 1 for r in self.ranks]
        ranks += [i + 1] * len(layer)
        covers = []
        for lo, hi in self.covers:
            if self.ranks[lo] == i:
                covers.append((copy_of[lo], hi))
            else:
                covers.append((lo, hi))
        covers += [(s, copy_of[t]) for s in layer for t in layer]
        labels = list(self.labels) + [f"{self.labels[t]}'" for t in layer]
        return GradedPoset(ranks, covers, labels)

    def ordinal_sum(self, other: "GradedPoset") -> "GradedPoset":
        """Stack other above self: every element of self below every element
        of other. For bounded posets this adds the single cover top..bottom."""
        self._require_bounded()
        other._require_bounded()
        shift = self.size
        lift = self.rank + 1
        ranks = list(self.ranks) + [r + lift for r in other.ranks]
        covers = list(self.covers)
        covers += [(lo + shift, hi + shift) for lo, hi in other.covers]
        covers.append((self.top, other.bottom + shift))
        labels = ([f"a:{x}" for x in self.labels]
                  + [f"b:{x}" for x in other.labels])
        return GradedPoset(ranks, covers, labels)

    def lower_section(self, i: int) -> "GradedPoset":
        """Ranks 0..i of the poset with a new top adjoined above rank i."""
        self._require_bounded()
        keep = [e for e in range(self.size) if self.ranks[e] <= i]
        index = {e: k for k, e in enumerate(keep)}
        ranks = [self.ranks[e] for e in keep] + [i + 1]
        top = len(keep)
        covers = [(index[lo], index[hi]) for lo, hi in self.covers
                  if self.ranks[hi] <= i]
        covers += [(index[e], top) for e in keep if self.ranks[e] == i]
        labels = [self.labels[e] for e in keep] + ["+top"]
        return GradedPoset(ranks, covers, labels)

    def upper_section(self, i: int) -> "GradedPoset":
        """Ranks i..n of the poset with a new bottom adjoined below rank i."""
        self._require_bounded()
        keep = [e for e in range(self.size) if self.ranks[e] >= i]
        index = {e: k + 1 for k, e in enumerate(keep)}
        ranks = [0] + [self.ranks[e] - i + 1 for e in keep]
        covers = [(index[lo], index[hi]) for lo, hi in self.covers
                  if self.ranks[lo] >= i]
        covers += [(0, index[e]) for e in keep if self.ranks[e] == i]
        labels = ["+bot"] + [self.labels[e] for e in keep]
        return GradedPoset(ranks, covers, labels)

    # -- isomorphism

    def canonical_key(self, max_size: int = DEFAULT_ISO_SIZE) -> tuple:
        if self.size > max_size:
            raise GuardExceeded(
                f"canonical form limited to {max_size} elements")
        return canonical_relation_key(self.size, self.below_masks())

    # -- serialization

    def to_json(self) -> str:
        data = {
            "elements": list(self.labels),
            "ranks": {self.labels[e]: self.ranks[e]
                      for e in range(self.size)},
            "covers": [[self.labels[lo], self.labels[hi]]
                       for lo, hi in self.covers],
        }
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "GradedPoset":
        try:
            data = json.loads(text)
            labels = [str(x) for x in data["elements"]]
            index = {lab: e for e, lab in enumerate(labels)}
            ranks = [int(data["ranks"][lab]) for lab in labels]
            covers = [(index[str(lo)], index[str(hi)])
                      for lo, hi in data["covers"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad poset JSON: {exc}") from None
        return cls(ranks, covers, labels)

    def to_dot(self) -> str:
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for layer in self.layers():
            if layer:
                same = " ".join(f'"{self.labels[e]}"' for e in layer)
                lines.append(f"  {{ rank=same; {same} }}")
        for lo, hi in self.covers:
            lines.append(f'  "{self.labels[lo]}" -> "{self.labels[hi]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (isinstance(other, GradedPoset)
                and self.ranks == other.ranks
                and self.covers == other.covers
                and self.labels == other.labels)

    __hash__ = None

    def __repr__(self):
        return (f"GradedPoset(rank={self.rank}, size={self.size}, "
                f"layers={self.layer_sizes()})")

    # -- stock posets

    @classmethod
    def chain(cls, n: int) -> "GradedPoset":
        return cls(range(n + 1), [(i, i + 1) for i in range(n)])

    @classmethod
    def boolean_lattice(cls, k: int) -> "GradedPoset":
        masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))
        index = {m: e for e, m in enumerate(masks)}
        ranks = [bin(m).count("1") for m in masks]
        covers = []
        for m in masks:
            for b in range(k):
                if not m >> b & 1:
                    covers.append((index[m], index[m | (1 << b)]))
        labels = ["{" + ",".join(str(b + 1) for b in _iter_bits(m)) + "}"
                  for m in masks]
        return cls(ranks, covers, labels)


# ---------------------------------------------------------------------------
# natural posets on [n]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NaturalPoset:
    """Partial order on labels 1..n refining the integer order."""

    n: int
    down: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.down) != self.n:
            raise DomainError("need one down-set mask per element")
        for i, m in enumerate(self.down):
            if m >> i:
                raise DomainError(
                    f"element {i + 1} has a larger element below it")
            for j in _iter_bits(m):
                if self.down[j] & ~m:
                    raise DomainError("down-sets are not transitively closed")

    @classmethod
    def from_relations(cls, n: int, pairs) -> "NaturalPoset":
        """Build from strict relations (a, b) meaning a below b, 1-based."""
        direct = [0] * n
        for a, b in pairs:
            if not (1 <= a < b <= n):
                raise DomainError(f"relation ({a}, {b}) violates naturality")
            direct[b - 1] |= 1 << (a - 1)
        down = [0] * n
        for i in range(n):
            acc = direct[i]
            for j in _iter_bits(direct[i]):
                acc |= down[j]
            down[i] = acc
        return cls(n, tuple(down))

    @classmethod
    def antichain(cls, n: int) -> "NaturalPoset":
        return cls(n, (0,) * n)

    @classmethod
    def chain(cls, n: int) -> "NaturalPoset":
        return cls(n, tuple((1 << i) - 1 for i in range(n)))

    # -- structure

    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for i, m in enumerate(self.down):
            for j in _iter_bits(m):
                up[j] |= 1 << i
        return tuple(up)

    def less(self, a: int, b: int) -> bool:
        """Strict order between 1-based labels."""
        return bool(self.down[b - 1] >> (a - 1) & 1)

    def relations(self) -> list[tuple[int, int]]:
        return sorted((j + 1, i + 1)
                      for i in range(self.n) for j in _iter_bits(self.down[i]))

    def cover_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in _iter_bits(self.down[i]):
                if not any(self.down[l] >> j & 1
                           for l in _iter_bits(self.down[i])):
                    out.append((j + 1, i + 1))
        return sorted(out)

    # -- ideals and the Birkhoff lattice

    def ideal_masks(self, cap: int | None = None) -> list[int]:
        """All order ideals as bitmasks, sorted by (size, mask)."""
        ideals = [0]
        for i in range(self.n):
            bit = 1 << i
            di = self.down[i]
            ideals += [m | bit for m in ideals if not di & ~m]
            if cap is not None and len(ideals) > cap:
                raise GuardExceeded(f"more than {cap} order ideals")
        ideals.sort(key=lambda m: (bin(m).count("1"), m))
        return ideals

    def ideal_count(self) -> int:
        return len(self.ideal_masks())

    def ideal_size_profile(self) -> tuple[int, ...]:
        """Number of ideals of each size 0..n."""
        out = [0] * (self.n + 1)
        for m in self.ideal_masks():
            out[bin(m).count("1")] += 1
        return tuple(out)

    def ideals_lattice(self, max_size: int = DEFAULT_ISO_SIZE,
                       max_ideals: int = DEFAULT_IDEAL_CAP) -> GradedPoset:
        """The distributive lattice of order ideals, ranked by ideal size."""
        if self.n > max_size:
            raise GuardExceeded(
                f"ideal lattice limited to posets with {max_size} elements")
        ideals = self.ideal_masks(cap=max_ideals)
        index = {m: e for e, m in enumerate(ideals)}
        ranks = [bin(m).count("1") for m in ideals]
        covers = []
        for m in ideals:
            for i in range(self.n):
                bit = 1 << i
                if not m & bit and not self.down[i] & ~m:
                    covers.append((index[m], index[m | bit]))
        labels = ["{" + ",".join(str(b + 1) for b in _iter_bits(m)) + "}"
                  for m in ideals]
        return GradedPoset(ranks, covers, labels)

    def jq_flag_vectors(self) -> tuple[list[int], list[int]]:
        """(alpha, beta) of the ideal lattice, via the fast kernels."""
        return _kernels.natural_flag_vectors(self.n, self.down)

    # -- linear extensions

    def linear_extensions(self,
                          max_size: int = DEFAULT_EXTENSION_LIST_SIZE
                          ) -> list[Word]:
        """All linear extensions as 1-based words, lexicographically sorted."""
        if self.n > max_size:
            raise GuardExceeded(
                f"extension listing limited to {max_size} elements")
        n = self.n
        down = self.down
        out: list[Word] = []
        word: list[int] = []
        placed = 0

        def rec() -> None:
            nonlocal placed
            if len(word) == n:
                out.append(tuple(word))
                return
            for e in range(n):
                bit = 1 << e
                if placed & bit or down[e] & ~placed:
                    continue
                placed |= bit
                word.append(e + 1)
                rec()
                word.pop()
                placed ^= bit

        rec()
        return out

    def extension_count(self,
                        max_size: int = DEFAULT_EXTENSION_COUNT_SIZE) -> int:
        """Number of linear extensions, by dynamic programming over ideals."""
        if self.n > max_size:
            raise GuardExceeded(
                f"extension counting limited to {max_size} elements")
        up = self.up()
        counts = {0: 1}
        for ideal in self.ideal_masks():
            if ideal == 0:
                continue
            total = 0
            for i in _iter_bits(ideal):
                if not up[i] & ideal:
                    total += counts[ideal ^ (1 << i)]
            counts[ideal] = total
        return counts[(1 << self.n) - 1]

    def descent_vector(self, max_size: int = DEFAULT_DESCENT_SIZE) -> list[int]:
        """Linear extension counts grouped by descent set (bitmask index)."""
        if self.n > max_size:
            raise GuardExceeded(
                f"descent tabulation limited to {max_size} elements")
        return _kernels.descent_vector(self.n, self.down)

    def descent_statistics(self,
                           max_size: int = DEFAULT_DESCENT_SIZE
                           ) -> dict[frozenset[int], int]:
        vec = self.descent_vector(max_size=max_size)
        return {ranks_from_mask(mask): count
                for mask, count in enumerate(vec) if count}

    # -- order-theoretic predicates

    def is_two_plus_two_free(self) -> bool:
        """No induced pair of disjoint 2-chains with all cross pairs
        incomparable."""
        rels = [(a - 1, b - 1) for a, b in self.relations()]
        for a, b in rels:
            for c, d in rels:
                if len({a, b, c, d}) != 4:
                    continue
                if not (self._comparable(a, c) or self._comparable(a, d)
                        or self._comparable(b, c) or self._comparable(b, d)):
                    return False
        return True

    def is_width_le_two(self) -> bool:
        """No 3-element antichain."""
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self._comparable(a, b):
                    continue
                for c in range(b + 1, self.n):
                    if not (self._comparable(a, c) or self._comparable(b, c)):
                        return False
        return True

    def _comparable(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1 or self.down[i] >> j & 1)

    # -- combination and isomorphism

    def ordinal_sum(self, other: "NaturalPoset") -> "NaturalPoset":
        """Every element of self below every element of other; labels of
        other shift up by self.n (the result is again natural)."""
        base = (1 << self.n) - 1
        down = list(self.down)
        down += [(m << self.n) | base for m in other.down]
        return NaturalPoset(self.n + other.n, tuple(down))

    def canonical_key(self, max_size: int = DEFAULT_ISO_SIZE) -> tuple:
        if self.n > max_size:
            raise GuardExceeded(
                f"canonical form limited to {max_size} elements")
        return canonical_relation_key(self.n, self.down)

    def __repr__(self):
        return f"NaturalPoset(n={self.n}, relations={self.relations()})"


def are_isomorphic(first, second, max_size: int = DEFAULT_ISO_SIZE) -> bool:
    """Exact poset isomorphism via canonical forms.

    Accepts GradedPoset or NaturalPoset in any combination (the comparison
    forgets rank and labels, which are order-intrinsic anyway for bounded
    graded posets).
    """
    return (first.canonical_key(max_size=max_size)
            == second.canonical_key(max_size=max_size))


# ---------------------------------------------------------------------------
# commutation posets and the gamma family
# ---------------------------------------------------------------------------

def q_from_commuting_word(n: int) -> NaturalPoset:
    """The poset on 1..n with a below b exactly when b - a >= 2.

    Its linear extensions are precisely the words reachable from the
    identity by consecutive interchanges.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    down = tuple((1 << max(i - 1, 0)) - 1 for i in range(n))
    return NaturalPoset(n, down)


def check_gamma(gamma: str) -> str:
    """Validate a left/right construction word for the two-per-rank family.

    The word for a rank-n lattice has n-1 bits; the first bit is forced to 0
    and the second to 1 (the first two extension steps are unique up to
    isomorphism).
    """
    gamma = str(gamma)
    if any(c not in "01" for c in gamma):
        raise DomainError(f"gamma word must be over 0/1, got {gamma!r}")
    if len(gamma) >= 1 and gamma[0] != "0":
        raise DomainError("gamma must start with 0")
    if len(gamma) >= 2 and gamma[1] != "1":
        raise DomainError("the second gamma bit must be 1")
    return gamma


def gamma_words(rank: int) -> list[str]:
    """All valid gamma words for lattices of the given rank (2^(rank-3) of
    them for rank >= 3, one for rank 1 and 2)."""
    if rank < 1:
        raise DomainError("rank must be >= 1")
    if rank == 1:
        return [""]
    if rank == 2:
        return ["0"]
    tails = [""]
    for _ in range(rank - 3):
        tails = [t + b for t in tails for b in "01"]
    return ["01" + t for t in tails]


def lattice_from_gamma(gamma: str) -> GradedPoset:
    """Build the rank-(len(gamma)+1) lattice with two elements per interior
    rank by repeatedly adjoining an element over the left (bit 0) or right
    (bit 1) coatom plus a new top.

    The freshly adjoined element takes the side it was attached on; the old
    top takes the other side. Under this orientation the alternating word
    0101... yields the lattice of order ideals of q_from_commuting_word(n).
    """
    gamma = check_gamma(gamma)
    ranks = [0, 1]
    covers = [(0, 1)]
    top = 1
    left = right = 0
    for bit in gamma:
        c = left if bit == "0" else right
        x = len(ranks)
        ranks.append(ranks[c] + 1)
        covers.append((c, x))
        t = len(ranks)
        ranks.append(ranks[top] + 1)
        covers.append((x, t))
        covers.append((top, t))
        left, right = (x, top) if bit == "0" else (top, x)
        top = t
    return GradedPoset(ranks, covers)


def q_from_gamma(gamma: str) -> NaturalPoset:
    """The poset of join-irreducible elements of lattice_from_gamma, with its
    natural labeling along rank order."""
    lattice = lattice_from_gamma(gamma)
    down_counts = [0] * lattice.size
    for _, hi in lattice.covers:
        down_counts[hi] += 1
    irreducibles = [e for e in range(lattice.size) if down_counts[e] == 1]
    if len(irreducibles) != lattice.rank:
        raise InternalConsistencyError(
            "join-irreducible count differs from the lattice rank")
    irreducibles.sort(key=lambda e: (lattice.ranks[e], e))
    above = lattice.above_masks()
    pairs = []
    for ia, a in enumerate(irreducibles):
        for ib, b in enumerate(irreducibles):
            if above[a] >> b & 1:
                pairs.append((ia + 1, ib + 1))
    return NaturalPoset.from_relations(len(irreducibles), pairs)


# ---------------------------------------------------------------------------
# exhaustive and randomized generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _natural_down_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for downs in _natural_down_tuples(n - 1):
        ideals = [0]
        for i in range(n - 1):
            bit = 1 << i
            di = downs[i]
            ideals += [m | bit for m in ideals if not di & ~m]
        for d in ideals:
            out.append(downs + (d,))
    return tuple(out)


def all_natural_posets(n: int,
                       max_n: int = DEFAULT_NATURAL_SWEEP) -> list[NaturalPoset]:
    """Every natural partial order of [n] (A006455: 1, 1, 2, 7, 40, 357,
    4824, 96428, ...). Cached; guarded because the counts explode."""
    if n > max_n:
        raise GuardExceeded(f"natural-poset sweep limited to n <= {max_n}")
    return [NaturalPoset(n, downs) for downs in _natural_down_tuples(n)]


def all_posets_up_to_iso(n: int,
                         max_n: int = DEFAULT_NATURAL_SWEEP
                         ) -> list[NaturalPoset]:
    """One representative of every isomorphism class of n-element posets
    (A000112: 1, 1, 2, 5, 16, 63, 318, 2045, ...)."""
    seen = set()
    out = []
    for poset in all_natural_posets(n, max_n=max_n):
        key = poset.canonical_key()
        if key not in seen:
            seen.add(key)
            out.append(poset)
    return out


@lru_cache(maxsize=None)
def _bipartite_cover_patterns(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """All cover patterns between layers of sizes a (lower) and b (upper):
    per lower element a nonempty mask of upper neighbours, with every upper
    element covered. These are exactly the graded cover relations."""
    full = (1 << b) - 1
    out: list[tuple[int, ...]] = []

    def rec(i: int, acc: list[int], covered: int) -> None:
        if i == a:
            if covered == full:
                out.append(tuple(acc))
            return
        for mask in range(1, full + 1):
            acc.append(mask)
            rec(i + 1, acc, covered | mask)
            acc.pop()

    rec(0, [], 0)
    return tuple(out)


def _interior_profiles(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _interior_profiles(total - first, parts - 1):
            yield (first,) + rest


def all_bounded_graded_posets(max_rank: int, max_size: int,
                              guard_rank: int = 5,
                              guard_size: int = 10) -> list[GradedPoset]:
    """Every bounded graded poset with rank <= max_rank and at most max_size
    elements, one representative per isomorphism class.

    Exhaustive: layer size profiles, then all cover patterns between
    consecutive layers, then canonical-form rejection.
    """
    if max_rank > guard_rank or max_size > guard_size:
        raise GuardExceeded(
            f"exhaustive graded sweep limited to rank {guard_rank} "
            f"and {guard_size} elements")
    seen: set[tuple] = set()
    out: list[GradedPoset] = []
    for rank in range(1, max_rank + 1):
        interior = rank - 1
        budget = max_size - 2
        if interior > budget:
            continue
        for total in range(interior, budget + 1):
            for sizes in _interior_profiles(total, interior):
                all_sizes = (1,) + sizes + (1,)
                choices = [_bipartite_cover_patterns(all_sizes[r],
                                                     all_sizes[r + 1])
                           for r in range(rank)]

                def build(r: int, picked: list) -> None:
                    if r == rank:
                        ranks = []
                        offsets = []
                        for level, s in enumerate(all_sizes):
                            offsets.append(len(ranks))
                            ranks.extend([level] * s)
                        covers = []
                        for level, pattern in enumerate(picked):
                            base_lo = offsets[level]
                            base_hi = offsets[level + 1]
                            for lo, mask in enumerate(pattern):
                                for hi in _iter_bits(mask):
                                    covers.append((base_lo + lo,
                                                   base_hi + hi))
                        poset = GradedPoset(ranks, covers)
                        key = poset.canonical_key()
                        if key not in seen:
                            seen.add(key)
                            out.append(poset)
                        return
                    for pattern in choices[r]:
                        build(r + 1, picked + [pattern])

                build(0, [])
    return out


def random_graded_poset(rng, max_rank: int = 5,
                        max_size: int = 10) -> GradedPoset:
    """A random bounded graded poset: random interior layer sizes, random
    covers between consecutive layers with every element kept on a maximal
    chain. Deterministic for a seeded rng."""
    n = rng.randint(2, max_rank)
    sizes = [1] * (n - 1)
    spare = max_size - 2 - (n - 1)
    for _ in range(rng.randint(0, max(spare, 0))):
        sizes[rng.randrange(n - 1)] += 1
    ranks = [0]
    layer_ids: list[list[int]] = [[0]]
    for r, s in enumerate(sizes, start=1):
        ids = []
        for _ in range(s):
            ids.append(len(ranks))
            ranks.append(r)
        layer_ids.append(ids)
    top = len(ranks)
    ranks.append(n)
    layer_ids.append([top])
    covers = []
    for r in range(n):
        lower, upper = layer_ids[r], layer_ids[r + 1]
        edges = set()
        for lo in lower:
            for hi in upper:
                if rng.random() < 0.45:
                    edges.add((lo, hi))
        for lo in lower:
            if not any(e[0] == lo for e in edges):
                edges.add((lo, upper[rng.randrange(len(upper))]))
        for hi in upper:
            if not any(e[1] == hi for e in edges):
                edges.add((lower[rng.randrange(len(lower))], hi))
        covers.extend(sorted(edges))
    return GradedPoset(ranks, covers)
