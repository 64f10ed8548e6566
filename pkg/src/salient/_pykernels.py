"""Pure-Python implementations of the enumeration kernels.

These are the hot inner loops of the exhaustive sweeps: tabulating linear
extensions of a natural poset by descent set, and computing the flag f/h
vectors of its lattice of order ideals. salient._ckernels implements the
same three functions with identical contracts in compiled code;
salient._kernels selects whichever is importable.

Conventions shared by both backends:

* a natural poset on n elements is passed as ``down``, a sequence where
  down[i] is the bitmask of elements strictly below element i (0-based
  labels, and down[i] only has bits below i),
* subsets S of [n-1] are encoded as bitmasks with bit i-1 for rank i,
* returned vectors are plain lists of ints indexed by those bitmasks.
"""
from __future__ import annotations

BACKEND = "python"


def descent_vector(n: int, down) -> list[int]:
    """Counts of linear extensions grouped by descent set.

    Entry D of the result is the number of linear extensions w (read as words
    in the 0-based labels) with w[p-1] > w[p] exactly at the positions p whose
    bit p-1 is set in D.
    """
    if n <= 0:
        return [1]
    out = [0] * (1 << (n - 1))
    down = tuple(down)
    full = (1 << n) - 1

    def rec(placed: int, depth: int, last: int, dmask: int) -> None:
        if placed == full:
            out[dmask] += 1
            return
        for e in range(n):
            bit = 1 << e
            if placed & bit or down[e] & ~placed:
                continue
            if depth and e < last:
                rec(placed | bit, depth + 1, e, dmask | (1 << (depth - 1)))
            else:
                rec(placed | bit, depth + 1, e, dmask)

    rec(0, 0, -1, 0)
    return out


def natural_flag_vectors(n: int, down) -> tuple[list[int], list[int]]:
    """Flag f- and h-vectors of the lattice of order ideals of a natural poset.

    Returns (alpha, beta). alpha[S] counts chains of ideals whose sizes hit
    exactly the ranks in S; beta is the inclusion-exclusion transform of
    alpha. Ideal enumeration relies on naturality (down[i] has only bits
    below i).
    """
    if n <= 0:
        return [1], [1]
    down = tuple(down)
    ideals = [0]
    for i in range(n):
        bit = 1 << i
        di = down[i]
        ideals += [m | bit for m in ideals if not di & ~m]
    layers: list[list[int]] = [[] for _ in range(n + 1)]
    for m in ideals:
        layers[bin(m).count("1")].append(m)

    size = 1 << (n - 1)
    alpha = [0] * size
    alpha[0] = 1

    def extend(last: int, vec: list[int], smask: int) -> None:
        for r in range(last + 1, n):
            prev = layers[last]
            nvec = []
            for ideal in layers[r]:
                tot = 0
                for k, sub in enumerate(prev):
                    if not sub & ~ideal:
                        tot += vec[k]
                nvec.append(tot)
            m2 = smask | (1 << (r - 1))
            alpha[m2] = sum(nvec)
            extend(r, nvec, m2)

    for r in range(1, n):
        vec = [1] * len(layers[r])
        mask = 1 << (r - 1)
        alpha[mask] = len(layers[r])
        extend(r, vec, mask)

    beta = alpha.copy()
    for b in range(n - 1):
        bit = 1 << b
        for s in range(size):
            if s & bit:
                beta[s] -= beta[s ^ bit]
    return alpha, beta


def zeta_vector(vec, nbits: int) -> list[int]:
    """Subset-sum transform: out[S] = sum of vec[T] over T subset of S.

    Inverse of the transform taking alpha to beta, used to check Moebius
    inversion round trips.
    """
    out = list(vec)
    for b in range(nbits):
        bit = 1 << b
        for s in range(len(out)):
            if s & bit:
                out[s] += out[s ^ bit]
    return out
