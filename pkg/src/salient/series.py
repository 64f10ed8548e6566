"""Exact truncated power series, commutation generating functions, and the
umbral class-counting pipeline.

Everything here is exact: coefficients are Python ints or Fractions, never
floats. Multivariate series carry per-variable exponent caps; arithmetic
discards over-cap terms, and every surviving coefficient equals the
coefficient of the untruncated result (componentwise-bounded exponents can
only be produced by componentwise-bounded factors).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from salient.errors import DomainError, GuardExceeded, InternalConsistencyError
from salient.words import MultisetSpec

DEFAULT_CF_TOTAL_CAP = 24
DEFAULT_PROFILE_CAP = 200
DEFAULT_UMBRAL_ORDER_CAP = 100


def _norm(value):
    """Collapse integral Fractions back to int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


# ---------------------------------------------------------------------------
# truncated multivariate series
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """Power series in named variables, truncated by per-variable caps.

    An optional total-degree cap discards monomials of higher total degree
    on top of the per-variable caps; the exactness guarantee then covers the
    monomials below both.
    """

    __slots__ = ("variables", "caps", "total_cap", "coeffs")

    def __init__(self, variables, caps, coeffs=None, total_cap=None):
        variables = tuple(variables)
        caps = tuple(caps)
        if len(variables) != len(caps):
            raise DomainError("one cap per variable required")
        if any(c < 0 for c in caps):
            raise DomainError("caps must be nonnegative")
        stored: dict[tuple[int, ...], object] = {}
        for exps, value in dict(coeffs or {}).items():
            exps = tuple(exps)
            if len(exps) != len(variables) or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps!r}")
            if any(e > c for e, c in zip(exps, caps)):
                continue
            if total_cap is not None and sum(exps) > total_cap:
                continue
            value = _norm(value)
            if value:
                stored[exps] = value
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "total_cap", total_cap)
        object.__setattr__(self, "coeffs", stored)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors

    @classmethod
    def constant(cls, value, variables, caps, total_cap=None) -> "TruncatedSeries":
        zero = (0,) * len(tuple(variables))
        return cls(variables, caps, {zero: value}, total_cap=total_cap)

    @classmethod
    def monomial(cls, value, exps, variables, caps,
                 total_cap=None) -> "TruncatedSeries":
        return cls(variables, caps, {tuple(exps): value}, total_cap=total_cap)

    # -- views

    def coefficient(self, exps):
        exps = tuple(exps)
        if any(e > c for e, c in zip(exps, self.caps)):
            raise DomainError(f"exponents {exps} exceed caps {self.caps}")
        return self.coeffs.get(exps, 0)

    def terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic

    def _check(self, other: "TruncatedSeries") -> None:
        if (self.variables != other.variables or self.caps != other.caps
                or self.total_cap != other.total_cap):
            raise DomainError("series have different variables or caps")

    def _lift(self, value) -> "TruncatedSeries":
        return TruncatedSeries.constant(value, self.variables, self.caps,
                                        total_cap=self.total_cap)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._lift(other)
        self._check(other)
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            out[e] = out.get(e, 0) + v
        return TruncatedSeries(self.variables, self.caps, out,
                               total_cap=self.total_cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.variables, self.caps,
            {e: -v for e, v in self.coeffs.items()}, total_cap=self.total_cap)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries)
                       else self._lift(-other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._scale(other)
        self._check(other)
        caps = self.caps
        total_cap = self.total_cap
        out: dict[tuple[int, ...], object] = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e > c for e, c in zip(exps, caps)):
                    continue
                if total_cap is not None and sum(exps) > total_cap:
                    continue
                out[exps] = out.get(exps, 0) + v1 * v2
        return TruncatedSeries(self.variables, caps, out,
                               total_cap=total_cap)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, value):
        return TruncatedSeries(
            self.variables, self.caps,
            {e: v * value for e, v in self.coeffs.items()},
            total_cap=self.total_cap)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("series powers must be nonnegative integers")
        result = TruncatedSeries.constant(1, self.variables, self.caps,
                                          total_cap=self.total_cap)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse, by geometric iteration up to the caps."""
        zero = (0,) * len(self.variables)
        c0 = self.coeffs.get(zero, 0)
        if not c0:
            raise DomainError("cannot invert a series with zero constant term")
        # self = c0 * (1 - u) with u supported on positive total degrees
        u = TruncatedSeries(
            self.variables, self.caps,
            {e: -Fraction(v, 1) / c0 for e, v in self.coeffs.items() if e != zero},
            total_cap=self.total_cap)
        one = TruncatedSeries.constant(1, self.variables, self.caps,
                                       total_cap=self.total_cap)
        rounds = sum(self.caps) if self.total_cap is None else self.total_cap
        acc = one
        for _ in range(rounds):
            acc = one + u * acc
        if c0 == 1:
            return acc
        return acc * _norm(Fraction(1, 1) / c0)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.variables == other.variables
                and self.caps == other.caps
                and self.total_cap == other.total_cap
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        head = ", ".join(f"{v}<= {c}" for v, c in zip(self.variables, self.caps))
        return f"TruncatedSeries({head}; {len(self.coeffs)} terms)"


# ---------------------------------------------------------------------------
# rational expansion (univariate and multivariate)
# ---------------------------------------------------------------------------

def expand_rational(numerator, denominator, caps, variables=("x", "y")):
    """Expand numerator/denominator as a truncated power series.

    Univariate: numerator and denominator are coefficient sequences and caps
    is the order N; returns the list of coefficients of x^0..x^N. Multivariate:
    numerator and denominator are dicts mapping exponent vectors to
    coefficients and caps is a tuple; returns a TruncatedSeries.

    The denominator needs a nonzero constant term.
    """
    if isinstance(caps, int):
        return _expand_rational_univariate(list(numerator), list(denominator), caps)
    variables = tuple(variables)[: len(tuple(caps))]
    den = TruncatedSeries(variables, caps, dict(denominator))
    num = TruncatedSeries(variables, caps, dict(numerator))
    return num * den.inverse()


def _expand_rational_univariate(num, den, order):
    if order < 0:
        raise DomainError("order must be >= 0")
    while den and den[-1] == 0:
        den.pop()
    if not den or den[0] == 0:
        raise DomainError("denominator needs a nonzero constant term")
    d0 = den[0]
    work = num + [0] * (order + 1 + len(den) - len(num))
    out = []
    for i in range(order + 1):
        c = _norm(Fraction(work[i], 1) / d0) if d0 != 1 else work[i]
        out.append(c)
        if c:
            for j in range(1, len(den)):
                work[i + j] -= c * den[j]
    return out


# ---------------------------------------------------------------------------
# commutation (trace monoid) generating functions
# ---------------------------------------------------------------------------

def cf_series(n: int, caps, max_total=DEFAULT_CF_TOTAL_CAP,
              total_cap=None) -> TruncatedSeries:
    """Truncated expansion of 1/(1 - sum x_i + sum x_i x_{i+1}).

    This is the generating function of the monoid on generators 1..n in which
    consecutive generators commute; the coefficient of a monomial counts the
    interchange equivalence classes of words with that content.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    caps = tuple(caps)
    if len(caps) != n:
        raise DomainError("need one cap per variable")
    effective = sum(caps) if total_cap is None else min(sum(caps), total_cap)
    if effective > max_total:
        raise GuardExceeded(
            f"total cap {effective} exceeds limit {max_total}")
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    terms: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = -1
    for i in range(n - 1):
        e = [0] * n
        e[i] = e[i + 1] = 1
        terms[tuple(e)] = 1
    return TruncatedSeries(variables, caps, terms, total_cap=total_cap).inverse()


def multiset_count_cf(spec: MultisetSpec, max_total=DEFAULT_CF_TOTAL_CAP) -> int:
    """Number of interchange classes of arrangements of the multiset.

    Reads off the coefficient of prod x_v^{r_v} in cf_series. The empty
    multiset has one (empty) class.
    """
    if spec.total == 0:
        return 1
    if spec.total > max_total:
        raise GuardExceeded(f"multiset size {spec.total} exceeds limit {max_total}")
    caps = spec.caps_vector()
    series = cf_series(len(caps), caps, max_total=max_total)
    return series.coefficient(caps)


# ---------------------------------------------------------------------------
# closed forms for four letters
# ---------------------------------------------------------------------------

def falling_factorial(y, r: int):
    """(y)_r = y (y-1) ... (y-r+1), with the empty product equal to 1."""
    if r < 0:
        raise DomainError("r must be >= 0")
    out = 1
    for t in range(r):
        out *= y - t
    return out


def f4_coefficient(h: int, i: int, j: int, k: int) -> int:
    """Coefficient of x1^h x2^i x3^j x4^k in cf_series(4).

    Closed form: C(h+j, j) * C(h+k, k) * C(i+k, i). Note this is specific to
    the four-letter commutation pattern; dropping x4 (k = 0) recovers the
    three-letter series, but dropping x3 (j = 0) does not, because letters 2
    and 4 do not commute. See multiset_count_cf for gapped supports.
    """
    if min(h, i, j, k) < 0:
        raise DomainError("exponents must be >= 0")
    return math.comb(h + j, j) * math.comb(h + k, k) * math.comb(i + k, i)


def f4_t_coefficient(h: int, i: int, j: int, k: int, t: int):
    """Coefficient of x1^h x2^i x3^j x4^k in cf_series(4) raised to the t-th power.

    Falling-factorial closed form, exact rational arithmetic; for integer
    t >= 0 the value is a nonnegative integer.
    """
    if min(h, i, j, k) < 0:
        raise DomainError("exponents must be >= 0")
    num = (falling_factorial(t + h + j - 1, j)
           * falling_factorial(t + h + k - 1, h)
           * falling_factorial(t + i + k - 1, i + k))
    den = (math.factorial(h) * math.factorial(i)
           * math.factorial(j) * math.factorial(k))
    return _norm(Fraction(num, den))


# ---------------------------------------------------------------------------
# polynomials in the umbral indeterminate
# ---------------------------------------------------------------------------

class TPoly:
    """Polynomial in one indeterminate t with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        stored: dict[int, object] = {}
        for m, v in dict(coeffs or {}).items():
            if m < 0:
                raise DomainError("t-exponents must be >= 0")
            v = _norm(v)
            if v:
                stored[m] = v
        object.__setattr__(self, "coeffs", stored)

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def one(cls) -> "TPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, value, m: int) -> "TPoly":
        return cls({m: value})

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for m, v in other.coeffs.items():
            out[m] = out.get(m, 0) + v
        return TPoly(out)

    def __sub__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for m, v in other.coeffs.items():
            out[m] = out.get(m, 0) - v
        return TPoly(out)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            out: dict[int, object] = {}
            for m1, v1 in self.coeffs.items():
                for m2, v2 in other.coeffs.items():
                    out[m1 + m2] = out.get(m1 + m2, 0) + v1 * v2
            return TPoly(out)
        return TPoly({m: v * other for m, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "TPoly":
        return TPoly({m: -v for m, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def terms(self) -> list[tuple[int, object]]:
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "TPoly(0)"
        body = " + ".join(f"({v})t^{m}" for m, v in self.terms())
        return f"TPoly({body})"


def phi(p: TPoly):
    """The linear functional sending t^m to m!, applied to a polynomial."""
    return _norm(sum((Fraction(v, 1) * math.factorial(m)
                      for m, v in p.coeffs.items()), Fraction(0)))


# ---------------------------------------------------------------------------
# connected level profiles and their weight polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelProfile:
    """A connected degree-k graph on vertices 1..m whose edges are loops or
    join consecutive vertices: loops[i] loops at vertex i+1 and edges[i]
    parallel edges between vertices i+1 and i+2 (edges[i] >= 1).
    """

    loops: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.loops)

    @property
    def nu(self) -> int:
        """Number of non-loop edges."""
        return sum(self.edges)

    @property
    def r(self) -> int:
        """Total number of edges, loops included."""
        return sum(self.loops) + sum(self.edges)

    def weight(self) -> TPoly:
        """(-1)^nu t^r / (prod loops! * prod edges!)."""
        den = 1
        for mu in self.loops:
            den *= math.factorial(mu)
        for e in self.edges:
            den *= math.factorial(e)
        value = Fraction((-1) ** self.nu, den)
        return TPoly.term(value, self.r)


def level_profiles(m: int, k: int) -> Iterator[LevelProfile]:
    """All level profiles with m vertices and uniform degree k (loops count 1)."""
    if m < 1 or k < 1:
        raise DomainError("m and k must be >= 1")
    if m == 1:
        yield LevelProfile(loops=(k,), edges=())
        return

    def rec(prev: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        # prev is the edge multiplicity entering the current vertex
        position = len(chosen)
        if position == m - 1:
            if k - prev >= 0:
                yield chosen
            return
        for e in range(1, k - prev + 1):
            yield from rec(e, chosen + (e,))

    for edges in rec(0, ()):
        loops = []
        for i in range(m):
            left = edges[i - 1] if i > 0 else 0
            right = edges[i] if i < m - 1 else 0
            loops.append(k - left - right)
        yield LevelProfile(loops=tuple(loops), edges=edges)


def c_poly(m: int, k: int, max_profile=DEFAULT_PROFILE_CAP) -> TPoly:
    """Sum of profile weights: the x^m coefficient of the connected-block
    generating function F(x, t) for degree k. Zero when no profile exists.
    """
    if m < 1 or k < 1:
        raise DomainError("m and k must be >= 1")
    if m * k > max_profile:
        raise GuardExceeded(f"m*k = {m * k} exceeds limit {max_profile}")
    total = TPoly.zero()
    for profile in level_profiles(m, k):
        total = total + profile.weight()
    return total


def umbral_f_coefficients(k: int, order: int,
                          max_profile=DEFAULT_PROFILE_CAP) -> list[TPoly]:
    """Coefficients of x^0..x^order of F(x, t) = sum_m c_poly(m, k) x^m."""
    out = [TPoly.zero()]
    for m in range(1, order + 1):
        out.append(c_poly(m, k, max_profile=max_profile))
    return out


def g_umbral_series(k: int, order: int,
                    max_order=DEFAULT_UMBRAL_ORDER_CAP,
                    max_profile=DEFAULT_PROFILE_CAP) -> list[int]:
    """Class counts for the multisets {1^k, ..., n^k}, n = 0..order.

    Builds F(x, t) from the connected level profiles, inverts 1 - F as a
    series in x with polynomial coefficients, and applies the functional
    t^m -> m! coefficientwise. Every resulting value must be a nonnegative
    integer; anything else means the pipeline is internally inconsistent and
    raises.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if order < 0:
        raise DomainError("order must be >= 0")
    if order > max_order:
        raise GuardExceeded(f"order {order} exceeds limit {max_order}")
    F = umbral_f_coefficients(k, order, max_profile=max_profile)
    G = [TPoly.one()] + [TPoly.zero()] * order
    for _ in range(order):
        new = [TPoly.one()]
        for i in range(1, order + 1):
            acc = TPoly.zero()
            for a in range(1, i + 1):
                if not F[a].is_zero():
                    acc = acc + F[a] * G[i - a]
            new.append(acc)
        G = new
    values = []
    for i, poly in enumerate(G):
        v = phi(poly)
        if not isinstance(v, int) or v < 0:
            raise InternalConsistencyError(
                f"umbral coefficient of x^{i} is {v}, not a nonnegative integer")
        values.append(v)
    return values
