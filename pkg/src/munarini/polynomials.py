"""Exact integer polynomials, rational generating functions, and the
weight / cube / distance-cube / maximal-cube polynomials of M_{n,k}.

Everything here is integer arithmetic; there is no floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InputError, UnsupportedParameterError


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _term(c: int, e: int, var: str) -> str:
    if e == 0:
        return str(c)
    mono = var if e == 1 else f"{var}^{e}"
    return mono if c == 1 else f"{c}*{mono}"


class IntPoly:
    """Dense univariate polynomial with ``int`` coefficients, index = exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim(int(c) for c in coeffs)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Canonical ascending text, e.g. ``1 + 5*x + 4*x^2``."""
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            t = _term(abs(c), e, var)
            if not parts:
                parts.append(t if c > 0 else f"-{t}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {t}")
        return " ".join(parts) if parts else "0"

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other) -> IntPoly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise InputError("negative power of a polynomial")
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation; ``value`` may be an int, IntPoly or BiPoly."""
        acc = 0 if isinstance(value, int) else value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: IntPoly) -> IntPoly:
        return IntPoly._coerce(self(inner))

    def shift(self, a: int) -> IntPoly:
        """p(x + a)."""
        return self.compose(IntPoly((a, 1)))

    def derivative(self) -> IntPoly:
        return IntPoly(e * c for e, c in enumerate(self.coeffs) if e)


class BiPoly:
    """Sparse polynomial in two variables ``x`` and ``q``: ``{(i, j): c}`` for c x^i q^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def q(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = "*".join(
                p for p in (_term(1, i, "x") if i else "", _term(1, j, "q") if j else "") if p
            )
            if not mono:
                t = str(abs(c))
            else:
                t = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(t if not parts and c > 0 else (f"-{t}" if not parts else f"{sign} {t}"))
        return " ".join(parts) if parts else "0"

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        if isinstance(other, IntPoly):
            return BiPoly({(i, 0): c for i, c in enumerate(other.coeffs)})
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> BiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> BiPoly:
        other = self._coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        result = BiPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def subs_q(self, value: int) -> IntPoly:
        """Specialize ``q`` to an integer, giving a polynomial in ``x``."""
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * value ** j
        deg = max(out, default=-1)
        return IntPoly(out.get(i, 0) for i in range(deg + 1))

    def subs_x(self, value: int) -> IntPoly:
        """Specialize ``x`` to an integer, giving a polynomial in ``q``."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}).subs_q(value)


@dataclass(frozen=True)
class RationalSeries:
    """N(t)/D(t) where N and D are polynomials in ``t`` with IntPoly (in ``x``) coefficients.

    ``numerator[i]`` is the coefficient of t^i.  D(0) must be +1 or -1.
    """

    numerator: tuple[IntPoly, ...]
    denominator: tuple[IntPoly, ...]

    def __init__(self, numerator: Sequence, denominator: Sequence):
        object.__setattr__(self, "numerator", tuple(IntPoly._coerce(c) for c in numerator))
        object.__setattr__(self, "denominator", tuple(IntPoly._coerce(c) for c in denominator))
        if not self.denominator or self.denominator[0] not in (IntPoly.const(1), IntPoly.const(-1)):
            raise InputError("denominator constant term must be a unit (+1 or -1)")

    def expand(self, order: int) -> list[IntPoly]:
        return expand_series(self, order)


def expand_series(series: RationalSeries, order: int) -> list[IntPoly]:
    """Coefficients of t^0 .. t^order of ``series``.

    Solves D * S = N term by term: s_n = (n_n - sum_{i>=1} d_i s_{n-i}) / d_0.
    """
    if order < 0:
        raise InputError("order must be >= 0")
    num, den = series.numerator, series.denominator
    d0 = den[0][0]
    out: list[IntPoly] = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else IntPoly()
        for i in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[i] * out[n - i]
        out.append(acc * d0)  # d0 is +-1, its own inverse
    return out


def series_coefficients(series: RationalSeries, order: int) -> list[int]:
    """Integer coefficients for a series whose coefficients are constants."""
    out = []
    for p in expand_series(series, order):
        if p.degree not in (0, float("-inf")):
            raise InputError("series coefficients are not constant")
        out.append(p[0])
    return out


# ---------------------------------------------------------------------------
# generating functions

_X = IntPoly.x()


def order_gf(k: int) -> RationalSeries:
    """sum |V(M_{n,k})| t^n = 1 / (1 - k t - t^2)."""
    return RationalSeries([1], [1, -k, -1])


def fib_gf(k: int) -> RationalSeries:
    """sum F_{n,k} t^n = t / (1 - k t - t^2)."""
    return RationalSeries([0, 1], [1, -k, -1])


def size_gf(k: int) -> RationalSeries:
    """sum |E(M_{n,k})| t^n = ((k-1) t + t^2) / (1 - k t - t^2)^2."""
    return RationalSeries([0, k - 1, 1], [1, -2 * k, k * k - 2, 2 * k, 1])


def weight_gf(k: int) -> RationalSeries:
    """sum W_{M_{n,k}}(x) t^n = 1 / (1 - t - (k-1) x t - x t^2)."""
    return RationalSeries([1], [1, -1 - (k - 1) * _X, -_X])


def cube_gf(k: int) -> RationalSeries:
    """sum C_{M_{n,k}}(x) t^n = 1 / (1 - k t - (k-1) x t - (1+x) t^2)."""
    return RationalSeries([1], [1, -k - (k - 1) * _X, -1 - _X])


def maximal_cube_gf(k: int) -> RationalSeries:
    """sum H_{M_{n,k}}(x) t^n = 1 / (1 - (k-1) x t - x t^2), k >= 2."""
    if k < 2:
        raise UnsupportedParameterError("maximal cube polynomial needs k >= 2")
    return RationalSeries([1], [1, -(k - 1) * _X, -_X])


def cube_number_gf(k: int) -> RationalSeries:
    """sum q(M_{n,k}) t^n = 1 / (1 - (2k-1) t - 2 t^2)."""
    return RationalSeries([1], [1, -(2 * k - 1), -2])


# ---------------------------------------------------------------------------
# sequences

def _check(n: int, k: int) -> None:
    if n < 0 or k < 1:
        raise InputError(f"need n >= 0 and k >= 1, got n={n}, k={k}")


def fib_k(n: int, k: int) -> int:
    """k-Fibonacci number: F_0 = 0, F_1 = 1, F_n = k F_{n-1} + F_{n-2}."""
    _check(n, k)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, k * b + a
    return a


# ---------------------------------------------------------------------------
# weight polynomial

def weight_poly_recurrence(n: int, k: int) -> IntPoly:
    """W_n = (1 + (k-1) x) W_{n-1} + x W_{n-2}, W_0 = 1, W_1 = 1 + (k-1) x."""
    _check(n, k)
    step = IntPoly((1, k - 1))
    prev, cur = IntPoly.const(1), step
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, step * cur + _X * prev
    return cur


def weight_poly_series(n: int, k: int) -> IntPoly:
    _check(n, k)
    return expand_series(weight_gf(k), n)[n]


def weight_count(n: int, k: int, d: int) -> int:
    """Number of vertices of M_{n,k} at distance d from 0^n (closed sum)."""
    return sum(binom(d, j) * binom(n - j, d) * (k - 1) ** (d - j) for j in range(d + 1))


def weight_poly_formula(n: int, k: int) -> IntPoly:
    _check(n, k)
    return IntPoly(weight_count(n, k, d) for d in range(n + 1))


def weight_poly(n: int, k: int) -> IntPoly:
    """Weight enumerator W_{M_{n,k}}(x): vertices counted by distance to 0^n."""
    return weight_poly_recurrence(n, k)


# ---------------------------------------------------------------------------
# cube polynomial

def cube_poly_recurrence(n: int, k: int) -> IntPoly:
    """Recurrence read off the denominator of the cube generating function."""
    _check(n, k)
    step = IntPoly((k, k - 1))
    tail = IntPoly((1, 1))
    prev, cur = IntPoly.const(1), step
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, step * cur + tail * prev
    return cur


def cube_poly_series(n: int, k: int) -> IntPoly:
    _check(n, k)
    return expand_series(cube_gf(k), n)[n]


def cube_count(n: int, k: int, p: int) -> int:
    """c_p(M_{n,k}) from the double sum over distance d and kk-count j."""
    return sum(
        binom(d, p) * binom(d, j) * binom(n - j, d) * (k - 1) ** (d - j)
        for d in range(p, n + 1)
        for j in range(d + 1)
    )


def cube_poly_formula(n: int, k: int) -> IntPoly:
    _check(n, k)
    return IntPoly(cube_count(n, k, p) for p in range(n + 1))


def cube_poly(n: int, k: int) -> IntPoly:
    """Cube polynomial C_{M_{n,k}}(x) = W_{M_{n,k}}(x + 1)."""
    return weight_poly(n, k).shift(1)


def distance_cube_poly(n: int, k: int) -> BiPoly:
    """D(x, q) = C(x + q - 1): cubes by dimension (x) and bottom distance to 0^n (q)."""
    return cube_poly(n, k)(BiPoly.x() + BiPoly.q() - 1)


# ---------------------------------------------------------------------------
# maximal cube polynomial

def _check_max(n: int, k: int) -> None:
    _check(n, k)
    if k < 2:
        raise UnsupportedParameterError(
            "maximal cube polynomial is only provided for k >= 2"
        )


def maximal_cube_poly_recurrence(n: int, k: int) -> IntPoly:
    """H_n = (k-1) x H_{n-1} + x H_{n-2}, H_0 = 1, H_1 = (k-1) x."""
    _check_max(n, k)
    step = IntPoly((0, k - 1))
    prev, cur = IntPoly.const(1), step
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, step * cur + _X * prev
    return cur


def maximal_cube_poly_series(n: int, k: int) -> IntPoly:
    _check_max(n, k)
    return expand_series(maximal_cube_gf(k), n)[n]


def maximal_cube_count(n: int, k: int, p: int) -> int:
    """h_p(M_{n,k}) = (k-1)^(2p-n) * C(p, n-p); zero when 2p < n."""
    _check_max(n, k)
    if 2 * p < n or p > n:
        return 0
    return (k - 1) ** (2 * p - n) * binom(p, n - p)


def maximal_cube_poly_formula(n: int, k: int) -> IntPoly:
    _check_max(n, k)
    return IntPoly(maximal_cube_count(n, k, p) for p in range(n + 1))


def maximal_cube_poly(n: int, k: int) -> IntPoly:
    """Maximal cube polynomial H_{M_{n,k}}(x), k >= 2."""
    return maximal_cube_poly_recurrence(n, k)


# ---------------------------------------------------------------------------
# scalar invariants

def cube_number(n: int, k: int) -> int:
    """q(M_{n,k}) = C(1), the total number of induced hypercubes."""
    return cube_poly(n, k)(1)


def cube_number_series(k: int, order: int) -> list[int]:
    _check(0, k)
    return series_coefficients(cube_number_gf(k), order)


def total_weight(n: int, k: int) -> int:
    """W'(1): sum of vertex weights, equal to the number of edges."""
    if n < 1:
        raise InputError("total_weight needs n >= 1")
    return weight_poly(n, k).derivative()(1)


def size_identity_residual(k: int) -> IntPoly:
    """(k^2+4) * E(t) * (1-kt-t^2)^2 minus the three-term decomposition, as a polynomial in t.

    With f = t/(1-kt-t^2), g = (t+t^3)/(1-kt-t^2)^2, h = (kt+2t^2)/(1-kt-t^2)^2 and
    E = ((k-1)t + t^2)/(1-kt-t^2)^2, the decomposition
    (k^2+4) E = (k-2) f + (k-2) g + (k^2-k+2) h holds iff this residual is zero.
    """
    t = IntPoly.x()
    base = IntPoly((1, -k, -1))
    lhs = (k * k + 4) * ((k - 1) * t + t * t)
    rhs = (k - 2) * t * base + (k - 2) * (t + t ** 3) + (k * k - k + 2) * (k * t + 2 * t * t)
    return lhs - rhs


def size_identity_residual_symbolic() -> BiPoly:
    """Same residual with ``k`` kept symbolic (BiPoly in t = x, k = q)."""
    t, k = BiPoly.x(), BiPoly.q()
    base = 1 - k * t - t * t
    lhs = (k * k + 4) * ((k - 1) * t + t * t)
    rhs = (k - 2) * t * base + (k - 2) * (t + t ** 3) + (k * k - k + 2) * (k * t + 2 * t * t)
    return lhs - rhs


def max_degree_witness(n: int, k: int) -> dict:
    """Compare deg(0^n) in M_{n,k} with the x-coefficient of W and with Delta(Pi_{n,k}).

    If Pi_{n,k} were a daisy cube it would share the weight polynomial of
    M_{n,k}, so its maximum degree would equal the x-coefficient ``k*n - 1``.
    """
    from .graphs import build_generalized_pell, build_munarini

    if n < 1:
        raise InputError("max_degree_witness needs n >= 1")
    coeff = weight_poly(n, k)[1]
    m = build_munarini(n, k)
    report = {
        "n": n,
        "k": k,
        "weight_linear_coeff": coeff,
        "zero_vertex_degree": m.degree(m.index_of((0,) * n)),
        "munarini_max_degree": m.max_degree(),
    }
    if k >= 2:
        pi_max = build_generalized_pell(n, k).max_degree()
        report["genpell_max_degree"] = pi_max
        report["contradiction"] = pi_max != coeff
    return report
