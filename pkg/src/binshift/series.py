"""Truncated generating series and the transform's generating-function views.

A :class:`TruncSeries` holds coefficients c_0..c_N of an ordinary (OGF) or
exponential (EGF) generating series truncated at order N.  EGF series
store the sequence values a_n themselves, not a_n/n!, which keeps every
coefficient inside the exact scalar domains; the analytic coefficient
a_n/n! is available through :meth:`TruncSeries.analytic_coefficient`.

The shift-r binomial transform acts as:

* OGF:  A(z) -> (1 - r z)^(-1) * A(z / (1 - r z))
* EGF:  multiplication by the exponential series of r*t (coefficient-wise,
  stored form: binomial convolution with the powers of r)
* Riordan view: the lower-triangular array with entries C(n, k) r^(n-k)

all implemented by truncated series arithmetic so they can be checked
against the direct sequence operator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import KindMismatch, OrderMismatch
from .exactnum import (
    Domain,
    Scalar,
    domain_of,
    join_domains,
    one,
    promote,
    render_scalar,
    zero,
)
from .transform import PrefixLike, SequencePrefix, as_prefix

__all__ = [
    "OGF",
    "EGF",
    "TruncSeries",
    "series_from_prefix",
    "prefix_from_series",
    "series_mul",
    "series_compose_geometric",
    "egf_transform",
    "riordan_entry",
]

OGF = "ogf"
EGF = "egf"


class TruncSeries:
    """Coefficients c_0..c_N of a truncated generating series.

    ``kind`` is :data:`OGF` or :data:`EGF`.  The order N is one less than
    the number of coefficients; all coefficients live in one scalar
    domain (the join of their individual domains).
    """

    __slots__ = ("_kind", "_coeffs", "_domain")

    def __init__(
        self,
        kind: str,
        coeffs: Iterable[Scalar],
        domain: Domain | None = None,
    ):
        if kind not in (OGF, EGF):
            raise ValueError(f"kind must be {OGF!r} or {EGF!r}, got {kind!r}")
        vals = list(coeffs)
        if not vals:
            raise ValueError("a series needs at least the order-0 coefficient")
        dom = domain
        for v in vals:
            dv = domain_of(v)
            dom = dv if dom is None else join_domains(dom, dv)
        self._kind = kind
        self._domain = dom
        self._coeffs = tuple(promote(v, dom) for v in vals)

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def domain(self) -> Domain:
        return self._domain

    def coefficient(self, n: int) -> Scalar:
        """Stored coefficient c_n (for EGF this is a_n, not a_n/n!)."""
        if not 0 <= n <= self.order:
            raise IndexError(f"order {self.order} series has no coefficient {n}")
        return self._coeffs[n]

    def analytic_coefficient(self, n: int) -> Scalar:
        """The true series coefficient: c_n for OGF, a_n/n! for EGF."""
        c = self.coefficient(n)
        if self._kind == OGF:
            return c
        inv_fact = Fraction(1, math.factorial(n))
        if self._domain.kind == "int":
            return Fraction(c) * inv_fact
        if self._domain.kind == "rat":
            return c * inv_fact
        return c * promote(inv_fact, self._domain)

    def text(self) -> str:
        """Human-readable rendering ending in the O() truncation marker."""
        sym = "z" if self._kind == OGF else "t"
        parts: list[str] = []
        for n, c in enumerate(self._coeffs):
            if c == zero(self._domain) and len(self._coeffs) > 1:
                continue
            body = render_scalar(c)
            if " " in body or (body.startswith("-") and n > 0):
                body = f"({body})"
            if n == 0:
                parts.append(body)
            elif n == 1:
                parts.append(f"{body}*{sym}")
            else:
                parts.append(f"{body}*{sym}^{n}")
            if self._kind == EGF and n >= 2:
                parts[-1] += f"/{n}!"
        if not parts:
            parts.append("0")
        return " + ".join(parts) + f" + O({sym}^{self.order + 1})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncSeries):
            return (
                self._kind == other._kind
                and len(self._coeffs) == len(other._coeffs)
                and all(x == y for x, y in zip(self._coeffs, other._coeffs))
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._kind, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries({self._kind!r}, {self.text()!r})"


def series_from_prefix(a: PrefixLike, kind: str = OGF) -> TruncSeries:
    """View a length-(N+1) prefix as a series truncated at order N."""
    a = as_prefix(a)
    return TruncSeries(kind, a.values, a.domain)


def prefix_from_series(f: TruncSeries) -> SequencePrefix:
    """The coefficient prefix of a truncated series."""
    return SequencePrefix(f.coeffs, f.domain)


def _check_compatible(f: TruncSeries, g: TruncSeries) -> None:
    if f.kind != g.kind:
        raise KindMismatch(f"cannot combine {f.kind} with {g.kind}")
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")


def _cauchy(xs: list, ys: list, order: int, zero_s: Scalar) -> list:
    out = [zero_s] * (order + 1)
    for i, x in enumerate(xs):
        if i > order or x == zero_s:
            continue
        for j, y in enumerate(ys):
            if i + j > order:
                break
            out[i + j] = out[i + j] + x * y
    return out


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Product of two same-kind, same-order series.

    OGF uses the Cauchy product; EGF (in stored a_n form) uses the
    binomial convolution sum_k C(n, k) f_k g_{n-k}.
    """
    _check_compatible(f, g)
    target = join_domains(f.domain, g.domain)
    xs = [promote(c, target) for c in f.coeffs]
    ys = [promote(c, target) for c in g.coeffs]
    zero_s = zero(target)
    if f.kind == OGF:
        out = _cauchy(xs, ys, f.order, zero_s)
    else:
        out = []
        for n in range(f.order + 1):
            acc = zero_s
            for k in range(n + 1):
                acc = acc + math.comb(n, k) * (xs[k] * ys[n - k])
            out.append(acc)
    return TruncSeries(f.kind, out, target)


def series_compose_geometric(f: TruncSeries, r: Scalar) -> TruncSeries:
    """OGF action of the shift-r transform:

        A(z) -> (1 - r z)^(-1) * A(z / (1 - r z))

    computed by expanding powers of u = z/(1 - r z) truncated at the
    series order.  u has valuation 1, so coefficient n of the result
    depends only on input coefficients 0..n.
    """
    if f.kind != OGF:
        raise KindMismatch("geometric substitution acts on ogf series")
    target = join_domains(f.domain, domain_of(r))
    rp = promote(r, target)
    zero_s = zero(target)
    one_s = one(target)
    n_ord = f.order
    geom = [one_s]  # (1 - r z)^(-1) = sum r^j z^j
    for _ in range(n_ord):
        geom.append(geom[-1] * rp)
    u = [zero_s] + geom[:n_ord]  # z * (1 - r z)^(-1)
    coeffs = [promote(c, target) for c in f.coeffs]
    acc = [zero_s] * (n_ord + 1)
    upow = [one_s] + [zero_s] * n_ord
    for k in range(n_ord + 1):
        ck = coeffs[k]
        if ck != zero_s:
            for j in range(k, n_ord + 1):
                acc[j] = acc[j] + ck * upow[j]
        if k < n_ord:
            upow = _cauchy(upow, u, n_ord, zero_s)
    out = _cauchy(acc, geom, n_ord, zero_s)
    return TruncSeries(OGF, out, target)


def egf_transform(f: TruncSeries, r: Scalar) -> TruncSeries:
    """EGF action of the shift-r transform: multiply by exp(r t).

    In stored a_n form the factor exp(r t) is the series of powers of r,
    and the product is the binomial convolution of :func:`series_mul`.
    """
    if f.kind != EGF:
        raise KindMismatch("exponential multiplication acts on egf series")
    target = join_domains(f.domain, domain_of(r))
    rp = promote(r, target)
    powers = [one(target)]
    for _ in range(f.order):
        powers.append(powers[-1] * rp)
    return series_mul(
        TruncSeries(EGF, [promote(c, target) for c in f.coeffs], target),
        TruncSeries(EGF, powers, target),
    )


def riordan_entry(r: Scalar, n: int, k: int) -> Scalar:
    """Entry (n, k) of the transform's Riordan array.

    The array is ((1 - r z)^(-1), z (1 - r z)^(-1)); entry (n, k) is the
    coefficient of z^n in (1 - r z)^(-1) * (z (1 - r z)^(-1))^k, which is
    computed here by truncated series expansion.  It equals
    C(n, k) * r^(n-k) and vanishes for k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("row and column must be nonnegative")
    dom = domain_of(r)
    if k > n:
        return zero(dom)
    zero_s = zero(dom)
    one_s = one(dom)
    geom = [one_s]
    for _ in range(n):
        geom.append(geom[-1] * r)
    u = [zero_s] + geom[:n]
    upow = [one_s] + [zero_s] * n
    for _ in range(k):
        upow = _cauchy(upow, u, n, zero_s)
    return _cauchy(upow, geom, n, zero_s)[n]
