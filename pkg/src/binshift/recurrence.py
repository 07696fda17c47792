"""Linear recurrences with constant coefficients and their shift behavior.

A :class:`CharPoly` stores the characteristic polynomial

    P(X) = p_0 X^d + p_1 X^(d-1) + ... + p_d

with coefficients in descending powers, and acts on sequences through the
forward shift operator S (so (P(S) a)_n = sum_j p_{d-j} a_{n+j}).  A
sequence satisfies the recurrence exactly when P(S) annihilates it.

The central fact implemented here: if P(S) annihilates a, then the
shift-r binomial transform of a is annihilated by P(X - r).  The shifted
polynomial is computed coefficient by coefficient with

    q_j = sum_{k=0}^{j} p_k * C(d-k, j-k) * (-r)^(j-k)

which preserves monicity, is additive in r, and undoes with -r.  In
particular P(X) = X^2 - p X + q shifts to X^2 - (p + 2r) X + (r^2 + p r + q).
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import NonInvertibleDomain, NonMonic, PrefixTooShort
from .exactnum import (
    Domain,
    Poly,
    Quad,
    Scalar,
    domain_of,
    join_domains,
    one,
    promote,
    render_scalar,
    scalar_inv,
    zero,
)
from .transform import PrefixLike, SequencePrefix, apply_transform, as_prefix

__all__ = [
    "CharPoly",
    "Recurrence",
    "monic_normalized",
    "apply_char_operator",
    "shift_characteristic",
    "transform_recurrence",
    "second_order_template",
    "intertwine_residual",
    "unroll",
]


class CharPoly:
    """Characteristic polynomial, coefficients descending from X^d.

    Degree is at least 1 and the leading coefficient is nonzero.  The
    coefficients all live in one scalar domain (their join).
    """

    __slots__ = ("_coeffs", "_domain")

    def __init__(self, coeffs: Iterable[Scalar], domain: Domain | None = None):
        vals = list(coeffs)
        if len(vals) < 2:
            raise ValueError("characteristic polynomial needs degree at least 1")
        dom = domain
        for v in vals:
            dv = domain_of(v)
            dom = dv if dom is None else join_domains(dom, dv)
        self._domain = dom
        self._coeffs = tuple(promote(v, dom) for v in vals)
        if self._coeffs[0] == zero(dom):
            raise ValueError("leading coefficient must be nonzero")

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        """Coefficients p_0, ..., p_d in descending powers of X."""
        return self._coeffs

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self._coeffs[0]

    @property
    def is_monic(self) -> bool:
        return self._coeffs[0] == one(self._domain)

    def coefficient_of_power(self, j: int) -> Scalar:
        """Coefficient of X^j (ascending accessor)."""
        if not 0 <= j <= self.degree:
            raise IndexError(f"degree {self.degree} polynomial has no X^{j}")
        return self._coeffs[self.degree - j]

    def promoted(self, dom: Domain) -> "CharPoly":
        target = join_domains(self._domain, dom)
        return CharPoly(self._coeffs, target)

    def text(self, var: str = "X") -> str:
        """Rendering like ``X^2 - 3*X + 1``; composite coefficients are
        parenthesized, e.g. ``X^2 - (2r+3)*X + (r^2+3r+2)``."""
        parts: list[str] = []
        d = self.degree
        for i, c in enumerate(self._coeffs):
            power = d - i
            if c == zero(self._domain):
                continue
            if power == 0:
                xpart = ""
            elif power == 1:
                xpart = var
            else:
                xpart = f"{var}^{power}"
            if isinstance(c, Poly) and not c.is_constant:
                if c.coeffs[-1] < 0:
                    sign, body = "-", f"({(-c).compact()})"
                else:
                    sign, body = "+", f"({c.compact()})"
            elif isinstance(c, Quad) and not c.is_rational:
                sign, body = "+", f"({c.text()})"
            else:
                if isinstance(c, Poly):
                    c = c.constant_value()
                elif isinstance(c, Quad):
                    c = c.rational_value()
                sign = "-" if c < 0 else "+"
                body = str(abs(c))
            if xpart:
                body = xpart if body == "1" else f"{body}*{xpart}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        if not parts:
            return "0"
        return " ".join(parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharPoly):
            return len(self._coeffs) == len(other._coeffs) and all(
                x == y for x, y in zip(self._coeffs, other._coeffs)
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"CharPoly({self.text()!r}, domain={self._domain})"


def monic_normalized(p: CharPoly) -> CharPoly:
    """Divide through by the leading coefficient (field domains only)."""
    if p.is_monic:
        return p
    if p.domain.kind not in ("rat", "quad"):
        raise NonInvertibleDomain(
            f"cannot normalize over {p.domain}; promote to a field domain first"
        )
    inv = scalar_inv(p.leading)
    return CharPoly([inv * c for c in p.coeffs], p.domain)


class Recurrence:
    """A monic characteristic polynomial with its d initial terms.

    Determines a_n for every n >= d via
    a_n = -(p_1 a_{n-1} + ... + p_d a_{n-d}).
    """

    __slots__ = ("_poly", "_init")

    def __init__(self, poly: CharPoly, init: Iterable[Scalar]):
        init_vals = list(init)
        if len(init_vals) != poly.degree:
            raise ValueError(
                f"degree {poly.degree} recurrence needs exactly "
                f"{poly.degree} initial terms, got {len(init_vals)}"
            )
        dom = poly.domain
        for v in init_vals:
            dom = join_domains(dom, domain_of(v))
        poly = poly.promoted(dom)
        if not poly.is_monic:
            raise NonMonic(f"characteristic polynomial {poly.text()} is not monic")
        self._poly = poly
        self._init = tuple(promote(v, dom) for v in init_vals)

    @property
    def poly(self) -> CharPoly:
        return self._poly

    @property
    def init(self) -> tuple[Scalar, ...]:
        return self._init

    @property
    def degree(self) -> int:
        return self._poly.degree

    @property
    def domain(self) -> Domain:
        return self._poly.domain

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Recurrence):
            return self._poly == other._poly and len(self._init) == len(
                other._init
            ) and all(x == y for x, y in zip(self._init, other._init))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._poly, self._init))

    def __repr__(self) -> str:
        init = ", ".join(render_scalar(v) for v in self._init)
        return f"Recurrence({self._poly.text()!r}, init=({init}))"


def unroll(rec: Recurrence, n_max: int) -> SequencePrefix:
    """The prefix a_0..a_{n_max} determined by the recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    d = rec.degree
    p = rec.poly.coeffs
    vals = list(rec.init[: n_max + 1])
    for n in range(d, n_max + 1):
        acc = zero(rec.domain)
        for k in range(1, d + 1):
            acc = acc - p[k] * vals[n - k]
        vals.append(acc)
    return SequencePrefix(vals, rec.domain)


def apply_char_operator(p: CharPoly, a: PrefixLike) -> SequencePrefix:
    """(P(S) a)_n = sum_j p_{d-j} a_{n+j} for n = 0..len(a)-1-d.

    The output is d terms shorter than the input; a is annihilated by P
    exactly when every output term is zero.
    """
    a = as_prefix(a)
    d = p.degree
    if len(a) < d + 1:
        raise PrefixTooShort(
            f"degree {d} operator needs at least {d + 1} terms, got {len(a)}"
        )
    target = join_domains(p.domain, a.domain)
    coeffs = [promote(c, target) for c in p.coeffs]
    vals = [promote(v, target) for v in a.values]
    out = []
    for n in range(len(vals) - d):
        acc = zero(target)
        for j in range(d + 1):
            acc = acc + coeffs[d - j] * vals[n + j]
        out.append(acc)
    return SequencePrefix(out, target)


def shift_characteristic(p: CharPoly, r: Scalar) -> CharPoly:
    """The polynomial P(X - r) annihilating the shift-r transform.

    Computed coefficient-wise:

        q_j = sum_{k=0}^{j} p_k * C(d-k, j-k) * (-r)^(j-k)

    The input must be monic; the output is then monic of the same degree,
    and shifting is additive in r with shift by -r as inverse.
    """
    if not p.is_monic:
        raise NonMonic(
            f"root shift needs a monic polynomial, got leading "
            f"{render_scalar(p.leading)}"
        )
    target = join_domains(p.domain, domain_of(r))
    neg_r = -promote(r, target)
    coeffs = [promote(c, target) for c in p.coeffs]
    d = p.degree
    neg_pow = [one(target)]
    for _ in range(d):
        neg_pow.append(neg_pow[-1] * neg_r)
    q = []
    for j in range(d + 1):
        acc = zero(target)
        for k in range(j + 1):
            acc = acc + math.comb(d - k, j - k) * (coeffs[k] * neg_pow[j - k])
        q.append(acc)
    return CharPoly(q, target)


def transform_recurrence(rec: Recurrence, r: Scalar) -> Recurrence:
    """The recurrence satisfied by the shift-r transform of ``rec``.

    The characteristic polynomial is shifted to P(X - r) and the new
    initial terms are the transform of the first d terms (output index n
    only needs inputs 0..n, so d terms suffice).
    """
    d = rec.degree
    shifted = shift_characteristic(rec.poly, r)
    base = SequencePrefix(rec.init, rec.domain)
    new_init = apply_transform(base, r, d - 1)
    return Recurrence(shifted, new_init.values)


def second_order_template(p: Scalar, q: Scalar, r: Scalar) -> tuple[Scalar, Scalar]:
    """Shifted coefficients for a_n = p a_{n-1} - q a_{n-2}.

    The transform satisfies b_n = (p + 2r) b_{n-1} - (r^2 + p r + q)
    b_{n-2}; returns that coefficient pair.  Matches
    :func:`shift_characteristic` on X^2 - p X + q.
    """
    dom = join_domains(join_domains(domain_of(p), domain_of(q)), domain_of(r))
    pp = promote(p, dom)
    qq = promote(q, dom)
    rr = promote(r, dom)
    return (pp + 2 * rr, rr * rr + pp * rr + qq)


def intertwine_residual(a: PrefixLike, r: Scalar) -> SequencePrefix:
    """Termwise residual of (S - r) after the transform vs the transform
    of S: entry n is ((S - r) T a)_n - (T S a)_n, which is identically
    zero.  The output has one term fewer than the input."""
    a = as_prefix(a)
    if len(a) < 2:
        raise PrefixTooShort("need at least two terms to apply the shift operator")
    b = apply_transform(a, r)
    target = b.domain
    rp = promote(r, target)
    tail = SequencePrefix(a.values[1:], a.domain)
    tb = apply_transform(tail, r)
    out = [b[n + 1] - rp * b[n] - tb[n] for n in range(len(a) - 1)]
    return SequencePrefix(out, target)
