"""Alternative models of recurrence sequences and how the transform acts.

Three independent views of the same sequence, each with its own image of
the shift-r binomial transform:

* Binet form a_n = sum_j c_j rho_j^n over a field domain; the transform
  keeps the weights and moves every root to rho_j + r.
* Matrix model a_n = u^T M^n v; the transform replaces M by M + r I.
* Colored-structure count: for a nonnegative integer sequence and integer
  r >= 0, the transform value b_n counts pairs (K, coloring) where K is a
  subset of an n-set carrying an a_{|K|}-structure and the remaining n-|K|
  points each get one of r colors.  A brute-force enumerator over all 2^n
  subsets provides the combinatorial ground truth for small n.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DomainMismatch,
    EnumerationTooLarge,
    NegativeInput,
    NonMonic,
    PrefixTooShort,
)
from .exactnum import (
    RAT,
    Domain,
    Scalar,
    domain_of,
    join_domains,
    one,
    promote,
    render_scalar,
    zero,
)
from .recurrence import CharPoly, Recurrence
from .transform import PrefixLike, as_prefix

__all__ = [
    "BinetForm",
    "MatrixModel",
    "binet_eval",
    "binet_shift",
    "companion_matrix",
    "model_from_recurrence",
    "matrix_transform_eval",
    "colored_count_bruteforce",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 12


class BinetForm:
    """Closed form a_n = sum_j c_j * rho_j^n with pairwise distinct roots.

    Weights and roots live in one field domain (rat or quad); integer
    inputs are promoted to rationals.
    """

    __slots__ = ("_terms", "_domain")

    def __init__(self, terms: Iterable[tuple[Scalar, Scalar]]):
        pairs = [(c, rho) for c, rho in terms]
        if not pairs:
            raise ValueError("a closed form needs at least one term")
        dom = RAT
        for c, rho in pairs:
            dom = join_domains(dom, join_domains(domain_of(c), domain_of(rho)))
        if dom.kind not in ("rat", "quad"):
            raise DomainMismatch(f"closed forms need a field domain, got {dom}")
        self._domain = dom
        self._terms = tuple(
            (promote(c, dom), promote(rho, dom)) for c, rho in pairs
        )
        roots = [rho for _, rho in self._terms]
        for i, x in enumerate(roots):
            for y in roots[i + 1 :]:
                if x == y:
                    raise ValueError(f"roots must be pairwise distinct, {x} repeats")

    @property
    def terms(self) -> tuple[tuple[Scalar, Scalar], ...]:
        return self._terms

    @property
    def domain(self) -> Domain:
        return self._domain

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BinetForm):
            return len(self._terms) == len(other._terms) and all(
                c1 == c2 and r1 == r2
                for (c1, r1), (c2, r2) in zip(self._terms, other._terms)
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"({render_scalar(c)})*({render_scalar(rho)})^n"
            for c, rho in self._terms
        )
        return f"BinetForm({body})"


def binet_eval(form: BinetForm, n: int) -> Scalar:
    """The value a_n = sum_j c_j rho_j^n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    acc = zero(form.domain)
    for c, rho in form.terms:
        acc = acc + c * rho**n
    return acc


def binet_shift(form: BinetForm, r: Scalar) -> BinetForm:
    """Closed form of the shift-r transform: same weights, roots + r."""
    target = join_domains(form.domain, domain_of(r))
    rp = promote(r, target)
    return BinetForm(
        [(promote(c, target), promote(rho, target) + rp) for c, rho in form.terms]
    )


class MatrixModel:
    """Sequence a_n = u^T M^n v with an exact square matrix M."""

    __slots__ = ("_matrix", "_u", "_v", "_domain")

    def __init__(
        self,
        matrix: Sequence[Sequence[Scalar]],
        u: Sequence[Scalar],
        v: Sequence[Scalar],
    ):
        rows = [list(row) for row in matrix]
        dim = len(rows)
        if dim == 0 or any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square and nonempty")
        if len(u) != dim or len(v) != dim:
            raise ValueError(f"u and v must have length {dim}")
        dom: Domain | None = None
        for value in (x for row in rows for x in row):
            dv = domain_of(value)
            dom = dv if dom is None else join_domains(dom, dv)
        for value in (*u, *v):
            dom = join_domains(dom, domain_of(value))
        self._domain = dom
        self._matrix = tuple(tuple(promote(x, dom) for x in row) for row in rows)
        self._u = tuple(promote(x, dom) for x in u)
        self._v = tuple(promote(x, dom) for x in v)

    @property
    def matrix(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._matrix

    @property
    def u(self) -> tuple[Scalar, ...]:
        return self._u

    @property
    def v(self) -> tuple[Scalar, ...]:
        return self._v

    @property
    def dim(self) -> int:
        return len(self._matrix)

    @property
    def domain(self) -> Domain:
        return self._domain

    def __repr__(self) -> str:
        return f"MatrixModel(dim={self.dim}, domain={self._domain})"


def companion_matrix(p: CharPoly) -> tuple[tuple[Scalar, ...], ...]:
    """Companion matrix of a monic characteristic polynomial.

    Ones on the superdiagonal; the bottom row holds the negated
    coefficients in ascending power order, so the matrix satisfies P(M) = 0
    and advances state vectors (a_n, ..., a_{n+d-1}).
    """
    if not p.is_monic:
        raise NonMonic("companion matrix needs a monic polynomial")
    d = p.degree
    dom = p.domain
    zero_s, one_s = zero(dom), one(dom)
    rows = []
    for i in range(d - 1):
        rows.append(tuple(one_s if j == i + 1 else zero_s for j in range(d)))
    rows.append(tuple(-p.coefficient_of_power(j) for j in range(d)))
    return tuple(rows)


def model_from_recurrence(rec: Recurrence) -> MatrixModel:
    """Matrix model with M the companion matrix and v the initial terms.

    With u = e_1, the state vector M^n v starts with a_n, so
    u^T M^n v = a_n for all n; the first d values reproduce the initial
    terms exactly.
    """
    m = companion_matrix(rec.poly)
    dom = rec.domain
    u = tuple(one(dom) if j == 0 else zero(dom) for j in range(rec.degree))
    return MatrixModel(m, u, rec.init)


def _mat_vec(m: Sequence[Sequence[Scalar]], w: Sequence[Scalar], zero_s: Scalar):
    out = []
    for row in m:
        acc = zero_s
        for x, y in zip(row, w):
            acc = acc + x * y
        out.append(acc)
    return out


def matrix_transform_eval(model: MatrixModel, r: Scalar, n: int) -> Scalar:
    """Value b_n = u^T (M + r I)^n v of the shift-r transform."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    target = join_domains(model.domain, domain_of(r))
    rp = promote(r, target)
    zero_s = zero(target)
    shifted = tuple(
        tuple(
            promote(x, target) + rp if i == j else promote(x, target)
            for j, x in enumerate(row)
        )
        for i, row in enumerate(model.matrix)
    )
    w = [promote(x, target) for x in model.v]
    for _ in range(n):
        w = _mat_vec(shifted, w, zero_s)
    acc = zero_s
    for x, y in zip(model.u, w):
        acc = acc + promote(x, target) * y
    return acc


def colored_count_bruteforce(a: PrefixLike, r: int, n: int) -> int:
    """Count (subset, structure, coloring) triples directly.

    Every subset K of {1..n} contributes a_{|K|} structures, each
    completed by one of r^(n-|K|) colorings of the complement; the total
    is the shift-r transform value b_n.  Enumerates all 2^n subsets, so n
    is capped at :data:`ENUMERATION_LIMIT`.
    """
    a = as_prefix(a)
    if a.domain.kind != "int":
        raise DomainMismatch(f"structure counts must be integers, got {a.domain}")
    if not isinstance(r, int) or isinstance(r, bool):
        raise TypeError("color count must be an int")
    if r < 0:
        raise NegativeInput(f"color count must be nonnegative, got {r}")
    if n < 0:
        raise NegativeInput(f"set size must be nonnegative, got {n}")
    if n > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"2^{n} subsets exceed the enumeration limit 2^{ENUMERATION_LIMIT}"
        )
    if n > len(a) - 1:
        raise PrefixTooShort(f"need structure counts up to size {n}, got {len(a)}")
    values = a.values
    if any(v < 0 for v in values[: n + 1]):
        raise NegativeInput("structure counts must be nonnegative")
    total = 0
    for mask in range(1 << n):
        k = mask.bit_count()
        total += values[k] * r ** (n - k)
    return total
