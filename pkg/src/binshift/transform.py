"""Sequence prefixes and the shift-parameterized binomial transform.

The transform with shift ``r`` maps a prefix a = (a_0, ..., a_N) to

    b_n = sum_{k=0}^{n} C(n, k) * r**(n-k) * a_k

for each n up to the requested index.  The family composes additively in
the shift (applying s then r equals applying r + s), the inverse of shift
r is shift -r, and the classical binomial transform iterated m times is
the single transform with shift m.  Index n of the output depends only on
inputs 0..n, so a prefix of length N+1 determines outputs 0..N exactly.

Each row is evaluated by a Horner pass over a binomial row that is updated
in place, so a full prefix costs O(N^2) exact operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from .errors import PrefixTooShort
from .exactnum import (
    Domain,
    Scalar,
    domain_of,
    join_domains,
    promote,
)

__all__ = [
    "SequencePrefix",
    "as_prefix",
    "apply_transform",
    "compose_transforms",
    "inverse_transform",
    "iterated_binomial",
]


class SequencePrefix:
    """Finite prefix (a_0, ..., a_N) of a sequence over one scalar domain.

    The domain is the join of the domains of the given values (further
    widened by the optional ``domain`` argument) and every stored value is
    promoted into it.  Prefixes are immutable and compare by value, so a
    prefix of ``Fraction`` values equals the integer prefix it came from.
    """

    __slots__ = ("_domain", "_values")

    def __init__(self, values: Iterable[Scalar], domain: Domain | None = None):
        vals = list(values)
        if not vals:
            raise ValueError("a prefix needs at least the index-0 term")
        dom = domain
        for v in vals:
            dv = domain_of(v)
            dom = dv if dom is None else join_domains(dom, dv)
        self._domain = dom
        self._values = tuple(promote(v, dom) for v in vals)

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def values(self) -> tuple[Scalar, ...]:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._values)

    def __getitem__(self, n: int) -> Scalar:
        return self._values[n]

    def truncated(self, n_max: int) -> "SequencePrefix":
        """The sub-prefix of indices 0..n_max."""
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        if n_max >= len(self._values):
            raise PrefixTooShort(
                f"prefix has {len(self._values)} terms, need {n_max + 1}"
            )
        return SequencePrefix(self._values[: n_max + 1], self._domain)

    def promoted(self, dom: Domain) -> "SequencePrefix":
        target = join_domains(self._domain, dom)
        return SequencePrefix(self._values, target)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SequencePrefix):
            if len(self._values) != len(other._values):
                return False
            return all(x == y for x, y in zip(self._values, other._values))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for v in self._values[:8])
        if len(self._values) > 8:
            shown += ", ..."
        return f"SequencePrefix([{shown}], domain={self._domain})"


PrefixLike = Union[SequencePrefix, Iterable[Scalar]]


def as_prefix(values: PrefixLike, domain: Domain | None = None) -> SequencePrefix:
    """Coerce a prefix or plain iterable of scalars into a SequencePrefix."""
    if isinstance(values, SequencePrefix):
        return values if domain is None else values.promoted(domain)
    return SequencePrefix(values, domain)


def apply_transform(
    a: PrefixLike, r: Scalar, n_max: int | None = None
) -> SequencePrefix:
    """Binomial transform of ``a`` with shift ``r``, indices 0..n_max.

    ``n_max`` defaults to the last index the input prefix determines.  The
    computation happens in the join of the prefix domain and the domain of
    ``r``, so an integer prefix shifted by 1/2 yields rationals.
    """
    a = as_prefix(a)
    if n_max is None:
        n_max = len(a) - 1
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > len(a) - 1:
        raise PrefixTooShort(
            f"prefix has {len(a)} terms, need {n_max + 1} for index {n_max}"
        )
    target = join_domains(a.domain, domain_of(r))
    rp = promote(r, target)
    vals = [promote(v, target) for v in a.values[: n_max + 1]]
    out = []
    row = [1]  # binomial row C(n, .), updated in place as n advances
    for n in range(n_max + 1):
        acc = vals[0]
        for k in range(1, n + 1):
            acc = acc * rp + row[k] * vals[k]
        out.append(acc)
        row.append(1)
        for k in range(n, 0, -1):
            row[k] += row[k - 1]
    return SequencePrefix(out, target)


def compose_transforms(
    a: PrefixLike, r: Scalar, s: Scalar, n_max: int | None = None
) -> SequencePrefix:
    """Apply shift ``s`` then shift ``r`` in one pass, i.e. shift r + s."""
    shift_dom = join_domains(domain_of(r), domain_of(s))
    total = promote(r, shift_dom) + promote(s, shift_dom)
    return apply_transform(a, total, n_max)


def inverse_transform(
    b: PrefixLike, r: Scalar, n_max: int | None = None
) -> SequencePrefix:
    """Undo the shift-``r`` transform (the transform with shift ``-r``)."""
    return apply_transform(b, -r, n_max)


def iterated_binomial(
    a: PrefixLike, m: int, n_max: int | None = None
) -> SequencePrefix:
    """The classical binomial transform applied ``m`` times (shift m)."""
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError("iteration count must be an int")
    if m < 0:
        raise ValueError("iteration count must be nonnegative")
    return apply_transform(a, m, n_max)
