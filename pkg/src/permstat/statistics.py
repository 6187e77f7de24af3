"""
Permutation statistics and their generating polynomials over avoidance sets.

Three statistics are supported: the major index (sum of descent
positions), the charge statistic, and the inversion count.  The set of
statistics is deliberately closed (a fixed enumeration, not a plugin point) so
every combination can be tested exhaustively.

The generating polynomial of a statistic over an avoidance set is held
as a dense vector of exact integer coefficients (Python integers never
overflow), trimmed so the trailing coefficient is nonzero; the zero
polynomial is the empty vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .perm_core import Permutation, enumerate_avoiders, normalize_patterns

MAJOR_INDEX = "major_index"
CHARGE = "charge"
INVERSIONS = "inversions"
STAT_NAMES = (MAJOR_INDEX, CHARGE, INVERSIONS)

_STAT_ALIASES = {
    "maj": MAJOR_INDEX,
    "major": MAJOR_INDEX,
    "major_index": MAJOR_INDEX,
    "ch": CHARGE,
    "charge": CHARGE,
    "inv": INVERSIONS,
    "inversions": INVERSIONS,
}


def parse_stat(name: str) -> str:
    """Resolve a statistic name or alias to its canonical form, or raise ValueError."""
    try:
        return _STAT_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown statistic {name!r}; expected one of maj, ch, inv"
        ) from None


def descent_set(p: Sequence[int]) -> set[int]:
    """Positions i (1-based) where p steps down, i.e. p[i] > p[i+1].

    >>> sorted(descent_set((3, 2, 8, 5, 7, 4, 6, 1, 9)))
    [1, 3, 5, 7]
    """
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def major_index(p: Sequence[int]) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(p))


def charge_values(p: Sequence[int]) -> dict[int, int]:
    """
    The charge value of each value in p.

    Value 1 always carries 0.  For i >= 2 the value i carries 0 when it
    sits to the right of i-1, and n+1-i when it sits to the left, so a
    nonzero charge value is determined by i alone.

    >>> charge_values((3, 2, 8, 5, 7, 4, 6, 1, 9))[3]
    7
    """
    n = len(p)
    if n == 0:
        return {}
    position = {v: i for i, v in enumerate(p)}
    out = {1: 0}
    for i in range(2, n + 1):
        out[i] = 0 if position[i] > position[i - 1] else n + 1 - i
    return out


def charge(p: Sequence[int]) -> int:
    """Total charge: the sum of all charge values.

    >>> charge((3, 2, 8, 5, 7, 4, 6, 1, 9))
    25
    """
    return sum(charge_values(p).values())


def inversions(p: Sequence[int]) -> int:
    """Number of pairs of positions i < j with p[i] > p[j]."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


_STAT_FUNCTIONS: dict[str, Callable[[Sequence[int]], int]] = {
    MAJOR_INDEX: major_index,
    CHARGE: charge,
    INVERSIONS: inversions,
}


def stat_function(stat: str) -> Callable[[Sequence[int]], int]:
    return _STAT_FUNCTIONS[parse_stat(stat)]


@dataclass(frozen=True)
class StatPolynomial:
    """Coefficient vector of sum(q**stat(p)) over the avoiders of a pattern set.

    coeffs[i] counts the avoiders whose statistic equals i; the vector
    carries no trailing zeros.  Summing the coefficients recovers the
    number of avoiders.
    """

    coeffs: tuple[int, ...]
    n: int
    patterns: frozenset[Permutation]
    stat: str

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficient vector must be trimmed of trailing zeros")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")
        if self.stat not in STAT_NAMES:
            raise ValueError(f"unknown statistic {self.stat!r}")

    @classmethod
    def from_counts(
        cls,
        counts: Sequence[int],
        *,
        n: int,
        patterns: Iterable[Sequence[int]],
        stat: str,
    ) -> "StatPolynomial":
        """Build a polynomial from a raw tally, trimming trailing zeros."""
        width = len(counts)
        while width and counts[width - 1] == 0:
            width -= 1
        return cls(
            coeffs=tuple(counts[:width]),
            n=n,
            patterns=normalize_patterns(patterns),
            stat=parse_stat(stat),
        )

    def total(self) -> int:
        """Number of permutations tallied, i.e. the value at q = 1."""
        return sum(self.coeffs)


def stat_polynomial(
    n: int,
    patterns: Iterable[Sequence[int]],
    stat: str,
    *,
    first: int | None = None,
) -> StatPolynomial:
    """
    Tally a statistic over the avoiders of a pattern set at size n.

    Streams the avoidance enumeration rather than materializing it.  With
    ``first`` set, tallies only the enumeration shard whose permutations
    start with that entry; shard polynomials merge to the full one.
    """
    canonical = parse_stat(stat)
    pats = normalize_patterns(patterns)
    fn = _STAT_FUNCTIONS[canonical]
    counts = [0] * (n * (n - 1) // 2 + 1)  # every statistic is at most C(n, 2)
    for p in enumerate_avoiders(n, pats, first=first):
        counts[fn(p)] += 1
    return StatPolynomial.from_counts(counts, n=n, patterns=pats, stat=canonical)


def merge_polynomials(parts: Iterable[StatPolynomial]) -> StatPolynomial:
    """Add shard polynomials coefficient-wise.

    Addition is associative and commutative, so a parallel build gives
    the same result in any merge order.  All parts must describe the
    same n, pattern set, and statistic.
    """
    polys = list(parts)
    if not polys:
        raise ValueError("nothing to merge")
    head = polys[0]
    for p in polys[1:]:
        if (p.n, p.patterns, p.stat) != (head.n, head.patterns, head.stat):
            raise ValueError("cannot merge polynomials with different metadata")
    counts = [0] * max(len(p.coeffs) for p in polys)
    for p in polys:
        for i, c in enumerate(p.coeffs):
            counts[i] += c
    return StatPolynomial.from_counts(counts, n=head.n, patterns=head.patterns, stat=head.stat)


def q_factorial(n: int) -> tuple[int, ...]:
    """
    Coefficients of [n]_q! = (1)(1+q)(1+q+q^2)...(1+...+q^(n-1)).

    Each of the three statistics here is distributed over all of S_n
    with exactly these coefficients (they are Mahonian).

    >>> q_factorial(3)
    (1, 2, 2, 1)
    """
    coeffs = [1]
    for k in range(2, n + 1):
        out = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j in range(k):
                out[i + j] += c
        coeffs = out
    return tuple(coeffs)
