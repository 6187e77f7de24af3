"""
Permutations in one-line notation, pattern containment, and avoidance sets.

A permutation of size n is a sequence containing each of the values
1..n exactly once; functions accept any integer sequence in that form
and return permutations as tuples.  The empty tuple is the unique
permutation of size 0.  Positions, like values, are 1-based wherever
they appear in results (descent positions, inverse images), matching
the usual one-line-notation conventions.

A pattern set is any collection of permutations; it is normalized to a
frozenset, so duplicates collapse and order is irrelevant.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Permutation = tuple[int, ...]
PatternSet = "frozenset[Permutation]"


def is_permutation(word: Sequence[int]) -> bool:
    """
    Check that word contains each of 1..len(word) exactly once.

    >>> [is_permutation(w) for w in ((), (1,), (2, 1), (2, 2), (1, 3))]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def check_permutation(word: Sequence[int]) -> Permutation:
    """Return word as a tuple, raising ValueError if it is not a permutation."""
    p = tuple(word)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of size n in lexicographic order (n! of them)."""
    return iter(itertools.permutations(range(1, n + 1)))


def inverse(p: Sequence[int]) -> Permutation:
    """
    The inverse permutation: position i holds the position of value i in p.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    >>> inverse(())
    ()
    """
    q = [0] * len(p)
    for position, value in enumerate(p, start=1):
        q[value - 1] = position
    return tuple(q)


def reverse(p: Sequence[int]) -> Permutation:
    """The permutation read right to left."""
    return tuple(p[::-1])


def complement(p: Sequence[int]) -> Permutation:
    """Replace each value v by n+1-v, flipping the permutation upside down."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def f_map(p: Sequence[int]) -> Permutation:
    """
    Reverse, then complement, then invert.

    A bijection on permutations of each size (a composite of three
    bijections); it carries the major index to the charge statistic.

    >>> f_map((1, 3, 2))
    (2, 1, 3)
    """
    return inverse(complement(reverse(p)))


def normalize_patterns(patterns: Iterable[Sequence[int]]) -> frozenset[Permutation]:
    """Validate a collection of patterns and collapse it to a frozenset."""
    return frozenset(check_permutation(t) for t in patterns)


def _creates3(prefix: Sequence[int], k: int, v: int, pattern: Permutation) -> bool:
    """Does appending v to prefix[:k] complete a copy of a length-3 pattern?

    Single left-to-right scan; v plays the pattern's final letter.
    """
    if k < 2:
        return False
    if pattern == (1, 2, 3):  # want x < y < v to the left
        lo = float("inf")
        for j in range(k):
            c = prefix[j]
            if c < v and lo < c:
                return True
            if c < lo:
                lo = c
    elif pattern == (3, 2, 1):  # want x > y > v
        hi = 0
        for j in range(k):
            c = prefix[j]
            if c > v and hi > c:
                return True
            if c > hi:
                hi = c
    elif pattern == (1, 3, 2):  # want x < v, then y > v
        lo = float("inf")
        for j in range(k):
            c = prefix[j]
            if c > v and lo < v:
                return True
            if c < lo:
                lo = c
    elif pattern == (2, 1, 3):  # want a descent x > y below v
        hi_below = 0
        for j in range(k):
            c = prefix[j]
            if c < v:
                if hi_below > c:
                    return True
                if c > hi_below:
                    hi_below = c
    elif pattern == (2, 3, 1):  # want an ascent x < y above v
        lo_above = float("inf")
        for j in range(k):
            c = prefix[j]
            if c > v:
                if lo_above < c:
                    return True
                if c < lo_above:
                    lo_above = c
    elif pattern == (3, 1, 2):  # want x > v, then y < v
        hi = 0
        for j in range(k):
            c = prefix[j]
            if c < v and hi > v:
                return True
            if c > hi:
                hi = c
    else:
        raise ValueError(f"not a length-3 pattern: {pattern}")
    return False


def _creates_generic(prefix: Sequence[int], k: int, v: int, pattern: Permutation) -> bool:
    """Backtracking version of the incremental check, for any pattern length.

    Matches pattern[:-1] against prefix[:k] with v fixed as the final
    letter, pruning any branch that breaks order-isomorphism early.
    """
    m = len(pattern)
    if m == 0:
        return True
    if m - 1 > k:
        return False
    last = pattern[-1]
    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == m - 1:
            return True
        for pos in range(start, k - (m - 2 - j)):
            c = prefix[pos]
            if (c < v) != (pattern[j] < last):
                continue
            if any((c < chosen[t]) != (pattern[j] < pattern[t]) for t in range(j)):
                continue
            chosen.append(c)
            if extend(j + 1, pos + 1):
                return True
            chosen.pop()
        return False

    return extend(0, 0)


def _contains_generic(p: Sequence[int], pattern: Permutation) -> bool:
    """Reference containment test: backtracking over positions with pruning."""
    m = len(pattern)
    n = len(p)
    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == m:
            return True
        for pos in range(start, n - (m - 1 - j)):
            c = p[pos]
            if any((c < chosen[t]) != (pattern[j] < pattern[t]) for t in range(j)):
                continue
            chosen.append(c)
            if extend(j + 1, pos + 1):
                return True
            chosen.pop()
        return False

    return extend(0, 0)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff p has a subsequence order-isomorphic to pattern.

    A pattern longer than p is never contained; the empty pattern is
    contained in everything.  Length-3 patterns take a quadratic scan,
    anything else the generic backtracking search (the two agree, and
    the test suite checks that exhaustively).

    >>> contains_pattern((3, 2, 8, 5, 7, 4, 6, 1, 9), (1, 2, 3))
    True
    >>> contains_pattern((3, 2, 1), (1, 2))
    False
    """
    pat = tuple(pattern)
    m = len(pat)
    if m > len(p):
        return False
    if m == 0:
        return True
    if m == 3:
        return any(_creates3(p, end, p[end], pat) for end in range(2, len(p)))
    return _contains_generic(p, pat)


def avoids_all(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff p contains no pattern from the set (vacuously true for an empty set)."""
    return not any(contains_pattern(p, pat) for pat in normalize_patterns(patterns))


def enumerate_avoiders(
    n: int,
    patterns: Iterable[Sequence[int]],
    *,
    first: int | None = None,
) -> Iterator[Permutation]:
    """
    Yield the size-n permutations avoiding every pattern, in lexicographic order.

    Builds permutations prefix by prefix and never extends a prefix that
    already contains a forbidden pattern, which is sound because containment is
    monotone under extension.  With ``first`` set, only permutations whose
    first entry equals it are produced: the shards for first = 1..n are
    disjoint and their union (in that order) is the full stream, so callers
    may enumerate shards in parallel.

    >>> list(enumerate_avoiders(3, [(3, 2, 1)]))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pats = normalize_patterns(patterns)
    if first is not None and not 1 <= first <= n:
        raise ValueError(f"first entry must lie in 1..{n}, got {first}")
    if () in pats:
        return  # the empty pattern occurs in every permutation, even the empty one
    live = [t for t in pats if len(t) <= n]  # longer patterns can never occur
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend() -> Iterator[Permutation]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        candidates: Iterable[int]
        candidates = (first,) if k == 0 and first is not None else range(1, n + 1)
        for v in candidates:
            if used[v]:
                continue
            blocked = any(
                _creates3(prefix, k, v, t) if len(t) == 3 else _creates_generic(prefix, k, v, t)
                for t in live
            )
            if blocked:
                continue
            used[v] = True
            prefix.append(v)
            yield from extend()
            prefix.pop()
            used[v] = False

    yield from extend()
