"""
Standard Young tableaux, row insertion, and ballot-word machinery.

Tableaux use the English convention: row 1 is the longest row, rows are
tuples of increasing entries, and columns increase downward.  A tableau
with at most two rows is encoded by its ballot word: the {1,2}-word
whose i-th letter names the row receiving entry i; every prefix of such
a word has at least as many 1s as 2s.

The charge statistic is constant on each Knuth class (the permutations
sharing an insertion tableau P), and a permutation avoids 321 exactly
when its P tableau has at most two rows.  Those two facts let the charge
polynomial over 321-avoiders be assembled from two-row ballot words
alone, which is what makes size 15 feasible.
"""
from __future__ import annotations

import functools
from bisect import bisect_left, bisect_right
from itertools import chain
from math import comb
from typing import Iterator, Sequence

from .errors import ExhaustionError, VerificationError
from .perm_core import Permutation, enumerate_avoiders
from .statistics import CHARGE, MAJOR_INDEX, StatPolynomial, charge, stat_polynomial

Tableau = tuple[tuple[int, ...], ...]
BallotWord = tuple[int, ...]

_PATTERN_321 = (3, 2, 1)

# Refusal limits: beyond these the exhaustive checks would enumerate
# hundreds of millions of objects, so they refuse instead of running.
MAX_PARITY_K = 4
MAX_LEMMA5_K = 10
MAX_INVOLUTION_WORDS = 2_000_000


def tableau_shape(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(len(row) for row in rows)


def is_standard_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """Entries are exactly 1..n, rows and columns strictly increase, shape is a partition."""
    shape = tableau_shape(rows)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return False
    if shape and shape[-1] == 0:
        return False
    entries = sorted(chain.from_iterable(rows))
    if entries != list(range(1, sum(shape) + 1)):
        return False
    for row in rows:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for r in range(1, len(rows)):
        if any(rows[r - 1][c] >= rows[r][c] for c in range(len(rows[r]))):
            return False
    return True


def check_standard_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    t = tuple(tuple(row) for row in rows)
    if not is_standard_tableau(t):
        raise ValueError(f"not a standard tableau: {t}")
    return t


def rsk_insert(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """
    Row-insert p, returning the insertion tableau P and recording tableau Q.

    P and Q always share a shape, and the map is injective: distinct
    permutations give distinct pairs.

    >>> rsk_insert((1, 3, 2))
    (((1, 2), (3,)), ((1, 2), (3,)))
    """
    rows_p: list[list[int]] = []
    rows_q: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = 0
        while True:
            if r == len(rows_p):
                rows_p.append([x])
                rows_q.append([step])
                break
            row = rows_p[r]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                rows_q[r].append(step)
                break
            x, row[i] = row[i], x  # bump the leftmost larger entry down a row
            r += 1
    return tuple(map(tuple, rows_p)), tuple(map(tuple, rows_q))


def rsk_inverse(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> Permutation:
    """Recover the unique permutation inserting to (P, Q); shapes must match."""
    P = check_standard_tableau(P)
    Q = check_standard_tableau(Q)
    if tableau_shape(P) != tableau_shape(Q):
        raise ValueError(
            f"shape mismatch: {tableau_shape(P)} versus {tableau_shape(Q)}"
        )
    rows = [list(row) for row in P]
    where = {entry: r for r, row in enumerate(Q) for entry in row}
    n = sum(len(row) for row in P)
    out = []
    for step in range(n, 0, -1):
        r = where[step]
        x = rows[r].pop()
        for rr in range(r - 1, -1, -1):  # reverse-bump toward the top row
            row = rows[rr]
            j = bisect_left(row, x) - 1
            x, row[j] = row[j], x
        out.append(x)
    return tuple(reversed(out))


def reading_word(P: Sequence[Sequence[int]]) -> Permutation:
    """
    Rows concatenated bottom to top, each left to right.

    For a standard tableau this is a permutation whose insertion tableau
    is P itself, which makes it the canonical representative of P's
    Knuth class.

    >>> reading_word(((1, 2), (3,)))
    (3, 1, 2)
    """
    return tuple(chain.from_iterable(reversed(tuple(tuple(r) for r in P))))


def is_ballot_word(word: Sequence[int]) -> bool:
    balance = 0
    for letter in word:
        if letter == 1:
            balance += 1
        elif letter == 2:
            balance -= 1
        else:
            return False
        if balance < 0:
            return False
    return True


def _check_ballot(word: Sequence[int]) -> BallotWord:
    w = tuple(word)
    if not is_ballot_word(w):
        raise ValueError(f"not a ballot word over {{1,2}}: {w}")
    return w


def ballot_to_tableau(word: Sequence[int]) -> Tableau:
    """The (at most two row) standard tableau whose entry i sits in row word[i-1]."""
    w = _check_ballot(word)
    top = tuple(i for i, letter in enumerate(w, start=1) if letter == 1)
    bottom = tuple(i for i, letter in enumerate(w, start=1) if letter == 2)
    if bottom:
        return (top, bottom)
    return (top,) if top else ()


def tableau_to_ballot(P: Sequence[Sequence[int]]) -> BallotWord:
    """Inverse of ballot_to_tableau; P must be standard with at most two rows."""
    t = check_standard_tableau(P)
    if len(t) > 2:
        raise ValueError(f"tableau has {len(t)} rows, expected at most 2")
    n = sum(len(row) for row in t)
    word = [0] * n
    for r, row in enumerate(t, start=1):
        for entry in row:
            word[entry - 1] = r
    return tuple(word)


def enumerate_two_row_syt(n: int) -> Iterator[BallotWord]:
    """
    Ballot words of length n with at least one 2, in lexicographic order.

    These encode the standard tableaux with exactly two rows; there are
    binomial(n, floor(n/2)) - 1 of them (sizes 0 and 1 give none).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    word: list[int] = []

    def extend(balance: int) -> Iterator[BallotWord]:
        if len(word) == n:
            yield tuple(word)
            return
        word.append(1)
        yield from extend(balance + 1)
        word.pop()
        if balance > 0:
            word.append(2)
            yield from extend(balance - 1)
            word.pop()

    for w in extend(0):
        if 2 in w:
            yield w


def count_two_row(n: int) -> int:
    """Number of two-row standard tableaux of size n, by the central binomial."""
    if n <= 1:
        return 0
    return comb(n, n // 2) - 1


def syt_count_two_row_shape(n: int, r: int) -> int:
    """
    Standard tableaux of shape (n-r, r), via the ballot reflection count.

    Equals binomial(n, r) - binomial(n, r-1), the number of ballot words
    of length n with exactly r 2s.
    """
    if not 0 <= r <= n // 2:
        raise ValueError(f"second row length {r} out of range 0..{n // 2}")
    return comb(n, r) - (comb(n, r - 1) if r >= 1 else 0)


@functools.cache
def _completions(m: int, balance: int) -> int:
    """{1,2}-words of length m keeping balance + #1s - #2s >= 0 in every prefix."""
    if m == 0:
        return 1
    total = _completions(m - 1, balance + 1)
    if balance > 0:
        total += _completions(m - 1, balance - 1)
    return total


def ballot_rank(word: Sequence[int]) -> int:
    """
    Position of a two-row ballot word in the lexicographic stream of its length.

    The all-1s word encodes a single-row tableau and has no rank here.
    Runs in O(n^2) via the prefix-completion table, not by enumeration.
    """
    w = _check_ballot(word)
    if 2 not in w:
        raise ValueError("all-1s word encodes a single-row tableau and has no rank")
    rank_all = 0
    balance = 0
    for i, letter in enumerate(w):
        rest = len(w) - i - 1
        if letter == 2:
            rank_all += _completions(rest, balance + 1)  # words placing 1 here come first
            balance -= 1
        else:
            balance += 1
    return rank_all - 1  # the all-1s word is lexicographically first overall


def ballot_unrank(n: int, r: int) -> BallotWord:
    """Inverse of ballot_rank: the rank-r two-row ballot word of length n."""
    if not 0 <= r < count_two_row(n):
        raise ValueError(f"rank {r} out of range 0..{count_two_row(n) - 1} for n={n}")
    target = r + 1
    balance = 0
    word = []
    for i in range(n):
        rest = n - i - 1
        ones_here = _completions(rest, balance + 1)
        if target < ones_here:
            word.append(1)
            balance += 1
        else:
            target -= ones_here
            word.append(2)
            balance -= 1
            assert balance >= 0
    return tuple(word)


def involution_phi(word: Sequence[int]) -> BallotWord:
    """
    A fixed-point-free involution on the two-row ballot words of one length.

    Pairs lexicographic ranks 2t and 2t+1, so applying it twice is the
    identity and no word maps to itself.  Requires the number of two-row
    words to be even, which holds exactly at sizes of the form 2**k - 1;
    other sizes are refused rather than silently fixing a point.

    >>> involution_phi((1, 1, 2))
    (1, 2, 1)
    """
    w = _check_ballot(word)
    if 2 not in w:
        raise ValueError("word encodes a single-row tableau; the involution needs two rows")
    m = count_two_row(len(w))
    if m % 2 != 0:
        raise ValueError(
            f"no fixed-point-free involution guaranteed: {m} two-row words at n={len(w)}"
        )
    return ballot_unrank(len(w), ballot_rank(w) ^ 1)


def verify_involution(n: int) -> bool:
    """Check the involution laws over every two-row word of length n."""
    m = count_two_row(n)
    if m % 2 != 0:
        raise ValueError(
            f"no fixed-point-free involution guaranteed: {m} two-row words at n={n}"
        )
    if m > MAX_INVOLUTION_WORDS:
        raise ExhaustionError(f"{m} two-row words at n={n} exceeds the exhaustive limit")
    for w in enumerate_two_row_syt(n):
        image = involution_phi(w)
        if image == w:
            raise VerificationError(f"fixed point at {w}", witness=w)
        if involution_phi(image) != w:
            raise VerificationError(f"not an involution at {w}", witness=w)
    return True


def verify_lemma5(k: int) -> bool:
    """
    Check that the number of 321-avoiders of size 2**k - 1 is odd.

    The count is assembled as 1 + sum of squared two-row shape counts
    (one square per insertion-tableau shape); for k <= 3 the assembly is
    cross-checked against direct enumeration.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > MAX_LEMMA5_K:
        raise ExhaustionError(f"k={k} exceeds the supported bound {MAX_LEMMA5_K}")
    n = 2**k - 1
    total = 1 + sum(syt_count_two_row_shape(n, r) ** 2 for r in range(1, n // 2 + 1))
    if n <= 7:
        enumerated = sum(1 for _ in enumerate_avoiders(n, [_PATTERN_321]))
        if enumerated != total:
            raise VerificationError(
                f"shape-count identity failed at n={n}: {total} != {enumerated}"
            )
    return total % 2 == 1


def fast_ch_321(n: int) -> StatPolynomial:
    """
    The charge polynomial over 321-avoiders of size n, without enumerating them.

    Walks the two-row ballot words: each word's tableau P contributes its
    Knuth-class charge (read off the reading word) with multiplicity equal
    to the number of recording tableaux of its shape.  The single-row
    tableau contributes the identity permutation at charge 0.
    """
    counts = [0] * (n * (n - 1) // 2 + 1)
    counts[0] = 1
    for w in enumerate_two_row_syt(n):
        rw = reading_word(ballot_to_tableau(w))
        counts[charge(rw)] += syt_count_two_row_shape(n, w.count(2))
    return StatPolynomial.from_counts(
        counts, n=n, patterns=[_PATTERN_321], stat=CHARGE
    )


def _has_parity_pattern(poly: StatPolynomial) -> bool:
    """Constant coefficient 1, every higher coefficient even."""
    if not poly.coeffs or poly.coeffs[0] != 1:
        return False
    return all(c % 2 == 0 for c in poly.coeffs[1:])


def verify_theorem8(k: int) -> bool:
    """
    Parity of the charge polynomial over 321-avoiders at size 2**k - 1.

    Uses the fast tableau assembly; for k <= 3 the polynomial is also
    cross-checked against brute-force enumeration.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > MAX_PARITY_K:
        raise ExhaustionError(
            f"k={k} needs {count_two_row(2**k - 1)} ballot words; refusing beyond k={MAX_PARITY_K}"
        )
    n = 2**k - 1
    poly = fast_ch_321(n)
    if k <= 3:
        brute = stat_polynomial(n, [_PATTERN_321], CHARGE)
        if poly != brute:
            raise VerificationError(
                f"fast charge polynomial disagrees with enumeration at n={n}",
                witness=(poly.coeffs, brute.coeffs),
            )
    return _has_parity_pattern(poly)


def verify_corollary9(k: int) -> bool:
    """
    Parity of the major-index polynomial over 321-avoiders at size 2**k - 1.

    Brute force for k <= 3.  For k = 4 the major-index and charge
    polynomials over 321-avoiders coincide (the reverse-complement-
    inverse map is a bijection of the avoider set carrying one statistic
    to the other), so the fast charge assembly answers for both.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > MAX_PARITY_K:
        raise ExhaustionError(f"k={k} is beyond the supported bound {MAX_PARITY_K}")
    n = 2**k - 1
    if k <= 3:
        poly = stat_polynomial(n, [_PATTERN_321], MAJOR_INDEX)
    else:
        poly = fast_ch_321(n)
    return _has_parity_pattern(poly)
