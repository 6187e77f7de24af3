"""
Statistic-refined Wilf equivalence over finite pattern collections.

Two pattern sets are st-Wilf equivalent when the generating polynomial
of the statistic over their avoidance sets agrees at every size.  The
engine decides equivalence over a finite size range 0..n_max, which is
evidence for the unbounded statement, not a proof; reports always carry
the range they were computed on.

The composite map f (reverse, complement, invert) transports pattern
containment: p contains t exactly when f(p) contains f(t).  It follows
that f maps the avoiders of a pattern set onto the avoiders of its
image set, and since f also carries the major index to charge, every
major-index equivalence fact has a charge twin under the relabeling
computed here.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ExhaustionError, VerificationError
from .perm_core import (
    Permutation,
    all_permutations,
    enumerate_avoiders,
    f_map,
    normalize_patterns,
)
from .statistics import CHARGE, MAJOR_INDEX, StatPolynomial, charge, major_index, parse_stat, stat_polynomial

ENV_MAX_EXHAUSTIVE = "PERMSTAT_MAX_EXHAUSTIVE"
DEFAULT_MAX_EXHAUSTIVE = 9

S3 = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))

# Image of each length-3 pattern under f; f maps Av_n(s) onto Av_n(F_CORRESPONDENCE[s]).
F_CORRESPONDENCE = {
    (1, 2, 3): (1, 2, 3),
    (1, 3, 2): (2, 1, 3),
    (2, 1, 3): (1, 3, 2),
    (2, 3, 1): (2, 3, 1),
    (3, 1, 2): (3, 1, 2),
    (3, 2, 1): (3, 2, 1),
}

# Singleton equivalence classes over S_3, per statistic.
_SINGLETON_CLASSES = {
    CHARGE: (
        ((1, 2, 3),),
        ((1, 3, 2), (3, 1, 2)),
        ((2, 1, 3), (2, 3, 1)),
        ((3, 2, 1),),
    ),
    MAJOR_INDEX: (
        ((1, 2, 3),),
        ((1, 3, 2), (2, 3, 1)),
        ((2, 1, 3), (3, 1, 2)),
        ((3, 2, 1),),
    ),
}

# The lone non-singleton class among 2-subsets of S_3 (excluding {123, 321}).
_PAIR_QUADRUPLE = {
    CHARGE: (
        ((1, 3, 2), (2, 1, 3)),
        ((2, 1, 3), (3, 1, 2)),
        ((1, 3, 2), (2, 3, 1)),
        ((2, 3, 1), (3, 1, 2)),
    ),
    MAJOR_INDEX: (
        ((1, 3, 2), (2, 1, 3)),
        ((1, 3, 2), (3, 1, 2)),
        ((2, 1, 3), (2, 3, 1)),
        ((2, 3, 1), (3, 1, 2)),
    ),
}


def max_exhaustive() -> int:
    """Size cap for exhaustive loops over S_n, overridable via the environment."""
    raw = os.environ.get(ENV_MAX_EXHAUSTIVE)
    if raw is None:
        return DEFAULT_MAX_EXHAUSTIVE
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_EXHAUSTIVE} must be an integer, got {raw!r}") from None


def _check_exhaustive(n: int) -> None:
    bound = max_exhaustive()
    if n > bound:
        raise ExhaustionError(
            f"n={n} exceeds the exhaustive bound {bound} "
            f"(raise {ENV_MAX_EXHAUSTIVE} to override)"
        )


def f_image(patterns: Iterable[Sequence[int]]) -> frozenset[Permutation]:
    """Apply f to each pattern; the avoiders of the image set are f of the avoiders."""
    return frozenset(f_map(t) for t in normalize_patterns(patterns))


def _set_key(patterns: frozenset[Permutation]) -> tuple[Permutation, ...]:
    return tuple(sorted(patterns))


@dataclass(frozen=True)
class WilfClassReport:
    """Partition of candidate pattern sets by their witness polynomials.

    Two candidates share a class exactly when their polynomial sequences
    agree for every n in n_range (inclusive).  Classes and members are
    in a canonical sorted order.
    """

    stat: str
    n_range: tuple[int, int]
    classes: tuple[tuple[frozenset[Permutation], ...], ...]
    witness_polynomials: dict[frozenset[Permutation], tuple[StatPolynomial, ...]]

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.classes))

    def class_of(self, patterns: Iterable[Sequence[int]]) -> tuple[frozenset[Permutation], ...]:
        target = normalize_patterns(patterns)
        for cls in self.classes:
            if target in cls:
                return cls
        raise KeyError(f"{sorted(target)} is not among the report's candidates")


def st_wilf_classes(
    candidates: Iterable[Iterable[Sequence[int]]],
    stat: str,
    n_max: int,
) -> WilfClassReport:
    """
    Partition candidate pattern sets by statistic polynomials over sizes 0..n_max.

    Every candidate's polynomials are retained as witnesses, so a report
    is self-contained evidence for its partition.
    """
    canonical = parse_stat(stat)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    sets = sorted({normalize_patterns(c) for c in candidates}, key=_set_key)
    if not sets:
        raise ValueError("candidates must be nonempty")
    witness = {
        pi: tuple(stat_polynomial(n, pi, canonical) for n in range(n_max + 1))
        for pi in sets
    }
    groups: dict[tuple, list[frozenset[Permutation]]] = {}
    for pi in sets:
        key = tuple(poly.coeffs for poly in witness[pi])
        groups.setdefault(key, []).append(pi)
    classes = tuple(
        sorted((tuple(members) for members in groups.values()), key=lambda c: _set_key(c[0]))
    )
    return WilfClassReport(
        stat=canonical,
        n_range=(0, n_max),
        classes=classes,
        witness_polynomials=witness,
    )


def verify_lemma1(n: int) -> bool:
    """Exhaustively check maj(p) == charge(f(p)) over all of S_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_exhaustive(n)
    return all(major_index(p) == charge(f_map(p)) for p in all_permutations(n))


def verify_lemma2(n: int) -> dict[Permutation, Permutation]:
    """
    Check that f maps each length-3 avoidance set onto the expected one.

    Returns the correspondence 123->123, 132->213, 213->132, 231->231,
    312->312, 321->321 once each image set has been materialized and
    compared; a mismatch raises with a counterexample permutation.  (At
    n <= 1 all six avoidance sets coincide, so the correspondence holds
    trivially.)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_exhaustive(n)
    avoider_sets = {s: frozenset(enumerate_avoiders(n, [s])) for s in S3}
    mapping: dict[Permutation, Permutation] = {}
    for source in S3:
        target = F_CORRESPONDENCE[source]
        image = frozenset(f_map(p) for p in avoider_sets[source])
        if image != avoider_sets[target]:
            witness = min(image ^ avoider_sets[target])
            raise VerificationError(
                f"f image of the {source}-avoiders differs from the {target}-avoiders "
                f"at n={n}; counterexample {witness}",
                witness=witness,
            )
        mapping[source] = target
    return mapping


def _check_against_expected(
    report: WilfClassReport,
    expected: tuple[tuple[Permutation, ...], ...],
    n_max: int,
    singletons: bool,
) -> None:
    """Compare a computed partition with the expected one.

    Below n_max = 6 accidental polynomial coincidences can merge classes,
    so only refinement is required there: each expected class must sit
    inside a single computed class.  From n_max = 6 on the partition must
    match exactly.
    """
    def as_sets(cls: tuple[tuple[Permutation, ...], ...]) -> set[frozenset]:
        if singletons:
            return {frozenset(frozenset([t]) for t in c) for c in cls}
        return {frozenset(frozenset(pair) for pair in c) for c in cls}

    computed = {frozenset(c) for c in report.classes}
    wanted = as_sets(expected)
    if n_max >= 6:
        if computed != wanted:
            raise VerificationError(
                f"class partition at n_max={n_max} does not match the expected one",
                witness=report.classes,
            )
    else:
        for cls in wanted:
            hosts = {id(c) for c in report.classes for member in cls if member in c}
            if len(hosts) != 1:
                raise VerificationError(
                    f"an expected class is split at n_max={n_max}",
                    witness=report.classes,
                )


def verify_theorem3(n_max: int, stat: str = CHARGE) -> WilfClassReport:
    """
    Classes of the six singleton length-3 pattern sets.

    For charge: {123}, {321}, {132, 312}, {213, 231}.  For the major
    index the mixed classes are {132, 231} and {213, 312} instead.
    """
    canonical = parse_stat(stat)
    if canonical not in _SINGLETON_CLASSES:
        raise ValueError(f"no expected singleton classes for statistic {canonical}")
    report = st_wilf_classes(([s] for s in S3), canonical, n_max)
    _check_against_expected(report, _SINGLETON_CLASSES[canonical], n_max, singletons=True)
    return report


def verify_theorem4(n_max: int, stat: str = CHARGE) -> WilfClassReport:
    """
    Classes of the fourteen 2-subsets of S_3 other than {123, 321}.

    Exactly one class has four members ({132,213}, {213,312}, {132,231},
    {231,312} for charge); every other class is a singleton.
    """
    canonical = parse_stat(stat)
    if canonical not in _PAIR_QUADRUPLE:
        raise ValueError(f"no expected pair classes for statistic {canonical}")
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    excluded = frozenset({(1, 2, 3), (3, 2, 1)})
    pairs = [
        frozenset({S3[i], S3[j]})
        for i in range(len(S3))
        for j in range(i + 1, len(S3))
    ]
    candidates = [p for p in pairs if p != excluded]
    report = st_wilf_classes(candidates, canonical, n_max)
    quadruple = _PAIR_QUADRUPLE[canonical]
    singleton_pairs = tuple(
        (tuple(sorted(p)),) for p in candidates
        if p not in {frozenset(q) for q in quadruple}
    )
    expected = (quadruple,) + singleton_pairs
    _check_against_expected(report, expected, n_max, singletons=False)
    return report
