"""Brute-force ground truth for word-ideal questions.

Membership tests for the two word ideals attached to a monomial set, a
bounded enumeration of minimal word generators driven by any factor-closed
membership predicate, and a finiteness probe that cross-checks the fast
finite-generation criterion.  Everything here is deliberately independent
of the fast decision procedures so it can referee them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    BudgetExceededError,
    Monomial,
    Ordering,
    Word,
    divides,
    ensure_nonunit,
    monomial_set,
    pi,
    sorted_words,
)
from .sorted_ideal import complete_enumeration_bound

DEFAULT_MEMBERSHIP_BUDGET = 20_000_000


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of a bounded minimal-generator enumeration.

    ``saturated`` records whether the top half of the searched length range
    (lengths strictly above ``cap // 2 + 1``) contained no minimal
    generator; an unsaturated report is evidence that generators keep
    appearing near the cap.
    """

    cap: int
    minimal_generators: tuple[Word, ...]
    saturated: bool


def _sorted_segments(u: Word, ord: Ordering) -> list[tuple[int, ...]]:
    """Maximal weakly increasing (by rank) blocks of ``u``."""
    segs = []
    current: list[int] = []
    for x in u.letters:
        if current and ord.rank[x] < ord.rank[current[-1]]:
            segs.append(tuple(current))
            current = []
        current.append(x)
    if current:
        segs.append(tuple(current))
    return segs


def word_in_sorted_ideal(u: Word, M: Sequence[Monomial], ord: Ordering) -> bool:
    """Membership in the ideal generated by sorted words of multiples of M.

    A word belongs exactly when it contains a sorted factor whose letter
    counts dominate some member; maximal sorted segments are the only
    candidates worth checking, and within a segment the whole segment is
    the best one.
    """
    ms = monomial_set(M)
    ensure_nonunit(ms, "M")
    if not ms:
        return False
    n = ord.n
    for seg in _sorted_segments(u, ord):
        counts = pi(Word(seg), n)
        if any(divides(m, counts) for m in ms):
            return True
    return False


def word_in_preimage(u: Word, M: Sequence[Monomial]) -> bool:
    """Membership in the full preimage: some member divides the letter counts."""
    ms = monomial_set(M)
    ensure_nonunit(ms, "M")
    if not ms:
        return False
    counts = pi(u, ms[0].n)
    return any(divides(m, counts) for m in ms)


def enumerate_minimal_generators(
    membership: Callable[[Word], bool],
    alphabet_size: int,
    cap: int,
    budget: int = DEFAULT_MEMBERSHIP_BUDGET,
) -> EnumerationReport:
    """All minimal generators of a factor-closed ideal, up to length ``cap``.

    ``membership`` must be factor-monotone: a word is in the ideal whenever
    one of its factors is.  A word is a minimal generator when it is in the
    ideal but dropping its first or its last letter leaves the ideal.  The
    enumeration walks the tree of non-members breadth-first by length
    (non-members are closed under factors, so every non-member extends a
    shorter one) and tests each one-letter extension once.
    """
    if cap < 0 or alphabet_size < 1:
        raise ValueError("cap must be nonnegative and the alphabet nonempty")
    calls = 0

    def member(w: Word) -> bool:
        nonlocal calls
        calls += 1
        if calls > budget:
            raise BudgetExceededError(
                f"membership budget of {budget} tests exceeded at length {len(w)}"
            )
        return membership(w)

    empty = Word(())
    if member(empty):
        return EnumerationReport(cap, (empty,), True)

    found: list[Word] = []
    nonmembers: set[tuple[int, ...]] = {()}
    for length in range(1, cap + 1):
        next_nonmembers: set[tuple[int, ...]] = set()
        for stem in nonmembers:
            for z in range(alphabet_size):
                w = stem + (z,)
                if member(Word(w)):
                    if w[1:] in nonmembers:
                        found.append(Word(w))
                else:
                    next_nonmembers.add(w)
        nonmembers = next_nonmembers
        if not nonmembers:
            break
    threshold = cap // 2 + 1
    saturated = all(len(w) <= threshold for w in found)
    return EnumerationReport(cap, sorted_words(found), saturated)


def sorted_ideal_report(
    M: Sequence[Monomial],
    ord: Ordering,
    cap: int,
    budget: int = DEFAULT_MEMBERSHIP_BUDGET,
) -> EnumerationReport:
    ms = monomial_set(M)
    return enumerate_minimal_generators(
        lambda u: word_in_sorted_ideal(u, ms, ord), ord.n, cap, budget
    )


def preimage_report(
    M: Sequence[Monomial],
    cap: int,
    budget: int = DEFAULT_MEMBERSHIP_BUDGET,
) -> EnumerationReport:
    ms = monomial_set(M)
    if not ms:
        raise ValueError("preimage enumeration needs a nonempty monomial set")
    return enumerate_minimal_generators(
        lambda u: word_in_preimage(u, ms), ms[0].n, cap, budget
    )


def finiteness_probe(
    M: Sequence[Monomial],
    ord: Ordering,
    budget: int = DEFAULT_MEMBERSHIP_BUDGET,
) -> bool:
    """Finiteness evidence for the sorted-word ideal, by exhaustion.

    Positive instances have all minimal generators within the completeness
    bound, so finding none beyond it (searching two letters past, to expose
    the pumped families of negative instances) decides finite generation at
    desk scale.
    """
    bound = complete_enumeration_bound(M, ord)
    report = sorted_ideal_report(M, ord, bound + 2, budget)
    return all(len(w) <= bound for w in report.minimal_generators)
