"""Finite generation of the sorted-word ideal of a monomial antichain.

Given an antichain ``M`` and a letter ordering, the word ideal generated by
the sorted words of all multiples of ``M`` is finitely generated exactly
when every internal letter of every member is "covered": some member has
that letter extremal and divides the first member once the letter is
erased.  This module decides that criterion, emits generating sets and
minimal generators, evaluates the size bound, and lifts the answer to the
leading-word data of a finite noncommutative Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    Monomial,
    NotFinitelyGeneratedError,
    Ordering,
    Word,
    divides,
    ensure_antichain,
    ensure_nonunit,
    erase,
    extremal_degree_max,
    extremal_internal,
    internal_letters,
    is_extremal,
    monomial_set,
    sigma,
    sorted_words,
    word_is_factor,
)


@dataclass(frozen=True)
class FgWitness:
    """Decision plus, on a negative answer, the first failing pair."""

    verdict: bool
    violator: tuple[Monomial, int] | None = None


def _scan_order(M: Sequence[Monomial], ord: Ordering) -> list[Monomial]:
    # Members are scanned by their sorted word, lexicographically in rank;
    # this reproduces the reference violators independently of input order.
    return sorted(M, key=lambda m: tuple(ord.rank[x] for x in sigma(m, ord).letters))


def _covered(M: Sequence[Monomial], w: Monomial, x: int, ord: Ordering) -> bool:
    return any(
        is_extremal(s, x, ord) and divides(erase(s, x), w) for s in M
    )


def is_fg_sorted(M: Sequence[Monomial], ord: Ordering) -> FgWitness:
    """Decide finite generation of the sorted-word ideal of ``M``.

    ``M`` must be an antichain of nonunits.  The verdict is positive iff for
    every member ``w`` and every letter ``x`` internal to ``w`` some member
    has ``x`` extremal and, with ``x`` erased, divides ``w``.
    """
    ms = ensure_antichain(M, "M")
    ensure_nonunit(ms, "M")
    for w in _scan_order(ms, ord):
        for x in sorted(internal_letters(w, ord), key=lambda i: ord.rank[i]):
            if not _covered(ms, w, x, ord):
                return FgWitness(False, (w, x))
    return FgWitness(True, None)


def fg_generating_set(M: Sequence[Monomial], ord: Ordering) -> tuple[Word, ...]:
    """The finite generating set: each member padded by internal letters.

    Member ``w`` contributes the sorted words of ``w * u`` where ``u`` runs
    over products of letters internal to ``w`` and the total degree of each
    internal letter ``x`` stays below the extremal maximum ``r_x(M)``.
    """
    ms = ensure_antichain(M, "M")
    ensure_nonunit(ms, "M")
    witness = is_fg_sorted(ms, ord)
    if not witness.verdict:
        raise NotFinitelyGeneratedError(
            "the sorted-word ideal is not finitely generated under this ordering"
        )
    words: list[Word] = []
    for w in ms:
        internals = sorted(internal_letters(w, ord))
        ranges = [range(extremal_degree_max(ms, x, ord) - w.exponents[x]) for x in internals]
        for extras in _product(ranges):
            e = list(w.exponents)
            for x, extra in zip(internals, extras):
                e[x] += extra
            words.append(sigma(Monomial(tuple(e)), ord))
    return sorted_words(words)


def _product(ranges: list[range]):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _product(ranges[1:]):
            yield (head,) + tail


def minimal_word_generators(S: Iterable[Word]) -> tuple[Word, ...]:
    """Members of ``S`` having no proper factor in ``S``."""
    words = sorted(set(S), key=lambda w: (len(w.letters), w.letters))
    out = []
    for w in words:
        if not any(
            v != w and word_is_factor(v, w) for v in words if len(v) <= len(w)
        ):
            out.append(w)
    return tuple(out)


def _in_ideal(M: Sequence[Monomial], m: Monomial) -> bool:
    return any(divides(s, m) for s in M)


def eps_minimal_generators(
    M: Sequence[Monomial], ord: Ordering, length_cap: int
) -> tuple[Word, ...]:
    """Minimal generators by the antichain description, up to a length cap.

    Emits the sorted words of ``m * u`` with ``u`` a product of letters
    internal to ``m`` such that erasing one copy of either extremal letter
    of ``m`` leaves the ideal.  When the ideal is finitely generated and the
    cap dominates the completeness bound, this is the whole minimal
    generating set; otherwise it is the truncation to short words.
    """
    ms = ensure_antichain(M, "M")
    ensure_nonunit(ms, "M")
    out: list[Word] = []
    for m in ms:
        lo, hi, _ = extremal_internal(m, ord)
        internals = sorted(internal_letters(m, ord))
        budget = length_cap - m.degree
        if budget < 0:
            continue
        for extras in _bounded_vectors(len(internals), budget):
            e = list(m.exponents)
            for x, extra in zip(internals, extras):
                e[x] += extra
            mu = Monomial(tuple(e))
            ok = True
            for x in {lo, hi}:
                shaved = list(mu.exponents)
                shaved[x] -= 1
                if _in_ideal(ms, Monomial(tuple(shaved))):
                    ok = False
                    break
            if ok:
                out.append(sigma(mu, ord))
    return sorted_words(out)


def _bounded_vectors(k: int, total: int):
    """All k-vectors of nonnegative integers with sum <= total."""
    if k == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in _bounded_vectors(k - 1, total - head):
            yield (head,) + tail


def generator_count_bound(M: Sequence[Monomial], ord: Ordering) -> int:
    """Upper bound on the number of generators when the ideal is finite."""
    ms = monomial_set(M)
    with_internal = [w for w in ms if internal_letters(w, ord)]
    int_union: set[int] = set()
    for w in with_internal:
        int_union |= internal_letters(w, ord)
    product = 1
    for x in sorted(int_union):
        product *= extremal_degree_max(ms, x, ord)
    if not with_internal:
        product = 1
    return len(with_internal) * product + len(ms) - len(with_internal)


def tight_family(m: int, r: Sequence[int]) -> tuple[Monomial, ...]:
    """The family attaining the generator-count bound exactly.

    Over ``n = len(r) + 2`` letters: the binomials ``x1^(i+1) * xn^(m-i)``
    for ``0 <= i < m`` plus the pure powers ``x_j^(r_j)`` of the middle
    letters.
    """
    if m < 1 or any(ri < 1 for ri in r):
        raise ValueError("m and all middle exponents must be positive")
    n = len(r) + 2
    out = []
    for i in range(m):
        e = [0] * n
        e[0] = i + 1
        e[n - 1] = m - i
        out.append(Monomial(tuple(e)))
    for j, rj in enumerate(r):
        e = [0] * n
        e[j + 1] = rj
        out.append(Monomial(tuple(e)))
    return tuple(out)


def commutator_leading_words(ord: Ordering) -> tuple[Word, ...]:
    """Leading words ``xy`` (with ``x`` after ``y``) of the commutators."""
    seq = ord.sequence()
    words = []
    for i, y in enumerate(seq):
        for x in seq[i + 1 :]:
            words.append(Word((x, y)))
    return sorted_words(words)


def groebner_lift(M: Sequence[Monomial], ord: Ordering) -> tuple[Word, ...]:
    """Leading-word set of a finite Groebner basis of the lifted ideal.

    The commutator leading words together with the minimal generators of
    the sorted-word ideal.  Defined exactly when the sorted-word ideal is
    finitely generated.
    """
    gens = minimal_word_generators(fg_generating_set(M, ord)) if M else ()
    return sorted_words(commutator_leading_words(ord) + tuple(gens))


def complete_enumeration_bound(M: Sequence[Monomial], ord: Ordering) -> int:
    """Length bound covering every minimal generator on positive instances.

    When the finite-generation criterion holds, every minimal generator is
    a sorted word of some ``w * u`` with ``u`` supported on the internal
    letters of ``w`` and the degree of each internal ``x`` capped by
    ``r_x(M) - 1``.  Its length is therefore at most
    ``deg(w) + sum_x (r_x(M) - 1 - deg_x(w)) <= deg(w) + sum_x (r_x(M) - 1)``,
    and the maximum of the right-hand side over ``w`` bounds all of them.
    """
    ms = monomial_set(M)
    best = 0
    for w in ms:
        total = w.degree
        for x in internal_letters(w, ord):
            total += extremal_degree_max(ms, x, ord) - 1
        best = max(best, total)
    return best


