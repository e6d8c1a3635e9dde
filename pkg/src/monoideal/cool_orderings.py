"""Search for letter orderings making the sorted-word ideal finite.

We call such an ordering cool for the antichain.  Existence is decided by
a complete search: quadratic sets reduce to finding an acyclic orientation
of an associated graph that is transitive at the letters whose square is
missing, and the general case runs a branch-and-bound over letter
permutations that prunes as soon as a placed letter is internal to some
member without the required extremal cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Monomial,
    MonoidealError,
    Ordering,
    divides,
    ensure_antichain,
    ensure_nonunit,
    erase,
    monomial_set,
    support,
)
from .sorted_ideal import is_fg_sorted
from .torientation import (
    TGraph,
    orientation_to_ordering,
    t_orientation_search_stats,
)


@dataclass(frozen=True)
class CoolSearchResult:
    found: bool
    ordering: Ordering | None
    nodes_explored: int


def is_cool(M: Sequence[Monomial], ord: Ordering) -> bool:
    """Whether the sorted-word ideal of the antichain is finitely generated."""
    return is_fg_sorted(M, ord).verdict


def all_orderings_cool(M: Sequence[Monomial]) -> bool:
    """Every ordering is cool iff erasures are covered by small-support members.

    For each member ``m`` and letter ``x`` whose erasure from ``m`` leaves
    support of size at least two, some member of support size at most two
    must contain ``x`` (so ``x`` is extremal in it under any ordering) and
    divide ``m`` once ``x`` is erased from it.
    """
    ms = ensure_antichain(M, "M")
    ensure_nonunit(ms, "M")
    if not ms:
        return True
    n = ms[0].n
    m2 = [u for u in ms if len(support(u)) <= 2]
    for m in ms:
        for x in range(n):
            if len(support(erase(m, x))) < 2:
                continue
            if not any(
                x in support(u) and divides(erase(u, x), m) for u in m2
            ):
                return False
    return True


def helps(w: Monomial, m: Monomial, x: int) -> bool:
    """Whether ``w`` can serve as the extremal cover of ``m`` at letter ``x``."""
    if x not in support(w):
        return False
    if not divides(erase(w, x), m):
        return False
    return support(erase(w, x)) < support(erase(m, x))


def closed_subset_check(M: Sequence[Monomial], N: Sequence[Monomial]) -> bool:
    """True when N already contains every member of M that helps it."""
    ms = monomial_set(M)
    ns = monomial_set(N)
    if not set(ns) <= set(ms):
        raise MonoidealError("N must be a subset of M")
    n_letters = ms[0].n if ms else 0
    nset = set(ns)
    for w in ms:
        if w in nset:
            continue
        for m in ns:
            if any(helps(w, m, x) for x in range(n_letters)):
                return False
    return True


def support_filter(M: Sequence[Monomial], k: int) -> tuple[Monomial, ...]:
    if k < 0:
        raise ValueError("support size bound must be nonnegative")
    return tuple(m for m in monomial_set(M) if 0 < len(support(m)) <= k)


def _ensure_quadratic(M: Sequence[Monomial]) -> tuple[Monomial, ...]:
    ms = monomial_set(M)
    for m in ms:
        if m.degree != 2:
            raise MonoidealError(f"member of total degree {m.degree} is not quadratic")
    return ms


def quadratic_graph(M: Sequence[Monomial], alphabet_size: int | None = None) -> TGraph:
    """Complement encoding of a quadratic set.

    Letters are vertices; two letters are joined exactly when their product
    is missing from ``M``; T consists of the letters whose square is
    missing.
    """
    ms = _ensure_quadratic(M)
    if alphabet_size is None:
        if not ms:
            raise MonoidealError("alphabet size required for an empty set")
        alphabet_size = ms[0].n
    elif ms and alphabet_size != ms[0].n:
        raise MonoidealError("alphabet size does not match the monomials")
    present = set()
    squares = set()
    for m in ms:
        supp = sorted(support(m))
        if len(supp) == 1:
            squares.add(supp[0])
        else:
            present.add((supp[0], supp[1]))
    edges = [
        (x, y)
        for x in range(alphabet_size)
        for y in range(x + 1, alphabet_size)
        if (x, y) not in present
    ]
    tset = [x for x in range(alphabet_size) if x not in squares]
    return TGraph.make(alphabet_size, edges, tset)


def quadratic_to_support2(M: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Replace squares by support-two members with the same cool orderings.

    Keeps the genuine products and, for each square ``x^2`` in ``M``, adds
    ``x^2 y`` for every other letter ``y`` whose product with ``x`` is
    missing from ``M``.
    """
    ms = _ensure_quadratic(M)
    if not ms:
        return ()
    n = ms[0].n
    pairs = set()
    squares = set()
    for m in ms:
        supp = sorted(support(m))
        if len(supp) == 1:
            squares.add(supp[0])
        else:
            pairs.add((supp[0], supp[1]))
    out = [m for m in ms if len(support(m)) == 2]
    for x in sorted(squares):
        for y in range(n):
            if y != x and (min(x, y), max(x, y)) not in pairs:
                e = [0] * n
                e[x] = 2
                e[y] = 1
                out.append(Monomial(tuple(e)))
    return monomial_set(out)


def square_free_total_degree_guard(M: Sequence[Monomial]) -> bool:
    """For square-free sets: degree above two rules out any cool ordering."""
    ms = monomial_set(M)
    for m in ms:
        if any(e > 1 for e in m.exponents):
            raise MonoidealError("member is not square-free")
    return all(m.degree <= 2 for m in ms)


def find_cool_ordering(
    M: Sequence[Monomial], alphabet_size: int | None = None
) -> CoolSearchResult:
    """Complete search for a cool ordering.

    Quadratic sets go through the graph encoding and the T-orientation
    engine (square-free ones are the special case where T is everything).
    Everything else runs the permutation branch-and-bound.
    """
    ms = ensure_antichain(M, "M")
    ensure_nonunit(ms, "M")
    if alphabet_size is None:
        if not ms:
            raise MonoidealError("alphabet size required for an empty set")
        alphabet_size = ms[0].n
    elif ms and alphabet_size != ms[0].n:
        raise MonoidealError("alphabet size does not match the monomials")
    if not ms:
        return CoolSearchResult(True, Ordering.identity(alphabet_size), 0)
    if all(m.degree == 2 for m in ms):
        g = quadratic_graph(ms, alphabet_size)
        orientation, nodes = t_orientation_search_stats(g)
        if orientation is None:
            return CoolSearchResult(False, None, nodes)
        return CoolSearchResult(True, orientation_to_ordering(g, orientation), nodes)
    return _permutation_search(ms, alphabet_size)


def _permutation_search(M: tuple[Monomial, ...], n: int) -> CoolSearchResult:
    supports = [support(m) for m in M]
    # cover_candidates[(mi, x)] = supports of erase(s, x) for members s that
    # could cover x internal to M[mi], ignoring order information.
    cover: dict[tuple[int, int], list[frozenset[int]]] = {}
    for mi, m in enumerate(M):
        for x in range(n):
            cands = []
            for s in M:
                if x in support(s) and divides(erase(s, x), m):
                    cands.append(support(s) - {x})
            cover[(mi, x)] = cands

    prefix: list[int] = []
    placed: set[int] = set()
    nodes = 0

    def letter_ok(x: int) -> bool:
        # x was just placed after everything in `placed`; everything free
        # comes later.  Its internal/extremal status w.r.t. every member and
        # every potential cover is now decided.
        for mi, supp in enumerate(supports):
            before = bool(supp & placed)
            after = bool(supp - placed - {x})
            if not (before and after):
                continue  # x is not internal to this member
            covered = False
            for cand in cover[(mi, x)]:
                overlap = cand & placed
                if not overlap or overlap == cand:
                    covered = True  # x is the min or the max of that cover
                    break
            if not covered:
                return False
        return True

    def score(y: int) -> tuple[int, int]:
        undecided = 0
        for mi, supp in enumerate(supports):
            for x in range(n):
                if x not in placed and (y in supp or y == x):
                    undecided += 1
        return (-undecided, y)

    best: list[Ordering | None] = [None]

    def descend() -> bool:
        nonlocal nodes
        if len(prefix) == n:
            best[0] = Ordering.from_sequence(prefix)
            return True
        for y in sorted((x for x in range(n) if x not in placed), key=score):
            # an ordering and its reverse are cool together: keep letter 0
            # in the first half of the positions
            if y == 0 and 2 * len(prefix) > n - 1:
                continue
            nodes += 1
            prefix.append(y)
            ok = letter_ok(y)
            if ok:
                placed.add(y)
                if descend():
                    return True
                placed.discard(y)
            prefix.pop()
        return False

    found = descend()
    return CoolSearchResult(found, best[0], nodes)
