"""Cross-check harness: every fast decision is refereed by brute force.

Sweep generators enumerate small antichains, quadratic sets, NAE and CNF
instances (optionally deduplicated up to letter or variable permutation,
which none of the checked predicates distinguish), and the check functions
return the list of disagreements found, empty when all is well.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .core import Monomial, all_orderings, divides, support
from .cool_orderings import (
    all_orderings_cool,
    find_cool_ordering,
    is_cool,
    quadratic_graph,
)
from .polyhedral import (
    SatInstance,
    brute_force_sat,
    reduction_is_negative,
    sat_reduction,
)
from .preimage import preimage_fg, preimage_fg_pairs, square_letters
from .sorted_ideal import is_fg_sorted
from .torientation import NaeInstance, nae3sat_brute, nae3sat_reduce, t_orientation_search
from .word_oracle import finiteness_probe


def nonunit_monomials(n: int, max_total_degree: int) -> tuple[Monomial, ...]:
    out = []
    for exps in itertools.product(range(max_total_degree + 1), repeat=n):
        if 0 < sum(exps) <= max_total_degree:
            out.append(Monomial(exps))
    return tuple(sorted(out, key=lambda m: m.exponents))


def antichains(n: int, max_total_degree: int) -> Iterable[tuple[Monomial, ...]]:
    """All nonempty antichains of nonunit monomials, by depth-first extension."""
    pool = nonunit_monomials(n, max_total_degree)

    def extend(chosen: list[Monomial], start: int):
        if chosen:
            yield tuple(chosen)
        for i in range(start, len(pool)):
            cand = pool[i]
            if all(
                not divides(cand, c) and not divides(c, cand) for c in chosen
            ):
                chosen.append(cand)
                yield from extend(chosen, i + 1)
                chosen.pop()

    yield from extend([], 0)


def permutation_canonical(M: Sequence[Monomial], n: int) -> tuple:
    """Least relabeling of the letters, for deduplication."""
    best = None
    for perm in itertools.permutations(range(n)):
        image = tuple(
            sorted(tuple(m.exponents[perm[i]] for i in range(n)) for m in M)
        )
        if best is None or image < best:
            best = image
    return best


def representative_antichains(
    n: int, max_total_degree: int
) -> Iterable[tuple[Monomial, ...]]:
    seen: set[tuple] = set()
    for M in antichains(n, max_total_degree):
        canon = permutation_canonical(M, n)
        if canon not in seen:
            seen.add(canon)
            yield M


def check_fg_vs_probe(n: int, max_total_degree: int) -> list:
    """Fast finite-generation criterion against the enumeration oracle."""
    bad = []
    for M in representative_antichains(n, max_total_degree):
        for ord in all_orderings(n):
            fast = is_fg_sorted(M, ord).verdict
            slow = finiteness_probe(M, ord)
            if fast != slow:
                bad.append((M, ord, fast, slow))
    return bad


def check_preimage_conditions(n: int, max_total_degree: int) -> list:
    """The two equivalent preimage criteria must agree everywhere."""
    bad = []
    for M in representative_antichains(n, max_total_degree):
        a = preimage_fg(M).verdict
        b = preimage_fg_pairs(M).verdict
        if a != b:
            bad.append((M, a, b))
    return bad


def check_preimage_implies_all_cool(n: int, max_total_degree: int) -> list:
    bad = []
    for M in representative_antichains(n, max_total_degree):
        if preimage_fg(M).verdict and not all_orderings_cool(M):
            bad.append(M)
    return bad


def check_squaring(n: int, max_total_degree: int) -> tuple[list, list]:
    """Behaviour of letter squaring on sets cool for every ordering.

    Returns two disagreement lists: squarings that lost the every-ordering
    property, and squarings whose preimage verdict does not match the exact
    law (finitely generated after squaring iff every letter already has a
    pure power).
    """
    lost_cool = []
    wrong_verdict = []
    for M in representative_antichains(n, max_total_degree):
        if not all_orderings_cool(M):
            continue
        sq = square_letters(M)
        if not all_orderings_cool(sq):
            lost_cool.append(M)
        every_letter_powered = all(
            any(support(m) == {z} for m in M) for z in range(n)
        )
        if preimage_fg(sq).verdict != every_letter_powered:
            wrong_verdict.append(M)
    return lost_cool, wrong_verdict


def quadratic_sets(n: int) -> Iterable[tuple[Monomial, ...]]:
    """Every set of quadratic monomials over n letters (always an antichain)."""
    quads = []
    for x in range(n):
        e = [0] * n
        e[x] = 2
        quads.append(Monomial(tuple(e)))
    for x in range(n):
        for y in range(x + 1, n):
            e = [0] * n
            e[x] = 1
            e[y] = 1
            quads.append(Monomial(tuple(e)))
    for size in range(1, len(quads) + 1):
        for combo in itertools.combinations(quads, size):
            yield combo


def representative_quadratic_sets(n: int) -> Iterable[tuple[Monomial, ...]]:
    seen: set[tuple] = set()
    for M in quadratic_sets(n):
        canon = permutation_canonical(M, n)
        if canon not in seen:
            seen.add(canon)
            yield M


def check_quadratic_bridge(n: int) -> list:
    """Search, exhaustive ordering scan, and graph orientation must agree."""
    bad = []
    for M in representative_quadratic_sets(n):
        search = find_cool_ordering(M).found
        exhaustive = any(is_cool(M, ord) for ord in all_orderings(n))
        graph = t_orientation_search(quadratic_graph(M, n)) is not None
        if not (search == exhaustive == graph):
            bad.append((M, search, exhaustive, graph))
    return bad


def nae_instances(
    variable_count: int, max_clauses: int
) -> Iterable[NaeInstance]:
    """All instances up to clause order and within-clause literal order."""
    literals = [l for v in range(1, variable_count + 1) for l in (v, -v)]
    clauses = sorted(
        set(
            tuple(sorted(c))
            for c in itertools.combinations_with_replacement(literals, 3)
        )
    )
    for count in range(1, max_clauses + 1):
        for chosen in itertools.combinations(clauses, count):
            yield NaeInstance(variable_count, chosen)


def _nae_canonical(inst: NaeInstance) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, inst.variable_count + 1)):
        relabel = lambda l: (1 if l > 0 else -1) * perm[abs(l) - 1]
        image = tuple(
            sorted(tuple(sorted(relabel(l) for l in c)) for c in inst.clauses)
        )
        if best is None or image < best:
            best = image
    return best


def check_nae_reduction(variable_count: int, max_clauses: int) -> list:
    bad = []
    seen: set[tuple] = set()
    for inst in nae_instances(variable_count, max_clauses):
        canon = _nae_canonical(inst)
        if canon in seen:
            continue
        seen.add(canon)
        brute = nae3sat_brute(inst)
        reduced = t_orientation_search(nae3sat_reduce(inst)) is not None
        if brute != reduced:
            bad.append((inst, brute, reduced))
    return bad


def cnf_instances(
    variable_count: int, max_clauses: int, max_clause_size: int = 3
) -> Iterable[SatInstance]:
    """All CNFs with distinct-literal clauses, up to clause and literal order."""
    literals = [l for v in range(1, variable_count + 1) for l in (v, -v)]
    clauses = []
    for size in range(1, max_clause_size + 1):
        for combo in itertools.combinations(literals, size):
            clauses.append(tuple(sorted(combo)))
    clauses = sorted(set(clauses))
    for count in range(1, max_clauses + 1):
        for chosen in itertools.combinations(clauses, count):
            yield SatInstance(variable_count, chosen)


def _cnf_canonical(inst: SatInstance) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, inst.variable_count + 1)):
        relabel = lambda l: (1 if l > 0 else -1) * perm[abs(l) - 1]
        image = tuple(
            sorted(tuple(sorted(relabel(l) for l in c)) for c in inst.clauses)
        )
        if best is None or image < best:
            best = image
    return best


def representative_cnf_instances(
    variable_count: int, max_clauses: int, max_clause_size: int = 3
) -> Iterable[SatInstance]:
    seen: set[tuple] = set()
    for inst in cnf_instances(variable_count, max_clauses, max_clause_size):
        canon = _cnf_canonical(inst)
        if canon not in seen:
            seen.add(canon)
            yield inst


def check_sat_reduction(
    target: str, variable_count: int, max_clauses: int
) -> list:
    bad = []
    for inst in representative_cnf_instances(variable_count, max_clauses):
        sat = brute_force_sat(inst)
        negative = reduction_is_negative(sat_reduction(inst, target), target)
        if sat != negative:
            bad.append((inst, sat, negative))
    return bad


def run_all(
    letters: int = 3,
    max_degree: int = 2,
    quadratic_letters: int = 4,
    nae_variables: int = 2,
    nae_clauses: int = 1,
    sat_variables: int = 3,
    sat_clauses: int = 1,
) -> dict:
    """Configurable battery used by the command-line crosscheck."""
    results = {}
    results["fg_vs_probe"] = len(check_fg_vs_probe(letters, max_degree))
    results["preimage_conditions"] = len(
        check_preimage_conditions(letters, max_degree)
    )
    results["preimage_implies_all_cool"] = len(
        check_preimage_implies_all_cool(letters, max_degree)
    )
    lost, wrong = check_squaring(letters, max_degree)
    results["squaring_keeps_all_cool"] = len(lost)
    results["squaring_verdict_law"] = len(wrong)
    results["quadratic_bridge"] = len(check_quadratic_bridge(quadratic_letters))
    results["nae_reduction"] = len(check_nae_reduction(nae_variables, nae_clauses))
    for target in ("mdois", "imfg"):
        results[f"sat_{target}"] = len(
            check_sat_reduction(target, sat_variables, sat_clauses)
        )
    return results
