"""Ideals presented by systems of linear inequalities.

An inequality system is a nonnegative integer matrix A together with a
finite set W of threshold vectors; it presents the up-closed set of
nonnegative integer vectors x with Ax >= w for some w in W.  The module
supplies membership, minimal-generator enumeration inside the exact
coordinate box, unions, a convexity test by exact rational feasibility,
verifiers for the three kinds of negative certificates, and the SAT
reduction instance factories.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    BudgetExceededError,
    Monomial,
    MonoidealError,
    Ordering,
    divides,
    monomial_set,
)
from .preimage import preimage_fg
from .sorted_ideal import is_fg_sorted

DEFAULT_LATTICE_BUDGET = 10_000_000


@dataclass(frozen=True)
class IneqSystem:
    rows: tuple[tuple[int, ...], ...]
    thresholds: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        for row in self.rows:
            if any(a < 0 for a in row):
                raise MonoidealError("matrix entries must be nonnegative")
            if len(row) != self.ncols:
                raise MonoidealError("ragged matrix")
        for w in self.thresholds:
            if len(w) != len(self.rows):
                raise MonoidealError(
                    "threshold length must equal the number of rows"
                )
            if any(x < 0 for x in w):
                raise MonoidealError("threshold entries must be nonnegative")
        if self.names is not None and len(self.names) != self.ncols:
            raise MonoidealError("variable names do not match the column count")

    @property
    def ncols(self) -> int:
        if self.rows:
            return len(self.rows[0])
        if self.names is not None:
            return len(self.names)
        return 0

    @staticmethod
    def make(
        rows: Iterable[Sequence[int]],
        thresholds: Iterable[Sequence[int]],
        names: Sequence[str] | None = None,
    ) -> "IneqSystem":
        rs = tuple(tuple(r) for r in rows)
        seen = []
        for w in thresholds:
            tw = tuple(w)
            if tw not in seen:
                seen.append(tw)
        return IneqSystem(rs, tuple(seen), tuple(names) if names else None)

    def to_json_dict(self) -> dict:
        out = {"A": [list(r) for r in self.rows], "W": [list(w) for w in self.thresholds]}
        if self.names is not None:
            out["vars"] = list(self.names)
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "IneqSystem":
        return IneqSystem.make(
            data.get("A", []), data.get("W", []), data.get("vars") or None
        )


def _check_vector(sys: IneqSystem, x: Sequence[int]) -> tuple[int, ...]:
    xt = tuple(x)
    if len(xt) != sys.ncols:
        raise MonoidealError(
            f"vector of length {len(xt)} against a system with {sys.ncols} columns"
        )
    if any(v < 0 for v in xt):
        raise MonoidealError("vectors must be nonnegative")
    return xt


def membership(sys: IneqSystem, x: Sequence[int]) -> bool:
    """Whether Ax >= w componentwise for some threshold w."""
    xt = _check_vector(sys, x)
    ax = [sum(a * v for a, v in zip(row, xt)) for row in sys.rows]
    return any(all(a >= b for a, b in zip(ax, w)) for w in sys.thresholds)


def is_minimal_generator(sys: IneqSystem, x: Sequence[int]) -> bool:
    """In the ideal, but out of it after decrementing any positive coordinate."""
    xt = _check_vector(sys, x)
    if not membership(sys, xt):
        return False
    for i, v in enumerate(xt):
        if v > 0:
            smaller = list(xt)
            smaller[i] -= 1
            if membership(sys, smaller):
                return False
    return True


def enumerate_minimal_generators(
    sys: IneqSystem, budget: int = DEFAULT_LATTICE_BUDGET
) -> tuple[tuple[int, ...], ...]:
    """All minimal generators, scanned inside the exact coordinate box.

    Minimal generators have every coordinate bounded by the largest
    threshold entry: above it, decrementing the coordinate keeps every
    inequality satisfied.
    """
    if not sys.thresholds:
        return ()
    n = sys.ncols
    box = max((x for w in sys.thresholds for x in w), default=0)
    if (box + 1) ** n > budget:
        raise BudgetExceededError(
            f"lattice box of {(box + 1) ** n} points exceeds the budget {budget}"
        )
    out = []
    for point in itertools.product(range(box + 1), repeat=n):
        if is_minimal_generator(sys, point):
            out.append(point)
    return tuple(sorted(out))


def from_generators(M: Sequence[Monomial]) -> IneqSystem:
    """Identity-matrix presentation: membership is divisibility by a member."""
    ms = monomial_set(M)
    if not ms:
        raise MonoidealError("need at least one monomial")
    n = ms[0].n
    identity = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return IneqSystem.make(identity, [m.exponents for m in ms])


def union(systems: Sequence[IneqSystem]) -> IneqSystem:
    """Union of single-threshold systems by stacking and zero padding."""
    if not systems:
        raise MonoidealError("union of no systems")
    n = systems[0].ncols
    for s in systems:
        if s.ncols != n:
            raise MonoidealError("union requires a common column count")
        if len(s.thresholds) != 1:
            raise MonoidealError("union takes systems with a single threshold each")
    rows: list[tuple[int, ...]] = []
    offsets = []
    for s in systems:
        offsets.append(len(rows))
        rows.extend(s.rows)
    total = len(rows)
    thresholds = []
    for s, off in zip(systems, offsets):
        w = [0] * total
        w[off : off + len(s.rows)] = list(s.thresholds[0])
        thresholds.append(tuple(w))
    names = systems[0].names
    return IneqSystem.make(rows, thresholds, names)


# ---------------------------------------------------------------------------
# convexity via exact rational feasibility

def _fourier_motzkin_feasible(
    constraints: list[tuple[list[Fraction], Fraction]], nvars: int
) -> bool:
    """Decide whether {lam : coeffs . lam <= rhs for all constraints} is nonempty."""
    cons = constraints
    for var in range(nvars - 1, -1, -1):
        pos, neg, rest = [], [], []
        for coeffs, rhs in cons:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs))
            elif c < 0:
                neg.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        for (pc, pr), (nc, nr) in itertools.product(pos, neg):
            scale_p, scale_n = -nc[var], pc[var]
            coeffs = [
                scale_p * pc[i] + scale_n * nc[i] for i in range(var)
            ]
            rest.append((coeffs + [Fraction(0)] * (nvars - var), scale_p * pr + scale_n * nr))
        cons = rest
    return all(rhs >= 0 for _, rhs in cons)


def in_hull_plus_orthant(M: Sequence[Monomial], x: Sequence[int]) -> bool:
    """Whether x dominates a convex combination of the members of M."""
    ms = monomial_set(M)
    if not ms:
        return False
    n = ms[0].n
    if len(x) != n:
        raise MonoidealError("vector length does not match the alphabet")
    k = len(ms)
    last = ms[-1].exponents
    # variables lam_0..lam_{k-2}; lam_{k-1} = 1 - sum of the others
    nv = k - 1
    cons: list[tuple[list[Fraction], Fraction]] = []
    for i in range(nv):
        coeffs = [Fraction(0)] * nv
        coeffs[i] = Fraction(-1)
        cons.append((coeffs, Fraction(0)))  # lam_i >= 0
    cons.append(([Fraction(1)] * nv, Fraction(1)))  # lam_last >= 0
    for j in range(n):
        coeffs = [Fraction(ms[i].exponents[j] - last[j]) for i in range(nv)]
        cons.append((coeffs, Fraction(x[j] - last[j])))
    return _fourier_motzkin_feasible(cons, nv)


def convexity_check(
    M: Sequence[Monomial], budget: int = DEFAULT_LATTICE_BUDGET
) -> bool:
    """Whether the ideal of M consists exactly of the lattice points above conv(M).

    Scans the box [0, maxdeg+1]^n: the ideal is convex iff no box point in
    the dominated-hull region lies outside the ideal.
    """
    ms = monomial_set(M)
    if not ms:
        return True
    n = ms[0].n
    top = max(m.degree for m in ms) + 1
    if (top + 1) ** n > budget:
        raise BudgetExceededError(
            f"lattice box of {(top + 1) ** n} points exceeds the budget {budget}"
        )
    for point in itertools.product(range(top + 1), repeat=n):
        if in_hull_plus_orthant(ms, point):
            if not any(divides(m, Monomial(point)) for m in ms):
                return False
    return True


# ---------------------------------------------------------------------------
# negative certificates

CERTIFICATE_KINDS = ("support3", "preimage_not_fg", "sorted_not_fg")


@dataclass(frozen=True)
class Certificate:
    kind: str
    generator: tuple[int, ...]
    letter: int | None = None
    ordering: Ordering | None = None

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise MonoidealError(f"unknown certificate kind {self.kind!r}")
        if self.kind != "support3" and self.letter is None:
            raise MonoidealError(f"certificate kind {self.kind!r} requires a letter")

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind, "generator": list(self.generator)}
        if self.letter is not None:
            out["letter"] = self.letter
        if self.ordering is not None:
            out["order"] = list(self.ordering.sequence())
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "Certificate":
        ordering = None
        if data.get("order") is not None:
            ordering = Ordering.from_sequence(tuple(data["order"]))
        return Certificate(
            data["kind"],
            tuple(data["generator"]),
            data.get("letter"),
            ordering,
        )


def _no_pure_power_of(sys: IneqSystem, z: int) -> bool:
    # no vector supported on {z} alone belongs: every threshold has a row
    # demanding something z cannot supply
    for w in sys.thresholds:
        if not any(
            wi > 0 and row[z] == 0 for wi, row in zip(w, sys.rows)
        ):
            return False
    return True


def _no_z_pair_with(sys: IneqSystem, z: int, t: int) -> bool:
    # no vector of shape (t once, z arbitrary, rest zero) belongs
    for w in sys.thresholds:
        if not any(
            wi > row[t] and row[z] == 0 for wi, row in zip(w, sys.rows)
        ):
            return False
    return True


def verify_certificate(sys: IneqSystem, cert: Certificate) -> bool:
    """Check a claimed negative certificate in polynomial time."""
    m = _check_vector(sys, cert.generator)
    if not is_minimal_generator(sys, m):
        return False
    if cert.kind == "support3":
        return sum(1 for v in m if v > 0) >= 3

    z = cert.letter
    if z is None or not 0 <= z < sys.ncols:
        raise MonoidealError("certificate letter out of range")

    if cert.kind == "preimage_not_fg":
        if sum(v for i, v in enumerate(m) if i != z) < 2:
            return False
        if not _no_pure_power_of(sys, z):
            return False
        for t, v in enumerate(m):
            if t == z or v == 0:
                continue
            if not _no_z_pair_with(sys, z, t):
                return False
        return True

    # sorted_not_fg
    ordering = cert.ordering or Ordering.identity(sys.ncols)
    if ordering.n != sys.ncols:
        raise MonoidealError("certificate ordering does not match the columns")
    supp = [i for i, v in enumerate(m) if v > 0]
    if not supp:
        return False
    lo = min(supp, key=lambda i: ordering.rank[i])
    hi = max(supp, key=lambda i: ordering.rank[i])
    if not (ordering.rank[lo] < ordering.rank[z] < ordering.rank[hi]):
        return False
    kept = [i for i, row in enumerate(sys.rows) if row[z] == 0]
    sub = IneqSystem.make(
        [sys.rows[i] for i in kept],
        [tuple(w[i] for i in kept) for w in sys.thresholds],
    )
    m_left = tuple(
        v if ordering.rank[i] <= ordering.rank[z] else 0 for i, v in enumerate(m)
    )
    m_right = tuple(
        v if ordering.rank[i] >= ordering.rank[z] else 0 for i, v in enumerate(m)
    )
    if not sub.rows:
        # no surviving inequalities: the subsystem accepts everything
        # whenever it has any threshold at all
        accepts = bool(sub.thresholds)
        return not accepts
    return not membership(sub, m_left) and not membership(sub, m_right)


# ---------------------------------------------------------------------------
# SAT reductions

SAT_TARGETS = ("mdois", "imfg", "pinfg")


@dataclass(frozen=True)
class SatInstance:
    """CNF over variables 1..n; a literal is k or -k, clauses are nonempty."""

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.variable_count < 1:
            raise MonoidealError("need at least one variable")
        for clause in self.clauses:
            if not clause:
                raise MonoidealError("clauses must be nonempty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise MonoidealError(f"literal {lit} out of range")


def brute_force_sat(inst: SatInstance) -> bool:
    if inst.variable_count > 24:
        raise MonoidealError("brute force limited to 24 variables")
    for bits in range(1 << inst.variable_count):
        if all(
            any(((bits >> (abs(l) - 1)) & 1) == (1 if l > 0 else 0) for l in clause)
            for clause in inst.clauses
        ):
            return True
    return False


def _literal_column(lit: int, offset: int) -> int:
    # variables i=1..n occupy columns offset + 2(i-1) (positive literal)
    # and offset + 2(i-1) + 1 (negated literal)
    return offset + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)


def sat_reduction(inst: SatInstance, which: str) -> IneqSystem:
    """Build the inequality-presented instance for one of the three targets.

    mdois: clause and boolean inequalities joined with the per-variable
    pair systems (x_i + nx_i >= 2).  imfg: two extra letters y, z ordered
    first; the base system additionally demands y >= 1.  pinfg: one extra
    letter y; the pair systems additionally demand y >= 1 and a separate
    system demands y >= 2.
    """
    if which not in SAT_TARGETS:
        raise MonoidealError(f"unknown reduction target {which!r}")
    if inst.variable_count < 3:
        raise MonoidealError("the reductions require at least three variables")
    nv = inst.variable_count
    offset = {"mdois": 0, "imfg": 2, "pinfg": 1}[which]
    ncols = 2 * nv + offset
    names = []
    if which == "imfg":
        names = ["y", "z"]
    elif which == "pinfg":
        names = ["y"]
    for i in range(1, nv + 1):
        names.extend([f"x{i}", f"nx{i}"])

    def clause_row(clause: tuple[int, ...]) -> list[int]:
        row = [0] * ncols
        for lit in clause:
            row[_literal_column(lit, offset)] += 1
        return row

    def boolean_row(i: int) -> list[int]:
        row = [0] * ncols
        row[offset + 2 * (i - 1)] = 1
        row[offset + 2 * (i - 1) + 1] = 1
        return row

    def unit_row(col: int) -> list[int]:
        row = [0] * ncols
        row[col] = 1
        return row

    base_rows = [clause_row(c) for c in inst.clauses] + [
        boolean_row(i) for i in range(1, nv + 1)
    ]
    base_w = [1] * len(base_rows)

    systems: list[IneqSystem] = []
    if which == "mdois":
        systems.append(IneqSystem.make(base_rows, [base_w], names))
        for i in range(1, nv + 1):
            systems.append(IneqSystem.make([boolean_row(i)], [[2]], names))
    elif which == "imfg":
        systems.append(
            IneqSystem.make(base_rows + [unit_row(0)], [base_w + [1]], names)
        )
        for i in range(1, nv + 1):
            systems.append(IneqSystem.make([boolean_row(i)], [[2]], names))
    else:  # pinfg
        systems.append(IneqSystem.make(base_rows, [base_w], names))
        systems.append(IneqSystem.make([unit_row(0)], [[2]], names))
        for i in range(1, nv + 1):
            systems.append(
                IneqSystem.make([boolean_row(i), unit_row(0)], [[2, 1]], names)
            )
    return union(systems)


def reduction_is_negative(
    sys: IneqSystem, which: str, budget: int = DEFAULT_LATTICE_BUDGET
) -> bool:
    """Decide the negative answer of a reduced instance from its generators.

    mdois: some minimal generator has support of size three or more.
    imfg: the antichain of minimal generators fails the sorted-ideal
    finite-generation criterion under the declared column order.
    pinfg: the antichain fails the preimage criterion.
    """
    if which not in SAT_TARGETS:
        raise MonoidealError(f"unknown reduction target {which!r}")
    gens = enumerate_minimal_generators(sys, budget)
    if which == "mdois":
        return any(sum(1 for v in g if v > 0) >= 3 for g in gens)
    monomials = tuple(Monomial(g) for g in gens)
    if which == "imfg":
        return not is_fg_sorted(monomials, Ordering.identity(sys.ncols)).verdict
    return not preimage_fg(monomials).verdict
