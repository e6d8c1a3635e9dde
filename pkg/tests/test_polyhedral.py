import itertools
import random

import pytest

from monoideal.core import BudgetExceededError, Monomial, MonoidealError, Ordering
from monoideal.polyhedral import (
    Certificate,
    IneqSystem,
    SatInstance,
    brute_force_sat,
    convexity_check,
    enumerate_minimal_generators,
    from_generators,
    in_hull_plus_orthant,
    is_minimal_generator,
    membership,
    reduction_is_negative,
    sat_reduction,
    union,
    verify_certificate,
)

from conftest import M

HALF_PLANE5 = IneqSystem.make([[1, 1]], [[5]])


def test_membership():
    assert membership(HALF_PLANE5, (2, 3))
    assert not membership(HALF_PLANE5, (2, 2))
    empty = IneqSystem.make([[1, 0]], [])
    assert not membership(empty, (9, 9))
    with pytest.raises(MonoidealError):
        membership(HALF_PLANE5, (1, 2, 3))


def test_is_minimal_generator():
    assert is_minimal_generator(HALF_PLANE5, (2, 3))
    assert not is_minimal_generator(HALF_PLANE5, (3, 3))
    assert not is_minimal_generator(HALF_PLANE5, (1, 1))


def test_enumerate_minimal_generators():
    gens = enumerate_minimal_generators(HALF_PLANE5)
    assert gens == tuple((i, 5 - i) for i in range(6))
    single = from_generators(M((2, 1)))
    assert enumerate_minimal_generators(single) == ((2, 1),)
    u = union([IneqSystem.make([[1, 0]], [[2]]), IneqSystem.make([[0, 1]], [[2]])])
    assert enumerate_minimal_generators(u) == ((0, 2), (2, 0))


def test_enumeration_sound_and_complete_in_box():
    systems = [
        HALF_PLANE5,
        from_generators(M((2, 0), (1, 1))),
        IneqSystem.make([[1, 2], [2, 1]], [[2, 3], [4, 0]]),
    ]
    for sys_ in systems:
        gens = set(enumerate_minimal_generators(sys_))
        box = max(x for w in sys_.thresholds for x in w)
        for point in itertools.product(range(box + 1), repeat=sys_.ncols):
            assert (point in gens) == is_minimal_generator(sys_, point)


def test_mdois_assignment_is_a_support3_certificate():
    inst = SatInstance(3, ((1, -2, 3),))
    sys_ = sat_reduction(inst, "mdois")
    # satisfying assignment x1=1, x2=0, x3=1 as the vector
    # (x1, nx1, x2, nx2, x3, nx3)
    assignment = (1, 0, 0, 1, 1, 0)
    assert verify_certificate(sys_, Certificate("support3", assignment))


def test_enumeration_budget():
    big = IneqSystem.make([[1] * 10], [[9] * 1])
    with pytest.raises(BudgetExceededError):
        enumerate_minimal_generators(big, budget=1000)


def test_from_generators():
    sys_ = from_generators(M((2, 0, 0), (0, 1, 1)))
    assert sys_.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert set(sys_.thresholds) == {(2, 0, 0), (0, 1, 1)}
    assert membership(sys_, (2, 5, 0))
    assert not membership(sys_, (1, 1, 0))


def test_from_generators_membership_is_divisibility():
    from monoideal.core import divides

    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 4)
        members = M(*{tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(3)})
        sys_ = from_generators(members)
        x = Monomial(tuple(rng.randint(0, 4) for _ in range(n)))
        assert membership(sys_, x.exponents) == any(divides(m, x) for m in members)


def test_union_matches_disjunction_on_random_vectors():
    rng = random.Random(42)
    systems = [
        IneqSystem.make([[1, 0, 2], [0, 1, 0]], [[3, 1]]),
        IneqSystem.make([[2, 2, 0]], [[4]]),
        IneqSystem.make([[0, 0, 1], [1, 1, 1]], [[2, 5]]),
    ]
    combined = union(systems)
    for _ in range(1000):
        x = tuple(rng.randint(0, 6) for _ in range(3))
        assert membership(combined, x) == any(membership(s, x) for s in systems)


def test_union_requires_single_threshold():
    with pytest.raises(MonoidealError):
        union([HALF_PLANE5, IneqSystem.make([[1, 1]], [[1], [2]])])


def test_hull_membership():
    gens = M((2, 0), (0, 2))
    assert in_hull_plus_orthant(gens, (1, 1))  # lambda = 1/2, 1/2
    assert in_hull_plus_orthant(gens, (2, 0))
    assert not in_hull_plus_orthant(gens, (1, 0))
    assert in_hull_plus_orthant(M((3, 1),), (3, 2))
    assert not in_hull_plus_orthant(M((3, 1),), (2, 5))


def test_convexity_check():
    assert not convexity_check(M((2, 0), (0, 2)))
    assert convexity_check(M((2, 3)))
    assert convexity_check(M((1, 0), (0, 1)))
    assert convexity_check(())


def test_support3_certificate():
    # union of the coordinate half-spaces x_i >= 1 summed: x1+x2+x3 >= 3
    sys_ = IneqSystem.make([[1, 1, 1]], [[3]])
    assert verify_certificate(sys_, Certificate("support3", (1, 1, 1)))
    assert not verify_certificate(sys_, Certificate("support3", (2, 1, 0)))
    assert not verify_certificate(sys_, Certificate("support3", (1, 1, 2)))


def test_preimage_certificate():
    sys_ = from_generators(M((2, 0)))
    assert verify_certificate(sys_, Certificate("preimage_not_fg", (2, 0), 1))
    # {a^2, ab, b^2} is finitely generated: the analogous claim must fail
    good = from_generators(M((2, 0), (1, 1), (0, 2)))
    assert not verify_certificate(good, Certificate("preimage_not_fg", (2, 0), 1))


def test_sorted_certificate():
    # satisfiable CNF: the assignment generator with the silent letter z
    inst = SatInstance(3, ((1, 2), (-1, 3)))
    sys_ = sat_reduction(inst, "imfg")
    # y=1, z=0, x1 true, x2 true, x3 true
    gen = (1, 0, 1, 0, 1, 0, 1, 0)
    cert = Certificate("sorted_not_fg", gen, 1, Ordering.identity(8))
    assert verify_certificate(sys_, cert)
    # letter must be internal: the first column y is not
    assert not verify_certificate(
        sys_, Certificate("sorted_not_fg", gen, 0, Ordering.identity(8))
    )
    # a covered internal letter is rejected: x1 is internal to the
    # generator but the pure pair generators have it extremal
    assert not verify_certificate(
        sys_, Certificate("sorted_not_fg", gen, 2, Ordering.identity(8))
    )


def test_certificate_validation():
    with pytest.raises(MonoidealError):
        Certificate("bogus", (1,))
    with pytest.raises(MonoidealError):
        Certificate("preimage_not_fg", (1, 1))  # letter required
    with pytest.raises(MonoidealError):
        verify_certificate(HALF_PLANE5, Certificate("support3", (1, 1, 1)))


def test_certificate_json_round_trip():
    cert = Certificate("sorted_not_fg", (1, 0, 2), 1, Ordering.from_sequence((2, 0, 1)))
    again = Certificate.from_json_dict(cert.to_json_dict())
    assert again == cert


def test_pair_system_has_three_minimal_generators():
    inst = SatInstance(3, ((1, 2, 3),))
    pair = IneqSystem.make([[0, 0, 1, 1, 0, 0, 0, 0]], [[2]])
    gens = enumerate_minimal_generators(pair)
    assert len(gens) == 3


def test_sat_reduction_shapes():
    inst = SatInstance(3, ((1, -2), (2, 3)))
    mdois = sat_reduction(inst, "mdois")
    assert mdois.ncols == 6
    assert len(mdois.thresholds) == 1 + 3
    imfg = sat_reduction(inst, "imfg")
    assert imfg.ncols == 8 and imfg.names[:2] == ("y", "z")
    pinfg = sat_reduction(inst, "pinfg")
    assert pinfg.ncols == 7 and pinfg.names[0] == "y"
    assert len(pinfg.thresholds) == 1 + 1 + 3
    with pytest.raises(MonoidealError):
        sat_reduction(SatInstance(2, ((1, 2),)), "mdois")


def test_reduction_decisions_match_sat_spot():
    sat = SatInstance(3, ((1, 2, 3),))
    unsat = SatInstance(3, ((1,), (-1,)))
    assert brute_force_sat(sat) and not brute_force_sat(unsat)
    for target in ("mdois", "imfg"):
        assert reduction_is_negative(sat_reduction(sat, target), target)
        assert not reduction_is_negative(sat_reduction(unsat, target), target)
    # the pinfg construction certifies satisfiable instances
    assert reduction_is_negative(sat_reduction(sat, "pinfg"), "pinfg")


def test_accepted_certificates_imply_negative_decisions():
    # every certificate the verifier accepts must match a recomputed
    # negative answer of the corresponding decision procedure
    rng = random.Random(6)
    from monoideal.preimage import preimage_fg
    from monoideal.sorted_ideal import is_fg_sorted

    checked = 0
    for _ in range(50):
        n = rng.randint(2, 3)
        rows = [
            [rng.randint(0, 2) for _ in range(n)] for _ in range(rng.randint(1, 3))
        ]
        if any(all(a == 0 for a in row) for row in rows):
            continue
        thresholds = [
            [rng.randint(0, 3) for _ in rows] for _ in range(rng.randint(1, 2))
        ]
        sys_ = IneqSystem.make(rows, thresholds)
        gens = enumerate_minimal_generators(sys_)
        monomials = tuple(Monomial(g) for g in gens)
        for g in gens:
            for kind in ("support3", "preimage_not_fg", "sorted_not_fg"):
                for letter in (None,) if kind == "support3" else range(n):
                    cert = Certificate(kind, g, letter)
                    if not verify_certificate(sys_, cert):
                        continue
                    checked += 1
                    if kind == "support3":
                        assert any(
                            sum(1 for v in gg if v > 0) >= 3 for gg in gens
                        )
                    elif kind == "preimage_not_fg":
                        assert not preimage_fg(monomials).verdict
                    else:
                        assert not is_fg_sorted(monomials, Ordering.identity(n)).verdict
    assert checked > 0
