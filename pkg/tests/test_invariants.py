import random
from itertools import combinations_with_replacement, product

import pytest

from stratacheck.errors import InvolutionError, NonSaturationError, ToolkitError
from stratacheck.invariants import (
    CoordinateInvolution,
    DiagonalAction,
    MonoidPresentation,
    binomial_relations,
    fixed_locus_presentation,
    generates_congruence,
    invariant_generators,
    invariant_monomials,
    is_invariant,
    match_generators,
    presentations_isomorphic,
    relation_profile,
    toric_relations,
)

PAIR = DiagonalAction(8, ((1, 1, 1, 1, -1, -1, -1, -1),))
TRIPLE = DiagonalAction(
    12,
    (
        (1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0),
        (0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1),
    ),
)
NEG4 = DiagonalAction(4, (), ((2, (1, 1, 1, 1)),))
Z2Z2 = DiagonalAction(6, (), ((2, (0, 0, 1, 1, 1, 1)), (2, (1, 1, 0, 0, 1, 1))))
SWAP_PAIR = CoordinateInvolution((5, 4, 7, 6, 1, 0, 3, 2))
SWAP_TRIPLE = CoordinateInvolution((7, 6, 9, 8, 11, 10, 1, 0, 3, 2, 5, 4))


# ---------------------------------------------------------------------------
# independent oracle (greedy filtering over an exhaustive enumeration)


def all_monomials(n, max_degree):
    if n == 0:
        yield ()
        return
    for head in range(max_degree + 1):
        for tail in all_monomials(n - 1, max_degree - head):
            yield (head,) + tail


def oracle_is_invariant(action, m):
    for row in action.torus_weights:
        if sum(w * e for w, e in zip(row, m)) != 0:
            return False
    for modulus, row in action.finite_factors:
        if sum(w * e for w, e in zip(row, m)) % modulus != 0:
            return False
    return True


def oracle_generators(action, bound):
    invariants_list = sorted(
        (
            m
            for m in all_monomials(action.ambient_dim, bound)
            if sum(m) >= 1 and oracle_is_invariant(action, m)
        ),
        key=lambda m: (sum(m), m),
    )
    kept = []
    for m in invariants_list:
        if not any(all(g <= x for g, x in zip(k, m)) for k in kept):
            kept.append(m)
    return set(kept)


# ---------------------------------------------------------------------------
# generator computation


def test_pair_generators_are_the_sixteen_products():
    pres = invariant_generators(PAIR, 4)
    expected = set()
    for i in range(4):
        for j in range(4):
            e = [0] * 8
            e[i] = 1
            e[4 + j] = 1
            expected.add(tuple(e))
    assert set(pres.generators) == expected
    assert all(is_invariant(PAIR, g) for g in pres.generators)


def test_negation_generators_are_the_ten_pairs():
    pres = invariant_generators(NEG4, 4)
    expected = set()
    for i, j in combinations_with_replacement(range(4), 2):
        e = [0] * 4
        e[i] += 1
        e[j] += 1
        expected.add(tuple(e))
    assert set(pres.generators) == expected


def test_triple_generators_split_twelve_quadratic_sixteen_cubic():
    pres = invariant_generators(TRIPLE, 6)
    degrees = sorted(sum(g) for g in pres.generators)
    assert degrees.count(2) == 12
    assert degrees.count(3) == 16
    assert len(pres.generators) == 28


def test_z2z2_generators_split_nine_quadratic_eight_cubic():
    pres = invariant_generators(Z2Z2, 4)
    degrees = [sum(g) for g in pres.generators]
    assert degrees.count(2) == 9
    assert degrees.count(3) == 8
    assert len(pres.generators) == 17


def test_saturation_failure_reports_witness():
    skew = DiagonalAction(2, ((1, -3),))
    with pytest.raises(NonSaturationError) as info:
        invariant_generators(skew, 3)
    assert info.value.witness == (3, 1)
    pres = invariant_generators(skew, 4)
    assert pres.generators == ((3, 1),)


def test_unconstrained_action_yields_coordinate_generators():
    free = DiagonalAction(3)
    pres = invariant_generators(free, 2)
    assert set(pres.generators) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_degree_bound_must_be_positive():
    with pytest.raises(ToolkitError):
        invariant_generators(NEG4, 0)


def test_oracle_agreement_on_200_random_actions():
    rng = random.Random(20260808)
    for _ in range(200):
        n = rng.randint(1, 6)
        torus = tuple(
            tuple(rng.randint(-2, 2) for _ in range(n))
            for _ in range(rng.randint(0, 2))
        )
        finite = tuple(
            (rng.choice((2, 3)), tuple(rng.randint(-2, 2) for _ in range(n)))
            for _ in range(rng.randint(0, 2))
        )
        action = DiagonalAction(n, torus, finite)
        pres = invariant_generators(action, 4, require_saturation=False)
        assert set(pres.generators) == oracle_generators(action, 4)
        assert all(is_invariant(action, g) for g in pres.generators)


# ---------------------------------------------------------------------------
# relations


def test_pair_relations_are_the_36_minor_identities():
    pres = toric_relations(PAIR, invariant_generators(PAIR, 4), 4)
    assert len(pres.relations) == 36
    gens = pres.generators
    for u, v in pres.relations:
        assert sum(u) == sum(v) == 2
        assert pres.expand(u) == pres.expand(v)
        # sides share no generator: a genuine exchange of row/column pairs
        assert all(not (a and b) for a, b in zip(u, v))
    assert relation_profile(pres) == {(4, (2, 2)): 36}
    assert len(gens) == 16


def test_negation_relations_are_pair_swaps():
    pres = toric_relations(NEG4, invariant_generators(NEG4, 4), 4)
    assert len(pres.relations) == 20
    for u, v in pres.relations:
        assert sum(u) == sum(v) == 2
        assert pres.expand(u) == pres.expand(v)


def test_triple_relation_profile_and_reference_families():
    pres = toric_relations(TRIPLE, invariant_generators(TRIPLE, 6), 6)
    assert relation_profile(pres) == {
        (4, (2, 2)): 3,
        (5, (2, 2)): 48,
        (6, (2, 2)): 18,
        (6, (2, 3)): 64,
    }
    # reference families regenerated from their index structure
    first = [i for i, g in enumerate(pres.generators) if sum(g) == 3 and (g[2] or g[3])]
    second = [i for i, g in enumerate(pres.generators) if sum(g) == 3 and (g[8] or g[9])]
    assert len(first) == len(second) == 8
    sub_first = MonoidPresentation(12, tuple(pres.generators[i] for i in first))
    sub_second = MonoidPresentation(12, tuple(pres.generators[i] for i in second))
    assert len(binomial_relations(sub_first, 6)) == 9
    assert len(binomial_relations(sub_second, 6)) == 9


def test_relations_expand_to_identities_and_are_minimal():
    pres = toric_relations(Z2Z2, invariant_generators(Z2Z2, 4), 6)
    for u, v in pres.relations:
        assert pres.expand(u) == pres.expand(v)
    assert generates_congruence(pres, pres.relations, 6)
    for dropped in range(len(pres.relations)):
        remaining = pres.relations[:dropped] + pres.relations[dropped + 1 :]
        assert not generates_congruence(pres, remaining, 6)


def test_toric_relations_rejects_non_invariant_generators():
    bad = MonoidPresentation(8, ((1, 0, 0, 0, 0, 0, 0, 0),))
    with pytest.raises(ToolkitError):
        toric_relations(PAIR, bad, 4)


# ---------------------------------------------------------------------------
# fixed loci


def test_pair_fixed_locus_is_the_veronese_presentation():
    pair = toric_relations(PAIR, invariant_generators(PAIR, 4), 4)
    fixed = fixed_locus_presentation(PAIR, pair, SWAP_PAIR)
    assert fixed.ambient_dim == 4
    assert len(fixed.generators) == 10
    assert len(fixed.relations) == 20
    for u, v in fixed.relations:
        assert sum(u) == sum(v) == 2


def test_triple_fixed_locus_generators_and_relations():
    triple = toric_relations(TRIPLE, invariant_generators(TRIPLE, 6), 6)
    fixed = fixed_locus_presentation(TRIPLE, triple, SWAP_TRIPLE)
    assert fixed.ambient_dim == 6
    degrees = [sum(g) for g in fixed.generators]
    assert degrees.count(2) == 9 and degrees.count(3) == 8
    histogram = {}
    for u, _ in fixed.relations:
        d = sum(fixed.expand(u))
        histogram[d] = histogram.get(d, 0) + 1
    assert histogram == {4: 3, 5: 24, 6: 36}


def test_identity_involution_keeps_presentation():
    pair = toric_relations(PAIR, invariant_generators(PAIR, 4), 4)
    same = fixed_locus_presentation(PAIR, pair, CoordinateInvolution.identity(8))
    assert same == pair


def test_non_normalizing_involution_rejected():
    # swapping a variable with its dual sends x1*y2 to y1*y2, not invariant
    with pytest.raises(InvolutionError):
        fixed_locus_presentation(
            PAIR,
            invariant_generators(PAIR, 4),
            CoordinateInvolution((4, 1, 2, 3, 0, 5, 6, 7)),
        )


def test_sign_involution_zeroes_fixed_variables():
    # invariants of Z/2 negation on C^2: x^2, xy, y^2; the sign fixes kill x
    action = DiagonalAction(2, (), ((2, (1, 1)),))
    pres = toric_relations(action, invariant_generators(action, 2), 4)
    inv = CoordinateInvolution((0, 1), (-1, 1))
    fixed = fixed_locus_presentation(action, pres, inv)
    assert fixed.ambient_dim == 1
    assert fixed.generators == ((2,),)
    assert fixed.relations == ()


def test_involution_must_square_to_identity():
    with pytest.raises(InvolutionError):
        CoordinateInvolution((1, 2, 0))


# ---------------------------------------------------------------------------
# presentation isomorphisms


def test_fixed_pair_isomorphic_to_negation_invariants():
    pair = toric_relations(PAIR, invariant_generators(PAIR, 4), 4)
    fixed = fixed_locus_presentation(PAIR, pair, SWAP_PAIR)
    neg = toric_relations(NEG4, invariant_generators(NEG4, 4), 4)
    result = presentations_isomorphic(fixed, neg, match_generators(fixed, neg))
    assert result.isomorphic
    assert result.counterexample is None
    assert result.classes_checked > 0


def test_fixed_triple_isomorphic_to_z2z2_invariants():
    triple = toric_relations(TRIPLE, invariant_generators(TRIPLE, 6), 6)
    fixed = fixed_locus_presentation(TRIPLE, triple, SWAP_TRIPLE)
    z = toric_relations(Z2Z2, invariant_generators(Z2Z2, 4), 6)
    result = presentations_isomorphic(fixed, z, match_generators(fixed, z))
    assert result.isomorphic


def test_presentation_isomorphic_to_itself():
    neg = toric_relations(NEG4, invariant_generators(NEG4, 4), 4)
    result = presentations_isomorphic(neg, neg, tuple(range(10)))
    assert result.isomorphic


def test_generator_count_mismatch_is_false_not_error():
    pair = invariant_generators(PAIR, 4)
    neg = invariant_generators(NEG4, 4)
    result = presentations_isomorphic(pair, neg, tuple(range(10)))
    assert not result.isomorphic
    assert "mismatch" in result.detail


def test_wrong_bijection_returns_counterexample():
    neg = toric_relations(NEG4, invariant_generators(NEG4, 4), 4)
    # swapping two generators of different squarefree type breaks the fibers
    gens = list(neg.generators)
    squares = [i for i, g in enumerate(gens) if max(g) == 2]
    mixed = [i for i, g in enumerate(gens) if max(g) == 1]
    bad_map = list(range(10))
    bad_map[squares[0]], bad_map[mixed[0]] = bad_map[mixed[0]], bad_map[squares[0]]
    result = presentations_isomorphic(neg, neg, tuple(bad_map))
    assert not result.isomorphic
    assert result.counterexample is not None


# ---------------------------------------------------------------------------
# assorted invariants of the machinery itself


def test_invariant_monomials_sorted_and_complete():
    ms = invariant_monomials(NEG4, 4)
    brute = sorted(
        (m for m in all_monomials(4, 4) if oracle_is_invariant(NEG4, m)),
        key=lambda m: (sum(m), tuple(-e for e in m)),
    )
    assert list(ms) == brute


def test_every_relation_side_has_equal_expansion_under_validation():
    with pytest.raises(ToolkitError):
        MonoidPresentation(
            2, ((1, 0), (0, 1)), relations=(((1, 0), (0, 1)),)
        )
