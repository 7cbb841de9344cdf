"""Elementary reduction search: soundness, minimality, completeness."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from tamedeg import (
    ElementaryStep,
    PolyMap,
    Polynomial,
    compose_word,
    find_any_reduction,
    find_elementary_reduction,
    variables,
)

x, y, z = variables(3)
u, v = variables(2)


def support_products(pmap: PolyMap, target: int, cap: int) -> list[Polynomial]:
    """Every F_j^s F_k^t with s*deg F_j + t*deg F_k <= cap, (s,t) != (0,0)."""
    j, k = (i for i in range(3) if i != target)
    fj, fk = pmap.components[j], pmap.components[k]
    out = []
    s = 0
    while s * fj.degree() <= cap:
        t = 0 if s else 1
        while s * fj.degree() + t * fk.degree() <= cap:
            out.append(fj**s * fk**t)
            t += 1
        s += 1
    return out


def system_ranks(products: list[Polynomial], f_target: Polynomial,
                 min_degree: int) -> tuple[int, int]:
    """(rank A, rank [A|b]) for the system 'all coefficients of total
    degree >= min_degree in f_target - sum c_i * products[i] vanish'."""
    monomials = sorted(
        {m for p in products for m in p.terms() if sum(m) >= min_degree}
        | {m for m in f_target.terms() if sum(m) >= min_degree}
    )
    a = sympy.Matrix([[sympy.Rational(p.coefficient(m)) for p in products] for m in monomials])
    b = sympy.Matrix([[sympy.Rational(f_target.coefficient(m))] for m in monomials])
    return a.rank(), a.row_join(b).rank()


def drop_is_achievable(pmap: PolyMap, target: int, cap: int, level: int) -> bool:
    """True iff some capped g leaves a residual of degree < level,
    counting constant residuals, which are not reductions."""
    products = support_products(pmap, target, cap)
    rank_a, rank_ab = system_ranks(products, pmap.components[target], level)
    return rank_a == rank_ab


def no_valid_drop_below(pmap: PolyMap, target: int, cap: int, level: int) -> bool:
    """True iff no capped g leaves a residual of degree in [1, level)."""
    products = support_products(pmap, target, cap)
    f_target = pmap.components[target]
    rank_lv, rank_lv_b = system_ranks(products, f_target, level)
    if rank_lv != rank_lv_b:
        # nothing below `level` at all, constant residuals included
        return True
    rank_all, rank_all_b = system_ranks(products, f_target, 1)
    # the level system is consistent, so it contains a valid member
    # unless every solution collapses to a constant residual, which
    # pins its solution space to that of the all-degrees system
    return rank_all == rank_all_b and rank_all == rank_lv


class TestGoldenCases:
    def test_square_shift(self):
        result = find_elementary_reduction(PolyMap((x, y + x**2, z)), 1)
        assert result.g == u**2
        assert result.residual == y
        assert result.residual_degree == 1

    def test_example_map(self, example_reduction):
        assert example_reduction.g == Fraction(256, 25) * u**5 + v**2
        assert example_reduction.residual == z + 3 * x**2 * y + 3 * x * y**3 + y**5
        assert example_reduction.residual_degree == 5

    def test_example_needs_the_cancellation_cap(self, example_map):
        # the u^5 term has composed degree 50, above the default cap of
        # 2 * 23; the search must honor the explicit cap
        assert find_elementary_reduction(example_map, 1, 46) is None

    def test_triangular_composition(self):
        word = [
            ElementaryStep(0, Fraction(1), z**3),
            ElementaryStep(1, Fraction(1), z**5),
            ElementaryStep(2, Fraction(1), x**2 * y),
        ]
        found = find_any_reduction(compose_word(word))
        assert found is not None
        target, result = found
        assert target == 2
        assert result.g == u**2 * v
        assert result.residual == z
        assert result.residual_degree == 1

    def test_identity_map(self):
        assert find_any_reduction(PolyMap.identity(3)) is None
        assert find_elementary_reduction(PolyMap.identity(3), 2) is None


class TestSelection:
    def test_kernel_freedom_resolved_to_smallest_support(self):
        # solutions form g = u^2 + a*u + b*v; the support tie-break
        # must pick g = u^2 alone
        result = find_elementary_reduction(PolyMap((x, y + x**2, z + x)), 1)
        assert result.g == u**2
        assert result.residual == y
        assert result.residual_degree == 1

    def test_constant_residual_family_member_recovered(self):
        # g = u^2 cancels all of x^2 + 5 but leaves a constant, which is
        # not a reduction; g = u^2 + v leaves 5 - y and is
        result = find_elementary_reduction(PolyMap((x, y, x**2 + 5)), 2)
        assert result.g == u**2 + v
        assert result.residual == Polynomial.constant(5, 3) - y
        assert result.residual_degree == 1

    def test_algebra_member_still_needs_a_nonconstant_residual(self):
        # g = u^2 reproduces x^2 exactly, leaving a constant, which is
        # not a reduction; adding the degree-1 component rescues it
        result = find_elementary_reduction(PolyMap((x, x**2, x + y + z)), 1)
        assert result.g == u**2 + v
        assert result.residual == -(x + y + z)
        assert result.residual_degree == 1

    def test_backs_off_when_every_floor_solution_is_constant(self):
        # all products are even powers of x, so no residual of degree 1
        # exists; the fully constrained system only contains g = u^2
        # up to kernel moves that keep the residual zero, and the valid
        # drop g = u^2 + u with residual -x^2 lives one level up
        result = find_elementary_reduction(PolyMap((x**2, x**4, x**6)), 1)
        assert result.g == u**2 + u
        assert result.residual == -(x**2)
        assert result.residual_degree == 2

    def test_targets_tried_from_last_to_first(self):
        found = find_any_reduction(PolyMap((x, y + x**2, z + x**2)))
        assert found is not None
        assert found[0] == 2


class TestValidation:
    def test_arity_three_required(self):
        with pytest.raises(ValueError):
            find_elementary_reduction(PolyMap((u, v)), 0)

    def test_target_range(self):
        with pytest.raises(ValueError):
            find_elementary_reduction(PolyMap.identity(3), 3)

    def test_distinct_components_required(self):
        with pytest.raises(ValueError):
            find_elementary_reduction(PolyMap((x, x, z)), 2)

    def test_constant_component_rejected(self):
        m = PolyMap((x, Polynomial.constant(4, 3), z + x**2))
        with pytest.raises(ValueError):
            find_elementary_reduction(m, 2)

    def test_cap_below_target_degree(self):
        with pytest.raises(ValueError):
            find_elementary_reduction(PolyMap((x, y + x**2, z)), 1, 1)


class TestHonestNone:
    def test_unreachable_monomial(self):
        # y^2 cannot appear in any capped product of x and y + x^3
        m = PolyMap((x, y + x**3, z + y**2))
        assert find_elementary_reduction(m, 2) is None
        assert not drop_is_achievable(m, 2, 4, 2)

    def test_none_is_certified_by_rank(self):
        rng = random.Random(71)
        checked = 0
        while checked < 10:
            m = random_map(rng)
            target = rng.randrange(3)
            deg = m.components[target].degree()
            if deg < 2:
                continue
            if find_elementary_reduction(m, target) is not None:
                continue
            assert no_valid_drop_below(m, target, 2 * deg, deg)
            checked += 1


def random_map(rng: random.Random) -> PolyMap:
    while True:
        components = []
        for _ in range(3):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                m = tuple(rng.randint(0, 2) for _ in range(3))
                terms[m] = Fraction(rng.randint(-3, 3))
            p = Polynomial(3, terms)
            components.append(p)
        degrees_ok = all(c.degree() >= 1 for c in components)
        distinct = len({c for c in components}) == 3
        if degrees_ok and distinct:
            return PolyMap(tuple(components))


class TestAgainstLinearOracle:
    def test_results_are_sound_and_minimal(self):
        rng = random.Random(72)
        successes = 0
        while successes < 15:
            m = random_map(rng)
            target = rng.randrange(3)
            f_target = m.components[target]
            if f_target.degree() < 2:
                continue
            result = find_elementary_reduction(m, target)
            if result is None:
                continue
            j, k = (i for i in range(3) if i != target)
            recomposed = f_target - result.g.compose(
                [m.components[j], m.components[k]]
            )
            assert recomposed == result.residual
            assert result.residual.degree() == result.residual_degree
            assert 1 <= result.residual_degree < f_target.degree()
            cap = 2 * f_target.degree()
            if result.residual_degree >= 2:
                # nothing valid below the achieved degree is possible
                assert no_valid_drop_below(m, target, cap, result.residual_degree)
            successes += 1


class TestPeelableWords:
    def test_degree_increasing_words_always_reduce(self):
        rng = random.Random(73)
        for _ in range(20):
            components = tuple(variables(3))
            steps = 0
            wanted = rng.randint(1, 2)
            while steps < wanted:
                index = rng.randrange(3)
                others = [i for i in range(3) if i != index]
                exps = [0, 0, 0]
                exps[others[0]] = rng.randint(0, 2)
                exps[others[1]] = rng.randint(0, 2)
                if exps[others[0]] == exps[others[1]] == 0:
                    continue
                composed_degree = sum(
                    exps[i] * components[i].degree() for i in others
                )
                if composed_degree <= components[index].degree():
                    continue
                step = ElementaryStep(
                    index, Fraction(1), Polynomial.monomial(tuple(exps))
                )
                components = step.apply(components)
                steps += 1
            if steps == 0:
                continue
            assert find_any_reduction(PolyMap(components)) is not None
