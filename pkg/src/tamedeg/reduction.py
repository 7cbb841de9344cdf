"""Search for elementary reductions of a three-component polynomial map.

An elementary reduction of F at the target component replaces
F_target by F_target - g(F_j, F_k), the other two components taken in
index order, such that the degree strictly drops.  The search space is
every g supported on monomials u^s v^t with

    s * deg F_j + t * deg F_k <= support_degree_cap,

which is exactly the set of products F_j^s F_k^t whose composed degree
stays within the cap.  Cancellation-aware caps matter: the known
degree-(10,23,25) map needs a u^5 term of composed degree 50 to reduce
its degree-23 component, so the default cap is 2 * deg F_target.

Within the capped support the problem is linear: one unknown
coefficient per support monomial, one equation per monomial of the
difference that must vanish.  Everything runs over exact rationals;
there are no thresholds anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .polynomials import Monomial, Polynomial
from .automorphisms import PolyMap

# Upper bound on support-subset solvability probes during tie-breaking.
# The golden cases need a few dozen; this is pure safety for huge caps.
SUBSET_BUDGET = 200_000


@dataclass(frozen=True)
class ReductionResult:
    """g: bivariate polynomial applied to the two non-target components
    (ascending index order); residual = F_target - g(F_j, F_k)."""

    g: Polynomial
    residual: Polynomial
    residual_degree: int


def _echelon_add(rows: list[list[Fraction]], pivots: dict[int, int], new_row: list[Fraction]) -> bool:
    """Eliminate new_row against the current echelon rows and absorb it.

    Returns False when the row reduces to 0 = nonzero, i.e. the system
    became inconsistent.  rows hold ncols coefficients plus the RHS.
    Stored rows keep their first nonzero entry at their pivot column,
    which the left-to-right scan preserves.
    """
    width = len(new_row) - 1
    for col in range(width):
        value = new_row[col]
        if not value:
            continue
        pivot_row = pivots.get(col)
        if pivot_row is None:
            rows.append(new_row)
            pivots[col] = len(rows) - 1
            return True
        row = rows[pivot_row]
        scale = value / row[col]
        for i in range(col, width + 1):
            if row[i]:
                new_row[i] -= scale * row[i]
    return new_row[width] == 0


def _solve_reduced(rows: list[list[Fraction]], pivots: dict[int, int], ncols: int) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Particular solution (free variables zero) and kernel basis."""
    # Reduce upwards so each pivot column appears in exactly one row.
    order = sorted(pivots)
    for pos, col in enumerate(order):
        row = rows[pivots[col]]
        inv = 1 / row[col]
        for i in range(col, ncols + 1):
            if row[i]:
                row[i] *= inv
        for other_col in order[:pos]:
            other = rows[pivots[other_col]]
            factor = other[col]
            if factor:
                for i in range(col, ncols + 1):
                    if row[i]:
                        other[i] -= factor * row[i]
    particular = [Fraction(0)] * ncols
    for col in order:
        particular[col] = rows[pivots[col]][ncols]
    free_cols = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for col in order:
            vec[col] = -rows[pivots[col]][f]
        kernel.append(vec)
    return particular, kernel


def _combine(base: list[Fraction], kernel: list[list[Fraction]], weights: list[Fraction]) -> list[Fraction]:
    out = list(base)
    for j, coeff in enumerate(weights):
        if coeff:
            vec = kernel[j]
            for i in range(len(out)):
                if vec[i]:
                    out[i] += coeff * vec[i]
    return out


def _support_vector_on(subset: tuple[int, ...], particular: list[Fraction], kernel: list[list[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Solutions vanishing outside `subset`: a representative plus basis
    directions of the remaining freedom, or None.

    The representative settles support questions on its own, but a
    family can mix valid residual degrees with degrees below 1, and the
    caller's degree check may reject the representative while a shifted
    member passes; the directions are its fallback candidates.
    """
    ncols = len(particular)
    outside = [i for i in range(ncols) if i not in subset]
    if not kernel:
        if all(particular[i] == 0 for i in outside):
            return particular, []
        return None
    rows: list[list[Fraction]] = []
    pivots: dict[int, int] = {}
    for i in outside:
        row = [vec[i] for vec in kernel] + [-particular[i]]
        if not _echelon_add(rows, pivots, row):
            return None
    lam, lam_kernel = _solve_reduced(rows, pivots, len(kernel))
    solution = _combine(particular, kernel, lam)
    zero = [Fraction(0)] * ncols
    directions = [_combine(zero, kernel, lvec) for lvec in lam_kernel]
    return solution, directions


def find_elementary_reduction(pmap: PolyMap, target: int, support_degree_cap: int | None = None) -> ReductionResult | None:
    """The best capped elementary reduction at `target` (0-based), or None.

    Among all g supported on the capped monomial set that strictly drop
    the degree, one minimizing the residual degree is returned, with
    ties broken by fewest support monomials and then by the first
    solvable support subset in a fixed monomial enumeration (ascending
    graded order, v-heavy first).  Residuals of degree below 1 are not
    reductions: components of automorphisms are nonconstant, so a drop
    to a constant means the target lies in the algebra generated by the
    other two components and is reported as None.
    """
    if pmap.arity != 3:
        raise ValueError(f"reduction search expects three components, got {pmap.arity}")
    if not 0 <= target < 3:
        raise ValueError(f"target index {target} out of range")
    components = pmap.components
    for a in range(3):
        for b in range(a + 1, 3):
            if components[a] == components[b]:
                raise ValueError("map components must be pairwise distinct")
    f_target = components[target]
    j, k = (i for i in range(3) if i != target)
    deg_target = f_target.degree()
    deg_j = components[j].degree()
    deg_k = components[k].degree()
    if deg_j < 1 or deg_k < 1:
        raise ValueError("cannot reduce against a constant component")
    if deg_target < 2:
        # The residual must keep degree >= 1, so nothing below 2 can drop.
        return None
    if support_degree_cap is None:
        support_degree_cap = 2 * deg_target
    if support_degree_cap < deg_target:
        raise ValueError(f"support cap {support_degree_cap} is below the target degree {deg_target}")

    # Support monomials in a fixed enumeration; (0,0) is omitted since a
    # constant term never changes any degree >= 1 coefficient.
    support: list[tuple[int, int]] = []
    s = 0
    while s * deg_j <= support_degree_cap:
        t = 0 if s else 1
        while s * deg_j + t * deg_k <= support_degree_cap:
            support.append((s, t))
            t += 1
        s += 1
    support.sort(key=lambda st: (st[0] + st[1], st[0]))
    if not support:
        return None
    ncols = len(support)

    powers_j: list[Polynomial] = [Polynomial.constant(1, 3)]
    while len(powers_j) <= max(st[0] for st in support):
        powers_j.append(powers_j[-1] * components[j])
    powers_k: list[Polynomial] = [Polynomial.constant(1, 3)]
    while len(powers_k) <= max(st[1] for st in support):
        powers_k.append(powers_k[-1] * components[k])
    products = [powers_j[s] * powers_k[t] for s, t in support]

    # One equation per monomial; group them by total degree so levels
    # can be constrained from the top down.
    by_degree: dict[int, set[Monomial]] = {}
    for poly in products + [f_target]:
        for m in poly.terms():
            d = sum(m)
            if d >= 1:
                by_degree.setdefault(d, set()).add(m)
    if not by_degree:
        return None
    top_degree = max(by_degree)

    def rows_for(degrees) -> list[list[Fraction]]:
        out = []
        for d in degrees:
            for m in sorted(by_degree.get(d, ())):
                out.append([p.coefficient(m) for p in products] + [f_target.coefficient(m)])
        return out

    def eliminate(min_level: int) -> tuple[list[list[Fraction]], dict[int, int]] | None:
        rows: list[list[Fraction]] = []
        pivots: dict[int, int] = {}
        for row in rows_for(range(min_level, top_degree + 1)):
            if not _echelon_add(rows, pivots, row):
                return None
        return rows, pivots

    base = eliminate(deg_target)
    if base is None:
        # Every drop leaves a residual whose top degrees vanish, so an
        # inconsistent base system rules all of them out.
        return None
    rows, pivots = base

    # Constrain further levels while the system stays solvable; when
    # level L-1 fails, every remaining solution has residual degree
    # exactly L-1, so the minimum is forced on whatever gets picked.
    level = deg_target
    while level > 2:
        saved_rows = [list(r) for r in rows]
        saved_pivots = dict(pivots)
        ok = True
        for row in rows_for([level - 1]):
            if not _echelon_add(rows, pivots, row):
                ok = False
                break
        if not ok:
            rows, pivots = saved_rows, saved_pivots
            break
        level -= 1

    def build_result(solution: list[Fraction]) -> ReductionResult | None:
        g = Polynomial(2, {st: c for st, c in zip(support, solution) if c})
        residual = f_target
        for coeff, product in zip(solution, products):
            if coeff:
                residual = residual - coeff * product
        degree = residual.degree()
        if degree < 1:
            return None
        # Soundness recheck by independent composition.
        recomposed = f_target - g.compose([components[j], components[k]])
        if recomposed != residual or degree >= deg_target:
            raise AssertionError("reduction failed its own verification")
        return ReductionResult(g=g, residual=residual, residual_degree=degree)

    budget = SUBSET_BUDGET

    def search_system(rows: list[list[Fraction]], pivots: dict[int, int]) -> ReductionResult | None:
        nonlocal budget
        particular, kernel = _solve_reduced(rows, pivots, ncols)
        if not kernel:
            return build_result(particular)
        for size in range(1, ncols + 1):
            for subset in combinations(range(ncols), size):
                budget -= 1
                if budget < 0:
                    break
                probe = _support_vector_on(subset, particular, kernel)
                if probe is None:
                    continue
                solution, directions = probe
                result = build_result(solution)
                if result is None:
                    # Only a residual of degree < 1 rejects a candidate.
                    # Its low-degree coefficients are affine in the
                    # remaining freedom and vanish at the representative,
                    # so probing each basis direction either finds a
                    # valid member or proves the family has none.
                    for direction in directions:
                        result = build_result([c + d for c, d in zip(solution, direction)])
                        if result is not None:
                            break
                if result is not None:
                    return result
            if budget < 0:
                break
        else:
            return None
        # Budget exhausted: fall back to deterministic representatives.
        for solution in [particular] + [[p + v for p, v in zip(particular, vec)] for vec in kernel]:
            result = build_result(solution)
            if result is not None:
                return result
        return None

    # Search the most constrained system first.  When all its solutions
    # collapse to residuals of degree < 1, back off one level at a time:
    # a valid residual of degree d solves the (d+1)-level system, so the
    # first level whose family contains a valid member realizes the
    # minimal valid residual degree.
    while True:
        result = search_system(rows, pivots)
        if result is not None:
            return result
        level += 1
        if level > deg_target:
            return None
        rebuilt = eliminate(level)
        assert rebuilt is not None  # weaker than an already consistent system
        rows, pivots = rebuilt


def find_any_reduction(pmap: PolyMap, support_degree_cap: int | None = None) -> tuple[int, ReductionResult] | None:
    """First reducible target, trying components 3, 2, 1 (as indices 2, 1, 0).

    Targets whose preconditions fail under the given cap are skipped
    rather than raised, so a single cap can be probed against all three.
    """
    for target in (2, 1, 0):
        try:
            result = find_elementary_reduction(pmap, target, support_degree_cap)
        except ValueError:
            continue
        if result is not None:
            return target, result
    return None
