"""Membership and gap structure for semigroups generated by two integers.

The semigroup of nonnegative integer combinations s*a + t*b is all of
a*Z>=0 + b*Z>=0; for coprime a, b every sufficiently large integer is a
member, and membership for general a, b reduces to the coprime case by
dividing out gcd(a, b).
"""

from __future__ import annotations

import math


def _validate_generators(a: int, b: int) -> None:
    for value in (a, b):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"generators must be positive integers, got ({a}, {b})")


def membership(l: int, a: int, b: int) -> tuple[int, int] | None:
    """A representation l == s*a + t*b with s, t >= 0, or None.

    Among all representations the one with the smallest t is returned,
    which also maximises s.  Runs in O(l / b) candidate steps.
    """
    _validate_generators(a, b)
    if not isinstance(l, int) or l < 0:
        raise ValueError(f"membership target must be a nonnegative integer, got {l!r}")
    d = math.gcd(a, b)
    if l % d:
        return None
    for t in range(0, l // b + 1):
        rest = l - t * b
        if rest % a == 0:
            s = rest // a
            if s * a + t * b != l:
                raise AssertionError(f"unsound representation ({s}, {t}) for {l} over ({a}, {b})")
            return (s, t)
    return None


def frobenius(a: int, b: int) -> int:
    """Largest integer with no representation over coprime generators.

    Found by scanning down from the cutoff (a-1)*(b-1), above which
    every integer is a member.  Requires gcd(a, b) == 1 and a, b >= 2
    (a generator equal to 1 leaves no gaps at all).
    """
    _validate_generators(a, b)
    if math.gcd(a, b) != 1:
        raise ValueError(f"frobenius number needs coprime generators, got ({a}, {b})")
    if a == 1 or b == 1:
        raise ValueError(f"the semigroup of ({a}, {b}) has no gaps")
    for l in range((a - 1) * (b - 1) - 1, -1, -1):
        if membership(l, a, b) is None:
            return l
    raise AssertionError("unreachable: 1 is never a member for a, b >= 2")


def residue_classes_disjoint(d1: int, d2: int) -> bool:
    """Whether the d1 shifted progressions d1*Z>=0 + k*d2, 0 <= k < d1,
    are pairwise disjoint.  Holds exactly when gcd(d1, d2) == 1."""
    _validate_generators(d1, d2)
    return math.gcd(d1, d2) == 1


def members_up_to(bound: int, a: int, b: int) -> list[int]:
    """All members of the semigroup in [0, bound], ascending."""
    _validate_generators(a, b)
    if bound < 0:
        return []
    hits = [False] * (bound + 1)
    for s in range(0, bound // a + 1):
        base = s * a
        for t in range(0, (bound - base) // b + 1):
            hits[base + t * b] = True
    return [l for l, hit in enumerate(hits) if hit]
