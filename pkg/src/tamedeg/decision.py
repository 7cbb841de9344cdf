"""Classify sorted degree triples as Tame, NotTame, or Unknown.

Sufficiency rules come first (small first entry, semigroup membership,
equal leading pair, the two catalogued instances), then the two
exclusion rules, then an honest Unknown listing every unmet hypothesis.
The order matters: the triple (10, 23, 25) meets the first exclusion
rule's shape except for the ratio condition d1/gcd(d1, d3) != 2, and it
is realizable, so exclusions must never answer before the catalog.

Reason tags are stable identifiers used in CSV/JSON output:

    TrivialSmallDegree   d1 < 3 (realizable for every tail)
    SemigroupMember      d3 = s*d1 + t*d2, witness attached
    EqualFirstPair       d1 = d2, witness attached
    KnownInstance        catalogued realizable triple
    Theorem3Exclusion    d2 prime, d1/gcd(d1, d3) != 2, membership failed
    Theorem4Exclusion    d3 prime, gcd(d1, d2) = 1, membership failed
    HypothesesFail       neither exclusion rule applies; verdict Unknown
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import automorphisms, semigroup
from .automorphisms import TameStep

TAME = "Tame"
NOT_TAME = "NotTame"
UNKNOWN = "Unknown"

TRIVIAL_SMALL_DEGREE = "TrivialSmallDegree"
SEMIGROUP_MEMBER = "SemigroupMember"
EQUAL_FIRST_PAIR = "EqualFirstPair"
KNOWN_INSTANCE = "KnownInstance"
THEOREM3_EXCLUSION = "Theorem3Exclusion"
THEOREM4_EXCLUSION = "Theorem4Exclusion"
HYPOTHESES_FAIL = "HypothesesFail"

# Realizable triples established by explicit constructions that the
# sufficiency rules cannot reach; only the first ships with a word.
KNOWN_INSTANCES = ((10, 23, 25), (22, 47, 55))


@dataclass(frozen=True)
class Decision:
    triple: tuple[int, int, int]
    verdict: str
    reason: str
    witness: tuple[TameStep, ...] | None = None
    representation: tuple[int, int] | None = None
    failed_hypotheses: tuple[str, ...] = ()


def normalize_triple(values: Sequence[int]) -> tuple[int, int, int]:
    """Sort a degree triple ascending, validating positivity."""
    if len(values) != 3:
        raise ValueError(f"expected three degrees, got {len(values)}")
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"degrees must be positive integers, got {values!r}")
    a, b, c = sorted(values)
    return (a, b, c)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def decide(triple: Sequence[int]) -> Decision:
    """Decision for a sorted triple d1 <= d2 <= d3; first rule wins.

    Raises on unsorted input; use normalize_triple first.  Every Tame
    answer through SemigroupMember or EqualFirstPair carries a witness
    word already verified to compose to the right multidegree.
    """
    d1, d2, d3 = triple
    if normalize_triple(triple) != (d1, d2, d3):
        raise ValueError(f"triple {tuple(triple)!r} is not sorted ascending; normalize first")
    triple = (d1, d2, d3)

    if d1 < 3:
        witness = tuple(automorphisms.witness_linear_first(d2, d3)) if d1 == 1 else None
        return Decision(triple, TAME, TRIVIAL_SMALL_DEGREE, witness=witness)

    rep = semigroup.membership(d3, d1, d2)
    if rep is not None:
        witness = tuple(automorphisms.witness_semigroup(d1, d2, rep))
        return Decision(triple, TAME, SEMIGROUP_MEMBER, witness=witness, representation=rep)

    if d1 == d2:
        witness = tuple(automorphisms.witness_equal_pair(d1, d3))
        return Decision(triple, TAME, EQUAL_FIRST_PAIR, witness=witness)

    if triple in KNOWN_INSTANCES:
        witness = None
        if triple == (10, 23, 25):
            steps = automorphisms.example_word()
            got = automorphisms.compose_word(steps).mdeg()
            if got != triple:
                raise AssertionError(f"catalogued word composes to mdeg {got}, wanted {triple}")
            witness = tuple(steps)
        return Decision(triple, TAME, KNOWN_INSTANCE, witness=witness)

    if _is_prime(d2) and d1 != 2 * math.gcd(d1, d3):
        return Decision(triple, NOT_TAME, THEOREM3_EXCLUSION)

    if _is_prime(d3) and math.gcd(d1, d2) == 1:
        return Decision(triple, NOT_TAME, THEOREM4_EXCLUSION)

    failed = []
    if not _is_prime(d2):
        failed.append(f"Theorem3Exclusion needs a prime d2; {d2} is composite")
    if d1 == 2 * math.gcd(d1, d3):
        failed.append(f"Theorem3Exclusion needs d1/gcd(d1, d3) != 2; {d1}/{math.gcd(d1, d3)} = 2")
    if not _is_prime(d3):
        failed.append(f"Theorem4Exclusion needs a prime d3; {d3} is composite")
    if math.gcd(d1, d2) != 1:
        failed.append(f"Theorem4Exclusion needs gcd(d1, d2) = 1; gcd({d1}, {d2}) = {math.gcd(d1, d2)}")
    return Decision(triple, UNKNOWN, HYPOTHESES_FAIL, failed_hypotheses=tuple(failed))


def type_iii_constraints(triple: Sequence[int]) -> int | None:
    """The parameter n putting the triple in one of two diagnostic
    families, if any; purely informational.

    Family one: n < d1 <= 3n/2, d2 = 2n, d3 = 3n.
    Family two: d1 = 3n/2, d2 = 2n, 5n/2 < d3 <= 3n.
    Both force d2 even, so n is determined as d2/2 when it exists.
    """
    d1, d2, d3 = normalize_triple(triple)
    if d2 % 2:
        return None
    n = d2 // 2
    if d3 == 3 * n and n < d1 and 2 * d1 <= 3 * n:
        return n
    if 2 * d1 == 3 * n and 5 * n < 2 * d3 and d3 <= 3 * n:
        return n
    return None


def sorted_triples(max_degree: int) -> Iterable[tuple[int, int, int]]:
    """All 1 <= d1 <= d2 <= d3 <= max_degree, ordered by (d3, d2, d1)."""
    for d3 in range(1, max_degree + 1):
        for d2 in range(1, d3 + 1):
            for d1 in range(1, d2 + 1):
                yield (d1, d2, d3)


def scan(max_degree: int, workers: int | None = None) -> list[Decision]:
    """Decisions for every sorted triple with d3 <= max_degree.

    Output order is deterministic, ascending in (d3, d2, d1), whatever
    the worker count.  workers=None runs serially.
    """
    if not isinstance(max_degree, int) or max_degree < 3:
        raise ValueError(f"scan needs max_degree >= 3, got {max_degree!r}")
    triples = list(sorted_triples(max_degree))
    if workers is not None and workers > 1:
        chunk = max(1, len(triples) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(decide, triples, chunksize=chunk))
    return [decide(t) for t in triples]


def scan_rows(decisions: Iterable[Decision]) -> list[dict]:
    """Flat row mapping per decision, fixed key order, for CSV/JSON."""
    rows = []
    for d in decisions:
        s, t = d.representation if d.representation is not None else (None, None)
        rows.append({
            "d1": d.triple[0],
            "d2": d.triple[1],
            "d3": d.triple[2],
            "verdict": d.verdict,
            "reason": d.reason,
            "s": s,
            "t": t,
            "witness_len": len(d.witness) if d.witness is not None else None,
        })
    return rows
