"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is stored as a mapping from exponent tuples to nonzero
Fractions.  Values are immutable: every operation returns a new
Polynomial and never mutates its operands.  The zero polynomial has an
empty term mapping and degree NEG_INFINITY, so that

    deg(f + g) <= max(deg f, deg g)
    deg(f * g) == deg f + deg g

hold with no special cases (NEG_INFINITY absorbs addition and orders
below every integer).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

NEG_INFINITY = float("-inf")

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


def canonical_key(monomial: Monomial) -> tuple:
    """Sort key for the canonical term order (graded lex, descending).

    Total degree descending, ties broken lexicographically with earlier
    variables heavier (x > y > z).  Used everywhere a polynomial is
    rendered or iterated deterministically.
    """
    return (-sum(monomial), tuple(-e for e in monomial))


def _grlex_key(monomial: Monomial) -> tuple:
    # Graded lex, used internally where a multiplicative order is needed
    # (leading-term division).  max() under this key picks the leading term.
    return (sum(monomial), monomial)


class Polynomial:
    """An exact polynomial in a fixed number of variables.

    `arity` is the number of variables; exponent tuples must have
    exactly that length.  Coefficients are Fractions and zero
    coefficients are dropped on construction, so equality of term
    mappings is equality of polynomials.
    """

    __slots__ = ("_arity", "_terms", "_degree", "_hash")

    def __init__(self, arity: int, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None):
        if not isinstance(arity, int) or arity < 1:
            raise ValueError(f"arity must be a positive integer, got {arity!r}")
        self._arity = arity
        clean: dict[Monomial, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for monomial, coeff in items:
                monomial = tuple(monomial)
                if len(monomial) != arity:
                    raise ValueError(f"exponent tuple {monomial} has length {len(monomial)}, expected {arity}")
                for e in monomial:
                    if not isinstance(e, int) or e < 0:
                        raise ValueError(f"exponents must be nonnegative integers, got {monomial}")
                coeff = _coerce(coeff)
                if coeff:
                    existing = clean.get(monomial)
                    if existing is not None:
                        coeff = existing + coeff
                        if coeff:
                            clean[monomial] = coeff
                        else:
                            del clean[monomial]
                    else:
                        clean[monomial] = coeff
        self._terms = clean
        self._degree: int | float | None = None
        self._hash: int | None = None

    # ---- constructors ----

    @classmethod
    def zero(cls, arity: int) -> Polynomial:
        return cls(arity)

    @classmethod
    def constant(cls, value: Scalar, arity: int) -> Polynomial:
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, index: int, arity: int) -> Polynomial:
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exponents: Monomial, coeff: Scalar = 1) -> Polynomial:
        return cls(len(exponents), {tuple(exponents): coeff})

    # ---- inspection ----

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> dict[Monomial, Fraction]:
        """A copy of the term mapping."""
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical order (degree descending, lex ascending)."""
        return [(m, self._terms[m]) for m in sorted(self._terms, key=canonical_key)]

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._arity, Fraction(0))

    def degree(self) -> int | float:
        """Total degree; NEG_INFINITY for the zero polynomial."""
        if self._degree is None:
            self._degree = max((sum(m) for m in self._terms), default=NEG_INFINITY)
        return self._degree

    def is_homogeneous(self) -> bool:
        """Whether all terms share one total degree.  Zero counts as homogeneous."""
        degrees = {sum(m) for m in self._terms}
        return len(degrees) <= 1

    def leading_form(self) -> Polynomial:
        """Homogeneous component of top total degree."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading form")
        d = self.degree()
        return Polynomial(self._arity, {m: c for m, c in self._terms.items() if sum(m) == d})

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self._arity, {m: c for m, c in self._terms.items() if sum(m) == d})

    # ---- arithmetic ----

    def _check_arity(self, other: Polynomial) -> None:
        if self._arity != other._arity:
            raise ValueError(f"arity mismatch: {self._arity} vs {other._arity}")

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        result = Polynomial.__new__(Polynomial)
        result._arity = self._arity
        result._terms = terms
        result._degree = None
        result._hash = None
        return result

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        result = Polynomial.__new__(Polynomial)
        result._arity = self._arity
        result._terms = {m: -c for m, c in self._terms.items()}
        result._degree = self._degree
        result._hash = None
        return result

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return Polynomial.zero(self._arity)
            result = Polynomial.__new__(Polynomial)
            result._arity = self._arity
            result._terms = {m: c * v for m, v in self._terms.items()}
            result._degree = self._degree
            result._hash = None
            return result
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                s = terms.get(m, 0) + ca * cb
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        result = Polynomial.__new__(Polynomial)
        result._arity = self._arity
        result._terms = terms
        result._degree = None
        result._hash = None
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = Polynomial.constant(1, self._arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ---- calculus and substitution ----

    def derivative(self, var: int) -> Polynomial:
        """Formal partial derivative with respect to variable `var` (0-based)."""
        if not 0 <= var < self._arity:
            raise ValueError(f"variable index {var} out of range for arity {self._arity}")
        terms: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[var]
            if e:
                lowered = m[:var] + (e - 1,) + m[var + 1:]
                terms[lowered] = terms.get(lowered, Fraction(0)) + c * e
        return Polynomial(self._arity, terms)

    def compose(self, args: Sequence[Polynomial]) -> Polynomial:
        """Substitute args[i] for variable i.  All args must share one arity."""
        if len(args) != self._arity:
            raise ValueError(f"expected {self._arity} substitution arguments, got {len(args)}")
        if not args:
            raise ValueError("cannot compose a polynomial with no variables")
        target_arity = args[0].arity
        for a in args:
            if not isinstance(a, Polynomial):
                raise TypeError("substitution arguments must be Polynomials")
            if a.arity != target_arity:
                raise ValueError(f"arity mismatch among substitution arguments: {a.arity} vs {target_arity}")
        # Cache powers of each argument up to the largest exponent used.
        powers: list[list[Polynomial]] = []
        for i, a in enumerate(args):
            top = max((m[i] for m in self._terms), default=0)
            cache = [Polynomial.constant(1, target_arity)]
            for _ in range(top):
                cache.append(cache[-1] * a)
            powers.append(cache)
        result = Polynomial.zero(target_arity)
        for m, c in self._terms.items():
            prod = Polynomial.constant(c, target_arity)
            for i, e in enumerate(m):
                if e:
                    prod = prod * powers[i][e]
            result = result + prod
        return result

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Evaluate at a rational point."""
        if len(point) != self._arity:
            raise ValueError(f"expected {self._arity} coordinates, got {len(point)}")
        values = [_coerce(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= v ** e
            total += term
        return total

    # ---- comparison ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(Fraction(0))
            elif len(self._terms) == 1 and (0,) * self._arity in self._terms:
                # Constant polynomials hash like their value so that
                # p == 1 implies hash(p) == hash(1).
                self._hash = hash(self._terms[(0,) * self._arity])
            else:
                self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        from . import parsing

        return parsing.format_polynomial(self, parsing.default_names(self._arity))

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, arity={self._arity})"


def variables(arity: int) -> tuple[Polynomial, ...]:
    """The coordinate polynomials (x_0, ..., x_{arity-1})."""
    return tuple(Polynomial.variable(i, arity) for i in range(arity))


def divide_homogeneous(f: Polynomial, d: Polynomial) -> Polynomial | None:
    """Exact quotient of homogeneous polynomials, or None.

    Returns q with f == q * d when d divides f in the polynomial ring,
    else None.  Both inputs must be nonzero and homogeneous.
    """
    if f.is_zero or d.is_zero:
        raise ValueError("divisibility of homogeneous forms requires nonzero inputs")
    if f.arity != d.arity:
        raise ValueError(f"arity mismatch: {f.arity} vs {d.arity}")
    if not f.is_homogeneous() or not d.is_homogeneous():
        raise ValueError("divide_homogeneous requires homogeneous inputs")
    if f.degree() < d.degree():
        return None
    lead_d = max(d._terms, key=_grlex_key)
    coeff_d = d._terms[lead_d]
    remainder = f
    quotient: dict[Monomial, Fraction] = {}
    # Standard leading-term elimination; since d is homogeneous, failure
    # of the exponent-wise comparison at any step certifies non-divisibility.
    while remainder:
        lead_r = max(remainder._terms, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(e < 0 for e in diff):
            return None
        c = remainder._terms[lead_r] / coeff_d
        quotient[diff] = c
        remainder = remainder - Polynomial.monomial(diff, c) * d
    return Polynomial(f.arity, quotient)
