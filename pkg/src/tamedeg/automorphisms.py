"""Tame words: elementary and permutation steps, composition, multidegree.

A word is a sequence of steps applied left to right starting from the
identity map.  An elementary step (index i, scalar a, shift s) sends the
current map (F_1, ..., F_n) to the map whose i-th component is
a*F_i + s(F_1, ..., F_n); the shift polynomial must not involve
variable i, so the step is invertible.  A permutation step rearranges
components.  Composing a word therefore yields the automorphism
step_k o ... o step_1.

Word files mirror map files: a `vars:` header, then one step per line,

    elem <i> <alpha> <shift polynomial>     (1-based component index)
    perm <p1> ... <pn>                      (new j-th component = old p_j-th)

with `#` comments allowed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import parsing
from .polynomials import Polynomial, variables


@dataclass(frozen=True)
class ElementaryStep:
    """Replace component `index` (0-based) by scalar*F_index + shift(F)."""

    index: int
    scalar: Fraction
    shift: Polynomial

    def __post_init__(self):
        if not isinstance(self.shift, Polynomial):
            raise TypeError("shift must be a Polynomial")
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if self.scalar == 0:
            raise ValueError("elementary steps need a nonzero scalar")
        n = self.shift.arity
        if not 0 <= self.index < n:
            raise ValueError(f"component index {self.index} out of range for arity {n}")
        if any(m[self.index] for m in self.shift.terms()):
            raise ValueError(f"shift {self.shift} depends on variable {self.index}")

    @property
    def arity(self) -> int:
        return self.shift.arity

    def apply(self, components: tuple[Polynomial, ...]) -> tuple[Polynomial, ...]:
        replaced = self.scalar * components[self.index] + self.shift.compose(list(components))
        return components[: self.index] + (replaced,) + components[self.index + 1:]

    def inverse(self) -> ElementaryStep:
        inv = 1 / self.scalar
        return ElementaryStep(self.index, inv, self.shift * -inv)


@dataclass(frozen=True)
class PermutationStep:
    """Rearrange components: new j-th component is old images[j]-th."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")

    @property
    def arity(self) -> int:
        return len(self.images)

    def apply(self, components: tuple[Polynomial, ...]) -> tuple[Polynomial, ...]:
        return tuple(components[i] for i in self.images)

    def inverse(self) -> PermutationStep:
        inv = [0] * len(self.images)
        for k, i in enumerate(self.images):
            inv[i] = k
        return PermutationStep(tuple(inv))


TameStep = Union[ElementaryStep, PermutationStep]


@dataclass(frozen=True)
class PolyMap:
    """A square polynomial map: n components in n variables."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        components = tuple(self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise ValueError("a map needs at least one component")
        n = len(components)
        for c in components:
            if not isinstance(c, Polynomial):
                raise TypeError("components must be Polynomials")
            if c.arity != n:
                raise ValueError(f"component arity {c.arity} does not match component count {n}")

    @classmethod
    def identity(cls, arity: int) -> PolyMap:
        return cls(variables(arity))

    @property
    def arity(self) -> int:
        return len(self.components)

    def mdeg(self) -> tuple[int | float, ...]:
        """Componentwise total degrees."""
        return tuple(c.degree() for c in self.components)

    def jacobian(self) -> list[list[Polynomial]]:
        n = self.arity
        return [[self.components[i].derivative(j) for j in range(n)] for i in range(n)]

    def jacobian_det(self) -> Polynomial:
        return _determinant(self.jacobian())

    def __repr__(self) -> str:
        return f"PolyMap({', '.join(str(c) for c in self.components)})"


def _determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    n = len(matrix)
    arity = matrix[0][0].arity
    if n == 1:
        return matrix[0][0]
    # Expand along the row with the fewest nonzero entries; the example
    # maps have one dense gradient and two sparse ones, so this skips
    # most cofactors.
    row = min(range(n), key=lambda i: sum(1 for p in matrix[i] if not p.is_zero))
    total = Polynomial.zero(arity)
    rest = [matrix[i] for i in range(n) if i != row]
    for col in range(n):
        entry = matrix[row][col]
        if entry.is_zero:
            continue
        minor = [[r[j] for j in range(n) if j != col] for r in rest]
        cofactor = entry * _determinant(minor)
        total = total + cofactor if (row + col) % 2 == 0 else total - cofactor
    return total


def _step_arity(step: TameStep) -> int:
    if isinstance(step, (ElementaryStep, PermutationStep)):
        return step.arity
    raise TypeError(f"not a tame step: {step!r}")


def compose_word(steps: Sequence[TameStep], arity: int | None = None) -> PolyMap:
    """Fold steps over the identity map; the empty word gives the identity.

    Arity is inferred from the steps when not given (default 3 for the
    empty word).
    """
    steps = list(steps)
    if arity is None:
        arity = _step_arity(steps[0]) if steps else 3
    components = tuple(variables(arity))
    for step in steps:
        if _step_arity(step) != arity:
            raise ValueError(f"step arity {_step_arity(step)} does not match word arity {arity}")
        components = step.apply(components)
    return PolyMap(components)


def invert_word(steps: Sequence[TameStep]) -> list[TameStep]:
    """The word composing to the inverse automorphism."""
    return [step.inverse() for step in reversed(steps)]


def mdeg(value: PolyMap | Sequence[TameStep]) -> tuple[int | float, ...]:
    """Multidegree of a map, or of the composition of a word."""
    if not isinstance(value, PolyMap):
        value = compose_word(value)
    return value.mdeg()


# ---- witness constructions ----
#
# The recipes below are the shortest elementary words whose top-degree
# terms cannot cancel (a pure power of z dominates each new component),
# and each is composed and re-measured before being returned.


def _checked(steps: list[TameStep], expected_mdeg: tuple[int, ...]) -> list[TameStep]:
    got = compose_word(steps).mdeg()
    if got != expected_mdeg:
        raise AssertionError(f"witness failed verification: mdeg {got}, wanted {expected_mdeg}")
    return steps


def witness_semigroup(d1: int, d2: int, rep: tuple[int, int]) -> list[TameStep]:
    """A word of multidegree (d1, d2, s*d1 + t*d2), given d3 in the
    semigroup of (d1, d2) via the representation rep = (s, t).

    Requires 3 <= d1 <= d2, (s, t) != (0, 0) and s*d1 + t*d2 >= d2.
    """
    s, t = rep
    if not 3 <= d1 <= d2:
        raise ValueError(f"need 3 <= d1 <= d2, got ({d1}, {d2})")
    if s < 0 or t < 0 or (s, t) == (0, 0):
        raise ValueError(f"representation must be nonnegative and nonzero, got {rep}")
    d3 = s * d1 + t * d2
    if d3 < d2:
        raise ValueError(f"third degree {d3} from {rep} falls below d2 = {d2}")
    x, y, z = variables(3)
    steps = [
        ElementaryStep(0, Fraction(1), z ** d1),
        ElementaryStep(1, Fraction(1), z ** d2),
        ElementaryStep(2, Fraction(1), x ** s * y ** t),
    ]
    return _checked(steps, (d1, d2, d3))


def witness_equal_pair(d: int, d3: int) -> list[TameStep]:
    """A word of multidegree (d, d, d3) for 3 <= d <= d3.

    After x -> x + z^d and y -> y + x both lead with z^d; the third
    step adds F1 * (F2 - F1)^(d3 - d) = (x + z^d) * y^(d3 - d), whose
    top term z^d * y^(d3 - d) cannot cancel against z.
    """
    if not 3 <= d <= d3:
        raise ValueError(f"need 3 <= d <= d3, got ({d}, {d3})")
    x, y, z = variables(3)
    steps = [
        ElementaryStep(0, Fraction(1), z ** d),
        ElementaryStep(1, Fraction(1), x),
        ElementaryStep(2, Fraction(1), x * (y - x) ** (d3 - d)),
    ]
    return _checked(steps, (d, d, d3))


def witness_linear_first(d2: int, d3: int) -> list[TameStep]:
    """A word of multidegree (1, d2, d3): (x, y + x^d2, z + x^d3)."""
    if not 1 <= d2 <= d3:
        raise ValueError(f"need 1 <= d2 <= d3, got ({d2}, {d3})")
    x, _, _ = variables(3)
    steps = [
        ElementaryStep(1, Fraction(1), x ** d2),
        ElementaryStep(2, Fraction(1), x ** d3),
    ]
    return _checked(steps, (1, d2, d3))


# ---- the explicit counterexample map ----


def _example_polynomials() -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    x, y, z = variables(3)
    g = z + 3 * x ** 2 * y + 3 * x * y ** 3 + y ** 5
    f1 = x + y ** 2 - g ** 2
    h = y - 6 * (x + y ** 2) ** 2 * g + 8 * (x + y ** 2) * g ** 3 - Fraction(16, 5) * g ** 5
    f2 = Fraction(256, 25) * f1 ** 5 + g + h ** 2
    return g, f1, f2, h


def build_example_map() -> PolyMap:
    """The fully expanded map (f1, f2, h) of multidegree (10, 23, 25).

    With g = z + 3x^2*y + 3x*y^3 + y^5:

        f1 = x + y^2 - g^2
        h  = y - 6(x + y^2)^2 g + 8(x + y^2) g^3 - (16/5) g^5
        f2 = (256/25) f1^5 + g + h^2

    The middle component relies on exact cancellation of every term of
    degree 24 through 50 between (256/25) f1^5 and h^2.
    """
    g, f1, f2, h = _example_polynomials()
    return PolyMap((f1, f2, h))


def example_word() -> list[TameStep]:
    """An explicit five-step word composing exactly to build_example_map().

    Writing w = x + y^2 = f1 + g^2, the third component satisfies
    h = y - 6 f1^2 g - 4 f1 g^3 - (6/5) g^5, which peels off the
    construction one elementary step at a time:

        (x, y, z) -> (x, z, y)                      swap to put z second
                  -> (x, g, y)                      z picks up 3x^2*y + 3x*y^3 + y^5
                  -> (f1, g, y)                     x picks up y^2 - g^2
                  -> (f1, g, h)                     y picks up -6f1^2*g - 4f1*g^3 - (6/5)g^5
                  -> (f1, f2, h)                    g picks up (256/25)f1^5 + h^2
    """
    x, y, z = variables(3)
    steps: list[TameStep] = [
        PermutationStep((0, 2, 1)),
        ElementaryStep(1, Fraction(1), 3 * x ** 2 * z + 3 * x * z ** 3 + z ** 5),
        ElementaryStep(0, Fraction(1), z ** 2 - y ** 2),
        ElementaryStep(2, Fraction(1), -6 * x ** 2 * y - 4 * x * y ** 3 - Fraction(6, 5) * y ** 5),
        ElementaryStep(1, Fraction(1), Fraction(256, 25) * x ** 5 + z ** 2),
    ]
    return steps


# ---- word files ----


def parse_word_file(text: str) -> tuple[list[TameStep], tuple[str, ...]]:
    lines = parsing.significant_lines(text)
    if not lines:
        raise parsing.ParseError("empty word file: expected a 'vars:' header", 1, 1)
    lineno, header = lines[0]
    if not header.startswith("vars:"):
        raise parsing.ParseError("expected a 'vars:' header before the first step", lineno, 1)
    try:
        names = parsing.validate_names([s.strip() for s in header[len("vars:"):].split(",")])
    except ValueError as exc:
        raise parsing.ParseError(str(exc), lineno, 1) from exc
    arity = len(names)
    steps: list[TameStep] = []
    for lineno, line in lines[1:]:
        fields = line.split()
        kind = fields[0]
        try:
            if kind == "elem":
                head = line.split(maxsplit=3)
                if len(head) < 4:
                    raise ValueError("elem lines need an index, a scalar and a shift polynomial")
                index = int(head[1])
                if not 1 <= index <= arity:
                    raise ValueError(f"component index {index} out of range 1..{arity}")
                scalar = Fraction(head[2])
                shift = parsing.parse_polynomial(head[3], names, lineno)
                steps.append(ElementaryStep(index - 1, scalar, shift))
            elif kind == "perm":
                images = [int(v) for v in fields[1:]]
                if len(images) != arity:
                    raise ValueError(f"perm lines need {arity} indices, got {len(images)}")
                steps.append(PermutationStep(tuple(i - 1 for i in images)))
            else:
                raise ValueError(f"unknown step kind {kind!r} (expected 'elem' or 'perm')")
        except parsing.ParseError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise parsing.ParseError(str(exc), lineno, 1) from exc
    return steps, names


def format_word_file(steps: Sequence[TameStep], names: Sequence[str]) -> str:
    names = parsing.validate_names(names)
    lines = [f"vars: {', '.join(names)}"]
    for step in steps:
        if _step_arity(step) != len(names):
            raise ValueError(f"step arity {_step_arity(step)} does not match {len(names)} names")
        if isinstance(step, ElementaryStep):
            shift = parsing.format_polynomial(step.shift, names)
            lines.append(f"elem {step.index + 1} {step.scalar} {shift}")
        else:
            lines.append("perm " + " ".join(str(i + 1) for i in step.images))
    return "\n".join(lines) + "\n"
