"""Problem data types, input validation, coefficient caps and the size bound.

The solver never sees the matrix that defines the cone. Its whole input is
a dimension ``n``, a cap ``d`` on the magnitude of the unknown matrix
entries, and one non-negative integral witness vector ``y``. Everything
else here is derived from those three: the ascending stable sort of the
witness (the construction assumes a non-decreasing witness and we undo the
sort at the end), the per-level coefficient cap sequence, and the closed
form for the guaranteed bound on the output's maximum entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .errors import (
    MalformedPermutationError,
    NegativeEntryError,
    NonPositiveCapError,
    NonPositiveDimensionError,
    WitnessLengthError,
    ZeroWitnessError,
)

# Counts above 2**_MATERIALIZE_BITS are never materialized; budget errors
# then report the count as unknown rather than building a gigantic int.
_MATERIALIZE_BITS = 16384


@dataclass(frozen=True)
class ProblemInput:
    """The solver's entire knowledge of the cone: (n, d) and one witness."""

    n: int
    d: int
    y: tuple[int, ...]


@dataclass(frozen=True)
class SortedWitness:
    """Ascending stable sort of the witness plus the permutation to undo it.

    ``perm[k]`` is the original position of the k-th smallest entry, so
    ``original[perm[k]] == y[k]`` and equal entries keep their relative
    order.
    """

    y: tuple[int, ...]
    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.y)


@dataclass(frozen=True)
class Constraint:
    """One inequality sum(coeffs[i] * x(level+i)) <= 0 over coordinates level..n.

    Also serves as a violation certificate: a constraint the witness
    satisfies but a candidate vector does not.
    """

    level: int
    coeffs: tuple[int, ...]

    def dot(self, values: Sequence[int]) -> int:
        if len(values) != len(self.coeffs):
            raise ValueError("constraint and value vector lengths differ")
        return sum(c * v for c, v in zip(self.coeffs, values))


@dataclass(frozen=True)
class LevelCone:
    """Descriptor of the implicit cone over coordinates level..n.

    The cone is cut out by every integer coefficient vector bounded by
    ``cap`` in magnitude that the witness values satisfy. The full
    inequality list has up to (2*cap+1)**width members, so it is only ever
    traversed, never stored.
    """

    level: int
    cap: int
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.level <= len(self.y):
            raise ValueError(f"level {self.level} out of range for n={len(self.y)}")

    @property
    def width(self) -> int:
        return len(self.y) + 1 - self.level

    def tail_y(self) -> tuple[int, ...]:
        return self.y[self.level - 1 :]

    def admits(self, coeffs: Sequence[int]) -> bool:
        """True iff coeffs is a constraint of this cone."""
        if len(coeffs) != self.width:
            return False
        if any(abs(c) > self.cap for c in coeffs):
            return False
        return sum(c * yv for c, yv in zip(coeffs, self.tail_y())) <= 0

    def constraint_count(self) -> int | None:
        """Total coefficient vectors to scan, or None if beyond 2**16384."""
        return pow_if_small(2 * self.cap + 1, self.width)

    def constraints(self) -> Iterator[Constraint]:
        """All constraints in lexicographic coefficient order."""
        y = self.tail_y()
        for coeffs in product(range(-self.cap, self.cap + 1), repeat=self.width):
            if sum(c * yv for c, yv in zip(coeffs, y)) <= 0:
                yield Constraint(self.level, coeffs)


def validate(problem: ProblemInput) -> SortedWitness:
    """Gate every run: reject bad inputs, return the sorted witness."""
    if problem.n < 1:
        raise NonPositiveDimensionError(f"dimension must be >= 1, got {problem.n}")
    if problem.d < 1:
        raise NonPositiveCapError(f"coefficient cap must be >= 1, got {problem.d}")
    if len(problem.y) != problem.n:
        raise WitnessLengthError(
            f"witness has {len(problem.y)} entries, expected n={problem.n}"
        )
    for i, v in enumerate(problem.y):
        if v < 0:
            raise NegativeEntryError(f"witness entry y({i + 1}) = {v} is negative")
    if all(v == 0 for v in problem.y):
        raise ZeroWitnessError("witness must be non-zero")
    perm = tuple(sorted(range(problem.n), key=lambda i: problem.y[i]))
    y_sorted = tuple(problem.y[i] for i in perm)
    return SortedWitness(y=y_sorted, perm=perm)


def coefficient_cap(d: int, level: int) -> int:
    """Cap on constraint coefficients at a given level.

    The sequence starts at d and doubles-the-square at each level, i.e.
    cap(1) = d and cap(j) = 2 * cap(j-1)**2, which closes to
    (2d)**(2**(j-1)) / 2.
    """
    if d < 1:
        raise NonPositiveCapError(f"coefficient cap must be >= 1, got {d}")
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    return (2 * d) ** (2 ** (level - 1)) // 2


def coefficient_cap_exceeds(d: int, level: int, limit: int) -> bool:
    """Whether coefficient_cap(d, level) > limit, without materializing it.

    Needed because the cap's bit length is itself exponential in level.
    """
    if d < 1 or level < 1:
        raise ValueError("requires d >= 1 and level >= 1")
    if limit < 0:
        return True
    bits = (2 * max(limit, 1)).bit_length()
    # exponent e = 2**(level-1); if e >= bits then (2d)**e >= 2**bits > 2*limit
    if level - 1 >= bits.bit_length():
        return True
    e = 2 ** (level - 1)
    if e >= bits:
        return True
    return (2 * d) ** e > 2 * limit


def coefficient_cap_if_small(d: int, level: int) -> int | None:
    """coefficient_cap(d, level), or None when it exceeds 2**16384."""
    e = 2 ** (level - 1) if level - 1 < 64 else None
    if e is None or e * (2 * d).bit_length() > _MATERIALIZE_BITS:
        return None
    return coefficient_cap(d, level)


def pow_if_small(base: int, exp: int) -> int | None:
    """base**exp, or None when the result would exceed 2**16384."""
    if base <= 1:
        return base**exp if base >= 0 else None
    if exp * base.bit_length() > _MATERIALIZE_BITS:
        return None
    return base**exp


def count_vs_budget(base: int, exp: int, budget: int) -> tuple[bool, int | None]:
    """Compare base**exp against a budget without huge intermediates.

    Returns (exceeds, count) where count is the exact value when it is
    small enough to materialize, else None.
    """
    if base < 2 or exp == 0:
        v = base**exp
        return v > budget, v
    if exp * (base.bit_length() - 1) > budget.bit_length():
        return True, pow_if_small(base, exp)
    v = base**exp
    return v > budget, v


def bound_value(n: int, d: int) -> Fraction:
    """Guaranteed bound on the output's maximum entry, as an exact rational.

    Equals (2d)**(2**(n-1) - 1) / 2**(n-1), which is also the product of
    coefficient_cap(d, j) over j = 1..n-1 (an integer for every n, d).
    """
    if n < 1:
        raise NonPositiveDimensionError(f"dimension must be >= 1, got {n}")
    if d < 1:
        raise NonPositiveCapError(f"coefficient cap must be >= 1, got {d}")
    e = 2 ** (n - 1)
    return Fraction((2 * d) ** (e - 1), 2 ** (n - 1))


def unsort(x_sorted: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Place sorted-position entries back at their original positions."""
    n = len(x_sorted)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise MalformedPermutationError(f"not a permutation of 0..{n - 1}: {perm!r}")
    out = [0] * n
    for k, p in enumerate(perm):
        out[p] = x_sorted[k]
    return tuple(out)
