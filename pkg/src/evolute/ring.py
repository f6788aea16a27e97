"""Exact arithmetic for graded cohomology-class expressions.

A class is a sparse polynomial over exact rationals in a fixed list of named
generators, each generator carrying a positive integer degree.  Monomials
whose weighted degree exceeds the table's truncation bound are dropped by
every operation, so products behave like classes on a space of that
dimension:

    table = GeneratorTable(("K", "H"), (1, 1), bound=2)
    K + 3*H            -> terms {(1, 0): 1, (0, 1): 3}
    (1 + K) * (1 - K)  -> 1 - K**2   (K**3 and beyond would vanish)

Coefficients are `fractions.Fraction`, never floats; the zero class stores
no terms.  Values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

Exponents = tuple[int, ...]


class TableMismatchError(ValueError):
    """Combining classes that live over different generator tables."""


class NotInvertibleError(ValueError):
    """Series inverse requested for a class whose constant term is not 1."""


@dataclass(frozen=True)
class GeneratorTable:
    """Named generators with cohomological degrees and a truncation bound.

    The bound is the dimension of the space the classes live on; it must be
    at least as large as every generator degree.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    bound: int

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise ValueError("one degree per generator name required")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        if self.degrees and self.bound < max(self.degrees):
            raise ValueError("truncation bound below a generator degree")
        if self.bound < 0:
            raise ValueError("truncation bound must be nonnegative")
        object.__setattr__(self, "_degree_cache", {})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def degree(self, exponents: Exponents) -> int:
        """Weighted degree of an exponent vector (memoized, monomials repeat)."""
        cache = self._degree_cache
        d = cache.get(exponents)
        if d is None:
            d = sum(e * w for e, w in zip(exponents, self.degrees))
            cache[exponents] = d
        return d

    def extended(self, name: str, degree: int, bound: int) -> GeneratorTable:
        """New table with one more generator appended and a new bound."""
        if name in self.names:
            raise ValueError(f"generator {name!r} already present")
        return GeneratorTable(self.names + (name,), self.degrees + (degree,), bound)

    def monomials(self, degree: int) -> Iterator[Exponents]:
        """All exponent vectors of the given weighted degree."""

        def rec(pos: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[Exponents]:
            if pos == len(self.degrees):
                if remaining == 0:
                    yield prefix
                return
            step = self.degrees[pos]
            for e in range(remaining // step + 1):
                yield from rec(pos + 1, remaining - e * step, prefix + (e,))

        yield from rec(0, degree, ())


class GradedClass:
    """Sparse polynomial over Fraction coefficients, graded and truncated.

    Supports +, -, * and integer powers; scalars (int or Fraction) coerce to
    multiples of the unit class.  No zero coefficients are stored, and no
    monomial above the table bound survives any operation.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: GeneratorTable, terms: Mapping[Exponents, Fraction | int] | None = None):
        cleaned: dict[Exponents, Fraction] = {}
        for exps, value in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(table):
                raise ValueError(f"exponent vector {exps} does not fit table of size {len(table)}")
            coeff = Fraction(value)
            if coeff == 0 or table.degree(exps) > table.bound:
                continue
            cleaned[exps] = coeff
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def _unchecked(cls, table: GeneratorTable, terms: dict[Exponents, Fraction]) -> "GradedClass":
        # internal fast path: terms already pruned, in-bound and Fraction-valued
        obj = object.__new__(cls)
        object.__setattr__(obj, "table", table)
        object.__setattr__(obj, "terms", terms)
        return obj

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GradedClass is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> Fraction:
        zero = (0,) * len(self.table)
        return self.terms.get(zero, Fraction(0))

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def max_degree(self) -> int:
        if not self.terms:
            return 0
        return max(self.table.degree(e) for e in self.terms)

    def homogeneous_part(self, k: int) -> GradedClass:
        """Sum of the monomials of weighted degree exactly k."""
        deg = self.table.degree
        return GradedClass._unchecked(
            self.table,
            {e: c for e, c in self.terms.items() if deg(e) == k},
        )

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: object) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.table != self.table:
                raise TableMismatchError("classes live over different generator tables")
            return other
        if isinstance(other, (int, Fraction)):
            return GradedClass(self.table, {(0,) * len(self.table): Fraction(other)})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "GradedClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = merged.get(exps)
            if value is None:
                merged[exps] = coeff
            else:
                value = value + coeff
                if value:
                    merged[exps] = value
                else:
                    del merged[exps]
        return GradedClass._unchecked(self.table, merged)

    __radd__ = __add__

    def __neg__(self) -> "GradedClass":
        return GradedClass._unchecked(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "GradedClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "GradedClass":
        return (-self) + other

    def __mul__(self, other: object) -> "GradedClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = self.table
        bound = table.bound
        deg = table.degree
        bitems = [(eb, cb, deg(eb)) for eb, cb in other.terms.items()]
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            da = deg(ea)
            for eb, cb, db in bitems:
                if da + db > bound:
                    continue
                key = tuple(i + j for i, j in zip(ea, eb))
                value = out.get(key)
                out[key] = ca * cb if value is None else value + ca * cb
        return GradedClass._unchecked(table, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GradedClass":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("powers of graded classes take nonnegative integer exponents")
        result = unit(self.table)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def series_inverse(self) -> "GradedClass":
        """Class b with a*b = 1 up to the truncation bound.

        Requires constant term 1; computed degree by degree through the
        convolution recurrence b_k = -sum_{i=1..k} a_i b_{k-i}.
        """
        if self.constant_term != 1:
            raise NotInvertibleError("series inverse needs constant term 1")
        table = self.table
        parts = [self.homogeneous_part(k) for k in range(table.bound + 1)]
        inverse = [unit(table)]
        for k in range(1, table.bound + 1):
            acc = GradedClass._unchecked(table, {})
            for i in range(1, k + 1):
                if parts[i].is_zero or inverse[k - i].is_zero:
                    continue
                acc = acc + parts[i] * inverse[k - i]
            inverse.append(-acc)
        total: dict[Exponents, Fraction] = {}
        for piece in inverse:
            total.update(piece.terms)
        return GradedClass._unchecked(table, total)

    def alternate_signs(self) -> "GradedClass":
        """Negate the odd-degree graded pieces (the dual-class sign rule)."""
        deg = self.table.degree
        return GradedClass._unchecked(
            self.table,
            {e: (-c if deg(e) % 2 else c) for e, c in self.terms.items()},
        )

    # -- comparison and display --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (self.table.degree(e), e)):
            coeff = self.terms[exps]
            factors = [
                name if e == 1 else f"{name}**{e}"
                for name, e in zip(self.table.names, exps)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def zero(table: GeneratorTable) -> GradedClass:
    return GradedClass(table)


def unit(table: GeneratorTable) -> GradedClass:
    return GradedClass(table, {(0,) * len(table): Fraction(1)})


def scalar(table: GeneratorTable, value: Fraction | int) -> GradedClass:
    return GradedClass(table, {(0,) * len(table): Fraction(value)})


def generator(table: GeneratorTable, name: str) -> GradedClass:
    exps = [0] * len(table)
    exps[table.index(name)] = 1
    return GradedClass(table, {tuple(exps): Fraction(1)})
