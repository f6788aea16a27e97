"""Thom polynomials of the iterated corank-1 singularity loci.

The class of the k-fold locus (Boardman symbol with k ones) of a generic
map is a fixed integer polynomial in the virtual Chern classes cbar_i of
the map.  The four polynomials built in here are classical: codimension 1
and 2 go back to Thom and Ronga, codimension 3 to Ronga/Rimanyi, and
codimension 4 to Gaffney, Porteous and Ronga.
"""

from __future__ import annotations

from .ring import GradedClass, unit


class UnsupportedCodimensionError(ValueError):
    """Profile outside the built-in codimension range 1..4."""


# Coefficient table: for each k, pairs (exponents over (cbar_1..cbar_4), coefficient).
COEFFICIENTS: dict[int, tuple[tuple[tuple[int, int, int, int], int], ...]] = {
    1: (((1, 0, 0, 0), 1),),
    2: (((2, 0, 0, 0), 1), ((0, 1, 0, 0), 1)),
    3: (((3, 0, 0, 0), 1), ((1, 1, 0, 0), 3), ((0, 0, 1, 0), 2)),
    4: (
        ((4, 0, 0, 0), 1),
        ((2, 1, 0, 0), 6),
        ((1, 0, 1, 0), 9),
        ((0, 2, 0, 0), 2),
        ((0, 0, 0, 1), 6),
    ),
}

MAX_CODIMENSION = 4


def thom_class(k: int, cbars: list[GradedClass]) -> GradedClass:
    """Evaluate the corank-1 Thom polynomial of codimension k on the given
    virtual classes (cbars[i] is cbar_{i+1})."""
    if k < 1:
        raise ValueError("codimension must be positive")
    if k > MAX_CODIMENSION:
        raise UnsupportedCodimensionError(
            f"corank-1 Thom polynomials are built in only up to codimension "
            f"{MAX_CODIMENSION}; higher ones are in Rimanyi, Invent. Math. 143 (2001)"
        )
    if len(cbars) < k:
        raise ValueError(f"need the first {k} virtual classes, got {len(cbars)}")
    table = cbars[0].table
    result = GradedClass(table)
    for exponents, coeff in COEFFICIENTS[k]:
        term = coeff * unit(table)
        for cbar, e in zip(cbars, exponents):
            if e:
                term = term * cbar**e
        result = result + term
    return result
