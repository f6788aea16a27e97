"""Closed-form tangent and virtual Chern classes, for verification only.

These are independent transcriptions of the component-by-component formulas
for c_1..c_3 of the tangent sheaf of P(F) and for the virtual classes
cbar_1..cbar_3 of the family map, written as explicit binomial sums.  The
production path in `bundle` computes the same classes by series division;
nothing here is ever used in a pipeline.  Keeping both lets the test suite
and the selftest battery catch a transcription error on either side.

Notation below: u_i and v_i are the degree-i Chern parts of the base
cotangent sheaf and of F, lifted to the bundle; z is the tautological
class; m = n - r + 1 is the rank of F and r the base dimension.
"""

from __future__ import annotations

from .bundle import BundleSpace
from .chow import binomial
from .ring import GradedClass


def _lifted_parts(space: BundleSpace) -> tuple[list[GradedClass], list[GradedClass]]:
    u = [space.lift(space.base.cotangent.chern_part(i)) for i in range(4)]
    v = [space.lift(space.sheaf.chern_part(i)) for i in range(4)]
    return u, v


def tangent_chern_reference(space: BundleSpace) -> list[GradedClass]:
    """c_1, c_2, c_3 of the tangent sheaf of P(F), componentwise."""
    u, v = _lifted_parts(space)
    z = space.zeta
    n, r = space.base.ambient_dim, space.base.dim
    m = n - r + 1

    c1 = -u[1] - v[1] + m * z

    c2 = (
        u[2]
        + v[2]
        + u[1] * v[1]
        - m * u[1] * z
        - (m - 1) * v[1] * z
        + binomial(m, 2) * z**2
    )

    def twist_sum(top: int) -> GradedClass:
        out = GradedClass(space.table)
        for i in range(0, top + 1):
            out = out + (-1) ** (top - i) * binomial(m - i, top - i) * v[i] * z ** (top - i)
        return out

    c3 = -twist_sum(3) - u[1] * twist_sum(2) - u[2] * twist_sum(1) - u[3]
    return [c1, c2, c3]


def virtual_chern_reference(space: BundleSpace) -> list[GradedClass]:
    """cbar_1, cbar_2, cbar_3 of the family map, componentwise.

    The degree-3 constant-in-z part carries the cross terms -u1 v2 - u2 v1;
    the z = 0 restriction of the virtual series is symmetric in the two
    sheaves, which forces equal coefficients on the two cross terms.
    """
    u, v = _lifted_parts(space)
    z = space.zeta
    r = space.base.dim

    cbar1 = r * z + u[1] + v[1]

    cbar2 = (
        binomial(r, 2) * z**2
        + (r * u[1] + (r - 1) * v[1]) * z
        + (u[1] ** 2 + u[1] * v[1] + v[1] ** 2 - u[2] - v[2])
    )

    cbar3 = (
        binomial(r, 3) * z**3
        + (binomial(r, 2) * u[1] + binomial(r - 1, 2) * v[1]) * z**2
        + (
            r * u[1] ** 2
            + (r - 1) * u[1] * v[1]
            + (r - 2) * v[1] ** 2
            - r * u[2]
            - (r - 2) * v[2]
        )
        * z
        + (
            u[3]
            + v[3]
            + u[1] ** 3
            + u[1] ** 2 * v[1]
            + u[1] * v[1] ** 2
            + v[1] ** 3
            - 2 * u[1] * u[2]
            - 2 * v[1] * v[2]
            - u[1] * v[2]
            - u[2] * v[1]
        )
    )
    return [cbar1, cbar2, cbar3]


def ambient_tangent_pullback(space: BundleSpace) -> GradedClass:
    """Total Chern class of the pulled-back ambient tangent sheaf,
    (1 + z)^(n+1) written out through the binomial coefficients."""
    z = space.zeta
    n = space.base.ambient_dim
    out = GradedClass(space.table)
    for i in range(0, min(n + 1, space.table.bound) + 1):
        out = out + binomial(n + 1, i) * z**i
    return out
