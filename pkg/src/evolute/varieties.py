"""Concrete base varieties: curves, surfaces, and hypersurfaces.

Each builder returns a variety descriptor together with the sheaves the
enumerative pipelines consume, most importantly the Euclidean normal bundle
E = (K1)^dual (+) O(1), where K1 is the kernel of the evaluation of the
ambient linear system on first-order jets.

Curve conventions.  Generators are K (canonical class), H (hyperplane
class) and one degree-1 correction symbol B_i per stationary index, with
integrals K -> 2g-2, H -> d, B_i -> k_i.  The i-th stationary index k_i is
the weighted number of points where the i-th osculating space degenerates
(k_0 counts cusps of the image, k_1 inflections, and so on); the image of
the m-jet map then has

    c_1 = C(m+1, 2) K + (m+1) H - sum_{i<m} (m-i) B_i.

Surface conventions.  Generators are K, H (degree 1) and C2 = c_2 of the
cotangent sheaf (degree 2); the integration table carries the four numbers
int K^2, int C2, int K.H, int H^2.

Hypersurfaces of degree d in ambient dimension n have a single generator H
with int H^(n-1) = d, cotangent series (1 - H)^(n+1) / (1 - d H), and
normal bundle O(d-1) (+) O(1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import (
    SheafData,
    VarietyDescriptor,
    binomial,
    direct_sum,
    dual,
    kernel_from_trivial,
    twist_by_line,
)
from .ring import GeneratorTable, generator, unit


@dataclass(frozen=True)
class CurveInvariants:
    """Numerical data of a curve in projective space.

    `stationary` holds the weighted indices (k_0, ..., k_{n-2}); shorter
    tuples are padded with zeros.  The top index k_{n-1} is determined by
    the lower data and exposed as `hyperosculation_index`.
    """

    ambient: int
    degree: int
    genus: int
    stationary: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = self.ambient
        if n < 2:
            raise ValueError("curves need ambient dimension at least 2")
        if self.degree < 1:
            raise ValueError("curve degree must be at least 1")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        ks = tuple(self.stationary)
        if len(ks) > n - 1:
            raise ValueError(f"at most {n - 1} stationary indices for ambient {n}")
        if any(k < 0 for k in ks):
            raise ValueError("stationary indices must be nonnegative")
        object.__setattr__(self, "stationary", ks + (0,) * (n - 1 - len(ks)))

    @property
    def cusp_count(self) -> int:
        return self.stationary[0]

    @property
    def hyperosculation_index(self) -> int:
        """k_{n-1} = (n+1)(d + n(g-1)) - sum_{i<=n-2} (n-i) k_i."""
        n, d, g = self.ambient, self.degree, self.genus
        return (n + 1) * (d + n * (g - 1)) - sum(
            (n - i) * k for i, k in enumerate(self.stationary)
        )


@dataclass(frozen=True)
class CurveGeometry:
    """Descriptor plus the sheaf catalog of a curve: osculating images
    P^1..P^{n-1} (index m-1) and the Euclidean normal bundle."""

    invariants: CurveInvariants
    variety: VarietyDescriptor
    osculating: tuple[SheafData, ...]
    normal_bundle: SheafData

    def osculating_sheaf(self, m: int) -> SheafData:
        if not 1 <= m <= self.invariants.ambient - 1:
            raise ValueError(f"osculating order must lie in 1..{self.invariants.ambient - 1}")
        return self.osculating[m - 1]


def curve_geometry(inv: CurveInvariants) -> CurveGeometry:
    n, d, g = inv.ambient, inv.degree, inv.genus
    names = ("K", "H") + tuple(f"B{i}" for i in range(n - 1))
    table = GeneratorTable(names, (1,) * len(names), bound=1)
    K = generator(table, "K")
    H = generator(table, "H")
    B = [generator(table, f"B{i}") for i in range(n - 1)]

    def point(name: str) -> tuple[int, ...]:
        exps = [0] * len(names)
        exps[table.index(name)] = 1
        return tuple(exps)

    integrals = {point("K"): 2 * g - 2, point("H"): d}
    for i, k in enumerate(inv.stationary):
        integrals[point(f"B{i}")] = k

    cotangent = SheafData(1, unit(table) + K)
    variety = VarietyDescriptor(1, n, table, cotangent, integrals)

    osculating = []
    for m in range(1, n):
        c1 = binomial(m + 1, 2) * K + (m + 1) * H
        for i in range(m):
            c1 = c1 - (m - i) * B[i]
        osculating.append(SheafData(m + 1, unit(table) + c1))

    jet_kernel = kernel_from_trivial(n + 1, osculating[0])
    normal = direct_sum(dual(jet_kernel), SheafData(1, unit(table) + H))
    return CurveGeometry(inv, variety, tuple(osculating), normal)


@dataclass(frozen=True)
class SurfaceChernNumbers:
    """The four integrals a surface pipeline needs: int K^2, int c_2,
    int K.H and int H^2."""

    K2: int
    c2: int
    KH: int
    H2: int

    @classmethod
    def from_degree(cls, d: int) -> "SurfaceChernNumbers":
        """Smooth degree-d surface in 3-space: K = (d-4)H and
        c_2 = (d^2-4d+6) H^2 give the four numbers below."""
        if d < 1:
            raise ValueError("surface degree must be at least 1")
        return cls(K2=d * (d - 4) ** 2, c2=d * (d * d - 4 * d + 6), KH=d * (d - 4), H2=d)


def surface_geometry(
    ambient: int, numbers: SurfaceChernNumbers
) -> tuple[VarietyDescriptor, SheafData]:
    """Surface descriptor plus its Euclidean normal bundle (rank n-1).

    The normal bundle is assembled from first principles: the first-order
    jet sheaf of O(1) is an extension of O(1) by the twisted cotangent
    sheaf, K1 is the kernel of the ambient trivial sheaf mapping onto it,
    and E = (K1)^dual (+) O(1).
    """
    if ambient < 3:
        raise ValueError("surfaces need ambient dimension at least 3")
    table = GeneratorTable(("K", "H", "C2"), (1, 1, 2), bound=2)
    K = generator(table, "K")
    H = generator(table, "H")
    C2 = generator(table, "C2")
    integrals = {
        (2, 0, 0): numbers.K2,
        (1, 1, 0): numbers.KH,
        (0, 2, 0): numbers.H2,
        (0, 0, 1): numbers.c2,
    }
    cotangent = SheafData(2, unit(table) + K + C2)
    variety = VarietyDescriptor(2, ambient, table, cotangent, integrals)

    jet1 = SheafData(3, twist_by_line(cotangent, H).chern * (unit(table) + H))
    jet_kernel = kernel_from_trivial(ambient + 1, jet1)
    normal = direct_sum(dual(jet_kernel), SheafData(1, unit(table) + H))
    return variety, normal


def hypersurface_geometry(ambient: int, degree: int) -> tuple[VarietyDescriptor, SheafData]:
    """Smooth degree-d hypersurface in n-space with its normal bundle
    O(d-1) (+) O(1)."""
    n, d = ambient, degree
    if n < 2:
        raise ValueError("hypersurfaces need ambient dimension at least 2")
    if d < 1:
        raise ValueError("hypersurface degree must be at least 1")
    r = n - 1
    table = GeneratorTable(("H",), (1,), bound=r)
    H = generator(table, "H")
    integrals = {(r,): d}
    cotangent_chern = (unit(table) - H) ** (n + 1) * (unit(table) - d * H).series_inverse()
    cotangent = SheafData(r, cotangent_chern)
    variety = VarietyDescriptor(r, n, table, cotangent, integrals)

    normal = direct_sum(
        SheafData(1, unit(table) + (d - 1) * H),
        SheafData(1, unit(table) + H),
    )
    return variety, normal
