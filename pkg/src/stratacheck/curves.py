"""Classical enumerative arithmetic for curves.

Dual degrees, bitangent and flex counts, branched-cover bookkeeping, theta
characteristic counts, and the small exact linear solves the stratification
ledger leans on.  Every solver demands exact integer answers; a negative or
fractional result raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InconsistentInputError, ToolkitError


# ---------------------------------------------------------------------------
# Pluecker formulas


def plane_curve_genus(d: int, delta: int, kappa: int) -> int:
    """Geometric genus (d-1)(d-2)/2 - delta - kappa of a nodal-cuspidal plane curve."""
    g = (d - 1) * (d - 2) // 2 - delta - kappa
    if g < 0:
        raise InconsistentInputError(f"negative genus for (d, delta, kappa)=({d}, {delta}, {kappa})")
    return g


def pluecker_dual_degree(d: int, delta: int, kappa: int) -> int:
    """Dual degree d(d-1) - 2*delta - 3*kappa."""
    if min(d, delta, kappa) < 0:
        raise InconsistentInputError("degree, node and cusp counts must be non-negative")
    d_star = d * (d - 1) - 2 * delta - 3 * kappa
    if d_star < 0:
        raise InconsistentInputError(f"dual degree {d_star} is negative")
    return d_star


def pluecker_solve_bf(d: int, d_star: int, g: int) -> tuple[int, int]:
    """Bitangents and flexes from the pair of dual-curve relations.

    Solves b + f = (d*-1)(d*-2)/2 - g and 2b + 3f = d*(d*-1) - d exactly and
    re-substitutes the answer into both equations before returning it.
    """
    s1 = (d_star - 1) * (d_star - 2) // 2 - g
    s2 = d_star * (d_star - 1) - d
    f = s2 - 2 * s1
    b = s1 - f
    if b < 0 or f < 0:
        raise InconsistentInputError(
            f"no non-negative solution for (d, d*, g)=({d}, {d_star}, {g}): "
            f"b={b}, f={f}"
        )
    assert b + f == s1 and 2 * b + 3 * f == s2
    return b, f


def flex_count(d: int, delta: int, kappa: int) -> int:
    """Flexes 3d(d-2) - 6*delta - 8*kappa, the companion dual formula."""
    f = 3 * d * (d - 2) - 6 * delta - 8 * kappa
    if f < 0:
        raise InconsistentInputError(f"negative flex count {f}")
    return f


@dataclass(frozen=True)
class PlueckerData:
    """Known numerical characters of a plane curve; absent fields are None."""

    d: int | None = None
    delta: int | None = None
    kappa: int | None = None
    g: int | None = None
    d_star: int | None = None
    b: int | None = None
    f: int | None = None

    def __post_init__(self):
        for name in ("d", "delta", "kappa", "g", "d_star", "b", "f"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ToolkitError(f"{name} must be non-negative, got {value}")
        if None not in (self.d, self.delta, self.kappa, self.g):
            if self.g != plane_curve_genus(self.d, self.delta, self.kappa):
                raise ToolkitError(
                    "genus does not match (d-1)(d-2)/2 - delta - kappa"
                )


# ---------------------------------------------------------------------------
# branched covers


def riemann_hurwitz_branch(g_source: int, g_target: int, degree: int) -> int:
    """Branch divisor degree 2g - 2 - n(2g' - 2) of an n-sheeted cover."""
    if degree < 1:
        raise ToolkitError("cover degree must be >= 1")
    r = 2 * g_source - 2 - degree * (2 * g_target - 2)
    if r < 0:
        raise InconsistentInputError(f"negative branch degree {r}")
    return r


@dataclass(frozen=True)
class CoverData:
    """A branched cover record; construction enforces the cover identity."""

    degree: int
    g_source: int
    g_target: int
    branch_degree: int

    def __post_init__(self):
        if 2 * self.g_source - 2 != self.degree * (2 * self.g_target - 2) + self.branch_degree:
            raise ToolkitError("cover data violates 2g-2 = n(2g'-2) + deg R")


def cover_data(g_source: int, g_target: int, degree: int) -> CoverData:
    return CoverData(
        degree, g_source, g_target, riemann_hurwitz_branch(g_source, g_target, degree)
    )


# ---------------------------------------------------------------------------
# theta characteristics and moduli dimensions


def theta_characteristics(g: int, parity: str) -> int:
    """2^(g-1)(2^g - 1) odd or 2^(g-1)(2^g + 1) even square roots of the canonical class."""
    if g < 1:
        raise ToolkitError("genus must be >= 1")
    if parity == "odd":
        return 2 ** (g - 1) * (2**g - 1)
    if parity == "even":
        return 2 ** (g - 1) * (2**g + 1)
    raise ToolkitError(f"parity must be 'odd' or 'even', got {parity!r}")


def pgl_dim(projective_dim: int) -> int:
    """Dimension (n+1)^2 - 1 of the projective linear group of P^n."""
    if projective_dim < 0:
        raise ToolkitError("projective dimension must be non-negative")
    return (projective_dim + 1) ** 2 - 1


def moduli_dimension_check(n: int, degrees, group_dim: int) -> int:
    """Sum of the hypersurface linear-system dimensions in P^n minus a group dimension."""
    return sum(comb(n + d, n) - 1 for d in degrees) - group_dim


# ---------------------------------------------------------------------------
# polystable degree solving


@dataclass(frozen=True)
class PolystableSpec:
    """Curve components with pairwise intersections and a total Euler characteristic.

    ``intersections`` is the symmetric off-diagonal table C_i . C_j (diagonal
    zero); the self-intersection enters through 2g_i - 2 as usual for curves
    on a symplectic surface.
    """

    genera: tuple[int, ...]
    intersections: tuple[tuple[int, ...], ...]
    total_chi: int

    def __post_init__(self):
        object.__setattr__(self, "genera", tuple(self.genera))
        object.__setattr__(
            self, "intersections", tuple(tuple(r) for r in self.intersections)
        )
        k = len(self.genera)
        if len(self.intersections) != k or any(len(r) != k for r in self.intersections):
            raise ToolkitError("intersection table shape does not match components")
        for i in range(k):
            if self.intersections[i][i] != 0:
                raise ToolkitError("intersection table diagonal must be zero")
            for j in range(k):
                if self.intersections[i][j] != self.intersections[j][i]:
                    raise ToolkitError("intersection table must be symmetric")

    def polarization_degree(self, i: int) -> int:
        """C_i . C = (2g_i - 2) + sum of the off-diagonal intersections."""
        return 2 * self.genera[i] - 2 + sum(self.intersections[i])


def solve_polystable_degrees(spec: PolystableSpec) -> tuple[int, ...]:
    """Unique integer degrees with equal slopes and the prescribed total chi.

    Slope equality makes (1 - g_i + d_i) proportional to C_i . C, and the
    total chi fixes the constant, so d_i = mu * (C_i . C) - 1 + g_i with
    mu = total_chi / sum(C_i . C).  Non-integral degrees are an error.
    """
    denominators = [spec.polarization_degree(i) for i in range(len(spec.genera))]
    if any(n <= 0 for n in denominators):
        raise ToolkitError("every slope denominator C_i . C must be positive")
    mu = Fraction(spec.total_chi, sum(denominators))
    degrees = []
    for g, n in zip(spec.genera, denominators):
        d = mu * n - 1 + g
        if d.denominator != 1:
            raise InconsistentInputError(
                f"no integer degree solution: component needs d = {d}"
            )
        degrees.append(int(d))
    chis = [1 - g + d for g, d in zip(spec.genera, degrees)]
    assert sum(chis) == spec.total_chi
    assert len({Fraction(c, n) for c, n in zip(chis, denominators)}) == 1
    return tuple(degrees)


# ---------------------------------------------------------------------------
# fibration Euler characteristics


def fibration_euler(strata, smooth_fiber_chi: int = 0, base_chi: int = 2) -> int:
    """Total chi of a fibration from point strata (count, fiber chi) on the base.

    The smooth locus of the base contributes (base_chi - total point count)
    times the smooth fiber's chi; each listed stratum contributes count times
    its fiber chi.
    """
    points = sum(count for count, _ in strata)
    return (base_chi - points) * smooth_fiber_chi + sum(
        count * chi for count, chi in strata
    )


def solve_unknown_count(
    total_chi: int,
    known_strata,
    unknown_fiber_chi: int,
    smooth_fiber_chi: int = 0,
    base_chi: int = 2,
) -> int:
    """Number of fibers of a given chi forced by the total Euler characteristic."""
    if unknown_fiber_chi == smooth_fiber_chi:
        raise ToolkitError(
            "unknown fiber chi equals the smooth fiber chi; count is undetermined"
        )
    known_points = sum(count for count, _ in known_strata)
    residue = (
        total_chi
        - (base_chi - known_points) * smooth_fiber_chi
        - sum(count * chi for count, chi in known_strata)
    )
    count = Fraction(residue, unknown_fiber_chi - smooth_fiber_chi)
    if count.denominator != 1 or count < 0:
        raise InconsistentInputError(f"no admissible integer fiber count: {count}")
    return int(count)
