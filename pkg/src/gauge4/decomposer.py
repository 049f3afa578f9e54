"""Suspension splittings and the matching gauge-group product decompositions.

For a closed orientable smooth 4-manifold M described by a ManifoldSpec,
the suspension of M splits as a wedge of spheres, Moore spaces and (for a
nontrivial top-cell attaching map) one copy of SCP^2.  Each wedge summand
beyond the base contributes a pointed mapping space into the structure
group, so the gauge group G_t(M) splits as a product of a base gauge group
— over S^4 or CP^2 — and loop factors.  This module builds both halves and
keeps them in correspondence.

Four fundamental-group shapes are handled.  Trivial and free pi1, and a
single odd prime-power cyclic pi1, split on the nose.  A genuinely mixed
free product splits after stabilizing, i.e. after taking the connected sum
with d copies of S^2 x S^2; d may be left symbolic, in which case the
stored wedge/product hold only the d-independent part and the renderer
reinstates the (S^3)^{2d} / (O^2G)^{2d} blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .manifold import ManifoldSpec, Pi1Kind, classify_pi1, validate
from .terms import (
    SYMBOLIC,
    GaugeExpr,
    Moore,
    SpaceTerm,
    Sphere,
    Stabilization,
    SuspCP2,
    TermError,
    map_space,
    render,
    summands,
    wedge,
)


class DecompositionError(ValueError):
    """A wedge that does not correspond to any gauge-group product."""


class Case(Enum):
    """Which decomposition produced a result."""

    SIMPLY_CONNECTED = "simply_connected"
    FREE = "free"
    CYCLIC = "cyclic"
    MIXED = "mixed"


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Both halves of one splitting, plus how it was obtained.

    ``suspension`` is the normalized wedge (exactly one base summand: S^5
    or SCP^2) and ``gauge`` the corresponding product.  ``stabilization``
    mirrors gauge.stabilization: 0 for the on-the-nose cases, a positive d
    or SYMBOLIC for the stabilized one.
    """

    suspension: SpaceTerm
    gauge: GaugeExpr
    stabilization: Stabilization
    case_used: Case


_CASE_FOR_KIND = {
    Pi1Kind.TRIVIAL: Case.SIMPLY_CONNECTED,
    Pi1Kind.FREE: Case.FREE,
    Pi1Kind.CYCLIC: Case.CYCLIC,
}


def decompose(
    spec: ManifoldSpec,
    t: int = 0,
    *,
    d: int | None = None,
    group: object | None = None,
) -> Decomposition:
    """Split the suspension and the gauge group G_t(M) of a described M.

    ``d`` is the stabilization count and only matters when pi1 is a mixed
    free product; None keeps it symbolic there and is ignored elsewhere.
    ``group`` names the structure group; the shape of the splitting never
    depends on it (it stays the formal symbol G), so it is accepted purely
    so callers can thread one value through decomposition and
    classification.
    """
    validate(spec)
    kind = classify_pi1(spec.pi1)
    if kind is Pi1Kind.MIXED:
        return mixed_decomposition(spec, t, d=d)
    return _assemble(spec, t, extra_s3=0, stabilization=0, case=_CASE_FOR_KIND[kind])


def mixed_decomposition(spec: ManifoldSpec, t: int = 0, *, d: int | None = None) -> Decomposition:
    """The stabilized splitting, applicable to every valid spec.

    This is the formula decompose() dispatches to for mixed free products;
    it is exposed separately so the exact cases can be compared against
    their stabilized counterparts at d = 0.
    """
    validate(spec)
    if d is None:
        return _assemble(spec, t, extra_s3=0, stabilization=SYMBOLIC, case=Case.MIXED)
    if d < 0:
        raise DecompositionError(f"stabilization count must be >= 0, got {d}")
    return _assemble(spec, t, extra_s3=2 * d, stabilization=d, case=Case.MIXED)


def _assemble(
    spec: ManifoldSpec,
    t: int,
    extra_s3: int,
    stabilization: Stabilization,
    case: Case,
) -> Decomposition:
    m = spec.pi1.free_rank
    moduli = [p**r for p, r in spec.pi1.cyclic_factors]
    if spec.sigma_f_trivial:
        base_atom: SpaceTerm = Sphere(5)
        base = "S4"
        n3 = spec.b2 + extra_s3
    else:
        base_atom = SuspCP2()
        base = "CP2"
        n3 = spec.b2 - 1 + extra_s3  # one 2-cell is spent on the CP^2 block
    atoms: list[SpaceTerm] = [base_atom]
    atoms += [Sphere(4)] * m
    atoms += [Moore(4, q) for q in moduli]
    atoms += [Sphere(3)] * n3
    atoms += [Moore(3, q) for q in moduli]
    atoms += [Sphere(2)] * m
    factors = [map_space(a) for a in atoms[1:]]
    gauge = GaugeExpr(base, t, tuple(factors), stabilization)
    return Decomposition(wedge(atoms), gauge, stabilization, case)


def suspension_of_spec(spec: ManifoldSpec, d: int | None = None) -> SpaceTerm:
    """Just the wedge side of decompose(); see there for the role of d."""
    return decompose(spec, d=d).suspension


def gauge_from_suspension(susp: SpaceTerm, t: int) -> GaugeExpr:
    """Read a gauge-group product off an already-split suspension.

    The wedge must contain exactly one base summand (S^5 or SCP^2); every
    other summand must lie in the map_space correspondence.  This is the
    independent route to the product decomposition: it never looks at the
    manifold, only at the wedge.
    """
    base = None
    rest: list[SpaceTerm] = []
    for atom in summands(susp):
        if atom == Sphere(5) or atom == SuspCP2():
            if base is not None:
                raise DecompositionError("multiple base summands")
            base = atom
        else:
            rest.append(atom)
    if base is None:
        raise DecompositionError("no base summand")
    try:
        factors = tuple(map_space(a) for a in rest)
    except TermError as exc:
        raise DecompositionError(f"summand outside the correspondence: {exc}") from None
    return GaugeExpr("S4" if base == Sphere(5) else "CP2", t, factors, 0)


# --------------------------------------------------------------------------
# rendering


def _presentation_key(atom: SpaceTerm) -> tuple[int, int, int]:
    # Splittings are conventionally written top dimension first, and at
    # equal dimension spheres before Moore spaces — unlike the canonical
    # stored order, which sorts ascending.
    if isinstance(atom, Sphere):
        return (-atom.dim, 0, 0)
    if isinstance(atom, Moore):
        return (-atom.dim, 1, atom.modulus)
    raise DecompositionError(f"unexpected summand {atom!r}")


def presentation_summands(susp: SpaceTerm) -> list[SpaceTerm]:
    """Wedge summands reordered for display: base first, then top-down."""
    base = None
    rest: list[SpaceTerm] = []
    for atom in summands(susp):
        if base is None and (atom == Sphere(5) or atom == SuspCP2()):
            base = atom
        else:
            rest.append(atom)
    if base is None:
        raise DecompositionError("no base summand")
    rest.sort(key=_presentation_key)
    return [base] + rest


def render_suspension_half(dec: Decomposition) -> str:
    """``SM = ...`` (or the connected-sum left side when stabilized)."""
    ordered = presentation_summands(dec.suspension)
    if dec.stabilization == SYMBOLIC:
        pieces = [render(ordered[0])]
        n3 = sum(1 for a in ordered[1:] if a == Sphere(3))
        merged = False
        for atom in ordered[1:]:
            if atom == Sphere(3):
                if not merged:
                    pieces.append(f"(S^3)^{{{n3}+2d}}")
                    merged = True
            else:
                if not merged and _presentation_key(atom) > _presentation_key(Sphere(3)):
                    pieces.append("(S^3)^{2d}")
                    merged = True
                pieces.append(render(atom))
        if not merged:
            pieces.append("(S^3)^{2d}")
        body = " v ".join(pieces)
    else:
        body = " v ".join(render(a) for a in ordered)
    return f"{_suspension_left(dec.stabilization)} = {body}"


def _suspension_left(stab: Stabilization) -> str:
    if stab == 0:
        return "SM"
    d = "d" if stab == SYMBOLIC else str(stab)
    return f"S(M #_{d}(S^2xS^2))"


def render_gauge_half(dec: Decomposition) -> str:
    """``G_t(M) = ...``, or the stabilized ``G_t(M) x (O^2G)^{2d} ~ ...``."""
    right = render(dec.gauge)
    t = dec.gauge.t
    stab = dec.stabilization
    if stab == 0:
        return f"G_{t}(M) = {right}"
    power = "{2d}" if stab == SYMBOLIC else str(2 * stab)
    return f"G_{t}(M) x (O^2G)^{power} ~ {right}"


def render_decomposition(dec: Decomposition) -> str:
    """Both halves on one line, suspension first."""
    return f"{render_suspension_half(dec)}; {render_gauge_half(dec)}"
