"""Input descriptors for closed orientable smooth 4-manifolds.

A manifold enters the engine as the triple of data the decomposition
formulas actually consume: the fundamental group (a free product of copies
of Z and of cyclic groups of odd prime-power order), the second Betti
number, and whether the suspended attaching map of the top cell is trivial
(for these manifolds that flag is exactly "admits a spin structure", so the
constructors accept ``spin=`` as an alias).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .arith import prime_power


class InvalidSpecError(ValueError):
    """A manifold description the engine rejects; .errors lists the reasons."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


class Pi1ParseError(ValueError):
    """Unparseable fundamental-group expression."""


@dataclass(frozen=True, slots=True)
class Pi1Descriptor:
    """Free product Z^{*free_rank} * (Z/p1^r1) * ... * (Z/pk^rk).

    Cyclic factors are (p, r) pairs kept sorted, so two descriptors of the
    same group are equal as values.  Primality of p is guaranteed on the
    parsing path (the grammar only admits prime-power moduli); validate()
    rejects even p.
    """

    free_rank: int = 0
    cyclic_factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise InvalidSpecError([f"free rank must be >= 0, got {self.free_rank}"])
        object.__setattr__(self, "cyclic_factors", tuple(sorted(self.cyclic_factors)))


TRIVIAL_PI1 = Pi1Descriptor()


class Pi1Kind(Enum):
    """Which decomposition formula a fundamental group calls for."""

    TRIVIAL = "trivial"
    FREE = "free"
    CYCLIC = "cyclic"
    MIXED = "mixed"


def classify_pi1(pi1: Pi1Descriptor) -> Pi1Kind:
    """Sort a fundamental group into one of the four supported shapes.

    Trivial; free of rank m >= 1; a single cyclic group of odd prime-power
    order; or a genuinely mixed free product (>= 2 cyclic factors, or a
    free part alongside torsion), which is only decomposed after
    stabilization.
    """
    has_free = pi1.free_rank >= 1
    n_cyclic = len(pi1.cyclic_factors)
    if not has_free and n_cyclic == 0:
        return Pi1Kind.TRIVIAL
    if has_free and n_cyclic == 0:
        return Pi1Kind.FREE
    if not has_free and n_cyclic == 1:
        return Pi1Kind.CYCLIC
    return Pi1Kind.MIXED


@dataclass(frozen=True, slots=True)
class ManifoldSpec:
    """(fundamental group, second Betti number, top-cell suspension flag)."""

    pi1: Pi1Descriptor = TRIVIAL_PI1
    b2: int = 0
    sigma_f_trivial: bool = True

    def __post_init__(self) -> None:
        if self.b2 < 0:
            raise InvalidSpecError([f"b2 must be >= 0, got {self.b2}"])

    @property
    def spin(self) -> bool:
        return self.sigma_f_trivial


def manifold(
    pi1: Pi1Descriptor | str = TRIVIAL_PI1,
    b2: int = 0,
    *,
    sigma_f_trivial: bool | None = None,
    spin: bool | None = None,
) -> ManifoldSpec:
    """Convenience constructor; accepts a pi1 string and the spin alias."""
    if isinstance(pi1, str):
        pi1 = parse_pi1(pi1)
    if sigma_f_trivial is None:
        sigma_f_trivial = True if spin is None else spin
    elif spin is not None and spin != sigma_f_trivial:
        raise InvalidSpecError(["conflicting sigma-f / spin flags"])
    return ManifoldSpec(pi1, b2, sigma_f_trivial)


def validate(spec: ManifoldSpec) -> ManifoldSpec:
    """Check a spec against the engine's domain; return it unchanged.

    Exactly three conditions are rejected: a torsion prime of 2 (the
    decompositions need odd torsion), a cyclic exponent r < 1, and a
    nontrivial top-cell flag with b2 = 0 (no CP^2 summand to suspend).
    """
    errors = []
    for p, r in spec.pi1.cyclic_factors:
        if p % 2 == 0:
            errors.append("even torsion prime")
        if r < 1:
            errors.append("r < 1")
    if not spec.sigma_f_trivial and spec.b2 == 0:
        errors.append("nontrivial sigma-f with b2 = 0")
    if errors:
        raise InvalidSpecError(errors)
    return spec


def connected_sum(a: ManifoldSpec, b: ManifoldSpec) -> ManifoldSpec:
    """Connected sum: free product on pi1, sum on b2, AND on the flag."""
    pi1 = Pi1Descriptor(
        a.pi1.free_rank + b.pi1.free_rank,
        a.pi1.cyclic_factors + b.pi1.cyclic_factors,
    )
    return ManifoldSpec(pi1, a.b2 + b.b2, a.sigma_f_trivial and b.sigma_f_trivial)


def stabilize(spec: ManifoldSpec, d: int) -> ManifoldSpec:
    """Connected sum with d copies of S^2 x S^2: b2 grows by 2d."""
    if d < 0:
        raise InvalidSpecError([f"stabilization count must be >= 0, got {d}"])
    return ManifoldSpec(spec.pi1, spec.b2 + 2 * d, spec.sigma_f_trivial)


# --------------------------------------------------------------------------
# the pi1 grammar, shared with the command line

_ATOM_RE = re.compile(r"^Z(?:/(\d+))?$")


def parse_pi1(text: str) -> Pi1Descriptor:
    """Parse ``1`` or a ``*``-joined product of ``Z`` and ``Z/q`` atoms.

    Whitespace is ignored.  Each q must be a prime power; q = p^r with p
    odd is what the engine supports, but p = 2 is accepted here and
    rejected by validate(), so the error message can say why.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise Pi1ParseError("empty fundamental group")
    if compact == "1":
        return TRIVIAL_PI1
    free_rank = 0
    factors = []
    for atom in compact.split("*"):
        m = _ATOM_RE.match(atom)
        if not m:
            raise Pi1ParseError(f"bad fundamental-group atom: {atom!r}")
        if m.group(1) is None:
            free_rank += 1
            continue
        q = int(m.group(1))
        pr = prime_power(q)
        if pr is None:
            raise Pi1ParseError(f"modulus {q} is not a prime power")
        factors.append(pr)
    return Pi1Descriptor(free_rank, tuple(factors))


def render_pi1(pi1: Pi1Descriptor) -> str:
    """Inverse of parse_pi1 on descriptors: ``1``, ``Z*Z/9``, ..."""
    atoms = ["Z"] * pi1.free_rank
    atoms += [f"Z/{p**r}" for p, r in pi1.cyclic_factors]
    return "*".join(atoms) if atoms else "1"
