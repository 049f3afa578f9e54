"""Formal space terms for suspension splittings, and gauge-side product terms.

The term language covers exactly the spaces that show up when a closed
orientable 4-manifold is suspended: spheres ``S^n``, Moore spaces ``P^n(q)``
(the complex whose only reduced homology is ``Z/q`` in degree ``n-1``), the
suspended complex projective plane ``SCP^2``, the one-point space ``pt``, and
finite wedges of these.  Wedges carry a unique normal form — flat, sorted,
point-free — so two decompositions can be compared by plain equality.

On the gauge side, ``LoopFactor`` stands for an iterated loop space of the
structure group ``G`` (``O^kG``), optionally the mod-``q`` variant ``O^kG{q}``
given by pointed maps out of a Moore space, and ``GaugeExpr`` is a finite
product of such factors over a base gauge group on ``S^4`` or ``CP^2``.

``map_space`` is the bridge between the two sides: it sends a wedge summand
``Y`` to the factor ``Map*(Y, G)`` contributes to a gauge group, using
``Map*(S^k, G) = O^kG`` and ``Map*(P^k(q), G) = O^{k-1}G{q}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union


class TermError(ValueError):
    """Malformed or out-of-domain space/gauge term."""


# --------------------------------------------------------------------------
# space terms


@dataclass(frozen=True, slots=True)
class Point:
    """The one-point space; unit for wedge sum."""

    def __repr__(self) -> str:
        return "Point()"


@dataclass(frozen=True, slots=True)
class Sphere:
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise TermError(f"sphere dimension must be >= 1, got {self.dim}")


@dataclass(frozen=True, slots=True)
class Moore:
    """P^dim(modulus): reduced homology Z/modulus in degree dim - 1.

    Any modulus >= 2 is a legal term.  The decomposition engine only ever
    produces odd prime-power moduli; that restriction is enforced where the
    moduli enter (the fundamental-group descriptor), not here, so the
    homology engine can still talk about spaces like P^2(6).
    """

    dim: int
    modulus: int

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise TermError(f"Moore space dimension must be >= 2, got {self.dim}")
        if self.modulus < 2:
            raise TermError(f"Moore space modulus must be >= 2, got {self.modulus}")


@dataclass(frozen=True, slots=True)
class SuspCP2:
    """The suspension of the complex projective plane."""


@dataclass(frozen=True, slots=True)
class Wedge:
    """Wedge sum of atomic terms, kept in canonical order (see normalize)."""

    summands: tuple["SpaceTerm", ...]


SpaceTerm = Union[Point, Sphere, Moore, SuspCP2, Wedge]


def _atom_key(term: SpaceTerm) -> tuple[int, int, int]:
    """Canonical sort key: kind, then dimension, then modulus."""
    if isinstance(term, Sphere):
        return (0, term.dim, 0)
    if isinstance(term, Moore):
        return (1, term.dim, term.modulus)
    if isinstance(term, SuspCP2):
        return (2, 5, 0)
    raise TermError(f"not an atomic wedge summand: {term!r}")


def summands(term: SpaceTerm) -> tuple[SpaceTerm, ...]:
    """The atomic wedge summands of a term (empty for the point)."""
    if isinstance(term, Point):
        return ()
    if isinstance(term, Wedge):
        return term.summands
    return (term,)


def normalize(term: SpaceTerm) -> SpaceTerm:
    """Rewrite a term to its unique normal form.

    Nested wedges are flattened, point summands dropped, summands sorted
    (spheres, then Moore spaces, then SCP^2; within a kind by ascending
    dimension, then ascending modulus).  An empty wedge collapses to the
    point and a one-summand wedge to its summand, so a normal form is never
    a singleton Wedge.
    """
    flat: list[SpaceTerm] = []
    _flatten(term, flat)
    flat.sort(key=_atom_key)
    if not flat:
        return Point()
    if len(flat) == 1:
        return flat[0]
    return Wedge(tuple(flat))


def _flatten(term: SpaceTerm, out: list[SpaceTerm]) -> None:
    if isinstance(term, Point):
        return
    if isinstance(term, Wedge):
        for part in term.summands:
            _flatten(part, out)
        return
    if isinstance(term, (Sphere, Moore, SuspCP2)):
        out.append(term)
        return
    raise TermError(f"not a space term: {term!r}")


def wedge(parts: Iterable[SpaceTerm]) -> SpaceTerm:
    """Normalized wedge sum of any iterable of terms."""
    return normalize(Wedge(tuple(parts)))


# --------------------------------------------------------------------------
# gauge-side terms


@dataclass(frozen=True, slots=True)
class LoopFactor:
    """O^kG, or its mod-q variant O^kG{q} when a modulus is present."""

    loop_order: int
    modulus: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.loop_order <= 3:
            raise TermError(f"loop order must be 1..3, got {self.loop_order}")
        if self.modulus is not None and self.modulus < 2:
            raise TermError(f"loop factor modulus must be >= 2, got {self.modulus}")


#: Marker for a stabilization count left as the formal variable d.
SYMBOLIC = "symbolic"

Stabilization = Union[int, str]


def _factor_key(f: LoopFactor) -> tuple[int, int, int]:
    # Descending loop order; plain factors before mod-q ones; ascending modulus.
    return (-f.loop_order, 0 if f.modulus is None else 1, f.modulus or 0)


@dataclass(frozen=True, slots=True)
class GaugeExpr:
    """A product decomposition G_t(base) x (loop factors), possibly stabilized.

    ``stabilization`` counts connected sums with S^2 x S^2: 0 means the
    equivalence holds for the manifold itself, a positive integer d means it
    holds after d stabilizations (and the factor list already includes the
    2d extra copies of O^2G the stabilization contributes on the right),
    and SYMBOLIC means d is kept as a formal variable, in which case the
    factor list holds only the d-independent part.
    """

    base: str  # "S4" | "CP2"
    t: int
    factors: tuple[LoopFactor, ...] = ()
    stabilization: Stabilization = 0

    def __post_init__(self) -> None:
        if self.base not in ("S4", "CP2"):
            raise TermError(f"gauge base must be S4 or CP2, got {self.base!r}")
        if isinstance(self.stabilization, int):
            if self.stabilization < 0:
                raise TermError("stabilization count must be >= 0")
        elif self.stabilization != SYMBOLIC:
            raise TermError(f"bad stabilization: {self.stabilization!r}")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=_factor_key)))


def map_space(summand: SpaceTerm) -> LoopFactor:
    """The gauge factor Map*(summand, G) contributed by one wedge summand.

    Spheres S^2..S^4 give plain loop factors O^1G..O^3G; Moore summands
    P^3(q) and P^4(q) give the mod-q factors O^2G{q} and O^3G{q}.  S^5 and
    SCP^2 are base summands — they pair with the base gauge group, not with
    a loop factor — and everything else is outside the correspondence.
    """
    if isinstance(summand, Sphere) and 2 <= summand.dim <= 4:
        return LoopFactor(summand.dim - 1)
    if isinstance(summand, Moore) and 3 <= summand.dim <= 4:
        return LoopFactor(summand.dim - 1, summand.modulus)
    if isinstance(summand, SuspCP2) or (isinstance(summand, Sphere) and summand.dim == 5):
        raise TermError(f"base summand: {render(summand)}")
    raise TermError(f"no loop factor for summand: {summand!r}")


# --------------------------------------------------------------------------
# rendering

_BASE_NAMES = {"S4": "S^4", "CP2": "CP^2"}


def render(obj: SpaceTerm | GaugeExpr | LoopFactor) -> str:
    """Plain-text form of a term.

    Wedges are normalized before rendering, so the output is always the
    canonical form (``S^3 v P^3(9)``); gauge expressions render as the
    right-hand side of their product decomposition
    (``G_2(S^4) x O^3G x O^1G``), merging the plain O^2G block into
    ``(O^2G)^{b+2d}`` when the stabilization is symbolic.
    """
    if isinstance(obj, GaugeExpr):
        return _render_gauge(obj)
    if isinstance(obj, LoopFactor):
        return _render_factor(obj)
    if isinstance(obj, Point):
        return "pt"
    if isinstance(obj, Sphere):
        return f"S^{obj.dim}"
    if isinstance(obj, Moore):
        return f"P^{obj.dim}({obj.modulus})"
    if isinstance(obj, SuspCP2):
        return "SCP^2"
    if isinstance(obj, Wedge):
        norm = normalize(obj)
        if isinstance(norm, Wedge):
            return " v ".join(render(s) for s in norm.summands)
        return render(norm)
    raise TermError(f"cannot render {obj!r}")


def _render_factor(f: LoopFactor) -> str:
    if f.modulus is None:
        return f"O^{f.loop_order}G"
    return f"O^{f.loop_order}G{{{f.modulus}}}"


def _render_gauge(expr: GaugeExpr) -> str:
    pieces = [f"G_{expr.t}({_BASE_NAMES[expr.base]})"]
    if expr.stabilization == SYMBOLIC:
        plain2 = LoopFactor(2)
        count = sum(1 for f in expr.factors if f == plain2)
        emitted = False
        for f in expr.factors:
            if f == plain2:
                if not emitted:
                    power = f"{count}+2d" if count else "2d"
                    pieces.append(f"(O^2G)^{{{power}}}")
                    emitted = True
            else:
                pieces.append(_render_factor(f))
        if not emitted:
            # No d-independent O^2G block: splice the symbolic block into
            # its canonical slot anyway.
            merged = [f"G_{expr.t}({_BASE_NAMES[expr.base]})"]
            placed = False
            for f in expr.factors:
                if not placed and _factor_key(f) > _factor_key(plain2):
                    merged.append("(O^2G)^{2d}")
                    placed = True
                merged.append(_render_factor(f))
            if not placed:
                merged.append("(O^2G)^{2d}")
            pieces = merged
    else:
        pieces.extend(_render_factor(f) for f in expr.factors)
    return " x ".join(pieces)


# --------------------------------------------------------------------------
# parsing

_SPHERE_RE = re.compile(r"^S\^(\d+)$")
_MOORE_RE = re.compile(r"^P\^(\d+)\((\d+)\)$")


def parse_term(text: str) -> SpaceTerm:
    """Parse the rendered form of a space term; the result is normalized.

    Grammar: atoms ``pt``, ``S^n``, ``P^n(q)``, ``SCP^2`` joined by the
    wedge separator ``v``.  Whitespace around tokens is ignored.
    """
    if not text.strip():
        raise TermError("empty term")
    parts = [p.strip() for p in text.split("v")]
    atoms = [_parse_atom(p) for p in parts]
    return wedge(atoms)


def _parse_atom(text: str) -> SpaceTerm:
    if text == "pt":
        return Point()
    if text == "SCP^2":
        return SuspCP2()
    m = _SPHERE_RE.match(text)
    if m:
        return Sphere(int(m.group(1)))
    m = _MOORE_RE.match(text)
    if m:
        return Moore(int(m.group(1)), int(m.group(2)))
    raise TermError(f"bad term atom: {text!r}")
