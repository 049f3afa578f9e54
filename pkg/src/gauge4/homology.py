"""Integral homology: graded groups, Smith normal form, chain complexes.

This module is the package's independent arithmetic backbone.  The
decomposition engine predicts homology through closed formulas; everything
here recomputes it from first principles (cellular chain complexes reduced
by Smith normal form over Z), so the two routes can be checked against each
other.

Degrees are capped at 5 — enough for a 4-manifold and one suspension.
Torsion is always stored as a sorted tuple of prime powers, so equal groups
have equal representations no matter how they were computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import terms as _t
from .arith import prime_power_parts
from .manifold import ManifoldSpec, validate

MAX_DEGREE = 5


class ChainComplexError(ValueError):
    """Input matrices do not form a chain complex in degrees 0..5."""


# --------------------------------------------------------------------------
# graded abelian groups


@dataclass(frozen=True, slots=True)
class GradedAbelianGroup:
    """A finitely generated abelian group in each degree 0..5.

    ``groups[i]`` is ``(free_rank, torsion)`` with torsion a sorted tuple
    of prime powers; any torsion entry given to the constructor is split
    into prime powers first, so Z/12 and Z/4 + Z/3 are the same value.
    """

    groups: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if len(self.groups) != MAX_DEGREE + 1:
            raise ValueError(f"expected {MAX_DEGREE + 1} degrees, got {len(self.groups)}")
        fixed = []
        for rank, torsion in self.groups:
            if rank < 0:
                raise ValueError(f"negative free rank {rank}")
            parts: list[int] = []
            for q in torsion:
                if abs(q) > 1:
                    parts.extend(prime_power_parts(abs(q)))
            fixed.append((rank, tuple(sorted(parts))))
        object.__setattr__(self, "groups", tuple(fixed))

    @classmethod
    def of(cls, parts: Mapping[int, tuple[int, Iterable[int]]]) -> "GradedAbelianGroup":
        """Build from a sparse {degree: (rank, torsion)} mapping."""
        groups: list[tuple[int, tuple[int, ...]]] = [(0, ())] * (MAX_DEGREE + 1)
        for deg, (rank, torsion) in parts.items():
            if not 0 <= deg <= MAX_DEGREE:
                raise ValueError(f"degree {deg} outside 0..{MAX_DEGREE}")
            groups[deg] = (rank, tuple(torsion))
        return cls(tuple(groups))

    @classmethod
    def trivial(cls) -> "GradedAbelianGroup":
        return cls.of({})

    def rank(self, degree: int) -> int:
        return self.groups[degree][0]

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self.groups[degree][1]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * rank for i, (rank, _) in enumerate(self.groups))


def direct_sum(a: GradedAbelianGroup, b: GradedAbelianGroup) -> GradedAbelianGroup:
    return GradedAbelianGroup(
        tuple(
            (ra + rb, ta + tb)
            for (ra, ta), (rb, tb) in zip(a.groups, b.groups)
        )
    )


def suspend(g: GradedAbelianGroup) -> GradedAbelianGroup:
    """Shift the reduced part up one degree; degree 0 becomes a single Z.

    The degree-0 group contributes its rank beyond one (extra connected
    components) to degree 1.  A nonzero reduced group in degree 5 has
    nowhere to go and is an error.
    """
    top_rank, top_torsion = g.groups[MAX_DEGREE]
    if top_rank or top_torsion:
        raise ValueError(f"cannot suspend: degree {MAX_DEGREE} is nonzero")
    rank0, torsion0 = g.groups[0]
    if rank0 < 1:
        raise ValueError("cannot suspend an empty space: degree 0 is zero")
    shifted = [(1, ())] + [(rank0 - 1, torsion0)] + list(g.groups[1:MAX_DEGREE])
    return GradedAbelianGroup(tuple(shifted))


def render_graded(g: GradedAbelianGroup) -> str:
    """One line per degree: ``H_1 = Z^2 + Z/3 + Z/9``; zero groups as 0."""
    lines = []
    for i, (rank, torsion) in enumerate(g.groups):
        lines.append(f"H_{i} = {_render_group(rank, torsion)}")
    return "\n".join(lines)


def _render_group(rank: int, torsion: tuple[int, ...]) -> str:
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z/{q}" for q in torsion)
    return " + ".join(parts) if parts else "0"


# --------------------------------------------------------------------------
# integer matrices and Smith normal form


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """An immutable rows x cols integer matrix; either side may be 0."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple(tuple([0] * cols) for _ in range(rows)))


class SNFResult(NamedTuple):
    invariant_factors: tuple[int, ...]
    rank: int


def smith_normal_form(mat: IntMatrix) -> SNFResult:
    """Invariant factors d1 | d2 | ... of an integer matrix, and its rank.

    Classic elimination over Z: pull the smallest nonzero entry into the
    working corner, reduce its row and column with exact quotients (any
    nonzero remainder becomes a strictly smaller corner, so this
    terminates), then absorb a row witnessing any divisibility failure in
    the rest of the block and repeat.  Only the nonzero diagonal is
    returned; rank equals its length.
    """
    m, n = mat.rows, mat.cols
    a = [list(row) for row in mat.entries]
    factors: list[int] = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap_rows(a, t, best[0])
        _swap_cols(a, t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        _swap_rows(a, t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        dirty = True
            if not dirty:
                corner = a[t][t]
                for i in range(t + 1, m):
                    bad = next((j for j in range(t + 1, n) if a[i][j] % corner), None)
                    if bad is not None:
                        for k in range(t, n):
                            a[t][k] += a[i][k]
                        dirty = True
                        break
        factors.append(abs(a[t][t]))
        t += 1
    return SNFResult(tuple(factors), len(factors))


def _swap_rows(a: list[list[int]], i: int, j: int) -> None:
    if i != j:
        a[i], a[j] = a[j], a[i]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]


def _mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ValueError("inner dimensions disagree")
    rows = tuple(
        tuple(sum(a.entries[i][k] * b.entries[k][j] for k in range(a.cols)) for j in range(b.cols))
        for i in range(a.rows)
    )
    return IntMatrix(a.rows, b.cols, rows)


def _is_zero(mat: IntMatrix) -> bool:
    return all(v == 0 for row in mat.entries for v in row)


# --------------------------------------------------------------------------
# chain complexes


def chain_homology(boundaries: Sequence[IntMatrix]) -> GradedAbelianGroup:
    """Homology of a chain complex given by boundary matrices [d1, ..., dN].

    ``boundaries[k-1]`` is the degree-k boundary map C_k -> C_{k-1}, stored
    with rows indexed by C_{k-1} and columns by C_k; zero maps must still
    be passed (with the right shape) because the matrices carry the chain
    group dimensions.  Requires N <= 5, matching shapes, and d.d = 0.
    """
    n_top = len(boundaries)
    if n_top == 0:
        raise ChainComplexError("no boundary matrices given")
    if n_top > MAX_DEGREE:
        raise ChainComplexError(f"chain complex exceeds degree {MAX_DEGREE}")
    dims = [boundaries[0].rows] + [b.cols for b in boundaries]
    for k in range(1, n_top):
        if boundaries[k].rows != dims[k]:
            raise ChainComplexError(
                f"dimension mismatch between degrees {k} and {k + 1}: "
                f"{boundaries[k - 1].cols} vs {boundaries[k].rows}"
            )
    for k in range(n_top - 1):
        if not _is_zero(_mat_mul(boundaries[k], boundaries[k + 1])):
            raise ChainComplexError(f"not a chain complex: d{k + 1}.d{k + 2} != 0")

    snfs = [smith_normal_form(b) for b in boundaries]
    ranks = [snf.rank for snf in snfs] + [0]  # rank of d_{N+1} ... is 0
    parts: dict[int, tuple[int, Iterable[int]]] = {}
    for k in range(n_top + 1):
        kernel = dims[k] - (ranks[k - 1] if k >= 1 else 0)
        image_next = ranks[k] if k < n_top else 0
        torsion = snfs[k].invariant_factors if k < n_top else ()
        parts[k] = (kernel - image_next, tuple(q for q in torsion if q > 1))
    return GradedAbelianGroup.of(parts)


# --------------------------------------------------------------------------
# homology of manifold specs and of space terms


def homology_of_manifold(spec: ManifoldSpec) -> GradedAbelianGroup:
    """Integral homology of the described 4-manifold, degrees 0..4.

    H_1 carries the abelianized fundamental group; H_2 adds the same
    torsion to Z^b2 (universal coefficients plus duality); H_3 is the free
    part of H_1 by duality; H_0 and H_4 are Z.
    """
    validate(spec)
    m = spec.pi1.free_rank
    torsion = tuple(p**r for p, r in spec.pi1.cyclic_factors)
    return GradedAbelianGroup.of(
        {
            0: (1, ()),
            1: (m, torsion),
            2: (spec.b2, torsion),
            3: (m, ()),
            4: (1, ()),
        }
    )


def homology_of_term(term: _t.SpaceTerm) -> GradedAbelianGroup:
    """Unreduced integral homology of a space term (a Z in degree 0)."""
    total = GradedAbelianGroup.of({0: (1, ())})
    for atom in _t.summands(term):
        total = direct_sum(total, _reduced_atom_homology(atom))
    return total


def _reduced_atom_homology(atom: _t.SpaceTerm) -> GradedAbelianGroup:
    if isinstance(atom, _t.Sphere):
        if atom.dim > MAX_DEGREE:
            raise ValueError(f"degree {atom.dim} outside 0..{MAX_DEGREE}")
        return GradedAbelianGroup.of({atom.dim: (1, ())})
    if isinstance(atom, _t.Moore):
        if atom.dim > MAX_DEGREE:
            raise ValueError(f"degree {atom.dim} outside 0..{MAX_DEGREE}")
        return GradedAbelianGroup.of({atom.dim - 1: (0, (atom.modulus,))})
    if isinstance(atom, _t.SuspCP2):
        return GradedAbelianGroup.of({3: (1, ()), 5: (1, ())})
    raise _t.TermError(f"no homology rule for {atom!r}")


# --------------------------------------------------------------------------
# matrix grammar (shared with the command line)


def parse_matrix(text: str) -> IntMatrix:
    """Parse row-major bracket syntax: ``[[1,0],[0,1]]``; ``[]`` is 0 x 0."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad matrix syntax: {exc}") from None
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise ValueError("matrix must be a list of rows")
    for row in data:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"matrix entries must be integers, got {v!r}")
    widths = {len(r) for r in data}
    if len(widths) > 1:
        raise ValueError("ragged matrix rows")
    return IntMatrix.from_rows(data)
