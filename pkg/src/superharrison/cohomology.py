"""Cohomology of the full Hochschild complex and of its graded Harrison subcomplex.

Matrices are taken with respect to deterministic bases: the full complex
uses the elementary cochains in flat enumeration order, and the Harrison
subcomplex uses the canonical echelon basis from ``harrison_space``.  Every
Harrison coboundary column is checked to land inside the degree-(n+1)
Harrison space; a failure would mean the shuffle conditions are not closed
under the coboundary and is raised as ``ShuffleClosureError`` instead of
being silently projected away.

Cocycle representatives returned by ``cohomology`` are reduced against the
coboundary subspace, so they are canonical for the given bases and the same
on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product as iter_product

from .algebras import SuperAlgebra, SuperModule
from .cochains import (
    Cochain,
    cochain_from_coordinates,
    elementary_cochain,
    harrison_space,
    hochschild_coboundary,
    parity_offsets,
)
from .linalg import (
    Rat,
    RationalMatrix,
    SubspaceBasis,
    image_basis,
    kernel_basis,
    quotient_representatives,
)

__all__ = [
    "ComplexKind",
    "ResourceLimits",
    "ResourceCeilingError",
    "ShuffleClosureError",
    "CohomologyResult",
    "cochain_basis",
    "coboundary_matrix",
    "cohomology",
    "derivation_space",
]


class ComplexKind(Enum):
    HOCHSCHILD = "hochschild"
    SUPER_HARRISON = "harrison"


@dataclass(frozen=True)
class ResourceLimits:
    """Ceilings guarding the exact-arithmetic core against runaway inputs."""

    max_degree: int = 4
    max_columns: int = 20000


DEFAULT_LIMITS = ResourceLimits()


class ResourceCeilingError(RuntimeError):
    """A requested computation exceeds the configured size ceilings."""


class ShuffleClosureError(RuntimeError):
    """A coboundary of a Harrison basis element left the Harrison space."""


def _guard(degree: int, columns: int, limits: ResourceLimits) -> None:
    if degree > limits.max_degree:
        raise ResourceCeilingError(
            f"degree {degree} exceeds the ceiling {limits.max_degree}"
        )
    if columns > limits.max_columns:
        raise ResourceCeilingError(
            f"cochain space of dimension {columns} exceeds the ceiling {limits.max_columns}"
        )


def cochain_basis(
    algebra: SuperAlgebra,
    module: SuperModule,
    degree: int,
    kind: ComplexKind,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> list[Cochain]:
    """Deterministic basis of the degree-n cochain space of the given kind."""
    if kind is ComplexKind.HOCHSCHILD:
        _guard(degree, algebra.dim**degree * module.dim, limits)
        out = []
        for t in iter_product(range(algebra.dim), repeat=degree):
            for l in range(module.dim):
                out.append(elementary_cochain(algebra, module, degree, t, l))
        return out
    _guard(degree, len(parity_offsets(algebra, module, degree)), limits)
    space = harrison_space(algebra, module, degree)
    return [cochain_from_coordinates(algebra, module, degree, v) for v in space.vectors]


@lru_cache(maxsize=None)
def _coboundary_matrix_cached(
    algebra: SuperAlgebra, module: SuperModule, degree: int, kind: ComplexKind
) -> RationalMatrix:
    if kind is ComplexKind.HOCHSCHILD:
        ncols = algebra.dim**degree * module.dim
        nrows = algebra.dim ** (degree + 1) * module.dim
        columns = []
        for t in iter_product(range(algebra.dim), repeat=degree):
            for l in range(module.dim):
                df = hochschild_coboundary(elementary_cochain(algebra, module, degree, t, l))
                columns.append(list(df.data))
        assert len(columns) == ncols
        return RationalMatrix.from_columns(columns, rows=nrows)

    domain = harrison_space(algebra, module, degree)
    codomain = harrison_space(algebra, module, degree + 1)
    offsets = parity_offsets(algebra, module, degree + 1)
    position = {off: pos for pos, off in enumerate(offsets)}
    columns = []
    for v in domain.vectors:
        df = hochschild_coboundary(cochain_from_coordinates(algebra, module, degree, v))
        coords: list[Rat] = [0] * len(offsets)
        for t, l, value in df.iter_nonzero():
            off = df.offset(t, l)
            pos = position.get(off)
            if pos is None:
                raise ShuffleClosureError(
                    "coboundary of a Harrison element has a parity-violating entry"
                )
            coords[pos] = value
        expansion = codomain.coordinates(coords)
        if expansion is None:
            raise ShuffleClosureError(
                "coboundary of a Harrison element fails a shuffle condition"
            )
        columns.append(list(expansion))
    return RationalMatrix.from_columns(columns, rows=codomain.dim)


def coboundary_matrix(
    algebra: SuperAlgebra,
    module: SuperModule,
    degree: int,
    kind: ComplexKind,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> RationalMatrix:
    """Matrix of the coboundary from degree n to degree n+1 in the chosen bases."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if kind is ComplexKind.HOCHSCHILD:
        _guard(degree, algebra.dim**degree * module.dim, limits)
        _guard(degree + 1, algebra.dim ** (degree + 1) * module.dim, limits)
    else:
        _guard(degree, len(parity_offsets(algebra, module, degree)), limits)
        _guard(degree + 1, len(parity_offsets(algebra, module, degree + 1)), limits)
    return _coboundary_matrix_cached(algebra, module, degree, kind)


@dataclass(frozen=True)
class CohomologyResult:
    """Dimensions and canonical representatives at one degree of one complex."""

    kind: ComplexKind
    degree: int
    dim_cochain: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    representatives: tuple[Cochain, ...]


def cohomology(
    algebra: SuperAlgebra,
    module: SuperModule,
    degree: int,
    kind: ComplexKind,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> CohomologyResult:
    """Cocycles modulo coboundaries at the given degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    outgoing = coboundary_matrix(algebra, module, degree, kind, limits)
    cocycles = kernel_basis(outgoing)
    if degree == 0:
        coboundaries = SubspaceBasis(outgoing.cols, ())
    else:
        incoming = coboundary_matrix(algebra, module, degree - 1, kind, limits)
        coboundaries = image_basis(incoming)
    reps = quotient_representatives(cocycles, coboundaries)

    if kind is ComplexKind.HOCHSCHILD:
        def expand(vector: tuple[Rat, ...]) -> Cochain:
            return Cochain(degree, algebra, module, vector)
    else:
        basis = cochain_basis(algebra, module, degree, kind, limits)

        def expand(vector: tuple[Rat, ...]) -> Cochain:
            out = None
            for coeff, f in zip(vector, basis):
                if coeff:
                    out = f.scale(coeff) if out is None else out + f.scale(coeff)
            if out is None:
                raise AssertionError("zero vector escaped quotient_representatives")
            return out

    representatives = tuple(expand(v) for v in reps.vectors)
    for rep in representatives:
        if not hochschild_coboundary(rep).is_zero():
            raise AssertionError("representative is not a cocycle")
    return CohomologyResult(
        kind=kind,
        degree=degree,
        dim_cochain=outgoing.cols,
        dim_cocycles=cocycles.dim,
        dim_coboundaries=coboundaries.dim,
        dim_cohomology=cocycles.dim - coboundaries.dim,
        representatives=representatives,
    )


def derivation_space(algebra: SuperAlgebra, module: SuperModule) -> SubspaceBasis:
    """Parity-preserving maps f: A -> M obeying the Leibniz rule f(ab) = a f(b) + f(a) b.

    The trailing term uses the Koszul right action.  The system is assembled
    directly from the structure constants, with no cochain machinery
    involved, so this is an independent check target for degree-1 cocycles.
    Coordinates index the parity-consistent pairs (i, l), lexicographically.
    """
    unknowns = [
        (i, l)
        for i in range(algebra.dim)
        for l in range(module.dim)
        if algebra.parity[i] == module.parity[l]
    ]
    col = {pair: idx for idx, pair in enumerate(unknowns)}
    rows: list[list[Rat]] = []
    c = algebra.structure
    action = module.action
    a_par = algebra.parity
    m_par = module.parity
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            for l2 in range(module.dim):
                row: list[Rat] = [0] * len(unknowns)

                # f(e_i e_j) component on m_{l2}
                for k in range(algebra.dim):
                    if c[i][j][k] and (k, l2) in col:
                        row[col[(k, l2)]] += c[i][j][k]

                # minus e_i * f(e_j)
                for l in range(module.dim):
                    if (j, l) in col and action[i][l][l2]:
                        row[col[(j, l)]] -= action[i][l][l2]

                # minus f(e_i) * e_j  (Koszul right action)
                for l in range(module.dim):
                    if (i, l) in col and action[j][l][l2]:
                        sign = -1 if a_par[j] and m_par[l] else 1
                        row[col[(i, l)]] -= sign * action[j][l][l2]

                if any(row):
                    rows.append(row)
    matrix = (
        RationalMatrix.from_rows(rows, cols=len(unknowns))
        if rows
        else RationalMatrix.zero(0, len(unknowns))
    )
    return kernel_basis(matrix)
