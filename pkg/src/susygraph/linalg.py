"""Exact sparse linear algebra over Gaussian integers.

Every operator in this package has Gaussian-integer entries, so operator
construction and algebra verification are done with exact integer
arithmetic; floating point only enters when a map is densified for an
eigensolver.  A map stores its nonzero entries as two row-major dicts
(real and imaginary integer parts), so purely real or purely imaginary
operators pay for exactly one integer matrix product per composition.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

import numpy as np

VERTEX = "vertex"
EDGE = "edge"
SUPER = "super"
AUX = "aux"


class SpaceMismatch(ValueError):
    """Operands live on incompatible spaces."""


@dataclass(frozen=True)
class Space:
    """A tagged coefficient space (vertex functions, edge functions, or their sum)."""

    kind: str
    dim: int


def vertex_space(n: int) -> Space:
    return Space(VERTEX, n)


def edge_space(m: int) -> Space:
    return Space(EDGE, m)


def super_space(n: int, m: int) -> Space:
    """The direct sum space, vertex block first then edge block."""
    return Space(SUPER, n + m)


def aux_space(k: int) -> Space:
    """An untagged index space, used when stacking vectors into a map."""
    return Space(AUX, k)


Rows = dict[int, dict[int, int]]


def _copy(rows: Rows) -> Rows:
    return {r: dict(row) for r, row in rows.items()}


def _transpose(rows: Rows) -> Rows:
    out: Rows = {}
    for r, row in rows.items():
        for c, v in row.items():
            out.setdefault(c, {})[r] = v
    return out

def _scaled(rows: Rows, k: int) -> Rows:
    if k == 0:
        return {}
    if k == 1:
        return _copy(rows)
    return {r: {c: k * v for c, v in row.items()} for r, row in rows.items()}


def _added(a: Rows, b: Rows, sign: int) -> Rows:
    out = _copy(a)
    for r, row in b.items():
        dest = out.setdefault(r, {})
        for c, v in row.items():
            nv = dest.get(c, 0) + (v if sign > 0 else -v)
            if nv:
                dest[c] = nv
            else:
                dest.pop(c, None)
        if not dest:
            del out[r]
    return out


def _matmul_into(acc, a: Rows, b: Rows, sign: int) -> None:
    # acc is a defaultdict(row -> defaultdict(int)); accumulates sign * a @ b
    for r, arow in a.items():
        dest = acc[r]
        for k, av in arow.items():
            brow = b.get(k)
            if not brow:
                continue
            s = av if sign > 0 else -av
            for c, bv in brow.items():
                dest[c] += s * bv


def _pruned(acc) -> Rows:
    out: Rows = {}
    for r, row in acc.items():
        kept = {c: v for c, v in row.items() if v}
        if kept:
            out[r] = kept
    return out


class LinearMap:
    """A sparse linear map between tagged spaces, entries a + b*i with integer a, b.

    Instances are immutable by convention: no method mutates, every
    operation returns a fresh map.  Equality is exact and entrywise.
    """

    __slots__ = ("domain", "codomain", "_re", "_im")

    def __init__(self, domain: Space, codomain: Space, re_rows: Rows, im_rows: Rows):
        self.domain = domain
        self.codomain = codomain
        self._re = re_rows
        self._im = im_rows

    # -- construction --

    @classmethod
    def from_entries(
        cls, domain: Space, codomain: Space, entries: Iterable[tuple[int, int, int, int]]
    ) -> "LinearMap":
        """Build from (row, col, re, im) tuples; duplicate coordinates accumulate."""
        re_rows: Rows = {}
        im_rows: Rows = {}
        for r, c, re, im in entries:
            if not (0 <= r < codomain.dim and 0 <= c < domain.dim):
                raise SpaceMismatch(f"entry ({r}, {c}) outside {codomain.dim}x{domain.dim}")
            if re:
                row = re_rows.setdefault(r, {})
                nv = row.get(c, 0) + re
                if nv:
                    row[c] = nv
                else:
                    del row[c]
            if im:
                row = im_rows.setdefault(r, {})
                nv = row.get(c, 0) + im
                if nv:
                    row[c] = nv
                else:
                    del row[c]
        re_rows = {r: row for r, row in re_rows.items() if row}
        im_rows = {r: row for r, row in im_rows.items() if row}
        return cls(domain, codomain, re_rows, im_rows)

    @classmethod
    def zero(cls, domain: Space, codomain: Space) -> "LinearMap":
        return cls(domain, codomain, {}, {})

    @classmethod
    def identity(cls, space: Space) -> "LinearMap":
        return cls(space, space, {i: {i: 1} for i in range(space.dim)}, {})

    # -- inspection --

    def entries(self) -> list[tuple[int, int, int, int]]:
        """All nonzero entries as (row, col, re, im), sorted by (row, col)."""
        coords = {(r, c) for r, row in self._re.items() for c in row}
        coords.update((r, c) for r, row in self._im.items() for c in row)
        out = []
        for r, c in sorted(coords):
            out.append((r, c, self._re.get(r, {}).get(c, 0), self._im.get(r, {}).get(c, 0)))
        return out

    def entry(self, r: int, c: int) -> tuple[int, int]:
        return (self._re.get(r, {}).get(c, 0), self._im.get(r, {}).get(c, 0))

    @property
    def nnz(self) -> int:
        coords = {(r, c) for r, row in self._re.items() for c in row}
        coords.update((r, c) for r, row in self._im.items() for c in row)
        return len(coords)

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def max_abs(self) -> int:
        """Largest |component| over all entries; an exact integer residual norm."""
        best = 0
        for rows in (self._re, self._im):
            for row in rows.values():
                for v in row.values():
                    a = -v if v < 0 else v
                    if a > best:
                        best = a
        return best

    def has_imag(self) -> bool:
        return bool(self._im)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._re == other._re
            and self._im == other._im
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"LinearMap({self.codomain.dim}x{self.domain.dim}, "
            f"{self.codomain.kind}<-{self.domain.kind}, nnz={self.nnz})"
        )

    # -- algebra --

    def _require_same_shape(self, other: "LinearMap") -> None:
        if self.domain != other.domain or self.codomain != other.codomain:
            raise SpaceMismatch(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._require_same_shape(other)
        return LinearMap(
            self.domain,
            self.codomain,
            _added(self._re, other._re, 1),
            _added(self._im, other._im, 1),
        )

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._require_same_shape(other)
        return LinearMap(
            self.domain,
            self.codomain,
            _added(self._re, other._re, -1),
            _added(self._im, other._im, -1),
        )

    def __neg__(self) -> "LinearMap":
        return self.scale(-1)

    def scale(self, c: int | tuple[int, int]) -> "LinearMap":
        """Multiply by an exact Gaussian integer, given as int or (re, im)."""
        cr, ci = (c, 0) if isinstance(c, int) else c
        re = _added(_scaled(self._re, cr), _scaled(self._im, ci), -1)
        im = _added(_scaled(self._re, ci), _scaled(self._im, cr), 1)
        return LinearMap(self.domain, self.codomain, re, im)

    def halved(self) -> "LinearMap":
        """Exact division by 2; raises ValueError if any component is odd."""

        def half(rows: Rows) -> Rows:
            out: Rows = {}
            for r, row in rows.items():
                new = {}
                for c, v in row.items():
                    if v % 2:
                        raise ValueError(f"odd entry {v} at ({r}, {c}) cannot be halved exactly")
                    new[c] = v // 2
                out[r] = new
            return out

        return LinearMap(self.domain, self.codomain, half(self._re), half(self._im))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.codomain != self.domain:
            raise SpaceMismatch(f"cannot compose {self!r} after {other!r}")
        acc_re: defaultdict = defaultdict(lambda: defaultdict(int))
        acc_im: defaultdict = defaultdict(lambda: defaultdict(int))
        if self._re and other._re:
            _matmul_into(acc_re, self._re, other._re, 1)
        if self._im and other._im:
            _matmul_into(acc_re, self._im, other._im, -1)
        if self._re and other._im:
            _matmul_into(acc_im, self._re, other._im, 1)
        if self._im and other._re:
            _matmul_into(acc_im, self._im, other._re, 1)
        return LinearMap(other.domain, self.codomain, _pruned(acc_re), _pruned(acc_im))

    def adjoint(self) -> "LinearMap":
        """Conjugate transpose."""
        return LinearMap(
            self.codomain, self.domain, _transpose(self._re), _scaled(_transpose(self._im), -1)
        )

    def is_self_adjoint(self) -> bool:
        return self.domain == self.codomain and self == self.adjoint()

    # -- application and densification --

    def apply(self, vec: "StateVector") -> "StateVector":
        if vec.space != self.domain:
            raise SpaceMismatch(f"cannot apply {self!r} to a vector on {vec.space}")
        coeffs = vec.coefficients
        out = np.zeros(self.codomain.dim, dtype=np.complex128)
        for r, row in self._re.items():
            s = 0j
            for c, v in row.items():
                s += v * coeffs[c]
            out[r] += s
        for r, row in self._im.items():
            s = 0j
            for c, v in row.items():
                s += v * coeffs[c]
            out[r] += 1j * s
        return StateVector(self.codomain, out)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.codomain.dim, self.domain.dim), dtype=np.complex128)
        for r, row in self._re.items():
            for c, v in row.items():
                out[r, c] += v
        for r, row in self._im.items():
            for c, v in row.items():
                out[r, c] += 1j * v
        return out

    def to_dense_real(self) -> np.ndarray:
        if self._im:
            raise ValueError("map has imaginary entries")
        out = np.zeros((self.codomain.dim, self.domain.dim), dtype=np.float64)
        for r, row in self._re.items():
            for c, v in row.items():
                out[r, c] = v
        return out


def commutator(a: LinearMap, b: LinearMap) -> LinearMap:
    return (a @ b) - (b @ a)


def anticommutator(a: LinearMap, b: LinearMap) -> LinearMap:
    return (a @ b) + (b @ a)


def serialize_triplets(m: LinearMap) -> list[str]:
    """Coordinate-triplet lines '(row, col, re, im)' sorted by (row, col)."""
    return [f"({r}, {c}, {re}, {im})" for r, c, re, im in m.entries()]


def triplet_rows(m: LinearMap) -> list[list[int]]:
    """entries() as plain lists, the JSON-friendly twin of serialize_triplets."""
    return [[r, c, re, im] for r, c, re, im in m.entries()]


@dataclass(frozen=True)
class StateVector:
    """A dense complex coefficient vector over a tagged space."""

    space: Space
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coefficients, dtype=np.complex128)
        if coeffs.shape != (self.space.dim,):
            raise SpaceMismatch(
                f"coefficient vector of shape {coeffs.shape} on a space of dim {self.space.dim}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def basis(cls, space: Space, index: int) -> "StateVector":
        coeffs = np.zeros(space.dim, dtype=np.complex128)
        coeffs[index] = 1.0
        return cls(space, coeffs)

    @classmethod
    def from_values(cls, space: Space, values) -> "StateVector":
        return cls(space, np.asarray(values, dtype=np.complex128))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))


# -- exact elimination --------------------------------------------------------


def _gmul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def _merged_gaussian_rows(m: LinearMap) -> list[dict[int, tuple[int, int]]]:
    rows: dict[int, dict[int, tuple[int, int]]] = {}
    for r, row in m._re.items():
        dest = rows.setdefault(r, {})
        for c, v in row.items():
            dest[c] = (v, 0)
    for r, row in m._im.items():
        dest = rows.setdefault(r, {})
        for c, v in row.items():
            re, _ = dest.get(c, (0, 0))
            dest[c] = (re, v)
    return [rows[r] for r in sorted(rows)]


def _strip_content(row: dict[int, tuple[int, int]]) -> None:
    g = 0
    for re, im in row.values():
        g = gcd(g, re)
        g = gcd(g, im)
        if g == 1:
            return
    if g > 1:
        for c, (re, im) in row.items():
            row[c] = (re // g, im // g)


def exact_rank(m: LinearMap) -> int:
    """Rank over the rationals (Gaussian rationals for complex entries).

    Fraction-free sparse elimination: rows are combined as p*row - q*pivot_row
    so every intermediate stays a Gaussian integer, with the integer content
    of each updated row divided out to keep entries small.  Pivots are chosen
    by least row fill, then least column fill, so the computation is
    deterministic and never consults floating point.
    """
    rows = _merged_gaussian_rows(m)
    col_index: dict[int, set[int]] = defaultdict(set)
    for i, row in enumerate(rows):
        for c in row:
            col_index[c].add(i)
    active = set(range(len(rows)))
    rank = 0
    while active:
        pr = min(active, key=lambda i: (len(rows[i]), i))
        prow = rows[pr]
        pc = min(prow, key=lambda c: (len(col_index[c]), c))
        piv = prow[pc]
        for i in list(col_index[pc]):
            if i == pr:
                continue
            target = rows[i]
            q = target.pop(pc)
            col_index[pc].discard(i)
            new: dict[int, tuple[int, int]] = {}
            for c, v in target.items():
                new[c] = _gmul(piv, v)
            for c, v in prow.items():
                if c == pc:
                    continue
                tr, ti = _gmul(q, v)
                if c in new:
                    nr, ni = new[c]
                    nr -= tr
                    ni -= ti
                    if nr or ni:
                        new[c] = (nr, ni)
                    else:
                        del new[c]
                        col_index[c].discard(i)
                else:
                    new[c] = (-tr, -ti)
                    col_index[c].add(i)
            _strip_content(new)
            rows[i] = new
            if not new:
                active.discard(i)
        for c in prow:
            col_index[c].discard(pr)
        active.discard(pr)
        rank += 1
    return rank


def exact_kernel_basis(m: LinearMap) -> list[dict[int, int]]:
    """An integer basis of the rational kernel of a real integer map.

    Reduced row echelon form over exact fractions, one kernel vector per
    free column, denominators cleared and content stripped.  The vector for
    free column f carries a positive entry at f; ordering follows the free
    columns, so the result is deterministic.
    """
    if m._im:
        raise ValueError("kernel basis is only implemented for real integer maps")
    echelon: list[tuple[int, dict[int, Fraction]]] = []
    for r in sorted(m._re):
        row: dict[int, Fraction] = {c: Fraction(v) for c, v in m._re[r].items()}
        for pc, prow in echelon:
            coef = row.get(pc)
            if not coef:
                continue
            for c, pv in prow.items():
                nv = row.get(c, Fraction(0)) - coef * pv
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        pc_new = min(row)
        inv = row[pc_new]
        row = {c: v / inv for c, v in row.items()}
        for _, erow in echelon:
            coef = erow.get(pc_new)
            if not coef:
                continue
            for c, pv in row.items():
                nv = erow.get(c, Fraction(0)) - coef * pv
                if nv:
                    erow[c] = nv
                else:
                    erow.pop(c, None)
        echelon.append((pc_new, row))
    pivots = {pc for pc, _ in echelon}
    basis: list[dict[int, int]] = []
    for f in range(m.domain.dim):
        if f in pivots:
            continue
        vec: dict[int, Fraction] = {f: Fraction(1)}
        for pc, prow in echelon:
            coef = prow.get(f)
            if coef:
                vec[pc] = -coef
        denom = 1
        for v in vec.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = {c: int(v * denom) for c, v in vec.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        basis.append(ints)
    return basis


def stack_columns(vectors: list[dict[int, int]], codomain: Space) -> LinearMap:
    """Assemble sparse integer vectors as the columns of a map from an index space."""
    entries = []
    for j, vec in enumerate(vectors):
        for r, v in vec.items():
            entries.append((r, j, v, 0))
    return LinearMap.from_entries(aux_space(len(vectors)), codomain, entries)
