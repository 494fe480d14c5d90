"""PG(2, q) over a binary field, maximal arcs, and their exterior lines."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .gf import Field, binary_field_of_order


class ArcError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ProjectivePlane:
    """Incidence structure of a projective plane.

    ``lines[j]`` is the ascending tuple of point indices on line ``j``.  For
    planes built from coordinates, ``point_coords``/``line_coords`` hold the
    normalized homogeneous triples; abstract planes leave them ``None``.
    """

    order: int
    npoints: int
    lines: tuple[tuple[int, ...], ...]
    point_coords: tuple[tuple[int, int, int], ...] | None = None
    line_coords: tuple[tuple[int, int, int], ...] | None = None
    field: Field | None = field(default=None, repr=False)

    @property
    def nlines(self) -> int:
        return len(self.lines)

    @cached_property
    def line_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << p for p in line) for line in self.lines)

    @cached_property
    def lines_through(self) -> tuple[tuple[int, ...], ...]:
        through: list[list[int]] = [[] for _ in range(self.npoints)]
        for j, line in enumerate(self.lines):
            for p in line:
                through[p].append(j)
        return tuple(tuple(t) for t in through)

    @cached_property
    def point_lookup(self) -> dict[tuple[int, int, int], int]:
        return {c: i for i, c in enumerate(self.point_coords or ())}

    def line_through(self, a: int, b: int) -> int:
        common = set(self.lines_through[a]) & set(self.lines_through[b])
        if len(common) != 1:
            raise ArcError(f"points {a}, {b} lie on {len(common)} common lines")
        return common.pop()


def normalized_triples(q: int) -> list[tuple[int, int, int]]:
    """All triples over labels 0..q-1 whose first nonzero entry is 1, lexicographic."""
    out = []
    for t in product(range(q), repeat=3):
        nz = [c for c in t if c]
        if nz and nz[0] == 1:
            out.append(t)
    return out


def build_pg2(F: Field) -> ProjectivePlane:
    """PG(2, q) with point (x:y:z) on line [a:b:c] iff ax + by + cz = 0."""
    if not F.is_binary:
        raise ArcError("build_pg2 expects a binary extension field")
    q = F.order
    triples = normalized_triples(q)
    index = {t: i for i, t in enumerate(triples)}
    lines = []
    for a, b, c in triples:
        on = []
        for i, (x, y, z) in enumerate(triples):
            if F.mul(a, x) ^ F.mul(b, y) ^ F.mul(c, z) == 0:
                on.append(i)
        lines.append(tuple(on))
    assert len(index) == q * q + q + 1
    return ProjectivePlane(q, len(triples), tuple(lines), tuple(triples), tuple(triples), F)


def dual_plane(P: ProjectivePlane) -> ProjectivePlane:
    """Swap points and lines; dual(dual(P)) has P's incidence lists."""
    return ProjectivePlane(
        P.order,
        P.nlines,
        P.lines_through,
        P.line_coords,
        P.point_coords,
        P.field,
    )


def point_index(P: ProjectivePlane, coords: tuple[int, int, int]) -> int:
    if P.point_coords is None or P.field is None:
        raise ArcError("plane has no coordinates")
    F = P.field
    lead = next(c for c in coords if c)
    inv = F.inv(lead)
    norm = tuple(F.mul(c, inv) for c in coords)
    return P.point_lookup[norm]


@dataclass(frozen=True)
class ArcCheck:
    ok: bool
    line: int | None = None
    intersection: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_maximal_arc(P: ProjectivePlane, S: Iterable[int], k: int) -> ArcCheck:
    """Every line meets S in 0 or k points; otherwise report the first offending line."""
    mask = 0
    for p in S:
        if not 0 <= p < P.npoints:
            raise ArcError(f"point {p} not in plane")
        mask |= 1 << p
    for j, lm in enumerate(P.line_masks):
        c = (lm & mask).bit_count()
        if c != 0 and c != k:
            return ArcCheck(False, j, c)
    return ArcCheck(True)


@dataclass(frozen=True, eq=False)
class Arc:
    """A verified maximal {(sk-s+1)k; k}-arc in a plane of order q = sk."""

    plane: ProjectivePlane
    points: tuple[int, ...]
    k: int
    s: int

    @cached_property
    def mask(self) -> int:
        return sum(1 << p for p in self.points)

    def __contains__(self, p: int) -> bool:
        return bool(self.mask >> p & 1)

    @cached_property
    def secant_lines(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(j for j, lm in enumerate(self.plane.line_masks) if lm & m)

    @cached_property
    def embedding(self) -> "ArcDesign":
        from .design import restrict_to_arc
        return restrict_to_arc(self.plane, self)


def make_arc(P: ProjectivePlane, points: Iterable[int], k: int) -> Arc:
    """Validate ``points`` as a maximal arc with line intersection ``k``."""
    pts = tuple(sorted(set(points)))
    q = P.order
    if k < 1 or q % k:
        raise ArcError(f"k={k} does not divide q={q}")
    s = q // k
    expected = (s * k - s + 1) * k
    if len(pts) != expected:
        raise ArcError(f"arc has {len(pts)} points, expected (sk-s+1)k = {expected}")
    check = verify_maximal_arc(P, pts, k)
    if not check:
        raise ArcError(f"line {check.line} meets the set in {check.intersection} points")
    return Arc(P, pts, k, s)


def regular_hyperoval(P: ProjectivePlane) -> Arc:
    """Conic {(1:u:u^2)} plus (0:0:1) and its nucleus (0:1:0)."""
    F = P.field
    if F is None or not F.is_binary:
        raise ArcError("regular_hyperoval needs a coordinatized plane over GF(2^t)")
    pts = [point_index(P, (1, u, F.mul(u, u))) for u in F.elements()]
    pts += [point_index(P, (0, 0, 1)), point_index(P, (0, 1, 0))]
    return make_arc(P, pts, 2)


def _has_root(F: Field, lam: int) -> bool:
    return any(F.mul(x, x) ^ F.mul(lam, x) ^ 1 == 0 for x in F.elements())


def denniston_lambda(F: Field) -> int:
    """Smallest label lam with x^2 + lam*x + 1 irreducible over F."""
    for lam in F.elements():
        if not _has_root(F, lam):
            return lam
    raise ArcError(f"no irreducible x^2 + lam x + 1 over {F}")


def denniston_arc(P: ProjectivePlane, i: int) -> Arc:
    """Denniston maximal arc with k = 2^i.

    Points (x:y:1) with x^2 + lam*xy + y^2 in the additive subgroup spanned by
    1, alpha, ..., alpha^(i-1), i.e. labels 0..2^i - 1.
    """
    F = P.field
    if F is None or not F.is_binary:
        raise ArcError("denniston_arc needs a coordinatized plane over GF(2^t)")
    if not 1 <= i <= F.degree:
        raise ArcError(f"need 1 <= i <= {F.degree}, got {i}")
    lam = denniston_lambda(F)
    k = 1 << i
    pts = []
    for x in F.elements():
        xx = F.mul(x, x)
        lx = F.mul(lam, x)
        for y in F.elements():
            if xx ^ F.mul(lx, y) ^ F.mul(y, y) < k:
                pts.append(point_index(P, (x, y, 1)))
    return make_arc(P, pts, k)


def exterior_lines(P: ProjectivePlane, A: Arc) -> list[int]:
    m = A.mask
    ext = [j for j, lm in enumerate(P.line_masks) if not lm & m]
    expected = (A.s * A.k - A.k + 1) * A.s
    if len(ext) != expected:
        raise ArcError(f"{len(ext)} exterior lines, expected {expected}")
    return ext


def plane_for(q: int) -> ProjectivePlane:
    return build_pg2(binary_field_of_order(q))


def plane_from_lines(npoints: int, lines: Sequence[Sequence[int]]) -> ProjectivePlane:
    """Wrap an abstract line list; the order is read off the first line."""
    order = len(lines[0]) - 1 if lines else 0
    return ProjectivePlane(order, npoints, tuple(tuple(sorted(l)) for l in lines))
