"""Rebuild a projective plane from a design and a bound-achieving compatible family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .design import (
    Resolution,
    SteinerDesign,
    classify_resolution_pair,
    validate_steiner,
)
from .geometry import ProjectivePlane


class ReconstructionError(ValueError):
    pass


class PlaneAxiomError(ValueError):
    """A projective plane axiom failed; ``witness`` names the offending pair or element."""

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


@dataclass(frozen=True)
class StructureI:
    """Points are design blocks; blocks are the distinct classes used by the family."""

    classes: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    membership: tuple[tuple[int, ...], ...]  # class index -> resolutions containing it

    @property
    def b_I(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class DualDesign:
    m: int
    blocks: tuple[tuple[int, ...], ...]  # aligned with StructureI.classes
    design: SteinerDesign | None

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def check_compatible_family(S: Sequence[Resolution]) -> None:
    for (i, R1), (j, R2) in combinations(enumerate(S), 2):
        verdict = classify_resolution_pair(R1, R2)
        if verdict != "compatible":
            raise ReconstructionError(f"resolutions {i} and {j} are {verdict}, not compatible")


def build_structure_I(D: SteinerDesign, S: Sequence[Resolution]) -> StructureI:
    if D.params is None:
        raise ReconstructionError("design is outside the (sk-s+1)k family")
    for R in S:
        if R.nblocks != D.b:
            raise ReconstructionError("resolution does not belong to this design")
    check_compatible_family(S)
    p = D.params
    holders: dict[tuple[int, ...], list[int]] = {}
    for ri, R in enumerate(S):
        for c in R.classes:
            holders.setdefault(c, []).append(ri)
    classes = tuple(sorted(holders))
    degrees = [0] * D.b
    for c in classes:
        for blk in c:
            degrees[blk] += 1
    if max(degrees, default=0) > p.r_i_max:
        raise ReconstructionError(f"a block lies in {max(degrees)} classes, above sk-k+1 = {p.r_i_max}")
    if len(classes) > p.b_I_max:
        raise ReconstructionError(f"b_I = {len(classes)} exceeds (sk+1)(sk-k+1) = {p.b_I_max}")
    assert sum(degrees) == len(classes) * p.n
    return StructureI(classes, tuple(degrees), tuple(tuple(holders[c]) for c in classes))


def build_dual_design(I: StructureI, S: Sequence[Resolution], params) -> DualDesign:
    """Points are the resolutions; each class of I is the block of resolutions holding it."""
    m = len(S)
    if m < 2:
        raise ReconstructionError("the dual structure needs at least two resolutions")
    blocks = I.membership
    pair_seen: dict[tuple[int, int], int] = {}
    for j, blk in enumerate(blocks):
        for pair in combinations(blk, 2):
            if pair in pair_seen:
                raise ReconstructionError(f"resolutions {pair} share classes {pair_seen[pair]} and {j}")
            pair_seen[pair] = j
    if len(pair_seen) != m * (m - 1) // 2:
        raise ReconstructionError("some pair of resolutions shares no class")
    sizes = [len(b) for b in blocks]
    r, s = params.r, params.s
    # counting chain from the bound argument
    assert sum(sizes) == m * r
    assert sum(x * (x - 1) for x in sizes) == m * (m - 1)
    assert m * r * r <= I.b_I * (m - 1 + r)
    design = None
    if m == params.m_max:
        if I.b_I != params.b_I_max:
            raise ReconstructionError(f"b_I = {I.b_I} at m = m_max, expected {params.b_I_max}")
        spread = sum((x - s) ** 2 for x in sizes)
        if spread:
            raise ReconstructionError(f"sum (k_j - s)^2 = {spread} at m = m_max")
        design = validate_steiner(m, blocks, strict=False)
        if design.k != s:
            raise ReconstructionError(f"dual design has block size {design.k}, expected {s}")
    return DualDesign(m, blocks, design)


def verify_projective_plane(npoints: int, lines: Sequence[Sequence[int]]) -> int:
    """Return the order n, or raise PlaneAxiomError with a witness."""
    lines = [tuple(sorted(set(l))) for l in lines]
    if not lines:
        raise PlaneAxiomError("nonempty", (), "no lines")
    size = len(lines[0])
    for j, l in enumerate(lines):
        if len(l) != size:
            raise PlaneAxiomError("line size", (0, j), f"line {j} has {len(l)} points, line 0 has {size}")
        if l and (l[0] < 0 or l[-1] >= npoints):
            raise PlaneAxiomError("point range", (j,), f"line {j} has points outside 0..{npoints - 1}")
    n = size - 1
    if n < 2:
        raise PlaneAxiomError("order", (), f"lines of size {size} give order {n} < 2")
    line_masks = [sum(1 << p for p in l) for l in lines]
    for a, b in combinations(range(len(lines)), 2):
        c = (line_masks[a] & line_masks[b]).bit_count()
        if c != 1:
            raise PlaneAxiomError("two lines meet once", (a, b), f"lines {a} and {b} share {c} points")
    point_masks = [0] * npoints
    for j, l in enumerate(lines):
        for p in l:
            point_masks[p] |= 1 << j
    for x, y in combinations(range(npoints), 2):
        c = (point_masks[x] & point_masks[y]).bit_count()
        if c != 1:
            raise PlaneAxiomError("two points span one line", (x, y), f"points {x} and {y} lie on {c} lines")
    for x, pm in enumerate(point_masks):
        if pm.bit_count() != n + 1:
            raise PlaneAxiomError("point degree", (x,), f"point {x} lies on {pm.bit_count()} lines, expected {n + 1}")
    expected = n * n + n + 1
    if npoints != expected or len(lines) != expected:
        raise PlaneAxiomError("counts", (npoints, len(lines)),
                              f"{npoints} points and {len(lines)} lines, expected {expected}")
    return n


@dataclass(frozen=True)
class Reconstruction:
    plane: ProjectivePlane
    structure: StructureI
    dual: DualDesign
    type1: int
    type2: int


def reconstruct_plane(D: SteinerDesign, S: Sequence[Resolution]) -> Reconstruction:
    """Points: design points 0..v-1 then classes of I; lines: block-plus-classes, then one per resolution."""
    p = D.params
    if p is None:
        raise ReconstructionError("design is outside the (sk-s+1)k family")
    if len(S) != p.m_max:
        raise ReconstructionError(f"family has {len(S)} resolutions, need exactly {p.m_max}")
    I = build_structure_I(D, S)
    if len(S) == 1:
        # s = 1: the completion of an affine plane has no dual design to speak of
        dual = DualDesign(1, I.membership, None)
    else:
        dual = build_dual_design(I, S, p)
    v = D.v
    containing: list[list[int]] = [[] for _ in range(D.b)]
    for j, c in enumerate(I.classes):
        for blk in c:
            containing[blk].append(v + j)
    class_id = {c: v + j for j, c in enumerate(I.classes)}
    type1 = [tuple(D.blocks[i]) + tuple(containing[i]) for i in range(D.b)]
    type2 = [tuple(sorted(class_id[c] for c in R.classes)) for R in S]
    lines = type1 + type2
    npoints = v + I.b_I
    order = verify_projective_plane(npoints, lines)
    if order != p.q:
        raise ReconstructionError(f"reconstructed plane has order {order}, expected {p.q}")
    traces = []
    for l in lines:
        t = tuple(x for x in l if x < v)
        if t:
            if len(t) != D.k:
                raise ReconstructionError(f"a line meets the design points in {len(t)} points")
            traces.append(t)
    if tuple(sorted(traces)) != D.blocks:
        raise ReconstructionError("line traces on the design points differ from the design blocks")
    plane = ProjectivePlane(order, npoints, tuple(lines))
    return Reconstruction(plane, I, dual, len(type1), len(type2))
