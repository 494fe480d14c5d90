"""Steiner 2-(v,k,1) designs, their resolutions, and arc-induced resolution families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import Arc, ArcError, ProjectivePlane, exterior_lines


class DesignError(ValueError):
    pass


class ResolutionError(ValueError):
    pass


@dataclass(frozen=True)
class ArcParams:
    """Counts attached to a 2-((sk-s+1)k, k, 1) design and a plane of order sk."""

    s: int
    k: int

    @property
    def q(self) -> int:
        return self.s * self.k

    @property
    def n(self) -> int:
        return self.q - self.s + 1

    @property
    def v(self) -> int:
        return self.n * self.k

    @property
    def r(self) -> int:
        return self.q + 1

    @property
    def b(self) -> int:
        return self.n * self.r

    @property
    def m_max(self) -> int:
        return (self.q - self.k + 1) * self.s

    @property
    def b_I_max(self) -> int:
        return self.r * (self.q - self.k + 1)

    @property
    def r_i_max(self) -> int:
        return self.q - self.k + 1

    @property
    def disjoint_per_block(self) -> int:
        return self.s * (self.q - self.k + 1) * (self.k - 1)

    @property
    def srg(self) -> tuple[int, int, int, int]:
        """(vertices, degree, lambda, mu) of the block graph."""
        k, s = self.k, self.s
        return (self.b, s * k * k, k * (k + s - 2), k * k)

    @property
    def complement_degree(self) -> int:
        b, a, _, _ = self.srg
        return b - 1 - a

    @property
    def plane_points(self) -> int:
        return self.q * self.q + self.q + 1

    @property
    def boundary(self) -> bool:
        # s = 1 is the affine plane case
        return self.s == 1

    def as_dict(self) -> dict:
        b, a, lam, mu = self.srg
        return {
            "s": self.s, "k": self.k, "q": self.q, "v": self.v, "n": self.n,
            "r": self.r, "b": self.b, "m_max": self.m_max, "b_I_max": self.b_I_max,
            "disjoint_per_block": self.disjoint_per_block,
            "srg": {"b": b, "a": a, "lambda": lam, "mu": mu},
            "complement_degree": self.complement_degree,
            "plane_points": self.plane_points,
            "boundary": self.boundary,
        }


def parameter_table(s: int, k: int) -> ArcParams:
    if s < 1 or k < 2:
        raise DesignError(f"need s >= 1 and k >= 2, got s={s}, k={k}")
    return ArcParams(s, k)


@dataclass(frozen=True, eq=False)
class SteinerDesign:
    """A validated 2-(v,k,1) design in canonical block order.

    ``params`` is ``None`` for designs outside the (sk-s+1)k family, which are
    only admitted with ``validate_steiner(..., strict=False)``.
    """

    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    params: ArcParams | None

    @property
    def b(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << p for p in blk) for blk in self.blocks)

    @cached_property
    def block_index(self) -> dict[tuple[int, ...], int]:
        return {blk: i for i, blk in enumerate(self.blocks)}

    @cached_property
    def blocks_through(self) -> tuple[tuple[int, ...], ...]:
        through: list[list[int]] = [[] for _ in range(self.v)]
        for i, blk in enumerate(self.blocks):
            for p in blk:
                through[p].append(i)
        return tuple(map(tuple, through))

    def same_as(self, other: "SteinerDesign") -> bool:
        return self.v == other.v and self.blocks == other.blocks


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def validate_steiner(v: int, blocks: Iterable[Iterable[int]], strict: bool = True) -> SteinerDesign:
    """Check pair coverage and uniform block size, and derive the arc parameters."""
    blks = canonical_blocks(blocks)
    if not blks:
        raise DesignError("empty block list")
    k = len(blks[0])
    for blk in blks:
        if len(blk) != k:
            raise DesignError(f"ragged block sizes: {len(blk)} != {k}")
        if len(set(blk)) != k:
            raise DesignError(f"repeated point in block {blk}")
        if blk[0] < 0 or blk[-1] >= v:
            raise DesignError(f"block {blk} has points outside 0..{v - 1}")
    if k < 2:
        raise DesignError("block size must be at least 2")
    seen: dict[tuple[int, int], int] = {}
    for i, blk in enumerate(blks):
        for pair in combinations(blk, 2):
            if pair in seen:
                raise DesignError(f"pair {pair} covered by blocks {seen[pair]} and {i}")
            seen[pair] = i
    if len(seen) != v * (v - 1) // 2:
        missing = next(p for p in combinations(range(v), 2) if p not in seen)
        raise DesignError(f"uncovered pair {missing}")
    params = None
    n, rem = divmod(v, k)
    if rem == 0 and n > 1 and (n - 1) % (k - 1) == 0:
        params = ArcParams((n - 1) // (k - 1), k)
    elif strict:
        raise DesignError(f"2-({v},{k},1) is outside the (sk-s+1)k family: "
                          f"needs k | v and (k-1) | (v/k - 1)")
    D = SteinerDesign(v, k, blks, params)
    if params is not None:
        assert params.v == v and params.b == len(blks)
        assert params.r * (k - 1) == v - 1
    return D


@dataclass(frozen=True)
class Resolution:
    """Partition of a design's block indices into parallel classes.

    Each class is an ascending tuple of block indices; classes are ordered by
    their smallest block index.
    """

    classes: tuple[tuple[int, ...], ...]
    nblocks: int

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << i for i in c) for c in self.classes)

    @cached_property
    def class_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def canonical_classes(classes: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0] if c else -1))


def is_parallel_class(D: SteinerDesign, cls: Sequence[int]) -> bool:
    full = (1 << D.v) - 1
    acc = 0
    for i in cls:
        m = D.block_masks[i]
        if acc & m:
            return False
        acc |= m
    return acc == full


def make_resolution(D: SteinerDesign, classes: Iterable[Iterable[int]]) -> Resolution:
    cls = canonical_classes(classes)
    used = 0
    for c in cls:
        for i in c:
            if not 0 <= i < D.b:
                raise ResolutionError(f"block index {i} out of range")
        if not is_parallel_class(D, c):
            raise ResolutionError(f"class {c} is not a parallel class")
        m = sum(1 << i for i in c)
        if used & m:
            raise ResolutionError(f"class {c} reuses a block")
        used |= m
    if used != (1 << D.b) - 1:
        raise ResolutionError("classes do not cover every block")
    return Resolution(cls, D.b)


def classify_resolution_pair(R1: Resolution, R2: Resolution) -> str:
    """One of ``identical``, ``compatible``, ``orthogonal``, ``neither``.

    Compatible means exactly one cross pair of classes coincides while every
    other cross pair shares at most one block.
    """
    if R1.nblocks != R2.nblocks:
        raise ResolutionError("resolutions belong to designs of different sizes")
    if R1.class_set == R2.class_set:
        return "identical"
    equal = 0
    worst = 0
    for m1 in R1.class_masks:
        for m2 in R2.class_masks:
            if m1 == m2:
                equal += 1
            else:
                c = (m1 & m2).bit_count()
                if c > worst:
                    worst = c
    if worst > 1:
        return "neither"
    if equal == 0:
        return "orthogonal"
    if equal == 1:
        return "compatible"
    return "neither"


@dataclass(frozen=True)
class BlockGraph:
    adjacency: tuple[int, ...]
    degrees: tuple[int, ...]
    lambdas: frozenset[int]
    mus: frozenset[int]
    expected: tuple[int, int, int, int] | None

    @property
    def observed(self) -> tuple[int, int, int, int] | None:
        if len(set(self.degrees)) != 1 or len(self.lambdas) > 1 or len(self.mus) > 1:
            return None
        lam = next(iter(self.lambdas), 0)
        mu = next(iter(self.mus), 0)
        return (len(self.adjacency), self.degrees[0], lam, mu)

    @property
    def is_srg(self) -> bool:
        return self.observed is not None and self.observed == self.expected


def block_graph(D: SteinerDesign) -> BlockGraph:
    """Blocks adjacent iff they intersect; SRG parameters counted directly."""
    masks = D.block_masks
    b = len(masks)
    adj = []
    for i in range(b):
        row = 0
        for j in range(b):
            if i != j and masks[i] & masks[j]:
                row |= 1 << j
        adj.append(row)
    degrees = tuple(a.bit_count() for a in adj)
    lams, mus = set(), set()
    for i in range(b):
        for j in range(i + 1, b):
            common = (adj[i] & adj[j]).bit_count()
            (lams if adj[i] >> j & 1 else mus).add(common)
    expected = D.params.srg if D.params else None
    return BlockGraph(tuple(adj), degrees, frozenset(lams), frozenset(mus), expected)


@dataclass(frozen=True, eq=False)
class ArcDesign:
    """The design cut out of a plane by an arc, with its labelling.

    Design point ``i`` is plane point ``arc_points[i]``; design block ``j`` is
    the trace of plane line ``block_lines[j]``.
    """

    plane: ProjectivePlane
    arc: Arc
    design: SteinerDesign
    block_lines: tuple[int, ...]

    @cached_property
    def block_of_line(self) -> dict[int, int]:
        return {ln: j for j, ln in enumerate(self.block_lines)}

    @property
    def arc_points(self) -> tuple[int, ...]:
        return self.arc.points


def restrict_to_arc(P: ProjectivePlane, A: Arc) -> ArcDesign:
    label = {p: i for i, p in enumerate(A.points)}
    traced = []
    for j in A.secant_lines:
        traced.append((tuple(label[p] for p in P.lines[j] if p in label), j))
    traced.sort()
    D = validate_steiner(len(A.points), [t for t, _ in traced])
    if D.params != ArcParams(A.s, A.k):
        raise DesignError(f"induced design params {D.params} do not match arc (s={A.s}, k={A.k})")
    return ArcDesign(P, A, D, tuple(j for _, j in traced))


def _embedding(P: ProjectivePlane, A: Arc) -> ArcDesign:
    if A.plane is not P:
        raise ArcError("arc belongs to a different plane")
    return A.embedding


def parallel_class_from_point(P: ProjectivePlane, A: Arc, x: int) -> tuple[int, ...]:
    """Blocks cut by the secants through a point off the arc."""
    if x in A:
        raise ArcError(f"point {x} lies on the arc")
    emb = _embedding(P, A)
    cls = tuple(sorted(emb.block_of_line[j] for j in P.lines_through[x] if j in emb.block_of_line))
    if len(cls) != A.s * A.k - A.s + 1 or not is_parallel_class(emb.design, cls):
        raise ArcError(f"secants through {x} do not partition the arc")
    return cls


def resolution_from_exterior_line(P: ProjectivePlane, A: Arc, line: int) -> Resolution:
    if P.line_masks[line] & A.mask:
        raise ArcError(f"line {line} meets the arc")
    emb = _embedding(P, A)
    return make_resolution(emb.design, [parallel_class_from_point(P, A, x) for x in P.lines[line]])


def compatible_family_from_arc(P: ProjectivePlane, A: Arc) -> list[Resolution]:
    """One resolution per exterior line, in exterior-line order."""
    family = [resolution_from_exterior_line(P, A, j) for j in exterior_lines(P, A)]
    for R1, R2 in combinations(family, 2):
        verdict = classify_resolution_pair(R1, R2)
        if verdict != "compatible":
            raise ArcError(f"arc-induced resolutions classified {verdict}")
    return family
