"""Exact-cover enumeration of parallel classes and resolutions, and maximum
compatible families via branch-and-bound clique search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .design import (
    Resolution,
    SteinerDesign,
    classify_resolution_pair,
    make_resolution,
)


class BoundViolation(AssertionError):
    """A compatible family exceeded (sk-k+1)s; indicates a bug, never valid input."""


@dataclass(frozen=True)
class SearchBudget:
    max_solutions: int | None = None
    max_nodes: int | None = None

    def __post_init__(self):
        for name in ("max_solutions", "max_nodes"):
            val = getattr(self, name)
            if val is not None and val < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass
class SearchResult:
    items: list
    exhaustive: bool
    nodes: int


@dataclass
class CompatibleFamily:
    indices: list[int]
    resolutions: list[Resolution]
    optimal: bool
    nodes: int
    bound: int | None = None

    @property
    def size(self) -> int:
        return len(self.indices)


class _Stop(Exception):
    pass


@dataclass
class _Counter:
    budget: SearchBudget
    nodes: int = 0
    solutions: int = 0
    truncated: bool = field(default=False)

    def tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            self.truncated = True
            raise _Stop

    def found(self):
        self.solutions += 1
        if self.budget.max_solutions is not None and self.solutions >= self.budget.max_solutions:
            self.truncated = True
            raise _Stop


def _lowest_zero(mask: int) -> int:
    return (~mask & (mask + 1)).bit_length() - 1


def _exact_cover(universe: int, options: Sequence[int], covering: Sequence[Sequence[int]],
                 counter: _Counter, branching: str) -> list[list[int]]:
    """All subsets of ``options`` (bitmasks over the universe) partitioning it.

    ``covering[e]`` lists the option indices containing element ``e``.
    """
    out: list[list[int]] = []
    chosen: list[int] = []
    full = (1 << universe) - 1

    def pick(covered: int) -> list[int]:
        if branching == "lowest":
            e = _lowest_zero(covered)
            return [o for o in covering[e] if not options[o] & covered]
        best = None
        rest = full & ~covered
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            cands = [o for o in covering[e] if not options[o] & covered]
            if best is None or len(cands) < len(best):
                best = cands
                if len(best) <= 1:
                    break
        return best

    def rec(covered: int):
        counter.tick()
        if covered == full:
            out.append(sorted(chosen))
            counter.found()
            return
        for o in pick(covered):
            chosen.append(o)
            rec(covered | options[o])
            chosen.pop()

    try:
        if universe == 0:
            return [[]]
        rec(0)
    except _Stop:
        pass
    out.sort()
    return out


def enumerate_parallel_classes(D: SteinerDesign, budget: SearchBudget | None = None,
                               branching: str = "lowest") -> SearchResult:
    """Every set of pairwise disjoint blocks covering all points, sorted."""
    counter = _Counter(budget or SearchBudget())
    found = _exact_cover(D.v, D.block_masks, D.blocks_through, counter, branching)
    return SearchResult([tuple(c) for c in found], not counter.truncated, counter.nodes)


def enumerate_resolutions(D: SteinerDesign, budget: SearchBudget | None = None,
                          branching: str = "lowest") -> SearchResult:
    """Every partition of the blocks into parallel classes, sorted by class lists."""
    budget = budget or SearchBudget()
    counter = _Counter(SearchBudget(None, budget.max_nodes))
    classes = _exact_cover(D.v, D.block_masks, D.blocks_through, counter, branching)
    complete = not counter.truncated
    class_masks = [sum(1 << i for i in c) for c in classes]
    containing: list[list[int]] = [[] for _ in range(D.b)]
    for ci, c in enumerate(classes):
        for i in c:
            containing[i].append(ci)
    counter.budget = budget
    counter.truncated = False
    counter.solutions = 0
    covers = _exact_cover(D.b, class_masks, containing, counter, branching)
    complete = complete and not counter.truncated
    resolutions = sorted(
        (make_resolution(D, [classes[ci] for ci in cover]) for cover in covers),
        key=lambda R: R.classes,
    )
    return SearchResult(resolutions, complete, counter.nodes)


def compatibility_graph(resolutions: Sequence[Resolution]) -> list[int]:
    n = len(resolutions)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if classify_resolution_pair(resolutions[i], resolutions[j]) == "compatible":
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _color_sort(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; colors ascend along the order."""
    order, colors = [], []
    rest = cand
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low & ~adj[v]
            rest &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(adj: Sequence[int], budget: SearchBudget | None = None,
               cutoff: int | None = None) -> tuple[list[int], bool, int]:
    """Maximum clique by branch and bound with greedy coloring bounds.

    Stops early once a clique of size ``cutoff`` is found, which is then
    certified optimal.  A clique larger than ``cutoff`` raises BoundViolation.
    """
    counter = _Counter(budget or SearchBudget())
    best: list[int] = []

    def expand(clique: list[int], cand: int):
        nonlocal best
        counter.tick()
        order, colors = _color_sort(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colors[idx] <= len(best):
                return
            v = order[idx]
            clique.append(v)
            if cutoff is not None and len(clique) > cutoff:
                raise BoundViolation(f"clique {sorted(clique)} exceeds bound {cutoff}")
            new = cand & adj[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = sorted(clique)
                if cutoff is not None and len(best) == cutoff:
                    raise _Stop
            clique.pop()
            cand &= ~(1 << v)

    n = len(adj)
    try:
        if n:
            expand([], (1 << n) - 1)
        done = True
    except _Stop:
        done = not counter.truncated
    return best, done, counter.nodes


def max_compatible_set(D: SteinerDesign, resolutions: Sequence[Resolution],
                       budget: SearchBudget | None = None) -> CompatibleFamily:
    """Largest pairwise-compatible subfamily; the bound (sk-k+1)s prunes and certifies."""
    for R in resolutions:
        if R.nblocks != D.b:
            raise ValueError("resolution does not belong to this design")
    adj = compatibility_graph(resolutions)
    bound = D.params.m_max if D.params else None
    indices, optimal, nodes = max_clique(adj, budget, bound)
    family = [resolutions[i] for i in indices]
    if bound is not None and len(family) > bound:
        raise BoundViolation(f"family of {len(family)} exceeds {bound}")
    return CompatibleFamily(indices, family, optimal, nodes, bound)
