from itertools import combinations, product

import pytest

from arcres.design import (
    ArcParams,
    DesignError,
    Resolution,
    ResolutionError,
    block_graph,
    classify_resolution_pair,
    make_resolution,
    parallel_class_from_point,
    parameter_table,
    resolution_from_exterior_line,
    validate_steiner,
)
from arcres.geometry import ArcError, exterior_lines
from arcres.search import enumerate_resolutions

from conftest import AG23, arc, complete_graph, family


def test_validate_oval28(oval28):
    p = oval28.params
    assert (p.s, p.n, p.r, p.b, p.m_max) == (2, 7, 9, 63, 10)
    assert oval28.v == 28 and oval28.k == 4


def test_validate_affine_plane(ag23):
    assert ag23.params == ArcParams(1, 3)
    assert ag23.params.boundary


def test_validate_errors(oval28):
    with pytest.raises(DesignError, match="uncovered"):
        validate_steiner(28, oval28.blocks[1:])
    with pytest.raises(DesignError, match="ragged"):
        validate_steiner(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3, 0)])
    with pytest.raises(DesignError, match="covered by"):
        validate_steiner(4, complete_graph(4) + [(0, 1)])
    with pytest.raises(DesignError, match="outside"):
        validate_steiner(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])


def test_validate_canonicalizes():
    D = validate_steiner(4, [(3, 2), (1, 0), (3, 0), (2, 1), (2, 0), (3, 1)])
    assert D.blocks == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_parameter_table_examples():
    p = parameter_table(2, 4)
    assert (p.v, p.r, p.b, p.m_max, p.b_I_max, p.srg) == (28, 9, 63, 10, 45, (63, 32, 16, 16))
    p = parameter_table(1, 3)
    # (sk-k+1)s = 1 for affine planes: the single resolution
    assert (p.v, p.r, p.b, p.m_max) == (9, 4, 12, 1)
    p = parameter_table(2, 2)
    assert (p.v, p.r, p.b, p.m_max) == (6, 5, 15, 6)
    with pytest.raises(DesignError):
        parameter_table(0, 3)


@pytest.mark.parametrize("s, k", list(product(range(1, 9), range(2, 9))))
def test_parameter_identities(s, k):
    p = parameter_table(s, k)
    b, a, lam, mu = p.srg
    assert p.r * (k - 1) == p.v - 1
    assert p.b * k == p.v * p.r
    assert p.n - 1 == s * (k - 1)
    assert a == k * (p.r - 1)
    assert lam == (p.r - 2) + (k - 1) ** 2
    assert a * (a - lam - 1) == p.complement_degree * mu
    assert p.complement_degree == s * s * k * k + 2 * s * k - s * s * k - k * k * s - s
    assert p.disjoint_per_block == b - 1 - a
    assert p.v + p.b_I_max == p.plane_points


def test_block_graph_oval28(oval28):
    g = block_graph(oval28)
    assert g.observed == (63, 32, 16, 16) and g.is_srg


def test_block_graph_k6(k6):
    g = block_graph(k6)
    assert g.observed == (15, 8, 4, 4) and g.is_srg


def test_block_graph_ag23(ag23):
    g = block_graph(ag23)
    assert set(g.degrees) == {9}
    assert g.is_srg


def test_classify_examples(k6, ag23):
    sols = enumerate_resolutions(k6).items
    R = sols[0]
    assert classify_resolution_pair(R, R) == "identical"
    for a, b in combinations(sols, 2):
        assert classify_resolution_pair(a, b) == "compatible"
    (only,) = enumerate_resolutions(ag23).items
    assert classify_resolution_pair(only, only) == "identical"


def test_classify_synthetic():
    R1 = Resolution(((0, 1), (2, 3)), 4)
    R2 = Resolution(((0, 2), (1, 3)), 4)
    assert classify_resolution_pair(R1, R2) == "orthogonal"
    R1 = Resolution(((0, 1, 2), (3, 4, 5)), 6)
    R2 = Resolution(((0, 1, 3), (2, 4, 5)), 6)
    assert classify_resolution_pair(R1, R2) == "neither"
    R1 = Resolution(((0, 1), (2, 3), (4, 5), (6, 7)), 8)
    R2 = Resolution(((0, 1), (2, 3), (4, 6), (5, 7)), 8)
    assert classify_resolution_pair(R1, R2) == "neither"
    R1 = Resolution(((0, 1), (2, 3, 4), (5, 6, 7)), 8)
    R2 = Resolution(((0, 1), (2, 3, 5), (4, 6, 7)), 8)
    assert classify_resolution_pair(R1, R2) == "neither"
    with pytest.raises(ResolutionError):
        classify_resolution_pair(R1, Resolution(((0, 1),), 2))


def test_make_resolution_errors(k4):
    with pytest.raises(ResolutionError):
        make_resolution(k4, [(0, 5), (1, 4)])
    with pytest.raises(ResolutionError):
        make_resolution(k4, [(0, 1), (1, 4), (2, 3)])
    R = make_resolution(k4, [(2, 3), (1, 4), (0, 5)])
    assert R.classes == ((0, 5), (1, 4), (2, 3))


@pytest.mark.parametrize("q, k, n", [(8, 4, 7), (4, 2, 3), (16, 4, 13)])
def test_parallel_class_from_point(q, k, n):
    A = arc(q, k)
    D = A.embedding.design
    x = next(p for p in range(A.plane.npoints) if p not in A)
    cls = parallel_class_from_point(A.plane, A, x)
    assert len(cls) == n
    covered = sorted(p for i in cls for p in D.blocks[i])
    assert covered == list(range(D.v))
    with pytest.raises(ArcError):
        parallel_class_from_point(A.plane, A, A.points[0])


@pytest.mark.parametrize("q, k, r, n", [(8, 4, 9, 7), (4, 2, 5, 3), (16, 8, 17, 15)])
def test_resolution_from_exterior_line(q, k, r, n):
    A = arc(q, k)
    ext = exterior_lines(A.plane, A)
    R = resolution_from_exterior_line(A.plane, A, ext[0])
    assert len(R.classes) == r and {len(c) for c in R.classes} == {n}
    with pytest.raises(ArcError):
        resolution_from_exterior_line(A.plane, A, A.secant_lines[0])


@pytest.mark.parametrize("q, k", [(4, 2), (8, 4), (8, 2), (16, 8), (16, 4), (4, 4), (8, 8)])
def test_family_invariants(q, k):
    fam = family(q, k)
    p = arc(q, k).embedding.design.params
    assert len(fam) == p.m_max
    for a, b in combinations(fam, 2):
        assert classify_resolution_pair(a, b) == "compatible"
    holders = {}
    for R in fam:
        for c in R.classes:
            holders[c] = holders.get(c, 0) + 1
    assert len(holders) == p.b_I_max
    if len(fam) > 1:
        assert set(holders.values()) == {p.s}
    per_block = [0] * p.b
    for c in holders:
        for i in c:
            per_block[i] += 1
    assert set(per_block) == {p.q - p.k + 1}


def test_classes_are_block_graph_cocliques(oval28):
    g = block_graph(oval28)
    for R in family(8, 4)[:3]:
        for c in R.classes:
            assert len(c) == oval28.params.n
            for i, j in combinations(c, 2):
                assert not g.adjacency[i] >> j & 1
