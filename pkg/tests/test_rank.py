from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcres.design import validate_steiner
from arcres.gf import FieldError
from arcres.rank import conjecture_check, gf2_rank, incidence_matrix, p_rank

from conftest import FANO, arc, complete_graph, family


def brute_rank(A, p):
    """log_p of the size of the row space, by enumerating all combinations."""
    A = np.asarray(A, dtype=np.int64) % p
    span = set()
    for coeffs in product(range(p), repeat=A.shape[0]):
        span.add(tuple((np.asarray(coeffs) @ A) % p))
    r = 0
    while p ** r < len(span):
        r += 1
    assert p ** r == len(span)
    return r


def test_identity():
    assert p_rank(np.eye(5, dtype=int), 2) == 5


def test_fano():
    A = incidence_matrix(validate_steiner(7, FANO, strict=False))
    assert brute_rank(A, 2) == 4
    assert p_rank(A, 2) == 4
    assert p_rank(A, 3) == brute_rank(A, 3)


def test_oval28():
    D = arc(8, 4).embedding.design
    A = incidence_matrix(D)
    assert A.shape == (28, 63)
    assert p_rank(A, 2) == 19
    assert p_rank(A.T, 2) == 19


def test_non_prime():
    with pytest.raises(FieldError):
        p_rank(np.eye(2, dtype=int), 4)


def test_gf2_rank_packed():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 6), st.integers(1, 8), st.data())
def test_rank_matches_brute_force(p, rows, cols, data):
    if p ** rows > 4000:
        rows = 4
    bits = data.draw(st.lists(st.integers(0, 1), min_size=rows * cols, max_size=rows * cols))
    A = np.array(bits).reshape(rows, cols)
    r = p_rank(A, p)
    assert r == brute_rank(A, p)
    assert r == p_rank(A.T, p)
    assert 0 <= r <= min(rows, cols)


@pytest.mark.parametrize("q, k", [(4, 2), (8, 4), (16, 8), (16, 4)])
@pytest.mark.parametrize("seed", range(3))
def test_permutation_invariance(q, k, seed):
    A = incidence_matrix(arc(q, k).embedding.design)
    rng = np.random.default_rng(seed)
    B = A[rng.permutation(A.shape[0])][:, rng.permutation(A.shape[1])]
    assert p_rank(A, 2) == p_rank(B, 2) == p_rank(A.T, 2)


def test_conjecture_oval28():
    rep = conjecture_check(arc(8, 4).embedding.design, family=family(8, 4))
    assert (rep.rank, rep.conjecture_bound, rep.verdict) == (19, 19, "at-bound")
    assert rep.embedding["plane_order"] == 8


def test_conjecture_k6(k6):
    rep = conjecture_check(k6)
    assert (rep.rank, rep.conjecture_bound, rep.verdict, rep.t) == (5, 5, "at-bound", 2)
    assert rep.embedding["search_exhaustive"] and rep.embedding["plane_order"] == 4


def test_conjecture_t4_oval():
    rep = conjecture_check(arc(16, 8).embedding.design, cross_check=False)
    assert (rep.rows, rep.cols, rep.rank, rep.conjecture_bound) == (120, 255, 65, 65)


def test_not_applicable(ag23):
    rep = conjecture_check(ag23)
    assert rep.verdict == "not-applicable" and rep.conjecture_bound is None
    rep = conjecture_check(arc(16, 4).embedding.design)
    assert rep.verdict == "not-applicable"


@pytest.mark.parametrize("t", [2, 3, 4])
def test_oval_rank_upper_bound(t):
    q = 1 << t
    D = arc(q, q // 2).embedding.design
    assert p_rank(incidence_matrix(D), 2) <= 3 ** t - 2 ** t
    D = arc(q, 2, "hyperoval").embedding.design
    # hyperoval designs are complete graphs; only the t=2 one is an oval design
    assert validate_steiner(q + 2, complete_graph(q + 2)).blocks == D.blocks


def test_below_bound_dumps_matrix(monkeypatch, caplog, k6):
    import arcres.rank as rank_mod
    monkeypatch.setattr(rank_mod, "p_rank", lambda A, p: 4)
    rep = rank_mod.conjecture_check(k6)
    assert rep.verdict == "below-bound"
    assert len(rep.matrix) == 6 and all(len(row) == 15 for row in rep.matrix)
    assert "counterexample" in caplog.text
