"""p-rank of incidence matrices and the 2-rank test for oval-design parameters."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .design import Resolution, SteinerDesign
from .gf import FieldError, field_create, is_prime
from .reconstruct import ReconstructionError, reconstruct_plane
from .search import SearchBudget, enumerate_resolutions, max_compatible_set

log = logging.getLogger(__name__)


def incidence_matrix(D: SteinerDesign) -> np.ndarray:
    """Point-by-block 0/1 matrix."""
    A = np.zeros((D.v, D.b), dtype=np.uint8)
    for j, blk in enumerate(D.blocks):
        A[list(blk), j] = 1
    return A


def pack_rows(A: np.ndarray) -> list[int]:
    packed = np.packbits(A.astype(np.uint8) & 1, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of bit-packed rows over GF(2), keeping one basis row per leading bit."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                break
    return len(basis)


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    F = field_create(prime=p)
    M = [[int(x) % p for x in row] for row in A]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [F.mul(x, inv) for x in M[rank]]
        for i in range(nrows):
            if i != rank and M[i][col]:
                f = M[i][col]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def p_rank(matrix, p: int) -> int:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    A = np.asarray(matrix)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if A.size == 0:
        return 0
    if p == 2:
        return gf2_rank(pack_rows(A))
    return _rank_mod_p(A, p)


@dataclass
class RankReport:
    rows: int
    cols: int
    p: int
    rank: int
    conjecture_bound: int | None
    verdict: str  # below-bound | at-bound | above-bound | not-applicable
    t: int | None = None
    embedding: dict | None = None
    matrix: list[str] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["matrix"] is None:
            del d["matrix"]
        return d


def oval_exponent(D: SteinerDesign) -> int | None:
    """t with D a 2-(2^(2t-1) - 2^(t-1), 2^(t-1), 1) design, if any."""
    p = D.params
    if p is None or p.s != 2 or p.k & (p.k - 1):
        return None
    t = p.k.bit_length()
    return t if t >= 2 else None


def embeddability(D: SteinerDesign, family: Sequence[Resolution] | None = None,
                  budget: SearchBudget | None = None) -> dict:
    """Look for m_max compatible resolutions and rebuild the plane from them."""
    out: dict = {"m_max": D.params.m_max}
    if family is None:
        found = enumerate_resolutions(D, budget)
        pool = found.items
        out["resolutions_searched"] = len(pool)
        out["search_exhaustive"] = found.exhaustive
    else:
        pool = list(family)
        out["resolutions_searched"] = len(pool)
        out["search_exhaustive"] = False
    best = max_compatible_set(D, pool, budget)
    out["family_size"] = best.size
    out["optimal"] = best.optimal
    out["plane_order"] = None
    if best.size == D.params.m_max:
        try:
            out["plane_order"] = reconstruct_plane(D, best.resolutions).plane.order
        except ReconstructionError as exc:
            out["error"] = str(exc)
    return out


def conjecture_check(D: SteinerDesign, family: Sequence[Resolution] | None = None,
                     cross_check: bool = True, budget: SearchBudget | None = None) -> RankReport:
    A = incidence_matrix(D)
    rank = p_rank(A, 2)
    t = oval_exponent(D)
    if t is None:
        return RankReport(D.v, D.b, 2, rank, None, "not-applicable")
    bound = 3 ** t - 2 ** t
    if rank < bound:
        verdict = "below-bound"
    elif rank == bound:
        verdict = "at-bound"
    else:
        verdict = "above-bound"
    report = RankReport(D.v, D.b, 2, rank, bound, verdict, t)
    if verdict == "below-bound":
        log.warning("2-rank %d below 3^%d - 2^%d = %d: counterexample candidate, matrix attached",
                    rank, t, t, bound)
        report.matrix = ["".join(str(int(x)) for x in row) for row in A]
    if verdict == "at-bound" and cross_check:
        report.embedding = embeddability(D, family, budget)
    return report
