"""Locality detection for linear codes.

Two notions are computed side by side, both certified by exact restricted
distances (brute force, never estimated):

  * size locality (r, delta): every coordinate lies in a repair set of size
    at most r + delta - 1 whose restriction has distance >= delta;
  * dimension locality (kappa, delta): same, but the restriction's dimension
    (entropy) is at most kappa — the number of symbols actually contacted
    during a local repair.

`compute_locality` searches subsets exhaustively up to a size cap and
returns the minimal feasible r and kappa with per-coordinate witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code_core import (
    CoordSet,
    LinearCode,
    codeword_matrix,
    min_distance,
    restrict,
)

SEARCH_WORD_CAP = 1 << 16


@dataclass(frozen=True)
class RepairSetCheck:
    """Exact verification record for one candidate repair set."""

    coords: tuple[int, ...]
    size: int
    entropy: int
    distance: int | None
    valid: bool
    reason: str = ""


def verify_repair_set(code: LinearCode, R, delta: int) -> RepairSetCheck:
    """Check a candidate repair set against a target local distance delta."""
    coords = tuple(sorted(set(int(i) for i in R)))
    if not coords:
        raise ValueError("repair set must be nonempty")
    sub = restrict(code, coords)
    if sub.k == 0:
        return RepairSetCheck(coords, len(coords), 0, None, False,
                              "zero-dimensional restriction")
    dist = min_distance(sub)
    if dist >= delta:
        return RepairSetCheck(coords, len(coords), sub.k, dist, True)
    return RepairSetCheck(coords, len(coords), sub.k, dist, False,
                          f"restricted distance {dist} < delta = {delta}")


@dataclass(frozen=True)
class LocalityProfile:
    """Locality certificates for one code at one target delta.

    r and kappa are the minimal feasible values under the size cap (None when
    some coordinate has no repair set within the cap; `infeasible` names the
    offending coordinates).  Witnesses map each coordinate to one optimal
    repair set per objective, ties broken to the lexicographically smallest
    index set.
    """

    delta: int
    size_cap: int
    cap_active: bool
    r: int | None
    kappa: int | None
    size_witness: dict
    entropy_witness: dict
    infeasible: tuple[int, ...] = ()

    @property
    def feasible(self) -> bool:
        return not self.infeasible

    def witness_sets(self) -> tuple[CoordSet, ...]:
        """Distinct dimension-locality witnesses, lexicographically ordered."""
        unique = {tuple(sorted(s)) for s in self.entropy_witness.values()}
        return tuple(frozenset(t) for t in sorted(unique))


def _scan_repair_sets(code: LinearCode, delta: int, cap: int):
    """One exhaustive pass over subsets of [n] with size <= cap.

    For every coordinate i, tracks the valid repair set minimizing
    (size, lex) and the one minimizing (entropy, lex).  Validity and entropy
    come from the precomputed codeword table: on a subset S, the number of
    codewords vanishing on S is q^(k - H(S)), and the minimum nonzero
    restricted weight is the exact distance of the restriction.
    """
    n, k, q = code.n, code.k, code.q
    nz = codeword_matrix(code, max_words=SEARCH_WORD_CAP) != 0
    col_weight = [np.ascontiguousarray(nz[:, j], dtype=np.int32) for j in range(n)]
    entropy_of_zero_count = {q**j: k - j for j in range(k + 1)}

    best_size: list = [None] * n
    best_ent: list = [None] * n
    w = np.zeros(q**k, dtype=np.int32)
    stack: list[int] = []

    def dfs(start: int) -> None:
        nonlocal w
        for j in range(start, n):
            w += col_weight[j]
            stack.append(j)
            if len(stack) >= delta:
                zeros = int(np.count_nonzero(w == 0))
                h = entropy_of_zero_count[zeros]
                if h > 0:
                    dmin = int(w[w != 0].min())
                    if dmin >= delta:
                        tup = tuple(stack)
                        size_key = (len(tup), tup)
                        ent_key = (h, tup)
                        for i in tup:
                            if best_size[i] is None or size_key < best_size[i]:
                                best_size[i] = size_key
                            if best_ent[i] is None or ent_key < best_ent[i]:
                                best_ent[i] = ent_key
            if len(stack) < cap:
                dfs(j + 1)
            stack.pop()
            w -= col_weight[j]

    dfs(0)
    return best_size, best_ent


def compute_locality(code: LinearCode, delta: int, size_cap: int | None = None) -> LocalityProfile:
    """Minimal (r, delta) and (kappa, delta) locality with exact witnesses.

    The default cap min(n, delta + k) keeps the search at desk scale; pass
    size_cap explicitly (up to n) when repair sets larger than delta + k may
    be needed — the profile records whether the cap was binding.
    """
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    if code.k == 0:
        raise ValueError("locality of a zero-dimensional code")
    cap = min(code.n, delta + code.k) if size_cap is None else int(size_cap)
    if not 1 <= cap <= code.n:
        raise ValueError(f"size cap {cap} outside [1, {code.n}]")
    if code.q**code.k > SEARCH_WORD_CAP:
        raise ValueError(
            f"locality search enumerates q^k = {code.q**code.k} codewords, above "
            f"the cap {SEARCH_WORD_CAP}"
        )

    best_size, best_ent = _scan_repair_sets(code, delta, cap)
    infeasible = tuple(i for i in range(code.n) if best_size[i] is None)
    if infeasible:
        return LocalityProfile(
            delta=delta, size_cap=cap, cap_active=cap < code.n,
            r=None, kappa=None, size_witness={}, entropy_witness={},
            infeasible=infeasible,
        )
    r = max(bs[0] for bs in best_size) - delta + 1
    kappa = max(be[0] for be in best_ent)
    return LocalityProfile(
        delta=delta, size_cap=cap, cap_active=cap < code.n,
        r=r, kappa=kappa,
        size_witness={i: frozenset(bs[1]) for i, bs in enumerate(best_size)},
        entropy_witness={i: frozenset(be[1]) for i, be in enumerate(best_ent)},
    )


def profile_from_repair_sets(code: LinearCode, repair_sets, delta: int) -> LocalityProfile:
    """Locality profile certified by declared repair sets.

    Every set must verify at delta and every coordinate must be covered;
    each coordinate is assigned the first declared set containing it.
    r and kappa are computed from the assigned sets (they are certificates,
    not necessarily minimal).
    """
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    sets = [frozenset(int(i) for i in s) for s in repair_sets]
    checks = []
    for idx, s in enumerate(sets):
        chk = verify_repair_set(code, s, delta)
        if not chk.valid:
            raise ValueError(f"declared repair set #{idx + 1} {sorted(s)} is invalid: {chk.reason}")
        checks.append(chk)
    size_witness = {}
    entropy_witness = {}
    ent_of = {}
    for i in range(code.n):
        hit = next((j for j, s in enumerate(sets) if i in s), None)
        if hit is None:
            raise ValueError(f"coordinate {i} is not covered by any declared repair set")
        size_witness[i] = sets[hit]
        entropy_witness[i] = sets[hit]
        ent_of[i] = checks[hit].entropy
    r = max(len(size_witness[i]) for i in range(code.n)) - delta + 1
    kappa = max(ent_of.values())
    return LocalityProfile(
        delta=delta, size_cap=code.n, cap_active=False,
        r=r, kappa=kappa,
        size_witness=size_witness, entropy_witness=entropy_witness,
    )


@dataclass(frozen=True)
class SimplexLocality:
    r: int
    delta_local: int


def simplex_locality(m: int, q: int, kappa: int) -> SimplexLocality:
    """Closed-form locality of the Simplex code S(m, q) at local dimension kappa.

    For 2 <= kappa <= m the repair sets are embedded S(kappa, q) supports:
    local distance q^(kappa - 1) and r = (q^(kappa-1) + q - 2)/(q - 1).
    """
    if not 2 <= kappa <= m:
        raise ValueError(f"kappa must satisfy 2 <= kappa <= m = {m}, got {kappa}")
    delta_local = q ** (kappa - 1)
    num = q ** (kappa - 1) + q - 2
    if num % (q - 1):
        raise AssertionError("simplex locality numerator not divisible by q - 1")
    return SimplexLocality(r=num // (q - 1), delta_local=delta_local)
