"""Residual codes and residual chains.

The residual of an [n, k, d] code is its restriction to the complement of the
support of a minimum-weight codeword; it has parameters
[n - d, k - 1, d' >= ceil(d/q)].  Iterating the construction down to
dimension 0 produces a nested chain of coordinate sets whose entropies step
down by exactly 1 — the engine behind the locality bounds in `bounds` and
the set constructions in `set_builder`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code_core import (
    CoordSet,
    LinearCode,
    min_distance,
    min_weight_codeword,
    restrict,
)


def residual(code: LinearCode):
    """One residual step: (kept coordinate set, restricted code).

    The kept set is the complement of the support of the chosen
    minimum-weight codeword (lexicographically smallest message among the
    weight-d codewords, so the result is deterministic).  When the support is
    everything — e.g. a repetition code — the kept set is empty and the code
    part is None.
    """
    if code.k == 0:
        raise ValueError("residual of a zero-dimensional code")
    _, _, support = min_weight_codeword(code)
    kept = frozenset(range(code.n)) - support
    if not kept:
        return kept, None
    return kept, restrict(code, kept)


@dataclass(frozen=True)
class ChainLevel:
    """One set in a residual chain, with its exact restricted parameters."""

    coords: CoordSet
    entropy: int
    distance: int | None  # exact d of the restriction; None when entropy is 0


@dataclass(frozen=True)
class ResChain:
    """Nested sets [n] = S_0 > S_1 > ... > S_k with H(S_i) = k - i."""

    levels: tuple[ChainLevel, ...]

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def level_with_entropy(self, alpha: int) -> ChainLevel:
        for lv in self.levels:
            if lv.entropy == alpha:
                return lv
        raise KeyError(f"no chain level with entropy {alpha}")


def res_chain(code: LinearCode) -> ResChain:
    """The full residual chain of a code, as subsets of its own [n].

    The chain has k + 1 levels; every entropy value in [0, k] appears exactly
    once.  Coordinates are reported in the ambient indexing of `code` even
    though each step restricts further.
    """
    if code.k == 0:
        raise ValueError("res-chain of a zero-dimensional code")
    levels = [ChainLevel(frozenset(range(code.n)), code.k, min_distance(code))]
    cur = code
    cur_map = list(range(code.n))
    while cur is not None and cur.k > 0:
        kept_rel, sub = residual(cur)
        kept_sorted = sorted(kept_rel)
        coords = frozenset(cur_map[j] for j in kept_sorted)
        cur_map = [cur_map[j] for j in kept_sorted]
        ent = 0 if sub is None else sub.k
        if ent != cur.k - 1:
            raise RuntimeError(
                f"residual dropped dimension from {cur.k} to {ent}; expected a drop of 1"
            )
        dist = min_distance(sub) if (sub is not None and sub.k > 0) else None
        levels.append(ChainLevel(coords, ent, dist))
        cur = sub
    return ResChain(tuple(levels))
