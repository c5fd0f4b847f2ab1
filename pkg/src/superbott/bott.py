"""Borel-Weil-Bott for two-block homogeneous bundles on Grassmannians."""

from __future__ import annotations

from typing import Dict, NamedTuple, Optional, Tuple

from .characters import GLWeight, GradedCharacter, external_product


def rho(m: int) -> GLWeight:
    """The strictly decreasing shift (m-1, m-2, ..., 1, 0)."""
    return tuple(range(m - 1, -1, -1))


class LeviWeight(NamedTuple):
    """Blockwise-dominant weight for a two-block Levi of GL(m)."""

    q_block: GLWeight
    r_block: GLWeight


def bott(gamma: GLWeight) -> Optional[Tuple[int, GLWeight]]:
    """Run the Bott algorithm on an integer weight of length m.

    Returns None when gamma + rho has a repeated entry (all cohomology
    vanishes), otherwise the unique (degree, dominant weight) pair. The
    degree is the number of inversions needed to sort gamma + rho.
    """
    m = len(gamma)
    v = [g + r for g, r in zip(gamma, rho(m))]
    if len(set(v)) < m:
        return None
    inversions = sum(1 for i in range(m) for j in range(i + 1, m) if v[i] < v[j])
    w = tuple(x - r for x, r in zip(sorted(v, reverse=True), rho(m)))
    return inversions, w


def levi_to_full(w: LeviWeight, p: int, m: int) -> GLWeight:
    """Concatenate the quotient block (length m-p) and sub block (length p)."""
    if len(w.q_block) != m - p or len(w.r_block) != p:
        raise ValueError(
            f"block lengths {len(w.q_block)},{len(w.r_block)} do not match ranks {m - p},{p}"
        )
    return tuple(w.q_block) + tuple(w.r_block)


def grassmannian_cohomology(p: int, m: int, terms: Dict[LeviWeight, int]) -> GradedCharacter:
    """Cohomology on Gr(p, C^m) of a sum of irreducible homogeneous bundles."""
    gc = GradedCharacter(m, 0)
    for lw, mult in terms.items():
        res = bott(levi_to_full(lw, p, m))
        if res is not None:
            degree, w = res
            gc.add_term(degree, (w, ()), mult)
    return gc


def kunneth(a: GradedCharacter, b: GradedCharacter) -> GradedCharacter:
    """Degree-wise convolution of a GL(m) and a GL(n) graded character."""
    out = GradedCharacter(a.m, b.m)
    for i, ca in a.by_degree.items():
        for j, cb in b.by_degree.items():
            out.add_char(i + j, external_product(ca, cb))
    return out
