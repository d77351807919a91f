"""Multi-index combinatorics: rank permutations, orders, graded index sets.

Vectors are plain int tuples.  Compositions live in N_0^N; the graded sets
Z(N, n) collect the integer vectors summing to zero with |entries| summing
to 2n, the index grid of the torus measure's matrix Fourier coefficients.
"""

from __future__ import annotations

from itertools import accumulate
from math import comb

from . import perms
from .errors import BadSupport, NegativeEntry, NotGraded
from .perms import Perm

Vec = tuple[int, ...]


def rank_perm(alpha: Vec) -> Perm:
    """r(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}; sorts alpha to alpha+."""
    if any(a < 0 for a in alpha):
        raise NegativeEntry(f"{alpha}")
    return tuple(
        sum(1 for a in alpha if a > alpha[i])
        + sum(1 for j in range(i + 1) if alpha[j] == alpha[i])
        for i in range(len(alpha))
    )


def sort_desc(alpha: Vec) -> Vec:
    return tuple(sorted(alpha, reverse=True))


def phi(alpha: Vec) -> Vec:
    """Affine rotation (a_1, ..., a_N) -> (a_2, ..., a_N, a_1 + 1)."""
    return alpha[1:] + (alpha[0] + 1,)


def phi_inverse(alpha: Vec) -> Vec:
    return (alpha[-1] - 1,) + alpha[:-1]


def dominance_lt(alpha: Vec, beta: Vec) -> bool:
    """Partial-sum comparison: every prefix sum of alpha <= that of beta, alpha != beta."""
    if alpha == beta:
        return False
    return all(a <= b for a, b in zip(accumulate(alpha), accumulate(beta)))


def triangular_lt(alpha: Vec, beta: Vec) -> bool:
    """The strict triangular order used by the leading-term structure."""
    if sum(alpha) != sum(beta) or alpha == beta:
        return False
    ap, bp = sort_desc(alpha), sort_desc(beta)
    if ap == bp:
        return dominance_lt(alpha, beta)
    return dominance_lt(ap, bp)


def prefix_key(alpha: Vec) -> Vec:
    """Prefix-sum tuple; its lexicographic order linearly extends dominance."""
    return tuple(accumulate(alpha))


def steps_count(alpha: Vec) -> int:
    """Number of adjacent-swap edges needed above the jump skeleton."""
    if any(a < 0 for a in alpha):
        raise NegativeEntry(f"{alpha}")
    total = 0
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            d = alpha[i] - alpha[j]
            total += abs(d) + abs(d + 1) - 1
    assert total % 2 == 0
    return total // 2


def split_pi_nu(gamma: Vec) -> tuple[Vec, Vec]:
    """gamma = pi - nu with pi = max(gamma, 0) and nu = -min(gamma, 0) entrywise."""
    pi = tuple(max(g, 0) for g in gamma)
    nu = tuple(-min(g, 0) for g in gamma)
    return pi, nu


def grade(gamma: Vec) -> int:
    if sum(gamma) != 0:
        raise NotGraded(f"{gamma} does not sum to zero")
    total = sum(abs(g) for g in gamma)
    return total // 2


def count_Z(N: int, n: int) -> int:
    """Size of the grade-n graded component, by the subset-composition count."""
    if n == 0:
        return 1
    return sum(
        comb(N, j) * comb(n - 1, j - 1) * comb(N - j + n - 1, n)
        for j in range(1, N)
    )


def _compositions(total: int, parts: int, minimum: int):
    """All vectors of `parts` entries >= minimum summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first, *rest)


def enumerate_Z(N: int, n: int) -> list[Vec]:
    """All integer vectors with zero sum and absolute sum 2n, lexicographically."""
    if n == 0:
        return [(0,) * N]
    out: list[Vec] = []
    for mask in range(1, 2**N - 1):
        pos = [i for i in range(N) if mask & (1 << i)]
        neg = [i for i in range(N) if not mask & (1 << i)]
        if len(pos) > n:
            continue
        for pvals in _compositions(n, len(pos), 1):
            for nvals in _compositions(n, len(neg), 0):
                gamma = [0] * N
                for i, v in zip(pos, pvals):
                    gamma[i] = v
                for i, v in zip(neg, nvals):
                    gamma[i] = -v
                out.append(tuple(gamma))
    out.sort()
    return out


def canonicalize(gamma: Vec) -> tuple[Vec, Perm]:
    """Non-increasing representative and the stable sorting permutation w.

    w carries gamma onto the representative: perms.act(w, gamma) == canonical,
    with ties broken by original position so w is deterministic.
    """
    if sum(gamma) != 0:
        raise NotGraded(f"{gamma} does not sum to zero")
    n = len(gamma)
    order = sorted(range(n), key=lambda k: (-gamma[k], k))
    canonical = tuple(gamma[k] for k in order)
    w = [0] * n
    for new_pos, old_pos in enumerate(order):
        w[old_pos] = new_pos + 1
    return canonical, tuple(w)


def minimal_gamma(nu: Vec, k: int) -> Vec:
    """Triangular-minimal vector among those with fixed negative part nu.

    nu must vanish exactly on positions 1..k and be positive afterwards;
    the positive part spreads n = |nu| as evenly as possible over 1..k.
    """
    n = sum(nu)
    N = len(nu)
    if k < 1 or k >= N:
        raise BadSupport(f"k={k} out of range for N={N}")
    if any(nu[i] != 0 for i in range(k)) or any(nu[i] <= 0 for i in range(k, N)):
        raise BadSupport(f"{nu} must vanish exactly on positions 1..{k}")
    p, m = divmod(n, k)
    head = [p + 1] * m + [p] * (k - m)
    return tuple(head) + tuple(-nu[i] for i in range(k, N))
