"""The torus Hermitian form: closed-form norms and exact pairing of polynomials.

Closed forms give the squared norms of the Jack basis directly; arbitrary
vector-valued Laurent polynomials are paired through the coefficient store,
term pair by term pair, using the exact pairing matrices G.  Coordinate
multiplication is an isometry of this form, so Laurent inputs are first
normalized by a common power of x_1 ... x_N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import compositions
from .coeffs import CoeffStore
from .compositions import Vec
from .errors import SpectralCollision
from .scalars import KappaParam
from .tableaux import RSYT, Partition, norm0
from .ybgraph import NsjpGraph


def pochhammer(t: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= t + i
    return out


def norm_partition(lam, t: RSYT, kappa: KappaParam) -> Fraction:
    """Squared torus norm of the Jack polynomial at a partition label.

    <T,T>_0 * prod_{i<j} prod_{l=1}^{lam_i - lam_j}
        (1 - (k / (l + k(c(i,T) - c(j,T))))^2).
    """
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    kap = kappa.value
    c = t.content
    out = norm0(t)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            dc = c[i] - c[j]
            for ell in range(1, lam[i] - lam[j] + 1):
                den = ell + kap * dc
                if den == 0:
                    raise SpectralCollision(
                        f"norm factor pole at l={ell}, content gap {dc}"
                    )
                out *= 1 - (kap / den) ** 2
    return out


def e_factor(alpha, t: RSYT, eps: int, kappa: KappaParam) -> Fraction:
    """Correction factor accumulated by sorting alpha, for eps = +1 or -1.

    May legitimately vanish on the closed boundary |kappa| = 1/h of the
    positivity window (a zero factor marks a zero-norm partition label).
    """
    alpha = tuple(alpha)
    r = compositions.rank_perm(alpha)
    kap = kappa.value
    c = t.content
    out = Fraction(1)
    for i in range(len(alpha)):
        for j in range(i + 1, len(alpha)):
            if alpha[i] < alpha[j]:
                den = alpha[j] - alpha[i] + kap * (c[r[j] - 1] - c[r[i] - 1])
                if den == 0:
                    raise SpectralCollision(f"degenerate inverted pair ({i + 1},{j + 1})")
                out *= 1 + eps * kap / den
    return out


def covariant_norm(lam, t: RSYT, kappa: KappaParam) -> Fraction:
    """Norm for the companion form in which x_i is adjoint to the Dunkl operator."""
    lam = tuple(lam)
    out = norm_partition(lam, t, kappa)
    for i in range(len(lam)):
        out *= pochhammer(1 + kappa.value * t.content[i], lam[i])
    return out


def nsjp_norm(alpha, t: RSYT, kappa: KappaParam) -> Fraction:
    """Squared torus norm at an arbitrary composition label.

    Equal to norm_partition(alpha+, T) / (E_1 E_-1) wherever the E-product
    is nonzero, but computed with the common factors cancelled exactly: each
    inverted pair of alpha strikes the top factor of the matching rank pair
    in the partition product.  That keeps the value finite on the closed
    boundary of the positivity window, where both sides of the quotient
    acquire the same zero.
    """
    alpha = tuple(alpha)
    r = compositions.rank_perm(alpha)
    lam = compositions.sort_desc(alpha)
    n = len(alpha)
    struck = set()
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] < alpha[j]:
                struck.add((r[j], r[i]))  # rank pair, already i' < j'
    kap = kappa.value
    c = t.content
    out = norm0(t)
    for i in range(n):
        for j in range(i + 1, n):
            top = lam[i] - lam[j]
            if (i + 1, j + 1) in struck:
                top -= 1
            dc = c[i] - c[j]
            for ell in range(1, top + 1):
                den = ell + kap * dc
                if den == 0:
                    raise SpectralCollision(
                        f"norm factor pole at l={ell}, content gap {dc}"
                    )
                out *= 1 - (kap / den) ** 2
    return out


@dataclass
class FormContext:
    """Pairing context bound to a sealed-enough coefficient store."""

    store: CoeffStore
    _gcache: dict[Vec, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def shape(self) -> Partition:
        return self.store.shape

    @property
    def kappa(self) -> KappaParam:
        return self.store.kappa

    @property
    def norms_diag(self) -> tuple[Fraction, ...]:
        return self.store.norms

    def pairing(self, gamma: Vec) -> np.ndarray:
        mat = self._gcache.get(gamma)
        if mat is None:
            mat = self.store.pairing_matrix(gamma)
            self._gcache[gamma] = mat
        return mat


def pair(f, g, ctx: FormContext) -> Fraction:
    """Exact Hermitian pairing; real coefficients so conjugation is trivial."""
    low = min(
        (min(a) for a in (*f.terms, *g.terms)),
        default=0,
    )
    if low < 0:
        from .laurent import e_shift

        f = e_shift(-low, f)
        g = e_shift(-low, g)
    total = Fraction(0)
    for alpha, fv in f.terms.items():
        for beta, gv in g.terms.items():
            if sum(alpha) != sum(beta):
                continue
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            total += fv @ ctx.pairing(gamma) @ gv
    return total


def gram(graph: NsjpGraph, nodes, ctx: FormContext) -> np.ndarray:
    """Gram matrix of Jack polynomials at the given (alpha, tableau) labels."""
    polys = [graph.nsjp_laurent(alpha, t) for alpha, t in nodes]
    k = len(polys)
    out = np.zeros((k, k), dtype=object)
    out[:] = Fraction(0)
    for a in range(k):
        for b in range(a, k):
            val = pair(polys[a], polys[b], ctx)
            out[a, b] = val
            out[b, a] = val
    return out
