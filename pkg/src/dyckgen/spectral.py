"""Ceiling determinants and the exclusion-statistics partition functions
that reproduce them.

The walk operator on heights 0..k hops between neighbours n and n+1 with
weight zeta*theta^n (the step picks up the plaquettes under it).  The
object everything else is built from is the determinant

    F_k = det(1 - walk operator),

a polynomial in zeta of degree 2*floor((k+1)/2) whose inverse generates
the strip paths.  It is computed three independent ways:

* a two-term recursion in the ceiling height (with variable rescalings),
* literal fraction-free elimination on the (k+1) x (k+1) matrix,
* an alternating sum over N of Gaussian-binomial partition functions,
  i.e. the grand partition function of particles with exclusion-2
  statistics on the levels theta^(2n) with fugacity -zeta^2.

The bosonic building block of the third route is itself computed four
ways (two enumerations, a Gaussian binomial, a telescoping product).

Module-level caches use functools.lru_cache, which is safe for
concurrent readers; cached values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import config
from .exact import InexactDivision, LSeries, QLaurent, TPoly


class InvalidHeight(ValueError):
    """Ceiling height outside the allowed range."""


class HeightTooLarge(ValueError):
    """Ceiling beyond the dense-elimination guard; set
    DYCKGEN_GUARD_OVERRIDE to lift the limit."""


class GuardExceeded(ValueError):
    """Enumeration larger than the desk-scale guard allows; set
    DYCKGEN_GUARD_OVERRIDE to lift the limit."""


def det_degree(k):
    """Step degree of the ceiling-k determinant: 2*floor((k+1)/2)."""
    return 2 * ((k + 1) // 2)


@dataclass(frozen=True, eq=False)
class SecularMatrix:
    """1 minus the height-hopping walk operator, entrywise as truncated
    series: symmetric tridiagonal, 1 on the diagonal, -zeta*theta^n
    between heights n and n+1."""

    k: int
    entries: tuple


def secular_matrix(k, order=None):
    if k < 0:
        raise InvalidHeight(f"ceiling {k} must be >= 0")
    L = order if order is not None else k + 3
    one = LSeries.one(L)
    zero = LSeries.zeros(L)
    entries = [[zero] * (k + 1) for _ in range(k + 1)]
    for n in range(k + 1):
        entries[n][n] = one
    for n in range(k):
        hop = LSeries(L, {1: QLaurent.mono(n, -1)})
        entries[n][n + 1] = hop
        entries[n + 1][n] = hop
    return SecularMatrix(k, tuple(tuple(row) for row in entries))


@lru_cache(maxsize=None)
def fk_polynomial(k):
    """Exact ceiling-k determinant at its natural degree, by the
    recursion F_k = F_{k-1}(zeta*theta) - zeta^2 * F_{k-2}(zeta*theta^2),
    anchored at F_{-1} = F_0 = 1."""
    if k < -1:
        raise InvalidHeight(f"ceiling {k} must be >= -1")
    if k <= 0:
        return LSeries.one(0)
    deg = det_degree(k)
    a = fk_polynomial(k - 1).resized(deg).substitute_scale(1)
    if k == 1:
        b = LSeries.one(deg)
    else:
        b = fk_polynomial(k - 2).resized(deg).substitute_scale(2)
    return a - b.shift_step(2)


def secular_det_recursive(k, order):
    """Ceiling-k determinant truncated (or zero-padded) to the given
    step order."""
    return fk_polynomial(k).resized(order)


def det_elimination(cells):
    """Fraction-free determinant of a square matrix of truncated series.

    One-step condensation: each trailing entry is replaced by
    (pivot*entry - column*row) / previous pivot.  Every entry produced
    this way is a genuine minor of the original matrix, so the division
    is exact; the previous pivot is a leading principal minor with
    constant term 1, so it is invertible in the series ring.  No
    rational-function arithmetic ever appears.
    """
    n = len(cells)
    if n == 0:
        raise ValueError("empty matrix")
    m = [list(row) for row in cells]
    prev = None
    for p in range(n - 1):
        pivot = m[p][p]
        for i in range(p + 1, n):
            rip = m[i][p]
            for j in range(p + 1, n):
                t = pivot * m[i][j]
                if not rip.is_zero() and not m[p][j].is_zero():
                    t = t - rip * m[p][j]
                m[i][j] = t if prev is None else t.divide(prev)
        prev = pivot
    return m[n - 1][n - 1]


def secular_det_direct(k):
    """Ceiling-k determinant by literal elimination on the matrix."""
    if k < 0:
        raise InvalidHeight(f"ceiling {k} must be >= 0")
    if k > config.DIRECT_DET_K_MAX and not config.guards_lifted():
        raise HeightTooLarge(
            f"ceiling {k} exceeds guard {config.DIRECT_DET_K_MAX} (set DYCKGEN_GUARD_OVERRIDE=1 to lift)")
    mat = secular_matrix(k, order=k + 3)
    return det_elimination(mat.entries).resized(det_degree(k))


def secular_det_tilde(k):
    """Same determinant from the asymmetric variant matrix whose
    above-diagonal entries are all -1 and whose below-diagonal entry at
    row i is -zeta^2*theta^(2(i-1)): the step and area weights are
    shuffled between the two hop directions but the determinant is
    unchanged."""
    if k < 0:
        raise InvalidHeight(f"ceiling {k} must be >= 0")
    if k > config.DIRECT_DET_K_MAX and not config.guards_lifted():
        raise HeightTooLarge(
            f"ceiling {k} exceeds guard {config.DIRECT_DET_K_MAX} (set DYCKGEN_GUARD_OVERRIDE=1 to lift)")
    L = 2 * k + 4
    one = LSeries.one(L)
    zero = LSeries.zeros(L)
    cells = [[zero] * (k + 1) for _ in range(k + 1)]
    for i in range(k + 1):
        cells[i][i] = one
    for i in range(1, k + 1):
        cells[i - 1][i] = LSeries(L, {0: -1})
        cells[i][i - 1] = LSeries(L, {2: QLaurent.mono(2 * (i - 1), -1)})
    return det_elimination(cells).resized(det_degree(k))


def qbinom(m, r):
    """Gaussian binomial coefficient [m choose r]_q, exponents in
    diamond (q) units.

    Computed by interleaved multiply-and-divide: after s factors the
    partial result is itself a Gaussian binomial, so every division is
    exact and intermediates stay small.
    """
    if m < 0:
        raise ValueError("upper index must be >= 0")
    if r < 0 or r > m:
        return QLaurent.zero()
    r = min(r, m - r)
    out = QLaurent.one()
    for j in range(1, r + 1):
        num = QLaurent({0: 1, m - r + j: -1})
        den = QLaurent({0: 1, j: -1})
        out = (out * num).divexact(den)
    return out


def spectral_function(n):
    """Boltzmann weight theta^(2n) of level n of the equidistant
    single-particle spectrum (n = 0, 1, ...); the grand partition sum
    couples it to fugacity -zeta^2."""
    if n < 0:
        raise ValueError("level must be >= 0")
    return QLaurent.mono(2 * n)


def _compositions_nonneg(total, parts):
    """All tuples of `parts` integers >= 0 summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_nonneg(total - first, parts - 1):
            yield (first,) + rest


def bosonic_partition(k, N, method="product"):
    """Energy generating function Z_{k,N} for N bosons on the k levels
    0..k-1, exponents in diamond (q) units.

    methods:
      "occupation"  enumerate level multisets directly (guarded);
      "excitation"  enumerate gap increments m_0..m_N >= 0 summing to
                    k-1 with weight q^(sum j*m_j) (guarded);
      "qbinomial"   the Gaussian binomial [k+N-1 choose N]_q;
      "product"     telescoping product of (1-q^(j+N))/(1-q^j).
    """
    if k < 1:
        raise ValueError("need at least one level")
    if N < 0:
        raise ValueError("particle number must be >= 0")
    if method in ("occupation", "excitation"):
        if k * N > config.ENUM_PARTITION_MAX and not config.guards_lifted():
            raise GuardExceeded(
                f"k*N = {k * N} exceeds guard {config.ENUM_PARTITION_MAX} (set DYCKGEN_GUARD_OVERRIDE=1 to lift)")
    if method == "occupation":
        from itertools import combinations_with_replacement
        out = {}
        for levels in combinations_with_replacement(range(k), N):
            e = sum(levels)
            out[e] = out.get(e, 0) + 1
        return QLaurent(out)
    if method == "excitation":
        out = {}
        for gaps in _compositions_nonneg(k - 1, N + 1):
            e = sum(j * mj for j, mj in enumerate(gaps))
            out[e] = out.get(e, 0) + 1
        return QLaurent(out)
    if method == "qbinomial":
        return qbinom(k + N - 1, N)
    if method == "product":
        out = QLaurent.one()
        for j in range(1, k):
            num = QLaurent({0: 1, j + N: -1})
            den = QLaurent({0: 1, j: -1})
            out = (out * num).divexact(den)
        return out
    raise ValueError(f"unknown method {method!r}")


def grand_partition_exclusion(k, order):
    """Ceiling-k determinant as the grand partition function of
    exclusion-2 particles: sum over particle number N of
    (-zeta^2)^N * q^(N(N-1)) * [k-N+1 choose N]_q, exponents converted
    to internal (step, plaquette) units."""
    if k < 0:
        raise InvalidHeight(f"ceiling {k} must be >= 0")
    coeffs = {}
    for N in range((k + 1) // 2 + 1):
        if 2 * N > order:
            break
        term = qbinom(k - N + 1, N).scale_exponents(2).shift(2 * N * (N - 1))
        coeffs[2 * N] = term.scale(-1) if N % 2 else term
    return LSeries(order, coeffs)


def height_generating_function(w_order, order):
    """Coefficients [w^j] of the ceiling generating sum, j = 0..w_order.

    The sum over particle number N of
        (-w^2*zeta^2)^N * q^(N(N-1)) * w^(-1) / ((w;q)-type product)
    minus the bare 1/w pole packages every ceiling at once: the w^k
    coefficient equals the ceiling-k determinant.  The pole cancels
    identically (asserted here).  Returned as a list of truncated step
    series indexed by the power of w.
    """
    if w_order < 0:
        raise ValueError("w order must be >= 0")
    acc = [dict() for _ in range(w_order + 2)]  # index j+1 holds w^j
    for N in range((w_order + 1) // 2 + 1):
        m_max = w_order - (2 * N - 1)
        if m_max < 0:
            break
        # product over j=0..N of the geometric tail 1/(1 - w*theta^(2j)),
        # truncated at w^m_max
        pw = [QLaurent.one()] + [QLaurent.zero()] * m_max
        for j in range(N + 1):
            npw = [pw[0]]
            for m in range(1, m_max + 1):
                npw.append(pw[m] + npw[m - 1].shift(2 * j))
            pw = npw
        base = 2 * N * (N - 1)
        sign = -1 if N % 2 else 1
        for m, ql in enumerate(pw):
            jw = 2 * N - 1 + m
            if jw > w_order or ql.is_zero():
                continue
            contrib = ql.shift(base).scale(sign)
            d = acc[jw + 1]
            d[2 * N] = d.get(2 * N, QLaurent.zero()) + contrib
    pole = acc[0]
    leftover = pole.get(0, QLaurent.zero()) - QLaurent.one()
    if not leftover.is_zero() or any(not v.is_zero() for e, v in pole.items() if e):
        raise AssertionError("1/w pole failed to cancel")
    return [LSeries(order, acc[j + 1]) for j in range(w_order + 1)]
