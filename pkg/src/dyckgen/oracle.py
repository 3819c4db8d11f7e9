"""Brute-force path counter used to cross-check every closed form.

Paths live on the integer heights 0..k and move by single up or down
steps.  Three statistics are tracked exactly:

* length l: number of steps;
* area A: sum over steps of the plaquette count, an up step from height
  j contributing j and a down step from height j contributing j - 1
  (equivalently, the area below the path and above the floor, minus half
  the length; A can reach -l/2 for paths hugging the floor, so negative
  values are normal);
* touchdowns s: down steps that land on height 0.  Starting at 0 does
  not count; a final step down to 0 does.

The counter is a forward dynamic program over (height, area, touchdowns)
and never consults the generating-function machinery, so agreement with
the closed forms is a genuine two-route check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .exact import LSeries, QLaurent, TPoly


class Unreachable(ValueError):
    """No path with the requested endpoints and length exists."""


class SpecOutOfRange(ValueError):
    """Heights outside 0..k or a negative length bound."""


class GuardExceeded(ValueError):
    """Enumeration larger than the desk-scale guard allows; set
    DYCKGEN_GUARD_OVERRIDE to lift the limit."""


@dataclass(frozen=True)
class PathTable:
    """Exact counts N[(l, A, s)] of paths from m to n below ceiling k."""

    k: int
    m: int
    n: int
    l_max: int
    counts: dict

    def count(self, l, area, s):
        return self.counts.get((l, area, s), 0)

    def count_area(self, l, area):
        """Count with the touchdown statistic summed out."""
        total = 0
        for (ll, aa, _), c in self.counts.items():
            if ll == l and aa == area:
                total += c
        return total

    def total(self, l):
        """Number of paths of length l regardless of area/touchdowns."""
        return sum(c for (ll, _, _), c in self.counts.items() if ll == l)

    def sorted_items(self):
        return sorted(self.counts.items())


def _check_heights(k, m, n):
    if k < 0:
        raise SpecOutOfRange(f"ceiling {k} must be >= 0")
    if not (0 <= m <= k and 0 <= n <= k):
        raise SpecOutOfRange(f"heights ({m}, {n}) must lie in 0..{k}")


def enumerate_paths(k, m, n, l_max):
    """Count all strip paths from height m to height n, lengths 0..l_max.

    Returns a PathTable keyed by (length, area, touchdowns).
    """
    _check_heights(k, m, n)
    if l_max < 0:
        raise SpecOutOfRange("length bound must be >= 0")
    if l_max > config.ORACLE_LEN_MAX and not config.guards_lifted():
        raise GuardExceeded(
            f"length bound {l_max} exceeds guard {config.ORACLE_LEN_MAX} (set DYCKGEN_GUARD_OVERRIDE=1 to lift)")
    counts = {}
    state = {(m, 0, 0): 1}
    if m == n:
        counts[(0, 0, 0)] = 1
    for l in range(1, l_max + 1):
        new = {}
        for (j, a, s), c in state.items():
            if j < k:
                key = (j + 1, a + j, s)
                new[key] = new.get(key, 0) + c
            if j > 0:
                key = (j - 1, a + j - 1, s + (1 if j == 1 else 0))
                new[key] = new.get(key, 0) + c
        state = new
        for (j, a, s), c in state.items():
            if j == n:
                counts[(l, a, s)] = counts.get((l, a, s), 0) + c
    return PathTable(k, m, n, l_max, counts)


def max_area(k, m, n, l):
    """Largest area statistic over paths of exactly l steps; raises
    Unreachable when no such path exists."""
    _check_heights(k, m, n)
    if l < 0:
        raise SpecOutOfRange("length must be >= 0")
    best = [None] * (k + 1)
    best[m] = 0
    for _ in range(l):
        new = [None] * (k + 1)
        for j, a in enumerate(best):
            if a is None:
                continue
            if j < k and (new[j + 1] is None or new[j + 1] < a + j):
                new[j + 1] = a + j
            if j > 0 and (new[j - 1] is None or new[j - 1] < a + j - 1):
                new[j - 1] = a + j - 1
        best = new
    if best[n] is None:
        raise Unreachable(f"no path of length {l} from {m} to {n} under {k}")
    return best[n]


def genfun_from_table(table, with_touchdowns=False):
    """Package exact counts as a truncated series for coefficientwise
    comparison with the closed forms.

    Plain: coefficient of zeta^l is the area polynomial of the length-l
    counts.  With touchdowns: coefficients are marker polynomials whose
    t^s parts are the area polynomials of the s-touchdown counts.
    """
    if with_touchdowns:
        per_l = {}
        for (l, a, s), c in table.counts.items():
            per_l.setdefault(l, {}).setdefault(s, {})[a] = c
        coeffs = {
            l: TPoly({s: QLaurent(av) for s, av in sv.items()})
            for l, sv in per_l.items()
        }
        return LSeries(table.l_max, coeffs, ring=TPoly)
    per_l = {}
    for (l, a, _), c in table.counts.items():
        d = per_l.setdefault(l, {})
        d[a] = d.get(a, 0) + c
    coeffs = {l: QLaurent(av) for l, av in per_l.items()}
    return LSeries(table.l_max, coeffs, ring=QLaurent)
