"""Exact arithmetic kernel for path generating functions.

Three layers, all with exact rational coefficients (Python ints, promoted
to Fraction only when a value is genuinely non-integral):

* QLaurent -- sparse Laurent polynomial in the area variable theta; one
  unit of exponent is one plaquette of area.  Negative exponents are
  allowed (the reflection duality inverts the area variable).
* TPoly -- polynomial in the touchdown marker t whose coefficients are
  QLaurent values.  The marker exponent counts returns to the floor.
* LSeries -- power series in the step variable zeta, truncated at a fixed
  order, with QLaurent or TPoly coefficients.  One unit of exponent is
  one step.

Internally every exponent is an integer.  The double-step convention
(z = zeta^2, q = theta^2, exponents counting step pairs and diamonds) is
a reporting transform applied at the edges; it can produce half-integer
exponents, which the CLI encodes explicitly.

Everything here is immutable after construction: operations return new
objects, so values may be shared freely across threads.
"""

from __future__ import annotations

import enum
from fractions import Fraction


class NonUnitConstantTerm(ArithmeticError):
    """Series division needs a divisor whose constant term is a single
    nonzero rational sitting at area exponent zero."""


class BadConstantTerm(ArithmeticError):
    """Series log needs constant term exactly 1; series exp exactly 0."""


class InexactDivision(ArithmeticError):
    """Polynomial division left a remainder."""


def _norm(c):
    """Demote integral Fractions to int so the common path stays fast."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Convention(enum.Enum):
    """Unit systems for reporting exponents.

    STEP_PLAQUETTE: length in single steps, area in plaquettes (the
    internal representation; always integer exponents).
    DOUBLE_STEP_DIAMOND: length in step pairs, area in diamonds; both
    exponents are halved and may be half-integers.
    """

    STEP_PLAQUETTE = "step-plaquette"
    DOUBLE_STEP_DIAMOND = "double-step-diamond"


class QLaurent:
    """Sparse Laurent polynomial in the area variable.

    Stored as a dict from integer exponent to nonzero coefficient; zero
    coefficients are never kept and integral values are stored as int.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _norm(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def _wrap(cls, c):
        out = object.__new__(cls)
        out._c = c
        return out

    @classmethod
    def zero(cls):
        return _QL_ZERO

    @classmethod
    def one(cls):
        return _QL_ONE

    @classmethod
    def mono(cls, exp, coeff=1):
        coeff = _norm(coeff)
        if not coeff:
            return _QL_ZERO
        return cls._wrap({int(exp): coeff})

    @classmethod
    def const(cls, c):
        return cls.mono(0, c)

    @classmethod
    def coerce(cls, v):
        if isinstance(v, QLaurent):
            return v
        if isinstance(v, (int, Fraction)):
            return cls.const(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to QLaurent")

    def coeff(self, exp):
        return self._c.get(exp, 0)

    def terms(self):
        """Sorted (exponent, coefficient) pairs."""
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def is_one(self):
        return self._c == {0: 1}

    def is_scalar(self):
        return not self._c or set(self._c) == {0}

    def scalar_value(self):
        if not self._c:
            return 0
        if set(self._c) != {0}:
            raise ValueError("not a scalar")
        return self._c[0]

    def min_exp(self):
        return min(self._c) if self._c else None

    def degree(self):
        return max(self._c) if self._c else None

    def num_terms(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = _norm(s)
            else:
                del out[e]
        return QLaurent._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._wrap({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _QL_ZERO
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                v = get(e, 0) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        for e, v in out.items():
            out[e] = _norm(v)
        return QLaurent._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = _QL_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, r):
        """Multiply every coefficient by the rational r."""
        r = _norm(r)
        if not r:
            return _QL_ZERO
        if r == 1:
            return self
        return QLaurent._wrap({e: _norm(v * r) for e, v in self._c.items()})

    def shift(self, j):
        """Multiply by theta^j (add j to every exponent)."""
        if not j or not self._c:
            return self
        return QLaurent._wrap({e + j: v for e, v in self._c.items()})

    def scale_exponents(self, f):
        """Substitute theta -> theta^f (multiply exponents by f != 0)."""
        if f == 0:
            raise ValueError("exponent scale must be nonzero")
        if f == 1:
            return self
        return QLaurent._wrap({e * f: v for e, v in self._c.items()})

    def invert_q(self):
        """Substitute theta -> 1/theta (negate every exponent)."""
        return self.scale_exponents(-1)

    def halved(self):
        """Divide every exponent by 2; exact only when all are even."""
        if any(e % 2 for e in self._c):
            raise InexactDivision("odd area exponent cannot be halved")
        return QLaurent._wrap({e // 2: v for e, v in self._c.items()})

    def divexact(self, other):
        """Exact polynomial quotient self / other.

        Ascending long division from the lowest exponent; raises
        InexactDivision if a remainder would be left over.
        """
        if not isinstance(other, QLaurent) or other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _QL_ZERO
        o_items = other.terms()
        e0, c0 = o_items[0]
        top = self.degree() - other.degree()
        rem = dict(self._c)
        out = {}
        while rem:
            e = min(rem)
            qe = e - e0
            if qe > top:
                raise InexactDivision("polynomial division left a remainder")
            qc = _norm(Fraction(rem[e]) / c0)
            out[qe] = qc
            for oe, oc in o_items:
                ne = oe + qe
                nv = rem.get(ne, 0) - oc * qc
                if nv:
                    rem[ne] = _norm(nv)
                else:
                    rem.pop(ne, None)
        return QLaurent._wrap(out)

    def eval_at_one(self):
        """Sum of coefficients (forget the area statistic)."""
        total = 0
        for v in self._c.values():
            total += v
        return _norm(total)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self.terms():
            if e == 0:
                parts.append(str(v))
            else:
                head = "" if v == 1 else ("-" if v == -1 else f"{v}*")
                parts.append(f"{head}q^{e}" if e != 1 else f"{head}q")
        return " + ".join(parts).replace("+ -", "- ")


_QL_ZERO = QLaurent._wrap({})
_QL_ONE = QLaurent._wrap({0: 1})


class TPoly:
    """Polynomial in the touchdown marker t with QLaurent coefficients.

    The marker exponent is always >= 0 (a path cannot return to the floor
    a negative number of times).  A TPoly whose only entry sits at t^0
    acts as a plain area polynomial; series division accepts it as a
    pivot when that entry is scalar.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for s, v in coeffs.items():
                if s < 0:
                    raise ValueError("negative marker exponent")
                v = QLaurent.coerce(v)
                if not v.is_zero():
                    c[int(s)] = v
        self._c = c

    @classmethod
    def _wrap(cls, c):
        out = object.__new__(cls)
        out._c = c
        return out

    @classmethod
    def zero(cls):
        return _TP_ZERO

    @classmethod
    def one(cls):
        return _TP_ONE

    @classmethod
    def marker(cls):
        """The bare marker t."""
        return _TP_T

    @classmethod
    def from_area(cls, q):
        q = QLaurent.coerce(q)
        if q.is_zero():
            return _TP_ZERO
        return cls._wrap({0: q})

    @classmethod
    def coerce(cls, v):
        if isinstance(v, TPoly):
            return v
        return cls.from_area(QLaurent.coerce(v))

    def coeff(self, s):
        """QLaurent coefficient of t^s."""
        return self._c.get(s, _QL_ZERO)

    def terms(self):
        return sorted(self._c.items())

    def t_degree(self):
        return max(self._c) if self._c else None

    def is_zero(self):
        return not self._c

    def is_one(self):
        return set(self._c) == {0} and self._c[0].is_one()

    def is_scalar(self):
        return not self._c or (set(self._c) == {0} and self._c[0].is_scalar())

    def scalar_value(self):
        if not self._c:
            return 0
        if set(self._c) != {0}:
            raise ValueError("not a scalar")
        return self._c[0].scalar_value()

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QLaurent)):
            other = TPoly.coerce(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        out = dict(self._c)
        for s, v in other._c.items():
            w = out.get(s)
            w = v if w is None else w + v
            if w.is_zero():
                del out[s]
            else:
                out[s] = w
        return TPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._wrap({s: -v for s, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QLaurent)):
            other = TPoly.coerce(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, QLaurent):
            other = TPoly.from_area(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _TP_ZERO
        out = {}
        for sa, va in a.items():
            for sb, vb in b.items():
                s = sa + sb
                p = va * vb
                w = out.get(s)
                w = p if w is None else w + p
                if w.is_zero():
                    out.pop(s, None)
                else:
                    out[s] = w
        return TPoly._wrap(out)

    __rmul__ = __mul__

    def scale(self, r):
        r = _norm(r)
        if not r:
            return _TP_ZERO
        if r == 1:
            return self
        return TPoly._wrap({s: v.scale(r) for s, v in self._c.items()})

    def shift(self, j):
        """Multiply every coefficient by theta^j."""
        if not j:
            return self
        return TPoly._wrap({s: v.shift(j) for s, v in self._c.items()})

    def invert_q(self):
        return TPoly._wrap({s: v.invert_q() for s, v in self._c.items()})

    def at_t_one(self):
        """Forget the touchdown statistic (set t = 1)."""
        total = _QL_ZERO
        for v in self._c.values():
            total = total + v
        return total

    def div_t_exact(self):
        """Divide by t; raises InexactDivision if a t^0 term is present."""
        if 0 in self._c:
            raise InexactDivision("constant marker term blocks division by t")
        return TPoly._wrap({s - 1: v for s, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QLaurent)):
            other = TPoly.coerce(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset((s, v) for s, v in self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for s, v in self.terms():
            if s == 0:
                parts.append(f"({v!r})")
            else:
                tpow = "t" if s == 1 else f"t^{s}"
                parts.append(f"({v!r})*{tpow}")
        return " + ".join(parts)


_TP_ZERO = TPoly._wrap({})
_TP_ONE = TPoly._wrap({0: _QL_ONE})
_TP_T = TPoly._wrap({1: _QL_ONE})


class LSeries:
    """Power series in the step variable, truncated at a fixed order.

    `c[l]` is the coefficient of zeta^l, an element of the coefficient
    ring (QLaurent by default, TPoly when the touchdown marker is live).
    Arithmetic never consults anything beyond the truncation order, and
    combining series of different orders truncates to the shorter one;
    equality likewise compares up to the shorter truncation.
    """

    __slots__ = ("order", "c", "ring")

    def __init__(self, order, coeffs=None, ring=None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if ring is None:
            ring = QLaurent
            if coeffs:
                values = coeffs.values() if isinstance(coeffs, dict) else coeffs
                if any(isinstance(v, TPoly) for v in values):
                    ring = TPoly
        zero = ring.zero()
        c = [zero] * (order + 1)
        if isinstance(coeffs, dict):
            for l, v in coeffs.items():
                if 0 <= l <= order:
                    c[l] = ring.coerce(v)
                elif l < 0:
                    raise ValueError("negative step exponent")
        elif coeffs is not None:
            for l, v in enumerate(coeffs):
                if l > order:
                    break
                c[l] = ring.coerce(v)
        self.order = order
        self.c = c
        self.ring = ring

    @classmethod
    def _wrap(cls, order, c, ring):
        out = object.__new__(cls)
        out.order = order
        out.c = c
        out.ring = ring
        return out

    @classmethod
    def one(cls, order, ring=QLaurent):
        return cls(order, {0: 1}, ring)

    @classmethod
    def zeros(cls, order, ring=QLaurent):
        return cls(order, None, ring)

    @classmethod
    def monomial(cls, order, l, coeff=1, ring=QLaurent):
        return cls(order, {l: coeff}, ring)

    def coeff(self, l):
        """Coefficient of zeta^l; IndexError beyond the truncation."""
        if l < 0:
            return self.ring.zero()
        if l > self.order:
            raise IndexError(f"step power {l} beyond truncation {self.order}")
        return self.c[l]

    def is_zero(self):
        return all(v.is_zero() for v in self.c)

    def nonzero_terms(self):
        return [(l, v) for l, v in enumerate(self.c) if not v.is_zero()]

    def _coerce_other(self, other):
        if isinstance(other, LSeries):
            if self.ring is not other.ring:
                raise TypeError("mixed coefficient rings; lift explicitly")
            return other
        if isinstance(other, (int, Fraction, QLaurent, TPoly)):
            return LSeries(self.order, {0: self.ring.coerce(other)}, self.ring)
        return None

    def __add__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        L = min(self.order, b.order)
        return LSeries._wrap(
            L, [self.c[l] + b.c[l] for l in range(L + 1)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return LSeries._wrap(self.order, [-v for v in self.c], self.ring)

    def __sub__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        L = min(self.order, b.order)
        return LSeries._wrap(
            L, [self.c[l] - b.c[l] for l in range(L + 1)], self.ring)

    def __rsub__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other):
        if not isinstance(other, LSeries):
            if isinstance(other, (int, Fraction, QLaurent, TPoly)):
                return self.scale(other)
            return NotImplemented
        if self.ring is not other.ring:
            raise TypeError("mixed coefficient rings; lift explicitly")
        L = min(self.order, other.order)
        zero = self.ring.zero()
        out = [zero] * (L + 1)
        a_nz = [(i, v) for i, v in enumerate(self.c[:L + 1]) if not v.is_zero()]
        b_nz = [(j, v) for j, v in enumerate(other.c[:L + 1]) if not v.is_zero()]
        if len(a_nz) > len(b_nz):
            a_nz, b_nz = b_nz, a_nz
        for i, vi in a_nz:
            for j, vj in b_nz:
                l = i + j
                if l > L:
                    break
                out[l] = out[l] + vi * vj
        return LSeries._wrap(L, out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = LSeries.one(self.order, self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, v):
        """Multiply every coefficient by a ring element or rational."""
        v = self.ring.coerce(v)
        if v.is_zero():
            return LSeries.zeros(self.order, self.ring)
        if v.is_one():
            return self
        return LSeries._wrap(
            self.order, [w * v for w in self.c], self.ring)

    def divide(self, other):
        """Series quotient; the divisor's constant term must be a nonzero
        rational scalar (the standard invertibility condition here)."""
        b = self._coerce_other(other)
        if b is None:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        L = min(self.order, b.order)
        b0 = b.c[0]
        if b0.is_zero() or not b0.is_scalar():
            raise NonUnitConstantTerm(
                "divisor constant term must be a nonzero scalar")
        r = b0.scalar_value()
        inv_r = None if r == 1 else Fraction(1, 1) / r
        b_nz = [(j, v) for j, v in enumerate(b.c[1:L + 1], start=1)
                if not v.is_zero()]
        out = []
        for n in range(L + 1):
            acc = self.c[n]
            for j, vj in b_nz:
                if j > n:
                    break
                prev = out[n - j]
                if not prev.is_zero():
                    acc = acc - vj * prev
            out.append(acc if inv_r is None else acc.scale(inv_r))
        return LSeries._wrap(L, out, self.ring)

    def __truediv__(self, other):
        return self.divide(other)

    def log(self):
        """Series logarithm; requires constant term 1."""
        if not self.c[0].is_one():
            raise BadConstantTerm("log needs constant term 1")
        L = self.order
        a_nz = [(i, v) for i, v in enumerate(self.c) if i >= 1 and not v.is_zero()]
        g = [self.ring.zero()]
        for n in range(1, L + 1):
            s = self.ring.zero()
            for i, ai in a_nz:
                if i >= n:
                    break
                gi = g[n - i]
                if not gi.is_zero():
                    s = s + (ai * gi).scale(n - i)
            gn = self.c[n] - s.scale(Fraction(1, n))
            g.append(gn)
        return LSeries._wrap(L, g, self.ring)

    def exp(self):
        """Series exponential; requires constant term 0."""
        if not self.c[0].is_zero():
            raise BadConstantTerm("exp needs constant term 0")
        L = self.order
        a_nz = [(i, v) for i, v in enumerate(self.c) if not v.is_zero()]
        b = [self.ring.one()]
        for n in range(1, L + 1):
            s = self.ring.zero()
            for i, ai in a_nz:
                if i > n:
                    break
                bi = b[n - i]
                if not bi.is_zero():
                    s = s + (ai * bi).scale(i)
            b.append(s.scale(Fraction(1, n)))
        return LSeries._wrap(L, b, self.ring)

    def substitute_scale(self, j):
        """Substitute zeta -> zeta * theta^j: the zeta^l coefficient picks
        up a factor theta^(j*l)."""
        if j == 0:
            return self
        return LSeries._wrap(
            self.order,
            [v.shift(j * l) for l, v in enumerate(self.c)],
            self.ring)

    def invert_q(self):
        """Substitute theta -> 1/theta in every coefficient."""
        return LSeries._wrap(
            self.order, [v.invert_q() for v in self.c], self.ring)

    def shift_step(self, d):
        """Multiply by zeta^d (d >= 0), keeping the truncation order."""
        if d < 0:
            raise ValueError("negative step shift")
        if d == 0:
            return self
        zero = self.ring.zero()
        keep = self.c[:self.order + 1 - d]
        return LSeries._wrap(self.order, [zero] * d + keep, self.ring)

    def resized(self, order):
        """Same series re-truncated (padded with zeros when growing; only
        valid for growth when the tail is known to vanish, e.g. an exact
        polynomial)."""
        if order == self.order:
            return self
        if order < self.order:
            return LSeries._wrap(order, self.c[:order + 1], self.ring)
        zero = self.ring.zero()
        return LSeries._wrap(
            order, self.c + [zero] * (order - self.order), self.ring)

    def to_double_step(self):
        """Reinterpret in double-step units: coefficient of zeta^(2a)
        becomes the coefficient of z^a with its area exponents halved.
        Exact only when odd step powers vanish and area exponents are
        even; otherwise raises InexactDivision."""
        if self.ring is not QLaurent:
            raise TypeError("double-step view defined for plain area series")
        for l, v in enumerate(self.c):
            if l % 2 and not v.is_zero():
                raise InexactDivision("odd step power cannot be halved")
        out = [self.c[2 * a].halved() for a in range(self.order // 2 + 1)]
        return LSeries._wrap(self.order // 2, out, QLaurent)

    def map_coeffs(self, fn):
        """Apply fn to every coefficient (used to change rings)."""
        out = [fn(v) for v in self.c]
        ring = type(out[0]) if out else self.ring
        return LSeries._wrap(self.order, out, ring)

    def eval_at_one(self):
        """Per-step-power coefficient sums (forget area and marker)."""
        if self.ring is TPoly:
            return [v.at_t_one().eval_at_one() for v in self.c]
        return [v.eval_at_one() for v in self.c]

    def __eq__(self, other):
        if not isinstance(other, LSeries):
            return NotImplemented
        if self.ring is not other.ring:
            return False
        L = min(self.order, other.order)
        return all(self.c[l] == other.c[l] for l in range(L + 1))

    __hash__ = None

    def __repr__(self):
        parts = [f"z^{l}*({v!r})" for l, v in self.nonzero_terms()]
        body = " + ".join(parts) if parts else "0"
        return f"<LSeries O(z^{self.order + 1}): {body}>"


def lift_marker(series):
    """Lift a plain area series into the touchdown-marker ring (every
    coefficient becomes a t^0 term)."""
    if series.ring is TPoly:
        return series
    return series.map_coeffs(TPoly.from_area)


def series_mul(a, b):
    return a * b


def series_div(a, b):
    return a.divide(b)


def series_log(a):
    return a.log()


def series_exp(a):
    return a.exp()


def substitute_scale(a, j):
    return a.substitute_scale(j)


def invert_q(a):
    return a.invert_q()
