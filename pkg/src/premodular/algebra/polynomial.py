"""Sparse multivariate polynomials over the rationals.

Every polynomial lives in the same fixed alphabet ``VARIABLES``.  Monomials
are stored as packed integers (16 bits per exponent) so that multiplying
monomials is a single integer addition; the public surface always speaks in
exponent tuples.
"""

from __future__ import annotations

import heapq
import json
from fractions import Fraction
from numbers import Rational

from ..errors import ArgumentError, DivisionError

VARIABLES = ("B", "g2", "g3", "e1", "e2", "e3", "x0", "y0", "z", "alpha", "beta")
VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
NVARS = len(VARIABLES)

_BITS = 16
_FIELD = (1 << _BITS) - 1
_MAX_EXP = 1 << (_BITS - 1)
_GUARD = sum(1 << (_BITS * i + _BITS - 1) for i in range(NVARS))


def pack(exps):
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e >= _MAX_EXP:
            raise ArgumentError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def unpack(key):
    return tuple((key >> (_BITS * i)) & _FIELD for i in range(NVARS))


def _divides(kb, ka):
    """True when monomial kb divides monomial ka."""
    return ((ka | _GUARD) - kb) & _GUARD == _GUARD


def _var_key(index, power=1):
    return power << (_BITS * index)


def _exponent(key, index):
    return (key >> (_BITS * index)) & _FIELD


def _grlex(key):
    """Integer sort key realising graded-lex order (B most significant)."""
    total = 0
    rev = 0
    for i in range(NVARS):
        e = (key >> (_BITS * i)) & _FIELD
        total += e
        rev |= e << (_BITS * (NVARS - 1 - i))
    return (total << (_BITS * NVARS)) | rev


def as_rational(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise ArgumentError(f"cannot use {c!r} as an exact coefficient")


class MultiPoly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for exps, c in dict(terms).items():
                c = as_rational(c)
                if c:
                    key = exps if isinstance(exps, int) else pack(_pad(exps))
                    t[key] = t.get(key, 0) + c
                    if not t[key]:
                        del t[key]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        c = as_rational(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name, power=1):
        try:
            idx = VAR_INDEX[name]
        except KeyError:
            raise ArgumentError(f"unknown variable {name!r}") from None
        return cls._raw({_var_key(idx, power): Fraction(1)})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: Fraction(1)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        """Mapping exponent tuple -> Fraction (a fresh dict)."""
        return {unpack(k): c for k, c in self._t.items()}

    def __len__(self):
        return len(self._t)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, Fraction(0))

    def used_variables(self):
        used = set()
        for k in self._t:
            for i in range(NVARS):
                if _exponent(k, i):
                    used.add(VARIABLES[i])
        return [v for v in VARIABLES if v in used]

    def degree(self, var=None):
        """Degree in ``var`` (total degree when omitted); -1 for the zero polynomial."""
        if not self._t:
            return -1
        if var is None:
            return max(sum(unpack(k)) for k in self._t)
        idx = VAR_INDEX[var]
        return max(_exponent(k, idx) for k in self._t)

    def leading_term(self):
        """(exponents, coefficient) of the grlex-largest monomial."""
        if not self._t:
            raise ArgumentError("zero polynomial has no leading term")
        k = max(self._t, key=_grlex)
        return unpack(k), self._t[k]

    def sorted_terms(self):
        """Terms in descending graded-lex order as (exponents, coefficient)."""
        keys = sorted(self._t, key=_grlex, reverse=True)
        return [(unpack(k), self._t[k]) for k in keys]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        try:
            return MultiPoly.constant(other)
        except ArgumentError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for k, c in b.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            s = t.get(k, 0) - c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MultiPoly._raw(t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = as_rational(other)
            except ArgumentError:
                return NotImplemented
            if not c:
                return MultiPoly.zero()
            return MultiPoly._raw({k: v * c for k, v in self._t.items()})
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ArgumentError("only non-negative integer powers are supported")
        result = MultiPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        # scalar division only; polynomial division goes through exact_div
        if isinstance(other, MultiPoly):
            if other.is_constant() and other:
                other = other.constant_term()
            else:
                return self.exact_div(other)
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return MultiPoly._raw({k: v / c for k, v in self._t.items()})

    def exact_div(self, other):
        """Quotient of an exact division; DivisionError when a remainder is left."""
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        if not other._t:
            raise DivisionError("division by the zero polynomial")
        if not self._t:
            return MultiPoly.zero()
        if len(other._t) == 1:
            (kd, cd), = other._t.items()
            t = {}
            for k, c in self._t.items():
                if not _divides(kd, k):
                    raise DivisionError("monomial divisor does not divide every term")
                t[k - kd] = c / cd
            return MultiPoly._raw(t)
        lead_k = max(other._t, key=_grlex)
        lead_c = other._t[lead_k]
        rest = [(k, c) for k, c in other._t.items() if k != lead_k]
        rem = dict(self._t)
        heap = [(-_grlex(k), k) for k in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            _, k = heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue
            if not _divides(lead_k, k):
                raise DivisionError("nonzero remainder in exact division")
            qk = k - lead_k
            qc = c / lead_c
            quot[qk] = qc
            for kd, cd in rest:
                kk = kd + qk
                old = rem.get(kk)
                if old is None:
                    rem[kk] = -qc * cd
                    heapq.heappush(heap, (-_grlex(kk), kk))
                else:
                    s = old - qc * cd
                    if s:
                        rem[kk] = s
                    else:
                        del rem[kk]
        return MultiPoly._raw(quot)

    def divides(self, other):
        try:
            other.exact_div(self)
        except DivisionError:
            return False
        return True

    # -- structure ------------------------------------------------------------

    def coefficients(self, var):
        """Coefficients in ``var`` as a list indexed by power."""
        idx = VAR_INDEX[var]
        shift = _BITS * idx
        buckets = {}
        for k, c in self._t.items():
            e = (k >> shift) & _FIELD
            buckets.setdefault(e, {})[k - (e << shift)] = c
        if not buckets:
            return []
        return [MultiPoly._raw(buckets.get(i, {})) for i in range(max(buckets) + 1)]

    def view(self, var):
        from .univariate import UniPolyView
        return UniPolyView.from_multipoly(self, var)

    def subs(self, mapping):
        """Substitute variables by polynomials or exact constants."""
        repl = {}
        for name, val in mapping.items():
            idx = VAR_INDEX[name]
            repl[idx] = val if isinstance(val, MultiPoly) else MultiPoly.constant(val)
        if not repl:
            return self
        cache = {}
        t = {}
        for k, c in self._t.items():
            kept = k
            factor = None
            for idx, val in repl.items():
                e = _exponent(k, idx)
                if e:
                    kept -= _var_key(idx, e)
                    pw = cache.get((idx, e))
                    if pw is None:
                        pw = cache[(idx, e)] = val ** e
                    factor = pw if factor is None else factor * pw
            if factor is None:
                t[kept] = t.get(kept, 0) + c
            else:
                for kf, cf in factor._t.items():
                    kk = kf + kept
                    t[kk] = t.get(kk, 0) + c * cf
        return MultiPoly._raw({k: c for k, c in t.items() if c})

    def map_coefficients(self, fn):
        return MultiPoly({k: fn(c) for k, c in self._t.items()})

    def evaluate(self, values, convert=complex):
        """Numerical value with every used variable taken from ``values``.

        ``convert`` maps a Fraction into the target number type; pass e.g.
        ``lambda q: mpmath.mpf(q.numerator) / q.denominator`` for mpmath.
        """
        idxs = [(i, values[VARIABLES[i]]) for i in range(NVARS) if VARIABLES[i] in values]
        total = convert(Fraction(0))
        for k, c in self._t.items():
            term = convert(c)
            rest = k
            for i, v in idxs:
                e = _exponent(k, i)
                if e:
                    term = term * v ** e
                    rest -= _var_key(i, e)
            if rest:
                missing = [VARIABLES[i] for i in range(NVARS) if _exponent(rest, i)]
                raise ArgumentError(f"no value supplied for {missing}")
            total = total + term
        return total

    def content_denominator(self):
        """Least common multiple of the coefficient denominators."""
        from math import lcm
        d = 1
        for c in self._t.values():
            d = lcm(d, c.denominator)
        return d

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._t == other._t
        try:
            return self._t == MultiPoly.constant(other)._t
        except ArgumentError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return format_poly(self)

    # -- serialization ----------------------------------------------------------

    def to_dict(self):
        return {
            "variables": list(VARIABLES),
            "terms": [
                {"coeff": f"{c.numerator}/{c.denominator}", "exponents": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data):
        names = data.get("variables", list(VARIABLES))
        if list(names) != list(VARIABLES):
            raise ArgumentError("serialized polynomial uses a different variable alphabet")
        terms = {}
        for item in data["terms"]:
            exps = tuple(item["exponents"])
            if len(exps) != NVARS:
                raise ArgumentError("exponent vector has the wrong length")
            terms[exps] = terms.get(exps, 0) + Fraction(item["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _pad(exps):
    exps = tuple(exps)
    if len(exps) > NVARS:
        raise ArgumentError("too many exponents")
    return exps + (0,) * (NVARS - len(exps))


def _fmt_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_monomial(exps):
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p, terms=None):
    terms = p.sorted_terms() if terms is None else terms
    if not terms:
        return "0"
    out = []
    for i, (exps, c) in enumerate(terms):
        mono = _fmt_monomial(exps)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_in(p, var):
    """Display ``p`` collected by descending powers of ``var``."""
    coeffs = p.coefficients(var)
    pieces = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if not c:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        if c.is_constant():
            v = c.constant_term()
            if mono and abs(v) == 1:
                body = mono
            else:
                body = _fmt_coeff(abs(v)) + ("*" + mono if mono else "")
            neg = v < 0
        elif len(c) == 1:
            (exps, v), = c.terms.items()
            inner = _fmt_monomial(exps)
            if abs(v) != 1:
                inner = f"{_fmt_coeff(abs(v))}*{inner}"
            body = inner + ("*" + mono if mono else "")
            neg = v < 0
        else:
            inner = str(c)
            body = f"({inner})" + ("*" + mono if mono else "")
            neg = False
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces) or "0"


def poly_arith(p, q, op):
    """Exact ``add``, ``mul`` or ``exact_div`` of two polynomials."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "exact_div":
        return p.exact_div(q)
    raise ArgumentError(f"unknown operation {op!r}")


def symbols(names):
    """``symbols("B g2 g3")`` -> tuple of variable polynomials."""
    return tuple(MultiPoly.var(n) for n in names.split())

