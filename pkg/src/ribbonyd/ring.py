"""Exact coefficient rings.

Two rings are supported:

* ``"rational"`` -- :class:`fractions.Fraction`, always in lowest terms.
* ``"laurent_half"`` -- :class:`LaurentHalf`, Laurent polynomials in one
  variable ``v`` whose exponents may be half-integers.  Exponents are stored
  as integers counting halves, so ``v^{1/2}`` is the key ``1``.

Values are immutable.  Python operators on :class:`LaurentHalf` accept ints
and Fractions (treated as constants) so that numpy object arrays can mix a
plain ``0`` into sums; the explicit :func:`ring_add` / :func:`ring_mul`
functions enforce matching ring tags.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

RATIONAL = "rational"
LAURENT = "laurent_half"
RINGS = (RATIONAL, LAURENT)


class RingError(ValueError):
    """Mixing values from different coefficient rings."""


class ScalarSyntaxError(ValueError):
    """Malformed scalar text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class LaurentHalf:
    """A Laurent polynomial in ``v^{1/2}`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, object], Iterable[Tuple[int, object]], None] = None):
        acc: Dict[int, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if not isinstance(e, int):
                    raise TypeError("exponents are integers counting halves")
                acc[e] = acc.get(e, Fraction(0)) + _frac(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, items) -> "LaurentHalf":
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted(items))
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentHalf":
        c = _frac(c)
        return cls._raw(((0, c),) if c else ())

    @classmethod
    def monomial(cls, halves: int, coeff=1) -> "LaurentHalf":
        """``coeff * v^(halves/2)``."""
        coeff = _frac(coeff)
        return cls._raw(((halves, coeff),) if coeff else ())

    # -- inspection ----------------------------------------------------
    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms[0][1] if self._terms else Fraction(0)

    def is_unit_monomial(self) -> bool:
        """True for ``c * v^(e/2)`` with ``c != 0``, the units we divide by."""
        return len(self._terms) == 1

    def degree_span(self) -> Tuple[int, int]:
        return self._terms[0][0], self._terms[-1][0]

    def all_integral_exponents(self) -> bool:
        return all(e % 2 == 0 for e, _ in self._terms)

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentHalf":
        if isinstance(other, LaurentHalf):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentHalf.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentHalf._raw(acc.items())

    __radd__ = __add__

    def __neg__(self):
        return LaurentHalf._raw((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO_L
        acc: Dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentHalf._raw((e, c) for e, c in acc.items() if c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse_monomial() ** (-n)
        result = ONE_L
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_monomial(self) -> "LaurentHalf":
        if not self.is_unit_monomial():
            raise ZeroDivisionError(f"{self} is not a unit monomial")
        (e, c), = self._terms
        return LaurentHalf._raw(((-e, 1 / c),))

    def divide_by_monomial(self, m: "LaurentHalf") -> "LaurentHalf":
        """Exact division by a unit monomial ``c * v^(e/2)``."""
        return self * m.inverse_monomial()

    def mirror(self) -> "LaurentHalf":
        """Substitute ``v -> v^-1``."""
        return LaurentHalf._raw((-e, c) for e, c in self._terms)

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentHalf):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LaurentHalf", self._terms))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentHalf({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO_L = LaurentHalf._raw(())
ONE_L = LaurentHalf._raw(((0, Fraction(1)),))
V_HALF = LaurentHalf._raw(((1, Fraction(1)),))
V = LaurentHalf._raw(((2, Fraction(1)),))

Scalar = Union[Fraction, LaurentHalf]


def v_power(halves: int, coeff=1) -> LaurentHalf:
    """Shorthand for ``coeff * v^(halves/2)``."""
    return LaurentHalf.monomial(halves, coeff)


# ---------------------------------------------------------------------------
# ring-tagged operations

def ring_of(x) -> str:
    if isinstance(x, LaurentHalf):
        return LAURENT
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return RATIONAL
    raise TypeError(f"not a scalar: {x!r}")


def zero(ring: str) -> Scalar:
    _check_tag(ring)
    return ZERO_L if ring == LAURENT else Fraction(0)


def one(ring: str) -> Scalar:
    _check_tag(ring)
    return ONE_L if ring == LAURENT else Fraction(1)


def coerce(x, ring: str) -> Scalar:
    """Embed ``x`` into ``ring``; rationals embed as constants."""
    if ring == LAURENT:
        if isinstance(x, LaurentHalf):
            return x
        return LaurentHalf.const(x)
    if ring == RATIONAL:
        if isinstance(x, LaurentHalf):
            return x.constant_value()
        return _frac(x)
    raise RingError(f"unknown ring {ring!r}")


def _check_tag(ring):
    if ring not in RINGS:
        raise RingError(f"unknown ring {ring!r}")


def _same(a, b) -> str:
    ra, rb = ring_of(a), ring_of(b)
    if ra != rb:
        raise RingError(f"ring mismatch: {ra} vs {rb}")
    return ra


def ring_add(a: Scalar, b: Scalar) -> Scalar:
    _same(a, b)
    return a + b


def ring_mul(a: Scalar, b: Scalar) -> Scalar:
    _same(a, b)
    return a * b


# ---------------------------------------------------------------------------
# text format

def _format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_exponent(halves: int) -> str:
    if halves % 2 == 0:
        return str(halves // 2)
    return f"{halves}/2"


def format_scalar(x: Scalar) -> str:
    """Canonical text: ascending exponents, ``1*`` suppressed."""
    if not isinstance(x, LaurentHalf):
        return _format_rational(_frac(x))
    if not x._terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(x._terms):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _format_rational(mag)
        else:
            mono = "v" if e == 2 else f"v^{_format_exponent(e)}"
            body = mono if mag == 1 else f"{_format_rational(mag)}*{mono}"
        if idx == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<op>[-+*/^])|(?P<v>v))")


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, ring: str):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None):
        tok = self.toks[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ScalarSyntaxError(f"expected {want!r}", self.text, tok[2])
        self.i += 1
        return tok

    def rational(self, allow_sign=True) -> Fraction:
        sign = 1
        if allow_sign and self.peek()[:2] == ("op", "-"):
            self.i += 1
            sign = -1
        num = int(self.take("num")[1])
        if self.peek()[:2] == ("op", "/"):
            self.i += 1
            tok = self.take("num")
            den = int(tok[1])
            if den == 0:
                raise ScalarSyntaxError("zero denominator", self.text, tok[2])
            return sign * Fraction(num, den)
        return Fraction(sign * num)

    def exponent(self) -> int:
        pos = self.peek()[2]
        q = self.rational()
        if q.denominator not in (1, 2):
            raise ScalarSyntaxError("exponent denominator must be 1 or 2", self.text, pos)
        return int(q * 2)

    def term(self, sign: int) -> LaurentHalf:
        tok = self.peek()
        if tok[0] == "v":
            self.i += 1
            return LaurentHalf.monomial(self.power(), sign)
        coeff = self.rational(allow_sign=False) * sign
        if self.peek()[:2] == ("op", "*"):
            self.i += 1
            if self.ring != LAURENT:
                raise ScalarSyntaxError("variable 'v' in rational ring", self.text, self.peek()[2])
            self.take("v")
            return LaurentHalf.monomial(self.power(), coeff)
        return LaurentHalf.const(coeff)

    def power(self) -> int:
        if self.ring != LAURENT:
            raise ScalarSyntaxError("variable 'v' in rational ring", self.text, self.toks[self.i - 1][2])
        if self.peek()[:2] == ("op", "^"):
            self.i += 1
            return self.exponent()
        return 2

    def parse(self) -> Scalar:
        if self.peek()[0] == "end":
            raise ScalarSyntaxError("empty scalar", self.text, 0)
        if self.ring == RATIONAL:
            q = self.rational()
            self.take("end")
            return q
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.i += 1
            sign = -1
        total = self.term(sign)
        while True:
            tok = self.peek()
            if tok[0] == "end":
                return total
            if tok[0] == "op" and tok[1] in "+-":
                self.i += 1
                total = total + self.term(1 if tok[1] == "+" else -1)
                continue
            raise ScalarSyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])


def ring_parse(text: str, ring: str) -> Scalar:
    """Parse ``text`` as a scalar of ``ring`` (see README for the grammar)."""
    _check_tag(ring)
    if ring == RATIONAL and "v" in text:
        raise ScalarSyntaxError("variable 'v' in rational ring", text, text.index("v"))
    return _Parser(text, ring).parse()
