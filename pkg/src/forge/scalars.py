"""Exact scalars in a cyclotomic field Q(zeta_n).

A scalar is a polynomial in the primitive n-th root z, reduced modulo the
n-th cyclotomic polynomial, with Fraction coefficients.  n = 1 gives plain Q.
The textual form round-trips bit-exactly (see `Scalar.__str__` / `Field.parse`).
"""

from __future__ import annotations

import re
from fractions import Fraction


class ForgeError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(ForgeError):
    pass


class InputError(ForgeError):
    """Malformed definition data (bad scalar text, bad table, ...)."""


def _poly_divmod(num, den):
    # exact division of integer coefficient lists (low -> high), den monic-led
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients (low -> high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise InputError("field order must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            if rem:
                raise ArithmeticError("cyclotomic division left a remainder")
    return poly


class Field:
    """The ground field Q(zeta_n), fixed once per session."""

    def __init__(self, n: int = 1):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        # z^k reduced mod the cyclotomic polynomial, for degree <= k <= 2*(degree-1)
        self._pow: dict[int, dict[int, Fraction]] = {}
        top = {i: Fraction(-c) for i, c in enumerate(self.modulus[:-1]) if c}
        self._pow[self.degree] = top
        for k in range(self.degree + 1, 2 * self.degree - 1):
            nxt: dict[int, Fraction] = {}
            for e, c in self._pow[k - 1].items():
                if e + 1 < self.degree:
                    nxt[e + 1] = nxt.get(e + 1, Fraction(0)) + c
                else:
                    for e2, c2 in top.items():
                        nxt[e2] = nxt.get(e2, Fraction(0)) + c * c2
            self._pow[k] = {e: c for e, c in nxt.items() if c}
        self.zero = Scalar(self, {})
        self.one = Scalar(self, {0: Fraction(1)})

    def __eq__(self, other):
        return isinstance(other, Field) and other.n == self.n

    def __hash__(self):
        return hash(("Field", self.n))

    def __repr__(self):
        return f"Q(zeta_{self.n})" if self.n > 2 else "Q"

    def scalar(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise DimensionMismatch("scalar from a different field")
            return value
        return Scalar(self, {0: Fraction(value)} if value else {})

    def zeta(self, power: int = 1) -> Scalar:
        power %= self.n
        if power < self.degree:
            return Scalar(self, {power: Fraction(1)})
        s = self.one
        z = Scalar(self, {1: Fraction(1)}) if self.degree > 1 else self.scalar(
            Fraction(self.modulus[0]) * -1)
        for _ in range(power):
            s = s * z
        return s

    def parse(self, text: str) -> Scalar:
        return _parse_scalar(self, text)


_TERM_RE = re.compile(
    r"^\s*(?:(?P<rat>-?\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?(?:z(?:\^(?P<exp>\d+))?)?\s*$"
)


def _parse_scalar(field: Field, text: str) -> Scalar:
    text = text.strip().replace("−", "-")
    if not text:
        raise InputError("empty scalar text")
    # split into signed terms at top level
    terms = []
    sign, buf = 1, ""
    first = True
    for ch in text:
        if ch in "+-" and buf.strip():
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf.strip() and first:
            sign = 1 if ch == "+" else -1
        else:
            buf += ch
        first = False
    terms.append((sign, buf))
    coeffs: dict[int, Fraction] = {}
    for sgn, term in terms:
        m = _TERM_RE.match(term)
        if not m or not term.strip():
            raise InputError(f"cannot parse scalar term {term!r}")
        has_z = "z" in term
        rat = m.group("rat")
        if rat is None and not has_z:
            raise InputError(f"cannot parse scalar term {term!r}")
        c = Fraction(rat) if rat is not None else Fraction(1)
        exp = 0
        if has_z:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        base = Scalar(field, {0: sgn * c})
        val = base * field.zeta(exp) if exp else base
        for e, cc in val.coeffs.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + cc
    return Scalar(field, {e: c for e, c in coeffs.items() if c})


class Scalar:
    """An element of Q(zeta_n), stored reduced with no zero coefficients."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs: dict[int, Fraction]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    def __add__(self, other):
        other = self.field.scalar(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Scalar(self.field, out)

    def __neg__(self):
        return Scalar(self.field, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self.field.scalar(other))

    def __mul__(self, other):
        other = self.field.scalar(other)
        field = self.field
        out: dict[int, Fraction] = {}
        pow_table = field._pow
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e, c = e1 + e2, c1 * c2
                if e < field.degree:
                    s = out.get(e, Fraction(0)) + c
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
                else:
                    for er, cr in pow_table[e].items():
                        s = out.get(er, Fraction(0)) + c * cr
                        if s:
                            out[er] = s
                        else:
                            out.pop(er, None)
        return Scalar(field, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self.field.scalar(other) - self

    def inverse(self) -> Scalar:
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero scalar")
        field = self.field
        # extended Euclid in Q[x] against the cyclotomic modulus
        mod = [Fraction(c) for c in field.modulus]
        a = [self.coeffs.get(i, Fraction(0)) for i in range(field.degree)]
        r0, r1 = mod, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        r0, r1 = trim(list(r0)), trim(list(r1))
        while len(r1) > 1 or (r1 and r1[0]):
            if len(r1) == 1:
                break
            q, r = _frac_divmod(r0, r1)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, trim(r)
        if not r1:
            raise ZeroDivisionError("scalar is a zero divisor (bad modulus?)")
        lead = r1[0]
        inv = {i: c / lead for i, c in enumerate(s1) if c}
        return Scalar(field, inv)

    def __truediv__(self, other):
        other = self.field.scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) / self

    def is_rational(self):
        return all(e == 0 for e in self.coeffs)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InputError("scalar is not rational")
        return self.coeffs.get(0, Fraction(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = _rat_str(abs(c))
            elif abs(c) == 1:
                body = f"z^{e}"
            else:
                body = f"{_rat_str(abs(c))}*z^{e}"
            parts.append(("-" if c < 0 else "+", body))
        sgn, body = parts[0]
        out = ("-" if sgn == "-" else "") + body
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out

    __repr__ = __str__


def _rat_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _frac_divmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    while num and not num[-1]:
        num.pop()
    return q, num


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out
