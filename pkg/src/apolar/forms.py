"""Binary forms, dual forms and the apolarity action.

A binary form of degree ``d`` is stored by its coefficients ``(a_0, ..., a_d)``
in the lex monomial basis ``x0^(d-i) * x1^i``; dual forms use ``y0, y1`` the
same way. Coefficients are exact ``Fraction`` values and every object here is
immutable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import upoly


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients; use Fraction or a 'p/q' string")
    return Fraction(x)


def _primitive_ints(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Primitive integer vector with positive first nonzero entry."""
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise ValueError("cannot normalize the zero vector")
    first = next(v for v in ints if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class _Form:
    coeffs: tuple

    _var = ("?", "?")

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(_to_fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, degree: int):
        return cls((0,) * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, i: int, coeff=1):
        """``coeff * v0^(degree-i) * v1^i``."""
        c = [0] * (degree + 1)
        c[i] = coeff
        return cls(c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coeffs))

    def scale(self, c):
        c = _to_fraction(c)
        return type(self)(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, _Form):
            if type(other) is not type(self):
                raise TypeError("cannot multiply forms from different rings")
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return type(self)(out)
        return self.scale(other)

    __rmul__ = scale

    def __call__(self, p, q):
        """Evaluate at ``(v0, v1) = (p, q)``."""
        d = self.degree
        return sum(c * p ** (d - i) * q**i for i, c in enumerate(self.coeffs) if c)

    def normalized(self):
        """Primitive integer multiple with positive leading coefficient."""
        return type(self)(_primitive_ints(self.coeffs))

    def dehomogenize(self) -> tuple[int, list[Fraction]]:
        """Split off ``v1^m``; return ``(m, g(t))`` with ``g(t) = g(t, 1)``.

        The remaining factor satisfies ``g(1, 0) != 0``, so ``g(t)`` has
        degree exactly ``degree - m``.
        """
        if self.is_zero():
            raise ValueError("the zero form has no factorization")
        c = self.coeffs
        m = 0
        while c[m] == 0:
            m += 1
        return m, list(c[m:])

    @classmethod
    def rehomogenize(cls, m: int, g: Sequence[Fraction]):
        """Inverse of :meth:`dehomogenize`."""
        return cls((0,) * m + tuple(g))

    def __str__(self) -> str:
        v0, v1 = self._var
        d = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if d - i:
                mono.append(v0 if d - i == 1 else f"{v0}^{d - i}")
            if i:
                mono.append(v1 if i == 1 else f"{v1}^{i}")
            m = "*".join(mono)
            if not m:
                terms.append(str(c))
            elif c == 1:
                terms.append(m)
            elif c == -1:
                terms.append("-" + m)
            else:
                cs = f"({c})" if c.denominator != 1 else str(c)
                terms.append(f"{cs}*{m}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


class BinaryForm(_Form):
    """Element of ``S_d = K[x0, x1]_d``."""

    _var = ("x0", "x1")


class DualForm(_Form):
    """Element of ``T_k = K[y0, y1]_k``, acting on ``S`` by differentiation."""

    _var = ("y0", "y1")


@dataclass(frozen=True)
class LinearForm:
    """The form ``a*x0 + b*x1``, stored as a primitive integer pair."""

    a: int
    b: int

    def __post_init__(self):
        a, b = _primitive_ints((_to_fraction(self.a), _to_fraction(self.b)))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def power(self, d: int) -> BinaryForm:
        return expand_power_sum(d, [(self, 1)])

    def dual(self) -> DualForm:
        """The linear dual form ``b*y0 - a*y1`` that kills every power of ``self``."""
        return DualForm((self.b, -self.a))

    def __str__(self):
        return str(BinaryForm((self.a, self.b)))


@dataclass(frozen=True)
class ProjectivePoint:
    """A point ``[p:q]`` of the projective line.

    Exact points hold a primitive integer pair with positive first nonzero
    entry. Numeric points hold a complex pair of unit norm whose first
    nonzero coordinate is real and positive.
    """

    p: object
    q: object
    exact: bool = True

    # below this modulus a numeric coordinate is treated as zero
    NUMERIC_ZERO = 1e-13

    def __post_init__(self):
        if self.exact:
            p, q = _primitive_ints((_to_fraction(self.p), _to_fraction(self.q)))
        else:
            p, q = complex(self.p), complex(self.q)
            norm = math.hypot(abs(p), abs(q))
            if norm == 0:
                raise ValueError("cannot normalize the zero vector")
            p, q = p / norm, q / norm
            lead = p if abs(p) > self.NUMERIC_ZERO else q
            rot = abs(lead) / lead
            p, q = p * rot, q * rot
            if abs(p) <= self.NUMERIC_ZERO:
                p = 0j
            else:
                p = complex(p.real, 0.0)
                if abs(q) <= self.NUMERIC_ZERO:
                    q = 0j
            if p == 0:
                q = complex(abs(q), 0.0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def linear_form(self) -> LinearForm:
        if not self.exact:
            raise ValueError("numeric points have no exact linear form")
        return LinearForm(self.p, self.q)

    def dual_factor(self) -> DualForm:
        """Exact linear dual form vanishing at this point: ``q*y0 - p*y1``."""
        if not self.exact:
            raise ValueError("numeric points have no exact dual factor")
        return DualForm((self.q, -self.p))

    def angle(self) -> float:
        """Argument of ``q/p`` (or of the point at infinity), used for ordering."""
        if self.p == 0:
            return math.pi
        return cmath.phase(complex(self.q) / complex(self.p))

    def __str__(self):
        if self.exact:
            return f"[{self.p}:{self.q}]"
        return f"[{self.p:.6g}:{self.q:.6g}]"


def expand_power_sum(d: int, terms: Iterable[tuple[LinearForm, object]]) -> BinaryForm:
    """Expand ``sum_j c_j * (a_j*x0 + b_j*x1)^d`` exactly."""
    if d < 1:
        raise ValueError("power sums need degree d >= 1")
    out = [Fraction(0)] * (d + 1)
    for lf, c in terms:
        if not isinstance(lf, LinearForm):
            lf = LinearForm(*lf)
        a, b, c = Fraction(lf.a), Fraction(lf.b), _to_fraction(c)
        for i in range(d + 1):
            out[i] += c * math.comb(d, i) * a ** (d - i) * b**i
    return BinaryForm(out)


def apolar_apply(D: DualForm, f: BinaryForm) -> BinaryForm:
    """``D o f``: the dual form acting on ``f`` by differentiation.

    ``y0^p y1^q o x0^(d-i) x1^i = (d-i)!/(d-i-p)! * i!/(i-q)! * x0^(d-i-p) x1^(i-q)``
    and zero when an exponent would go negative.
    """
    if not isinstance(D, DualForm) or not isinstance(f, BinaryForm):
        raise TypeError("apolar_apply takes a DualForm and a BinaryForm")
    k, d = D.degree, f.degree
    if k > d:
        raise ValueError(f"dual degree {k} exceeds form degree {d}")
    fact = [math.factorial(i) for i in range(d + 1)]
    out = []
    for m in range(d - k + 1):
        acc = Fraction(0)
        for j, b in enumerate(D.coeffs):
            a = f.coeffs[m + j]
            if b and a:
                acc += b * a * fact[d - m - j] * fact[m + j]
        out.append(acc / (fact[d - k - m] * fact[m]))
    return BinaryForm(out)


def squarefree_test(D: _Form) -> bool:
    """True iff ``D`` has ``deg D`` distinct projective roots."""
    if D.is_zero():
        raise ValueError("the zero form has no roots")
    m, g = D.dehomogenize()
    if m > 1:
        return False
    return len(upoly.gcd(g, upoly.derivative(g))) <= 1


def form_gcd(D1: _Form, D2: _Form) -> _Form:
    """Greatest common divisor of two homogeneous forms of the same ring.

    Normalized to primitive integer coefficients, positive leading entry.
    """
    if type(D1) is not type(D2):
        raise TypeError("gcd of forms from different rings")
    if D1.is_zero() and D2.is_zero():
        raise ValueError("gcd of two zero forms is undefined")
    if D1.is_zero():
        return D2.normalized()
    if D2.is_zero():
        return D1.normalized()
    m1, g1 = D1.dehomogenize()
    m2, g2 = D2.dehomogenize()
    g = upoly.gcd(g1, g2)
    return type(D1).rehomogenize(min(m1, m2), g).normalized()


def forms_gcd(forms: Iterable[_Form]) -> _Form:
    """Gcd of a nonempty collection, skipping zero forms."""
    acc = None
    for f in forms:
        if f.is_zero():
            continue
        acc = f.normalized() if acc is None else form_gcd(acc, f)
    if acc is None:
        raise ValueError("gcd of zero forms is undefined")
    return acc
