"""Exact generating series in x with polynomial-in-t coefficients.

``TPoly`` is a polynomial in t over the rationals; ``TSeries`` is a
truncated power series in x whose coefficients are TPolys.  Everything is
exact (Fraction arithmetic, exact polynomial division).

The three cell-counting series:

* ``f_delta``    -x / ((1+x)(1+(1+t)x))            simplex cells
* ``f_stasheff`` (-(1+(2+t)x) + sqrt(1+2(2+t)x+t^2 x^2)) / (2(1+t)x)
* ``f_cube``     -x / (1+(2+t)x)                   cube cells

f_delta and f_stasheff are mutually inverse under composition; f_cube is
its own compositional inverse.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class TPoly:
    """Polynomial in t with Fraction coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "TPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "TPoly":
        return cls((0, 1))

    @classmethod
    def one_plus_t_power(cls, n: int) -> "TPoly":
        return cls(tuple(comb(n, k) for k in range(n + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            )
        )

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, (int, Fraction)):
            return TPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def divexact(self, other: "TPoly") -> "TPoly":
        """Exact polynomial division; raises if the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dn = other.coeffs
        q = [Fraction(0)] * max(len(rem) - len(dn) + 1, 0)
        for i in range(len(rem) - len(dn), -1, -1):
            c = rem[i + len(dn) - 1] / dn[-1]
            q[i] = c
            for j, d in enumerate(dn):
                rem[i + j] -= c * d
        if any(rem):
            raise ValueError(f"inexact polynomial division: {self} by {other}")
        return TPoly(tuple(q))

    def evaluate(self, q) -> Fraction:
        val = Fraction(0)
        for c in reversed(self.coeffs):
            val = val * Fraction(q) + c
        return val

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("tpoly", self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                tk = "t" if k == 1 else f"t^{k}"
                body = tk if mag == 1 else f"{mag}*{tk}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


_ZERO = TPoly()
_ONE = TPoly((1,))


class TSeries:
    """Power series in x, truncated at a fixed order, TPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [c if isinstance(c, TPoly) else TPoly.const(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, order: int) -> "TSeries":
        return cls(order, (_ZERO, _ONE))

    def _check(self, other: "TSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TSeries":
        return TSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, (int, Fraction, TPoly)):
            p = other if isinstance(other, TPoly) else TPoly.const(other)
            return TSeries(self.order, tuple(c * p for c in self.coeffs))
        self._check(other)
        out = [_ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(self.order, tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def shift_up(self) -> "TSeries":
        """Multiply by x."""
        return TSeries(self.order, (_ZERO,) + self.coeffs[:-1])

    def shift_down(self) -> "TSeries":
        """Divide by x; requires a zero constant term, drops the top order."""
        if not self.coeffs[0].is_zero():
            raise ValueError("cannot divide by x: nonzero constant term")
        return TSeries(self.order - 1, self.coeffs[1:])

    def divexact_poly(self, p: TPoly) -> "TSeries":
        return TSeries(self.order, tuple(c.divexact(p) for c in self.coeffs))

    def reciprocal(self) -> "TSeries":
        """Multiplicative inverse; the constant term must be a nonzero
        rational constant (degree-0 TPoly)."""
        c0 = self.coeffs[0]
        if c0.is_zero() or c0.degree > 0:
            raise ValueError("reciprocal needs a nonzero constant (in t) leading term")
        inv0 = TPoly.const(Fraction(1) / c0.coeffs[0])
        out = [inv0] + [_ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -acc * inv0
        return TSeries(self.order, tuple(out))

    def sqrt(self) -> "TSeries":
        """Square root with constant term 1, by the g^2 = self recurrence."""
        if self.coeffs[0] != _ONE:
            raise ValueError("sqrt needs constant term 1")
        half = Fraction(1, 2)
        out = [_ONE] + [_ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, n):
                acc = acc + out[i] * out[n - i]
            out[n] = (self.coeffs[n] - acc) * half
        return TSeries(self.order, tuple(out))

    def compose(self, g: "TSeries") -> "TSeries":
        """self(g(x)); g must have no constant term."""
        self._check(g)
        if not g.coeffs[0].is_zero():
            raise ValueError("composition needs a series with zero constant term")
        out = TSeries(self.order)
        for k in range(self.order, 0, -1):
            const = TSeries(self.order, (self.coeffs[k],))
            out = (out + const) * g
        return out + TSeries(self.order, (self.coeffs[0],))

    def invert(self) -> "TSeries":
        """Compositional inverse; needs zero constant term and a linear
        coefficient that is a nonzero rational constant (here always +-1)."""
        if not self.coeffs[0].is_zero():
            raise ValueError("compositional inverse needs zero constant term")
        c1 = self.coeffs[1]
        if c1.is_zero() or c1.degree > 0:
            raise ValueError("linear coefficient must be a nonzero constant in t")
        inv_c1 = Fraction(1) / c1.coeffs[0]
        g_coeffs = [_ZERO, TPoly.const(inv_c1)]
        for m in range(2, self.order + 1):
            # [x^m] self(g) is c1*g_m plus terms in g_1..g_{m-1} only, so
            # composing the truncation at order m with g_m = 0 isolates g_m
            trunc = TSeries(m, self.coeffs[: m + 1])
            g = TSeries(m, tuple(g_coeffs))
            val = trunc.compose(g).coeffs[m]
            g_coeffs.append(-val * inv_c1)
        return TSeries(self.order, tuple(g_coeffs))

    def evaluate_t(self, q) -> list[Fraction]:
        return [c.evaluate(q) for c in self.coeffs]

    def __str__(self) -> str:
        parts = [
            f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


# =====================================================================
# the three cell-counting series
# =====================================================================


def f_delta(order: int) -> TSeries:
    """-x / ((1+x)(1+(1+t)x)); coefficient of x^n is (-1)^n ((1+t)^n-1)/t."""
    one_plus_t = TPoly((1, 1))
    d1 = TSeries(order, (_ONE, _ONE))
    d2 = TSeries(order, (_ONE, one_plus_t))
    return -(d1 * d2).reciprocal().shift_up()


def f_cube(order: int) -> TSeries:
    """-x / (1+(2+t)x); coefficient of x^n is (-1)^n (2+t)^(n-1)."""
    den = TSeries(order, (_ONE, TPoly((2, 1))))
    return -den.reciprocal().shift_up()


def f_stasheff(order: int) -> TSeries:
    """(-(1+(2+t)x) + sqrt(1+2(2+t)x+t^2 x^2)) / (2(1+t)x)."""
    n = order + 1
    two_plus_t = TPoly((2, 1))
    radicand = TSeries(n, (_ONE, two_plus_t * 2, TPoly((0, 0, 1))))
    numerator = radicand.sqrt() - TSeries(n, (_ONE, two_plus_t))
    return numerator.shift_down().divexact_poly(TPoly((2, 2)))


def series_identities_report(order: int = 12) -> dict:
    """All series-level identities at the given truncation order."""
    fd = f_delta(order)
    fk = f_stasheff(order)
    fc = f_cube(order)
    x = TSeries.x(order)

    def poly_formula_delta(n: int) -> TPoly:
        # (-1)^n ((1+t)^n - 1) / t
        p = (TPoly.one_plus_t_power(n) - _ONE).divexact(TPoly.t())
        return p if n % 2 == 0 else -p

    def poly_formula_cube(n: int) -> TPoly:
        p = _ONE
        for _ in range(n - 1):
            p = p * TPoly((2, 1))
        return p if n % 2 == 0 else -p

    # |x^n coefficient| at t=0 counts the vertices of the n-th polytope,
    # the binary trees with n+1 leaves: Catalan numbers C_1..C_12
    catalan = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
    super_catalan = [
        1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859, 2646723, 13648869,
    ]

    checks = [
        ("delta_closed_form", all(
            fd.coeffs[n] == poly_formula_delta(n) for n in range(1, order + 1)
        )),
        ("cube_closed_form", all(
            fc.coeffs[n] == poly_formula_cube(n) for n in range(1, order + 1)
        )),
        ("delta_of_stasheff_is_x", fd.compose(fk) == x),
        ("stasheff_of_delta_is_x", fk.compose(fd) == x),
        ("invert_delta_equals_stasheff", fd.invert() == fk),
        ("cube_self_inverse_compose", fc.compose(fc) == x),
        ("invert_cube_equals_cube", fc.invert() == fc),
        ("stasheff_at_t0_catalan", [
            abs(v) for v in fk.evaluate_t(0)[1:]
        ] == catalan[:order]),
        ("stasheff_at_t1_super_catalan", [
            abs(v) for v in fk.evaluate_t(1)[1:]
        ] == super_catalan[:order]),
        ("stasheff_signs_alternate", all(
            fk.evaluate_t(1)[n] * (-1) ** n > 0 for n in range(1, order + 1)
        )),
    ]
    return {
        "passed": all(ok for _, ok in checks),
        "order": order,
        "checks": [{"name": name, "passed": ok} for name, ok in checks],
    }
