"""Exact multivariate Laurent polynomial and rational function arithmetic.

Everything is computed over the rationals (``fractions.Fraction``), with no
floating point anywhere.  A :class:`RingContext` fixes an ordered tuple of
variable names once; Laurent polynomials over that context are sparse maps
from integer exponent vectors to nonzero rational coefficients.  The monomial
order is lexicographic on the declared variable order and is not configurable,
so canonical forms are reproducible.

Two conventions matter for the rest of the package:

* A variable may be declared with a *square alias* (typically ``v`` with
  alias ``q``, encoding q = v^2 so that half-integer powers of q stay
  polynomial).  The alias is accepted by the parser and used by the printer
  for even powers, but internally the alias is always eliminated in favor of
  the base variable.
* Rational functions are stored reduced (multivariate gcd removed, common
  monomial factors cleared) with a monic denominator under the lex order,
  which makes equality a dictionary comparison.

Roots of unity never appear as floats: all implemented cases only need units
of order 1 or 2, which are the rational constants +1 and -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "RingContext",
    "LaurentExpr",
    "RationalExpr",
    "RingError",
    "ShapeError",
    "NonExactDivision",
    "ring",
    "exact_div",
    "eval_unit_circle_zeros",
    "parse_expr",
]


class RingError(ValueError):
    """Raised for invalid ring declarations or mixed-ring arithmetic."""


class NonExactDivision(ArithmeticError):
    """Raised when an exact polynomial quotient was required but does not exist."""


class ShapeError(ValueError):
    """Raised when an expression is not of the factored shape an operation needs."""


Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class RingContext:
    """An ordered set of variable names shared by a family of expressions.

    ``square_aliases`` maps a declared variable to an undeclared alias name
    standing for its square (``{"v": "q"}``).  Alias names live only in the
    textual grammar; stored exponent vectors never contain them.
    """

    __slots__ = ("names", "index", "square_aliases", "_alias_to_var")

    def __init__(self, names: Iterable[str], square_aliases: Mapping[str, str] | None = None):
        names = tuple(names)
        if not names:
            raise RingError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise RingError(f"duplicate variable name in {names!r}")
        square_aliases = dict(square_aliases or {})
        for var, alias in square_aliases.items():
            if var not in names:
                raise RingError(f"square alias declared for unknown variable {var!r}")
            if alias in names or alias in square_aliases:
                raise RingError(f"alias name {alias!r} collides with a declared variable")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.square_aliases = square_aliases
        self._alias_to_var = {alias: var for var, alias in square_aliases.items()}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "LaurentExpr":
        return LaurentExpr(self, {})

    def one(self) -> "LaurentExpr":
        return self.const(1)

    def const(self, c: Scalar) -> "LaurentExpr":
        c = _as_fraction(c)
        if c == 0:
            return self.zero()
        return LaurentExpr(self, {(0,) * self.nvars: c})

    def var(self, name: str, power: int = 1) -> "LaurentExpr":
        """The monomial ``name**power``; alias names expand to the base variable."""
        if name in self._alias_to_var:
            return self.var(self._alias_to_var[name], 2 * power)
        if name not in self.index:
            raise RingError(f"unknown variable {name!r} in ring {self.names!r}")
        exps = [0] * self.nvars
        exps[self.index[name]] = power
        return LaurentExpr(self, {tuple(exps): Fraction(1)})

    def monomial(self, exponents: Mapping[str, int] | Iterable[int], coeff: Scalar = 1) -> "LaurentExpr":
        if isinstance(exponents, Mapping):
            exps = [0] * self.nvars
            for name, e in exponents.items():
                if name in self._alias_to_var:
                    name, e = self._alias_to_var[name], 2 * e
                if name not in self.index:
                    raise RingError(f"unknown variable {name!r}")
                exps[self.index[name]] += e
        else:
            exps = list(exponents)
            if len(exps) != self.nvars:
                raise RingError("exponent vector has wrong length")
        c = _as_fraction(coeff)
        if c == 0:
            return self.zero()
        return LaurentExpr(self, {tuple(exps): c})

    def __repr__(self):
        return f"RingContext{self.names!r}"


def ring(variables: Iterable[str], square_aliases: Mapping[str, str] | None = None) -> RingContext:
    """Create a ring context; variable names must be distinct and nonempty."""
    return RingContext(variables, square_aliases)


def _check_same_ring(a: "LaurentExpr", b: "LaurentExpr"):
    if a.ring is not b.ring and a.ring.names != b.ring.names:
        raise RingError(f"mixed rings: {a.ring.names!r} vs {b.ring.names!r}")


class LaurentExpr:
    """A Laurent polynomial: sparse map exponent-vector -> nonzero Fraction.

    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring_ctx: RingContext, terms: Mapping[tuple, Fraction]):
        clean = {e: c for e, c in terms.items() if c != 0}
        self.ring = ring_ctx
        self.terms = clean

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.nvars: Fraction(1)}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant expression")
        return next(iter(self.terms.values()), Fraction(0))

    def leading(self) -> tuple:
        """Lex-leading (exponent vector, coefficient)."""
        if not self.terms:
            raise ValueError("zero expression has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def degree_span(self, name: str) -> tuple:
        """(min, max) exponent of ``name`` across terms; (0, 0) for zero."""
        i = self.ring.index[name]
        if not self.terms:
            return (0, 0)
        exps = [e[i] for e in self.terms]
        return (min(exps), max(exps))

    def exponents_of(self, name: str) -> set:
        i = self.ring.index[name]
        return {e[i] for e in self.terms}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if isinstance(other, RationalExpr):
            return RationalExpr(self, self.ring.one()) + other
        _check_same_ring(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentExpr(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentExpr(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalExpr):
            return RationalExpr(self, self.ring.one()) - other
        return self + (-other if isinstance(other, LaurentExpr) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return self.ring.zero()
            return LaurentExpr(self.ring, {e: c0 * c for e, c0 in self.terms.items()})
        if isinstance(other, RationalExpr):
            return RationalExpr(self, self.ring.one()) * other
        _check_same_ring(self, other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentExpr(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if not self.is_monomial():
                raise NonExactDivision("negative power of a non-monomial expression")
            e, c = self.leading()
            inv = LaurentExpr(self.ring, {tuple(-x for x in e): Fraction(1) / c})
            return inv ** (-n)
        out = self.ring.one()
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / c)
        if isinstance(other, RationalExpr):
            return RationalExpr(self, self.ring.one()) / other
        _check_same_ring(self, other)
        return RationalExpr(self, other)

    def __rtruediv__(self, other):
        return RationalExpr(self.ring.const(other), self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, RationalExpr):
            return other == self
        if not isinstance(other, LaurentExpr):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def substitute(self, name: str, value) -> "LaurentExpr":
        """Substitute ``name`` by an exact value.

        The value must be invertible when negative exponents occur: a nonzero
        rational constant or a single-term Laurent expression.
        """
        i = self.ring.index[name]
        if isinstance(value, (int, Fraction)):
            value = self.ring.const(value)
        _check_same_ring(self, value)
        needs_inverse = any(e[i] < 0 for e in self.terms)
        if needs_inverse and not value.is_monomial():
            raise NonExactDivision("substituting a non-invertible value into a negative power")
        if value.is_zero() and needs_inverse:
            raise ZeroDivisionError("substituting zero into a negative power")
        out = self.ring.zero()
        for e, c in self.terms.items():
            rest = list(e)
            k = rest[i]
            rest[i] = 0
            out = out + LaurentExpr(self.ring, {tuple(rest): c}) * (value ** k)
        return out

    def invert_variable(self, name: str) -> "LaurentExpr":
        """Apply the ring automorphism name -> name^-1."""
        i = self.ring.index[name]
        return LaurentExpr(
            self.ring,
            {tuple((-x if j == i else x) for j, x in enumerate(e)): c for e, c in self.terms.items()},
        )

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = self._render_monomial(e)
            parts.append((c, mono))
        out = []
        for i, (c, mono) in enumerate(parts):
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = f"{mag}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def _render_monomial(self, e: tuple) -> str:
        factors = []
        for name, exp in zip(self.ring.names, e):
            if exp == 0:
                continue
            alias = self.ring.square_aliases.get(name)
            if alias is not None and exp % 2 == 0:
                half = exp // 2
                factors.append(alias if half == 1 else f"{alias}^{half}")
            else:
                factors.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(factors)

    def __repr__(self):
        return f"<LaurentExpr {self.render()}>"


# ---------------------------------------------------------------------------
# Polynomial kernel: lex division, multivariate gcd (primitive PRS)
# ---------------------------------------------------------------------------


def _shift_to_poly(*exprs: LaurentExpr):
    """Joint monomial shift making all inputs honest polynomials.

    Returns (shift vector, shifted term dicts); per slot, the minimum exponent
    across all inputs becomes 0.
    """
    nv = exprs[0].ring.nvars
    mins = [0] * nv
    seen = False
    for f in exprs:
        for e in f.terms:
            if not seen:
                mins = list(e)
                seen = True
            else:
                mins = [min(m, x) for m, x in zip(mins, e)]
    if not seen:
        mins = [0] * nv
    shifted = [
        {tuple(x - m for x, m in zip(e, mins)): c for e, c in f.terms.items()}
        for f in exprs
    ]
    return tuple(mins), shifted


def _term_mul(terms: dict, e0: tuple, c0: Fraction) -> dict:
    return {tuple(a + b for a, b in zip(e, e0)): c * c0 for e, c in terms.items()}


def _poly_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _poly_div_exact(f: dict, g: dict):
    """Quotient f/g when g divides f exactly (lex division); else None.

    Inputs must be polynomial dicts (all exponents >= 0).
    """
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    q: dict = {}
    r = dict(f)
    ge = max(g)
    gc = g[ge]
    while r:
        re = max(r)
        qe = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in qe):
            return None
        qc = r[re] / gc
        q[qe] = q.get(qe, Fraction(0)) + qc
        r = _poly_sub(r, _term_mul(g, qe, qc))
    return {e: c for e, c in q.items() if c}


def _deg(f: dict, slot: int) -> int:
    return max(e[slot] for e in f)


def _coeff_in(f: dict, slot: int, d: int) -> dict:
    """Coefficient of x_slot^d, as a dict with slot exponent zeroed."""
    out = {}
    for e, c in f.items():
        if e[slot] == d:
            e2 = list(e)
            e2[slot] = 0
            out[tuple(e2)] = c
    return out


def _monic(f: dict) -> dict:
    if not f:
        return f
    lc = f[max(f)]
    if lc == 1:
        return f
    return {e: c / lc for e, c in f.items()}


def _poly_gcd(f: dict, g: dict, slot: int, nvars: int) -> dict:
    """Multivariate gcd over Q via primitive pseudo-remainder sequences.

    Recursion is on variable slots; the result is monic under lex order.
    Intended for the small expressions this package produces.
    """
    if not f:
        return _monic(g)
    if not g:
        return _monic(f)
    if slot >= nvars:
        return {(0,) * nvars: Fraction(1)}
    if not any(e[slot] for e in f) and not any(e[slot] for e in g):
        return _poly_gcd(f, g, slot + 1, nvars)

    def content(h: dict) -> dict:
        c: dict = {}
        for d in sorted({e[slot] for e in h}):
            c = _poly_gcd(c, _coeff_in(h, slot, d), slot + 1, nvars)
        return c

    def primitive(h: dict):
        cont = content(h)
        pp = _poly_div_exact(h, cont)
        assert pp is not None
        return cont, pp

    cf, pf = primitive(f)
    cg, pg = primitive(g)
    cont_gcd = _poly_gcd(cf, cg, slot + 1, nvars)

    a, b = pf, pg
    if _deg(a, slot) < _deg(b, slot):
        a, b = b, a
    while b:
        da, db = _deg(a, slot), _deg(b, slot)
        if da < db:
            a, b = b, a
            continue
        lc_b = _coeff_in(b, slot, db)
        # one pseudo-reduction step: lc(b)*a - lc(a)*x^(da-db)*b
        lc_a = _coeff_in(a, slot, da)
        shift = [0] * nvars
        shift[slot] = da - db
        r = _poly_sub(_poly_mul(lc_b, a), _poly_mul(_term_mul(lc_a, tuple(shift), Fraction(1)), b))
        if r:
            _, r = primitive(r)
        a, b = b, r
    _, pp = primitive(a)
    return _monic(_poly_mul(cont_gcd, pp))


def laurent_gcd(f: LaurentExpr, g: LaurentExpr) -> LaurentExpr:
    """A gcd of two Laurent polynomials, normalized monic; defined up to units."""
    _check_same_ring(f, g)
    _, (fp, gp) = _shift_to_poly(f, g)
    return LaurentExpr(f.ring, _poly_gcd(fp, gp, 0, f.ring.nvars))


def exact_div(f: LaurentExpr, g: LaurentExpr) -> LaurentExpr:
    """The Laurent quotient f/g when it is a Laurent polynomial.

    Raises :class:`NonExactDivision` otherwise; used where a relation promises
    polynomial quotients, so a failure signals an implementation bug upstream.
    """
    _check_same_ring(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero expression")
    if f.is_zero():
        return f.ring.zero()
    shift_f, (fp,) = _shift_to_poly(f)
    shift_g, (gp,) = _shift_to_poly(g)
    q = _poly_div_exact(fp, gp)
    if q is None:
        raise NonExactDivision(f"{g.render()} does not divide {f.render()} exactly")
    delta = tuple(a - b for a, b in zip(shift_f, shift_g))
    return LaurentExpr(f.ring, _term_mul(q, delta, Fraction(1)))


class RationalExpr:
    """A reduced fraction of Laurent polynomials over a shared ring context.

    Canonical form: the multivariate gcd is removed, the denominator is an
    honest polynomial touching exponent 0 in every variable (its monomial
    content is absorbed into the numerator), and the denominator is monic
    under the lex order.  A value that is itself a Laurent polynomial
    therefore always has denominator 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentExpr, den: LaurentExpr):
        _check_same_ring(num, den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        ctx = num.ring
        if num.is_zero():
            self.num = ctx.zero()
            self.den = ctx.one()
            return
        _, (np_, dp) = _shift_to_poly(num, den)
        g = _poly_gcd(np_, dp, 0, ctx.nvars)
        if g != {(0,) * ctx.nvars: Fraction(1)}:
            np2 = _poly_div_exact(np_, g)
            dp2 = _poly_div_exact(dp, g)
            assert np2 is not None and dp2 is not None
            np_, dp = np2, dp2
        # anchor the denominator at exponent 0 per slot; the numerator absorbs
        # the shift and may legitimately stay Laurent
        dmin = [min(e[i] for e in dp) for i in range(ctx.nvars)]
        if any(dmin):
            np_ = {tuple(a - m for a, m in zip(e, dmin)): c for e, c in np_.items()}
            dp = {tuple(a - m for a, m in zip(e, dmin)): c for e, c in dp.items()}
        lead = dp[max(dp)]
        if lead != 1:
            np_ = {e: c / lead for e, c in np_.items()}
            dp = {e: c / lead for e, c in dp.items()}
        self.num = LaurentExpr(ctx, np_)
        self.den = LaurentExpr(ctx, dp)

    @property
    def ring(self) -> RingContext:
        return self.num.ring

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentExpr:
        if not self.is_laurent():
            raise NonExactDivision(f"{self.render()} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @staticmethod
    def _coerce(other, ctx: RingContext) -> "RationalExpr":
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, LaurentExpr):
            return RationalExpr(other, ctx.one())
        return RationalExpr(ctx.const(other), ctx.one())

    def __add__(self, other):
        o = self._coerce(other, self.ring)
        return RationalExpr(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other, self.ring))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other, self.ring)
        return RationalExpr(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other, self.ring)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero expression")
        return RationalExpr(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other, self.ring) / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.ring.one() / self) ** (-n)
        out = RationalExpr(self.ring.one(), self.ring.one())
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentExpr)):
            other = self._coerce(other, self.ring)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, name: str, value) -> "RationalExpr":
        return RationalExpr(self.num.substitute(name, value), self.den.substitute(name, value))

    def invert_variable(self, name: str) -> "RationalExpr":
        return RationalExpr(self.num.invert_variable(name), self.den.invert_variable(name))

    def render(self) -> str:
        if self.is_laurent():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"<RationalExpr {self.render()}>"


# ---------------------------------------------------------------------------
# Unit-circle zero detection for factored Silberger-type expressions
# ---------------------------------------------------------------------------


def _strip_unit_monomial_roots(f: LaurentExpr, var: str, aux_bound: int = 12):
    """Factor ``f`` completely as a monomial times prod (var - s*m).

    Only roots of the form s*m with s = +-1 and m a Laurent monomial in the
    other variables (bounded exponents) are attempted; that is exactly the
    factored shape of the case formulas.  Returns a list of
    (sign, exponent-vector) roots with multiplicity.  Raises ShapeError if a
    positive-degree remainder in ``var`` has no such root or the leftover
    constant is not a single term.
    """
    ctx = f.ring
    slot = ctx.index[var]
    other = [i for i in range(ctx.nvars) if i != slot]
    roots = []
    current = f

    def candidate_monos(expr: LaurentExpr):
        spans = []
        for i in other:
            exps = [e[i] for e in expr.terms]
            span = max(abs(min(exps)), abs(max(exps)), 1)
            spans.append(min(span, aux_bound))
        def rec(j):
            if j == len(other):
                yield ()
                return
            ks = sorted(range(-spans[j], spans[j] + 1), key=abs)
            for k in ks:
                for rest in rec(j + 1):
                    yield (k,) + rest
        yield from rec(0)

    while not current.is_zero():
        lo, hi = current.degree_span(var)
        if lo == hi:
            break
        found = None
        for mono in candidate_monos(current):
            exps = [0] * ctx.nvars
            for i, m in zip(other, mono):
                exps[i] = m
            for sign in (1, -1):
                value = ctx.monomial(tuple(exps), sign)
                if current.substitute(var, value).is_zero():
                    found = (sign, tuple(exps))
                    break
            if found:
                break
        if found is None:
            raise ShapeError("expression not of recognized factored shape")
        sign, exps = found
        divisor = ctx.var(var) - ctx.monomial(exps, sign)
        current = exact_div(current, divisor)
        roots.append((sign, exps))
    if not current.is_monomial():
        raise ShapeError("leftover factor is not a single monomial")
    return roots


def eval_unit_circle_zeros(f: RationalExpr, var: str) -> set:
    """Locations among {+1, -1} where the numerator vanishes and the denominator does not.

    The expression must factor, in ``var``, into binomials ``(1 +- c*var^(+-1))``
    with ``c`` a monomial times a unit of order at most 2 (the shape of all
    implemented Plancherel case formulas); otherwise :class:`ShapeError` is
    raised.  Zeros are generic: a root contributes only if it is a unit
    independent of the remaining variables, which forces it to be +-1.
    """
    if isinstance(f, LaurentExpr):
        f = RationalExpr(f, f.ring.one())
    num_roots = _strip_unit_monomial_roots(f.num, var)
    den_roots = _strip_unit_monomial_roots(f.den, var)
    zero_vec = (0,) * f.ring.nvars

    def unit_values(roots):
        return {sign for sign, exps in roots if exps == zero_vec}

    return unit_values(num_roots) - unit_values(den_roots)


# ---------------------------------------------------------------------------
# Textual grammar: parse / print round trip
# ---------------------------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("int", text[i:j]))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in expression")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t


def parse_expr(ctx: RingContext, text: str):
    """Parse the textual grammar back into an expression.

    Returns a :class:`LaurentExpr` when the parsed value has denominator 1,
    else a :class:`RationalExpr`.  The grammar is the printer's output:
    ``+ - * / ^``, integer literals, parentheses, declared variable names and
    square aliases.
    """
    toks = _Tokens(text)

    def parse_sum():
        node = parse_product()
        while True:
            kind, _ = toks.peek()
            if kind == "+":
                toks.next()
                node = node + parse_product()
            elif kind == "-":
                toks.next()
                node = node - parse_product()
            else:
                return node

    def parse_product():
        node = parse_unary()
        while True:
            kind, _ = toks.peek()
            if kind == "*":
                toks.next()
                node = node * parse_unary()
            elif kind == "/":
                toks.next()
                node = node / parse_unary()
            else:
                return node

    def parse_unary():
        kind, _ = toks.peek()
        if kind == "-":
            toks.next()
            return -parse_unary()
        if kind == "+":
            toks.next()
            return parse_unary()
        return parse_power()

    def parse_power():
        base = parse_atom()
        kind, _ = toks.peek()
        if kind == "^":
            toks.next()
            sign = 1
            k, _ = toks.peek()
            if k == "-":
                toks.next()
                sign = -1
            kind2, val = toks.next()
            if kind2 != "int":
                raise ValueError("exponent must be an integer literal")
            e = sign * int(val)
            if isinstance(base, RationalExpr):
                return base ** e
            if e < 0 and not base.is_monomial():
                return RationalExpr(ctx.one(), base) ** (-e)
            return base ** e
        return base

    def parse_atom():
        kind, val = toks.next()
        if kind == "int":
            return ctx.const(int(val))
        if kind == "name":
            return ctx.var(val)
        if kind == "(":
            node = parse_sum()
            kind2, _ = toks.next()
            if kind2 != ")":
                raise ValueError("unbalanced parentheses")
            return node
        raise ValueError(f"unexpected token {val!r}")

    node = parse_sum()
    kind, val = toks.peek()
    if kind is not None:
        raise ValueError(f"trailing input at {val!r}")
    if isinstance(node, RationalExpr) and node.is_laurent():
        return node.as_laurent()
    return node
