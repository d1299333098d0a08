"""Sparse exact multivariate polynomials, monomial orders, ring contexts.

A monomial is a tuple of non-negative integer exponents, one per context
variable.  Polynomials store a ``{exponents: coefficient}`` dict with no
zero coefficients; canonical term order is applied on demand (rendering,
leading terms), so the dict itself is the canonical form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatch
from .field import QQ


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u, v):
    """u / v, or None when v does not divide u."""
    w = []
    for a, b in zip(u, v):
        if a < b:
            return None
        w.append(a - b)
    return tuple(w)


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_deg(u) -> int:
    return sum(u)


# ---------------------------------------------------------------------------
# monomial orders

class MonomialOrder:
    """Base class; subclasses provide a flat integer sort key (larger key =
    larger monomial), so keys can be negated elementwise for max-heaps."""

    name = "order"

    def key(self, exps):
        raise NotImplementedError

    def compare(self, u, v) -> int:
        if len(u) != len(v):
            raise ValueError("exponent vectors of different lengths")
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return (sum(exps), *(-e for e in reversed(exps)))


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return tuple(exps)


class BlockOrder(MonomialOrder):
    """Elimination order: the first ``split`` variables dominate.

    Within each block the given suborders apply (grevlex by default).
    Any monomial involving a first-block variable exceeds any monomial
    that does not, so eliminating the first block is sound.
    """

    name = "block"

    def __init__(self, split: int, first: MonomialOrder | None = None,
                 second: MonomialOrder | None = None):
        self.split = split
        self.first = first or Grevlex()
        self.second = second or Grevlex()

    def key(self, exps):
        a, b = exps[: self.split], exps[self.split:]
        return self.first.key(a) + self.second.key(b)


def order_from_name(name: str) -> MonomialOrder:
    if name == "grevlex":
        return Grevlex()
    if name == "lex":
        return Lex()
    raise ValueError(f"unknown monomial order {name!r}")


# ---------------------------------------------------------------------------
# ring context

class RingContext:
    """A polynomial ring: named variables over a field with a default order."""

    def __init__(self, variables, field=QQ, order: MonomialOrder | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.variables = variables
        self.field = field
        self.order = order or Grevlex()
        self.nvars = len(variables)
        self._zero_exps = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and self.variables == other.variables
                and self.field == other.field
                and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"RingContext({', '.join(self.variables)}; {self.field}; {self.order})"

    # -- element constructors ------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_exps: self.field.one})

    def from_int(self, n: int) -> "Polynomial":
        c = self.field.from_int(n)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {self._zero_exps: c})

    def var(self, i) -> "Polynomial":
        """Variable by index or name, as a polynomial."""
        if isinstance(i, str):
            i = self.variables.index(i)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        c = self.field.one if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {tuple(e): c for e, c in terms.items() if not self.field.is_zero(c)}
        return Polynomial(self, clean)

    # -- context surgery (for elimination) -----------------------------------

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.variables, self.field, order)

    def extended(self, extra_name: str) -> "RingContext":
        """New context with one auxiliary variable prepended, block order
        eliminating it."""
        return RingContext((extra_name,) + self.variables, self.field,
                           BlockOrder(1, Lex(), self.order))

    def lift(self, f: "Polynomial", target: "RingContext") -> "Polynomial":
        """Reinterpret f in a context whose trailing variables are ours."""
        pad = target.nvars - self.nvars
        return Polynomial(target, {(0,) * pad + e: c for e, c in f.terms.items()})

    def project(self, f: "Polynomial", source_pad: int) -> "Polynomial":
        """Drop ``source_pad`` leading variables; caller guarantees the
        polynomial does not involve them."""
        terms = {}
        for e, c in f.terms.items():
            if any(e[:source_pad]):
                raise ValueError("polynomial involves an eliminated variable")
            terms[e[source_pad:]] = c
        return Polynomial(self, terms)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable sparse polynomial over a RingContext."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: dict):
        self.ctx = ctx
        self.terms = terms
        self._hash = None

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_deg(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(mono_deg(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ctx._zero_exps, self.ctx.field.zero)

    def sorted_terms(self, order: MonomialOrder | None = None):
        """Terms in strictly descending monomial order."""
        o = order or self.ctx.order
        return sorted(self.terms.items(), key=lambda t: o.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder | None = None):
        """(exponents, coefficient) of the largest monomial; None if zero."""
        if not self.terms:
            return None
        o = order or self.ctx.order
        e = max(self.terms, key=o.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder | None = None):
        lt = self.leading_term(order)
        return None if lt is None else lt[0]

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        self._check(other)
        fld = self.ctx.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = fld.add(terms.get(e, fld.zero), c)
            if fld.is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.ctx, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        fld = self.ctx.field
        return Polynomial(self.ctx, {e: fld.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if isinstance(other, (Fraction,)) or not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        fld = self.ctx.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = fld.add(terms.get(e, fld.zero), fld.mul(c1, c2))
                if fld.is_zero(s):
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Polynomial(self.ctx, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "Polynomial":
        fld = self.ctx.field
        if fld.is_zero(c):
            return self.ctx.zero()
        return Polynomial(self.ctx, {e: fld.mul(v, c) for e, v in self.terms.items()})

    def mul_term(self, exps, coeff) -> "Polynomial":
        fld = self.ctx.field
        if fld.is_zero(coeff):
            return self.ctx.zero()
        return Polynomial(self.ctx,
                          {mono_mul(e, exps): fld.mul(c, coeff)
                           for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        lt = self.leading_term(order)
        if lt is None:
            return self
        return self.scale(self.ctx.field.inv(lt[1]))

    # -- equality / hashing --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point):
        """Ring-homomorphism image at a point of field elements."""
        if len(point) != self.ctx.nvars:
            raise ValueError("point length mismatch")
        fld = self.ctx.field
        acc = fld.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = fld.mul(v, fld.pow(x, k))
            acc = fld.add(acc, v)
        return acc

    # -- exact division ------------------------------------------------------

    def exact_divide(self, g: "Polynomial"):
        """Quotient self/g in the polynomial ring, or None if not divisible."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        fld = self.ctx.field
        order = self.ctx.order
        ge, gc = g.leading_term(order)
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=order.key)
            c = rem[e]
            qe = mono_div(e, ge)
            if qe is None:
                return None
            qc = fld.div(c, gc)
            quot[qe] = qc
            # rem -= (qc * x^qe) * g
            for e2, c2 in g.terms.items():
                t = mono_mul(qe, e2)
                s = fld.sub(rem.get(t, fld.zero), fld.mul(qc, c2))
                if fld.is_zero(s):
                    rem.pop(t, None)
                else:
                    rem[t] = s
        return Polynomial(self.ctx, quot)

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        fld = self.ctx.field
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.ctx.variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"<poly {self}>"
