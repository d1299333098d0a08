"""Ideal calculus: sums, products, powers, colon, saturation, dimension.

Heights are read off as (#variables - Krull dimension), which is valid
because the ambient ring is a polynomial ring over a field.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .errors import ContextMismatch, NotZeroDimensional
from .groebner import GroebnerBasis, buchberger, normal_form
from .poly import MonomialOrder, Polynomial, RingContext, mono_div


class Ideal:
    """An ideal of a polynomial ring with per-order cached Groebner bases."""

    def __init__(self, ctx: RingContext, generators):
        self.ctx = ctx
        gens = []
        seen = set()
        for g in generators:
            if g.ctx != ctx:
                raise ContextMismatch("generator from a different context")
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.generators = gens
        self._gb_cache: dict[MonomialOrder, GroebnerBasis] = {}

    # -- basics --------------------------------------------------------------

    def groebner(self, order: MonomialOrder | None = None,
                 pair_budget: int | None = None) -> GroebnerBasis:
        order = order or self.ctx.order
        gb = self._gb_cache.get(order)
        if gb is None:
            kwargs = {} if pair_budget is None else {"pair_budget": pair_budget}
            gb = buchberger(self.generators, order, ctx=self.ctx, **kwargs)
            self._gb_cache[order] = gb
        return gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit_ideal()

    def contains_poly(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    def contains(self, other: "Ideal") -> bool:
        """self ⊇ other, by generator-wise membership."""
        self._check(other)
        return all(self.contains_poly(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        self._check(other)
        a = self.groebner().polys
        b = other.groebner().polys
        return a == b

    def _check(self, other: "Ideal"):
        if self.ctx != other.ctx:
            raise ContextMismatch("ideals over different contexts")

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators[:6])
        if len(self.generators) > 6:
            inner += ", ..."
        return f"Ideal({inner})"

    def to_strings(self):
        return [str(g) for g in self.generators]

    # -- combinations --------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ctx, self.generators + other.generators)

    def product(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ctx, [f * g for f in self.generators
                                for g in other.generators])

    def power(self, n: int) -> "Ideal":
        if n < 0:
            raise ValueError("power exponent must be >= 0")
        if n == 0:
            return Ideal(self.ctx, [self.ctx.one()])
        gens = [p for c in combinations_with_replacement(self.generators, n)
                for p in [_prod(c)]]
        return Ideal(self.ctx, gens)

    def minimal_generators(self) -> "Ideal":
        """Same ideal presented by its reduced Groebner basis."""
        return Ideal(self.ctx, self.groebner().polys)

    # -- intersection / colon / saturation -----------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J, by eliminating t from t·I + (1-t)·J."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ctx, [])
        ctx = self.ctx
        ext = ctx.extended("@t")
        t = ext.var(0)
        one = ext.one()
        gens = [t * ctx.lift(f, ext) for f in self.generators]
        gens += [(one - t) * ctx.lift(g, ext) for g in other.generators]
        gb = buchberger(gens, ext.order, ctx=ext)
        out = [ctx.project(g, 1) for g in gb.polys
               if all(e[0] == 0 for e in g.terms)]
        return Ideal(ctx, out)

    def colon_poly(self, f: Polynomial) -> "Ideal":
        """I : (f) via (1/f)·(I ∩ (f))."""
        if f.is_zero():
            raise ZeroDivisionError("colon by the zero polynomial")
        inter = self.intersect(Ideal(self.ctx, [f]))
        gens = []
        for g in inter.generators:
            q = g.exact_divide(f)
            if q is None:
                raise RuntimeError("intersection element not divisible; bug")
            gens.append(q)
        return Ideal(self.ctx, gens)

    def colon(self, other: "Ideal") -> "Ideal":
        """I : J = ∩ over generators f of J of I : (f)."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by the zero ideal")
        result = None
        for f in other.generators:
            part = self.colon_poly(f)
            result = part if result is None else result.intersect(part)
        return result

    def saturate(self, other: "Ideal"):
        """Stable limit of I ⊆ I:J ⊆ I:J² ⊆ ...; returns (ideal, steps)."""
        current = self
        steps = 0
        while True:
            nxt = current.colon(other)
            if nxt.equals(current):
                return current, steps
            current = nxt
            steps += 1

    # -- dimension / height --------------------------------------------------

    def dimension(self) -> int:
        """Krull dimension of R/I; -1 for the unit ideal, #vars for (0).

        Combinatorial: the maximum size of a variable set touching no
        leading monomial of a Groebner basis of I.
        """
        if self.is_zero():
            return self.ctx.nvars
        gb = self.groebner()
        if gb.is_unit_ideal():
            return -1
        lms = gb.leading_monomials()
        n = self.ctx.nvars
        supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in lms]
        for size in range(n, -1, -1):
            for subset in combinations(range(n), size):
                s = set(subset)
                if not any(sup <= s for sup in supports):
                    return size
        return 0

    def height(self) -> int:
        return self.ctx.nvars - self.dimension()

    def std_monomial_count(self) -> int:
        """Vector-space dimension of R/I (number of standard monomials)."""
        gb = self.groebner()
        if gb.is_unit_ideal():
            return 0
        lms = gb.leading_monomials()
        n = self.ctx.nvars
        bounds = []
        for i in range(n):
            pure = [lm[i] for lm in lms
                    if lm[i] > 0 and all(lm[j] == 0 for j in range(n) if j != i)]
            if not pure:
                raise NotZeroDimensional(f"no pure power of {self.ctx.variables[i]} "
                                         "in the leading-term ideal")
            bounds.append(min(pure))
        count = 0
        stack = [(0, ())]
        while stack:
            i, prefix = stack.pop()
            if i == n:
                if not any(mono_div(prefix, lm) is not None for lm in lms):
                    count += 1
                continue
            for e in range(bounds[i]):
                stack.append((i + 1, prefix + (e,)))
        return count


def _prod(polys):
    it = iter(polys)
    acc = next(it)
    for p in it:
        acc = acc * p
    return acc
