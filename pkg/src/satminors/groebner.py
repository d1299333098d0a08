"""Buchberger's algorithm for ideals and submodules, normal forms, syzygies.

The reduction loop is the hot path: terms are tracked in a dict with a
lazy max-heap of monomial keys, divisors are assumed monic, and prime
field coefficients take a specialized integer path.  Module vectors live
in a ranked free module under a position-over-term order in which earlier
positions dominate.
"""

from __future__ import annotations

from heapq import heappop, heappush

from .errors import ContextMismatch, ResourceExhausted
from .poly import (MonomialOrder, Polynomial, RingContext, mono_deg, mono_div,
                   mono_lcm, mono_mul)

DEFAULT_PAIR_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# ring-level reduction

def _prepare_divisors(basis, order):
    """Monic (lead exps, tail items) per nonzero basis element."""
    lead = []
    for g in basis:
        if g.is_zero():
            continue
        g = g.monic(order)
        le, _ = g.leading_term(order)
        tail = [(e, c) for e, c in g.terms.items() if e != le]
        lead.append((le, tail))
    return lead


def _reduce_dict(work, lead, order, fld, full=True):
    """Reduce a term dict against monic divisors; returns the remainder dict.

    ``full=False`` stops as soon as the leading term is irreducible (enough
    for S-polynomial processing inside Buchberger top-reduction loops).
    """
    keyf = order.key
    p = getattr(fld, "p", None)
    heap = []
    for e in work:
        heappush(heap, tuple(-v for v in keyf(e)) + (e,))
    rem = {}
    while heap:
        e = heappop(heap)[-1]
        c = work.get(e)
        if c is None:
            continue
        hit = None
        for le, tail in lead:
            ok = True
            for a, b in zip(e, le):
                if a < b:
                    ok = False
                    break
            if ok:
                hit = (le, tail)
                break
        if hit is None:
            del work[e]
            rem[e] = c
            if not full:
                rem.update(work)
                work.clear()
                break
            continue
        del work[e]
        le, tail = hit
        q = tuple(a - b for a, b in zip(e, le))
        if p is not None:
            for e2, c2 in tail:
                t = tuple(q[i] + e2[i] for i in range(len(q)))
                nv = (work.get(t, 0) - c * c2) % p
                if nv:
                    if t not in work:
                        heappush(heap, tuple(-v for v in keyf(t)) + (t,))
                    work[t] = nv
                else:
                    work.pop(t, None)
        else:
            for e2, c2 in tail:
                t = tuple(q[i] + e2[i] for i in range(len(q)))
                nv = work.get(t, 0) - c * c2
                if nv:
                    if t not in work:
                        heappush(heap, tuple(-v for v in keyf(t)) + (t,))
                    work[t] = nv
                else:
                    work.pop(t, None)
    return rem


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f under division by ``basis`` (list or GroebnerBasis).

    No term of the result is divisible by any leading term of the basis;
    f minus the result lies in the ideal the basis generates.
    """
    if isinstance(basis, GroebnerBasis):
        order = order or basis.order
        basis = basis.polys
    ctx = f.ctx
    order = order or ctx.order
    lead = _prepare_divisors(basis, order)
    if not lead:
        return f
    rem = _reduce_dict(dict(f.terms), lead, order, ctx.field)
    return Polynomial(ctx, rem)


class GroebnerBasis:
    """A reduced Groebner basis together with its order and input."""

    def __init__(self, generators, polys, order: MonomialOrder, ctx: RingContext):
        self.generators = list(generators)
        self.polys = list(polys)          # reduced, monic, sorted descending
        self.order = order
        self.ctx = ctx

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def is_unit_ideal(self) -> bool:
        return (len(self.polys) == 1 and self.polys[0].is_constant()
                and not self.polys[0].is_zero())

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.polys]

    def __repr__(self):
        return f"<GB {len(self.polys)} polys / {self.order}>"


def buchberger(gens, order: MonomialOrder | None = None,
               pair_budget: int | None = None,
               ctx: RingContext | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Classical Buchberger with the coprimality and chain criteria, a pair
    heap ordered by lcm degree; deterministic for a fixed input order.
    The zero ideal yields an empty basis (``ctx`` required then).
    """
    all_gens = list(gens)
    gens = [g for g in all_gens if not g.is_zero()]
    if not gens:
        if ctx is None and all_gens:
            ctx = all_gens[0].ctx
        if ctx is None:
            raise ValueError("zero ideal needs an explicit context")
        return GroebnerBasis(all_gens, [], order or ctx.order, ctx)
    ctx = gens[0].ctx
    for g in gens[1:]:
        if g.ctx != ctx:
            raise ContextMismatch("generators from different contexts")
    order = order or ctx.order
    fld = ctx.field
    keyf = order.key

    basis = []          # monic polynomials
    lms = []            # their leading monomials
    lead = []           # (lead exps, tail items) cache for reduction
    heap = []           # (lcm degree, lcm key, i, j)
    alive = set()       # pairs not yet discarded

    def add_poly(g):
        t = len(basis)
        lm = g.leading_monomial(order)
        for k in range(t):
            l = mono_lcm(lms[k], lm)
            heappush(heap, (mono_deg(l), keyf(l), k, t))
            alive.add((k, t))
        basis.append(g)
        lms.append(lm)
        lead.append((lm, [(e, c) for e, c in g.terms.items() if e != lm]))

    for g in gens:
        r = normal_form(g, basis, order)
        if not r.is_zero():
            add_poly(r.monic(order))

    processed = 0
    while heap:
        _, _, i, j = heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        processed += 1
        budget = pair_budget if pair_budget is not None else DEFAULT_PAIR_BUDGET
        if processed > budget:
            raise ResourceExhausted(f"pair budget {budget} exceeded")
        ei, ej = lms[i], lms[j]
        l = mono_lcm(ei, ej)
        if l == mono_mul(ei, ej):        # coprime leading terms
            continue
        chained = False
        for k in range(len(basis)):      # chain criterion
            if k == i or k == j:
                continue
            if mono_div(l, lms[k]) is not None:
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in alive and b not in alive:
                    chained = True
                    break
        if chained:
            continue
        fi, fj = basis[i], basis[j]
        s = (fi.mul_term(mono_div(l, ei), fld.one)
             - fj.mul_term(mono_div(l, ej), fld.one))
        rem = _reduce_dict(dict(s.terms), lead, order, fld)
        if rem:
            add_poly(Polynomial(ctx, rem).monic(order))

    reduced = _autoreduce(basis, order)
    return GroebnerBasis(all_gens, reduced, order, ctx)


def _autoreduce(basis, order):
    """Minimalize and tail-reduce; result sorted descending by leading term."""
    basis = [g for g in basis if not g.is_zero()]
    lms = [g.leading_monomial(order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        lm = lms[i]
        redundant = False
        for j in range(len(basis)):
            if j == i:
                continue
            if mono_div(lm, lms[j]) is not None:
                # equal leading monomials: keep the first occurrence
                if lms[j] != lm or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order)
        if not r.is_zero():
            out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return out


def is_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


# ---------------------------------------------------------------------------
# free-module vectors

class ModuleVector:
    """Element of a ranked free module, stored as coordinate polynomials."""

    __slots__ = ("ctx", "rank", "coords")

    def __init__(self, coords):
        coords = list(coords)
        if not coords:
            raise ValueError("empty module vector")
        self.coords = coords
        self.ctx = coords[0].ctx
        self.rank = len(coords)
        for c in coords[1:]:
            if c.ctx != self.ctx:
                raise ContextMismatch("coordinates from different contexts")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        return ModuleVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return ModuleVector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return ModuleVector([-a for a in self.coords])

    def mul_term(self, exps, coeff):
        return ModuleVector([c.mul_term(exps, coeff) for c in self.coords])

    def scale(self, c):
        return ModuleVector([p.scale(c) for p in self.coords])

    def scale_poly(self, p: Polynomial):
        return ModuleVector([p * c for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.coords == other.coords

    def pair_with(self, polys):
        """Dot product against a polynomial list of the same length."""
        acc = self.ctx.zero()
        for c, p in zip(self.coords, polys):
            acc = acc + c * p
        return acc

    def to_term_dict(self):
        d = {}
        for pos, c in enumerate(self.coords):
            for e, cf in c.terms.items():
                d[(pos, e)] = cf
        return d

    @staticmethod
    def from_term_dict(ctx, rank, d):
        coords = [dict() for _ in range(rank)]
        for (pos, e), c in d.items():
            coords[pos][e] = c
        return ModuleVector([Polynomial(ctx, c) for c in coords])

    def leading_position_term(self, order: MonomialOrder):
        """((position, exponents), coefficient) of the POT-largest term."""
        for pos, c in enumerate(self.coords):
            lt = c.leading_term(order)
            if lt is not None:
                return (pos, lt[0]), lt[1]   # earlier positions dominate
        return None

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _vec_prepare(basis, order):
    """Monic ((pos, lead exps), tail items) per nonzero basis vector."""
    out = []
    for g in basis:
        lt = g.leading_position_term(order)
        if lt is None:
            continue
        (pos, le), c = lt
        g = g.scale(g.ctx.field.inv(c))
        tail = [(k, v) for k, v in g.to_term_dict().items() if k != (pos, le)]
        out.append(((pos, le), tail))
    return out


def _vec_reduce_dict(work, lead, order, fld):
    """POT reduction of a module term dict against monic divisors."""
    keyf = order.key
    p = getattr(fld, "p", None)
    heap = []
    for (pos, e) in work:
        heappush(heap, (pos,) + tuple(-v for v in keyf(e)) + ((pos, e),))
    rem = {}
    while heap:
        key = heappop(heap)[-1]
        c = work.get(key)
        if c is None:
            continue
        pos, e = key
        hit = None
        for (gpos, le), tail in lead:
            if gpos != pos:
                continue
            ok = True
            for a, b in zip(e, le):
                if a < b:
                    ok = False
                    break
            if ok:
                hit = (le, tail)
                break
        if hit is None:
            del work[key]
            rem[key] = c
            continue
        del work[key]
        le, tail = hit
        q = tuple(a - b for a, b in zip(e, le))
        for (p2, e2), c2 in tail:
            t = (p2, tuple(q[i] + e2[i] for i in range(len(q))))
            if p is not None:
                nv = (work.get(t, 0) - c * c2) % p
            else:
                nv = work.get(t, 0) - c * c2
            if nv:
                if t not in work:
                    heappush(heap, (t[0],) + tuple(-v for v in keyf(t[1])) + (t,))
                work[t] = nv
            else:
                work.pop(t, None)
    return rem


def _vec_normal_form(v: ModuleVector, basis, order: MonomialOrder) -> ModuleVector:
    lead = _vec_prepare(basis, order)
    if not lead:
        return v
    rem = _vec_reduce_dict(v.to_term_dict(), lead, order, v.ctx.field)
    return ModuleVector.from_term_dict(v.ctx, v.rank, rem)


def module_groebner(vectors, order: MonomialOrder | None = None,
                    pair_budget: int | None = None):
    """Groebner basis of a submodule of a free module, POT order.

    Membership is then decidable by reduction to zero.
    """
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    ctx = vectors[0].ctx
    rank = vectors[0].rank
    for v in vectors:
        if v.rank != rank:
            raise ValueError("rank mismatch")
    order = order or ctx.order
    fld = ctx.field
    keyf = order.key

    basis = []     # monic vectors
    lpts = []      # ((pos, exps)) of leading terms
    lead = []      # ((pos, lead exps), tail items) cache for reduction
    heap = []
    alive = set()

    def add_vec(v):
        t = len(basis)
        (pos, le), _ = v.leading_position_term(order)
        for k in range(t):
            kpos, ke = lpts[k]
            if kpos != pos:
                continue
            l = mono_lcm(ke, le)
            heappush(heap, (mono_deg(l), pos, keyf(l), k, t))
            alive.add((k, t))
        basis.append(v)
        lpts.append((pos, le))
        lead.append(((pos, le),
                     [(k, c) for k, c in v.to_term_dict().items() if k != (pos, le)]))

    for v in vectors:
        rem = _vec_reduce_dict(v.to_term_dict(), lead, order, fld)
        r = ModuleVector.from_term_dict(ctx, rank, rem)
        if not r.is_zero():
            (pos, le), c = r.leading_position_term(order)
            add_vec(r.scale(fld.inv(c)))

    processed = 0
    while heap:
        _, _, _, i, j = heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        processed += 1
        budget = pair_budget if pair_budget is not None else DEFAULT_PAIR_BUDGET
        if processed > budget:
            raise ResourceExhausted(f"module pair budget {budget} exceeded")
        pos, ei = lpts[i]
        ej = lpts[j][1]
        l = mono_lcm(ei, ej)
        s = (basis[i].mul_term(mono_div(l, ei), fld.one)
             - basis[j].mul_term(mono_div(l, ej), fld.one))
        rem = _vec_reduce_dict(s.to_term_dict(), lead, order, fld)
        r = ModuleVector.from_term_dict(ctx, rank, rem)
        if not r.is_zero():
            c = r.leading_position_term(order)[1]
            add_vec(r.scale(fld.inv(c)))
    return basis


def module_member(v: ModuleVector, basis, order: MonomialOrder | None = None) -> bool:
    """Is v in the submodule with the given module Groebner basis?"""
    if v.is_zero():
        return True
    order = order or v.ctx.order
    return _vec_normal_form(v, basis, order).is_zero()


# ---------------------------------------------------------------------------
# syzygies

class SyzygyBasis:
    """Generators of the syzygy module of a polynomial or vector list."""

    def __init__(self, inputs, generators):
        self.inputs = inputs
        self.generators = generators

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def syzygies(items, order: MonomialOrder | None = None,
             pair_budget: int | None = None) -> SyzygyBasis:
    """Generators of the module of relations among ``items``.

    ``items`` is a nonempty list of Polynomials or of ModuleVectors of a
    common rank.  Computed by the elimination embedding: append unit
    vectors, take a POT module Groebner basis, and keep the elements whose
    leading block vanishes.
    """
    items = list(items)
    if not items:
        raise ValueError("syzygies of an empty list")
    if isinstance(items[0], Polynomial):
        vecs = [ModuleVector([p]) for p in items]
    else:
        vecs = list(items)
    ctx = vecs[0].ctx
    r = vecs[0].rank
    k = len(vecs)
    order = order or ctx.order

    embedded = []
    for idx, v in enumerate(vecs):
        unit = [ctx.zero()] * k
        unit[idx] = ctx.one()
        embedded.append(ModuleVector(v.coords + unit))
    gb = module_groebner(embedded, order, pair_budget)
    out = []
    for g in gb:
        if all(c.is_zero() for c in g.coords[:r]):
            out.append(ModuleVector(g.coords[r:]))
    return SyzygyBasis(items, out)
