"""Matrices over the polynomial ring: determinants, minors ideals, rank."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import ContextMismatch, NonSquare
from .field import PrimeField
from .ideal import Ideal
from .poly import Polynomial, RingContext

_RANK_PRIME = 2147483647   # Mersenne prime; evaluation field for random rank


class PolyMatrix:
    """Row-major matrix of polynomials over one context."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
        self.entries = rows
        self.nrows = len(rows)
        self.ncols = width
        self.ctx = rows[0][0].ctx
        for r in rows:
            for p in r:
                if p.ctx != self.ctx:
                    raise ContextMismatch("matrix entries from different contexts")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def drop_column(self, j: int) -> "PolyMatrix":
        cols = [c for c in range(self.ncols) if c != j]
        return self.submatrix(range(self.nrows), cols)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.nrows)]
                           for j in range(self.ncols)])

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.ctx.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def column(self, j: int):
        return [self.entries[i][j] for i in range(self.nrows)]

    def mul_vector(self, vec):
        """Matrix times a column vector of polynomials."""
        out = []
        for i in range(self.nrows):
            acc = self.ctx.zero()
            for j in range(self.ncols):
                acc = acc + self.entries[i][j] * vec[j]
            out.append(acc)
        return out

    def to_strings(self):
        return [[str(p) for p in row] for row in self.entries]

    def __repr__(self):
        return f"<PolyMatrix {self.nrows}x{self.ncols}>"

    # -- determinants --------------------------------------------------------

    def determinant(self) -> Polynomial:
        """Exact determinant; cofactor expansion up to 4x4, Bareiss above."""
        if self.nrows != self.ncols:
            raise NonSquare(f"{self.nrows}x{self.ncols}")
        if self.nrows <= 4:
            return self._det_cofactor(list(range(self.nrows)),
                                      list(range(self.ncols)))
        return self._det_bareiss()

    def _det_cofactor(self, rows, cols) -> Polynomial:
        if len(rows) == 1:
            return self.entries[rows[0]][cols[0]]
        acc = self.ctx.zero()
        r0 = rows[0]
        rest = rows[1:]
        for k, c in enumerate(cols):
            e = self.entries[r0][c]
            if e.is_zero():
                continue
            sub = self._det_cofactor(rest, cols[:k] + cols[k + 1:])
            term = e * sub
            acc = acc + (term if k % 2 == 0 else -term)
        return acc

    def _det_bareiss(self) -> Polynomial:
        """Fraction-free Bareiss elimination with lowest-degree pivoting."""
        n = self.nrows
        a = [row[:] for row in self.entries]
        ctx = self.ctx
        sign = 1
        prev = ctx.one()
        for k in range(n - 1):
            # pivot: nonzero entry of smallest total degree in the block
            piv = None
            for i in range(k, n):
                for j in range(k, n):
                    if not a[i][j].is_zero():
                        d = a[i][j].total_degree()
                        if piv is None or d < piv[0]:
                            piv = (d, i, j)
            if piv is None:
                return ctx.zero()
            _, pi, pj = piv
            if pi != k:
                a[k], a[pi] = a[pi], a[k]
                sign = -sign
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    q = num.exact_divide(prev)
                    if q is None:
                        raise RuntimeError("Bareiss exact division failed; bug")
                    a[i][j] = q
                a[i][k] = ctx.zero()
            prev = a[k][k]
        det = a[n - 1][n - 1]
        return det if sign == 1 else -det

    # -- minors --------------------------------------------------------------

    def minors_ideal(self, k: int) -> Ideal:
        """Ideal of all k x k minors; R for k <= 0, (0) for k too large."""
        if k <= 0:
            return Ideal(self.ctx, [self.ctx.one()])
        if k > min(self.nrows, self.ncols):
            return Ideal(self.ctx, [])
        gens = []
        for rows in combinations(range(self.nrows), k):
            for cols in combinations(range(self.ncols), k):
                gens.append(self.submatrix(rows, cols).determinant())
        return Ideal(self.ctx, gens)

    def signed_max_minors(self):
        """(a_1, ..., a_{n}) with a_j = (-1)^(j-1) det(drop column j)."""
        if self.ncols != self.nrows + 1:
            raise ValueError("need exactly one more column than rows")
        out = []
        for j in range(self.ncols):
            d = self.drop_column(j).determinant()
            out.append(d if j % 2 == 0 else -d)
        return out

    # -- rank ----------------------------------------------------------------

    def rank(self, trials: int = 3, rng: random.Random | None = None,
             symbolic: bool = False) -> int:
        """Rank over the fraction field.

        Probabilistic: maximum rank of evaluations at uniform random points
        over a large prime field (failure probability is bounded by the
        Schwartz-Zippel lemma per trial).  ``symbolic=True`` confirms by
        fraction-free elimination instead.
        """
        if symbolic:
            return self._rank_symbolic()
        rng = rng or random.Random(0)
        fp = PrimeField(_RANK_PRIME)
        best = 0
        for _ in range(max(1, trials)):
            point = [rng.randrange(1, fp.p) for _ in range(self.ctx.nvars)]
            num = [[_eval_mod(self.entries[i][j], point, fp.p)
                    for j in range(self.ncols)] for i in range(self.nrows)]
            best = max(best, _mod_rank(num, fp.p))
        return best

    def _rank_symbolic(self) -> int:
        """Rank by searching a nonzero minor, largest size first."""
        for k in range(min(self.nrows, self.ncols), 0, -1):
            for rows in combinations(range(self.nrows), k):
                for cols in combinations(range(self.ncols), k):
                    if not self.submatrix(rows, cols).determinant().is_zero():
                        return k
        return 0


def _eval_mod(p: Polynomial, point, q: int) -> int:
    acc = 0
    for e, c in p.terms.items():
        v = _coeff_mod(c, q)
        for x, k in zip(point, e):
            if k:
                v = v * pow(x, k, q) % q
        acc = (acc + v) % q
    return acc


def _coeff_mod(c, q: int) -> int:
    if isinstance(c, int):
        return c % q
    return c.numerator * pow(c.denominator, q - 2, q) % q


def _mod_rank(rows, q: int) -> int:
    m = [r[:] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    col = 0
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col] % q:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], q - 2, q)
        for i in range(rank + 1, nr):
            f = m[i][col] * inv % q
            if f:
                for j in range(col, nc):
                    m[i][j] = (m[i][j] - f * m[rank][j]) % q
        rank += 1
        if rank == nr:
            break
    return rank
