"""The cyclic exponent family of determinantal ideals.

From an order m and an m x (m+1) array of positive exponents, builds the
cyclic matrix M of variable powers, its signed maximal minors, the
minimum-exponent data (beta, reduced entries, selectors), the companion
matrix A, and the distinguished element delta that generates the
saturation of the m-th power over the power itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, HypothesisNotSatisfied
from .field import QQ
from .groebner import normal_form
from .ideal import Ideal
from .pmatrix import PolyMatrix
from .poly import Grevlex, MonomialOrder, RingContext


@dataclass(frozen=True)
class CyclicSpec:
    """(m, alpha): the exponent family defining one cyclic matrix."""

    m: int
    alpha: tuple    # m rows x (m+1) cols of positive ints

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        alpha = tuple(tuple(row) for row in self.alpha)
        if len(alpha) != self.m or any(len(r) != self.m + 1 for r in alpha):
            raise ValueError(f"alpha must be {self.m} x {self.m + 1}")
        if any(a < 1 for r in alpha for a in r):
            raise ValueError("alpha entries must be positive")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def ones(cls, m: int) -> "CyclicSpec":
        return cls(m, tuple((1,) * (m + 1) for _ in range(m)))

    def is_ones(self) -> bool:
        return all(a == 1 for r in self.alpha for a in r)

    def variable_index(self, i: int, j: int) -> int:
        """1-based variable index k carried by entry (i, j), 1-based."""
        return i + j - 1 if i + j <= self.m + 2 else i + j - self.m - 2


@dataclass
class WitnessPrimes:
    """Linear-form prime ideals witnessing embedded associated primes."""

    q_diff: Ideal                      # (x_1-x_2, ..., x_m-x_{m+1})
    p_parity: Ideal | None = None      # odd-index differences x_i - x_{i+2}
    q_parity: Ideal | None = None      # even-index differences
    minors2_contained: bool | None = None
    minors3_contained: bool | None = None
    parity_generator_deficit: bool = False


class CyclicFamily:
    """Everything derived from one CyclicSpec over a chosen field."""

    def __init__(self, spec: CyclicSpec, fld=QQ,
                 order: MonomialOrder | None = None):
        self.spec = spec
        m = spec.m
        self.m = m
        self.ctx = RingContext(tuple(f"x{k}" for k in range(1, m + 2)),
                               fld, order or Grevlex())
        x = self.ctx.gens()
        self.x = x

        # the cyclic matrix of variable powers
        self.M = PolyMatrix([
            [x[spec.variable_index(i, j) - 1] ** spec.alpha[i - 1][j - 1]
             for j in range(1, m + 2)]
            for i in range(1, m + 1)])

        self.a = self.M.signed_max_minors()
        self.I = Ideal(self.ctx, self.a)
        self.max_ideal = Ideal(self.ctx, x)
        # prefix ideals (x_1, ..., x_k), k = 0 .. m+1
        self.J = [Ideal(self.ctx, x[:k]) for k in range(m + 2)]

        self.beta, self.selector = self._compute_beta()
        self.xprime_exp = self._compute_xprime_exponents()
        self._check_factorization()

        self.Q = Ideal(self.ctx, [x[k] ** self.beta[k] for k in range(m + 1)])
        self.Qprime = Ideal(self.ctx, [x[k] ** self.beta[k] for k in range(m)])

        self._A = None
        self._delta = None
        self._b_signed = None

    # -- beta / x' -----------------------------------------------------------

    def _compute_beta(self):
        """Minimum exponent of each variable among the entries of M, plus the
        smallest row index realizing it."""
        m, alpha = self.m, self.spec.alpha
        beta = []
        selector = []
        for k in range(1, m + 2):
            candidates = []   # (i, exponent)
            if k < m:
                for i in range(1, k + 1):
                    candidates.append((i, alpha[i - 1][k - i]))
                for i in range(k + 1, m + 1):
                    candidates.append((i, alpha[i - 1][k - i + m + 1]))
            else:
                for i in range(1, m + 1):
                    candidates.append((i, alpha[i - 1][k - i]))
            bk = min(e for _, e in candidates)
            ik = min(i for i, e in candidates if e == bk)
            beta.append(bk)
            selector.append(ik)
        return tuple(beta), tuple(selector)

    def _compute_xprime_exponents(self):
        """Exponent of x_k in x'_{ik}; table indexed [i-1][k-1]."""
        m, alpha = self.m, self.spec.alpha
        table = []
        for i in range(1, m + 1):
            row = []
            for k in range(1, m + 2):
                if i <= k:
                    e = alpha[i - 1][k - i] - self.beta[k - 1]
                else:
                    e = alpha[i - 1][k - i + m + 1] - self.beta[k - 1]
                if e < 0:
                    raise ConstructionError("negative reduced exponent")
                row.append(e)
            table.append(row)
        return tuple(tuple(r) for r in table)

    def xprime(self, i: int, k: int):
        """x'_{ik} as a polynomial (1-based indices)."""
        return self.x[k - 1] ** self.xprime_exp[i - 1][k - 1]

    def _check_factorization(self):
        """Every entry must factor as x_k^{beta_k} * x'_{ik}."""
        m = self.m
        for i in range(1, m + 1):
            for j in range(1, m + 2):
                k = self.spec.variable_index(i, j)
                lhs = self.M[i - 1, j - 1]
                rhs = self.x[k - 1] ** self.beta[k - 1] * self.xprime(i, k)
                if lhs != rhs:
                    raise ConstructionError(f"factorization fails at ({i},{j})")
        for k in range(1, m + 2):
            if self.xprime_exp[self.selector[k - 1] - 1][k - 1] != 0:
                raise ConstructionError(f"selector i_{k} does not realize beta_{k}")

    # -- the companion matrix A and delta ------------------------------------

    @property
    def A(self) -> PolyMatrix:
        """a_{ik} = x'_{ik} * a_{k-i+1} (i <= k) or x'_{ik} * a_{k-i+m+2}."""
        if self._A is None:
            if self.m < 2:
                raise HypothesisNotSatisfied("A is defined for m >= 2")
            m = self.m
            rows = []
            for i in range(1, m + 1):
                row = []
                for k in range(1, m + 2):
                    idx = (k - i + 1) if i <= k else (k - i + m + 2)
                    row.append(self.xprime(i, k) * self.a[idx - 1])
                rows.append(row)
            self._A = PolyMatrix(rows)
            self._check_A_pairing()
        return self._A

    def x_beta(self):
        """The column (x_1^{beta_1}, ..., x_{m+1}^{beta_{m+1}})."""
        return [self.x[k] ** self.beta[k] for k in range(self.m + 1)]

    def _check_A_pairing(self):
        for entry in self._A.mul_vector(self.x_beta()):
            if not entry.is_zero():
                raise ConstructionError("A * x^beta != 0")

    @property
    def b_signed(self):
        """b'_k = (-1)^(k-1) det(A with column k removed)."""
        if self._b_signed is None:
            self._b_signed = self.A.signed_max_minors()
        return self._b_signed

    @property
    def delta(self):
        if self._delta is None:
            self._delta, _ = extract_delta(self.A, self.x_beta())
        return self._delta

    # -- congruence of delta mod Q' ------------------------------------------

    def alpha_anti_diagonal_sum(self) -> int:
        """alpha_{1,m+1} + alpha_{2,m} + ... + alpha_{m,2}."""
        return sum(self.spec.alpha[i - 1][self.m + 1 - i] for i in range(1, self.m + 1))

    def delta_congruence_check(self):
        """delta must be +-(last variable)^(m*s - beta_{m+1}) mod Q', where s
        is the anti-diagonal exponent sum.  Returns the matching sign."""
        m = self.m
        for k in range(1, m + 1):
            if self.beta[k - 1] != self.spec.alpha[k - 1][0]:
                raise HypothesisNotSatisfied(
                    f"beta_{k} != alpha_{k},1; congruence form not guaranteed")
        exp = m * self.alpha_anti_diagonal_sum() - self.beta[m]
        target = self.x[m] ** exp
        gb = self.Qprime.groebner()
        for sign in (1, -1):
            if normal_form(self.delta - target.scale(self.ctx.field.from_int(sign)), gb).is_zero():
                return sign, exp
        raise ConstructionError("delta not congruent to a signed pure power mod Q'")

    # -- associated-prime bookkeeping ----------------------------------------

    def minors(self, k: int) -> Ideal:
        return self.M.minors_ideal(k)

    def lambda_set(self, n: int):
        """Indices i in [max(1, m-n+1), m] whose i-minors ideal has height
        exactly m - i + 2."""
        if n < 1:
            raise ValueError("n must be >= 1")
        m = self.m
        out = set()
        for i in range(max(1, m - n + 1), m + 1):
            if self.minors(i).height() == m - i + 2:
                out.add(i)
        return out

    def witness_primes(self, check: bool = True) -> WitnessPrimes:
        """Difference and parity primes of linear forms, with containment
        checks of the 2- and 3-minors ideals."""
        m, x = self.m, self.x
        q_diff = Ideal(self.ctx, [x[i] - x[i + 1] for i in range(m)])
        wp = WitnessPrimes(q_diff=q_diff)
        if not self.spec.is_ones():
            raise HypothesisNotSatisfied("witness primes need all exponents 1")
        if check:
            wp.minors2_contained = q_diff.contains(self.minors(2))
        if m >= 3 and m % 2 == 1:
            # odd-index chain x_1 ~ x_3 ~ ... and even-index chain x_2 ~ x_4 ~ ...
            p_gens = [x[i - 1] - x[i + 1] for i in range(1, m - 1) if i % 2 == 1]
            q_gens = [x[j - 1] - x[j + 1] for j in range(2, m) if j % 2 == 0]
            wp.p_parity = Ideal(self.ctx, p_gens)
            wp.q_parity = Ideal(self.ctx, q_gens)
            expected = (m - 1) // 2
            wp.parity_generator_deficit = (len(p_gens) != expected
                                           or len(q_gens) != expected)
            if check:
                wp.minors3_contained = (wp.p_parity + wp.q_parity).contains(self.minors(3))
        return wp


def extract_delta(A: PolyMatrix, y):
    """Given A with A * y^T = 0, return (delta, signed maximal minors b').

    delta = (sum of b'_k) / (sum of y_k) by exact division, after checking
    the cross identities (sum y)*b'_k = y_k*(sum b') for every k; the
    postcondition y_k * delta = b'_k is then verified.
    """
    ctx = A.ctx
    for entry in A.mul_vector(list(y)):
        if not entry.is_zero():
            raise ValueError("A * y^T != 0")
    b = A.signed_max_minors()
    y_sum = ctx.zero()
    for yk in y:
        y_sum = y_sum + yk
    b_sum = ctx.zero()
    for bk in b:
        b_sum = b_sum + bk
    for yk, bk in zip(y, b):
        if y_sum * bk != yk * b_sum:
            raise ConstructionError("cross identity (sum y)*b'_k = y_k*(sum b') fails")
    delta = b_sum.exact_divide(y_sum)
    if delta is None:
        raise ConstructionError("sum of signed minors not divisible by sum of y")
    for yk, bk in zip(y, b):
        if yk * delta != bk:
            raise ConstructionError("y_k * delta != b'_k")
    return delta, b
