"""Jacobi-Rogers polynomials, their Motzkin-path model, J-fraction expansion
and the dual family of monic orthogonal polynomials.

Everything is parametrised by a :class:`JRParams` pack holding the level
weights ``gamma(k)`` (k >= 0) and fall weights ``beta(k)`` (k >= 1).  Note that
``beta`` here is a *sequence* of polynomials; the statistic variable beta is the
polynomial variable ``b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from mahonian.checks import CheckReport, run_check
from mahonian.polyring import (
    Poly, Series, bq_factorial, bq_int, egf_product, q_binomial, q_int, var,
)

__all__ = [
    "JRParams", "MuTable", "OrthoSeq", "CheckReport", "PRESETS", "preset",
    "generic_params", "mu_table", "motzkin_paths", "motzkin_mu", "cf_taylor",
    "ortho_seq", "unitriangular_inverse", "duality_check",
    "little_q_laguerre_check", "egf_consistency",
]


@dataclass(frozen=True)
class JRParams:
    name: str
    gamma: Callable[[int], Poly]
    beta: Callable[[int], Poly]

    def __post_init__(self):
        # memoise; presets are pure functions of k
        object.__setattr__(self, "gamma", lru_cache(maxsize=None)(self.gamma))
        object.__setattr__(self, "beta", lru_cache(maxsize=None)(self.beta))


# -- parameter presets ------------------------------------------------------

def _euler() -> JRParams:
    return JRParams("euler", lambda k: Poly.const(2 * k + 1), lambda k: Poly.const(k * k))


def _beta_q() -> JRParams:
    q = var("q")
    return JRParams(
        "beta_q",
        lambda k: q ** k * (q_int(k) + bq_int(k + 1)),
        lambda k: q ** (2 * k - 1) * q_int(k) * bq_int(k),
    )


def _digraph() -> JRParams:
    u1, u2, u3, u4, a, b = (var(v) for v in ("u1", "u2", "u3", "u4", "a", "b"))
    return JRParams(
        "digraph",
        lambda k: k * (u3 + u4) + a * b,
        lambda k: k * (b - 1 + k) * u1 * u2,
    )


def _cyc() -> JRParams:
    u1, u2, u3, u4, a, b = (var(v) for v in ("u1", "u2", "u3", "u4", "a", "b"))
    # beta_{k+1} = (k + b)(k + 1) u1 u2, written at index k+1
    return JRParams(
        "cyc",
        lambda k: k * (u3 + u4) + a * b,
        lambda k: (k - 1 + b) * k * u1 * u2,
    )


def _alternating() -> JRParams:
    b = var("b")
    return JRParams("alternating", lambda k: Poly(), lambda k: k * (b - 1 + k))


def _zhu() -> JRParams:
    a1, a2, b1, b2, la, d, x = (var(v) for v in ("a1", "a2", "b1", "b2", "la", "d", "x"))
    lx = la + d * x
    return JRParams(
        "zhu",
        lambda k: (k * a1 + a2) * lx + (k * b1 + b2) * x,
        lambda k: k * (((k - 1) * a1 + a2) * b1 + a1 * b2) * x * lx,
    )


PRESETS: dict[str, Callable[[], JRParams]] = {
    "euler": _euler,
    "beta_q": _beta_q,
    "digraph": _digraph,
    "cyc": _cyc,
    "alternating": _alternating,
    "zhu": _zhu,
}


def preset(name: str) -> JRParams:
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


def generic_params(N: int) -> JRParams:
    """Fresh symbols ``g0..gN`` for the level weights and ``B1..BN`` for the falls."""
    for k in range(N + 1):
        var(f"g{k}")
    for k in range(1, N + 1):
        var(f"B{k}")
    return JRParams("generic", lambda k: var(f"g{k}"), lambda k: var(f"B{k}"))


# -- mu table ---------------------------------------------------------------

@dataclass(frozen=True)
class MuTable:
    N: int
    entries: tuple  # entries[n][k] for 0 <= k <= n

    def __getitem__(self, nk: tuple[int, int]) -> Poly:
        n, k = nk
        if not 0 <= k <= n or n > self.N:
            if n > self.N:
                raise IndexError(f"row {n} beyond order {self.N}")
            return Poly()
        return self.entries[n][k]

    def moments(self) -> list[Poly]:
        return [row[0] for row in self.entries]

    def matrix(self) -> list[list[Poly]]:
        return [[self[n, k] for k in range(self.N + 1)] for n in range(self.N + 1)]

    def to_json(self) -> dict:
        return {"N": self.N, "entries": [[p.to_text() for p in row] for row in self.entries]}


def mu_table(params: JRParams, N: int) -> MuTable:
    """``mu[n][k] = mu[n-1][k-1] + gamma_k mu[n-1][k] + beta_{k+1} mu[n-1][k+1]``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    rows = [(Poly.const(1),)]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            s = Poly()
            if k >= 1:
                s = s + prev[k - 1]
            if k <= n - 1 and prev[k]:
                s = s + params.gamma(k) * prev[k]
            if k + 1 <= n - 1 and prev[k + 1]:
                s = s + params.beta(k + 1) * prev[k + 1]
            row.append(s)
        rows.append(tuple(row))
    return MuTable(N, tuple(rows))


def motzkin_paths(n: int, k: int) -> Iterator[str]:
    """Motzkin paths of length n from height 0 to height k, as strings over
    ``U`` (rise), ``L`` (level) and ``D`` (fall)."""
    def rec(steps: str, h: int):
        left = n - len(steps)
        if left == 0:
            if h == k:
                yield steps
            return
        if abs(h - k) > left:
            return
        yield from rec(steps + "U", h + 1)
        yield from rec(steps + "L", h)
        if h > 0:
            yield from rec(steps + "D", h - 1)

    if 0 <= k <= n:
        yield from rec("", 0)


def motzkin_mu(params: JRParams, n: int, k: int) -> Poly:
    """Sum of path weights: level at height h weighs gamma_h, a fall from
    height h weighs beta_h, rises weigh 1."""
    total = Poly()
    for path in motzkin_paths(n, k):
        w = Poly.const(1)
        h = 0
        for step in path:
            if step == "U":
                h += 1
            elif step == "L":
                w = w * params.gamma(h)
            else:
                w = w * params.beta(h)
                h -= 1
        total = total + w
    return total


def cf_taylor(params: JRParams, N: int, depth: int | None = None) -> Series:
    """Taylor coefficients of the J-fraction up to ``t^N``.

    Level ``j`` first influences the coefficient of ``t^(2j)``, so the default
    truncation depth ``ceil(N/2) + 1`` is exact through order N.
    """
    if depth is None:
        depth = math.ceil(N / 2) + 1
    t = Series.from_list([0, 1], N)
    one = Series.from_list([1], N)

    def scalar(p: Poly) -> Series:
        return Series.from_list([p], N)

    inner = (one - scalar(params.gamma(depth)) * t).reciprocal()
    for j in range(depth - 1, -1, -1):
        denom = one - scalar(params.gamma(j)) * t - scalar(params.beta(j + 1)) * t * t * inner
        inner = denom.reciprocal()
    return inner


# -- orthogonal polynomials -------------------------------------------------

@dataclass(frozen=True)
class OrthoSeq:
    """Monic polynomials ``p_n(x) = sum_k coeffs[n][k] x^k``."""

    coeffs: tuple

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def as_poly(self, n: int, x: str = "x") -> Poly:
        X = var(x)
        return sum((c * X ** k for k, c in enumerate(self.coeffs[n])), Poly())

    def matrix(self) -> list[list[Poly]]:
        N = self.N
        return [[self.coeffs[n][k] if k <= n else Poly() for k in range(N + 1)]
                for n in range(N + 1)]


def ortho_seq(params: JRParams, N: int) -> OrthoSeq:
    """``p_{n+1} = (x - gamma_n) p_n - beta_n p_{n-1}`` with ``p_{-1} = 0``, ``p_0 = 1``."""
    prev: list[Poly] = []
    cur = [Poly.const(1)]
    out = [tuple(cur)]
    for n in range(N):
        nxt = [Poly()] + list(cur)  # x * p_n
        g = params.gamma(n)
        for k, c in enumerate(cur):
            nxt[k] = nxt[k] - g * c
        if n >= 1:
            bn = params.beta(n)
            for k, c in enumerate(prev):
                nxt[k] = nxt[k] - bn * c
        prev, cur = cur, nxt
        out.append(tuple(cur))
    return OrthoSeq(tuple(out))


def unitriangular_inverse(T: Sequence[Sequence]) -> list[list[Poly]]:
    """Inverse of a lower unitriangular matrix by forward substitution."""
    m = len(T)
    A = [[Poly._coerce(c) for c in row] for row in T]
    for i, row in enumerate(A):
        if len(row) != m:
            raise ValueError("matrix must be square")
        if row[i] != 1:
            raise ValueError(f"diagonal entry ({i},{i}) is {row[i]}, not 1")
        if any(row[j] for j in range(i + 1, m)):
            raise ValueError(f"row {i} has entries above the diagonal")
    inv = [[Poly.const(1) if i == j else Poly() for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(i):
            s = Poly()
            for k in range(j, i):
                if A[i][k] and inv[k][j]:
                    s = s + A[i][k] * inv[k][j]
            inv[i][j] = -s
    return inv


def duality_check(params: JRParams, N: int) -> CheckReport:
    """``x^n = sum_k mu_{n,k} p_k(x)``, and the coefficient matrix of the
    orthogonal polynomials equals the inverse of the mu matrix."""
    table = mu_table(params, N)
    ortho = ortho_seq(params, N)

    def body(expect):
        for n in range(N + 1):
            # coefficient of x^j in sum_k mu_{n,k} p_k(x)
            for j in range(N + 1):
                s = Poly()
                for k in range(j, n + 1):
                    s = s + table[n, k] * ortho.coeffs[k][j]
                expect(s, 1 if j == n else 0, check="x^n expansion", n=n, k=j)
        inv = unitriangular_inverse(table.matrix())
        A = ortho.matrix()
        for n in range(N + 1):
            for k in range(n + 1):
                expect(A[n][k], inv[n][k], check="inverse matrix", n=n, k=k)

    return run_check(f"duality[{params.name}]", body)


def little_q_laguerre_check(N: int) -> CheckReport:
    """The (b,q) preset against the explicit little q-Laguerre coefficients,
    their inversion formula, and the moments ``[n]_{b,q}!``."""
    params = preset("beta_q")
    table = mu_table(params, N)
    ortho = ortho_seq(params, N)
    q = var("q")

    def tail(n, k):
        out = Poly.const(1)
        for j in range(k + 1, n + 1):
            out = out * bq_int(j)
        return out

    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                sign = -1 if (n - k) % 2 else 1
                expected = sign * q ** math.comb(n - k, 2) * q_binomial(n, k) * tail(n, k)
                expect(ortho.coeffs[n][k], expected, check="laguerre coefficient", n=n, k=k)
        for n in range(N + 1):
            for k in range(n + 1):
                expect(table[n, k], q_binomial(n, k) * tail(n, k), check="inversion formula", n=n, k=k)
        for n in range(N + 1):
            expect(table[n, 0], bq_factorial(n), check="moment", n=n, k=0)

    return run_check("little-q-laguerre", body)


def egf_consistency(N: int) -> CheckReport:
    """Coefficientwise checks of the exponential generating function system
    linking cycle statistics, linear statistics and Laguerre digraphs.

    With ``F_n = P^lin_n / u1`` and ``J0_n = P^cyc_n`` (EGF coefficients):

    (i)   F' = 1 + (u3+u4) F + u1u2 F^2
    (ii)  J0' = ab J0 + b u1u2 J0 F
    (iii) n! [z^n] J0 F^k / k! = mu_{n,k} of the cyc preset
    (iv)  u1^k mu_{n,k} = sum over LD_{n,k} of the unshifted weight, and the
          same sum equals n! [z^n] G^cyc (G^lin)^k / k!
    Divisions by k! are done by multiplying the other side by k!.
    """
    from mahonian.digraphs import ld_enumerator, perm_cycle_poly, perm_linear_poly

    u1, u2, u3, u4, a, b = (var(v) for v in ("u1", "u2", "u3", "u4", "a", "b"))
    lin = [Poly()] + [perm_linear_poly(n) for n in range(1, N + 2)]
    F = [p.exquo_monomial({"u1": 1}) for p in lin]
    J0 = [perm_cycle_poly(n) for n in range(N + 2)]
    table = mu_table(preset("cyc"), N)

    def body(expect):
        FF = egf_product(F, F)
        for n in range(N + 1):
            expect(F[n + 1], (1 if n == 0 else 0) + (u3 + u4) * F[n] + u1 * u2 * FF[n],
                   check="riccati", n=n)
        J0F = egf_product(J0, F)
        for n in range(N + 1):
            expect(J0[n + 1], a * b * J0[n] + b * u1 * u2 * J0F[n], check="aigner", n=n)
        power = [Poly.const(1)] + [Poly()] * N  # F^0 as an EGF
        Gpow = [Poly.const(1)] + [Poly()] * N
        for k in range(N + 1):
            col = egf_product(J0[: N + 1], power)
            lcol = egf_product(J0[: N + 1], Gpow)
            for n in range(k, N + 1):
                expect(col[n], math.factorial(k) * table[n, k], check="sheffer column", n=n, k=k)
                unshifted = ld_enumerator(n, k, shift=False)
                expect(unshifted, u1 ** k * table[n, k], check="digraph weight", n=n, k=k)
                expect(math.factorial(k) * unshifted, lcol[n], check="product formula", n=n, k=k)
            power = egf_product(power, F[: N + 1])
            Gpow = egf_product(Gpow, lin[: N + 1])

    return run_check("egf", body)
