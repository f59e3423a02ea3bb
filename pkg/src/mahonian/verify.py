"""Identity-verification tasks run by ``mahonian verify``.

Each task takes an order bound and a worker count and returns a
:class:`~mahonian.checks.CheckReport`; the first mismatch is reported with
enough context (sizes, object, both polynomial sides) to re-check by hand.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

from mahonian import carlitz, digraphs, jacobi_rogers as jr, permstats
from mahonian.checks import CheckReport, run_check
from mahonian.permstats import LaguerreWord, between_inversions
from mahonian.polyring import Poly, bq_factorial, bq_int, q_binomial, q_factorial, var

__all__ = ["Task", "TASKS", "VerifyReport", "run_task", "closed_form_thm21"]


def closed_form_thm21(n: int, k: int) -> Poly:
    out = q_binomial(n, k)
    for j in range(k + 1, n + 1):
        out = out * bq_int(j)
    return out


def _thm21(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                target = closed_form_thm21(n, k)
                by_maj = permstats.distribution(n, k, "maj", jobs=jobs)
                by_inv = permstats.distribution(n, k, "inv", jobs=jobs)
                expect(by_maj, target, n=n, k=k, side="maj")
                expect(by_inv, target, n=n, k=k, side="inv")
                # b = 1: [n,k]_q [n]_q! / [k]_q!, cleared of the division
                expect(by_maj.subs({"b": 1}) * q_factorial(k),
                       q_binomial(n, k) * q_factorial(n), n=n, k=k, side="b=1")
    return run_check("thm2.1", body)


def _thm22(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                lhs, rhs = permstats.hrw_sides(n, k, jobs=jobs)
                expect(lhs, rhs, n=n, k=k)
                plain = permstats.distribution(n, k, "inv", rlmin=False, jobs=jobs)
                expect(lhs.subs({"z": 0}), plain, n=n, k=k, side="z=0")
    return run_check("thm2.2", body)


def _prop31(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                for w in permstats.enumerate_words(n, k):
                    s = permstats.full_stats(w)
                    M = permstats.word_to_matrix(w)
                    expect(permstats.matrix_survivor_inv(M), s.inv, word=str(w), stat="inv")
                    expect(permstats.matrix_survivor_maj(M), s.maj, word=str(w), stat="maj")
                    expect(str(permstats.matrix_to_word(M)), str(w), word=str(w), stat="round trip")
    return run_check("prop3.1", body)


def _eq34(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                for w in permstats.enumerate_words(n, k):
                    s = permstats.full_stats(w)
                    expect(s.inv, s.tilde_inv_filled + s.inv_holes, word=str(w))
    return run_check("eq3.4", body)


def _thm32(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for alphabet in carlitz.compositions(n, 4):
                words = list(carlitz.enumerate_multiset(alphabet))
                expect(len(words), carlitz.multiset_count(alphabet), alphabet=list(alphabet), check="count")
                image = set()
                for w in words:
                    p = carlitz.carlitz_psi(w)
                    image.add(p)
                    tag = dict(alphabet=list(alphabet), word=" ".join(map(str, w)))
                    expect(sorted(carlitz.rlmin_multiset(w)) == sorted(carlitz.rlmin_multiset(p)), True,
                           check="Rlmin", **tag)
                    expect(permstats.inversions(w), permstats.major_index(p), check="inv->maj", **tag)
                    expect(sum(carlitz.b_code(w)), permstats.inversions(w), check="b-code sum", **tag)
                    expect(carlitz.carlitz_psi_inverse(p) == tuple(w), True, check="inverse", **tag)
                expect(len(image), len(words), alphabet=list(alphabet), check="bijection")
    return run_check("thm3.2", body)


def _wilson(N, jobs):
    def body(expect):
        for n in range(N + 1):
            for alphabet in carlitz.compositions(n, max(n, 1)):
                lhs, rhs = carlitz.wilson_sides(alphabet, jobs=jobs)
                expect(lhs, rhs, alphabet=list(alphabet))
            # the partial-permutation case reduces to the alphabet {1..n-k, hole^k}
            for k in range(1, n + 1):
                alphabet = (1,) * (n - k) + (k,)
                w_lhs, _ = carlitz.wilson_sides(alphabet, jobs=jobs)
                p_lhs, _ = permstats.hrw_sides(n, k, jobs=jobs)
                expect(p_lhs, q_binomial(n, k) * w_lhs, n=n, k=k, check="partial reduction")
    return run_check("wilson", body)


def _macmahon(N, jobs):
    def body(expect):
        q = var("q")
        for n in range(N + 1):
            for alphabet in carlitz.compositions(n, max(n, 1)):
                by_inv = Poly()
                by_maj = Poly()
                for w in carlitz.enumerate_multiset(alphabet):
                    by_inv = by_inv + q ** permstats.inversions(w)
                    by_maj = by_maj + q ** permstats.major_index(w)
                denom = Poly.const(1)
                for m in alphabet:
                    denom = denom * q_factorial(m)
                expect(by_inv, by_maj, alphabet=list(alphabet), check="inv vs maj")
                expect(by_inv * denom, q_factorial(n), alphabet=list(alphabet), check="product formula")
    return run_check("macmahon", body)


def _lemma32(N, jobs):
    def body(expect):
        q = var("q")
        for n in range(N + 1):
            for k in range(n + 1):
                per_set = Poly.const(1)
                for j in range(k + 1, n + 1):
                    per_set = per_set * bq_int(j)
                total = Poly()
                gauss = Poly()
                for I in permstats.hole_sets(n, k):
                    restricted = permstats.distribution(n, k, "tilde_inv_filled", holes=I)
                    expect(restricted, per_set, n=n, k=k, holes=list(I))
                    rest = [x for x in range(1, n + 1) if x not in I]
                    weight = q ** between_inversions(rest, I)
                    total = total + weight * restricted
                    gauss = gauss + weight
                expect(gauss, q_binomial(n, k), n=n, k=k, check="gaussian")
                expect(total, closed_form_thm21(n, k), n=n, k=k, check="sum over hole sets")
    return run_check("lemma3.2", body)


TABLE1 = {
    "1 * 2": "b^2", "1 * 3": "bq", "2 * 3": "q^2",
    "2 * 1": "bq", "3 * 1": "bq^2", "3 * 2": "q^3",
}


def _table1(N, jobs):
    def body(expect):
        b, q = var("b"), var("q")
        total = Poly()
        for w in permstats.enumerate_words(3, 1, holes=(2,)):
            s = permstats.full_stats(w)
            weight = b ** s.rlmin * q ** s.tilde_inv_filled
            expect(weight.to_text(), TABLE1[str(w)], word=str(w))
            total = total + weight
        expect(total, (b + q) * (b + q + q ** 2), check="sum")
    return run_check("table1", body)


def _thm23(N, jobs):
    table = jr.mu_table(jr.preset("digraph"), N)

    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                expect(digraphs.ld_enumerator(n, k, jobs=jobs), table[n, k], n=n, k=k)
    return run_check("thm2.3", body)


def _alternating(N, jobs):
    table = jr.mu_table(jr.preset("alternating"), N)

    def body(expect):
        for n in range(N + 1):
            for k in range(n + 1):
                specialized = digraphs.ld_enumerator(n, k, jobs=jobs).subs(
                    {"u3": 0, "u4": 0, "a": 0, "u1": 1, "u2": 1})
                expect(specialized, table[n, k], n=n, k=k)
    return run_check("alternating", body)


def _lemma42(N, jobs):
    params = jr.preset("cyc")
    table = jr.mu_table(params, N)
    series = jr.cf_taylor(params, N)

    def body(expect):
        for n in range(N + 1):
            cyc = digraphs.perm_cycle_poly(n)
            expect(cyc, table[n, 0], n=n, check="recurrence")
            expect(cyc, series[n], n=n, check="continued fraction")
    return run_check("lemma4.2", body)


def _riccati(N, jobs):
    u1, u2, u3, u4 = (var(v) for v in ("u1", "u2", "u3", "u4"))
    lin = [Poly()] + [digraphs.perm_linear_poly(n) for n in range(1, N + 1)]

    def body(expect):
        for n in range(N):
            conv = Poly()
            for j in range(n + 1):
                conv = conv + math.comb(n, j) * lin[j] * lin[n - j]
            rhs = (u1 if n == 0 else 0) + (u3 + u4) * lin[n] + u2 * conv
            expect(lin[n + 1], rhs, n=n + 1)
    return run_check("riccati", body)


def _aigner(N, jobs):
    return jr.egf_consistency(N)


def _zhu(N, jobs):
    def body(expect):
        for n in range(N + 1):
            lhs, rhs = digraphs.zhu_sides(n)
            expect(lhs, rhs, n=n)
    return run_check("zhu", body)


def _moments_euler(N, jobs):
    params = jr.preset("euler")
    table = jr.mu_table(params, N)
    ortho = jr.ortho_seq(params, N)

    def body(expect):
        for n in range(N + 1):
            expect(table[n, 0], math.factorial(n), n=n, check="moment")
            for k in range(n + 1):
                expect(table[n, k], math.comb(n, k) * math.factorial(n) // math.factorial(k), n=n, k=k)
                expect(ortho.coeffs[n][k],
                       (-1) ** (n - k) * math.comb(n, k) * math.factorial(n) // math.factorial(k),
                       n=n, k=k, check="laguerre")
    return run_check("moments-euler", body)


def _moments_bq(N, jobs):
    table = jr.mu_table(jr.preset("beta_q"), N)

    def body(expect):
        for n in range(N + 1):
            expect(table[n, 0], bq_factorial(n), n=n)
            expect(table[n, 0].subs({"b": 1}), q_factorial(n), n=n, check="b=1")
    return run_check("moments-bq", body)


def _param_sets(N: int, generic_cap: int):
    for name in jr.PRESETS:
        yield name, jr.preset(name), N
    g = min(N, generic_cap)
    yield "generic", jr.generic_params(g + 2), g


def _cf_vs_recurrence(N, jobs):
    def body(expect):
        for name, params, M in _param_sets(N, 6):
            table = jr.mu_table(params, M)
            series = jr.cf_taylor(params, M)
            deeper = jr.cf_taylor(params, M, depth=math.ceil(M / 2) + 2)
            for n in range(M + 1):
                expect(series[n], table[n, 0], preset=name, n=n)
                expect(deeper[n], series[n], preset=name, n=n, check="depth guard")
    return run_check("cf-vs-recurrence", body)


def _motzkin_oracle(N, jobs):
    def body(expect):
        for name, params, M in _param_sets(N, 6):
            table = jr.mu_table(params, M)
            for n in range(M + 1):
                for k in range(n + 1):
                    expect(jr.motzkin_mu(params, n, k), table[n, k], preset=name, n=n, k=k)
    return run_check("motzkin-oracle", body)


def _duality(N, jobs):
    def body(expect):
        for name, params, M in _param_sets(N, 5):
            report = jr.duality_check(params, M)
            expect(report.ok, True, preset=name, N=M, detail=report.failure)
    return run_check("duality", body)


def _little_q(N, jobs):
    return jr.little_q_laguerre_check(N)


@dataclass(frozen=True)
class Task:
    id: str
    default: int
    description: str
    run: Callable[[int, int], CheckReport]
    bound_name: str = "n_max"


TASKS: dict[str, Task] = {t.id: t for t in [
    Task("thm2.1", 6, "(maj, rlmin) and (inv, rlmin) share the product formula", _thm21),
    Task("thm2.2", 5, "Haglund-Remmel-Wilson identity on partial permutations", _thm22),
    Task("prop3.1", 6, "matrix survivor counts equal inv and maj", _prop31),
    Task("eq3.4", 6, "inv splits into tilde inv_filled + inv_holes", _eq34),
    Task("thm3.2", 7, "Carlitz insertion: bijection, Rlmin kept, inv to maj", _thm32),
    Task("wilson", 6, "multiset Haglund-Remmel-Wilson identity", _wilson),
    Task("macmahon", 7, "MacMahon equidistribution and product formula", _macmahon),
    Task("lemma3.2", 6, "per-hole-set product and gaussian assembly", _lemma32),
    Task("table1", 3, "the six weights on holes {2} for n = 3", _table1),
    Task("thm2.3", 5, "Laguerre digraph enumerator equals mu_{n,k}", _thm23),
    Task("alternating", 6, "alternating Laguerre digraphs", _alternating),
    Task("lemma4.2", 7, "cycle statistics J-fraction", _lemma42),
    Task("riccati", 7, "Riccati equation for the linear EGF", _riccati),
    Task("aigner", 6, "EGF system: Riccati, Aigner, column factorization, product formula", _aigner),
    Task("zhu", 5, "Zhu's J-fraction against its permutation interpretation", _zhu),
    Task("moments-euler", 8, "Euler preset moments, mu table and Laguerre coefficients", _moments_euler, "N"),
    Task("moments-bq", 7, "(b,q) preset moments", _moments_bq, "N"),
    Task("cf-vs-recurrence", 8, "J-fraction Taylor coefficients equal mu_{n,0}", _cf_vs_recurrence, "N"),
    Task("motzkin-oracle", 8, "Motzkin path sums equal the mu table", _motzkin_oracle, "N"),
    Task("duality", 7, "x^n = sum mu_{n,k} p_k and matrix inversion", _duality, "N"),
    Task("little-q-laguerre", 7, "little q-Laguerre coefficients and inversion formula", _little_q, "N"),
]}


@dataclass(frozen=True)
class VerifyReport:
    id: str
    bounds: dict
    status: str
    checked: int
    counterexample: dict | None
    seconds: float

    def to_json(self, timing: bool = False) -> dict:
        out = {"id": self.id, "bounds": self.bounds, "status": self.status,
               "checked": self.checked, "counterexample": self.counterexample}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def run_task(task_id: str, bound: int | None = None, jobs: int = 1) -> VerifyReport:
    task = TASKS[task_id]
    bound = task.default if bound is None else bound
    start = time.perf_counter()
    report = task.run(bound, jobs)
    elapsed = time.perf_counter() - start
    return VerifyReport(
        id=task_id, bounds={task.bound_name: bound},
        status="pass" if report.ok else "fail", checked=report.checked,
        counterexample=report.failure, seconds=elapsed,
    )
