"""Exact sparse multivariate polynomials over the integers.

A :class:`Poly` maps monomials to nonzero Python ints.  A monomial is a tuple
of ``(name, exponent)`` pairs sorted by variable name, so keys hash the same in
every process regardless of the order in which variables were registered.
The variable registry only fixes the *printing* order.

>>> q, b = var("q"), var("b")
>>> str((b + q) * (b + q + q**2))
'b^2+2bq+q^2+bq^2+q^3'
>>> str(q_binomial(4, 2))
'1+q+2q^2+q^3+q^4'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "DEFAULT_VARIABLES", "register", "registry", "Poly", "Series", "var",
    "poly_arith", "q_int", "bq_int", "q_factorial", "bq_factorial",
    "q_binomial", "series_ops", "egf_product",
]

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by name

# b is the statistic variable beta, a is alpha, la is lambda.
# Registry order is the printing order: "ab", "bq^2", "u1u2".
DEFAULT_VARIABLES = (
    "a", "b", "q", "z", "x", "u1", "u2", "u3", "u4",
    "la", "d", "a1", "a2", "b1", "b2",
)

_registry: dict[str, int] = {}


def register(name: str) -> str:
    """Add ``name`` to the variable registry (idempotent) and return it."""
    if not name or not name.isidentifier():
        raise ValueError(f"bad variable name {name!r}")
    if name not in _registry:
        _registry[name] = len(_registry)
    return name


def registry() -> tuple[str, ...]:
    return tuple(sorted(_registry, key=_registry.__getitem__))


for _name in DEFAULT_VARIABLES:
    register(_name)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _print_key(m: Monomial):
    # ascending total degree, then graded-lex descending over registry order
    exps = [0] * len(_registry)
    for v, e in m:
        exps[_registry[v]] = e
    return (_mono_degree(m), [-e for e in exps])


Scalar = Union[int, "Poly"]


class Poly:
    """Immutable polynomial with integer coefficients in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    if not isinstance(c, int):
                        raise TypeError(f"coefficient {c!r} is not an int")
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> Poly:
        register(name)
        return cls._raw({((name, 1),): 1})

    @classmethod
    def from_exponents(cls, names: Sequence[str], counts: Mapping[tuple, int]) -> Poly:
        """Build ``sum counts[e] * prod names[i]**e[i]`` from exponent vectors.

        This is the fast path for enumerations, which tally exponent vectors
        in a :class:`collections.Counter` and convert once at the end.
        """
        for name in names:
            register(name)
        order = sorted(range(len(names)), key=lambda i: names[i])
        terms: dict = {}
        for exps, c in counts.items():
            if len(exps) != len(names):
                raise ValueError("exponent vector length does not match names")
            mono = tuple((names[i], exps[i]) for i in order if exps[i])
            terms[mono] = terms.get(mono, 0) + c
        return cls({m: c for m, c in terms.items() if c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(_mono_degree(m) for m in self._terms)
        return max(dict(m).get(name, 0) for m in self._terms)

    def coeff(self, mono: Mapping[str, int] | None = None) -> int:
        key = tuple(sorted((v, e) for v, e in (mono or {}).items() if e))
        return self._terms.get(key, 0)

    def constant(self) -> int:
        return self._terms.get((), 0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Poly._raw({})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exquo_monomial(self, mono: Mapping[str, int]) -> Poly:
        """Divide by a monomial, raising ValueError unless the division is exact."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            for v, e in mono.items():
                if d.get(v, 0) < e:
                    raise ValueError(f"{self} is not divisible by {dict(mono)}")
                d[v] -= e
            out[tuple(sorted((v, e) for v, e in d.items() if e))] = c
        return Poly._raw(out)

    def subs(self, mapping: Mapping[str, Scalar]) -> Poly:
        """Substitute polynomials (or ints) for variables."""
        images = {v: self._coerce(p) for v, p in mapping.items()}
        powers: dict[tuple[str, int], Poly] = {}
        total = Poly()
        for mono, c in self._terms.items():
            kept = []
            term = Poly.const(c)
            for v, e in mono:
                if v in images:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = images[v] ** e
                    term = term * powers[key]
                else:
                    kept.append((v, e))
            if kept:
                term = term * Poly._raw({tuple(kept): 1})
            total = total + term
        return total

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __reduce__(self):
        return (Poly, (self._terms,))

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: _print_key(t[0]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            m = "".join(v if e == 1 else f"{v}^{e}"
                        for v, e in sorted(mono, key=lambda t: _registry[t[0]]))
            if not m:
                s = str(c)
            elif c == 1:
                s = m
            elif c == -1:
                s = "-" + m
            else:
                s = f"{c}{m}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += s if s.startswith("-") else "+" + s
        return out

    def to_json(self) -> dict:
        return {"terms": [{"coef": str(c), "mono": dict(sorted(mono, key=lambda t: _registry[t[0]]))}
                          for mono, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> Poly:
        terms = {}
        for t in data["terms"]:
            for v in t["mono"]:
                register(v)
            mono = tuple(sorted((v, int(e)) for v, e in t["mono"].items() if int(e)))
            terms[mono] = terms.get(mono, 0) + int(t["coef"])
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


def var(name: str) -> Poly:
    return Poly.var(name)


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def _q_powers_sum(lo: int, hi: int) -> Poly:
    # q^lo + ... + q^(hi-1)
    return Poly._raw({(((("q", i),) if i else ())): 1 for i in range(lo, hi)})


def q_int(n: int) -> Poly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _q_powers_sum(0, n)


def bq_int(n: int) -> Poly:
    """``[n]_{b,q} = b - 1 + [n]_q`` for n >= 1, and 0 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Poly()
    return var("b") + _q_powers_sum(1, n)


def q_factorial(n: int) -> Poly:
    out = Poly.const(1)
    for j in range(1, n + 1):
        out = out * q_int(j)
    return out


def bq_factorial(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Poly.const(1)
    for j in range(1, n + 1):
        out = out * bq_int(j)
    return out


@lru_cache(maxsize=None)
def _q_binomial_coeffs(n: int, k: int) -> tuple:
    if k == 0 or k == n:
        return (1,)
    left, right = _q_binomial_coeffs(n - 1, k - 1), _q_binomial_coeffs(n - 1, k)
    c = [0] * max(len(left), len(right) + k)
    for i, v in enumerate(left):
        c[i] += v
    for i, v in enumerate(right):
        c[i + k] += v
    return tuple(c)


def q_binomial(n: int, k: int) -> Poly:
    """Gaussian binomial coefficient, by ``[n,k] = [n-1,k-1] + q^k [n-1,k]``."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    coeffs = _q_binomial_coeffs(n, k)
    return Poly({(("q", i),) if i else (): c for i, c in enumerate(coeffs) if c})


@dataclass(frozen=True)
class Series:
    """Truncated power series ``sum coeffs[n] t^n`` known up to ``t^order``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Poly._coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Poly:
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def _check(self, other: Series) -> None:
        if self.order != other.order:
            raise ValueError("series have different truncation orders")

    def __add__(self, other: Series) -> Series:
        self._check(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Series) -> Series:
        self._check(other)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: Series) -> Series:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(len(a)):
            s = Poly()
            for j in range(n + 1):
                if a[j] and b[n - j]:
                    s = s + a[j] * b[n - j]
            out.append(s)
        return Series(tuple(out))

    def reciprocal(self) -> Series:
        if self.coeffs[0] != 1:
            raise ValueError("reciprocal needs constant term 1")
        a = self.coeffs
        r = [Poly.const(1)]
        for n in range(1, len(a)):
            s = Poly()
            for j in range(1, n + 1):
                if a[j] and r[n - j]:
                    s = s + a[j] * r[n - j]
            r.append(-s)
        return Series(tuple(r))

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], order: int) -> Series:
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        return cls(tuple(c))


def series_ops(A: Series, B: Series | None, op: str) -> Series:
    if op == "add":
        return A + B
    if op == "mul":
        return A * B
    if op == "reciprocal":
        return A.reciprocal()
    raise ValueError(f"unknown op {op!r}")


def egf_product(*seqs: Sequence[Poly]) -> list[Poly]:
    """Binomial convolution of EGF coefficient sequences.

    With ``A(z) = sum A[n] z^n/n!``, returns ``C`` such that
    ``C(z) = A(z) B(z) ...``, truncated to the shortest input.
    """
    if not seqs:
        raise ValueError("need at least one sequence")
    out = [Poly._coerce(c) for c in seqs[0]]
    for seq in seqs[1:]:
        m = min(len(out), len(seq))
        nxt = []
        for n in range(m):
            s = Poly()
            for j in range(n + 1):
                if out[j] and seq[n - j]:
                    s = s + math.comb(n, j) * (out[j] * seq[n - j])
            nxt.append(s)
        out = nxt
    return out
