"""Laguerre digraphs, vertex classification with 0-boundary, and the
cyclic / linear permutation statistics built on the same five-way split.

A Laguerre digraph on ``[n]`` is stored as its successor tuple: ``succ[i-1]``
is the head of the arrow leaving ``i``, or 0 when ``i`` has no out-arrow.
This is literally the Laguerre word, which is why the two models share
:func:`mahonian.permstats.enumerate_words`.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import partial
from typing import Iterator, Mapping

from mahonian.parallel import tally_sum
from mahonian.permstats import HOLE, LaguerreWord, _words_with_holes, hole_sets
from mahonian.polyring import Poly, var

__all__ = [
    "CLASSES", "LaguerreDigraph", "DigraphStats", "word_digraph", "digraph_word",
    "classify", "digraph_stats", "enumerate_digraphs", "ld_enumerator",
    "cycle_stats", "perm_cycle_poly", "linear_stats", "perm_linear_poly",
    "zhu_rhs", "zhu_sides", "ENUMERATOR_VARS",
]

CLASSES = ("pk", "val", "da", "dd", "fp")
ENUMERATOR_VARS = ("u1", "u2", "u3", "u4", "a", "b")


@dataclass(frozen=True)
class LaguerreDigraph:
    succ: tuple

    def __post_init__(self):
        succ = tuple(int(s) for s in self.succ)
        object.__setattr__(self, "succ", succ)
        heads = [s for s in succ if s]
        if any(not 0 <= s <= len(succ) for s in succ):
            raise ValueError("arrow leaves the vertex set")
        if len(set(heads)) != len(heads):
            raise ValueError("a vertex has in-degree above 1")

    @property
    def n(self) -> int:
        return len(self.succ)

    @property
    def arrows(self) -> dict[int, int]:
        return {i: s for i, s in enumerate(self.succ, start=1) if s}

    @classmethod
    def from_json(cls, data: str | Mapping) -> LaguerreDigraph:
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        succ = [0] * n
        for i, s in data.get("succ", {}).items():
            i = int(i)
            if not 1 <= i <= n:
                raise ValueError(f"vertex {i} outside [1, {n}]")
            succ[i - 1] = int(s)
        return cls(tuple(succ))

    def to_json(self) -> dict:
        return {"n": self.n, "succ": {str(i): s for i, s in self.arrows.items()}}

    def to_dot(self) -> str:
        classes, _ = classify(self)
        lines = ["digraph G {"]
        for i in range(1, self.n + 1):
            lines.append(f'  {i} [label="{i}:{classes[i]}"];')
        for i, s in self.arrows.items():
            lines.append(f"  {i} -> {s};")
        lines.append("}")
        return "\n".join(lines)

    def __str__(self) -> str:
        arrows = " ".join(f"{i}->{s}" for i, s in self.arrows.items())
        return f"n={self.n} {arrows}".rstrip()


@dataclass(frozen=True)
class DigraphStats:
    pk: int
    val: int
    da: int
    dd: int
    fp: int
    cyc: int
    paths: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def word_digraph(w: LaguerreWord) -> LaguerreDigraph:
    return LaguerreDigraph(w.letters)


def digraph_word(G: LaguerreDigraph) -> LaguerreWord:
    return LaguerreWord(G.succ)


def _classify_raw(succ) -> tuple[list[str], tuple]:
    n = len(succ)
    pred = [0] * (n + 1)
    for i, s in enumerate(succ, start=1):
        if s:
            pred[s] = i
    labels = []
    counts = dict.fromkeys(CLASSES, 0)
    for i in range(1, n + 1):
        p, s = pred[i], succ[i - 1]
        if p == i == s:
            c = "fp"
        elif p < i > s:
            c = "pk"
        elif p > i < s:
            c = "val"
        elif p < i < s:
            c = "da"
        else:
            c = "dd"
        labels.append(c)
        counts[c] += 1
    # a walk returns to its start only on a cycle; path walks end at 0
    seen = [False] * (n + 1)
    cyc = 0
    for i in range(1, n + 1):
        if seen[i] or not pred[i]:
            continue
        j = i
        while j and not seen[j]:
            seen[j] = True
            j = succ[j - 1]
        cyc += j == i
    paths = sum(1 for s in succ if s == HOLE)
    stats = (counts["pk"], counts["val"], counts["da"], counts["dd"], counts["fp"], cyc, paths)
    return labels, stats


def classify(G: LaguerreDigraph) -> tuple[dict[int, str], DigraphStats]:
    labels, stats = _classify_raw(G.succ)
    return {i: c for i, c in enumerate(labels, start=1)}, DigraphStats(*stats)


def digraph_stats(G: LaguerreDigraph) -> DigraphStats:
    return DigraphStats(*_classify_raw(G.succ)[1])


def enumerate_digraphs(n: int, k: int) -> Iterator[LaguerreDigraph]:
    from mahonian.permstats import enumerate_words
    for w in enumerate_words(n, k):
        yield word_digraph(w)


def _ld_chunk(args, shift: bool) -> Counter:
    n, holes = args
    k = len(holes)
    tally: Counter = Counter()
    for w in _words_with_holes(n, holes):
        pk, val, da, dd, fp, cyc, _ = _classify_raw(w)[1]
        tally[(pk - k if shift else pk, val, da, dd, fp, cyc)] += 1
    return tally


def ld_enumerator(n: int, k: int, shift: bool = True, jobs: int = 1) -> Poly:
    """``sum over LD_{n,k} of u1^(pk-k) u2^val u3^da u4^dd a^fp b^cyc``.

    With ``shift=False`` the peak exponent is the plain ``pk``.
    """
    fn = partial(_ld_chunk, shift=shift)
    tally = tally_sum(fn, [(n, I) for I in hole_sets(n, k)], jobs)
    if shift and any(e[0] < 0 for e in tally):
        raise AssertionError("a digraph has fewer peaks than paths")
    return Poly.from_exponents(ENUMERATOR_VARS, tally)


def _cycles(perm) -> list[list[int]]:
    n = len(perm)
    seen = [False] * (n + 1)
    out = []
    for i in range(1, n + 1):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = perm[j - 1]
            out.append(cyc)
    return out


def cycle_stats(perm) -> dict[str, int]:
    """Cyclic classification of each value i by ``pi^-1(i)`` and ``pi(i)``,
    together with cycle rises/falls and the cycle count."""
    n = len(perm)
    inv = [0] * (n + 1)
    for i, v in enumerate(perm, start=1):
        inv[v] = i
    st = dict.fromkeys(("cpk", "cval", "cdrise", "cdfall", "fix", "crise", "cfall"), 0)
    for i in range(1, n + 1):
        p, s = inv[i], perm[i - 1]
        if s == i:
            st["fix"] += 1
        elif p < i > s:
            st["cpk"] += 1
        elif p > i < s:
            st["cval"] += 1
        elif p < i < s:
            st["cdrise"] += 1
        else:
            st["cdfall"] += 1
        if i < s:
            st["crise"] += 1
        elif i > s:
            st["cfall"] += 1
    st["cyc"] = len(_cycles(perm))
    return st


def perm_cycle_poly(n: int) -> Poly:
    tally: Counter = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        s = cycle_stats(perm)
        tally[(s["cpk"], s["cval"], s["cdrise"], s["cdfall"], s["fix"], s["cyc"])] += 1
    return Poly.from_exponents(ENUMERATOR_VARS, tally)


def linear_stats(word) -> dict[str, int]:
    """Peaks, valleys, double ascents and double descents of a word with
    ``0`` appended at both ends."""
    ext = (0, *word, 0)
    st = dict.fromkeys(("ppk", "pval", "pda", "pdd"), 0)
    for i in range(1, len(ext) - 1):
        p, x, s = ext[i - 1], ext[i], ext[i + 1]
        if p < x > s:
            st["ppk"] += 1
        elif p > x < s:
            st["pval"] += 1
        elif p < x < s:
            st["pda"] += 1
        else:
            st["pdd"] += 1
    return st


def perm_linear_poly(n: int) -> Poly:
    if n < 1:
        raise ValueError("n must be positive")
    tally: Counter = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        s = linear_stats(perm)
        tally[(s["ppk"], s["pval"], s["pda"], s["pdd"])] += 1
    return Poly.from_exponents(("u1", "u2", "u3", "u4"), tally)


def zhu_rhs(n: int) -> Poly:
    a1, a2, b1, b2, la, d, x = (var(v) for v in ("a1", "a2", "b1", "b2", "la", "d", "x"))
    lx = la + d * x
    fixed = a2 * lx + b2 * x
    pair = a2 * b1 + a1 * b2
    tally: Counter = Counter()
    for perm in itertools.permutations(range(1, n + 1)):
        s = cycle_stats(perm)
        tally[(s["crise"], s["cfall"], s["fix"], s["cyc"] - s["fix"])] += 1
    total = Poly()
    for (crise, cfall, fix, cyc2), c in sorted(tally.items()):
        total = total + c * (a1 ** (crise - cyc2) * b1 ** (cfall - cyc2) * x ** cfall
                             * lx ** crise * fixed ** fix * pair ** cyc2)
    return total


def zhu_sides(n: int) -> tuple[Poly, Poly]:
    """The J-fraction moment for Zhu's parameters against the permutation sum."""
    from mahonian.jacobi_rogers import mu_table, preset
    return mu_table(preset("zhu"), n)[n, 0], zhu_rhs(n)
