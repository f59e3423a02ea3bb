"""Laguerre words (partial permutations) and their statistics.

A Laguerre word on ``[n]`` is stored as a tuple of ``n`` ints where ``0``
marks a hole.  Holes compare greater than every numeral and equal to each
other, so two adjacent holes never form a descent or an inversion.

The word-level helpers (:func:`descent_set`, :func:`inv_box`, ...) accept any
sequence of comparable letters; multiset words reuse them unchanged.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator, Sequence

from mahonian.parallel import tally_sum
from mahonian.polyring import Poly

__all__ = [
    "HOLE", "LaguerreWord", "StatRecord", "ZeroOneMatrix",
    "word_count", "hole_sets", "enumerate_words", "descent_set", "inv_box",
    "inv_box_vector", "inversions", "between_inversions", "full_stats",
    "word_to_matrix", "matrix_to_word", "matrix_survivor_inv",
    "matrix_survivor_maj", "distribution", "hrw_sides", "expand_hrw_term",
    "STATISTICS",
]

HOLE = 0


@dataclass(frozen=True)
class LaguerreWord:
    letters: tuple

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        seen = set()
        for x in letters:
            if x < 0 or x > n:
                raise ValueError(f"letter {x} outside [0, {n}]")
            if x != HOLE:
                if x in seen:
                    raise ValueError(f"numeral {x} repeated")
                seen.add(x)

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def k(self) -> int:
        return self.letters.count(HOLE)

    def ranked(self) -> list[int]:
        """Letters with each hole replaced by ``n + 1`` (the maximal letter)."""
        top = self.n + 1
        return [x if x != HOLE else top for x in self.letters]

    @classmethod
    def parse(cls, text: str) -> LaguerreWord:
        tokens = text.replace(",", " ").split()
        return cls(tuple(HOLE if t in ("*", "◇") else int(t) for t in tokens))

    def __str__(self) -> str:
        return " ".join("*" if x == HOLE else str(x) for x in self.letters)

    def to_json(self) -> list[int]:
        return list(self.letters)


@dataclass(frozen=True)
class StatRecord:
    des_set: frozenset
    inv_box: tuple
    inv0: int
    maj0: int
    between: int
    inv: int
    maj: int
    inv_filled: int
    inv_holes: int
    image_set: frozenset
    rlmin_set: frozenset

    @property
    def des(self) -> int:
        return len(self.des_set)

    @property
    def rlmin(self) -> int:
        return len(self.rlmin_set)

    @property
    def tilde_inv_filled(self) -> int:
        return self.inv_filled + self.between

    def to_json(self) -> dict:
        return {
            "des_set": sorted(self.des_set), "inv_box": list(self.inv_box),
            "inv0": self.inv0, "maj0": self.maj0, "between": self.between,
            "inv": self.inv, "maj": self.maj, "inv_filled": self.inv_filled,
            "inv_holes": self.inv_holes,
            "tilde_inv_filled": self.tilde_inv_filled,
            "image_set": sorted(self.image_set),
            "rlmin_set": sorted(self.rlmin_set), "rlmin": self.rlmin,
        }


def word_count(n: int, k: int) -> int:
    """``|S_n^k| = C(n, k) * n! / k!``."""
    from math import comb, factorial
    return comb(n, k) * factorial(n) // factorial(k)


def hole_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of [n] in colex order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return sorted(itertools.combinations(range(1, n + 1), k), key=lambda c: c[::-1])


def _words_with_holes(n: int, holes: Sequence[int], image: Sequence[int] | None = None) -> Iterator[tuple]:
    holes = set(holes)
    slots = [i for i in range(n) if i + 1 not in holes]
    pool = sorted(image) if image is not None else range(1, n + 1)
    if image is not None and len(pool) != len(slots):
        return
    template = [HOLE] * n
    for filling in itertools.permutations(pool, len(slots)):
        for pos, x in zip(slots, filling):
            template[pos] = x
        yield tuple(template)


def enumerate_words(n: int, k: int, holes: Sequence[int] | None = None,
                    image: Iterable[int] | None = None) -> Iterator[LaguerreWord]:
    """Stream ``S_n^k`` in a fixed order: hole sets in colex order, then the
    numerals in lexicographic order.  ``holes`` restricts to words with holes
    exactly there; ``image`` restricts to a given set of numerals."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    image = None if image is None else sorted(image)
    if image is not None and len(image) != n - k:
        raise ValueError("image set must have n - k elements")
    sets = [tuple(sorted(holes))] if holes is not None else hole_sets(n, k)
    for I in sets:
        if len(I) != k:
            raise ValueError("hole set must have k elements")
        for w in _words_with_holes(n, I, image):
            yield LaguerreWord(w)


# -- generic word statistics ------------------------------------------------

def descent_set(w: Sequence) -> frozenset:
    """1-based positions i with ``w[i] > w[i+1]`` (strict)."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inv_box(w: Sequence, i: int) -> int:
    """Number of earlier letters strictly greater than the letter at position i (1-based)."""
    if not 1 <= i <= len(w):
        raise IndexError(f"position {i} out of range 1..{len(w)}")
    x = w[i - 1]
    return sum(1 for j in range(i - 1) if w[j] > x)


def inv_box_vector(w: Sequence) -> tuple:
    return tuple(sum(1 for j in range(i) if w[j] > w[i]) for i in range(len(w)))


def inversions(w: Sequence) -> int:
    return sum(inv_box_vector(w))


def major_index(w: Sequence) -> int:
    return sum(descent_set(w))


def between_inversions(A: Iterable[int], B: Iterable[int]) -> int:
    """``#{(a, b) in A x B : a > b}``."""
    B = sorted(B)
    return sum(sum(1 for b in B if b < a) for a in A)


def _as_ranked(w) -> list:
    if isinstance(w, LaguerreWord):
        return w.ranked()
    return list(w)


# -- Laguerre word statistics -----------------------------------------------

def full_stats(w: LaguerreWord | Sequence[int]) -> StatRecord:
    if not isinstance(w, LaguerreWord):
        w = LaguerreWord(tuple(w))
    n = w.n
    r = w.ranked()
    top = n + 1
    box = inv_box_vector(r)
    des = descent_set(r)
    inv_filled = inv_holes = 0
    for i in range(n):
        later_smaller = sum(1 for j in range(i + 1, n) if r[j] < r[i])
        if r[i] == top:
            inv_holes += later_smaller
        else:
            inv_filled += later_smaller
    image = frozenset(x for x in w.letters if x != HOLE)
    missing = [x for x in range(1, n + 1) if x not in image]
    between = between_inversions(image, missing)
    rlmin = set()
    seen: set = set()
    for x in w.letters:
        if x != HOLE:
            if all(y in seen for y in range(1, x)):
                rlmin.add(x)
            seen.add(x)
    inv0, maj0 = sum(box), sum(des)
    return StatRecord(
        des_set=des, inv_box=box, inv0=inv0, maj0=maj0, between=between,
        inv=inv0 + between, maj=maj0 + between, inv_filled=inv_filled,
        inv_holes=inv_holes, image_set=image, rlmin_set=frozenset(rlmin),
    )


# -- (0,1)-matrices ---------------------------------------------------------

@dataclass(frozen=True)
class ZeroOneMatrix:
    """Sub-permutation matrix; ``ones`` holds 1-based (row, col) cells."""

    n: int
    ones: frozenset

    def __post_init__(self):
        ones = frozenset((int(r), int(c)) for r, c in self.ones)
        object.__setattr__(self, "ones", ones)
        rows = [r for r, _ in ones]
        cols = [c for _, c in ones]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("a row or column holds more than one 1")
        if any(not (1 <= x <= self.n) for x in rows + cols):
            raise ValueError("cell outside the matrix")

    def to_json(self) -> dict:
        return {"n": self.n, "ones": [list(c) for c in sorted(self.ones)]}

    def rows(self) -> list[list[int]]:
        return [[int((i, j) in self.ones) for j in range(1, self.n + 1)]
                for i in range(1, self.n + 1)]


def word_to_matrix(w: LaguerreWord) -> ZeroOneMatrix:
    return ZeroOneMatrix(w.n, frozenset((i + 1, x) for i, x in enumerate(w.letters) if x != HOLE))


def matrix_to_word(M: ZeroOneMatrix) -> LaguerreWord:
    letters = [HOLE] * M.n
    for r, c in M.ones:
        letters[r - 1] = c
    return LaguerreWord(tuple(letters))


def _row_col_maps(M: ZeroOneMatrix) -> tuple[dict, dict]:
    row_one = {r: c for r, c in M.ones}
    col_one = {c: r for r, c in M.ones}
    return row_one, col_one


def matrix_survivor_inv(M: ZeroOneMatrix) -> int:
    """Zeros left after deleting those below a 1 in their column, those
    right of a 1 in their row, and those whose row and column are both empty."""
    row_one, col_one = _row_col_maps(M)
    count = 0
    for r in range(1, M.n + 1):
        for c in range(1, M.n + 1):
            if (r, c) in M.ones:
                continue
            if c in col_one and col_one[c] < r:
                continue
            if r in row_one and row_one[r] < c:
                continue
            if r not in row_one and c not in col_one:
                continue
            count += 1
    return count


def matrix_survivor_maj(M: ZeroOneMatrix) -> int:
    """Zeros above the 1 of their column when the row just above that 1 is
    empty or has its 1 further right, plus zeros left of a row's 1 in an
    empty column."""
    row_one, col_one = _row_col_maps(M)
    count = 0
    for r in range(1, M.n + 1):
        for c in range(1, M.n + 1):
            if (r, c) in M.ones:
                continue
            if c in col_one:
                i = col_one[c]
                if r < i:
                    upper = row_one.get(i - 1)
                    if upper is None or upper > c:
                        count += 1
            elif r in row_one and row_one[r] > c:
                count += 1
    return count


# -- distributions ----------------------------------------------------------

STATISTICS = ("maj", "inv", "tilde_inv_filled", "inv0", "maj0")


def _distribution_chunk(args, stat: str, rlmin: bool, image) -> Counter:
    n, holes = args
    tally: Counter = Counter()
    for w in _words_with_holes(n, holes, image):
        s = full_stats(LaguerreWord(w))
        tally[(s.rlmin if rlmin else 0, getattr(s, stat))] += 1
    return tally


def distribution(n: int, k: int, stat: str = "maj", rlmin: bool = True,
                 holes: Sequence[int] | None = None, image: Iterable[int] | None = None,
                 jobs: int = 1) -> Poly:
    """``sum b^rlmin q^stat`` over ``S_n^k``, optionally restricted to a fixed
    hole set and/or a fixed image set."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {STATISTICS}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    image = None if image is None else tuple(sorted(image))
    sets = [tuple(sorted(holes))] if holes is not None else hole_sets(n, k)
    fn = partial(_distribution_chunk, stat=stat, rlmin=rlmin, image=image)
    tally = tally_sum(fn, [(n, I) for I in sets], jobs)
    return Poly.from_exponents(("b", "q"), tally)


def expand_hrw_term(base: int, drops: Iterable[int], tally: Counter, weight: int = 1) -> None:
    """Add ``q^base * prod(1 + z q^-d for d in drops)`` to ``tally`` keyed by
    (q-exponent, z-exponent).  Every exponent is asserted nonnegative, which
    is what makes the cleared expansion exact."""
    terms = {(base, 0): weight}
    for d in drops:
        nxt: dict = {}
        for (e, m), c in terms.items():
            nxt[(e, m)] = nxt.get((e, m), 0) + c
            nxt[(e - d, m + 1)] = nxt.get((e - d, m + 1), 0) + c
        terms = nxt
    for (e, m), c in terms.items():
        assert e >= 0, "negative q exponent while clearing denominators"
        tally[(e, m)] += c


def hrw_word_terms(r: Sequence, extra: int, lhs: Counter, rhs: Counter) -> None:
    """Accumulate one word's contribution to both sides of the
    Haglund-Remmel-Wilson identity.  ``extra`` is added to inv and maj
    (the between-set inversions for partial permutations)."""
    box = inv_box_vector(r)
    des = sorted(descent_set(r))
    inv = sum(box) + extra
    maj = sum(des) + extra
    expand_hrw_term(inv, [1 + box[i - 1] for i in des], lhs)
    expand_hrw_term(maj, range(1, len(des) + 1), rhs)


def _hrw_chunk(args) -> Counter:
    n, holes = args
    tally: Counter = Counter()
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    for w in _words_with_holes(n, holes):
        lw = LaguerreWord(w)
        image = [x for x in w if x != HOLE]
        missing = [x for x in range(1, n + 1) if x not in set(image)]
        hrw_word_terms(lw.ranked(), between_inversions(image, missing), lhs, rhs)
    for key, c in lhs.items():
        tally[("L",) + key] += c
    for key, c in rhs.items():
        tally[("R",) + key] += c
    return tally


def split_sides(tally: Counter) -> tuple[Poly, Poly]:
    lhs = Counter({k[1:]: c for k, c in tally.items() if k[0] == "L"})
    rhs = Counter({k[1:]: c for k, c in tally.items() if k[0] == "R"})
    return Poly.from_exponents(("q", "z"), lhs), Poly.from_exponents(("q", "z"), rhs)


def hrw_sides(n: int, k: int, jobs: int = 1) -> tuple[Poly, Poly]:
    """Both sides of the Haglund-Remmel-Wilson identity on ``S_n^k`` with
    denominators cleared termwise."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    tally = tally_sum(_hrw_chunk, [(n, I) for I in hole_sets(n, k)], jobs)
    return split_sides(tally)
