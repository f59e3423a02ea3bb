"""Multiset permutations, b-codes and Carlitz's insertion bijection.

A multiset word is a tuple of values in ``1..r``; its alphabet is the
multiplicity vector ``(m_1, ..., m_r)``.  All comparisons are strict, so a
slot between two equal letters is never a descent slot.

>>> w = (2, 1, 2, 6, 5, 4, 4, 3)
>>> b_code(w)
(0, 1, 0, 0, 1, 1, 3, 4)
>>> carlitz_psi(w)
(2, 6, 5, 4, 4, 1, 2, 3)
"""

from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations

from mahonian.parallel import tally_sum
from mahonian.permstats import hrw_word_terms, split_sides
from mahonian.polyring import Poly

__all__ = [
    "alphabet_of", "multiset_count", "enumerate_multiset", "compositions",
    "b_code", "word_from_b_code", "slot_labels", "carlitz_psi",
    "carlitz_psi_inverse", "rlmin_multiset", "wilson_sides", "parse_alphabet",
]

MultisetWord = tuple


def parse_alphabet(text: str) -> tuple[int, ...]:
    parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    if any(m < 0 for m in parts):
        raise ValueError("multiplicities must be nonnegative")
    return parts


def alphabet_of(w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        return ()
    c = Counter(w)
    return tuple(c.get(v, 0) for v in range(1, max(w) + 1))


def multiset_count(alphabet: Sequence[int]) -> int:
    return factorial(sum(alphabet)) // prod(factorial(m) for m in alphabet)


def enumerate_multiset(alphabet: Sequence[int]) -> Iterator[MultisetWord]:
    """Every rearrangement of ``1^m1 2^m2 ...`` once, in lexicographic order."""
    if any(m < 0 for m in alphabet):
        raise ValueError("multiplicities must be nonnegative")
    letters = [v for v, m in enumerate(alphabet, start=1) for _ in range(m)]
    for w in multiset_permutations(letters):
        yield tuple(w)


def compositions(n: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into at most ``max_parts`` positive parts."""
    if n == 0:
        yield ()
        return

    def rec(rest, parts):
        if rest == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for first in range(1, rest + 1):
            yield from rec(rest - first, parts + [first])

    yield from rec(n, [])


def _occurrence_order(w: Sequence[int]) -> list[int]:
    # positions of w listed in the order of the sorted, labeled word w*
    return sorted(range(len(w)), key=lambda j: (w[j], j))


def b_code(w: Sequence[int]) -> tuple[int, ...]:
    """``b_i`` = letters strictly smaller than ``w*_i`` lying to its right in w."""
    return tuple(sum(1 for j in range(p + 1, len(w)) if w[j] < w[p])
                 for p in _occurrence_order(w))


def word_from_b_code(alphabet: Sequence[int], code: Sequence[int]) -> MultisetWord:
    """Inverse of :func:`b_code` for a fixed alphabet."""
    letters = [v for v, m in enumerate(alphabet, start=1) for _ in range(m)]
    if len(code) != len(letters):
        raise ValueError("code length does not match the alphabet")
    return _assemble(letters, code)


def _assemble(letters: list[int], code: Sequence[int]) -> MultisetWord:
    # insert letters from smallest to largest; a letter with code b goes just
    # left of the b rightmost smaller letters, and right of any equal copies
    word: list[int] = []
    for v, b in zip(letters, code):
        smaller_positions = [j for j, x in enumerate(word) if x < v]
        if b > len(smaller_positions):
            raise ValueError("invalid b-code")
        if b == 0:
            pos = len(word)
        else:
            pos = smaller_positions[len(smaller_positions) - b]
            # equal copies inserted earlier must stay to the left
            last_equal = max((j for j, x in enumerate(word) if x == v), default=-1)
            if last_equal >= pos:
                raise ValueError("invalid b-code")
        word.insert(pos, v)
    return tuple(word)


def slot_labels(alpha: Sequence[int]) -> list[int]:
    """Carlitz labels of the ``len(alpha) + 1`` insertion slots of ``alpha``.

    Slot j sits just before ``alpha[j]`` (slot ``len(alpha)`` is the end).
    The rightmost slot is 0, descent slots are 1..des from right to left, the
    leftmost slot is des+1, and the rest continue left to right.
    """
    m = len(alpha)
    labels = [0] * (m + 1)
    descent_slots = [j for j in range(1, m) if alpha[j - 1] > alpha[j]]
    des = len(descent_slots)
    for label, j in enumerate(reversed(descent_slots), start=1):
        labels[j] = label
    if m == 0:
        return labels
    labels[0] = des + 1
    nxt = des + 2
    for j in range(1, m):
        if j not in descent_slots:
            labels[j] = nxt
            nxt += 1
    return labels


def carlitz_psi(w: Sequence[int], trace: list | None = None) -> MultisetWord:
    """Carlitz's insertion map; sends inv(w) to maj and keeps Rlmin.

    If ``trace`` is given, the intermediate words are appended to it.
    """
    if not w:
        return ()
    code = b_code(w)
    star = sorted(w)
    alpha = [star[0]]
    if trace is not None:
        trace.append(tuple(alpha))
    for i in range(1, len(w)):
        labels = slot_labels(alpha)
        alpha.insert(labels.index(code[i]), star[i])
        if trace is not None:
            trace.append(tuple(alpha))
    return tuple(alpha)


def carlitz_psi_inverse(w: Sequence[int]) -> MultisetWord:
    """Undo :func:`carlitz_psi`.

    Peel off the largest letter, reading the label of the slot it sat in as
    the next b-code entry (last entry first).  The last-inserted copy of a
    repeated maximum is not always the rightmost one (``psi(3312) = 3132``),
    so the copies are tried in turn; a candidate code is accepted only when
    its b-code entries are nonincreasing across copies and psi reproduces w.
    """
    w = tuple(w)
    letters = sorted(w)

    def decode(alpha: list[int], code: list[int]):
        if not alpha:
            code = code[::-1]
            try:
                cand = _assemble(letters, code)
            except ValueError:
                return None
            return cand if carlitz_psi(cand) == w else None
        top = max(alpha)
        i = len(alpha) - 1  # index of this copy in the sorted word
        for pos in reversed([j for j, x in enumerate(alpha) if x == top]):
            rest = alpha[:pos] + alpha[pos + 1:]
            label = slot_labels(rest)[pos]
            # copies of one value carry nonincreasing codes left to right in w*
            if code and letters[i + 1] == top and label < code[-1]:
                continue
            found = decode(rest, code + [label])
            if found is not None:
                return found
        return None

    result = decode(list(w), [])
    if result is None:
        raise ValueError(f"{w} has no preimage under psi")
    return result


def rlmin_multiset(w: Sequence[int]) -> frozenset:
    """Values whose first occurrence is <= every letter to its right."""
    out = set()
    seen = set()
    for i, v in enumerate(w):
        if v in seen:
            continue
        seen.add(v)
        if all(v <= x for x in w[i + 1:]):
            out.add(v)
    return frozenset(out)


def _wilson_chunk(words) -> Counter:
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    for w in words:
        hrw_word_terms(w, 0, lhs, rhs)
    tally: Counter = Counter()
    for key, c in lhs.items():
        tally[("L",) + key] += c
    for key, c in rhs.items():
        tally[("R",) + key] += c
    return tally


def wilson_sides(alphabet: Sequence[int], jobs: int = 1) -> tuple[Poly, Poly]:
    """Both sides of Wilson's multiset Haglund-Remmel-Wilson identity."""
    words = list(enumerate_multiset(alphabet))
    size = max(1, len(words) // max(1, 4 * jobs))
    chunks = [words[i:i + size] for i in range(0, len(words), size)] or [[]]
    return split_sides(tally_sum(_wilson_chunk, chunks, jobs))
