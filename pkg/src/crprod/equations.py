"""Literal word equations: Levi splits, bar placements, and the three-way
decomposition of a cyclically reduced product of two reduced words."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .words import (
    Word,
    concat,
    cyc_reduce,
    format_word,
    invert,
    is_reduced,
    reduce_concat,
)


class WordEquationError(ValueError):
    pass


class LeviSide(enum.Enum):
    FIRST_LONGER = "FirstLonger"
    SECOND_LONGER = "SecondLonger"
    EQUAL = "Equal"


@dataclass(frozen=True)
class LeviSolution:
    side: LeviSide
    p: Word


def levi_split(u1: Sequence[int], u2: Sequence[int],
               v1: Sequence[int], v2: Sequence[int]) -> LeviSolution:
    """Solve ``u1 u2 = v1 v2``.

    FIRST_LONGER means ``u1 = v1 p`` and ``v2 = p u2``; SECOND_LONGER means
    ``v1 = u1 p`` and ``u2 = p v2``.
    """
    u1, u2, v1, v2 = tuple(u1), tuple(u2), tuple(v1), tuple(v2)
    if u1 + u2 != v1 + v2:
        raise WordEquationError("the two factorizations spell different words")
    if len(u1) > len(v1):
        return LeviSolution(LeviSide.FIRST_LONGER, u1[len(v1):])
    if len(u1) < len(v1):
        return LeviSolution(LeviSide.SECOND_LONGER, v1[len(u1):])
    return LeviSolution(LeviSide.EQUAL, ())


@dataclass(frozen=True)
class BarPlacement:
    bars_in_u: Tuple[int, ...]
    bars_in_v: Tuple[int, ...]
    fragments: Tuple[Word, ...]
    # cut offsets (0 and the total length included) delimiting ``fragments``
    cuts: Tuple[int, ...]


def _bounds(parts):
    out, pos = [], 0
    for p in parts:
        out.append((pos, pos + len(p)))
        pos += len(p)
    return out


def _distribute(cuts, bounds):
    counts = [0] * len(bounds)
    for c in cuts:
        for j, (lo, hi) in enumerate(bounds):
            if lo < hi and lo <= c <= hi:
                counts[j] += 1
                break
        else:
            # every part is empty: nowhere else to put the bar
            counts[0] += 1
    return tuple(counts)


def align_factorizations(u_parts: Sequence[Sequence[int]],
                         v_parts: Sequence[Sequence[int]]) -> BarPlacement:
    """Map the internal bars of each factorization into the parts of the other.

    A bar at offset ``c`` is counted in the first non-empty part whose
    closed span contains ``c``; empty parts never receive bars.
    """
    u_parts = [tuple(p) for p in u_parts]
    v_parts = [tuple(p) for p in v_parts]
    if not u_parts or not v_parts:
        raise WordEquationError("factorizations need at least one part")
    word = concat(*u_parts)
    if word != concat(*v_parts):
        raise WordEquationError("the two factorizations spell different words")
    ub, vb = _bounds(u_parts), _bounds(v_parts)
    u_cuts = [hi for _, hi in ub[:-1]]
    v_cuts = [hi for _, hi in vb[:-1]]
    cuts = sorted(set(u_cuts) | set(v_cuts) | {0, len(word)})
    fragments = tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))
    return BarPlacement(
        bars_in_u=_distribute(v_cuts, ub),
        bars_in_v=_distribute(u_cuts, vb),
        fragments=fragments,
        cuts=tuple(cuts),
    )


def max_cancellation(u: Sequence[int], v: Sequence[int]) -> Tuple[Word, Word, Word]:
    """``(u_left, a, v_right)`` with ``u = u_left a``, ``v = a⁻¹ v_right`` and
    ``a`` as long as possible."""
    u, v = tuple(u), tuple(v)
    k = 0
    m = min(len(u), len(v))
    while k < m and u[len(u) - 1 - k] == -v[k]:
        k += 1
    return u[:len(u) - k], u[len(u) - k:], v[k:]


# ---------------------------------------------------------------------------
# three-case decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShirvCase1:
    """``u = u1 a``, ``v = a⁻¹ s P s⁻¹ u1⁻¹``, ``ρ(uv) = u1 s P s⁻¹ u1⁻¹``."""
    u1: Word
    a: Word
    s: Word
    product: Word
    case = 1

    def holds(self, u, v) -> bool:
        u1, a, s, p = self.u1, self.a, self.s, self.product
        si, ui = invert(s), invert(u1)
        return (tuple(u) == u1 + a
                and tuple(v) == invert(a) + s + p + si + ui
                and reduce_concat(u, v) == u1 + s + p + si + ui)


@dataclass(frozen=True)
class ShirvCase2:
    """``u*v = c1 c2``, ``u = t c1 a``, ``v = a⁻¹ c2 t⁻¹`` with ``c1, c2 ≠ 1``."""
    c1: Word
    c2: Word
    t: Word
    a: Word
    case = 2

    @property
    def product(self) -> Word:
        return self.c1 + self.c2

    def holds(self, u, v) -> bool:
        c1, c2, t, a = self.c1, self.c2, self.t, self.a
        ti, ai = invert(t), invert(a)
        return (bool(c1) and bool(c2)
                and tuple(u) == t + c1 + a
                and tuple(v) == ai + c2 + ti
                and reduce_concat(u, v) == t + c1 + c2 + ti
                and reduce_concat(v, u) == ai + c2 + c1 + a)


@dataclass(frozen=True)
class ShirvCase3:
    """``u = v1⁻¹ s P s⁻¹ a``, ``v = a⁻¹ v1``, ``ρ(uv) = v1⁻¹ s P s⁻¹ v1``."""
    v1: Word
    s: Word
    a: Word
    product: Word
    case = 3

    def holds(self, u, v) -> bool:
        v1, s, a, p = self.v1, self.s, self.a, self.product
        vi, si = invert(v1), invert(s)
        return (tuple(u) == vi + s + p + si + a
                and tuple(v) == invert(a) + v1
                and reduce_concat(u, v) == vi + s + p + si + v1)


ShirvCase = Union[ShirvCase1, ShirvCase2, ShirvCase3]


def shirv_decompose(u: Sequence[int], v: Sequence[int]) -> ShirvCase:
    """Decompose the pair ``(u, v)`` of reduced words, ``u ≠ v⁻¹``, according
    to where the conjugator of ``ρ(uv)`` falls.  When several cases fit, the
    order of preference is 2, 1, 3.
    """
    u, v = tuple(u), tuple(v)
    if not is_reduced(u) or not is_reduced(v):
        raise WordEquationError("shirv_decompose needs reduced words")
    if u == invert(v):
        raise WordEquationError(
            f"u = v^-1 is excluded (u={format_word(u)}, v={format_word(v)})")
    u_left, a, v_right = max_cancellation(u, v)
    t, core = cyc_reduce(u_left + v_right)
    k = len(t)
    if k < len(u_left) and k < len(v_right):
        return ShirvCase2(u_left[k:], v_right[:len(v_right) - k], t, a)
    if k >= len(u_left):
        return ShirvCase1(u_left, a, t[len(u_left):], core)
    return ShirvCase3(v_right, t[len(v_right):], a, core)
