"""Words over X ∪ X⁻¹ and the cyclically reduced product.

A letter is a nonzero int: ``g`` is the generator with index ``g`` and
``-g`` its formal inverse.  A word is a tuple of letters; the empty tuple
is the empty word ``1``.  Nothing here quotients by free reduction: the
free group is the *subset* of reduced tuples, so ``u == v`` always means
literal equality of letter sequences.

>>> w = parse_word("xyX")
>>> cyc_reduce(w)
CyclicReduction(conjugator=(24,), core=(25,))
>>> format_word(cyc_reduced_product(parse_word("xy"), parse_word("X")).result)
'y'
"""
from __future__ import annotations

import string
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

Letter = int
Word = Tuple[int, ...]

EMPTY: Word = ()

_LOWER = string.ascii_lowercase
_UPPER = string.ascii_uppercase


class WordSyntaxError(ValueError):
    """Raised by :func:`parse_word`; ``position`` is 1-based."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at offset {position} in {text!r}")
        self.text = text
        self.position = position


class CyclicReduction(NamedTuple):
    conjugator: Word
    core: Word


class CyclicProduct(NamedTuple):
    result: Word
    conjugator: Word


class PrimitiveRoot(NamedTuple):
    root: Word
    exponent: int


# ---------------------------------------------------------------------------
# letters and notation
# ---------------------------------------------------------------------------

def letter(generator: int, sign: int = 1) -> Letter:
    if generator < 1:
        raise ValueError(f"generator index must be >= 1, got {generator}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return generator * sign


def generator_of(x: Letter) -> int:
    return x if x > 0 else -x


def sign_of(x: Letter) -> int:
    return 1 if x > 0 else -1


def letter_key(x: Letter) -> int:
    """Total order on letters: generator ascending, positive before negative."""
    return 2 * x - 2 if x > 0 else -2 * x - 1


def parse_word(text: str) -> Word:
    """Parse the compact notation: ``a``..``z`` generators, capitals inverses,
    ``1`` for the empty word.  No whitespace is allowed."""
    if text == "1":
        return EMPTY
    if not text:
        raise WordSyntaxError("empty input (write '1' for the empty word)", text, 1)
    out = []
    for i, ch in enumerate(text):
        k = _LOWER.find(ch)
        if k >= 0:
            out.append(k + 1)
            continue
        k = _UPPER.find(ch)
        if k >= 0:
            out.append(-(k + 1))
            continue
        if ch == "1":
            raise WordSyntaxError("'1' may only appear alone", text, i + 1)
        raise WordSyntaxError(f"unexpected character {ch!r}", text, i + 1)
    return tuple(out)


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    chars = []
    for x in w:
        g = x if x > 0 else -x
        if g > 26:
            raise ValueError(f"generator {g} has no single-letter notation")
        chars.append(_LOWER[g - 1] if x > 0 else _UPPER[g - 1])
    return "".join(chars)


def as_word(w) -> Word:
    """Accept either notation text or a letter sequence."""
    if isinstance(w, str):
        return parse_word(w)
    return tuple(w)


# ---------------------------------------------------------------------------
# free monoid operations
# ---------------------------------------------------------------------------

def concat(*parts: Sequence[int]) -> Word:
    out: list = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def invert(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def rotate(w: Sequence[int], k: int) -> Word:
    """The rotation ``w[k:] + w[:k]`` (``k`` taken modulo ``len(w)``)."""
    w = tuple(w)
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def rotations(w: Sequence[int]) -> list:
    w = tuple(w)
    if not w:
        return [w]
    return [w[k:] + w[:k] for k in range(len(w))]


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def reduce(w: Iterable[int]) -> Word:
    stack: list = []
    push, pop = stack.append, stack.pop
    for x in w:
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return tuple(stack)


def reduce_concat(*parts: Sequence[int]) -> Word:
    """``reduce(concat(*parts))`` without building the intermediate word."""
    stack: list = []
    push, pop = stack.append, stack.pop
    for p in parts:
        for x in p:
            if stack and stack[-1] == -x:
                pop()
            else:
                push(x)
    return tuple(stack)


def is_reduced(w: Sequence[int]) -> bool:
    for i in range(len(w) - 1):
        if w[i] == -w[i + 1]:
            return False
    return True


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    if not is_reduced(w):
        return False
    return len(w) < 2 or w[0] != -w[-1]


def cyc_reduce(w: Iterable[int]) -> CyclicReduction:
    """Split ``reduce(w)`` literally as ``t + c + invert(t)`` with ``c``
    cyclically reduced."""
    r = reduce(w)
    n = len(r)
    i = 0
    while 2 * i + 1 < n and r[i] == -r[n - 1 - i]:
        i += 1
    return CyclicReduction(r[:i], r[i:n - i])


def cyc_core(w: Iterable[int]) -> Word:
    """The cyclically reduced form of ``w``."""
    r = reduce(w)
    n = len(r)
    i = 0
    while 2 * i + 1 < n and r[i] == -r[n - 1 - i]:
        i += 1
    return r[i:n - i] if i else r


def reduced_product(u: Sequence[int], v: Sequence[int]) -> Word:
    return reduce_concat(u, v)


def cyc_reduced_product(u: Sequence[int], v: Sequence[int]) -> CyclicProduct:
    """``u * v`` together with ``t`` such that ``reduce(u + v) == t + (u*v) + t⁻¹``."""
    t, c = cyc_reduce(reduce_concat(u, v))
    return CyclicProduct(c, t)


def crp(u: Sequence[int], v: Sequence[int]) -> Word:
    """Shorthand for ``cyc_reduced_product(u, v).result``."""
    return cyc_core(reduce_concat(u, v))


def power(w: Sequence[int], n: int) -> Word:
    """Reduced form of ``w**n`` (``n`` may be negative)."""
    base = tuple(w) if n >= 0 else invert(w)
    return reduce(base * abs(n))


# ---------------------------------------------------------------------------
# periodicity and rotation classes
# ---------------------------------------------------------------------------

def failure_function(w: Sequence[int]) -> list:
    """KMP border table: ``fail[i]`` is the longest proper border of ``w[:i]``."""
    n = len(w)
    fail = [0] * (n + 1)
    if n:
        fail[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and w[k] != w[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    if n:
        fail[0] = 0
    return fail


def _find(pattern: Sequence[int], text: Sequence[int]) -> int:
    m = len(pattern)
    if m == 0:
        return 0
    fail = failure_function(pattern)
    k = 0
    for i, x in enumerate(text):
        while k > 0 and pattern[k] != x:
            k = fail[k]
        if pattern[k] == x:
            k += 1
        if k == m:
            return i - m + 1
    return -1


def rotation_offset(u: Sequence[int], v: Sequence[int]) -> Optional[int]:
    """Least ``k`` with ``rotate(u, k) == v``, or ``None``."""
    if len(u) != len(v):
        return None
    if not u:
        return 0
    k = _find(tuple(v), tuple(u) + tuple(u))
    return None if k < 0 else k


def is_cyclic_perm(u: Sequence[int], v: Sequence[int]) -> Optional[Word]:
    """Shortest ``p`` with ``u + p == p + v`` when ``u ~ v``, else ``None``."""
    k = rotation_offset(u, v)
    if k is None:
        return None
    return tuple(u[:k])


def are_rotations(u: Sequence[int], v: Sequence[int]) -> bool:
    return rotation_offset(u, v) is not None


def least_rotation_offset(w: Sequence[int]) -> int:
    """Booth's algorithm under :func:`letter_key`."""
    n = len(w)
    if n == 0:
        return 0
    s = [letter_key(x) for x in w]
    s = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_rotation(w: Sequence[int]) -> Word:
    return rotate(w, least_rotation_offset(w))


def primitive_root(w: Sequence[int]) -> PrimitiveRoot:
    """``(c, m)`` with ``w == power(c, m)`` and ``c`` not a proper power.

    >>> primitive_root(parse_word("xyyX"))
    PrimitiveRoot(root=(24, 25, -24), exponent=2)
    """
    w = tuple(w)
    if not is_reduced(w):
        raise ValueError(f"primitive_root needs a reduced word, got {w!r}")
    if not w:
        return PrimitiveRoot(EMPTY, 0)
    t, c = cyc_reduce(w)
    n = len(c)
    period = n - failure_function(c)[n]
    d = period if n % period == 0 else n
    return PrimitiveRoot(t + c[:d] + invert(t), n // d)
