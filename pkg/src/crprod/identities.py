"""Identities among relations as sequences of conjugated relators.

A sequence ``[(a1, r1), ..., (an, rn)]`` stands for the product of
conjugates ``a1 r1 a1⁻¹ ... an rn an⁻¹``; its evaluation ``psi`` is the
reduced form of that product.  Move indices are 1-based: move ``i`` acts on
terms ``i`` and ``i + 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .words import Word, format_word, invert, parse_word, reduce, reduce_concat


class NotAnIdentityError(ValueError):
    """The sequence does not evaluate to the empty word."""


class MoveError(ValueError):
    """A Peiffer move was requested where it does not apply."""


class IdentitySyntaxError(ValueError):
    pass


class ConjugatedRelator(NamedTuple):
    coefficient: Word
    relator: Word

    def inverse(self) -> "ConjugatedRelator":
        return ConjugatedRelator(self.coefficient, invert(self.relator))

    def __str__(self) -> str:
        return f"({format_word(self.coefficient)};{format_word(self.relator)})"


def term(coefficient, relator) -> ConjugatedRelator:
    """Build a term with both components reduced; accepts notation strings."""
    if isinstance(coefficient, str):
        coefficient = parse_word(coefficient)
    if isinstance(relator, str):
        relator = parse_word(relator)
    return ConjugatedRelator(reduce(coefficient), reduce(relator))


@dataclass(frozen=True)
class IdentitySequence:
    terms: Tuple[ConjugatedRelator, ...] = ()

    @classmethod
    def of(cls, *pairs) -> "IdentitySequence":
        """``IdentitySequence.of(("x", "y"), ("x", "Y"))``"""
        return cls(tuple(term(a, r) for a, r in pairs))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[ConjugatedRelator]:
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __add__(self, other: "IdentitySequence") -> "IdentitySequence":
        return IdentitySequence(self.terms + other.terms)

    def __str__(self) -> str:
        return format_sequence(self)

    def inverse(self) -> "IdentitySequence":
        return IdentitySequence(tuple(t.inverse() for t in reversed(self.terms)))

    def coefficients(self) -> Tuple[Word, ...]:
        return tuple(t.coefficient for t in self.terms)


@dataclass(frozen=True)
class TwoSidedIdentity:
    lhs: IdentitySequence
    rhs: IdentitySequence = IdentitySequence()

    def __str__(self) -> str:
        return f"{format_sequence(self.lhs)}=={format_sequence(self.rhs)}"


class Move(NamedTuple):
    kind: str  # "delete", "A" or "B"
    index: int

    def __str__(self) -> str:
        return f"{self.kind}@{self.index}"


# ---------------------------------------------------------------------------
# evaluation and moves
# ---------------------------------------------------------------------------

def eval_sequence(h: Iterable[ConjugatedRelator]) -> Word:
    parts = []
    for a, r in h:
        parts.append(a)
        parts.append(r)
        parts.append(invert(a))
    return reduce_concat(*parts)


def _pair(h: IdentitySequence, i: int):
    if not 1 <= i < len(h):
        raise MoveError(f"no pair of terms at position {i} in a sequence of {len(h)}")
    return h.terms[i - 1], h.terms[i]


def peiffer_delete(h: IdentitySequence, i: int) -> IdentitySequence:
    (a, r), (b, s) = _pair(h, i)
    if a != b or invert(r) != s:
        raise MoveError(f"terms {i}, {i + 1} are not a cancelling pair")
    return IdentitySequence(h.terms[:i - 1] + h.terms[i + 1:])


def exchange(h: IdentitySequence, i: int, kind: str) -> IdentitySequence:
    """Type A: ``(a,r),(b,s) -> (b,s),(ρ(b s⁻¹ b⁻¹ a), r)``;
    type B: ``(a,r),(b,s) -> (ρ(a r a⁻¹ b), s),(a,r)``."""
    (a, r), (b, s) = _pair(h, i)
    if kind == "A":
        new = (ConjugatedRelator(b, s),
               ConjugatedRelator(reduce_concat(b, invert(s), invert(b), a), r))
    elif kind == "B":
        new = (ConjugatedRelator(reduce_concat(a, r, invert(a), b), s),
               ConjugatedRelator(a, r))
    else:
        raise ValueError(f"exchange kind must be 'A' or 'B', got {kind!r}")
    return IdentitySequence(h.terms[:i - 1] + new + h.terms[i + 1:])


def conjugate_term(h: IdentitySequence, i: int, c: Sequence[int]) -> IdentitySequence:
    """Replace relator ``r_i`` by ``ρ(c r_i c⁻¹)`` and its coefficient by
    ``ρ(a_i c⁻¹)``; the evaluation is unchanged."""
    if not 1 <= i <= len(h):
        raise MoveError(f"no term {i} in a sequence of {len(h)}")
    a, r = h.terms[i - 1]
    ci = invert(c)
    new = ConjugatedRelator(reduce_concat(a, ci), reduce_concat(c, r, ci))
    return IdentitySequence(h.terms[:i - 1] + (new,) + h.terms[i:])


def apply_move(h: IdentitySequence, move: Move) -> IdentitySequence:
    if move.kind == "delete":
        return peiffer_delete(h, move.index)
    return exchange(h, move.index, move.kind)


def apply_moves(h: IdentitySequence, moves: Iterable[Move]) -> IdentitySequence:
    for m in moves:
        h = apply_move(h, m)
    return h


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

def _require_identity(h: IdentitySequence) -> None:
    psi = eval_sequence(h)
    if psi:
        raise NotAnIdentityError(f"psi(h) = {format_word(psi)}, not 1")


def deletion_trace(h: IdentitySequence) -> Optional[List[Move]]:
    """Free reduction over the term alphabet, recorded as Peiffer deletions.
    ``None`` when the sequence does not reduce to the empty sequence."""
    stack: list = []
    moves = []
    for t in h.terms:
        if stack and stack[-1].coefficient == t.coefficient \
                and stack[-1].relator == invert(t.relator):
            moves.append(Move("delete", len(stack)))
            stack.pop()
        else:
            stack.append(t)
    return None if stack else moves


def is_basic(h: IdentitySequence) -> bool:
    _require_identity(h)
    return deletion_trace(h) is not None


def is_strictly_basic(h: IdentitySequence) -> bool:
    if not is_basic(h):
        return False
    return len(set(h.coefficients())) <= 1


def normal_forms(identity: TwoSidedIdentity) -> Tuple[IdentitySequence, IdentitySequence]:
    """The two normal forms obtained by moving the right side across, to the
    end and to the front respectively."""
    lhs, rhs = identity.lhs, identity.rhs
    left, right = eval_sequence(lhs), eval_sequence(rhs)
    if left != right:
        raise NotAnIdentityError(
            f"psi(lhs) = {format_word(left)} but psi(rhs) = {format_word(right)}")
    moved = rhs.inverse()
    return lhs + moved, moved + lhs


def collapse_search(h: IdentitySequence, max_moves: int,
                    kinds: Tuple[str, ...] = ("delete", "A", "B")) -> Optional[List[Move]]:
    """Breadth-first search for a move sequence emptying ``h``.

    Returns a shortest trace within ``max_moves``; ``None`` means nothing
    was found inside the bound, which proves nothing.
    """
    _require_identity(h)
    if not h.terms:
        return []
    start = h.terms
    parent = {start: None}
    frontier = deque([(start, 0)])
    while frontier:
        state, depth = frontier.popleft()
        if depth >= max_moves:
            continue
        seq = IdentitySequence(state)
        for i in range(1, len(state)):
            for kind in kinds:
                try:
                    nxt = apply_move(seq, Move(kind, i)).terms
                except MoveError:
                    continue
                if nxt in parent:
                    continue
                parent[nxt] = (state, Move(kind, i))
                if not nxt:
                    trace = []
                    cur = nxt
                    while parent[cur] is not None:
                        cur, mv = parent[cur]
                        trace.append(mv)
                    return trace[::-1]
                frontier.append((nxt, depth + 1))
    return None


# ---------------------------------------------------------------------------
# identity file notation
# ---------------------------------------------------------------------------

def format_sequence(h: Iterable[ConjugatedRelator]) -> str:
    return "*".join(str(t) for t in h)


def parse_sequence(text: str) -> IdentitySequence:
    text = text.strip()
    if not text:
        return IdentitySequence()
    out = []
    for chunk in text.split("*"):
        if len(chunk) < 2 or chunk[0] != "(" or chunk[-1] != ")" or chunk.count(";") != 1:
            raise IdentitySyntaxError(f"malformed term {chunk!r}")
        a, r = chunk[1:-1].split(";")
        try:
            out.append(term(parse_word(a), parse_word(r)))
        except ValueError as exc:
            raise IdentitySyntaxError(f"bad word in term {chunk!r}: {exc}") from exc
    return IdentitySequence(tuple(out))


def parse_identity(line: str) -> TwoSidedIdentity:
    """``(x;y)*(x;Y)==`` -- terms joined by ``*``, sides split by ``==``."""
    if line.count("==") != 1:
        raise IdentitySyntaxError("expected exactly one '=='")
    left, right = line.split("==")
    return TwoSidedIdentity(parse_sequence(left), parse_sequence(right))
