"""Exhaustive witness enumeration for small pairs.

Independent of the constructive route in :mod:`crprod.twisted`: every
rotation of ``u`` and of ``ρ̂(w)`` is tried literally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from .twisted import MainWitness
from .words import Word, are_rotations, crp, cyc_core, invert, reduce, rotations


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    u: Word
    w: Word
    f: Word
    g: Word
    first_rotations: FrozenSet[Word]                 # u' with ρ̂(w) ~ u' * f
    second_rotations: FrozenSet[Word]                # u'' with ρ̂(w) ~ g * u''
    conjugated: FrozenSet[Tuple[Word, Word]]         # (u', h) pairs, h ≠ 1

    @property
    def witnesses(self) -> List[MainWitness]:
        out = [MainWitness("A", self.u, self.w, a, b, None, self.f, self.g)
               for a in sorted(self.first_rotations)
               for b in sorted(self.second_rotations)]
        out += [MainWitness("B", self.u, self.w, a, None, h, self.f, self.g)
                for a, h in sorted(self.conjugated)]
        return out

    @property
    def has_case_a(self) -> bool:
        return bool(self.first_rotations) and bool(self.second_rotations)

    def contains(self, mw: MainWitness) -> bool:
        if mw.case == "A":
            return (mw.u_prime in self.first_rotations
                    and mw.u_dblprime in self.second_rotations)
        if mw.case == "B":
            return (mw.u_prime, mw.h) in self.conjugated
        return False


def oracle_witness_search(u, w, bound: int = 12) -> OracleResult:
    """All witnesses of both shapes for ``(u, w)``; refuses words longer than
    ``bound`` since the search is quadratic in the rotation counts."""
    u, w = reduce(u), reduce(w)
    if len(u) > bound or len(w) > bound:
        raise OracleBoundError(f"oracle bound {bound} exceeded by |u|={len(u)}, |w|={len(w)}")
    ui = invert(u)
    f, g = crp(ui, w), crp(w, ui)
    core = cyc_core(w)
    rots = sorted(set(rotations(u)))
    first = frozenset(r for r in rots if are_rotations(core, crp(r, f)))
    second = frozenset(r for r in rots if are_rotations(core, crp(g, r)))
    conj = set()
    if f == g:
        reduced_rots = {reduce(r) for r in rots}
        for c in set(rotations(core)):
            for u0 in reduced_rots:
                if c[:len(u0)] != u0:
                    continue
                rest = c[len(u0):]
                k2 = len(rest) - len(f)
                if k2 <= 0 or k2 % 2:
                    continue
                h = rest[:k2 // 2]
                if rest == h + f + invert(h):
                    conj.add((u0, h))
    return OracleResult(u, w, f, g, first, second, frozenset(conj))
