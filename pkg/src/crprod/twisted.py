"""Twisted associativity of the cyclically reduced product.

For words ``u, w`` put ``f = u⁻¹ * w`` and ``g = w * u⁻¹``.  :func:`main_theorem`
returns one of two certified witnesses:

* case ``A``: rotations ``u'``, ``u''`` of ``u`` with ``ρ̂(w) ~ u' * f`` and
  ``ρ̂(w) ~ g * u''``;
* case ``B``: ``u'`` (the reduced form of a rotation of ``u``) and ``h ≠ 1``
  with ``f == g``, ``ρ̂(w) ~ u' h f h⁻¹`` and ``ρ̂(w) ~ h g h⁻¹ u'`` as
  literal concatenations.

The construction follows the three-case split of ``(ρ(u⁻¹), ρ(w))`` and the
chain of helper propositions :func:`tec2`, :func:`tec2a`, :func:`tec2b`,
:func:`tec2c` and :func:`base_lemma`.  Each equivalence carries a strictly
basic identity among relations over ``u, u⁻¹, w, w⁻¹`` (a
:class:`Certificate`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .equations import ShirvCase1, ShirvCase2, ShirvCase3, shirv_decompose
from .identities import (
    ConjugatedRelator,
    IdentitySequence,
    eval_sequence,
    is_basic,
    is_strictly_basic,
)
from .words import (
    EMPTY,
    Word,
    are_rotations,
    crp,
    cyc_core,
    cyc_reduce,
    format_word,
    invert,
    is_reduced,
    primitive_root,
    reduce,
    reduce_concat,
    reverse,
    rotate,
    rotation_offset,
    rotations,
)


class PreconditionError(ValueError):
    pass


class ConstructionError(RuntimeError):
    """The constructive proof reached a branch it declares impossible."""


class Mode(str, enum.Enum):
    LEFT_PRODUCT = "LeftProduct"      # v = u0 * f
    RIGHT_PRODUCT = "RightProduct"    # v = f * u0
    EQUIVALENT = "Equivalent"         # v ~ u0 * f, or v ~ u0 h f h⁻¹
    CONJ_LEFT = "ConjLeft"            # v = h f h⁻¹ u0
    CONJ_RIGHT = "ConjRight"          # v = u0 h f h⁻¹


# ---------------------------------------------------------------------------
# base lemma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseLemmaWitness:
    u0: Word
    f: Word
    strong: bool
    side: str
    certificate: IdentitySequence
    # u0*f (Left) or f*u0 (Right) equals ρ(gamma · u0 f · gamma⁻¹), resp. with f u0
    gamma: Word
    # the product is x·y while ρ̂(w) is y·x
    x: Word
    # ρ̂(w) = ρ(epsilon w epsilon⁻¹)
    epsilon: Word

    @property
    def product(self) -> Word:
        return crp(self.u0, self.f) if self.side == "Left" else crp(self.f, self.u0)


def base_lemma(u, w, alpha, beta, side: str = "Left") -> BaseLemmaWitness:
    u, w, alpha, beta = (tuple(x) for x in (u, w, alpha, beta))
    ai, bi = invert(alpha), invert(beta)
    u0 = reduce_concat(alpha, u, ai)
    u0_inv = reduce_concat(alpha, invert(u), ai)
    bwb = reduce_concat(beta, w, bi)
    if side == "Left":
        f = reduce_concat(u0_inv, bwb)
        lead, tail = u0, f
    elif side == "Right":
        f = reduce_concat(bwb, u0_inv)
        lead, tail = f, u0
    else:
        raise ValueError(f"side must be 'Left' or 'Right', got {side!r}")
    strong = is_reduced(beta + reduce(w) + bi)
    t, product = cyc_reduce(reduce_concat(lead, tail))
    gamma = invert(t)
    k = rotation_offset(product, cyc_core(w))
    if k is None:
        raise ConstructionError("base lemma: product is not a rotation of the cyclic core")
    x = product[:k]
    epsilon = reduce_concat(invert(x), gamma, beta)
    ga = reduce_concat(gamma, alpha)
    gb = reduce_concat(gamma, beta)
    wr, ur = reduce(w), reduce(u)
    if side == "Left":
        terms = [(ga, ur), (ga, invert(ur)), (gb, wr), (gb, invert(wr))]
    else:
        terms = [(gb, wr), (ga, invert(ur)), (ga, ur), (gb, invert(wr))]
    cert = IdentitySequence(tuple(ConjugatedRelator(a, r) for a, r in terms))
    return BaseLemmaWitness(u0, f, strong, side, cert, gamma, x, epsilon)


def check_base_lemma(u, w, alpha, beta, bw: BaseLemmaWitness) -> Dict[str, bool]:
    u, w, alpha, beta = (tuple(x) for x in (u, w, alpha, beta))
    core = cyc_core(w)
    product = bw.product
    x = bw.x
    checks = {
        "u0": bw.u0 == reduce_concat(alpha, u, invert(alpha)),
        "rotation": are_rotations(product, core),
        "strong": (not bw.strong) or product == core,
        "x_split": product[:len(x)] == x and product[len(x):] + x == core,
        "epsilon": reduce_concat(bw.epsilon, w, invert(bw.epsilon)) == core,
        "psi": not eval_sequence(bw.certificate),
    }
    checks["basic"] = checks["psi"] and is_basic(bw.certificate)
    return checks


# ---------------------------------------------------------------------------
# twisted witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistWitness:
    """``v`` against ``u0`` and ``f``: a rotation witness (``h`` empty) or a
    conjugated one (``h`` non-empty)."""
    tag: str              # "Rotation" or "Conjugated"
    mode: Mode
    u0: Word
    h: Word
    v: Word
    f: Word
    u: Word
    # "rotation": u0 is a rotation of u; "reduced": reduced form of a rotation
    u0_kind: str
    route: Tuple[str, ...] = ()

    def relation_holds(self) -> bool:
        v, u0, f, h = self.v, self.u0, self.f, self.h
        if self.tag == "Rotation":
            if h:
                return False
            if self.mode is Mode.LEFT_PRODUCT:
                return v == crp(u0, f)
            if self.mode is Mode.RIGHT_PRODUCT:
                return v == crp(f, u0)
            return are_rotations(v, crp(u0, f))
        if not h:
            return False
        hi = invert(h)
        if self.mode is Mode.CONJ_LEFT:
            return v == h + f + hi + u0
        if self.mode is Mode.CONJ_RIGHT:
            return v == u0 + h + f + hi
        return are_rotations(v, u0 + h + f + hi)

    def u0_holds(self) -> bool:
        if self.u0_kind == "rotation":
            return any(self.u0 == r for r in rotations(self.u))
        return any(self.u0 == reduce(r) for r in rotations(self.u))

    def holds(self) -> bool:
        return self.relation_holds() and self.u0_holds()


def _rotation(u0, u, mode, v, f, kind, route) -> TwistWitness:
    return TwistWitness("Rotation", mode, u0, EMPTY, v, f, u, kind, route)


def _conjugated(u0, h, u, mode, v, f, kind, route) -> TwistWitness:
    if not h:
        raise ConstructionError("conjugated witness with empty h")
    return TwistWitness("Conjugated", mode, u0, h, v, f, u, kind, route)


def tec2(f, t, u) -> TwistWitness:
    """Witness for ``v = ρ̂(t f t⁻¹ u)`` where ``t f t⁻¹ u`` is reduced.

    Reads off the position of ``s v s⁻¹ = t f t⁻¹ u`` against the four
    blocks; the first matching alignment (in the order 1..8) wins.
    """
    f, t, u = tuple(f), tuple(t), tuple(u)
    ti = invert(t)
    full = t + f + ti + u
    if not is_reduced(full):
        raise PreconditionError("tec2 needs t f t^-1 u reduced")
    s, v = cyc_reduce(full)
    if not u:
        # the alignment argument needs u != 1; here v = ρ̂(f) = 1 * f
        return _rotation(EMPTY, u, Mode.LEFT_PRODUCT, v, f, "rotation", ("tec2:u=1",))
    b1, b2, b3 = len(t), len(t) + len(f), 2 * len(t) + len(f)
    S = len(s)
    e = S + len(v)
    fi = invert(f)

    def rot(u0, mode, case):
        return _rotation(u0, u, mode, v, f, "rotation", (f"tec2:{case}",))

    if S >= b3:
        u1 = full[b3:S]
        return rot(ti + u1 + v + invert(u1) + t + fi, Mode.LEFT_PRODUCT, 1)
    if b2 <= S and e >= b3:
        t1i = full[b2:S]
        return rot(fi + t1i + v + invert(t1i), Mode.RIGHT_PRODUCT, 2)
    if b2 <= S:
        t2i = full[b2:S]
        return rot(fi + t2i + v + invert(t2i), Mode.RIGHT_PRODUCT, 3)
    if b1 <= S and e >= b3:
        f1 = full[b1:S]
        u1 = full[b3:e]
        return rot(ti + u1 + invert(f1), Mode.RIGHT_PRODUCT, 4)
    if b1 <= S and e >= b2:
        f1 = full[b1:S]
        t2i = full[b2:e]
        return rot(t2i + invert(f1), Mode.RIGHT_PRODUCT, 5)
    if b1 <= S:
        f1, f2 = full[b1:S], full[e:b2]
        return rot(invert(f1)[len(f2):], Mode.LEFT_PRODUCT, 6)
    h = full[S:b1]
    if e >= b3:
        case = 7
        u0 = full[e:] + full[b3:e]
    elif e >= b2:
        case = 8
        u0 = v[len(h) + len(f):][len(h):]
    else:
        raise ConstructionError("tec2: alignment 9/10 reached with u != 1")
    if not h:
        return rot(u0, Mode.RIGHT_PRODUCT, case)
    return _conjugated(u0, h, u, Mode.CONJ_LEFT, v, f, "rotation", (f"tec2:{case}",))


def tec2a(f, t, u) -> TwistWitness:
    """Witness for ``v = ρ̂(u t f t⁻¹)``, by running :func:`tec2` on reverses."""
    f, t, u = tuple(f), tuple(t), tuple(u)
    if not is_reduced(u + t + f + invert(t)):
        raise PreconditionError("tec2a needs u t f t^-1 reduced")
    r = tec2(reverse(f), invert(reverse(t)), reverse(u))
    route = ("tec2a",) + r.route
    v = reverse(r.v)
    u0 = reverse(r.u0)
    if r.tag == "Rotation":
        flip = {Mode.LEFT_PRODUCT: Mode.RIGHT_PRODUCT,
                Mode.RIGHT_PRODUCT: Mode.LEFT_PRODUCT}
        return _rotation(u0, u, flip.get(r.mode, r.mode), v, f, "rotation", route)
    return _conjugated(u0, invert(reverse(r.h)), u, Mode.CONJ_RIGHT, v, f,
                       "rotation", route)


def tec2b(f, t, u1, u2) -> TwistWitness:
    """Witness for ``v = ρ̂(u2 u1 t f t⁻¹)`` against ``u = u1 u2``, by
    induction on ``|u2|``."""
    f, t, u1, u2 = tuple(f), tuple(t), tuple(u1), tuple(u2)
    ti = invert(t)
    if not u1:
        raise PreconditionError("tec2b needs u1 != 1")
    if not is_reduced(u1 + t + f + ti + u2):
        raise PreconditionError("tec2b needs u1 t f t^-1 u2 reduced")
    u = u1 + u2
    if not u2:
        r = tec2a(f, t, u1)
        return _retag(r, u, "tec2b:0")
    body = u1 + t + f + ti
    ell = 0
    m = min(len(u2), len(body))
    while ell < m and u2[len(u2) - 1 - ell] == -body[ell]:
        ell += 1
    u3 = u2[:len(u2) - ell]
    v0 = u3 + body[ell:]
    v = cyc_core(v0)
    n1, nt, nf = len(u1), len(t), len(f)
    if ell <= n1:
        r = tec2a(f, t, u3 + u1[ell:])
        if r.tag == "Rotation":
            return _rotation(reduce(r.u0), u, r.mode, v, f, "reduced",
                             ("tec2b:1",) + r.route)
        return _conjugated(r.u0, r.h, u, r.mode, v, f, "reduced", ("tec2b:1",) + r.route)
    if ell <= n1 + nt:
        k = ell - n1
        t1, t2 = t[:k], t[k:]
        r = tec2c(f, t2, u3, invert(t1))
        if r.v != v:
            raise ConstructionError("tec2b case 2: recursion changed v")
        return _retag(r, u, "tec2b:2")
    alpha = ti + invert(u1)
    bw = base_lemma(u, v0, alpha, ti, "Left")
    if bw.f != f:
        raise ConstructionError("tec2b: base lemma produced a different f")
    case = "tec2b:3" if ell <= n1 + nt + nf else "tec2b:4"
    mode = Mode.LEFT_PRODUCT if bw.strong else Mode.EQUIVALENT
    return _rotation(bw.u0, u, mode, v, f, "reduced", (case,))


def _retag(r: TwistWitness, u, label) -> TwistWitness:
    return TwistWitness(r.tag, r.mode, r.u0, r.h, r.v, r.f, u, "reduced",
                        (label,) + r.route)


def tec2c(f, t, u1, u2) -> TwistWitness:
    """Witness for ``v = ρ̂(u1 t f t⁻¹ u2)`` against ``u = u1 u2``."""
    f, t, u1, u2 = tuple(f), tuple(t), tuple(u1), tuple(u2)
    if not is_reduced(u1 + t + f + invert(t) + u2):
        raise PreconditionError("tec2c needs u1 t f t^-1 u2 reduced")
    if not u1:
        return _retag(tec2(f, t, u2), u2, "tec2c:u1=1")
    r = tec2b(f, t, u1, u2)
    v = cyc_core(u1 + t + f + invert(t) + u2)
    return TwistWitness(r.tag, Mode.EQUIVALENT, r.u0, r.h, v, f, u1 + u2, "reduced",
                        ("tec2c",) + r.route)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def conjugator_between(x: Sequence[int], y: Sequence[int]) -> Optional[Word]:
    """Some ``a`` with ``ρ(a x a⁻¹) == y`` (both reduced), or ``None``."""
    t1, c1 = cyc_reduce(x)
    t2, c2 = cyc_reduce(y)
    k = rotation_offset(c1, c2)
    if k is None:
        return None
    return reduce_concat(t2, invert(c1[:k]), invert(t1))


def _conjugates(a, x, y) -> bool:
    return reduce_concat(a, x, invert(a)) == y


def common_conjugator(pairs, hints=()) -> Optional[Word]:
    """A single ``a`` with ``ρ(a x a⁻¹) == y`` for every ``(x, y)`` in ``pairs``.

    Solutions of one equation form a coset of the cyclic centralizer
    ``<root(y)>``; the coset of the first non-trivial pair is walked outward
    from a particular solution until every other equation holds.
    """
    pairs = [(reduce(x), reduce(y)) for x, y in pairs]
    for a in hints:
        a = reduce(a)
        if all(_conjugates(a, x, y) for x, y in pairs):
            return a
    live = [(x, y) for x, y in pairs if x or y]
    if not live:
        return EMPTY
    x0, y0 = live[0]
    a0 = conjugator_between(x0, y0)
    if a0 is None:
        return None
    rest = live[1:]
    if all(_conjugates(a0, x, y) for x, y in rest):
        return a0
    root = primitive_root(y0).root
    bound = len(a0) + sum(len(x) + len(y) for x, y in live) + 2
    for m in range(1, bound + 1):
        for e in (m, -m):
            a = reduce_concat(*([root] * m if e > 0 else [invert(root)] * m), a0)
            if all(_conjugates(a, x, y) for x, y in rest):
                return a
    return None


@dataclass(frozen=True)
class Certificate:
    """Strictly basic identity attached to one equivalence of the witness.

    ``alpha`` conjugates ``u`` onto the rotation and the unreduced product
    ``u⁻¹w`` (or ``wu⁻¹``) onto the twisted factor at once; ``gamma``
    cyclically reduces the concatenation to ``product``, which is
    ``rotate(ρ̂(w), offset)``.
    """
    claim: str          # "A1", "A2", "B1", "B2"
    terms: IdentitySequence
    alpha: Word
    gamma: Word
    product: Word
    offset: int


def _make_certificate(claim, u, w, rot, twist, unreduced, left, gamma_from) -> Optional[Certificate]:
    alpha = common_conjugator([(u, reduce(rot)), (unreduced, twist)])
    if alpha is None:
        return None
    t, product = cyc_reduce(gamma_from)
    gamma = invert(t)
    offset = rotation_offset(cyc_core(w), product)
    if offset is None:
        return None
    c = reduce_concat(gamma, alpha)
    ui, wi = invert(u), invert(w)
    if left:
        terms = ((c, u), (c, ui), (c, w), (c, wi))
    else:
        terms = ((c, w), (c, ui), (c, u), (c, wi))
    seq = IdentitySequence(tuple(ConjugatedRelator(a, r) for a, r in terms))
    return Certificate(claim, seq, alpha, gamma, product, offset)


def certify_claim(claim: str, u, w, u_rot, h=EMPTY) -> Optional[Certificate]:
    """Build the certificate for one of the four equivalences."""
    u, w, u_rot, h = reduce(u), reduce(w), tuple(u_rot), tuple(h)
    ui = invert(u)
    if claim in ("A1", "B1"):
        unreduced = reduce_concat(ui, w)
        factor = crp(ui, w)
    else:
        unreduced = reduce_concat(w, ui)
        factor = crp(w, ui)
    twist = reduce_concat(h, factor, invert(h))
    if claim == "A1":
        concat_ = reduce_concat(u_rot, factor)
    elif claim == "A2":
        concat_ = reduce_concat(factor, u_rot)
    elif claim == "B1":
        concat_ = u_rot + h + factor + invert(h)
    elif claim == "B2":
        concat_ = h + factor + invert(h) + u_rot
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return _make_certificate(claim, u, w, u_rot, twist, unreduced,
                             claim in ("A1", "B1"), concat_)


def check_certificate(cert: Certificate, u, w, u_rot, h=EMPTY) -> Dict[str, bool]:
    u, w, u_rot, h = reduce(u), reduce(w), tuple(u_rot), tuple(h)
    ui = invert(u)
    if cert.claim in ("A1", "B1"):
        unreduced, factor = reduce_concat(ui, w), crp(ui, w)
    else:
        unreduced, factor = reduce_concat(w, ui), crp(w, ui)
    twist = reduce_concat(h, factor, invert(h))
    a = cert.alpha
    if cert.claim == "A1":
        concat_ = reduce_concat(u_rot, factor)
    elif cert.claim == "A2":
        concat_ = reduce_concat(factor, u_rot)
    elif cert.claim == "B1":
        concat_ = u_rot + h + factor + invert(h)
    else:
        concat_ = h + factor + invert(h) + u_rot
    c = reduce_concat(cert.gamma, a)
    psi_ok = not eval_sequence(cert.terms)
    left = cert.claim in ("A1", "B1")
    expected = ((u, ui, w, invert(w)) if left else (w, ui, u, invert(w)))
    return {
        "alpha_rotation": _conjugates(a, u, reduce(u_rot)),
        "alpha_factor": _conjugates(a, unreduced, twist),
        "gamma": reduce_concat(cert.gamma, concat_, invert(cert.gamma)) == cert.product,
        "product": cyc_core(concat_) == cert.product,
        "offset": rotate(cyc_core(w), cert.offset) == cert.product,
        "coefficients": cert.terms.coefficients() == (c,) * 4
                        and tuple(t.relator for t in cert.terms) == expected,
        "conjugate_of_w": _conjugates(c, w, cert.product),
        "psi": psi_ok,
        "strictly_basic": psi_ok and is_strictly_basic(cert.terms),
    }


# ---------------------------------------------------------------------------
# main theorem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MainWitness:
    case: str                       # "A" or "B"
    u: Word                         # reduced inputs
    w: Word
    u_prime: Word
    u_dblprime: Optional[Word]      # case A only
    h: Optional[Word]               # case B only
    f: Word                         # u⁻¹ * w
    g: Word                         # w * u⁻¹
    cert1: Optional[Certificate] = None
    cert2: Optional[Certificate] = None
    route: Tuple[str, ...] = ()

    def key(self) -> tuple:
        if self.case == "A":
            return ("A", self.u_prime, self.u_dblprime)
        return ("B", self.u_prime, self.h)


@dataclass(frozen=True)
class _Half:
    case: str
    u_prime: Word
    h: Word
    route: Tuple[str, ...]


def _literal_rotation_reducing_to(u, target) -> Word:
    for r in rotations(u):
        if reduce(r) == target:
            return r
    raise ConstructionError(
        f"no rotation of {format_word(u)} reduces to {format_word(target)}")


def _first_half(u: Word, w: Word) -> _Half:
    """Case A (first equivalence) or case B for reduced ``u``, ``w``."""
    if not u:
        return _Half("A", EMPTY, EMPTY, ("u=1",))
    ui = invert(u)
    if u == w:
        return _Half("A", u, EMPTY, ("u=w",))
    f = crp(ui, w)
    sc = shirv_decompose(ui, w)
    if isinstance(sc, ShirvCase2):
        t, a, c1 = sc.t, sc.a, sc.c1
        return _Half("A", invert(t) + invert(a) + invert(c1), EMPTY, ("shirv2",))
    if isinstance(sc, ShirvCase3):
        x2, t, x1 = sc.v1, sc.s, invert(sc.a)
        return _Half("A", invert(t) + x2 + x1 + t + invert(f), EMPTY, ("shirv3",))
    assert isinstance(sc, ShirvCase1)
    u1, t, u2 = invert(sc.a), sc.s, invert(sc.u1)
    if not t:
        return _Half("A", u2 + u1, EMPTY, ("shirv1:t=1",))
    r = tec2c(f, t, u1, u2)
    route = ("shirv1",) + r.route
    if r.tag == "Rotation":
        return _Half("A", _literal_rotation_reducing_to(u, r.u0), EMPTY, route)
    return _Half("B", r.u0, r.h, route)


def _search_second_rotation(u, w, g) -> Optional[Word]:
    core = cyc_core(w)
    for r in rotations(u):
        if are_rotations(core, crp(g, r)):
            return r
    return None


def main_theorem(u, w, certify: bool = True) -> MainWitness:
    """Twisted associativity witness for ``(u, w)``; see the module docstring."""
    u, w = reduce(u), reduce(w)
    ui = invert(u)
    f, g = crp(ui, w), crp(w, ui)
    first = _first_half(u, w)
    if first.case == "A":
        mirror = _first_half(reverse(u), reverse(w))
        route = first.route
        if mirror.case == "A":
            u2 = reverse(mirror.u_prime)
            route += ("mirror",) + mirror.route
        else:
            u2 = _search_second_rotation(u, w, g)
            if u2 is None:
                raise ConstructionError("no rotation satisfies the second equivalence")
            route += ("mirror:search",)
        mw = MainWitness("A", u, w, first.u_prime, u2, None, f, g, route=route)
    else:
        mw = MainWitness("B", u, w, first.u_prime, None, first.h, f, g, route=first.route)
    if certify:
        mw = attach_certificates(mw)
    return mw


def attach_certificates(mw: MainWitness) -> MainWitness:
    if mw.case == "A":
        c1 = certify_claim("A1", mw.u, mw.w, mw.u_prime)
        c2 = certify_claim("A2", mw.u, mw.w, mw.u_dblprime)
    else:
        c1 = certify_claim("B1", mw.u, mw.w, mw.u_prime, mw.h)
        c2 = certify_claim("B2", mw.u, mw.w, mw.u_prime, mw.h)
    return MainWitness(mw.case, mw.u, mw.w, mw.u_prime, mw.u_dblprime, mw.h,
                       mw.f, mw.g, c1, c2, mw.route)


@dataclass
class VerificationReport:
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> List[str]:
        return [k for k, ok in self.checks.items() if not ok]


def verify_witness(u, w, mw: MainWitness) -> VerificationReport:
    u, w = reduce(u), reduce(w)
    ui = invert(u)
    f, g = crp(ui, w), crp(w, ui)
    core = cyc_core(w)
    rots = rotations(u)
    checks: Dict[str, bool] = {
        "inputs": mw.u == u and mw.w == w,
        "f": mw.f == f,
        "g": mw.g == g,
    }
    if mw.case == "A":
        u1, u2 = mw.u_prime, mw.u_dblprime
        checks["u_prime_rotation"] = u1 in rots
        checks["u_dblprime_rotation"] = u2 is not None and u2 in rots
        checks["claim1"] = are_rotations(core, crp(u1, f))
        checks["claim2"] = u2 is not None and are_rotations(core, crp(g, u2))
        claims = (("cert1", mw.cert1, "A1", u1), ("cert2", mw.cert2, "A2", u2))
        h = EMPTY
    elif mw.case == "B":
        h = mw.h or EMPTY
        u1 = mw.u_prime
        hi = invert(h)
        checks["u_prime_rotation"] = any(u1 == reduce(r) for r in rots)
        checks["h_nonempty"] = bool(h)
        checks["f_equals_g"] = f == g
        checks["claim1"] = are_rotations(core, u1 + h + f + hi)
        checks["claim2"] = are_rotations(core, h + g + hi + u1)
        claims = (("cert1", mw.cert1, "B1", u1), ("cert2", mw.cert2, "B2", u1))
    else:
        checks["case"] = False
        return VerificationReport(checks)
    for name, cert, claim, rot in claims:
        if cert is None or rot is None or cert.claim != claim:
            checks[f"{name}_present"] = False
            continue
        for k, ok in check_certificate(cert, u, w, rot, h).items():
            checks[f"{name}_{k}"] = ok
    return VerificationReport(checks)


# ---------------------------------------------------------------------------
# corollary shape
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorollaryWitness:
    u_prime: Word
    u_dblprime: Word
    h: Word
    f: Word
    g: Word
    certs: Tuple[Optional[Certificate], Optional[Certificate]]

    def holds(self, w) -> bool:
        core = cyc_core(w)
        hi = invert(self.h)
        ok = (are_rotations(core, crp(self.u_prime, self.h + self.f + hi))
              and are_rotations(core, crp(self.h + self.g + hi, self.u_dblprime)))
        if self.h:
            ok = ok and self.f == self.g and self.u_prime == self.u_dblprime
            ok = ok and is_reduced(self.u_prime + self.h + self.f + hi) \
                and crp(self.u_prime, self.h + self.f + hi) == self.u_prime + self.h + self.f + hi
        return ok


def corollary_witness(u, w) -> CorollaryWitness:
    mw = main_theorem(u, w)
    if mw.case == "A":
        return CorollaryWitness(reduce(mw.u_prime), reduce(mw.u_dblprime), EMPTY,
                                mw.f, mw.g, (mw.cert1, mw.cert2))
    return CorollaryWitness(mw.u_prime, mw.u_prime, mw.h, mw.f, mw.g,
                            (mw.cert1, mw.cert2))


# ---------------------------------------------------------------------------
# rotation-split identity for  w ~ ρ(h f h⁻¹ u)  or  w ~ ρ(u h f h⁻¹)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RotationSplitIdentity:
    b: Word
    f: Word
    identity: IdentitySequence


def rotation_split_identity(w, h, u, f, right: bool = False) -> RotationSplitIdentity:
    """Given ``w ~ ρ(h f h⁻¹ u)`` (or ``ρ(u h f h⁻¹)`` with ``right``), find ``b``
    with ``f == ρ(h⁻¹ b⁻¹ w b u⁻¹ h)`` (resp. ``ρ(h⁻¹ u⁻¹ b⁻¹ w b h)``) and the
    basic identity behind ``w = ρ(w b u⁻¹ u b⁻¹)``."""
    w, h, u, f = (tuple(x) for x in (w, h, u, f))
    hi = invert(h)
    rhs = reduce_concat(u, h, f, hi) if right else reduce_concat(h, f, hi, u)
    k = rotation_offset(w, rhs)
    if k is None:
        raise PreconditionError("w is not a rotation of the given product")
    b = w[:k]
    bi = invert(b)
    if right:
        f2 = reduce_concat(hi, invert(u), bi, w, b, h)
    else:
        f2 = reduce_concat(hi, bi, w, b, invert(u), h)
    # w = ρ(w · b u⁻¹ b⁻¹ · b u b⁻¹)
    b_red = reduce(b)
    seq = IdentitySequence((
        ConjugatedRelator(EMPTY, reduce(w)),
        ConjugatedRelator(b_red, reduce(invert(u))),
        ConjugatedRelator(b_red, reduce(u)),
        ConjugatedRelator(EMPTY, reduce(invert(w))),
    ))
    return RotationSplitIdentity(b, f2, seq)
