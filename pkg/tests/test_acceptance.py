"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) or through pytest, where the
lines are repeated in the terminal summary.
"""
import itertools
import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crprod import _kernels as K  # noqa: E402
from crprod.equations import shirv_decompose  # noqa: E402
from crprod.identities import (  # noqa: E402
    ConjugatedRelator,
    IdentitySequence,
    MoveError,
    conjugate_term,
    eval_sequence,
    exchange,
    is_basic,
    is_strictly_basic,
    peiffer_delete,
    term,
)
from crprod.oracle import oracle_witness_search  # noqa: E402
from crprod.sweep import SweepConfig, cmd_verify_sweep, words_up_to  # noqa: E402
from crprod.twisted import main_theorem, verify_witness  # noqa: E402
from crprod.words import (  # noqa: E402
    are_rotations,
    canonical_rotation,
    crp,
    cyc_core,
    format_word,
    invert,
    is_reduced,
    parse_word,
    reduce,
    reverse,
    rotate,
    rotations,
)
from oracles import naive_is_basic  # noqa: E402

P, F = parse_word, format_word
SEED = 20240521
LETTERS = (24, -24, 25, -25)

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"criterion {number} [PRIMARY] {title}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def random_word(rng, max_len):
    return tuple(rng.choice(LETTERS) for _ in range(rng.randint(0, max_len)))


# ---------------------------------------------------------------------------
# 1. worked examples
# ---------------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    checks = {}
    xy, X, x = P("xy"), P("X"), P("x")
    checks["non-assoc left"] = F(crp(crp(xy, X), x)) == "yx"
    checks["non-assoc right"] = F(crp(xy, crp(X, x))) == "xy"

    u, w = P("xYxyy"), P("xxYXyy")
    ui = invert(u)
    checks["naive left"] = F(crp(u, crp(ui, w))) == "YxyyXyxY"
    checks["naive right"] = F(crp(crp(w, ui), u)) == "xYXXyxYxyy"
    mw = main_theorem(u, w)
    checks["case A u'"] = mw.case == "A" and F(mw.u_prime) == "yyxYx"
    checks["case A u''"] = F(mw.u_dblprime) == "Yxyyx"
    left, right = crp(mw.u_prime, mw.f), crp(mw.g, mw.u_dblprime)
    # which product lands on which side is checked exactly below; both are rotations of w
    checks["case A products"] = F(left) == "yyxxYX" and F(right) == "xYXyyx"
    checks["case A ~ w"] = are_rotations(left, w) and are_rotations(right, w)
    checks["case A verified"] = verify_witness(u, w, mw).passed

    def sides(us, ws):
        a, b = P(us), P(ws)
        ai = invert(a)
        return crp(a, crp(ai, b)), crp(crp(b, ai), a), cyc_core(b)

    l, r, c = sides("xy", "yy")
    checks["intro xy,yy"] = F(l) == "xyXy" and l != c and F(r) == "yy" and r == c
    l, r, c = sides("xy", "xx")
    checks["intro xy,xx"] = l == c and r != c
    l, r, c = sides("yxy", "yXy")
    checks["intro yxy,yXy"] = l != c and r != c and l != r

    u, w = P("xxy"), P("xyxyxYYxy")
    mw = main_theorem(u, w)
    checks["case B f"] = F(crp(invert(u), w)) == "xyxY"
    rot = P("xyxyxyxYY")
    checks["case B split"] = (rot in rotations(w) and mw.case == "B"
                              and F(mw.u_prime) == "xyx" and F(mw.h) == "y"
                              and rot == mw.u_prime + mw.h + mw.f + invert(mw.h))
    checks["case B verified"] = verify_witness(u, w, mw).passed

    o = oracle_witness_search(P("xYxy"), P("xxYXy"))
    checks["oracle counts"] = len(o.first_rotations) == 2 and len(o.second_rotations) == 1
    elapsed = time.perf_counter() - t0
    bad = [k for k, ok in checks.items() if not ok]
    ok = not bad and elapsed < 1.0
    detail = f"{len(checks)} checks in {elapsed:.2f}s; u'*f=yyxxYX, g*u''=xYXyyx, both ~ w"
    if bad:
        detail = "failed: " + ", ".join(bad)
    return report(1, "worked examples, exact strings", ok, detail)


# ---------------------------------------------------------------------------
# 2 and 3. exhaustive sweep with oracle membership
# ---------------------------------------------------------------------------

_SWEEP = {}


def sweep_report():
    if "rep" not in _SWEEP:
        _SWEEP["rep"] = cmd_verify_sweep(SweepConfig(alphabet_size=2, max_len_u=4, max_len_w=6,
                                                     oracle_bound=5))
    return _SWEEP["rep"]


def criterion_2():
    rep = sweep_report()
    non_oracle = [s for s in rep.failure_samples if not s[2].startswith("oracle")]
    expected = 161 * 1457
    ok = (rep.pairs_checked == expected and not non_oracle
          and rep.failures == len([s for s in rep.failure_samples if s[2].startswith("oracle")])
          and rep.wall_time < 600)
    detail = (f"{rep.pairs_checked}/{expected} pairs, A={rep.case_a_count} B={rep.case_b_count}, "
              f"failures={rep.failures}, {rep.wall_time:.0f}s")
    if non_oracle:
        detail += f", first: {non_oracle[0]}"
    return report(2, "exhaustive theorem sweep |u|<=4 |w|<=6", ok, detail)


def criterion_3():
    rep = sweep_report()
    n_w5 = len(words_up_to(2, 5))
    expected = 161 * n_w5
    mism = [s for s in rep.failure_samples if s[2].startswith("oracle")]
    ok = rep.oracle_checked >= expected and not mism
    return report(3, "oracle agreement |u|<=4 |w|<=5", ok,
                  f"{rep.oracle_checked} pairs checked against brute force, {len(mism)} mismatches")


# ---------------------------------------------------------------------------
# 4. product laws
# ---------------------------------------------------------------------------

def criterion_4(n=10_000):
    rng = random.Random(SEED)
    fails = {}

    def law(name, pred):
        bad = 0
        for _ in range(n):
            if not pred():
                bad += 1
        fails[name] = bad

    def commute():
        u, v = random_word(rng, 12), random_word(rng, 12)
        return canonical_rotation(crp(u, v)) == canonical_rotation(crp(v, u))

    def antihom():
        u, v = random_word(rng, 12), random_word(rng, 12)
        return reverse(crp(u, v)) == crp(reverse(v), reverse(u))

    def rev_core():
        w = random_word(rng, 12)
        return cyc_core(reverse(w)) == reverse(cyc_core(w))

    def rot_core():
        w = random_word(rng, 12)
        return are_rotations(cyc_core(rotate(w, rng.randint(0, 12))), cyc_core(w))

    def conj_core():
        t, w = random_word(rng, 12), random_word(rng, 12)
        c = cyc_core(t + w + invert(t))
        ok = are_rotations(c, cyc_core(w))
        rt, rw = reduce(t), reduce(w)
        if is_reduced(rt + rw + invert(rt)):
            ok = ok and c == cyc_core(w)
        return ok

    def idem():
        w = random_word(rng, 12)
        r = reduce(w)
        return reduce(r) == r and (len(w) - len(r)) % 2 == 0

    for name, fn in (("u*v~v*u", commute), ("reverse", antihom), ("core/reverse", rev_core),
                     ("core/rotation", rot_core), ("core/conjugate", conj_core),
                     ("reduce", idem)):
        law(name, fn)

    # the same commutation law evaluated by the batch kernels, cross-checked row-wise
    nprng = np.random.default_rng(SEED)
    lens_u = nprng.integers(0, 13, n)
    lens_v = nprng.integers(0, 13, n)
    us = [tuple(int(x) for x in nprng.choice(LETTERS, k)) for k in lens_u]
    vs = [tuple(int(x) for x in nprng.choice(LETTERS, k)) for k in lens_v]
    a = K.batch_canonical(*K.batch_crp(K.encode(us), K.encode(vs)))
    b = K.batch_canonical(*K.batch_crp(K.encode(vs), K.encode(us)))
    da, db = K.decode(*a), K.decode(*b)
    fails["kernel u*v~v*u"] = sum(x != y for x, y in zip(da, db))
    fails["kernel vs python"] = sum(x != canonical_rotation(crp(u, v))
                                    for x, u, v in zip(da, us, vs))
    total = sum(fails.values())
    detail = f"{len(fails)} laws x {n} cases, {total} failures, kernels={K.backend_name()}"
    if total:
        detail += " " + str({k: v for k, v in fails.items() if v})
    return report(4, "product law property suites", total == 0, detail)


# ---------------------------------------------------------------------------
# 5. Peiffer calculus
# ---------------------------------------------------------------------------

def criterion_5(n=10_000):
    rng = random.Random(SEED + 5)

    def rword():
        return reduce(random_word(rng, 3))

    bad_psi = bad_round = 0
    for _ in range(n):
        h = IdentitySequence(tuple(ConjugatedRelator(rword(), rword())
                                   for _ in range(rng.randint(1, 6))))
        psi = eval_sequence(h)
        i = rng.randint(1, max(len(h) - 1, 1))
        if len(h) >= 2:
            for kind in "AB":
                if eval_sequence(exchange(h, i, kind)) != psi:
                    bad_psi += 1
            if exchange(exchange(h, i, "A"), i, "B") != h or exchange(exchange(h, i, "B"), i, "A") != h:
                bad_round += 1
            try:
                if eval_sequence(peiffer_delete(h, i)) != psi:
                    bad_psi += 1
            except MoveError:
                pass
            # force a deletable pair at i and delete it
            t = h.terms[i - 1]
            forced = IdentitySequence(h.terms[:i] + (t.inverse(),) + h.terms[i:])
            if eval_sequence(peiffer_delete(forced, i)) != eval_sequence(forced):
                bad_psi += 1
        if eval_sequence(conjugate_term(h, rng.randint(1, len(h)), rword())) != psi:
            bad_psi += 1

    pool = [term(a, r) for a, r in (("1", "x"), ("1", "X"), ("y", "x"), ("y", "X"),
                                    ("1", "xy"), ("1", "YX"), ("x", "y"), ("x", "Y"))]
    identities = mismatch = basic_count = 0
    for length in range(0, 7):
        for combo in itertools.product(pool, repeat=length):
            h = IdentitySequence(combo)
            if eval_sequence(h):
                continue
            identities += 1
            got = is_basic(h)
            basic_count += got
            if got != naive_is_basic(combo):
                mismatch += 1

    example_ok = True
    for a, b in itertools.product(words_up_to(2, 1), repeat=2):
        h = IdentitySequence((ConjugatedRelator(a, P("y")), ConjugatedRelator(b, P("x")),
                              ConjugatedRelator(b, P("X")), ConjugatedRelator(a, P("Y"))))
        example_ok &= is_basic(h) and is_strictly_basic(h) == (a == b)
    ok = bad_psi == 0 and bad_round == 0 and mismatch == 0 and example_ok
    detail = (f"psi violations {bad_psi}, round-trip violations {bad_round}, "
              f"is_basic vs oracle {mismatch}/{identities} identities "
              f"({basic_count} basic), example {'ok' if example_ok else 'wrong'}")
    return report(5, "Peiffer calculus", ok, detail)


# ---------------------------------------------------------------------------
# 6. three-case decomposition fidelity
# ---------------------------------------------------------------------------

def criterion_6():
    t0 = time.perf_counter()
    ws = words_up_to(2, 6)
    bad = pairs = 0
    first = None
    for u in ws:
        ui = invert(u)
        for v in ws:
            if v == ui:
                continue
            pairs += 1
            r = shirv_decompose(u, v)
            ok = r.holds(u, v)
            if ok and r.case == 2:
                ok = crp(v, u) == r.c2 + r.c1
            if not ok:
                bad += 1
                first = first or (F(u), F(v))
    elapsed = time.perf_counter() - t0
    detail = f"{pairs} pairs, {bad} failures, {elapsed:.0f}s"
    if first:
        detail += f", first {first}"
    return report(6, "decomposition template fidelity |u|,|v|<=6", bad == 0 and elapsed < 120, detail)


# ---------------------------------------------------------------------------
# pytest entry points
# ---------------------------------------------------------------------------

@pytest.mark.acceptance
def test_criterion_1_worked_examples():
    assert criterion_1()


@pytest.mark.acceptance
def test_criterion_2_exhaustive_sweep():
    assert criterion_2()


@pytest.mark.acceptance
def test_criterion_3_oracle_agreement():
    assert criterion_3()


@pytest.mark.acceptance
def test_criterion_4_product_laws():
    assert criterion_4()


@pytest.mark.acceptance
def test_criterion_5_peiffer_calculus():
    assert criterion_5()


@pytest.mark.acceptance
def test_criterion_6_decomposition_fidelity():
    assert criterion_6()


if __name__ == "__main__":
    results = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
               criterion_6()]
    sys.exit(0 if all(results) else 1)
