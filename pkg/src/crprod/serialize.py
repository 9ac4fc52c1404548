"""JSON-lines encoding of :class:`~crprod.twisted.MainWitness`.

Words use the letter notation of :mod:`crprod.words`; certificates are
written in the identity file format with an empty right side.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Optional

from .identities import format_sequence, parse_identity
from .twisted import Certificate, MainWitness, VerificationReport
from .words import cyc_core, format_word, parse_word, reduce, rotate


def _cert_to_dict(c: Optional[Certificate]) -> Optional[Dict[str, Any]]:
    if c is None:
        return None
    return {
        "claim": c.claim,
        "identity": format_sequence(c.terms) + "==",
        "alpha": format_word(c.alpha),
        "gamma": format_word(c.gamma),
    }


def witness_to_dict(mw: MainWitness, report: Optional[VerificationReport] = None) -> Dict[str, Any]:
    d: Dict[str, Any] = {
        "case": mw.case,
        "u": format_word(mw.u),
        "w": format_word(mw.w),
        "u_prime": format_word(mw.u_prime),
    }
    if mw.case == "A":
        d["u_dblprime"] = format_word(mw.u_dblprime)
    else:
        d["h"] = format_word(mw.h)
    d["f"] = format_word(mw.f)
    d["g"] = format_word(mw.g)
    d["offsets"] = [c.offset if c else None for c in (mw.cert1, mw.cert2)]
    d["cert1"] = _cert_to_dict(mw.cert1)
    d["cert2"] = _cert_to_dict(mw.cert2)
    if mw.route:
        d["route"] = list(mw.route)
    if report is not None:
        d["checks"] = dict(report.checks)
        d["passed"] = report.passed
    return d


def witness_to_json(mw: MainWitness, report: Optional[VerificationReport] = None) -> str:
    return json.dumps(witness_to_dict(mw, report), sort_keys=False)


def _cert_from_dict(d, w, offset) -> Optional[Certificate]:
    if d is None:
        return None
    ident = parse_identity(d["identity"])
    return Certificate(d["claim"], ident.lhs, parse_word(d["alpha"]), parse_word(d["gamma"]),
                       rotate(cyc_core(w), offset), offset)


def witness_from_dict(d: Dict[str, Any]) -> MainWitness:
    u, w = reduce(parse_word(d["u"])), reduce(parse_word(d["w"]))
    case = d["case"]
    if case not in ("A", "B"):
        raise ValueError(f"unknown case {case!r}")
    offsets = d.get("offsets") or [None, None]
    return MainWitness(
        case=case,
        u=u,
        w=w,
        u_prime=parse_word(d["u_prime"]),
        u_dblprime=parse_word(d["u_dblprime"]) if case == "A" else None,
        h=parse_word(d["h"]) if case == "B" else None,
        f=parse_word(d["f"]),
        g=parse_word(d["g"]),
        cert1=_cert_from_dict(d.get("cert1"), w, offsets[0]),
        cert2=_cert_from_dict(d.get("cert2"), w, offsets[1]),
        route=tuple(d.get("route", ())),
    )


def witness_from_json(line: str) -> MainWitness:
    return witness_from_dict(json.loads(line))
