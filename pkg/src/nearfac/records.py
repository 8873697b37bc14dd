"""JSON records for near-factorizations and GSEDF instances.

NF record: {"group": "D:8", "A": [...], "B": [...]} where entries are either
integer codes or element strings ("e", "b^3", "ab^3", "(a, c^2)", ...).  Both
are accepted on input; codes are emitted.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DomainError
from .groups import Group, group_from_name
from .nearfact import NearFactorization


def parse_codes(group: Group, items) -> tuple[int, ...]:
    out = []
    for it in items:
        if isinstance(it, bool):
            raise DomainError(f"bad element {it!r} for {group.name}")
        if isinstance(it, int):
            out.append(group.check_code(it))
        elif isinstance(it, str):
            out.append(group.parse_element(it))
        else:
            raise DomainError(f"bad element {it!r} for {group.name}")
    return tuple(out)


def nf_to_record(nf: NearFactorization) -> dict[str, Any]:
    return {"group": nf.group.name, "A": list(nf.A), "B": list(nf.B)}


def nf_from_record(rec: dict[str, Any]) -> NearFactorization:
    try:
        gname = rec["group"]
        raw_a = rec["A"]
        raw_b = rec["B"]
    except (KeyError, TypeError):
        raise DomainError("NF record needs 'group', 'A' and 'B' fields") from None
    g = group_from_name(gname)
    return NearFactorization(g, parse_codes(g, raw_a), parse_codes(g, raw_b))


def nf_to_json(nf: NearFactorization) -> str:
    return json.dumps(nf_to_record(nf), sort_keys=True)


def nf_from_json(text: str) -> NearFactorization:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed NF JSON: {exc}") from None
    return nf_from_record(rec)


def gsedf_to_record(inst) -> dict[str, Any]:
    return {
        "group": inst.group.name,
        "sets": [list(s) for s in inst.sets],
        "lambdas": list(inst.lambdas),
    }


def gsedf_from_record(rec: dict[str, Any]):
    from .sedf import GsedfInstance

    try:
        g = group_from_name(rec["group"])
        sets = rec["sets"]
    except (KeyError, TypeError):
        raise DomainError("GSEDF record needs 'group' and 'sets' fields") from None
    lambdas = rec.get("lambdas")
    parsed = tuple(parse_codes(g, s) for s in sets)
    if lambdas is None:
        raise DomainError("GSEDF record needs 'lambdas'")
    return GsedfInstance(g, parsed, tuple(int(x) for x in lambdas))
