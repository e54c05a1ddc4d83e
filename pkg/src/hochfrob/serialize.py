"""JSON/CSV formats for cochains, chains, and dimension reports.

Scalars serialize as strings over the rationals ("a/b" reduced with a
positive denominator, or a bare integer) and as decimal residues over
prime fields.  Cochain files carry the group and field specifiers so
they are self-describing.
"""

from __future__ import annotations

import json
from typing import List

from .chains import Chain, TensorChain
from .cochains import BarCochain, Cochain
from .errors import SpecParseError
from .groups import FiniteGroup, group_from_spec
from .homology import BettiReport
from .scalars import Field


def cochain_to_dict(alpha: Cochain) -> dict:
    f = alpha.field
    return {
        "degree": alpha.degree,
        "group": alpha.group.name,
        "field": f.spec(),
        "values": [f.format_scalar(v) for v in alpha.to_scalars()],
    }


def cochain_from_dict(data: dict, group: FiniteGroup | None = None,
                      budget: int | None = None) -> Cochain:
    fld = Field.parse(data["field"])
    if group is None:
        group = group_from_spec(data["group"])
    elif group.name != data.get("group", group.name):
        raise SpecParseError(
            f"cochain file is over {data['group']}, expected {group.name}")
    values = [fld.parse_scalar(s) for s in data["values"]]
    return Cochain(group, fld, int(data["degree"]), values, budget=budget)


def save_cochain(alpha: Cochain, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cochain_to_dict(alpha), fh, indent=1)
        fh.write("\n")


def load_cochain(path: str, group: FiniteGroup | None = None,
                 budget: int | None = None) -> Cochain:
    with open(path, "r", encoding="utf-8") as fh:
        return cochain_from_dict(json.load(fh), group=group, budget=budget)


def bar_cochain_to_dict(f: BarCochain) -> dict:
    fld = f.field
    flat = f.values.reshape(-1).tolist()
    return {
        "degree": f.degree,
        "group": f.group.name,
        "field": fld.spec(),
        "values": [fld.format_scalar(fld.normalize(v)) for v in flat],
    }


def bar_cochain_from_dict(data: dict, group: FiniteGroup | None = None,
                          budget: int | None = None) -> BarCochain:
    fld = Field.parse(data["field"])
    if group is None:
        group = group_from_spec(data["group"])
    values = [fld.parse_scalar(s) for s in data["values"]]
    return BarCochain(group, fld, int(data["degree"]), values, budget=budget)


def chain_to_dict(c: Chain) -> dict:
    f = c.field
    terms = [{"tuple": list(t), "coeff": f.format_scalar(v)}
             for t, v in sorted(c.terms.items())]
    return {"degree": c.degree, "group": c.group.name, "field": f.spec(), "terms": terms}


def chain_from_dict(data: dict, group: FiniteGroup | None = None) -> Chain:
    fld = Field.parse(data["field"])
    if group is None:
        group = group_from_spec(data["group"])
    terms = {tuple(item["tuple"]): fld.parse_scalar(item["coeff"])
             for item in data["terms"]}
    return Chain(group, fld, int(data["degree"]), terms)


def tensor_chain_to_dict(t: TensorChain) -> dict:
    f = t.field
    terms = [{"left": list(l), "right": list(r), "coeff": f.format_scalar(v)}
             for (l, r), v in sorted(t.terms.items())]
    return {"group": t.group.name, "field": f.spec(), "terms": terms}


def tensor_chain_from_dict(data: dict, group: FiniteGroup | None = None) -> TensorChain:
    fld = Field.parse(data["field"])
    if group is None:
        group = group_from_spec(data["group"])
    terms = {(tuple(item["left"]), tuple(item["right"])): fld.parse_scalar(item["coeff"])
             for item in data["terms"]}
    return TensorChain(group, fld, terms)


def parse_generator_cochain(group: FiniteGroup, fld: Field, text: str) -> Cochain:
    """Parse dual-generator shorthand like ``(x,e)^*`` using element labels."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith("^*") and ")" in s):
        raise SpecParseError(f"bad generator shorthand {text!r}")
    body = s[1:s.rindex(")")]
    labels = [part for part in body.split(",") if part.strip()]
    if not labels:
        raise SpecParseError(f"empty generator shorthand {text!r}")
    t = tuple(group.label_to_index(lbl) for lbl in labels)
    return Cochain.dual_basis(group, fld, t)


def betti_report_to_dict(report: BettiReport) -> dict:
    return {
        "group": report.group,
        "field": report.field,
        "selector": report.selector,
        "betti": [{"degree": n, "dim": d} for n, d in report.betti],
        "matrix_dims": [list(x) for x in report.matrix_dims],
        "ms": list(report.ms),
    }


def betti_report_to_csv(report: BettiReport) -> str:
    lines = ["group,field,selector,degree,dim"]
    for n, d in report.betti:
        lines.append(f"{report.group},{report.field},{report.selector},{n},{d}")
    return "\n".join(lines) + "\n"


def dump_json(data, path: str | None) -> str:
    text = json.dumps(data, indent=1, sort_keys=False, ensure_ascii=True)
    text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def report_to_csv(report: dict) -> str:
    """Flat CSV mirror of a verification report's property table."""
    lines = ["property,trials,passes,passed"]
    for rec in report.get("properties", []):
        lines.append(f"{rec['name']},{rec['trials']},{rec['passes']},{rec['passed']}")
    return "\n".join(lines) + "\n"
