#!/usr/bin/env python3
"""Regenerate the shipped document corpus under corpus/."""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fractions import Fraction

from l2sig.formats import canonical_json, serialize_form
from l2sig.forms import HermitianGroupForm, rational_form
from l2sig.groupring import FiniteAbelianGroup, GroupRingElement, averaging_idempotent
from l2sig.zapprox import LaurentHermitianForm, LaurentPoly

OUT = pathlib.Path(__file__).resolve().parents[1] / "corpus"


def idempotent_form(group: FiniteAbelianGroup) -> HermitianGroupForm:
    return HermitianGroupForm(group, [[averaging_idempotent(group)]])


def element_form(group: FiniteAbelianGroup, *residues: int) -> GroupRingElement:
    return GroupRingElement.from_element(group, group.element(residues))


def main() -> None:
    OUT.mkdir(exist_ok=True)
    docs: dict[str, str] = {}

    z2 = FiniteAbelianGroup.cyclic(2)
    z3 = FiniteAbelianGroup.cyclic(3)
    z4 = FiniteAbelianGroup.cyclic(4)
    z5 = FiniteAbelianGroup.cyclic(5)
    z6 = FiniteAbelianGroup.cyclic(6)
    z8 = FiniteAbelianGroup.cyclic(8)
    klein = FiniteAbelianGroup((2, 2))
    z2z4 = FiniteAbelianGroup((2, 4))

    docs["e_over_Z2.form"] = serialize_form(idempotent_form(z2))
    docs["e_over_Z3.form"] = serialize_form(idempotent_form(z3))
    docs["e_over_Z5.form"] = serialize_form(idempotent_form(z5))
    docs["one_over_Z4.form"] = serialize_form(
        HermitianGroupForm(z4, [[GroupRingElement.one(z4)]]))
    docs["h_over_Z2.form"] = serialize_form(
        HermitianGroupForm(z2, [[element_form(z2, 1)]]))
    docs["g_plus_ginv_over_Z4.form"] = serialize_form(
        HermitianGroupForm(z4, [[element_form(z4, 1) + element_form(z4, 3)]]))

    zero6 = GroupRingElement.zero(z6)
    one6 = GroupRingElement.one(z6)
    docs["hyperbolic_over_Z6.form"] = serialize_form(
        HermitianGroupForm(z6, [[zero6, one6], [one6, zero6]]))

    one8 = GroupRingElement.one(z8)
    g8 = element_form(z8, 1)
    docs["mixed_rank2_over_Z8.form"] = serialize_form(
        HermitianGroupForm(z8, [[one8, g8], [g8.involution(), -one8]]))

    docs["identity2_trivial.form"] = serialize_form(
        rational_form([[2, 1], [1, 2]]))
    docs["zero_dim_over_Z3.form"] = serialize_form(HermitianGroupForm(z3, []))
    docs["klein_idempotent.form"] = serialize_form(idempotent_form(klein))

    one24 = GroupRingElement.one(z2z4)
    mix = element_form(z2z4, 1, 1)
    docs["z2xz4_mixed.form"] = serialize_form(
        HermitianGroupForm(z2z4, [[one24, mix], [mix.involution(), one24 * 3]]))

    t = LaurentPoly.t_power
    docs["laurent_fib.form"] = serialize_form(
        LaurentHermitianForm([[t(1) + t(-1) + 1]]))
    docs["laurent_sym.form"] = serialize_form(
        LaurentHermitianForm([[t(1) + t(-1)]]))
    docs["laurent_pos3.form"] = serialize_form(
        LaurentHermitianForm([[t(1) + t(-1) + 3]]))
    docs["laurent_mixed2.form"] = serialize_form(LaurentHermitianForm([
        [LaurentPoly.constant(1), t(1)],
        [t(-1), LaurentPoly.constant(-1)],
    ]))
    docs["laurent_halfcos.form"] = serialize_form(
        LaurentHermitianForm([[t(1) + t(-1) + Fraction(1, 2)]]))
    docs["laurent_const2.form"] = serialize_form(LaurentHermitianForm([
        [LaurentPoly.constant(2), LaurentPoly.constant(1)],
        [LaurentPoly.constant(1), LaurentPoly.constant(2)],
    ]))

    e3_doc = json.loads(docs["e_over_Z3.form"])
    ledger = {
        "group": {"kind": "cyclic", "n": 3},
        "base": "M",
        "steps": [
            {"op": "act", "base": "M", "name": "M1", "form": e3_doc},
            {"op": "act", "base": "M1", "name": "M2", "form": e3_doc},
            {"op": "distinguish", "a": "M", "b": "M1"},
            {"op": "distinguish", "a": "M1", "b": "M2"},
            {"op": "distinguish", "a": "M", "b": "M"},
        ],
    }
    docs["ledger_demo.ledger"] = canonical_json(ledger)

    for name, text in sorted(docs.items()):
        (OUT / name).write_text(text, encoding="utf-8")
        print(f"wrote corpus/{name}")


if __name__ == "__main__":
    main()
