"""Document formats: form files, canonical report rendering, hashing.

One self-describing JSON document format covers both finite-group forms
and Laurent (infinite-cyclic) forms.  Serialization is canonical --
sorted keys, fixed separators, rationals in lowest terms -- so that
identical inputs produce byte-identical documents and reports.
"""

from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction
from typing import Any

from . import __version__
from .exactnum import CycNumber, FormatError, RealInterval
from .forms import HermitianGroupForm, hermitian_violation
from .groupring import FiniteAbelianGroup, GroupRingElement
from .zapprox import LaurentHermitianForm, LaurentPoly

TOOL_NAME = "l2sig"


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def sha256_hex(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


def tool_stamp() -> dict[str, str]:
    return {"name": TOOL_NAME, "version": __version__}


# -- rationals and decimals -------------------------------------------------


def fraction_to_str(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_str(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num.strip()), int(den.strip()))
        return Fraction(int(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"invalid rational literal {text!r}") from exc


def fixed_decimal(value: Fraction, digits: int, round_up: bool) -> str:
    """Fixed-point decimal string, rounded outward (down/up) exactly."""
    scale = 10 ** digits
    scaled = value * scale
    n = math.ceil(scaled) if round_up else math.floor(scaled)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def interval_to_doc(lo: Fraction, hi: Fraction, digits: int = 15) -> list[str]:
    return [fixed_decimal(lo, digits, round_up=False),
            fixed_decimal(hi, digits, round_up=True)]


def real_interval_to_doc(interval: RealInterval, digits: int = 15) -> list[str]:
    return interval_to_doc(interval.lo, interval.hi, digits)


def cyc_to_doc(value: CycNumber, precision_bits: int = 64) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "conductor": value.conductor,
        "coeffs": [fraction_to_str(c) for c in value.coefficients()],
    }
    if value.is_rational():
        doc["rational"] = fraction_to_str(value.as_fraction())
    else:
        doc["approx"] = real_interval_to_doc(value.embed(precision_bits).re)
    return doc


# -- group specs --------------------------------------------------------------


def group_to_doc(group: FiniteAbelianGroup) -> dict[str, Any]:
    if not group.factors:
        return {"kind": "trivial"}
    if len(group.factors) == 1:
        return {"kind": "cyclic", "n": group.factors[0]}
    return {"kind": "abelian", "factors": list(group.factors)}


def doc_to_group(doc: Any) -> FiniteAbelianGroup | None:
    """Group from a spec object; None encodes the infinite cyclic group."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FormatError("group spec must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "trivial":
        return FiniteAbelianGroup.trivial()
    if kind == "cyclic":
        n = doc.get("n")
        if not isinstance(n, int) or n < 1:
            raise FormatError("cyclic group spec needs a positive integer 'n'")
        return FiniteAbelianGroup.cyclic(n)
    if kind == "abelian":
        factors = doc.get("factors")
        if (not isinstance(factors, list) or
                any(not isinstance(d, int) or d < 2 for d in factors)):
            raise FormatError("abelian group spec needs integer factors >= 2")
        return FiniteAbelianGroup(tuple(factors))
    if kind == "Z":
        return None
    raise FormatError(f"unknown group kind {kind!r}")


def parse_group_token(token: str) -> FiniteAbelianGroup | None:
    """Group from a compact CLI token: trivial | cyclic:N | abelian:d1,d2 | Z."""
    token = token.strip()
    if token == "trivial":
        return FiniteAbelianGroup.trivial()
    if token == "Z":
        return None
    if token.startswith("cyclic:"):
        try:
            return FiniteAbelianGroup.cyclic(int(token.split(":", 1)[1]))
        except ValueError as exc:
            raise FormatError(f"invalid group token {token!r}") from exc
    if token.startswith("abelian:"):
        try:
            factors = tuple(int(p) for p in token.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise FormatError(f"invalid group token {token!r}") from exc
        return FiniteAbelianGroup(factors)
    raise FormatError(f"invalid group token {token!r}")


# -- form documents ------------------------------------------------------------


def form_to_document(form: HermitianGroupForm | LaurentHermitianForm) -> dict[str, Any]:
    if isinstance(form, LaurentHermitianForm):
        matrix = [[[[m, fraction_to_str(c)] for m, c in poly.sorted_terms()]
                   for poly in row] for row in form.matrix]
        return {"group": {"kind": "Z"}, "dim": form.dim, "matrix": matrix}
    matrix = [[[[list(g.residues), fraction_to_str(c)]
                for g, c in entry.sorted_terms()]
               for entry in row] for row in form.matrix]
    return {"group": group_to_doc(form.group), "dim": form.dim, "matrix": matrix}


def serialize_form(form: HermitianGroupForm | LaurentHermitianForm) -> str:
    return canonical_json(form_to_document(form))


def _parse_entry_terms(terms: Any, where: str) -> list:
    if not isinstance(terms, list):
        raise FormatError(f"matrix entry {where} must be a list of [element, coeff] pairs")
    for term in terms:
        if not isinstance(term, list) or len(term) != 2 or not isinstance(term[1], str):
            raise FormatError(
                f"matrix entry {where} has a malformed term (expected [element, \"p/q\"])")
    return terms


def document_to_form(doc: Any) -> HermitianGroupForm | LaurentHermitianForm:
    """Validate a parsed document and build the form it describes."""
    if not isinstance(doc, dict):
        raise FormatError("form document must be a JSON object")
    for key in ("group", "dim", "matrix"):
        if key not in doc:
            raise FormatError(f"form document is missing the {key!r} field")
    group = doc_to_group(doc["group"])
    dim = doc["dim"]
    matrix = doc["matrix"]
    if not isinstance(dim, int) or dim < 0:
        raise FormatError("'dim' must be a nonnegative integer")
    if not isinstance(matrix, list) or len(matrix) != dim or any(
            not isinstance(row, list) or len(row) != dim for row in matrix):
        raise FormatError("'matrix' must be a dim x dim array of entry lists")

    if group is None:
        rows = []
        for i, row in enumerate(matrix):
            out_row = []
            for j, terms in enumerate(row):
                pairs = []
                for element, coeff in _parse_entry_terms(terms, f"({i}, {j})"):
                    if not isinstance(element, int):
                        raise FormatError(
                            f"matrix entry ({i}, {j}) needs integer exponents over Z")
                    pairs.append((element, fraction_from_str(coeff)))
                out_row.append(LaurentPoly.from_terms(pairs))
            rows.append(out_row)
        form: HermitianGroupForm | LaurentHermitianForm = LaurentHermitianForm(rows)
        bad = form.hermitian_violation()
    else:
        rank = len(group.factors)
        rows = []
        for i, row in enumerate(matrix):
            out_row = []
            for j, terms in enumerate(row):
                pairs = []
                for element, coeff in _parse_entry_terms(terms, f"({i}, {j})"):
                    if (not isinstance(element, list) or len(element) != rank or
                            any(not isinstance(r, int) for r in element)):
                        raise FormatError(
                            f"matrix entry ({i}, {j}) needs residue tuples of length {rank}")
                    pairs.append((group.element(element), fraction_from_str(coeff)))
                out_row.append(GroupRingElement.from_terms(group, pairs))
            rows.append(out_row)
        form = HermitianGroupForm(group, rows)
        bad = hermitian_violation(form)
    if bad is not None:
        raise FormatError(f"form is not hermitian at entry {bad}")
    return form


def parse_form_text(text: str) -> HermitianGroupForm | LaurentHermitianForm:
    """Parse and validate a form document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc.msg}", line=exc.lineno,
                          column=exc.colno) from exc
    return document_to_form(doc)
