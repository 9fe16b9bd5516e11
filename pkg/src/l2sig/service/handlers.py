"""Pure request -> response handlers behind the service endpoints.

All computation is delegated to the core modules; handlers only parse,
orchestrate, and render.  Every response embeds the tool version and a
content hash of the (canonicalized) input, so identical requests yield
byte-identical reports.
"""

from __future__ import annotations

import os
from fractions import Fraction

from ..exactnum import DomainError, FormatError, UsageError
from ..formats import (
    canonical_json,
    cyc_to_doc,
    doc_to_group,
    form_to_document,
    fraction_from_str,
    fraction_to_str,
    group_to_doc,
    interval_to_doc,
    sha256_hex,
    tool_stamp,
)
from ..forms import HermitianGroupForm, canonical_embedding, induce
from ..invariants import invariant_report, sig_g, sig_l2, alpha as alpha_of
from ..structset import Ledger, generate_family
from ..zapprox import ConvergenceReport, LaurentHermitianForm, convergence_report
from ..formats import document_to_form
from . import models

_DECIMAL_DIGITS = 15


def default_precision_bits() -> int:
    """Interval precision for report rendering; env-overridable."""
    raw = os.environ.get("L2SIG_PRECISION_BITS", "")
    try:
        bits = int(raw) if raw else 64
    except ValueError:
        raise UsageError(f"L2SIG_PRECISION_BITS must be an integer, got {raw!r}")
    if bits < 2:
        raise UsageError("L2SIG_PRECISION_BITS must be at least 2")
    return bits


def _tool() -> models.ToolInfo:
    return models.ToolInfo(**tool_stamp())


def _model_to_form(document: models.FormDocument):
    return document_to_form(document.model_dump(mode="json"))


def _form_to_model(form) -> models.FormDocument:
    return models.FormDocument(**form_to_document(form))


def _require_finite(form) -> HermitianGroupForm:
    if not isinstance(form, HermitianGroupForm):
        raise DomainError("this operation needs a finite-group form, not a Laurent form")
    return form


def _require_laurent(form) -> LaurentHermitianForm:
    if not isinstance(form, LaurentHermitianForm):
        raise DomainError("this operation needs a Laurent form (group kind 'Z')")
    return form


def _parse_tolerance(text: str) -> Fraction:
    try:
        value = Fraction(text) if "/" not in text else fraction_from_str(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"invalid tolerance {text!r}") from exc
    if value <= 0:
        raise UsageError("tolerance must be positive")
    return value


def compute_invariants(request: models.InvariantsRequest) -> models.InvariantsResponse:
    form = _require_finite(_model_to_form(request.document))
    scale = fraction_from_str(request.scale)
    report = invariant_report(form, scale)
    bits = default_precision_bits()
    table = [
        models.TableEntry(
            weights=list(chi.weights),
            triple=models.SignatureTripleModel(
                n_plus=t.n_plus, n_minus=t.n_minus, n_zero=t.n_zero,
                signature=t.signature))
        for chi, t in report.table.entries
    ]
    g_signatures = []
    for g in form.group.elements():
        value, _ = sig_g(form, g, report.table, bits)
        g_signatures.append(models.GSignatureEntry(
            element=list(g.residues), value=models.CycValue(**cyc_to_doc(value, bits))))
    return models.InvariantsResponse(
        tool=_tool(),
        input_sha256=sha256_hex(canonical_json(form_to_document(form))),
        group=models.GroupSpec(**group_to_doc(form.group)),
        dim=form.dim,
        sig_trivial=report.sig_trivial,
        sig_full=report.sig_full,
        sig_l2=fraction_to_str(report.sig_l2),
        alpha=fraction_to_str(report.alpha),
        scale=fraction_to_str(report.scale),
        alpha_scaled=fraction_to_str(report.alpha_scaled),
        tau_z2=report.tau_z2,
        table=table,
        g_signatures=g_signatures,
        char_sum=models.CharSumCheck(
            lhs=str(report.char_sum.lhs_integer),
            rhs=str(report.char_sum.rhs),
            equal=report.char_sum.equal),
    )


def compute_induce(request: models.InduceRequest) -> models.InduceResponse:
    form = _require_finite(_model_to_form(request.document))
    target = doc_to_group(request.into.model_dump(mode="json"))
    if target is None:
        raise DomainError("cannot induce into the infinite cyclic group")
    images = canonical_embedding(form.group, target)
    induced = induce(form, target, images)
    payload = {
        "document": form_to_document(form),
        "into": group_to_doc(target),
    }
    return models.InduceResponse(
        tool=_tool(),
        input_sha256=sha256_hex(canonical_json(payload)),
        into=models.GroupSpec(**group_to_doc(target)),
        induced=_form_to_model(induced),
        sig_l2_source=fraction_to_str(sig_l2(form)),
        sig_l2_induced=fraction_to_str(sig_l2(induced)),
        alpha_source=fraction_to_str(alpha_of(form)),
        alpha_induced=fraction_to_str(alpha_of(induced)),
        sig_l2_preserved=sig_l2(form) == sig_l2(induced),
    )


def compute_family(request: models.FamilyRequest) -> models.FamilyResponse:
    family = generate_family(request.n, request.count)
    alphas = [a for _, a in family]
    entries = [
        models.FamilyEntry(k=k, dim=form.dim, alpha=fraction_to_str(a))
        for k, (form, a) in enumerate(family, start=1)
    ]
    payload = {"n": request.n, "count": request.count}
    return models.FamilyResponse(
        tool=_tool(),
        input_sha256=sha256_hex(canonical_json(payload)),
        n=request.n,
        count=request.count,
        entries=entries,
        pairwise_distinct=len(set(alphas)) == len(alphas) and 0 not in alphas,
    )


def default_schedule(k_max: int) -> list[int]:
    """Multiples of 6 up to k_max (k_max itself when smaller than 6)."""
    if k_max < 1:
        raise UsageError("k_max must be positive")
    ks = list(range(6, k_max + 1, 6))
    return ks or [k_max]


def compute_zapprox(request: models.ZapproxRequest) -> models.ZapproxResponse:
    form = _require_laurent(_model_to_form(request.document))
    tolerance = _parse_tolerance(request.tolerance)
    schedule = default_schedule(request.k_max)
    report: ConvergenceReport = convergence_report(form, schedule, tolerance)
    payload = {
        "document": form_to_document(form),
        "k_max": request.k_max,
        "tolerance": request.tolerance,
    }
    return models.ZapproxResponse(
        tool=_tool(),
        input_sha256=sha256_hex(canonical_json(payload)),
        dim=form.dim,
        tolerance=request.tolerance,
        decimal_digits=_DECIMAL_DIGITS,
        entries=[models.QuotientEntry(k=k, value=fraction_to_str(v))
                 for k, v in report.entries],
        limit=interval_to_doc(report.limit_lo, report.limit_hi, _DECIMAL_DIGITS),
        limit_exact=(fraction_to_str(report.limit_exact)
                     if report.limit_exact is not None else None),
        max_deviation_tail=fraction_to_str(report.max_deviation_tail),
    )


def run_ledger(script: models.LedgerScript) -> models.LedgerResponse:
    group = doc_to_group(script.group.model_dump(mode="json"))
    if group is None:
        raise DomainError("ledger scripts need a finite group")
    ledger = Ledger(group, script.base)
    checks: list[models.DistinguishResult] = []
    for step in script.steps:
        if isinstance(step, models.LedgerActStep):
            form = _require_finite(_model_to_form(step.form))
            if form.group != group:
                raise UsageError(
                    f"acting form group {form.group.factors} differs from "
                    f"script group {group.factors}")
            ledger.act(step.base, form, step.name)
        else:
            a = ledger.find(step.a)
            b = ledger.find(step.b)
            checks.append(models.DistinguishResult(
                a=step.a, b=step.b,
                distinct=ledger.distinguish(step.a, step.b),
                difference=fraction_to_str(a.tau_offset - b.tau_offset)))
    entries = [
        models.LedgerEntryModel(
            name=entry.label.name,
            tau_offset=fraction_to_str(entry.label.tau_offset),
            acting_form_dim=entry.acting_form.dim if entry.acting_form else None)
        for entry in ledger.entries
    ]
    return models.LedgerResponse(
        tool=_tool(),
        input_sha256=sha256_hex(canonical_json(script.model_dump(mode="json"))),
        group=models.GroupSpec(**group_to_doc(group)),
        base=script.base,
        entries=entries,
        checks=checks,
    )
