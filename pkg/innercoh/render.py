"""
Renderização dos resultados em markdown, JSON e CSV.

Os vereditos do relatório são percorridos com o padrão Visitor; as demais
saídas são tabelas simples. O JSON tem chaves em ordem fixa e racionais como
strings "p/q", de modo que invocações idênticas produzem bytes idênticos.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from .arith import format_int_set, format_rational
from .degree_intervals import DegreeProfile, TableRow
from .dirichlet import character_to_json, conductor
from .lie_cohomology import GeneratorDegrees, PoincarePolynomial
from .node import Visitor
from .spectral import CohomologyReport, ResidualDescriptor
from .weight_lattice import weight_to_json


def _stringify(obj) -> str:
    if obj is None:
        return ""
    if isinstance(obj, bool):
        return str(obj).lower()
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (list, tuple)):
        return format_int_set(obj)
    return str(obj)


def _markdown_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_stringify(cell) for cell in row) + " |")
    return "\n".join(lines)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_stringify(cell) for cell in row])
    return buffer.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


class VerdictRecord(Visitor):
    """Converte cada veredito num registro ordenado."""

    def _base(self, verdict) -> Dict[str, Any]:
        return {
            "k": verdict.k,
            "region": verdict.region,
            "verdict": verdict.kind,
        }

    def _finish(self, record, verdict):
        record["cusp_vanishes"] = verdict.cusp_vanishes
        record["provenance"] = verdict.provenance
        return record

    def visit_sheaf_zero(self, verdict):
        return self._finish(self._base(verdict), verdict)

    def visit_nonconstant_zero(self, verdict):
        return self._finish(self._base(verdict), verdict)

    def visit_zero(self, verdict):
        return self._finish(self._base(verdict), verdict)

    def visit_residual_kernel(self, verdict):
        record = self._base(verdict)
        record["bound"] = verdict.dim_upper_bound
        record["symbolic"] = verdict.symbolic
        return self._finish(record, verdict)


# --- Tabela de graus ---

TABLE_HEADER = ("n", "dim X_Sym", "I_cusp = [a(n),b(n)]", "S⁰")


def render_table(rows: List[TableRow], fmt: str) -> str:
    if fmt == "json":
        return _json([
            {
                "n": row.n,
                "dim_sym": row.dim_sym,
                "a": format_rational(row.a),
                "b": format_rational(row.b),
                "I_cusp": list(row.I_cusp),
                "s0": list(row.s0),
            }
            for row in rows
        ])
    if fmt == "csv":
        return _csv(
            ("n", "dim_sym", "a", "b", "I_cusp", "s0"),
            ((row.n, row.dim_sym, row.a, row.b, row.I_cusp, row.s0) for row in rows),
        )
    return _markdown_table(
        TABLE_HEADER,
        ((row.n, row.dim_sym, row.interval_label, row.s0_label) for row in rows),
    )


# --- Relatório de classificação ---

REPORT_HEADER = ("k", "region", "verdict", "bound", "symbolic")


def render_report(report: CohomologyReport, fmt: str) -> str:
    visitor = VerdictRecord()
    records = [v.accept(visitor) for v in report.verdicts]
    if fmt == "json":
        return _json({
            "n": report.n,
            "weight": weight_to_json(report.weight),
            "level": report.level,
            "level_model": report.level_model,
            "verdicts": records,
        })
    rows = [
        (r["k"], r["region"], r["verdict"], r.get("bound"), r.get("symbolic"))
        for r in records
    ]
    if fmt == "csv":
        return _csv(REPORT_HEADER + ("provenance",), (
            row + (r["provenance"],) for row, r in zip(rows, records)
        ))
    title = (
        f"# H^k_{{!/cusp}}: n = {report.n}, peso {report.weight}, nível N = {report.level}\n\n"
        f"_{report.level_model}_\n\n"
    )
    return title + _markdown_table(REPORT_HEADER, rows)


# --- Polinômio de Poincaré ---

def render_polynomial(s0: GeneratorDegrees, poly: PoincarePolynomial, fmt: str,
                      with_circle: bool = False) -> str:
    betti = poly.as_dict()
    if fmt == "json":
        return _json({
            "n": s0.n,
            "s0": list(s0.degrees),
            "with_circle": with_circle,
            "polynomial": str(poly),
            "betti": betti,
        })
    rows = [(k, b) for k, b in betti.items()]
    if fmt == "csv":
        return _csv(("k", "b_k"), rows)
    return (
        f"S⁰ = {format_int_set(s0.degrees)}\n\n"
        f"P(t) = {poly}\n\n" + _markdown_table(("k", "b_k"), rows)
    )


# --- Perfil de graus ---

def render_profile(profile: DegreeProfile, fmt: str) -> str:
    a, b, dim = profile.a, profile.b, profile.dim_sym
    pieces = [
        ("I", f"[0,{dim}]", profile.I),
        ("I_!", f"(0,{format_rational(a)})", profile.I_inner),
        ("I_cusp", f"[{format_rational(a)},{format_rational(b)}]", profile.I_cusp),
        ("I_irr", f"({format_rational(b)},{dim})", profile.I_irr),
        ("S⁰", "", profile.s0.degrees),
    ]
    if fmt == "json":
        return _json({
            "n": profile.n,
            "dim_sym": dim,
            "a": format_rational(a),
            "b": format_rational(b),
            "I": [0, dim],
            "I_inner": list(profile.I_inner),
            "I_cusp": list(profile.I_cusp),
            "I_irr": list(profile.I_irr),
            "s0": list(profile.s0.degrees),
        })
    if fmt == "csv":
        return _csv(("set", "endpoints", "degrees"), pieces)
    return f"n = {profile.n}, dim X_Sym = {dim}\n\n" + _markdown_table(
        ("set", "endpoints", "degrees"), pieces
    )


# --- Espectro residual ---

def render_residual(n: int, level: int, descriptors: List[ResidualDescriptor], fmt: str) -> str:
    if fmt == "json":
        return _json({
            "n": n,
            "level": level,
            "count": len(descriptors),
            "descriptors": [
                {
                    "finite_part": character_to_json(d.finite_part),
                    "central_character": character_to_json(d.central_character),
                    "type_exponent": format_rational(d.type_exponent),
                    "multiplicity": d.multiplicity,
                }
                for d in descriptors
            ],
        })
    header = ("mu exponents", "conductor", "order", "omega = mu^n", "type exponent d", "multiplicity")
    rows = [
        (
            str(list(d.finite_part.exponents)),
            conductor(d.finite_part),
            d.finite_part.order,
            str(list(d.central_character.exponents)),
            d.type_exponent,
            d.multiplicity,
        )
        for d in descriptors
    ]
    if fmt == "csv":
        return _csv(header, rows)
    return f"n = {n}, nível N = {level}: {len(descriptors)} descritores\n\n" + _markdown_table(header, rows)


# --- Verificação de peso ---

def render_weight_check(record: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _json(record)
    rows = [(key, value if not isinstance(value, list) else ", ".join(value))
            for key, value in record.items()]
    if fmt == "csv":
        return _csv(("field", "value"), rows)
    return _markdown_table(("field", "value"), rows)
