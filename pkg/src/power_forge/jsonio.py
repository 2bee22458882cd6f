"""JSON encoding for every artifact the library or CLI emits.

Encoding rules, applied uniformly:

* rationals and unbounded integers (coefficients, trace quantities) are
  decimal strings, e.g. "-3/2", "7", so nothing is squeezed through a
  float on the way out;
* small structural integers (exponents, degrees, bounds, counts, scan
  indices) are plain JSON numbers;
* every top-level document carries ``schema`` ("power-forge/v1") and a
  ``kind`` tag naming its shape.

Solution tuples from the equation searches stay numeric: their entries
are bounded by the scan box and stay far below 2**53 for any feasible
box.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .construct import (
    CapacityEstimate,
    ConstructionArtifacts,
    PowerSetInput,
)
from .oracles import PowerHit, SolutionList
from .poly import IntPoly
from .powers import PowerDecomposition
from .verify import Hit, TraceRecord, VerificationReport

__all__ = [
    "SCHEMA",
    "dumps",
    "poly_to_json",
    "poly_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "artifacts_to_json",
    "artifacts_from_json",
    "report_to_json",
    "trace_to_json",
    "solutions_to_json",
    "power_hits_to_json",
    "power_query_to_json",
    "error_to_json",
]

SCHEMA = "power-forge/v1"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def poly_to_json(p: IntPoly) -> list[str]:
    """Coefficients ascending, as decimal strings."""
    return [str(c) for c in p.coeffs]


def poly_from_json(data: list[str]) -> IntPoly:
    return IntPoly(int(c) for c in data)


def decomposition_to_json(dec: Optional[PowerDecomposition]) -> Optional[dict]:
    if dec is None:
        return None
    return {"base": str(dec.base), "exponent": dec.exponent}


def decomposition_from_json(obj: Optional[dict]) -> Optional[PowerDecomposition]:
    if obj is None:
        return None
    return PowerDecomposition(Fraction(obj["base"]), int(obj["exponent"]))


def _estimate_to_json(e: CapacityEstimate) -> dict:
    return {
        "gamma": str(e.gamma),
        "log2_bound": e.log2_bound,
        "last_power_index": e.last_power_index,
        "value": e.value,
    }


def _estimate_from_json(obj: dict) -> CapacityEstimate:
    return CapacityEstimate(
        gamma=Fraction(obj["gamma"]),
        log2_bound=int(obj["log2_bound"]),
        last_power_index=None
        if obj["last_power_index"] is None
        else int(obj["last_power_index"]),
        value=int(obj["value"]),
    )


def artifacts_to_json(art: ConstructionArtifacts) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "construction",
        "variant": art.input.variant,
        "elements": [str(e) for e in art.input.elements],
        "k": art.k,
        "kappa": art.kappa,
        "s": art.s,
        "deltas": None if art.deltas is None else [str(d) for d in art.deltas],
        "capacity_estimates": None
        if art.estimates is None
        else [_estimate_to_json(e) for e in art.estimates],
        "g": None if art.g is None else poly_to_json(art.g),
        "h": None if art.h is None else poly_to_json(art.h),
        "f": poly_to_json(art.f),
        "degree": art.f.degree,
        "notes": art.notes,
    }


def artifacts_from_json(obj: dict) -> ConstructionArtifacts:
    if obj.get("schema") != SCHEMA or obj.get("kind") != "construction":
        raise ValueError("not a construction document")
    inp = PowerSetInput.from_values(obj["elements"], variant=obj["variant"])
    return ConstructionArtifacts(
        input=inp,
        f=poly_from_json(obj["f"]),
        g=None if obj["g"] is None else poly_from_json(obj["g"]),
        h=None if obj["h"] is None else poly_from_json(obj["h"]),
        k=None if obj["k"] is None else int(obj["k"]),
        kappa=None if obj["kappa"] is None else int(obj["kappa"]),
        s=None if obj["s"] is None else int(obj["s"]),
        deltas=None
        if obj["deltas"] is None
        else tuple(Fraction(d) for d in obj["deltas"]),
        estimates=None
        if obj["capacity_estimates"] is None
        else tuple(_estimate_from_json(e) for e in obj["capacity_estimates"]),
        notes=obj.get("notes", ""),
    )


def _hit_to_json(h: Hit) -> dict:
    return {
        "x": str(h.x),
        "value": str(h.value),
        "power": decomposition_to_json(h.power),
    }


def report_to_json(rep: VerificationReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "verification",
        "variant": rep.variant,
        "bound": rep.bound,
        "points_scanned": rep.points_scanned,
        "verdict": rep.verdict,
        "hits": [_hit_to_json(h) for h in rep.hits],
        "extras": [_hit_to_json(h) for h in rep.extras],
        "missing": [str(b) for b in rep.missing],
        "notes": rep.notes,
    }


def trace_to_json(rec: TraceRecord) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "trace",
        "x": str(rec.x),
        "k": rec.k,
        "u": str(rec.u),
        "v": str(rec.v),
        "A": str(rec.A),
        "B": str(rec.B),
        "w": str(rec.w),
        "power_sum": str(rec.power_sum),
        "checks": {
            "coprime_pair": rec.coprime_pair_ok,
            "gcd_power_of_two": rec.gcd_power_of_two_ok,
            "small_sum_trivial": rec.small_sum_trivial_ok,
            "value_identity": rec.value_identity_ok,
            "mod_four": rec.mod_four_ok,
            "zero_iff_member": rec.zero_iff_member_ok,
        },
        "ok": rec.ok,
    }


def solutions_to_json(sol: SolutionList) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "solutions",
        "equation": sol.equation,
        "bounds": sol.bounds,
        "exhaustive": sol.exhaustive,
        "count": len(sol.solutions),
        "solutions": [list(t) for t in sol.solutions],
        "notes": sol.notes,
    }


def power_hits_to_json(hits: tuple[PowerHit, ...], sequence: str, params: dict) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "power-scan",
        "sequence": sequence,
        "params": params,
        "count": len(hits),
        "hits": [
            {
                "index": h.index,
                "value": str(h.value),
                "power": decomposition_to_json(h.power),
            }
            for h in hits
        ],
    }


def power_query_to_json(value: Fraction, dec: Optional[PowerDecomposition]) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "power",
        "value": str(value),
        "is_power": dec is not None,
        "base": None if dec is None else str(dec.base),
        "exponent": None if dec is None else dec.exponent,
    }


def error_to_json(message: str, code: str = "validation") -> dict:
    return {"schema": SCHEMA, "kind": "error", "error": {"code": code, "message": message}}
