"""Instrumented runs and their reports.

JSON report schema (one object per run; ``--algorithm all`` emits a list)::

    {
      "algorithm": "buchberger" | "f5b" | "f5b-fast",
      "reduction": "safe" | "literal" | null,
      "input": {"m", "n", "variables", "order", "field",
                "maxdeg", "mindeg", "degree_bound", "N"},
      "basis": [str, ...],               # reduced basis, descending heads
      "raw_basis_size": int,
      "counters": {"field_ops", "reduction_steps", "divisibility_tests",
                   "pairs_generated", "pairs_syzygy", "pairs_rewritten",
                   "pairs_zero", "pairs_basis", "signature_drift",
                   "pairs_discarded", "phase_field_ops": {phase: int}},
      "conservation_ok": bool,
      "predicted": {"buchberger", "f5b", "f5b-fast": exact rational as str},
      "in_model_domain": bool,
      "elapsed_seconds": float
    }

Rationals are strings (``"81/2"``) so nothing is lost to floating point.
Only ``elapsed_seconds`` varies between runs of the same input.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .buchberger import buchberger_basis, reduce_basis
from .complexity import CostModelInput, complexity_report
from .counter import OpCounter, counting
from .f5b import f5b_basis
from .polynomial import Polynomial, PolyRing, count_monomials, degree_bound

ALGORITHMS = ("buchberger", "f5b", "f5b-fast")


@dataclass
class RunReport:
    algorithm: str
    reduction: Optional[str]
    input: Dict[str, object]
    basis: List[str]
    raw_basis_size: int
    counters: Dict[str, object]
    conservation_ok: bool
    predicted: Dict[str, str]
    in_model_domain: bool
    elapsed_seconds: float = 0.0
    basis_polys: List[Polynomial] = field(default_factory=list, repr=False, compare=False)

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "reduction": self.reduction,
            "input": self.input,
            "basis": self.basis,
            "raw_basis_size": self.raw_basis_size,
            "counters": self.counters,
            "conservation_ok": self.conservation_ok,
            "predicted": self.predicted,
            "in_model_domain": self.in_model_domain,
            "elapsed_seconds": self.elapsed_seconds,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(**{k: d[k] for k in (
            "algorithm", "reduction", "input", "basis", "raw_basis_size", "counters",
            "conservation_ok", "predicted", "in_model_domain", "elapsed_seconds")})


def input_summary(ring: PolyRing, F: Sequence[Polynomial]) -> dict:
    degs = [f.total_degree() for f in F]
    D = degree_bound(F)
    return {
        "m": len(F),
        "n": ring.nvars,
        "variables": list(ring.variables),
        "order": ring.order.kind,
        "field": ring.field.descriptor(),
        "maxdeg": max(degs),
        "mindeg": min(degs),
        "degree_bound": D,
        "N": count_monomials(D, ring.nvars),
    }


def predict(ring: PolyRing, F: Sequence[Polynomial]):
    return complexity_report(CostModelInput.from_system(F))


def run(ring: PolyRing, F: Sequence[Polynomial], algorithm: str = "f5b-fast",
        reduction: str = "safe", selection: str = "degree") -> RunReport:
    """Run one algorithm on ``F`` under a fresh operation counter."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    F = [f for f in F if f]
    with counting(OpCounter()) as counter:
        start = time.perf_counter()
        if algorithm == "buchberger":
            G = buchberger_basis(F)
        elif algorithm == "f5b":
            G = f5b_basis(F, "f5", selection=selection)
        else:
            G = f5b_basis(F, "fast", mode=reduction, selection=selection)
        elapsed = time.perf_counter() - start
    # canonicalisation is bookkeeping, not part of the measured run
    with counting(OpCounter()):
        reduced = reduce_basis(G)
    cr = predict(ring, F)
    return RunReport(
        algorithm=algorithm,
        reduction=reduction if algorithm == "f5b-fast" else None,
        input=input_summary(ring, F),
        basis=[str(g) for g in reduced],
        raw_basis_size=len(G),
        counters=counter.as_dict(),
        conservation_ok=counter.conserved(),
        predicted={k: str(v) for k, v in cr.predicted.items()},
        in_model_domain=cr.inputs.in_domain,
        elapsed_seconds=round(elapsed, 6),
        basis_polys=reduced,
    )


def run_many(ring, F, algorithms: Sequence[str], reduction="safe", selection="degree",
             jobs: int = 1) -> List[RunReport]:
    """Run several algorithms, optionally on worker threads; reports keep the requested order."""
    if jobs <= 1:
        return [run(ring, F, a, reduction, selection) for a in algorithms]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(run, ring, F, a, reduction, selection) for a in algorithms]
        return [f.result() for f in futs]


def emit_report(r, fmt: str = "text") -> str:
    """Serialise one report (or a list of them) as ``json`` or human-readable ``text``."""
    reports = r if isinstance(r, list) else [r]
    if fmt == "json":
        payload = [x.as_dict() for x in reports]
        return json.dumps(payload if isinstance(r, list) else payload[0], indent=2)
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    return "\n\n".join(_text(x) for x in reports) + "\n"


def _text(r: RunReport) -> str:
    inp = r.input
    c = r.counters
    head = r.algorithm + (f" ({r.reduction} reduction)" if r.reduction else "")
    lines = [
        f"== {head} ==",
        f"system: m={inp['m']} n={inp['n']} vars={','.join(inp['variables'])} "
        f"order={inp['order']} field={inp['field']}",
        f"degrees: max={inp['maxdeg']} min={inp['mindeg']}  D<={inp['degree_bound']}  N(D,n)={inp['N']}",
        f"reduced basis ({len(r.basis)} elements, raw {r.raw_basis_size}):",
    ]
    lines += [f"  {g}" for g in r.basis]
    lines += [
        f"field ops: {c['field_ops']}   reduction steps: {c['reduction_steps']}   "
        f"divisibility tests: {c['divisibility_tests']}",
        f"pairs: generated {c['pairs_generated']}, syzygy {c['pairs_syzygy']}, "
        f"rewritten {c['pairs_rewritten']}, to zero {c['pairs_zero']}, new basis {c['pairs_basis']}"
        f"  [{'balanced' if r.conservation_ok else 'UNBALANCED'}]",
    ]
    if c.get("signature_drift"):
        lines.append(f"signature drift steps: {c['signature_drift']}")
    lines.append("predicted steps" + ("" if r.in_model_domain else " (outside model domain m < N)") + ":")
    lines += [f"  {k}: {v}" for k, v in r.predicted.items()]
    lines.append(f"elapsed: {r.elapsed_seconds:.3f} s")
    return "\n".join(lines)
