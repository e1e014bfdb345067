"""One-stop analysis of a code spec.

analyze() builds the generator matrix once and runs the MDS check, the
distance computation and the Schur-square distinguishers on it, then
bundles everything into a line-oriented report.  Reports are fully
deterministic for a given spec and budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from .codes import CodeFamily, CodeSpec, GeneratorMatrix, generator_matrix
from .construct import ConstructedCode
from .mds import (
    DEFAULT_DISTANCE_BUDGET,
    METHOD_BOTH,
    DistanceResult,
    MdsVerdict,
    check_mds,
    min_distance,
)
from .schur import SchurReport, schur_report

BUDGET_ENV_VAR = "RCTRS_DISTANCE_BUDGET"


def distance_budget(explicit: int | None = None) -> int:
    """Enumeration budget: explicit argument, else environment, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_DISTANCE_BUDGET


@dataclass(frozen=True)
class AnalysisReport:
    spec: CodeSpec
    length: int
    dimension: int
    mds: MdsVerdict
    distance: DistanceResult
    schur: SchurReport
    provenance: tuple[str, ...]
    warnings: tuple[str, ...]

    def lines(self) -> list[str]:
        spec = self.spec
        out = [
            f"family={spec.family.value}",
            f"field={spec.field.descriptor()}",
            f"length={self.length}",
            f"dimension={self.dimension}",
            f"extended={'true' if spec.extended else 'false'}",
        ]
        if spec.family in (CodeFamily.TRS, CodeFamily.RCTRS):
            out.append(f"hook={spec.h} twist={spec.t}")
        if spec.alphas:
            out.append("alphas=" + ",".join(str(a) for a in spec.alphas))
        if spec.family in (CodeFamily.CTRS, CodeFamily.RCTRS):
            out.append(f"b={spec.b} c={spec.c} lambda={spec.lam}")
        if spec.family in (CodeFamily.TRS, CodeFamily.RCTRS):
            out.append(f"eta={spec.eta}")
        out.append(self.mds.render())
        if self.distance.value is not None:
            line = f"distance={self.distance.value} distance_method={self.distance.method}"
            if self.distance.method == "enumeration":
                line += f" codewords_enumerated={self.distance.enumerated}"
            out.append(line)
        else:
            bound = self.length - self.dimension + 1
            out.append(
                f"distance_method=budget-exceeded distance_upper_bound={bound}"
            )
        out.append(self.schur.render())
        for p in self.provenance:
            out.append(f"guarantee={p}")
        for w in self.warnings:
            out.append(f"warning={w}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _spec_warnings(spec: CodeSpec) -> list[str]:
    out = []
    if spec.family in (CodeFamily.CTRS, CodeFamily.RCTRS):
        if spec.b in spec.alphas:
            out.append("twist point b coincides with an evaluation point")
        if spec.c in spec.alphas:
            out.append("twist point c coincides with an evaluation point")
        if spec.b == spec.c:
            out.append("twist points b and c coincide")
    return out


def analyze(
    source: Union[CodeSpec, ConstructedCode],
    method: str = METHOD_BOTH,
    budget: int | None = None,
    gen: Optional[GeneratorMatrix] = None,
) -> AnalysisReport:
    if isinstance(source, ConstructedCode):
        spec = source.spec
        provenance = source.provenance()
        warnings = list(source.warnings)
    else:
        spec = source
        provenance = ()
        warnings = []
    warnings.extend(_spec_warnings(spec))
    if gen is None:
        gen = generator_matrix(spec)
    verdict = check_mds(spec, method=method, gen=gen)
    dist = min_distance(gen, distance_budget(budget), mds_verdict=verdict)
    schur = schur_report(gen, verdict)
    return AnalysisReport(
        spec=spec,
        length=gen.ncols,
        dimension=gen.nrows,
        mds=verdict,
        distance=dist,
        schur=schur,
        provenance=provenance,
        warnings=tuple(warnings),
    )
