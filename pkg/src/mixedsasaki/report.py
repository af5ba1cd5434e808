"""Check results, reports, and their JSON/text encodings."""

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__

#: Every CheckResult.paper_anchor must be one of these tags.
ANCHORS = frozenset({
    "para-hypercomplex-structure",
    "flat-mixed-examples",
    "mixed-3-structure-axioms",
    "compatible-metric",
    "sasakian-structure-equation",
    "lp-sasakian-structure-equation",
    "nijenhuis-normality",
    "fundamental-two-form",
    "einstein-constant",
    "curvature-identity",
    "sectional-curvature-xi",
    "killing-vector-equation",
    "lightlike-killing-combination",
    "conformal-killing-yano-equation",
    "strict-cky-identity",
    "killing-yano-family",
    "phi-not-killing-yano",
    "killing-tensor-first-integral",
    "associated-killing-tensor",
    "conformal-implies-killing",
    "bracket-relations",
    "foliation-leaves",
    "cone-para-hyper-kahler",
    "cone-restriction",
    "geodesic-closed-form",
    "antipodal-identification",
    "negative-control",
})

STATUSES = ("pass", "fail", "reported")


def _clean(value):
    """Make notes JSON-safe (numpy scalars/arrays to Python)."""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, np.ndarray):
        return _clean(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


@dataclass
class CheckResult:
    """One verified identity.

    ``status`` is derived unless given as ``"reported"``: pass iff
    max_residual <= tolerance (NaN fails).
    """

    check_id: str
    paper_anchor: str
    n: int
    samples: int
    max_residual: float
    mean_residual: float
    tolerance: float
    status: str = None
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.paper_anchor not in ANCHORS:
            raise ValueError(f"unregistered anchor {self.paper_anchor!r}")
        self.max_residual = float(self.max_residual)
        self.mean_residual = float(self.mean_residual)
        self.tolerance = float(self.tolerance)
        if self.status is None:
            ok = math.isfinite(self.max_residual) and self.max_residual <= self.tolerance
            self.status = "pass" if ok else "fail"
        elif self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        self.notes = _clean(self.notes)

    @property
    def passed(self):
        return self.status != "fail"

    def to_dict(self):
        d = asdict(self)
        for key in ("max_residual", "mean_residual"):
            if not math.isfinite(d[key]):
                d[key] = repr(d[key])
        return d


def summarize(check_id, anchor, n, residuals, tolerance, notes=None, status=None):
    """Build a CheckResult from an array of per-sample residuals."""
    r = np.abs(np.asarray(residuals, dtype=float)).ravel()
    if r.size == 0:
        raise ValueError(f"{check_id}: no samples")
    finite = r[~np.isnan(r)]
    worst = float(np.nan) if finite.size < r.size else float(r.max())
    mean = float(finite.mean()) if finite.size else float(np.nan)
    return CheckResult(check_id, anchor, n, int(r.size), worst, mean,
                       tolerance, status=status, notes=notes or {})


def lower_bound(check_id, anchor, n, observed, bound, notes=None):
    """CheckResult for 'observed >= bound': residual is the shortfall below the bound."""
    obs = np.asarray(observed, dtype=float).ravel()
    short = np.maximum(bound - obs, 0.0)
    short[np.isnan(obs)] = np.inf
    info = {"bound": bound, "min_observed": float(np.min(obs)), "max_observed": float(np.max(obs))}
    info.update(notes or {})
    return CheckResult(check_id, anchor, n, int(obs.size), float(short.max()),
                       float(short.mean()), 0.0, notes=info)


@dataclass
class Report:
    config: dict
    results: list
    duration_seconds: float
    version: str = __version__

    def to_dict(self):
        return {
            "config": self.config,
            "results": [r.to_dict() for r in self.results],
            "duration_seconds": self.duration_seconds,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, d):
        results = [CheckResult(**{k: (float(v) if k.endswith("_residual") else v)
                                  for k, v in r.items()}) for r in d["results"]]
        return cls(d["config"], results, d["duration_seconds"], d["version"])


def emit(report, fmt="json"):
    """Serialize a report to bytes, as JSON or a plain-text table."""
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    width = max([len(r.check_id) for r in report.results] + [8])
    lines = [f"mixedsasaki {report.version}  n={report.config.get('n')}  "
             f"seed={report.config.get('seed')}  ({report.duration_seconds:.2f} s)"]
    lines.append(f"{'check':<{width}}  {'status':<8}  {'max_res':>10}  {'tol':>8}  samples")
    for r in report.results:
        lines.append(f"{r.check_id:<{width}}  {r.status:<8}  {r.max_residual:>10.3e}  "
                     f"{r.tolerance:>8.1e}  {r.samples}")
    counts = {s: sum(r.status == s for r in report.results) for s in STATUSES}
    lines.append(", ".join(f"{v} {k}" for k, v in counts.items()))
    return ("\n".join(lines) + "\n").encode()


def exit_code(report):
    """0 when no result failed, 1 otherwise (configuration errors exit 2 upstream)."""
    return 1 if any(r.status == "fail" for r in report.results) else 0
