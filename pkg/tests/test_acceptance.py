"""Acceptance criteria 1-14 on the seed-42 runs for n = 0 and n = 1.

Every criterion prints one PASS/FAIL line. Criteria are judged from the
report contents, and each check's tolerance must be no looser than the
criterion's own.

    pytest tests/test_acceptance.py -v        # or
    python tests/test_acceptance.py
"""

import json
import sys

import pytest

from mixedsasaki.cli import main as cli_main
from mixedsasaki.report import ANCHORS
from mixedsasaki.suite import SuiteConfig, run_suite

NS = (0, 1)


class Verdict:
    """Collects failed conditions for one criterion."""

    def __init__(self, reports):
        self.reports = reports
        self.problems = []

    def result(self, n, check_id):
        for r in self.reports[n].results:
            if r.check_id == check_id:
                return r
        self.problems.append(f"n={n}: {check_id} missing")
        return None

    def within(self, n, check_id, tol, samples=None):
        """Asserted check present, passing, at a tolerance no looser than ``tol``."""
        r = self.result(n, check_id)
        if r is None:
            return None
        if r.tolerance > tol:
            self.problems.append(f"n={n}: {check_id} tolerance {r.tolerance:g} looser than {tol:g}")
        if r.status != "pass" or r.max_residual > tol:
            self.problems.append(f"n={n}: {check_id} {r.status} max={r.max_residual:.3e} tol={tol:g}")
        if samples is not None and r.samples < samples:
            self.problems.append(f"n={n}: {check_id} has {r.samples} samples, need {samples}")
        return r

    def reported(self, n, check_id):
        r = self.result(n, check_id)
        if r is not None and r.status != "reported":
            self.problems.append(f"n={n}: {check_id} should be reported, is {r.status}")
        return r

    def require(self, cond, message):
        if not cond:
            self.problems.append(message)


def criterion_1(v):
    for n in NS:
        for m in (4, 8, 12):
            r = v.within(n, f"flat_examples.para_hypercomplex.m{m}", 0.0)
            v.require(r is None or r.max_residual == 0, f"m={m} residual not exactly 0")
        for dim in (3, 7):
            r = v.within(n, f"flat_examples.definition.R{dim}", 0.0)
            v.require(r is None or r.max_residual == 0, f"R{dim} residual not exactly 0")


def criterion_2(v):
    for n in NS:
        r = v.within(n, "einstein.ricci", 1e-6, samples=500)
        v.require(r is None or r.notes.get("lambda") == 4 * n + 2, f"n={n}: wrong Einstein constant")


def criterion_3(v):
    for n in NS:
        for k in ("xi1", "xi2", "xi3", "xi1+xi2", "xi1+xi3"):
            v.within(n, f"killing.{k}", 1e-8, samples=25)
        v.within(n, "killing.lightlike_norm", 1e-12)


def criterion_4(v):
    for n in NS:
        v.within(n, "axioms.definition", 1e-9)
        v.within(n, "axioms.compatible_metric", 1e-9)
        v.within(n, "axioms.xi_orthonormal", 1e-9)


def criterion_5(v):
    for n in NS:
        for a in (1, 2, 3):
            v.within(n, f"axioms.structure_equation.alpha{a}", 1e-6)
        for a in (2, 3):
            r = v.reported(n, f"axioms.structure_equation.branch.alpha{a}")
            v.require(r is None or r.notes.get("measured_branch") in ("plus", "minus", "both", "neither"),
                      f"n={n}: branch alpha{a} does not name the measured branch")


def criterion_6(v):
    for n in NS:
        for a in (1, 2, 3):
            v.within(n, f"cky.eta.alpha{a}", 1e-6)
            v.within(n, f"cky.d_eta.alpha{a}", 1e-5)
            strict = v.within(n, f"cky.d_eta_strict.alpha{a}", 0.0)
            v.require(strict is None or strict.notes["bound"] >= 1, "co-closure witness bound below 1")
            v.within(n, f"cky.codifferential_proportional.alpha{a}", 1e-5)
            for k in range(2 * n + 2):
                v.within(n, f"ky_family.k{k}.alpha{a}", 1e-5)
            extra = [r.check_id for r in v.reports[n].results
                     if r.check_id.startswith("ky_family.k") and r.check_id.endswith(f"alpha{a}")]
            v.require(len(extra) == 2 * n + 2, f"n={n}: ky_family covers {len(extra)} values of k")
        neg = v.within(n, "cky.negative_control", 0.0)
        v.require(neg is None or neg.notes["bound"] >= 1e-2, "negative-control bound below 1e-2")


def criterion_7(v):
    for n in NS:
        for a in (1, 2, 3):
            v.within(n, f"cky.identity.alpha{a}", 1e-5, samples=25 * 20)


def criterion_8(v):
    for n in NS:
        v.within(n, "axioms.curvature.dual_path", 1e-5)
        v.within(n, "axioms.curvature.xi_identity", 1e-6)
        v.within(n, "axioms.curvature.sectional_xi", 1e-6, samples=50)
        v.within(n, "axioms.curvature.degenerate_planes", 0.0)


def criterion_9(v):
    for n in NS:
        v.within(n, "foliation.involutive", 1e-9)
        v.within(n, "foliation.totally_geodesic", 1e-6)
        v.within(n, "foliation.leaf_curvature", 1e-6)
        for pair in ("xi1xi2", "xi2xi3", "xi3xi1"):
            r = v.reported(n, f"foliation.bracket.{pair}")
            v.require(r is None or "fitted_constants" in r.notes, f"{pair}: no fitted constants")
        v.within(n, "foliation.bracket.xi2xi3_pinned", 1e-12)


def criterion_10(v):
    for n in NS:
        for a in (1, 2, 3):
            v.within(n, f"geodesic.killing_tensor.eta{a}", 1e-6)
            v.within(n, f"geodesic.first_integral.eta{a}", 1e-7, samples=30)
        v.within(n, "geodesic.killing_tensor.associated", 1e-5)
        v.within(n, "geodesic.first_integral.associated", 1e-7)


def criterion_11(v):
    for n in NS:
        for a in (1, 2, 3):
            v.within(n, f"killing.conformal_mechanism.alpha{a}", 1e-6)


def criterion_12(v):
    for n in NS:
        v.within(n, "cone.j_algebra", 1e-9)
        v.within(n, "cone.compatibility", 1e-9)
        for r in ("0.5", "1", "2"):
            v.within(n, f"cone.parallel.r{r}", 1e-5)
        v.within(n, "cone.r_independence", 1e-6)
        v.within(n, "cone.round_trip", 1e-10)


def criterion_13(v):
    for n in NS:
        for a in (1, 2, 3):
            r = v.within(n, f"cky.phi_not_ky.alpha{a}", 0.0)
            v.require(r is None or r.notes["bound"] >= 1e-2, "phi_not_ky bound below 1e-2")
    # at n = 0 no tangent vector is orthogonal to all three xi's: the witness exists from n = 1
    for a in (1, 2, 3):
        r = v.within(1, f"cky.phi_witness.alpha{a}", 0.0)
        v.require(r is None or r.notes["bound"] >= 0.5, "witness bound below 0.5")


def _strip(report):
    d = report.to_dict()
    d.pop("duration_seconds")
    d.pop("version")
    return json.dumps(d, sort_keys=True)


def criterion_14(v):
    again = run_suite(SuiteConfig(n=0, seed=42))
    v.require(_strip(again) == _strip(v.reports[0]), "rerun of n=0 differs")
    for n in NS:
        orphans = [r.check_id for r in v.reports[n].results if r.paper_anchor not in ANCHORS]
        v.require(not orphans, f"unregistered anchors: {orphans}")
    quiet = ["--samples", "3", "--out", "/dev/null"]
    v.require(cli_main(["--suite", "einstein"] + quiet) == 0, "passing run did not exit 0")
    v.require(cli_main(["--suite", "fault_injection"] + quiet) == 1, "fault injection did not exit 1")
    v.require(cli_main(["--samples", "0", "--out", "/dev/null"]) == 2, "config error did not exit 2")


CRITERIA = {
    1: ("flat algebra exact", criterion_1),
    2: ("Einstein constant 4n+2", criterion_2),
    3: ("Killing Reeb fields and lightlike combination", criterion_3),
    4: ("mixed 3-structure axioms on the pseudo-sphere", criterion_4),
    5: ("structure equations with branch reported", criterion_5),
    6: ("CKY/KY suite", criterion_6),
    7: ("strict CKY displayed identity", criterion_7),
    8: ("curvature", criterion_8),
    9: ("Reeb foliation", criterion_9),
    10: ("Killing tensors and first integrals", criterion_10),
    11: ("conformal implies Killing mechanism", criterion_11),
    12: ("cone para-hyper-Kaehler", criterion_12),
    13: ("phi is not Killing-Yano", criterion_13),
    14: ("determinism and reporting", criterion_14),
}


def judge(k, reports):
    name, fn = CRITERIA[k]
    v = Verdict(reports)
    fn(v)
    line = f"{'PASS' if not v.problems else 'FAIL'} criterion {k:2d}: {name}"
    if v.problems:
        line += "\n" + "\n".join(f"    {p}" for p in v.problems[:8])
        if len(v.problems) > 8:
            line += f"\n    ... {len(v.problems) - 8} more"
    return not v.problems, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, reports, capsys):
    ok, line = judge(k, reports)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    runs = {n: run_suite(SuiteConfig(n=n, seed=42)) for n in NS}
    verdicts = [judge(k, runs) for k in sorted(CRITERIA)]
    for _, line in verdicts:
        print(line)
    sys.exit(0 if all(ok for ok, _ in verdicts) else 1)
