import logging
import time
from dataclasses import dataclass, field

import pandas as pd

from algebra.field import build_ext_field
from analysis.charsums import (
    gauss_quadratic_closed,
    gauss_quadratic_empirical,
    gaussian_periods_closed,
    gaussian_periods_empirical,
    tolerance,
)
from analysis.theory import (
    ab_minimality,
    griesmer,
    optimality_claimed,
    secret_sharing_summary,
    table_rows,
)
from checks.distribution_check import DistributionCheck
from checks.dual_distance_check import DualDistanceCheck
from checks.minimality_check import MinimalityCheck
from checks.structure_check import StructureCheck
from codes.regime import resolve_regime
from codes.trace_codes import build_trace_code, gray_generator_matrix
from utils.config import RunConfig
from utils.errors import TraceCodeError

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Predicted against computed results for one code, with the verdicts drawn from them."""

    p: int
    m: int
    variant: str
    regime: str
    length: int
    dimension: int
    predicted: object
    empirical: object
    match: bool
    min_distance: int
    griesmer: object
    optimality_claimed: bool
    dual_lee_distance: object = "not determined"
    ab_minimal: bool = None
    brute_minimal: object = "skipped"
    sss: object = None
    failures: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        """The JSON report; timings are left out so identical runs give identical files."""
        return {
            "p": self.p,
            "m": self.m,
            "variant": self.variant,
            "regime": self.regime,
            "length": self.length,
            "dimension": self.dimension,
            "predicted": self.predicted.to_list(),
            "empirical": self.empirical.to_list(),
            "match": self.match,
            "min_distance": self.min_distance,
            "griesmer": self.griesmer.to_dict(),
            "dual_lee_distance": self.dual_lee_distance,
            "ab_minimal": self.ab_minimal,
            "brute_minimal": self.brute_minimal,
            "sss": self.sss.to_dict() if self.sss is not None else None,
        }


class TraceCodeVerificationSystem:
    """
    Main system class for constructing and verifying trace codes.

    Owns one instance of each check, runs them against a code in order and
    assembles their results into a VerificationReport.
    """

    def __init__(self):
        self.checks = {
            "distribution": DistributionCheck(),
            "dual_distance": DualDistanceCheck(),
            "minimality": MinimalityCheck(),
            "structure": StructureCheck(),
        }
        logger.info("Trace code verification system initialized with %d checks", len(self.checks))

    def build_code(self, config):
        config.validate()
        return build_trace_code(config.p, config.m, config.variant)

    def run_check(self, name, code, config):
        start = time.perf_counter()
        result = self.checks[name].run(code, config)
        elapsed = time.perf_counter() - start
        logger.info("Check %s finished in %.3f s with status %s", name, elapsed, result["status"])
        return result, elapsed

    def construct(self, config):
        """
        Build the code and its Gray generator matrix.

        Returns:
            dict: status, matrix, length N and dimension K
        """
        code = self.build_code(config)
        matrix = gray_generator_matrix(code)
        return {"status": "success", "code": code, "matrix": matrix, "length": code.length, "dimension": code.dimension}

    def verify(self, config):
        """
        Run every check against the code described by config.

        Raises:
            UnsupportedRegimeError: If no closed form exists to compare with
            BudgetExceededError: If full enumeration is over budget

        Returns:
            VerificationReport: failures lists every assertion that did not hold
        """
        code = self.build_code(config)
        regime = code.regime.require_supported()
        timings = {}
        failures = []

        dist, timings["distribution"] = self.run_check("distribution", code, config)
        predicted, empirical = dist["predicted"], dist["empirical"]
        if not dist["match"]:
            failures.append(f"weight distribution mismatch: predicted {predicted.pairs}, computed {empirical.pairs}")

        d = empirical.min_nonzero
        bound = griesmer(code.length, code.dimension, d, code.p)
        claimed = optimality_claimed(regime)
        if claimed and not bound.optimal:
            failures.append(f"Griesmer optimality expected for [{code.length}, {code.dimension}, {d}]")

        dual, timings["dual_distance"] = self.run_check("dual_distance", code, config)
        if dual["status"] != "success":
            failures.append(f"dual Lee distance {dual['result'].distance}, expected 2")
        dual_distance = dual["result"].distance

        ab_minimal = ab_minimality(d, empirical.max_weight, code.p)
        minimality, timings["minimality"] = self.run_check("minimality", code, config)
        brute = minimality["result"]
        brute_minimal = brute.all_minimal if brute is not None else "skipped"
        if ab_minimal and brute is not None and not brute.all_minimal:
            failures.append(f"codewords covered despite the Ashikhmin-Barg condition: {brute.counterexamples}")

        if code.size <= config.minimality_budget:
            structure, timings["structure"] = self.run_check("structure", code, config)
            if structure["status"] != "success":
                failures.append(f"structure check failed: {structure}")

        sss = None
        established = ab_minimal or brute_minimal is True
        if established and dual_distance == 2:
            sss = secret_sharing_summary(
                code.length,
                code.dimension,
                code.p,
                gray_generator_matrix(code),
                all_minimal=True,
                dual_distance=dual_distance,
            )

        report = VerificationReport(
            p=code.p,
            m=code.m,
            variant=code.variant.value,
            regime=str(regime),
            length=code.length,
            dimension=code.dimension,
            predicted=predicted,
            empirical=empirical,
            match=dist["match"],
            min_distance=d,
            griesmer=bound,
            optimality_claimed=claimed,
            dual_lee_distance=dual_distance,
            ab_minimal=ab_minimal,
            brute_minimal=brute_minimal,
            sss=sss,
            failures=failures,
            timings=timings,
        )
        for failure in failures:
            logger.warning("%s", failure)
        return report

    def gauss_table(self, p, m):
        """Closed-form against summed Gauss sum and periods for F_{p^m}.

        Returns:
            dict: status plus one row per quantity with closed, empirical, diff and pass
        """
        f = build_ext_field(p, m)
        tau = tolerance(f.q)
        q_closed, n_closed = gaussian_periods_closed(p, m)
        q_emp, n_emp = gaussian_periods_empirical(f)
        quantities = [
            ("G(eta)", gauss_quadratic_closed(p, m), gauss_quadratic_empirical(f)),
            ("Q-bar", q_closed, q_emp),
            ("N-bar", n_closed, n_emp),
            ("Q-bar + N-bar", q_closed + n_closed, q_emp + n_emp),
        ]
        rows = []
        for name, closed, empirical in quantities:
            diff = abs(closed - empirical)
            rows.append({"quantity": name, "closed": closed, "empirical": empirical, "diff": diff, "pass": diff <= tau})
        passed = all(row["pass"] for row in rows)
        return {"status": "success" if passed else "mismatch", "p": p, "m": m, "tolerance": tau, "rows": rows}

    def sweep(self, instances, config):
        """
        Verify every (p, m, variant) instance, recording failures instead of stopping.

        Returns:
            list: One dict per instance with the sweep CSV columns and a status
        """
        rows = []
        for p, m, variant in instances:
            instance = RunConfig(**{**config.__dict__, "p": p, "m": m, "variant": variant})
            start = time.perf_counter()
            row = {"p": p, "m": m, "variant": variant}
            try:
                report = self.verify(instance)
                row.update(
                    regime=report.regime,
                    N=report.length,
                    K=report.dimension,
                    d=report.min_distance,
                    match=report.match,
                    optimal=report.griesmer.optimal,
                    dual=report.dual_lee_distance,
                    status="success" if report.passed else "error",
                )
            except TraceCodeError as e:
                logger.error("Sweep instance p=%s m=%s %s failed: %s", p, m, variant, e)
                row.update(regime="", N="", K="", d="", match=False, optimal="", dual="", status="error", message=str(e))
            row["runtime_ms"] = int(round((time.perf_counter() - start) * 1000))
            rows.append(row)
        return rows

    def render_text(self, report):
        """The weight table of the regime next to the enumerated frequencies."""
        rows = table_rows(resolve_regime(report.variant, report.p, report.m))
        frame = pd.DataFrame(rows)
        frame["computed"] = [report.empirical.pairs.get(row["weight"], 0) for row in rows]
        frame["match"] = frame["frequency"] == frame["computed"]

        lines = [
            f"{report.variant} code over F_{report.p} + uF_{report.p}, m = {report.m} ({report.regime})",
            f"parameters [{report.length}, {report.dimension}, {report.min_distance}]",
            "",
            frame.to_string(index=False),
            "",
            f"Griesmer: sum_d = {report.griesmer.griesmer_sum_d}, sum_(d+1) = {report.griesmer.griesmer_sum_d_plus_1}, "
            f"optimal = {report.griesmer.optimal}" + ("" if report.optimality_claimed else " (not asserted)"),
            f"dual Lee distance: {report.dual_lee_distance}",
            f"Ashikhmin-Barg condition: {report.ab_minimal}; brute-force minimality: {report.brute_minimal}",
        ]
        if report.sss is not None:
            s = report.sss
            lines.append(
                f"secret sharing: {s.participants} participants, {s.access_sets} minimal access sets, "
                f"each participant in {s.coverage}, {s.dictatorial_count} dictatorial"
            )
        lines.append("PASS" if report.passed else "FAIL: " + "; ".join(report.failures))
        return "\n".join(lines)


def verify_distribution(p, m, variant, mode="full", **settings):
    """Run the full verification for one code and return its report."""
    config = RunConfig(p=p, m=m, variant=variant, mode=mode, **settings)
    return TraceCodeVerificationSystem().verify(config)
