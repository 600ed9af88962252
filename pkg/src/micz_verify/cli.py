"""Command-line driver: run identity suites and print a text or JSON report."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import micz, radial, reps
from .micz import ConfigError, ConventionMismatch, ProblemConfig
from .report import VerificationReport

SUITES = ("gauge", "closed-forms", "commutation", "quadratic", "radial", "full-scalar", "reps", "abstract")
MU_CHOICES = {"0": 0, "1/2": 1, "1": 2}


@dataclass(frozen=True)
class SuiteConfig:
    n: int = 2
    mu: str = "0"
    suites: tuple = ("all",)
    mode: str = "exact"
    points: int = 20
    seed: int = 0
    kmax: int = 4
    lmax: int = 4
    imax: int = 6
    format: str = "text"

    @property
    def two_mu(self) -> int:
        return MU_CHOICES[self.mu]

    def resolved_suites(self) -> list[str]:
        wanted = set(self.suites)
        if "all" in wanted:
            out = list(SUITES)
            if self.two_mu != 0:
                out.remove("full-scalar")
            return out
        return [s for s in SUITES if s in wanted]

    def validate(self):
        if self.mu not in MU_CHOICES:
            raise ConfigError(f"mu must be one of {sorted(MU_CHOICES)}, got {self.mu!r}")
        unknown = set(self.suites) - set(SUITES) - {"all"}
        if unknown:
            raise ConfigError(f"unknown suites: {sorted(unknown)}")
        if self.n < 2:
            raise ConfigError("n must be at least 2")
        if self.two_mu == 2:
            if self.n != 2:
                raise ConfigError("mu=1 is only available for n=2")
            if "all" in self.suites or set(self.suites) - {"gauge"}:
                raise ConfigError("mu=1 is a negative control for the gauge suite only")
        if self.mode == "exact" and self.n > 3 and set(self.resolved_suites()) & {"gauge", "closed-forms",
                                                                                     "commutation", "quadratic"}:
            raise ConfigError("exact operator suites are supported for n in {2, 3}; use --mode float")
        if "full-scalar" in self.suites and self.two_mu != 0:
            raise ConfigError("the full-dimension scalar check needs mu=0")
        for name in ("points", "kmax", "lmax", "imax"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        ProblemConfig(self.n, self.two_mu, self.mode, self.points, self.seed)

    def echo(self) -> dict:
        return {"n": self.n, "mu": str(Fraction(self.two_mu, 2)), "suites": self.resolved_suites(),
                "mode": self.mode, "points": self.points, "seed": self.seed,
                "kmax": self.kmax, "lmax": self.lmax, "imax": self.imax}


def run_suite(cfg: SuiteConfig) -> tuple[VerificationReport, int]:
    cfg.validate()
    pcfg = ProblemConfig(cfg.n, cfg.two_mu, cfg.mode, cfg.points, cfg.seed)
    out = VerificationReport(cfg.echo())
    for suite in cfg.resolved_suites():
        if suite == "gauge":
            part = micz.verify_gauge_identities(pcfg)
        elif suite == "closed-forms":
            part = micz.verify_closed_forms(pcfg)
        elif suite == "commutation":
            part = micz.verify_commutation_relations(pcfg)
        elif suite == "quadratic":
            part = micz.verify_quadratic_relations(pcfg)
        elif suite == "radial":
            part = radial.verify_radial_eigensystem(cfg.n, cfg.two_mu, cfg.kmax, cfg.lmax)
            part.extend(radial.verify_gram_float(cfg.n, cfg.two_mu, cfg.kmax, cfg.lmax))
        elif suite == "full-scalar":
            part = radial.full_dimension_scalar_check(cfg.n, min(cfg.kmax, 3), min(cfg.lmax, 3))
        elif suite == "reps":
            part = reps.verify_decompositions(cfg.n, cfg.two_mu, cfg.imax)
        else:
            part = reps.abstract_algebra_checks(cfg.n, cfg.seed)
        out.extend(part)
    return out, 0 if out.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="micz-verify",
        description="Exact verification of the even-dimensional generalized MICZ-Kepler problem.")
    p.add_argument("--n", type=int, default=2, help="half the dimension D = 2n (default 2)")
    p.add_argument("--mu", default="0", help="magnetic charge: 0, 1/2, or 1 (negative control, n=2 gauge only)")
    p.add_argument("--suites", nargs="+", default=["all"], metavar="SUITE",
                   help="any of: " + ", ".join(SUITES) + ", all")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--points", type=int, default=20, help="sample points per pointwise identity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--lmax", type=int, default=4)
    p.add_argument("--imax", type=int, default=6)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timings", action="store_true", help="include per-item milliseconds in JSON output")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    suites = tuple(s for chunk in args.suites for s in chunk.split(",") if s)
    cfg = SuiteConfig(args.n, args.mu, suites, args.mode, args.points, args.seed,
                      args.kmax, args.lmax, args.imax, args.format)
    try:
        report, code = run_suite(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ConventionMismatch as exc:
        print(f"convention mismatch: {exc}", file=sys.stderr)
        return 1
    if cfg.format == "json":
        print(report.to_json(include_timings=args.timings))
    else:
        print(report.to_text())
    for item in report.failures()[:1]:
        print(f"FAILED {item.suite}/{item.id} ({item.anchor}) witness={item.witness} residual={item.residual}",
              file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
