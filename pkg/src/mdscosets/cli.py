"""Command line interface.

Three commands:

* ``compute``: print or save the spectrum of one coset-weight class.
* ``verify``: enumerate the whole space and compare every applicable
  closed form against the census.
* ``identities``: run the binomial identity sweeps.

Exit codes: 0 success / all checks pass, 1 verification or identity
failure, 2 invalid arguments or parameters, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import identities, oracle, spectra
from .codes import CodeParams, Spectrum, build_code, make_params
from .combinat import binom

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

MAX_IDENTITY_W = 60


@dataclass(frozen=True)
class Mismatch:
    """One disagreement between a closed form (or invariant) and the census."""

    coset_weight: int | str
    w: int
    source: str
    formula_value: int
    oracle_value: int

    def __str__(self) -> str:
        return (
            f"W={self.coset_weight} w={self.w} {self.source}: "
            f"formula {self.formula_value} != census {self.oracle_value}"
        )


@dataclass
class RunReport:
    """Outcome of one verify run."""

    invocation: str
    status: str  # "pass" | "fail"
    mismatches: list[Mismatch] = field(default_factory=list)
    checks: int = 0
    sources: int = 0
    seconds: float = 0.0
    census: oracle.CosetCensus | None = None


def run_verify(params: CodeParams, max_coset_weight: int = 3, workers: int = 1) -> RunReport:
    """Census the code, then compare every applicable closed form against it.

    Families that do not apply to the parameters (wrong d, or covering
    radius other than 3 for the weight-3 forms) are skipped, not failed.
    """
    t0 = time.perf_counter()
    n, k, q, d, t = params.n, params.k, params.q, params.d, params.t
    cen = oracle.census(build_code(params), workers=workers)
    mismatches: list[Mismatch] = []
    sources: set[str] = set()
    checks = 0

    def compare(cw: int | str, w: int, source: str, got: int, want: int) -> None:
        nonlocal checks
        checks += 1
        sources.add(source)
        if got != want:
            mismatches.append(Mismatch(cw, w, source, got, want))

    # coset weight 0: the code itself
    want0 = cen.per_weight[0].spectrum
    for w in range(n + 1):
        compare(0, w, "mds_weight", spectra.mds_weight(params, w), want0[w])
    full0 = spectra.full_spectrum(params, 0)
    for w in range(n + 1):
        compare(0, w, "full_spectrum[W=0]", full0[w], want0[w])

    if max_coset_weight >= 1 and d >= 3:
        want1 = cen.per_weight[1].spectrum
        for variant in spectra.variants_for("sigma_w1", params):
            for w in range(d - 1, n + 1):
                compare(1, w, f"sigma_w1[{variant}]", spectra.sigma_w1(params, w, variant), want1[w])
        full1 = spectra.full_spectrum(params, 1)
        for w in range(n + 1):
            compare(1, w, "full_spectrum[W=1]", full1[w], want1[w])
        cum1 = cen.cumulative_spectrum(1)
        for variant in ("lemma", "corollary"):
            for w in range(d - 1, n + 1):
                compare("<=1", w, f"sigma_le1[{variant}]", spectra.sigma_le1(params, w, variant), cum1[w])
        for u in range(d - 1, n + 1):
            compare("<=1", u, "cheung_cumulative[t_cap=1]", spectra.cheung_cumulative(params, 1, u), cum1[u])

    if max_coset_weight >= 2 and d >= 5:
        want2 = cen.per_weight[2].spectrum
        for variant in spectra.variants_for("sigma_w2", params):
            for w in range(d - 2, n + 1):
                compare(2, w, f"sigma_w2[{variant}]", spectra.sigma_w2(params, w, variant), want2[w])
        full2 = spectra.full_spectrum(params, 2)
        for w in range(n + 1):
            compare(2, w, "full_spectrum[W=2]", full2[w], want2[w])
        cum2 = cen.cumulative_spectrum(2)
        for w in range(d - 2, n + 1):
            compare("<=2", w, "sigma_le2", spectra.sigma_le2(params, w), cum2[w])
        for u in range(d - 2, n + 1):
            compare("<=2", u, "cheung_cumulative[t_cap=2]", spectra.cheung_cumulative(params, 2, u), cum2[u])

    r3 = d == 5 and cen.covering_radius == 3
    if max_coset_weight >= 3 and r3:
        want3 = cen.per_weight[3].spectrum
        for variant in spectra.variants_for("sigma_w3", params):
            for w in range(3, n + 1):
                compare(
                    3, w, f"sigma_w3[{variant}]",
                    spectra.sigma_w3(params, w, variant, covering_radius=3), want3[w],
                )
        full3 = spectra.full_spectrum(params, 3, covering_radius=3)
        for w in range(n + 1):
            compare(3, w, "full_spectrum[W=3]", full3[w], want3[w])

    # structural invariants of the census itself
    compare("all", -1, "coset_count_total",
            sum(c.coset_count for c in cen.per_weight.values()), q ** (n - k))
    for wt, cls in sorted(cen.per_weight.items()):
        compare(wt, -1, "coset_mass", sum(cls.spectrum), cls.coset_count * q**k)
        for w in range(wt):
            compare(wt, w, "below_weight_zero", cls.spectrum[w], 0)
        if wt <= t:
            compare(wt, wt, "unique_leader", cls.spectrum[wt], cls.coset_count)
    for w in range(n + 1):
        compare("all", w, "census_totality",
                sum(cls.spectrum[w] for cls in cen.per_weight.values()),
                binom(n, w) * (q - 1) ** w)

    # formula-side masses and, for covering radius 3, totality
    if max_coset_weight >= 1 and d >= 3:
        compare(1, -1, "formula_mass[W=1]",
                sum(spectra.full_spectrum(params, 1)), n * (q - 1) * q**k)
    if max_coset_weight >= 2 and d >= 5:
        compare(2, -1, "formula_mass[W=2]",
                sum(spectra.full_spectrum(params, 2)), binom(n, 2) * (q - 1) ** 2 * q**k)
    if max_coset_weight >= 3 and r3:
        from .codes import sphere_volume

        compare(3, -1, "formula_mass[W=3]",
                sum(spectra.full_spectrum(params, 3, covering_radius=3)),
                (q ** (n - k) - sphere_volume(n, q, 2)) * q**k)
        fulls = [spectra.full_spectrum(params, 0), spectra.full_spectrum(params, 1),
                 spectra.full_spectrum(params, 2),
                 spectra.full_spectrum(params, 3, covering_radius=3)]
        for w in range(n + 1):
            compare("all", w, "formula_totality",
                    sum(fs[w] for fs in fulls), binom(n, w) * (q - 1) ** w)

    return RunReport(
        invocation=f"verify n={n} k={k} q={q} (d={d}, t={t}) "
                   f"max_coset_weight={max_coset_weight} workers={workers}",
        status="pass" if not mismatches else "fail",
        mismatches=mismatches,
        checks=checks,
        sources=len(sources),
        seconds=time.perf_counter() - t0,
        census=cen,
    )


def render_csv(spectrum: Spectrum) -> str:
    lines = ["w,count"] + [f"{w},{c}" for w, c in enumerate(spectrum)]
    return "\n".join(lines) + "\n"


def render_json(params: CodeParams, coset_weight: int, spectrum: Spectrum) -> str:
    payload = {
        "q": params.q,
        "n": params.n,
        "k": params.k,
        "d": params.d,
        "coset_weight": coset_weight,
        "spectrum": [str(c) for c in spectrum],
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_compute(args: argparse.Namespace) -> int:
    try:
        params = make_params(args.n, args.k, args.q)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    cov = None
    if args.coset_weight == 3:
        if params.d != 5:
            print("error: weight-3 coset spectra are only available for d = 5 (k = n - 4)",
                  file=sys.stderr)
            return EXIT_USAGE
        try:
            cov = oracle.covering_radius(build_code(params))
        except oracle.BudgetExceededError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_BUDGET
    try:
        spectrum = spectra.full_spectrum(params, args.coset_weight, covering_radius=cov)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = (
        render_csv(spectrum)
        if args.format == "csv"
        else render_json(params, args.coset_weight, spectrum)
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        params = make_params(args.n, args.k, args.q)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_verify(params, max_coset_weight=args.max_coset_weight, workers=args.workers)
    except oracle.BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    cen = report.census
    assert cen is not None
    print(report.invocation)
    print(
        f"census: {params.q ** params.n} vectors in {params.q ** (params.n - params.k)} "
        f"cosets, covering radius {cen.covering_radius}"
    )
    counts = ", ".join(f"W={wt}: {cls.coset_count}" for wt, cls in sorted(cen.per_weight.items()))
    print(f"cosets by weight: {counts}")
    print(f"compared {report.checks} values across {report.sources} surfaces")
    for m in report.mismatches[:50]:
        print(f"  MISMATCH {m}")
    if len(report.mismatches) > 50:
        print(f"  ... and {len(report.mismatches) - 50} more")
    print(f"status: {report.status} ({report.seconds:.2f} s)")
    return EXIT_OK if report.status == "pass" else EXIT_FAIL


def _cmd_identities(args: argparse.Namespace) -> int:
    if args.max_w > MAX_IDENTITY_W:
        print(f"error: --max-w is capped at {MAX_IDENTITY_W}", file=sys.stderr)
        return EXIT_USAGE
    results = identities.run_all(args.max_w, args.max_q)
    ok = True
    for name, failures in results.items():
        status = "pass" if not failures else "FAIL"
        print(f"{name}: {status}")
        for line in failures[:20]:
            print(f"  {line}")
        ok = ok and not failures
    print(f"status: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdscosets",
        description="Exact weight spectra of MDS code cosets, verified by enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="spectrum of one coset-weight class")
    p_compute.add_argument("--q", type=int, required=True, help="field order (prime power, 2..32)")
    p_compute.add_argument("--n", type=int, required=True, help="code length")
    p_compute.add_argument("--k", type=int, required=True, help="code dimension")
    p_compute.add_argument("--coset-weight", type=int, required=True, choices=(0, 1, 2, 3))
    p_compute.add_argument("--format", choices=("csv", "json"), default="csv")
    p_compute.add_argument("--out", help="write here instead of stdout")
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser("verify", help="compare every closed form against the census")
    p_verify.add_argument("--q", type=int, required=True)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--max-coset-weight", type=int, default=3, choices=(0, 1, 2, 3))
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    p_ident = sub.add_parser("identities", help="run the binomial identity sweeps")
    p_ident.add_argument("--max-w", type=int, default=40)
    p_ident.add_argument("--max-q", type=int, default=9)
    p_ident.set_defaults(func=_cmd_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
