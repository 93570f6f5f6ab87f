"""Command-line interface: eval, closed, genfun, verify and table.

Every command writes one document to stdout (JSON by default) and uses the
exit codes 0 (ok), 1 (a verification identity failed) and 2 (bad input).
Defaults for precision and truncation can be overridden with the
PMLV_PRECISION and PMLV_T environment variables.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, TextIO, Tuple

import mpmath

from .constants import MAX_PRECISION, MIN_PRECISION
from .lvalues import (
    LValueSpec,
    bernoulli_S_k_even,
    closed_S_k,
    double_zeta_remark,
    genfun_P,
    genfun_P2,
    genfun_S1,
    genfun_U,
    oracle_eval,
)
from .symbolic import normalize_even_zetas, numeric_eval
from .verify import SUITES, run_suite

COMMANDS = ("eval", "closed", "genfun", "verify", "table")
MAX_T = 10**8
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _count(raw: str) -> int:
    """Integer, also accepting integral scientific notation such as 1e6."""
    try:
        return int(raw)
    except ValueError:
        value = float(raw)
        if not value.is_integer():
            raise ValueError(raw)
        return int(value)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return _count(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


@dataclass
class JobConfig:
    command: str
    N: int = 2
    M: int = 2
    weights: Optional[Tuple[int, ...]] = None
    n: Optional[int] = None
    k: Optional[int] = None
    T: int = 10**6
    precision: int = 30
    mode: str = "exact"
    output: str = "json"
    # command specific
    form: Optional[str] = None
    normalize: bool = False
    series: str = "P"
    order: Optional[int] = None
    suite: str = "all"
    max_k: int = 3
    jobs: int = 1
    n_values: List[int] = field(default_factory=lambda: [1, 2, 3])
    k_values: List[int] = field(default_factory=lambda: [1, 2, 3])
    with_oracle: bool = False
    timing: bool = True

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not MIN_PRECISION <= self.precision <= MAX_PRECISION:
            raise UsageError(f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}]")
        if not 10 <= self.T <= MAX_T:
            raise UsageError(f"T must lie in [10, {MAX_T}]")
        if self.N < 1 or self.M < 1:
            raise UsageError("N and M must be positive")
        if self.mode not in ("exact", "numeric"):
            raise UsageError("mode must be exact or numeric")
        if self.output not in ("json", "csv", "text"):
            raise UsageError("output must be json, csv or text")
        if self.command == "eval" and self.weights is None:
            raise UsageError("eval needs --weights")
        if self.command == "closed" and self.weights is None and (self.n is None or self.k is None):
            raise UsageError("closed needs --n and --k (or --weights for a double zeta value)")
        if self.command == "genfun" and (self.n is None or self.order is None):
            raise UsageError("genfun needs --n and --order")
        if self.command == "verify" and self.suite not in (*SUITES, "all"):
            raise UsageError(f"suite must be one of {sorted(SUITES)} or all")


def _complex_json(z, digits: int = 25) -> dict:
    with mpmath.workdps(digits + 5):
        z = mpmath.mpc(z)
        return {"re": mpmath.nstr(z.real, digits), "im": mpmath.nstr(z.imag, digits)}


def _inputs(cfg: JobConfig) -> dict:
    keys = {
        "eval": ("N", "M", "weights", "T", "precision"),
        "closed": ("n", "k", "weights", "form", "normalize", "precision"),
        "genfun": ("N", "M", "n", "order", "mode", "series", "precision"),
        "verify": ("suite", "max_k", "jobs", "T", "precision"),
        "table": ("N", "M", "n_values", "k_values", "T", "precision", "with_oracle"),
    }[cfg.command]
    data = asdict(cfg)
    return {key: data[key] for key in keys}


def _do_eval(cfg: JobConfig):
    spec = LValueSpec(cfg.N, cfg.M, cfg.weights)
    res = oracle_eval(spec, cfg.T, cfg.precision)
    result = _complex_json(res.value)
    result.update(convergence=spec.convergence, averaged=res.averaged, truncation=res.truncation)
    with mpmath.workdps(cfg.precision + 5):
        text = mpmath.nstr(res.value, cfg.precision)
    rows = [("re", result["re"]), ("im", result["im"]), ("error_estimate", repr(res.error_estimate))]
    return result, res.error_estimate, text, rows, EXIT_OK


def _do_closed(cfg: JobConfig):
    if cfg.weights is not None:
        w = cfg.weights
        if len(w) != 2 or 1 not in w or (w[0] == 1) == (w[1] == 1) or max(w) % 2:
            raise UsageError("closed --weights supports (1, 2k) and (2k, 1) only")
        value = double_zeta_remark(max(w) // 2, "first" if w[0] == 1 else "second")
    elif cfg.form is not None:
        if cfg.n % 2:
            raise UsageError("--form needs an even n (the Bernoulli forms give S_k(2m))")
        value = bernoulli_S_k_even(cfg.n // 2, cfg.k, cfg.form)
    else:
        value = closed_S_k(cfg.n, cfg.k)
    if cfg.normalize:
        value = normalize_even_zetas(value)
    num = numeric_eval(value, cfg.precision)
    result = {"symbolic": value.to_json(), "numeric": _complex_json(num)}
    rows = [("rendered", value.render()), ("re", result["numeric"]["re"]), ("im", result["numeric"]["im"])]
    return result, None, value.render(), rows, EXIT_OK


def _do_genfun(cfg: JobConfig):
    n, order = cfg.n, cfg.order
    if cfg.series == "P2":
        s = genfun_P2(n, order)
    elif cfg.series == "U":
        s = genfun_U(cfg.N, cfg.M, n, order, cfg.mode, cfg.precision)
    elif cfg.series == "S1":
        s = genfun_S1(cfg.M, n, order, cfg.mode, cfg.precision)
    elif cfg.series == "P":
        s = genfun_P(cfg.N, cfg.M, n, order, cfg.mode, cfg.precision)
    else:
        raise UsageError("series must be one of U, S1, P, P2")
    coeffs = []
    rows = []
    lines = []
    for degree, c in enumerate(s):
        if hasattr(c, "render"):
            entry = {"degree": degree, "symbolic": c.to_json()}
            shown = c.render()
        else:
            entry = {"degree": degree, **_complex_json(c)}
            with mpmath.workdps(cfg.precision + 5):
                shown = mpmath.nstr(c, cfg.precision)
        coeffs.append(entry)
        rows.append((degree, shown))
        lines.append(f"x^{degree}: {shown}")
    return {"coefficients": coeffs}, None, "\n".join(lines), rows, EXIT_OK


def _do_verify(cfg: JobConfig):
    kwargs = {"T": cfg.T} if cfg.T != 10**6 else {}
    results = run_suite(cfg.suite, cfg.max_k, cfg.jobs, precision=cfg.precision, **kwargs)
    failed = [r for r in results if not r.passed]
    result = {
        "passed": not failed,
        "total": len(results),
        "failed": [r.name for r in failed],
        "checks": [r.to_json() for r in results],
    }
    lines = [f"{'PASS' if r.passed else 'FAIL'} [{r.suite}] {r.name}" + (f"  gap={r.gap:.3e}" if r.gap is not None else "")
             for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} passed")
    rows = [(r.suite, r.name, r.passed, "" if r.gap is None else repr(r.gap)) for r in results]
    for r in failed:
        print(f"verification failed: {r.name} {r.detail}".rstrip(), file=sys.stderr)
    return result, None, "\n".join(lines), rows, EXIT_FAILED if failed else EXIT_OK


def _do_table(cfg: JobConfig):
    rows = []
    entries = []
    exact = cfg.N == 2 and cfg.M == 2
    for n in cfg.n_values:
        series = None if exact else genfun_P(cfg.N, cfg.M, n, n * max(cfg.k_values), "numeric", cfg.precision)
        for k in cfg.k_values:
            if exact:
                sym = closed_S_k(n, k)
                rendered = sym.render()
                value = numeric_eval(sym, cfg.precision)
            else:
                rendered = ""
                value = series[n * k]
            row = {"n": n, "k": k, "closed": rendered, **_complex_json(value)}
            if cfg.with_oracle:
                res = oracle_eval(LValueSpec.uniform(cfg.N, cfg.M, n, k), cfg.T, cfg.precision)
                row["oracle_re"] = mpmath.nstr(res.value.real, 20)
                row["oracle_im"] = mpmath.nstr(res.value.imag, 20)
                row["gap"] = float(abs(res.value - mpmath.mpc(value)))
            entries.append(row)
            rows.append(tuple(row.values()))
    header = tuple(entries[0].keys()) if entries else ()
    text = "\n".join(" ".join(str(x) for x in r) for r in [header] + rows)
    return {"rows": entries}, None, text, [header] + rows, EXIT_OK


_HANDLERS = {"eval": _do_eval, "closed": _do_closed, "genfun": _do_genfun, "verify": _do_verify, "table": _do_table}


def run(cfg: JobConfig, sink: TextIO = sys.stdout) -> int:
    """Execute one job and write its document to ``sink``; returns the exit status."""
    try:
        cfg.validate()
        start = time.perf_counter()
        result, err, text, rows, status = _HANDLERS[cfg.command](cfg)
        elapsed = (time.perf_counter() - start) * 1000
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output == "json":
        doc = {"command": cfg.command, "inputs": _inputs(cfg), "result": result}
        if err is not None:
            doc["error_estimate"] = err
        if cfg.timing:
            doc["runtime_ms"] = round(elapsed, 3)
        sink.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif cfg.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if cfg.command != "table":
            writer.writerow({"eval": ("field", "value"), "closed": ("field", "value"),
                             "genfun": ("degree", "coefficient"),
                             "verify": ("suite", "identity", "passed", "gap")}[cfg.command])
        writer.writerows(rows)
        sink.write(buf.getvalue())
    else:
        sink.write(text + "\n")
    return status


def _int_list(raw: str) -> List[int]:
    try:
        return [int(x) for x in raw.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def _T_arg(raw: str) -> int:
    try:
        return _count(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer such as 100000 or 1e5, got {raw!r}")


def _int_range(raw: str) -> List[int]:
    """'1-4' or '1,2,5'."""
    if "-" in raw and "," not in raw:
        lo, hi = raw.split("-", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {raw!r}")
    return _int_list(raw)


def build_parser() -> argparse.ArgumentParser:
    precision = _env_int("PMLV_PRECISION", 30)
    T = _env_int("PMLV_T", 10**6)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=precision, help="decimal digits (env PMLV_PRECISION)")
    common.add_argument("--T", type=_T_arg, default=T, help="truncation point (env PMLV_T)")
    common.add_argument("--output", choices=("json", "csv", "text"), default="json")
    common.add_argument("--no-timing", dest="timing", action="store_false",
                        help="omit runtime_ms so repeated runs give byte-identical JSON")

    parser = argparse.ArgumentParser(prog="pmlv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="brute-force oracle value")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--weights", type=_int_list, required=True, help="e.g. 1,2 (first weight on the smallest index)")

    p = sub.add_parser("closed", parents=[common], help="closed form of S_k(n) for N = M = 2")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--form", choices=("conv", "plethysm", "zeta"), help="Bernoulli form (n even)")
    p.add_argument("--normalize", action="store_true", help="rewrite even zetas as rational multiples of pi")
    p.add_argument("--weights", type=_int_list, help="1,2k or 2k,1 for the double zeta formulas")

    p = sub.add_parser("genfun", parents=[common], help="generating-function coefficients")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--series", choices=("U", "S1", "P", "P2"), default="P")
    p.add_argument("--mode", choices=("exact", "numeric"), default="exact")

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-k", dest="max_k", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("table", parents=[common], help="CSV-style grid of S_k(n)")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--n", dest="n_values", type=_int_range, default=[1, 2, 3], help="e.g. 1-4")
    p.add_argument("--k", dest="k_values", type=_int_range, default=[1, 2, 3], help="e.g. 1-3")
    p.add_argument("--oracle", dest="with_oracle", action="store_true", help="add an oracle column")
    return parser


def config_from_args(argv: Optional[Sequence[str]] = None) -> JobConfig:
    args = vars(build_parser().parse_args(argv))
    if args.get("weights") is not None:
        args["weights"] = tuple(args["weights"])
    return JobConfig(**args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
