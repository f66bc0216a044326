"""Command-line front end: ``hzeta eval``, ``hzeta verify`` and ``hzeta table``.

Exit codes: 0 success, 1 verification failure, 2 domain or pole error,
3 accuracy non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import continuation as cont
from . import h_series as hs
from . import identities as ih
from .context import AccuracyError, ConditioningWarning, DomainError, PoleError, PrecisionContext
from .quadrature import T, log_tangent_integral
from .special_functions import hurwitz_zeta, riemann_zeta

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3

# Tolerances tighter than this cannot be met by double-based quadrature;
# --tol below it still applies in full to identity comparisons.
_CTX_TOL_FLOOR = 1e-13
_MAX_ROWS = 100_000
_EPS = 2.0**-52

Value = float | complex


@dataclass(frozen=True)
class CliConfig:
    """Shell options; maps one-to-one onto a PrecisionContext plus formatting."""

    precision_mode: str = "double"
    max_terms: int = 10**7
    tol: float | None = None
    output_format: str = "text"
    output_path: str | None = None

    def context(self) -> PrecisionContext:
        kw: dict = {"max_terms": self.max_terms}
        if self.tol is not None:
            t = max(self.tol, _CTX_TOL_FLOOR)
            kw.update(tol_abs=t, tol_rel=t)
        return PrecisionContext.for_mode(self.precision_mode, **kw)

    @property
    def digits(self) -> int:
        """Significant digits for the current output format."""
        if self.output_format == "text":
            return 12
        return 34 if self.precision_mode == "high" else 17


# Argument parsing --------------------------------------------------------------


def parse_number(text: str) -> Value:
    """Parse ``2``, ``-0.5``, ``2+3i`` or ``2+3j`` into a float or complex."""
    t = text.strip().replace(" ", "")
    try:
        return float(t)
    except ValueError:
        pass
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        raise DomainError(f"not a number: {text!r}", text) from None


def parse_range(text: str, integer: bool) -> tuple[float, float]:
    """``a..b`` with a <= b."""
    parts = text.split("..")
    if len(parts) != 2:
        raise DomainError(f"range must look like a..b, got {text!r}", text)
    try:
        lo, hi = (int(p) if integer else float(p) for p in parts)
    except ValueError:
        raise DomainError(f"bad range bounds in {text!r}", text) from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise DomainError(f"range needs finite a <= b, got {text!r}", text)
    return lo, hi


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0:
        raise DomainError("step must be positive", step)
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    if count > _MAX_ROWS:
        raise DomainError(f"range has {count} rows; limit is {_MAX_ROWS}", count)
    # multiply rather than accumulate so row(r) and row(hi - r) hit the same points
    return [min(lo + i * step, hi) for i in range(count)]


# eval --------------------------------------------------------------------------


def _real_arg(v: Value, name: str) -> float:
    if isinstance(v, complex):
        if v.imag != 0:
            raise DomainError(f"{name} must be real", v)
        return v.real
    return v


def _rounding(v: Value) -> float:
    return 64 * _EPS * abs(v)


def _eval_zeta_h(args, ctx):
    r = cont.zeta_h(args[0], ctx, full=True)
    return r.value, r.error, r.method


def _eval_zeta(args, ctx):
    v = riemann_zeta(args[0], ctx)
    return v, _rounding(v), "euler_maclaurin"


def _eval_hurwitz(args, ctx):
    x = _real_arg(args[1], "x")
    v = hurwitz_zeta(args[0], x, ctx)
    return v, _rounding(v), "euler_maclaurin"


def _eval_T(args, ctx):
    r = T(_real_arg(args[0], "r"), ctx, full=True)
    return float(r.value), float(r.error), "tanh_sinh"


def _eval_G(args, ctx):
    r = cont.G(args[0], ctx, full=True)
    return r.value, r.error, r.method


def _eval_L_sin(args, ctx):
    n = _real_arg(args[0], "n")
    if n <= 0:
        raise DomainError("L_sin needs n > 0", n)
    r = log_tangent_integral(lambda x: np.sin(4 * n * x), ctx, oscillation=int(math.ceil(n)))
    return float(r.value), float(r.error), "tanh_sinh"


def _eval_w(args, ctx):
    y = _real_arg(args[0], "y")
    if y < 0:
        raise DomainError("w(y) needs y >= 0", y)
    r = hs.h_kernel_sum((y / (2 * math.pi)) ** 2, ctx, full=True)
    return float(complex(r.value).real), float(r.error), "series"


EvalFn = Callable[[Sequence[Value], PrecisionContext], tuple[Value, float, str]]

EVAL_FUNCTIONS: dict[str, tuple[tuple[str, ...], EvalFn, str]] = {
    "zeta_h": (("s",), _eval_zeta_h, "sum h_n n^-s and its continuation"),
    "zeta": (("s",), _eval_zeta, "Riemann zeta(s)"),
    "hurwitz_zeta": (("s", "x"), _eval_hurwitz, "Hurwitz zeta(s, x)"),
    "T": (("r",), _eval_T, "int_0^{r pi} log(tan x) dx, 0 <= r <= 1/2"),
    "G": (("z",), _eval_G, "int_0^{pi/2} zeta(z, 2x/pi) log(tan x) dx"),
    "L_sin": (("n",), _eval_L_sin, "int_0^{pi/2} sin(4nx) log(tan x) dx"),
    "w": (("y",), _eval_w, "sum h_n / (n^2 + (y/2pi)^2)"),
}


def _json_value(v: Value):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def cmd_eval(function: str, raw_args: Sequence[str], config: CliConfig) -> tuple[int, str]:
    """Evaluate one function; returns ``(exit_code, text)``."""
    if function not in EVAL_FUNCTIONS:
        raise DomainError(f"unknown function {function!r}; choose from {', '.join(EVAL_FUNCTIONS)}", function)
    names, fn, _ = EVAL_FUNCTIONS[function]
    if len(raw_args) != len(names):
        raise DomainError(f"{function} takes {len(names)} argument(s): {' '.join(names)}", len(raw_args))
    args = [parse_number(a) for a in raw_args]
    ctx = config.context()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConditioningWarning)
        value, error, method = fn(args, ctx)
    notes = [str(w.message) for w in caught if issubclass(w.category, ConditioningWarning)]
    d = config.digits
    call = f"{function}({', '.join(raw_args)})"
    if config.output_format == "json":
        doc = {
            "function": function,
            "args": list(raw_args),
            "value": _json_value(value),
            "error": error,
            "method": method,
            "warnings": notes,
        }
        return EXIT_OK, json.dumps(doc, ensure_ascii=False) + "\n"
    if config.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(("function", "args", "value", "error", "method"))
        w.writerow((function, " ".join(raw_args), ih.format_number(value, d), f"{error:.3g}", method))
        return EXIT_OK, buf.getvalue()
    lines = [f"{call} = {ih.format_number(value, d)}", f"  error estimate: {error:.2g}", f"  method: {method}"]
    lines += [f"  warning: {n}" for n in notes]
    return EXIT_OK, "\n".join(lines) + "\n"


# verify ------------------------------------------------------------------------


def _text_report(result: ih.SuiteResult) -> str:
    rows = []
    for r in result.reports:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items())
        rows.append(
            f"{r.status.upper():5s} {r.id:22s} {params:28s} "
            f"abs_err={r.abs_err:.2e} rel_err={r.rel_err:.2e} tol={r.tol:.0e}"
        )
    rows.append(result.summary_line())
    return "\n".join(rows) + "\n"


def cmd_verify(pattern: str | None, config: CliConfig, jobs: int = 1) -> tuple[int, str]:
    """Run the identity suite; exit 0 iff every instance passes."""
    result = ih.run_suite(pattern, config.context(), jobs=jobs, tol=config.tol)
    if not result.reports:
        raise DomainError(f"no identity matches {pattern!r}", pattern)
    summary = {
        "families": result.families,
        "reports": len(result.reports),
        "passed": result.passed,
        "failures": result.failed,
        "skipped": result.skipped,
    }
    if config.output_format == "json":
        text = ih.reports_to_json(result.reports, summary) + "\n"
    elif config.output_format == "csv":
        text = ih.reports_to_csv(result.reports, config.digits)
    else:
        text = _text_report(result)
    return (EXIT_OK if result.ok else EXIT_VERIFY), text


# table -------------------------------------------------------------------------


def _table_zeta_h_even(rng, step, ctx):
    lo, hi = parse_range(rng or "1..5", integer=True)
    if lo < 1:
        raise DomainError("zeta_h_even needs m >= 1", lo)
    cor2 = ih.get_identity("COR2").evaluate
    rows = []
    for m in range(lo, hi + 1):
        lhs, rhs = cor2({"m": m}, ctx)
        rows.append((m, lhs, rhs, abs(lhs - rhs)))
    return ("m", "zeta_h_2m", "closed_form", "abs_diff"), rows


def _table_alpha_beta(rng, step, ctx):
    lo, hi = parse_range(rng or "1..6", integer=True)
    if lo < 1:
        raise DomainError("alpha_beta needs n >= 1", lo)
    rows = []
    for n in range(lo, hi + 1):
        res = cont.recursion_residual(n, ctx) if n >= 2 else None
        rows.append((n, cont.alpha(n, ctx), cont.beta(n, ctx), res))
    return ("n", "alpha", "beta", "recursion_residual"), rows


def _table_residues(rng, step, ctx):
    lo, hi = parse_range(rng or "0..3", integer=True)
    if lo < 0:
        raise DomainError("pole index k must be >= 0", lo)
    rows = []
    for k in range(lo, hi + 1):
        p = cont.pole_info(k, ctx, numeric=True)
        exact = "log2+γ/2" if p.order == 2 else str(p.exact_residue)
        lead = p.leading_coefficient if p.order == 2 else None
        rows.append((p.location, p.order, lead, exact, p.residue, complex(p.numeric_residue).real))
    return ("location", "order", "leading", "residue", "residue_value", "numeric_residue"), rows


def _table_T_curve(rng, step, ctx):
    lo, hi = parse_range(rng or "0..0.5", integer=False)
    if lo < 0 or hi > 0.5:
        raise DomainError("T_curve needs 0 <= r <= 0.5", (lo, hi))
    return ("r", "T"), [(r, T(r, ctx)) for r in _grid(lo, hi, step or 0.01)]


def _table_critical_line(rng, step, ctx):
    lo, hi = parse_range(rng or "0..10", integer=False)
    rows = []
    for t in _grid(lo, hi, step or 0.5):
        v = complex(cont.zeta_h(complex(0.5, t), ctx))
        rows.append((t, v.real, v.imag))
    return ("t", "re_zeta_h", "im_zeta_h"), rows


TABLES: dict[str, Callable] = {
    "zeta_h_even": _table_zeta_h_even,
    "alpha_beta": _table_alpha_beta,
    "residues": _table_residues,
    "T_curve": _table_T_curve,
    "critical_line": _table_critical_line,
}


def _cell(v, digits: int, text: bool) -> str:
    if v is None:
        return "-" if text else ""
    if isinstance(v, (float, complex)):
        return ih.format_number(v, digits)
    return str(v)


def cmd_table(kind: str, rng: str | None, config: CliConfig, step: float | None = None) -> tuple[int, str]:
    """Emit a value table; columns depend on ``kind``."""
    if kind not in TABLES:
        raise DomainError(f"unknown table {kind!r}; choose from {', '.join(TABLES)}", kind)
    columns, rows = TABLES[kind](rng, step, config.context())
    d = config.digits
    if config.output_format == "json":
        doc = {"kind": kind, "columns": list(columns), "rows": [[_json_value(v) for v in row] for row in rows]}
        return EXIT_OK, json.dumps(doc, ensure_ascii=False) + "\n"
    if config.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(v, d, False) for v in row])
        return EXIT_OK, buf.getvalue()
    cells = [list(columns)] + [[_cell(v, d, True) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in cells]
    return EXIT_OK, "\n".join(lines) + "\n"


# entry point -------------------------------------------------------------------


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", choices=("double", "high"), default="double",
                        help="double, or high for double-double summation")
    common.add_argument("--max-terms", type=_positive_int, default=10**7, help="series truncation cap")
    common.add_argument("--tol", type=_positive_float, default=None,
                        help="target tolerance; for verify it replaces every identity tolerance")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="output_format")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="hzeta",
        description="Evaluate the h-zeta function and related integrals, and verify closed-form identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate one function")
    p_eval.add_argument("function", choices=tuple(EVAL_FUNCTIONS))
    p_eval.add_argument("args", nargs="*", help="arguments; complex numbers like 2+3i")

    p_ver = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p_ver.add_argument("--filter", default=None, help="glob or comma-separated globs over identity ids")
    p_ver.add_argument("--jobs", type=_positive_int, default=1, help="parallel worker cap")

    p_tab = sub.add_parser("table", parents=[common], help="emit a value table")
    p_tab.add_argument("kind", choices=tuple(TABLES))
    p_tab.add_argument("range", nargs="?", default=None, help="a..b (integers for index tables)")
    p_tab.add_argument("--step", type=_positive_float, default=None, help="grid step for T_curve and critical_line")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(args.precision, args.max_terms, args.tol, args.output_format, args.out)
    try:
        if args.command == "eval":
            code, text = cmd_eval(args.function, args.args, config)
        elif args.command == "verify":
            code, text = cmd_verify(args.filter, config, args.jobs)
        else:
            code, text = cmd_table(args.kind, args.range, config, args.step)
    except PoleError as exc:
        if exc.info is not None:
            print(f"error: pole at {exc.info.describe()}", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    _emit(text, config.output_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
