"""Command line entry point: ``transpoly <verb> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__, report
from .cone import export_normaliz
from .ehrhart import DEFAULT_COMPOSITION_LIMIT
from .errors import ParameterError, TranspolyError
from .gorenstein import DEFAULT_BOUND
from .presentation import Presentation, enumerate_base

SCHEMA_ID = "transpoly.report/1"
OUTPUT_DIR_ENV = "TRANSPOLY_OUTPUT_DIR"
MAX_N = 8
MAX_BOUND = 4

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def parse_range(text: str, name: str) -> list[int]:
    """``"4"``, ``"3..6"`` or ``"3,5,7"`` to a sorted list of ints."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.update(range(int(lo), int(hi) + 1))
            elif part:
                out.add(int(part))
    except ValueError:
        raise ParameterError(f"cannot parse --{name} {text!r}") from None
    return sorted(out)


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_values: tuple[int, ...]
    i_selector: str
    shift_selector: str
    bound: int
    t_max: int | None
    fmt: str
    output: str | None
    unsafe: bool
    jobs: int

    def cases(self) -> list[Presentation]:
        if not self.n_values:
            raise ParameterError(f"empty n range {self.n_values}")
        out = []
        for n in self.n_values:
            if n > MAX_N and not self.unsafe:
                raise ParameterError(f"n <= {MAX_N} guard exceeded (n={n}); pass --unsafe")
            if n < 3:
                raise ParameterError(f"n >= 3 violated (n={n})")
            i_vals = (range(1, n - 1) if self.i_selector == "all"
                      else parse_range(self.i_selector, "i"))
            s_vals = (range(n) if self.shift_selector == "all"
                      else parse_range(self.shift_selector, "shift"))
            for i in i_vals:
                for s in s_vals:
                    out.append(Presentation(n, i, s))
        if not out:
            raise ParameterError("parameter selection yields no cases")
        return out

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": list(self.n_values), "i": self.i_selector, "shift": self.shift_selector,
            "bound": self.bound, "t_max": self.t_max, "unsafe": self.unsafe,
        }


def _run_cases(cfg: RunConfig, fn: Callable[[Presentation], dict[str, Any]]) -> list[dict[str, Any]]:
    cases = cfg.cases()
    if cfg.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(fn, cases))
    return [fn(p) for p in cases]


def build_report(cfg: RunConfig) -> dict[str, Any]:
    """Run the configured command and return the report payload."""
    limit = None if cfg.unsafe else DEFAULT_COMPOSITION_LIMIT
    if cfg.command in ("gorenstein", "verify"):
        if cfg.bound < 2:
            raise ParameterError(f"degree bound T >= 2 violated (T={cfg.bound})")
        if cfg.bound > MAX_BOUND and not cfg.unsafe:
            raise ParameterError(f"degree bound T <= {MAX_BOUND} guard exceeded; pass --unsafe")
    fn: Callable[[Presentation], dict[str, Any]]
    notes: list[str] = []
    if cfg.command == "facets":
        fn = report.facets_case
    elif cfg.command == "rays":
        fn = report.rays_case
    elif cfg.command == "hilbert":
        fn = partial(report.hilbert_case, t_max=cfg.t_max)
    elif cfg.command == "gorenstein":
        fn = partial(report.gorenstein_case, bound=cfg.bound)
    elif cfg.command == "verify":
        fn = partial(report.verify_case, bound=cfg.bound, t_max=cfg.t_max, limit=limit)
    else:
        raise ParameterError(f"unknown command {cfg.command!r}")
    cases = _run_cases(cfg, fn)
    for c in cases:
        for note in c.get("erratum_notes", []):
            if note not in notes:
                notes.append(note)
    payload: dict[str, Any] = {
        "schema": SCHEMA_ID,
        "version": __version__,
        "command": cfg.command,
        "config": cfg.as_dict(),
        "cases": cases,
        "overall_pass": all(c["pass"] for c in cases),
        "notes": notes,
    }
    if cfg.command == "verify":
        payload["n4_table"] = report.n4_table()
    return payload


def _flatten(case: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for k, v in case.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            flat.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            flat[key] = json.dumps(v, separators=(",", ":"))
        else:
            flat[key] = v
    return flat


def render(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = [_flatten(c) for c in payload["cases"]]
        fields: list[str] = []
        for r in rows:
            fields += [k for k in r if k not in fields]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    return render_text(payload)


def _fmt_value(v: Any) -> str:
    if isinstance(v, list):
        return "(" + ",".join(_fmt_value(x) for x in v) + ")"
    if isinstance(v, dict):
        return " ".join(f"{k}={_fmt_value(x)}" for k, x in v.items())
    return str(v)


def render_text(payload: dict[str, Any]) -> str:
    lines = [f"transpoly {payload['command']}"]
    if "n4_table" in payload:
        lines.append("n = 4 sigma normals (k, i): computed [printed]")
        for row in payload["n4_table"]:
            mark = f"  [printed {_fmt_value(row['printed'])}: erratum]" if row["erratum"] else ""
            lines.append(f"  k={row['k']} i={row['i']}: {_fmt_value(row['computed'])}{mark}")
    for case in payload["cases"]:
        p = case["params"]
        head = f"n={p['n']} i={p['i']} shift={p['shift']}: {'PASS' if case['pass'] else 'FAIL'}"
        lines.append(head)
        for k, v in case.items():
            if k not in ("params", "pass"):
                lines.append(f"  {k}: {_fmt_value(v)}")
    for note in payload["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"overall: {'PASS' if payload['overall_pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def resolve_output(path: str) -> Path:
    if not path:
        raise ParameterError("empty output path")
    out = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not out.is_absolute():
        out = Path(base) / out
    return out


def _add_common(p: argparse.ArgumentParser, default_shift: str) -> None:
    p.add_argument("--n", required=True, help="dimension: 4, 3..6 or 3,5")
    p.add_argument("--i", default="all", help="block parameter(s) or 'all'")
    p.add_argument("--shift", default=default_shift, help="cyclic shift(s) or 'all'")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("-o", "--output", default=None, help="write the report here")
    p.add_argument("--unsafe", action="store_true", help="lift desk-scale resource guards")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transpoly", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, shift in (("facets", "0"), ("rays", "0"), ("hilbert", "0"),
                        ("gorenstein", "0"), ("verify", "all")):
        sp = sub.add_parser(name)
        _add_common(sp, shift)
        sp.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="degree bound T")
        sp.add_argument("--t-max", type=int, default=None, help="series check order (default n+4)")
    ex = sub.add_parser("export", help="write base generators as a Normaliz input file")
    ex.add_argument("--n", required=True, type=int)
    ex.add_argument("--i", required=True, type=int)
    ex.add_argument("--shift", type=int, default=0)
    ex.add_argument("-o", "--output", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "export":
            p = Presentation(args.n, args.i, args.shift)
            path = resolve_output(args.output)
            base = enumerate_base(p)
            export_normaliz(base.elements, path)
            print(f"wrote {len(base)} x {p.n} matrix to {path}")
            return EXIT_OK
        cfg = RunConfig(
            command=args.command,
            n_values=tuple(parse_range(args.n, "n")),
            i_selector=args.i.strip(),
            shift_selector=args.shift.strip(),
            bound=args.bound,
            t_max=args.t_max,
            fmt=args.format,
            output=args.output,
            unsafe=args.unsafe,
            jobs=max(1, args.jobs),
        )
        payload = build_report(cfg)
    except TranspolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(payload, cfg.fmt)
    if cfg.output is not None:
        out = resolve_output(cfg.output)
        out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if payload["overall_pass"] else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
