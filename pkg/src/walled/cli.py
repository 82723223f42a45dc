"""Command-line front end: ``walled <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
from threadpoolctl import threadpool_limits

from .irreps import (
    DegenerateGramError,
    EmbeddingContext,
    basis_labels,
    degenerate_basis,
    generator_labels,
    generator_perms,
    gram,
)
from .multiplicity import checksum, inventory
from .permgroup import Partition, enumerate_sab

SCHEMA = "walled-irreps/1"
EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class RunConfig:
    n: int | None = None
    d: int | None = None
    alpha: Partition | None = None
    tolerance: float = 1e-8
    out: str | None = None
    samples: int = 50
    grid: int = 400
    extra: dict[str, Any] = field(default_factory=dict)

    def validate(self, need_d: bool = True) -> None:
        if self.n is None or self.n < 2:
            raise ValueError("n must be given and at least 2")
        if need_d and (self.d is None or self.d < 2):
            raise ValueError("d must be given and at least 2")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


ZERO_SNAP = 1e-12


def fmt_number(x: float, scale: float = 1.0):
    """12 significant digits; integral values come out as ints.

    Values below ``1e-12 * scale`` in magnitude are rounding noise and print as 0.
    """
    x = float(x)
    if abs(x) < ZERO_SNAP * max(scale, 1.0):
        return 0
    if x.is_integer() and abs(x) < 2**53:
        return int(x)
    y = float(f"{x:.12g}")
    return int(y) if y.is_integer() else y


def fmt_matrix(mat: np.ndarray) -> list[list]:
    mat = np.asarray(mat)
    scale = float(np.max(np.abs(mat))) if mat.size else 1.0
    return [[fmt_number(v, scale) for v in row] for row in mat]


_FLAT_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def _dump(obj) -> str:
    """Indented JSON with innermost lists (matrix rows, labels) kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)


def read_config(path: str) -> dict[str, str]:
    """Parse a ``key = value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def _threads() -> int | None:
    raw = os.environ.get("WALLED_THREADS")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"WALLED_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("WALLED_THREADS must be at least 1")
    return value


def _cap_threads(count: int | None) -> None:
    """Limit BLAS/OpenMP pools; the library itself runs single-threaded."""
    if count is not None:
        threadpool_limits(count)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walled", description=__doc__)
    parser.add_argument("--config", help="key=value file; command-line flags take precedence")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, d=True, alpha=False):
        p.add_argument("--n", type=int)
        if d:
            p.add_argument("--d", type=int)
        if alpha:
            p.add_argument("--alpha", type=str, help="partition of n-2, e.g. 2,1")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("irreps", help="matrices of the generators in each irrep")
    common(p, alpha=True)
    p.add_argument("--generators", action="store_true", help="emit generator images (default)")

    p = sub.add_parser("gram", help="Gram matrix Q(alpha), its rank and inverse")
    common(p, alpha=True)

    p = sub.add_parser("mult", help="irrep inventory with multiplicities")
    common(p)

    p = sub.add_parser("verify", help="compare against the dense oracle")
    common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("ppt-region", help="PPT feasibility of n=3 Young projector mixtures")
    p.add_argument("--d", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--out")
    p.add_argument("--spectrum", help="a_lambda1,a_lambda2: print the spectrum of one mixture")

    p = sub.add_parser("classes", help="split S(n) into the S_ab classes")
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    file_values = read_config(args.config) if args.config else {}
    merged: dict[str, Any] = dict(file_values)
    for key, value in vars(args).items():
        if value is not None and value is not False and key not in ("command", "config"):
            merged[key] = value
    cfg = RunConfig()
    try:
        for key in ("n", "d", "samples", "grid"):
            if key in merged:
                setattr(cfg, key, int(merged[key]))
        if "tolerance" in merged:
            cfg.tolerance = float(merged["tolerance"])
        if merged.get("alpha"):
            cfg.alpha = Partition.parse(str(merged["alpha"]))
    except ValueError as exc:
        raise UsageError(str(exc))
    cfg.out = merged.get("out")
    cfg.extra = {k: v for k, v in merged.items() if k not in ("n", "d", "samples", "grid", "tolerance", "alpha", "out")}
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _alphas(cfg: RunConfig, ctx: EmbeddingContext) -> list[Partition]:
    if cfg.alpha is None:
        return ctx.partitions()
    if cfg.alpha.weight != ctx.n - 2:
        raise ValueError(f"alpha {cfg.alpha} is not a partition of n-2 = {ctx.n - 2}")
    return [cfg.alpha]


def cmd_irreps(cfg: RunConfig) -> int:
    cfg.validate()
    ctx = EmbeddingContext(cfg.n, cfg.d)
    blocks = []
    for alpha in _alphas(cfg, ctx):
        basis = degenerate_basis(alpha, ctx)
        if not basis.index:
            continue
        mats = {
            label: fmt_matrix(basis.element(p))
            for label, p in zip(generator_labels(ctx.n), generator_perms(ctx.n))
        }
        blocks.append(
            {
                "alpha": list(alpha),
                "dimension": len(basis.index),
                "basis": [list(x) for x in basis.labels],
                "reduced": len(basis.index) < len(basis_labels(alpha, ctx)),
                "matrices": mats,
            }
        )
    doc: dict[str, Any] = {"schema": SCHEMA, "n": ctx.n, "d": ctx.d}
    if cfg.alpha is not None and blocks:
        doc.update(blocks[0])
    else:
        doc["irreps"] = blocks
    _emit(_dump(doc), cfg.out)
    return EXIT_OK


def cmd_gram(cfg: RunConfig) -> int:
    cfg.validate()
    ctx = EmbeddingContext(cfg.n, cfg.d)
    out = []
    for alpha in _alphas(cfg, ctx):
        g = gram(alpha, ctx)
        out.append(
            {
                "alpha": list(alpha),
                "Q": fmt_matrix(g.Q),
                "rank": g.rank,
                "min_eigenvalue": fmt_number(g.min_eig),
                "D": fmt_matrix(g.D) if g.D is not None else None,
            }
        )
    doc: dict[str, Any] = {"schema": SCHEMA, "n": ctx.n, "d": ctx.d}
    if cfg.alpha is not None:
        doc.update(out[0])
    else:
        doc["grams"] = out
    _emit(_dump(doc), cfg.out)
    return EXIT_OK


def cmd_mult(cfg: RunConfig) -> int:
    cfg.validate()
    rows = inventory(cfg.n, cfg.d)
    table = [
        {
            "label": str(r.label),
            "alpha": list(r.label.alpha),
            "sector": r.sector,
            "dim": r.dimension,
            "mult": r.multiplicity,
            "product": r.product,
        }
        for r in rows
    ]
    total = checksum(rows)
    expected = cfg.d**cfg.n
    status = "OK" if total == expected else "MISMATCH"
    text = _dump({"schema": SCHEMA, "n": cfg.n, "d": cfg.d, "inventory": table})
    text += f"\nchecksum {total} = {cfg.d}^{cfg.n} {status}" if status == "OK" else (
        f"\nchecksum {total} != {cfg.d}^{cfg.n} = {expected} {status}"
    )
    _emit(text, cfg.out)
    return EXIT_OK if status == "OK" else EXIT_VERIFY


def cmd_verify(cfg: RunConfig) -> int:
    from .oracle import verify

    cfg.validate()
    samples = None if cfg.extra.get("exhaustive") else cfg.samples
    results = verify(cfg.n, cfg.d, samples=samples, seed=int(cfg.extra.get("seed", 0)), tol=cfg.tolerance)
    lines = [f"{'alpha':<12}{'check':<10}{'count':>6}  {'max error':>12}  result"]
    for r in results:
        lines.append(
            f"{str(r.alpha):<12}{r.check:<10}{r.count:>6}  {r.error:>12.3e}  {'pass' if r.passed else 'FAIL'}"
        )
    ok = all(r.passed for r in results)
    lines.append("all checks passed" if ok else "verification FAILED")
    _emit("\n".join(lines), cfg.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_ppt(cfg: RunConfig) -> int:
    from .ppt import ProjectorMixture, ppt_region, transposed_spectrum

    if cfg.d is None or cfg.d <= 2:
        raise ValueError("ppt-region needs --d greater than 2")
    spec = cfg.extra.get("spectrum")
    if spec:
        try:
            a1, a2 = (float(x) for x in str(spec).split(","))
        except ValueError:
            raise UsageError("--spectrum expects two numbers a1,a2")
        a3 = 1.0 - a1 - a2
        if min(a1, a2) < 0 or a3 < -1e-12:
            raise ValueError("a_lambda1, a_lambda2 must be non-negative with sum at most 1")
        mix = ProjectorMixture.from_trace_weights(cfg.d, (a1, a2, max(a3, 0.0)))
        lines = ["eigenvalue,multiplicity"]
        lines += [f"{fmt_number(v)},{k}" for v, k in transposed_spectrum(mix)]
        _emit("\n".join(lines), cfg.out)
        return EXIT_OK
    region = ppt_region(cfg.d, cfg.grid)
    fh = open(cfg.out, "w", newline="", encoding="utf-8") if cfg.out else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["a_lambda1", "a_lambda2", "feasible", "min_eig"])
        for (a1, a2, _), ok, lam in zip(region.points, region.feasible, region.min_eig):
            writer.writerow([fmt_number(a1), fmt_number(a2), int(ok), fmt_number(lam)])
    finally:
        if cfg.out:
            fh.close()
    return EXIT_OK


def cmd_classes(cfg: RunConfig) -> int:
    cfg.validate(need_d=False)
    classes = enumerate_sab(cfg.n)
    doc = {
        "schema": SCHEMA,
        "n": cfg.n,
        "classes": [
            {
                "a": key.a,
                "b": key.b,
                "label": str(key),
                "members": [p.cycle_string() for p in sorted(members)],
            }
            for key, members in classes.items()
        ],
    }
    _emit(_dump(doc), cfg.out)
    return EXIT_OK


COMMANDS = {
    "irreps": cmd_irreps,
    "gram": cmd_gram,
    "mult": cmd_mult,
    "verify": cmd_verify,
    "ppt-region": cmd_ppt,
    "classes": cmd_classes,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _cap_threads(_threads())
        cfg = _config(args)
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ValueError, DegenerateGramError, OSError) as exc:
        print(f"walled: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
