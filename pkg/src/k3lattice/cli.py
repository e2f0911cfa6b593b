"""Command-line interface.

Output is deterministic: the JSON format renders with sorted keys, two-space
indent, and a trailing newline; the table format is a flattened view of the
same object. Inputs may be a file path, "-" for stdin, or inline JSON.

Exit codes: 0 for a decided result, 2 when a verdict is UNDECIDED or a search
reports NOT_FOUND, 1 for errors (bad input, config, or a failed aggregate
verification).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import catalog, elliptic, k3, lattices, qform
from .catalog import Claim3Input, SearchExhausted
from .embeddings import induced_gram, is_primitive, sublattice_from_json
from .lattices import aut_index_bound, aut_order_finite_abelian, discriminant_group
from .qform import BinaryForm, DiagonalTernaryForm, SearchLimits, UnaryForm

__all__ = ["RunConfig", "main", "load_config", "EXIT_OK", "EXIT_ERROR", "EXIT_UNDECIDED"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2

_CONFIG_ENV = "K3LATTICE_CONFIG"
_CONFIG_KEYS = ("format", "sieve_max", "search_bound", "claim3_bound")


class CliError(Exception):
    """User-facing error: message goes to stderr, process exits 1."""


@dataclass(frozen=True)
class RunConfig:
    """Effective settings: defaults, overridden by the JSON file named by
    K3LATTICE_CONFIG, overridden by command-line flags."""

    format: str = "json"
    sieve_max: int | None = None
    search_bound: int = qform.DEFAULT_SEARCH_BOUND
    claim3_bound: int = 50

    def __post_init__(self):
        if self.format not in ("json", "table"):
            raise CliError(f'format must be "json" or "table", got {self.format!r}')
        if self.search_bound < 1:
            raise CliError("search_bound must be positive")
        if self.claim3_bound < 1:
            raise CliError("claim3_bound must be positive")
        if self.sieve_max is not None and self.sieve_max < 2:
            raise CliError("sieve_max must be at least 2")

    def limits(self) -> SearchLimits:
        moduli = qform.DEFAULT_SIEVE_MODULI
        if self.sieve_max is not None:
            moduli = tuple(m for m in moduli if m <= self.sieve_max)
        return SearchLimits(sieve_moduli=moduli, search_bound=self.search_bound)


def load_config(environ, args=None) -> RunConfig:
    values: dict = {}
    path = environ.get(_CONFIG_ENV)
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read config file {path}: {exc}") from exc
        obj = _parse_json(raw, path)
        if not isinstance(obj, dict):
            raise CliError(f"config file {path} must hold a JSON object")
        for key in obj:
            if key not in _CONFIG_KEYS:
                raise CliError(f"unknown config key {key!r} in {path}")
        values.update(obj)
    if args is not None:
        for key in _CONFIG_KEYS:
            flag = getattr(args, key, None)
            if flag is not None:
                values[key] = flag
    for key in ("sieve_max", "search_bound", "claim3_bound"):
        if key in values and values[key] is not None:
            if not isinstance(values[key], int) or isinstance(values[key], bool):
                raise CliError(f"config value {key} must be an integer")
    return RunConfig(**values)


def _parse_json(raw: str, source: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CliError(
            f"invalid JSON in {source}: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def _read_json_argument(text: str):
    """A file path, "-" for stdin, or inline JSON (starts with { or [)."""
    if text == "-":
        return _parse_json(sys.stdin.read(), "<stdin>")
    if text.lstrip().startswith(("{", "[")):
        return _parse_json(text, "<inline>")
    try:
        with open(text, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {text}: {exc}") from exc
    return _parse_json(raw, text)


def _lattice_argument(obj):
    """A lattice JSON, or a sublattice JSON contributing its induced Gram."""
    if isinstance(obj, dict) and "ambient" in obj:
        sub = sublattice_from_json(obj)
        return induced_gram(sub), sub
    return lattices.lattice_from_json(obj), None


# ------------------------------------------------------------------ commands


def _cmd_lattice_info(args, cfg: RunConfig):
    lattice, sub = _lattice_argument(_read_json_argument(args.lattice))
    d = lattices.det(lattice)
    out = {
        "rank": lattice.rank,
        "gram": lattice.gram_rows(),
        "det": d,
        "signature": list(lattices.signature(lattice)),
    }
    if d != 0:
        out["disc_invariant_factors"] = list(discriminant_group(lattice).invariant_factors)
    if sub is not None:
        out["primitive"] = is_primitive(sub)
    return out, EXIT_OK


def _cmd_lattice_disc_group(args, cfg: RunConfig):
    lattice, _ = _lattice_argument(_read_json_argument(args.lattice))
    group = discriminant_group(lattice)
    factors = group.invariant_factors
    out = {
        "invariant_factors": list(factors),
        "order": group.order,
        "aut_order": aut_order_finite_abelian(factors),
        "aut_index_bound": aut_index_bound(factors),
    }
    return out, EXIT_OK


def _cmd_qform_represents(args, cfg: RunConfig):
    form = qform.form_from_json(_read_json_argument(args.form))
    t = args.t
    if isinstance(form, UnaryForm):
        verdict = qform.unary_represents(form, t)
    elif isinstance(form, BinaryForm):
        verdict = qform.binary_represents(form, t, cfg.limits())
    elif isinstance(form, DiagonalTernaryForm):
        verdict = qform.ternary_represents(form, t, cfg.limits())
    else:  # pragma: no cover - form_from_json only builds the three shapes
        raise CliError("unsupported form shape")
    out = {"form": qform.form_to_json(form), "t": t, "verdict": qform.verdict_to_json(verdict)}
    return out, EXIT_OK if verdict.kind in ("YES", "NO") else EXIT_UNDECIDED


def _cmd_k3_classify(args, cfg: RunConfig):
    data = k3.picard_from_json(_read_json_argument(args.picard))
    report = k3.classify(data, cfg.limits())
    undecided = "UNDECIDED" in (report.has_minus2.kind, report.has_isotropic.kind)
    return k3.report_to_json(report), EXIT_UNDECIDED if undecided else EXIT_OK


def _cmd_claim3(args, cfg: RunConfig):
    inputs = Claim3Input(args.A, args.B, args.C)
    try:
        res = catalog.claim3_search(inputs, cfg.claim3_bound)
    except SearchExhausted as exc:
        out = {
            "status": "NOT_FOUND",
            "bound": exc.bound,
            "inputs": {"A": inputs.A, "B": inputs.B, "C": inputs.C},
            "message": str(exc),
        }
        return out, EXIT_UNDECIDED
    out = catalog.claim3_result_to_json(res)
    out["status"] = "FOUND"
    return out, EXIT_OK


def _cmd_mw_rank(args, cfg: RunConfig):
    data = elliptic.fibration_from_json(_read_json_argument(args.fibration))
    out = elliptic.fibration_to_json(data)
    out["mordell_weil_rank"] = elliptic.mordell_weil_rank(data)
    out["max_singular_fibers"] = elliptic.max_singular_fibers_bound()
    return out, EXIT_OK


def _cmd_paper_verify(args, cfg: RunConfig):
    result = catalog.paper_verification(cfg.limits(), cfg.claim3_bound)
    return result, EXIT_OK if result["all_passed"] else EXIT_ERROR


# ----------------------------------------------------------------- rendering


def render(obj, cfg: RunConfig) -> str:
    if cfg.format == "json":
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    return _render_table(obj)


def _render_table(obj) -> str:
    if isinstance(obj, dict) and isinstance(obj.get("rows"), list):
        return _render_rows(obj)
    lines = []
    _flatten("", obj, lines)
    width = max((len(k) for k, _ in lines), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in lines)


def _flatten(prefix: str, obj, lines: list) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}.{key}" if prefix else str(key), obj[key], lines)
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, item in enumerate(obj):
            _flatten(f"{prefix}[{i}]", item, lines)
    else:
        lines.append((prefix, json.dumps(obj, sort_keys=True)))


def _row_summary(row: dict) -> str:
    if row.get("kind") == "family":
        rep = row["report"]
        aut = rep["aut"]
        return (
            f"rank={rep['rank']} det={rep['det']} minus2={rep['has_minus2']['kind']} "
            f"isotropic={rep['has_isotropic']['kind']} aut={aut['verdict']}[{aut.get('status', '-')}]"
        )
    if row.get("kind") == "claim3":
        res = row["result"]
        return f"N={res['N']} M={res['M']} gram={json.dumps(res['gram'])}"
    if row.get("kind") == "theorem3":
        res = row["result"]
        return f"gram={json.dumps(res['gram'])}"
    return ""


def _render_rows(obj: dict) -> str:
    rows = [(r.get("row", ""), _row_summary(r), "pass" if r.get("pass") else "FAIL") for r in obj["rows"]]
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    out = [f"{r[0].ljust(w0)}  {r[1].ljust(w1)}  {r[2]}" for r in rows]
    out.append(f"all_passed  {json.dumps(obj['all_passed'])}")
    return "\n".join(out) + "\n"


# -------------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise CliError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=None, help="output format")
    common.add_argument("--sieve-max", dest="sieve_max", type=int, default=None, help="drop sieve moduli above this value")
    common.add_argument("--search-bound", dest="search_bound", type=int, default=None, help="coordinate bound for witness searches")
    common.add_argument("--claim3-bound", dest="claim3_bound", type=int, default=None, help="N, M bound for the claim3 search")

    parser = _Parser(prog="k3lattice", description="exact-arithmetic toolkit for K3 Picard lattices")
    sub = parser.add_subparsers(dest="command")

    lat = sub.add_parser("lattice", help="lattice inspection")
    lat_sub = lat.add_subparsers(dest="subcommand")
    p = lat_sub.add_parser("info", parents=[common], help="rank, Gram, det, signature")
    p.add_argument("lattice", help="lattice JSON (path, -, or inline)")
    p.set_defaults(handler=_cmd_lattice_info)
    p = lat_sub.add_parser("disc-group", parents=[common], help="discriminant group data")
    p.add_argument("lattice", help="lattice JSON (path, -, or inline)")
    p.set_defaults(handler=_cmd_lattice_disc_group)

    qf = sub.add_parser("qform", help="quadratic-form deciders")
    qf_sub = qf.add_subparsers(dest="subcommand")
    p = qf_sub.add_parser("represents", parents=[common], help="decide q = t with a certificate")
    p.add_argument("form", help="form JSON (path, -, or inline)")
    p.add_argument("--t", type=int, required=True, help="target value")
    p.set_defaults(handler=_cmd_qform_represents)

    k3p = sub.add_parser("k3", help="Picard-lattice predicates")
    k3_sub = k3p.add_subparsers(dest="subcommand")
    p = k3_sub.add_parser("classify", parents=[common], help="full verdict report")
    p.add_argument("picard", help="Picard data JSON (path, -, or inline)")
    p.set_defaults(handler=_cmd_k3_classify)

    p = sub.add_parser("claim3", parents=[common], help="search the certified double-NO plane")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--C", type=int, required=True)
    p.set_defaults(handler=_cmd_claim3)

    mw = sub.add_parser("mw", help="Mordell-Weil arithmetic")
    mw_sub = mw.add_subparsers(dest="subcommand")
    p = mw_sub.add_parser("rank", parents=[common], help="Shioda-Tate rank from fibration data")
    p.add_argument("fibration", help="fibration JSON (path, -, or inline)")
    p.set_defaults(handler=_cmd_mw_rank)

    p = sub.add_parser("paper-verify", parents=[common], help="run the full certified check table")
    p.set_defaults(handler=_cmd_paper_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler = getattr(args, "handler", None)
    if handler is None:
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    try:
        cfg = load_config(os.environ, args)
        out, code = handler(args, cfg)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except (ValueError, catalog.CatalogMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    sys.stdout.write(render(out, cfg))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
