"""Command-line front end.

    partid verify    run identity checkers over ranges of n and m
    partid table     print both sides of selected identities per (n, m)
    partid enumerate dump P_n or the decorated set
    partid map       apply sigma_m (or its inverse) to one partition

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error (including a
malformed part list), 3 I/O error, 4 unknown identity tag.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import decorated as dec
from . import identities as ids
from .partitions import Partition, all_partitions, decompose_dn, decompose_oe, format_parts
from .transforms import sigma, sigma_inv

log = logging.getLogger("partid")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_UNKNOWN_IDENTITY = 0, 1, 2, 3, 4
WORKERS_ENV = "PARTID_WORKERS"

IDENTITY_TAGS = (
    "bijection",
    "transport",
    "c-new-2",
    "c-new-3",
    "c-new-4",
    "m-1",
    "m-2",
    "m-3",
    "a-new-1",
    "a-new-2",
    "b-new-1",
    "b-new-1-transport",
    "d-new-1",
    "d-new-2",
    "d-new-3",
    "e-new-1",
    "e-new-2",
    "e-new-3",
    "e-new-4",
    "e-new-5",
)
IDENTITY_GROUPS = {
    "per-k": ("c-new-2", "c-new-3", "c-new-4"),
    "merca": ("m-1", "m-2", "m-3"),
    "am": ("a-new-1", "a-new-2"),
    "poly": ("b-new-1", "b-new-1-transport", "d-new-1"),
    "derivative": ("d-new-2", "d-new-3"),
    "decorated": ("e-new-3",),
    "refinement": ("e-new-1", "e-new-2", "e-new-4", "e-new-5"),
    "all": IDENTITY_TAGS,
}
# identities whose checkers need m >= 2
NEEDS_M2 = {"e-new-1", "e-new-2", "e-new-4", "e-new-5"}
RECORD_FIELDS = (
    "identity", "n", "m", "k", "sign", "z", "point", "seed",
    "lhs", "rhs", "verdict", "residual",
)


class UsageError(Exception):
    pass


class UnknownIdentity(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_range: tuple[int, int] = (1, 20)
    m_range: tuple[int, int] = (1, 6)
    identities: tuple[str, ...] = IDENTITY_TAGS
    signs: tuple[int, ...] = (1, -1)
    z_samples: int = 20
    integer_z: tuple[int, ...] = (0, 1, 2, 3)
    points: int = 100
    seed: int = 0
    workers: int = 1
    output_format: str = "json"
    output_path: str | None = None
    timing: bool = False
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for name, (lo, hi) in (("n", self.n_range), ("m", self.m_range)):
            if lo > hi:
                raise UsageError(f"empty {name} range {lo}..{hi}")
        if self.n_range[0] < 0 or self.m_range[0] < 1:
            raise UsageError("n must be >= 0 and m must be >= 1")
        if self.z_samples < 0 or self.points < 0:
            raise UsageError("sample counts must be nonnegative")
        if self.workers < 1:
            raise UsageError("workers must be positive")


# ---------------------------------------------------------------------------
# parsing helpers


def parse_range(text: str) -> tuple[int, int]:
    """``"5"`` -> (5, 5); ``"1..20"`` -> (1, 20)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected N or A..B") from None


def parse_identities(text: str) -> tuple[str, ...]:
    out: list[str] = []
    for tag in (t.strip() for t in text.split(",") if t.strip()):
        expanded = IDENTITY_GROUPS.get(tag, (tag,) if tag in IDENTITY_TAGS else None)
        if expanded is None:
            raise UnknownIdentity(tag)
        out.extend(t for t in expanded if t not in out)
    if not out:
        raise UsageError("no identities selected")
    return tuple(out)


def parse_signs(text: str) -> tuple[int, ...]:
    signs = []
    for token in text.split(","):
        token = token.strip()
        if token in ("+1", "1", "+"):
            signs.append(1)
        elif token in ("-1", "-"):
            signs.append(-1)
        else:
            raise UsageError(f"malformed sign {token!r}")
    return tuple(dict.fromkeys(signs))


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse a comma-separated part list; unsorted input is sorted with a warning."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise UsageError(f"malformed part {token!r} in part list") from None
        if value < 1:
            raise UsageError(f"parts must be positive, got {value}")
        parts.append(value)
    ordered = sorted(parts, reverse=True)
    if ordered != parts:
        log.warning("part list was not nonincreasing; sorted to %s", format_parts(ordered))
    return tuple(ordered)


# ---------------------------------------------------------------------------
# verification


def _z_values(cfg: RunConfig) -> list:
    rng = random.Random(cfg.seed)
    return list(cfg.integer_z) + [ids.random_complex_z(rng) for _ in range(cfg.z_samples)]


def _m_values(cfg: RunConfig, identity: str) -> range:
    lo, hi = cfg.m_range
    if identity in NEEDS_M2:
        lo = max(lo, 2)
    return range(lo, hi + 1)


def run_shard(identity: str, n: int, cfg: RunConfig) -> list[ids.IdentityReport]:
    """All checks for one (identity, n). Pure; safe to run in a worker process."""
    out: list[ids.IdentityReport] = []
    if n < 1 and identity != "e-new-2":
        return out
    if identity == "e-new-3":
        return [dec.check_e3(n)]
    for m in _m_values(cfg, identity):
        if identity == "bijection":
            out.append(ids.check_bijection(n, m))
        elif identity == "transport":
            out.append(ids.check_transport(n, m))
        elif identity in ("c-new-2", "c-new-3", "c-new-4"):
            fn = {
                "c-new-2": ids.check_per_k,
                "c-new-3": ids.check_per_k_first,
                "c-new-4": ids.check_per_k_signed,
            }[identity]
            out.extend(fn(n, m, k) for k in range(1, -(-n // m) + 1))
        elif identity in ids.MERCA_VARIANTS:
            for sign in cfg.signs:
                out.extend(ids.check_merca(n, m, z, sign, identity) for z in _z_values(cfg))
        elif identity in ids.AM_VARIANTS:
            out.extend(ids.check_am_general(n, m, sign, identity) for sign in cfg.signs)
        elif identity == "b-new-1":
            out.extend(ids.check_bnew1_eval(n, m, seed=cfg.seed + i) for i in range(cfg.points))
        elif identity == "b-new-1-transport":
            out.append(ids.check_bnew1_transport(n, m))
        elif identity == "d-new-1":
            out.extend(ids.check_dnew1_eval(n, m, seed=cfg.seed + i) for i in range(cfg.points))
        elif identity in ("d-new-2", "d-new-3"):
            variable = "y" if identity == "d-new-2" else "z"
            out.extend(ids.check_dnew_derivative(n, m, sign, variable) for sign in cfg.signs)
        elif identity == "e-new-1":
            out.append(dec.check_e1(n, m))
        elif identity == "e-new-2":
            out.append(dec.check_e2(n, m))
        elif identity in ("e-new-4", "e-new-5"):
            out.append(dec.check_convolution(n, m, identity))
        else:
            raise UnknownIdentity(identity)
    return out


def _timed_shard(identity: str, n: int, cfg: RunConfig) -> tuple[list[ids.IdentityReport], int]:
    start = time.perf_counter()
    reports = run_shard(identity, n, cfg)
    return reports, int((time.perf_counter() - start) * 1e6)


def run_checks(cfg: RunConfig) -> list[tuple[ids.IdentityReport, int]]:
    """Run every shard and return ``(report, shard_elapsed_us)`` pairs in a
    canonical order that does not depend on the worker count."""
    shards = [(ident, n) for ident in cfg.identities for n in range(cfg.n_range[0], cfg.n_range[1] + 1)]
    if cfg.workers == 1:
        results = [_timed_shard(ident, n, cfg) for ident, n in shards]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_timed_shard, *zip(*shards), [cfg] * len(shards)))
    pairs = [(r, elapsed // max(len(reports), 1)) for reports, elapsed in results for r in reports]
    pairs.sort(key=lambda pair: pair[0].sort_key())
    return pairs


# ---------------------------------------------------------------------------
# serialization


def wire(value) -> object:
    """Exact values become strings so no precision is lost in JSON."""
    if value is None:
        return None
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return repr(value)
    if isinstance(value, tuple):
        return [wire(v) for v in value]
    return str(value)


def report_record(report: ids.IdentityReport, elapsed_us: int | None = None) -> dict:
    rec = {
        "identity": report.identity,
        "n": report.n,
        "m": report.m,
        "k": report.k,
        "sign": report.sign,
        "z": wire(report.z),
        "point": wire(report.point),
        "seed": report.seed,
        "lhs": wire(report.lhs),
        "rhs": wire(report.rhs),
        "verdict": report.verdict,
        "residual": report.residual,
    }
    rec = {k: v for k, v in rec.items() if v is not None}
    if elapsed_us is not None:
        rec["elapsed_us"] = elapsed_us
    return rec


def render_json(records: Iterable[dict]) -> str:
    return "".join(json.dumps(rec, sort_keys=False) + "\n" for rec in records)


def render_csv(records: Sequence[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for rec in records:
        row = {k: (json.dumps(v) if isinstance(v, list) else v) for k, v in rec.items()}
        writer.writerow(row)
    return buf.getvalue()


def render_table(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(row) for row in rows)
    return "\n".join(out) + "\n"


def render_reports_text(records: Sequence[dict]) -> str:
    columns = ("n", "m", "k", "sign", "z", "seed", "lhs", "rhs", "verdict")
    blocks = []
    by_identity: dict[str, list[dict]] = {}
    for rec in records:
        by_identity.setdefault(rec["identity"], []).append(rec)
    for identity, recs in by_identity.items():
        used = [c for c in columns if any(c in r for r in recs)]
        rows = [[_cell(r.get(c)) for c in used] for r in recs]
        passed = sum(r["verdict"] == "pass" for r in recs)
        blocks.append(f"== ({identity})  {passed}/{len(recs)} pass ==\n" + render_table(rows, used))
    return "\n".join(blocks)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return json.dumps(value)
    return str(value)


def emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def format_records(records: Sequence[dict], fmt: str, fields: Sequence[str] = RECORD_FIELDS) -> str:
    if fmt == "json":
        return render_json(records)
    if fmt == "csv":
        return render_csv(records, fields)
    return render_reports_text(records)


# ---------------------------------------------------------------------------
# commands


def run(cfg: RunConfig) -> int:
    """Execute a verify or table run and write its report stream."""
    pairs = run_checks(cfg)
    records = [report_record(r, us if cfg.timing else None) for r, us in pairs]
    fields = RECORD_FIELDS + (("elapsed_us",) if cfg.timing else ())
    emit(format_records(records, cfg.output_format, fields), cfg.output_path)
    failed = [r for r, _ in pairs if not r.passed]
    for r in failed:
        log.error("FAIL %s n=%s m=%s k=%s sign=%s z=%s", r.identity, r.n, r.m, r.k, r.sign, r.z)
    return EXIT_FAIL if failed else EXIT_OK


def map_record(parts: tuple[int, ...], m: int, inverse: bool) -> dict:
    lam = Partition.from_parts(parts)
    if inverse:
        src_a, src_b, _ = decompose_dn(lam.parts, m)
        image = sigma_inv(lam, m)
        img_a, img_b, _ = decompose_oe(image.parts, m)
        keys = ("d_part", "n_part", "o_part", "e_part")
    else:
        src_a, src_b, _ = decompose_oe(lam.parts, m)
        image = sigma(lam, m)
        img_a, img_b, _ = decompose_dn(image.parts, m)
        keys = ("o_part", "e_part", "d_part", "n_part")
    return {
        "map": "sigma_inv" if inverse else "sigma",
        "m": m,
        "source": format_parts(lam.parts),
        keys[0]: format_parts(src_a),
        keys[1]: format_parts(src_b),
        keys[2]: format_parts(img_a),
        keys[3]: format_parts(img_b),
        "image": format_parts(image.parts),
    }


def render_map_text(rec: dict) -> str:
    labels = {"o_part": "o-part", "e_part": "e-part", "d_part": "d-part", "n_part": "n-part"}
    lines = [f"{labels.get(k, k)}: {v}".rstrip() for k, v in rec.items()]
    return "\n".join(lines) + "\n"


def enumerate_records(n: int, decorated: bool, weights: bool) -> list[dict]:
    if not decorated:
        return [{"n": n, "partition": str(lam)} for lam in all_partitions(n)]
    if n == 0:
        items = [dec.DecoratedPartition(Partition(0))]
    else:
        items = list(dec.enumerate_decorated(n))
    out = []
    for d in items:
        rec = {"n": n, "partition": str(d)}
        if weights:
            rec["W"] = str(dec.weight_W(d))
            rec["W_tilde"] = str(dec.weight_Wtilde(d))
        out.append(rec)
    return out


def render_enumerate_text(records: Sequence[dict]) -> str:
    lines = []
    for rec in records:
        line = rec["partition"]
        if "W" in rec:
            line += f"\tW={rec['W']}\tW~={rec['W_tilde']}"
        lines.append(line)
    return "".join(line + "\n" for line in lines)


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partid", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, default_format):
        p.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--output", dest="output_path", default=None)

    for name, default_ids, default_format in (
        ("verify", "all", "json"),
        ("table", "am", "text"),
    ):
        p = sub.add_parser(name)
        p.add_argument("--identities", default=default_ids, help="comma-separated tags or groups")
        p.add_argument("--n", default="1..20")
        p.add_argument("--m", default="1..6")
        p.add_argument("--signs", default="+1,-1")
        p.add_argument("--z-samples", type=int, default=20)
        p.add_argument("--points", type=int, default=100, help="rational points per (n, m)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--timing", action="store_true", help="add elapsed_us (breaks byte determinism)")
        add_output(p, default_format)

    p = sub.add_parser("enumerate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--decorated", action="store_true")
    p.add_argument("--weights", action="store_true", help="with --decorated, print W and W~")
    add_output(p, "text")

    p = sub.add_parser("map")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--parts", required=True)
    p.add_argument("--inverse", action="store_true")
    add_output(p, "text")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command in ("verify", "table"):
        cfg = RunConfig(
            command=args.command,
            n_range=parse_range(args.n),
            m_range=parse_range(args.m),
            identities=parse_identities(args.identities),
            signs=parse_signs(args.signs),
            z_samples=args.z_samples,
            points=args.points,
            seed=args.seed,
            workers=args.workers if args.workers is not None else _default_workers(),
            output_format=args.output_format,
            output_path=args.output_path,
            timing=args.timing,
        )
        return run(cfg)
    if args.command == "enumerate":
        if args.n < 0:
            raise UsageError("n must be nonnegative")
        records = enumerate_records(args.n, args.decorated, args.weights)
        if args.output_format == "text":
            text = render_enumerate_text(records)
        else:
            fields = ("n", "partition") + (("W", "W_tilde") if args.weights and args.decorated else ())
            text = render_json(records) if args.output_format == "json" else render_csv(records, fields)
        emit(text, args.output_path)
        return EXIT_OK
    if args.command == "map":
        if args.m < 2:
            raise UsageError("map needs m >= 2")
        rec = map_record(parse_parts(args.parts), args.m, args.inverse)
        if args.output_format == "text":
            text = render_map_text(rec)
        elif args.output_format == "json":
            text = render_json([rec])
        else:
            text = render_csv([rec], list(rec))
        emit(text, args.output_path)
        return EXIT_OK
    raise UsageError(f"unknown command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _dispatch(args)
    except UnknownIdentity as exc:
        known = ", ".join(list(IDENTITY_GROUPS) + list(IDENTITY_TAGS))
        print(f"partid: unknown identity tag {exc.args[0]!r} (known: {known})", file=sys.stderr)
        return EXIT_UNKNOWN_IDENTITY
    except UsageError as exc:
        print(f"partid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"partid: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
