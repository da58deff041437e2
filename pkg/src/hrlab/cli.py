"""Command-line front end.

Usage::

    hrlab counts --n 20 --nu 2 --kind pi
    hrlab bounds --pairs 4:2,4:10,6:2,6:10,8:10,8:20
    hrlab moments --n 1e6 --f omega --k-max 6
    hrlab ekcdf --n 1e6 --center loglogN
    hrlab census --n 1e6 --phi power:0.1
    hrlab sieve --start 1 --len 1e6 --cache stats.bin
    hrlab reproduce --out-dir bundle --n-cap 1e6

Exit status: 0 success, 1 usage error, 2 corrupt data or cache,
3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import os
import sys
import zlib
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import counting, distribution, moments, tail_bounds
from .cachefile import read_stats, write_stats
from .errors import CacheFormatError, ResourceLimitError
from .reports import Report
from .sieve import ARITH_FUNCS, RANGE_CAP, RangeStats, max_order_probe, sieve_range

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_RESOURCE = 0, 1, 2, 3
COMMANDS = ("sieve", "counts", "mertens", "moments", "bounds", "ekcdf", "census", "maxorder")
CACHE_ENV = "HRLAB_CACHE_DIR"


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Accept ``1000000``, ``1_000_000``, ``10^6`` and ``1e6``."""
    s = text.strip().replace("_", "")
    try:
        if "^" in s:
            base, _, exp = s.partition("^")
            return int(base) ** int(exp)
        if "e" in s.lower():
            value = float(s)
            if value != int(value):
                raise ValueError
            return int(value)
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    return [parse_int(t) for t in text.split(",") if t]


def parse_pairs(text: str) -> list[tuple[int, float]]:
    pairs = []
    for item in text.split(","):
        r, sep, a = item.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"pair must be r:A, got {item!r}")
        try:
            pairs.append((int(r), float(a)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"pair must be r:A, got {item!r}") from None
    return pairs


@dataclass
class RunConfig:
    command: str
    n_limit: int | None = None
    cache_path: str | None = None
    workers: int = 1
    format: str = "csv"
    out: str | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.workers < 1:
            raise UsageError(f"--workers must be at least 1, got {self.workers}")
        if self.n_limit is not None and not 1 <= self.n_limit <= RANGE_CAP:
            raise UsageError(f"--n must be in [1, {RANGE_CAP}], got {self.n_limit}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"--format must be csv or json, got {self.format!r}")

    def header(self) -> dict[str, Any]:
        # workers and out do not affect any number, so they stay out of the
        # header and reports stay byte-identical across worker counts.
        d = asdict(self)
        d.pop("workers")
        d.pop("out")
        d["params"] = {k: _plain(v) for k, v in sorted(self.params.items())}
        return d


def _plain(v):
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hrlab", description="omega(n) / Omega(n) statistics and tail bounds")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, needs_n=True):
        if needs_n:
            p.add_argument("--n", type=parse_int, required=True, help="upper limit N")
        p.add_argument("--cache", dest="cache_path", help="stats cache file")
        p.add_argument("--workers", type=parse_int, default=1)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("sieve", help="omega and Omega for a range")
    p.add_argument("--start", type=parse_int, required=True)
    p.add_argument("--len", dest="length", type=parse_int, required=True)
    common(p, needs_n=False)

    p = sub.add_parser("counts", help="pi_nu, omega-bar_nu, Q, Landau ratio")
    common(p)
    p.add_argument("--nu", type=parse_int_list, help="comma list, default every attained nu")
    p.add_argument("--kind", choices=("pi", "omega_bar", "q", "landau", "prime_powers"), default="pi")

    p = sub.add_parser("mertens", help="sums of 1/p and ln p / p")
    common(p)

    p = sub.add_parser("moments", help="central moments against Gaussian moments")
    common(p)
    p.add_argument("--f", choices=ARITH_FUNCS, default="omega")
    p.add_argument("--k-max", type=parse_int, default=6)

    p = sub.add_parser("bounds", help="Chebyshev vs higher-moment vs Gaussian tail bounds")
    p.add_argument("--pairs", type=parse_pairs, help="comma list of r:A, default the published rows")
    p.add_argument("--n", type=parse_int, help="add the empirical tail column at this N")
    p.add_argument("--f", choices=ARITH_FUNCS, default="omega")
    common(p, needs_n=False)

    p = sub.add_parser("ekcdf", help="empirical CDF of normalized f against the normal CDF")
    common(p)
    p.add_argument("--f", choices=ARITH_FUNCS, default="omega")
    p.add_argument("--center", choices=counting.CENTERS, default="loglogN")
    p.add_argument("--plot-data", action="store_true", help="emit per-value histogram rows instead")

    p = sub.add_parser("census", help="integers outside a concentration window")
    common(p)
    p.add_argument("--f", choices=ARITH_FUNCS, default="omega")
    p.add_argument("--phi", default="power:0.1", help="const:c, power:delta or kappa:k")
    p.add_argument("--center", choices=counting.CENTERS, default="loglogN")
    p.add_argument("--squarefree", action="store_true")

    p = sub.add_parser("maxorder", help="omega at primorials against ln n / ln ln n")
    p.add_argument("--k-max", type=parse_int, default=20)
    common(p, needs_n=False)

    p = sub.add_parser("reproduce", help="regenerate every checkable published number")
    p.add_argument("--out-dir", default="hrlab-bundle")
    p.add_argument("--n-cap", type=parse_int, default=10**8)
    p.add_argument("--workers", type=parse_int, default=1)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    base = {"command", "n", "cache_path", "workers", "format", "out"}
    params = {k: v for k, v in vars(ns).items() if k not in base}
    return RunConfig(
        command=ns.command,
        n_limit=getattr(ns, "n", None),
        cache_path=ns.cache_path,
        workers=ns.workers,
        format=ns.format,
        out=ns.out,
        params=params,
    )


def _cache_file(cfg: RunConfig, N: int) -> Path | None:
    if cfg.cache_path:
        return Path(cfg.cache_path)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env) / f"hrstats_1_{N}.bin"
    return None


def load_or_sieve(cfg: RunConfig, N: int) -> RangeStats:
    """Stats for [1, N] from the cache if present, else sieve (and cache)."""
    path = _cache_file(cfg, N)
    if path is not None and path.exists():
        stats = read_stats(path)
        if stats.start != 1 or stats.end <= N:
            raise CacheFormatError(
                f"{path}: covers [{stats.start}, {stats.end - 1}], need [1, {N}]"
            )
        return stats
    stats = sieve_range(1, N, workers=cfg.workers)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_stats(path, stats)
    return stats


def _cmd_sieve(cfg: RunConfig) -> Report:
    start, length = cfg.params["start"], cfg.params["length"]
    if start < 1:
        raise UsageError(f"--start must be at least 1, got {start}")
    if length < 1:
        raise UsageError(f"--len must be at least 1, got {length}")
    if start + length - 1 > RANGE_CAP:
        raise UsageError(f"--start/--len: range end exceeds {RANGE_CAP}")
    stats = sieve_range(start, length, workers=cfg.workers)
    if cfg.cache_path:
        write_stats(cfg.cache_path, stats)
        rep = Report(["start", "len", "sum_omega", "sum_big_omega", "crc32"])
        rep.add(start, length, int(stats.omega.sum(dtype="int64")), int(stats.big_omega.sum(dtype="int64")),
                zlib.crc32(stats.values.tobytes()))
        return rep
    rep = Report(["n", "omega", "big_omega"])
    for i, (a, b) in enumerate(zip(stats.omega.tolist(), stats.big_omega.tolist())):
        rep.add(start + i, a, b)
    return rep


def _cmd_counts(cfg: RunConfig) -> Report:
    N = cfg.n_limit
    kind = cfg.params["kind"]
    if kind == "prime_powers":
        rep = Report(["N", "count"])
        rep.add(N, counting.prime_power_count(N))
        return rep
    stats = load_or_sieve(cfg, N)
    if kind == "q":
        rep = Report(["N", "count"])
        rep.add(N, counting.q_count(N, stats=stats))
        return rep
    nus = cfg.params["nu"]
    if nus is None:
        top = int(stats.value_counts("omega", 1, N).nonzero()[0][-1])
        nus = list(range(0 if kind == "omega_bar" else 1, top + 1))
    if kind == "landau":
        if N < 16:
            raise UsageError(f"--n must be at least 16 for --kind landau, got {N}")
        rep = Report(["N", "nu", "ratio"])
    else:
        rep = Report(["N", "nu", "count"])
    for nu in nus:
        if nu < (0 if kind == "omega_bar" else 1):
            raise UsageError(f"--nu {nu} is out of range for --kind {kind}")
        if kind == "pi":
            rep.add(N, nu, counting.pi_nu(N, nu, stats=stats))
        elif kind == "omega_bar":
            rep.add(N, nu, counting.omega_bar_nu(N, nu, stats=stats))
        else:
            rep.add(N, nu, counting.landau_ratio(N, nu, stats=stats))
    return rep


def _cmd_mertens(cfg: RunConfig) -> Report:
    N = cfg.n_limit
    if N < 3:
        raise UsageError(f"--n must be at least 3, got {N}")
    m = counting.mertens_sums(N)
    rep = Report(["N", "sum_recip", "sum_logp_over_p", "offset_estimate"])
    rep.add(N, m.sum_recip, m.sum_logp_over_p, m.offset_estimate)
    return rep


def _require_n16(cfg: RunConfig) -> int:
    if cfg.n_limit < 16:
        raise UsageError(f"--n must be at least 16, got {cfg.n_limit}")
    return cfg.n_limit


def _cmd_moments(cfg: RunConfig) -> Report:
    N = _require_n16(cfg)
    k_max = cfg.params["k_max"]
    if not 1 <= k_max <= moments.K_MAX:
        raise UsageError(f"--k-max must be in [1, {moments.K_MAX}], got {k_max}")
    stats = load_or_sieve(cfg, N)
    rep = Report(["N", "f", "k", "central", "normalized", "gaussian_target", "delta"])
    for m in moments.moment_match_table(N, cfg.params["f"], k_max, stats=stats):
        rep.add(m.N, m.f, m.k, m.central, m.normalized, m.gaussian_target, m.delta)
    return rep


def _cmd_bounds(cfg: RunConfig) -> Report:
    pairs = cfg.params["pairs"]
    N = cfg.n_limit
    stats = None
    if N is not None:
        _require_n16(cfg)
        stats = load_or_sieve(cfg, N)
    if pairs is None:
        A_list = r_list = None
    else:
        r_list = [r for r, _ in pairs]
        A_list = [a for _, a in pairs]
    try:
        rows = tail_bounds.bounds_table(A_list, r_list, N, f=cfg.params["f"], stats=stats)
    except ValueError as exc:
        raise UsageError(f"--pairs: {exc}") from None
    rep = Report(["A", "r", "chebyshev", "higher_moment", "gaussian", "empirical", "paper_value", "discrepancy_flag"])
    for row in rows:
        rep.add(row.A, row.r, row.chebyshev, row.higher_moment, row.gaussian, row.empirical, row.paper_value, row.discrepancy)
    return rep


def _cmd_ekcdf(cfg: RunConfig) -> Report:
    N = _require_n16(cfg)
    stats = load_or_sieve(cfg, N)
    f = cfg.params["f"]
    if cfg.params["plot_data"]:
        rep = Report(["value", "z", "count", "empirical_mass", "normal_mass"])
        for row in distribution.value_histogram(N, f, stats=stats):
            rep.add(*row)
        rep.summary = {"center": "loglogN", "range": f"[16,{N}]"}
        return rep
    ecdf = distribution.empirical_cdf(N, f, cfg.params["center"], distribution.KS_GRID, stats=stats)
    rep = Report(["k", "empirical", "normal", "gap"])
    worst = 0.0
    for k, e in zip(ecdf.grid.tolist(), ecdf.cdf_values.tolist()):
        phi = distribution.normal_cdf(k)
        gap = e - phi
        worst = max(worst, abs(gap))
        rep.add(k, e, phi, gap)
    rep.summary = {"ks_distance": worst, "grid": distribution.KS_GRID_SPEC, "range": f"[16,{N}]"}
    return rep


def _cmd_census(cfg: RunConfig) -> Report:
    N = _require_n16(cfg)
    try:
        phi = counting.PhiSpec.parse(cfg.params["phi"])
    except ValueError as exc:
        raise UsageError(f"--phi: {exc}") from None
    stats = load_or_sieve(cfg, N)
    f, center = cfg.params["f"], cfg.params["center"]
    outside, frac = counting.window_census(
        N, f, phi, center, squarefree_only=cfg.params["squarefree"], stats=stats
    )
    rep = Report(["N", "f", "phi_kind", "phi_param", "center", "outside", "fraction"])
    rep.add(N, f, phi.kind, phi.param, center, outside, frac)
    return rep


def _cmd_maxorder(cfg: RunConfig) -> Report:
    k_max = cfg.params["k_max"]
    if not 3 <= k_max <= 64:
        raise UsageError(f"--k-max must be in [3, 64], got {k_max}")
    rep = Report(["k", "n", "omega", "ratio"])
    for k, n, ratio in max_order_probe(k_max):
        rep.add(k, n, k, ratio)
    return rep


_HANDLERS = {
    "sieve": _cmd_sieve,
    "counts": _cmd_counts,
    "mertens": _cmd_mertens,
    "moments": _cmd_moments,
    "bounds": _cmd_bounds,
    "ekcdf": _cmd_ekcdf,
    "census": _cmd_census,
    "maxorder": _cmd_maxorder,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        report = _HANDLERS[cfg.command](cfg)
        report.config = cfg.header()
        text = report.render(cfg.format)
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            stdout.write(text)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheFormatError as exc:
        print(f"error: --cache {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ResourceLimitError, MemoryError) as exc:
        print(f"error: out of memory: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "reproduce":
            from .reproduce import reproduce_paper

            if ns.n_cap < 10**4:
                raise UsageError(f"--n-cap must be at least 10^4, got {ns.n_cap}")
            return reproduce_paper(ns.out_dir, n_cap=ns.n_cap, workers=ns.workers).exit_code
        cfg = config_from_args(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
