"""Command-line driver.

    perhall [--config run.toml] product LHS RHS [--algebra periodic-ext]
    perhall table [--algebra periodic-ext] [--format csv|json] [--with-k]
    perhall verify --suite green
    perhall list-classes

Exit codes: 0 success (or the expected failure of a negative suite),
1 a suite found an unexpected failure, 2 usage or parse error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys
from dataclasses import dataclass, fields

from . import ffla
from .ffla import BudgetExceeded
from .hall import ExtendedHallAlgebra, HallAlgebra
from .periodic import OddPeriodicAlgebra, PeriodicExtendedAlgebra, class_tuples_per_degree
from .repcat import IsoClassId, category, vadd

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

ALGEBRAS = ("hall", "hall-tw", "hall-ext", "periodic-ext", "periodic-odd")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """One run; None means "the default of the command or suite"."""

    quiver: str | None = None
    q: int | None = None
    m: int | None = None
    max_dim: tuple | None = None
    budget: int | None = None
    suite: str | None = None
    seed: int = 0
    samples: int = 20
    out: str | None = None
    algebra: str = "periodic-ext"
    with_k: bool = False

    def validate(self) -> "RunConfig":
        if self.q is not None and not ffla.is_prime(self.q):
            raise UsageError(f"q must be prime, got {self.q}")
        if self.m is not None and self.m < 1:
            raise UsageError(f"m must be >= 1, got {self.m}")
        if self.max_dim is not None and any(d < 0 for d in self.max_dim):
            raise UsageError("dimension bounds must be >= 0")
        if self.budget is not None and self.budget < 1:
            raise UsageError("budget must be positive")
        if self.algebra not in ALGEBRAS:
            raise UsageError(f"unknown algebra {self.algebra!r}; choose from {', '.join(ALGEBRAS)}")
        if self.quiver is not None:
            try:
                cat = category(self.quiver, self.q or 2)
            except ValueError as e:
                raise UsageError(str(e)) from None
            if self.max_dim is not None and len(self.max_dim) not in (1, cat.n):
                raise UsageError(f"--max-dim needs 1 or {cat.n} entries for quiver {self.quiver}")
        return self

    # resolved values for product / table / list-classes
    def category(self):
        return category(self.quiver or "A1", self.q or 2)

    def period(self) -> int:
        return self.m or 1

    def bound(self, cat) -> tuple:
        if self.max_dim is None:
            return (1,) * cat.n
        return broadcast_bound(self.max_dim, cat.n)


def broadcast_bound(bound, n: int) -> tuple:
    """A one-entry bound applies to every vertex."""
    bound = tuple(bound)
    if len(bound) == 1:
        return bound * n
    if len(bound) != n:
        raise UsageError(f"dimension bound {bound} needs 1 or {n} entries")
    return bound


def parse_dims(text) -> tuple:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    try:
        return tuple(int(x) for x in str(text).split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot parse dimension bound {text!r}") from None


def load_config(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read config: {e}") from None
    except tomllib.TOMLDecodeError as e:
        raise UsageError(f"config {path}: {e}") from None
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for k, v in data.items():
        k = k.replace("-", "_")
        if k not in known:
            raise UsageError(f"config {path}: unknown key {k!r}")
        out[k] = parse_dims(v) if k == "max_dim" else v
    return out


# ---------------------------------------------------------------------------
# basis literals:  "d(1)#0@0 * d(1)#0@2 * K[1]@2",  "1" for the unit

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<cls>d\([\d,\s]*\)#\d+)(?:@(?P<cdeg>-?\d+))?"
    r"|K\[(?P<k>-?\d+(?:\s*,\s*-?\d+)*)\](?:@(?P<kdeg>-?\d+))?"
    r"|(?P<unit>1)"
    r")\s*"
)


def _fail(text: str, pos: int, msg: str):
    raise UsageError(f"{msg} at column {pos + 1}\n  {text}\n  {' ' * pos}^")


def parse_literal(text: str, cat, m: int | None):
    """-> (classes per degree, K-classes per degree), both dicts keyed mod m."""
    classes: dict = {}
    kappa: dict = {}
    pos = 0
    n = len(text)
    if not text.strip():
        _fail(text, 0, "empty literal")
    while True:
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            _fail(text, pos, "expected a class label d(..)#k, K[..] or 1")
        if mt.group("cls"):
            try:
                c = cat.check(IsoClassId.parse(mt.group("cls")))
            except (ValueError, IndexError, KeyError):
                _fail(text, mt.start("cls"), f"no class {mt.group('cls')} for this quiver")
            deg = int(mt.group("cdeg") or 0)
            deg = deg % m if m else deg
            classes.setdefault(deg, []).append(c)
        elif mt.group("k"):
            alpha = tuple(int(x) for x in mt.group("k").split(","))
            if len(alpha) != cat.n:
                _fail(text, mt.start("k"), f"K-class needs {cat.n} entries")
            deg = int(mt.group("kdeg") or 0)
            deg = deg % m if m else deg
            kappa[deg] = vadd(kappa.get(deg, (0,) * cat.n), alpha)
        pos = mt.end()
        if pos == n:
            break
        if text[pos] not in "*+":
            _fail(text, pos, "expected '*' or '+'")
        pos += 1
    return {d: cat.direct_sum(*cs) for d, cs in classes.items()}, kappa


def make_algebra(cfg: RunConfig, name: str):
    cat = cfg.category()
    if name == "hall":
        return HallAlgebra(cat)
    if name == "hall-tw":
        return HallAlgebra(cat, twisted=True)
    if name == "hall-ext":
        return ExtendedHallAlgebra(cat)
    if name == "periodic-ext":
        return PeriodicExtendedAlgebra(cat, cfg.period())
    if name == "periodic-odd":
        if cfg.period() % 2 == 0:
            raise UsageError("periodic-odd needs an odd period")
        return OddPeriodicAlgebra(cat, cfg.period())
    raise UsageError(f"unknown algebra {name!r}")


def literal_key(alg, text: str):
    """Basis key of ``alg`` denoted by a literal."""
    cat = alg.cat
    periodic = isinstance(alg, (PeriodicExtendedAlgebra, OddPeriodicAlgebra))
    m = alg.m if periodic else None
    classes, kappa = parse_literal(text, cat, m)
    if periodic:
        cl = tuple(classes.get(i, cat.zero) for i in range(m))
        if isinstance(alg, OddPeriodicAlgebra):
            if kappa:
                raise UsageError("the odd-periodic algebra has no K-elements")
            return cl
        return cl, tuple(kappa.get(i, (0,) * cat.n) for i in range(m))
    if set(classes) - {0} or set(kappa) - {0}:
        raise UsageError("degrees are only meaningful in the periodic algebras")
    c = classes.get(0, cat.zero)
    if isinstance(alg, ExtendedHallAlgebra):
        return c, kappa.get(0, (0,) * cat.n)
    if kappa:
        raise UsageError(f"{'hall-tw' if alg.twisted else 'hall'} has no K-elements")
    return c


# ---------------------------------------------------------------------------
# commands


def cmd_product(cfg: RunConfig, lhs: str, rhs: str, algebra: str | None = None) -> dict:
    alg = make_algebra(cfg, algebra or cfg.algebra)
    x, y = alg.basis(literal_key(alg, lhs)), alg.basis(literal_key(alg, rhs))
    prod = x * y
    return {
        "algebra": algebra or cfg.algebra,
        "quiver": cfg.quiver or "A1",
        "q": alg.q,
        "m": getattr(alg, "m", None),
        "lhs": lhs,
        "rhs": rhs,
        "product": prod.to_json(),
        "text": repr(prod),
    }


def table_basis(cfg: RunConfig, alg) -> list:
    cat = alg.cat
    bound = cfg.bound(cat)
    ks = list(itertools.product((-1, 0, 1), repeat=cat.n)) if cfg.with_k else [(0,) * cat.n]
    if isinstance(alg, HallAlgebra):
        return cat.classes_upto(bound)
    if isinstance(alg, ExtendedHallAlgebra):
        return [(c, k) for c in cat.classes_upto(bound) for k in ks]
    tuples = class_tuples_per_degree(cat, alg.m, bound)
    if isinstance(alg, OddPeriodicAlgebra):
        return sorted(tuples, key=alg.sort_key)
    kappas = list(itertools.product(ks, repeat=alg.m))
    return sorted(((t, k) for t in tuples for k in kappas), key=alg.sort_key)


def build_table(cfg: RunConfig, algebra: str | None = None, fmt: str = "csv") -> str:
    """All products of pairs of bounded basis elements, one row per result term."""
    alg = make_algebra(cfg, algebra or cfg.algebra)
    basis = table_basis(cfg, alg)
    rows = []
    for b1 in basis:
        for b2 in basis:
            terms = sorted(alg.mul_basis(b1, b2).items(), key=lambda kv: alg.sort_key(kv[0]))
            lhs, rhs = alg.basis_str(b1), alg.basis_str(b2)
            if not terms:
                rows.append((lhs, rhs, "0", "0/1", "0/1"))
            for b, c in terms:
                j = c.to_json()
                rows.append((lhs, rhs, alg.basis_str(b), j["a"], j["b"]))
    if fmt == "json":
        keys = ("lhs", "rhs", "term", "coeff_a", "coeff_b")
        return json.dumps([dict(zip(keys, r)) for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("lhs", "rhs", "term", "coeff_a", "coeff_b"))
    w.writerows(rows)
    return buf.getvalue()


def cmd_verify(cfg: RunConfig, suite: str):
    from .suites import SUITES, Options, run_suite

    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    opts = Options(quiver=cfg.quiver, q=cfg.q, m=cfg.m, max_dim=cfg.max_dim, seed=cfg.seed, samples=cfg.samples)
    return run_suite(suite, opts)


def cmd_list_classes(cfg: RunConfig) -> list:
    cat = cfg.category()
    out = []
    for c in cat.classes_upto(cfg.bound(cat)):
        rep = cat.rep(c)
        out.append(
            {
                "class": str(c),
                "aut_order": cat.aut_order(c),
                "matrices": [m.tolist() for m in rep.mats],
            }
        )
    return out


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML file with run settings; flags override it")
    common.add_argument("--quiver", help="A1, A2, ... or 'n:s-t,...'")
    common.add_argument("--q", type=int, help="prime field size")
    common.add_argument("--m", type=int, help="period")
    common.add_argument("--max-dim", help="dimension bound, e.g. 1,1")
    common.add_argument("--budget", type=int, help="largest enumeration allowed")
    common.add_argument("--seed", type=int, help="seed for sampled K-classes")
    common.add_argument("--samples", type=int, help="K-class samples per class triple")
    common.add_argument("--out", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="perhall", description="Exact periodic derived Hall algebra computations.")
    sub = p.add_subparsers(dest="command", required=True)
    pp = sub.add_parser("product", parents=[common], help="product of two basis elements")
    pp.add_argument("lhs")
    pp.add_argument("rhs")
    pp.add_argument("--algebra", choices=ALGEBRAS)
    pt = sub.add_parser("table", parents=[common], help="structure constants among bounded basis elements")
    pt.add_argument("--algebra", choices=ALGEBRAS)
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    pt.add_argument("--with-k", action="store_true", default=None, help="include K-classes in {-1,0,1}")
    pv = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    pv.add_argument("--suite")
    pv.add_argument("--list", action="store_true", help="list the suites and exit")
    sub.add_parser("list-classes", parents=[common], help="iso classes within the bound")
    return p


def _config(args) -> RunConfig:
    values = load_config(args.config) if args.config else {}
    for k in ("quiver", "q", "m", "budget", "seed", "samples", "out", "suite", "algebra", "with_k"):
        v = getattr(args, k, None)
        if v is not None:
            values[k] = v
    if args.max_dim is not None:
        values["max_dim"] = parse_dims(args.max_dim)
    try:
        cfg = RunConfig(**values)
    except TypeError as e:
        raise UsageError(str(e)) from None
    return cfg.validate()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = _config(args)
        old_budget = ffla.get_budget()
        if cfg.budget is not None:
            ffla.set_budget(cfg.budget)
        try:
            return _run(args, cfg)
        finally:
            ffla.set_budget(old_budget)
    except UsageError as e:
        print(f"perhall: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"perhall: {e}", file=sys.stderr)
        return EXIT_BUDGET


def _run(args, cfg: RunConfig) -> int:
    if args.command == "product":
        _emit(json.dumps(cmd_product(cfg, args.lhs, args.rhs), indent=1) + "\n", cfg.out)
        return EXIT_OK
    if args.command == "table":
        _emit(build_table(cfg, fmt=args.format), cfg.out)
        return EXIT_OK
    if args.command == "list-classes":
        _emit(json.dumps(cmd_list_classes(cfg), indent=1) + "\n", cfg.out)
        return EXIT_OK
    from .suites import SUITES

    if args.list:
        for name, (_, doc) in SUITES.items():
            print(f"{name:20s} {doc}")
        return EXIT_OK
    if not cfg.suite:
        raise UsageError("verify needs --suite (see --list)")
    report = cmd_verify(cfg, cfg.suite)
    _emit(json.dumps(report.to_json(), indent=1, default=str) + "\n", cfg.out)
    status = "ok" if report.ok else "FAILED"
    print(f"{report.suite}: {report.instances} instances, {report.failures} failures: {status}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL
