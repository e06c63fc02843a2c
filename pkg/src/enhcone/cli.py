"""Command-line front end: listings, Hasse diagrams, polynomial tables and a verifier.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import combinatorics as cb
from . import fqoracle as fq
from . import shoji, weylb
from .combinatorics import Bipartition, b_stat, format_partition, orbit_dimension
from .exactalg import IntPolynomial

MAX_N = 6  # exact pipeline
COMBINATORIAL_MAX_N = 12  # listings and Hasse diagrams
FORMATS = ("json", "csv", "dot")
TABLES = ("kostka", "ic", "pi", "theta", "hall", "omega")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n: int
    qs: list[int] = field(default_factory=lambda: [2, 3])
    fmt: str = "json"
    allow_n6: bool = False
    enumerate_n4: bool = False

    def validate(self, exact: bool = True) -> None:
        if self.n < 0:
            raise UsageError("n must be nonnegative")
        bound = MAX_N if exact else COMBINATORIAL_MAX_N
        if self.n > bound:
            raise UsageError(f"n={self.n} is outside the supported range (at most {bound})")
        if exact and self.n > shoji.DEFAULT_MAX_N and not self.allow_n6:
            raise UsageError(f"n={self.n} needs --allow-n6")
        for q in self.qs:
            if not fq.is_prime(q):
                raise UsageError(f"q={q} is not prime")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")


# ---------------------------------------------------------------- serialization


def poly_json(p: IntPolynomial) -> list[int]:
    return list(p.coeffs)


def bp_json(bp: Bipartition) -> list[list[int]]:
    return [list(bp.mu), list(bp.nu)]


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dot_id(bp: Bipartition) -> str:
    return '"' + str(bp) + '"'


# ---------------------------------------------------------------- commands


def cmd_qn(cfg: RunConfig) -> str:
    elems = cb.enumerate_bipartitions(cfg.n)
    rows = [{"label": str(a), "bipartition": bp_json(a), "b": b_stat(a),
             "dim": orbit_dimension(a), "composition": list(cb.interleaved_composition(a))}
            for a in elems]
    if cfg.fmt == "json":
        return _json_text({"n": cfg.n, "orbits": rows})
    if cfg.fmt == "csv":
        return _csv_text(["label", "mu", "nu", "b", "dim", "composition"],
                         [[r["label"], format_partition(a.mu), format_partition(a.nu), r["b"], r["dim"],
                           " ".join(map(str, r["composition"]))] for r, a in zip(rows, elems)])
    return _dot(cfg.n, edges=())


def _dot(n: int, edges) -> str:
    elems = cb.enumerate_bipartitions(n)
    lines = [f"digraph Q{n} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_dim: dict[int, list[Bipartition]] = {}
    for a in elems:
        by_dim.setdefault(orbit_dimension(a), []).append(a)
    for d in sorted(by_dim):
        nodes = " ".join(_dot_id(a) + ";" for a in by_dim[d])
        lines.append(f"  {{ rank=same; \"dim {d}\" [shape=none]; {nodes} }}")
    dims = sorted(by_dim)
    for lo, hi in zip(dims, dims[1:]):
        lines.append(f'  "dim {lo}" -> "dim {hi}" [style=invis];')
    for lo, up, ct in edges:
        lines.append(f"  {_dot_id(lo)} -> {_dot_id(up)} [label=\"{ct.kind}\", arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_hasse(cfg: RunConfig) -> str:
    edges = cb.hasse(cfg.n)
    if cfg.fmt == "dot":
        return _dot(cfg.n, edges)
    if cfg.fmt == "csv":
        return _csv_text(["lower", "upper", "type", "k", "l"],
                         [[str(lo), str(up), ct.kind, ct.k, ct.l] for lo, up, ct in edges])
    return _json_text({
        "n": cfg.n,
        "nodes": [bp_json(a) for a in cb.enumerate_bipartitions(cfg.n)],
        "edges": [{"lower": bp_json(lo), "upper": bp_json(up), "type": ct.kind, "k": ct.k, "l": ct.l}
                  for lo, up, ct in edges],
    })


def table_entries(n: int, which: str, allow_large: bool = False) -> list[dict]:
    """Nonzero entries of one polynomial table, in canonical order."""
    labels = cb.enumerate_bipartitions(n)
    if which == "omega":
        om = weylb.omega_matrix(n)
        return [{"row": a, "col": b, "poly": om[a, b].num} for a in labels for b in labels]
    tab = shoji.solve_kostka_table(n, allow_large=allow_large)
    out = []
    if which == "theta":
        return [{"orbit": a, "poly": shoji.theta_polynomial(tab, a)} for a in labels]
    if which == "hall":
        for amb in labels:
            for a in range(n + 1):
                for rho in cb.partitions(a):
                    for sigma in cb.partitions(n - a):
                        g = shoji.hall_polynomial(tab, (rho, sigma), amb)
                        if g:
                            out.append({"ambient": amb, "sub": rho, "quot": sigma, "poly": g})
        return out
    fn: Callable = {"kostka": tab.kostka,
                    "ic": lambda u, l: shoji.ic_polynomial(tab, u, l),
                    "pi": lambda u, l: shoji.pi_polynomial(tab, u, l)}[which]
    for up in labels:
        for lo in labels:
            if cb.bipartition_leq(lo, up):
                p = fn(up, lo)
                if p:
                    out.append({"row": up, "col": lo, "poly": p})
    return out


def cmd_tables(cfg: RunConfig, which: str) -> str:
    if which not in TABLES:
        raise UsageError(f"unknown table {which!r}")
    if cfg.fmt == "dot":
        raise UsageError("tables are available as json or csv")
    entries = table_entries(cfg.n, which, cfg.allow_n6)
    if cfg.fmt == "csv":
        if which == "theta":
            return _csv_text(["orbit", "poly"], [[str(e["orbit"]), str(e["poly"])] for e in entries])
        if which == "hall":
            return _csv_text(["ambient", "sub", "quot", "poly"],
                             [[str(e["ambient"]), format_partition(e["sub"]), format_partition(e["quot"]),
                               str(e["poly"])] for e in entries])
        return _csv_text(["row", "col", "poly"],
                         [[str(e["row"]), str(e["col"]), str(e["poly"])] for e in entries])
    js = []
    for e in entries:
        item = {}
        for k, v in e.items():
            if isinstance(v, Bipartition):
                item[k] = bp_json(v)
            elif isinstance(v, IntPolynomial):
                item[k] = poly_json(v)
                item["text"] = str(v)
            else:
                item[k] = list(v)
        js.append(item)
    return _json_text({"n": cfg.n, "table": which, "entries": js})


# ---------------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        res = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(res, tuple):
        return Check(name, res[0], res[1])
    return Check(name, bool(res))


def verification_suite(cfg: RunConfig) -> list[Check]:
    checks: list[Check] = []
    add = checks.append
    for m in range(cfg.n + 1):
        add(_run(f"hasse n={m}", lambda m=m: {(a, b) for a, b, _ in cb.hasse(m)} == cb.brute_force_covers(m)))
        add(_run(f"characters n={m}", lambda m=m: _character_checks(m)))
        add(_run(f"kostka-solve n={m}", lambda m=m: _solve_checks(m, cfg.allow_n6)))
        add(_run(f"type-A n={m}", lambda m=m: shoji.typeA_specialization_check(m).ok))
        if m <= 3 or (m == 4 and cfg.enumerate_n4):
            add(_run(f"omega-crosscheck n={m}", lambda m=m: shoji.omega_crosscheck(m, max_n=4).ok))
        for q in cfg.qs:
            if q ** (m * m) <= fq.DEFAULT_PAIR_BUDGET:
                add(_run(f"orbit-counts n={m} q={q}", lambda m=m, q=q: _orbit_count_check(m, q)))
                add(_run(f"hall n={m} q={q}", lambda m=m, q=q: _hall_check(m, q)))
            if m <= 3 and q == 2:
                add(_run(f"fibres n={m} q={q}", lambda m=m, q=q: _fibre_check(m, q)))
                add(_run(f"closure n={m} q={q}", lambda m=m, q=q: not fq.closure_order_check(m, q)))
    if cfg.enumerate_n4 and cfg.n >= 4 and 2 in cfg.qs:
        add(_run("orbit-counts n=4 q=2", lambda: _orbit_count_check(4, 2, extended=True)))
    return checks


def _character_checks(n: int) -> tuple[bool, str]:
    tab = weylb.character_table(n)
    order = weylb.group_order(n)
    for i in range(len(tab.labels)):
        for j in range(len(tab.labels)):
            if tab.inner(tab.values[i], tab.values[j]) != (order if i == j else 0):
                return False, f"orthogonality fails at {tab.labels[i]}, {tab.labels[j]}"
    eps = [weylb.epsilon(c) for c in tab.classes]
    de = [weylb.epsilon(c) * weylb.delta(c) for c in tab.classes]
    if weylb.fake_degree([1] * len(eps), n) != IntPolynomial([1]):
        return False, "fake degree of the trivial character"
    if weylb.fake_degree(eps, n) != IntPolynomial.monomial(n * n):
        return False, "fake degree of eps"
    if weylb.fake_degree(de, n) != IntPolynomial.monomial(n * n - n):
        return False, "fake degree of delta eps"
    if n <= 4:
        total = IntPolynomial()
        for lab, row in zip(tab.labels, tab.values):
            total = total + weylb.fake_degree(row, n) * weylb.character_degree(lab)
        if total != weylb.coinvariant_series(n):
            return False, "coinvariant series"
    return True, ""


def _solve_checks(n: int, allow_large: bool) -> tuple[bool, str]:
    tab = shoji.solve_kostka_table(n, allow_large=allow_large)
    if n <= 4:
        other = shoji.solve_kostka_table(n, cb.random_linear_extension(n, random.Random(n)),
                                         allow_large=allow_large)
        if other.kt != tab.kt or other.Lambda != tab.Lambda:
            return False, "solution depends on the linear extension"
    rep = shoji.check_orbit_degrees(tab)
    if not rep.ok:
        return False, f"theta degree mismatch at {rep.mismatches}"
    for q in (2, 3, 5):
        if sum(shoji.theta_polynomial(tab, a)(q) for a in tab.labels) != q ** (n * n):
            return False, f"point counts do not sum to q^(n^2) at q={q}"
    return True, ""


def _orbit_count_check(n: int, q: int, extended: bool = False) -> tuple[bool, str]:
    tab = shoji.solve_kostka_table(n)
    counts = fq.count_orbits(n, q, extended=extended)
    bad = [a for a in tab.labels if counts[a] != shoji.theta_polynomial(tab, a)(q)]
    return not bad, f"mismatch at {bad}" if bad else ""


def _fibre_check(n: int, q: int) -> tuple[bool, str]:
    tab = shoji.solve_kostka_table(n)
    for a in tab.labels:
        p = fq.representative(a, q)
        for b in tab.labels:
            if cb.bipartition_leq(a, b) and fq.count_fiber(p, b) != shoji.pi_polynomial(tab, b, a)(q):
                return False, f"fibre count mismatch: point {a}, flag type {b}"
    return True, ""


def _hall_check(n: int, q: int) -> tuple[bool, str]:
    tab = shoji.solve_kostka_table(n)
    for amb in tab.labels:
        p = fq.representative(amb, q)
        for a in range(n + 1):
            for rho in cb.partitions(a):
                for sigma in cb.partitions(n - a):
                    if shoji.hall_polynomial(tab, (rho, sigma), amb)(q) != fq.count_hall(p, (rho, sigma)):
                        return False, f"hall mismatch at {amb}, {rho}, {sigma}"
    return True, ""


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    checks = verification_suite(cfg)
    failed = [c for c in checks if not c.ok]
    if cfg.fmt == "json":
        text = _json_text({"n": cfg.n, "q": cfg.qs, "passed": not failed,
                           "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]})
    elif cfg.fmt == "csv":
        text = _csv_text(["check", "ok", "detail"], [[c.name, int(c.ok), c.detail] for c in checks])
    else:
        raise UsageError("verify reports are available as json or csv")
    return text, (1 if failed else 0)


# ---------------------------------------------------------------- entry point


def _q_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enhcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_fmt="json"):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default=default_fmt)
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--allow-n6", action="store_true", help="permit n = 6 in the exact pipeline")

    common(sub.add_parser("qn", help="list the orbits of Q_n"))
    common(sub.add_parser("hasse", help="covering relations with their move types"))
    p = sub.add_parser("tables", help="dump a polynomial table")
    common(p)
    p.add_argument("--which", choices=TABLES, default="kostka")
    p = sub.add_parser("verify", help="run the verification suite")
    common(p)
    p.add_argument("--q", type=_q_list, default=[2, 3])
    p.add_argument("--enumerate", action="store_true", help="include the n=4, q=2 enumeration")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(n=args.n, fmt=args.format, allow_n6=args.allow_n6,
                    qs=getattr(args, "q", [2, 3]), enumerate_n4=getattr(args, "enumerate", False))
    code = 0
    try:
        cfg.validate(exact=args.command in ("tables", "verify"))
        if args.command == "qn":
            text = cmd_qn(cfg)
        elif args.command == "hasse":
            text = cmd_hasse(cfg)
        elif args.command == "tables":
            text = cmd_tables(cfg, args.which)
        else:
            text, code = cmd_verify(cfg)
    except UsageError as exc:
        print(f"enhcone: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code:
        print("enhcone: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
