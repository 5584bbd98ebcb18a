"""Command-line surface.

    bentzoo analyze   <function-file> [--timing] [--out PATH]
    bentzoo construct <name> [key=value ...] [--out PATH]
    bentzoo verify    <name> [key=value ...] [--seed S]
    bentzoo search    <name> [key=value ...] [--budget B] [--seed S]
                      [--workers W] [--out PATH]

Construction names: kppp, am-gbent, cex, inverse-z2k, spread-z2k, nega-shift.
Search names: am-complete, cex, nega-gbent-nontrivial.
Verification names: see `bentzoo verify list`.

Exit codes: 0 success, 1 failed check or failed postcondition, 2 parse
failure, 3 flavor/variant mismatch, 4 precondition violation (the diagnostic
names the violated clause), 5 search budget exhausted (partial results are
still written).

All JSON on stdout is canonical (sorted keys, fixed separators), so
identical invocations produce byte-identical output; timing goes to stderr
only when --timing is given.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import cyclo, formats, verify
from .boolfn import BoolFn
from .constructions import (
    SearchResult,
    gbent_from_triple,
    inverse_zk_bent,
    mm_exponent_search,
    mm_exponent_zk_bent,
    monomial_involution_triple,
    nontrivial_hs,
    search_nontrivial_nega_gbent,
    search_sum_inverse_complete,
)
from .errors import (
    BentzooError,
    FlavorMismatch,
    ParseError,
    PreconditionError,
    VariantMismatch,
    VerificationFailed,
)
from .genfn import GenFn
from .gf2m import Field, PairSplit
from .stargroup import StarGroup, desarguesian_spread, graph_of, zk_bent_from_partition
from .vectfn import VectFn, mm_bent_negabent


def _parse_kv(pairs: list[str]) -> dict[str, str]:
    out = {}
    for tok in pairs:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        out[key] = val
    return out


def _field_from_args(params: dict, default_m: int = 3) -> Field:
    m = int(params.get("m", default_m))
    poly = int(params["poly"], 16) if "poly" in params else None
    return Field(m, poly)


def _ints(text: str) -> list[int]:
    return [int(t, 0) for t in text.split(",") if t]


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------

def _norm2_stats(rows_by_c) -> dict[str, int]:
    """Distinct |value|^2 elements (as coefficient vectors) with multiplicities."""
    stats: dict[str, int] = {}
    for rows in rows_by_c.values():
        n2 = cyclo.rows_norm2(rows)
        for row in n2:
            key = "[" + ",".join(str(int(v)) for v in row) + "]"
            stats[key] = stats.get(key, 0) + 1
    return stats


def analyze_boolfn(f: BoolFn) -> dict:
    report: dict = {
        "type": "boolfn",
        "n": f.n,
        "flavor": "mv" if f.field is None else f"uv:0x{f.field.poly:x}",
        "bent": f.is_bent(),
        "negabent": f.is_negabent(),
        "balanced": f.is_balanced(),
    }
    w = f.walsh()
    sq: dict[str, int] = {}
    for v in w.values.tolist():
        sq[str(v * v)] = sq.get(str(v * v), 0) + 1
    report["walsh_squared_multiset"] = sq
    if f.n <= 8:
        cbent4 = {}
        for c in range(1, 1 << f.n):
            cbent4[str(c)] = f.is_cbent4(c)
        report["cbent4"] = cbent4
        report["bent4"] = any(cbent4.values())
    return report


def analyze_genfn(f: GenFn) -> dict:
    report: dict = {
        "type": "genfn",
        "n": f.n,
        "k": f.k,
        "flavor": "mv" if f.field is None else f"uv:0x{f.field.poly:x}",
        "gbent": f.is_gbent(),
        "zk_bent": f.is_zk_bent(),
        "balanced": f.is_balanced(),
    }
    spec = f.char_spectrum()
    stats: dict[str, int] = {}
    for key, count in spec.value_multiset().items():
        stats["[" + ",".join(str(v) for v in key) + "]"] = count
    report["spectrum_value_multiset"] = stats
    report["spectrum_distinct_values"] = len(stats)
    report["spectrum_norm2_multiset"] = _norm2_stats(spec.rows_by_c)
    if f.field is not None:
        report["nega_gbent"] = f.is_nega_gbent()
        report["nega_zk_bent"] = f.is_nega_zk_bent()
        if report["nega_zk_bent"]:
            group = StarGroup(f.field, f.k)
            report["rds_parameters"] = list(group.rds_parameters(graph_of(f, group)))
    return report


def analyze_vectfn(f: VectFn) -> dict:
    report: dict = {
        "type": "vectfn",
        "n": f.n,
        "k": f.k,
        "flavor": "mv" if f.field is None else f"uv:0x{f.field.poly:x}",
        "vectorial_negabent": f.is_vectorial_negabent(),
    }
    if f.n % 2 == 0:
        report["vectorial_bent_negabent"] = f.is_vectorial_bent_negabent()
        report["bent_negabent_violations"] = f.bent_negabent_violations()
    if f.field is not None:
        i, ii, iii, iv = f.bent4_equivalence_report()
        report["vectorial_bent4"] = i
        report["bent4_equivalence"] = {"i": i, "ii": ii, "iii": iii, "iv": iv}
        if f.k == f.n:
            report["modified_planar"] = i
    return report


def cmd_analyze(args) -> int:
    with open(args.path) as fh:
        text = fh.read()
    t0 = time.time()
    obj = formats.load_function(text)
    if isinstance(obj, BoolFn):
        report = analyze_boolfn(obj)
    elif isinstance(obj, GenFn):
        report = analyze_genfn(obj)
    else:
        report = analyze_vectfn(obj)
    out = formats.canonical_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    sys.stdout.write(out)
    if args.timing:
        print(f"analyze took {time.time() - t0:.3f}s", file=sys.stderr)
    return 0


# ----------------------------------------------------------------------
# construct
# ----------------------------------------------------------------------

def _construct_kppp(params) -> tuple[str, dict]:
    field = _field_from_args(params)
    m = field.m
    alphas = _ints(params["alphas"]) if "alphas" in params else [1 << (j + 1) for j in range(m - 1)]
    g = mm_bent_negabent(field, alphas)
    report = {
        "construction": "kppp",
        "m": m,
        "k": g.k,
        "alphas": alphas,
        "verified_vectorial_bent_negabent": g.is_vectorial_bent_negabent(),
    }
    return formats.vectfn_to_text(g), report


def _construct_am_gbent(params) -> tuple[str, dict]:
    field = _field_from_args(params)
    m = field.m
    d = int(params.get("d", field.order - 2))
    if "alphas" in params:
        alphas = _ints(params["alphas"])
    else:
        a = field.generator
        alphas = [1, a, field.pow(a, d)]
    triple = monomial_involution_triple(field, d, alphas)
    hs_kind = params.get("hs", "zero")
    hs = None if hs_kind == "zero" else nontrivial_hs(field, alphas, int(params.get("e", d)))
    f = gbent_from_triple(field, triple, hs)
    report = {
        "construction": "am-gbent",
        "m": m,
        "d": d,
        "alphas": alphas,
        "hs": hs_kind,
        "verified_gbent": f.is_gbent(),
        "zk_bent": f.is_zk_bent(),
    }
    return formats.genfn_to_text(f), report


def _construct_cex(params) -> tuple[str, dict]:
    field = _field_from_args(params)
    e = int(params.get("e", 1))
    if "c1" in params:
        c1, c2, c3 = int(params["c1"], 0), int(params["c2"], 0), int(params["c3"], 0)
    else:
        hits = mm_exponent_search(field, e)
        if not hits:
            raise PreconditionError(
                f"no compatible (c1,c2,c3) exists for m={field.m}, e={e}",
                clause="c-sum condition")
        c1, c2, c3 = hits[0]
    f = mm_exponent_zk_bent(field, e, c1, c2, c3)
    report = {
        "construction": "cex",
        "m": field.m,
        "e": e,
        "c": [c1, c2, c3],
        "verified_zk_bent": f.is_zk_bent(),
    }
    return formats.genfn_to_text(f), report


def _construct_inverse(params) -> tuple[str, dict]:
    field = _field_from_args(params)
    k = int(params.get("k", 2))
    alphas = _ints(params["alphas"]) if "alphas" in params else [1 << j for j in range(k)]
    f = inverse_zk_bent(field, alphas)
    report = {
        "construction": "inverse-z2k",
        "m": field.m,
        "k": k,
        "alphas": alphas,
        "verified_zk_bent": f.is_zk_bent(),
    }
    return formats.genfn_to_text(f), report


def _construct_spread(params) -> tuple[str, dict]:
    n = int(params.get("n", 4))
    if n % 2:
        raise PreconditionError("spread construction needs even n", clause="even n")
    field = Field(n)
    pair = PairSplit(field)
    u_part, parts = desarguesian_spread(pair)
    k = n // 2
    f = zk_bent_from_partition(n, parts, u_part, k, field)
    ok = f.is_zk_bent()
    if not ok:
        raise VerificationFailed("spread labeling failed the Z_{2^k}-bent check")
    report = {
        "construction": "spread-z2k",
        "n": n,
        "k": k,
        "verified_zk_bent": ok,
    }
    return formats.genfn_to_text(f), report


def _construct_nega_shift(params) -> tuple[str, dict]:
    path = params.get("in")
    if not path:
        raise PreconditionError("nega-shift needs in=<genfn file>", clause="input file")
    with open(path) as fh:
        f = formats.genfn_from_text(fh.read())
    direction = params.get("direction", "to_nega")
    g = f.nega_shift(direction)
    report: dict = {
        "construction": "nega-shift",
        "direction": direction,
        "input_zk_bent": f.is_zk_bent(),
        "input_nega_zk_bent": f.is_nega_zk_bent(),
        "output_zk_bent": g.is_zk_bent(),
        "output_nega_zk_bent": g.is_nega_zk_bent(),
        "round_trip_identity": g.nega_shift(
            "to_plain" if direction == "to_nega" else "to_nega") == f,
    }
    if direction == "to_nega" and report["input_zk_bent"] and not report["output_nega_zk_bent"]:
        raise VerificationFailed("shift of a Z-bent input failed the nega-Z-bent check")
    if direction == "to_plain" and report["input_nega_zk_bent"] and not report["output_zk_bent"]:
        raise VerificationFailed("shift of a nega-Z-bent input failed the Z-bent check")
    return formats.genfn_to_text(g), report


_CONSTRUCTIONS = {
    "kppp": _construct_kppp,
    "am-gbent": _construct_am_gbent,
    "cex": _construct_cex,
    "inverse-z2k": _construct_inverse,
    "spread-z2k": _construct_spread,
    "nega-shift": _construct_nega_shift,
}


def cmd_construct(args) -> int:
    if args.name not in _CONSTRUCTIONS:
        raise ParseError(f"unknown construction {args.name!r}; known: {sorted(_CONSTRUCTIONS)}")
    params = _parse_kv(args.params)
    text, report = _CONSTRUCTIONS[args.name](params)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        report["out"] = args.out
    else:
        sys.stdout.write(text)
    sys.stdout.write(formats.canonical_json(report))
    return 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.name == "list":
        for name in verify.ACCEPTANCE_ORDER:
            print(name)
        return 0
    params = _parse_kv(args.params)
    checks = verify.run_suite(args.name, params, seed=args.seed)
    failed = 0
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        detail = f"  ({c.detail})" if c.detail else ""
        print(f"{status}  {c.name}{detail}")
        failed += 0 if c.passed else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


# ----------------------------------------------------------------------
# search
# ----------------------------------------------------------------------

def _search_am_complete(params, budget, seed, workers) -> SearchResult:
    field = _field_from_args(params)
    klass = params.get("class", "monomial")
    return search_sum_inverse_complete(field, klass, budget)


def _search_cex(params, budget, seed, workers) -> SearchResult:
    field = _field_from_args(params)
    e = int(params.get("e", 1))
    hits = mm_exponent_search(field, e)
    out = []
    for c1, c2, c3 in hits:
        entry = {"m": field.m, "e": e, "c": [c1, c2, c3]}
        try:
            mm_exponent_zk_bent(field, e, c1, c2, c3)
            entry["z8_bent"] = True
        except BentzooError as exc:  # pragma: no cover - search output is pre-filtered
            entry["z8_bent"] = False
            entry["error"] = str(exc)
        out.append(entry)
    return SearchResult(out, len(hits), False)


def _search_nega_gbent(params, budget, seed, workers) -> SearchResult:
    n = int(params.get("n", 4))
    k = int(params.get("k", 2))
    field = Field(n)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = 16
        per = [budget // chunks] * chunks
        per[0] += budget - sum(per)
        hits = []
        examined = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(search_nontrivial_nega_gbent, field, k, b, seed + i)
                for i, b in enumerate(per) if b
            ]
            for fut in futures:
                res = fut.result()
                hits.extend(res.hits)
                examined += res.examined
        hits.sort(key=lambda h: h["values"])
        return SearchResult(hits, examined, False)
    return search_nontrivial_nega_gbent(field, k, budget, seed)


_SEARCHES = {
    "am-complete": _search_am_complete,
    "cex": _search_cex,
    "nega-gbent-nontrivial": _search_nega_gbent,
}


def cmd_search(args) -> int:
    if args.name not in _SEARCHES:
        raise ParseError(f"unknown search {args.name!r}; known: {sorted(_SEARCHES)}")
    params = _parse_kv(args.params)
    budget = int(params.pop("budget", args.budget))
    seed = int(params.pop("seed", args.seed))
    if budget <= 0:
        result = SearchResult([], 0, True)
    else:
        result = _SEARCHES[args.name](params, budget, seed, args.workers)
    lines = [formats.canonical_json(hit).rstrip("\n") for hit in result.hits]
    summary = formats.canonical_json({
        "summary": args.name,
        "hits": len(result.hits),
        "examined": result.examined,
        "budget_exhausted": result.budget_exhausted,
    }).rstrip("\n")
    body = "\n".join(lines + [summary]) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    sys.stdout.write(body)
    return 5 if result.budget_exhausted else 0


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bentzoo",
        description="exact bent / negabent / gbent / Z_{2^k}-bent toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze a function file")
    p_an.add_argument("path")
    p_an.add_argument("--out", default=None)
    p_an.add_argument("--timing", action="store_true")
    p_an.set_defaults(func=cmd_analyze)

    p_co = sub.add_parser("construct", help="run a named construction")
    p_co.add_argument("name")
    p_co.add_argument("params", nargs="*", help="key=value parameters")
    p_co.add_argument("--out", default=None)
    p_co.set_defaults(func=cmd_construct)

    p_ve = sub.add_parser("verify", help="run a named verification suite")
    p_ve.add_argument("name")
    p_ve.add_argument("params", nargs="*", help="key=value scale parameters")
    p_ve.add_argument("--seed", type=int, default=0)
    p_ve.set_defaults(func=cmd_verify)

    p_se = sub.add_parser("search", help="run a named search")
    p_se.add_argument("name")
    p_se.add_argument("params", nargs="*", help="key=value parameters")
    p_se.add_argument("--budget", type=int, default=10 ** 6)
    p_se.add_argument("--seed", type=int, default=0)
    p_se.add_argument("--workers", type=int, default=1)
    p_se.add_argument("--out", default=None)
    p_se.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (FlavorMismatch, VariantMismatch) as exc:
        print(f"flavor/variant mismatch: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition violated ({exc.clause}): {exc}", file=sys.stderr)
        return 4
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
