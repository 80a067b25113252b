"""Batch command line interface.

Subcommands: cores, strips, abc, kf-table, expand, pieri, verify.
Output is JSON (--json) or aligned text, byte-deterministic for fixed
inputs.  Exit codes: 0 success, 1 usage error, 2 conjecture mismatch.
Verification sweeps fan out over a thread pool capped by ASK_THREADS.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .abctab import count_affine_factorizations, enumerate_abc
from .cores import (
    NCore,
    c_inverse,
    c_map,
    cores_of_degree,
    normalize,
    w_core,
)
from .schubert import (
    affine_monk_check,
    horizontal_pieri,
    rect_pieri_check,
    strong_pieri_cohomology,
    weak_pieri,
)
from .strips import (
    horizontal_strong_strips_from,
    phi,
    psi,
    ribbon_strong_strips,
    strong_strips,
)
from .symfun import (
    bounded_partitions_of,
    dual_kschur,
    kschur,
    partitions_of,
    ptilde_in_m,
    h0t_in_m,
    weak_kostka_foulkes,
)
from .tableaux import kostka_foulkes
from .tpoly import TPoly


class UsageError(SystemExit):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def parse_partition(text: str) -> tuple:
    if text in ("", "-", "0"):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(1)
    return normalize(parts)


def _core_from_args(args) -> NCore:
    if getattr(args, "core", None) is not None:
        return NCore(args.n, parse_partition(args.core))
    if getattr(args, "bounded", None) is not None:
        return c_map(parse_partition(args.bounded), args.n)
    print("error: one of --core/--bounded is required", file=sys.stderr)
    raise SystemExit(1)


def core_json(core: NCore) -> dict:
    return {"n": core.n, "shape": list(core.parts)}


def tpoly_json(p: TPoly, at_t=None):
    if at_t is not None:
        return p(at_t)
    if p.is_polynomial():
        return p.coeff_list()
    # deformed P-function coefficients live in ZZ[t, 1/t]
    val = p.valuation()
    return {"valuation": val, "coeffs": [p.coeff(e) for e in range(val, p.degree() + 1)]}


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommands -----------------------------------------------------------


def cmd_cores(args) -> int:
    degs = [args.deg] if args.deg is not None else list(range(args.max_deg + 1))
    payload = []
    lines = []
    for d in degs:
        for core in cores_of_degree(args.n, d):
            payload.append(
                {
                    "degree": d,
                    "core": core_json(core),
                    "bounded": list(c_inverse(core)) if core.parts else [],
                    "word": list(w_core(core).window),
                }
            )
            lines.append(f"deg {d}: core {list(core.parts)} bounded {list(c_inverse(core)) if core.parts else []}")
    _emit(args, payload, lines)
    return 0


def _strip_json(chain, contents=None):
    out = {"chain": [list(c.parts) for c in chain]}
    if contents is not None:
        out["contents"] = list(contents)
    return out


def cmd_strips(args) -> int:
    lam = _core_from_args(args)
    payload = []
    lines = []
    if args.kind == "horizontal":
        for s in horizontal_strong_strips_from(lam, args.m):
            payload.append(
                {"nu": core_json(s.nu), **_strip_json(s.chain, s.contents),
                 "word": list(psi(s))}
            )
            lines.append(f"nu {list(s.nu.parts)} contents {list(s.contents)} word {list(psi(s))}")
    elif args.kind == "strong":
        if args.to is None:
            print("error: --to is required for strong strips", file=sys.stderr)
            raise SystemExit(1)
        gamma = NCore(args.n, parse_partition(args.to))
        for s in strong_strips(lam, gamma, args.m):
            payload.append(_strip_json(s.chain, s.contents))
            lines.append(f"chain {[list(c.parts) for c in s.chain]} contents {list(s.contents)}")
    elif args.kind == "ribbon":
        if args.r is None or args.b is None:
            print("error: --r and --b are required for ribbon strips", file=sys.stderr)
            raise SystemExit(1)
        for s in ribbon_strong_strips(lam, args.r, args.b):
            payload.append({"nu": core_json(s.nu), **_strip_json(s.chain)})
            lines.append(f"nu {list(s.nu.parts)} chain {[list(c.parts) for c in s.chain]}")
    _emit(args, payload, lines)
    return 0


def cmd_abc(args) -> int:
    shape = _core_from_args(args)
    weights = (
        [parse_partition(args.weight)]
        if args.weight is not None
        else list(bounded_partitions_of(shape.degree(), args.n))
    )
    payload = []
    lines = []
    for weight in weights:
        for abc in enumerate_abc(shape, weight):
            entry = {
                "n": abc.n,
                "lambda_chain": [list(c.parts) for c in abc.chain],
                "weight": list(abc.weight),
            }
            is_partition_weight = all(
                abc.weight[i] >= abc.weight[i + 1] for i in range(len(abc.weight) - 1)
            )
            if is_partition_weight:
                entry["cocharge"] = abc.n_cocharge()
            payload.append(entry)
            lines.append(abc.pretty())
            lines.append(
                f"weight {list(abc.weight)}"
                + (f" cocharge {entry['cocharge']}" if "cocharge" in entry else "")
            )
            lines.append("")
    _emit(args, payload, lines)
    return 0


def cmd_kf_table(args) -> int:
    parts = list(
        bounded_partitions_of(args.deg, args.n)
        if args.weak
        else partitions_of(args.deg)
    )
    payload = {"n": args.n if args.weak else None, "degree": args.deg, "rows": []}
    lines = []
    for lam in parts:
        row = {"lambda": list(lam), "entries": []}
        cells = []
        for mu in parts:
            p = (
                weak_kostka_foulkes(lam, mu, args.n)
                if args.weak
                else kostka_foulkes(lam, mu)
            )
            row["entries"].append({"mu": list(mu), "coeff": tpoly_json(p, args.at_t)})
            cells.append(str(p(args.at_t)) if args.at_t is not None else repr(p))
        payload["rows"].append(row)
        lines.append(f"{str(list(lam)):<18} " + " | ".join(cells))
    _emit(args, payload, lines)
    return 0


def cmd_expand(args) -> int:
    t_on = not args.t1
    if args.basis in ("dualk", "k"):
        core = _core_from_args(args)
        f = dual_kschur(core, t_on) if args.basis == "dualk" else kschur(core, t_on)
    elif args.basis == "ptilde":
        f = ptilde_in_m(parse_partition(args.bounded))
    elif args.basis == "h0t":
        f = h0t_in_m(parse_partition(args.bounded))
    else:
        raise SystemExit(1)
    if args.at_t is not None:
        f = f.at_t(args.at_t)
    terms = sorted(f.terms.items(), reverse=True)
    payload = {
        "basis": f.basis,
        "n": getattr(args, "n", None),
        "terms": [
            {"partition": list(p), "coeff": tpoly_json(c, None)} for p, c in terms
        ],
    }
    lines = [f"{str(list(p)):<18} {c!r}" for p, c in terms]
    _emit(args, payload, lines)
    return 0


def cmd_pieri(args) -> int:
    lam = _core_from_args(args)
    wk = weak_pieri(args.m, lam)
    hz = horizontal_pieri(args.m, lam)
    st = strong_pieri_cohomology(args.m, lam)
    agree = wk == hz
    payload = {
        "weak": sorted([list(c.parts) for c in wk], reverse=True),
        "horizontal": sorted([list(c.parts) for c in hz], reverse=True),
        "strong_cohomology": sorted(
            [[list(c.parts), mult] for c, mult in st.items()], reverse=True
        ),
        "weak_horizontal_agree": agree,
    }
    lines = [
        "weak:       " + str(payload["weak"]),
        "horizontal: " + str(payload["horizontal"]),
        "strong^:    " + str(payload["strong_cohomology"]),
        "agreement:  " + str(agree),
    ]
    _emit(args, payload, lines)
    return 0 if agree else 2


# -- verify sweeps -----------------------------------------------------------


def _pool_map(fn, items):
    workers = int(os.environ.get("ASK_THREADS", "1") or "1")
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _verify_prop_main(args):
    from .affine import cyclically_decreasing_of_length
    from .cores import core_of

    instances = []
    for d in range(args.max_deg + 1):
        for lam in cores_of_degree(args.n, d):
            instances.append(lam)

    def check(lam):
        n = lam.n
        w = w_core(lam)
        for m in range(0, n):
            strips = horizontal_strong_strips_from(lam, m)
            hss = {s.nu.parts for s in strips}
            weak = set()
            for _word, v in cyclically_decreasing_of_length(n, n - 1 - m):
                u = v * w
                if u.length() == w.length() + n - 1 - m and u.is_grassmannian():
                    weak.add(core_of(u).parts)
            if hss != weak:
                return ("mismatch", lam.parts, m, sorted(hss), sorted(weak))
            for s in strips:
                if phi(psi(s), lam) != s:
                    return ("roundtrip", lam.parts, m, list(psi(s)))
        return None

    failures = [r for r in _pool_map(check, instances) if r is not None]
    return {
        "conjecture": "prop-main",
        "instance": {"n": args.n, "max_deg": args.max_deg},
        "match": not failures,
        "instances": len(instances),
        "lhs": [],
        "rhs": [],
        "failures": failures,
    }


def _verify_theta(args):
    instances = []
    for d in range(args.max_deg + 1):
        for lam in cores_of_degree(args.n, d):
            instances.append(lam)

    def compositions(total, n):
        if total == 0:
            yield ()
            return
        for first in range(1, min(total, n - 1) + 1):
            for rest in compositions(total - first, n):
                yield (first,) + rest

    def check(lam):
        n = lam.n
        w = w_core(lam)
        bad = []
        for alpha in compositions(lam.degree(), n):
            na = len(enumerate_abc(lam, alpha))
            nf = count_affine_factorizations(w, alpha)
            if na != nf:
                bad.append((lam.parts, list(alpha), na, nf))
        return bad or None

    failures = [r for r in _pool_map(check, instances) if r is not None]
    return {
        "conjecture": "theta-bijection",
        "instance": {"n": args.n, "max_deg": args.max_deg},
        "match": not failures,
        "instances": len(instances),
        "lhs": [],
        "rhs": [],
        "failures": failures,
    }


def _verify_affine_monk(args):
    instances = []
    for size in range(0, args.max_size + 1):
        for lam in bounded_partitions_of(size, args.n):
            for r in range(1, args.n):
                instances.append((r, lam))
    reports = _pool_map(lambda rl: affine_monk_check(rl[0], rl[1], args.n), instances)
    failures = [r for r in reports if not r["match"]]
    return {
        "conjecture": "affine-monk",
        "instance": {"n": args.n, "max_size": args.max_size},
        "match": not failures,
        "instances": len(instances),
        "lhs": [],
        "rhs": [],
        "failures": failures,
    }


def _verify_rect_pieri(args):
    instances = []
    for size in range(0, args.max_size + 1):
        for lam in bounded_partitions_of(size, args.n):
            for r in range(2, args.n):
                for b in range(1, r):
                    instances.append((r, b, lam))
    reports = _pool_map(
        lambda rbl: rect_pieri_check(rbl[0], rbl[1], rbl[2], args.n), instances
    )
    failures = [r for r in reports if not r["match"]]
    disagreements = sum(1 for r in reports if not r["readings_agree"])
    return {
        "conjecture": "rect-pieri",
        "instance": {"n": args.n, "max_size": args.max_size},
        "match": not failures,
        "instances": len(instances),
        "reading_disagreements": disagreements,
        "lhs": [],
        "rhs": [],
        "failures": failures,
    }


def cmd_verify(args) -> int:
    runner = {
        "prop-main": _verify_prop_main,
        "theta-bijection": _verify_theta,
        "affine-monk": _verify_affine_monk,
        "rect-pieri": _verify_rect_pieri,
    }[args.sweep]
    report = runner(args)
    print(json.dumps(report, sort_keys=True))
    return 0 if report["match"] else 2


# -- parser ------------------------------------------------------------------


def build_parser() -> Parser:
    parser = Parser(prog="kschur", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("cores", help="list n-cores by degree")
    common(p)
    p.add_argument("--deg", type=int, default=None)
    p.add_argument("--max-deg", type=int, default=6)
    p.set_defaults(func=cmd_cores)

    p = sub.add_parser("strips", help="enumerate strips")
    common(p)
    p.add_argument("--core", default=None)
    p.add_argument("--bounded", default=None)
    p.add_argument("--kind", choices=("horizontal", "strong", "ribbon"), default="horizontal")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--to", default=None, help="target core for strong strips")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.set_defaults(func=cmd_strips)

    p = sub.add_parser("abc", help="enumerate affine Bruhat countertableaux")
    common(p)
    p.add_argument("--core", default=None)
    p.add_argument("--bounded", default=None)
    p.add_argument("--weight", default=None, help="composition; default all partition weights")
    p.set_defaults(func=cmd_abc)

    p = sub.add_parser("kf-table", help="Kostka-Foulkes tables")
    common(p)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--weak", action="store_true")
    p.add_argument("--at-t", type=int, default=None)
    p.set_defaults(func=cmd_kf_table)

    p = sub.add_parser("expand", help="basis expansions in m")
    common(p)
    p.add_argument("--basis", choices=("dualk", "k", "ptilde", "h0t"), required=True)
    p.add_argument("--core", default=None)
    p.add_argument("--bounded", default=None)
    p.add_argument("--t1", action="store_true", help="specialize t = 1")
    p.add_argument("--at-t", type=int, default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("pieri", help="the three Pieri rules with agreement diff")
    common(p)
    p.add_argument("--core", default=None)
    p.add_argument("--bounded", default=None)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("verify", help="conjecture verification sweeps")
    p.add_argument("sweep", choices=("affine-monk", "rect-pieri", "prop-main", "theta-bijection"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
