"""Command-line interface: ``semideg <command> ...``.

Exit status is 0 on success, 1 when a computation rejects its input (the
message names the violated precondition) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import banddeg, golden, hypergraph, nildeg, numerics, oracle, rightnull
from .transform import Transformation, classify_structure, format_transformation, parse_transformation

# witnesses are re-verified pairwise before printing, which is quadratic
WITNESS_CAP = 2000


class DomainError(Exception):
    """Wrong number of positional values for a subcommand (a usage error)."""


def _seq_value(name: str, n: int) -> int:
    if name in ("xi", "nu"):
        return numerics.xi(n)
    if name == "alpha":
        return numerics.alpha(n)
    if name == "pi":
        return numerics.pi(n)
    if name == "kappa":
        return nildeg.kappa(n)[0]
    if name == "mu":
        return rightnull.mu_rank1(n)
    raise KeyError(name)


SEQUENCES = ("xi", "alpha", "pi", "nu", "kappa", "F", "F1", "G", "G1", "H", "H1", "mu")


def sequence(name: str, lo: int, hi: int) -> list[int]:
    if lo > hi:
        raise ValueError(f"--from {lo} exceeds --to {hi}")
    if name in ("F", "F1"):
        F, F1 = nildeg.F_table(hi)
        src = F if name == "F" else F1
        if name == "F1" and lo < 1:
            raise ValueError("F1 is defined for n >= 1")
        if lo < 0:
            raise ValueError("n must be >= 0")
        return src[lo : hi + 1]
    if name in ("G", "G1", "H", "H1"):
        if lo < 0 or (name in ("G1", "H1") and lo < 1):
            raise ValueError(f"{name} is defined for n >= {0 if name in ('G', 'H') else 1}")
        G, G1, H, H1 = nildeg.G_table(hi)
        src = {"G": G, "G1": G1, "H": H, "H1": H1}[name]
        return src[lo : hi + 1]
    return [_seq_value(name, n) for n in range(lo, hi + 1)]


def _checked_witness(kind: str, elems: list[Transformation], expect: dict) -> list[str]:
    # print, re-parse and re-verify before anything is emitted
    lines = [format_transformation(f) for f in sorted(elems)]
    back = [parse_transformation(s) for s in lines]
    rep = classify_structure(back)
    ok = rep.closed and all(getattr(rep, k) == v for k, v in expect.items())
    if kind == "nilpotent":
        ok = ok and nildeg.is_three_nilpotent(back)
    if not ok:  # pragma: no cover
        raise RuntimeError(f"{kind} witness failed verification: {rep.to_dict()}")
    return lines


def _witness(args) -> tuple[list[str], dict]:
    kind = args.kind
    if kind == "band":
        p, q = args.a, args.b
        _cap(p * q)
        res = banddeg.beta(p, q)
        elems = banddeg.band_witness(p, q)
        lines = _checked_witness(kind, elems, {"band_dimensions": (p, q)})
        meta = {"kind": kind, "p": p, "q": q, "degree": res.degree, "rank": res.rank}
    elif kind == "rightnull":
        p, q = args.a, args.b
        _cap(p * q)
        elems = rightnull.rn_witness(p, q)
        lines = _checked_witness(kind, elems, {"right_null_dimensions": (p, q)})
        meta = {"kind": kind, "p": p, "q": q, "degree": elems[0].degree}
    elif kind == "null":
        n = args.a
        if n < 1:
            raise ValueError("witness null needs n >= 1")
        _cap(numerics.xi(n))
        elems = nildeg.null_witness(n)
        lines = _checked_witness(kind, elems, {"is_null": True})
        meta = {"kind": kind, "n": n, "size": len(elems)}
    else:
        n = args.a
        if n < 4:
            raise ValueError("witness nilpotent needs n >= 4")
        _cap(nildeg.kappa(n)[0])
        elems = nildeg.nilpotent_witness(n)
        lines = _checked_witness(kind, elems, {})
        meta = {"kind": kind, "n": n, "size": len(elems)}
    return lines, meta


def _cap(size: int):
    if size > WITNESS_CAP:
        raise ValueError(f"witness would have {size} elements; the cap is {WITNESS_CAP}")


def _degree(args) -> dict:
    k, v = args.kind, args.values
    need = {"band": 2, "rectgroup": 3, "null": 1, "leftzero": 1, "rightzero": 1, "rightnull": 2, "variant": 2}[k]
    if len(v) != need:
        raise DomainError(f"degree {k} takes {need} integer argument(s)")
    if k == "band":
        return banddeg.beta(*v).to_dict()
    if k == "rectgroup":
        return {"degree": banddeg.rect_group_degree(*v)}
    if k == "null":
        return {"degree": nildeg.null_degree(*v)}
    if k == "leftzero":
        return {"degree": banddeg.lz_degree(*v)}
    if k == "rightzero":
        return {"degree": banddeg.rz_degree(*v)}
    if k == "rightnull":
        return rightnull.rn_degree(*v).to_dict()
    return rightnull.variant_degree(*v).to_dict()


def _oracle(args) -> dict:
    k, v = args.kind, getattr(args, "values", None)
    if k == "mindeg":
        with open(args.file) as fh:
            S = oracle.parse_cayley_table(fh.read())
        m = oracle.min_degree_bruteforce(S, args.max)
        out = {"degree": m, "exceeded": m is None, "m_max": args.max}
        if m is not None:
            out["embedding"] = [format_transformation(f) for f in oracle.find_embedding(S, m)]
        return out
    need = {"maxnull": 1, "countnull": 1, "hyper": 3, "leftnull": 1}[k]
    if len(v) != need:
        raise DomainError(f"oracle {k} takes {need} integer argument(s)")
    if k == "maxnull":
        return {"size": oracle.max_null_bruteforce(*v)}
    if k == "countnull":
        return {"count": oracle.count_maximal_null_bruteforce(*v)}
    if k == "hyper":
        m = oracle.max_edges_bruteforce(*v)
        return {"edges": m, "feasible": m is not None, "formula": hypergraph.max_edges(*v)}
    found = oracle.find_left_null(v[0])
    out = {"found": found is not None}
    if found:
        out["elements"] = [format_transformation(f) for f in found]
    return out


def _emit(obj, as_json: bool):
    if as_json:
        print(json.dumps(obj, sort_keys=False))
        return
    for key, val in obj.items():
        if isinstance(val, dict):
            val = " ".join(f"{a}:{b}" for a, b in val.items())
        elif isinstance(val, list):
            print(f"{key}:")
            for item in val:
                print(f"  {item}")
            continue
        print(f"{key:<10} {val}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semideg", description="Degrees and extremal subsemigroups of transformation semigroups.")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="print a sequence, one value per line")
    s.add_argument("name", choices=SEQUENCES)
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", dest="hi", type=int, required=True)

    d = sub.add_parser("degree", help="degree of a semigroup family member")
    d.add_argument("kind", choices=["band", "rectgroup", "null", "leftzero", "rightzero", "rightnull", "variant"])
    d.add_argument("values", type=int, nargs="+")

    w = sub.add_parser("witness", help="print a verified witness, one map per line")
    w.add_argument("kind", choices=["band", "null", "nilpotent", "rightnull"])
    w.add_argument("a", type=int)
    w.add_argument("b", type=int, nargs="?")

    o = sub.add_parser("oracle", help="run a brute-force search")
    osub = o.add_subparsers(dest="kind", required=True)
    m = osub.add_parser("mindeg", help="least degree of a semigroup given as a Cayley table file")
    m.add_argument("file")
    m.add_argument("--max", type=int, default=6)
    for name, nargs in (("maxnull", 1), ("countnull", 1), ("hyper", 3), ("leftnull", 1)):
        p = osub.add_parser(name)
        p.add_argument("values", type=int, nargs=nargs)

    v = sub.add_parser("verify-tables", help="recompute the bundled reference tables")
    v.add_argument("--table", type=int, action="append", choices=list(golden.TABLES))

    for p in (s, d, w, o, v, m):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = args.json
    try:
        if args.command == "seq":
            vals = sequence(args.name, args.lo, args.hi)
            if as_json:
                print(json.dumps({"name": args.name, "from": args.lo, "to": args.hi, "values": [str(x) for x in vals]}))
            else:
                for x in vals:
                    print(x)
        elif args.command == "degree":
            _emit(_degree(args), as_json)
        elif args.command == "witness":
            if args.kind in ("band", "rightnull") and args.b is None:
                raise DomainError(f"witness {args.kind} takes p and q")
            if args.kind in ("null", "nilpotent") and args.b is not None:
                raise DomainError(f"witness {args.kind} takes only n")
            lines, meta = _witness(args)
            if as_json:
                print(json.dumps({**meta, "elements": lines}))
            else:
                print("\n".join(lines))
        elif args.command == "oracle":
            _emit(_oracle(args), as_json)
        else:
            reports = golden.verify_tables(args.table)
            if as_json:
                print(json.dumps([r.to_dict() for r in reports]))
            else:
                for r in reports:
                    print(f"table{r.table}: {r.passed}/{r.total} {'ok' if r.ok else 'FAIL'}")
                    for key, exp, got in r.mismatches:
                        print(f"  {key}: expected {exp}, got {got}")
            if not all(r.ok for r in reports):
                return 1
    except DomainError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
