"""Command-line front end.  Every verb prints one JSON document on stdout.

Exit status: 0 on success, 1 when the inputs are well formed but the
computation is refused (bad shape, undecided order, failed checks), 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import checks, hopf, operators, ppartitions, series, tableaux, words
from .series import BasisElement
from .shapes import ShapeError, parse_composition, parse_partition, parse_skew

SYM_FAMILIES = ("s", "g", "gt", "G", "Kt", "J", "j")


class UsageError(Exception):
    pass


def _dump(obj, out):
    out.write(json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n")


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.verb}")


def cmd_expand(args):
    _need(args, "of", "label")
    of = series.normalize_tag(args.of)
    if of in SYM_FAMILIES:
        if args.basis not in ("s", "m"):
            raise UsageError(f"--basis must be s or m when expanding {of}")
        if of == "s":
            x = BasisElement("s", {tuple(parse_partition(args.label)): 1})
        else:
            shape = parse_skew(args.label)
            cap = args.cap
            if of in ("G", "Kt", "J") and cap is None:
                cap = shape.size + 3
            x = series.family_in_schur(of, shape, cap)
        if args.basis == "m":
            x = BasisElement("m", series.s_to_m(x.coeffs), x.cap)
        return x.to_json()
    if of in ("Lt", "Mt"):
        if args.basis != "L":
            raise UsageError(f"--basis must be L when expanding {of}")
        alpha = tuple(parse_composition(args.label))
        cap = args.cap if args.cap is not None else sum(alpha) + hopf.DEFAULT_EXTRA
        x = hopf.ltilde_in_L(alpha, cap) if of == "Lt" else hopf.mtilde_in_L(alpha, cap)
        return x.to_json()
    if of == "Rt":
        if args.basis not in ("MMR", "F"):
            raise UsageError("--basis must be MMR or F when expanding Rt")
        alpha = tuple(parse_composition(args.label))
        if args.basis == "F":
            expr = hopf.rtilde_in_F(alpha)
            return {"basis": "F", "cap": None,
                    "coeffs": {"*".join(f"F{k}" for k in mono) or "1": c
                               for mono, c in sorted(expr.items())}}
        return words.element_to_json(words.WordElement(dict(hopf.rtilde_expand(alpha))))
    raise UsageError(f"cannot expand {of}")


def cmd_product(args):
    _need(args, "left", "right")
    b = args.basis
    if b == "mMR":
        u, v = words.parse_small(args.left), words.parse_small(args.right)
        cap = args.cap if args.cap is not None else len(u) + len(v) + 1
        return words.element_to_json(words.mmr_product(u, v, cap))
    if b == "MMR":
        return words.element_to_json(words.mmr_big_product(words.parse_big(args.left),
                                                           words.parse_big(args.right)))
    if b == "Lt":
        a, c = tuple(parse_composition(args.left)), tuple(parse_composition(args.right))
        return hopf.ltilde_product(a, c, args.cap).to_json()
    if b == "Rt":
        return hopf.rtilde_product(parse_composition(args.left), parse_composition(args.right)).to_json()
    if b in ("g", "gt"):
        return hopf.g_ribbon_product(parse_skew(args.left), parse_skew(args.right), tilde=b == "gt").to_json()
    if b == "shuffle":
        u, v = words.parse_word(args.left), words.parse_word(args.right)
        cap = args.cap if args.cap is not None else len(u) + len(v)
        return words.element_to_json(words.multishuffle(u, v, cap))
    raise UsageError(f"no product for basis {b}")


def cmd_coproduct(args):
    _need(args, "label")
    b = args.basis
    if b == "mMR":
        return words.element_to_json(words.mmr_coproduct(words.parse_small(args.label)))
    if b == "MMR":
        return words.element_to_json(words.mmr_big_coproduct(words.parse_big(args.label)))
    if b == "Lt":
        return hopf.ltilde_coproduct(parse_composition(args.label), args.cap).to_json()
    if b == "cuut":
        return words.element_to_json(words.cuut(words.parse_word(args.label)))
    raise UsageError(f"no coproduct for basis {b}")


def cmd_pair(args):
    _need(args, "left", "right", "left_of", "right_of")
    cap = args.cap if args.cap is not None else 6
    def side(tag, label):
        tag = series.normalize_tag(tag)
        if tag == "s":
            return BasisElement("s", {tuple(parse_partition(label)): 1})
        if tag not in SYM_FAMILIES:
            raise UsageError(f"cannot pair basis {tag}")
        return series.family_in_schur(tag, parse_skew(label), cap)
    value = series.hall_pair(side(args.left_of, args.left), side(args.right_of, args.right))
    return {"pairing": value, "cap": cap}


def cmd_enumerate(args):
    _need(args, "kind", "shape", "max_entry")
    stream = tableaux.enumerate_tableaux(args.kind, parse_skew(args.shape), args.max_letters, args.max_entry)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    return [t.to_json() for t in stream]


def cmd_mjh(args):
    _need(args, "shape", "length")
    P = ppartitions.LabeledPoset.from_shape(parse_skew(args.shape))
    return [words.format_small(w) for w in ppartitions.multi_jordan_holder(P, args.length)]


def cmd_oracle(args):
    _need(args, "series", "shape", "degree")
    tag = series.normalize_tag(args.series)
    if tag not in operators.SERIES:
        raise UsageError(f"--series must be one of {sorted(operators.SERIES)}")
    nvars = args.nvars if args.nvars is not None else args.degree
    lam = parse_partition(args.shape)
    nu = parse_partition(args.inner) if args.inner else ()
    f = operators.series_via_operators(tag, lam, nvars, args.degree, nu)
    out = {"series": tag, "route": "operators", "poly": f.to_json()}
    if args.compare:
        from .shapes import SkewShape, Partition
        g = series.family_poly(tag, SkewShape(lam, Partition(nu)), nvars, args.degree)
        out["matches_tableaux"] = f == g
    return out


def cmd_antipode(args):
    _need(args, "label")
    return words.element_to_json(words.antipode_big(words.parse_big(args.label)))


def cmd_factor(args):
    _need(args, "label")
    if args.basis == "MMR":
        return [words.format_big(p) for p in words.factor_irreducible(words.parse_big(args.label))]
    return [words.format_small(p) for p in words.factor_irreducible(words.parse_small(args.label))]


def cmd_order(args):
    _need(args, "left", "right")
    w, v = words.parse_big(args.left), words.parse_big(args.right)
    try:
        return {"leq": words.weak_order_leq(w, v, args.bound), "bound": args.bound or w.n + v.n}
    except words.UndecidedAtBound as exc:
        raise DomainFailure(str(exc), {"leq": None, "bound": args.bound or w.n + v.n})


def cmd_pump(args):
    _need(args, "label", "times")
    if args.basis not in ("L", "M"):
        raise UsageError("--basis must be L or M for pump")
    f = BasisElement(args.basis, {tuple(parse_composition(args.label)): 1})
    return hopf.pump(f, args.times).to_json()


def cmd_verify(args):
    report, ok = [], True
    for mod, prop, fails in checks.run_suites(args.suite, args.size, args.seed):
        report.append({"module": mod, "property": prop, "passed": not fails, "failures": fails[:5]})
        ok &= not fails
    out = {"suite": args.suite, "size": args.size, "seed": args.seed, "passed": ok, "checks": report}
    if not ok:
        raise DomainFailure("verification failed", out)
    return out


class DomainFailure(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


VERBS = {
    "expand": cmd_expand, "product": cmd_product, "coproduct": cmd_coproduct, "pair": cmd_pair,
    "enumerate": cmd_enumerate, "mjh": cmd_mjh, "oracle": cmd_oracle, "antipode": cmd_antipode,
    "factor": cmd_factor, "order": cmd_order, "pump": cmd_pump, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multihopf", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--basis", default="s")
    p.add_argument("--of")
    p.add_argument("--label")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--left-of", dest="left_of")
    p.add_argument("--right-of", dest="right_of")
    p.add_argument("--cap", type=int)
    p.add_argument("--kind", choices=tableaux.KINDS)
    p.add_argument("--shape")
    p.add_argument("--inner")
    p.add_argument("--max-letters", dest="max_letters", type=int)
    p.add_argument("--max-entry", dest="max_entry", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--series")
    p.add_argument("--nvars", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--compare", action="store_true")
    p.add_argument("--bound", type=int)
    p.add_argument("--times", type=int)
    p.add_argument("--suite", default="all", choices=["all", *checks.SUITES])
    p.add_argument("--size", default="small", choices=["small", "full"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write JSON here instead of stdout")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _dump(VERBS[args.verb](args), out)
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainFailure as exc:
        if exc.payload is not None:
            _dump(exc.payload, out)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
