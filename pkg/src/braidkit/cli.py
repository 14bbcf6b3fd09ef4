"""
Command-line front end.

Exit codes: 0 computed and the predicate holds (or there is no predicate),
1 computed and the predicate fails, 2 usage or input error, 3 resource
limit reached.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from . import amalgam, conjugacy, crypto, garside
from .gwp import gwp as decide_gwp
from .errors import BraidError, ResourceLimit
from .words import exp_sum, parse_word, permutation_image

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _nf_json(nf: garside.NormalForm) -> dict:
    return {"n": nf.n, "r": nf.r, "factors": [[x + 1 for x in f] for f in nf.factors], "text": nf.render()}


def _emit(args, payload: dict, text: str) -> str:
    return json.dumps(payload, sort_keys=True) if args.json else text


def _cmd_nf(args):
    nf = garside.normal_form(parse_word(args.word, args.n))
    return EXIT_TRUE, _emit(args, _nf_json(nf), nf.render())


def _cmd_eq(args):
    same = garside.compare(parse_word(args.u, args.n), parse_word(args.v, args.n))
    return (EXIT_TRUE if same else EXIT_FALSE), _emit(args, {"equal": same}, "equal" if same else "not equal")


def _cmd_exp(args):
    e = exp_sum(parse_word(args.word, args.n))
    return EXIT_TRUE, _emit(args, {"exp": e}, str(e))


def _cmd_perm(args):
    p = permutation_image(parse_word(args.word, args.n))
    return EXIT_TRUE, _emit(args, {"perm": [x + 1 for x in p.images]}, p.one_line())


def _cmd_gwp(args):
    res = decide_gwp(parse_word(args.x, args.n), parse_word(args.y, args.n))
    return (EXIT_TRUE if res.is_power else EXIT_FALSE), _emit(args, {"power": res.power}, str(res))


def _cmd_conj(args):
    ok = conjugacy.are_conjugate(parse_word(args.u, args.n), parse_word(args.v, args.n), args.limit)
    return (EXIT_TRUE if ok else EXIT_FALSE), _emit(args, {"conjugate": ok}, "conjugate" if ok else "not conjugate")


def _cmd_conj_power(args):
    if args.gen is not None:
        if len(args.words) != 2:
            raise BraidError("conj-power --gen I expects two words A B")
        a, b = (parse_word(w, args.n) for w in args.words)
        res = conjugacy.generator_power_conjugacy_search(a, b, args.gen, args.limit)
        payload = {"kind": res.kind, "ks": sorted(res.ks)}
        return (EXIT_FALSE if res.kind == "none" else EXIT_TRUE), _emit(args, payload, str(res))
    if args.k is None or args.p is None or len(args.words) != 1:
        raise BraidError("conj-power needs either --gen I A B or --k K --p P W")
    c = conjugacy.conjugate_power_of_h_search(parse_word(args.words[0], args.n), args.k, args.p, args.limit)
    return (EXIT_FALSE if c is None else EXIT_TRUE), _emit(args, {"c": c}, "none" if c is None else f"c={c}")


def _cmd_double_coset(args):
    found = conjugacy.double_coset_search(parse_word(args.u, args.n), parse_word(args.v, args.n), args.k, args.p, args.limit)
    if found is None:
        return EXIT_FALSE, _emit(args, {"m": None, "n": None}, "none")
    m, n = found
    return EXIT_TRUE, _emit(args, {"m": m, "n": n}, f"m={m} n={n}")


def _cmd_sss(args):
    s = conjugacy.super_summit_set(parse_word(args.word, args.n), args.limit)
    elems = [nf.render() for nf in s.sorted()]
    payload = {"inf": s.achieved_inf, "sup": s.achieved_sup, "elements": elems}
    return EXIT_TRUE, _emit(args, payload, "\n".join(elems))


def _presentation(args) -> amalgam.AmalgamPresentation:
    return amalgam.AmalgamPresentation(args.n1, args.n2, args.k, args.j, args.p, args.r)


def _cmd_amalgam_wp(args):
    pres = _presentation(args)
    w = amalgam.parse_amalgam_word(args.word, pres)
    reduced, h_power = amalgam.amalgam_reduce(w, pres)
    trivial = not reduced.syllables and h_power == 0
    payload = {"trivial": trivial, "reduced": reduced.render(), "h_power": h_power}
    text = "trivial" if trivial else (f"nontrivial: h^{h_power}" if h_power is not None else f"nontrivial: {reduced.render()}")
    return (EXIT_TRUE if trivial else EXIT_FALSE), _emit(args, payload, text)


def _cmd_amalgam_conj(args):
    pres = _presentation(args)
    u, v = (amalgam.parse_amalgam_word(t, pres) for t in (args.u, args.v))
    cert = amalgam.amalgam_are_conjugate(u, v, pres, args.limit)
    payload = {"conjugate": cert.verdict, "witness": list(cert.witness) if cert.witness else None}
    return (EXIT_TRUE if cert else EXIT_FALSE), _emit(args, payload, "conjugate" if cert else "not conjugate")


def _cmd_aag(args):
    if args.full_scale:
        params = crypto.aag_full_scale_params(args.seed)
    else:
        params = crypto.aag_default_params(args.seed, args.n, args.gens, args.gen_len, args.secret_len)
    t = crypto.aag_run(params)
    return (EXIT_TRUE if t.agree else EXIT_FALSE), json.dumps(t.to_json(), indent=None if args.json else 2)


def _cmd_klchkp(args):
    if args.full_scale:
        params = crypto.klchkp_full_scale_params(args.seed)
    else:
        params = crypto.klchkp_default_params(args.seed, args.n, args.l, args.x_len, args.secret_len)
    t = crypto.klchkp_run(params)
    return (EXIT_TRUE if t.agree else EXIT_FALSE), json.dumps(t.to_json(), indent=None if args.json else 2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--limit", type=int, default=conjugacy.DEFAULT_LIMIT, help="cap on search/set sizes")

    strands = argparse.ArgumentParser(add_help=False)
    strands.add_argument("-n", type=int, required=True, help="strand count")

    pres = argparse.ArgumentParser(add_help=False)
    for flag in ("--n1", "--n2", "--k", "--j", "--p", "--r"):
        pres.add_argument(flag, type=int, required=True)

    parser = argparse.ArgumentParser(prog="braidkit", description="Braid group algorithms")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, parents, help):
        p = sub.add_parser(name, parents=parents, help=help)
        p.set_defaults(func=func)
        return p

    verb("nf", _cmd_nf, [common, strands], "left normal form").add_argument("word")
    p = verb("eq", _cmd_eq, [common, strands], "word problem")
    p.add_argument("u")
    p.add_argument("v")
    verb("exp", _cmd_exp, [common, strands], "exponent sum").add_argument("word")
    verb("perm", _cmd_perm, [common, strands], "permutation image").add_argument("word")
    p = verb("gwp", _cmd_gwp, [common, strands], "is Y a power of X")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p = verb("conj", _cmd_conj, [common, strands], "conjugacy in B_n")
    p.add_argument("u")
    p.add_argument("v")
    p = verb("conj-power", _cmd_conj_power, [common, strands], "power-conjugacy searches")
    p.add_argument("--gen", type=int, help="find k with s_gen^-k A s_gen^k = B")
    p.add_argument("--k", type=int, help="with --p: find c with W conjugate to s_k^(pc)")
    p.add_argument("--p", type=int)
    p.add_argument("words", nargs="+")
    p = verb("double-coset", _cmd_double_coset, [common, strands], "s_k^(pm) U s_k^(pn) = V")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("u")
    p.add_argument("v")
    verb("sss", _cmd_sss, [common, strands], "super summit set").add_argument("word")
    verb("amalgam-wp", _cmd_amalgam_wp, [common, pres], "word problem in the amalgam").add_argument("word")
    p = verb("amalgam-conj", _cmd_amalgam_conj, [common, pres], "conjugacy in the amalgam")
    p.add_argument("u")
    p.add_argument("v")

    p = verb("aag", _cmd_aag, [common], "commutator key agreement")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-n", type=int, default=8)
    p.add_argument("--gens", type=int, default=5)
    p.add_argument("--gen-len", type=int, default=5)
    p.add_argument("--secret-len", type=int, default=6)
    p.add_argument("--full-scale", action="store_true", help="large preset parameters (slow)")
    p = verb("klchkp", _cmd_klchkp, [common], "commuting-subgroup key agreement")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-n", type=int, default=8)
    p.add_argument("--l", type=int, default=4)
    p.add_argument("--x-len", type=int, default=20)
    p.add_argument("--secret-len", type=int, default=10)
    p.add_argument("--full-scale", action="store_true", help="large preset parameters (slow)")
    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one invocation; diagnostics go to stderr, the result text is returned."""
    parser = build_parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        sys.stderr.write(err.getvalue())
        return (EXIT_USAGE if exc.code else EXIT_TRUE), ""
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"braidkit: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT, ""
    except (BraidError, ValueError) as exc:
        print(f"braidkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
