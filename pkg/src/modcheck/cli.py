"""Command-line front end: ``modcheck inspect|lattice|endos|check|verify``.

Exit status is 2 for malformed or semantically invalid input, 1 when a
verification run records a failure, and 0 otherwise (a predicate that is
false is still a successful ``check``).
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__
from .dsl import build_endo, build_module, build_submodule, parse_endo, parse_module, parse_submodule, submodule_to_text
from .endo import EndoFamily, enumerate_endomorphisms, is_fully_invariant, is_one_to_one, is_onto
from .errors import ModcheckError, PredicateError, SpecError
from .harness.corpus import CorpusConfig, apply_env, corpus_summary, read_config_file
from .harness.report import emit_report, run_failed
from .harness.verifiers import THEOREM_IDS, corpus_for, verify_all, verify_theorem
from .module import (
    annihilator,
    is_cyclic,
    is_faithful,
    is_prime_submodule,
    is_weakly_prime_submodule,
    prime_submodule_witness,
    submodule_lattice,
)
from .mult import is_multiplication
from .predicates import S_PRIME_CRITERIA, S_WEAKLY_CRITERIA

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

PREDICATES = ("s-prime", "s-weakly-prime", "prime", "weakly-prime", "fully-invariant")


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run_command can report exit status 2
    def error(self, message):
        raise _ArgumentError(message)


def _common_flags(suppress):
    # subcommands must not reset flags given before the subcommand name
    extra = {"default": argparse.SUPPRESS} if suppress else {}
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output", **extra)
    common.add_argument("--quiet", action="store_true", help="print only the verdict or summary", **extra)
    common.add_argument("--seed", type=int, help="seed for sampled sweeps (recorded in the config)", **extra)
    return common


def _build_parser():
    p = _Parser(prog="modcheck", description="Finite module algebra and S-prime submodule checks.", parents=[_common_flags(False)])
    common = _common_flags(True)
    p.add_argument("--version", action="version", version=f"modcheck {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (
        ("inspect", "order, cyclicity, faithfulness, multiplication, Ann(M), lattice size, endomorphism count"),
        ("lattice", "every submodule with its primality flags"),
        ("endos", "every endomorphism matrix with onto / one-to-one flags"),
    ):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("module", help='module spec, e.g. "Z4 x Z2 over Z4"')

    ck = sub.add_parser("check", help="evaluate one predicate on one submodule", parents=[common])
    ck.add_argument("predicate", choices=PREDICATES)
    ck.add_argument("module")
    ck.add_argument("--submodule", required=True, help='"span {(0,1)}", "0" or "full"')
    ck.add_argument("--criterion", default="definition", choices=sorted(set(S_PRIME_CRITERIA) | set(S_WEAKLY_CRITERIA)))
    ck.add_argument("--endo", default=None, help='restrict the family to one map, e.g. "matrix [0 1; 1 0]"')

    vf = sub.add_parser("verify", help="sweep one statement (or all) over a corpus", parents=[common])
    vf.add_argument("theorem", help="statement id or 'all': " + ", ".join(THEOREM_IDS))
    vf.add_argument("--ring-moduli", default=None, help="comma-separated n values, e.g. 2,3,4")
    vf.add_argument("--max-order", type=int, default=None)
    vf.add_argument("--max-endo", type=int, default=None)
    vf.add_argument("--products", action="store_true", help="include shared-ring product pairs")
    vf.add_argument("--decomposable", action="store_true", help="include decomposable-ring pairs")
    vf.add_argument("--config", default=None, help="key = value file with CorpusConfig keys")
    return p


def _yesno(b):
    return "yes" if b else "no"


def _load_module(text):
    return build_module(parse_module(text), text)


def _cmd_inspect(args, out):
    M = _load_module(args.module)
    info = {
        "module": str(M),
        "order": M.order,
        "cyclic": is_cyclic(M),
        "faithful": is_faithful(M),
        "multiplication": is_multiplication(M),
        "annihilator": str(annihilator(M)),
        "lattice_size": len(submodule_lattice(M)),
        "endomorphisms": len(enumerate_endomorphisms(M)),
    }
    if args.json:
        out.write(json.dumps(info, indent=2) + "\n")
    else:
        width = max(map(len, info))
        for k, v in info.items():
            out.write(f"{k:<{width}}  {_yesno(v) if isinstance(v, bool) else v}\n")
    return EXIT_OK


def _flags(N, family):
    if not N.is_proper():
        return None
    return {
        "prime": is_prime_submodule(N),
        "weakly_prime": is_weakly_prime_submodule(N),
        "s_prime": S_PRIME_CRITERIA["definition"](N, family).value,
        "s_weakly_prime": S_WEAKLY_CRITERIA["definition"](N, family).value,
        "fully_invariant": is_fully_invariant(N, family),
    }


def _cmd_lattice(args, out):
    M = _load_module(args.module)
    family = enumerate_endomorphisms(M)
    rows = [{"submodule": submodule_to_text(N), "order": N.order, "flags": _flags(N, family)} for N in submodule_lattice(M)]
    if args.json:
        out.write(json.dumps({"module": str(M), "submodules": rows}, indent=2) + "\n")
        return EXIT_OK
    names = ("prime", "weakly_prime", "s_prime", "s_weakly_prime", "fully_invariant")
    out.write(f"{'submodule':<28} {'order':>5}  " + " ".join(f"{n:<15}" for n in names).rstrip() + "\n")
    for r in rows:
        cells = ["-" if r["flags"] is None else _yesno(r["flags"][n]) for n in names]
        out.write(f"{r['submodule']:<28} {r['order']:>5}  " + " ".join(f"{c:<15}" for c in cells).rstrip() + "\n")
    return EXIT_OK


def _cmd_endos(args, out):
    M = _load_module(args.module)
    rows = [{"endo": [list(r) for r in f.matrix], "onto": is_onto(f), "one_to_one": is_one_to_one(f)}
            for f in enumerate_endomorphisms(M)]
    if args.json:
        out.write(json.dumps({"module": str(M), "endomorphisms": rows}, indent=2) + "\n")
        return EXIT_OK
    for r in rows:
        spec = "matrix [" + "; ".join(" ".join(map(str, row)) for row in r["endo"]) + "]"
        out.write(f"{spec:<32} onto={_yesno(r['onto'])} one-to-one={_yesno(r['one_to_one'])}\n")
    return EXIT_OK


def _cmd_check(args, out):
    M = _load_module(args.module)
    N = build_submodule(M, parse_submodule(args.submodule), args.submodule)
    family = None
    if args.endo is not None:
        family = EndoFamily.singleton(build_endo(M, parse_endo(args.endo), args.endo))
    result = {"predicate": args.predicate, "module": str(M), "submodule": submodule_to_text(N)}
    witness = None
    if args.predicate in ("s-prime", "s-weakly-prime"):
        table = S_PRIME_CRITERIA if args.predicate == "s-prime" else S_WEAKLY_CRITERIA
        if args.criterion not in table:
            raise PredicateError(f"criterion {args.criterion!r} is not available for {args.predicate}; choose from {', '.join(table)}")
        v = table[args.criterion](N, family)
        result["criterion"] = v.criterion
        result["value"] = v.value
        if v.witness is not None:
            w = v.witness
            witness = {
                "endo": [list(r) for r in w.endo.matrix],
                "element": list(w.element) if w.element is not None else None,
                "submodule": submodule_to_text(w.submodule) if w.submodule is not None else None,
                "note": w.note,
            }
    elif args.predicate == "fully-invariant":
        result["value"] = is_fully_invariant(N, family)
    else:
        w = prime_submodule_witness(N, weakly=args.predicate == "weakly-prime")
        result["value"] = w is None
        if w is not None:
            witness = {"scalar": list(w[0]), "element": list(w[1])}
    result["witness"] = witness
    if args.json:
        out.write(json.dumps(result, indent=2) + "\n")
    elif args.quiet:
        out.write(("true" if result["value"] else "false") + "\n")
    else:
        out.write(f"{args.predicate}({result['submodule']} in {result['module']}): {'true' if result['value'] else 'false'}\n")
        if "criterion" in result:
            out.write(f"criterion: {result['criterion']}\n")
        if witness:
            if "endo" in witness:
                spec = "matrix [" + "; ".join(" ".join(map(str, row)) for row in witness["endo"]) + "]"
                out.write(f"witness: f = {spec}")
            else:
                out.write(f"witness: r = ({','.join(map(str, witness['scalar']))})")
            if witness.get("element") is not None:
                out.write(f", m = ({','.join(map(str, witness['element']))})")
            if witness.get("submodule"):
                out.write(f", K = {witness['submodule']}")
            out.write("\n")
    return EXIT_OK


def config_from_args(args, environ=None):
    """CLI config: products stay off unless a flag or the config file turns them on."""
    data = {"include_products": False, "include_decomposable": False}
    if args.config:
        data.update(read_config_file(args.config))
    cfg = apply_env(CorpusConfig.from_mapping(data), environ)
    overrides = {}
    if args.ring_moduli:
        try:
            overrides["ring_moduli"] = tuple(int(v) for v in args.ring_moduli.split(",") if v.strip())
        except ValueError:
            raise ModcheckError(f"--ring-moduli expects comma-separated integers, got {args.ring_moduli!r}") from None
    if args.max_order is not None:
        overrides["max_module_order"] = args.max_order
    if args.max_endo is not None:
        overrides["max_endo_family"] = args.max_endo
    if args.products:
        overrides["include_products"] = True
    if args.decomposable:
        overrides["include_decomposable"] = True
    if args.seed is not None:
        overrides["seed"] = args.seed
    return CorpusConfig(**{**cfg.__dict__, **overrides})


def _cmd_verify(args, out):
    cfg = config_from_args(args)
    if args.theorem == "all":
        reports = verify_all(cfg)
    else:
        reports = [verify_theorem(args.theorem, cfg)]
    failed = run_failed(reports)
    if args.json:
        out.write(emit_report(reports, "json", cfg.to_dict(), corpus_summary(corpus_for(cfg))).decode("utf-8"))
    elif args.quiet:
        bad = [r.theorem for r in reports if r.status == "fail"]
        out.write(("FAIL " + " ".join(bad) if bad else "ok") + "\n")
    else:
        out.write(emit_report(reports, "text").decode("utf-8"))
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "inspect": _cmd_inspect,
    "lattice": _cmd_lattice,
    "endos": _cmd_endos,
    "check": _cmd_check,
    "verify": _cmd_verify,
}


def run_command(argv):
    """Run the CLI on ``argv``; returns ``(exit_status, stdout_text, stderr_text)``."""
    out, err = io.StringIO(), io.StringIO()
    try:
        args = _build_parser().parse_args(argv)
    except _ArgumentError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT, out.getvalue(), err.getvalue()
    except SystemExit as exc:       # --help / --version
        return int(exc.code or 0), out.getvalue(), err.getvalue()
    try:
        status = COMMANDS[args.command](args, out)
    except SpecError as exc:
        err.write(exc.render() + "\n")
        return EXIT_INPUT, out.getvalue(), err.getvalue()
    except ModcheckError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT, out.getvalue(), err.getvalue()
    return status, out.getvalue(), err.getvalue()


def main(argv=None):
    status, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
