"""Command line interface.

Exit codes: 0 verdict computed (the verdict itself is in the JSON report),
2 precondition violation, 3 parse error, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .category import validate_category
from .errors import InternalInvariantError, ParseError, PreconditionError
from .fileio import (
    Instance,
    load_instance,
    serialize_category,
    serialize_functor,
    serialize_module,
    rat_to_str,
)
from .functors import canonical_factorization, validate_functor
from .linalg import RationalMatrix, Subspace
from .modules import hom_modules, validate_module
from .torsion import ideal_closure, localize, quotient_hom


def _sanitize(obj):
    """Make report payloads JSON-serializable and deterministic."""
    if isinstance(obj, Fraction):
        return rat_to_str(obj)
    if isinstance(obj, RationalMatrix):
        return [[rat_to_str(x) for x in row] for row in obj.data]
    if isinstance(obj, Subspace):
        return {"ambient": obj.ambient_dim, "basis": _sanitize(obj.basis)}
    if isinstance(obj, dict):
        return {
            (k if isinstance(k, str) else "|".join(map(str, k)) if isinstance(k, tuple) else str(k)): _sanitize(v)
            for k, v in obj.items()
        }
    if isinstance(obj, (list, tuple)):
        return [_sanitize(x) for x in obj]
    if isinstance(obj, (bool, int, str, float)) or obj is None:
        return obj
    return str(obj)


def _hash_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _emit(report: dict) -> None:
    print(json.dumps(_sanitize(report), indent=2, sort_keys=True))


def _need(inst: Instance, kind: str, name: str):
    table = getattr(inst, kind)
    if name not in table:
        raise ParseError(f"no {kind[:-1]} named {name!r} in the instance file")
    return table[name]


def _build_ideal(inst: Instance, name: str):
    cat_name, gens = _need(inst, "ideals", name)
    return ideal_closure(inst.categories[cat_name], gens)


def cmd_validate(args) -> int:
    inst = load_instance(args.file)
    report = {"command": "validate", "instance_hash": _hash_file(args.file)}
    problems = {}
    for name, c in inst.categories.items():
        p = validate_category(c)
        if p:
            problems[f"categories.{name}"] = p
    for name, (f, _, _) in inst.functors.items():
        p = validate_functor(f)
        if p:
            problems[f"functors.{name}"] = p
    for name, (m, _) in inst.modules.items():
        p = validate_module(m)
        if p:
            problems[f"modules.{name}"] = p
    ideal_status = {}
    for name in inst.ideals:
        try:
            t = _build_ideal(inst, name)
            ideal_status[name] = "degenerate (zero ideal)" if t.is_degenerate else "ok"
        except PreconditionError as e:
            ideal_status[name] = e.code
    report["verdict"] = not problems
    report["problems"] = problems
    report["ideals"] = ideal_status
    _emit(report)
    return 0


def cmd_factor(args) -> int:
    inst = load_instance(args.file)
    f, src_name, tgt_name = _need(inst, "functors", args.functor)
    t0 = time.perf_counter()
    fac = canonical_factorization(f)
    report = {
        "command": "factor",
        "functor": args.functor,
        "instance_hash": _hash_file(args.file),
        "mid_category": serialize_category(fac.mid),
        "s": serialize_functor(fac.s, src_name, "mid"),
        "i": serialize_functor(fac.i, "mid", tgt_name),
        "timing_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def cmd_check(args) -> int:
    from . import decide

    inst = load_instance(args.file)
    f, _, _ = _need(inst, "functors", args.functor)
    t0 = time.perf_counter()
    if args.kind == "epi":
        rep = decide.is_epi(f)
    elif args.kind == "lax-epi":
        rep = decide.is_lax_epi(f)
    elif args.kind == "flat-epi":
        rep = decide.is_flat_epi(f)
    elif args.kind == "flat":
        rep = decide.is_flat(f)
    elif args.kind in ("cond-epi", "glax", "abelian-localization"):
        if not args.ideal:
            raise ParseError(f"--ideal is required for kind {args.kind}")
        t = _build_ideal(inst, args.ideal)
        if args.kind == "cond-epi":
            rep = decide.is_conditioned_epi(f, t)
        elif args.kind == "glax":
            rep = decide.is_generalized_lax_epi(f, t)
        else:
            rep = decide.is_abelian_localization(f, t)
    else:
        raise ParseError(f"unknown check kind {args.kind}")
    report = {
        "command": "check",
        "kind": args.kind,
        "functor": args.functor,
        "ideal": args.ideal,
        "verdict": rep.verdict,
        "witnesses": rep.details,
        "instance_hash": _hash_file(args.file),
        "timing_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def cmd_localize(args) -> int:
    inst = load_instance(args.file)
    m, over_name = _need(inst, "modules", args.module)
    t = _build_ideal(inst, args.ideal)
    t0 = time.perf_counter()
    cm, unit = localize(t, m)
    report = {
        "command": "localize",
        "module": args.module,
        "ideal": args.ideal,
        "degenerate_ideal": t.is_degenerate,
        "closed_module": serialize_module(cm.module, over_name),
        "unit_components": {u: unit.components[u] for u in unit.components},
        "instance_hash": _hash_file(args.file),
        "timing_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def cmd_hom(args) -> int:
    inst = load_instance(args.file)
    x, _ = _need(inst, "modules", getattr(args, "from"))
    y, _ = _need(inst, "modules", args.to)
    t0 = time.perf_counter()
    if args.ideal:
        t = _build_ideal(inst, args.ideal)
        basis = quotient_hom(t, x, y)
        kind = "quotient-hom"
    else:
        basis = hom_modules(x, y)
        kind = "hom"
    report = {
        "command": "hom",
        "kind": kind,
        "from": getattr(args, "from"),
        "to": args.to,
        "dimension": len(basis),
        "component_shapes": {
            u: [m.components[u].rows, m.components[u].cols] for m in basis[:1] for u in m.components
        },
        "instance_hash": _hash_file(args.file),
        "timing_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def cmd_corpus_run(args) -> int:
    from . import decide
    from .corpus import BUILTIN_NAMES, random_instance, run_builtin_table
    from .functors import adjunction_check

    t0 = time.perf_counter()
    failures = []
    lines = []
    for name in BUILTIN_NAMES:
        for desc, ok, got, want in run_builtin_table(name):
            lines.append(f"{'PASS' if ok else 'FAIL'}  {desc}  got={got} want={want}")
            if not ok:
                failures.append(desc)
    for k in range(args.count):
        seed = args.seed + k
        rb = random_instance(seed)
        before = len(failures)
        try:
            decide.is_lax_epi(rb.functor)  # asserts agreement internally
            decide.is_epi(rb.surjective_functor)  # asserts the tensor oracle
            from .torsion import localize as _localize

            for m in rb.modules[:1]:
                for t in rb.ideals[:1]:
                    if (t.cat is m.over) or (t.cat == m.over):
                        _localize(t, m)  # asserts closedness and torsion unit
            rep = adjunction_check(rb.surjective_functor, rb.modules[:1], rb.modules[:1])
            if not rep["ok"]:
                failures.append(f"random[{seed}]: adjunction {rep['failures']}")
        except InternalInvariantError as e:
            failures.append(f"random[{seed}]: {e}")
        lines.append(f"{'PASS' if len(failures) == before else 'FAIL'}  random seed {seed}")
    summary = {
        "command": "corpus run",
        "seed": args.seed,
        "count": args.count,
        "builtins": list(BUILTIN_NAMES),
        "failures": failures,
        "verdict": not failures,
        "timing_s": round(time.perf_counter() - t0, 6),
    }
    for line in lines:
        print(line)
    _emit(summary)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="laxepi",
        description="Exact deciders for epimorphism-type properties of finite linear categories",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("validate", help="run all structural validators on an instance file")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("factor", help="emit the canonical factorization of a functor")
    sp.add_argument("file")
    sp.add_argument("--functor", required=True)
    sp.set_defaults(fn=cmd_factor)

    sp = sub.add_parser("check", help="run a decision procedure")
    sp.add_argument("file")
    sp.add_argument("--functor", required=True)
    sp.add_argument(
        "--kind",
        required=True,
        choices=["epi", "lax-epi", "flat", "flat-epi", "cond-epi", "glax", "abelian-localization"],
    )
    sp.add_argument("--ideal", default=None)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("localize", help="emit the closed module and unit data")
    sp.add_argument("file")
    sp.add_argument("--module", required=True)
    sp.add_argument("--ideal", required=True)
    sp.set_defaults(fn=cmd_localize)

    sp = sub.add_parser("hom", help="Hom or quotient-Hom basis dimensions")
    sp.add_argument("file")
    sp.add_argument("--from", required=True)
    sp.add_argument("--to", required=True)
    sp.add_argument("--ideal", default=None)
    sp.set_defaults(fn=cmd_hom)

    sp = sub.add_parser("corpus", help="corpus subcommands")
    csub = sp.add_subparsers(dest="corpus_cmd", required=True)
    run = csub.add_parser("run", help="run builtin tables and random cross-validation")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--count", type=int, default=10)
    run.set_defaults(fn=cmd_corpus_run)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as e:
        print(json.dumps({"error": e.code, "message": str(e)}, indent=2))
        return 2
    except ParseError as e:
        print(json.dumps({"error": "E_PARSE", "message": str(e)}, indent=2))
        return 3
    except InternalInvariantError as e:
        print(json.dumps({"error": "E_INTERNAL_INVARIANT", "message": str(e)}, indent=2))
        return 4


if __name__ == "__main__":
    sys.exit(main())
