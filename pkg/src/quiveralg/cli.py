"""Command-line front end.

Every subcommand reads quiver/morphism JSON documents, runs the
corresponding exact checks and exits with

* 0 — every check passed,
* 1 — at least one mathematical check failed (the report says where),
* 2 — the input was malformed or rejected before any mathematics ran.

``--format structured`` switches the report from human-readable lines to
a single JSON document.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import correspondence, cuntz_krieger, factor_maps, generators, morphisms
from . import pullback, quivers, serialization
from .serialization import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiveralg",
        description="Exact checks for finite weighted quivers and their morphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument(
            "--format",
            choices=("human", "structured"),
            default="human",
            help="output mode (default: human)",
        )
        return p

    p = add("validate", "check the structural invariants of a quiver")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_validate)

    p = add("classify", "partition the vertices of a quiver")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_classify)

    p = add("check-morphism", "check the commuting squares of a morphism")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_check_morphism)

    p = add("check-regular", "check the regularity conditions of a morphism")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_check_regular)

    p = add("compose", "compose two morphisms (second applied first)")
    p.add_argument("outer", help="morphism applied second")
    p.add_argument("inner", help="morphism applied first")
    p.set_defaults(func=cmd_compose)

    p = add("check-covariance", "check the pullback conditions C1-C4")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_check_covariance)

    p = add("c4lemma", "check the operator-transport identity on edge functions")
    p.add_argument("morphism")
    p.add_argument("--seed", type=int, default=None,
                   help="also check random edge functions drawn from this seed")
    p.add_argument("--random", type=int, default=5, metavar="N",
                   help="number of random edge functions when --seed is given")
    p.set_defaults(func=cmd_c4lemma)

    p = add("presentation", "print the weighted generators-and-relations presentation")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_presentation)

    p = add("induced-hom", "print the generator homomorphism of a regular morphism")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_induced_hom)

    p = add("verify-induced", "verify the generator homomorphism preserves relations")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_verify_induced)

    p = add("factor-check", "check the factor-map conditions (counting measures)")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_factor_check)

    p = add("gen-quiver", "generate a seeded random quiver")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=16)
    p.add_argument("--counting", action="store_true", help="all weights 1")
    p.set_defaults(func=cmd_gen_quiver)

    p = add("gen-regular-morphism", "generate a seeded random regular morphism")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=16)
    p.add_argument("--max-cover", type=int, default=3)
    p.add_argument("--counting", action="store_true", help="all weights 1")
    p.set_defaults(func=cmd_gen_regular_morphism)

    return parser


def _emit(args, lines, obj) -> None:
    if args.format == "structured":
        print(json.dumps(obj, ensure_ascii=False, indent=2))
    else:
        for line in lines:
            print(line)


def _load_quiver(path):
    return serialization.load_quiver(path)


def _load_morphism(path):
    return serialization.load_morphism(path)


def cmd_validate(args) -> int:
    q = _load_quiver(args.quiver)
    report = quivers.validate(q)
    lines = ["valid"] if report.ok else [f"violation: {v}" for v in report.violations]
    _emit(args, lines, {"command": "validate", **report.to_obj()})
    return 0 if report.ok else 1


def cmd_classify(args) -> int:
    q = _load_quiver(args.quiver)
    report = quivers.validate(q)
    if not report.ok:
        _emit(args, [f"violation: {v}" for v in report.violations],
              {"command": "classify", **report.to_obj()})
        return 1
    c = quivers.classify(q)
    lines = [
        f"sinks: {', '.join(sorted(c.sinks)) or '-'}",
        f"finite-receiving: {', '.join(sorted(c.fin)) or '-'}",
        f"regular: {', '.join(sorted(c.reg)) or '-'}",
        f"singular: {', '.join(sorted(c.sing)) or '-'}",
    ]
    _emit(args, lines, {"command": "classify", "ok": True, **c.to_obj()})
    return 0


def _square_lines(report) -> list[str]:
    if report.ok:
        return ["commuting squares hold"]
    lines = []
    for e in report.src_failures:
        lines.append(f"source square fails at edge {e}")
    for e in report.rng_failures:
        lines.append(f"range square fails at edge {e}")
    return lines


def cmd_check_morphism(args) -> int:
    m = _load_morphism(args.morphism)
    report = morphisms.check_morphism(m)
    _emit(args, _square_lines(report), {"command": "check-morphism", **report.to_obj()})
    return 0 if report.ok else 1


def _regularity_lines(report) -> list[str]:
    lines = [f"A1: pass ({report.a1_note})"]
    if report.a2_ok:
        lines.append("A2: pass")
    else:
        lines.extend(f"A2 fails at {f.vertex}: {f.reason}" for f in report.a2_failures)
    if report.a3_ok:
        lines.append("A3: pass")
    else:
        lines.extend(
            f"A3 fails at {v}: maps to a regular vertex but emits no edge"
            for v in report.a3_failures
        )
    return lines


def cmd_check_regular(args) -> int:
    m = _load_morphism(args.morphism)
    squares = morphisms.check_morphism(m)
    if not squares.ok:
        _emit(args, _square_lines(squares),
              {"command": "check-regular", "squares": squares.to_obj(), "ok": False})
        return 1
    report = morphisms.check_regular(m)
    _emit(args, _regularity_lines(report),
          {"command": "check-regular", **report.to_obj()})
    return 0 if report.ok else 1


def cmd_compose(args) -> int:
    outer = _load_morphism(args.outer)
    inner = _load_morphism(args.inner)
    composite = morphisms.compose(outer, inner)
    print(serialization.dumps_morphism(composite))
    return 0


def cmd_check_covariance(args) -> int:
    m = _load_morphism(args.morphism)
    squares = morphisms.check_morphism(m)
    if not squares.ok:
        _emit(args, _square_lines(squares),
              {"command": "check-covariance", "squares": squares.to_obj(), "ok": False})
        return 1
    cm = pullback.build_corr_morphism(m)
    report = pullback.check_covariance(cm)
    lines = []
    for name, cond in (("C1", report.c1), ("C2", report.c2),
                       ("C3", report.c3), ("C4", report.c4)):
        if cond.passed:
            lines.append(f"{name}: pass")
        else:
            detail = cond.witness or cond.note or ""
            lines.append(f"{name}: FAIL ({detail})")
    _emit(args, lines, {"command": "check-covariance", **report.to_obj()})
    return 0 if report.ok else 1


def cmd_c4lemma(args) -> int:
    m = _load_morphism(args.morphism)
    squares = morphisms.check_morphism(m)
    if not squares.ok:
        _emit(args, _square_lines(squares),
              {"command": "c4lemma", "squares": squares.to_obj(), "ok": False})
        return 1
    cm = pullback.build_corr_morphism(m)
    if not cm.regularity.a2_ok:
        _emit(args, _regularity_lines(cm.regularity),
              {"command": "c4lemma", "ok": False, **cm.regularity.to_obj()})
        return 1
    vectors = [(f"delta_{x}", correspondence.EdgeVector.delta(m.cod, x))
               for x in m.cod.edge_ids]
    if args.seed is not None:
        rng = random.Random(args.seed)
        vectors.extend(
            (f"random_{i}", generators.random_edge_vector(m.cod, rng))
            for i in range(args.random)
        )
    failures = [name for name, g in vectors if not pullback.c4lemma_check(cm, g)]
    lines = [f"checked {len(vectors)} edge functions"]
    lines.extend(f"FAIL at {name}" for name in failures)
    if not failures:
        lines.append("transport identity holds")
    _emit(args, lines, {"command": "c4lemma", "ok": not failures,
                        "checked": len(vectors), "failures": failures})
    return 0 if not failures else 1


def cmd_presentation(args) -> int:
    q = _load_quiver(args.quiver)
    report = quivers.validate(q)
    if not report.ok:
        _emit(args, [f"violation: {v}" for v in report.violations],
              {"command": "presentation", **report.to_obj()})
        return 1
    pres = cuntz_krieger.emit_presentation(q)
    _emit(args, pres.lines(), {"command": "presentation", **pres.to_obj()})
    return 0


def _gate_regular(args, m, command) -> int | None:
    squares = morphisms.check_morphism(m)
    if not squares.ok:
        _emit(args, _square_lines(squares),
              {"command": command, "squares": squares.to_obj(), "ok": False})
        return 1
    report = morphisms.check_regular(m)
    if not report.ok:
        _emit(args, _regularity_lines(report), {"command": command, **report.to_obj()})
        return 1
    return None


def cmd_induced_hom(args) -> int:
    m = _load_morphism(args.morphism)
    gate = _gate_regular(args, m, "induced-hom")
    if gate is not None:
        return gate
    gm = cuntz_krieger.induced_map(m)
    _emit(args, gm.lines(), {"command": "induced-hom", "ok": True, **gm.to_obj()})
    return 0


def cmd_verify_induced(args) -> int:
    m = _load_morphism(args.morphism)
    gate = _gate_regular(args, m, "verify-induced")
    if gate is not None:
        return gate
    report = cuntz_krieger.verify_induced(m)
    lines = [f"checked {len(report.entries)} relations"]
    lines.extend(f"FAIL: {label}" for label in report.failures())
    lines.extend(f"internal error: {msg}" for msg in report.internal_errors)
    if report.ok:
        lines.append("all relations preserved")
    _emit(args, lines, {"command": "verify-induced", **report.to_obj()})
    return 0 if report.ok else 1


def cmd_factor_check(args) -> int:
    m = _load_morphism(args.morphism)
    if not factor_maps.is_counting(m.dom) or not factor_maps.is_counting(m.cod):
        raise SchemaError("factor-check requires counting-measure quivers (all weights 1)")
    report = factor_maps.check_factor_map(m)
    consistent = factor_maps.equivalence_check(m)
    lines = []
    for name, cond in (("F1", report.f1), ("F2", report.f2),
                       ("regular-factor", report.regular_factor)):
        if cond.passed:
            lines.append(f"{name}: pass")
        else:
            lines.append(f"{name}: FAIL ({cond.witness})")
    lines.append(
        "verdict agrees with the regular-morphism checks"
        if consistent
        else "INTERNAL INCONSISTENCY: factor and regularity verdicts differ"
    )
    obj = {"command": "factor-check", **report.to_obj(), "equivalence": consistent}
    _emit(args, lines, obj)
    if not consistent:
        return 1
    return 0 if report.ok else 1


def cmd_gen_quiver(args) -> int:
    q = generators.gen_quiver(args.seed, args.max_vertices, args.max_edges,
                              counting=args.counting)
    print(serialization.dumps_quiver(q))
    return 0


def cmd_gen_regular_morphism(args) -> int:
    m = generators.gen_regular_morphism(
        args.seed, args.max_vertices, args.max_edges,
        max_cover=args.max_cover, counting=args.counting,
    )
    print(serialization.dumps_morphism(m))
    return 0


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: rejected input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
