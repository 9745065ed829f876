"""Command line front end: root systems, tabloid families, module reports.

Exit codes: 0 success, 2 unparsable input, 3 a requested check failed,
4 group-size limit exceeded. Reports go to stdout, diagnostics to stderr;
identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import specht, verify
from .exactlin import field_by_name, field_name, row_reduce
from .rootsys import build_root_system, format_root, parse_root, root_system_to_json
from .subsystem import closure_from_simples, subsystem_to_json
from .weyl import DEFAULT_GROUP_LIMIT, GroupLimitError, generate_group, word_to_element

SCHEMA = "weyl-specht/1"
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3
EXIT_GROUP_LIMIT = 4


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _system(label: str):
    try:
        return build_root_system(label)
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def _simples(system, text: str):
    roots = []
    for piece in text.split(","):
        try:
            roots.append(parse_root(system, piece, if_not_root="error"))
        except ValueError as exc:
            raise CommandError(str(exc)) from None
    return roots


def _closure(system, roots):
    try:
        return closure_from_simples(system, roots)
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def _group(system, limit: int):
    try:
        return generate_group(system, limit=limit)
    except GroupLimitError as exc:
        raise CommandError(str(exc), code=EXIT_GROUP_LIMIT) from None


def _word_text(word) -> str:
    return " ".join(map(str, word)) if word else "e"


def _parse_word(system, text: str):
    parts = text.split()
    if not parts:
        return ()
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise CommandError(f"malformed word {text!r}") from None
    for i in word:
        if not 1 <= i <= system.rank:
            raise CommandError(f"generator index {i} out of range 1..{system.rank}")
    return word


def _collect_words(system, char_args):
    words = []
    for arg in char_args or ():
        if os.path.isfile(arg):
            with open(arg, encoding="utf-8") as fh:
                for line in fh:
                    line = line.split("#", 1)[0].strip()
                    if line:
                        words.append(_parse_word(system, line))
        else:
            words.append(_parse_word(system, arg))
    return tuple(words)


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_roots(args) -> int:
    system = _system(args.type)
    if args.json:
        doc = {"schema": SCHEMA}
        doc.update(root_system_to_json(system))
        _emit(doc)
        return EXIT_OK
    pc = system.positive_count
    print(
        f"root system {system.label}: rank {system.rank}, "
        f"{len(system.roots)} roots ({pc} positive)"
    )
    print("simple roots: " + " ".join(format_root(system, r) for r in system.simple_roots()))
    print("positive roots: " + " ".join(format_root(system, r) for r in system.roots[:pc]))
    print("gram matrix:")
    for row in system.gram:
        print("  " + " ".join(str(x) for x in row))
    return EXIT_OK


def cmd_tabloids(args) -> int:
    system = _system(args.type)
    group = _group(system, args.limit)
    psi = _closure(system, _simples(system, args.J))
    space = specht.enumerate_tabloids(system, psi, group)
    if args.json:
        doc = {
            "schema": SCHEMA,
            "ambient": system.label,
            "psi": subsystem_to_json(system, psi, group),
            "count": len(space),
            "tabloids": [
                {"word": list(t.rep_word), "display": specht.format_tabloid(space, t)}
                for t in space
            ],
        }
        _emit(doc)
        return EXIT_OK
    print(f"ambient {system.label}: |W| = {len(group)}")
    print(
        f"psi {psi.label}: J = {','.join(format_root(system, r) for r in psi.simples)}, "
        f"size {psi.size}, |N(psi)| = {len(space.n_psi)}, index {len(space)}"
    )
    print(f"tabloids ({len(space)}):")
    width = max((len(_word_text(t.rep_word)) for t in space), default=1)
    for t in space:
        print(f"  {_word_text(t.rep_word):<{width}}  {specht.format_tabloid(space, t)}")
    return EXIT_OK


def _independent_generators(module):
    # first generators whose polytabloids are independent, in group order
    picked = []
    rank = 0
    for d, vec in module.generators:
        if vec.is_zero():
            continue
        trial = row_reduce(module.field, [v for _, v in picked] + [vec], dim=module.tabloid_count)
        if trial.rank > rank:
            picked.append((d, vec))
            rank = trial.rank
        if rank == module.dimension:
            break
    return picked


def cmd_specht(args) -> int:
    system = _system(args.type)
    group = _group(system, args.limit)
    psi = _closure(system, _simples(system, args.J))
    psi_prime = _closure(system, _simples(system, args.Jp))
    if psi.roots & psi_prime.roots:
        raise CommandError("J' must generate a subsystem disjoint from psi")
    try:
        field = field_by_name(args.field)
    except ValueError as exc:
        raise CommandError(str(exc)) from None

    checks = []
    for name in filter(None, (args.check or "").split(",")):
        if name not in ("useful", "good", "probe"):
            raise CommandError(f"unknown check {name!r}")
        checks.append(name)
    words = _collect_words(system, args.char)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        module = specht.build_specht_module(system, psi, psi_prime, field, group=group)
    dims = specht.quotient_dimension(module)
    useful = verify.is_useful_subsystem(system, psi, psi_prime, group=group)
    good = verify.is_good_subsystem(system, psi, psi_prime, group=group)
    witness = verify.vanishing_obstruction(system, psi, psi_prime, group=group)
    probe = None
    if "probe" in checks:
        probe = verify.submodule_theorem_probe(
            module, trials=args.probe_trials, seed=args.probe_seed
        )

    failed = False
    if "useful" in checks and not useful:
        failed = True
    if "good" in checks and not good.is_good:
        failed = True
    if probe is not None and not probe.ok:
        failed = True

    space = module.space
    if args.json:
        doc = {"schema": SCHEMA}
        doc.update(specht.specht_report(module, sample_words=words))
        doc["useful"] = useful
        doc["good"] = good.is_good
        check_doc = {
            "vanishing_witness": list(group.word_of(witness)) if witness else None
        }
        if "useful" in checks:
            check_doc["useful"] = useful
        if "good" in checks:
            check_doc["good"] = {
                "good": good.is_good,
                "witnesses": [list(group.word_of(d)) for d in good.witnesses],
            }
        if probe is not None:
            check_doc["probe"] = {
                "trials": probe.trials,
                "seed": probe.seed,
                "characteristic": probe.characteristic,
                "violations": list(probe.violations),
            }
        doc["checks"] = check_doc
        _emit(doc)
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    print(f"ambient {system.label}: |W| = {len(group)}")
    print(
        f"psi {psi.label}: J = {','.join(format_root(system, r) for r in psi.simples)}, "
        f"|N(psi)| = {len(space.n_psi)}"
    )
    print(
        f"psi' {psi_prime.label}: J' = "
        f"{','.join(format_root(system, r) for r in psi_prime.simples)}, "
        f"|W(psi')| = {len(space.col_group)}"
    )
    print(f"field {field_name(field)}")
    print(f"tabloids: {len(space)}")
    print(f"dim S = {dims[0]}, dim radical = {dims[1]}, dim D = {dims[2]}")
    print(f"useful sub-system: {'yes' if useful else 'no'}")
    print(f"good sub-system: {'yes' if good.is_good else 'no'}")
    e_vec = specht.polytabloid(space, field, group.identity)
    print(f"e_{{J,J'}} = {specht.format_module_vector(space, field, e_vec)}")
    if module.dimension:
        print("independent generators:")
        for d, vec in _independent_generators(module):
            print(
                f"  {_word_text(group.word_of(d))} | "
                f"{specht.format_module_vector(space, field, vec)}"
            )
    if witness is not None:
        print(f"vanishing witness: {_word_text(group.word_of(witness))}")
    if words:
        print("character values:")
        for word in words:
            w = word_to_element(system, word)
            tr = specht.character_value(module, w)
            print(f"  psi({_word_text(word)}) = {field.format(tr)}")
    if checks:
        print("checks:")
        if "useful" in checks:
            print(f"  useful: {'pass' if useful else 'FAIL'}")
        if "good" in checks:
            line = f"  good: {'pass' if good.is_good else 'FAIL'}"
            if good.witnesses:
                missing = " ".join(
                    _word_text(group.word_of(d)) for d in good.witnesses
                )
                line += f" (missing cosets: {missing})"
            elif good.reason:
                line += f" ({good.reason})"
            print(line)
        if probe is not None:
            print(
                f"  probe: trials={probe.trials} seed={probe.seed} "
                f"violations={len(probe.violations)} "
                f"{'pass' if probe.ok else 'FAIL'}"
            )
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylspecht",
        description="Exact Specht-module computations for Weyl groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="print a root system")
    p_roots.add_argument("--type", required=True, help="type tag, e.g. A3, D4, G2")
    p_roots.add_argument("--json", action="store_true")
    p_roots.set_defaults(func=cmd_roots)

    p_tab = sub.add_parser("tabloids", help="enumerate the tabloid family")
    p_tab.add_argument("--type", required=True)
    p_tab.add_argument("--J", required=True, help="comma-separated simple roots")
    p_tab.add_argument("--json", action="store_true")
    p_tab.add_argument("--limit", type=int, default=DEFAULT_GROUP_LIMIT)
    p_tab.set_defaults(func=cmd_tabloids)

    p_sp = sub.add_parser("specht", help="build the module and run checks")
    p_sp.add_argument("--type", required=True)
    p_sp.add_argument("--J", required=True, help="comma-separated simple roots")
    p_sp.add_argument("--Jp", required=True, help="comma-separated simple roots of J'")
    p_sp.add_argument("--field", default="Q", help="Q or F<p>")
    p_sp.add_argument("--check", default="", help="comma list of useful,good,probe")
    p_sp.add_argument(
        "--char",
        action="append",
        help="word like '1 3 2', or a file with one word per line; repeatable",
    )
    p_sp.add_argument("--json", action="store_true")
    p_sp.add_argument("--limit", type=int, default=DEFAULT_GROUP_LIMIT)
    p_sp.add_argument("--probe-trials", type=int, default=50)
    p_sp.add_argument("--probe-seed", type=int, default=verify.DEFAULT_PROBE_SEED)
    p_sp.set_defaults(func=cmd_specht)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
