"""Command-line verification workflows over surface files.

Subcommands: validate, grr, relate, adjunction, os-equiv.  Reports are
deterministic byte for byte under a fixed seed: randomness comes only
from an explicit random.Random(seed), advisory warnings are captured and
printed in encounter order, and all composite listings are sorted.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 input
error (unreadable file, parse error, invalid surface data, unknown name).
"""

from __future__ import annotations

import argparse
import random
import sys
import warnings

from .errors import (
    ConsistencyError,
    DegreeError,
    FormatError,
    HypothesisWarning,
    ParityError,
    SurfaceDataError,
)
from .extalg import PRIMAL, ExtForm
from .fuzz import random_class, random_surface
from .relations import (
    PoincarePair,
    adjunction_check,
    apply_curve_relation,
    assemble_plus,
    n_down,
    n_up,
    push_down,
    push_up,
)
from .riemann_roch import difference_character, difference_chern, verify_character
from .spinc import bound_equivalence_arith, genus_selfintersection
from .surfacefile import form_terms_to_str, parse_surface_file


class _InputError(Exception):
    """Wraps any condition that should terminate with exit code 2."""


def _load(path):
    try:
        return parse_surface_file(path)
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror or exc}") from exc
    except FormatError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _load_valid(path):
    parsed = _load(path)
    problems = parsed.surface.validate()
    if problems:
        listing = "; ".join(problems)
        raise _InputError(f"{path}: surface data is invalid: {listing}")
    return parsed


def _class_vec(cls) -> str:
    return "(" + ", ".join(str(v) for v in cls.coords) + ")"


def _capture_notes(fn, *args, **kwargs):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = fn(*args, **kwargs)
    notes = [str(w.message) for w in caught if issubclass(w.category, HypothesisWarning)]
    return result, notes


def cmd_validate(args) -> int:
    parsed = _load(args.path)
    s = parsed.surface
    print(f"validate {args.path}")
    print(f"q={s.q} chi={s.chi} rank={s.h2.rank} pg_positive={1 if s.pg_positive else 0}")
    print("classes: " + (", ".join(sorted(parsed.classes)) or "none"))
    print("moments: " + (", ".join(sorted(parsed.moments)) or "none"))
    problems = s.validate()
    for p in problems:
        print(f"problem: {p}")
    for name in sorted(parsed.moments):
        for p in parsed.moments[name].validate(s):
            problems.append(p)
            print(f"problem: moments {name}: {p}")
    print("valid: " + ("yes" if not problems else "no"))
    return 0 if not problems else 1


def cmd_grr(args) -> int:
    parsed = _load_valid(args.path)
    rng = random.Random(args.seed)
    print(f"grr {args.path}")
    print(f"seed: {args.seed}")
    print(f"samples: {args.samples}")
    print(f"fuzz surfaces: {'yes' if args.fuzz_surfaces else 'no'}")
    failures = 0
    for n in range(args.samples):
        s = random_surface(rng) if args.fuzz_surfaces else parsed.surface
        m = random_class(rng, s.h2)
        c = random_class(rng, s.h2)
        problems = []
        check = verify_character(s, m)
        if not check:
            problems.append("character mismatch: " + "; ".join(check.details))
        try:
            difference_character(s, m, c)
            difference_chern(s, m, c)
        except ConsistencyError as exc:
            problems.append(str(exc))
        tag = f"sample {n}: m={_class_vec(m)} c={_class_vec(c)}"
        if args.fuzz_surfaces:
            tag += f" q={s.q} rank={s.h2.rank}"
        if problems:
            failures += 1
            print(f"{tag} FAIL: " + "; ".join(problems))
        else:
            print(f"{tag} ok")
    print(f"result: {args.samples - failures}/{args.samples} passed")
    return 0 if failures == 0 else 1


def cmd_relate(args) -> int:
    parsed = _load_valid(args.path)
    s = parsed.surface
    try:
        m = parsed.require_class(args.m)
        c = parsed.require_class(args.c)
        src = parsed.require_moments(args.input)
    except KeyError as exc:
        raise _InputError(f"{args.path}: {exc.args[0]}") from exc
    expected_src = m - c if args.direction == "down" else m + c
    if src.m != expected_src:
        raise _InputError(
            f"moments {args.input!r} are for class {_class_vec(src.m)}, "
            f"but direction {args.direction!r} needs class {_class_vec(expected_src)}"
        )
    print(f"relate {args.path}")
    print(f"direction: {args.direction}")
    print(f"kind: {args.kind}")
    print(f"m: {_class_vec(m)}")
    print(f"c: {_class_vec(c)}")
    base = n_down(s, m, c) if args.direction == "down" else n_up(s, m, c)
    print(f"exponent base: {base}")
    try:
        if args.kind == "moments":
            push = push_down if args.direction == "down" else push_up
            pushed, notes = _capture_notes(push, s, m, c, src)
            for note in notes:
                print(f"note: {note}")
            if not pushed.moments:
                print("moments: all zero")
            for i, a in enumerate(pushed.moments):
                print(f"a_{i} = {form_terms_to_str(a)}")
        else:
            invariant = assemble_plus(src)
            print(f"input invariant = {form_terms_to_str(invariant)}")
            out = apply_curve_relation(s, m, c, args.direction, invariant)
            print(f"output invariant = {form_terms_to_str(out)}")
    except (DegreeError, ParityError) as exc:
        raise _InputError(f"{args.path}: {exc}") from exc
    return 0


def cmd_adjunction(args) -> int:
    parsed = _load_valid(args.path)
    s = parsed.surface
    try:
        c = parsed.require_class(args.curve)
        basics = [parsed.require_class(name) for name in args.basics]
    except KeyError as exc:
        raise _InputError(f"{args.path}: {exc.args[0]}") from exc
    marker = ExtForm.scalar(s.q, PRIMAL, 1)
    pairs = [PoincarePair(m, marker, ExtForm.zero(s.q, PRIMAL)) for m in basics]
    try:
        verdicts = adjunction_check(s, pairs, c, args.pa)
    except (ValueError, ParityError) as exc:
        raise _InputError(f"{args.path}: {exc}") from exc
    print(f"adjunction {args.path}")
    print(f"curve: {args.curve} = {_class_vec(c)}")
    print(f"pa: {args.pa}")
    print("basic classes taken as declared")
    violations = 0
    for name, verdict in zip(args.basics, verdicts):
        status = "allowed" if verdict.allowed else "VIOLATED"
        print(f"class {name}: m.c={verdict.mc} k.c={verdict.kc} {status}")
        for note in verdict.notes:
            print(f"  note: {note}")
        if not verdict.allowed:
            violations += 1
    print(f"result: {len(verdicts) - violations}/{len(verdicts)} allowed")
    return 0 if violations == 0 else 1


def cmd_os_equiv(args) -> int:
    parsed = _load_valid(args.path)
    s = parsed.surface
    print(f"os-equiv {args.path}")
    print(f"box: {args.box}")
    pairs = 0
    failures = 0
    for mc in range(-args.box, args.box + 1):
        for kc in range(-args.box, args.box + 1):
            lhs, rhs, eps = bound_equivalence_arith(mc, kc)
            pairs += 1
            if lhs != rhs or (eps is not None) != rhs:
                failures += 1
                print(f"FAIL at m.c={mc} k.c={kc}: lhs={lhs} rhs={rhs} eps={eps}")
    print(f"pairs checked: {pairs}")
    print(f"equivalence failures: {failures}")
    for name in sorted(parsed.classes):
        c = parsed.classes[name]
        try:
            (g, n), notes = _capture_notes(genus_selfintersection, s, c)
        except ParityError as exc:
            raise _InputError(f"{args.path}: class {name}: {exc}") from exc
        ck = s.h2.dot(c, s.k)
        identity = 2 * g + n == ck + 2
        if not identity:
            failures += 1
        print(
            f"class {name}: g={g} n={n} k.c={ck} identity "
            + ("holds" if identity else "FAILS")
        )
        for note in notes:
            print(f"  note: {note}")
    print("result: " + ("pass" if failures == 0 else "fail"))
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfcoh",
        description="Exact-arithmetic verification workflows over surface files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a surface file and run validity diagnostics")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("grr", help="check pushforward characters against the closed forms")
    p.add_argument("path")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fuzz-surfaces", action="store_true")
    p.set_defaults(func=cmd_grr)

    p = sub.add_parser("relate", help="transport moments or invariants across a curve class")
    p.add_argument("path")
    p.add_argument("--m", required=True, help="target class name")
    p.add_argument("--c", required=True, help="curve class name")
    p.add_argument("--direction", choices=("down", "up"), default="down")
    p.add_argument("--input", required=True, help="name of the source moments block")
    p.add_argument("--kind", choices=("moments", "form"), default="moments")
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("adjunction", help="bound declared basic classes against a curve")
    p.add_argument("path")
    p.add_argument("--curve", required=True, help="curve class name")
    p.add_argument("--pa", type=int, required=True, help="arithmetic genus of the curve")
    p.add_argument("--basics", nargs="+", required=True, help="basic class names")
    p.set_defaults(func=cmd_adjunction)

    p = sub.add_parser("os-equiv", help="sweep the adjunction bound equivalence over a box")
    p.add_argument("path")
    p.add_argument("--box", type=int, default=10)
    p.set_defaults(func=cmd_os_equiv)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SurfaceDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
