"""Command-line entry point: ``liftmod <subcommand> ...``.

Exit codes: 0 success or predicate true, 1 predicate false, 2 parse error,
3 precondition violation, 4 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib.metadata import PackageNotFoundError, version

from .linalg import IntMatrix, format_matrix, parse_matrix, rank
from .words import WordIndexError, WordSyntaxError, evaluate, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class ParseFailure(Exception):
    pass


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _subject_matrix(args) -> tuple[IntMatrix, str]:
    """Exactly one of --word / --matrix-file."""
    word = getattr(args, "word", None)
    path = getattr(args, "matrix_file", None)
    if (word is None) == (path is None):
        raise ParseFailure("give exactly one of --word or --matrix-file")
    if word is not None:
        w = parse_word(word, args.genus)
        return evaluate(w), format_word(w)
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise ParseFailure(str(exc)) from None
    try:
        return parse_matrix(text), path
    except (ValueError, json.JSONDecodeError) as exc:
        raise ParseFailure(f"bad matrix: {exc}") from None


def _add_subject(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", help="twist word, e.g. \"Ta1 Tb1^2\"")
    p.add_argument("--matrix-file", help="JSON or plain-text matrix file ('-' for stdin)")


# --- handlers ---------------------------------------------------------------

def cmd_twist(args) -> int:
    from .homology import twist_matrix

    if not re.fullmatch(r"T[abc]\d+", args.symbol):
        raise ParseFailure(f"bad twist symbol {args.symbol!r}")
    w = parse_word(args.symbol, args.genus)
    m = twist_matrix(w.letters[0][0], args.genus)
    _emit(args, {"symbol": args.symbol, "genus": args.genus, "matrix": m.tolist()}, format_matrix(m))
    return EXIT_OK


def cmd_eval(args) -> int:
    w = parse_word(args.word, args.genus)
    m = evaluate(w)
    payload = {"word": format_word(w), "genus": args.genus, "matrix": m.tolist()}
    text = format_matrix(m)
    if args.mod:
        from .linalg import mod_reduce
        r = mod_reduce(m, args.mod)
        payload["mod"] = args.mod
        payload["residue"] = r.tolist()
        text = format_matrix(IntMatrix.from_rows(r.tolist()))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_lift_check(args) -> int:
    from .criteria import CoverParams, lmod_contains, stab_e1_contains

    m, label = _subject_matrix(args)
    cover = CoverParams(args.genus, args.sheets)
    v = (stab_e1_contains if args.stab else lmod_contains)(m, cover)
    payload = {"subject": label, **v.to_json()}
    text = f"{v.predicate}: {'member' if v.member else 'not a member'}"
    if v.member and v.unit is not None:
        text += f" (unit {v.unit})"
    if not v.member:
        text += f" (fails {v.requirement} at entry {v.failing_entry})"
    _emit(args, payload, text)
    return EXIT_OK if v.member else EXIT_FALSE


def cmd_umod_check(args) -> int:
    from .criteria import stabilizes_Vg, umod_contains

    m, label = _subject_matrix(args)
    v = umod_contains(m, args.genus)
    payload = {"subject": label, **v.to_json(), "stabilizes_Vg": stabilizes_Vg(m, args.genus)}
    _emit(args, payload, f"umod: {'member' if v.member else 'not a member'}")
    return EXIT_OK if v.member else EXIT_FALSE


def cmd_factor(args) -> int:
    from .congruence import expand_gamma_letters
    from .criteria import CoverParams
    from .factorization import factor_lmod, factor_stab_e1, factor_symplectic

    m, label = _subject_matrix(args)
    if args.sheets is None:
        w = factor_symplectic(m, args.genus)
        _emit(args, {"subject": label, "word": format_word(w), "matrix": m.tolist()}, format_word(w))
        return EXIT_OK
    cover = CoverParams(args.genus, args.sheets)
    res = (factor_stab_e1 if args.stab else factor_lmod)(m, cover)
    try:
        expanded = expand_gamma_letters(res.word)
    except ValueError:
        expanded = None
    payload = {"subject": label, **res.to_json(),
               "expanded_word": None if expanded is None else format_word(expanded)}
    lines = [f"word: {format_word(res.word) or '1'}"]
    if res.coset_word is not None:
        lines.append(f"unit: {res.unit}  coset word: {format_word(res.coset_word) or '1'}")
    for name, info in payload["gamma1_letters"].items():
        lines.append(f"  {name} = {info['matrix']} = {info['word']}")
    if args.verify:
        ok = (res.verify() and not res.alphabet_violations()
              and (expanded is None or evaluate(expanded) == m))
        payload["verified"] = ok
        lines.append(f"verified: {ok}")
        if not ok:
            _emit(args, payload, "\n".join(lines))
            return EXIT_INTERNAL
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gamma1_gens(args) -> int:
    from .congruence import gamma1_generators

    gens = gamma1_generators(args.mod)
    payload = {"modulus": args.mod,
               "generators": [{"index": g.index, "matrix": g.matrix.tolist(), "word": format_word(g.word)}
                              for g in gens]}
    text = "\n".join(f"G{g.index}: {g.matrix.tolist()} = {format_word(g.word)}" for g in gens)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_cosets(args) -> int:
    from .gensets import lmod_coset_words
    from .congruence import units

    words = lmod_coset_words(args.mod, 1)
    rows = [{"unit": u, "word": format_word(w)} for u, w in zip(units(args.mod), words)]
    _emit(args, {"modulus": args.mod, "cosets": rows},
          "\n".join(f"{r['unit']}: {r['word'] or '1'}" for r in rows))
    return EXIT_OK


def cmd_orbit(args) -> int:
    from .census import count_primitive, orbit_e1

    orb = sorted(orbit_e1(args.genus, args.mod))
    expected = count_primitive(args.mod, 2 * args.genus)
    payload = {"genus": args.genus, "modulus": args.mod, "size": len(orb),
               "primitive": expected, "vectors": [list(v) for v in orb] if args.list else None}
    text = f"orbit of e1: {len(orb)} vectors (primitive count {expected})"
    if args.list:
        text += "\n" + "\n".join(",".join(map(str, v)) for v in orb)
    _emit(args, payload, text)
    return EXIT_OK if len(orb) == expected else EXIT_FALSE


def cmd_count_primitive(args) -> int:
    from .census import count_primitive, enumerate_primitive

    n = count_primitive(args.mod, args.dim)
    payload = {"modulus": args.mod, "dim": args.dim, "count": n}
    if args.enumerate:
        payload["enumerated"] = len(enumerate_primitive(args.mod, args.dim))
    _emit(args, payload, str(n))
    return EXIT_OK


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in re.split(r"[\s,]+", text.strip()) if x)
    except ValueError:
        raise ParseFailure(f"bad vector {text!r}") from None


def cmd_witness(args) -> int:
    from .census import witness_self_normalizing

    rep = witness_self_normalizing(_parse_vector(args.vector), args.genus, args.sheets, args.max_len)
    text = (f"witness {format_word(rep.word)} ({rep.method}), image {','.join(map(str, rep.image))}"
            if rep.found else f"no witness up to length {args.max_len}")
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.found else EXIT_FALSE


def cmd_selfnorm(args) -> int:
    from .census import verify_self_normalizing

    s = verify_self_normalizing(args.genus, args.sheets, args.max_len, args.sample, args.seed)
    text = (f"{s.witnessed}/{s.eligible} vectors witnessed, max witness length "
            f"{s.max_witness_length}{' (sampled)' if s.sampled else ''}")
    _emit(args, s.to_json(), text)
    return EXIT_OK if s.success else EXIT_FALSE


def cmd_braid(args) -> int:
    from .braids import (braid_permutation, cycle_notation, delta_lift, parse_braid,
                         stab_beta12_contains)

    w = parse_braid(args.word, args.strands)
    payload: dict = {"strands": args.strands, "word": str(w)}
    lines = []
    code = EXIT_OK
    if args.perm or not (args.stab or args.lift):
        p = braid_permutation(w)
        payload["permutation"] = list(p)
        lines.append(f"permutation: {cycle_notation(p)}")
    if args.stab:
        from .criteria import PreconditionError
        try:
            s = stab_beta12_contains(w)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        payload["stab_beta12"] = s
        lines.append(f"fixes beta1+beta2: {s}")
        code = EXIT_OK if s else EXIT_FALSE
    if args.lift:
        if args.strands % 2:
            raise ParseFailure("lifting needs an even number of strands")
        lw = delta_lift(w, (args.strands - 2) // 2)
        payload["lift"] = format_word(lw)
        payload["matrix"] = evaluate(lw).tolist()
        lines.append(f"lift: {format_word(lw)}")
    _emit(args, payload, "\n".join(lines))
    return code


def _parse_classes(text: str, g: int) -> list[tuple[int, ...]]:
    from .homology import curve_class

    out = []
    for item in (t for t in re.split(r"[;\s]+", text.strip()) if t):
        m = re.fullmatch(r"(-?)([abc])(\d+)", item)
        if m:
            try:
                c = curve_class(m.group(2), int(m.group(3)), g)
            except IndexError as exc:
                raise ParseFailure(str(exc)) from None
            out.append(tuple(-x for x in c) if m.group(1) else c)
            continue
        v = _parse_vector(item)
        if len(v) != 2 * g:
            raise ParseFailure(f"class {item!r} does not have length {2 * g}")
        out.append(v)
    return out


def cmd_chain(args) -> int:
    from .homology import standard_chain, validate_chain

    if args.validate is None:
        ch = standard_chain(args.genus)
        classes, labels = list(ch.classes), list(ch.labels)
    else:
        classes, labels = _parse_classes(args.validate, args.genus), None
    rep = validate_chain(classes)
    payload = {"classes": [list(c) for c in classes], "labels": labels,
               "consecutive_plus_one": rep.consecutive_plus_one,
               "nonadjacent_zero": rep.nonadjacent_zero, "independent": rep.independent,
               "rank": rank(classes), "failures": list(rep.failures), "valid": rep.valid}
    text = "\n".join([f"(a) consecutive pairings +1: {rep.consecutive_plus_one}",
                      f"(b) non-adjacent pairings 0: {rep.nonadjacent_zero}",
                      f"(c) independent over Z: {rep.independent} (rank {rank(classes)})"]
                     + [f"  {f}" for f in rep.failures])
    _emit(args, payload, text)
    return EXIT_OK if rep.consecutive_plus_one and rep.nonadjacent_zero else EXIT_FALSE


def cmd_verify(args) -> int:
    from .acceptance import run_suite

    results = run_suite(args.suite, args.seed)
    payload = {"suite": args.suite, "seed": args.seed, "version": _version(),
               "results": [r.to_json() for r in results]}
    if args.json:
        for r in payload["results"]:
            r.pop("seconds")
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liftmod", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"liftmod {_version()}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("twist", cmd_twist, "matrix of a single twist")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--symbol", required=True)

    p = add("eval", cmd_eval, "evaluate a word under Psi")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--mod", type=int, help="also reduce mod k")

    p = add("lift-check", cmd_lift_check, "liftability under the k-sheeted cover")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sheets", type=int, required=True)
    p.add_argument("--stab", action="store_true", help="test Mod(e1) instead of LMod")
    _add_subject(p)

    p = add("umod-check", cmd_umod_check, "liftability under every cyclic cover")
    p.add_argument("--genus", type=int, required=True)
    _add_subject(p)

    p = add("factor", cmd_factor, "factor a matrix over the generating set")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sheets", type=int, help="omit to factor in Sp(2g, Z) over all twists")
    p.add_argument("--stab", action="store_true", help="input fixes e1 mod k; skip the coset word")
    p.add_argument("--verify", action="store_true", help="re-evaluate the result")
    _add_subject(p)

    p = add("gamma1-gens", cmd_gamma1_gens, "Schreier generators of Gamma_1(k)")
    p.add_argument("--mod", type=int, required=True)

    p = add("cosets", cmd_cosets, "coset words for LMod / Mod(e1)")
    p.add_argument("--mod", type=int, required=True)

    p = add("orbit", cmd_orbit, "orbit of e1 mod k")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print the vectors")

    p = add("count-primitive", cmd_count_primitive, "number of primitive vectors mod k")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="cross-check by brute force")

    p = add("witness", cmd_witness, "self-normalization witness for one vector")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sheets", type=int, required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--max-len", type=int, default=4)

    p = add("selfnorm-verify", cmd_selfnorm, "witness every eligible vector")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sheets", type=int, required=True)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--sample", type=int, help="random sample size instead of all vectors")
    p.add_argument("--seed", type=int, default=0)

    p = add("braid", cmd_braid, "sphere braid words")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--perm", action="store_true")
    p.add_argument("--stab", action="store_true")
    p.add_argument("--lift", action="store_true")

    p = add("chain", cmd_chain, "validate a chain of homology classes")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--validate", metavar="CLASSES",
                   help="classes separated by ';', as labels (a1, -c2) or vectors (1,0,0,0)")

    p = add("verify", cmd_verify, "run acceptance suites")
    p.add_argument("--suite", default="all", choices=["all", "criteria", "factor", "census", "braid"])
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    from .criteria import PreconditionError
    from .factorization import FactorizationError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (WordSyntaxError, WordIndexError, ParseFailure) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FactorizationError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        for step in exc.trace:
            print(f"  {step[0]}^{step[1]}", file=sys.stderr)
        return EXIT_INTERNAL
    except AssertionError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PreconditionError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
