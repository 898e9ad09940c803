"""Command-line front door.

Exit codes: 0 success (or a true boolean), 1 false boolean, 2 usage or
payload errors, 3 internal invariant violations.  Words are passed inline as
quoted signed-integer strings; larger objects come from @file.json or from
stdin via "-".
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cells, explorer, galleries, keys, plactic, words
from .errors import BudgetExceeded, InternalError
from .rootdata import mv_dimension, root_system


def _read_payload(value: str):
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    if value == "-":
        return json.load(sys.stdin)
    return json.loads(value)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_word(text: str, n: int):
    w = words.parse_word(text)
    words.validate_word(w, n)
    return w


def _load_key(value: str, n: int):
    return keys.key_from_json_obj(_read_payload(value), n)


def _load_gallery(value: str, n: int):
    return galleries.gallery_from_json_obj(_read_payload(value), n)


def _element_arg(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="word as space-separated signed integers")
    group.add_argument("--key", help="key JSON (inline, @file or -)")
    group.add_argument("--gallery", help="gallery JSON (inline, @file or -)")


def _load_element(args, n: int):
    if args.word is not None:
        return _load_word(args.word, n)
    if args.key is not None:
        return _load_key(args.key, n)
    return _load_gallery(args.gallery, n)


def _element_out(elem, n: int, fmt: str) -> str:
    if elem is None:
        return "null"
    if isinstance(elem, tuple):  # a word
        return words.format_word(elem) if fmt == "text" else _dump(list(elem))
    if isinstance(elem, keys.ReadableKey):
        if fmt == "text":
            return keys.render_key(elem)
        return _dump(keys.key_to_json_obj(elem))
    return _dump(galleries.gallery_to_json_obj(elem))


def _bool_result(value: bool) -> tuple[int, str]:
    return (0 if value else 1), ("true" if value else "false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symplactic",
        description="Type C_n crystal words, symplectic keys, galleries, "
        "plactic rewriting, and wall-crossing dimension counts.",
    )
    parser.add_argument("--n", type=int, required=True, help="rank (>= 1)")
    parser.add_argument(
        "--format", choices=["json", "dot", "text"], default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("fop", "eop"):
        p = sub.add_parser(name, help=f"apply the {'lowering' if name == 'fop' else 'raising'} operator")
        p.add_argument("--i", type=int, required=True, help="simple root index, 1-based")
        _element_arg(p)

    p = sub.add_parser("raise", help="greedy raising to the dominant end")
    _element_arg(p)

    p = sub.add_parser("equiv", help="crystal equivalence of two objects")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--words", nargs=2, metavar=("W1", "W2"))
    group.add_argument("--keys", nargs=2, metavar=("K1", "K2"))
    group.add_argument("--galleries", nargs=2, metavar=("G1", "G2"))

    p = sub.add_parser("canon", help="canonical LS key of a word")
    p.add_argument("--word", required=True)

    p = sub.add_parser("word-of", help="word reading of a key")
    p.add_argument("--key", required=True)

    p = sub.add_parser("check", help="boolean validations")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ls-block", action="store_true")
    group.add_argument("--zero-block", action="store_true")
    group.add_argument("--readable", action="store_true")
    group.add_argument("--dominant", action="store_true")
    group.add_argument("--admissible", action="store_true")
    p.add_argument("--block", help="block JSON for --ls-block / --zero-block")
    p.add_argument("--word", help="word for --admissible / --dominant")
    p.add_argument("--key", help="key JSON for --readable / --dominant")
    p.add_argument("--gallery", help="gallery JSON for --dominant")

    p = sub.add_parser("crystal", help="generate the crystal component of a seed")
    _element_arg(p)

    p = sub.add_parser("crossings", help="load-bearing wall crossings per step")
    p.add_argument("--gallery", required=True)

    p = sub.add_parser("dims", help="cell dimension and the dimension bound")
    p.add_argument("--gallery", required=True)

    p = sub.add_parser("enum", help="enumerate readable keys of a template")
    p.add_argument("--template", required=True, help='JSON list, e.g. \'["single",["pair",2]]\'')

    p = sub.add_parser("fiber", help="keys of a template equivalent to a target key")
    p.add_argument("--template", required=True)
    p.add_argument("--key", required=True, help="target key JSON")

    p = sub.add_parser("count-dominant", help="dominant word counts by weight")
    p.add_argument("--length", type=int, required=True)

    return parser


def _run(args) -> tuple[int, str]:
    n = args.n
    if n < 1:
        raise ValueError("--n must be at least 1")
    root_system(n)
    fmt = args.format

    if args.command in ("fop", "eop"):
        elem = _load_element(args, n)
        op = explorer.apply_f if args.command == "fop" else explorer.apply_e
        return 0, _element_out(op(elem, args.i, n), n, fmt)

    if args.command == "raise":
        elem = _load_element(args, n)
        if isinstance(elem, tuple):
            raised, path = words.raise_word(elem, n)
            out = {"result": list(raised), "indices": list(path)}
        elif isinstance(elem, keys.ReadableKey):
            raised, path = galleries.raise_key(elem, n)
            out = {"result": keys.key_to_json_obj(raised), "indices": list(path)}
        else:
            raised, path = galleries.raise_gallery(elem, n)
            out = {"result": galleries.gallery_to_json_obj(raised), "indices": list(path)}
        return 0, _dump(out)

    if args.command == "equiv":
        if args.words is not None:
            w1, w2 = (_load_word(t, n) for t in args.words)
            return _bool_result(words.words_equivalent(w1, w2, n))
        if args.keys is not None:
            k1, k2 = (_load_key(t, n) for t in args.keys)
            g1, g2 = (galleries.gallery_of_key(k, n) for k in (k1, k2))
            return _bool_result(galleries.galleries_equivalent(g1, g2, n))
        g1, g2 = (_load_gallery(t, n) for t in args.galleries)
        return _bool_result(galleries.galleries_equivalent(g1, g2, n))

    if args.command == "canon":
        key = plactic.canonical_ls_key(_load_word(args.word, n), n)
        return 0, _element_out(key, n, fmt)

    if args.command == "word-of":
        key = _load_key(args.key, n)
        return 0, _element_out(keys.word_of_key(key), n, fmt)

    if args.command == "check":
        return _run_check(args, n)

    if args.command == "crystal":
        graph = explorer.generate_component(_load_element(args, n), n)
        if fmt == "dot":
            return 0, graph.to_dot()
        return 0, _dump(graph.to_json_obj())

    if args.command == "crossings":
        g = _load_gallery(args.gallery, n)
        data = cells.crossing_data(g, n)
        return 0, _dump(cells.crossing_data_to_json_obj(data))

    if args.command == "dims":
        g = _load_gallery(args.gallery, n)
        raised, _ = galleries.raise_gallery(g, n)
        bound = mv_dimension(
            galleries.weight_of_gallery(raised), galleries.weight_of_gallery(g)
        )
        return 0, _dump({"cell": cells.cell_dimension(g, n), "mv_lower_bound": bound})

    if args.command == "enum":
        template = explorer.parse_template(_read_payload(args.template), n)
        out = [keys.key_to_json_obj(k) for k in explorer.enumerate_readable_keys(template, n)]
        return 0, _dump(out)

    if args.command == "fiber":
        template = explorer.parse_template(_read_payload(args.template), n)
        target = _load_key(args.key, n)
        out = [keys.key_to_json_obj(k) for k in explorer.fiber(template, target, n)]
        return 0, _dump(out)

    if args.command == "count-dominant":
        counts = explorer.count_dominant_words(args.length, n)
        out = {_dump(list(w.doubled)): c for w, c in counts.items()}
        return 0, _dump(out)

    raise ValueError(f"unknown command {args.command!r}")


def _run_check(args, n: int) -> tuple[int, str]:
    if args.ls_block or args.zero_block:
        if args.block is None:
            raise ValueError("check --ls-block/--zero-block needs --block")
        obj = _read_payload(args.block)
        cols = [tuple(c) for c in obj.get("columns", [])]
        if len(cols) == 1:
            if args.zero_block:
                return _bool_result(False)
            keys.validate_column(cols[0], n)
            return _bool_result(len(cols[0]) == 1)
        if len(cols) != 2:
            raise ValueError("a block has one or two columns")
        if args.ls_block:
            return _bool_result(keys.ls_witness(cols[0], cols[1], n) is not None)
        return _bool_result(keys.zero_block_size(cols[0], cols[1], n) is not None)
    if args.readable:
        if args.key is None:
            raise ValueError("check --readable needs --key")
        try:
            key = _load_key(args.key, n)
        except ValueError:
            return _bool_result(False)
        return _bool_result(keys.is_readable_key(key))
    if args.admissible:
        if args.word is None:
            raise ValueError("check --admissible needs --word")
        return _bool_result(keys.is_admissible_word(_load_word(args.word, n), n))
    # --dominant
    if args.word is not None:
        return _bool_result(words.is_dominant_word(_load_word(args.word, n), n))
    if args.key is not None:
        g = galleries.gallery_of_key(_load_key(args.key, n), n)
        return _bool_result(galleries.is_dominant_gallery(g))
    if args.gallery is not None:
        return _bool_result(galleries.is_dominant_gallery(_load_gallery(args.gallery, n)))
    raise ValueError("check --dominant needs --word, --key or --gallery")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, output = _run(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
