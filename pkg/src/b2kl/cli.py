"""Command line: ``b2kl <subcommand> ...``.

Exit codes: 0 success, 1 a verification found a mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closedforms import EMPTY_CUTS, check_thin_conjecture, kl_closed_info
from .coxeter import (
    Element, alcove, canonical_word, descents, from_word, length, lower_interval, parse_word,
)
from .families import classify
from .verify import DEFAULT_DEPTH, SUITES, failures, run_suite, summarize


_SHOW = 10


class UsageError(Exception):
    pass


def _word(text: str, sep: str | None) -> Element:
    try:
        return from_word(parse_word(text, sep))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _w(x: Element) -> str:
    return canonical_word(x) or "e"


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_element(args) -> int:
    w = _word(args.word, args.sep)
    tag = classify(w)
    data = {
        "word": canonical_word(w),
        "length": length(w),
        "left_descents": sorted(descents(w, "left")),
        "right_descents": sorted(descents(w, "right")),
        "tag": tag.to_json() if tag else None,
        "alcove": [list(p) for p in alcove(w)],
    }
    lines = [
        f"element:        {_w(w)}",
        f"length:         {data['length']}",
        f"left descents:  {{{', '.join('s%d' % s for s in data['left_descents'])}}}",
        f"right descents: {{{', '.join('s%d' % s for s in data['right_descents'])}}}",
        f"family:         {tag.region + ' ' + tag.label() if tag else 'Unrecognized'}",
        f"alcove:         {' '.join(str(p) for p in alcove(w))}",
    ]
    _emit(data, args.json, lines)
    return 0


def cmd_kl(args) -> int:
    x, w = _word(args.x, args.sep), _word(args.w, args.sep)
    res = kl_closed_info(w)
    p = res.element[x]
    data = {"x": canonical_word(x), "w": canonical_word(w), "poly": p.to_json(), "source": res.source}
    _emit(data, args.json, [f"h({_w(x)}, {_w(w)}) = {p}", f"source: {res.source}"])
    return 0


def cmd_basis(args) -> int:
    w = _word(args.w, args.sep)
    res = kl_closed_info(w)
    data = {"w": canonical_word(w), "source": res.source, **res.element.to_json()}
    lines = [f"{str(p):>20}  H[{_w(y)}]" for y, p in res.element.sorted_items()]
    lines.append(f"source: {res.source}")
    _emit(data, args.json, lines)
    return 0


def cmd_mu(args) -> int:
    x, w = _word(args.x, args.sep), _word(args.w, args.sep)
    res = kl_closed_info(w)
    m = res.element[x].coeff(1)
    data = {"x": canonical_word(x), "w": canonical_word(w), "mu": m, "source": res.source}
    _emit(data, args.json, [f"mu({_w(x)}, {_w(w)}) = {m}", f"source: {res.source}"])
    return 0


def cmd_interval(args) -> int:
    w = _word(args.w, args.sep)
    below = sorted(lower_interval(w), key=lambda z: (length(z), canonical_word(z)))
    data = {"w": canonical_word(w), "size": len(below)}
    lines = [f"|[e, {_w(w)}]| = {len(below)}"]
    if args.list:
        data["elements"] = [canonical_word(z) for z in below]
        lines.extend(_w(z) for z in below)
    _emit(data, args.json, lines)
    return 0


def _report(records: list[dict], path: str | None, header: dict) -> int:
    bad = failures(records)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({**header, "records": records}, fh, indent=2, sort_keys=True)
            fh.write("\n")
    for name, c in summarize(records).items():
        mark = "ok  " if c["fail"] == 0 else "FAIL"
        print(f"{mark} {name}: {c['ok']} ok, {c['fail']} failed")
    for r in bad[:_SHOW]:
        print(f"  mismatch in {r['identity']} {json.dumps(r['params'], sort_keys=True)}: "
              f"{json.dumps(r['first_diff'], sort_keys=True)}")
    if len(bad) > _SHOW:
        print(f"  ... {len(bad) - _SHOW} more mismatches" + (f", see {path}" if path else ""))
    print(f"{len(records)} checks, {len(bad)} failed")
    return 1 if bad else 0


def cmd_verify(args) -> int:
    max_len = args.max_len if args.max_len is not None else DEFAULT_DEPTH[args.suite]
    if max_len < 1:
        raise UsageError("--max-len must be at least 1")
    records = run_suite(args.suite, max_len, corrected=args.corrected)
    header = {"suite": args.suite, "max_len": max_len, "corrected": args.corrected}
    return _report(records, args.json, header)


def cmd_conjecture(args) -> int:
    if args.max_k < 1:
        raise UsageError("--max-k must be at least 1")
    records = []
    for k in range(1, args.max_k + 1):
        records.extend(check_thin_conjecture(k, args.empty_cut))
    for k in range(1, args.max_k + 1):
        recs = [r for r in records if r["params"]["k"] == k]
        held = sum(r["status"] == "ok" for r in recs)
        print(f"k={k}: {held}/{len(recs)} identities hold")
    return _report(records, args.json, {"max_k": args.max_k, "empty_cut": args.empty_cut})


def cmd_tessellate(args) -> int:
    from .tessellate import write_svg

    if args.radius < 0:
        raise UsageError("--radius must be non-negative")
    try:
        scene = write_svg(args.output, args.radius, args.color_by, args.sep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"wrote {len(scene.triangles)} alcoves to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="b2kl", description="Kazhdan-Lusztig basis of the affine Weyl group of type B2.")
    p.add_argument("--sep", default=None, help="letter separator in words, e.g. '.' for 1.2.1.2")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("element", cmd_element, "length, descents, family tag and alcove of an element")
    sp.add_argument("word")
    sp.add_argument("--json", action="store_true")

    for name, fn, help_ in (("kl", cmd_kl, "KL polynomial h(x, w)"), ("mu", cmd_mu, "mu(x, w)")):
        sp = add(name, fn, help_)
        sp.add_argument("x")
        sp.add_argument("w")
        sp.add_argument("--json", action="store_true")

    sp = add("basis", cmd_basis, "full KL basis element of w")
    sp.add_argument("w")
    sp.add_argument("--json", action="store_true")

    sp = add("interval", cmd_interval, "the lower Bruhat interval of w")
    sp.add_argument("w")
    sp.add_argument("--list", action="store_true", help="list the elements")
    sp.add_argument("--json", action="store_true")

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--max-len", type=int, default=None)
    sp.add_argument("--json", metavar="PATH", default=None, help="write the full report here")
    sp.add_argument("--corrected", action="store_true",
                    help="use the corrected size and coatom tables (intervals, coatoms)")

    sp = add("conjecture", cmd_conjecture, "check the thin-wall identities for k = 1..K")
    sp.add_argument("--max-k", type=int, default=3)
    sp.add_argument("--empty-cut", choices=EMPTY_CUTS, default="formal",
                    help="reading of the truncated term whose cut has a negative index (k = 1)")
    sp.add_argument("--json", metavar="PATH", default=None)

    sp = add("tessellate", cmd_tessellate, "draw the alcove picture as SVG")
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--color-by", default="region", help="'region' or 'interval:<word>[,<word>...]'")
    sp.add_argument("-o", "--output", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"b2kl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
