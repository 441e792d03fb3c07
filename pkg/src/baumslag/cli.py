"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failure,
2 usage or parse error, 3 domain-precondition error.  All output is a
deterministic function of the flags; ``--format structured`` emits JSON
that parses back into the documented report shapes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import gcd

from . import britton, harness
from .abelianization import abelianization
from .errors import DomainError
from .graph_of_groups import (
    BOUNDARY_INJECTIVITY_ASSUMPTION,
    GogFileError,
    GogValidationError,
    fundamental_presentation,
    load,
    validate,
)
from .metabelian import (
    MetabelianParams,
    bezout_certificate,
    eval_word,
    malnormality_violation_witness,
    parse_element,
    parse_params,
    power_conjugacy_witness,
    two_gen_classify,
)
from .words import WordParseError, format_word, parse_word

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _parse_group(text: str):
    text = text.strip()
    if text.startswith("BS"):
        return britton.parse_bs_params(text)
    if text.startswith("G"):
        return parse_params(text)
    raise ValueError(f"malformed group {text!r}, expected 'BS(m,n)' or 'G(m,n)'")


def _require_bs(group) -> britton.BsParams:
    if not isinstance(group, britton.BsParams):
        raise ValueError(f"this command needs a BS(m,n) group, got {group}")
    return group


def _require_g(group) -> MetabelianParams:
    if not isinstance(group, MetabelianParams):
        raise ValueError(f"this command needs a G(m,n) group, got {group}")
    return group


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _show_word(formatted: str) -> str:
    return formatted if formatted else "(empty word)"


def cmd_reduce(args) -> int:
    params = _require_bs(_parse_group(args.group))
    word = britton.BsWord.from_text(args.word)
    reduced = britton.britton_reduce(word, params)
    trivial = not reduced.tail and reduced.lead == 0
    formatted = reduced.format()
    payload = {
        "command": "reduce",
        "group": str(params),
        "input": args.word,
        "reduced": formatted,
        "trivial": trivial,
    }
    lines = [
        f"group: {params}",
        f"input: {args.word}",
        f"reduced: {_show_word(formatted)}",
        f"trivial: {'yes' if trivial else 'no'}",
    ]
    _emit(payload, lines, args.format)
    return EXIT_OK


def cmd_eval(args) -> int:
    params = _require_g(_parse_group(args.group))
    word = parse_word(args.word, ("a", "t"))
    element = eval_word(word, params)
    payload = {
        "command": "eval",
        "group": str(params),
        "input": args.word,
        "element": str(element),
    }
    lines = [
        f"group: {params}",
        f"input: {args.word}",
        f"element: {element}",
    ]
    _emit(payload, lines, args.format)
    return EXIT_OK


def cmd_classify(args) -> int:
    params = _require_g(_parse_group(args.group))
    parts = [p for p in args.elems.split(";")]
    if len(parts) != 2:
        raise ValueError("expected exactly two elements separated by ';'")
    g1 = parse_element(parts[0], params)
    g2 = parse_element(parts[1], params)
    result = two_gen_classify(g1, g2)
    payload = {
        "command": "classify",
        "group": str(params),
        "g1": str(g1),
        "g2": str(g2),
        "kind": result.kind,
        "d": str(result.d) if result.d is not None else None,
        "common_power": list(result.common_power) if result.common_power else None,
        "subgroup": str(result.subgroup) if result.subgroup else None,
        "anchor": str(result.anchor) if result.anchor else None,
    }
    lines = [
        f"group: {params}",
        f"g1: {g1}",
        f"g2: {g2}",
        f"kind: {result.kind}",
    ]
    if result.d is not None:
        lines.append(f"d = g1^{g2.p} * g2^{-g1.p}: {result.d}")
    if result.common_power is not None:
        i, j = result.common_power
        lines.append(f"common power: g1^{i} = g2^{j}")
    if result.subgroup is not None:
        lines.append(f"contains: {result.subgroup} generated by d and {result.anchor}")
    _emit(payload, lines, args.format)
    return EXIT_OK


def cmd_witness(args) -> int:
    group = _parse_group(args.group)
    if args.kind == "z2":
        params = _require_bs(group)
        report = britton.z2_witness(params, args.bound)
        payload = {
            "command": "witness",
            "kind": "z2",
            "group": str(params),
            "u": report.u.format(),
            "v": report.v.format(),
            "commutator_trivial": report.commutator_is_trivial,
            "bound": report.bound,
            "pairs_checked": report.pairs_checked,
            "collapsed_pairs": [list(p) for p in report.collapsed_pairs],
            "verified": report.verified,
        }
        lines = [
            f"group: {params}",
            f"u: {report.u.format()}",
            f"v: {report.v.format()}",
            f"commutator [u, v] trivial: {'yes' if report.commutator_is_trivial else 'no'}",
            f"nonzero powers u^i v^j checked (|i|, |j| <= {report.bound}): {report.pairs_checked}",
            f"collapsed pairs: {list(report.collapsed_pairs) or 'none'}",
            "note: faithfulness is checked up to the stated bound only",
            f"verified: {'yes' if report.verified else 'no'}",
        ]
        _emit(payload, lines, args.format)
        return EXIT_OK if report.verified else EXIT_VERIFICATION_FAILED
    params = _require_g(group)
    if args.kind == "weak-ah":
        witness = power_conjugacy_witness(params)
        if witness is None:
            payload = {
                "command": "witness",
                "kind": "weak-ah",
                "group": str(params),
                "witness": None,
                "note": (
                    "m = n: no conjugate-power witness; G(1,1) is free abelian "
                    "of rank 2 and contains Z^2 as itself"
                ),
            }
            lines = [
                f"group: {params}",
                "witness: none",
                "note: m = n; G(1,1) is free abelian of rank 2 and contains Z^2 as itself",
            ]
            _emit(payload, lines, args.format)
            return EXIT_OK
        ok = witness.verify()
        payload = {
            "command": "witness",
            "kind": "weak-ah",
            "group": str(params),
            "witness": {
                "x": str(witness.x),
                "t": str(witness.t),
                "e1": witness.e1,
                "e2": witness.e2,
            },
            "identity": f"t x^{witness.e1} t^-1 = x^{witness.e2}",
            "verified": ok,
        }
        lines = [
            f"group: {params}",
            f"x: {witness.x}",
            f"t: {witness.t}",
            f"identity: t x^{witness.e1} t^-1 = x^{witness.e2}",
            f"exponents: |{witness.e1}| != |{witness.e2}|",
            f"verified: {'yes' if ok else 'no'}",
        ]
        _emit(payload, lines, args.format)
        return EXIT_OK if ok else EXIT_VERIFICATION_FAILED
    if args.kind == "csa":
        witness = malnormality_violation_witness(params)
        if witness is None:
            payload = {
                "command": "witness",
                "kind": "csa",
                "group": str(params),
                "witness": None,
                "note": "G(1,1) is abelian; H is not a proper subgroup",
            }
            lines = [
                f"group: {params}",
                "witness: none",
                "note: G(1,1) is abelian; H is not a proper subgroup",
            ]
            _emit(payload, lines, args.format)
            return EXIT_OK
        ok = witness.verify()
        conj = witness.h.conjugate(witness.g)
        payload = {
            "command": "witness",
            "kind": "csa",
            "group": str(params),
            "witness": {"h": str(witness.h), "g": str(witness.g)},
            "conjugate": str(conj),
            "verified": ok,
        }
        lines = [
            f"group: {params}",
            f"h (in H): {witness.h}",
            f"g (outside H): {witness.g}",
            f"g^-1 h g: {conj} (in H, nontrivial)",
            f"verified: {'yes' if ok else 'no'}",
        ]
        _emit(payload, lines, args.format)
        return EXIT_OK if ok else EXIT_VERIFICATION_FAILED
    raise ValueError(f"unknown witness kind {args.kind!r}")


_TARGET_RE = re.compile(r"1/([mn])(?:\^(\d+))?\Z")


def cmd_cert(args) -> int:
    params = _require_g(_parse_group(args.group))
    match = _TARGET_RE.match(args.target.strip())
    if not match:
        raise ValueError(
            f"malformed target {args.target!r}, expected '1/n^k' or '1/m^k'"
        )
    side = match.group(1)
    k = int(match.group(2)) if match.group(2) else 1
    cert = bezout_certificate(params, k, side)
    ok = cert.verify()
    base = params.n if side == "n" else params.m
    word_text = format_word(cert.word, ("a", "t"))
    payload = {
        "command": "cert",
        "group": str(params),
        "target": f"1/{base}^{k}",
        "side": side,
        "k": k,
        "q": cert.q,
        "q_prime": cert.q_prime,
        "word": word_text,
        "word_value": str(eval_word(cert.word, params)),
        "verified": ok,
    }
    m_k, n_k = params.m**k, params.n**k
    lines = [
        f"group: {params}",
        f"target: (1/{base ** k}, 0)",
        f"bezout: {m_k}*({cert.q}) + {n_k}*({cert.q_prime}) = 1",
        f"word: {_show_word(word_text)}",
        f"word evaluates to: {eval_word(cert.word, params)}",
        f"verified: {'yes' if ok else 'no'}",
    ]
    _emit(payload, lines, args.format)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_pi1(args) -> int:
    gog = load(args.input)
    violations = validate(gog)
    if violations:
        for violation in violations:
            print(f"invalid graph of groups: {violation}", file=sys.stderr)
        return EXIT_USAGE
    tree = None
    if args.tree is not None:
        tree = frozenset(p for p in (s.strip() for s in args.tree.split(",")) if p)
    pi1 = fundamental_presentation(gog, tree)
    ab = abelianization(pi1.simplified)
    payload = {
        "command": "pi1",
        "input": args.input,
        "tree": sorted(pi1.tree),
        "raw": {
            "generators": list(pi1.raw.generators),
            "relators": [format_word(r, pi1.raw.generators) for r in pi1.raw.relators],
        },
        "simplified": {
            "generators": list(pi1.simplified.generators),
            "relators": [
                format_word(r, pi1.simplified.generators)
                for r in pi1.simplified.relators
            ],
        },
        "abelianization": str(ab),
        "assumptions": [BOUNDARY_INJECTIVITY_ASSUMPTION],
    }
    lines = [
        f"input: {args.input}",
        f"tree: {', '.join(sorted(pi1.tree)) or '(empty)'}",
        f"raw: {pi1.raw.format()}",
        f"simplified: {pi1.simplified.format()}",
        f"abelianization: {ab}",
        f"assumption: {BOUNDARY_INJECTIVITY_ASSUMPTION}",
    ]
    _emit(payload, lines, args.format)
    return EXIT_OK


def _coprime_pairs(limit: int, ordered: bool) -> list[tuple[int, int]]:
    if ordered:
        return [
            (m, n)
            for m in range(1, limit + 1)
            for n in range(1, limit + 1)
            if gcd(m, n) == 1
        ]
    return [
        (m, n)
        for m in range(1, limit + 1)
        for n in range(m + 1, limit + 1)
        if gcd(m, n) == 1
    ]


def cmd_verify(args) -> int:
    groups = [_parse_group(g) for g in args.group] if args.group else None
    jobs = args.jobs

    def g_pairs(default: list[tuple[int, int]]) -> list[MetabelianParams]:
        if groups is None:
            return [MetabelianParams(m, n) for m, n in default]
        return [_require_g(g) for g in groups]

    if args.suite == "ct":
        report = harness.suite_ct(
            g_pairs(_coprime_pairs(7, ordered=False)),
            trials=args.trials if args.trials is not None else 10_000,
            seed=args.seed,
            jobs=jobs,
        )
    elif args.suite == "oracle":
        if groups is None:
            ks = [2, 3, 5]
        else:
            ks = []
            for g in groups:
                bs = _require_bs(g)
                if bs.m != 1 or bs.n < 1:
                    raise DomainError(
                        f"oracle suite needs BS(1,k) groups with k >= 1, got {bs}"
                    )
                ks.append(bs.n)
        report = harness.suite_oracle(
            ks,
            trials=args.trials if args.trials is not None else 10_000,
            max_len=30,
            seed=args.seed,
            jobs=jobs,
        )
    elif args.suite == "z2":
        pairs = None
        if groups is not None:
            pairs = [(_require_bs(g).m, _require_bs(g).n) for g in groups]
        report = harness.suite_z2(
            bound=args.bound if args.bound is not None else 4,
            seed=args.seed,
            jobs=jobs,
            pairs=pairs,
        )
    elif args.suite == "witnesses":
        report = harness.suite_witnesses(
            g_pairs(_coprime_pairs(7, ordered=True)), seed=args.seed, jobs=jobs
        )
    elif args.suite == "bezout":
        report = harness.suite_bezout(
            g_pairs([(2, 3), (3, 5), (1, 2), (2, 7)]),
            k_max=args.bound if args.bound is not None else 5,
            seed=args.seed,
            jobs=jobs,
        )
    elif args.suite == "classify":
        report = harness.suite_classify(
            g_pairs([(2, 3)]),
            trials=args.trials if args.trials is not None else 1000,
            seed=args.seed,
            jobs=jobs,
        )
    elif args.suite == "gog":
        report = harness.suite_gog(seed=args.seed, jobs=jobs)
    else:
        raise ValueError(f"unknown suite {args.suite!r}")
    if args.format == "structured":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.verdict == "pass" else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baumslag",
        description=(
            "Exact computation in Baumslag-Solitar groups BS(m,n), the "
            "metabelian groups G(m,n) = Z[1/mn] x| Z, and graphs of groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="output as human-readable text or JSON",
        )

    p = sub.add_parser("reduce", help="pinch-reduce a word over BS(m,n)")
    p.add_argument("--group", required=True, help="BS(m,n)")
    p.add_argument("--word", required=True, help="word over a, t")
    add_format(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("eval", help="evaluate a word over a, t in G(m,n)")
    p.add_argument("--group", required=True, help="G(m,n)")
    p.add_argument("--word", required=True, help="word over a, t")
    add_format(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="classify the subgroup generated by two elements")
    p.add_argument("--group", required=True, help="G(m,n)")
    p.add_argument("--elems", required=True, help="two elements '(x, p); (y, q)'")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="produce and verify a structural witness")
    p.add_argument("--group", required=True, help="G(m,n) or BS(m,n) for z2")
    p.add_argument("--kind", required=True, choices=("weak-ah", "csa", "z2"))
    p.add_argument("--bound", type=int, default=4, help="power bound for z2")
    add_format(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("cert", help="Bezout membership certificate for 1/m^k or 1/n^k")
    p.add_argument("--group", required=True, help="G(m,n)")
    p.add_argument("--target", required=True, help="'1/n^k' or '1/m^k'")
    add_format(p)
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("pi1", help="fundamental group of a graph-of-groups file")
    p.add_argument("--input", required=True, help="graph-of-groups JSON file")
    p.add_argument(
        "--tree",
        default=None,
        help="comma-separated edge ids overriding the default spanning tree",
    )
    add_format(p)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("ct", "oracle", "z2", "witnesses", "bezout", "classify", "gog"),
    )
    p.add_argument(
        "--group",
        action="append",
        help="group (repeatable); suite-specific defaults when omitted",
    )
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", default="0")
    p.add_argument("--bound", type=int, default=None, help="z2 bound / bezout k max")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except (WordParseError, GogFileError, GogValidationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
