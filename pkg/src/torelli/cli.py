"""Command line front end: ``torelli <command> [input] [options]``.

Input documents are read from a path, from ``-`` (stdin), inline when the
argument starts with ``{``, or from a shipped fixture via ``--fixture``.

Exit codes: 0 success, 2 input schema error, 3 domain invariant violation,
4 derivation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .calculus import (
    SIPData,
    TorelliFactorization,
    chillingworth_closed_form,
    chillingworth_membership,
    sigma_word,
    sip_in_bcj_kernel,
    sip_in_johnson_kernel,
    ssip_span,
    tau_word,
)
from .errors import DimensionError, DomainError, InvariantError, MissingFactorizationError, SchemaError
from .fixtures import derivation_from_json, load_fixture
from .homology import word_to_sp
from .schema import parse_class, parse_factorization
from .wedge import contraction
from .words import (
    check_derivation,
    classify_text,
    lantern_classify,
    parse_word,
    render,
    sp_shadow_check,
    word_matrix,
)

EXIT_OK, EXIT_SCHEMA, EXIT_INVARIANT, EXIT_DERIVATION = 0, 2, 3, 4


def _read_document(args) -> Any:
    if args.fixture:
        return load_fixture(args.fixture)
    source = args.input
    if source is None:
        raise SchemaError("no input document: give a path, '-', inline JSON or --fixture")
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _factorization(args) -> TorelliFactorization:
    return parse_factorization(_read_document(args), args.genus)


def _emit(args, text: str, data: Any) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- commands

def cmd_tau(args) -> int:
    x = tau_word(_factorization(args))
    _emit(args, x.render(), {"tau": x.to_json()})
    return EXIT_OK


def cmd_sigma(args) -> int:
    p = sigma_word(_factorization(args))
    _emit(args, p.render(), {"sigma": p.to_json()})
    return EXIT_OK


def cmd_contract(args) -> int:
    v = contraction(tau_word(_factorization(args)))
    _emit(args, v.render(), {"contraction": v.to_json()})
    return EXIT_OK


def cmd_chillingworth(args) -> int:
    f = _factorization(args)
    v = chillingworth_closed_form(f)
    try:
        via_tau = contraction(tau_word(f))
    except MissingFactorizationError:
        via_tau = v  # SIP items contribute 0 to both sides
    if via_tau != v:
        raise InvariantError(f"closed form {v} disagrees with C(tau) = {via_tau}")
    _emit(args, v.render(), {"chillingworth": v.to_json()})
    return EXIT_OK


def cmd_check(args) -> int:
    f = _factorization(args)
    report: dict[str, bool] = {}
    if len(f.items) == 1 and isinstance(f.items[0], SIPData):
        s = f.items[0]
        report["johnson_kernel"] = sip_in_johnson_kernel(s)
        report["bcj_kernel"] = sip_in_bcj_kernel(s)
    else:
        report["johnson_kernel"] = tau_word(f).is_zero()
        report["bcj_kernel"] = sigma_word(f).is_zero()
    try:
        report["chillingworth"] = chillingworth_membership(f)
    except MissingFactorizationError:
        report["chillingworth"] = chillingworth_closed_form(f).is_zero()
    text = "\n".join(f"{k}: {str(v).lower()}" for k, v in report.items())
    _emit(args, text, report)
    return EXIT_OK


def cmd_derive(args) -> int:
    doc = derivation_from_json(_read_document(args))
    if args.genus is not None and doc["genus"] is not None and args.genus != doc["genus"]:
        raise SchemaError(f"--genus {args.genus} disagrees with document genus {doc['genus']}")
    results = []
    ok = True
    for n, script in enumerate(doc["scripts"]):
        rep = check_derivation(doc["env"], script)
        entry: dict[str, Any] = {"script": n, "name": script.name, "ok": rep.ok}
        if not rep.ok:
            ok = False
            entry.update(failed_step=rep.failed_step, rule=rep.rule, message=rep.message)
        elif doc["classes"]:
            shadow = sp_shadow_check(doc["env"], script.start, script.end, doc["classes"], doc["genus"])
            entry["sp_shadow"] = shadow
            ok = ok and shadow
        results.append(entry)
    if args.format == "json":
        print(json.dumps({"ok": ok, "scripts": results}, sort_keys=True))
    elif ok:
        print("OK")
    else:
        for e in results:
            if not e["ok"]:
                print(f"FAIL script {e['script']} step {e['failed_step']} ({e['rule']}): {e['message']}")
            elif e.get("sp_shadow") is False:
                print(f"FAIL script {e['script']}: start and end differ in Sp(2g, Z)")
    return EXIT_OK if ok else EXIT_DERIVATION


def cmd_classify(args) -> int:
    if args.word is None:
        raise SchemaError("classify needs a word, e.g. '[a,b]'")
    text = args.word
    if text.lstrip().startswith("["):
        try:
            w = parse_word(json.loads(text))
        except (json.JSONDecodeError, SchemaError):
            w = classify_text(text)
    else:
        w = classify_text(text)
    label = lantern_classify(w)
    _emit(args, label, {"word": render(w), "type": label})
    return EXIT_OK


def cmd_ssip_span(args) -> int:
    if args.samples and args.seed is None:
        raise SchemaError("ssip-span samples randomly; pass an explicit --seed")
    genus = 2 if args.genus is None else args.genus
    basis = ssip_span(genus, args.samples, args.seed or 0)
    lines = [f"dimension {len(basis)}"] + [p.render() for p in basis]
    _emit(args, "\n".join(lines), {"genus": genus, "dimension": len(basis), "basis": [p.to_json() for p in basis]})
    return EXIT_OK


def cmd_sp_matrix(args) -> int:
    doc = _read_document(args)
    if not isinstance(doc, dict):
        raise SchemaError("sp-matrix needs an object")
    genus = doc.get("genus", args.genus)
    if args.genus is not None and genus != args.genus:
        raise SchemaError(f"--genus {args.genus} disagrees with document genus {genus}")
    if not isinstance(genus, int) or genus < 1:
        raise SchemaError(f"bad genus {genus!r}")
    if "word" in doc:
        pairs = []
        for sym in doc["word"]:
            if not isinstance(sym, dict) or "class" not in sym or sym.get("exp", 1) not in (1, -1):
                raise SchemaError(f"bad word entry {sym!r}; expected {{'class': [...], 'exp': ±1}}")
            pairs.append((parse_class(sym["class"], genus), sym.get("exp", 1)))
        m = word_to_sp(pairs, genus)
    elif "lhs" in doc and "classes" in doc:
        classes = {k: parse_class(v, genus) for k, v in doc["classes"].items()}
        m = word_matrix(parse_word(doc["lhs"]), classes, genus)
    else:
        raise SchemaError("sp-matrix needs a 'word' list or a lantern document with 'lhs' and 'classes'")
    text = "\n".join(" ".join(str(x) for x in row) for row in m.rows)
    _emit(args, text, {"matrix": m.to_json(), "symplectic": m.is_symplectic(), "identity": m.is_identity()})
    return EXIT_OK


COMMANDS = {
    "tau": (cmd_tau, "Johnson homomorphism of a factorization"),
    "sigma": (cmd_sigma, "Birman-Craggs-Johnson homomorphism of a factorization"),
    "contract": (cmd_contract, "contraction of tau"),
    "chillingworth": (cmd_chillingworth, "Chillingworth class by the closed form"),
    "check": (cmd_check, "kernel and subgroup membership report"),
    "derive": (cmd_derive, "replay derivation scripts"),
    "classify": (cmd_classify, "Nielsen-Thurston type of a word in T_a, T_b on the lantern"),
    "ssip-span": (cmd_ssip_span, "span of separating SIP images in B"),
    "sp-matrix": (cmd_sp_matrix, "symplectic matrix of a twist word"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torelli", description="Exact Torelli group computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, default=None, help="surface genus (checked against the document)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--fixture", default=None, help="use a shipped fixture by name")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "classify":
            p.add_argument("word", nargs="?", help="e.g. '[a,b]', 'B (ab)^3 b', or a JSON symbol list")
        elif name == "ssip-span":
            p.add_argument("--samples", type=int, default=40)
        else:
            p.add_argument("input", nargs="?", help="JSON path, '-' for stdin, or inline JSON")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        return func(args)
    except (SchemaError, DimensionError) as exc:
        code, kind, message = EXIT_SCHEMA, "schema", str(exc)
    except (InvariantError, DomainError, MissingFactorizationError) as exc:
        code, kind, message = EXIT_INVARIANT, "invariant", str(exc)
    print(json.dumps({"error": kind, "message": message}, ensure_ascii=False), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
