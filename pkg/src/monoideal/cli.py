"""Command-line front end: file parsing, dispatch, JSON output.

Exit codes: 0 computed, 1 negative decision, 2 input error, 3 enumeration
budget exceeded.  All machine output is a single JSON object on stdout;
``--pretty`` switches to indented rendering.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import crosscheck
from .core import (
    Alphabet,
    BudgetExceededError,
    Monomial,
    MonoidealError,
    Ordering,
    ParseError,
    antichain_reduce,
    format_monomial,
    format_ordering,
    format_word,
    monomial_set,
    sorted_monomials,
    sorted_words,
)
from .cool_orderings import all_orderings_cool, find_cool_ordering, is_cool
from .polyhedral import (
    Certificate,
    IneqSystem,
    SatInstance,
    convexity_check,
    enumerate_minimal_generators as poly_minimal_generators,
    membership as poly_membership,
    sat_reduction,
    union as poly_union,
    verify_certificate,
)
from .preimage import preimage_degree_bounds, preimage_fg
from .sorted_ideal import (
    fg_generating_set,
    groebner_lift,
    is_fg_sorted,
    minimal_word_generators,
)
from .torientation import (
    NaeInstance,
    TGraph,
    format_tgraph,
    gadget3,
    nae3sat_reduce,
    parse_tgraph,
    t_orientation_search,
    top_hat,
)
from .word_oracle import (
    DEFAULT_MEMBERSHIP_BUDGET,
    preimage_report,
    sorted_ideal_report,
)

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_NAME_RE = re.compile(_NAME)
_FACTOR_RE = re.compile(rf"^({_NAME})(?:\^(-?\d+))?$")


def parse_monomial_file(text: str) -> tuple[Alphabet, tuple[Monomial, ...], Ordering | None]:
    """Read a monomial list with optional `letters:` and `order:` lines.

    Monomial lines are whitespace-separated factors `name` or `name^k`, or
    a bracketed exponent vector `[1,2,1]`.  Letters used in name syntax
    without a declaration are appended in first-occurrence order; a file of
    bare vectors gets default names x1..xn.
    """
    names: list[str] = []
    declared = False
    name_monomials: list[tuple[dict[str, int], int]] = []
    vector_monomials: list[tuple[tuple[int, ...], int]] = []
    order_names: tuple[list[str], int] | None = None

    def add_letter(name: str) -> None:
        if name not in names:
            names.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("letters:"):
            if declared:
                raise ParseError("duplicate letters declaration", lineno)
            declared_names = line[len("letters:") :].split()
            if not declared_names:
                raise ParseError("empty letters declaration", lineno)
            if len(set(declared_names)) != len(declared_names):
                raise ParseError("duplicate letter declaration", lineno)
            for n in declared_names:
                if not _FACTOR_RE.match(n) or "^" in n:
                    raise ParseError(f"bad letter name {n!r}", lineno)
                add_letter(n)
            declared = True
            continue
        if line.startswith("order:"):
            if order_names is not None:
                raise ParseError("duplicate order declaration", lineno)
            order_names = (line[len("order:") :].split(), lineno)
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated vector", lineno)
            body = line[1:-1].strip()
            try:
                entries = tuple(int(p) for p in body.split(",")) if body else ()
            except ValueError:
                raise ParseError("non-integer vector entry", lineno) from None
            if any(e < 0 for e in entries):
                raise ParseError("negative exponent", lineno)
            if not names and not name_monomials and not vector_monomials:
                for i in range(len(entries)):
                    add_letter(f"x{i + 1}")
            vector_monomials.append((entries, lineno))
            continue
        factors: dict[str, int] = {}
        for token in line.split():
            match = _FACTOR_RE.match(token)
            if not match:
                raise ParseError(f"malformed factor {token!r}", lineno)
            name, exp = match.group(1), match.group(2)
            k = 1 if exp is None else int(exp)
            if k < 0:
                raise ParseError("negative exponent", lineno)
            add_letter(name)
            factors[name] = factors.get(name, 0) + k
        name_monomials.append((factors, lineno))

    if not names:
        raise ParseError("no letters and no monomials in input")
    alphabet = Alphabet(tuple(names))
    monomials: list[Monomial] = []
    for entries, lineno in vector_monomials:
        if len(entries) != alphabet.size:
            raise ParseError(
                f"vector length {len(entries)} does not match {alphabet.size} letters",
                lineno,
            )
        monomials.append(Monomial(entries))
    for factors, lineno in name_monomials:
        e = [0] * alphabet.size
        for name, k in factors.items():
            e[alphabet.index(name)] += k
        monomials.append(Monomial(tuple(e)))

    ordering = None
    if order_names is not None:
        tokens, lineno = order_names
        ordering = _ordering_from_names(tokens, alphabet, lineno)
    return alphabet, monomial_set(monomials), ordering


def _ordering_from_names(
    tokens: Sequence[str], alphabet: Alphabet, lineno: int | None = None
) -> Ordering:
    if sorted(tokens) != sorted(alphabet.names):
        raise ParseError(
            "order must list every letter exactly once", lineno
        )
    return Ordering.from_sequence(tuple(alphabet.index(t) for t in tokens))


def parse_nae_file(text: str) -> NaeInstance:
    """Clause lines of three signed integers; optional `p nae <v> <k>` header."""
    variable_count = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "nae":
                raise ParseError("expected header `p nae <vars> <clauses>`", lineno)
            variable_count = int(parts[2])
            continue
        try:
            lits = [int(p) for p in parts]
        except ValueError:
            raise ParseError("non-integer literal", lineno) from None
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if len(lits) != 3:
            raise ParseError("clauses must have exactly three literals", lineno)
        clauses.append(tuple(lits))
    if variable_count is None:
        variable_count = max((abs(l) for c in clauses for l in c), default=0)
    try:
        return NaeInstance(variable_count, tuple(clauses))
    except MonoidealError as exc:
        raise ParseError(str(exc)) from None


def parse_cnf_file(text: str) -> SatInstance:
    """DIMACS-style CNF: `p cnf <vars> <clauses>` then 0-terminated clauses."""
    variable_count = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected header `p cnf <vars> <clauses>`", lineno)
            variable_count = int(parts[2])
            continue
        try:
            lits = [int(p) for p in parts]
        except ValueError:
            raise ParseError("non-integer literal", lineno) from None
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if not lits:
            raise ParseError("empty clause", lineno)
        clauses.append(tuple(lits))
    if variable_count is None:
        variable_count = max((abs(l) for c in clauses for l in c), default=0)
    try:
        return SatInstance(variable_count, tuple(clauses))
    except MonoidealError as exc:
        raise ParseError(str(exc)) from None


def _budget(default: int) -> int:
    raw = os.environ.get("MONOIDEAL_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise MonoidealError(f"MONOIDEAL_BUDGET must be an integer, got {raw!r}")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load_monomials(args) -> tuple[Alphabet, tuple[Monomial, ...], Ordering | None]:
    alphabet, monomials, ordering = parse_monomial_file(_read(args.file))
    if getattr(args, "order", None):
        ordering = _ordering_from_names(args.order.split(), alphabet)
    return alphabet, monomials, ordering


def _require_order(ordering: Ordering | None) -> Ordering:
    if ordering is None:
        raise ParseError("an ordering is required: add an `order:` line or --order")
    return ordering


def _witness_payload(witness, alphabet) -> dict:
    payload = {"verdict": witness.verdict}
    if witness.violator is not None:
        m, x = witness.violator
        payload["witness"] = {
            "monomial": format_monomial(m, alphabet),
            "letter": alphabet.names[x],
        }
    return payload


def _graph_payload(g: TGraph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "edges": [[u + 1, v + 1] for u, v in g.edges],
        "t": [t + 1 for t in sorted(g.tset)],
        "text": format_tgraph(g),
    }


# ---------------------------------------------------------------------------
# subcommand handlers, each returning (exit_code, payload)

def _cmd_reduce(args):
    alphabet, monomials, _ = _load_monomials(args)
    reduced = antichain_reduce(monomials)
    return 0, {
        "monomials": [format_monomial(m, alphabet) for m in sorted_monomials(reduced)]
    }


def _cmd_check_fg(args):
    alphabet, monomials, ordering = _load_monomials(args)
    witness = is_fg_sorted(monomials, _require_order(ordering))
    return (0 if witness.verdict else 1), _witness_payload(witness, alphabet)


def _cmd_generators(args):
    alphabet, monomials, ordering = _load_monomials(args)
    ordering = _require_order(ordering)
    witness = is_fg_sorted(monomials, ordering)
    if not witness.verdict:
        return 1, _witness_payload(witness, alphabet)
    gens = fg_generating_set(monomials, ordering)
    if not args.raw:
        gens = minimal_word_generators(gens)
    return 0, {
        "verdict": True,
        "generators": [format_word(w, alphabet) for w in sorted_words(gens)],
    }


def _cmd_gb_lift(args):
    alphabet, monomials, ordering = _load_monomials(args)
    ordering = _require_order(ordering)
    witness = is_fg_sorted(monomials, ordering)
    if not witness.verdict:
        return 1, _witness_payload(witness, alphabet)
    words = groebner_lift(monomials, ordering)
    return 0, {
        "verdict": True,
        "leading_words": [format_word(w, alphabet) for w in words],
    }


def _cmd_is_cool(args):
    alphabet, monomials, ordering = _load_monomials(args)
    verdict = is_cool(monomials, _require_order(ordering))
    return (0 if verdict else 1), {"cool": verdict}


def _cmd_find_cool(args):
    alphabet, monomials, _ = _load_monomials(args)
    result = find_cool_ordering(monomials, alphabet.size)
    payload = {"found": result.found, "nodes_explored": result.nodes_explored}
    if result.found:
        payload["ordering"] = format_ordering(result.ordering, alphabet)
    return (0 if result.found else 1), payload


def _cmd_all_cool(args):
    _, monomials, _ = _load_monomials(args)
    verdict = all_orderings_cool(monomials)
    return (0 if verdict else 1), {"all_cool": verdict}


def _cmd_preimage_fg(args):
    alphabet, monomials, _ = _load_monomials(args)
    witness = preimage_fg(monomials)
    payload = _witness_payload(witness, alphabet)
    payload["degree_bounds"] = list(preimage_degree_bounds(monomials))
    return (0 if witness.verdict else 1), payload


def _cmd_oracle(args):
    alphabet, monomials, ordering = _load_monomials(args)
    budget = _budget(DEFAULT_MEMBERSHIP_BUDGET)
    if args.target == "sorted":
        report = sorted_ideal_report(
            monomials, _require_order(ordering), args.cap, budget
        )
    else:
        report = preimage_report(monomials, args.cap, budget)
    return 0, {
        "cap": report.cap,
        "minimal_generators": [
            format_word(w, alphabet) for w in report.minimal_generators
        ],
        "saturated": report.saturated,
    }


def _cmd_torient(args):
    g = parse_tgraph(_read(args.file))
    orientation = t_orientation_search(g)
    if orientation is None:
        return 1, {"found": False}
    return 0, {
        "found": True,
        "orientation": [[u + 1, v + 1] for u, v in orientation.arcs],
    }


def _cmd_gen_tophat(args):
    return 0, _graph_payload(top_hat())


def _cmd_gen_gadget(args):
    return 0, _graph_payload(gadget3())


def _cmd_reduce_nae(args):
    inst = parse_nae_file(_read(args.file))
    return 0, _graph_payload(nae3sat_reduce(inst))


def _load_system(path: str) -> IneqSystem:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON in {path}: {exc}") from None
    try:
        return IneqSystem.from_json_dict(data)
    except (MonoidealError, TypeError, KeyError) as exc:
        raise ParseError(f"bad inequality system in {path}: {exc}") from None


def _parse_vector(raw: str) -> tuple[int, ...]:
    body = raw.strip()
    if body.startswith("["):
        body = body[1:-1] if body.endswith("]") else body[1:]
    try:
        return tuple(int(p) for p in body.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad vector {raw!r}") from None


def _cmd_poly_member(args):
    sys_ = _load_system(args.file)
    verdict = poly_membership(sys_, _parse_vector(args.vector))
    return (0 if verdict else 1), {"member": verdict}


def _cmd_poly_mingens(args):
    sys_ = _load_system(args.file)
    gens = poly_minimal_generators(sys_, _budget(10_000_000))
    return 0, {"minimal_generators": [list(g) for g in gens]}


def _cmd_poly_union(args):
    systems = [_load_system(p) for p in args.files]
    return 0, poly_union(systems).to_json_dict()


def _cmd_verify_cert(args):
    sys_ = _load_system(args.file)
    try:
        cert = Certificate.from_json_dict(json.loads(_read(args.certificate)))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad certificate: {exc}") from None
    valid = verify_certificate(sys_, cert)
    return (0 if valid else 1), {"valid": valid}


def _cmd_reduce_sat(args):
    inst = parse_cnf_file(_read(args.file))
    return 0, sat_reduction(inst, args.target).to_json_dict()


def _cmd_convexity(args):
    _, monomials, _ = _load_monomials(args)
    verdict = convexity_check(monomials, _budget(10_000_000))
    return (0 if verdict else 1), {"convex": verdict}


def _cmd_crosscheck(args):
    results = crosscheck.run_all(
        letters=args.letters,
        max_degree=args.max_degree,
        quadratic_letters=args.quadratic_letters,
        nae_variables=args.nae_variables,
        nae_clauses=args.nae_clauses,
        sat_variables=args.sat_variables,
        sat_clauses=args.sat_clauses,
    )
    ok = all(v == 0 for v in results.values())
    return (0 if ok else 1), {"disagreements": results, "ok": ok}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoideal",
        description="finite generation of word ideals from commutative monomial data",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_, *, order=False, file=True):
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file")
        if order:
            p.add_argument("--order", help="letter names from smallest to largest")
        p.set_defaults(handler=handler)
        return p

    cmd("reduce", _cmd_reduce, "divisibility-minimal members of a monomial list")
    cmd("check-fg", _cmd_check_fg, "finite generation of the sorted-word ideal", order=True)
    p = cmd("generators", _cmd_generators, "generators of the sorted-word ideal", order=True)
    p.add_argument("--raw", action="store_true", help="skip the minimality pass")
    cmd("gb-lift", _cmd_gb_lift, "leading words of the lifted Groebner basis", order=True)
    cmd("is-cool", _cmd_is_cool, "test one ordering", order=True)
    cmd("find-cool", _cmd_find_cool, "search for a cool ordering")
    cmd("all-cool", _cmd_all_cool, "test whether every ordering is cool")
    cmd("preimage-fg", _cmd_preimage_fg, "finite generation of the abelianization preimage")
    p = cmd("oracle", _cmd_oracle, "bounded enumeration of minimal word generators", order=True)
    p.add_argument("--target", choices=("sorted", "preimage"), required=True)
    p.add_argument("--cap", type=int, required=True)
    cmd("torient", _cmd_torient, "search for an acyclic T-orientation")
    cmd("gen-tophat", _cmd_gen_tophat, "emit the seven-vertex hat gadget", file=False)
    cmd("gen-gadget", _cmd_gen_gadget, "emit the three-hat clause gadget", file=False)
    cmd("reduce-nae", _cmd_reduce_nae, "reduce a NAE-3SAT instance to a T-orientation graph")
    p = cmd("poly-member", _cmd_poly_member, "membership in an inequality-presented ideal")
    p.add_argument("--vector", required=True)
    cmd("poly-mingens", _cmd_poly_mingens, "minimal generators of an inequality-presented ideal")
    p = sub.add_parser("poly-union", help="union of single-threshold systems")
    p.add_argument("files", nargs="+")
    p.set_defaults(handler=_cmd_poly_union)
    p = cmd("verify-cert", _cmd_verify_cert, "verify a negative certificate")
    p.add_argument("certificate")
    p = cmd("reduce-sat", _cmd_reduce_sat, "reduce a CNF to an inequality-presented ideal")
    p.add_argument("--target", choices=("mdois", "imfg", "pinfg"), required=True)
    cmd("convexity", _cmd_convexity, "test convexity of a monomial ideal")
    p = sub.add_parser("crosscheck", help="run the invariant sweeps")
    p.add_argument("--letters", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--quadratic-letters", type=int, default=4)
    p.add_argument("--nae-variables", type=int, default=2)
    p.add_argument("--nae-clauses", type=int, default=1)
    p.add_argument("--sat-variables", type=int, default=3)
    p.add_argument("--sat-clauses", type=int, default=1)
    p.set_defaults(handler=_cmd_crosscheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.handler(args)
    except ParseError as exc:
        print(json.dumps({"error": str(exc)}))
        return 2
    except BudgetExceededError as exc:
        print(json.dumps({"error": str(exc)}))
        return 3
    except (MonoidealError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}))
        return 2
    indent = 2 if args.pretty else None
    print(json.dumps(payload, indent=indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
