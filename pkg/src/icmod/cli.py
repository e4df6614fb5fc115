"""Command line front end.

Exit codes: 0 on success, 1 on domain errors (bad ideals, failed
preconditions, syntax errors in expressions), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .engine import Branch, Certificate, Verdict, choose_k, classify, orient, valid_k_set
from .errors import DomainError, NotComplete
from .expr import format_ideal, format_monomial, parse_ideal, parse_monomial
from .newton import (
    Factorization,
    is_complete,
    newton_vertices,
    reconstruct,
    zariski_factor,
)
from .newton import closure as ideal_closure
from .oracle import (
    Poly,
    enumerate_complete,
    module_colength,
    module_min_gens,
    poly_ideal_colength,
)
from .presentation import Presentation2, build_Mk, fitting0, fitting1
from .render import render_svg


def _emit(args, payload: dict[str, Any], human: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(human + "\n")


def _matrix_dict(matrix: Presentation2) -> dict[str, Any]:
    return {
        "cols": [
            [
                None if top is None else format_monomial(top),
                None if bot is None else format_monomial(bot),
            ]
            for top, bot in matrix.cols
        ]
    }


def _matrix_text(matrix: Presentation2) -> str:
    def cell(e):
        return "0" if e is None else format_monomial(e)

    top = "  ".join(cell(t) for t, _ in matrix.cols)
    bot = "  ".join(cell(b) for _, b in matrix.cols)
    return f"[ {top} ]\n[ {bot} ]"


def _factorization_list(f: Factorization) -> list[dict[str, int]]:
    return [{"p": sf.p, "q": sf.q, "mult": m} for sf, m in f.factors]


def format_factorization(f: Factorization) -> str:
    parts = []
    for sf, m in f.factors:
        base = f"closure(x^{sf.p},y^{sf.q})" if max(sf.p, sf.q) > 1 else "(x,y)"
        base = base.replace("x^1,", "x,").replace(",y^1)", ",y)")
        parts.append(base if m == 1 else f"{base}^{m}")
    return " * ".join(parts)


def certificate_to_dict(cert: Certificate, source: str) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "input": source,
        "normalized_input": format_ideal(cert.ideal),
        "transposed": cert.transposed,
        "order": cert.order,
        "factorization": (
            _factorization_list(cert.factorization)
            if cert.factorization is not None
            else None
        ),
        "branch": cert.branch.value,
        "k": cert.k,
        "matrix": _matrix_dict(cert.matrix) if cert.matrix is not None else None,
        "checks": [{"name": n, "pass": ok} for n, ok in cert.checks],
        "verdict": cert.verdict.value,
        "tool_version": __version__,
    }
    if cert.closed_input is not None:
        doc["closed_input"] = format_ideal(cert.closed_input)
    return doc


def certificate_text(cert: Certificate) -> str:
    lines = [
        f"ideal:         {format_ideal(cert.ideal)}"
        + (" (transposed)" if cert.transposed else ""),
        f"order:         {cert.order}",
    ]
    if cert.closed_input is not None:
        lines.insert(0, f"closure taken: {format_ideal(cert.closed_input)}")
    if cert.factorization is not None:
        lines.append(f"factorization: {format_factorization(cert.factorization)}")
    lines.append(f"branch:        {cert.branch.value}")
    if cert.k is not None:
        lines.append(f"k:             {cert.k}")
    for name, ok in cert.checks:
        lines.append(f"  check {name}: {'pass' if ok else 'FAIL'}")
    lines.append(f"verdict:       {cert.verdict.value}")
    return "\n".join(lines)


# ---------------------------------------------------------------- handlers


def _cmd_normalize(args):
    ideal = parse_ideal(args.expr)
    _emit(args, {"gens": format_ideal(ideal)}, format_ideal(ideal))


def _cmd_order(args):
    ideal = parse_ideal(args.expr)
    _emit(args, {"order": ideal.order()}, str(ideal.order()))


def _cmd_mu(args):
    ideal = parse_ideal(args.expr)
    _emit(args, {"mu": ideal.num_min_gens()}, str(ideal.num_min_gens()))


def _cmd_colength(args):
    ideal = parse_ideal(args.expr)
    _emit(args, {"colength": ideal.colength()}, str(ideal.colength()))


def _cmd_member(args):
    mono = parse_monomial(args.monomial)
    ideal = parse_ideal(args.expr)
    ok = ideal.member(mono)
    _emit(args, {"member": ok}, "true" if ok else "false")


def _cmd_product(args):
    result = parse_ideal(args.left) * parse_ideal(args.right)
    _emit(args, {"gens": format_ideal(result)}, format_ideal(result))


def _cmd_closure(args):
    result = ideal_closure(parse_ideal(args.expr))
    _emit(args, {"gens": format_ideal(result)}, format_ideal(result))


def _cmd_complete(args):
    ok = is_complete(parse_ideal(args.expr))
    _emit(args, {"complete": ok}, "true" if ok else "false")


def _cmd_vertices(args):
    np_ = newton_vertices(parse_ideal(args.expr))
    human = ", ".join(f"({p},{q})" for p, q in np_.vertices)
    _emit(args, {"vertices": [list(v) for v in np_.vertices]}, human)


def _cmd_factor(args):
    f = zariski_factor(parse_ideal(args.expr))
    _emit(args, {"factorization": _factorization_list(f)}, format_factorization(f))


def _construct(args) -> Presentation2:
    return build_Mk(parse_ideal(args.expr), args.k)


def _cmd_construct(args):
    matrix = _construct(args)
    _emit(args, {"matrix": _matrix_dict(matrix)}, _matrix_text(matrix))


def _cmd_fitting0(args):
    result = fitting0(_construct(args))
    _emit(args, {"gens": format_ideal(result)}, format_ideal(result))


def _cmd_fitting1(args):
    result = fitting1(_construct(args))
    _emit(args, {"gens": format_ideal(result)}, format_ideal(result))


def _cmd_module_length(args):
    value = module_colength(_construct(args))
    _emit(args, {"length": value}, str(value))


def _cmd_module_mu(args):
    value = module_min_gens(_construct(args))
    _emit(args, {"mu": value}, str(value))


def _parse_poly(src: str) -> Poly:
    terms = []
    chunk = src.replace("-", "+-")
    for piece in chunk.split("+"):
        piece = piece.strip()
        if not piece:
            continue
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:].strip()
        coef = sign
        i = 0
        while i < len(piece) and piece[i].isdigit():
            i += 1
        if i and (i == len(piece) or piece[i] in " *xy"):
            head = piece[:i]
            rest = piece[i:].lstrip(" *")
            if rest:
                coef = sign * int(head)
                piece = rest
            elif head:
                terms.append((sign * int(head), 0, 0))
                continue
        a, b = parse_monomial(piece)
        terms.append((coef, a, b))
    return terms


def _cmd_poly_colength(args):
    polys = [_parse_poly(p) for p in args.polys.split(",")]
    value = poly_ideal_colength(polys)
    _emit(args, {"colength": value}, str(value))


def _cmd_decide(args):
    ideal = parse_ideal(args.expr)
    if not args.close_first and not is_complete(ideal):
        raise NotComplete(
            f"{format_ideal(ideal)} is not integrally closed; pass --close-first"
        )
    cert = choose_k(ideal, forced_k=args.k, close_first=args.close_first)
    doc = certificate_to_dict(cert, args.expr)
    human = certificate_text(cert)
    if args.show_valid_k and cert.k is not None:
        ks = valid_k_set(classify(cert.ideal), cert.order)
        doc["valid_k"] = ks
        human += f"\nvalid k:       {ks}"
    _emit(args, doc, human)


def _cmd_enumerate(args):
    ideals = list(enumerate_complete(args.amax, args.bmax))
    if args.json:
        _emit(args, {"count": len(ideals), "ideals": [format_ideal(i) for i in ideals]}, "")
    else:
        for ideal in ideals:
            sys.stdout.write(format_ideal(ideal) + "\n")


def _cmd_render(args):
    ideal = parse_ideal(args.expr)
    svg = render_svg(ideal)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    _emit(args, {"out": args.out}, f"wrote {args.out}")


def _selftest_cases():
    from .staircase import normalize

    ex52 = parse_ideal("(x^5, x^4*y^2, x^3*y^3, x^2*y^4, x*y^6, y^7)")
    ex53 = parse_ideal("(x^7, x^5*y, x^3*y^2, x^2*y^3, x*y^5, y^9)")
    yield (
        "Newton vertices of the two worked staircases",
        newton_vertices(ex52).vertices == ((5, 0), (2, 4), (0, 7))
        and newton_vertices(ex53).vertices == ((7, 0), (3, 2), (2, 3), (1, 5), (0, 9)),
    )
    yield (
        "factorization round trip",
        all(i == reconstruct(zariski_factor(i)) for i in (ex52, ex53)),
    )
    yield (
        "colength identities r=3..6",
        all(
            normalize([(r, 0), (r - 1, r - 1), (0, r)]).colength() == r * r - 1
            and normalize([(r, 0), (1, r - 1), (0, r)]).colength() == r * r - r + 1
            for r in range(3, 7)
        ),
    )
    cert = choose_k(ex53)
    yield (
        "decision on the Case I staircase",
        cert.branch == Branch.CASE_I
        and cert.k == 3
        and cert.verdict == Verdict.INDECOMPOSABLE,
    )
    sweep_ok = True
    for ideal in enumerate_complete(3, 4):
        oriented, _ = orient(ideal)
        r = oriented.order()
        for k in range(1, r):
            matrix = build_Mk(oriented, k)
            if fitting0(matrix) != oriented or module_min_gens(matrix) != r + 2:
                sweep_ok = False
    yield ("mini sweep over bounds (3,4)", sweep_ok)


def _cmd_selftest(args):
    failures = 0
    for name, ok in _selftest_cases():
        sys.stdout.write(f"[{'PASS' if ok else 'FAIL'}] {name}\n")
        failures += 0 if ok else 1
    if failures:
        raise DomainError(f"selftest: {failures} failure(s)")
    sys.stdout.write("selftest: all checks passed\n")


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icmod",
        description="Staircase ideals, Newton-polygon closure, Zariski "
        "factorization and indecomposability certificates for the attached "
        "rank-2 modules.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_, expr=True, k=False):
        p = sub.add_parser(name, help=help_)
        if expr:
            p.add_argument("expr", help="ideal expression, e.g. \"(x^2, x*y, y^3)\"")
        if k:
            p.add_argument("--k", type=int, required=True, help="module parameter k")
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.set_defaults(handler=handler)
        return p

    add("normalize", _cmd_normalize, "canonical minimal generators")
    add("order", _cmd_order, "order of the ideal")
    add("mu", _cmd_mu, "number of minimal generators")
    add("colength", _cmd_colength, "length of R modulo the ideal")
    p = add("member", _cmd_member, "monomial membership test", expr=False)
    p.add_argument("monomial", help="monomial, e.g. x*y^3")
    p.add_argument("expr", help="ideal expression")
    p = add("product", _cmd_product, "product of two ideals", expr=False)
    p.add_argument("left")
    p.add_argument("right")
    add("closure", _cmd_closure, "integral closure")
    add("complete", _cmd_complete, "is the ideal integrally closed?")
    add("vertices", _cmd_vertices, "Newton polygon vertices")
    add("factor", _cmd_factor, "Zariski factorization into simple closures")
    add("construct", _cmd_construct, "presentation matrix of M_k", k=True)
    add("fitting0", _cmd_fitting0, "ideal of 2x2 minors of M_k", k=True)
    add("fitting1", _cmd_fitting1, "ideal of entries of M_k", k=True)
    add("module-length", _cmd_module_length, "length of R^2 / M_k (oracle)", k=True)
    add("module-mu", _cmd_module_mu, "minimal generators of M_k (oracle)", k=True)
    p = add("poly-colength", _cmd_poly_colength, "colength of a polynomial ideal", expr=False)
    p.add_argument("polys", help="comma separated polynomials, e.g. \"x^3, y^3, x+y\"")
    p = add("decide", _cmd_decide, "run the decision procedure")
    p.add_argument("--close-first", action="store_true", help="close the ideal first")
    p.add_argument("--k", type=int, default=None, help="force this k")
    p.add_argument("--show-valid-k", action="store_true", help="list certified k values")
    p = add("enumerate", _cmd_enumerate, "all complete ideals within bounds", expr=False)
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--bmax", type=int, required=True)
    p = add("render", _cmd_render, "write an SVG figure")
    p.add_argument("--out", required=True, help="output SVG path")
    p = sub.add_parser("selftest", help="run built-in consistency checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
