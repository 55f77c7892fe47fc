"""Command-line interface.

Exit codes are part of the contract:

* 0: success (for checks: the mathematical answer is "valid"/"yes"),
* 1: the computation ran fine and the mathematical answer is negative,
* 2: input problems: unreadable files, malformed JSON, bad flags or ranges,
* 3: a resource ceiling would be exceeded.

Algebras are given either as a JSON file path or as a builtin name:
``builtin:exterior:K``, ``builtin:truncpoly:N``, and
``builtin:tensor:<a>:<b>`` where ``<a>`` and ``<b>`` are again builtin
tails, e.g. ``builtin:tensor:truncpoly:2:exterior:1``.

Output is deterministic: identical inputs produce byte-identical reports.
JSON reports carry a sha256 digest of the canonicalized inputs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .algebras import (
    SuperAlgebra,
    SuperModule,
    exterior_algebra,
    self_module,
    tensor_product,
    truncated_polynomial,
    validate_superalgebra,
    validate_supermodule,
)
from .cochains import (
    Cochain,
    harrison_basis,
    hochschild_coboundary,
    super_shuffle_sum,
    zero_cochain,
)
from .cohomology import (
    ComplexKind,
    ResourceCeilingError,
    ResourceLimits,
    coboundary_matrix,
    cohomology,
    derivation_space,
)
from .deformations import (
    deformation_iff_cocycle,
    extension_equivalence,
    extension_valid_iff_cocycle,
    first_order_deformation_check,
    random_parity_cochain,
    square_zero_extension,
)
from .linalg import kernel_basis, same_subspace
from .serialize import (
    InputFormatError,
    algebra_to_dict,
    cochain_to_dict,
    load_algebra,
    load_cochain,
)
from .shuffles import Permutation, enumerate_shuffles, sigma_o_sign

__all__ = ["run", "main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _parse_builtin(tokens: list[str], pos: int) -> tuple[SuperAlgebra, int]:
    if pos >= len(tokens):
        raise InputFormatError("builtin algebra name is incomplete")
    head = tokens[pos]
    if head in ("exterior", "truncpoly"):
        if pos + 1 >= len(tokens):
            raise InputFormatError(f"builtin:{head} needs an integer parameter")
        try:
            value = int(tokens[pos + 1])
        except ValueError as exc:
            raise InputFormatError(f"bad integer in builtin name: {tokens[pos + 1]!r}") from exc
        try:
            algebra = exterior_algebra(value) if head == "exterior" else truncated_polynomial(value)
        except ValueError as exc:
            raise InputFormatError(str(exc)) from exc
        return algebra, pos + 2
    if head == "tensor":
        left, nxt = _parse_builtin(tokens, pos + 1)
        right, end = _parse_builtin(tokens, nxt)
        return tensor_product(left, right), end
    raise InputFormatError(f"unknown builtin algebra {head!r}")


def resolve_algebra(spec: str) -> SuperAlgebra:
    """File path or builtin:... name."""
    if spec.startswith("builtin:"):
        tokens = spec.split(":")[1:]
        algebra, end = _parse_builtin(tokens, 0)
        if end != len(tokens):
            raise InputFormatError(f"trailing tokens in builtin name: {':'.join(tokens[end:])}")
        return algebra
    return load_algebra(spec)


def _limits_from(args: argparse.Namespace) -> ResourceLimits:
    max_degree = getattr(args, "max_degree", None)
    max_columns = getattr(args, "max_columns", None)
    if max_degree is None:
        max_degree = int(os.environ.get("SUPERHARRISON_MAX_DEGREE", ResourceLimits.max_degree))
    if max_columns is None:
        max_columns = int(os.environ.get("SUPERHARRISON_MAX_COLUMNS", ResourceLimits.max_columns))
    return ResourceLimits(max_degree=max_degree, max_columns=max_columns)


def _digest(*docs: dict) -> str:
    blob = "\x1e".join(json.dumps(doc, sort_keys=True, separators=(",", ":")) for doc in docs)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _format_value(module: SuperModule, vector: Sequence) -> str:
    from .serialize import format_rational

    terms = []
    for l, v in enumerate(vector):
        if not v:
            continue
        coeff = format_rational(v)
        name = module.basis_names[l]
        terms.append(name if coeff == "1" else f"{coeff}*{name}")
    return " + ".join(terms) if terms else "0"


def _format_cochain(f: Cochain) -> list[str]:
    lines = []
    seen: set[tuple[int, ...]] = set()
    for t, _, _ in f.iter_nonzero():
        if t in seen:
            continue
        seen.add(t)
        args = ",".join(f.algebra.basis_names[i] for i in t)
        lines.append(f"  f({args}) = {_format_value(f.module, f.value_on_tuple(t))}")
    return lines


def _cmd_check(args: argparse.Namespace) -> int:
    algebra = resolve_algebra(args.algebra)
    report = validate_superalgebra(algebra)
    module_report = validate_supermodule(self_module(algebra))
    ok = report.ok and module_report.ok
    doc = {
        "command": "check",
        "inputs_digest": _digest(algebra_to_dict(algebra)),
        "valid": ok,
        "violations": [
            {"kind": v.kind, "indices": list(v.indices), "detail": v.detail}
            for v in report.violations + module_report.violations
        ],
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra: {args.algebra}")
        print(f"valid: {'yes' if ok else 'no'}")
        for v in report.violations + module_report.violations:
            print(f"  {v.kind} at {v.indices}: {v.detail}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_shuffles(args: argparse.Namespace) -> int:
    for s in enumerate_shuffles(args.n, args.p):
        print(" ".join(str(v) for v in s.perm.images))
    return EXIT_OK


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError as exc:
        raise InputFormatError(f"bad {what} list {text!r}") from exc


def _cmd_sign(args: argparse.Namespace) -> int:
    images = _parse_int_list(args.perm, "permutation")
    parities = _parse_int_list(args.parity, "parity")
    try:
        perm = Permutation(images)
        value = sigma_o_sign(perm, parities)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
    print("+1" if value == 1 else "-1")
    return EXIT_OK


def _kind_from(args: argparse.Namespace) -> ComplexKind:
    return ComplexKind.SUPER_HARRISON if args.kind == "harrison" else ComplexKind.HOCHSCHILD


def _require_self_module(args: argparse.Namespace) -> None:
    if getattr(args, "module", "self") != "self":
        raise InputFormatError("only --module self is supported")


def _cmd_cohomology(args: argparse.Namespace) -> int:
    _require_self_module(args)
    algebra = resolve_algebra(args.algebra)
    module = self_module(algebra)
    kind = _kind_from(args)
    result = cohomology(algebra, module, args.degree, kind, _limits_from(args))
    doc = {
        "command": "cohomology",
        "inputs_digest": _digest(algebra_to_dict(algebra)),
        "kind": kind.value,
        "degree": result.degree,
        "dim_cochain": result.dim_cochain,
        "dim_cocycles": result.dim_cocycles,
        "dim_coboundaries": result.dim_coboundaries,
        "dim_cohomology": result.dim_cohomology,
        "representatives": [cochain_to_dict(rep) for rep in result.representatives],
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra: {args.algebra}")
        print(f"kind: {kind.value}")
        print(f"degree: {result.degree}")
        print(f"dim C = {result.dim_cochain}")
        print(f"dim Z = {result.dim_cocycles}")
        print(f"dim B = {result.dim_coboundaries}")
        print(f"dim H = {result.dim_cohomology}")
        for idx, rep in enumerate(result.representatives):
            print(f"representative {idx}:")
            for line in _format_cochain(rep):
                print(line)
    return EXIT_OK


def _cmd_derivations(args: argparse.Namespace) -> int:
    algebra = resolve_algebra(args.algebra)
    module = self_module(algebra)
    space = derivation_space(algebra, module)
    pairs = [
        (i, l)
        for i in range(algebra.dim)
        for l in range(module.dim)
        if algebra.parity[i] == module.parity[l]
    ]
    doc = {
        "command": "derivations",
        "inputs_digest": _digest(algebra_to_dict(algebra)),
        "dim": space.dim,
        "basis": [
            [
                {"arg": pairs[c][0], "value": pairs[c][1], "coeff": str(v)}
                for c, v in enumerate(vec)
                if v
            ]
            for vec in space.vectors
        ],
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra: {args.algebra}")
        print(f"dim Der = {space.dim}")
        for idx, vec in enumerate(space.vectors):
            terms = [
                f"e_{algebra.basis_names[pairs[c][0]]} -> "
                f"{_format_value(module, [v if l == pairs[c][1] else 0 for l in range(module.dim)])}"
                for c, v in enumerate(vec)
                if v
            ]
            print(f"derivation {idx}: " + "; ".join(terms))
    return EXIT_OK


def _cmd_deform_check(args: argparse.Namespace) -> int:
    algebra = resolve_algebra(args.algebra)
    module = self_module(algebra)
    psi = load_cochain(args.psi, algebra, module)
    if psi.degree != 2:
        raise InputFormatError(f"deformation direction must have degree 2, got {psi.degree}")
    report = first_order_deformation_check(algebra, psi)
    doc = {
        "command": "deform-check",
        "inputs_digest": _digest(algebra_to_dict(algebra), cochain_to_dict(psi)),
        "valid": report.valid,
        "parity_ok": report.parity_ok,
        "supercommutative_mod_t2": report.supercommutative_mod_t2,
        "associative_mod_t2": report.associative_mod_t2,
        "supercommutativity_witness": list(report.supercommutativity_witness or ()) or None,
        "associativity_witness": list(report.associativity_witness or ()) or None,
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"valid first-order deformation: {'yes' if report.valid else 'no'}")
        print(f"  parity preserved: {report.parity_ok}")
        print(f"  supercommutative mod t^2: {report.supercommutative_mod_t2}")
        if report.supercommutativity_witness:
            i, j = report.supercommutativity_witness
            print(f"    fails at ({algebra.basis_names[i]}, {algebra.basis_names[j]})")
        print(f"  associative mod t^2: {report.associative_mod_t2}")
        if report.associativity_witness:
            i, j, k = report.associativity_witness
            print(
                f"    fails at ({algebra.basis_names[i]}, {algebra.basis_names[j]}, "
                f"{algebra.basis_names[k]})"
            )
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def _cmd_deform_classes(args: argparse.Namespace) -> int:
    algebra = resolve_algebra(args.algebra)
    module = self_module(algebra)
    result = cohomology(algebra, module, 2, ComplexKind.SUPER_HARRISON, _limits_from(args))
    for rep in result.representatives:
        if not first_order_deformation_check(algebra, rep).valid:
            raise AssertionError("representative rejected by the deformation check")
    doc = {
        "command": "deform-classes",
        "inputs_digest": _digest(algebra_to_dict(algebra)),
        "dim_classes": result.dim_cohomology,
        "dim_cocycles": result.dim_cocycles,
        "dim_coboundaries": result.dim_coboundaries,
        "representatives": [cochain_to_dict(rep) for rep in result.representatives],
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra: {args.algebra}")
        print(f"first-order deformation classes: {result.dim_cohomology}")
        for idx, rep in enumerate(result.representatives):
            print(f"class {idx}:")
            for line in _format_cochain(rep):
                print(line)
    return EXIT_OK


def _cmd_extend(args: argparse.Namespace) -> int:
    _require_self_module(args)
    algebra = resolve_algebra(args.algebra)
    module = self_module(algebra)
    psi = load_cochain(args.psi, algebra, module)
    if psi.degree != 2:
        raise InputFormatError(f"extension cocycle must have degree 2, got {psi.degree}")
    ext = square_zero_extension(algebra, module, psi)
    report = validate_superalgebra(ext.algebra)
    doc = {
        "command": "extend",
        "inputs_digest": _digest(algebra_to_dict(algebra), cochain_to_dict(psi)),
        "valid": report.ok,
        "extension": algebra_to_dict(ext.algebra),
        "violations": [
            {"kind": v.kind, "indices": list(v.indices), "detail": v.detail}
            for v in report.violations
        ],
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"extension dimension: {ext.algebra.dim}")
        print(f"valid superalgebra: {'yes' if report.ok else 'no'}")
        for v in report.violations:
            print(f"  {v.kind} at {v.indices}: {v.detail}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _run_suites(
    algebra: SuperAlgebra,
    budget: int,
    limits: ResourceLimits,
    wanted: Sequence[str],
):
    module = self_module(algebra)
    suites = []

    def suite(name: str):
        return "all" in wanted or name in wanted

    if suite("validators"):
        ok = validate_superalgebra(algebra).ok and validate_supermodule(module).ok
        suites.append(("validators", ok, "algebra and self-module laws"))

    if suite("complex"):
        ok = True
        detail = []
        top = min(2, limits.max_degree - 1)
        for n in range(0, top + 1):
            lhs = coboundary_matrix(algebra, module, n + 1, ComplexKind.SUPER_HARRISON, limits)
            rhs = coboundary_matrix(algebra, module, n, ComplexKind.SUPER_HARRISON, limits)
            if not lhs.matmul(rhs).is_zero():
                ok = False
                detail.append(f"d(d(.)) != 0 at degree {n}")
        rng = random.Random(7)
        for _ in range(max(budget // 10, 5)):
            f = random_parity_cochain(algebra, module, 2, rng)
            if not hochschild_coboundary(hochschild_coboundary(f)).is_zero():
                ok = False
                detail.append("d(d(f)) != 0 for a random cochain")
                break
        suites.append(("complex", ok, "; ".join(detail) if detail else "d composed with d is zero"))

    if suite("closure"):
        ok = True
        for f in harrison_basis(algebra, module, 2):
            df = hochschild_coboundary(f)
            for p in range(1, 3):
                if not super_shuffle_sum(df, p).is_zero():
                    ok = False
        suites.append(("closure", ok, "coboundaries of Harrison elements stay Harrison"))

    if suite("derivations"):
        z1 = kernel_basis(coboundary_matrix(algebra, module, 1, ComplexKind.SUPER_HARRISON, limits))
        ok = same_subspace(z1, derivation_space(algebra, module))
        suites.append(("derivations", ok, "degree-1 cocycles match the Leibniz solutions"))

    if suite("deformations"):
        report = deformation_iff_cocycle(algebra, budget=budget)
        suites.append(
            ("deformations", report.passed, f"{report.cases} cases" if report.passed else "; ".join(report.failures[:3]))
        )

    if suite("extensions"):
        report = extension_valid_iff_cocycle(algebra, module, budget=budget)
        suites.append(
            ("extensions", report.passed, f"{report.cases} cases" if report.passed else "; ".join(report.failures[:3]))
        )

    if suite("equivalence"):
        rng = random.Random(11)
        z2 = kernel_basis(coboundary_matrix(algebra, module, 2, ComplexKind.SUPER_HARRISON, limits))
        harrison2 = harrison_basis(algebra, module, 2)
        ok = True
        runs = max(budget // 10, 5)
        for _ in range(runs):
            psi = zero_cochain(algebra, module, 2)
            for vec in z2.vectors:
                coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                if coeff:
                    for c, weight in enumerate(vec):
                        if weight:
                            psi = psi + harrison2[c].scale(coeff * weight)
            g0 = random_parity_cochain(algebra, module, 1, rng)
            shifted = psi - hochschild_coboundary(g0)
            g = extension_equivalence(algebra, module, psi, shifted)
            if g is None or hochschild_coboundary(g) != psi - shifted:
                ok = False
                break
        suites.append(("equivalence", ok, f"{runs} random coboundary shifts recovered"))

    return suites


def _cmd_verify(args: argparse.Namespace) -> int:
    algebra = resolve_algebra(args.algebra)
    limits = _limits_from(args)
    suites = _run_suites(algebra, args.budget, limits, args.suite or ["all"])
    doc = {
        "command": "verify",
        "inputs_digest": _digest(algebra_to_dict(algebra)),
        "suites": [{"name": n, "passed": ok, "detail": d} for n, ok, d in suites],
        "passed": all(ok for _, ok, _ in suites),
    }
    if args.json:
        _emit_json(doc)
    else:
        for name, ok, detail in suites:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in suites) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superharrison",
        description="Exact Hochschild and graded Harrison cohomology for supercommutative superalgebras.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_algebra(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", required=True, help="JSON file or builtin:... name")

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable report")

    def add_limits(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-degree", type=int, default=None, help="degree ceiling (default 4)")
        p.add_argument(
            "--max-columns", type=int, default=None, help="cochain dimension ceiling (default 20000)"
        )

    p = sub.add_parser("check", help="validate superalgebra laws")
    add_algebra(p)
    add_json(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("shuffles", help="list (p, n-p)-shuffles, one per line")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(handler=_cmd_shuffles)

    p = sub.add_parser("sign", help="odd-subpermutation signature")
    p.add_argument("--perm", required=True, help="images, e.g. 3,1,2")
    p.add_argument("--parity", required=True, help="slot parities, e.g. 0,1,1")
    p.set_defaults(handler=_cmd_sign)

    p = sub.add_parser("cohomology", help="dimensions and representatives at one degree")
    add_algebra(p)
    p.add_argument("--module", default="self", help="only 'self' is supported")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", choices=["harrison", "hochschild"], required=True)
    add_limits(p)
    add_json(p)
    p.set_defaults(handler=_cmd_cohomology)

    p = sub.add_parser("derivations", help="parity-preserving Leibniz maps A -> A")
    add_algebra(p)
    add_json(p)
    p.set_defaults(handler=_cmd_derivations)

    p = sub.add_parser("deform-check", help="is psi a valid first-order deformation direction")
    add_algebra(p)
    p.add_argument("--psi", required=True, help="degree-2 cochain JSON file")
    add_json(p)
    p.set_defaults(handler=_cmd_deform_check)

    p = sub.add_parser("deform-classes", help="first-order deformations modulo equivalence")
    add_algebra(p)
    add_limits(p)
    add_json(p)
    p.set_defaults(handler=_cmd_deform_classes)

    p = sub.add_parser("extend", help="build and validate the square-zero extension")
    add_algebra(p)
    p.add_argument("--module", default="self", help="only 'self' is supported")
    p.add_argument("--psi", required=True, help="degree-2 cochain JSON file")
    add_json(p)
    p.set_defaults(handler=_cmd_extend)

    p = sub.add_parser("verify", help="run consistency suites against an algebra")
    add_algebra(p)
    p.add_argument(
        "--suite",
        action="append",
        choices=[
            "all",
            "validators",
            "complex",
            "closure",
            "derivations",
            "deformations",
            "extensions",
            "equivalence",
        ],
    )
    p.add_argument("--budget", type=int, default=50, help="random cases per randomized suite")
    add_limits(p)
    add_json(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else EXIT_OK
    try:
        return args.handler(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCeilingError as exc:
        print(f"resource ceiling: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
