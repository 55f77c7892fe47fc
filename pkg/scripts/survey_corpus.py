"""Print the cohomology table of the built-in algebra corpus.

Usage: python scripts/survey_corpus.py [--kind harrison|hochschild] [--max-degree N]
"""

from __future__ import annotations

import argparse

from superharrison.algebras import (
    exterior_algebra,
    self_module,
    tensor_product,
    truncated_polynomial,
)
from superharrison.cohomology import (
    ComplexKind,
    ResourceCeilingError,
    ResourceLimits,
    cohomology,
)

CORPUS = [
    ("exterior(1)", exterior_algebra(1)),
    ("exterior(2)", exterior_algebra(2)),
    ("truncpoly(2)", truncated_polynomial(2)),
    ("truncpoly(3)", truncated_polynomial(3)),
    (
        "truncpoly(2) x exterior(1)",
        tensor_product(truncated_polynomial(2), exterior_algebra(1)),
    ),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--kind",
        choices=[k.value for k in ComplexKind],
        default=ComplexKind.SUPER_HARRISON.value,
    )
    parser.add_argument("--max-degree", type=int, default=3)
    args = parser.parse_args()
    kind = ComplexKind(args.kind)
    limits = ResourceLimits(max_degree=max(args.max_degree + 1, 4), max_columns=20000)

    header = f"{'algebra':<28} {'n':>2} {'dim C':>6} {'dim Z':>6} {'dim B':>6} {'dim H':>6}"
    print(header)
    print("-" * len(header))
    for name, algebra in CORPUS:
        module = self_module(algebra)
        for degree in range(args.max_degree + 1):
            try:
                res = cohomology(algebra, module, degree, kind, limits)
            except ResourceCeilingError as exc:
                print(f"{name:<28} {degree:>2} skipped: {exc}")
                continue
            print(
                f"{name:<28} {degree:>2} {res.dim_cochain:>6} "
                f"{res.dim_cocycles:>6} {res.dim_coboundaries:>6} "
                f"{res.dim_cohomology:>6}"
            )
        print()


if __name__ == "__main__":
    main()
