#!/usr/bin/env python3
"""Survey the spec generator across charges, dimensions and seeds.

Reports attempt counts for pure mode on even/even block shapes, the
short-sum fallback where a single term cannot reach full rank, and the
success rate of sum mode over a seed range.  Useful for calibrating the
attempt budget.
"""

import argparse

from orthinst import GenerationExhausted, check_conditions, rank
from orthinst.specfile import generate


def try_case(c, n, mode, seed, num_terms):
    try:
        sf, attempts = generate(c, n, mode=mode, seed=seed, num_terms=num_terms)
    except GenerationExhausted as e:
        return f"exhausted after {e.attempts} attempts ({e})"
    F = sf.flatten()
    ok = check_conditions(F, sf.r).passed
    return f"attempt {attempts}, rank {rank(F.M)}, verified={ok}, terms={len(sf.spec.terms)}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--terms", type=int, default=3)
    args = ap.parse_args()

    print("pure mode:")
    for c, n in ((6, 3), (4, 3), (4, 5), (6, 5), (4, 4), (6, 4)):
        print(f"  (c={c}, n={n}):", try_case(c, n, "pure", seed=1, num_terms=args.terms))
    print("  (c=5, n=3):", try_case(5, 3, "pure", seed=1, num_terms=args.terms))

    print(f"\nsum mode with {args.terms} terms, seeds 0..{args.seeds - 1}:")
    for c, n in ((5, 3), (3, 3), (4, 4), (5, 4)):
        results = []
        for seed in range(args.seeds):
            try:
                _, attempts = generate(c, n, mode="sum", seed=seed, num_terms=args.terms)
                results.append(attempts)
            except GenerationExhausted:
                results.append(None)
        ok = [a for a in results if a is not None]
        print(
            f"  (c={c}, n={n}): {len(ok)}/{args.seeds} verified, "
            f"attempts {sorted(set(ok)) if ok else '-'}"
        )


if __name__ == "__main__":
    main()
