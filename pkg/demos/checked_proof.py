"""Check a written-out derivation step by step.

Terms use constants 1, p, q, an ordered product, and an antitone
involution bar.  A derivation is a list of claims, each one either an
axiom instance or an application of a rule to earlier steps, and the
checker accepts it only if every step is exact.  The bundled fixture
derives the two-block collapse equation in fifty steps.
"""

import json

from closurelab import (
    Derivation,
    check_derivation,
    collapse_derivation,
    parse_term,
    print_term,
)


def main():
    goal = parse_term("bar(pq)pbar(q)(pq)")
    print(f"parsed goal lhs: {print_term(goal)}")
    print()

    deriv = collapse_derivation()
    print(f"fixture derivation: {len(deriv.steps)} steps")
    for i in (0, 1, 2, 8, 9):
        step = deriv.steps[i]
        print(f"  step {i:2d} [{step.rule}] {step.claim_text()}")
    print("  ...")
    last = deriv.steps[-1]
    print(f"  step {len(deriv.steps) - 1} [{last.rule}] {last.claim_text()}")
    print()

    verdict = check_derivation(deriv, goal="bar(pq)pbar(q)(pq) = bar(pq)(pq)")
    print(f"checker verdict: accepted = {verdict.accepted}")
    print()

    payload = json.loads(json.dumps(deriv.to_json()))
    payload[9]["premises"] = [6, 3]
    broken = check_derivation(Derivation.from_json(payload))
    print("after swapping one premise index:")
    print(f"  accepted = {broken.accepted}")
    print(f"  failed at step {broken.failed_step}: {broken.message}")


if __name__ == "__main__":
    main()
