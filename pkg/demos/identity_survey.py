"""Survey short words for identities that hold on commuting pairs.

Enumerates reduced words over {c, p, q} in shortlex order, fingerprints
each one by its value on every commuting pair at ground size 2, and
reports words whose fingerprint was already taken.  At length 13 the
survey turns up the full collapse of pqcpcqcqcpcpq down to pqcpq.
"""

import time

from closurelab import search_identities


def main():
    t0 = time.perf_counter()
    equations, scope, examined = search_identities(13, n=2)
    dt = time.perf_counter() - t0
    print(f"scope {scope}: {examined} words examined, "
          f"{len(equations)} equations in {dt:.1f}s")
    print()

    print("shortest ten:")
    for lhs, rhs in sorted(equations, key=lambda e: (len(e[0]), e[0]))[:10]:
        print(f"  {lhs or '1'} = {rhs or '1'}")
    print()

    hits = [(lhs, rhs) for lhs, rhs in equations if rhs == "pqcpq"]
    print(f"{len(hits)} words collapse all the way to pqcpq, including:")
    for lhs, _ in hits[:5]:
        print(f"  {lhs}")
    assert ("pqcpcqcqcpcpq", "pqcpq") in equations


if __name__ == "__main__":
    main()
