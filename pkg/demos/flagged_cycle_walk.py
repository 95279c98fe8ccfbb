"""Drive a marked point around a cycle.

The section4_model glues two flag elements onto an even cycle.  Its
two closures commute, and the eight-letter word cpcpcqcq advances a
flagged singleton by two positions per application, so the orbit
size scales with the cycle and witnesses that the operator monoid
has elements of unbounded order.
"""

from closurelab import orbit, section4_model
from closurelab.opalg import eval_word_on


def main():
    m = 4
    model = section4_model(m)
    print(f"cycle half-length {m}, ground size {model.ground_size}")
    print(f"p and q commute: {model.commuting}")
    print()

    start = model.mask_of_names("0,top")
    rep = orbit("cpcpcqcq", model, start, max_iter=2 * m)
    print("orbit of {0,top} under cpcpcqcq:")
    for i, image in enumerate(rep.images):
        print(f"  step {i}: {model.format_mask(image)}")
    print(f"  distinct: {rep.distinct_count}, re-enters at {rep.cycle_entry}")
    print()

    print("half-steps through the two interiors:")
    a = start
    for step in range(m):
        mid = eval_word_on("cqcq", model.p, model.q, a)
        nxt = eval_word_on("cpcp", model.p, model.q, mid)
        print(f"  {model.format_mask(a)} -> {model.format_mask(mid)} "
              f"-> {model.format_mask(nxt)}")
        a = nxt

    print()
    for mm in (4, 8, 16):
        big = section4_model(mm, materialize=False)
        rep = orbit("cpcpcqcq", big, big.mask_of_names("0,top"), max_iter=4 * mm)
        print(f"m = {mm:2d}: orbit visits {rep.distinct_count} sets")


if __name__ == "__main__":
    main()
