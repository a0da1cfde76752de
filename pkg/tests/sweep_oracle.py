"""Recursive restatement of the disk-sweep rules, kept apart from the kernel."""


def sweep_disks(crossings, start_slice, lo, hi, stop=0, target=None):
    """Yield ``(upper, lower)`` corner tuples (0-based, right to left)."""

    def go(i, lo, hi, upper, lower):
        if i < stop:
            if target is None:
                done = lo % 2 == 1 and hi == lo + 1
            else:
                done = (lo, hi) == target
            if done:
                yield tuple(upper), tuple(lower)
            return
        t = crossings[i]
        if t + 1 < lo or t > hi or lo < t < t + 1 < hi:
            yield from go(i - 1, lo, hi, upper, lower)
        elif (t, t + 1) == (lo, hi):
            return
        elif t == hi:
            yield from go(i - 1, lo, hi + 1, upper, lower)
            yield from go(i - 1, lo, hi, upper + [i], lower)
        elif t + 1 == lo:
            yield from go(i - 1, lo - 1, hi, upper, lower)
            yield from go(i - 1, lo, hi, upper, lower + [i])
        elif t + 1 == hi:
            yield from go(i - 1, lo, hi - 1, upper, lower)
        else:
            yield from go(i - 1, lo + 1, hi, upper, lower)

    yield from go(start_slice - 1, lo, hi, [], [])
