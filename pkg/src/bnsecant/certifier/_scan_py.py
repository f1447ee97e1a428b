"""Pure-Python candidate scan. Reference implementation for ``_scan_c``."""

from itertools import combinations


def scan(d1, e, r1, f, zero, sub, use_e, y1, y2, z1, z2, zsub, witness_cap):
    """Enumerate vanishing-sequence pairs at the node and filter them.

    ``y1, y2, z1, z2`` are ramification budgets (``None`` disables the
    check).  Returns ``(survivor_count, witnesses)`` with at most
    ``witness_cap`` witnesses, each ``(a1_Y, at_Y)`` as sorted tuples, in
    lexicographic order of ``a1_Y`` then of the added values.
    """
    top = d1 + e
    big_r = r1 + f
    tri1 = r1 * (r1 + 1) // 2
    tri2 = big_r * (big_r + 1) // 2
    full1 = (r1 + 1) * d1
    full2 = (big_r + 1) * top

    if zero:
        a1_iter = ((0,) + c for c in combinations(range(1, d1 + 1), r1))
    else:
        a1_iter = combinations(range(d1 + 1), r1 + 1)

    count = 0
    witnesses = []
    for a1 in a1_iter:
        s1 = sum(a1)
        if y1 is not None and s1 - tri1 > y1:
            continue
        if z1 is not None and full1 - s1 - tri1 > z1:
            continue
        a1set = set(a1)
        if sub:
            pool = [v for v in range(top + 1) if v not in a1set]
            at_iter = (tuple(sorted(a1 + extra)) for extra in combinations(pool, f))
        elif zero:
            at_iter = ((0,) + c for c in combinations(range(1, top + 1), big_r))
        else:
            at_iter = combinations(range(top + 1), big_r + 1)
        for at in at_iter:
            s2 = sum(at)
            if y2 is not None and s2 - tri2 > y2:
                continue
            if z2 is not None and full2 - s2 - tri2 > z2:
                continue
            if use_e or zsub:
                atset = set(at)
                if use_e and e not in atset:
                    continue
                # d1 - a on Z lands in the complement of at iff a + e is in at
                if zsub and any(a + e not in atset for a in a1):
                    continue
            count += 1
            if len(witnesses) < witness_cap:
                witnesses.append((a1, at))
    return count, witnesses
