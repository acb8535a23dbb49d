"""Independent reference implementations used to cross-check the package.

Everything here deliberately takes a different algorithmic route from the
code under test: enumeration instead of dynamic programming, chord minima
instead of hull scans, product formulas instead of transfer matrices.
Slow is fine; these only run at test sizes.
"""

from fractions import Fraction
from itertools import product


def partitions_of(n):
    """All partitions of n as weakly decreasing tuples, built from ascending
    compositions (a different construction from the package's generator)."""
    if n == 0:
        return [()]
    out = []

    def grow(remaining, min_part, acc):
        if remaining == 0:
            out.append(tuple(sorted(acc, reverse=True)))
            return
        for p in range(min_part, remaining + 1):
            grow(remaining - p, p, acc + [p])

    grow(n, 1, [])
    return out


def partitions_up_to(n_max):
    result = []
    for n in range(1, n_max + 1):
        result.extend(partitions_of(n))
    return result


def brute_subpartitions(parts):
    """Every subpartition of the given part tuple, found by filtering the
    full box of per-row values.  Zero-padded vectors map one-to-one onto
    subpartitions, so no deduplication is needed."""
    if not parts:
        return [()]
    found = []
    for vec in product(*(range(p + 1) for p in parts)):
        if all(a >= b for a, b in zip(vec, vec[1:])):
            found.append(tuple(v for v in vec if v))
    return found


def contains(outer, inner):
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def brute_chain_count(parts, k, strict=False):
    """Count nested k-tuples mu_k <= ... <= mu_1 <= lam by direct
    enumeration over the subpartition list."""
    subs = brute_subpartitions(parts)
    total = 0
    for chain in product(subs, repeat=k):
        ok = True
        for upper, lower in zip(chain, chain[1:]):
            if not contains(upper, lower):
                ok = False
                break
            if strict and upper == lower:
                ok = False
                break
        if ok:
            total += 1
    return total


def macmahon_box(a, b, c):
    """Plane partitions in an a x b x c box, as an exact product."""
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                value *= Fraction(i + j + k - 1, i + j + k - 2)
    assert value.denominator == 1
    return value.numerator


def chord_min_envelope(values):
    """Lower convex envelope on a grid by brute force: the value at i is
    the smallest chord through two sample points straddling i."""
    n = len(values)
    out = []
    for i in range(n):
        best = values[i]
        for l in range(i + 1):
            for r in range(i, n):
                if l == r:
                    continue
                t = (i - l) / (r - l)
                best = min(best, (1 - t) * values[l] + t * values[r])
        out.append(best)
    return out


def running_min(values):
    out = []
    low = values[0]
    for v in values:
        low = min(low, v)
        out.append(low)
    return out


def decreasing_envelope_oracle(values):
    """Greatest decreasing convex minorant: any decreasing minorant of f is
    a minorant of the running minimum, so take the envelope of that."""
    return chord_min_envelope(running_min(values))
