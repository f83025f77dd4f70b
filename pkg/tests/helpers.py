"""Independent test oracles.

These deliberately avoid the library's effectivity recursion: effectivity is
re-derived as membership in the monoid generated by the Riemann-Roch-forced
classes (square >= -2, positive degree).  Any sum of such generators with
total degree e satisfies x^2 >= -2e^2, and so does each partial sum, so the
degree-indexed dynamic program below is complete on those boxes.
"""

from functools import lru_cache

from quartic_acm.lattice import classes_of_degree


@lru_cache(maxsize=None)
def monoid_effective_sets(lattice, max_degree):
    """eff[e] = classes of degree e expressible as sums of forced generators."""
    gens = {
        e: [x for x in classes_of_degree(lattice, e, -2)] for e in range(1, max_degree + 1)
    }
    eff = {}
    for e in range(1, max_degree + 1):
        acc = set(gens[e])
        for a in range(1, e):
            for g in gens[a]:
                for b in eff[e - a]:
                    s = g + b
                    if lattice.square(s) >= -2 * e * e:
                        acc.add(s)
        eff[e] = frozenset(acc)
    return eff


def monoid_effective(lattice, d, max_degree):
    if d.is_zero():
        return True
    e = lattice.degree(d)
    if e < 1 or e > max_degree:
        raise ValueError("degree outside the oracle's range")
    return d in monoid_effective_sets(lattice, max_degree)[e]


def is_sum_of_roots(lattice, target, roots):
    """Whether target is a non-empty sum (with repeats) of the given classes."""
    roots = tuple(roots)

    @lru_cache(maxsize=None)
    def reachable(coords, budget):
        if all(c == 0 for c in coords):
            return True
        if budget <= 0:
            return False
        for r in roots:
            deg = lattice.degree(r)
            if deg > budget:
                continue
            rest = tuple(a - b for a, b in zip(coords, r.coords))
            if reachable(rest, budget - deg):
                return True
        return False

    return reachable(target.coords, lattice.degree(target))
