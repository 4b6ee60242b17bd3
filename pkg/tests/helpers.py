"""Shared helpers for the test suite: random polynomials over GF(p),
gcd/lcm oracles, and sequence generation independent of the oracles under
test."""

from seqminpoly import GF, Poly, from_recurrence

GF1009 = GF(1009)


def rand_elem(field, rng):
    return rng.randrange(field.modulus)


def rand_monic(field, d, rng):
    """Random monic polynomial of exact degree d."""
    return Poly(field, [rand_elem(field, rng) for _ in range(d)] + [field.one])


def rand_poly(field, max_deg, rng):
    return Poly(field, [rand_elem(field, rng) for _ in range(max_deg + 1)])


def sequence_terms(poly, init, count):
    """First `count` terms of the recurrence driven by a monic poly."""
    oracle = from_recurrence(poly, init)
    return [oracle.next_term() for _ in range(count)]


def poly_gcd(a, b):
    while b:
        a, b = b, divmod(a, b)[1]
    return a.monic() if a else a


def poly_lcm(a, b):
    g = poly_gcd(a, b)
    q, r = divmod(a * b, g)
    assert not r
    return q.monic()


def divides(a, b):
    """True iff a divides b exactly."""
    return not divmod(b, a)[1]


def proportional(pair_a, pair_b):
    """True iff one nonzero scalar c maps pair_a = (p, q) onto pair_b."""
    p1, q1 = pair_a
    p2, q2 = pair_b
    if bool(p1) != bool(p2) or bool(q1) != bool(q2):
        return False
    ref = p1 if p1 else q1
    ref2 = p2 if p2 else q2
    if not ref:
        return True
    f = ref.field
    c = f.div(ref2.leading(), ref.leading())
    return p1.scale(c) == p2 and q1.scale(c) == q2
