"""Built-in fixture structures addressable by id.

Each fixture is a small structure with hand-picked D/R data that
exercises a distinct corner of the law catalog: a commutative
cat-semigroup with a law-breaking quotient, a strong-match-up band whose
projections do not form a band, two distinct semigroups determining the
same category with biaction, a semilattice separating the one-sided
match-up law from its closure law, and a three-element category whose
left pseudoproduct is not associative.
"""
from __future__ import annotations

from .structures import validate_biaction_category, validate_semigroup


def _ex2_4():
    # commutative; D(a)=e, R(a)=1, identity on the rest
    names = ("a", "g", "e", "1")
    a, g, e, one = range(4)
    mul = (
        (g, a, a, a),
        (a, g, g, g),
        (a, g, e, e),
        (a, g, e, one),
    )
    d = (e, g, e, one)
    r = (one, g, e, one)
    return validate_semigroup(names, mul, d, r)


def _ex2_10():
    # three-element band; D(a)=R(a)=e, the f,e product escapes the projections
    names = ("e", "f", "a")
    e, f, a = range(3)
    mul = (
        (e, f, a),
        (a, f, a),
        (a, f, a),
    )
    d = (e, f, e)
    r = (e, f, e)
    return validate_semigroup(names, mul, d, r)


def _ex3_3(zero_squared):
    names = ("0", "e", "f", "b")
    z, e, f, b = range(4)
    mul = (
        (zero_squared, z, z, z),
        (z, e, b, b),
        (z, b, f, b),
        (z, b, b, b),
    )
    d = (e, e, f, e)
    r = (f, e, f, f)
    return validate_semigroup(names, mul, d, r)


def _ex3_8():
    # semilattice with zero and identity; D(0)=e, R(0)=1
    names = ("0", "e", "1")
    z, e, one = range(3)
    mul = (
        (z, z, z),
        (z, e, e),
        (z, e, one),
    )
    d = (e, e, one)
    r = (one, e, one)
    return validate_semigroup(names, mul, d, r)


def _ex4_9():
    # C0={e,f}, D(s)=R(s)=f, s*s=f; biaction makes the left pseudoproduct
    # well-defined but not associative
    names = ("s", "e", "f")
    s, e, f = range(3)
    und = None
    comp = (
        (f, und, s),
        (und, e, und),
        (s, und, f),
    )
    d = (f, e, f)
    r = (f, e, f)
    la = {e: (e, e, e), f: (s, f, f)}
    ra = {e: (s, e, f), f: (s, e, f)}
    return validate_biaction_category(names, d, r, comp, la, ra)


_BUILDERS = {
    "ex2.4": _ex2_4,
    "ex2.10": _ex2_10,
    "ex3.3S": lambda: _ex3_3(0),
    "ex3.3T": lambda: _ex3_3(3),
    "ex3.8": _ex3_8,
    "ex4.9": _ex4_9,
}

FIXTURE_IDS = tuple(_BUILDERS)


def fixture(fixture_id: str):
    """Return the named fixture as a validated structure."""
    if fixture_id not in _BUILDERS:
        raise KeyError("unknown fixture %r; known: %s"
                       % (fixture_id, ", ".join(FIXTURE_IDS)))
    return _BUILDERS[fixture_id]()
