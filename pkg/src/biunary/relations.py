"""Binary relations on a small ground set, with angelic and demonic
composition, domain/range projections, and subalgebra generation.

A relation on {0..n-1} is stored as one bitmask row per source point, so
composition is a handful of integer operations.  Closures export a table
algebra together with the element-to-relation dictionary so witnesses
stay human-readable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CapExceeded, ParseError, ShapeError, SizeMismatch
from .structures import BiunarySemigroup, validate_semigroup

ANGELIC = "angelic"
DEMONIC = "demonic"
MODES = (ANGELIC, DEMONIC)


@dataclass(frozen=True)
class Relation:
    """Binary relation on {0..n-1}; rows[i] is the successor bitmask of i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError("ground set must be non-empty")
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ShapeError("expected %d rows, got %d" % (self.n, len(self.rows)))
        full = (1 << self.n) - 1
        for row in self.rows:
            if not 0 <= row <= full:
                raise ShapeError("row bitmask %r out of range" % (row,))

    @staticmethod
    def from_pairs(n, pairs):
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ShapeError("pair (%r,%r) outside ground set" % (x, y))
            rows[x] |= 1 << y
        return Relation(n, tuple(rows))

    @staticmethod
    def identity(n):
        return Relation(n, tuple(1 << i for i in range(n)))

    @staticmethod
    def empty(n):
        return Relation(n, (0,) * n)

    def pairs(self):
        return [(x, y) for x in range(self.n) for y in range(self.n)
                if self.rows[x] >> y & 1]

    def dom_mask(self):
        m = 0
        for i, row in enumerate(self.rows):
            if row:
                m |= 1 << i
        return m

    def ran_mask(self):
        m = 0
        for row in self.rows:
            m |= row
        return m


def compose(rho: Relation, tau: Relation, mode: str) -> Relation:
    """Relational composition, read left to right.

    Angelic keeps (x,z) whenever some rho-image of x reaches z through
    tau; demonic additionally requires every rho-image of x to lie in
    dom(tau), otherwise x relates to nothing.
    """
    if rho.n != tau.n:
        raise SizeMismatch("relations on ground sets of size %d and %d"
                           % (rho.n, tau.n))
    if mode not in MODES:
        raise ValueError("unknown composition mode %r" % (mode,))
    n = rho.n
    dom_t = tau.dom_mask()
    out = []
    for x in range(n):
        src = rho.rows[x]
        if mode == DEMONIC and src & ~dom_t:
            out.append(0)
            continue
        acc = 0
        y = 0
        while src:
            if src & 1:
                acc |= tau.rows[y]
            src >>= 1
            y += 1
        out.append(acc)
    return Relation(n, tuple(out))


def domain_proj(rho: Relation) -> Relation:
    """Partial identity on dom(rho)."""
    return Relation(rho.n, tuple((1 << i) if rho.rows[i] else 0
                                 for i in range(rho.n)))


def range_proj(rho: Relation) -> Relation:
    """Partial identity on ran(rho)."""
    m = rho.ran_mask()
    return Relation(rho.n, tuple((1 << i) if m >> i & 1 else 0
                                 for i in range(rho.n)))


_REL_RE = re.compile(r"rel\s+n=(\d+)\s*\{(.*)\}\s*", re.S)
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_relation(text: str) -> Relation:
    """Parse the pair-list form, e.g. 'rel n=3 {(0,1),(1,1)}'."""
    m = _REL_RE.fullmatch(text.strip())
    if not m:
        raise ParseError("expected 'rel n=N {(x,y),...}'")
    n = int(m.group(1))
    body = m.group(2).strip()
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(body)]
    leftover = _PAIR_RE.sub("", body).replace(",", "").strip()
    if leftover:
        raise ParseError("unexpected content %r in pair list" % leftover)
    if n < 1:
        raise ParseError("ground set must be non-empty")
    return Relation.from_pairs(n, pairs)


def serialize_relation(rho: Relation) -> str:
    body = ",".join("(%d,%d)" % p for p in rho.pairs())
    return "rel n=%d {%s}" % (rho.n, body)


@dataclass(frozen=True)
class GeneratedAlgebra:
    """A table algebra together with its element-to-relation dictionary."""

    algebra: BiunarySemigroup
    relations: tuple[Relation, ...]

    def dictionary(self):
        return {self.algebra.names[i]: serialize_relation(rel)
                for i, rel in enumerate(self.relations)}


def _tables_from(elements, index, mode):
    n = len(elements)
    mul = tuple(tuple(index[compose(a, b, mode)] for b in elements)
                for a in elements)
    d = tuple(index[domain_proj(a)] for a in elements)
    r = tuple(index[range_proj(a)] for a in elements)
    names = tuple("r%d" % i for i in range(n))
    return validate_semigroup(names, mul, d, r)


def generate_subalgebra(n: int, mode: str, generators, cap: int = 256
                        ) -> GeneratedAlgebra:
    """Close the generators under composition and both projections.

    Deterministic worklist order: generators first, then products and
    projections in discovery order.  Raises CapExceeded when the closure
    grows past `cap` elements.
    """
    if mode not in MODES:
        raise ValueError("unknown composition mode %r" % (mode,))
    elements = []
    index = {}

    def add(rel):
        if rel.n != n:
            raise SizeMismatch("generator on ground set of size %d, expected %d"
                               % (rel.n, n))
        if rel not in index:
            if len(elements) >= cap:
                raise CapExceeded(cap)
            index[rel] = len(elements)
            elements.append(rel)

    for g in generators:
        add(g)
    if not elements:
        raise ShapeError("at least one generator is required")
    frontier = 0
    while frontier < len(elements):
        a = elements[frontier]
        frontier += 1
        add(domain_proj(a))
        add(range_proj(a))
        for b in elements[:frontier]:
            add(compose(a, b, mode))
            add(compose(b, a, mode))
    return GeneratedAlgebra(_tables_from(elements, index, mode), tuple(elements))


FULL_ALGEBRA_FREE_LIMIT = 2


def all_relations(n: int):
    """Every relation on {0..n-1}, in ascending bitmask order."""
    out = []
    for mask in range(1 << (n * n)):
        rows = tuple((mask >> (i * n)) & ((1 << n) - 1) for i in range(n))
        out.append(Relation(n, rows))
    return out


def full_relation_algebra(n: int, mode: str, allow_large: bool = False
                          ) -> GeneratedAlgebra:
    """The algebra of all 2^(n*n) relations under the chosen composition.

    Materialization grows as 2^(n^2), so n=3 sits behind allow_large and
    anything bigger is refused outright; use generate_subalgebra there.
    """
    if mode not in MODES:
        raise ValueError("unknown composition mode %r" % (mode,))
    if n > 3:
        raise ShapeError("full relation algebra limited to n <= 3")
    if n > FULL_ALGEBRA_FREE_LIMIT and not allow_large:
        raise ShapeError("n=3 materializes 512 elements; pass allow_large=True")
    elements = all_relations(n)
    index = {rel: i for i, rel in enumerate(elements)}
    return GeneratedAlgebra(_tables_from(elements, index, mode), tuple(elements))
